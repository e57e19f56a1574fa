//! The Hecke algebra of a finite Coxeter system over `Z[v, v^{-1}]`, in the
//! normalization `H_s^2 = -(v - v^{-1}) H_s + 1`.

use std::collections::btree_map::{self, BTreeMap};
use std::collections::HashMap;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Element, GenSet, Side};
use crate::laurent::LaurentPoly;

/// `sum_w c_w H_w` in the standard basis. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct HeckeElt {
    terms: BTreeMap<Element, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `H_id`.
    pub fn one() -> Self {
        Self::basis(Element::IDENTITY)
    }

    /// The standard basis element `H_w`.
    pub fn basis(w: Element) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: Element, c: LaurentPoly) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &c);
        h
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Element, LaurentPoly)>) -> Self {
        let mut h = Self::zero();
        for (w, c) in terms {
            h.add_term(w, &c);
        }
        h
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, w: Element) -> Option<&LaurentPoly> {
        self.terms.get(&w)
    }

    pub fn coeff(&self, w: Element) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Element, LaurentPoly> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = Element> + '_ {
        self.terms.keys().copied()
    }

    pub fn add_term(&mut self, w: Element, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &HeckeElt, c: &LaurentPoly) {
        for (&w, x) in &other.terms {
            self.add_term(w, &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&w, c)| (w, c.shift(k))).collect(),
        }
    }

    /// Text form: `(poly) * H[word]` terms in canonical element order.
    pub fn to_text(&self, sys: &CoxeterSystem) -> String {
        render_terms(sys, "H", self.iter())
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        terms_json(sys, self.iter())
    }
}

pub(crate) fn render_terms<'a>(
    sys: &CoxeterSystem,
    tag: &str,
    terms: impl Iterator<Item = (&'a Element, &'a LaurentPoly)>,
) -> String {
    let parts: Vec<String> = terms
        .map(|(&w, c)| format!("({c}) * {tag}[{}]", sys.word_string(w)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub(crate) fn terms_json<'a>(
    sys: &CoxeterSystem,
    terms: impl Iterator<Item = (&'a Element, &'a LaurentPoly)>,
) -> Value {
    Value::Array(
        terms
            .map(|(&w, c)| json!({ "word": sys.word_string(w), "poly": c.to_json() }))
            .collect(),
    )
}

impl<'a> Add<&'a HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn add(self, rhs: &'a HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl<'a> Sub<&'a HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &'a HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::from(-1));
        out
    }
}

impl Neg for &HeckeElt {
    type Output = HeckeElt;
    fn neg(self) -> HeckeElt {
        HeckeElt {
            terms: self.terms.iter().map(|(&w, c)| (w, -c)).collect(),
        }
    }
}

/// The values `(h1, H_w)` for every `w`; see [`Hecke::trace_form`].
#[derive(Debug, Clone)]
pub struct TraceForm {
    values: Vec<LaurentPoly>,
}

impl TraceForm {
    pub fn apply(&self, h: &HeckeElt) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&w, c) in h.iter() {
            out += &(c * &self.values[w.index()]);
        }
        out
    }
}

/// `v^{-1} - v`, the correction term when multiplying by `H_s` along a descent.
fn quadratic_term() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, 1), (1, -1)])
}

/// `v - v^{-1}`, so that `H_s^{-1} = H_s + (v - v^{-1})`.
fn inverse_shift() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, -1), (1, 1)])
}

/// The Hecke algebra of a system, with lazily memoized Kazhdan-Lusztig
/// basis and bars of standard basis elements.
pub struct Hecke<'w> {
    sys: &'w CoxeterSystem,
    kl: Vec<OnceLock<HeckeElt>>,
    bar_std: Vec<OnceLock<HeckeElt>>,
}

impl<'w> Hecke<'w> {
    pub fn new(sys: &'w CoxeterSystem) -> Self {
        let n = sys.order();
        Self {
            sys,
            kl: (0..n).map(|_| OnceLock::new()).collect(),
            bar_std: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn system(&self) -> &'w CoxeterSystem {
        self.sys
    }

    /// `h * H_s`.
    pub fn mult_gen_right(&self, h: &HeckeElt, s: usize) -> HeckeElt {
        self.mult_gen(h, s, Side::Right)
    }

    /// `H_s * h`.
    pub fn mult_gen_left(&self, h: &HeckeElt, s: usize) -> HeckeElt {
        self.mult_gen(h, s, Side::Left)
    }

    fn mult_gen(&self, h: &HeckeElt, s: usize, side: Side) -> HeckeElt {
        let q = quadratic_term();
        let mut out = HeckeElt::zero();
        for (&x, c) in h.iter() {
            let xs = self.sys.mult_gen(x, s, side);
            out.add_term(xs, c);
            if self.sys.length(xs) < self.sys.length(x) {
                out.add_term(x, &(c * &q));
            }
        }
        out
    }

    /// `H̲_s * h = H_s h + v h`.
    pub fn mult_kl_gen_left(&self, h: &HeckeElt, s: usize) -> HeckeElt {
        let mut out = self.mult_gen_left(h, s);
        out.add_scaled(h, &LaurentPoly::v_pow(1));
        out
    }

    /// Product in `H`. Each `h1 * H_w` is built from `h1 * H_{w'}` for the
    /// prefix `w'` of the canonical word of `w`, so shared prefixes are
    /// multiplied once.
    pub fn mult(&self, h1: &HeckeElt, h2: &HeckeElt) -> HeckeElt {
        let mut memo: HashMap<Element, HeckeElt> = HashMap::new();
        memo.insert(Element::IDENTITY, h1.clone());
        let mut out = HeckeElt::zero();
        for (&w, c) in h2.iter() {
            let mut cur = Element::IDENTITY;
            for &s in self.sys.reduced_word(w) {
                let next = self.sys.mult_gen(cur, s as usize, Side::Right);
                if !memo.contains_key(&next) {
                    let p = self.mult_gen_right(&memo[&cur], s as usize);
                    memo.insert(next, p);
                }
                cur = next;
            }
            out.add_scaled(&memo[&w], c);
        }
        out
    }

    /// `bar(H_w) = H_{s_1}^{-1} ... H_{s_k}^{-1}` for the canonical word of `w`.
    pub fn bar_basis(&self, w: Element) -> &HeckeElt {
        self.bar_std[w.index()].get_or_init(|| {
            let Some(&t) = self.sys.reduced_word(w).last() else {
                return HeckeElt::one();
            };
            let t = t as usize;
            let prefix = self.bar_basis(self.sys.mult_gen(w, t, Side::Right));
            let mut out = self.mult_gen_right(prefix, t);
            out.add_scaled(prefix, &inverse_shift());
            out
        })
    }

    pub fn bar(&self, h: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (&w, c) in h.iter() {
            out.add_scaled(self.bar_basis(w), &c.bar());
        }
        out
    }

    /// The Kazhdan-Lusztig basis element `H̲_x`.
    ///
    /// With `s` the smallest left descent of `x`,
    /// `H̲_x = H̲_s H̲_{sx} - sum mu(z, sx) H̲_z` over `z < sx` with `sz < z`.
    pub fn kl_basis(&self, x: Element) -> &HeckeElt {
        self.kl[x.index()].get_or_init(|| {
            let Some(s) = self.sys.first_descent(x, Side::Left) else {
                return HeckeElt::one();
            };
            let sx = self.sys.mult_gen(x, s, Side::Left);
            let below = self.kl_basis(sx);
            let mut out = self.mult_kl_gen_left(below, s);
            for (&z, h) in below.iter() {
                if z == sx || !self.sys.is_descent(z, s, Side::Left) {
                    continue;
                }
                let mu = h.coeff(1);
                if mu != BigInt::from(0) {
                    out.add_scaled(self.kl_basis(z), &LaurentPoly::monomial(-mu, 0));
                }
            }
            out
        })
    }

    /// Forces the whole KL table, in canonical order.
    pub fn fill_kl_table(&self) {
        for x in self.sys.elements() {
            self.kl_basis(x);
        }
    }

    /// `h_{y,x}`: the coefficient of `H_y` in `H̲_x`.
    pub fn kl_poly(&self, y: Element, x: Element) -> LaurentPoly {
        self.kl_basis(x).coeff(y)
    }

    /// Coefficient of `v` in `h_{y,x}`.
    pub fn mu(&self, y: Element, x: Element) -> BigInt {
        self.kl_basis(x)
            .get(y)
            .map(|h| h.coeff(1))
            .unwrap_or_default()
    }

    /// Anti-involution `a(H_x) = H_{x^{-1}}`, `a(v) = v`.
    pub fn a_inv(&self, h: &HeckeElt) -> HeckeElt {
        HeckeElt {
            terms: h
                .iter()
                .map(|(&w, c)| (self.sys.inverse(w), c.clone()))
                .collect(),
        }
    }

    /// Trace: the `H_id` coefficient.
    pub fn eps(&self, h: &HeckeElt) -> LaurentPoly {
        h.coeff(Element::IDENTITY)
    }

    /// `(h1, h2) = eps(a(h1) h2)`.
    pub fn pairing(&self, h1: &HeckeElt, h2: &HeckeElt) -> LaurentPoly {
        self.eps(&self.mult(&self.a_inv(h1), h2))
    }

    /// The functional `h -> (h1, h)`, tabulated on the standard basis by
    /// multiplying `a(h1)` through every `H_w`. Cheaper than repeated
    /// [`pairing`](Self::pairing) calls when `h1` is paired with many elements.
    pub fn trace_form(&self, h1: &HeckeElt) -> TraceForm {
        let ah = self.a_inv(h1);
        let mut products: Vec<Option<HeckeElt>> = vec![None; self.sys.order()];
        let mut values = vec![LaurentPoly::zero(); self.sys.order()];
        for w in self.sys.elements() {
            let p = match self.sys.reduced_word(w).last() {
                None => ah.clone(),
                Some(&t) => {
                    let prefix = self.sys.mult_gen(w, t as usize, Side::Right);
                    self.mult_gen_right(products[prefix.index()].as_ref().unwrap(), t as usize)
                }
            };
            values[w.index()] = self.eps(&p);
            products[w.index()] = Some(p);
        }
        TraceForm { values }
    }

    /// `H̲_I = sum_{x in W_I} v^{l(w_I) - l(x)} H_x`, checked against the KL
    /// recursion for `w_I`.
    pub fn kl_ideal_generator(&self, subset: GenSet) -> HeckeElt {
        let group = self.sys.parabolic_subgroup(subset);
        let w_i = *group.last().unwrap();
        let top = self.sys.length(w_i) as i32;
        let closed = HeckeElt::from_terms(
            group
                .iter()
                .map(|&x| (x, LaurentPoly::v_pow(top - self.sys.length(x) as i32))),
        );
        assert_eq!(
            &closed,
            self.kl_basis(w_i),
            "closed form of the parabolic KL generator disagrees with the KL recursion"
        );
        closed
    }

    /// Replaces a memoized KL basis element. Only for fault-injection tests.
    #[doc(hidden)]
    pub fn inject_kl_basis(&mut self, x: Element, h: HeckeElt) {
        let cell = &mut self.kl[x.index()];
        *cell = OnceLock::new();
        let _ = cell.set(h);
    }
}
