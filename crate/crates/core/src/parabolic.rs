//! The left ideal `H^I = H H̲_I` with its standard basis `H_x^I = H_x H̲_I`
//! and parabolic KL basis `H̲_x^I = H̲_{x w_I}`, both indexed by `x` in `W^I`.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Sub};
use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Element, GenSet};
use crate::error::{Error, Result};
use crate::hecke::{render_terms, terms_json, Hecke, HeckeElt};
use crate::laurent::LaurentPoly;

/// `sum_y c_y H_y^I` over minimal coset representatives `y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicElt {
    subset: GenSet,
    terms: BTreeMap<Element, LaurentPoly>,
}

impl ParabolicElt {
    pub fn zero(subset: GenSet) -> Self {
        Self {
            subset,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(subset: GenSet, y: Element, c: LaurentPoly) -> Self {
        let mut p = Self::zero(subset);
        p.add_term(y, &c);
        p
    }

    pub fn subset(&self) -> GenSet {
        self.subset
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

    pub fn get(&self, y: Element) -> Option<&LaurentPoly> {
        self.terms.get(&y)
    }

    pub fn coeff(&self, y: Element) -> LaurentPoly {
        self.terms.get(&y).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Element, LaurentPoly> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = Element> + '_ {
        self.terms.keys().copied()
    }

    pub fn add_term(&mut self, y: Element, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(y) {
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

    pub fn add_scaled(&mut self, other: &ParabolicElt, c: &LaurentPoly) {
        debug_assert_eq!(self.subset, other.subset);
        for (&y, x) in &other.terms {
            self.add_term(y, &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.subset);
        out.add_scaled(self, c);
        out
    }

    pub fn to_text(&self, sys: &CoxeterSystem) -> String {
        render_terms(sys, "H^I", self.iter())
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        json!({
            "subset": subset_json(sys, self.subset),
            "terms": terms_json(sys, self.iter()),
        })
    }
}

pub(crate) fn subset_json(sys: &CoxeterSystem, subset: GenSet) -> Value {
    Value::Array(
        subset
            .iter()
            .map(|s| Value::from(sys.generator_label(s)))
            .collect(),
    )
}

impl<'a> Add<&'a ParabolicElt> for &ParabolicElt {
    type Output = ParabolicElt;
    fn add(self, rhs: &'a ParabolicElt) -> ParabolicElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl<'a> Sub<&'a ParabolicElt> for &ParabolicElt {
    type Output = ParabolicElt;
    fn sub(self, rhs: &'a ParabolicElt) -> ParabolicElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::from(-1));
        out
    }
}

type Table = Vec<Vec<LaurentPoly>>;

/// `H^I` for one subset `I`, memoizing parabolic KL elements and the tables
/// of `h^I` and `g^I` (dense, indexed by position in `W^I`).
pub struct ParabolicModule<'a> {
    hecke: &'a Hecke<'a>,
    subset: GenSet,
    w_i: Element,
    top: i32,
    generator: HeckeElt,
    reps: Vec<Element>,
    position: Vec<Option<usize>>,
    kl: Vec<OnceLock<ParabolicElt>>,
    h_table: OnceLock<Table>,
    g_table: OnceLock<Table>,
}

impl<'a> ParabolicModule<'a> {
    pub fn new(hecke: &'a Hecke<'a>, subset: GenSet) -> Self {
        let sys = hecke.system();
        assert!(sys.is_finitary(subset), "subset {subset} is not finitary");
        let w_i = sys.longest_in(subset);
        let reps = sys.min_reps(subset);
        let mut position = vec![None; sys.order()];
        for (k, y) in reps.iter().enumerate() {
            position[y.index()] = Some(k);
        }
        Self {
            hecke,
            subset,
            w_i,
            top: sys.length(w_i) as i32,
            generator: hecke.kl_ideal_generator(subset),
            kl: (0..reps.len()).map(|_| OnceLock::new()).collect(),
            reps,
            position,
            h_table: OnceLock::new(),
            g_table: OnceLock::new(),
        }
    }

    pub fn hecke(&self) -> &'a Hecke<'a> {
        self.hecke
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.hecke.system()
    }

    pub fn subset(&self) -> GenSet {
        self.subset
    }

    /// The longest element `w_I`.
    pub fn w_i(&self) -> Element {
        self.w_i
    }

    /// `H̲_I`.
    pub fn generator(&self) -> &HeckeElt {
        &self.generator
    }

    /// `W^I` in canonical order.
    pub fn reps(&self) -> &[Element] {
        &self.reps
    }

    pub fn position(&self, y: Element) -> Option<usize> {
        self.position[y.index()]
    }

    pub fn contains(&self, y: Element) -> bool {
        self.position(y).is_some()
    }

    pub fn check_rep(&self, y: Element) -> Result<()> {
        if self.contains(y) {
            Ok(())
        } else {
            Err(Error::NotMinimalCosetRep(self.system().word_string(y)))
        }
    }

    fn pos(&self, y: Element) -> usize {
        self.position(y).unwrap_or_else(|| {
            panic!(
                "{} is not in W^I for I = {}",
                self.system().word_string(y),
                self.subset
            )
        })
    }

    /// `H_x^I`.
    pub fn standard(&self, x: Element) -> ParabolicElt {
        self.pos(x);
        ParabolicElt::term(self.subset, x, LaurentPoly::one())
    }

    /// The image of `p` in `H`: `sum_y c_y H_y H̲_I`.
    pub fn embed(&self, p: &ParabolicElt) -> HeckeElt {
        assert_eq!(
            p.subset, self.subset,
            "element lives over a different subset"
        );
        let mut out = HeckeElt::zero();
        for (&y, c) in p.iter() {
            let hy = self.hecke.mult(&HeckeElt::basis(y), &self.generator);
            out.add_scaled(&hy, c);
        }
        out
    }

    /// Inverse of [`embed`](Self::embed). The `H_y^I` coefficient is read off
    /// the `H_y` coefficient (divided by `v^{l(w_I)}`), then the result is
    /// re-embedded and compared.
    pub fn extract(&self, h: &HeckeElt) -> Result<ParabolicElt> {
        let mut p = ParabolicElt::zero(self.subset);
        for (&w, c) in h.iter() {
            if self.contains(w) {
                p.add_term(w, &c.shift(-self.top));
            }
        }
        if &self.embed(&p) != h {
            return Err(Error::NotInIdeal);
        }
        Ok(p)
    }

    /// `H̲_x^I = H̲_{x w_I}`, expressed in the basis `{H_y^I}`.
    pub fn parabolic_kl_basis(&self, x: Element) -> &ParabolicElt {
        let k = self.pos(x);
        self.kl[k].get_or_init(|| {
            let sys = self.system();
            self.extract(self.hecke.kl_basis(sys.mul(x, self.w_i)))
                .expect("H̲_{x w_I} lies in the parabolic ideal")
        })
    }

    /// `h^I_{y,x}`, cross-checked against `h_{y w_I, x w_I}`.
    pub fn parabolic_kl_poly(&self, y: Element, x: Element) -> LaurentPoly {
        self.pos(y);
        let direct = self.parabolic_kl_basis(x).coeff(y);
        let sys = self.system();
        let lifted = self
            .hecke
            .kl_poly(sys.mul(y, self.w_i), sys.mul(x, self.w_i));
        assert_eq!(
            direct, lifted,
            "parabolic KL polynomial disagrees with h_{{y w_I, x w_I}}"
        );
        direct
    }

    /// Dense table `h[pos(y)][pos(x)] = h^I_{y,x}`.
    pub fn h_table(&self) -> &Table {
        self.h_table.get_or_init(|| {
            let n = self.reps.len();
            let mut table = vec![vec![LaurentPoly::zero(); n]; n];
            for (kx, &x) in self.reps.iter().enumerate() {
                for (&y, c) in self.parabolic_kl_basis(x).iter() {
                    table[self.pos(y)][kx] = c.clone();
                }
            }
            table
        })
    }

    /// Dense table `g[pos(x)][pos(z)] = g^I_{x,z}`, solved row by row from
    /// `sum_y (-1)^{l(y)-l(x)} g^I_{x,y} h^I_{y,z} = delta_{x,z}`.
    pub fn g_table(&self) -> &Table {
        self.g_table.get_or_init(|| {
            let sys = self.system();
            let h = self.h_table();
            let n = self.reps.len();
            let len: Vec<u32> = self.reps.iter().map(|&y| sys.length(y)).collect();
            let mut g = vec![vec![LaurentPoly::zero(); n]; n];
            for kx in 0..n {
                g[kx][kx] = LaurentPoly::one();
                for kz in kx + 1..n {
                    // the y = z term is (-1)^{l(z)-l(x)} g_{x,z}
                    let mut acc = LaurentPoly::zero();
                    for ky in kx..kz {
                        if g[kx][ky].is_zero() || h[ky][kz].is_zero() {
                            continue;
                        }
                        let term = &g[kx][ky] * &h[ky][kz];
                        if (len[kz] + len[ky]).is_multiple_of(2) {
                            acc -= &term;
                        } else {
                            acc += &term;
                        }
                    }
                    g[kx][kz] = acc;
                }
            }
            g
        })
    }

    /// `g^I_{x,z}`; zero unless `x <= z`.
    pub fn inverse_parabolic_kl(&self, x: Element, z: Element) -> LaurentPoly {
        let (kx, kz) = (self.pos(x), self.pos(z));
        self.g_table()[kx][kz].clone()
    }

    /// Overwrites one entry of the memoized `h^I` table after `g^I` has been
    /// solved. Only for fault-injection tests.
    #[doc(hidden)]
    pub fn inject_h_fault(&mut self, y: Element, x: Element, value: LaurentPoly) {
        self.g_table();
        let (ky, kx) = (self.pos(y), self.pos(x));
        self.h_table.get_mut().expect("h table filled by g_table")[ky][kx] = value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(t: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().copied())
    }

    #[test]
    fn embed_examples() {
        let w = CoxeterSystem::named("A3").unwrap();
        let hk = Hecke::new(&w);
        let st = GenSet::from_bits(0b011);
        let m = ParabolicModule::new(&hk, st);
        assert_eq!(&m.embed(&m.standard(w.identity())), m.generator());
        for &y in m.reps() {
            let e = m.embed(&m.standard(y));
            assert_eq!(e.coeff(y), LaurentPoly::v_pow(3));
            assert_eq!(e.len(), 6);
        }
        let trivial = ParabolicModule::new(&hk, GenSet::EMPTY);
        for x in w.elements() {
            assert_eq!(trivial.embed(&trivial.standard(x)), HeckeElt::basis(x));
        }
    }

    #[test]
    fn extract_examples() {
        let w = CoxeterSystem::named("A3").unwrap();
        let hk = Hecke::new(&w);
        let st = GenSet::from_bits(0b011);
        let m = ParabolicModule::new(&hk, st);
        assert_eq!(m.extract(m.generator()).unwrap(), m.standard(w.identity()));
        let s = ParabolicModule::new(&hk, GenSet::from_bits(0b001));
        assert_eq!(
            s.extract(&HeckeElt::basis(w.generator(0))),
            Err(Error::NotInIdeal)
        );
    }

    #[test]
    fn parabolic_kl_examples() {
        let w = CoxeterSystem::named("A3").unwrap();
        let hk = Hecke::new(&w);
        for bits in 0..8 {
            let m = ParabolicModule::new(&hk, GenSet::from_bits(bits));
            assert_eq!(
                m.parabolic_kl_basis(w.identity()),
                &m.standard(w.identity())
            );
            for &x in m.reps() {
                assert!(m.parabolic_kl_poly(x, x).is_one());
                for &y in m.reps() {
                    let h = m.parabolic_kl_poly(y, x);
                    if !w.bruhat_leq(y, x) {
                        assert!(h.is_zero());
                    }
                }
            }
        }
        let trivial = ParabolicModule::new(&hk, GenSet::EMPTY);
        for x in w.elements() {
            for y in w.elements() {
                assert_eq!(trivial.parabolic_kl_poly(y, x), hk.kl_poly(y, x));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let w = CoxeterSystem::named("A1").unwrap();
        let hk = Hecke::new(&w);
        let m = ParabolicModule::new(&hk, GenSet::EMPTY);
        let s = w.generator(0);
        assert!(m.inverse_parabolic_kl(s, s).is_one());
        assert_eq!(m.inverse_parabolic_kl(w.identity(), s), poly(&[(1, 1)]));
        assert!(m.inverse_parabolic_kl(s, w.identity()).is_zero());
    }

    #[test]
    #[should_panic(expected = "is not in W^I")]
    fn non_rep_panics() {
        let w = CoxeterSystem::named("A2").unwrap();
        let hk = Hecke::new(&w);
        let m = ParabolicModule::new(&hk, GenSet::from_bits(0b01));
        m.parabolic_kl_basis(w.generator(0));
    }

    #[test]
    fn rendering() {
        let w = CoxeterSystem::named("A2").unwrap();
        let hk = Hecke::new(&w);
        let m = ParabolicModule::new(&hk, GenSet::from_bits(0b01));
        let p = m.parabolic_kl_basis(w.generator(1));
        assert_eq!(p.to_text(&w), "(1*v^1) * H^I[id] + (1*v^0) * H^I[s2]");
        assert_eq!(
            p.to_json(&w).to_string(),
            r#"{"subset":["s1"],"terms":[{"word":"id","poly":[[1,1]]},{"word":"s2","poly":[[0,1]]}]}"#
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn extract_embed_round_trip(
            bits in 0u64..8,
            raw in prop::collection::vec((0usize..24, -2i32..3, -2i64..3), 0..5),
        ) {
            let w = CoxeterSystem::named("A3").unwrap();
            let hk = Hecke::new(&w);
            let m = ParabolicModule::new(&hk, GenSet::from_bits(bits));
            let mut p = ParabolicElt::zero(m.subset());
            for (i, e, c) in raw {
                let y = m.reps()[i % m.reps().len()];
                p.add_term(y, &LaurentPoly::monomial(c, e));
            }
            prop_assert_eq!(m.extract(&m.embed(&p)).unwrap(), p);
        }
    }
}
