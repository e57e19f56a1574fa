//! Characters of singular Soergel bimodules.
//!
//! Under Soergel's conjecture `ch(B_x^I) = H̲_x^I`, so a bimodule is known
//! up to isomorphism by the expansion of its character in the parabolic KL
//! basis: the coefficient of `H̲_y^I` is the graded multiplicity of `B_y^I`.

use std::collections::btree_map::{self, BTreeMap};

use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Element, GenSet};
use crate::error::{Error, Result};
use crate::hecke::terms_json;
use crate::laurent::LaurentPoly;
use crate::parabolic::{subset_json, ParabolicElt, ParabolicModule};

/// An element of `H^I` written in the parabolic KL basis `{H̲_y^I}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    subset: GenSet,
    coeffs: BTreeMap<Element, LaurentPoly>,
}

impl Character {
    pub fn zero(subset: GenSet) -> Self {
        Self {
            subset,
            coeffs: BTreeMap::new(),
        }
    }

    /// The character of `B_x^I`.
    pub fn delta(subset: GenSet, x: Element) -> Self {
        let mut c = Self::zero(subset);
        c.coeffs.insert(x, LaurentPoly::one());
        c
    }

    pub fn from_coeffs(
        subset: GenSet,
        coeffs: impl IntoIterator<Item = (Element, LaurentPoly)>,
    ) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { subset, coeffs }
    }

    pub fn subset(&self) -> GenSet {
        self.subset
    }

    pub fn coeff(&self, y: Element) -> LaurentPoly {
        self.coeffs.get(&y).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Element, LaurentPoly> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Rewrites the character in the standard basis `{H_y^I}`.
    pub fn to_parabolic(&self, module: &ParabolicModule<'_>) -> ParabolicElt {
        assert_eq!(self.subset, module.subset());
        let mut out = ParabolicElt::zero(self.subset);
        for (&y, c) in &self.coeffs {
            out.add_scaled(module.parabolic_kl_basis(y), c);
        }
        out
    }

    /// Perverse: every coefficient is a nonnegative integer constant.
    pub fn is_perverse(&self) -> bool {
        self.coeffs
            .values()
            .all(LaurentPoly::is_constant_nonneg_int)
    }

    /// Every coefficient lies in `Z_{>=0}[v, v^{-1}]`.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(LaurentPoly::is_nonneg)
    }

    pub fn to_text(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::new();
        for (&y, c) in &self.coeffs {
            out.push_str(&format!("{}\t{c}\n", sys.word_string(y)));
        }
        out
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        json!({
            "subset": subset_json(sys, self.subset),
            "coeffs": terms_json(sys, self.coeffs.iter()),
        })
    }
}

/// Expands `p` in the parabolic KL basis by peeling off the last support
/// element in canonical order (which is Bruhat-maximal in the support).
pub fn kl_decompose(module: &ParabolicModule<'_>, p: &ParabolicElt) -> Character {
    assert_eq!(p.subset(), module.subset());
    let mut rest = p.clone();
    let mut coeffs = BTreeMap::new();
    loop {
        let Some(top) = rest.support().next_back() else {
            break;
        };
        let c = rest.coeff(top);
        rest.add_scaled(module.parabolic_kl_basis(top), &-&c);
        coeffs.insert(top, c);
    }
    Character {
        subset: p.subset(),
        coeffs,
    }
}

/// Character of the restricted Bott-Samelson bimodule:
/// `H̲_{s_1} ... H̲_{s_k} H̲_I`, decomposed in the parabolic KL basis.
pub fn bott_samelson_char(module: &ParabolicModule<'_>, word: &[usize]) -> Character {
    let hecke = module.hecke();
    let mut h = module.generator().clone();
    for &s in word.iter().rev() {
        h = hecke.mult_kl_gen_left(&h, s);
    }
    let p = module
        .extract(&h)
        .expect("left multiples of H̲_I lie in the ideal");
    kl_decompose(module, &p)
}

/// Graded rank of `Hom(B1, B2)` from the Hom formula
/// `(bar(ch B1), ch B2) / pi(I)`.
pub fn graded_hom_rank(
    module: &ParabolicModule<'_>,
    c1: &Character,
    c2: &Character,
) -> Result<LaurentPoly> {
    if c1.subset != c2.subset || c1.subset != module.subset() {
        return Err(Error::SubsetMismatch);
    }
    let hecke = module.hecke();
    let left = hecke.bar(&module.embed(&c1.to_parabolic(module)));
    let right = module.embed(&c2.to_parabolic(module));
    hecke
        .pairing(&left, &right)
        .div_exact(&module.system().poincare(module.subset()))
}

/// For each `x` in the support of `p`, `bar(c_x) v^{l(x)}` where `c_x` is
/// the `H_x^I` coefficient: the graded rank of the subquotient of `p`
/// supported on `x`.
pub fn support_graded_ranks(
    module: &ParabolicModule<'_>,
    p: &ParabolicElt,
) -> BTreeMap<Element, LaurentPoly> {
    let sys = module.system();
    p.iter()
        .map(|(&x, c)| (x, c.bar().shift(sys.length(x) as i32)))
        .collect()
}
