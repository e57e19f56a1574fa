//! Graded shapes of singular Rouquier complexes `F_x^I` and `E_x^I`.
//!
//! A shape records, for each homological degree, which indecomposables
//! `B_y^I(shift)` occur and how often. Differentials are not modelled.
//! The terms of `F_x^I` are read off the inverse parabolic KL polynomials:
//! degree `i > 0` holds `B_y^I(i)` with multiplicity the coefficient of
//! `v^i` in `g^I_{y,x}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Element, GenSet};
use crate::error::Result;
use crate::laurent::{bigint_json, LaurentPoly};
use crate::parabolic::{ParabolicElt, ParabolicModule};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeTerm {
    pub element: Element,
    pub shift: i32,
    pub mult: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexShape {
    subset: GenSet,
    apex: Element,
    degrees: BTreeMap<i32, Vec<ShapeTerm>>,
}

impl ComplexShape {
    pub fn new(subset: GenSet, apex: Element) -> Self {
        Self {
            subset,
            apex,
            degrees: BTreeMap::new(),
        }
    }

    /// Adds `mult` copies of `B_y^I(shift)` in homological degree `degree`.
    pub fn push(&mut self, degree: i32, element: Element, shift: i32, mult: BigInt) {
        assert!(mult.is_positive(), "multiplicities are positive");
        self.degrees.entry(degree).or_default().push(ShapeTerm {
            element,
            shift,
            mult,
        });
    }

    /// The shape of `F_x^I`.
    pub fn f_shape(module: &ParabolicModule<'_>, x: Element) -> Self {
        let mut shape = Self::new(module.subset(), x);
        shape.push(0, x, 0, BigInt::one());
        let g = module.g_table();
        let kx = module.position(x).expect("apex must lie in W^I");
        let mut by_degree: BTreeMap<i32, Vec<ShapeTerm>> = BTreeMap::new();
        for (ky, &y) in module.reps().iter().enumerate().take(kx) {
            for (i, c) in g[ky][kx].terms() {
                if i > 0 && c.is_positive() {
                    by_degree.entry(i).or_default().push(ShapeTerm {
                        element: y,
                        shift: i,
                        mult: c.clone(),
                    });
                }
            }
        }
        for (i, terms) in by_degree {
            shape.degrees.insert(i, terms);
        }
        shape
    }

    /// The shape of `E_x^I`: each term `B_y^I(i)` of `F_x^I` in degree `i`
    /// becomes `B_y^I(-i)` in degree `-i`.
    pub fn e_shape(module: &ParabolicModule<'_>, x: Element) -> Self {
        let f = Self::f_shape(module, x);
        let mut shape = Self::new(f.subset, f.apex);
        for (&d, terms) in f.degrees.iter().rev() {
            for t in terms {
                shape.push(-d, t.element, -t.shift, t.mult.clone());
            }
        }
        shape
    }

    pub fn subset(&self) -> GenSet {
        self.subset
    }

    pub fn apex(&self) -> Element {
        self.apex
    }

    pub fn degrees(&self) -> &BTreeMap<i32, Vec<ShapeTerm>> {
        &self.degrees
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &ShapeTerm)> + '_ {
        self.degrees
            .iter()
            .flat_map(|(&d, ts)| ts.iter().map(move |t| (d, t)))
    }

    pub fn degree(&self, d: i32) -> &[ShapeTerm] {
        self.degrees.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `sum (-1)^degree v^shift mult H̲_y^I`, expanded in the standard basis.
    pub fn character(&self, module: &ParabolicModule<'_>) -> ParabolicElt {
        assert_eq!(self.subset, module.subset());
        let mut out = ParabolicElt::zero(self.subset);
        for (d, t) in self.terms() {
            let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
            let c = LaurentPoly::monomial(&t.mult * sign, t.shift);
            out.add_scaled(module.parabolic_kl_basis(t.element), &c);
        }
        out
    }

    /// One line per homological degree: `degree<TAB>B[word](shift)^mult + ...`.
    pub fn to_text(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::new();
        for (d, terms) in &self.degrees {
            let parts: Vec<String> = terms
                .iter()
                .map(|t| format!("B[{}]({})^{}", sys.word_string(t.element), t.shift, t.mult))
                .collect();
            writeln!(out, "{d}\t{}", parts.join(" + ")).unwrap();
        }
        out
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        Value::Array(
            self.degrees
                .iter()
                .map(|(d, terms)| {
                    let terms: Vec<Value> = terms
                        .iter()
                        .map(|t| {
                            json!({
                                "word": sys.word_string(t.element),
                                "shift": t.shift,
                                "mult": bigint_json(&t.mult),
                            })
                        })
                        .collect();
                    json!({ "degree": d, "terms": terms })
                })
                .collect(),
        )
    }
}

/// `ch(F_x^I) = H_x H̲_I = H_x^I`.
pub fn rouquier_character(module: &ParabolicModule<'_>, x: Element) -> ParabolicElt {
    module.standard(x)
}

/// Euler characteristic of the total Hom complex between two shapes over
/// the same subset: `(ch a, bar(ch b)) / pi(I)`, evaluated in `H`.
pub fn euler_hom(
    module: &ParabolicModule<'_>,
    a: &ComplexShape,
    b: &ComplexShape,
) -> Result<LaurentPoly> {
    if a.subset != b.subset || a.subset != module.subset() {
        return Err(crate::error::Error::SubsetMismatch);
    }
    let hecke = module.hecke();
    let left = module.embed(&a.character(module));
    let right = hecke.bar(&module.embed(&b.character(module)));
    let sys = module.system();
    hecke
        .pairing(&left, &right)
        .div_exact(&sys.poincare(module.subset()))
}
