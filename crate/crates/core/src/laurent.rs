//! Sparse Laurent polynomials in `v` with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept sorted by exponent with zero coefficients removed, so
//! structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    // (exponent, coefficient), strictly increasing exponents, no zero coefficients.
    terms: Vec<(i32, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The monomial `c * v^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(e, c)],
            }
        }
    }

    /// `v^e`.
    pub fn v_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs;
    /// repeated exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut raw: Vec<(i32, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        raw.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, BigInt)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        match self.terms.binary_search_by_key(&e, |(x, _)| *x) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn is_nonneg(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// True for `0` and for constants `n >= 0`.
    pub fn is_constant_nonneg_int(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(0, c)] => c.is_positive(),
            _ => false,
        }
    }

    /// Substitutes `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| (-e, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Keeps only the terms with exponent strictly greater than `e`.
    pub fn truncate_above(&self, e: i32) -> Self {
        Self {
            terms: self.terms.iter().filter(|(x, _)| *x > e).cloned().collect(),
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::NotDivisible`] when no Laurent polynomial `q`
    /// satisfies `q * divisor == self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(b_lo), Some(b_hi)) = (divisor.min_degree(), divisor.max_degree()) else {
            return Err(Error::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let not_div = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let a_hi = self.max_degree().unwrap();
        let top = a_hi - b_hi;
        let lead = &divisor.terms[0].1;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some(r_lo) = rem.min_degree() {
            let e = r_lo - b_lo;
            if e > top {
                return Err(not_div());
            }
            let (q, r) = rem.terms[0].1.div_rem(lead);
            if !r.is_zero() {
                return Err(not_div());
            }
            rem -= &divisor.shift(e).scale(&q);
            quotient.push((e, q));
        }
        Ok(Self { terms: quotient })
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate_other {
                    -&b[j].1
                } else {
                    b[j].1.clone()
                };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate_other {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    /// Text form: signed monomials `c*v^e` in ascending exponent order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// JSON form: `[[exponent, coefficient], ...]` in ascending exponent order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| Value::Array(vec![Value::from(*e), bigint_json(c)]))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("not a Laurent polynomial: {value}"));
        let arr = value.as_array().ok_or_else(bad)?;
        let mut terms = Vec::with_capacity(arr.len());
        for pair in arr {
            match pair.as_array().map(Vec::as_slice) {
                Some([e, c]) => {
                    let e = e
                        .as_i64()
                        .and_then(|e| i32::try_from(e).ok())
                        .ok_or_else(bad)?;
                    let c: BigInt = c.to_string().parse().map_err(|_| bad())?;
                    terms.push((e, c));
                }
                _ => return Err(bad()),
            }
        }
        Ok(Self::from_terms(terms))
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    // arbitrary_precision keeps big coefficients exact
    Value::Number(
        c.to_string()
            .parse()
            .expect("integer literal is a JSON number"),
    )
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, _) => write!(f, "{c}*v^{e}")?,
                (_, true) => write!(f, " - {}*v^{e}", c.abs())?,
                (_, false) => write!(f, " + {c}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, true);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return self.shift(*e).scale(c);
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return rhs.shift(*e).scale(c);
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[(1, 1)]) + p(&[(-1, 1)]), p(&[(-1, 1), (1, 1)]));
        assert!((p(&[(1, 1)]) + p(&[(1, -1)])).is_zero());
        assert_eq!(
            p(&[(0, 1), (2, 1)]) + p(&[(0, 1), (2, 1)]),
            p(&[(0, 2), (2, 2)])
        );
    }

    #[test]
    fn mul_examples() {
        let q = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&q * &q, p(&[(2, 1), (0, 2), (-2, 1)]));
        assert!((&q * &LaurentPoly::zero()).is_zero());
        // hand convolution
        assert_eq!(
            p(&[(0, 1), (2, 1)]) * p(&[(0, 1), (2, 1), (4, 1)]),
            p(&[(0, 1), (2, 2), (4, 2), (6, 1)])
        );
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::v_pow(1).bar(), LaurentPoly::v_pow(-1));
        assert_eq!(p(&[(0, 1), (2, 1)]).bar(), p(&[(0, 1), (-2, 1)]));
    }

    #[test]
    fn div_exact_examples() {
        let d = p(&[(0, 1), (2, 1)]);
        assert!(d.div_exact(&d).unwrap().is_one());
        assert_eq!(
            p(&[(1, 1), (3, 1)]).div_exact(&d).unwrap(),
            LaurentPoly::v_pow(1)
        );
        assert!(matches!(
            p(&[(0, 1), (1, 1)]).div_exact(&d),
            Err(Error::NotDivisible { .. })
        ));
        assert!(matches!(
            d.div_exact(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        ));
        // integer content must divide too
        assert!(p(&[(0, 3)]).div_exact(&p(&[(0, 2)])).is_err());
    }

    #[test]
    fn accessors() {
        let q = p(&[(1, 1), (3, 2)]);
        assert_eq!(q.coeff(3), BigInt::from(2));
        assert_eq!(q.coeff(2), BigInt::zero());
        assert_eq!(p(&[(-2, 1), (1, 1)]).min_degree(), Some(-2));
        assert_eq!(LaurentPoly::zero().min_degree(), None);
        assert!(!p(&[(1, 1), (2, -1)]).is_nonneg());
        assert!(p(&[(0, 3)]).is_constant_nonneg_int());
        assert!(LaurentPoly::zero().is_constant_nonneg_int());
        assert!(!p(&[(0, -1)]).is_constant_nonneg_int());
        assert!(!p(&[(1, 1)]).is_constant_nonneg_int());
    }

    #[test]
    fn rendering() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            p(&[(-1, 1), (0, -2), (3, 1)]).to_string(),
            "1*v^-1 - 2*v^0 + 1*v^3"
        );
        assert_eq!(p(&[(0, -1)]).to_string(), "-1*v^0");
        assert_eq!(
            p(&[(-1, 1), (2, -3)]).to_json().to_string(),
            "[[-1,1],[2,-3]]"
        );
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let big = LaurentPoly::monomial(BigInt::from(i64::MAX), 0);
        let sq = &big * &big;
        let expect: BigInt = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        assert_eq!(sq.coeff(0), expect);
        assert_eq!(LaurentPoly::from_json(&sq.to_json()).unwrap(), sq);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i32..5, -3i64..4), 0..5).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn bar_is_ring_involution(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!(a.bar().bar(), a);
        }

        #[test]
        fn div_exact_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
