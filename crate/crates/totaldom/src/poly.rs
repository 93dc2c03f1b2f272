//! Exact integer univariate polynomials, dense ascending coefficients.
//!
//! Coefficients are arbitrary-precision integers so recurrence evaluation
//! and binomial sums never overflow.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense ascending coefficient list; index = degree. The zero polynomial
/// is the empty list, and a nonzero polynomial never stores trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Polynomial::from_coeffs(vec![BigInt::from(c)])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Polynomial::from_i64(&[0, 1])
    }

    /// `c * x^deg`.
    pub fn monomial(deg: usize, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = BigInt::from(c);
        Polynomial::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Polynomial::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// `self^k`, with `p^0 = 1`.
    pub fn pow(&self, k: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// All integer roots, found by stripping the `x^k` factor and testing
    /// both signs of every divisor of the remaining constant term.
    pub fn integer_roots(&self) -> Result<BTreeSet<BigInt>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomialRoots);
        }
        let mut roots = BTreeSet::new();
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        if k > 0 {
            roots.insert(BigInt::zero());
        }
        let reduced = Polynomial::from_coeffs(self.coeffs[k..].to_vec());
        if reduced.degree() == Some(0) {
            return Ok(roots);
        }
        let c0 = reduced.coeffs[0].abs();
        let mut d = BigInt::one();
        while &d * &d <= c0 {
            if (&c0 % &d).is_zero() {
                for q in [d.clone(), &c0 / &d] {
                    for cand in [q.clone(), -q] {
                        if reduced.eval(&cand).is_zero() {
                            roots.insert(cand);
                        }
                    }
                }
            }
            d += 1;
        }
        Ok(roots)
    }

    /// Dense ascending coefficient rendering, e.g. `0 0 4 4 1`.
    pub fn dense_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Human rendering with descending powers, e.g. `x^4+4x^3+4x^2`.
    pub fn human_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() || deg == 0 {
                out.push_str(&a.to_string());
            }
            if deg >= 1 {
                out.push('x');
            }
            if deg >= 2 {
                out.push_str(&format!("^{deg}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.human_string())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_i64(coeffs)
    }

    #[test]
    fn combine_examples() {
        // x^2 * (x+2) = x^3 + 2x^2
        assert_eq!(p(&[0, 0, 1]).mul(&p(&[2, 1])), p(&[0, 0, 2, 1]));
        let q = p(&[3, 0, 7]);
        assert_eq!(q.add(&Polynomial::zero()), q);
        assert_eq!(p(&[1, 1]).mul(&p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn power_examples() {
        assert_eq!(p(&[2, 1]).pow(0), Polynomial::one());
        assert_eq!(p(&[2, 1]).pow(2), p(&[4, 4, 1]));
        // H(3) closed form at n=1: x^2 (x+2)
        assert_eq!(p(&[0, 0, 1]).mul(&p(&[2, 1])).pow(1), p(&[0, 0, 2, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[0, 0, 3, 1]).eval(&BigInt::from(-3)), BigInt::zero());
        assert_eq!(p(&[1, 2, 1]).eval(&BigInt::from(-1)), BigInt::zero());
        assert_eq!(Polynomial::zero().eval(&BigInt::from(5)), BigInt::zero());
    }

    #[test]
    fn integer_roots_examples() {
        // x^4 (x+2)^2
        let h3 = Polynomial::monomial(4, 1).mul(&p(&[2, 1]).pow(2));
        let roots = h3.integer_roots().unwrap();
        assert_eq!(
            roots.into_iter().collect::<Vec<_>>(),
            vec![BigInt::from(-2), BigInt::from(0)]
        );
        let c6 = Polynomial::monomial(4, 1).mul(&p(&[3, 1]).pow(2));
        let roots = c6.integer_roots().unwrap();
        assert_eq!(
            roots.into_iter().collect::<Vec<_>>(),
            vec![BigInt::from(-3), BigInt::from(0)]
        );
        let roots = p(&[1, 2, 1]).integer_roots().unwrap();
        assert_eq!(roots.into_iter().collect::<Vec<_>>(), vec![BigInt::from(-1)]);
    }

    #[test]
    fn zero_polynomial_roots_is_error() {
        assert!(matches!(
            Polynomial::zero().integer_roots(),
            Err(Error::ZeroPolynomialRoots)
        ));
    }

    #[test]
    fn renderings() {
        let q = Polynomial::monomial(4, 1).add(&p(&[0, 0, 4, 4]));
        assert_eq!(q.dense_string(), "0 0 4 4 1");
        assert_eq!(q.human_string(), "x^4+4x^3+4x^2");
        assert_eq!(Polynomial::zero().dense_string(), "0");
        assert_eq!(p(&[-1, 1]).human_string(), "x-1");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-6i64..=6, 0..6).prop_map(|v| Polynomial::from_i64(&v))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), t in -9i64..=9) {
            let t = BigInt::from(t);
            prop_assert_eq!(a.mul(&b).eval(&t), a.eval(&t) * b.eval(&t));
        }

        #[test]
        fn roots_actually_vanish(a in arb_poly()) {
            if !a.is_zero() {
                for r in a.integer_roots().unwrap() {
                    prop_assert_eq!(a.eval(&r), BigInt::zero());
                }
            }
        }
    }
}
