//! Rational generating functions with exact integer coefficients.

use std::ops::{Add, Mul, Sub};

use num_traits::Signed;

use super::Count;
use crate::error::{Error, Result};

/// `numerator(x) / denominator(x)`, coefficient lists from the constant
/// term upwards. The denominator's constant term is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGf<T> {
    numerator: Vec<T>,
    denominator: Vec<T>,
}

fn trim<T: Count>(mut v: Vec<T>) -> Vec<T> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        v.push(T::zero());
    }
    v
}

fn poly_add<T: Count>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len().max(b.len());
    let at = |v: &[T], i: usize| v.get(i).cloned().unwrap_or_else(T::zero);
    trim((0..n).map(|i| at(a, i) + at(b, i)).collect())
}

fn poly_neg<T: Count + Signed>(a: &[T]) -> Vec<T> {
    a.iter().map(|c| -c.clone()).collect()
}

fn poly_mul<T: Count>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(out)
}

impl<T: Count + Signed> RationalGf<T> {
    pub fn new(numerator: Vec<T>, denominator: Vec<T>) -> Result<Self> {
        if denominator.first().is_none_or(|c| c.is_zero()) {
            return Err(Error::InvalidWord("denominator must have a nonzero constant term".into()));
        }
        Ok(Self { numerator: trim(numerator), denominator: trim(denominator) })
    }

    /// Builds from small integer coefficient lists.
    pub fn from_i64(numerator: &[i64], denominator: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&c| T::from_i64(c).expect("fits")).collect();
        Self::new(conv(numerator), conv(denominator))
    }

    pub fn polynomial(coeffs: Vec<T>) -> Self {
        Self { numerator: trim(coeffs), denominator: vec![T::one()] }
    }

    pub fn one() -> Self {
        Self::polynomial(vec![T::one()])
    }

    pub fn numerator(&self) -> &[T] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[T] {
        &self.denominator
    }

    /// `1 / self`; needs a nonzero constant term in the numerator.
    pub fn recip(&self) -> Result<Self> {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    /// The first `count` Taylor coefficients, from the recurrence
    /// `d₀ aₖ = nₖ − Σ_{i≥1} dᵢ aₖ₋ᵢ`.
    pub fn coefficients(&self, count: usize) -> Result<Vec<T>> {
        let d0 = self.denominator[0].clone();
        let mut out: Vec<T> = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = self.numerator.get(k).cloned().unwrap_or_else(T::zero);
            for (i, d) in self.denominator.iter().enumerate().skip(1).take(k) {
                acc = acc - d.clone() * out[k - i].clone();
            }
            let q = acc.clone() / d0.clone();
            if q.clone() * d0.clone() != acc {
                return Err(Error::Invariant(format!("coefficient {k} is not an integer")));
            }
            out.push(q);
        }
        Ok(out)
    }
}

impl<T: Count + Signed> Add for &RationalGf<T> {
    type Output = RationalGf<T>;

    fn add(self, rhs: Self) -> RationalGf<T> {
        RationalGf {
            numerator: poly_add(
                &poly_mul(&self.numerator, &rhs.denominator),
                &poly_mul(&rhs.numerator, &self.denominator),
            ),
            denominator: poly_mul(&self.denominator, &rhs.denominator),
        }
    }
}

impl<T: Count + Signed> Sub for &RationalGf<T> {
    type Output = RationalGf<T>;

    // subtraction is addition of the negation
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Self) -> RationalGf<T> {
        let neg = RationalGf { numerator: poly_neg(&rhs.numerator), denominator: rhs.denominator.clone() };
        self + &neg
    }
}

impl<T: Count + Signed> Mul for &RationalGf<T> {
    type Output = RationalGf<T>;

    fn mul(self, rhs: Self) -> RationalGf<T> {
        RationalGf {
            numerator: poly_mul(&self.numerator, &rhs.numerator),
            denominator: poly_mul(&self.denominator, &rhs.denominator),
        }
    }
}
