//! Power series in one variable truncated at a fixed order.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::UnivariatePolynomial;
use crate::scalar::{int, Rational};

/// Coefficients `c_0, ..., c_L` of a series known exactly through `t^L`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series of order `order`; missing coefficients are zero and extra ones
    /// are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn from_polynomial(p: &UnivariatePolynomial, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_i64(&[1], order)
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::from_i64(&[0, 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
            order,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(),
            order,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order())
    }

    /// Cauchy product, exact through the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = alloc::vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// `1 / self` through order `order` (capped at the series' own order).
    pub fn reciprocal(&self, order: usize) -> Result<Self> {
        let order = order.min(self.order());
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        out.push(c0.recip());
        for k in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-acc / c0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Compose with an inner series that has zero constant term, by Horner's
    /// rule on the outer coefficients.
    pub fn compose(&self, inner: &Self, order: usize) -> Self {
        assert!(inner.coeffs[0].is_zero(), "inner series must vanish at 0");
        let order = order.min(self.order()).min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = TruncatedSeries::new(alloc::vec![], order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        acc
    }

    /// `s(t / (1 + t))` through order `order`.
    pub fn substitute_t_over_one_plus_t(&self, order: usize) -> Self {
        self.compose(&t_over_one_plus_t(order), order)
    }

    /// `s(t / (1 - t))` through order `order`; inverse of
    /// [`Self::substitute_t_over_one_plus_t`].
    pub fn substitute_t_over_one_minus_t(&self, order: usize) -> Self {
        self.compose(&t_over_one_minus_t(order), order)
    }
}

/// `t / (1 + t) = t - t^2 + t^3 - ...`
pub fn t_over_one_plus_t(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|k| match k {
            0 => 0,
            k if k % 2 == 1 => 1,
            _ => -1,
        })
        .map(int)
        .collect();
    TruncatedSeries::new(coeffs, order)
}

/// `t / (1 - t) = t + t^2 + t^3 + ...`
pub fn t_over_one_minus_t(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order).map(|k| int(i64::from(k > 0))).collect();
    TruncatedSeries::new(coeffs, order)
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(t^{})]", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_i64(c, order)
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(s(&[1, -1], 3).reciprocal(3).unwrap(), s(&[1, 1, 1, 1], 3));
        assert_eq!(
            s(&[1, -2, 2, -2], 3).reciprocal(3).unwrap(),
            s(&[1, 2, 2, 2], 3)
        );
        // (1 - t/(1+t))^2 = (1+t)^-2
        let k2 = s(&[1, -1], 2).substitute_t_over_one_plus_t(2);
        let sq = k2.mul(&k2);
        assert_eq!(sq.reciprocal(2).unwrap(), s(&[1, 2, 1], 2));
        assert_eq!(s(&[0, 1], 2).reciprocal(2), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn substitution_examples() {
        let t = TruncatedSeries::variable(3);
        assert_eq!(t.substitute_t_over_one_plus_t(3), s(&[0, 1, -1, 1], 3));
        assert_eq!(t.substitute_t_over_one_minus_t(3), s(&[0, 1, 1, 1], 3));

        let q = s(&[1, 5, 7], 2);
        assert_eq!(
            q.substitute_t_over_one_plus_t(2)
                .substitute_t_over_one_minus_t(2),
            q
        );

        // 1 - 2t/(1+t) = (1-t)/(1+t)
        assert_eq!(
            s(&[1, -2], 3).substitute_t_over_one_plus_t(3),
            s(&[1, -2, 2, -2], 3)
        );
    }

    #[test]
    fn orders_truncate_to_the_smaller() {
        let a = s(&[1, 1, 1, 1, 1], 4);
        let b = s(&[1, 1], 2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.mul(&b), s(&[1, 2, 2], 2));
    }
}
