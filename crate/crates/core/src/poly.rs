//! Univariate polynomials over the rationals and exact real-root isolation.
//!
//! Root counting uses a Sturm chain of the square-free part, so every sign
//! decision is exact.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, Rational};

/// Polynomial with rational coefficients in ascending degree. The leading
/// coefficient is nonzero unless the polynomial is zero (empty list).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UnivariatePolynomial {
    coeffs: Vec<Rational>,
}

/// Closed interval `[lo, hi]` isolating one real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolationInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolationInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(alloc::vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + crate::scalar::rational_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c * int(d as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = alloc::vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let l = l.clone();
                Self::new(self.coeffs.iter().map(|c| c / &l).collect())
            }
            None => Self::zero(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self` with every factor of `t` removed.
    fn strip_zero_roots(&self) -> Self {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        Self::new(self.coeffs[k..].to_vec())
    }

    /// Square-free part (same distinct roots, all simple).
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("gcd is nonzero").0
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if lo >= hi {
            return Ok(0);
        }
        let chain = SturmChain::new(&self.square_free());
        // The count is exact for (lo, hi] only when lo is not itself a root.
        let at_lo = if chain.first().eval(lo).is_zero() {
            chain.variations_right_of(lo)
        } else {
            chain.variations(lo)
        };
        Ok(at_lo - chain.variations(hi))
    }

    /// Isolate the smallest root in `(0, upper]`.
    ///
    /// Returns `[lo, hi]` with `hi - lo <= precision` containing that root,
    /// such that the polynomial has no root in `(0, lo]`; `None` when there is
    /// no root in `(0, upper]`.
    pub fn smallest_positive_root(
        &self,
        upper: &Rational,
        precision: &Rational,
    ) -> Result<Option<IsolationInterval>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !upper.is_positive() {
            return Err(Error::NonPositiveParameter("upper bound"));
        }
        if !precision.is_positive() {
            return Err(Error::NonPositiveParameter("precision"));
        }
        let q = self.strip_zero_roots().square_free();
        let chain = SturmChain::new(&q);
        let mut lo = Rational::zero();
        let mut hi = upper.clone();
        let mut v_lo = chain.variations(&lo);
        if v_lo == chain.variations(&hi) {
            return Ok(None);
        }
        let two = int(2);
        // Invariant: no root in (0, lo], at least one root in (lo, hi].
        while &hi - &lo > *precision {
            let mid = (&lo + &hi) / &two;
            let v_mid = chain.variations(&mid);
            if v_lo > v_mid {
                hi = mid;
            } else {
                lo = mid;
                v_lo = v_mid;
            }
        }
        Ok(Some(IsolationInterval { lo, hi }))
    }
}

struct SturmChain {
    seq: Vec<UnivariatePolynomial>,
}

impl SturmChain {
    fn new(p: &UnivariatePolynomial) -> Self {
        let mut seq = alloc::vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            seq.push(d);
            loop {
                let n = seq.len();
                let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero divisor");
                if r.is_zero() {
                    break;
                }
                // Negated remainder, scaled by a positive constant.
                let scale = -r.leading().expect("nonzero").abs();
                seq.push(UnivariatePolynomial::new(
                    r.coeffs.iter().map(|c| c / &scale).collect(),
                ));
            }
        }
        SturmChain { seq }
    }

    fn first(&self) -> &UnivariatePolynomial {
        &self.seq[0]
    }

    fn variations(&self, t: &Rational) -> usize {
        count_sign_changes(self.seq.iter().map(|p| p.eval(t)))
    }

    /// Variations just to the right of a simple root of the first member,
    /// where it carries the sign of its derivative (the second member).
    fn variations_right_of(&self, t: &Rational) -> usize {
        count_sign_changes(self.seq.iter().skip(1).map(|p| p.eval(t)))
    }
}

fn count_sign_changes<I: Iterator<Item = Rational>>(values: I) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for v in values {
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            changes += 1;
        }
        last = Some(pos);
    }
    changes
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
