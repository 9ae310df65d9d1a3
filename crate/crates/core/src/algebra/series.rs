use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{Coeff, RatPoly};
use crate::error::{Error, Result};

/// Power series truncated at an explicit order: `coeffs[i]` multiplies `x^i`
/// for `0 <= i < order`, with trailing zeros kept.
///
/// Binary operations require both operands to carry the same order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TruncatedSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

/// Series in one variable over ℚ.
pub type Series = TruncatedSeries<BigRational>;

/// Series in `x` whose coefficients are polynomials in `s` over ℚ.
pub type BiSeries = TruncatedSeries<RatPoly>;

impl<C: Coeff> TruncatedSeries<C> {
    /// The order is the length of `coeffs`.
    pub fn new(coeffs: Vec<C>) -> Self {
        TruncatedSeries { order: coeffs.len(), coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![C::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// `c · x^degree`, truncated.
    pub fn monomial(c: C, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree < order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// The series variable `x`.
    pub fn var(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order, right: other.order })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect(),
        ))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = vec![C::zero(); self.order];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..self.order - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Self::new(out))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `self(inner(x))`, truncated at the common order. `inner` must have a
    /// zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if let Some(c0) = inner.coeffs.first() {
            if !c0.is_zero() {
                return Err(Error::NonzeroConstantTerm(format!("{c0:?}")));
            }
        }
        // Horner: (((f_{N-1}) g + f_{N-2}) g + ...) g + f_0
        let mut acc = Self::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            if let Some(head) = acc.coeffs.first_mut() {
                *head = head.clone() + c.clone();
            }
        }
        Ok(acc)
    }

    /// True when the series is exactly `x` up to its order.
    pub fn is_var(&self) -> bool {
        *self == Self::var(self.order)
    }
}

impl Series {
    /// `exp(self)` for a series with zero constant term, via
    /// `n e_n = Σ_{k=1}^{n} k a_k e_{n-k}`.
    pub fn exp(&self) -> Result<Series> {
        if self.order == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm(self.coeffs[0].to_string()));
        }
        let mut e = vec![BigRational::zero(); self.order];
        e[0] = BigRational::one();
        for n in 1..self.order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += BigRational::from_integer(BigInt::from(k)) * &self.coeffs[k] * &e[n - k];
            }
            e[n] = acc / BigRational::from_integer(BigInt::from(n));
        }
        Ok(Series::new(e))
    }
}
