//! Getzler's generating functions and their compositional inverse relation.
//!
//! With `s = t²`,
//!
//! ```text
//! g(x) = x − ((1+x)^s − (1 + s x)) / (s(s−1))
//! f(x) = x + Σ_{n>=2} P_{n+1}(s) xⁿ / n!
//! ```
//!
//! and `f(g(x)) = g(f(x)) = x`. The xⁿ coefficient of `g` also encodes the
//! homology of the open moduli space M₀,ₙ₊₁.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{plain_series, BiSeries, IntPoly, RatPoly};
use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::keel::poincare_poly;
use crate::report::VerificationReport;

pub const DEFAULT_ORDER: usize = 8;

fn require_order(order: usize) -> Result<()> {
    if order < 2 {
        Err(Error::InvalidArgument(format!("order must be >= 2, got {order}")))
    } else {
        Ok(())
    }
}

/// `binom(s, n) = s(s−1)⋯(s−n+1)/n!` as a polynomial in `s`.
pub fn binomial_in_s(n: usize) -> RatPoly {
    let s = RatPoly::var();
    let falling = (0..n).fold(RatPoly::one(), |acc, i| {
        &acc * &(&s - &RatPoly::constant(BigRational::from_integer(BigInt::from(i))))
    });
    falling.scale(&BigRational::new(BigInt::one(), factorial(n)))
}

/// `g` truncated at `order` (exclusive), from the closed form.
pub fn series_g(order: usize) -> Result<BiSeries> {
    require_order(order)?;
    let s = RatPoly::var();
    let denominator = &(&s * &s) - &s;
    let mut coeffs = Vec::with_capacity(order);
    for n in 0..order {
        let mut numerator = binomial_in_s(n);
        match n {
            0 => numerator = &numerator - &RatPoly::one(),
            1 => numerator = &numerator - &s,
            _ => {}
        }
        let quotient = numerator.div_exact(&denominator)?;
        let identity = if n == 1 { RatPoly::one() } else { RatPoly::zero() };
        coeffs.push(&identity - &quotient);
    }
    Ok(BiSeries::new(coeffs))
}

/// `f` truncated at `order` (exclusive), from the Poincaré polynomials.
pub fn series_f(order: usize) -> Result<BiSeries> {
    require_order(order)?;
    let mut coeffs = vec![RatPoly::zero(), RatPoly::one()];
    for n in 2..order {
        let p = poincare_poly(n + 1)?.to_rational();
        coeffs.push(p.scale(&BigRational::new(BigInt::one(), factorial(n))));
    }
    Ok(BiSeries::new(coeffs))
}

pub fn render_series(s: &BiSeries) -> String {
    plain_series(s.coeffs(), "x", "s")
}

/// Checks `f(g(x)) = x` and `g(f(x)) = x` through `x^order` inclusive.
pub fn verify_inverse(order: usize) -> Result<Vec<VerificationReport>> {
    require_order(order)?;
    let f = series_f(order + 1)?;
    let g = series_g(order + 1)?;
    let x = BiSeries::var(order + 1);
    let params = [("order", order.to_string())];
    Ok(vec![
        VerificationReport::compare_with("getzler_f_of_g", &params, &f.compose(&g)?, &x, render_series),
        VerificationReport::compare_with("getzler_g_of_f", &params, &g.compose(&f)?, &x, render_series),
    ])
}

/// `dim H_i(M₀,ₙ₊₁)` for `i = 0..=n−2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyDims {
    pub n: usize,
    #[serde(serialize_with = "decimal_list")]
    pub dims: Vec<BigInt>,
}

fn decimal_list<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| d.to_string()))
}

impl HomologyDims {
    /// `Σ_i (−1)^i dims[i] q^{n−2−i}`.
    pub fn signed_poly(&self) -> IntPoly {
        let top = self.n - 2;
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for (i, d) in self.dims.iter().enumerate() {
            coeffs[top - i] = if i % 2 == 0 { d.clone() } else { -d.clone() };
        }
        IntPoly::from_coeffs(coeffs)
    }
}

/// Reads the homology of M₀,ₙ₊₁ off the xⁿ coefficient of `g`.
pub fn open_homology_dims(n: usize) -> Result<HomologyDims> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be >= 2, got {n}")));
    }
    let g = series_g(n + 1)?;
    let signed = g.coeff(n).scale(&-BigRational::from_integer(factorial(n)));
    let top = n - 2;
    if signed.degree().is_some_and(|d| d > top) {
        return Err(Error::Invariant(format!(
            "x^{n} coefficient of g has s-degree above {top}"
        )));
    }
    let mut dims = Vec::with_capacity(top + 1);
    for i in 0..=top {
        let c = signed.coeff(top - i);
        let c = if i % 2 == 0 { c } else { -c };
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Invariant(format!(
                "dim H_{i}(M_0,{}) extracted as {c}",
                n + 1
            )));
        }
        dims.push(c.to_integer());
    }
    Ok(HomologyDims { n, dims })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn rp(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::from_coeffs(cs.iter().map(|&(a, b)| r(a, b)).collect())
    }

    #[test]
    fn g_low_coefficients() {
        let g = series_g(4).unwrap();
        assert_eq!(g.coeff(0), &RatPoly::zero());
        assert_eq!(g.coeff(1), &RatPoly::one());
        assert_eq!(g.coeff(2), &rp(&[(-1, 2)]));
        // −(s − 2)/6
        assert_eq!(g.coeff(3), &rp(&[(1, 3), (-1, 6)]));
    }

    #[test]
    fn f_low_coefficients() {
        let f = series_f(5).unwrap();
        assert_eq!(f.coeff(0), &RatPoly::zero());
        assert_eq!(f.coeff(1), &RatPoly::one());
        assert_eq!(f.coeff(2), &rp(&[(1, 2)]));
        assert_eq!(f.coeff(3), &rp(&[(1, 6), (1, 6)]));
        assert_eq!(f.coeff(4), &rp(&[(1, 24), (5, 24), (1, 24)]));
    }

    #[test]
    fn order_three_cancels_by_hand() {
        // x² terms: 1/2 − 1/2
        let reports = verify_inverse(3).unwrap();
        assert!(reports.iter().all(|r| r.pass), "{reports:?}");
        assert_eq!(reports[0].lhs, "x");
    }

    #[test]
    fn binomial_polys() {
        assert_eq!(binomial_in_s(0), RatPoly::one());
        assert_eq!(binomial_in_s(2), rp(&[(0, 1), (-1, 2), (1, 2)]));
        // binom(5, 3) = 10
        assert_eq!(binomial_in_s(3).eval(&r(5, 1)), r(10, 1));
    }

    #[test]
    fn homology_dims() {
        let d = |n| open_homology_dims(n).unwrap().dims;
        let ints = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(d(2), ints(&[1]));
        assert_eq!(d(3), ints(&[1, 2]));
        assert_eq!(d(4), ints(&[1, 5, 6]));
        assert!(open_homology_dims(1).is_err());
        let json = serde_json::to_string(&open_homology_dims(4).unwrap()).unwrap();
        assert_eq!(json, r#"{"n":4,"dims":["1","5","6"]}"#);
    }

    #[test]
    fn small_orders_rejected() {
        assert!(series_g(1).is_err());
        assert!(series_f(0).is_err());
        assert!(verify_inverse(1).is_err());
    }
}
