//! Zeta functions `Z(T) = exp Σ_r N_r T^r / r` of ℙⁿ and M̄₀,ₙ, kept as
//! products of factors `(1 − p^j T)^{−e_j}`.
//!
//! For both families `e_j` is the Betti number `b_{2j}` and the point count
//! over `𝔽_{p^r}` is `Σ_j e_j p^{jr}`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

use crate::algebra::Series;
use crate::arith::require_prime;
use crate::error::{ensure_n_at_least, Error, Result};
use crate::keel::{point_count, poincare_poly};
use crate::report::VerificationReport;

/// The factor `(1 − p^j T)^{−exponent}` of a zeta function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZetaFactor {
    pub j: u32,
    #[serde(rename = "exp", serialize_with = "crate::report::decimal")]
    pub exponent: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactoredZeta {
    pub p: u64,
    pub factors: Vec<ZetaFactor>,
}

impl FactoredZeta {
    /// Factors with zero exponent are dropped; each `j` may appear once.
    pub fn new(p: u64, factors: impl IntoIterator<Item = (u32, BigInt)>) -> Result<Self> {
        require_prime(p)?;
        let mut out: Vec<ZetaFactor> = Vec::new();
        for (j, exponent) in factors {
            if out.iter().any(|f| f.j == j) {
                return Err(Error::InvalidArgument(format!("repeated zeta factor j = {j}")));
            }
            if !exponent.is_zero() {
                out.push(ZetaFactor { j, exponent });
            }
        }
        out.sort_by_key(|f| f.j);
        Ok(FactoredZeta { p, factors: out })
    }

    /// `Σ_j e_j p^{jr}`: the number of `𝔽_{p^r}`-points.
    pub fn count_over_extension(&self, r: u32) -> BigInt {
        let p = BigInt::from(self.p);
        self.factors
            .iter()
            .map(|f| &f.exponent * Pow::pow(&p, f.j * r))
            .sum()
    }

    /// Multiplies out the product as a power series in `T`, truncated at
    /// `order` (exclusive).
    pub fn expand(&self, order: usize) -> Series {
        let mut acc = Series::one(order);
        for f in &self.factors {
            // (1 − cT)^{−e} = Σ_m C(e+m−1, m) c^m T^m
            let c = BigRational::from_integer(Pow::pow(&BigInt::from(self.p), f.j));
            let e = BigRational::from_integer(f.exponent.clone());
            let mut coeffs = Vec::with_capacity(order);
            let mut term = BigRational::one();
            for m in 0..order {
                if m > 0 {
                    let mm = BigRational::from_integer(BigInt::from(m));
                    term = term * (&e + &mm - BigRational::one()) / mm * &c;
                }
                coeffs.push(term.clone());
            }
            acc = acc.mul(&Series::new(coeffs)).expect("same order");
        }
        acc
    }

    fn pieces(&self, positive: bool, latex: bool) -> Vec<String> {
        self.factors
            .iter()
            .filter(|f| f.exponent.is_positive() == positive)
            .map(|f| {
                let c = num_traits::pow(BigInt::from(self.p), f.j as usize);
                let lin = if c.is_one() { "1-T".to_string() } else { format!("1-{c}T") };
                let e = f.exponent.abs();
                match (e.is_one(), latex) {
                    (true, _) => format!("({lin})"),
                    (false, false) => format!("({lin})^{e}"),
                    (false, true) => format!("({lin})^{{{e}}}"),
                }
            })
            .collect()
    }

    pub fn latex(&self) -> String {
        let join = |ps: Vec<String>| if ps.is_empty() { "1".to_string() } else { ps.concat() };
        format!(
            "\\frac{{{}}}{{{}}}",
            join(self.pieces(false, true)),
            join(self.pieces(true, true))
        )
    }
}

/// `1/((1-T)(1-2T)^5(1-4T))`
impl fmt::Display for FactoredZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.pieces(false, false);
        let den = self.pieces(true, false);
        let num = if num.is_empty() { "1".to_string() } else { num.concat() };
        match den.len() {
            0 => f.write_str(&num),
            1 => write!(f, "{num}/{}", den[0]),
            _ => write!(f, "{num}/({})", den.concat()),
        }
    }
}

/// `Z_{ℙⁿ}(T) = 1/((1 − T)(1 − pT)⋯(1 − pⁿT))`
pub fn zeta_projective(n_dim: u32, p: u64) -> Result<FactoredZeta> {
    FactoredZeta::new(p, (0..=n_dim).map(|j| (j, BigInt::one())))
}

/// `Z_{M̄₀,ₙ}(T) = ∏_j (1 − p^j T)^{−b_{2j}}`
pub fn zeta_moduli(n: usize, p: u64) -> Result<FactoredZeta> {
    ensure_n_at_least(n, 3)?;
    let poly = poincare_poly(n)?;
    FactoredZeta::new(p, poly.coeffs().iter().enumerate().map(|(j, b)| (j as u32, b.clone())))
}

/// `T d/dT log Z(T) = Σ_{r>=1} (Σ_j e_j p^{jr}) T^r`, through `T^order`.
pub fn log_derivative_series(z: &FactoredZeta, order: usize) -> Result<Series> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be >= 1".into()));
    }
    let coeffs = (0..=order)
        .map(|r| {
            if r == 0 {
                BigRational::zero()
            } else {
                BigRational::from_integer(z.count_over_extension(r as u32))
            }
        })
        .collect();
    Ok(Series::new(coeffs))
}

/// `exp Σ_{r=1}^{len} N_r T^r / r` from the counts `N_1, N_2, …`, truncated
/// after `T^{len}`.
pub fn zeta_from_counts(counts: &[BigInt]) -> Result<Series> {
    let mut log = vec![BigRational::zero()];
    for (i, c) in counts.iter().enumerate() {
        log.push(BigRational::new(c.clone(), BigInt::from(i + 1)));
    }
    Series::new(log).exp()
}

/// Compares the `T^r` coefficient of the log-derivative of `Z_{M̄₀,ₙ}` with
/// `point_count(n, p^r)` for `r = 1..=order`.
pub fn verify_zeta_counts(n: usize, p: u64, order: usize) -> Result<Vec<VerificationReport>> {
    let z = zeta_moduli(n, p)?;
    let series = log_derivative_series(&z, order)?;
    let mut reports = Vec::with_capacity(order);
    for r in 1..=order {
        let q = u64::try_from(num_traits::pow(BigInt::from(p), r))
            .map_err(|_| Error::InvalidArgument(format!("p^r = {p}^{r} overflows u64")))?;
        let rhs = BigRational::from_integer(point_count(n, q)?);
        reports.push(VerificationReport::compare(
            "zeta_log_derivative",
            &[("n", n.to_string()), ("p", p.to_string()), ("r", r.to_string())],
            series.coeff(r),
            &rhs,
        ));
    }
    Ok(reports)
}
