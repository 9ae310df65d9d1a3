//! Betti numbers and Poincaré polynomials of M̄₀,ₙ from Keel's recurrence
//!
//! ```text
//! P_3 = 1
//! P_{n+1} = (1 + s) P_n + (s/2) Σ_{j=2}^{n-2} C(n, j) P_{j+1} P_{n-j+1}     (s = t²)
//! ```
//!
//! and the point counts `|M̄₀,ₙ(𝔽_q)| = P_n(q)`.

use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::IntPoly;
use crate::arith::{binomial, PrimePower};
use crate::error::{ensure_n_at_least, Error, Result};
use crate::report::VerificationReport;

/// Memoized `a_k(n) = b_{2k}(M̄₀,ₙ(ℂ))`, stored as one Poincaré polynomial
/// in `s = t²` per `n`. Always closed downward: it holds every `3 <= m <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    // polys[i] = P_{i+3}
    polys: Vec<IntPoly>,
}

impl Default for BettiTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable { polys: vec![IntPoly::one()] }
    }

    pub fn max_n(&self) -> usize {
        self.polys.len() + 2
    }

    fn stored(&self, n: usize) -> &IntPoly {
        &self.polys[n - 3]
    }

    /// Extends the table through `n`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        ensure_n_at_least(n, 3)?;
        while self.max_n() < n {
            let next = self.next_poly()?;
            self.polys.push(next);
        }
        Ok(())
    }

    fn next_poly(&self) -> Result<IntPoly> {
        let n = self.max_n();
        let s = IntPoly::var();
        let mut split_sum = IntPoly::zero();
        for j in 2..=n.saturating_sub(2) {
            let term = (self.stored(j + 1) * self.stored(n - j + 1)).scale(&binomial(n, j));
            split_sum = &split_sum + &term;
        }
        let two = BigInt::from(2);
        let halved = split_sum
            .coeffs()
            .iter()
            .map(|c| {
                let (h, r) = c.div_rem(&two);
                if r.is_zero() {
                    Ok(h)
                } else {
                    Err(Error::Invariant(format!(
                        "odd coefficient {c} in the split sum for P_{}",
                        n + 1
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let grown = &(&IntPoly::one() + &s) * self.stored(n);
        Ok(&grown + &(&s * &IntPoly::from_coeffs(halved)))
    }

    pub fn poincare(&mut self, n: usize) -> Result<&IntPoly> {
        self.extend_to(n)?;
        Ok(self.stored(n))
    }

    /// `a_k(n)`, zero outside `0 <= k <= n − 3`.
    pub fn betti(&mut self, n: usize, k: i64) -> Result<BigInt> {
        let p = self.poincare(n)?;
        Ok(usize::try_from(k).map(|k| p.coeff(k)).unwrap_or_else(|_| BigInt::zero()))
    }

    /// Read-only lookup of an already computed polynomial.
    pub fn get(&self, n: usize) -> Option<&IntPoly> {
        (3..=self.max_n()).contains(&n).then(|| self.stored(n))
    }
}

static SHARED: LazyLock<Mutex<BettiTable>> = LazyLock::new(|| Mutex::new(BettiTable::new()));

/// `P_n(s)` from the process-wide table.
pub fn poincare_poly(n: usize) -> Result<IntPoly> {
    let mut table = SHARED.lock().unwrap_or_else(|e| e.into_inner());
    table.poincare(n).cloned()
}

pub fn betti(n: usize, k: i64) -> Result<BigInt> {
    let mut table = SHARED.lock().unwrap_or_else(|e| e.into_inner());
    table.betti(n, k)
}

/// `|M̄₀,ₙ(𝔽_q)| = P_n(q)`; `q` must be a prime power.
pub fn point_count(n: usize, q: u64) -> Result<BigInt> {
    ensure_n_at_least(n, 3)?;
    let q = PrimePower::new(q)?;
    Ok(poincare_poly(n)?.eval(&q.as_bigint()))
}

/// Checks, for every `4 <= m <= n_max` with `m = n + 1`,
/// `|M̄₀,ₙ₊₁| = (1+q)|M̄₀,ₙ| + (q/2) Σ_{j=2}^{n-2} C(n,j) |M̄₀,ⱼ₊₁| |M̄₀,ₙ₋ⱼ₊₁|`
/// with every count taken from [`point_count`]. Stops after the first failure.
pub fn verify_count_recurrence(n_max: usize, q: u64) -> Result<Vec<VerificationReport>> {
    ensure_n_at_least(n_max, 4)?;
    PrimePower::new(q)?;
    let qq = BigInt::from(q);
    let mut reports = Vec::new();
    for n in 3..n_max {
        let lhs = point_count(n + 1, q)?;
        let mut split = BigInt::zero();
        for j in 2..=n.saturating_sub(2) {
            split += binomial(n, j) * point_count(j + 1, q)? * point_count(n - j + 1, q)?;
        }
        let rhs = BigRational::from_integer((BigInt::one() + &qq) * point_count(n, q)?)
            + BigRational::new(&qq * split, BigInt::from(2));
        let report = VerificationReport::compare(
            "count_recurrence",
            &[("n", (n + 1).to_string()), ("q", q.to_string())],
            &BigRational::from_integer(lhs),
            &rhs,
        );
        let failed = !report.pass;
        reports.push(report);
        if failed {
            break;
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn base_case() {
        assert_eq!(betti(3, 0).unwrap(), BigInt::from(1));
        assert_eq!(betti(3, 1).unwrap(), BigInt::from(0));
        assert_eq!(poincare_poly(3).unwrap(), IntPoly::one());
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(poincare_poly(4).unwrap(), ip(&[1, 1]));
        assert_eq!(poincare_poly(5).unwrap(), ip(&[1, 5, 1]));
        assert_eq!(poincare_poly(6).unwrap(), ip(&[1, 16, 16, 1]));
        assert_eq!(betti(6, 1).unwrap(), BigInt::from(16));
    }

    #[test]
    fn out_of_range_k_is_zero() {
        assert_eq!(betti(6, -1).unwrap(), BigInt::from(0));
        assert_eq!(betti(6, 4).unwrap(), BigInt::from(0));
    }

    #[test]
    fn invalid_n() {
        assert!(matches!(poincare_poly(2), Err(Error::InvalidArgument(_))));
        assert!(betti(0, 0).is_err());
        assert!(point_count(2, 2).is_err());
    }

    #[test]
    fn rejects_non_prime_power_q() {
        assert!(matches!(point_count(4, 6), Err(Error::NotPrimePower { q: 6, .. })));
        assert!(point_count(4, 1).is_err());
    }

    #[test]
    fn counts() {
        for q in [2, 3, 4, 5, 101] {
            assert_eq!(point_count(3, q).unwrap(), BigInt::from(1));
        }
        assert_eq!(point_count(4, 2).unwrap(), BigInt::from(3));
        assert_eq!(point_count(5, 2).unwrap(), BigInt::from(15));
    }

    #[test]
    fn recurrence_reports() {
        let r = verify_count_recurrence(5, 2).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|r| r.pass));
        assert_eq!(r[1].lhs, "15");
        assert!(verify_count_recurrence(8, 3).unwrap().iter().all(|r| r.pass));
        let r = verify_count_recurrence(4, 4).unwrap();
        assert_eq!((r[0].lhs.as_str(), r[0].rhs.as_str()), ("5", "5"));
        assert!(verify_count_recurrence(3, 2).is_err());
    }

    #[test]
    fn local_table_is_closed_downward() {
        let mut t = BettiTable::new();
        t.extend_to(9).unwrap();
        assert_eq!(t.max_n(), 9);
        assert!((3..=9).all(|n| t.get(n).is_some()));
        assert!(t.get(10).is_none() && t.get(2).is_none());
    }
}
