//! Fibers of the map M̄₀,ₙ₊₁ → M̄₀,ₙ that forgets the last marked point, and
//! the counting identities built from them.
//!
//! Over a curve `ρ` with `k(ρ)` nodes, the fiber has `(q+1) + q·k(ρ)`
//! points: `(k+1)(q+1) − n − 2k` free positions on the existing components,
//! `n` new components sprouted at marked points, and `k` sprouted at nodes.
//! Everything here is aggregated over strata instead of built curve by curve.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{binomial, PrimePower};
use crate::error::{ensure_n_at_least, Error, Result};
use crate::keel::point_count;
use crate::report::VerificationReport;
use crate::strata::{strata, DualTree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberCount {
    pub k_rho: usize,
    pub q: u64,
    #[serde(serialize_with = "crate::report::decimal")]
    pub size: BigInt,
}

/// `|π⁻¹(ρ)| = (q + 1) + q·k(ρ)`; `k_rho = 0` is the open stratum.
pub fn fiber_size(k_rho: usize, q: u64) -> Result<FiberCount> {
    let qq = PrimePower::new(q)?.as_bigint();
    let size = &qq + 1 + &qq * BigInt::from(k_rho);
    Ok(FiberCount { k_rho, q, size })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberAddends {
    /// Free points left on the existing components.
    #[serde(serialize_with = "crate::report::decimal")]
    pub same_component: BigInt,
    /// Bubbles at the `n` marked points.
    #[serde(serialize_with = "crate::report::decimal")]
    pub marked_point_sprouts: BigInt,
    /// Bubbles at the `k` nodes.
    #[serde(serialize_with = "crate::report::decimal")]
    pub node_sprouts: BigInt,
    #[serde(serialize_with = "crate::report::decimal")]
    pub total: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FiberBreakdown {
    /// Some component has more special points than ℙ¹(𝔽_q) has points.
    EmptyStratum { max_valence: usize },
    Counts(FiberAddends),
}

/// Splits the fiber over a curve of type `tree` into its three sources.
pub fn fiber_size_breakdown(tree: &DualTree, q: u64) -> Result<FiberBreakdown> {
    let qq = PrimePower::new(q)?;
    let max_valence = tree.valences().into_iter().max().unwrap_or(0);
    if max_valence as u64 > qq.get() + 1 {
        return Ok(FiberBreakdown::EmptyStratum { max_valence });
    }
    let k = BigInt::from(tree.edge_count());
    let n = BigInt::from(tree.n());
    let q1 = qq.as_bigint() + 1;
    let same_component = (&k + 1) * &q1 - &n - 2 * &k;
    let total = &same_component + &n + &k;
    let expected = fiber_size(tree.edge_count(), q)?.size;
    if total != expected {
        return Err(Error::Invariant(format!(
            "fiber addends sum to {total}, expected {expected} for {tree}"
        )));
    }
    Ok(FiberBreakdown::Counts(FiberAddends {
        same_component,
        marked_point_sprouts: n,
        node_sprouts: k,
        total,
    }))
}

fn params(n: usize, q: u64) -> [(&'static str, String); 2] {
    [("n", n.to_string()), ("q", q.to_string())]
}

/// `|M̄₀,ₙ₊₁(𝔽_q)| = (q+1)|M̄₀,ₙ(𝔽_q)| + q Σ_{ρ∈∂} k(ρ)`, with every term from
/// the stratum enumeration.
pub fn verify_forgetful_count(n: usize, q: u64) -> Result<VerificationReport> {
    ensure_n_at_least(n, 3)?;
    let qq = PrimePower::new(q)?;
    let base = strata(n)?;
    let lhs = strata(n + 1)?.count(qq);
    let rhs = base.count(qq) * (qq.as_bigint() + 1) + qq.as_bigint() * base.boundary_edge_sum(qq);
    Ok(VerificationReport::compare("forgetful_count", &params(n, q), &lhs, &rhs))
}

/// `Σ_{ρ∈∂M̄₀,ₙ} k(ρ) = ½ Σ_{j=2}^{n-2} C(n,j) |M̄₀,ⱼ₊₁| |M̄₀,ₙ₋ⱼ₊₁|`.
///
/// The left side comes from the strata, the right from the recurrence
/// counts. Every boundary curve is glued exactly `2k(ρ)` ways, so an odd
/// unhalved sum is an error rather than a failed comparison.
pub fn verify_boundary_double_count(n: usize, q: u64) -> Result<VerificationReport> {
    ensure_n_at_least(n, 4)?;
    let qq = PrimePower::new(q)?;
    let lhs = strata(n)?.boundary_edge_sum(qq);
    let mut double = BigInt::zero();
    for j in 2..=n - 2 {
        double += binomial(n, j) * point_count(j + 1, q)? * point_count(n - j + 1, q)?;
    }
    let (rhs, odd) = double.div_rem(&BigInt::from(2));
    if !odd.is_zero() {
        return Err(Error::OddDoubleCount { n, sum: double.to_string() });
    }
    Ok(VerificationReport::compare("boundary_double_count", &params(n, q), &lhs, &rhs))
}

/// `Σ_strata |S(𝔽_q)| · |π⁻¹(ρ_S)| = |M̄₀,ₙ₊₁(𝔽_q)|`.
pub fn verify_fiber_sum(n: usize, q: u64) -> Result<VerificationReport> {
    ensure_n_at_least(n, 3)?;
    let qq = PrimePower::new(q)?;
    let qb = qq.as_bigint();
    let mut lhs = BigInt::zero();
    for s in strata(n)?.strata() {
        lhs += s.count_at(&qb) * fiber_size(s.edge_count, q)?.size;
    }
    let rhs = strata(n + 1)?.count(qq);
    Ok(VerificationReport::compare("fiber_sum", &params(n, q), &lhs, &rhs))
}
