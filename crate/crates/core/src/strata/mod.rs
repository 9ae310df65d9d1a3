//! Independent point counts from the stratification of M̄₀,ₙ by dual trees.
//!
//! A stratum with dual tree `T` is a product over vertices of open moduli
//! spaces, so it has `∏_v |M₀,val(v)(𝔽_q)|` points, and
//! `|M₀,ₘ(𝔽_q)| = ∏_{j=2}^{m-2} (q − j)` (ordered tuples of distinct points
//! modulo the simply transitive action on triples).

mod enumerate;
mod orbit;
mod tree;

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use enumerate::enumerate_stable_trees;
pub use orbit::{orbit_count_direct, Configuration, Mobius, PointOnP1, MAX_ORBIT_FIELD};
pub use tree::DualTree;

use crate::algebra::IntPoly;
use crate::arith::PrimePower;
use crate::error::{ensure_n_at_least, Error, Result};

/// `∏_{j=2}^{m-2} (q − j)` as a polynomial in `q`.
pub fn open_stratum_poly(m: usize) -> Result<IntPoly> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!("m must be >= 3, got {m}")));
    }
    let q = IntPoly::var();
    Ok((2..=m.saturating_sub(2)).fold(IntPoly::one(), |acc, j| {
        &acc * &(&q - &IntPoly::constant(BigInt::from(j)))
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumInfo {
    pub tree: DualTree,
    pub count_poly: IntPoly,
    pub edge_count: usize,
}

impl StratumInfo {
    pub fn new(tree: DualTree) -> Self {
        let count_poly = tree
            .valences()
            .into_iter()
            .map(|v| open_stratum_poly(v).expect("stable valence"))
            .fold(IntPoly::one(), |acc, p| &acc * &p);
        let edge_count = tree.edge_count();
        StratumInfo { tree, count_poly, edge_count }
    }

    pub fn count_at(&self, q: &BigInt) -> BigInt {
        self.count_poly.eval(q)
    }
}

/// Every stratum of M̄₀,ₙ, in enumeration order.
#[derive(Debug, Clone)]
pub struct Strata {
    n: usize,
    strata: Vec<StratumInfo>,
}

impl Strata {
    pub fn enumerate(n: usize) -> Result<Self> {
        let strata = enumerate_stable_trees(n)?.into_iter().map(StratumInfo::new).collect();
        Ok(Strata { n, strata })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strata(&self) -> &[StratumInfo] {
        &self.strata
    }

    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    /// Sum of all stratum polynomials.
    pub fn total_poly(&self) -> IntPoly {
        self.strata.iter().fold(IntPoly::zero(), |acc, s| &acc + &s.count_poly)
    }

    pub fn count(&self, q: PrimePower) -> BigInt {
        let q = q.as_bigint();
        self.strata.iter().map(|s| s.count_at(&q)).sum()
    }

    /// `Σ_{ρ ∈ ∂M̄₀,ₙ(𝔽_q)} k(ρ)`.
    pub fn boundary_edge_sum(&self, q: PrimePower) -> BigInt {
        let q = q.as_bigint();
        self.strata
            .iter()
            .filter(|s| s.edge_count > 0)
            .map(|s| BigInt::from(s.edge_count) * s.count_at(&q))
            .sum()
    }
}

static CACHE: LazyLock<Mutex<HashMap<usize, Arc<Strata>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Process-wide memoized [`Strata::enumerate`].
pub fn strata(n: usize) -> Result<Arc<Strata>> {
    ensure_n_at_least(n, 3)?;
    if let Some(s) = CACHE.lock().unwrap_or_else(|e| e.into_inner()).get(&n) {
        return Ok(Arc::clone(s));
    }
    let built = Arc::new(Strata::enumerate(n)?);
    let mut cache = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(cache.entry(n).or_insert(built)))
}

/// `|M̄₀,ₙ(𝔽_q)|` summed stratum by stratum.
pub fn stratified_count(n: usize, q: u64) -> Result<BigInt> {
    let q = PrimePower::new(q)?;
    Ok(strata(n)?.count(q))
}

/// The point count of M̄₀,ₙ as a polynomial in `q`, summed over strata.
pub fn stratified_poly(n: usize) -> Result<IntPoly> {
    Ok(strata(n)?.total_poly())
}

pub fn boundary_edge_sum(n: usize, q: u64) -> Result<BigInt> {
    let q = PrimePower::new(q)?;
    Ok(strata(n)?.boundary_edge_sum(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn open_strata() {
        assert_eq!(open_stratum_poly(3).unwrap(), IntPoly::one());
        assert_eq!(open_stratum_poly(4).unwrap(), ip(&[-2, 1]));
        assert_eq!(open_stratum_poly(6).unwrap().eval(&BigInt::from(5)), BigInt::from(6));
        assert!(open_stratum_poly(2).is_err());
    }

    #[test]
    fn pigeonhole_vanishing() {
        for m in 4..=12usize {
            for q in 2..=(m as u64 - 2) {
                assert!(open_stratum_poly(m).unwrap().eval(&BigInt::from(q)).is_zero(), "{m} {q}");
            }
        }
    }

    #[test]
    fn counts_over_f2() {
        assert_eq!(stratified_count(3, 7).unwrap(), BigInt::from(1));
        assert_eq!(stratified_count(4, 2).unwrap(), BigInt::from(3));
        assert_eq!(stratified_count(5, 2).unwrap(), BigInt::from(15));
        assert!(stratified_count(4, 6).is_err());
    }

    #[test]
    fn boundary_sums() {
        for q in [2, 3, 4, 9] {
            assert_eq!(boundary_edge_sum(4, q).unwrap(), BigInt::from(3));
            assert_eq!(boundary_edge_sum(3, q).unwrap(), BigInt::from(0));
        }
        assert_eq!(boundary_edge_sum(5, 2).unwrap(), BigInt::from(30));
    }

    #[test]
    fn n4_total_is_q_plus_one() {
        assert_eq!(stratified_poly(4).unwrap(), ip(&[1, 1]));
    }
}
