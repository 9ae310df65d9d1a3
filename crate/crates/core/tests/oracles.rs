//! Independent oracles for the enumerative and series layers.

use std::collections::HashSet;

use m0n::algebra::{BigInt, BigRational, IntPoly, RatPoly};
use m0n::forget::{
    fiber_size, fiber_size_breakdown, verify_boundary_double_count, FiberBreakdown,
};
use m0n::getzler::{open_homology_dims, series_f};
use m0n::keel::{point_count, poincare_poly};
use m0n::strata::{
    boundary_edge_sum, enumerate_stable_trees, open_stratum_poly, strata, stratified_count,
    stratified_poly, DualTree,
};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const PRIME_POWERS: [u64; 8] = [2, 3, 4, 5, 7, 8, 9, 11];

// Published counts of stable leg-labeled trees (boundary strata of M̄₀,ₙ).
#[test]
fn stable_tree_counts() {
    let expected = [1usize, 4, 26, 236, 2752, 39208];
    for (n, want) in (3..=8).zip(expected) {
        assert_eq!(strata(n).unwrap().len(), want, "n={n}");
    }
}

// Adding leg n+1 to an n-tree: onto one of V vertices, onto one of V-1 edges,
// or paired with one of n legs on a fresh vertex. Every (n+1)-tree arises once.
#[test]
fn insertion_count_recovers_next_level() {
    for n in 3..=7 {
        let predicted: usize = strata(n)
            .unwrap()
            .strata()
            .iter()
            .map(|s| 2 * s.tree.vertex_count() - 1 + n)
            .sum();
        assert_eq!(predicted, strata(n + 1).unwrap().len(), "n={n}");
    }
}

#[test]
fn golden_serializations() {
    let names = |n| -> Vec<String> {
        enumerate_stable_trees(n).unwrap().iter().map(|t| t.serialization()).collect()
    };
    assert_eq!(names(3), ["(1 2 3)"]);
    assert_eq!(names(4), ["(1 2 3 4)", "(1 (2 3) 4)", "(1 (2 4) 3)", "(1 2 (3 4))"]);
    let five = [
        "(1 2 3 4 5)",
        "(1 (2 3 4) 5)",
        "(1 (2 3 5) 4)",
        "(1 (2 3) 4 5)",
        "(1 (2 4 5) 3)",
        "(1 (2 4) 3 5)",
        "(1 (2 5) 3 4)",
        "(1 2 (3 4 5))",
        "(1 2 (3 4) 5)",
        "(1 2 (3 5) 4)",
        "(1 2 3 (4 5))",
        "(1 ((2 3) 4) 5)",
        "(1 ((2 3) 5) 4)",
        "(1 ((2 4) 3) 5)",
        "(1 ((2 4) 5) 3)",
        "(1 ((2 5) 3) 4)",
        "(1 ((2 5) 4) 3)",
        "(1 (2 (3 4)) 5)",
        "(1 (2 (3 5)) 4)",
        "(1 (2 (4 5)) 3)",
        "(1 (2 3) (4 5))",
        "(1 (2 4) (3 5))",
        "(1 (2 5) (3 4))",
        "(1 2 ((3 4) 5))",
        "(1 2 ((3 5) 4))",
        "(1 2 (3 (4 5)))",
    ];
    assert_eq!(names(5), five);
}

fn lagrange(points: &[(BigInt, BigInt)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut term = RatPoly::constant(BigRational::from_integer(yi.clone()));
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = BigRational::from_integer(xi - xj);
            let factor = RatPoly::from_coeffs(vec![
                BigRational::from_integer(-xj) / &denom,
                BigRational::from_integer(1.into()) / &denom,
            ]);
            term = term * factor;
        }
        acc = acc + term;
    }
    acc
}

#[test]
fn interpolated_stratified_counts_match_poincare() {
    for n in 3..=8 {
        let points: Vec<_> = PRIME_POWERS[..n - 2]
            .iter()
            .map(|&q| (BigInt::from(q), stratified_count(n, q).unwrap()))
            .collect();
        let interpolated = lagrange(&points).to_integer().expect("integral interpolant");
        assert_eq!(interpolated, poincare_poly(n).unwrap(), "n={n}");
        assert_eq!(stratified_poly(n).unwrap(), poincare_poly(n).unwrap(), "n={n}");
    }
}

fn random_labeled_tree(rng: &mut StdRng, v: usize) -> Vec<(usize, usize)> {
    if v == 1 {
        return Vec::new();
    }
    if v == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..v - 2).map(|_| rng.gen_range(0..v)).collect();
    let mut degree = vec![1usize; v];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(v - 1);
    for &c in &code {
        let leaf = (0..v).find(|&u| degree[u] == 1).unwrap();
        edges.push((c, leaf));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..v).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn random_stable_tree(rng: &mut StdRng, n: usize) -> DualTree {
    loop {
        let v = if n == 3 { 1 } else { rng.gen_range(2..=n - 2) };
        let edges = random_labeled_tree(rng, v);
        let legs: Vec<usize> = (0..n).map(|_| rng.gen_range(0..v)).collect();
        if let Ok(t) = DualTree::new(v, &edges, &legs) {
            return t;
        }
    }
}

#[test]
fn fiber_breakdown_on_random_trees() {
    let mut rng = StdRng::seed_from_u64(0x5eed_f1be);
    let mut seen = HashSet::new();
    let (mut deep, mut empty) = (0, 0);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let tree = random_stable_tree(&mut rng, n);
        let q = PRIME_POWERS[rng.gen_range(0..PRIME_POWERS.len())];
        let k = tree.edge_count();
        match fiber_size_breakdown(&tree, q).unwrap() {
            FiberBreakdown::Counts(a) => {
                assert_eq!(a.marked_point_sprouts, BigInt::from(n));
                assert_eq!(a.node_sprouts, BigInt::from(k));
                let fresh = BigInt::from((k as u64 + 1) * (q + 1)) - (n + 2 * k);
                assert_eq!(a.same_component, fresh);
                assert_eq!(a.total, fiber_size(k, q).unwrap().size);
                deep += usize::from(k >= 2);
            }
            FiberBreakdown::EmptyStratum { max_valence } => {
                assert!(max_valence as u64 > q + 1, "{tree} over F_{q}");
                empty += 1;
            }
        }
        seen.insert(tree);
    }
    assert!(seen.len() > 50 && deep > 20 && empty > 0, "{} {deep} {empty}", seen.len());
}

// Excess of |M̄₀,ₙ₊₁| over (q+1)·|M̄₀,ₙ| is q times the node-weighted stratum sum.
#[test]
fn double_count_matches_brute_edge_sum() {
    for n in 4..=7 {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let r = verify_boundary_double_count(n, q).unwrap();
            assert!(r.pass, "{r}");
            let lhs = stratified_count(n + 1, q).unwrap()
                - (BigInt::from(q) + 1) * point_count(n, q).unwrap();
            let by_hand = BigInt::from(q) * boundary_edge_sum(n, q).unwrap();
            assert_eq!(lhs, by_hand, "n={n} q={q}");
        }
    }
}

#[test]
fn open_homology_encodes_open_stratum_count() {
    for n in 2..=7 {
        let dims = open_homology_dims(n).unwrap();
        assert_eq!(dims.dims.len(), n - 1);
        assert!(dims.dims.iter().all(|d| *d > BigInt::zero()));
        assert_eq!(dims.signed_poly(), open_stratum_poly(n + 1).unwrap(), "n={n}");
    }
}

#[test]
fn open_stratum_poly_counts_configurations() {
    for m in 3..=8usize {
        let p = open_stratum_poly(m).unwrap();
        for q in PRIME_POWERS {
            let direct: BigInt = (2..=m as i64 - 2).map(|j| BigInt::from(q as i64 - j)).product();
            assert_eq!(p.eval(&BigInt::from(q)), direct);
        }
    }
}

#[test]
fn scaled_f_coefficients_are_poincare_polynomials() {
    let f = series_f(9).unwrap();
    let mut factorial = BigInt::from(1);
    for n in 2..9 {
        factorial *= n;
        let scaled = f.coeff(n).scale(&BigRational::from_integer(factorial.clone()));
        let ints: IntPoly = scaled.to_integer().expect("integral");
        assert!(ints.is_palindromic(), "n={n}");
        assert_eq!(ints, poincare_poly(n + 1).unwrap());
    }
}
