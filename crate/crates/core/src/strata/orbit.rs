//! Brute-force PGL₂(𝔽_p) orbit counting on ordered configurations of
//! distinct points of ℙ¹(𝔽_p), for small primes p.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::is_prime;
use crate::error::{ensure_n_at_least, Error, Result};

/// Largest field the explicit enumerator accepts.
pub const MAX_ORBIT_FIELD: u64 = 7;

/// A point of ℙ¹(𝔽_p) = 𝔽_p ∪ {∞}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum PointOnP1 {
    /// An element of 𝔽_p, kept in `[0, p)`.
    Finite(u64),
    Infinity,
}

impl PointOnP1 {
    /// Every point of ℙ¹(𝔽_p); there are `p + 1`.
    pub fn all(p: u64) -> Vec<PointOnP1> {
        (0..p).map(PointOnP1::Finite).chain([PointOnP1::Infinity]).collect()
    }

    fn homogeneous(self) -> (u64, u64) {
        match self {
            PointOnP1::Finite(x) => (x, 1),
            PointOnP1::Infinity => (1, 0),
        }
    }

    fn from_homogeneous(x: u64, y: u64, p: u64) -> PointOnP1 {
        debug_assert!(x != 0 || y != 0);
        if y == 0 {
            PointOnP1::Infinity
        } else {
            PointOnP1::Finite(x * inverse(y, p) % p)
        }
    }
}

impl fmt::Display for PointOnP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointOnP1::Finite(x) => write!(f, "{x}"),
            PointOnP1::Infinity => f.write_str("inf"),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inverse(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// An ordered tuple of pairwise distinct points on one component.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Configuration {
    points: Vec<PointOnP1>,
}

impl Configuration {
    pub fn new(points: Vec<PointOnP1>) -> Result<Self> {
        let distinct: HashSet<_> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::InvalidArgument("configuration points must be distinct".into()));
        }
        Ok(Configuration { points })
    }

    pub fn points(&self) -> &[PointOnP1] {
        &self.points
    }

    /// Image under the unique Möbius map taking the first three points to
    /// `0, 1, ∞`. Needs at least three points.
    pub fn normalized(&self, p: u64) -> Configuration {
        let m = Mobius::to_standard_frame(self.points[0], self.points[1], self.points[2], p);
        Configuration { points: self.points.iter().map(|&z| m.apply(z)).collect() }
    }
}

/// `z ↦ (a z + b) / (c z + d)` over 𝔽_p with `ad − bc ≠ 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mobius {
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    p: u64,
}

impl Mobius {
    pub fn new(a: u64, b: u64, c: u64, d: u64, p: u64) -> Option<Mobius> {
        let (a, b, c, d) = (a % p, b % p, c % p, d % p);
        (!(a * d + p * p - b * c).is_multiple_of(p)).then_some(Mobius { a, b, c, d, p })
    }

    pub fn apply(&self, z: PointOnP1) -> PointOnP1 {
        let p = self.p;
        let (x, y) = z.homogeneous();
        PointOnP1::from_homogeneous(
            (self.a * x + self.b * y) % p,
            (self.c * x + self.d * y) % p,
            p,
        )
    }

    /// Sends distinct `z1, z2, z3` to `0, 1, ∞`:
    /// `z ↦ [det(z,z1)·det(z2,z3) : det(z,z3)·det(z2,z1)]`.
    pub fn to_standard_frame(z1: PointOnP1, z2: PointOnP1, z3: PointOnP1, p: u64) -> Mobius {
        let det = |(u0, u1): (u64, u64), (v0, v1): (u64, u64)| (u0 * v1 + p * p - u1 * v0) % p;
        let (h1, h2, h3) = (z1.homogeneous(), z2.homogeneous(), z3.homogeneous());
        let k23 = det(h2, h3);
        let k21 = det(h2, h1);
        // det(z, h) = z0·h.1 − z1·h.0 as a row vector (h.1, −h.0)
        Mobius::new(
            k23 * h1.1 % p,
            k23 * ((p - h1.0) % p) % p,
            k21 * h3.1 % p,
            k21 * ((p - h3.0) % p) % p,
            p,
        )
        .expect("distinct points give an invertible map")
    }
}

/// Number of PGL₂(𝔽_q)-orbits of ordered `n`-tuples of distinct points of
/// ℙ¹(𝔽_q), found by normalizing every tuple. Prime `q <= 7` only.
pub fn orbit_count_direct(n: usize, q: u64) -> Result<BigInt> {
    ensure_n_at_least(n, 3)?;
    if !is_prime(q) {
        return Err(Error::UnsupportedField(q));
    }
    if q > MAX_ORBIT_FIELD {
        return Err(Error::ResourceGuard { what: "q", value: q, limit: MAX_ORBIT_FIELD });
    }
    if n as u64 > q + 1 {
        return Ok(BigInt::from(0));
    }
    let points = PointOnP1::all(q);
    let mut classes: HashSet<Vec<PointOnP1>> = HashSet::new();
    let mut tuple = Vec::with_capacity(n);
    let mut used = vec![false; points.len()];
    visit_tuples(&points, n, &mut tuple, &mut used, &mut |t| {
        let config = Configuration { points: t.to_vec() };
        let normal = config.normalized(q);
        debug_assert_eq!(
            &normal.points[..3],
            &[PointOnP1::Finite(0), PointOnP1::Finite(1), PointOnP1::Infinity]
        );
        classes.insert(normal.points[3..].to_vec());
    });
    Ok(BigInt::from(classes.len()))
}

fn visit_tuples(
    points: &[PointOnP1],
    n: usize,
    tuple: &mut Vec<PointOnP1>,
    used: &mut [bool],
    f: &mut impl FnMut(&[PointOnP1]),
) {
    if tuple.len() == n {
        f(tuple);
        return;
    }
    for i in 0..points.len() {
        if !used[i] {
            used[i] = true;
            tuple.push(points[i]);
            visit_tuples(points, n, tuple, used, f);
            tuple.pop();
            used[i] = false;
        }
    }
}
