//! Small integer helpers: binomials, factorials and prime-power recognition.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing order of the prime.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn render_factorization(factors: &[(u64, u32)]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

pub fn is_prime(m: u64) -> bool {
    matches!(factorize(m).as_slice(), [(_, 1)])
}

/// Order of a finite field: `q = p^k` with `p` prime and `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    q: u64,
    p: u64,
    k: u32,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self> {
        match factorize(q).as_slice() {
            [(p, k)] => Ok(PrimePower { q, p: *p, k: *k }),
            factors => Err(Error::NotPrimePower {
                q,
                factorization: render_factorization(factors),
            }),
        }
    }

    pub fn get(self) -> u64 {
        self.q
    }

    pub fn characteristic(self) -> u64 {
        self.p
    }

    pub fn degree(self) -> u32 {
        self.k
    }

    pub fn as_bigint(self) -> BigInt {
        BigInt::from(self.q)
    }
}

impl std::fmt::Display for PrimePower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Validates that `p` is prime.
pub fn require_prime(p: u64) -> Result<u64> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Error::InvalidArgument(format!("p = {p} is not prime")))
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
