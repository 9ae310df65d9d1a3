use num_bigint::BigInt;

use super::{guard_order, guard_strata, usage, Failure, Target};
use crate::arith::{is_prime, PrimePower};
use crate::getzler::{open_homology_dims, verify_inverse, DEFAULT_ORDER};
use crate::report::VerificationReport;
use crate::strata::{open_stratum_poly, orbit_count_direct, stratified_count, MAX_ORBIT_FIELD};
use crate::{algebra, forget, keel, zeta};

const DEFAULT_ZETA_ORDER: usize = 6;

pub(crate) fn parse_q_list(s: &str) -> Result<Vec<u64>, Failure> {
    let qs = s
        .split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<u64>().map_err(|_| usage(format!("malformed q list entry `{part}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    for &q in &qs {
        PrimePower::new(q)?;
    }
    Ok(qs)
}

pub(crate) fn run(
    target: Target,
    max_n: usize,
    qs: &[u64],
    order: Option<usize>,
) -> Result<Vec<VerificationReport>, Failure> {
    if max_n < 4 {
        return Err(usage("--max-n must be >= 4"));
    }
    let mut out = Vec::new();
    let all = target == Target::All;
    if all || target == Target::Recurrence {
        for &q in qs {
            out.extend(keel::verify_count_recurrence(max_n, q)?);
        }
    }
    if all || target == Target::Strata {
        guard_strata(max_n)?;
        out.extend(strata_checks(max_n, qs)?);
    }
    if all || target == Target::Forget {
        guard_strata(max_n)?;
        for &q in qs {
            for n in 3..max_n {
                out.push(forget::verify_forgetful_count(n, q)?);
                out.push(forget::verify_fiber_sum(n, q)?);
            }
            for n in 4..=max_n {
                out.push(forget::verify_boundary_double_count(n, q)?);
            }
        }
    }
    if all || target == Target::Getzler {
        let order = order.unwrap_or(DEFAULT_ORDER);
        guard_order(order)?;
        out.extend(verify_inverse(order)?);
        for n in 2..order {
            let dims = open_homology_dims(n)?;
            out.push(VerificationReport::compare_with(
                "open_homology_vs_open_stratum",
                &[("n", n.to_string())],
                &dims.signed_poly(),
                &open_stratum_poly(n + 1)?,
                |p| algebra::plain(p, "q", 1),
            ));
        }
    }
    if all || target == Target::Zeta {
        let order = order.unwrap_or(DEFAULT_ZETA_ORDER);
        guard_order(order)?;
        let primes: Vec<u64> = qs.iter().copied().filter(|&q| is_prime(q)).collect();
        if primes.is_empty() {
            return Err(usage("zeta verification needs at least one prime in --q"));
        }
        for n in 3..=max_n {
            for &p in &primes {
                out.extend(zeta::verify_zeta_counts(n, p, order)?);
            }
        }
    }
    Ok(out)
}

fn strata_checks(max_n: usize, qs: &[u64]) -> Result<Vec<VerificationReport>, Failure> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for &q in qs {
            out.push(VerificationReport::compare(
                "keel_vs_strata",
                &[("n", n.to_string()), ("q", q.to_string())],
                &keel::point_count(n, q)?,
                &stratified_count(n, q)?,
            ));
        }
    }
    for &q in qs.iter().filter(|&&q| is_prime(q) && q <= MAX_ORBIT_FIELD) {
        for n in 3..=max_n.min(q as usize + 1) {
            let expected: BigInt = open_stratum_poly(n)?.eval(&BigInt::from(q));
            out.push(VerificationReport::compare(
                "orbit_count",
                &[("n", n.to_string()), ("q", q.to_string())],
                &orbit_count_direct(n, q)?,
                &expected,
            ));
        }
    }
    Ok(out)
}
