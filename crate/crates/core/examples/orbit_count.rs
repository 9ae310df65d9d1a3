//! Brute-force count of PGL₂(𝔽_p)-orbits of n distinct points on ℙ¹(𝔽_p),
//! against the closed form ∏ (p − j).

use m0n::algebra::BigInt;
use m0n::strata::{open_stratum_poly, orbit_count_direct};

fn main() -> m0n::error::Result<()> {
    for p in [2u64, 3, 5, 7] {
        for n in 3..=(p as usize + 1) {
            let orbits = orbit_count_direct(n, p)?;
            let closed = open_stratum_poly(n)?.eval(&BigInt::from(p));
            println!("p = {p}  n = {n}  orbits = {orbits:>4}  closed form = {closed:>4}");
        }
    }
    Ok(())
}
