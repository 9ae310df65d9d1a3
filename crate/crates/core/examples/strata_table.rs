//! Lists every stable dual tree for a given n with the number of points of
//! its open stratum.
//!
//!     cargo run --example strata_table -- 5 3

use m0n::algebra::{plain, BigInt};
use m0n::strata::strata;

fn main() -> m0n::error::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(5) as usize;
    let q = BigInt::from(args.next().flatten().unwrap_or(3));
    let all = strata(n)?;
    for s in all.strata() {
        println!("{:<28} k={}  {:<16} {}", s.tree.serialization(), s.edge_count, plain(&s.count_poly, "q", 1), s.count_at(&q));
    }
    println!("{} strata, total {}", all.len(), plain(&all.total_poly(), "q", 1));
    Ok(())
}
