//! Point counts of M̄₀,ₙ over small fields, computed twice: by evaluating the
//! Poincaré polynomial and by summing over boundary strata.
//!
//!     cargo run --example point_count -- 6 9

use m0n::keel::point_count;
use m0n::strata::stratified_count;

fn main() -> m0n::error::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(6) as usize;
    let q = args.next().flatten().unwrap_or(9);
    let by_poly = point_count(n, q)?;
    let by_strata = stratified_count(n, q)?;
    println!("|M_0,{n}(F_{q})| = {by_poly} (polynomial), {by_strata} (strata)");
    if by_poly != by_strata {
        std::process::exit(1);
    }
    Ok(())
}
