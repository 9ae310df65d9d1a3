//! Fibers of the map forgetting the last marked point, stratum by stratum,
//! and the resulting identities between counts for n and n + 1.
//!
//!     cargo run --example forgetful_map -- 5 4

use m0n::forget::{
    fiber_size_breakdown, verify_boundary_double_count, verify_fiber_sum, verify_forgetful_count,
    FiberBreakdown,
};
use m0n::strata::strata;

fn main() -> m0n::error::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(5) as usize;
    let q = args.next().flatten().unwrap_or(4);

    for s in strata(n)?.strata() {
        match fiber_size_breakdown(&s.tree, q)? {
            FiberBreakdown::Counts(a) => println!(
                "{:<24} {} free + {} at points + {} at nodes = {}",
                s.tree.serialization(), a.same_component, a.marked_point_sprouts, a.node_sprouts, a.total
            ),
            FiberBreakdown::EmptyStratum { max_valence } => {
                println!("{:<24} empty over F_{q} (a component has {max_valence} special points)", s.tree.serialization())
            }
        }
    }
    println!();
    println!("{}", verify_forgetful_count(n, q)?);
    println!("{}", verify_fiber_sum(n, q)?);
    println!("{}", verify_boundary_double_count(n, q)?);
    Ok(())
}
