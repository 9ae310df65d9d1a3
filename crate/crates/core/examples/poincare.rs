//! Poincaré polynomials from the recurrence, with Betti numbers and Euler
//! characteristic.
//!
//!     cargo run --example poincare -- 10

use m0n::algebra::{plain, BigInt};
use m0n::keel::poincare_poly;

fn main() -> m0n::error::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    for n in 3..=max_n {
        let p = poincare_poly(n)?;
        let euler: BigInt = p.coeffs().iter().sum();
        println!("n = {n:2}  chi = {euler:>10}  P = {}", plain(&p, "t", 2));
    }
    Ok(())
}
