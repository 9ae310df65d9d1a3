//! The zeta function of M̄₀,ₙ over 𝔽_p: factored form, its power series,
//! and the point counts read back from T d/dT log Z.

use m0n::keel::point_count;
use m0n::zeta::{log_derivative_series, zeta_moduli};

fn main() -> m0n::error::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(6) as usize;
    let p = args.next().flatten().unwrap_or(2);
    let order = 5;

    let z = zeta_moduli(n, p)?;
    println!("Z(T) = {z}");
    let expanded: Vec<String> = z.expand(order + 1).coeffs().iter().map(ToString::to_string).collect();
    println!("Z(T) coefficients: {}", expanded.join(", "));
    let log_d = log_derivative_series(&z, order)?;
    for r in 1..=order {
        println!("r = {r}  coefficient {:>14}  |M(F_{p}^{r})| = {}", log_d.coeff(r), point_count(n, p.pow(r as u32))?);
    }
    Ok(())
}
