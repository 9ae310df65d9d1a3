//! Getzler's series g and f, their mutual inverse under composition, and the
//! homology of the open moduli space read from g.

use m0n::getzler::{open_homology_dims, render_series, series_f, series_g, verify_inverse};

fn main() -> m0n::error::Result<()> {
    let order = 7;
    println!("g = {}", render_series(&series_g(order)?));
    println!("f = {}", render_series(&series_f(order)?));
    for r in verify_inverse(order)? {
        println!("{r}");
    }
    for n in 2..=6 {
        let h = open_homology_dims(n)?;
        let dims: Vec<String> = h.dims.iter().map(ToString::to_string).collect();
        println!("H_*(M_0,{}) = ({})", n + 1, dims.join(", "));
    }
    Ok(())
}
