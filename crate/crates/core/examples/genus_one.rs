//! On a genus-one branch the value of a dicritical form, the Milnor number
//! and the special separatrix are tied by
//! ν(ω) + μ − 1 = I(F, H₁·F⋆) = I(F, A F_y − B F_x).
//!
//! cargo run --example genus_one

use planebranch::catalog;
use planebranch::dicritical::{lambda_g1_identity_check, solve_separatrix_family};

fn main() -> planebranch::Result<()> {
    for (name, p) in [("ω₀₁ + d(x⁴)", catalog::cusp_radial()), ("y ω₀₁ − d(x⁵)", catalog::cusp_zeta())]
    {
        let f = solve_separatrix_family(&p, 12)?;
        let id = lambda_g1_identity_check(&p, &f)?;
        println!(
            "{name} on the cusp: ν = {}, μ = {}, I(F, H₁F⋆) = {}, I(F, ω∧dF) = {}, holds: {}",
            id.nu,
            id.mu,
            id.i_h1_fstar,
            id.i_wedge,
            id.holds()
        );
    }
    Ok(())
}
