//! Special separatrices, their contact with the branch and the intersection
//! numbers from Merle's formula.
//!
//! cargo run --example contact

use planebranch::catalog;
use planebranch::dicritical::{
    contact, contact_value_formula, merle_intersection, solve_separatrix_family, special_intersection,
    special_separatrix,
};
use planebranch::oneform::nu;

fn main() -> planebranch::Result<()> {
    for (name, p, k, _) in catalog::golden_problems() {
        let s = p.system();
        let f = solve_separatrix_family(&p, k)?;
        let star = special_separatrix(&p, &f)?;
        let nu_w = nu(&p.form(), s.source())?;
        let c = contact_value_formula(&p, nu_w)?;
        println!("{name}: ν = {nu_w}");
        println!("  ψ⋆ = (t^{}, {})", star.n(), star.y());
        println!("  contact {} (closed form {c})", contact(s.source(), &star));
        println!(
            "  I(F, F⋆) = {} by Merle, {} in closed form",
            merle_intersection(s.ladder(), s.semigroup(), &c, star.n())?,
            special_intersection(&p, nu_w)?
        );
    }
    Ok(())
}
