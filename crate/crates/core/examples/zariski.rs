//! Zariski invariant and the 𝒟₁ bound on a normalized branch.
//!
//! cargo run --example zariski

use planebranch::branch::{tschirnhausen_normalize, zariski_invariant};
use planebranch::catalog;
use planebranch::curvering::WPoly;
use planebranch::dicritical::{d1_membership, d1_search_equality, d1_zariski_bound_check};
use planebranch::oneform::{omega_ij, OneForm};

fn main() -> planebranch::Result<()> {
    let p = tschirnhausen_normalize(&catalog::sextic());
    println!("normalized: y = {}", p.y());
    let z = zariski_invariant(&p)?;
    println!("λ = {:?}, flagged exponents {:?}", z.lambda, z.flagged);

    let s = catalog::system(&p);
    let base = omega_ij(&s, 0, 1)?;
    for extra in [WPoly::from_ints(&[(3, 0, 1)]), WPoly::from_ints(&[(2, 1, -2), (4, 0, 1)]), WPoly::y()] {
        let w = base.add(&OneForm::new(extra.clone(), WPoly::zero()));
        let r = d1_membership(&s, &w)?;
        if r.member() {
            let (holds, excess, lambda) = d1_zariski_bound_check(&s, &w)?;
            println!("ω₀₁ + ({extra}) dx: ν − v₀ = {excess}, λ = {lambda:?}, bound {holds}");
        } else {
            println!("ω₀₁ + ({extra}) dx: outside 𝒟₁ ({})", r.failures.join("; "));
        }
    }
    if let Some(w) = d1_search_equality(&s, 2)? {
        println!("equality attained by A = {}, B = {}", w.a, w.b);
    }
    Ok(())
}
