//! Characteristic exponents, semigroup, Milnor number and Zariski invariant
//! of a few branches.
//!
//! cargo run --example invariants

use planebranch::branch::{char_ladder, semigroup, tschirnhausen_normalize, zariski_invariant, PuiseuxParam};
use planebranch::catalog;
use planebranch::kernel::Rational;

fn report(name: &str, p: &PuiseuxParam<Rational>) -> planebranch::Result<()> {
    let l = char_ladder(p)?;
    let s = semigroup(&l);
    let z = zariski_invariant(&tschirnhausen_normalize(p))?;
    println!("{name}: y = {}", p.y());
    println!("  β = {:?}, e = {:?}, n = {:?}", l.beta, l.e, l.nseq);
    println!(
        "  Γ = ⟨{}⟩, μ = {}, {} gaps",
        s.v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "),
        s.mu,
        s.gaps().len()
    );
    match z.lambda {
        Some(l) => println!("  λ = {l}"),
        None => println!("  λ = ∞"),
    }
    Ok(())
}

fn main() -> planebranch::Result<()> {
    report("cusp", &catalog::cusp())?;
    report("sextic", &catalog::sextic())?;
    report("quartic", &catalog::quartic())?;
    let p = PuiseuxParam::from_terms(
        4,
        &[(6, Rational::from_integer(1.into())), (9, Rational::from_integer(3.into()))],
        None,
    )?;
    report("(t⁴, t⁶ + 3t⁹)", &p)
}
