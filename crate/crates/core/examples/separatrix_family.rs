//! Dicriticality criterion and separatrix families on the sextic, with a few
//! specializations of the parameter.
//!
//! cargo run --example separatrix_family

use planebranch::catalog;
use planebranch::dicritical::{dicritical_test, solve_separatrix_family, specialize_family};
use planebranch::kernel::{int, ratio};

fn main() -> planebranch::Result<()> {
    for (name, p, k, _) in catalog::golden_problems() {
        let v = dicritical_test(&p)?;
        println!("{name}: {v}");
        let f = solve_separatrix_family(&p, k)?;
        println!("  x = t^{}", f.x_exp());
        for (l, c) in f.param().y().terms() {
            println!("  t^{l:<2}  {c}");
        }
        for u0 in [int(0), int(1), ratio(-1, 3)] {
            match specialize_family(&f, &u0) {
                Ok(psi) => println!("  u = {u0}: y = {}", psi.y()),
                Err(e) => println!("  u = {u0}: {e}"),
            }
        }
    }
    let v = dicritical_test(&catalog::zeta_equality())?;
    println!("equality case: {v}");
    Ok(())
}
