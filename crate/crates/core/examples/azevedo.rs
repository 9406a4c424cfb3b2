//! Writes a 1-form as H₁(n x dy − m y dx) + dH₂.
//!
//! cargo run --example azevedo

use planebranch::curvering::WPoly;
use planebranch::oneform::{azevedo_decompose, OneForm};

fn main() -> planebranch::Result<()> {
    // (6xy) dy − (9y² + 5x⁴) dx
    let w = OneForm::new(WPoly::from_ints(&[(0, 2, -9), (4, 0, -5)]), WPoly::from_ints(&[(1, 1, 6)]));
    let pair = azevedo_decompose(&w, 6, 9)?;
    println!("H1 = {}", pair.h1);
    println!("H2 = {}", pair.h2);

    let w = OneForm::new(WPoly::from_ints(&[(1, 2, 3), (2, 0, 1)]), WPoly::from_ints(&[(0, 3, -1), (3, 1, 2)]));
    let pair = azevedo_decompose(&w, 2, 3)?;
    println!("\nH1 = {}\nH2 = {}", pair.h1, pair.h2);
    assert_eq!(pair.reconstruct(), w);
    Ok(())
}
