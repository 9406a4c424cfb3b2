//! Canonical semiroots of the sextic and the semiroot expansion of a
//! polynomial, with the value read off the leading term.
//!
//! cargo run --example semiroots

use planebranch::catalog;
use planebranch::curvering::{intersection_multiplicity, WPoly};
use planebranch::kernel::format_rational;
use planebranch::semiroot::{leading_term, resubstitute, semiroot_expand};

fn main() -> planebranch::Result<()> {
    let s = catalog::system(&catalog::sextic());
    for (i, f) in s.all().iter().enumerate() {
        println!("F{i} = {f}");
    }

    let h = WPoly::from_ints(&[(0, 3, 1), (7, 0, -2), (2, 2, 5), (1, 4, 1)]);
    let e = semiroot_expand(&s, &h);
    println!("\nH = {h}");
    for (delta, c) in &e.terms {
        println!("  {} · F^{delta:?}", format_rational(c));
    }
    let (lead, v) = leading_term(&s, &e)?;
    println!("leading multi-index {lead:?}, value {v}");
    println!("pullback order {}", intersection_multiplicity(s.source(), &h)?);
    assert_eq!(resubstitute(&s, &e), h);
    Ok(())
}
