//! Schematic dual graphs in DOT for branches of genus one to three.
//!
//! cargo run --example dual_graph | dot -Tsvg > graphs.svg

use planebranch::branch::CharLadder;
use planebranch::graph::emit_dual_graph_dot;

fn main() -> planebranch::Result<()> {
    for beta in [&[2, 3][..], &[6, 9, 13], &[8, 12, 14, 15]] {
        println!("// β = {beta:?}");
        print!("{}", emit_dual_graph_dot(&CharLadder::from_beta(beta)?));
    }
    Ok(())
}
