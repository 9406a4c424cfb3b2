//! Runs the golden suite in-process and prints a line per criterion.
//!
//! cargo run --example selftest

use planebranch::selftest::{run_all, DEFAULT_SEED};

fn main() {
    let reports = run_all(DEFAULT_SEED);
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
}
