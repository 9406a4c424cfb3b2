//! Schematic dual graph of `F₀·F₁⋯F_{g+1}` in DOT.
//!
//! Only the combinatorial skeleton is drawn: a chain `P₀ – T₁ – ⋯ – T_g` of
//! starred triple points, a leg from each `T_i` down to an end `E_i` carrying
//! the arrow `F̃_i`, `F̃₀` leaving the root and `F̃_{g+1}` leaving `T_g`.
//! Divisor chains between these vertices are not resolved.

use std::fmt::Write;

use crate::branch::CharLadder;

fn arrow(out: &mut String, from: &str, k: usize) {
    writeln!(out, "  F{k} [shape=plaintext, label=\"F̃{}\"];", subscript(k)).unwrap();
    writeln!(out, "  {from} -- F{k} [dir=forward];").unwrap();
}

fn subscript(k: usize) -> String {
    k.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap()).collect()
}

pub fn emit_dual_graph_dot(l: &CharLadder) -> String {
    let g = l.genus();
    let mut out = String::new();
    out.push_str("graph dual {\n  rankdir=LR;\n  node [shape=point];\n  edge [dir=none];\n");
    out.push_str("  P0 [label=\"\"];\n");
    arrow(&mut out, "P0", 0);
    let mut prev = "P0".to_string();
    for i in 1..=g {
        let t = format!("T{i}");
        writeln!(out, "  {t} [shape=star, label=\"T{}\", xlabel=\"T{}\"];", subscript(i), subscript(i)).unwrap();
        writeln!(out, "  {prev} -- {t};").unwrap();
        writeln!(out, "  E{i} [label=\"\"];").unwrap();
        writeln!(out, "  {t} -- E{i};").unwrap();
        arrow(&mut out, &format!("E{i}"), i);
        prev = t;
    }
    arrow(&mut out, &prev, g + 1);
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(s: &str, pat: &str) -> usize {
        s.matches(pat).count()
    }

    #[test]
    fn genus_one() {
        let dot = emit_dual_graph_dot(&CharLadder::from_beta(&[2, 3]).unwrap());
        assert_eq!(count(&dot, "shape=star"), 1);
        assert_eq!(count(&dot, "dir=forward"), 3);
        assert!(dot.contains("T1 -- F2"));
    }

    #[test]
    fn sextic_shape() {
        let dot = emit_dual_graph_dot(&CharLadder::from_beta(&[6, 9, 13]).unwrap());
        for e in ["P0 -- F0", "P0 -- T1", "T1 -- T2", "T1 -- E1", "E1 -- F1", "T2 -- E2", "E2 -- F2", "T2 -- F3"] {
            assert!(dot.contains(e), "{e}");
        }
        assert!(dot.contains("F̃₃"));
        assert_eq!(count(&dot, "dir=forward"), 4);
    }

    #[test]
    fn genus_three_chain() {
        let dot = emit_dual_graph_dot(&CharLadder::from_beta(&[8, 12, 14, 15]).unwrap());
        assert_eq!(count(&dot, "shape=star"), 3);
        assert!(dot.contains("T2 -- T3"));
        assert_eq!(count(&dot, "dir=forward"), 5);
    }
}
