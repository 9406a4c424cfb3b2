use std::fmt;

use crate::curvering::{intersection_multiplicity, WPoly};
use crate::error::{precondition, Error, Result};
use crate::kernel::Rational;
use crate::oneform::{omega_ij, OneForm};
use crate::semiroot::SemirootSystem;

/// A foliation `ω = H₁ ω_ij + dH₂` attached to the triple point `T_j` of a
/// branch.
#[derive(Debug, Clone)]
pub struct DicriticalProblem {
    system: SemirootSystem,
    i: usize,
    j: usize,
    h1: WPoly<Rational>,
    h2: WPoly<Rational>,
}

impl DicriticalProblem {
    /// Checks `0 ≤ i < j ≤ g`, `H₁ ≠ 0`, `H₂(0,0) = 0` and
    /// `deg_y H₁, deg_y H₂ < v₀/e_j`.
    pub fn new(system: SemirootSystem, i: usize, j: usize, h1: WPoly<Rational>, h2: WPoly<Rational>) -> Result<Self> {
        let g = system.genus();
        if !(i < j && j <= g) {
            return precondition(format!("need 0 ≤ i < j ≤ g = {g}, got ({i}, {j})"));
        }
        if h1.is_zero() {
            return precondition("H₁ must be nonzero");
        }
        if !h2.coeff(0, 0).eq(&Rational::from_integer(0.into())) {
            return precondition("H₂ must vanish at the origin");
        }
        let bound = system.ladder().v0() / system.ladder().e[j];
        for (name, h) in [("H₁", &h1), ("H₂", &h2)] {
            if h.y_degree().is_some_and(|d| d >= bound) {
                return precondition(format!("deg_y {name} must be below v₀/e_j = {bound}"));
            }
        }
        Ok(DicriticalProblem { system, i, j, h1, h2 })
    }

    pub fn system(&self) -> &SemirootSystem {
        &self.system
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn h1(&self) -> &WPoly<Rational> {
        &self.h1
    }

    pub fn h2(&self) -> &WPoly<Rational> {
        &self.h2
    }

    /// `H₁ ω_ij + dH₂`.
    pub fn form(&self) -> OneForm<Rational> {
        omega_ij(&self.system, self.i, self.j)
            .expect("indices checked at construction")
            .mul_fn(&self.h1)
            .add(&OneForm::exact_differential(&self.h2))
    }

    pub fn vij(&self) -> usize {
        self.system.v(self.i) + self.system.v(self.j)
    }
}

/// The three numbers compared by the dicriticality criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicriticalVerdict {
    pub i_h1: usize,
    pub vij: usize,
    /// `None` stands for `I(F, H₂) = ∞` (`H₂ = 0`).
    pub i_h2: Option<usize>,
    pub dicritical: bool,
}

impl DicriticalVerdict {
    pub fn lhs(&self) -> usize {
        self.i_h1 + self.vij
    }
}

impl fmt::Display for DicriticalVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rhs = self.i_h2.map_or("∞".to_string(), |v| v.to_string());
        let rel = if self.dicritical { "<" } else { "≥" };
        write!(f, "{} = {} + {} {rel} {rhs}", self.lhs(), self.i_h1, self.vij)
    }
}

/// `I(F, H₁) + v_i + v_j < I(F, H₂)`.
pub fn dicritical_test(p: &DicriticalProblem) -> Result<DicriticalVerdict> {
    let src = p.system.source();
    let i_h1 = intersection_multiplicity(src, &p.h1)?;
    let i_h2 = if p.h2.is_zero() {
        None
    } else {
        match intersection_multiplicity(src, &p.h2) {
            Ok(v) => Some(v),
            Err(Error::NoFiniteValue) => None,
            Err(e) => return Err(e),
        }
    };
    let vij = p.vij();
    let dicritical = i_h2.is_none_or(|v| i_h1 + vij < v);
    Ok(DicriticalVerdict { i_h1, vij, i_h2, dicritical })
}
