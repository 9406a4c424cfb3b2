use crate::branch::zariski_invariant;
use crate::curvering::WPoly;
use crate::error::{precondition, Result};
use crate::kernel::Rational;
use crate::oneform::{nu, omega_ij, OneForm};
use crate::semiroot::SemirootSystem;

/// Outcome of the membership test `ω − ω₀₁ = Q₁ dx + Q₂ dy ∈ 𝒟₁`.
#[derive(Debug, Clone, PartialEq)]
pub struct D1Report {
    pub q1: WPoly<Rational>,
    pub q2: WPoly<Rational>,
    /// Conditions that failed; empty for a member.
    pub failures: Vec<String>,
}

impl D1Report {
    pub fn member(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `Q₁ ∈ ⟨x,y⟩²`, `Q₂ ∈ ⟨x², y⟩`, `deg_y Q₁ < v₀/e₁`,
/// `deg_y Q₂ < v₀/e₁ − 1` and `mult_x Q₁(x, 0) > v₁/v₀`.
pub fn d1_membership(s: &SemirootSystem, w: &OneForm<Rational>) -> Result<D1Report> {
    if s.genus() == 0 {
        return precondition("𝒟₁ needs a singular branch");
    }
    let diff = w.sub(&omega_ij(s, 0, 1)?);
    let (q1, q2) = (diff.a, diff.b);
    let l = s.ladder();
    let bound = l.v0() / l.e[1];
    let (v0, v1) = (s.v(0), s.v(1));
    let mut failures = Vec::new();
    if q1.terms().any(|((i, j), _)| i + j < 2) {
        failures.push("Q₁ ∉ ⟨x,y⟩²".to_string());
    }
    if q2.terms().any(|((i, j), _)| j == 0 && i < 2) {
        failures.push("Q₂ ∉ ⟨x²,y⟩".to_string());
    }
    if q1.y_degree().is_some_and(|d| d >= bound) {
        failures.push(format!("deg_y Q₁ ≥ {bound}"));
    }
    if q2.y_degree().is_some_and(|d| d + 1 >= bound) {
        failures.push(format!("deg_y Q₂ ≥ {}", bound - 1));
    }
    let mult = q1.terms().filter(|((_, j), _)| *j == 0).map(|((i, _), _)| i).min();
    if mult.is_some_and(|m| m * v0 <= v1) {
        failures.push(format!("mult_x Q₁(x,0) = {} ≤ v₁/v₀", mult.unwrap()));
    }
    Ok(D1Report { q1, q2, failures })
}

/// One-sided check `ν(ω) − v₀ ≤ λ` for a member of `𝒟₁`; the source must be
/// Tschirnhausen-normal. Returns `(ν(ω) − v₀, λ)` with `None` for λ = ∞.
pub fn d1_zariski_bound_check(s: &SemirootSystem, w: &OneForm<Rational>) -> Result<(bool, usize, Option<usize>)> {
    let report = d1_membership(s, w)?;
    if !report.member() {
        return precondition(format!("not in 𝒟₁: {}", report.failures.join(", ")));
    }
    let lambda = zariski_invariant(s.source())?.lambda;
    let excess = nu(w, s.source())? - s.v(0);
    Ok((lambda.is_none_or(|l| excess <= l), excess, lambda))
}

/// Searches `ω₀₁ + c₁ x^a y^b dx + c₂ x^p y^q dy` over small monomials for a
/// member of `𝒟₁` with `ν(ω) − v₀ = λ`.
pub fn d1_search_equality(s: &SemirootSystem, max_degree: usize) -> Result<Option<OneForm<Rational>>> {
    let lambda = match zariski_invariant(s.source())?.lambda {
        Some(l) => l,
        None => return Ok(None),
    };
    let base = omega_ij(s, 0, 1)?;
    let mut monomials = vec![None];
    for d in 0..=max_degree {
        for i in 0..=d {
            monomials.push(Some((i, d - i)));
        }
    }
    let mono = |m: Option<(usize, usize)>| match m {
        Some((i, j)) => WPoly::monomial(Rational::from_integer(1.into()), i, j),
        None => WPoly::zero(),
    };
    for m1 in &monomials {
        for m2 in &monomials {
            let w = base.add(&OneForm::new(mono(*m1), mono(*m2)));
            if !d1_membership(s, &w)?.member() {
                continue;
            }
            if let Ok(v) = nu(&w, s.source()) {
                if v >= s.v(0) && v - s.v(0) == lambda {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}
