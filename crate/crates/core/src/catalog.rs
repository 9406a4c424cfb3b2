//! Ready-made branches and foliations used throughout the tests, the
//! examples and the `selftest` command.

use crate::branch::PuiseuxParam;
use crate::curvering::WPoly;
use crate::dicritical::DicriticalProblem;
use crate::kernel::{int, ratio, Rational, TruncSeries};
use crate::semiroot::{canonical_semiroots, SemirootSystem};

fn param(n: usize, terms: &[(usize, i64)]) -> PuiseuxParam<Rational> {
    PuiseuxParam::new(n, TruncSeries::exact(terms.iter().map(|&(k, c)| (k, int(c))))).expect("n > 0")
}

/// `(t⁶, t⁹ + t¹² + 2t¹³)`, genus two with `Γ = ⟨6, 9, 22⟩`.
pub fn sextic() -> PuiseuxParam<Rational> {
    param(6, &[(9, 1), (12, 1), (13, 2)])
}

/// Tschirnhausen normal form `(t⁶, t⁹ + 2t¹³)` of [`sextic`].
pub fn sextic_normal() -> PuiseuxParam<Rational> {
    param(6, &[(9, 1), (13, 2)])
}

/// The ordinary cusp `(t², t³)`.
pub fn cusp() -> PuiseuxParam<Rational> {
    param(2, &[(3, 1)])
}

/// `(t², t³ + t⁴)`, the extra separatrix of [`zeta3`] at `u = 0`.
pub fn cusp_with_quartic_tail() -> PuiseuxParam<Rational> {
    param(2, &[(3, 1), (4, 1)])
}

/// `(t⁴, t⁶ + t⁷)`, genus two with `Γ = ⟨4, 6, 13⟩`.
pub fn quartic() -> PuiseuxParam<Rational> {
    param(4, &[(6, 1), (7, 1)])
}

pub fn system(p: &PuiseuxParam<Rational>) -> SemirootSystem {
    canonical_semiroots(p).expect("catalog branches are exact and primitive")
}

fn problem(
    p: &PuiseuxParam<Rational>,
    i: usize,
    j: usize,
    h1: WPoly<Rational>,
    h2: WPoly<Rational>,
) -> DicriticalProblem {
    DicriticalProblem::new(system(p), i, j, h1, h2).expect("catalog problems satisfy the hypotheses")
}

/// `ζ₁ = y·ω₀₁ − d(x⁵)` on the sextic.
pub fn zeta1() -> DicriticalProblem {
    problem(&sextic(), 0, 1, WPoly::y(), WPoly::from_ints(&[(5, 0, -1)]))
}

/// `ζ₂ = y·ω₀₂ + d(x⁶y)` on the sextic.
pub fn zeta2() -> DicriticalProblem {
    problem(&sextic(), 0, 2, WPoly::y(), WPoly::from_ints(&[(6, 1, 1)]))
}

/// `ζ₃ = x·ω₁₂ + d((33/20) y² F₂)` on the sextic.
pub fn zeta3() -> DicriticalProblem {
    let s = system(&sextic());
    let h2 = s.f(2).shift(0, 2).scale(&ratio(33, 20));
    DicriticalProblem::new(s, 1, 2, WPoly::x(), h2).expect("hypotheses hold")
}

/// `y·ω₀₁ − d(x⁴)`: the criterion holds with equality, so not dicritical.
pub fn zeta_equality() -> DicriticalProblem {
    problem(&sextic(), 0, 1, WPoly::y(), WPoly::from_ints(&[(4, 0, -1)]))
}

/// `ω₀₁ + d(x⁴)` on the cusp (`H₁ = 1`).
pub fn cusp_radial() -> DicriticalProblem {
    problem(&cusp(), 0, 1, WPoly::one(), WPoly::from_ints(&[(4, 0, 1)]))
}

/// `y·ω₀₁ − d(x⁵)` on the cusp.
pub fn cusp_zeta() -> DicriticalProblem {
    problem(&cusp(), 0, 1, WPoly::y(), WPoly::from_ints(&[(5, 0, -1)]))
}

/// Golden problems with their solver orders and the family sign convention
/// (`true` when the printed family uses the parameter `−u`).
pub fn golden_problems() -> Vec<(&'static str, DicriticalProblem, usize, bool)> {
    vec![("zeta1", zeta1(), 10, false), ("zeta2", zeta2(), 25, false), ("zeta3", zeta3(), 21, true)]
}

/// Exact `ν(ζ)` values of the golden problems.
pub const GOLDEN_NU: [usize; 3] = [27, 41, 41];

/// Sample `u₀` values away from the poles of every golden family.
pub fn sample_parameters() -> [Rational; 3] {
    [int(3), ratio(-1, 2), ratio(5, 7)]
}
