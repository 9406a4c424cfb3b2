use num_traits::{One, Zero};

use crate::branch::PuiseuxParam;
use crate::curvering::intersection_multiplicity;
use crate::error::{precondition, Error, Result};
use crate::kernel::{RatFunc, TruncSeries};
use crate::oneform::pullback_form_capped;
use crate::semiroot::{leading_term, semiroot_expand};

use super::problem::{dicritical_test, DicriticalProblem};

/// The one-parameter family `ψ_u = (t^{β₀/e_j}, Σ a_l(u) t^l)` of separatrices.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparatrixFamily {
    param: PuiseuxParam<RatFunc>,
    /// Exponent `β_j/e_j` carrying the parameter `u`.
    u_exponent: usize,
    /// Exponent of `F_j` in the leading semiroot monomial of `H₁`.
    gamma1j: usize,
}

impl SeparatrixFamily {
    pub fn new(param: PuiseuxParam<RatFunc>, u_exponent: usize, gamma1j: usize) -> Self {
        SeparatrixFamily { param, u_exponent, gamma1j }
    }

    pub fn param(&self) -> &PuiseuxParam<RatFunc> {
        &self.param
    }

    pub fn x_exp(&self) -> usize {
        self.param.n()
    }

    pub fn u_exponent(&self) -> usize {
        self.u_exponent
    }

    pub fn gamma1j(&self) -> usize {
        self.gamma1j
    }

    /// Coefficients are certified below this exponent.
    pub fn valid_below(&self) -> usize {
        self.param.valid_below().expect("families are always truncated")
    }

    pub fn coeff(&self, l: usize) -> RatFunc {
        self.param.coeff(l)
    }

    /// The family read with parameter `−u`.
    pub fn negate_parameter(&self) -> Self {
        SeparatrixFamily { param: self.param.map(RatFunc::negate_argument), ..self.clone() }
    }
}

/// Shift `s` with `k_ij = k − s` relating the order of the first nonzero
/// pullback coefficient to the exponent it determines:
/// `s = I(F_{j+1}, H₁) + (v_i + v_j)/e_j − β_j/e_j − 1`.
pub fn solver_shift(p: &DicriticalProblem) -> Result<i64> {
    let s = p.system();
    let j = p.j();
    let ej = s.ladder().e[j];
    let i_h1 = intersection_multiplicity(s.param(j + 1), p.h1())?;
    let i_src = intersection_multiplicity(s.source(), p.h1())?;
    if i_h1 * ej != i_src {
        return precondition(format!("I(F, H₁) = {i_src} differs from e_j · I(F_(j+1), H₁) = {}", i_h1 * ej));
    }
    Ok((i_h1 + p.vij() / ej) as i64 - (s.ladder().beta[j] / ej) as i64 - 1)
}

/// Builds `ψ_u` coefficient by coefficient over ℚ(u), until the pullback of
/// `ω` vanishes below `t^{K + s}`; the family is then certified below `t^K`.
///
/// Each step locates the least nonzero pullback coefficient `t^k`, introduces
/// the unknown at `l = k − s`, and solves for it from two evaluations (unknown
/// set to 0 and to 1), the dependence being affine.
pub fn solve_separatrix_family(p: &DicriticalProblem, order: usize) -> Result<SeparatrixFamily> {
    let verdict = dicritical_test(p)?;
    if !verdict.dicritical {
        return precondition(format!("not dicritical at T_{}: {verdict}", p.j()));
    }
    let s = p.system();
    let j = p.j();
    let ej = s.ladder().e[j];
    let n = s.ladder().v0() / ej;
    let beta = s.ladder().beta[j] / ej;
    let shift = solver_shift(p)?;
    let target = order as i64 + shift;
    if target <= 0 {
        return precondition(format!("order {order} too small for shift {shift}"));
    }
    let target = target as usize;

    let prefix = s
        .source()
        .y()
        .terms()
        .take_while(|(k, _)| *k < s.ladder().beta[j])
        .map(|(k, c)| (k / ej, RatFunc::constant(c.clone())));
    let mut y = TruncSeries::exact(prefix.chain([(beta, RatFunc::u())]));
    let form = p.form().lift();
    let pull = |y: &TruncSeries<RatFunc>, cap: usize| {
        let param = PuiseuxParam::new(n, y.clone()).expect("positive index");
        pullback_form_capped(&form, &param, Some(cap))
    };

    let mut last_l = beta;
    let mut series = pull(&y, target);
    loop {
        let first = series.terms().next().map(|(k, c)| (k, c.clone()));
        let Some((k, c0)) = first else { break };
        let l = k as i64 - shift;
        if l <= last_l as i64 {
            return Err(Error::SolverStall {
                order: k,
                detail: format!("unknown exponent {l} does not exceed {last_l}"),
            });
        }
        let l = l as usize;
        let probe = pull(&y.with_coeff(l, RatFunc::one()), k + 1);
        if let Some((lower, _)) = probe.terms().find(|(e, _)| *e < k) {
            return Err(Error::SolverStall {
                order: k,
                detail: format!("unknown at t^{l} perturbs the pullback at t^{lower}"),
            });
        }
        let slope = probe.coeff_or_zero(k) - &c0;
        if slope.is_zero() {
            return Err(Error::SolverStall { order: k, detail: format!("zero slope for the unknown at t^{l}") });
        }
        let a = -(c0 / slope);
        y = y.with_coeff(l, a);
        last_l = l;
        series = pull(&y, target);
        if let Some((next, _)) = series.terms().next() {
            if next <= k {
                return Err(Error::SolverStall { order: next, detail: "pullback order did not increase".into() });
            }
        }
    }

    let expansion = semiroot_expand(s, p.h1());
    let (delta, _) = leading_term(s, &expansion)?;
    let gamma1j = delta[j];
    let param = PuiseuxParam::new(n, y.truncate(order))?;
    if gamma1j == 0 {
        debug_assert!(param.y().terms().all(|(_, c)| c.is_polynomial()));
    }
    Ok(SeparatrixFamily { param, u_exponent: beta, gamma1j })
}
