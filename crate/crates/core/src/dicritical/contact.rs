use std::fmt;

use num_traits::{Signed, Zero};

use crate::branch::{CharLadder, PuiseuxParam, Semigroup};
use crate::curvering::intersection_multiplicity;
use crate::error::{precondition, truncation, Error, Result};
use crate::kernel::{format_rational, int, to_integer, Order, Rational};
use crate::oneform::nu;
use crate::semiroot::norm_polynomial;

use super::problem::{dicritical_test, DicriticalProblem};
use super::solver::SeparatrixFamily;

/// Evaluates every coefficient of the family at `u = u₀`.
///
/// `u₀ = 0` is refused unless `γ_{1j} = 0`; a coefficient with a pole at
/// `u₀` gives `PoleAtPoint`.
pub fn specialize_family(f: &SeparatrixFamily, u0: &Rational) -> Result<PuiseuxParam<Rational>> {
    let y = f.param().y().try_map(|c| c.eval(u0))?;
    if u0.is_zero() && f.gamma1j() != 0 {
        return precondition(format!("u = 0 needs γ_1j = 0, have {}", f.gamma1j()));
    }
    PuiseuxParam::new(f.x_exp(), y)
}

/// `ψ⋆`: the member at `u = c_{β_j}`, the source branch's own coefficient.
pub fn special_separatrix(p: &DicriticalProblem, f: &SeparatrixFamily) -> Result<PuiseuxParam<Rational>> {
    let beta_j = p.system().ladder().beta[p.j()];
    let c = p.system().source().coeff(beta_j);
    specialize_family(f, &c)
}

/// Normalized coincidence order of two aligned Puiseux expansions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContactValue {
    Exact(Rational),
    /// The expansions agree as far as both are known.
    AtLeast(Rational),
    Infinite,
}

impl ContactValue {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            ContactValue::Exact(c) => Some(c),
            _ => None,
        }
    }
}

impl fmt::Display for ContactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContactValue::Exact(c) => write!(f, "{}", format_rational(c)),
            ContactValue::AtLeast(c) => write!(f, "≥ {}", format_rational(c)),
            ContactValue::Infinite => write!(f, "∞"),
        }
    }
}

/// `ord_t(y_p(t^{n_q}) − y_q(t^{n_p})) / (n_p n_q)` for aligned expansions.
pub fn contact(p: &PuiseuxParam<Rational>, q: &PuiseuxParam<Rational>) -> ContactValue {
    let (np, nq) = (p.n(), q.n());
    let d = p.y().substitute_power(nq).sub(&q.y().substitute_power(np));
    let den = int((np * nq) as i64);
    match d.ord() {
        Order::Finite(k) => ContactValue::Exact(int(k as i64) / den),
        Order::AtLeast(k) => ContactValue::AtLeast(int(k as i64) / den),
        Order::Infinite => ContactValue::Infinite,
    }
}

/// `(ν(ω) − I(F, H₁) − v_i − v_j + β_j) / v₀`.
pub fn contact_value_formula(p: &DicriticalProblem, nu_omega: usize) -> Result<Rational> {
    let v = dicritical_test(p)?;
    let s = p.system();
    let num = nu_omega as i64 - v.i_h1 as i64 - v.vij as i64 + s.ladder().beta[p.j()] as i64;
    Ok(int(num) / int(s.ladder().v0() as i64))
}

/// Intersection multiplicity of `F` with a branch of multiplicity `n'` from
/// their contact `c`:
/// `I = c·v₀·n'` when `c < β₁/v₀`, otherwise
/// `I = n'(n_q v_q + v₀ c − β_q)/(n₀⋯n_q)` for `β_q/v₀ ≤ c < β_{q+1}/v₀`.
pub fn merle_intersection(l: &CharLadder, s: &Semigroup, c: &Rational, n_other: usize) -> Result<usize> {
    if !c.is_positive() {
        return precondition("contact must be positive");
    }
    let v0 = int(l.v0() as i64);
    let np = int(n_other as i64);
    let q = (1..=l.genus()).rev().find(|&q| int(l.beta[q] as i64) <= c * &v0);
    let value = match q {
        None => c * &v0 * &np,
        Some(q) => {
            let prod: usize = l.nseq[..=q].iter().product();
            let inner = int((l.nseq[q] * s.v[q]) as i64) + &v0 * c - int(l.beta[q] as i64);
            &np * inner / int(prod as i64)
        }
    };
    to_integer(&value).and_then(|v| usize::try_from(v).ok()).ok_or_else(|| {
        Error::NonIntegralResult(format!(
            "c = {}, n' = {n_other} gives {}",
            format_rational(c),
            format_rational(&value)
        ))
    })
}

/// `I(F, F⋆) = ν(ω) − I(F, H₁) + (n_j − 1) v_j − v_i`.
pub fn special_intersection(p: &DicriticalProblem, nu_omega: usize) -> Result<i64> {
    let v = dicritical_test(p)?;
    let s = p.system();
    let (i, j) = (p.i(), p.j());
    Ok(nu_omega as i64 - v.i_h1 as i64 + ((s.ladder().nseq[j] - 1) * s.v(j)) as i64 - s.v(i) as i64)
}

/// The numbers compared by the genus-one identity
/// `ν(ω) + μ − 1 = I(F, H₁·F⋆) = I(F, A F_y − B F_x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusOneIdentity {
    pub nu: usize,
    pub mu: usize,
    pub i_h1_fstar: usize,
    pub i_wedge: usize,
}

impl GenusOneIdentity {
    pub fn holds(&self) -> bool {
        self.nu + self.mu - 1 == self.i_h1_fstar && self.i_h1_fstar == self.i_wedge
    }
}

/// Evaluates both sides on a genus-one branch; `F⋆` is rebuilt from `ψ⋆` as
/// a norm polynomial known below `x^{⌈K/n'⌉}`.
pub fn lambda_g1_identity_check(p: &DicriticalProblem, f: &SeparatrixFamily) -> Result<GenusOneIdentity> {
    let s = p.system();
    if s.genus() != 1 {
        return precondition(format!("identity stated for genus one, branch has genus {}", s.genus()));
    }
    if !dicritical_test(p)?.dicritical {
        return precondition("the foliation is not dicritical");
    }
    let star = special_separatrix(p, f)?;
    let fstar = norm_polynomial(star.n(), star.y()).truncate_x(f.valid_below().div_ceil(star.n()));
    let src = s.source();
    let form = p.form();
    let nu = nu(&form, src)?;
    let i_h1_fstar = intersection_multiplicity(src, &p.h1().mul(&fstar))?;
    let i_wedge = intersection_multiplicity(src, &form.wedge(s.f(2)))?;
    if fstar.x_valid_below().is_some_and(|m| i_h1_fstar >= m * s.ladder().v0()) {
        return truncation("I(F, H₁F⋆) not below the truncation of F⋆");
    }
    Ok(GenusOneIdentity { nu, mu: s.semigroup().mu, i_h1_fstar, i_wedge })
}
