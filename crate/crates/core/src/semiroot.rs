//! Canonical semiroots of a branch and the unique expansion of a polynomial in
//! products of semiroots.
//!
//! Each semiroot is the norm `Res_z(z^m − x, y − η(z))` of its truncated
//! parameterization, so roots of unity never appear.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::branch::{char_ladder, semigroup, semiroot_params, CharLadder, PuiseuxParam, Semigroup};
use crate::curvering::{intersection_multiplicity, ydiv, WPoly};
use crate::error::{truncation, Error, Result};
use crate::kernel::{min_bound, Rational, TruncSeries};

/// `F₀ = x, F₁, …, F_{g+1}` with the numerical data of the source branch.
#[derive(Debug, Clone)]
pub struct SemirootSystem {
    f: Vec<WPoly<Rational>>,
    params: Vec<PuiseuxParam<Rational>>,
    ladder: CharLadder,
    sg: Semigroup,
    source: PuiseuxParam<Rational>,
}

impl SemirootSystem {
    /// `F_i` for `0 ≤ i ≤ g + 1`.
    pub fn f(&self, i: usize) -> &WPoly<Rational> {
        &self.f[i]
    }

    pub fn all(&self) -> &[WPoly<Rational>] {
        &self.f
    }

    /// Parameterization `φ_i` of `F_i` for `1 ≤ i ≤ g + 1`.
    pub fn param(&self, i: usize) -> &PuiseuxParam<Rational> {
        &self.params[i - 1]
    }

    pub fn ladder(&self) -> &CharLadder {
        &self.ladder
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.sg
    }

    pub fn source(&self) -> &PuiseuxParam<Rational> {
        &self.source
    }

    pub fn genus(&self) -> usize {
        self.ladder.genus()
    }

    /// `v_i`, with `v_{g+1}` undefined.
    pub fn v(&self, i: usize) -> usize {
        self.sg.v[i]
    }
}

/// `Res_z(z^m − x, y − η(z))` for an exact polynomial `η`, returned monic in `y`
/// of degree `m`.
pub fn norm_polynomial(m: usize, eta: &TruncSeries<Rational>) -> WPoly<Rational> {
    // Reduce η modulo z^m − x: z^k = x^{k / m} z^{k mod m}.
    let mut g: Vec<WPoly<Rational>> = vec![WPoly::zero(); m];
    g[0] = WPoly::y();
    for (k, c) in eta.terms() {
        g[k % m] = g[k % m].sub(&WPoly::monomial(c.clone(), k / m, 0));
    }
    let d = (0..m).rev().find(|&r| !g[r].is_zero()).unwrap_or(0);
    if d == 0 {
        return g[0].pow(m);
    }
    let size = m + d;
    let mut rows = vec![vec![WPoly::zero(); size]; size];
    // Rows of z^m − x, descending powers.
    for (i, row) in rows.iter_mut().enumerate().take(d) {
        row[i] = WPoly::one();
        row[i + m] = WPoly::x().neg();
    }
    for i in 0..m {
        for r in 0..=d {
            rows[d + i][i + d - r] = g[r].clone();
        }
    }
    bareiss_det(rows)
}

/// Fraction-free Gaussian elimination; every intermediate division is exact.
pub fn bareiss_det(mut a: Vec<Vec<WPoly<Rational>>>) -> WPoly<Rational> {
    let n = a.len();
    if n == 0 {
        return WPoly::one();
    }
    let mut negate = false;
    let mut prev = WPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return WPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss step must divide exactly");
            }
            a[i][k] = WPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Builds the extended system of semiroots of a branch with rational
/// coefficients. When the source is truncated at `t^V`, `F_{g+1}` is known
/// below `x^{⌈V/n⌉}`.
pub fn canonical_semiroots(p: &PuiseuxParam<Rational>) -> Result<SemirootSystem> {
    let ladder = char_ladder(p)?;
    let sg = semigroup(&ladder);
    let params = semiroot_params(p, &ladder);
    let mut f = vec![WPoly::x()];
    for phi in &params {
        let full = norm_polynomial(phi.n(), phi.y());
        let fi = match phi.valid_below() {
            Some(v) => full.truncate_x(v.div_ceil(phi.n())),
            None => full,
        };
        f.push(fi);
    }
    let sys = SemirootSystem { f, params, ladder, sg, source: p.clone() };
    verify(&sys)?;
    Ok(sys)
}

fn verify(s: &SemirootSystem) -> Result<()> {
    let g = s.genus();
    let v0 = s.ladder.v0();
    for i in 1..=g + 1 {
        let fi = &s.f[i];
        let deg = v0 / s.ladder.e[i - 1];
        assert!(fi.is_monic_in_y() && fi.y_degree() == Some(deg), "F_{i} must be monic of y-degree {deg}");
    }
    for i in 0..=g {
        match intersection_multiplicity(&s.source, &s.f[i]) {
            Ok(v) if v == s.sg.v[i] => {}
            Ok(v) => panic!("I(F, F_{i}) = {v}, expected v_{i} = {}", s.sg.v[i]),
            Err(Error::InsufficientTruncation(m)) => return truncation(format!("I(F, F_{i}): {m}")),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

/// Sparse expansion `H = Σ u_δ F₀^{δ₀}⋯F_{g+1}^{δ_{g+1}}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SemirootExpansion {
    pub terms: BTreeMap<Vec<usize>, Rational>,
    /// Terms with `δ₀` at or above this bound are unknown.
    pub x_valid_below: Option<usize>,
}

/// Iterated `F_i`-adic expansion from `F_{g+1}` down to `F₁`, then `x`-adic.
pub fn semiroot_expand(s: &SemirootSystem, h: &WPoly<Rational>) -> SemirootExpansion {
    let g = s.genus();
    let mut out = SemirootExpansion { terms: BTreeMap::new(), x_valid_below: h.x_valid_below() };
    let mut digits = vec![0; g + 2];
    expand_level(s, h.clone(), g + 1, &mut digits, &mut out);
    out
}

fn expand_level(
    s: &SemirootSystem,
    h: WPoly<Rational>,
    level: usize,
    digits: &mut Vec<usize>,
    out: &mut SemirootExpansion,
) {
    out.x_valid_below = min_bound(out.x_valid_below, h.x_valid_below());
    if level == 0 {
        for ((i, j), c) in h.terms() {
            assert_eq!(j, 0, "F₁-adic digits must be free of y");
            digits[0] = i;
            let slot = out.terms.entry(digits.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                out.terms.remove(digits.as_slice());
            }
        }
        digits[0] = 0;
        return;
    }
    let fi = &s.f[level];
    let mut rest = h;
    let mut k = 0;
    while !rest.is_zero() {
        let (q, r) = ydiv(&rest, fi);
        if !r.is_zero() {
            digits[level] = k;
            expand_level(s, r, level - 1, digits, out);
        }
        out.x_valid_below = min_bound(out.x_valid_below, q.x_valid_below());
        rest = q;
        k += 1;
    }
    digits[level] = 0;
}

/// `Σ u_δ ∏ F_i^{δ_i}`.
pub fn resubstitute(s: &SemirootSystem, e: &SemirootExpansion) -> WPoly<Rational> {
    let mut acc = WPoly::new(std::iter::empty(), e.x_valid_below);
    for (delta, c) in &e.terms {
        let mut m = WPoly::constant(c.clone());
        for (i, &d) in delta.iter().enumerate() {
            if d > 0 {
                m = m.mul(&s.f[i].pow(d));
            }
        }
        acc = acc.add(&m);
    }
    acc
}

/// `Σ_{i≤g} δ_i v_i` of a multi-index with `δ_{g+1} = 0`.
pub fn monomial_value(s: &SemirootSystem, delta: &[usize]) -> usize {
    delta.iter().zip(&s.sg.v).map(|(d, v)| d * v).sum()
}

/// The term of least value among those with `δ_{g+1} = 0`.
pub fn leading_term<'a>(s: &SemirootSystem, e: &'a SemirootExpansion) -> Result<(&'a [usize], usize)> {
    let g = s.genus();
    let best =
        e.terms.keys().filter(|d| d[g + 1] == 0).map(|d| (d.as_slice(), monomial_value(s, d))).min_by_key(|(_, v)| *v);
    // Unknown terms carry δ₀ ≥ M, hence value ≥ M·v₀.
    let floor = e.x_valid_below.map(|m| m * s.ladder.v0());
    match (best, floor) {
        (Some((d, v)), Some(f)) if v >= f => truncation(format!("least value {v} of {d:?} not below {f}")),
        (Some(b), _) => Ok(b),
        (None, Some(f)) => truncation(format!("no term with value below {f}")),
        (None, None) => Err(Error::NoFiniteValue),
    }
}

/// `I(F, H) = min{Σ δ_i v_i : u_δ ≠ 0, δ_{g+1} = 0}`.
pub fn value_from_expansion(s: &SemirootSystem, e: &SemirootExpansion) -> Result<usize> {
    leading_term(s, e).map(|(_, v)| v)
}

/// Value of `H` through its semiroot expansion.
pub fn value_of(s: &SemirootSystem, h: &WPoly<Rational>) -> Result<usize> {
    value_from_expansion(s, &semiroot_expand(s, h))
}

impl SemirootExpansion {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, delta: &[usize]) -> Rational {
        self.terms.get(delta).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when the expansion is the single term `F^δ` with coefficient 1.
    pub fn is_single(&self, delta: &[usize]) -> bool {
        self.terms.len() == 1 && self.coeff(delta).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, ratio};
    use proptest::prelude::*;

    fn w(terms: &[(usize, usize, i64)]) -> WPoly<Rational> {
        WPoly::from_ints(terms)
    }

    fn param(n: usize, terms: &[(usize, i64)]) -> PuiseuxParam<Rational> {
        PuiseuxParam::new(n, TruncSeries::exact(terms.iter().map(|&(k, c)| (k, int(c))))).unwrap()
    }

    fn sextic() -> SemirootSystem {
        canonical_semiroots(&param(6, &[(9, 1), (12, 1), (13, 2)])).unwrap()
    }

    fn f2() -> WPoly<Rational> {
        w(&[(0, 2, 1), (3, 0, -1), (2, 1, -2), (4, 0, 1)])
    }

    #[test]
    fn sextic_semiroots() {
        let s = sextic();
        assert_eq!(s.f(0), &WPoly::x());
        assert_eq!(s.f(1), &WPoly::y());
        assert_eq!(s.f(2), &f2());
        // F = F₂³ − 48x⁸F₂ − 64x¹¹ − 64x¹³.
        let expected = f2().pow(3).sub(&f2().shift(8, 0).scale(&int(48))).sub(&w(&[(11, 0, 64), (13, 0, 64)]));
        assert_eq!(s.f(3), &expected);
        assert!(s.f(3).pullback(s.source()).ord() == crate::kernel::Order::Infinite);
    }

    #[test]
    fn small_resultants() {
        let s = canonical_semiroots(&param(2, &[(3, 1)])).unwrap();
        assert_eq!(s.f(1), &WPoly::y());
        assert_eq!(s.f(2), &w(&[(0, 2, 1), (3, 0, -1)]));
        let s = canonical_semiroots(&param(4, &[(6, 1), (7, 1)])).unwrap();
        assert_eq!(s.f(2), &w(&[(0, 2, 1), (3, 0, -1)]));
        assert_eq!(intersection_multiplicity(s.source(), s.f(2)).unwrap(), 13);
    }

    #[test]
    fn truncated_source_gives_truncated_top_semiroot() {
        let p = param(6, &[(9, 1), (12, 1), (13, 2)]).with_valid_below(40);
        let s = canonical_semiroots(&p).unwrap();
        assert_eq!(s.f(3).x_valid_below(), Some(7));
        assert_eq!(s.f(3), &sextic().f(3).truncate_x(7));
    }

    #[test]
    fn semiroot_semigroups() {
        let s = sextic();
        let l2 = char_ladder(s.param(2)).unwrap();
        assert_eq!(semigroup(&l2).v, vec![2, 3]);
    }

    #[test]
    fn expansion_examples() {
        let s = sextic();
        let e = semiroot_expand(&s, &w(&[(0, 3, 1)]));
        // y³ = y·F₂ + y·(x³ + 2x²y − x⁴), digit δ₁ ≤ 1 throughout.
        assert!(e.terms.keys().all(|d| d[1] < 2));
        assert_eq!(e.coeff(&[0, 1, 1, 0]), int(1));
        assert_eq!(resubstitute(&s, &e), w(&[(0, 3, 1)]));
        assert!(semiroot_expand(&s, &f2()).is_single(&[0, 0, 1, 0]));
        assert!(semiroot_expand(&s, &w(&[(5, 0, 1)])).is_single(&[5, 0, 0, 0]));
    }

    #[test]
    fn values_from_expansion() {
        let s = sextic();
        assert_eq!(value_of(&s, &w(&[(6, 1, 1)])).unwrap(), 45);
        assert_eq!(value_of(&s, &WPoly::x()).unwrap(), 6);
        let h2 = f2().shift(0, 2).scale(&ratio(33, 20));
        assert_eq!(value_of(&s, &h2).unwrap(), 40);
        assert_eq!(value_of(&s, s.f(3)), Err(Error::NoFiniteValue));
    }

    fn arb_poly() -> impl Strategy<Value = WPoly<Rational>> {
        prop::collection::vec((0usize..6, 0usize..8, -3i64..4), 1..6).prop_map(|ts| WPoly::from_ints(&ts))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn expansion_round_trip(h in arb_poly()) {
            let s = sextic();
            let e = semiroot_expand(&s, &h);
            prop_assert_eq!(resubstitute(&s, &e), h.clone());
            prop_assert_eq!(semiroot_expand(&s, &resubstitute(&s, &e)), e.clone());
            for d in e.terms.keys() {
                prop_assert!(d[1] < 2 && d[2] < 3);
            }
            // Distinct monomial values, and the minimum is the intersection number.
            let vals: Vec<usize> = e.terms.keys().filter(|d| d[3] == 0).map(|d| monomial_value(&s, d)).collect();
            let mut sorted = vals.clone();
            sorted.sort_unstable();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), vals.len());
            match value_from_expansion(&s, &e) {
                Ok(v) => prop_assert_eq!(v, intersection_multiplicity(s.source(), &h).unwrap()),
                Err(err) => prop_assert_eq!(err, Error::NoFiniteValue),
            }
        }
    }
}
