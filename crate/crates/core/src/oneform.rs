//! Holomorphic 1-forms `A dx + B dy`: pullback along a branch, value `ν`, the
//! forms `ω_ij` built from semiroots, and the decomposition
//! `ω = H₁(n x dy − m y dx) + dH₂`.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;

use crate::branch::PuiseuxParam;
use crate::curvering::{intersection_multiplicity, partials, WPoly};
use crate::error::{precondition, truncation, Error, Result};
use crate::kernel::{int, min_bound, Field, Order, RatFunc, Rational, TruncSeries};
use crate::semiroot::SemirootSystem;

/// `ω = A dx + B dy`.
#[derive(Debug, Clone, PartialEq)]
pub struct OneForm<K> {
    pub a: WPoly<K>,
    pub b: WPoly<K>,
}

impl<K: Field> OneForm<K> {
    pub fn new(a: WPoly<K>, b: WPoly<K>) -> Self {
        OneForm { a, b }
    }

    /// `dH = H_x dx + H_y dy`.
    pub fn exact_differential(h: &WPoly<K>) -> Self {
        let (hx, hy) = partials(h);
        OneForm { a: hx, b: hy }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        OneForm { a: self.a.add(&rhs.a), b: self.b.add(&rhs.b) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        OneForm { a: self.a.sub(&rhs.a), b: self.b.sub(&rhs.b) }
    }

    /// `h·ω`.
    pub fn mul_fn(&self, h: &WPoly<K>) -> Self {
        OneForm { a: self.a.mul(h), b: self.b.mul(h) }
    }

    pub fn scale(&self, c: &K) -> Self {
        OneForm { a: self.a.scale(c), b: self.b.scale(c) }
    }

    /// The radial form `n x dy − m y dx`.
    pub fn radial(n: usize, m: usize) -> Self {
        OneForm { a: WPoly::monomial(-K::from_int(m as i64), 0, 1), b: WPoly::monomial(K::from_int(n as i64), 1, 0) }
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L + Copy) -> OneForm<L> {
        OneForm { a: self.a.map(f), b: self.b.map(f) }
    }

    /// Coefficient of `dx ∧ dy` in `ω ∧ dG`: `A·G_y − B·G_x`.
    pub fn wedge(&self, g: &WPoly<K>) -> WPoly<K> {
        let (gx, gy) = partials(g);
        self.a.mul(&gy).sub(&self.b.mul(&gx))
    }
}

impl OneForm<Rational> {
    pub fn lift(&self) -> OneForm<RatFunc> {
        OneForm { a: self.a.lift(), b: self.b.lift() }
    }
}

/// `φ*(A)·x'(t) + φ*(B)·y'(t)`.
pub fn pullback_form<K: Field>(w: &OneForm<K>, p: &PuiseuxParam<K>) -> TruncSeries<K> {
    pullback_form_capped(w, p, None)
}

pub fn pullback_form_capped<K: Field>(w: &OneForm<K>, p: &PuiseuxParam<K>, cap: Option<usize>) -> TruncSeries<K> {
    let n = p.n();
    let dx = TruncSeries::monomial(K::from_int(n as i64), n - 1);
    let dy = p.y().derive();
    let a = w.a.pullback_capped(p, cap).mul_capped(&dx, cap);
    let b = w.b.pullback_capped(p, cap.map(|c| c + 1)).mul_capped(&dy, cap);
    a.add(&b)
}

/// `ν(ω) = ord_t φ*(ω) + 1`, as an order marker shifted by one.
pub fn value<K: Field>(w: &OneForm<K>, p: &PuiseuxParam<K>) -> Order {
    match pullback_form(w, p).ord() {
        Order::Finite(k) => Order::Finite(k + 1),
        Order::AtLeast(n) => Order::AtLeast(n + 1),
        Order::Infinite => Order::Infinite,
    }
}

/// `ν(ω)` as an integer; an identically vanishing pullback of exact data is
/// `NoFiniteValue` (the branch is invariant).
pub fn nu<K: Field>(w: &OneForm<K>, p: &PuiseuxParam<K>) -> Result<usize> {
    match value(w, p) {
        Order::Finite(k) => Ok(k),
        Order::AtLeast(n) => truncation(format!("pullback of the form vanishes below t^{}", n - 1)),
        Order::Infinite => Err(Error::NoFiniteValue),
    }
}

/// `ω_ij = v_i F_i dF_j − v_j F_j dF_i`.
pub fn omega_ij(s: &SemirootSystem, i: usize, j: usize) -> Result<OneForm<Rational>> {
    if !(i < j && j <= s.genus()) {
        return precondition(format!("ω_ij needs 0 ≤ i < j ≤ g, got ({i}, {j})"));
    }
    let (fi, fj) = (s.f(i), s.f(j));
    let (vi, vj) = (int(s.v(i) as i64), int(s.v(j) as i64));
    let dfi = OneForm::exact_differential(fi);
    let dfj = OneForm::exact_differential(fj);
    Ok(dfj.mul_fn(&fi.scale(&vi)).sub(&dfi.mul_fn(&fj.scale(&vj))))
}

/// The pencil member `a F_j^{α_i} − b F_i^{α_j}` with `α = v / gcd(v_i, v_j)`.
pub fn omega_ij_base_separatrices(
    s: &SemirootSystem,
    i: usize,
    j: usize,
    (a, b): (Rational, Rational),
) -> Result<WPoly<Rational>> {
    if a.is_zero() && b.is_zero() {
        return precondition("pencil point (0, 0)");
    }
    let (vi, vj) = (s.v(i), s.v(j));
    let d = vi.gcd(&vj);
    Ok(s.f(j).pow(vi / d).scale(&a).sub(&s.f(i).pow(vj / d).scale(&b)))
}

/// `H₁`, `H₂` with `ω = H₁(n x dy − m y dx) + dH₂` and `H₂(0, 0) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct AzevedoPair {
    pub h1: WPoly<Rational>,
    pub h2: WPoly<Rational>,
    pub n: usize,
    pub m: usize,
}

impl AzevedoPair {
    pub fn reconstruct(&self) -> OneForm<Rational> {
        OneForm::radial(self.n, self.m).mul_fn(&self.h1).add(&OneForm::exact_differential(&self.h2))
    }
}

/// Solves the bidegree-wise system. For `p, q ≥ 1` the unknowns
/// `a = [x^{p−1}y^{q−1}]H₁`, `b = [x^p y^q]H₂` satisfy
///
/// ```text
/// −m a + p b = [x^{p−1} y^q] A
///  n a + q b = [x^p y^{q−1}] B
/// ```
///
/// with determinant `−(np + mq)`; pure powers of `x` or `y` in `H₂` come from
/// one equation each. Every monomial of `A` and `B` is used exactly once, so
/// the solution is unique.
pub fn azevedo_decompose(w: &OneForm<Rational>, n: usize, m: usize) -> Result<AzevedoPair> {
    if n == 0 || m == 0 {
        return precondition("azevedo_decompose needs n, m > 0");
    }
    let (nq, mq) = (int(n as i64), int(m as i64));
    let mut pairs: BTreeMap<(usize, usize), (Rational, Rational)> = BTreeMap::new();
    let mut h2: Vec<((usize, usize), Rational)> = Vec::new();
    for ((i, j), c) in w.a.terms() {
        if j == 0 {
            h2.push(((i + 1, 0), c / int(i as i64 + 1)));
        } else {
            pairs.entry((i + 1, j)).or_insert_with(|| (Rational::zero(), Rational::zero())).0 = c.clone();
        }
    }
    for ((i, j), c) in w.b.terms() {
        if i == 0 {
            h2.push(((0, j + 1), c / int(j as i64 + 1)));
        } else {
            pairs.entry((i, j + 1)).or_insert_with(|| (Rational::zero(), Rational::zero())).1 = c.clone();
        }
    }
    let mut h1: Vec<((usize, usize), Rational)> = Vec::new();
    for ((p, q), (ca, cb)) in pairs {
        let (pr, qr) = (int(p as i64), int(q as i64));
        let det = &nq * &pr + &mq * &qr;
        h1.push(((p - 1, q - 1), (&pr * &cb - &qr * &ca) / &det));
        h2.push(((p, q), (&mq * &cb + &nq * &ca) / &det));
    }
    // [x^i]A known for i < M_A and [x^i]B for i < M_B: H₂ is known below
    // min(M_A + 1, M_B) and H₁ one step lower.
    let ma = w.a.x_valid_below();
    let mb = w.b.x_valid_below();
    let h2_bound = min_bound(ma.map(|v| v + 1), mb);
    let h1_bound = min_bound(ma, mb.map(|v| v.saturating_sub(1)));
    Ok(AzevedoPair { h1: WPoly::new(h1, h1_bound), h2: WPoly::new(h2, h2_bound), n, m })
}

/// Checks `ν(A·F_y + B·F_x) = μ − 1 + ν(A dx − B dy)` for `F = F_{g+1}`.
pub fn jacobian_value_check(s: &SemirootSystem, a: &WPoly<Rational>, b: &WPoly<Rational>) -> Result<bool> {
    let f = s.f(s.genus() + 1);
    let (fx, fy) = partials(f);
    let lhs = intersection_multiplicity(s.source(), &a.mul(&fy).add(&b.mul(&fx)))?;
    let form = OneForm::new(a.clone(), b.neg());
    let rhs = nu(&form, s.source())?;
    Ok(lhs + 1 == s.semigroup().mu + rhs)
}

/// Parameterization `(t^{a+1}, c t^{b−1})` solving
/// `y^a(n x dy − m y dx) + d(e x^b) = 0`, when `c` is rational.
///
/// `c^{a+1} = −(a+1) b e / (n(b−1) − m(a+1))`.
pub fn monomial_separatrix_constant(a: usize, b: usize, e: &Rational, n: usize, m: usize) -> Option<Rational> {
    let den = (n * (b - 1)) as i64 - (m * (a + 1)) as i64;
    if den == 0 {
        return None;
    }
    let rhs = -int(((a + 1) * b) as i64) * e / int(den);
    rational_root(&rhs, a as u32 + 1)
}

fn rational_root(q: &Rational, k: u32) -> Option<Rational> {
    use num_bigint::BigInt;
    use num_traits::Signed;
    if q.is_zero() {
        return Some(Rational::zero());
    }
    if q.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let root = |z: &BigInt| -> Option<BigInt> {
        let r = z.abs().nth_root(k);
        (r.pow(k) == z.abs()).then(|| if z.is_negative() { -r } else { r })
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ratio;
    use crate::semiroot::canonical_semiroots;

    fn w(terms: &[(usize, usize, i64)]) -> WPoly<Rational> {
        WPoly::from_ints(terms)
    }

    fn param(n: usize, terms: &[(usize, i64)]) -> PuiseuxParam<Rational> {
        PuiseuxParam::new(n, TruncSeries::exact(terms.iter().map(|&(k, c)| (k, int(c))))).unwrap()
    }

    fn sextic() -> SemirootSystem {
        canonical_semiroots(&param(6, &[(9, 1), (12, 1), (13, 2)])).unwrap()
    }

    fn cusp() -> SemirootSystem {
        canonical_semiroots(&param(2, &[(3, 1)])).unwrap()
    }

    #[test]
    fn omega_generators_of_the_sextic() {
        let s = sextic();
        let w01 = omega_ij(&s, 0, 1).unwrap();
        assert_eq!(w01, OneForm::new(w(&[(0, 1, -9)]), w(&[(1, 0, 6)])));
        let w02 = omega_ij(&s, 0, 2).unwrap();
        let expected = OneForm::exact_differential(s.f(2))
            .mul_fn(&w(&[(1, 0, 6)]))
            .sub(&OneForm::new(s.f(2).scale(&int(22)), WPoly::zero()));
        assert_eq!(w02, expected);
        let w12 = omega_ij(&s, 1, 2).unwrap();
        let expected = OneForm::exact_differential(s.f(2))
            .mul_fn(&w(&[(0, 1, 9)]))
            .sub(&OneForm::new(WPoly::zero(), s.f(2).scale(&int(22))));
        assert_eq!(w12, expected);
        assert!(omega_ij(&s, 1, 1).is_err());
    }

    #[test]
    fn value_examples() {
        let s = sextic();
        let p = s.source().clone();
        // 6t⁶(9t⁸ + 12t¹¹ + …) − 9(t⁹ + t¹² + …)6t⁵ = 18t¹⁷ + …
        assert_eq!(nu(&omega_ij(&s, 0, 1).unwrap(), &p).unwrap(), 18);
        let zeta1 = OneForm::new(w(&[(0, 2, -9), (4, 0, -5)]), w(&[(1, 1, 6)]));
        assert_eq!(nu(&zeta1, &p).unwrap(), 27);
        let zeta2 = omega_ij(&s, 0, 2).unwrap().mul_fn(&WPoly::y()).add(&OneForm::exact_differential(&w(&[(6, 1, 1)])));
        assert_eq!(nu(&zeta2, &p).unwrap(), 41);
        let h2 = s.f(2).shift(0, 2).scale(&ratio(33, 20));
        let zeta3 = omega_ij(&s, 1, 2).unwrap().mul_fn(&WPoly::x()).add(&OneForm::exact_differential(&h2));
        assert_eq!(nu(&zeta3, &p).unwrap(), 41);
        // d(xy) on the cusp: ν = v₀ + v₁.
        let dxy = OneForm::new(w(&[(0, 1, 1)]), w(&[(1, 0, 1)]));
        assert_eq!(nu(&dxy, &param(2, &[(3, 1)])).unwrap(), 5);
        // dF vanishes on F.
        assert_eq!(value(&OneForm::exact_differential(s.f(3)), &p), Order::Infinite);
    }

    #[test]
    fn azevedo_examples() {
        let zeta1 = OneForm::new(w(&[(0, 2, -9), (4, 0, -5)]), w(&[(1, 1, 6)]));
        let pair = azevedo_decompose(&zeta1, 6, 9).unwrap();
        assert_eq!(pair.h1, WPoly::y());
        assert_eq!(pair.h2, w(&[(5, 0, -1)]));
        assert_eq!(pair.reconstruct(), zeta1);
        let radial = OneForm::radial(6, 9);
        let pair = azevedo_decompose(&radial, 6, 9).unwrap();
        assert_eq!((pair.h1, pair.h2), (WPoly::one(), WPoly::zero()));
        let pair = azevedo_decompose(&OneForm::exact_differential(&w(&[(7, 0, 1)])), 2, 3).unwrap();
        assert_eq!((pair.h1, pair.h2), (WPoly::zero(), w(&[(7, 0, 1)])));
    }

    #[test]
    fn pencil_members() {
        let s = sextic();
        let one = int(1);
        assert_eq!(
            omega_ij_base_separatrices(&s, 0, 1, (one.clone(), one.clone())).unwrap(),
            w(&[(0, 2, 1), (3, 0, -1)])
        );
        assert_eq!(
            omega_ij_base_separatrices(&s, 0, 2, (one.clone(), one.clone())).unwrap(),
            s.f(2).pow(3).sub(&w(&[(11, 0, 1)]))
        );
        assert_eq!(omega_ij_base_separatrices(&s, 1, 2, (one, int(0))).unwrap(), s.f(2).pow(9));
    }

    #[test]
    fn pencil_members_are_invariant_on_the_cusp() {
        let s = cusp();
        let w01 = omega_ij(&s, 0, 1).unwrap();
        // a y² − b x³ = 0 is parameterized by (t², c t³) with c² = b / a.
        for c in [1i64, 2, -3] {
            let p = param(2, &[(3, c)]);
            let member = omega_ij_base_separatrices(&s, 0, 1, (int(1), int(c * c))).unwrap();
            assert_eq!(member.pullback(&p).ord(), Order::Infinite);
            assert_eq!(pullback_form(&w01, &p).ord(), Order::Infinite);
        }
    }

    #[test]
    fn jacobian_identity_examples() {
        assert!(jacobian_value_check(&cusp(), &WPoly::one(), &WPoly::zero()).unwrap());
        let zeta1_a = w(&[(0, 2, -9), (4, 0, -5)]);
        let zeta1_b = w(&[(1, 1, 6)]);
        // ω = A dx − B dy with B = −(6xy).
        assert!(jacobian_value_check(&sextic(), &zeta1_a, &zeta1_b.neg()).unwrap());
    }

    #[test]
    fn monomial_separatrices() {
        // a = 0, b = 3, e = 1, (n, m) = (1, 1): c = −3/(2 − 1) = −3.
        let c = monomial_separatrix_constant(0, 3, &int(1), 1, 1).unwrap();
        assert_eq!(c, int(-3));
        let form = OneForm::radial(1, 1).add(&OneForm::exact_differential(&w(&[(3, 0, 1)])));
        let p = PuiseuxParam::new(1, TruncSeries::monomial(c, 2)).unwrap();
        assert_eq!(value(&form, &p), Order::Infinite);
        assert_eq!(monomial_separatrix_constant(1, 3, &int(1), 1, 1), None);
        // a = 1, b = 2: c² = 4.
        let c = monomial_separatrix_constant(1, 2, &int(1), 1, 1).unwrap();
        assert_eq!(c, int(2));
        let form = OneForm::radial(1, 1).mul_fn(&WPoly::y()).add(&OneForm::exact_differential(&w(&[(2, 0, 1)])));
        let p = PuiseuxParam::new(2, TruncSeries::monomial(c, 1)).unwrap();
        assert_eq!(value(&form, &p), Order::Infinite);
    }
}
