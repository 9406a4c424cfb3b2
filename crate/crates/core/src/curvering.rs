//! Elements of `K{x}[y]` stored as sparse monomial maps with a common
//! x-truncation, evaluated along branches.

use std::collections::BTreeMap;
use std::fmt;

use crate::branch::PuiseuxParam;
use crate::error::{truncation, Error, Result};
use crate::kernel::{format_rational, min_bound, Field, Order, RatFunc, Rational, TruncSeries};

/// Polynomial in `y` whose coefficients are truncated series in `x`.
///
/// Monomials `x^i y^j` are keyed by `(i, j)`. Terms with `i ≥ x_valid_below`
/// are unknown; `None` means exact.
#[derive(Clone, PartialEq)]
pub struct WPoly<K> {
    terms: BTreeMap<(usize, usize), K>,
    x_valid_below: Option<usize>,
}

impl<K: Field> WPoly<K> {
    pub fn new<I: IntoIterator<Item = ((usize, usize), K)>>(terms: I, x_valid_below: Option<usize>) -> Self {
        let mut out = WPoly { terms: BTreeMap::new(), x_valid_below };
        for (ij, c) in terms {
            out.add_term(ij, c);
        }
        out
    }

    pub fn exact<I: IntoIterator<Item = ((usize, usize), K)>>(terms: I) -> Self {
        Self::new(terms, None)
    }

    pub fn zero() -> Self {
        WPoly { terms: BTreeMap::new(), x_valid_below: None }
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    /// `c·x^i·y^j`.
    pub fn monomial(c: K, i: usize, j: usize) -> Self {
        Self::exact([((i, j), c)])
    }

    pub fn x() -> Self {
        Self::monomial(K::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(K::one(), 0, 1)
    }

    fn add_term(&mut self, ij: (usize, usize), c: K) {
        if self.x_valid_below.is_some_and(|m| ij.0 >= m) || c.is_zero() {
            return;
        }
        match self.terms.remove(&ij) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(ij, s);
                }
            }
            None => {
                self.terms.insert(ij, c);
            }
        }
    }

    pub fn x_valid_below(&self) -> Option<usize> {
        self.x_valid_below
    }

    pub fn is_exact(&self) -> bool {
        self.x_valid_below.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms `((i, j), c)` in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &K)> {
        self.terms.iter().map(|(ij, c)| (*ij, c))
    }

    pub fn coeff(&self, i: usize, j: usize) -> K {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(K::zero)
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.terms.keys().map(|ij| ij.1).max()
    }

    /// Least total degree of a stored term.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    /// Least x-exponent of a stored term, or the truncation bound when none.
    fn x_ord_or_bound(&self) -> Option<usize> {
        self.terms.keys().map(|ij| ij.0).min().or(self.x_valid_below)
    }

    /// True when the coefficient of `y^d` (with `d` the y-degree) is exactly 1.
    pub fn is_monic_in_y(&self) -> bool {
        let Some(d) = self.y_degree() else { return false };
        let lead: Vec<_> = self.terms.iter().filter(|(ij, _)| ij.1 == d).collect();
        lead.len() == 1 && *lead[0].0 == (0, d) && lead[0].1.is_one()
    }

    /// Coefficient of `y^j` as a series in `x`.
    pub fn y_coeff(&self, j: usize) -> TruncSeries<K> {
        TruncSeries::new(
            self.terms.iter().filter(|(ij, _)| ij.1 == j).map(|(ij, c)| (ij.0, c.clone())),
            self.x_valid_below,
        )
    }

    pub fn truncate_x(&self, m: usize) -> Self {
        let bound = min_bound(self.x_valid_below, Some(m));
        WPoly::new(self.terms.iter().map(|(ij, c)| (*ij, c.clone())), bound)
    }

    pub fn scale(&self, c: &K) -> Self {
        WPoly::new(self.terms.iter().map(|(ij, a)| (*ij, a.clone() * c)), self.x_valid_below)
    }

    /// Multiplication by `x^a y^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        WPoly::new(self.terms.iter().map(|((i, j), c)| ((i + a, j + b), c.clone())), self.x_valid_below.map(|m| m + a))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let bound = min_bound(self.x_valid_below, rhs.x_valid_below);
        let mut out = WPoly::new(self.terms.iter().map(|(ij, c)| (*ij, c.clone())), bound);
        for (ij, c) in &rhs.terms {
            out.add_term(*ij, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        WPoly { terms: self.terms.iter().map(|(ij, c)| (*ij, -c.clone())).collect(), x_valid_below: self.x_valid_below }
    }

    /// Product; the x-validity follows the truncated-series rule with x-orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let add = |a: Option<usize>, b: Option<usize>| a.zip(b).map(|(a, b)| a + b);
        let bound = min_bound(
            min_bound(add(self.x_valid_below, rhs.x_ord_or_bound()), add(rhs.x_valid_below, self.x_ord_or_bound())),
            add(self.x_valid_below, rhs.x_valid_below),
        );
        let mut acc: BTreeMap<(usize, usize), K> = BTreeMap::new();
        for ((ia, ja), ca) in &self.terms {
            for ((ib, jb), cb) in &rhs.terms {
                let key = (ia + ib, ja + jb);
                if bound.is_some_and(|m| key.0 >= m) {
                    continue;
                }
                let p = ca.clone() * cb;
                match acc.get_mut(&key) {
                    Some(slot) => *slot = std::mem::replace(slot, K::zero()) + p,
                    None => {
                        acc.insert(key, p);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        WPoly { terms: acc, x_valid_below: bound }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = WPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derive_x(&self) -> Self {
        WPoly::new(
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|((i, j), c)| ((i - 1, *j), c.clone() * &K::from_int(*i as i64))),
            self.x_valid_below.map(|m| m.saturating_sub(1)),
        )
    }

    pub fn derive_y(&self) -> Self {
        WPoly::new(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|((i, j), c)| ((*i, j - 1), c.clone() * &K::from_int(*j as i64))),
            self.x_valid_below,
        )
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> WPoly<L> {
        WPoly::new(self.terms.iter().map(|(ij, c)| (*ij, f(c))), self.x_valid_below)
    }

    /// Exact quotient by `d` for exact polynomials, `None` when `d` does not
    /// divide `self`. Leading terms are taken in `(j, i)` lexicographic order.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(self.is_exact() && d.is_exact(), "exact division of truncated polynomials");
        let key = |ij: &(usize, usize)| (ij.1, ij.0);
        let (lead_d, lc_d) = d.terms.iter().max_by_key(|(ij, _)| key(ij))?;
        let lc_inv = lc_d.inverse()?;
        let mut rem = self.clone();
        let mut quot = WPoly::zero();
        while let Some((lead_r, lc_r)) = rem.terms.iter().max_by_key(|(ij, _)| key(ij)) {
            if lead_r.0 < lead_d.0 || lead_r.1 < lead_d.1 {
                return None;
            }
            let q = WPoly::monomial(lc_r.clone() * &lc_inv, lead_r.0 - lead_d.0, lead_r.1 - lead_d.1);
            rem = rem.sub(&q.mul(d));
            quot = quot.add(&q);
        }
        Some(quot)
    }

    /// Evaluation `H(t^n, y(t))` along a branch, by Horner's rule in `y`.
    pub fn pullback(&self, p: &PuiseuxParam<K>) -> TruncSeries<K> {
        self.pullback_capped(p, None)
    }

    /// Pullback additionally truncated below `cap`.
    ///
    /// The unknown x-tail contributes unknown t-exponents from `M·n` on; this
    /// uniform bound is conservative.
    pub fn pullback_capped(&self, p: &PuiseuxParam<K>, cap: Option<usize>) -> TruncSeries<K> {
        let n = p.n();
        let tail = self.x_valid_below.map(|m| m * n);
        let cap = min_bound(cap, tail);
        let Some(d) = self.y_degree() else {
            return TruncSeries::zero(cap);
        };
        let y = match cap {
            Some(c) => p.y().truncate(c),
            None => p.y().clone(),
        };
        let coeff = |j: usize| {
            TruncSeries::new(self.terms.iter().filter(|(ij, _)| ij.1 == j).map(|(ij, c)| (ij.0 * n, c.clone())), cap)
        };
        let mut acc = coeff(d);
        for j in (0..d).rev() {
            acc = acc.mul_capped(&y, cap).add(&coeff(j));
        }
        acc
    }
}

/// Intersection multiplicity `I(F, H)` as the t-order of `H` along the branch.
pub fn intersection_multiplicity<K: Field>(p: &PuiseuxParam<K>, h: &WPoly<K>) -> Result<usize> {
    match h.pullback(p).ord() {
        Order::Finite(k) => Ok(k),
        Order::AtLeast(n) => truncation(format!("pullback vanishes below t^{n}")),
        Order::Infinite => Err(Error::NoFiniteValue),
    }
}

/// Euclidean division in `y` by a monic divisor: `A = Q·B + R`, `deg_y R < deg_y B`.
pub fn ydiv<K: Field>(a: &WPoly<K>, b: &WPoly<K>) -> (WPoly<K>, WPoly<K>) {
    assert!(b.is_monic_in_y(), "ydiv needs a divisor monic in y");
    let d = b.y_degree().unwrap();
    let mut q = WPoly::new(std::iter::empty(), min_bound(a.x_valid_below, b.x_valid_below));
    let mut r = a.clone();
    while let Some(rd) = r.y_degree().filter(|&rd| rd >= d) {
        let lead = WPoly::new(
            r.terms.iter().filter(|(ij, _)| ij.1 == rd).map(|(ij, c)| ((ij.0, rd - d), c.clone())),
            r.x_valid_below,
        );
        r = r.sub(&lead.mul(b));
        // The leading y-power is cancelled exactly; drop any residue left by truncation.
        r.terms.retain(|ij, _| ij.1 != rd);
        q = q.add(&lead);
    }
    (q, r)
}

pub fn partials<K: Field>(f: &WPoly<K>) -> (WPoly<K>, WPoly<K>) {
    (f.derive_x(), f.derive_y())
}

impl WPoly<Rational> {
    pub fn lift(&self) -> WPoly<RatFunc> {
        self.map(|c| RatFunc::constant(c.clone()))
    }

    /// Builds from integer-coded `(i, j, c)` triples.
    pub fn from_ints(terms: &[(usize, usize, i64)]) -> Self {
        WPoly::exact(terms.iter().map(|&(i, j, c)| ((i, j), crate::kernel::int(c))))
    }
}

impl<K: fmt::Debug> fmt::Debug for WPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WPoly").field("terms", &self.terms).field("x_valid_below", &self.x_valid_below).finish()
    }
}

impl fmt::Display for WPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (k, ((i, j), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", format_rational(c))?;
            match i {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "*y")?,
                _ => write!(f, "*y^{j}")?,
            }
        }
        if let Some(m) = self.x_valid_below {
            write!(f, " + O(x^{m})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::{char_ladder, semigroup};
    use crate::kernel::int;
    use proptest::prelude::*;

    fn w(terms: &[(usize, usize, i64)]) -> WPoly<Rational> {
        WPoly::from_ints(terms)
    }

    fn param(n: usize, terms: &[(usize, i64)]) -> PuiseuxParam<Rational> {
        PuiseuxParam::new(n, TruncSeries::exact(terms.iter().map(|&(k, c)| (k, int(c))))).unwrap()
    }

    fn sextic() -> PuiseuxParam<Rational> {
        param(6, &[(9, 1), (12, 1), (13, 2)])
    }

    fn f2() -> WPoly<Rational> {
        w(&[(0, 2, 1), (3, 0, -1), (2, 1, -2), (4, 0, 1)])
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(f2().pullback(&sextic()).ord(), Order::Finite(22));
        assert_eq!(WPoly::x().pullback(&sextic()), TruncSeries::monomial(int(1), 6));
        let p = param(2, &[(3, 1), (4, 1)]);
        assert_eq!(WPoly::y().pullback(&p), p.y().clone());
        // F₂ vanishes on its own parameterization.
        assert_eq!(f2().pullback(&p).ord(), Order::Infinite);
    }

    #[test]
    fn intersections_with_sextic() {
        let p = sextic();
        assert_eq!(intersection_multiplicity(&p, &WPoly::y()).unwrap(), 9);
        assert_eq!(intersection_multiplicity(&p, &WPoly::x()).unwrap(), 6);
        assert_eq!(intersection_multiplicity(&p, &w(&[(6, 1, 1)])).unwrap(), 45);
    }

    #[test]
    fn truncated_pullback_reports_marker() {
        let h = WPoly::new([((0, 0), int(0))], Some(2));
        assert_eq!(h.pullback(&sextic()).ord(), Order::AtLeast(12));
        assert!(matches!(intersection_multiplicity(&sextic(), &h), Err(Error::InsufficientTruncation(_))));
    }

    #[test]
    fn division_examples() {
        let (q, r) = ydiv(&w(&[(0, 3, 1)]), &w(&[(0, 2, 1), (3, 0, -1)]));
        assert_eq!(q, WPoly::y());
        assert_eq!(r, w(&[(3, 1, 1)]));
        let (q, r) = ydiv(&f2(), &f2());
        assert_eq!((q, r.is_zero()), (WPoly::one(), true));
        let a = w(&[(0, 4, 1)]);
        let (q, r) = ydiv(&a, &f2());
        assert!(r.y_degree().unwrap_or(0) <= 1);
        assert!(a.sub(&q.mul(&f2())).sub(&r).is_zero());
    }

    #[test]
    fn partial_derivatives() {
        let (fx, fy) = partials(&w(&[(0, 2, 1), (3, 0, -1)]));
        assert_eq!(fx, w(&[(2, 0, -3)]));
        assert_eq!(fy, w(&[(0, 1, 2)]));
        let (_, f2y) = partials(&f2());
        assert_eq!(f2y, w(&[(0, 1, 2), (2, 0, -2)]));
        // ν(F_y) = μ + v₀ − 1 = 3 on (t², t³ + t⁴).
        assert_eq!(intersection_multiplicity(&param(2, &[(3, 1), (4, 1)]), &f2y).unwrap(), 3);
    }

    #[test]
    fn exact_division() {
        let a = w(&[(1, 1, 1), (0, 2, 1)]);
        let b = w(&[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(a.div_exact(&b), Some(WPoly::y()));
        assert_eq!(a.div_exact(&WPoly::x()), None);
    }

    fn arb_poly() -> impl Strategy<Value = WPoly<Rational>> {
        prop::collection::vec((0usize..5, 0usize..4, -4i64..5), 1..6).prop_map(|ts| WPoly::from_ints(&ts))
    }

    fn agree(a: &TruncSeries<Rational>, b: &TruncSeries<Rational>) -> bool {
        let n = min_bound(a.valid_below(), b.valid_below()).unwrap_or(80);
        (0..n).all(|e| a.coeff_or_zero(e) == b.coeff_or_zero(e))
    }

    proptest! {
        #[test]
        fn pullback_is_a_ring_map(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let p = sextic().with_valid_below(30);
            let lhs = a.mul(&b).add(&c).pullback(&p);
            let rhs = a.pullback(&p).mul(&b.pullback(&p)).add(&c.pullback(&p));
            prop_assert!(agree(&lhs, &rhs));
        }

        #[test]
        fn division_identity(a in arb_poly()) {
            let (q, r) = ydiv(&a, &f2());
            prop_assert!(a.sub(&q.mul(&f2())).sub(&r).is_zero());
            prop_assert!(r.y_degree().is_none_or(|d| d < 2));
        }

        #[test]
        fn values_lie_in_semigroup(a in arb_poly()) {
            let p = sextic();
            let s = semigroup(&char_ladder(&p).unwrap());
            if let Ok(v) = intersection_multiplicity(&p, &a) {
                prop_assert!(s.contains(v));
            }
        }
    }
}
