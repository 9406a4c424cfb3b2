use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;

/// Order of a truncated series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// Least exponent with a nonzero coefficient.
    Finite(usize),
    /// Every known coefficient vanishes; the order is at least the validity bound.
    AtLeast(usize),
    /// The series is exactly zero (no truncation involved).
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<usize> {
        match self {
            Order::Finite(k) => Some(k),
            _ => None,
        }
    }
}

/// Truncated formal power series in one variable `t` over an exact field.
///
/// Coefficients at exponents `>= valid_below` are unknown. A `valid_below` of
/// `None` means the series is an exact polynomial. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<K> {
    coeffs: BTreeMap<usize, K>,
    valid_below: Option<usize>,
}

pub(crate) fn min_bound(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

fn add_bound(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    }
}

impl<K: Field> TruncSeries<K> {
    pub fn new<I: IntoIterator<Item = (usize, K)>>(terms: I, valid_below: Option<usize>) -> Self {
        let mut coeffs: BTreeMap<usize, K> = BTreeMap::new();
        for (e, c) in terms {
            if valid_below.is_some_and(|n| e >= n) {
                continue;
            }
            match coeffs.remove(&e) {
                Some(old) => {
                    let s = old + c;
                    if !s.is_zero() {
                        coeffs.insert(e, s);
                    }
                }
                None if !c.is_zero() => {
                    coeffs.insert(e, c);
                }
                None => {}
            }
        }
        TruncSeries { coeffs, valid_below }
    }

    /// An exact polynomial in `t`.
    pub fn exact<I: IntoIterator<Item = (usize, K)>>(terms: I) -> Self {
        Self::new(terms, None)
    }

    /// The zero series known below `valid_below`.
    pub fn zero(valid_below: Option<usize>) -> Self {
        TruncSeries { coeffs: BTreeMap::new(), valid_below }
    }

    pub fn monomial(c: K, e: usize) -> Self {
        Self::exact([(e, c)])
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, 0)
    }

    pub fn valid_below(&self) -> Option<usize> {
        self.valid_below
    }

    pub fn is_exact(&self) -> bool {
        self.valid_below.is_none()
    }

    /// True when no known coefficient is nonzero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: usize) -> Option<&K> {
        self.coeffs.get(&e)
    }

    pub fn coeff_or_zero(&self, e: usize) -> K {
        self.coeffs.get(&e).cloned().unwrap_or_else(K::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &K)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_exponent(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn ord(&self) -> Order {
        match self.coeffs.keys().next() {
            Some(&k) => Order::Finite(k),
            None => match self.valid_below {
                Some(n) => Order::AtLeast(n),
                None => Order::Infinite,
            },
        }
    }

    /// Order used by the validity rule of multiplication: the least stored
    /// exponent, or the validity bound of a zero-so-far series.
    fn ord_or_bound(&self) -> Option<usize> {
        self.coeffs.keys().next().copied().or(self.valid_below)
    }

    /// Lowers the validity bound to `n` (never raises it).
    pub fn truncate(&self, n: usize) -> Self {
        let bound = min_bound(self.valid_below, Some(n));
        let b = bound.expect("bounded");
        TruncSeries { coeffs: self.coeffs.range(..b).map(|(e, c)| (*e, c.clone())).collect(), valid_below: bound }
    }

    /// Same coefficients, explicitly declared exact.
    pub fn assume_exact(&self) -> Self {
        TruncSeries { coeffs: self.coeffs.clone(), valid_below: None }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.valid_below);
        }
        TruncSeries {
            coeffs: self.coeffs.iter().map(|(e, a)| (*e, a.clone() * c)).collect(),
            valid_below: self.valid_below,
        }
    }

    /// Multiplication by `t^s`.
    pub fn shift(&self, s: usize) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|(e, a)| (e + s, a.clone())).collect(),
            valid_below: self.valid_below.map(|n| n + s),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Self {
        let valid_below = min_bound(self.valid_below, rhs.valid_below);
        let mut coeffs: BTreeMap<usize, K> = match valid_below {
            Some(n) => self.coeffs.range(..n).map(|(e, c)| (*e, c.clone())).collect(),
            None => self.coeffs.clone(),
        };
        let upper = valid_below.unwrap_or(usize::MAX);
        for (e, c) in rhs.coeffs.range(..upper) {
            let c = if negate { -c.clone() } else { c.clone() };
            match coeffs.remove(e) {
                Some(old) => {
                    let s = old + c;
                    if !s.is_zero() {
                        coeffs.insert(*e, s);
                    }
                }
                None => {
                    coeffs.insert(*e, c);
                }
            }
        }
        TruncSeries { coeffs, valid_below }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.mul_capped(rhs, None)
    }

    /// Product, additionally truncated below `cap` when given.
    ///
    /// Validity: `min(Na + ord b, Nb + ord a, Na + Nb)`, where the order of a
    /// zero-so-far factor is its own validity bound.
    pub fn mul_capped(&self, rhs: &Self, cap: Option<usize>) -> Self {
        let rule = min_bound(
            min_bound(add_bound(self.valid_below, rhs.ord_or_bound()), add_bound(rhs.valid_below, self.ord_or_bound())),
            add_bound(self.valid_below, rhs.valid_below),
        );
        let valid_below = min_bound(rule, cap);
        let upper = valid_below.unwrap_or(usize::MAX);
        let mut acc: BTreeMap<usize, K> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            if *ea >= upper {
                break;
            }
            for (eb, cb) in rhs.coeffs.range(..upper - ea) {
                let p = ca.clone() * cb;
                match acc.get_mut(&(ea + eb)) {
                    Some(slot) => *slot = std::mem::replace(slot, K::zero()) + p,
                    None => {
                        acc.insert(ea + eb, p);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TruncSeries { coeffs: acc, valid_below }
    }

    pub fn pow_capped(&self, k: usize, cap: Option<usize>) -> Self {
        let mut acc = Self::constant(K::one());
        for _ in 0..k {
            acc = acc.mul_capped(self, cap);
        }
        acc
    }

    /// Termwise derivative; the validity bound drops by one.
    pub fn derive(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c.clone() * &K::from_int(*e as i64)))
                .collect(),
            valid_below: self.valid_below.map(|n| n.saturating_sub(1)),
        }
    }

    /// Substitution `t ↦ t^m`.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m > 0, "substitution t -> t^0");
        TruncSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * m, c.clone())).collect(),
            valid_below: self.valid_below.map(|n| n * m),
        }
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> TruncSeries<L> {
        TruncSeries::new(self.coeffs.iter().map(|(e, c)| (*e, f(c))), self.valid_below)
    }

    pub fn try_map<L: Field, E>(&self, f: impl Fn(&K) -> Result<L, E>) -> Result<TruncSeries<L>, E> {
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (e, c) in &self.coeffs {
            terms.push((*e, f(c)?));
        }
        Ok(TruncSeries::new(terms, self.valid_below))
    }

    /// Replaces the coefficient at `e` (removing it when zero).
    pub fn with_coeff(&self, e: usize, c: K) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.coeffs.remove(&e);
        } else {
            out.coeffs.insert(e, c);
        }
        out
    }
}

impl<K: Field + fmt::Display> fmt::Display for TruncSeries<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*t^{e}")?;
        }
        if let Some(n) = self.valid_below {
            write!(f, " + O(t^{n})")?;
        }
        Ok(())
    }
}

impl<K: fmt::Debug> fmt::Debug for TruncSeries<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncSeries").field("coeffs", &self.coeffs).field("valid_below", &self.valid_below).finish()
    }
}

impl<K: Field> Add for &TruncSeries<K> {
    type Output = TruncSeries<K>;
    fn add(self, rhs: Self) -> TruncSeries<K> {
        TruncSeries::add(self, rhs)
    }
}

impl<K: Field> Sub for &TruncSeries<K> {
    type Output = TruncSeries<K>;
    fn sub(self, rhs: Self) -> TruncSeries<K> {
        TruncSeries::sub(self, rhs)
    }
}

impl<K: Field> Mul for &TruncSeries<K> {
    type Output = TruncSeries<K>;
    fn mul(self, rhs: Self) -> TruncSeries<K> {
        TruncSeries::mul(self, rhs)
    }
}

impl<K: Field> Neg for &TruncSeries<K> {
    type Output = TruncSeries<K>;
    fn neg(self) -> TruncSeries<K> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
            valid_below: self.valid_below,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{int, Rational};
    use proptest::prelude::*;

    type S = TruncSeries<Rational>;

    fn s(terms: &[(usize, i64)], n: usize) -> S {
        S::new(terms.iter().map(|&(e, c)| (e, int(c))), Some(n))
    }

    #[test]
    fn telescoping_product() {
        let p = &s(&[(0, 1), (1, 1)], 10) * &s(&[(0, 1), (1, -1)], 10);
        assert_eq!(p, s(&[(0, 1), (2, -1)], 10));
    }

    #[test]
    fn monomial_product() {
        let p = &s(&[(3, 1)], 10) * &s(&[(4, 1)], 10);
        assert_eq!(p.ord(), Order::Finite(7));
        // min(10 + 4, 10 + 3, 20): known further than either factor.
        assert_eq!(p.valid_below(), Some(13));
        assert_eq!(p.truncate(10), s(&[(7, 1)], 10));
    }

    #[test]
    fn cancellation_in_sum() {
        let a = &s(&[(9, 1), (12, 1)], 14) + &s(&[(9, -1)], 14);
        assert_eq!(a, s(&[(12, 1)], 14));
    }

    #[test]
    fn orders_and_markers() {
        assert_eq!(s(&[(9, 1), (12, 1)], 20).ord(), Order::Finite(9));
        assert_eq!(s(&[], 20).ord(), Order::AtLeast(20));
        assert_eq!(S::exact(Vec::new()).ord(), Order::Infinite);
    }

    #[test]
    fn derivative() {
        assert_eq!(s(&[(5, 1)], 9).derive(), s(&[(4, 5)], 8));
        assert!(s(&[(0, 7)], 9).derive().is_zero());
        assert_eq!(s(&[(9, 1), (12, 1), (13, 2)], 30).derive(), s(&[(8, 9), (11, 12), (12, 26)], 29));
    }

    #[test]
    fn zero_so_far_factor_uses_its_bound() {
        // (0 + O(t^5)) * (t^2 + O(t^9)) is zero below 7.
        let p = &s(&[], 5) * &s(&[(2, 1)], 9);
        assert_eq!(p.ord(), Order::AtLeast(7));
    }

    fn arb_series() -> impl Strategy<Value = S> {
        (prop::collection::vec((0usize..8, -3i64..4), 0..6), 6usize..12).prop_map(|(terms, n)| s(&terms, n))
    }

    fn agree_below(a: &S, b: &S) -> bool {
        let n = min_bound(a.valid_below(), b.valid_below()).unwrap();
        (0..n).all(|e| a.coeff_or_zero(e) == b.coeff_or_zero(e))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert!(agree_below(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
            prop_assert!(agree_below(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))));
            prop_assert!(agree_below(&(&a * &b), &(&b * &a)));
        }

        #[test]
        fn leibniz_on_squares(a in arb_series()) {
            let lhs = (&a * &a).derive();
            let rhs = (&a * &a.derive()).scale(&int(2));
            prop_assert!(agree_below(&lhs, &rhs));
        }
    }
}
