//! Numerical invariants of a plane branch read off a Puiseux parameterization
//! `(t^n, Σ c_k t^k)`: characteristic exponents, value semigroup, Milnor
//! number, Zariski invariant, and the truncated parameterizations of the
//! semiroots.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{precondition, truncation, Result};
use crate::kernel::{Field, Rational, TruncSeries};

/// A branch `(t^n, y(t))` with exact coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PuiseuxParam<K> {
    n: usize,
    y: TruncSeries<K>,
}

impl<K: Field> PuiseuxParam<K> {
    pub fn new(n: usize, y: TruncSeries<K>) -> Result<Self> {
        if n == 0 {
            return precondition("ramification index must be positive");
        }
        Ok(PuiseuxParam { n, y })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn y(&self) -> &TruncSeries<K> {
        &self.y
    }

    pub fn valid_below(&self) -> Option<usize> {
        self.y.valid_below()
    }

    /// The series `t^n`.
    pub fn x_series(&self) -> TruncSeries<K> {
        TruncSeries::monomial(K::one(), self.n)
    }

    pub fn coeff(&self, k: usize) -> K {
        self.y.coeff_or_zero(k)
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> PuiseuxParam<L> {
        PuiseuxParam { n: self.n, y: self.y.map(f) }
    }

    pub fn with_valid_below(&self, n: usize) -> Self {
        PuiseuxParam { n: self.n, y: self.y.truncate(n) }
    }

    /// Divides the ramification index and every exponent by their common gcd.
    ///
    /// For a truncated series the unknown tail is assumed to share the
    /// common factor; the validity bound becomes `⌈N/d⌉`.
    pub fn reduce_ramification(&self) -> Self {
        let d = self.y.terms().fold(self.n, |g, (k, _)| g.gcd(&k));
        if d == 1 {
            return self.clone();
        }
        let y = TruncSeries::new(
            self.y.terms().map(|(k, c)| (k / d, c.clone())),
            self.y.valid_below().map(|n| n.div_ceil(d)),
        );
        PuiseuxParam { n: self.n / d, y }
    }
}

/// Characteristic sequences `β`, `e`, `n` of a branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharLadder {
    pub beta: Vec<usize>,
    pub e: Vec<usize>,
    pub nseq: Vec<usize>,
}

impl CharLadder {
    /// Builds the ladder from characteristic exponents `β₀ < β₁ < … < β_g`.
    pub fn from_beta(beta: &[usize]) -> Result<Self> {
        if beta.is_empty() || beta[0] == 0 {
            return precondition("β₀ must be positive");
        }
        let mut e = vec![beta[0]];
        let mut nseq = vec![1];
        for w in beta.windows(2) {
            if w[1] <= w[0] {
                return precondition(format!("characteristic exponents not increasing: {beta:?}"));
            }
            let prev = *e.last().unwrap();
            let next = prev.gcd(&w[1]);
            if next == prev {
                return precondition(format!("β = {} is divisible by e = {prev}", w[1]));
            }
            e.push(next);
            nseq.push(prev / next);
        }
        if *e.last().unwrap() != 1 {
            return precondition(format!("gcd chain of {beta:?} does not reach 1"));
        }
        Ok(CharLadder { beta: beta.to_vec(), e, nseq })
    }

    pub fn genus(&self) -> usize {
        self.beta.len() - 1
    }

    pub fn v0(&self) -> usize {
        self.beta[0]
    }
}

/// Minimal generators `v₀ < … < v_g` of the value semigroup and its
/// conductor `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    pub v: Vec<usize>,
    pub mu: usize,
}

impl Semigroup {
    /// Membership of `m` in `⟨v₀,…,v_g⟩`, by a reachability table up to
    /// `max(m, μ)`.
    pub fn contains(&self, m: usize) -> bool {
        self.table(m.max(self.mu))[m]
    }

    fn table(&self, upto: usize) -> Vec<bool> {
        let mut reach = vec![false; upto + 1];
        reach[0] = true;
        for k in 1..=upto {
            reach[k] = self.v.iter().any(|&g| g <= k && reach[k - g]);
        }
        reach
    }

    /// Elements of ℕ missing from the semigroup.
    pub fn gaps(&self) -> Vec<usize> {
        let upto = self.mu.max(1);
        let reach = self.table(upto);
        (0..upto).filter(|&k| !reach[k]).collect()
    }
}

pub fn char_ladder<K: Field>(p: &PuiseuxParam<K>) -> Result<CharLadder> {
    let n = p.n;
    let mut beta = vec![n];
    let mut e = n;
    for (k, _) in p.y.terms() {
        if e == 1 {
            break;
        }
        if k % e == 0 {
            continue;
        }
        if k < n {
            return precondition(format!("exponent {k} below the multiplicity {n}; exchange x and y"));
        }
        beta.push(k);
        e = e.gcd(&k);
    }
    if e != 1 {
        if p.y.is_exact() {
            return precondition(format!("parameterization is not primitive (common factor {e})"));
        }
        return truncation(format!("gcd chain stuck at {e} below t^{}", p.valid_below().unwrap()));
    }
    CharLadder::from_beta(&beta)
}

/// Generators by the recursion `v_i = n_{i−1}v_{i−1} + β_i − β_{i−1}`,
/// cross-checked against the closed sum, and the conductor
/// `μ = Σ(n_l − 1)v_l − v₀ + 1`.
pub fn semigroup(l: &CharLadder) -> Semigroup {
    let beta = &l.beta;
    let g = l.genus();
    let mut v = vec![beta[0]];
    for i in 1..=g {
        let vi = l.nseq[i - 1] * v[i - 1] + beta[i] - beta[i - 1];
        v.push(vi);
    }
    for (i, vi) in v.iter().enumerate().skip(1) {
        assert_eq!(*vi, semigroup_generator_closed(l, i), "generator recursions disagree at v_{i}");
    }
    let mu = (1..=g).map(|k| (l.nseq[k] - 1) * v[k]).sum::<usize>() + 1 - v[0];
    Semigroup { v, mu }
}

/// `v_i = Σ_{j=0}^{i−2} ((e_j − e_{j+1})/e_{i−1}) β_{j+1} + β_i`.
pub fn semigroup_generator_closed(l: &CharLadder, i: usize) -> usize {
    if i == 0 {
        return l.beta[0];
    }
    let s: usize = (0..i.saturating_sub(1)).map(|j| (l.e[j] - l.e[j + 1]) / l.e[i - 1] * l.beta[j + 1]).sum();
    s + l.beta[i]
}

pub fn gamma_contains(s: &Semigroup, m: usize) -> bool {
    s.contains(m)
}

/// Drops every y-term whose exponent is a multiple of `n`.
pub fn tschirnhausen_normalize<K: Field>(p: &PuiseuxParam<K>) -> PuiseuxParam<K> {
    let n = p.n;
    let y = TruncSeries::new(p.y.terms().filter(|(k, _)| k % n != 0).map(|(k, c)| (k, c.clone())), p.y.valid_below());
    PuiseuxParam { n, y }
}

pub fn is_tschirnhausen_normal<K: Field>(p: &PuiseuxParam<K>) -> bool {
    p.y.terms().all(|(k, _)| k % p.n != 0)
}

/// Zariski invariant of a branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiInvariant {
    /// `None` when no exponent qualifies (λ infinite).
    pub lambda: Option<usize>,
    /// Exponents `i` with `β₁ < i < λ`, `c_i ≠ 0` and `i + v₀ ∈ Γ`: terms a
    /// further analytic normalization could remove.
    pub flagged: Vec<usize>,
}

/// `λ = min{i : c_i ≠ 0, i + v₀ ∉ Γ}` on a Tschirnhausen-normal parameterization.
pub fn zariski_invariant(p: &PuiseuxParam<Rational>) -> Result<ZariskiInvariant> {
    if !is_tschirnhausen_normal(p) {
        return precondition("zariski_invariant needs a Tschirnhausen-normal parameterization");
    }
    let ladder = char_ladder(p)?;
    let sg = semigroup(&ladder);
    let v0 = ladder.v0();
    let bound = sg.mu.saturating_sub(v0);
    if let Some(n) = p.valid_below() {
        if n < bound {
            return truncation(format!("λ search needs coefficients below t^{bound}, have t^{n}"));
        }
    }
    let beta1 = ladder.beta.get(1).copied().unwrap_or(usize::MAX);
    let mut flagged = Vec::new();
    for (i, c) in p.y.terms() {
        if i >= bound {
            break;
        }
        debug_assert!(!c.is_zero());
        if !sg.contains(i + v0) {
            return Ok(ZariskiInvariant { lambda: Some(i), flagged });
        }
        if i > beta1 {
            flagged.push(i);
        }
    }
    Ok(ZariskiInvariant { lambda: None, flagged })
}

/// Parameterizations `φ₁,…,φ_{g+1}` of the semiroots:
/// `φ_i = (t^{β₀/e_{i−1}}, Σ_{k<β_i} c_k t^{k/e_{i−1}})`, with `φ_{g+1} = p`.
pub fn semiroot_params<K: Field>(p: &PuiseuxParam<K>, l: &CharLadder) -> Vec<PuiseuxParam<K>> {
    let g = l.genus();
    let mut out = Vec::with_capacity(g + 1);
    for i in 1..=g {
        let e = l.e[i - 1];
        let bi = l.beta[i];
        let y = TruncSeries::exact(p.y.terms().take_while(|(k, _)| *k < bi).map(|(k, c)| {
            debug_assert_eq!(k % e, 0);
            (k / e, c.clone())
        }));
        out.push(PuiseuxParam { n: l.beta[0] / e, y });
    }
    out.push(p.clone());
    out
}

impl PuiseuxParam<Rational> {
    /// Shortcut for a parameterization with integer-coded coefficients.
    pub fn from_terms(n: usize, terms: &[(usize, Rational)], valid_below: Option<usize>) -> Result<Self> {
        PuiseuxParam::new(n, TruncSeries::new(terms.iter().cloned(), valid_below))
    }
}
