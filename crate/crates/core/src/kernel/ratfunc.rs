use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{format_rational, Field, Rational};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Element of the rational function field ℚ(u).
///
/// Invariants: `gcd(num, den) = 1`, `den` monic and nonzero. The zero element
/// is `0/1`. Every constructor and every arithmetic operation re-normalizes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    /// Normalizes `num/den`; panics when `den` is zero.
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: UPoly::one() };
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = UPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc { num: p, den: UPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(UPoly::constant(c))
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        RatFunc::from_poly(UPoly::u())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Constant value when the function does not depend on `u`.
    pub fn as_constant(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.is_one()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), true) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    /// Exact value at `u0`; `PoleAtPoint` when the denominator vanishes there.
    pub fn eval(&self, u0: &Rational) -> Result<Rational> {
        let d = self.den.eval(u0);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(format_rational(u0)));
        }
        Ok(self.num.eval(u0) / d)
    }

    /// `f(u) ↦ f(−u)`.
    pub fn negate_argument(&self) -> Self {
        RatFunc::new(self.num.negate_argument(), self.den.negate_argument())
    }

    fn add_impl(&self, rhs: &RatFunc, negate: bool) -> RatFunc {
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num + &rnum);
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rnum, self.den.clone());
        }
        let g = UPoly::gcd(&self.den, &rhs.den);
        let ld = self.den.div_exact(&g);
        let rd = rhs.den.div_exact(&g);
        let num = &(&self.num * &rd) + &(&rnum * &ld);
        RatFunc::new(num, &ld * &rhs.den)
    }

    fn mul_impl(&self, rhs: &RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel so the product is already reduced.
        let g1 = UPoly::gcd(&self.num, &rhs.den);
        let g2 = UPoly::gcd(&rhs.num, &self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn recip(&self) -> Option<RatFunc> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: UPoly::zero(), den: UPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(UPoly::one())
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, false)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, true)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_impl(rhs)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.mul_impl(&rhs.recip().expect("division by zero rational function"))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &'a RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Field for RatFunc {
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }

    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
}
