//! Rational functions with integer coefficients and the substitutions
//! `(x, y) -> (y, x)` and `(x, y) -> (1/x, 1/y)`.

use super::poly::{Monomial, Poly};
use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `num / den` in lowest terms; the denominator's leading coefficient is positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.nvars(), den.nvars());
        if num.is_zero() {
            return RationalFunction { den: Poly::one(num.nvars()), num };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.nvars();
        RationalFunction { num: p, den: Poly::one(n) }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        Self::from_poly(Poly::constant(nvars, c))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_poly(Poly::var(nvars, i))
    }

    /// `x^e` with signed exponents.
    pub fn monomial(nvars: usize, e: &[i64]) -> Self {
        let pos: Monomial = e.iter().map(|&k| k.max(0) as u32).collect();
        let neg: Monomial = e.iter().map(|&k| (-k).max(0) as u32).collect();
        RationalFunction { num: Poly::monomial(nvars, pos, 1), den: Poly::monomial(nvars, neg, 1) }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }
    pub fn num(&self) -> &Poly {
        &self.num
    }
    pub fn den(&self) -> &Poly {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    pub fn powi(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        RationalFunction { num: base.num.pow(k), den: base.den.pow(k) }
    }

    /// Exchanges variables 0 and 1.
    pub fn swap(&self) -> Self {
        let mut perm: Vec<usize> = (0..self.nvars()).collect();
        perm.swap(0, 1);
        RationalFunction::new(self.num.permute_vars(&perm), self.den.permute_vars(&perm))
    }

    /// Every variable replaced by its inverse.
    pub fn par_bar(&self) -> Self {
        let pad: Monomial = (0..self.nvars()).map(|i| self.num.degree_in(i).max(self.den.degree_in(i))).collect();
        RationalFunction::new(self.num.reflect(&pad), self.den.reflect(&pad))
    }

    /// `(x, y) -> (1/y, 1/x)`.
    pub fn times_bar(&self) -> Self {
        self.par_bar().swap()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap()
    }
    pub fn is_par_symmetric(&self) -> bool {
        *self == self.par_bar()
    }
    pub fn is_times_symmetric(&self) -> bool {
        *self == self.times_bar()
    }

    /// `f(x, y) + f(y, x)`.
    pub fn circ(&self) -> Self {
        self + &self.swap()
    }

    /// Substitutes rational functions for the variables.
    pub fn compose(&self, subs: &[RationalFunction]) -> Self {
        assert_eq!(subs.len(), self.nvars());
        let n = subs[0].nvars();
        let one = RationalFunction::constant(n, 1);
        let a = self.num.eval_with(one.clone(), |i| subs[i].clone());
        let b = self.den.eval_with(one, |i| subs[i].clone());
        &a / &b
    }
}

impl super::poly::ScalarMul for RationalFunction {
    fn scalar_mul(&self, c: &BigInt) -> Self {
        RationalFunction::new(self.num.scale(c), self.den.clone())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = rhs.den.div_exact(&g).expect("gcd divides");
        RationalFunction::new(&(&self.num * &b) + &(&rhs.num * &a), &a * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs.clone())
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::constant(self.nvars(), 0);
        }
        // cross-cancel before multiplying to keep sizes down
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let mut num = &n1 * &n2;
        let mut den = &d1 * &d2;
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv()
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> RationalFunction {
        RationalFunction::var(2, 0)
    }
    fn y() -> RationalFunction {
        RationalFunction::var(2, 1)
    }
    fn k(c: i64) -> RationalFunction {
        RationalFunction::constant(2, c)
    }

    #[test]
    fn normalization_is_canonical() {
        let a = &(&x() + &y()) / &(&x() * &(&x() + &y()));
        assert_eq!(a, x().inv());
        let b = &k(-2) / &(&k(-4) * &y());
        assert_eq!(b, &k(1) / &(&k(2) * &y()));
        assert_eq!(&(&x() / &y()) + &(&y() / &x()), &(&(&x() * &x()) + &(&y() * &y())) / &(&x() * &y()));
    }

    #[test]
    fn symmetry_substitutions() {
        assert!(k(1).is_symmetric() && k(1).is_par_symmetric() && k(1).is_times_symmetric());
        let xy = &x() * &y();
        assert!(!xy.is_par_symmetric());
        let f = &(&x() + &x().inv()) * &(&y() + &y().inv());
        assert!(f.is_par_symmetric() && f.is_symmetric());
        assert_eq!((&x() / &(&k(1) + &y())).par_bar(), &y() / &(&x() * &(&y() + &k(1))));
        assert_eq!(x().circ(), &x() + &y());
    }

    #[test]
    fn compose_substitutes() {
        let f = &x() / &(&k(1) - &y());
        let g = f.compose(&[y(), &x() * &k(2)]);
        assert_eq!(g, &y() / &(&k(1) - &(&x() * &k(2))));
    }
}
