//! Truncated multivariate power series with exact rational coefficients.

use super::poly::{Monomial, Poly, ScalarMul};
use super::rational::RationalFunction;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Power series in `nvars` variables, known up to total degree `order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

fn deg(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl TruncatedSeries {
    pub fn zero(nvars: usize, order: u32) -> Self {
        TruncatedSeries { nvars, order, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, order: u32, c: BigRational) -> Self {
        let mut s = Self::zero(nvars, order);
        s.add_term(vec![0; nvars], c);
        s
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        Self::constant(nvars, order, BigRational::one())
    }

    pub fn var(nvars: usize, order: u32, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, order, e, BigRational::one())
    }

    pub fn monomial(nvars: usize, order: u32, e: Monomial, c: BigRational) -> Self {
        let mut s = Self::zero(nvars, order);
        s.add_term(e, c);
        s
    }

    /// Truncation of an integer polynomial.
    pub fn from_poly(p: &Poly, order: u32) -> Self {
        let mut s = Self::zero(p.nvars(), order);
        for (e, c) in p.terms() {
            s.add_term(e.clone(), BigRational::from_integer(c.clone()));
        }
        s
    }

    pub fn from_terms(nvars: usize, order: u32, it: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut s = Self::zero(nvars, order);
        for (e, c) in it {
            s.add_term(e, c);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn order(&self) -> u32 {
        self.order
    }
    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&vec![0; self.nvars])
    }

    /// Smallest total degree of a nonzero term.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().map(|e| deg(e)).min()
    }

    pub fn add_term(&mut self, e: Monomial, c: BigRational) {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() || deg(&e) > self.order {
            return;
        }
        let v = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Same series known to a smaller order.
    pub fn truncated(&self, order: u32) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            nvars: self.nvars,
            order,
            terms: self.terms.iter().filter(|(e, _)| deg(e) <= order).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Equality on the common range of validity.
    pub fn agrees_with(&self, o: &TruncatedSeries) -> bool {
        let n = self.order.min(o.order);
        self.truncated(n).terms == o.truncated(n).terms
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries::from_terms(self.nvars, self.order, self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    /// Multiplies by `x^e`, losing nothing below the order.
    pub fn shift(&self, e: &[u32]) -> Self {
        TruncatedSeries::from_terms(
            self.nvars,
            self.order,
            self.terms.iter().map(|(m, c)| (m.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone())),
        )
    }

    /// Divides by `x^e`. Every term must be divisible; the order drops by `|e|`.
    pub fn unshift(&self, e: &[u32]) -> Result<Self> {
        let k = deg(e);
        let order = self.order.checked_sub(k).ok_or_else(|| Error::DomainError("shift exceeds order".into()))?;
        let mut s = TruncatedSeries::zero(self.nvars, order);
        for (m, c) in &self.terms {
            if m.iter().zip(e).any(|(a, b)| a < b) {
                return Err(Error::DomainError("negative exponent in quotient".into()));
            }
            s.add_term(m.iter().zip(e).map(|(a, b)| a - b).collect(), c.clone());
        }
        Ok(s)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = TruncatedSeries::one(self.nvars, self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::DomainError("inverse of a series without constant term".into()));
        }
        let ci = c.recip();
        // 1/(c(1 - g)) = (1/c) sum g^k with g of positive valuation
        let g = &TruncatedSeries::one(self.nvars, self.order) - &self.scale(&ci);
        let mut acc = TruncatedSeries::one(self.nvars, self.order);
        let mut p = acc.clone();
        for _ in 0..self.order {
            p = &p * &g;
            if p.is_zero() {
                break;
            }
            acc = &acc + &p;
        }
        Ok(acc.scale(&ci))
    }

    /// Exchanges variables 0 and 1.
    pub fn swap(&self) -> Self {
        TruncatedSeries::from_terms(
            self.nvars,
            self.order,
            self.terms.iter().map(|(e, c)| {
                let mut f = e.clone();
                f.swap(0, 1);
                (f, c.clone())
            }),
        )
    }

    /// Identifies every variable with a single one.
    pub fn diagonal(&self) -> Self {
        TruncatedSeries::from_terms(1, self.order, self.terms.iter().map(|(e, c)| (vec![deg(e)], c.clone())))
    }

    /// `p(subs)` for a polynomial `p`; the substituted series must have zero
    /// constant term or `p` must be constant in that variable.
    pub fn eval_poly(p: &Poly, subs: &[TruncatedSeries]) -> TruncatedSeries {
        assert_eq!(p.nvars(), subs.len());
        let (n, order) = (subs[0].nvars, subs.iter().map(|s| s.order).min().unwrap());
        p.eval_with(TruncatedSeries::one(n, order), |i| subs[i].clone())
    }

    /// `f(subs)` for a rational function. A monomial factor `m` of the
    /// denominator is divided out at the end, which costs the valuation of
    /// `m(subs)` in precision: the result is known to
    /// `min order of subs - val(m(subs))`. Every term of `m(subs)` must be
    /// divisible by its lowest monomial (true for D•, D∘ in t•, t∘).
    pub fn eval_rational(f: &RationalFunction, subs: &[TruncatedSeries]) -> Result<TruncatedSeries> {
        let m = f.den().monomial_content();
        let den = f.den().unshift(&m);
        let a = TruncatedSeries::eval_poly(f.num(), subs);
        let b = TruncatedSeries::eval_poly(&den, subs);
        let q = &a * &b.inv()?;
        if m.iter().all(|&k| k == 0) {
            return Ok(q);
        }
        let mono = Poly::monomial(f.nvars(), m, 1);
        let mm = TruncatedSeries::eval_poly(&mono, subs);
        let v = mm.valuation().ok_or_else(|| Error::DomainError("monomial vanishes".into()))?;
        let lows: Vec<&Monomial> = mm.terms.keys().filter(|e| deg(e) == v).collect();
        if lows.len() != 1 {
            return Err(Error::DomainError("monomial factor has no single leading term".into()));
        }
        let lead = lows[0].clone();
        let unit = mm.unshift(&lead)?;
        Ok(&q.unshift(&lead)? * &unit.inv()?)
    }

    /// Re-declares the order; only meaningful when the series is exact
    /// (e.g. a polynomial or a series computed afresh to the new order).
    pub fn with_order(&self, order: u32) -> Self {
        let mut s = self.truncated(order);
        s.order = order;
        s
    }

    /// Integer coefficient table, for dumps; fails on non-integral entries.
    pub fn integer_coefficients(&self) -> Result<BTreeMap<Monomial, BigInt>> {
        self.terms
            .iter()
            .map(|(e, c)| {
                if c.is_integer() {
                    Ok((e.clone(), c.to_integer()))
                } else {
                    Err(Error::ConversionFailure(format!("coefficient {c} is not an integer")))
                }
            })
            .collect()
    }
}

impl ScalarMul for TruncatedSeries {
    fn scalar_mul(&self, c: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(c.clone()))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, o: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.nvars, o.nvars);
        let mut s = self.truncated(o.order);
        for (e, c) in &o.terms {
            s.add_term(e.clone(), c.clone());
        }
        s
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, o: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.nvars, o.nvars);
        let mut s = self.truncated(o.order);
        for (e, c) in &o.terms {
            s.add_term(e.clone(), -c.clone());
        }
        s
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, o: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.nvars, o.nvars);
        let order = self.order.min(o.order);
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (a, x) in &self.terms {
            let da = deg(a);
            if da > order {
                continue;
            }
            for (b, y) in &o.terms {
                if da + deg(b) > order {
                    continue;
                }
                let e: Monomial = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *terms.entry(e).or_insert_with(BigRational::zero) += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        TruncatedSeries { nvars: self.nvars, order, terms }
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(mut self) -> TruncatedSeries {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $f(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// Solves `X = f(X)` by iteration from `X = 0` until two successive iterates
/// agree. A contracting system gains one order per round, so stability is
/// reached within `order + 1` rounds; anything else is reported.
pub fn solve_fixed_point<F>(nvars: usize, order: u32, unknowns: usize, f: F) -> Result<Vec<TruncatedSeries>>
where
    F: Fn(&[TruncatedSeries]) -> Vec<TruncatedSeries>,
{
    let mut x = vec![TruncatedSeries::zero(nvars, order); unknowns];
    for _ in 0..order + 3 {
        let y: Vec<TruncatedSeries> = f(&x).into_iter().map(|s| s.truncated(order)).collect();
        assert_eq!(y.len(), unknowns);
        if y.iter().any(|s| s.order < order) {
            return Err(Error::NonContracting);
        }
        if y == x {
            return Ok(x);
        }
        x = y;
    }
    Err(Error::NonContracting)
}

/// Compositional inverse of `z = phi(T)` where `phi(T) = T + (higher order)`
/// componentwise: returns `T(z)`.
pub fn reversion<F>(nvars: usize, order: u32, phi: F) -> Result<Vec<TruncatedSeries>>
where
    F: Fn(&[TruncatedSeries]) -> Vec<TruncatedSeries>,
{
    let z: Vec<TruncatedSeries> = (0..nvars).map(|i| TruncatedSeries::var(nvars, order, i)).collect();
    solve_fixed_point(nvars, order, nvars, |t| {
        let p = phi(t);
        (0..nvars).map(|i| &(&z[i] + &t[i]) - &p[i]).collect()
    })
}

/// `T(z)` with `T = z + 3T^2`.
pub fn tree_series(order: u32) -> Result<TruncatedSeries> {
    let z = TruncatedSeries::var(1, order, 0);
    let three = BigRational::from_integer(3.into());
    let mut s = solve_fixed_point(1, order, 1, |t| vec![&z + &(&t[0] * &t[0]).scale(&three)])?;
    Ok(s.remove(0))
}

/// `(T•, T∘)` in `(z•, z∘)` with `T• = z• + T•^2 + 2 T∘ T•` and its mirror.
pub fn bicolored_tree_series(order: u32) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let zb = TruncatedSeries::var(2, order, 0);
    let zw = TruncatedSeries::var(2, order, 1);
    let two = BigRational::from_integer(2.into());
    let mut s = solve_fixed_point(2, order, 2, |t| {
        let (b, w) = (&t[0], &t[1]);
        let bw = (b * w).scale(&two);
        vec![&(&zb + &(b * b)) + &bw, &(&zw + &(w * w)) + &bw]
    })?;
    let w = s.pop().unwrap();
    let b = s.pop().unwrap();
    Ok((b, w))
}

/// `z•(T•, T∘) = T• − T•² − 2T∘T•` and its mirror, as polynomials in `(T•, T∘)`.
pub fn tree_parametrization() -> (Poly, Poly) {
    let b = Poly::var(2, 0);
    let w = Poly::var(2, 1);
    let two = BigInt::from(2);
    let zb = &(&b - &(&b * &b)) - &(&b * &w).scale(&two);
    let zw = &(&w - &(&w * &w)) - &(&b * &w).scale(&two);
    (zb, zw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn tree_coefficients() {
        let t = tree_series(6).unwrap();
        let c: Vec<BigRational> = (1..=4).map(|k| t.coeff(&[k])).collect();
        assert_eq!(c, vec![q(1), q(3), q(18), q(135)]);
        assert!(t.constant_term().is_zero());
    }

    #[test]
    fn bicolored_trees_specialize_and_reverse() {
        let (b, w) = bicolored_tree_series(12).unwrap();
        let t = tree_series(12).unwrap();
        assert_eq!(b.diagonal(), t);
        assert_eq!(w.diagonal(), t);
        assert_eq!(b.swap(), w);
        let (zb, zw) = tree_parametrization();
        let rev = reversion(2, 12, |t| {
            vec![TruncatedSeries::eval_poly(&zb, t), TruncatedSeries::eval_poly(&zw, t)]
        })
        .unwrap();
        assert_eq!(rev, vec![b.clone(), w.clone()]);
        // residual of the defining equation
        let back = TruncatedSeries::eval_poly(&zb, &[b, w]);
        assert_eq!(back, TruncatedSeries::var(2, 12, 0));
    }

    #[test]
    fn non_contracting_is_reported() {
        let r = solve_fixed_point(1, 4, 1, |x| vec![&x[0] + &TruncatedSeries::one(1, 4)]);
        assert_eq!(r.unwrap_err(), Error::NonContracting);
    }

    #[test]
    fn inverse_and_rational_evaluation() {
        let x = TruncatedSeries::var(1, 8, 0);
        let one = TruncatedSeries::one(1, 8);
        let g = (&one - &x).inv().unwrap();
        assert!((0..=8).all(|k| g.coeff(&[k]) == q(1)));
        // (X - Y) / X at (X, Y) = (x, x + x^2) is -x, known to order 7
        let f = RationalFunction::new(&Poly::var(2, 0) - &Poly::var(2, 1), Poly::var(2, 0));
        let v = TruncatedSeries::eval_rational(&f, &[x.clone(), &x + &(&x * &x)]).unwrap();
        assert_eq!(v, (-x.clone()).truncated(7));
        let h = RationalFunction::new(Poly::one(2), &Poly::one(2) - &Poly::var(2, 1));
        assert_eq!(TruncatedSeries::eval_rational(&h, &[x.clone(), x.clone()]).unwrap(), g);
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(((0u32..4, 0u32..4), -5i64..6), 0..8).prop_map(|ts| {
            TruncatedSeries::from_terms(2, 5, ts.into_iter().map(|((a, b), c)| (vec![a, b], q(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
