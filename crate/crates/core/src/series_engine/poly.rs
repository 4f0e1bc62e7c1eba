//! Sparse multivariate polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Polynomial in `nvars` variables with integer coefficients. Monomials are
/// compared lexicographically with variable 0 most significant; the leading
/// term is the largest monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn monomial(nvars: usize, exps: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { nvars, terms }
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms.values().next().is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Monomial, c: BigInt) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            p.terms.insert(f, c.clone());
        }
        p
    }

    /// `x^pad · p(1/x)`, variable by variable; `pad` must dominate every degree.
    pub fn reflect(&self, pad: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(pad).map(|(a, p)| p - a).collect(), c.clone())).collect(),
        }
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        (0..self.nvars).map(|i| self.min_degree_in(i)).collect()
    }

    /// Divides out a monomial dividing every term.
    pub fn unshift(&self, e: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.iter().zip(e).map(|(a, b)| a - b).collect(), c.clone())).collect(),
        }
    }

    /// Gcd of the integer coefficients, nonnegative.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn sign_normalized(self) -> Poly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self,
        }
    }

    /// Coefficients with respect to `var`, as polynomials free of `var`.
    fn coeffs_in(&self, var: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f[var] = 0;
            out.entry(e[var]).or_insert_with(|| Poly::zero(self.nvars)).terms.insert(f, c.clone());
        }
        out
    }

    fn leading_coeff_in(&self, var: usize) -> Poly {
        self.coeffs_in(var).into_iter().next_back().map(|(_, p)| p).unwrap_or_else(|| Poly::zero(self.nvars))
    }

    fn main_var(&self) -> Option<usize> {
        (0..self.nvars).find(|&i| self.terms.keys().any(|e| e[i] > 0))
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(self.clone());
        }
        if d.terms.len() == 1 {
            let (de, dc) = d.leading().unwrap();
            let mut q = Poly::zero(self.nvars);
            for (e, c) in &self.terms {
                let (qc, r) = c.div_rem(dc);
                if !r.is_zero() || e.iter().zip(de).any(|(a, b)| a < b) {
                    return None;
                }
                q.terms.insert(e.iter().zip(de).map(|(a, b)| a - b).collect(), qc);
            }
            return Some(q);
        }
        let (de, dc) = d.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut r = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((re, rc)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let (qc, rem) = rc.div_rem(&dc);
            if !rem.is_zero() {
                return None;
            }
            let qe: Monomial = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let t = Poly::monomial(self.nvars, qe.clone(), qc.clone());
            r = &r - &(&t * d);
            q.add_term(qe, qc);
        }
        Some(q)
    }

    /// Content with respect to `var`: gcd of the coefficients in `var`.
    fn content_in(&self, var: usize) -> Poly {
        let mut g = Poly::zero(self.nvars);
        for (_, c) in self.coeffs_in(var) {
            g = g.gcd(&c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Pseudo-remainder of `self` by `b` with respect to `var`.
    fn pseudo_rem(&self, b: &Poly, var: usize) -> Poly {
        let db = b.degree_in(var);
        let lb = b.leading_coeff_in(var);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lr = r.leading_coeff_in(var);
            let mut e = vec![0; self.nvars];
            e[var] = dr - db;
            r = &(&r * &lb) - &(&lr.shift(&e) * b);
        }
        r
    }

    /// Greatest common divisor, with positive leading coefficient. The gcd of
    /// two zero polynomials is zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() {
            return other.clone().sign_normalized();
        }
        if other.is_zero() {
            return self.clone().sign_normalized();
        }
        if self.is_constant() || other.is_constant() {
            let g = self.integer_content().gcd(&other.integer_content());
            return Poly::constant(self.nvars, g);
        }
        // strip common monomial factors first: cheap and frequent here
        let ma = self.monomial_content();
        let mb = other.monomial_content();
        if ma.iter().chain(&mb).any(|&x| x > 0) {
            let m: Monomial = ma.iter().zip(&mb).map(|(a, b)| *a.min(b)).collect();
            let g = self.unshift(&ma).gcd(&other.unshift(&mb));
            return g.shift(&m);
        }
        let var = match (self.main_var(), other.main_var()) {
            (Some(a), Some(b)) => a.min(b),
            _ => unreachable!("nonconstant polynomials have a variable"),
        };
        let in_a = self.degree_in(var) > 0;
        let in_b = other.degree_in(var) > 0;
        if !in_a {
            return self.gcd(&other.content_in(var));
        }
        if !in_b {
            return self.content_in(var).gcd(other);
        }
        let ca = self.content_in(var);
        let cb = other.content_in(var);
        let gc = ca.gcd(&cb);
        let mut a = self.div_exact(&ca).expect("content divides");
        let mut b = other.div_exact(&cb).expect("content divides");
        if a.degree_in(var) < b.degree_in(var) {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b, var);
            if r.is_zero() {
                break;
            }
            if r.degree_in(var) == 0 {
                b = Poly::one(self.nvars);
                break;
            }
            let c = r.content_in(var);
            a = b;
            b = r.div_exact(&c).expect("content divides");
        }
        (&gc * &b).sign_normalized()
    }

    /// Evaluates with `f(i)` standing for variable `i`, in any commutative ring.
    pub fn eval_with<T, F>(&self, one: T, f: F) -> T
    where
        T: Clone + Add<Output = T> + Mul<Output = T>,
        F: Fn(usize) -> T,
        T: ScalarMul,
    {
        let vals: Vec<T> = (0..self.nvars).map(&f).collect();
        let mut powers: Vec<Vec<T>> = vals.iter().map(|v| vec![one.clone(), v.clone()]).collect();
        let mut acc: Option<T> = None;
        for (e, c) in &self.terms {
            let mut m = one.clone();
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().clone() * vals[i].clone();
                    powers[i].push(next);
                }
                if k > 0 {
                    m = m * powers[i][k as usize].clone();
                }
            }
            let term = m.scalar_mul(c);
            acc = Some(match acc {
                None => term,
                Some(a) => a + term,
            });
        }
        acc.unwrap_or_else(|| one.scalar_mul(&BigInt::zero()))
    }
}

/// Multiplication by an integer scalar, for [`Poly::eval_with`].
pub trait ScalarMul {
    fn scalar_mul(&self, c: &BigInt) -> Self;
}

impl ScalarMul for Poly {
    fn scalar_mul(&self, c: &BigInt) -> Self {
        self.scale(c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), -c);
        }
        p
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Monomial = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *terms.entry(e).or_default() += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { nvars: self.nvars, terms }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    /// Variables print as `x0, x1, ...`; terms from the leading one down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("x{i}") } else { format!("x{i}^{x}") })
                .collect();
            let neg = c.is_negative();
            if k > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(2, 0)
    }
    fn y() -> Poly {
        Poly::var(2, 1)
    }
    fn c(k: i64) -> Poly {
        Poly::constant(2, k)
    }

    #[test]
    fn arithmetic_and_division() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p, &x().pow(2) - &y().pow(2));
        assert_eq!(p.div_exact(&(&x() + &y())), Some(&x() - &y()));
        assert_eq!(p.div_exact(&(&x() + &c(1))), None);
        assert_eq!(p.to_string(), "x0^2 - x1^2");
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = &(&x() * &y()) + &c(3);
        let a = &f * &(&x().pow(2) + &y());
        let b = &(&f * &(&y().pow(3) - &x())).scale(&BigInt::from(-6));
        let g = a.gcd(b);
        assert_eq!(g, f);
        let h = &(&x() - &c(1)).pow(3) * &(&y() + &c(2)).scale(&BigInt::from(4));
        let k = &(&x() - &c(1)).pow(2) * &(&y() + &c(2)).scale(&BigInt::from(6));
        assert_eq!(h.gcd(&k), (&(&x() - &c(1)).pow(2) * &(&y() + &c(2))).scale(&BigInt::from(2)));
        assert_eq!((&x() * &y()).gcd(&x().pow(3)), x());
        assert_eq!((&x() + &c(1)).gcd(&(&x() - &c(1))), c(1));
    }

    #[test]
    fn reflect_and_permute() {
        let p = &(&x() * &y().pow(2)) + &c(5);
        assert_eq!(p.permute_vars(&[1, 0]), &(&y() * &x().pow(2)) + &c(5));
        assert_eq!(p.reflect(&[1, 2]), &Poly::one(2) + &(&x() * &y().pow(2)).scale(&BigInt::from(5)));
    }
}
