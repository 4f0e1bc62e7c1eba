//! Rational functions of `(D•, D∘)` with a factored denominator.
//!
//! Every denominator met in the pipeline is a product of
//! `K = 1 + 2(D• + D∘) + D•D∘`, of the factors `ψ_d(D•D∘)` of
//! `1 − x^C = ∏_{d | C} ψ_d(x)` (`ψ_1 = 1 − x`, `ψ_d = Φ_d` for `d ≥ 2`) and
//! of a monomial. Keeping the exponents avoids gcd computations: sums use the
//! factorwise maximum and equality is tested on a common denominator.

use super::poly::{Monomial, Poly};
use super::RationalFunction;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// `num · D•^{m0} D∘^{m1} / (K^k ∏ ψ_d^{e_d})`.
#[derive(Clone, Debug)]
pub struct FactoredRational {
    num: Poly,
    mono: [i64; 2],
    k: u32,
    psi: BTreeMap<u32, u32>,
}

/// `ψ_d(x)` as a univariate polynomial.
fn psi_univariate(d: u32) -> Poly {
    let x = Poly::var(1, 0);
    let one = Poly::one(1);
    if d == 1 {
        return &one - &x;
    }
    let mut p = &x.pow(d) - &one;
    for e in 1..d {
        if d.is_multiple_of(e) {
            let f = if e == 1 { &x - &one } else { psi_univariate(e) };
            p = p.div_exact(&f).expect("cyclotomic factor divides");
        }
    }
    p
}

/// `ψ_d(D•D∘)`.
fn psi(d: u32) -> Poly {
    Poly::from_terms(2, psi_univariate(d).terms().iter().map(|(e, c)| (vec![e[0], e[0]], c.clone())))
}

fn k_poly() -> Poly {
    let b = Poly::var(2, 0);
    let w = Poly::var(2, 1);
    let two = BigInt::from(2);
    &(&(&Poly::one(2) + &b.scale(&two)) + &w.scale(&two)) + &(&b * &w)
}

impl FactoredRational {
    pub fn from_poly(p: Poly) -> Self {
        assert_eq!(p.nvars(), 2);
        FactoredRational { num: p, mono: [0, 0], k: 0, psi: BTreeMap::new() }
    }
    pub fn constant(c: i64) -> Self {
        Self::from_poly(Poly::constant(2, c))
    }
    pub fn monomial(a: i64, b: i64) -> Self {
        FactoredRational { num: Poly::one(2), mono: [a, b], k: 0, psi: BTreeMap::new() }
    }
    /// `t•` (`c = 0`) or `t∘` (`c = 1`), that is `D_c / K`.
    pub fn t(c: usize) -> Self {
        let mut m = [0, 0];
        m[c] = 1;
        FactoredRational { num: Poly::one(2), mono: m, k: 1, psi: BTreeMap::new() }
    }
    /// `B = K / (1 − D•D∘)`.
    pub fn b() -> Self {
        FactoredRational { num: k_poly(), mono: [0, 0], k: 0, psi: BTreeMap::from([(1, 1)]) }
    }
    /// `1 / (1 − (D•D∘)^c)`, for `c ≥ 1`.
    pub fn geometric(c: u32) -> Self {
        assert!(c >= 1);
        let psi = (1..=c).filter(|d| c.is_multiple_of(*d)).map(|d| (d, 1)).collect();
        FactoredRational { num: Poly::one(2), mono: [0, 0], k: 0, psi }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = FactoredRational::constant(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Brings both operands to the same denominator; returns the two numerators
    /// and the shared factors.
    fn align(a: &Self, b: &Self) -> (Poly, Poly, Self) {
        let k = a.k.max(b.k);
        let mut exps = a.psi.clone();
        for (&d, &e) in &b.psi {
            let x = exps.entry(d).or_insert(0);
            *x = (*x).max(e);
        }
        let mono = [a.mono[0].min(b.mono[0]), a.mono[1].min(b.mono[1])];
        let lift = |f: &Self| -> Poly {
            let mut p = f.num.shift(&[(f.mono[0] - mono[0]) as u32, (f.mono[1] - mono[1]) as u32]);
            if k > f.k {
                p = &p * &k_poly().pow(k - f.k);
            }
            for (&d, &e) in &exps {
                let have = f.psi.get(&d).copied().unwrap_or(0);
                if e > have {
                    p = &p * &psi(d).pow(e - have);
                }
            }
            p
        };
        let shared = FactoredRational { num: Poly::zero(2), mono, k, psi: exps.clone() };
        (lift(a), lift(b), shared)
    }

    /// Both variables inverted.
    pub fn par_bar(&self) -> Self {
        let pad: Monomial = vec![self.num.degree_in(0), self.num.degree_in(1)];
        let mut num = self.num.reflect(&pad);
        // K(1/D) = K / (D•D∘); ψ_1(1/x) = −ψ_1(x)/x; ψ_d(1/x) = ψ_d(x) / x^{deg ψ_d} for d ≥ 2
        let mut x_power = self.k as i64;
        for (&d, &e) in &self.psi {
            if d == 1 {
                if e % 2 == 1 {
                    num = -num;
                }
                x_power += e as i64;
            } else {
                x_power += e as i64 * psi_univariate(d).degree_in(0) as i64;
            }
        }
        let mono = [x_power - self.mono[0] - pad[0] as i64, x_power - self.mono[1] - pad[1] as i64];
        FactoredRational { num, mono, k: self.k, psi: self.psi.clone() }
    }

    /// `D•` and `D∘` exchanged.
    pub fn swap(&self) -> Self {
        FactoredRational {
            num: self.num.permute_vars(&[1, 0]),
            mono: [self.mono[1], self.mono[0]],
            k: self.k,
            psi: self.psi.clone(),
        }
    }

    /// `f(D•, D∘) + f(D∘, D•)`.
    pub fn circ(&self) -> Self {
        self + &self.swap()
    }

    pub fn is_par_symmetric(&self) -> bool {
        *self == self.par_bar()
    }

    /// The same function in lowest terms.
    pub fn to_rational(&self) -> RationalFunction {
        let pos: Vec<u32> = self.mono.iter().map(|&m| m.max(0) as u32).collect();
        let neg: Vec<u32> = self.mono.iter().map(|&m| (-m).max(0) as u32).collect();
        let mut den = Poly::monomial(2, neg, 1);
        den = &den * &k_poly().pow(self.k);
        for (&d, &e) in &self.psi {
            den = &den * &psi(d).pow(e);
        }
        RationalFunction::new(self.num.shift(&pos), den)
    }
}

impl PartialEq for FactoredRational {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = FactoredRational::align(self, other);
        a == b
    }
}

impl Add for &FactoredRational {
    type Output = FactoredRational;
    fn add(self, o: &FactoredRational) -> FactoredRational {
        let (a, b, mut s) = FactoredRational::align(self, o);
        s.num = &a + &b;
        s
    }
}

impl Sub for &FactoredRational {
    type Output = FactoredRational;
    fn sub(self, o: &FactoredRational) -> FactoredRational {
        self + &(-o.clone())
    }
}

impl Neg for FactoredRational {
    type Output = FactoredRational;
    fn neg(mut self) -> FactoredRational {
        self.num = -self.num;
        self
    }
}

impl Mul for &FactoredRational {
    type Output = FactoredRational;
    fn mul(self, o: &FactoredRational) -> FactoredRational {
        let mut psi = self.psi.clone();
        for (&d, &e) in &o.psi {
            *psi.entry(d).or_insert(0) += e;
        }
        FactoredRational {
            num: &self.num * &o.num,
            mono: [self.mono[0] + o.mono[0], self.mono[1] + o.mono[1]],
            k: self.k + o.k,
            psi,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_engine::rational_t_and_b;

    #[test]
    fn cyclotomic_factors_multiply_to_one_minus_power() {
        for c in 1..=12u32 {
            let mut p = Poly::one(2);
            for d in (1..=c).filter(|d| c % d == 0) {
                p = &p * &psi(d);
            }
            let x = &Poly::var(2, 0) * &Poly::var(2, 1);
            assert_eq!(p, &Poly::one(2) - &x.pow(c));
        }
    }

    #[test]
    fn agrees_with_lowest_terms() {
        let (tb, tw, b) = rational_t_and_b();
        assert_eq!(FactoredRational::t(0).to_rational(), tb);
        assert_eq!(FactoredRational::t(1).to_rational(), tw);
        assert_eq!(FactoredRational::b().to_rational(), b);
        let f = &(&FactoredRational::b().pow(3) * &FactoredRational::geometric(6)) * &FactoredRational::monomial(-2, 1);
        let g = &f + &(&FactoredRational::t(0) * &FactoredRational::geometric(4));
        let want = &(&(&b.powi(3) / &(&RationalFunction::constant(2, 1) - &RationalFunction::monomial(2, &[6, 6])))
            * &RationalFunction::monomial(2, &[-2, 1]))
            + &(&tb / &(&RationalFunction::constant(2, 1) - &RationalFunction::monomial(2, &[4, 4])));
        assert_eq!(g.to_rational(), want);
        assert_eq!(g.par_bar().to_rational(), want.par_bar());
        assert_eq!(g.swap().to_rational(), want.swap());
        assert!(g == g.par_bar().par_bar());
        assert!(&g - &g == FactoredRational::constant(0));
        assert!((-FactoredRational::b()).to_rational() == FactoredRational::b().par_bar().to_rational());
    }
}
