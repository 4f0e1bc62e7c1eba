//! Exact series and rational-function machinery, and the rationality
//! pipeline from labeled schemes to the genus-one map series.
//!
//! Bivariate objects use variable 0 for the black parameter (`t•`, `D•`,
//! `T•`, `z•`) and variable 1 for the white one.

pub mod factored;
pub mod pipeline;
pub mod poly;
pub mod rational;
pub mod series;

pub use poly::Poly;
pub use rational::RationalFunction;
use poly::ScalarMul;
pub use series::{bicolored_tree_series, reversion, solve_fixed_point, tree_parametrization, tree_series, TruncatedSeries};

use crate::error::{Error, Result};

/// `(t•, t∘, B)` as rational functions of `(D•, D∘)`.
pub fn rational_t_and_b() -> (RationalFunction, RationalFunction, RationalFunction) {
    let db = Poly::var(2, 0);
    let dw = Poly::var(2, 1);
    let one = Poly::one(2);
    let two = num_bigint::BigInt::from(2);
    let prod = &db * &dw;
    let k = &(&one + &(&db + &dw).scale(&two)) + &prod;
    let tb = RationalFunction::new(db.clone(), k.clone());
    let tw = RationalFunction::new(dw.clone(), k.clone());
    let b = RationalFunction::new(k, &one - &prod);
    (tb, tw, b)
}

/// Exponents `(a, b)` of `Δ_i^j(x, y) = x^a y^b`: `a` counts the even and `b`
/// the odd integers of `[i, j)`.
pub fn delta(i: i64, j: i64) -> Result<(u32, u32)> {
    if i > j {
        return Err(Error::BadInterval(i, j));
    }
    let ceil_half = |a: i64| (a + 1).div_euclid(2);
    let evens = (ceil_half(j) - ceil_half(i)) as u32;
    Ok((evens, (j - i) as u32 - evens))
}

/// `Δ_i^j(x, y)` as a rational function in the given variable order.
pub fn delta_rational(i: i64, j: i64, x: usize, y: usize) -> Result<RationalFunction> {
    let (a, b) = delta(i, j)?;
    let mut e = vec![0i64; 2];
    e[x] += a as i64;
    e[y] += b as i64;
    Ok(RationalFunction::monomial(2, &e))
}

/// Outcome of [`verify_criterion`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub symmetric: bool,
    pub par_symmetric: bool,
    /// The same function written in `(t•, t∘)`, when both symmetries hold.
    pub in_t: Option<RationalFunction>,
}

/// For `f` rational in `(D•, D∘)`: tests symmetry and ∥-symmetry and, when
/// both hold, rewrites `f` as a rational function of `(t•, t∘)`, checked by
/// substituting back.
pub fn verify_criterion(f: &RationalFunction) -> Result<CriterionReport> {
    let symmetric = f.is_symmetric();
    let par_symmetric = f.is_par_symmetric();
    if !(symmetric && par_symmetric) {
        return Ok(CriterionReport { symmetric, par_symmetric, in_t: None });
    }
    let g = d_to_t(f)?;
    let (tb, tw, _) = rational_t_and_b();
    if g.compose(&[tb, tw]) != *f {
        return Err(Error::ConversionFailure("substituting back does not return the input".into()));
    }
    Ok(CriterionReport { symmetric, par_symmetric, in_t: Some(g) })
}

/// Rewrites `f(D•, D∘)` in terms of `(t•, t∘)` when it lies in that subfield.
///
/// Over `Q(t•, t∘)`, `D∘ = (t∘/t•) D•` and `D•` is a root of
/// `t∘ X² + (2t• + 2t∘ − 1) X + t•`, so numerator and denominator reduce to
/// `a + b D•`. The quotient lies in `Q(t•, t∘)` exactly when the two pairs are
/// proportional, and then it is `a_num / a_den` (or `b_num / b_den`).
pub fn d_to_t(f: &RationalFunction) -> Result<RationalFunction> {
    if f.nvars() != 2 {
        return Err(Error::ConversionFailure("expected two variables".into()));
    }
    let tb = RationalFunction::var(2, 0);
    let tw = RationalFunction::var(2, 1);
    let one = RationalFunction::constant(2, 1);
    let ratio = &tw / &tb;
    let p = -(&tb / &tw);
    let q = -(&(&(&tb + &tw).scalar_mul(&2.into()) - &one) / &tw);
    let ctx = std::rc::Rc::new((p, q));
    let unit = Quad { a: one.clone(), b: RationalFunction::constant(2, 0), ctx: ctx.clone() };
    let d = Quad { a: RationalFunction::constant(2, 0), b: one, ctx: ctx.clone() };
    let dw = Quad { a: RationalFunction::constant(2, 0), b: ratio, ctx };
    let subs = [d, dw];
    let n = f.num().eval_with(unit.clone(), |i| subs[i].clone());
    let m = f.den().eval_with(unit, |i| subs[i].clone());
    if &n.a * &m.b != &n.b * &m.a {
        return Err(Error::ConversionFailure("function is not in the subfield of t•, t∘".into()));
    }
    Ok(if m.a.is_zero() { &n.b / &m.b } else { &n.a / &m.a })
}

/// `a + b X` modulo `X² = p + q X`.
#[derive(Clone)]
struct Quad {
    a: RationalFunction,
    b: RationalFunction,
    ctx: std::rc::Rc<(RationalFunction, RationalFunction)>,
}

impl std::ops::Add for Quad {
    type Output = Quad;
    fn add(self, o: Quad) -> Quad {
        Quad { a: &self.a + &o.a, b: &self.b + &o.b, ctx: self.ctx }
    }
}

impl std::ops::Mul for Quad {
    type Output = Quad;
    fn mul(self, o: Quad) -> Quad {
        let (p, q) = &*self.ctx;
        let bd = &self.b * &o.b;
        let a = &(&self.a * &o.a) + &(&bd * p);
        let b = &(&(&self.a * &o.b) + &(&self.b * &o.a)) + &(&bd * q);
        Quad { a, b, ctx: self.ctx }
    }
}

impl poly::ScalarMul for Quad {
    fn scalar_mul(&self, c: &num_bigint::BigInt) -> Quad {
        Quad { a: self.a.scalar_mul(c), b: self.b.scalar_mul(c), ctx: self.ctx.clone() }
    }
}

#[cfg(test)]
mod tests;
