//! From labeled schemes to the genus-one map series.
//!
//! Rational functions of the Motzkin series use variable 0 for `D•` and 1 for
//! `D∘` (a single variable `D` in the univariate case). Direct oracles sum
//! over labeled schemes whose heights lie in a box around the root; the box
//! half-width is chosen from the valuation bound in [`height_box`].

use super::factored::FactoredRational;
use super::{d_to_t, delta, rational_t_and_b, Poly, RationalFunction, TruncatedSeries};
use crate::blossoming::BlossomingMap;
use crate::core_scheme::{
    consistent_naming, enumerate_schemes, is_consistent, BinaryBijection, LabeledScheme, SchemeStats, UnlabeledScheme,
};
use crate::error::{Error, Result};
use crate::motzkin::{decode_branch, series_b, series_d_bullet, series_d_circ, typed_walks};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
    /// Variable index of `t_c` or `D_c`.
    pub fn var(self) -> usize {
        match self {
            Color::Black => 0,
            Color::White => 1,
        }
    }
    /// Black for odd heights.
    pub fn of_height(h: i64) -> Color {
        if h.rem_euclid(2) == 1 {
            Color::Black
        } else {
            Color::White
        }
    }
    fn flip_if(self, z: u8) -> Color {
        if z == 1 {
            self.opposite()
        } else {
            self
        }
    }
}

fn one() -> BigRational {
    BigRational::from_integer(1.into())
}

fn mono2(a: i64, b: i64) -> RationalFunction {
    RationalFunction::monomial(2, &[a, b])
}

/// Exponents `(a, b)` of `t•^a t∘^b` contributed by the rootable stems.
pub fn stem_weight(l: &LabeledScheme) -> (u32, u32) {
    let mut w = (0, 0);
    for st in l.scheme().rootable_stems() {
        if l.stem_corner_label(&st).rem_euclid(2) == 0 {
            w.0 += 1;
        } else {
            w.1 += 1;
        }
    }
    w
}

/// Exponents of `(D•, D∘)` in the product of `Δ` factors over all edges.
pub fn edge_weight(l: &LabeledScheme) -> (u32, u32) {
    let mut w = (0, 0);
    for e in l.scheme().edges() {
        let (a, b) = (l.lambda0(e), l.lambda1(e));
        if a <= b {
            let (x, y) = delta(a, b).unwrap();
            w.0 += x;
            w.1 += y;
        } else {
            let (x, y) = delta(b, a).unwrap();
            w.0 += y;
            w.1 += x;
        }
    }
    w
}

/// `R_l` as a rational function of `(D•, D∘)`.
pub fn r_labeled_rational(l: &LabeledScheme) -> RationalFunction {
    let (tb, tw, b) = rational_t_and_b();
    let (sa, sb) = stem_weight(l);
    let (da, db) = edge_weight(l);
    let e = l.scheme().edges().len() as i64;
    &(&(&tb.powi(sa as i64) * &tw.powi(sb as i64)) * &b.powi(e)) * &mono2(da as i64, db as i64)
}

/// `R_l(t•, t∘)` to total degree `order`, from the product formula with the
/// walk-sum series of `D•`, `D∘` and `B` substituted.
pub fn r_labeled_closed(l: &LabeledScheme, order: u32) -> Result<TruncatedSeries> {
    let db = series_d_bullet(order)?;
    let dw = series_d_circ(order)?;
    let b = series_b(order)?;
    let (sa, sb) = stem_weight(l);
    let (da, dd) = edge_weight(l);
    let stems = TruncatedSeries::monomial(2, order, vec![sa, sb], one());
    let e = l.scheme().edges().len() as u32;
    Ok(&(&(&stems * &b.pow(e)) * &db.pow(da)) * &dw.pow(dd))
}

/// Leaf series of branches, by decoding every typed walk.
///
/// A branch from `λ0` to `λ1` only depends on the parity of `λ0` and on
/// `λ1 − λ0`, which is the cache key.
#[derive(Clone, Debug)]
pub struct BranchCensus {
    max_len: u32,
    order: u32,
    cache: HashMap<(i64, i64), TruncatedSeries>,
}

impl BranchCensus {
    /// Walks of at most `max_len` steps; series kept to total degree `order`.
    pub fn new(max_len: u32, order: u32) -> Self {
        BranchCensus { max_len, order, cache: HashMap::new() }
    }

    pub fn max_len(&self) -> u32 {
        self.max_len
    }

    /// Sum over branches from `l0` to `l1` of `t•^{black leaves} t∘^{white leaves}`.
    pub fn branches(&mut self, l0: i64, l1: i64) -> Result<TruncatedSeries> {
        let key = (l0.rem_euclid(2), l1 - l0);
        if let Some(s) = self.cache.get(&key) {
            return Ok(s.clone());
        }
        let (i, j) = (key.0, key.0 + key.1);
        let mut s = TruncatedSeries::zero(2, self.order);
        for len in 0..=self.max_len.min(self.order) as usize {
            for w in typed_walks(i, j, len) {
                let br = decode_branch(&w, i, j)?;
                let leaves = br.leaf_labels(i);
                let black = leaves.iter().filter(|x| x.rem_euclid(2) == 0).count() as u32;
                s.add_term(vec![black, leaves.len() as u32 - black], one());
            }
        }
        self.cache.insert(key, s.clone());
        Ok(s)
    }
}

/// `R_l(t•, t∘)` to total degree `order` by enumerating decorated labeled
/// schemes: every edge independently receives a decoded typed walk.
pub fn r_labeled_direct(l: &LabeledScheme, census: &mut BranchCensus, order: u32) -> Result<TruncatedSeries> {
    let (sa, sb) = stem_weight(l);
    // each step of a walk makes one leaf, so longer walks exceed the order
    let budget = order.saturating_sub(sa + sb);
    if census.max_len() < budget {
        return Err(Error::ResourceLimit(format!("walks up to {budget} steps needed, census has {}", census.max_len())));
    }
    let mut s = TruncatedSeries::monomial(2, order, vec![sa, sb], one());
    for e in l.scheme().edges() {
        s = &s * &census.branches(l.lambda0(e), l.lambda1(e))?.with_order(order);
    }
    Ok(s)
}

/// Half-width of a height box containing every labeled scheme of weight at
/// most `order` in the `D` variables.
///
/// Corner labels at a vertex lie in `[h, h + 2]` and only one end of an edge
/// can be shifted relative to the other, so `|λ0 − λ1| ≥ |h(u) − h(v)| − 1`.
/// A vertex of height `M` is joined to the root by at most `n − 1` edges,
/// whose total stature is then at least `M − (n − 1)`.
pub fn height_box(s: &UnlabeledScheme, order: u32) -> i64 {
    order as i64 + s.n_vertices() as i64
}

/// Every labeled scheme on `s` with all heights in `[-w, w]`.
pub fn labeled_schemes_in_box(s: &UnlabeledScheme, w: i64) -> Vec<LabeledScheme> {
    let n = s.n_vertices();
    let r = s.root_vertex();
    let mut h = vec![-w; n];
    h[r] = 0;
    let free: Vec<usize> = (0..n).filter(|&v| v != r).collect();
    let mut out = Vec::new();
    loop {
        out.push(LabeledScheme::new(s.clone(), h.clone()).expect("root at height 0"));
        let mut i = 0;
        loop {
            if i == free.len() {
                return out;
            }
            let v = free[i];
            if h[v] < w {
                h[v] += 1;
                break;
            }
            h[v] = -w;
            i += 1;
        }
    }
}

fn total_degree(w: (u32, u32)) -> u32 {
    w.0 + w.1
}

/// `B(D, D)`.
pub fn uni_b() -> RationalFunction {
    let d = Poly::var(1, 0);
    let one = Poly::one(1);
    let num = &(&one + &d.scale(&BigInt::from(4))) + &(&d * &d);
    RationalFunction::new(num, &one - &(&d * &d))
}

/// `t(D)` with `t = t•(D, D)`.
pub fn uni_t() -> RationalFunction {
    let d = Poly::var(1, 0);
    let one = Poly::one(1);
    let k = &(&one + &d.scale(&BigInt::from(4))) + &(&d * &d);
    RationalFunction::new(d, k)
}

fn check_naming(s: &UnlabeledScheme, nu: &[usize]) -> Result<()> {
    if is_consistent(s, nu) {
        Ok(())
    } else {
        Err(Error::InconsistentNaming)
    }
}

/// `ᵇR^π_{s,ν}`: the univariate series of cores with scheme `s` and height
/// order `π`, scheme stems carrying weight 1.
pub fn r_uni_closed(s: &UnlabeledScheme, nu: &[usize], pi: &[usize]) -> Result<RationalFunction> {
    check_naming(s, nu)?;
    let st = SchemeStats::new(s, pi, nu)?;
    let ofu = st.total_overfit() as i64 - st.total_underfit() as i64;
    let mut f = &uni_b().powi(s.edges().len() as i64) * &RationalFunction::monomial(1, &[ofu]);
    let one = RationalFunction::constant(1, 1);
    for k in 1..st.n() {
        let c = st.c_plus(k) as i64;
        if c == 0 {
            // a connected scheme always has an edge across every relative height
            return Err(Error::DomainError(format!("no edge encloses relative height {k}")));
        }
        let num = RationalFunction::monomial(1, &[st.delta_plus(k) as i64 * c]);
        f = &f * &(&num / &(&one - &RationalFunction::monomial(1, &[c])));
    }
    Ok(f)
}

/// `R^π_{s,ν}(D)` with the rootable scheme stems weighted by `t`.
pub fn r_uni(s: &UnlabeledScheme, nu: &[usize], pi: &[usize]) -> Result<RationalFunction> {
    Ok(&uni_t().powi(s.rootable_stems().len() as i64) * &r_uni_closed(s, nu, pi)?)
}

/// `ᵇR^π_{s,ν}` to order `order` in `D`, summed over labeled schemes.
pub fn r_uni_direct(s: &UnlabeledScheme, nu: &[usize], pi: &[usize], order: u32) -> Result<TruncatedSeries> {
    check_naming(s, nu)?;
    let mut sum = TruncatedSeries::zero(1, order);
    for l in labeled_schemes_in_box(s, height_box(s, order)) {
        if l.height_order(nu) != pi {
            continue;
        }
        let d = total_degree(edge_weight(&l));
        if d <= order {
            sum.add_term(vec![d], one());
        }
    }
    let b = TruncatedSeries::eval_rational(&uni_b(), &[TruncatedSeries::var(1, order, 0)])?;
    Ok(&sum * &b.pow(s.edges().len() as u32))
}

/// `∏_e ᶜW_e^{(π,ζ),k}` as a monomial in `(D•, D∘)`.
fn w_product(st: &SchemeStats, s: &UnlabeledScheme, bb: &BinaryBijection, k: usize, c: Color) -> FactoredRational {
    let z = bb.zeta[k - 1];
    let delta = st.delta_plus(k) as i64;
    let mut e = [0i64; 2];
    for i in 0..s.edges().len() {
        let (x, y) = if st.is_up(i, k) {
            (c.opposite().var(), c.var())
        } else if st.is_down(i, k) {
            (c.var(), c.opposite().var())
        } else {
            continue;
        };
        let of = st.of(i, k + 1) as i64;
        let uf = st.uf(i, k) as i64;
        if z == 0 {
            e[x] += delta + of - uf;
            e[y] += delta;
        } else {
            e[x] += 1 - uf;
            e[y] += of;
        }
    }
    FactoredRational::monomial(e[0], e[1])
}

/// `ᶜS^{(π,ζ),k:±}_{s,ν}` from the recursion over relative heights.
pub fn s_recursive(
    s: &UnlabeledScheme,
    nu: &[usize],
    bb: &BinaryBijection,
    k: usize,
    ascending: bool,
    c: Color,
) -> Result<RationalFunction> {
    Ok(s_recursive_factored(s, nu, bb, k, ascending, c)?.to_rational())
}

/// [`s_recursive`] with the denominator kept factored.
pub fn s_recursive_factored(
    s: &UnlabeledScheme,
    nu: &[usize],
    bb: &BinaryBijection,
    k: usize,
    ascending: bool,
    c: Color,
) -> Result<FactoredRational> {
    check_naming(s, nu)?;
    let st = SchemeStats::new(s, &bb.pi, nu)?;
    let n = st.n();
    if k == 0 || k > n || bb.zeta.len() + 1 != n {
        return Err(Error::DomainError(format!("relative height {k} outside 1..={n}")));
    }
    let step = |j: usize, col: Color| -> Result<FactoredRational> {
        let cj = st.c_plus(j);
        if cj == 0 {
            return Err(Error::DomainError(format!("no edge encloses relative height {j}")));
        }
        Ok(&w_product(&st, s, bb, j, col) * &FactoredRational::geometric(cj))
    };
    let mut f = FactoredRational::constant(1);
    if ascending {
        // colors along k, k+1, ..., n
        let mut cols = vec![c];
        for j in k..n {
            let last = *cols.last().unwrap();
            cols.push(last.flip_if(bb.zeta[j - 1]));
        }
        for (idx, j) in (k..n).enumerate() {
            f = &f * &step(j, cols[idx])?;
        }
    } else {
        // S^{j+1:-}_c uses the color (-1)^{ζ(j)} c for both factors
        let mut col = c;
        for j in (1..k).rev() {
            col = col.flip_if(bb.zeta[j - 1]);
            f = &f * &step(j, col)?;
        }
    }
    Ok(f)
}

/// `ᶜS^{(π,ζ):+}` by summing `∏Δ` over labeled schemes of binary bijection
/// `(π,ζ)`, shifted by one when the parity of `h(π(1))` does not match `c`;
/// keyed by `(π, ζ, c)`, to total degree `order`.
pub fn s_direct_all(
    s: &UnlabeledScheme,
    nu: &[usize],
    order: u32,
) -> Result<BTreeMap<(BinaryBijection, Color), TruncatedSeries>> {
    check_naming(s, nu)?;
    let mut out: BTreeMap<(BinaryBijection, Color), TruncatedSeries> = BTreeMap::new();
    for l in labeled_schemes_in_box(s, height_box(s, order)) {
        let bb = l.binary_bijection(nu);
        let own = Color::of_height(l.height(bb.pi[0]));
        for (c, m) in [(own, l.clone()), (own.opposite(), l.shifted(1))] {
            let w = edge_weight(&m);
            if total_degree(w) <= order {
                out.entry((bb.clone(), c))
                    .or_insert_with(|| TruncatedSeries::zero(2, order))
                    .add_term(vec![w.0, w.1], one());
            }
        }
    }
    Ok(out)
}

/// The color `c` with `L^{(π,ζ)} = ᶜL^{(π,ζ):+}`: black when `h(π(1))` is odd.
pub fn base_color(s: &UnlabeledScheme, bb: &BinaryBijection) -> Color {
    let root_pos = bb.pi.iter().position(|&v| v == s.root_vertex()).unwrap();
    let parity: u8 = bb.zeta[..root_pos].iter().sum::<u8>() % 2;
    if parity == 1 {
        Color::Black
    } else {
        Color::White
    }
}

/// `ᶜP^{(π,ζ):+}`: the rootable stems' weight, a product of `t_c` and `t_{−c}`.
pub fn stem_prefactor(s: &UnlabeledScheme, bb: &BinaryBijection, c: Color) -> RationalFunction {
    stem_prefactor_factored(s, bb, c).to_rational()
}

fn stem_prefactor_factored(s: &UnlabeledScheme, bb: &BinaryBijection, c: Color) -> FactoredRational {
    let t = |col: Color| FactoredRational::t(col.var());
    let mut f = FactoredRational::constant(1);
    for st in s.rootable_stems() {
        let p = bb.pi.iter().position(|&v| v == st.vertex).unwrap();
        let sum: i64 = bb.zeta[..p].iter().map(|&z| z as i64).sum();
        let col = if (sum - s.relative_label(st.dart) - 1).rem_euclid(2) == 0 { c } else { c.opposite() };
        f = &f * &t(col);
    }
    f
}

/// `R^{(π,ζ)}_{s,ν} = ᶜP · B^{|E|} · ᶜS^{1:+}`.
pub fn r_binary(s: &UnlabeledScheme, nu: &[usize], bb: &BinaryBijection) -> Result<RationalFunction> {
    Ok(r_binary_factored(s, nu, bb)?.to_rational())
}

pub fn r_binary_factored(s: &UnlabeledScheme, nu: &[usize], bb: &BinaryBijection) -> Result<FactoredRational> {
    let c = base_color(s, bb);
    let sr = s_recursive_factored(s, nu, bb, 1, true, c)?;
    Ok(&(&stem_prefactor_factored(s, bb, c) * &FactoredRational::b().pow(s.edges().len() as u32)) * &sr)
}

/// `R_s` summed over all binary bijections, with the first consistent naming.
pub fn r_scheme(s: &UnlabeledScheme) -> Result<RationalFunction> {
    Ok(r_scheme_factored(s)?.to_rational())
}

pub fn r_scheme_factored(s: &UnlabeledScheme) -> Result<FactoredRational> {
    let nu = consistent_naming(s)?;
    let mut f = FactoredRational::constant(0);
    for bb in BinaryBijection::all(s.n_vertices()) {
        f = &f + &r_binary_factored(s, &nu, &bb)?;
    }
    Ok(f)
}

/// Contribution of one unrooted scheme.
#[derive(Clone, Debug)]
pub struct UnrootedContribution {
    pub key: BlossomingMap,
    /// `O×_ū` as a rational function of `(T•, T∘)`.
    pub o_rational: RationalFunction,
    /// `O×_ū` in `(z•, z∘)`.
    pub o_series: TruncatedSeries,
}

/// Output of [`assemble_o_and_m`].
#[derive(Clone, Debug)]
pub struct Assembly {
    pub genus: usize,
    pub per_class: Vec<UnrootedContribution>,
    /// `M_g` in `(z•, z∘)` to total degree `order`.
    pub series: TruncatedSeries,
    /// `M_g` as a rational function of `(T•, T∘)`.
    pub rational: RationalFunction,
}

/// Sums `(R_ū(T•,T∘) + R_ū(T∘,T•)) / (2g − |n̊₂(ū)|)` over unrooted schemes.
/// Only genus 1 is in reach.
pub fn assemble_o_and_m(g: usize, order: u32) -> Result<Assembly> {
    if g != 1 {
        return Err(Error::ResourceLimit(format!("assembly is limited to genus 1, got {g}")));
    }
    let census = enumerate_schemes(g)?;
    let (tb, tw) = super::bicolored_tree_series(order)?;
    let mut per_class = Vec::new();
    let mut total = RationalFunction::constant(2, 0);
    for cls in &census.classes {
        let mut r = RationalFunction::constant(2, 0);
        for s in &cls.rooted {
            r = &r + &r_scheme(s)?;
        }
        let in_t = d_to_t(&r.circ())?;
        let k = (2 * g - cls.n_degree_four) as i64;
        let o = &in_t / &RationalFunction::constant(2, k);
        let o_series = TruncatedSeries::eval_rational(&o, &[tb.clone(), tw.clone()])?;
        total = &total + &o;
        per_class.push(UnrootedContribution { key: cls.key.clone(), o_rational: o, o_series });
    }
    let series = TruncatedSeries::eval_rational(&total, &[tb, tw])?;
    Ok(Assembly { genus: g, per_class, series, rational: total })
}

/// Outcome of [`formula_shape`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    /// `M_g · ((1−2T•−2T∘)² − 4T•T∘)^{5g−3}` is a polynomial.
    pub polynomial: bool,
    /// The quotient of that polynomial by `T•T∘(1−T•−T∘)`, when it divides.
    pub p_g: Option<Poly>,
    pub symmetric: bool,
}

/// Checks `M_g = T•T∘(1−T•−T∘) P_g / ((1−2T•−2T∘)² − 4T•T∘)^{5g−3}` with
/// `P_g` a symmetric integer polynomial.
pub fn formula_shape(m: &RationalFunction, g: usize) -> ShapeReport {
    let b = Poly::var(2, 0);
    let w = Poly::var(2, 1);
    let one = Poly::one(2);
    let two = BigInt::from(2);
    let lin = &(&one - &b.scale(&two)) - &w.scale(&two);
    let disc = &(&lin * &lin) - &(&b * &w).scale(&BigInt::from(4));
    let scaled = m * &RationalFunction::from_poly(disc.pow(5 * g as u32 - 3));
    let polynomial = scaled.den().is_one();
    let factor = &(&b * &w) * &(&(&one - &b) - &w);
    let p_g = if polynomial { scaled.num().div_exact(&factor) } else { None };
    let symmetric = p_g.as_ref().is_some_and(|p| *p == p.permute_vars(&[1, 0]));
    ShapeReport { polynomial, p_g, symmetric }
}

#[cfg(test)]
mod tests;
