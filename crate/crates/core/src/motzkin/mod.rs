//! Weighted Motzkin walks and typed walks encoding core branches.
//!
//! The height of a step is the height before it. A horizontal step weighs
//! `2(t• + t∘)`; an up or down step weighs `t•` at even height and `t∘` at odd
//! height. Series here come from summing over walks, never from closed forms.

use crate::error::{Error, Result};
use crate::series_engine::TruncatedSeries;
use num_rational::BigRational;
use std::collections::BTreeMap;

/// Flavor of a horizontal step in a typed walk; see [`Role`] for the
/// vertex each one stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flat {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
    Flat(Flat),
}

impl Step {
    pub const ALL: [Step; 6] =
        [Step::Up, Step::Down, Step::Flat(Flat::A), Step::Flat(Flat::B), Step::Flat(Flat::C), Step::Flat(Flat::D)];

    pub fn increment(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Flat(_) => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MotzkinWalk {
    pub start: i64,
    pub steps: Vec<Step>,
}

impl MotzkinWalk {
    pub fn new(start: i64, steps: Vec<Step>) -> Self {
        MotzkinWalk { start, steps }
    }

    pub fn increment(&self) -> i64 {
        self.steps.iter().map(|s| s.increment()).sum()
    }

    pub fn end(&self) -> i64 {
        self.start + self.increment()
    }

    /// Height before each step.
    pub fn step_heights(&self) -> Vec<i64> {
        let mut h = self.start;
        self.steps
            .iter()
            .map(|s| {
                let x = h;
                h += s.increment();
                x
            })
            .collect()
    }
}

/// Exponents of `(2(t•+t∘))^h t•^e t∘^o`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WalkWeight {
    pub horizontal: u32,
    pub even: u32,
    pub odd: u32,
}

impl WalkWeight {
    pub fn to_series(self, order: u32) -> TruncatedSeries {
        let h = horizontal(order).pow(self.horizontal);
        let m = TruncatedSeries::monomial(2, order, vec![self.even, self.odd], BigRational::from_integer(1.into()));
        &h * &m
    }
}

pub fn walk_weight(w: &MotzkinWalk) -> WalkWeight {
    let mut ww = WalkWeight::default();
    for (s, h) in w.steps.iter().zip(w.step_heights()) {
        match s {
            Step::Flat(_) => ww.horizontal += 1,
            _ if h.rem_euclid(2) == 0 => ww.even += 1,
            _ => ww.odd += 1,
        }
    }
    ww
}

fn horizontal(order: u32) -> TruncatedSeries {
    let two = BigRational::from_integer(2.into());
    (&TruncatedSeries::var(2, order, 0) + &TruncatedSeries::var(2, order, 1)).scale(&two)
}

/// `t•` at even height, `t∘` at odd height.
fn parity_var(h: i64, order: u32) -> TruncatedSeries {
    TruncatedSeries::var(2, order, h.rem_euclid(2) as usize)
}

/// Sum of weights of walks from `i` to `j` of length at most `order`, all of
/// whose step heights are at least `floor` when one is given.
pub fn series_w_floor(i: i64, j: i64, floor: Option<i64>, order: u32) -> Result<TruncatedSeries> {
    if order > 64 {
        return Err(Error::ResourceLimit(format!("walk length {order} exceeds 64")));
    }
    let mut layer: BTreeMap<i64, TruncatedSeries> = BTreeMap::new();
    layer.insert(i, TruncatedSeries::one(2, order));
    let mut total = TruncatedSeries::zero(2, order);
    let flat = horizontal(order);
    for len in 0..=order {
        if let Some(s) = layer.get(&j) {
            total = &total + s;
        }
        if len == order {
            break;
        }
        let mut next: BTreeMap<i64, TruncatedSeries> = BTreeMap::new();
        for (&h, s) in &layer {
            if floor.is_some_and(|f| h < f) {
                continue;
            }
            let t = parity_var(h, order);
            let up = s * &t;
            for (target, w) in [(h + 1, up.clone()), (h - 1, up), (h, s * &flat)] {
                let e = next.entry(target).or_insert_with(|| TruncatedSeries::zero(2, order));
                *e = &*e + &w;
            }
        }
        layer = next;
    }
    Ok(total)
}

/// `W^{i→j}` truncated at `max_len`.
pub fn series_w(i: i64, j: i64, max_len: u32) -> Result<TruncatedSeries> {
    series_w_floor(i, j, None, max_len)
}

/// Primitive walks from height 0 down to -1.
pub fn series_d_bullet(max_len: u32) -> Result<TruncatedSeries> {
    series_w_floor(0, -1, Some(0), max_len)
}

/// Primitive walks from height 1 down to 0.
pub fn series_d_circ(max_len: u32) -> Result<TruncatedSeries> {
    series_w_floor(1, 0, Some(1), max_len)
}

/// Bridges from height 0.
pub fn series_b(max_len: u32) -> Result<TruncatedSeries> {
    series_w_floor(0, 0, None, max_len)
}

/// Every typed walk of exactly `len` steps from `i` to `j`.
pub fn typed_walks(i: i64, j: i64, len: usize) -> Vec<MotzkinWalk> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len);
    fn rec(h: i64, j: i64, left: usize, steps: &mut Vec<Step>, start: i64, out: &mut Vec<MotzkinWalk>) {
        if (j - h).unsigned_abs() as usize > left {
            return;
        }
        if left == 0 {
            out.push(MotzkinWalk::new(start, steps.clone()));
            return;
        }
        for s in Step::ALL {
            steps.push(s);
            rec(h + s.increment(), j, left - 1, steps, start, out);
            steps.pop();
        }
    }
    rec(i, j, len, &mut steps, i, &mut out);
    out
}

/// Half-edge roles at a vertex inside a branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// head of the branch edge arriving from the tail side
    In,
    /// tail of the branch edge leaving towards the head side
    Out,
    Bud,
    Leaf,
}

/// A branch: its interior vertices from tail to head, each given by its
/// counterclockwise rotation starting at [`Role::In`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Branch {
    pub rotations: Vec<[Role; 4]>,
}

/// Rotation of the vertex a typed step stands for.
pub fn rotation_of(step: Step) -> [Role; 4] {
    use Role::*;
    match step {
        Step::Up => [In, Bud, Out, Leaf],
        Step::Down => [In, Leaf, Out, Bud],
        Step::Flat(Flat::A) => [In, Leaf, Bud, Out],
        Step::Flat(Flat::B) => [In, Out, Bud, Leaf],
        Step::Flat(Flat::C) => [In, Bud, Leaf, Out],
        Step::Flat(Flat::D) => [In, Out, Leaf, Bud],
    }
}

fn role_sign(r: Role) -> i64 {
    match r {
        Role::In | Role::Leaf => -1,
        Role::Out | Role::Bud => 1,
    }
}

impl Branch {
    /// Number of edges of the branch.
    pub fn n_edges(&self) -> usize {
        self.rotations.len() + 1
    }

    /// Labels of the four corners of every vertex, indexed like the rotation
    /// (corner `k` precedes half-edge `k`), when the corner right of the tail
    /// carries `lambda0`.
    pub fn corner_labels(&self, lambda0: i64) -> Vec<[i64; 4]> {
        let mut right = lambda0;
        let mut out = Vec::with_capacity(self.rotations.len());
        for rot in &self.rotations {
            let mut lab = [0i64; 4];
            lab[1] = right;
            for k in 1..4 {
                lab[(k + 1) % 4] = lab[k] + role_sign(rot[k]);
            }
            let out_pos = rot.iter().position(|&r| r == Role::Out).unwrap();
            right = lab[out_pos];
            out.push(lab);
        }
        out
    }

    /// Label right of the head end.
    pub fn end_label(&self, lambda0: i64) -> i64 {
        let labs = self.corner_labels(lambda0);
        match (self.rotations.last(), labs.last()) {
            (Some(rot), Some(lab)) => lab[rot.iter().position(|&r| r == Role::Out).unwrap()],
            _ => lambda0,
        }
    }

    /// Label of every leaf (the corner before it), tail to head.
    pub fn leaf_labels(&self, lambda0: i64) -> Vec<i64> {
        self.corner_labels(lambda0)
            .iter()
            .zip(&self.rotations)
            .map(|(lab, rot)| lab[rot.iter().position(|&r| r == Role::Leaf).unwrap()])
            .collect()
    }
}

/// The typed walk of a branch whose tail-side right corner is `lambda0`.
pub fn encode_branch(branch: &Branch, lambda0: i64) -> Result<MotzkinWalk> {
    let steps = branch
        .rotations
        .iter()
        .map(|rot| {
            Step::ALL
                .into_iter()
                .find(|&s| rotation_of(s) == *rot)
                .ok_or_else(|| Error::DomainError(format!("{rot:?} is not a branch vertex")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MotzkinWalk::new(lambda0, steps))
}

/// The branch of a typed walk going from `lambda0` to `lambda1`.
pub fn decode_branch(w: &MotzkinWalk, lambda0: i64, lambda1: i64) -> Result<Branch> {
    if w.start != lambda0 || w.end() != lambda1 {
        return Err(Error::HeightMismatch { from: lambda0, to: lambda1 });
    }
    Ok(Branch { rotations: w.steps.iter().map(|&s| rotation_of(s)).collect() })
}

#[cfg(test)]
mod tests;
