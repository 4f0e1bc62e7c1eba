//! Blossoming unicellular maps: contour, canonical labeling, canonical
//! orientation, the three "well-" predicates and the closure.
//!
//! Labels follow the clockwise contour from the root corner (label 0): they
//! stay constant along an edge, go up by one past a bud and down by one past a
//! leaf. A stem sitting between corners labeled `i - 1` and `i` gets label `i`.

mod map;

pub use map::{BlossomingMap, StemKind};

use crate::error::{Error, Result};
use crate::map_core::{Orientation, RootedMap};
use std::collections::BTreeMap;

/// Corner labels (indexed by the dart naming the corner) and stem labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerLabeling {
    pub labels: Vec<i64>,
    pub stem_labels: BTreeMap<usize, i64>,
}

impl CornerLabeling {
    pub fn min_label(&self) -> i64 {
        *self.labels.iter().min().unwrap_or(&0)
    }
}

/// Result of closing every stem of a well-rooted map. Darts keep their
/// numbering; the root is the corner preceding the root bud.
#[derive(Clone, Debug)]
pub struct Closure {
    pub map: RootedMap,
    /// Proper edges keep the canonical orientation, closure edges go bud to leaf.
    pub orientation: Orientation,
    /// True on both darts of each closure edge.
    pub closure_edge: Vec<bool>,
    /// For each leaf dart, the index (in `map.faces()`) of the face created on
    /// the high side of its closure edge.
    pub leaf_face: BTreeMap<usize, usize>,
}

impl BlossomingMap {
    /// Corners of the clockwise contour, starting at the root corner.
    pub fn clockwise_contour(&self) -> Result<Vec<usize>> {
        if self.is_empty_leaf() {
            return Err(Error::NotUnicellular);
        }
        let mut out = Vec::with_capacity(self.n_darts());
        let mut c = self.root;
        loop {
            out.push(c);
            c = self.contour_next(c);
            if c == self.root {
                break;
            }
        }
        if out.len() != self.n_darts() {
            return Err(Error::NotUnicellular);
        }
        Ok(out)
    }

    pub fn canonical_labeling(&self) -> Result<CornerLabeling> {
        let contour = self.clockwise_contour()?;
        let mut labels = vec![0i64; self.n_darts()];
        let mut cur = 0i64;
        for &c in &contour {
            labels[c] = cur;
            cur += match self.kind(c) {
                Some(StemKind::Bud) => 1,
                Some(StemKind::Leaf) => -1,
                None => 0,
            };
        }
        if cur != 0 {
            return Err(Error::UnbalancedStems);
        }
        let stem_labels = self
            .stems()
            .into_iter()
            .map(|s| (s, labels[s].max(labels[self.sigma(s)])))
            .collect();
        Ok(CornerLabeling { labels, stem_labels })
    }

    /// All corner labels are nonnegative.
    pub fn is_well_rooted(&self) -> bool {
        match self.canonical_labeling() {
            Ok(l) => l.min_label() >= 0,
            Err(_) => false,
        }
    }

    /// Well-rootedness through local closures: turn the root bud into a leaf,
    /// close every bud immediately followed by a leaf until none is left, and
    /// check that the root is among the two unmatched leaves.
    pub fn is_well_rooted_by_matching(&self) -> bool {
        let Ok(contour) = self.clockwise_contour() else { return false };
        let mut seq: Vec<(usize, StemKind)> = contour
            .iter()
            .filter_map(|&c| self.kind(c).map(|k| (c, if c == self.root { StemKind::Leaf } else { k })))
            .collect();
        let buds = seq.iter().filter(|s| s.1 == StemKind::Bud).count();
        if buds + 2 != seq.len() - buds {
            return false;
        }
        loop {
            let n = seq.len();
            let pos = (0..n).find(|&i| seq[i].1 == StemKind::Bud && seq[(i + 1) % n].1 == StemKind::Leaf);
            match pos {
                Some(i) => {
                    let j = (i + 1) % n;
                    let (a, b) = (i.max(j), i.min(j));
                    seq.remove(a);
                    seq.remove(b);
                }
                None => break,
            }
        }
        seq.iter().any(|s| s.0 == self.root)
    }

    /// Orients each interior edge backwards the first time the contour
    /// follows it. Buds are outgoing, leaves incoming.
    pub fn canonical_orientation(&self) -> Result<Orientation> {
        let contour = self.clockwise_contour()?;
        let mut incoming = vec![false; self.n_darts()];
        let mut done = vec![false; self.n_darts()];
        for &c in &contour {
            match self.alpha(c) {
                Some(a) => {
                    if !done[c] {
                        done[c] = true;
                        done[a] = true;
                        incoming[c] = true;
                    }
                }
                None => incoming[c] = self.kind(c) == Some(StemKind::Leaf),
            }
        }
        Ok(Orientation::from_raw(incoming))
    }

    /// Canonical labels satisfy the around-vertex rule for the canonical
    /// orientation (higher label after an outgoing dart in counterclockwise
    /// order) and agree on both sides of every edge.
    pub fn is_well_labeled(&self) -> bool {
        let (Ok(lab), Ok(o)) = (self.canonical_labeling(), self.canonical_orientation()) else {
            return false;
        };
        labeling_fits(self, &lab.labels, &o)
    }

    /// Well-rooted, well-labeled and unicellular (well-orientedness holds by
    /// construction since the canonical orientation is used).
    pub fn is_good(&self) -> bool {
        self.is_unicellular() && self.is_well_rooted() && self.is_well_labeled()
    }

    /// `(black, white)` leaves by parity of their labels.
    pub fn leaf_colors(&self) -> Result<(usize, usize)> {
        let lab = self.canonical_labeling()?;
        Ok(leaf_colors_of(self, &lab))
    }

    /// Closure by parenthesis matching along the contour, starting at the root bud.
    pub fn closure(&self) -> Result<Closure> {
        let contour = self.clockwise_contour()?;
        let lab = self.canonical_labeling()?;
        if lab.min_label() < 0 {
            return Err(Error::NotWellRooted);
        }
        let mut stack = Vec::new();
        let mut pairs = Vec::new();
        for &c in &contour {
            match self.kind(c) {
                Some(StemKind::Bud) => stack.push(c),
                Some(StemKind::Leaf) => {
                    let b = stack.pop().ok_or(Error::NotWellRooted)?;
                    pairs.push((b, c));
                }
                None => {}
            }
        }
        if !stack.is_empty() {
            return Err(Error::UnbalancedStems);
        }
        self.close_with(&pairs)
    }

    /// Closure matching each bud with the first later leaf of equal label.
    pub fn closure_by_labels(&self) -> Result<Closure> {
        let contour = self.clockwise_contour()?;
        let lab = self.canonical_labeling()?;
        if lab.min_label() < 0 {
            return Err(Error::NotWellRooted);
        }
        let n = contour.len();
        let mut pairs = Vec::new();
        for (i, &b) in contour.iter().enumerate() {
            if self.kind(b) != Some(StemKind::Bud) {
                continue;
            }
            let lb = lab.stem_labels[&b];
            let leaf = (1..n)
                .map(|k| contour[(i + k) % n])
                .find(|&c| self.kind(c) == Some(StemKind::Leaf) && lab.stem_labels[&c] == lb)
                .ok_or(Error::UnbalancedStems)?;
            pairs.push((b, leaf));
        }
        self.close_with(&pairs)
    }

    fn close_with(&self, pairs: &[(usize, usize)]) -> Result<Closure> {
        let n = self.n_darts();
        let o = self.canonical_orientation()?;
        let mut alpha: Vec<usize> = (0..n).map(|d| self.alpha(d).unwrap_or(usize::MAX)).collect();
        let mut incoming = o.heads().to_vec();
        let mut closure_edge = vec![false; n];
        for &(b, l) in pairs {
            if alpha[b] != usize::MAX || alpha[l] != usize::MAX {
                return Err(Error::DomainError("stem matched twice".into()));
            }
            alpha[b] = l;
            alpha[l] = b;
            incoming[b] = false;
            incoming[l] = true;
            closure_edge[b] = true;
            closure_edge[l] = true;
        }
        if alpha.contains(&usize::MAX) {
            return Err(Error::UnbalancedStems);
        }
        let map = RootedMap::new(self.sigma_perm().to_vec(), alpha, self.root_bud())?;
        let orientation = Orientation::from_heads(&map, incoming)?;
        let face_of = map.face_of();
        let leaf_face = pairs.iter().map(|&(_, l)| (l, face_of[l])).collect();
        Ok(Closure { map, orientation, closure_edge, leaf_face })
    }

    /// Makes `stem` the root bud and turns the old root bud into a leaf.
    pub fn reroot(&self, stem: usize) -> Result<BlossomingMap> {
        if stem == self.root_bud() {
            return Ok(self.clone());
        }
        if self.kind(stem) != Some(StemKind::Leaf) {
            return Err(Error::NotRootable(stem + 1));
        }
        let mut kind = self.kind.clone();
        kind[self.root_bud()] = Some(StemKind::Leaf);
        kind[stem] = Some(StemKind::Bud);
        self.with_stems(kind, stem)
    }

    /// Leaves together with the root bud.
    pub fn rootable_stems(&self) -> Vec<usize> {
        (0..self.n_darts())
            .filter(|&d| d == self.root_bud() || self.kind(d) == Some(StemKind::Leaf))
            .collect()
    }
}

pub(crate) fn leaf_colors_of(u: &BlossomingMap, lab: &CornerLabeling) -> (usize, usize) {
    let black = u.leaves().iter().filter(|l| lab.stem_labels[l].rem_euclid(2) == 0).count();
    (black, u.leaves().len() - black)
}

/// Checks the around-vertex rule and the same-side rule for arbitrary labels.
pub(crate) fn labeling_fits(u: &BlossomingMap, labels: &[i64], o: &Orientation) -> bool {
    (0..u.n_darts()).all(|d| {
        let step = if o.is_head(d) { -1 } else { 1 };
        let around = labels[u.sigma(d)] - labels[d] == step;
        let side = match u.alpha(d) {
            Some(a) => labels[u.sigma(a)] == labels[d],
            None => true,
        };
        around && side
    })
}
