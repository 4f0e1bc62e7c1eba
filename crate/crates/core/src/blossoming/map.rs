//! The blossoming map structure and its text format.

use crate::error::{Error, Result};
use crate::map_core::bfs_order;
use crate::perm;
use crate::text;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StemKind {
    Bud,
    Leaf,
}

impl StemKind {
    pub fn flipped(self) -> StemKind {
        match self {
            StemKind::Bud => StemKind::Leaf,
            StemKind::Leaf => StemKind::Bud,
        }
    }
    fn name(self) -> &'static str {
        match self {
            StemKind::Bud => "bud",
            StemKind::Leaf => "leaf",
        }
    }
}

/// A map with extra unmatched darts (stems), rooted at the corner that
/// precedes its root bud. Stems have `alpha = None` and a kind.
///
/// The tree reduced to a single leaf with no vertex is the value with zero
/// darts, built by [`BlossomingMap::empty_leaf`]; every operation that needs a
/// contour rejects it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlossomingMap {
    pub(crate) sigma: Vec<usize>,
    pub(crate) alpha: Vec<Option<usize>>,
    pub(crate) kind: Vec<Option<StemKind>>,
    pub(crate) root: usize,
}

impl BlossomingMap {
    /// Validates a blossoming map given by 0-based data. `kind[d]` must be set
    /// exactly on stems; `root` must be a bud. Connectivity of the interior is
    /// checked; unicellularity is not.
    pub fn new(sigma: Vec<usize>, alpha: Vec<Option<usize>>, kind: Vec<Option<StemKind>>, root: usize) -> Result<Self> {
        let n = sigma.len();
        if n == 0 || alpha.len() != n || kind.len() != n || !perm::is_permutation(&sigma) {
            return Err(Error::NotPermutation);
        }
        for d in 0..n {
            match alpha[d] {
                Some(a) => {
                    if a >= n || alpha[a] != Some(d) {
                        return Err(Error::NotInvolution(d + 1));
                    }
                    if a == d {
                        return Err(Error::FixedPointInAlpha(d + 1));
                    }
                    if kind[d].is_some() {
                        return Err(Error::DomainError(format!("dart {} is both edge and stem", d + 1)));
                    }
                }
                None => {
                    if kind[d].is_none() {
                        return Err(Error::DomainError(format!("stem {} has no kind", d + 1)));
                    }
                }
            }
        }
        if root >= n || kind[root] != Some(StemKind::Bud) {
            return Err(Error::BadRoot(root + 1));
        }
        let m = BlossomingMap { sigma, alpha, kind, root };
        if m.bfs().len() != n {
            return Err(Error::NotConnected);
        }
        Ok(m)
    }

    /// The tree reduced to a single leaf with no vertex.
    pub fn empty_leaf() -> Self {
        BlossomingMap { sigma: Vec::new(), alpha: Vec::new(), kind: Vec::new(), root: 0 }
    }

    pub fn is_empty_leaf(&self) -> bool {
        self.sigma.is_empty()
    }

    fn bfs(&self) -> Vec<usize> {
        bfs_order(self.n_darts(), self.root, |d| [Some(self.sigma[d]), Some(self.sigma_inv(d)), self.alpha[d]])
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }
    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }
    pub fn sigma_inv(&self, d: usize) -> usize {
        let mut x = d;
        loop {
            let y = self.sigma[x];
            if y == d {
                return x;
            }
            x = y;
        }
    }
    pub fn alpha(&self, d: usize) -> Option<usize> {
        self.alpha[d]
    }
    pub fn kind(&self, d: usize) -> Option<StemKind> {
        self.kind[d]
    }
    pub fn is_stem(&self, d: usize) -> bool {
        self.alpha[d].is_none()
    }
    pub fn root_bud(&self) -> usize {
        self.root
    }
    pub fn sigma_perm(&self) -> &[usize] {
        &self.sigma
    }

    pub fn stems(&self) -> Vec<usize> {
        (0..self.n_darts()).filter(|&d| self.is_stem(d)).collect()
    }
    pub fn buds(&self) -> Vec<usize> {
        (0..self.n_darts()).filter(|&d| self.kind[d] == Some(StemKind::Bud)).collect()
    }
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n_darts()).filter(|&d| self.kind[d] == Some(StemKind::Leaf)).collect()
    }
    pub fn n_interior_edges(&self) -> usize {
        self.alpha.iter().filter(|a| a.is_some()).count() / 2
    }

    pub fn vertices(&self) -> Vec<Vec<usize>> {
        perm::cycles(&self.sigma)
    }
    pub fn vertex_of(&self) -> Vec<usize> {
        perm::cycle_index(&self.sigma)
    }
    /// Number of interior darts at each vertex.
    pub fn interior_degrees(&self) -> Vec<usize> {
        self.vertices().iter().map(|v| v.iter().filter(|&&d| !self.is_stem(d)).count()).collect()
    }

    /// Next corner of the clockwise contour: past a stem the contour stays at
    /// the vertex, past an edge it moves to the other end.
    pub fn contour_next(&self, c: usize) -> usize {
        match self.alpha[c] {
            Some(a) => self.sigma[a],
            None => self.sigma[c],
        }
    }

    /// Number of faces of the interior map.
    pub fn n_interior_faces(&self) -> usize {
        let p: Vec<usize> = (0..self.n_darts()).map(|c| self.contour_next(c)).collect();
        perm::cycles(&p).len()
    }

    pub fn is_unicellular(&self) -> bool {
        !self.is_empty_leaf() && self.n_interior_faces() == 1
    }

    /// Genus of the interior map.
    pub fn genus(&self) -> usize {
        let v = self.vertices().len() as i64;
        let e = self.n_interior_edges() as i64;
        let f = self.n_interior_faces() as i64;
        let two_g = 2 - v + e - f;
        assert!(two_g >= 0 && two_g % 2 == 0, "non-integral genus: convention bug");
        (two_g / 2) as usize
    }

    /// Relabels darts by breadth-first discovery from the root bud.
    pub fn canonical_form(&self) -> BlossomingMap {
        if self.is_empty_leaf() {
            return self.clone();
        }
        self.relabel_by_order(&self.bfs())
    }

    /// Breadth-first discovery order from the root bud.
    pub(crate) fn canonical_order(&self) -> Vec<usize> {
        self.bfs()
    }

    /// `order[new] = old`.
    pub(crate) fn relabel_by_order(&self, order: &[usize]) -> BlossomingMap {
        let new_of = perm::inverse(order);
        BlossomingMap {
            sigma: order.iter().map(|&o| new_of[self.sigma[o]]).collect(),
            alpha: order.iter().map(|&o| self.alpha[o].map(|a| new_of[a])).collect(),
            kind: order.iter().map(|&o| self.kind[o]).collect(),
            root: new_of[self.root],
        }
    }

    pub fn is_isomorphic_rooted(&self, other: &BlossomingMap) -> bool {
        self.n_darts() == other.n_darts() && self.canonical_form() == other.canonical_form()
    }

    /// Same structure with the stem kinds and root bud replaced.
    pub fn with_stems(&self, kind: Vec<Option<StemKind>>, root: usize) -> Result<BlossomingMap> {
        BlossomingMap::new(self.sigma.clone(), self.alpha.clone(), kind, root)
    }
}

impl fmt::Display for BlossomingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty_leaf() {
            return write!(f, "darts 0");
        }
        let stems: String = self
            .stems()
            .iter()
            .map(|&d| format!("({},{})", d + 1, self.kind[d].unwrap().name()))
            .collect();
        write!(
            f,
            "darts {} / sigma {} / alpha {} / stems {} / rootbud {}",
            self.n_darts(),
            text::format_perm(&self.sigma),
            text::format_pairs(&self.alpha),
            stems,
            self.root + 1
        )
    }
}

impl FromStr for BlossomingMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let secs = text::sections(s)?;
        let n = text::parse_usize(text::require(&secs, "darts")?)?;
        if n == 0 {
            return Ok(BlossomingMap::empty_leaf());
        }
        let sigma = text::parse_perm(text::require(&secs, "sigma")?, n)?;
        let mut alpha = vec![None; n];
        for g in text::groups(secs.get("alpha").map(|s| s.as_str()).unwrap_or(""))? {
            if g.len() != 2 {
                return Err(Error::Parse("alpha pairs must have two darts".into()));
            }
            let (a, b) = (text::parse_dart(&g[0], n)?, text::parse_dart(&g[1], n)?);
            if alpha[a].is_some() || alpha[b].is_some() {
                return Err(Error::Parse("dart paired twice".into()));
            }
            alpha[a] = Some(b);
            alpha[b] = Some(a);
        }
        let mut kind = vec![None; n];
        for g in text::groups(secs.get("stems").map(|s| s.as_str()).unwrap_or(""))? {
            if g.len() != 2 {
                return Err(Error::Parse("stems are (dart,kind)".into()));
            }
            let d = text::parse_dart(&g[0], n)?;
            kind[d] = Some(match g[1].as_str() {
                "bud" => StemKind::Bud,
                "leaf" => StemKind::Leaf,
                other => return Err(Error::Parse(format!("unknown stem kind `{other}`"))),
            });
        }
        let root = text::parse_dart(text::require(&secs, "rootbud")?, n)?;
        BlossomingMap::new(sigma, alpha, kind, root)
    }
}
