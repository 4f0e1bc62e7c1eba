//! Rooted maps as rotation systems.
//!
//! Darts are `0..n` in memory (1-based in text). `sigma` turns counterclockwise
//! around vertices, `alpha` pairs the two darts of an edge, and the face
//! permutation is `phi = sigma ∘ alpha`. Walking along dart `d` from its
//! vertex, the face of `phi` containing `d` lies on the right.
//!
//! A corner is named by its second dart in counterclockwise order, so dart
//! `d` names the corner `(sigma⁻¹(d), d)`. The root corner is the corner of
//! the root dart. With these conventions the planar loop has two faces and
//! the interleaved double loop on one vertex has one.

mod orientation;
mod radial;

pub use orientation::Orientation;
pub use radial::{radial, radial_inverse, Radial};

use crate::error::{Error, Result};
use crate::perm;
use crate::text;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedMap {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    root: usize,
}

/// Black/white colouring of the faces, indexed like [`RootedMap::faces`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceColoring {
    pub black: Vec<bool>,
}

impl FaceColoring {
    pub fn n_black(&self) -> usize {
        self.black.iter().filter(|&&b| b).count()
    }
    pub fn n_white(&self) -> usize {
        self.black.len() - self.n_black()
    }
}

/// Relabels darts in breadth-first discovery order from `root`, trying the
/// generators of each dart in the given order. Returns `order[new] = old`;
/// darts not reached are absent.
pub(crate) fn bfs_order<F>(n: usize, root: usize, mut gens: F) -> Vec<usize>
where
    F: FnMut(usize) -> [Option<usize>; 3],
{
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    seen[root] = true;
    order.push(root);
    let mut i = 0;
    while i < order.len() {
        for x in gens(order[i]).into_iter().flatten() {
            if !seen[x] {
                seen[x] = true;
                order.push(x);
            }
        }
        i += 1;
    }
    order
}

impl RootedMap {
    /// Validates and builds a map from 0-based images.
    pub fn new(sigma: Vec<usize>, alpha: Vec<usize>, root: usize) -> Result<Self> {
        let n = sigma.len();
        if n == 0 || n % 2 == 1 || alpha.len() != n || !perm::is_permutation(&sigma) {
            return Err(Error::NotPermutation);
        }
        for d in 0..n {
            let a = alpha[d];
            if a >= n || alpha[a] != d {
                return Err(Error::NotInvolution(d + 1));
            }
            if a == d {
                return Err(Error::FixedPointInAlpha(d + 1));
            }
        }
        if root >= n {
            return Err(Error::BadRoot(root + 1));
        }
        let sigma_inv = perm::inverse(&sigma);
        let reached = bfs_order(n, 0, |d| [Some(sigma[d]), Some(sigma_inv[d]), Some(alpha[d])]);
        if reached.len() != n {
            return Err(Error::NotConnected);
        }
        Ok(RootedMap { sigma, alpha, root })
    }

    /// Builds a map from 1-based images, as in the text format.
    pub fn build_map(n_darts: usize, sigma: &[usize], alpha: &[usize], root_dart: usize) -> Result<Self> {
        if sigma.len() != n_darts || alpha.len() != n_darts {
            return Err(Error::NotPermutation);
        }
        let conv = |v: &[usize]| -> Result<Vec<usize>> {
            v.iter()
                .map(|&x| if x == 0 || x > n_darts { Err(Error::NotPermutation) } else { Ok(x - 1) })
                .collect()
        };
        if root_dart == 0 || root_dart > n_darts {
            return Err(Error::BadRoot(root_dart));
        }
        RootedMap::new(conv(sigma)?, conv(alpha)?, root_dart - 1)
    }

    /// Builds a map from 1-based cycle lists.
    pub fn from_cycles(n_darts: usize, sigma: &[&[usize]], alpha: &[&[usize]], root_dart: usize) -> Result<Self> {
        let to_perm = |cs: &[&[usize]]| -> Result<Vec<usize>> {
            let mut p: Vec<usize> = (0..n_darts).collect();
            for c in cs {
                for (i, &d) in c.iter().enumerate() {
                    let img = c[(i + 1) % c.len()];
                    if d == 0 || d > n_darts || img == 0 || img > n_darts {
                        return Err(Error::NotPermutation);
                    }
                    p[d - 1] = img - 1;
                }
            }
            Ok(p)
        };
        if root_dart == 0 {
            return Err(Error::BadRoot(0));
        }
        RootedMap::new(to_perm(sigma)?, to_perm(alpha)?, root_dart - 1)
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }
    pub fn n_edges(&self) -> usize {
        self.sigma.len() / 2
    }
    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }
    pub fn sigma_inv(&self, d: usize) -> usize {
        // Rotations are short; a scan is cheaper than caching the inverse.
        let mut x = d;
        loop {
            let y = self.sigma[x];
            if y == d {
                return x;
            }
            x = y;
        }
    }
    pub fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }
    pub fn root(&self) -> usize {
        self.root
    }
    pub fn sigma_perm(&self) -> &[usize] {
        &self.sigma
    }
    pub fn alpha_perm(&self) -> &[usize] {
        &self.alpha
    }

    /// `phi[d] = sigma(alpha(d))`.
    pub fn face_permutation(&self) -> Vec<usize> {
        perm::compose(&self.sigma, &self.alpha)
    }

    pub fn vertices(&self) -> Vec<Vec<usize>> {
        perm::cycles(&self.sigma)
    }
    pub fn faces(&self) -> Vec<Vec<usize>> {
        perm::cycles(&self.face_permutation())
    }
    pub fn vertex_of(&self) -> Vec<usize> {
        perm::cycle_index(&self.sigma)
    }
    /// Face index (in [`faces`](Self::faces) order) of each corner.
    pub fn face_of(&self) -> Vec<usize> {
        perm::cycle_index(&self.face_permutation())
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices().len()
    }
    pub fn num_faces(&self) -> usize {
        self.faces().len()
    }

    pub fn genus(&self) -> usize {
        let chi = self.num_vertices() as i64 - self.n_edges() as i64 + self.num_faces() as i64;
        let two_g = 2 - chi;
        assert!(two_g >= 0 && two_g % 2 == 0, "non-integral genus: convention bug");
        (two_g / 2) as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().iter().map(|c| c.len()).collect()
    }

    /// Index of the root face.
    pub fn root_face(&self) -> usize {
        self.face_of()[self.root]
    }

    /// Two-colouring of the dual graph with the root face black.
    pub fn face_coloring(&self) -> Result<FaceColoring> {
        let face_of = self.face_of();
        let nf = face_of.iter().max().map_or(0, |m| m + 1);
        let mut adj = vec![Vec::new(); nf];
        for d in 0..self.n_darts() {
            let (f, g) = (face_of[d], face_of[self.alpha[d]]);
            if f == g {
                return Err(Error::NotBicolorable);
            }
            adj[f].push(g);
        }
        let mut color: Vec<Option<bool>> = vec![None; nf];
        let r = face_of[self.root];
        color[r] = Some(true);
        let mut queue = VecDeque::from([r]);
        while let Some(f) = queue.pop_front() {
            let c = color[f].unwrap();
            for &g in &adj[f] {
                match color[g] {
                    None => {
                        color[g] = Some(!c);
                        queue.push_back(g);
                    }
                    Some(cg) if cg == c => return Err(Error::NotBicolorable),
                    _ => {}
                }
            }
        }
        Ok(FaceColoring { black: color.into_iter().map(|c| c.unwrap()).collect() })
    }

    pub fn is_bicolorable(&self) -> bool {
        self.face_coloring().is_ok()
    }

    /// Dual-graph distance of every face to the root face.
    pub fn face_heights(&self) -> Vec<usize> {
        let face_of = self.face_of();
        let nf = face_of.iter().max().map_or(0, |m| m + 1);
        let mut adj = vec![Vec::new(); nf];
        for d in 0..self.n_darts() {
            adj[face_of[d]].push(face_of[self.alpha[d]]);
        }
        let mut h = vec![usize::MAX; nf];
        let r = face_of[self.root];
        h[r] = 0;
        let mut queue = VecDeque::from([r]);
        while let Some(f) = queue.pop_front() {
            for &g in &adj[f] {
                if h[g] == usize::MAX {
                    h[g] = h[f] + 1;
                    queue.push_back(g);
                }
            }
        }
        h
    }

    /// Relabels darts by breadth-first discovery from the root, trying
    /// `sigma`, `sigma⁻¹`, `alpha` in that order.
    pub fn canonical_form(&self) -> RootedMap {
        let order = bfs_order(self.n_darts(), self.root, |d| {
            [Some(self.sigma[d]), Some(self.sigma_inv(d)), Some(self.alpha[d])]
        });
        self.relabel_by_order(&order)
    }

    /// `order[new] = old`.
    fn relabel_by_order(&self, order: &[usize]) -> RootedMap {
        let new_of = perm::inverse(order);
        let sigma = order.iter().map(|&o| new_of[self.sigma[o]]).collect();
        let alpha = order.iter().map(|&o| new_of[self.alpha[o]]).collect();
        RootedMap { sigma, alpha, root: new_of[self.root] }
    }

    /// Renames dart `d` to `relabel[d]`.
    pub fn relabeled(&self, relabel: &[usize]) -> Result<RootedMap> {
        if !perm::is_permutation(relabel) || relabel.len() != self.n_darts() {
            return Err(Error::NotPermutation);
        }
        Ok(self.relabel_by_order(&perm::inverse(relabel)))
    }

    pub fn is_isomorphic_rooted(&self, other: &RootedMap) -> bool {
        self.n_darts() == other.n_darts() && self.canonical_form() == other.canonical_form()
    }

    /// Same map rooted at another dart.
    pub fn with_root(&self, root: usize) -> Result<RootedMap> {
        if root >= self.n_darts() {
            return Err(Error::BadRoot(root + 1));
        }
        Ok(RootedMap { sigma: self.sigma.clone(), alpha: self.alpha.clone(), root })
    }
}

impl fmt::Display for RootedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alpha: Vec<Option<usize>> = self.alpha.iter().map(|&a| Some(a)).collect();
        write!(
            f,
            "darts {} / sigma {} / alpha {} / root {}",
            self.n_darts(),
            text::format_perm(&self.sigma),
            text::format_pairs(&alpha),
            self.root + 1
        )
    }
}

impl FromStr for RootedMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let secs = text::sections(s)?;
        let n = text::parse_usize(text::require(&secs, "darts")?)?;
        let sigma = text::parse_perm(text::require(&secs, "sigma")?, n)?;
        let alpha = text::parse_perm(text::require(&secs, "alpha")?, n)?;
        let root = text::parse_dart(text::require(&secs, "root")?, n)?;
        RootedMap::new(sigma, alpha, root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn planar_loop() -> RootedMap {
        RootedMap::from_cycles(2, &[&[1, 2]], &[&[1, 2]], 1).unwrap()
    }
    pub(crate) fn torus_double_loop() -> RootedMap {
        RootedMap::from_cycles(4, &[&[1, 3, 2, 4]], &[&[1, 2], &[3, 4]], 1).unwrap()
    }
    pub(crate) fn single_edge() -> RootedMap {
        RootedMap::from_cycles(2, &[], &[&[1, 2]], 1).unwrap()
    }

    #[test]
    fn basic_examples() {
        let m = planar_loop();
        assert_eq!((m.num_vertices(), m.n_edges(), m.num_faces(), m.genus()), (1, 1, 2, 0));
        let m = torus_double_loop();
        assert_eq!((m.num_vertices(), m.n_edges(), m.num_faces(), m.genus()), (1, 2, 1, 1));
        assert_eq!(m.faces()[0].len(), 4);
        let m = single_edge();
        assert_eq!((m.num_vertices(), m.n_edges(), m.num_faces(), m.genus()), (2, 1, 1, 0));
        assert_eq!(m.faces()[0].len(), 2);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(RootedMap::build_map(2, &[1, 2], &[1, 2], 1), Err(Error::FixedPointInAlpha(1)));
        assert_eq!(RootedMap::build_map(4, &[1, 2, 3, 4], &[2, 3, 4, 1], 1), Err(Error::NotInvolution(1)));
        assert_eq!(RootedMap::build_map(4, &[1, 2, 3, 4], &[2, 1, 4, 3], 1), Err(Error::NotConnected));
        assert_eq!(RootedMap::build_map(2, &[2, 1], &[2, 1], 3), Err(Error::BadRoot(3)));
    }

    #[test]
    fn bicoloring_and_heights() {
        let m = planar_loop();
        let c = m.face_coloring().unwrap();
        assert!(c.black[m.root_face()]);
        assert_eq!((c.n_black(), c.n_white()), (1, 1));
        let h = m.face_heights();
        assert_eq!(h[m.root_face()], 0);
        assert_eq!(h.iter().max(), Some(&1));
        assert!(!torus_double_loop().is_bicolorable());
        assert!(!single_edge().is_bicolorable());
    }

    #[test]
    fn canonical_forms() {
        let m = torus_double_loop();
        let c = m.canonical_form();
        assert_eq!(c.canonical_form(), c);
        let moved = m.relabeled(&[3, 1, 0, 2]).unwrap();
        assert!(moved.is_isomorphic_rooted(&m));
        assert!(!planar_loop().is_isomorphic_rooted(&single_edge()));
    }

    #[test]
    fn text_round_trip() {
        let m = torus_double_loop();
        let s = m.to_string();
        assert_eq!(s, "darts 4 / sigma (1 3 2 4) / alpha (1 2)(3 4) / root 1");
        let back: RootedMap = s.parse().unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_string(), s);
        let loose: RootedMap = "darts 2/sigma(1 2)/alpha (1,2)/root 2".parse().unwrap();
        assert_eq!(loose.root(), 1);
    }
}
