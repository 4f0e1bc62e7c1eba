//! Edge orientations, face potentials and clockwise faces.
//!
//! Convention: an oriented edge has a tail dart and a head dart. Its *low
//! side* is the face of the corner named by the tail dart, its *high side*
//! the face of the corner named by the head dart. The dual-geodesic
//! orientation puts the face of smaller height on the low side, and a
//! bicolorable orientation is one with a face potential rising by one from
//! the low side to the high side of every edge. This is the handedness under
//! which closures of good maps carry their dual-geodesic orientation.

use super::RootedMap;
use crate::error::{Error, Result};
use std::collections::VecDeque;

/// `incoming[d]` is true when `d` is the head dart of its edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    incoming: Vec<bool>,
}

impl Orientation {
    /// Builds an orientation from head flags; each edge needs exactly one head.
    pub fn from_heads(m: &RootedMap, incoming: Vec<bool>) -> Result<Self> {
        if incoming.len() != m.n_darts() {
            return Err(Error::DomainError("orientation length".into()));
        }
        for d in 0..m.n_darts() {
            if incoming[d] == incoming[m.alpha(d)] {
                return Err(Error::DomainError(format!("edge of dart {} has no unique head", d + 1)));
            }
        }
        Ok(Orientation { incoming })
    }

    /// Head flags without validation; stems may appear with either flag.
    pub(crate) fn from_raw(incoming: Vec<bool>) -> Self {
        Orientation { incoming }
    }

    /// Orientation number `bits` among the `2^E` ones, edges taken by smallest dart.
    pub fn from_bits(m: &RootedMap, bits: u64) -> Self {
        let mut incoming = vec![false; m.n_darts()];
        let mut k = 0;
        for d in 0..m.n_darts() {
            let a = m.alpha(d);
            if d < a {
                let flip = (bits >> k) & 1 == 1;
                incoming[d] = flip;
                incoming[a] = !flip;
                k += 1;
            }
        }
        Orientation { incoming }
    }

    pub fn is_head(&self, d: usize) -> bool {
        self.incoming[d]
    }

    pub fn heads(&self) -> &[bool] {
        &self.incoming
    }

    pub fn reversed(&self) -> Orientation {
        Orientation { incoming: self.incoming.iter().map(|b| !b).collect() }
    }
}

impl RootedMap {
    /// Orients every edge so that its low side has the smaller face height.
    pub fn dual_geodesic_orientation(&self) -> Result<Orientation> {
        if !self.is_bicolorable() {
            return Err(Error::NotBicolorable);
        }
        let h = self.face_heights();
        let face_of = self.face_of();
        let incoming = (0..self.n_darts())
            .map(|d| h[face_of[d]] > h[face_of[self.alpha(d)]])
            .collect();
        Ok(Orientation { incoming })
    }

    /// True when a potential on faces rises by exactly one across every edge.
    pub fn is_bicolorable_orientation(&self, o: &Orientation) -> bool {
        let face_of = self.face_of();
        let nf = face_of.iter().max().map_or(0, |m| m + 1);
        // adj[f] holds (g, step) meaning potential(g) = potential(f) + step.
        let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nf];
        for d in 0..self.n_darts() {
            let e = self.alpha(d);
            let step = if o.is_head(e) { 1 } else { -1 };
            adj[face_of[d]].push((face_of[e], step));
        }
        let mut pot: Vec<Option<i64>> = vec![None; nf];
        let r = face_of[self.root()];
        pot[r] = Some(0);
        let mut queue = VecDeque::from([r]);
        while let Some(f) = queue.pop_front() {
            let p = pot[f].unwrap();
            for &(g, step) in &adj[f] {
                match pot[g] {
                    None => {
                        pot[g] = Some(p + step);
                        queue.push_back(g);
                    }
                    Some(q) if q != p + step => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// A non-root face is clockwise when every boundary dart is a tail (the
    /// face sits on the low side all around); the root face is clockwise when
    /// every boundary dart is a head.
    pub fn has_clockwise_face(&self, o: &Orientation) -> bool {
        let root_face = self.root_face();
        self.faces().iter().enumerate().any(|(f, darts)| {
            if f == root_face {
                darts.iter().all(|&d| o.is_head(d))
            } else {
                darts.iter().all(|&d| !o.is_head(d))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn planar_loop() -> RootedMap {
        RootedMap::from_cycles(2, &[&[1, 2]], &[&[1, 2]], 1).unwrap()
    }

    #[test]
    fn planar_loop_orientations() {
        let m = planar_loop();
        let dg = m.dual_geodesic_orientation().unwrap();
        // root dart 1 names the root face corner, so it is the tail
        assert!(!dg.is_head(0) && dg.is_head(1));
        assert!(m.is_bicolorable_orientation(&dg));
        assert!(!m.has_clockwise_face(&dg));
        let rev = dg.reversed();
        assert!(m.is_bicolorable_orientation(&rev));
        assert!(m.has_clockwise_face(&rev));
    }

    #[test]
    fn tree_has_no_clockwise_face() {
        let m = RootedMap::from_cycles(4, &[&[2, 3]], &[&[1, 2], &[3, 4]], 1).unwrap();
        for bits in 0..4 {
            assert!(!m.has_clockwise_face(&Orientation::from_bits(&m, bits)));
        }
    }

    #[test]
    fn unbalanced_eulerian_orientation() {
        // two nested loops on one vertex: one outer face, two inner
        let m = RootedMap::from_cycles(4, &[&[1, 2, 3, 4]], &[&[1, 2], &[3, 4]], 1).unwrap();
        assert!(m.is_bicolorable());
        let count = (0..4)
            .filter(|&b| m.is_bicolorable_orientation(&Orientation::from_bits(&m, b)))
            .count();
        assert_eq!(count, 4);
        // the torus double loop has no bicolorable orientation at all
        let t = RootedMap::from_cycles(4, &[&[1, 3, 2, 4]], &[&[1, 2], &[3, 4]], 1).unwrap();
        assert!((0..4).all(|b| !t.is_bicolorable_orientation(&Orientation::from_bits(&t, b))));
    }
}
