//! Radial construction and its inverse.
//!
//! The corner `c_d = (sigma⁻¹(d), d)` of `m` becomes a radial edge with darts
//! `P_d = 2d` (at the vertex of edge `e(d)`) and `Q_d = 2d + 1` (at the vertex
//! of edge `e(sigma⁻¹(d))`). Around the radial vertex of the edge `{d, a}`
//! with `a = alpha(d)` the darts read, counterclockwise,
//! `P_a, Q_sigma(d), P_d, Q_sigma(a)`. The corner named by `P_d` lies in the
//! face of the vertex of `d` and the corner named by `Q_d` in the face that
//! contains `c_d`. The radial map is rooted at `P_root`.

use super::RootedMap;
use crate::error::{Error, Result};

/// Radial map with the correspondences of its faces.
#[derive(Clone, Debug)]
pub struct Radial {
    pub map: RootedMap,
    /// Black face of `map` for each vertex of the original map.
    pub vertex_to_face: Vec<usize>,
    /// White face of `map` for each face of the original map.
    pub face_to_face: Vec<usize>,
}

fn p(d: usize) -> usize {
    2 * d
}
fn q(d: usize) -> usize {
    2 * d + 1
}

pub fn radial(m: &RootedMap) -> Radial {
    let n = m.n_darts();
    let mut sigma = vec![0; 2 * n];
    let mut alpha = vec![0; 2 * n];
    for d in 0..n {
        sigma[p(d)] = q(m.sigma(m.alpha(d)));
        sigma[q(d)] = p(m.sigma_inv(d));
        alpha[p(d)] = q(d);
        alpha[q(d)] = p(d);
    }
    let map = RootedMap::new(sigma, alpha, p(m.root())).expect("radial map is valid");
    let rf = map.face_of();
    let vertex_to_face = m.vertices().iter().map(|v| rf[p(v[0])]).collect();
    let face_to_face = m.faces().iter().map(|f| rf[q(f[0])]).collect();
    Radial { map, vertex_to_face, face_to_face }
}

/// Recovers the map whose radial is `r`: its darts are the darts of `r` that
/// name corners in black faces.
pub fn radial_inverse(r: &RootedMap) -> Result<RootedMap> {
    if r.degrees().iter().any(|&k| k != 4) {
        return Err(Error::NotFourValent);
    }
    let coloring = r.face_coloring()?;
    let face_of = r.face_of();
    let black: Vec<usize> = (0..r.n_darts()).filter(|&x| coloring.black[face_of[x]]).collect();
    let mut index = vec![usize::MAX; r.n_darts()];
    for (i, &x) in black.iter().enumerate() {
        index[x] = i;
    }
    let mut sigma = vec![0; black.len()];
    let mut alpha = vec![0; black.len()];
    for (i, &x) in black.iter().enumerate() {
        alpha[i] = index[r.sigma(r.sigma(x))];
        sigma[i] = index[r.alpha(r.sigma_inv(x))];
    }
    if sigma.iter().chain(alpha.iter()).any(|&v| v == usize::MAX) {
        return Err(Error::NotBicolorable);
    }
    RootedMap::new(sigma, alpha, index[r.root()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &RootedMap, f_black: usize, f_white: usize) {
        let r = radial(m);
        assert!(r.map.degrees().iter().all(|&k| k == 4));
        let c = r.map.face_coloring().unwrap();
        assert_eq!((c.n_black(), c.n_white()), (f_black, f_white));
        assert_eq!(r.map.genus(), m.genus());
        assert!(r.vertex_to_face.iter().all(|&f| c.black[f]));
        assert!(r.face_to_face.iter().all(|&f| !c.black[f]));
        let back = radial_inverse(&r.map).unwrap();
        assert!(back.is_isomorphic_rooted(m));
    }

    #[test]
    fn small_examples() {
        let single_edge = RootedMap::from_cycles(2, &[], &[&[1, 2]], 1).unwrap();
        check(&single_edge, 2, 1);
        let r = radial(&single_edge).map;
        assert_eq!((r.num_vertices(), r.num_faces(), r.genus()), (1, 3, 0));
        let planar_loop = RootedMap::from_cycles(2, &[&[1, 2]], &[&[1, 2]], 1).unwrap();
        check(&planar_loop, 1, 2);
        let torus = RootedMap::from_cycles(4, &[&[1, 3, 2, 4]], &[&[1, 2], &[3, 4]], 1).unwrap();
        check(&torus, 1, 1);
        assert_eq!(radial(&torus).map.num_vertices(), 2);
        assert_eq!(radial(&torus).map.genus(), 1);
    }

    #[test]
    fn inverse_rejects_bad_input() {
        let m = RootedMap::from_cycles(2, &[&[1, 2]], &[&[1, 2]], 1).unwrap();
        assert_eq!(radial_inverse(&m).unwrap_err(), Error::NotFourValent);
        let t = RootedMap::from_cycles(4, &[&[1, 3, 2, 4]], &[&[1, 2], &[3, 4]], 1).unwrap();
        assert_eq!(radial_inverse(&t).unwrap_err(), Error::NotBicolorable);
    }
}
