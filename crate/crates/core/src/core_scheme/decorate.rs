//! Decorated labeled schemes and the direct census of scheme-rooted cores.

use super::scheme::LabeledScheme;
use super::BlossomingCore;
use crate::blossoming::{BlossomingMap, StemKind};
use crate::error::{Error, Result};
use crate::motzkin::{decode_branch, MotzkinWalk, Role};
use crate::oracle_enum::unicellular_blossoming_structures;

/// A labeled scheme with one typed walk per scheme edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedCore {
    pub scheme: LabeledScheme,
    pub walks: Vec<MotzkinWalk>,
}

/// Replaces every scheme edge by the branch its walk encodes. Scheme darts
/// keep their numbers; branch vertices follow, edge by edge.
pub fn decorate(l: &LabeledScheme, walks: &[MotzkinWalk]) -> Result<BlossomingMap> {
    let s = l.scheme();
    let m = s.map();
    if walks.len() != s.edges().len() {
        return Err(Error::DomainError("one walk per scheme edge".into()));
    }
    let n = m.n_darts();
    let mut sigma: Vec<usize> = (0..n).map(|d| m.sigma(d)).collect();
    let mut alpha: Vec<Option<usize>> = (0..n).map(|d| m.alpha(d)).collect();
    let mut kind: Vec<Option<StemKind>> = (0..n).map(|d| m.kind(d)).collect();
    for (e, w) in s.edges().iter().zip(walks) {
        let br = decode_branch(w, l.lambda0(e), l.lambda1(e))?;
        let mut prev = e.tail;
        for rot in &br.rotations {
            let base = sigma.len();
            for (j, role) in rot.iter().enumerate() {
                sigma.push(base + (j + 1) % 4);
                alpha.push(None);
                kind.push(match role {
                    Role::Bud => Some(StemKind::Bud),
                    Role::Leaf => Some(StemKind::Leaf),
                    _ => None,
                });
            }
            let inn = base + rot.iter().position(|&r| r == Role::In).unwrap();
            alpha[prev] = Some(inn);
            alpha[inn] = Some(prev);
            prev = base + rot.iter().position(|&r| r == Role::Out).unwrap();
        }
        alpha[prev] = Some(e.head);
        alpha[e.head] = Some(prev);
    }
    BlossomingMap::new(sigma, alpha, kind, m.root_bud())
}

/// Rootable stems as `(black, white)`, by parity of the corner preceding them.
pub fn rootable_colors(u: &BlossomingMap) -> Result<(usize, usize)> {
    let lab = u.canonical_labeling()?;
    let rootable = u.rootable_stems();
    let black = rootable.iter().filter(|&&r| lab.labels[r].rem_euclid(2) == 0).count();
    Ok((black, rootable.len() - black))
}

/// Every scheme-rooted well-labeled 4-valent core of genus `g` with the given
/// number of interior edges, straight from the structure generator.
pub fn enumerate_r_cores(g: usize, n_interior_edges: usize) -> Result<Vec<BlossomingCore>> {
    let mut out = Vec::new();
    for st in unicellular_blossoming_structures(g, n_interior_edges)? {
        let n = st.sigma.len();
        let stems: Vec<usize> = (0..n).filter(|&d| st.alpha[d].is_none()).collect();
        let probe = BlossomingMap { sigma: st.sigma.clone(), alpha: st.alpha.clone(), kind: vec![None; n], root: stems[0] };
        let deg = probe.interior_degrees();
        let vertex_of = probe.vertex_of();
        if deg.iter().any(|&k| k < 2) || deg[vertex_of[stems[0]]] != 3 {
            continue;
        }
        for bits in 0u32..(1 << (stems.len() - 1)) {
            let mut kind = vec![None; n];
            kind[stems[0]] = Some(StemKind::Bud);
            let mut buds = 1;
            for (k, &d) in stems[1..].iter().enumerate() {
                let bud = (bits >> k) & 1 == 1;
                buds += bud as usize;
                kind[d] = Some(if bud { StemKind::Bud } else { StemKind::Leaf });
            }
            if 2 * buds != stems.len() {
                continue;
            }
            let u = BlossomingMap::new(st.sigma.clone(), st.alpha.clone(), kind, stems[0])?;
            if u.is_well_labeled() {
                out.push(BlossomingCore::new(u)?);
            }
        }
    }
    Ok(out)
}
