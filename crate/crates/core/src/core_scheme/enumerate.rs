//! Exhaustive generation of rooted 4-valent blossoming schemes of genus 1 and 2.
//!
//! Interiors are unicellular maps with interior degrees 3 and 4, produced by
//! gluing the sides of a `2E`-gon: `phi` is the cycle `d -> d + 1` and
//! `sigma(d) = alpha(d) + 1`. With `2E >= 3V` and `E = V + 2g - 1` this
//! gives `V <= 4g - 2`. One stem goes into a corner of every degree-3
//! vertex, every stem is tried as root, and the stem kinds are then forced
//! by the canonical orientation.

use super::scheme::UnlabeledScheme;
use crate::blossoming::{BlossomingMap, StemKind};
use crate::error::{Error, Result};
use crate::perm;
use std::collections::BTreeMap;

/// Rooted schemes sharing one unrooted scheme.
#[derive(Clone, Debug)]
pub struct SchemeClass {
    /// Canonical key of the unrooted scheme.
    pub key: BlossomingMap,
    pub rooted: Vec<UnlabeledScheme>,
    pub n_degree_four: usize,
}

/// Output of [`enumerate_schemes`].
#[derive(Clone, Debug)]
pub struct SchemeCensus {
    pub genus: usize,
    pub classes: Vec<SchemeClass>,
    /// Interiors with no degree-3 vertex: they carry no stem, hence no root.
    pub stemless: Vec<Vec<usize>>,
}

impl SchemeCensus {
    pub fn rooted(&self) -> impl Iterator<Item = &UnlabeledScheme> {
        self.classes.iter().flat_map(|c| c.rooted.iter())
    }
}

/// Unicellular maps with all degrees in `{3, 4}`, `E` edges and genus `g`,
/// as `(sigma, alpha)` on `2E` darts; each rooted map appears once.
pub fn unicellular_interiors(g: usize, e: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = 2 * e;
    let Some(v) = (e + 1).checked_sub(2 * g) else { return Vec::new() };
    if v == 0 || 3 * v > n {
        return Vec::new();
    }
    let mut alpha = vec![usize::MAX; n];
    let mut out = Vec::new();
    glue(&mut alpha, n, v, &mut out);
    out
}

fn glue(alpha: &mut [usize], n: usize, v: usize, out: &mut Vec<(Vec<usize>, Vec<usize>)>) {
    let Some(d) = alpha.iter().position(|&a| a == usize::MAX) else {
        let sigma: Vec<usize> = (0..n).map(|d| (alpha[d] + 1) % n).collect();
        let cyc = perm::cycles(&sigma);
        if cyc.len() == v && cyc.iter().all(|c| c.len() == 3 || c.len() == 4) {
            out.push((sigma, alpha.to_vec()));
        }
        return;
    };
    for x in d + 1..n {
        if alpha[x] != usize::MAX {
            continue;
        }
        alpha[d] = x;
        alpha[x] = d;
        if partial_ok(alpha, n, d) && partial_ok(alpha, n, x) {
            glue(alpha, n, v, out);
        }
        alpha[d] = usize::MAX;
        alpha[x] = usize::MAX;
    }
}

/// The partial `sigma` cycle through `d` can still close with length 3 or 4.
fn partial_ok(alpha: &[usize], n: usize, d: usize) -> bool {
    let sigma = |y: usize| if alpha[y] == usize::MAX { None } else { Some((alpha[y] + 1) % n) };
    let mut len = 0;
    let mut y = d;
    while let Some(z) = sigma(y) {
        len += 1;
        y = z;
        if y == d {
            return len == 3 || len == 4;
        }
        if len >= 4 {
            return false;
        }
    }
    // walk backwards: sigma^{-1}(y) = alpha(y - 1)
    let mut y = d;
    loop {
        let p = (y + n - 1) % n;
        if alpha[p] == usize::MAX {
            break;
        }
        y = alpha[p];
        len += 1;
        if len >= 4 {
            return false;
        }
    }
    true
}

/// Canonical key of an interior rooted at each dart; the minimum is the unrooted key.
fn interior_key(sigma: &[usize], alpha: &[usize], root: usize) -> Vec<usize> {
    let n = sigma.len();
    let order = crate::map_core::bfs_order(n, root, |d| [Some(sigma[d]), Some(alpha[d]), None]);
    let new_of = perm::inverse(&order);
    let mut key: Vec<usize> = order.iter().map(|&o| new_of[sigma[o]]).collect();
    key.extend(order.iter().map(|&o| new_of[alpha[o]]));
    key
}

/// Unrooted stemless interiors (only degree-4 vertices), as canonical keys.
pub fn stemless_interiors(g: usize) -> Result<Vec<Vec<usize>>> {
    Ok(enumerate_schemes(g)?.stemless)
}

/// All rooted schemes of genus `g`, grouped by unrooted scheme.
pub fn enumerate_schemes(g: usize) -> Result<SchemeCensus> {
    if g == 0 || g > 2 {
        return Err(Error::ResourceLimit(format!("scheme generation is limited to genus 1 and 2, got {g}")));
    }
    let mut classes: BTreeMap<BlossomingMap, SchemeClass> = BTreeMap::new();
    let mut stemless = Vec::new();
    for e in 2 * g..=6 * g - 3 {
        for (sigma, alpha) in unicellular_interiors(g, e) {
            let n = sigma.len();
            let own = interior_key(&sigma, &alpha, 0);
            if (1..n).any(|r| interior_key(&sigma, &alpha, r) < own) {
                continue;
            }
            let cycles = perm::cycles(&sigma);
            let three: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 3).collect();
            if three.is_empty() {
                stemless.push(own);
                continue;
            }
            let mut choice = vec![0usize; three.len()];
            loop {
                let (bsigma, stems) = insert_stems(&sigma, &three, &choice);
                let balpha: Vec<Option<usize>> =
                    (0..bsigma.len()).map(|d| if d < n { Some(alpha[d]) } else { None }).collect();
                for &r in &stems {
                    if let Some(s) = forced_scheme(&bsigma, &balpha, r)? {
                        let key = unrooted_key(s.map());
                        let n4 = s.n_degree_four();
                        let cls = classes.entry(key.clone()).or_insert_with(|| SchemeClass {
                            key,
                            rooted: Vec::new(),
                            n_degree_four: n4,
                        });
                        if !cls.rooted.iter().any(|t| t.map() == s.map()) {
                            cls.rooted.push(s);
                        }
                    }
                }
                if !advance(&mut choice, 3) {
                    break;
                }
            }
        }
    }
    Ok(SchemeCensus { genus: g, classes: classes.into_values().collect(), stemless })
}

fn advance(c: &mut [usize], base: usize) -> bool {
    for x in c.iter_mut() {
        *x += 1;
        if *x < base {
            return true;
        }
        *x = 0;
    }
    false
}

/// Inserts stem `n + i` before dart `three[i][choice[i]]`.
fn insert_stems(sigma: &[usize], three: &[&Vec<usize>], choice: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = sigma.len();
    let mut s = sigma.to_vec();
    let mut stems = Vec::new();
    for (i, cyc) in three.iter().enumerate() {
        let d = cyc[choice[i]];
        let prev = cyc[(choice[i] + 2) % 3];
        let st = n + i;
        s[prev] = st;
        s.push(d);
        stems.push(st);
    }
    (s, stems)
}

/// The scheme rooted at `root` when the kinds forced by its canonical
/// orientation are consistent.
fn forced_scheme(
    sigma: &[usize],
    alpha: &[Option<usize>],
    root: usize,
) -> Result<Option<UnlabeledScheme>> {
    let mut kind: Vec<Option<StemKind>> = alpha.iter().map(|a| if a.is_none() { Some(StemKind::Leaf) } else { None }).collect();
    kind[root] = Some(StemKind::Bud);
    let probe = BlossomingMap::new(sigma.to_vec(), alpha.to_vec(), kind.clone(), root)?;
    let o = probe.canonical_orientation()?;
    for v in probe.vertices() {
        let heads = v.iter().filter(|&&d| alpha[d].is_some() && o.is_head(d)).count();
        let tails = v.iter().filter(|&&d| alpha[d].is_some() && !o.is_head(d)).count();
        match (heads, tails) {
            (2, 2) => {}
            (2, 1) | (1, 2) => {
                let st = *v.iter().find(|&&d| alpha[d].is_none()).unwrap();
                let k = if heads == 2 { StemKind::Bud } else { StemKind::Leaf };
                if st == root && k != StemKind::Bud {
                    return Ok(None);
                }
                kind[st] = Some(k);
            }
            _ => return Ok(None),
        }
    }
    let m = BlossomingMap::new(sigma.to_vec(), alpha.to_vec(), kind, root)?.canonical_form();
    Ok(UnlabeledScheme::new(m).ok())
}

/// Root bud turned into a leaf, minimized over all rootable stems as starting point.
pub(crate) fn unrooted_key(m: &BlossomingMap) -> BlossomingMap {
    let mut kind = m.kind.clone();
    kind[m.root_bud()] = Some(StemKind::Leaf);
    m.stems()
        .into_iter()
        .filter(|&s| kind[s] == Some(StemKind::Leaf))
        .map(|s| BlossomingMap { sigma: m.sigma.clone(), alpha: m.alpha.clone(), kind: kind.clone(), root: s }.canonical_form())
        .min()
        .unwrap()
}
