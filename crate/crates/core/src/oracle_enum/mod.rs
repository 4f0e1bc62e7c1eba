//! Exhaustive enumeration used as ground truth for every counting identity.
//!
//! The primary strategy is the canonical-order backtracking of [`gen`]. A
//! second, independent strategy ([`scan_by_sigma`]) runs over every `sigma`
//! with a fixed `alpha` and divides by the centralizer of `alpha`.

pub mod gen;

use crate::blossoming::{BlossomingMap, StemKind};
use crate::error::{Error, Result};
use crate::map_core::{radial, Orientation, RootedMap};
use crate::perm;
use gen::{generate, GenConfig, Structure};
use std::collections::BTreeMap;

/// Default cap on backtracking nodes.
pub const DEFAULT_MAX_NODES: u64 = 200_000_000;
/// Largest edge count accepted for full rooted-map censuses.
pub const MAX_CENSUS_EDGES: usize = 6;
/// Largest edge count for brute-force orientation search.
pub const MAX_PROPP_EDGES: usize = 16;

/// Exact census keyed by index tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    pub genus: usize,
    pub axis: Vec<String>,
    pub counts: BTreeMap<Vec<usize>, u64>,
}

impl CountTable {
    pub fn new(genus: usize, axis: &[&str]) -> Self {
        CountTable { genus, axis: axis.iter().map(|s| s.to_string()).collect(), counts: BTreeMap::new() }
    }
    pub fn add(&mut self, key: Vec<usize>, c: u64) {
        *self.counts.entry(key).or_insert(0) += c;
    }
    pub fn get(&self, key: &[usize]) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
    /// Same counts under other axis names, for comparing censuses of different objects.
    pub fn relabeled(&self, axis: &[&str]) -> CountTable {
        CountTable { genus: self.genus, axis: axis.iter().map(|s| s.to_string()).collect(), counts: self.counts.clone() }
    }
    pub fn merge(&mut self, other: &CountTable) {
        for (k, &v) in &other.counts {
            self.add(k.clone(), v);
        }
    }
}

fn map_of(s: &Structure) -> RootedMap {
    let alpha = s.alpha.iter().map(|a| a.expect("plain map")).collect();
    RootedMap::new(s.sigma.clone(), alpha, 0).expect("generated map is valid")
}

/// Every rooted map of genus `g` with `n_edges` edges, once each.
/// `n_edges = 0` yields nothing: the vertex map has no dart to root at.
pub fn enumerate_rooted_maps(g: usize, n_edges: usize) -> Result<Vec<RootedMap>> {
    enumerate_rooted_maps_with(g, n_edges, DEFAULT_MAX_NODES)
}

pub fn enumerate_rooted_maps_with(g: usize, n_edges: usize, max_nodes: u64) -> Result<Vec<RootedMap>> {
    if n_edges > MAX_CENSUS_EDGES {
        return Err(Error::ResourceLimit(format!("{n_edges} edges exceeds the census bound {MAX_CENSUS_EDGES}")));
    }
    let cfg = GenConfig { n_darts: 2 * n_edges, degree: None, stems: 0, max_nodes };
    let mut out = Vec::new();
    generate(&cfg, |s| {
        let m = map_of(s);
        if m.genus() == g {
            out.push(m);
        }
    })?;
    Ok(out)
}

/// Census by edges, for `1..=max_edges`.
pub fn count_by_edges(g: usize, max_edges: usize) -> Result<CountTable> {
    let mut t = CountTable::new(g, &["E"]);
    for n in 1..=max_edges {
        let c = enumerate_rooted_maps(g, n)?.len() as u64;
        if c > 0 {
            t.add(vec![n], c);
        }
    }
    Ok(t)
}

/// Census by (vertices, faces) over `1..=max_edges` edges.
pub fn count_bivariate(g: usize, max_edges: usize) -> Result<CountTable> {
    let mut t = CountTable::new(g, &["V", "F"]);
    for n in 1..=max_edges {
        for m in enumerate_rooted_maps(g, n)? {
            t.add(vec![m.num_vertices(), m.num_faces()], 1);
        }
    }
    Ok(t)
}

/// Every rooted 4-valent bicolorable map of genus `g` with `n_vertices` vertices.
pub fn enumerate_4valent_bicolorable_maps(g: usize, n_vertices: usize) -> Result<Vec<RootedMap>> {
    if n_vertices > MAX_CENSUS_EDGES {
        return Err(Error::ResourceLimit(format!("{n_vertices} vertices exceeds the census bound {MAX_CENSUS_EDGES}")));
    }
    let cfg = GenConfig { n_darts: 4 * n_vertices, degree: Some(4), stems: 0, max_nodes: DEFAULT_MAX_NODES };
    let mut out = Vec::new();
    generate(&cfg, |s| {
        let m = map_of(s);
        if m.genus() == g && m.is_bicolorable() {
            out.push(m);
        }
    })?;
    Ok(out)
}

/// Census of 4-valent bicolorable maps by (black faces, white faces).
pub fn enumerate_4valent_bicolorable(g: usize, n_vertices: usize) -> Result<CountTable> {
    let mut t = CountTable::new(g, &["Fb", "Fw"]);
    for m in enumerate_4valent_bicolorable_maps(g, n_vertices)? {
        let c = m.face_coloring()?;
        t.add(vec![c.n_black(), c.n_white()], 1);
    }
    Ok(t)
}

/// Every 4-valent unicellular blossoming structure of genus `g` with the given
/// number of interior edges, rooted at a stem (kinds not yet assigned).
pub fn unicellular_blossoming_structures(g: usize, n_interior_edges: usize) -> Result<Vec<Structure>> {
    let v = (n_interior_edges + 1).checked_sub(2 * g).filter(|&v| v > 0).ok_or_else(|| {
        Error::DomainError(format!("no unicellular map of genus {g} with {n_interior_edges} edges"))
    })?;
    if v > 6 {
        return Err(Error::ResourceLimit(format!("{v} vertices exceeds the good-map bound 6")));
    }
    let n = 4 * v;
    if n <= 2 * n_interior_edges {
        // no stem left to carry the root bud
        return Ok(Vec::new());
    }
    let cfg = GenConfig { n_darts: n, degree: Some(4), stems: n - 2 * n_interior_edges, max_nodes: DEFAULT_MAX_NODES };
    let mut out = Vec::new();
    generate(&cfg, |s| {
        let p: Vec<usize> = (0..n).map(|c| match s.alpha[c] { Some(a) => s.sigma[a], None => s.sigma[c] }).collect();
        if perm::cycles(&p).len() == 1 {
            out.push(s.clone());
        }
    })?;
    Ok(out)
}

/// Every good map (well-rooted, well-oriented, well-labeled, 4-valent,
/// unicellular) of genus `g` with `n_interior_edges` interior edges.
pub fn enumerate_good_map_list(g: usize, n_interior_edges: usize) -> Result<Vec<BlossomingMap>> {
    let mut out = Vec::new();
    for s in unicellular_blossoming_structures(g, n_interior_edges)? {
        let stems: Vec<usize> = (0..s.sigma.len()).filter(|&d| s.alpha[d].is_none()).collect();
        let free = stems.len() - 1;
        for bits in 0u32..(1 << free) {
            let mut kind = vec![None; s.sigma.len()];
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
            let u = BlossomingMap::new(s.sigma.clone(), s.alpha.clone(), kind, stems[0])?;
            if u.is_well_rooted() && u.is_well_labeled() {
                out.push(u);
            }
        }
    }
    Ok(out)
}

/// Good maps by (black leaves + 1, white leaves).
pub fn enumerate_good_maps(g: usize, n_interior_edges: usize) -> Result<CountTable> {
    let mut t = CountTable::new(g, &["Lb+1", "Lw"]);
    for u in enumerate_good_map_list(g, n_interior_edges)? {
        let (b, w) = u.leaf_colors()?;
        t.add(vec![b + 1, w], 1);
    }
    Ok(t)
}

/// Independent census: every `sigma` on `2n` darts against the fixed
/// involution `(1 2)(3 4)...`, weighted by `2n / (2^n n!)`. Returns counts by
/// (genus, V, F).
pub fn scan_by_sigma(n_edges: usize) -> Result<BTreeMap<(usize, usize, usize), u64>> {
    if n_edges > 4 {
        return Err(Error::ResourceLimit("sigma scan is limited to 4 edges".into()));
    }
    let n = 2 * n_edges;
    let alpha: Vec<usize> = (0..n).map(|d| d ^ 1).collect();
    let mut labeled: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
    let mut sigma: Vec<usize> = (0..n).collect();
    // Heap's algorithm over all permutations
    let mut c = vec![0usize; n];
    let mut visit = |s: &[usize]| {
        if let Ok(m) = RootedMap::new(s.to_vec(), alpha.clone(), 0) {
            *labeled.entry((m.genus(), m.num_vertices(), m.num_faces())).or_insert(0) += 1;
        }
    };
    visit(&sigma);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                sigma.swap(0, i);
            } else {
                sigma.swap(c[i], i);
            }
            visit(&sigma);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let centralizer: u64 = (1..=n_edges as u64).product::<u64>() << n_edges;
    labeled
        .into_iter()
        .map(|(k, v)| {
            let num = v * n as u64;
            if !num.is_multiple_of(centralizer) {
                Err(Error::CounterexampleFound(format!("non-integral rooted count at {k:?}")))
            } else {
                Ok((k, num / centralizer))
            }
        })
        .collect()
}

/// Brute force over all `2^E` orientations: exactly one is bicolorable with no
/// clockwise face, and it is the dual-geodesic orientation.
pub fn verify_propp(m: &RootedMap) -> Result<bool> {
    if m.n_edges() > MAX_PROPP_EDGES {
        return Err(Error::ResourceLimit(format!("{} edges exceeds the orientation bound", m.n_edges())));
    }
    let dg = m.dual_geodesic_orientation()?;
    let mut found = Vec::new();
    for bits in 0..(1u64 << m.n_edges()) {
        let o = Orientation::from_bits(m, bits);
        if m.is_bicolorable_orientation(&o) && !m.has_clockwise_face(&o) {
            found.push(o);
            if found.len() > 1 {
                return Ok(false);
            }
        }
    }
    Ok(found.len() == 1 && found[0] == dg)
}

/// Pushes the (V, F) census forward through the radial construction.
pub fn radial_census(g: usize, n_edges: usize) -> Result<CountTable> {
    let mut t = CountTable::new(g, &["Fb", "Fw"]);
    for m in enumerate_rooted_maps(g, n_edges)? {
        let c = radial(&m).map.face_coloring()?;
        t.add(vec![c.n_black(), c.n_white()], 1);
    }
    Ok(t)
}

#[cfg(test)]
mod tests;
