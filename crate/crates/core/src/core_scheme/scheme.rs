//! Unlabeled and labeled schemes, namings, height orders and statistics.
//!
//! Vertices are indexed by `vertex_of` of the underlying map. A naming is a
//! vector `nu[v]` in `0..n`; a height order is `pi[k]` for `k` in `0..n`.
//! Statistic accessors take relative heights `k` starting at 1.

use crate::blossoming::{BlossomingMap, StemKind};
use crate::error::{Error, Result};
use crate::map_core::Orientation;
use std::collections::BTreeSet;

/// An edge of a scheme, from its tail dart to its head dart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchemeEdge {
    pub tail: usize,
    pub head: usize,
    /// Vertex of the tail.
    pub u: usize,
    /// Vertex of the head.
    pub v: usize,
    pub tail_type: u8,
    pub head_type: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeClass {
    Balanced,
    Shifted,
    Offset { toward: usize },
}

impl SchemeEdge {
    pub fn class(&self) -> EdgeClass {
        match (self.tail_type, self.head_type) {
            (0, 0) => EdgeClass::Balanced,
            (1, 1) => EdgeClass::Shifted,
            (0, _) => EdgeClass::Offset { toward: self.v },
            _ => EdgeClass::Offset { toward: self.u },
        }
    }

    /// Endpoints that can overfit or underfit: the target of an offset edge,
    /// both ends of a shifted one.
    fn fit_targets(&self) -> Vec<(usize, usize)> {
        match self.class() {
            EdgeClass::Balanced => vec![],
            EdgeClass::Shifted => vec![(self.v, self.u), (self.u, self.v)],
            EdgeClass::Offset { toward } => {
                let other = if toward == self.v { self.u } else { self.v };
                vec![(toward, other)]
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchemeStem {
    pub dart: usize,
    pub vertex: usize,
    pub kind: StemKind,
    /// Adjacent relative labels 1 and 2 rather than 0 and 1.
    pub shifted: bool,
    pub rootable: bool,
}

/// A rooted 4-valent blossoming scheme with its canonical orientation and
/// relative labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnlabeledScheme {
    map: BlossomingMap,
    orientation: Orientation,
    vertex_of: Vec<usize>,
    n_vertices: usize,
    rel: Vec<i64>,
    edges: Vec<SchemeEdge>,
    stems: Vec<SchemeStem>,
}

impl UnlabeledScheme {
    pub fn new(map: BlossomingMap) -> Result<Self> {
        if !map.is_unicellular() || map.genus() == 0 {
            return Err(Error::DomainError("a scheme is unicellular of positive genus".into()));
        }
        let verts = map.vertices();
        for v in &verts {
            let stems = v.iter().filter(|&&d| map.is_stem(d)).count();
            if v.len() != 4 || (v.len() - stems != 3 && v.len() - stems != 4) {
                return Err(Error::DomainError("scheme vertices have interior degree 3 or 4".into()));
            }
        }
        let orientation = map.canonical_orientation()?;
        let vertex_of = map.vertex_of();
        let mut rel = vec![0i64; map.n_darts()];
        for v in &verts {
            let mut cur = 0;
            for &d in v {
                rel[d] = cur;
                cur += if orientation.is_head(d) { -1 } else { 1 };
            }
            if cur != 0 {
                return Err(Error::DomainError("a scheme vertex needs two incoming and two outgoing half-edges".into()));
            }
            let m = v.iter().map(|&d| rel[d]).min().unwrap();
            for &d in v {
                rel[d] -= m;
            }
        }
        if rel[map.root_bud()] != 0 {
            return Err(Error::DomainError("root corner is not of relative label 0".into()));
        }
        let ty = |d: usize| rel[d].min(rel[map.sigma(d)]) as u8;
        let mut edges = Vec::new();
        let mut stems = Vec::new();
        for d in 0..map.n_darts() {
            match map.alpha(d) {
                Some(a) if !orientation.is_head(d) => edges.push(SchemeEdge {
                    tail: d,
                    head: a,
                    u: vertex_of[d],
                    v: vertex_of[a],
                    tail_type: ty(d),
                    head_type: ty(a),
                }),
                Some(_) => {}
                None => {
                    let kind = map.kind(d).unwrap();
                    stems.push(SchemeStem {
                        dart: d,
                        vertex: vertex_of[d],
                        kind,
                        shifted: ty(d) == 1,
                        rootable: d == map.root_bud() || kind == StemKind::Leaf,
                    })
                }
            }
        }
        Ok(UnlabeledScheme { n_vertices: verts.len(), map, orientation, vertex_of, rel, edges, stems })
    }

    pub fn map(&self) -> &BlossomingMap {
        &self.map
    }
    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }
    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }
    pub fn root_vertex(&self) -> usize {
        self.vertex_of[self.map.root_bud()]
    }
    pub fn relative_label(&self, d: usize) -> i64 {
        self.rel[d]
    }
    pub fn relative_labels(&self) -> &[i64] {
        &self.rel
    }
    pub fn edges(&self) -> &[SchemeEdge] {
        &self.edges
    }
    pub fn stems(&self) -> &[SchemeStem] {
        &self.stems
    }
    pub fn genus(&self) -> usize {
        self.map.genus()
    }
    /// Vertices of interior degree 4.
    pub fn n_degree_four(&self) -> usize {
        self.map.interior_degrees().iter().filter(|&&k| k == 4).count()
    }
    pub fn rootable_stems(&self) -> Vec<SchemeStem> {
        self.stems.iter().copied().filter(|s| s.rootable).collect()
    }
    /// Directed offset edges `(from, to)`.
    pub fn offset_arcs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .filter_map(|e| match e.class() {
                EdgeClass::Offset { toward } => Some((if toward == e.v { e.u } else { e.v }, toward)),
                _ => None,
            })
            .collect()
    }
}

/// Per-edge and per-stem classification.
pub fn classify_edges(s: &UnlabeledScheme) -> (Vec<EdgeClass>, Vec<(usize, bool)>) {
    let e = s.edges.iter().map(|e| e.class()).collect();
    let st = s.stems.iter().map(|x| (x.dart, x.shifted)).collect();
    (e, st)
}

/// For every offset edge toward `v` from `u`, `nu[u] < nu[v]`.
pub fn is_consistent(s: &UnlabeledScheme, nu: &[usize]) -> bool {
    is_naming(nu, s.n_vertices) && s.offset_arcs().iter().all(|&(a, b)| nu[a] < nu[b])
}

fn is_naming(nu: &[usize], n: usize) -> bool {
    let set: BTreeSet<usize> = nu.iter().copied().collect();
    nu.len() == n && set.len() == n && set.iter().all(|&x| x < n)
}

/// Topological order of the offset digraph, smallest vertex first among the available ones.
pub fn consistent_naming(s: &UnlabeledScheme) -> Result<Vec<usize>> {
    let n = s.n_vertices;
    let arcs = s.offset_arcs();
    let mut indeg = vec![0usize; n];
    for &(_, b) in &arcs {
        indeg[b] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut nu = vec![usize::MAX; n];
    let mut next = 0;
    while let Some(v) = ready.pop_first() {
        nu[v] = next;
        next += 1;
        for &(a, b) in &arcs {
            if a == v {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.insert(b);
                }
            }
        }
    }
    if next < n {
        return Err(Error::CyclicOffsetGraph);
    }
    Ok(nu)
}

/// Every consistent naming, in lexicographic order.
pub fn consistent_namings(s: &UnlabeledScheme) -> Vec<Vec<usize>> {
    permutations(s.n_vertices).into_iter().filter(|nu| is_consistent(s, nu)).collect()
}

/// An unlabeled scheme together with vertex heights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledScheme {
    scheme: UnlabeledScheme,
    heights: Vec<i64>,
}

impl LabeledScheme {
    /// The root vertex must have height 0.
    pub fn new(scheme: UnlabeledScheme, heights: Vec<i64>) -> Result<Self> {
        if heights.len() != scheme.n_vertices {
            return Err(Error::DomainError("one height per vertex".into()));
        }
        if heights[scheme.root_vertex()] != 0 {
            return Err(Error::HeightMismatch { from: heights[scheme.root_vertex()], to: 0 });
        }
        Ok(LabeledScheme { scheme, heights })
    }

    /// From corner labels; they must be heights plus relative labels.
    pub fn from_labels(scheme: UnlabeledScheme, labels: &[i64]) -> Result<Self> {
        let mut h = vec![i64::MAX; scheme.n_vertices];
        for (d, &l) in labels.iter().enumerate() {
            let v = scheme.vertex_of[d];
            h[v] = h[v].min(l);
        }
        for (d, &l) in labels.iter().enumerate() {
            let v = scheme.vertex_of[d];
            if l != h[v] + scheme.rel[d] {
                return Err(Error::HeightMismatch { from: l, to: h[v] + scheme.rel[d] });
            }
        }
        LabeledScheme::new(scheme, h)
    }

    /// All labels shifted by `k`; the result leaves the root-at-0 normalization.
    pub fn shifted(&self, k: i64) -> LabeledScheme {
        LabeledScheme { scheme: self.scheme.clone(), heights: self.heights.iter().map(|h| h + k).collect() }
    }

    pub fn scheme(&self) -> &UnlabeledScheme {
        &self.scheme
    }
    pub fn heights(&self) -> &[i64] {
        &self.heights
    }
    pub fn height(&self, v: usize) -> i64 {
        self.heights[v]
    }
    pub fn label(&self, d: usize) -> i64 {
        self.heights[self.scheme.vertex_of[d]] + self.scheme.rel[d]
    }
    pub fn labels(&self) -> Vec<i64> {
        (0..self.scheme.map.n_darts()).map(|d| self.label(d)).collect()
    }
    /// Label of the corner following the edge clockwise around its tail.
    pub fn lambda0(&self, e: &SchemeEdge) -> i64 {
        self.label(e.tail)
    }
    /// Label of the corner preceding the edge clockwise around its head.
    pub fn lambda1(&self, e: &SchemeEdge) -> i64 {
        self.label(self.scheme.map.sigma(e.head))
    }
    pub fn is_increasing(&self, e: &SchemeEdge) -> bool {
        self.lambda0(e) <= self.lambda1(e)
    }
    /// Label of the corner preceding a stem; its parity gives the color weight.
    pub fn stem_corner_label(&self, st: &SchemeStem) -> i64 {
        self.label(st.dart)
    }

    /// Lexicographic order on (height, name).
    pub fn height_order(&self, nu: &[usize]) -> Vec<usize> {
        let mut pi: Vec<usize> = (0..self.scheme.n_vertices).collect();
        pi.sort_by_key(|&v| (self.heights[v], nu[v]));
        pi
    }

    pub fn binary_bijection(&self, nu: &[usize]) -> BinaryBijection {
        let pi = self.height_order(nu);
        let zeta = pi.windows(2).map(|w| (self.heights[w[1]] - self.heights[w[0]]).rem_euclid(2) as u8).collect();
        BinaryBijection { pi, zeta }
    }
}

/// A height order with the parity of every consecutive height difference.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryBijection {
    pub pi: Vec<usize>,
    pub zeta: Vec<u8>,
}

impl BinaryBijection {
    pub fn new(pi: Vec<usize>, zeta: Vec<u8>) -> Result<Self> {
        if !is_naming(&pi, pi.len()) || zeta.len() + 1 != pi.len().max(1) || zeta.iter().any(|&z| z > 1) {
            return Err(Error::DomainError("not a binary bijection".into()));
        }
        Ok(BinaryBijection { pi, zeta })
    }

    pub fn mirror(&self) -> BinaryBijection {
        BinaryBijection { pi: mirror(&self.pi), zeta: self.zeta.iter().rev().copied().collect() }
    }

    /// Every binary bijection on `n` vertices.
    pub fn all(n: usize) -> Vec<BinaryBijection> {
        let mut out = Vec::new();
        for pi in permutations(n) {
            for bits in 0u32..(1 << n.saturating_sub(1)) {
                let zeta = (0..n.saturating_sub(1)).map(|i| ((bits >> i) & 1) as u8).collect();
                out.push(BinaryBijection { pi: pi.clone(), zeta });
            }
        }
        out
    }
}

/// `mirror(pi)[k] = pi[n - 1 - k]`.
pub fn mirror(pi: &[usize]) -> Vec<usize> {
    pi.iter().rev().copied().collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Statistics of a scheme for an ordering `pi` and a naming `nu`.
#[derive(Clone, Debug)]
pub struct SchemeStats<'a> {
    scheme: &'a UnlabeledScheme,
    nu: Vec<usize>,
    /// 1-based relative height of each vertex.
    pos: Vec<usize>,
    pi: Vec<usize>,
}

impl<'a> SchemeStats<'a> {
    pub fn new(scheme: &'a UnlabeledScheme, pi: &[usize], nu: &[usize]) -> Result<Self> {
        let n = scheme.n_vertices;
        if !is_naming(pi, n) || !is_naming(nu, n) {
            return Err(Error::DomainError("ordering and naming must be bijections".into()));
        }
        let mut pos = vec![0; n];
        for (k, &v) in pi.iter().enumerate() {
            pos[v] = k + 1;
        }
        Ok(SchemeStats { scheme, nu: nu.to_vec(), pos, pi: pi.to_vec() })
    }

    pub fn n(&self) -> usize {
        self.pi.len()
    }
    /// Relative height of `v`, from 1.
    pub fn pos(&self, v: usize) -> usize {
        self.pos[v]
    }
    /// Vertex at relative height `k`.
    pub fn at(&self, k: usize) -> usize {
        self.pi[k - 1]
    }

    /// Discordance at `k`, for `k` in `1..n`.
    pub fn delta_plus(&self, k: usize) -> u32 {
        (self.nu[self.at(k + 1)] <= self.nu[self.at(k)]) as u32
    }
    /// Discordance at `k - 1`, for `k` in `2..=n`.
    pub fn delta_minus(&self, k: usize) -> u32 {
        self.delta_plus(k - 1)
    }

    pub fn c_plus(&self, k: usize) -> u32 {
        self.scheme
            .edges
            .iter()
            .filter(|e| {
                let (a, b) = (self.pos[e.u], self.pos[e.v]);
                (a <= k && k < b) || (b <= k && k < a)
            })
            .count() as u32
    }
    pub fn c_minus(&self, k: usize) -> u32 {
        self.scheme
            .edges
            .iter()
            .filter(|e| {
                let (a, b) = (self.pos[e.u], self.pos[e.v]);
                (a < k && k <= b) || (b < k && k <= a)
            })
            .count() as u32
    }

    /// Whether edge `i` points up across `k`: tail at or below `k`, head above.
    pub fn is_up(&self, i: usize, k: usize) -> bool {
        let e = &self.scheme.edges[i];
        self.pos[e.u] <= k && k < self.pos[e.v]
    }
    pub fn is_down(&self, i: usize, k: usize) -> bool {
        let e = &self.scheme.edges[i];
        self.pos[e.v] <= k && k < self.pos[e.u]
    }

    pub fn of(&self, i: usize, k: usize) -> u32 {
        self.scheme.edges[i].fit_targets().iter().any(|&(t, o)| self.pos[t] == k && self.pos[o] < k) as u32
    }
    pub fn uf(&self, i: usize, k: usize) -> u32 {
        self.scheme.edges[i].fit_targets().iter().any(|&(t, o)| self.pos[t] == k && self.pos[o] > k) as u32
    }
    pub fn overfit(&self, k: usize) -> u32 {
        (0..self.scheme.edges.len()).map(|i| self.of(i, k)).sum()
    }
    pub fn underfit(&self, k: usize) -> u32 {
        (0..self.scheme.edges.len()).map(|i| self.uf(i, k)).sum()
    }
    pub fn total_overfit(&self) -> u32 {
        (1..=self.n()).map(|k| self.overfit(k)).sum()
    }
    pub fn total_underfit(&self) -> u32 {
        (1..=self.n()).map(|k| self.underfit(k)).sum()
    }

    /// Regular buds at the vertex of relative height `k`.
    pub fn regular_buds(&self, k: usize) -> u32 {
        self.buds_at(k, false)
    }
    pub fn shifted_buds(&self, k: usize) -> u32 {
        self.buds_at(k, true)
    }
    fn buds_at(&self, k: usize, shifted: bool) -> u32 {
        let v = self.at(k);
        self.scheme.stems.iter().filter(|s| s.vertex == v && s.kind == StemKind::Bud && s.shifted == shifted).count()
            as u32
    }
}

/// An ascending (`+`) or descending (`-`) truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    /// Vertices kept, the merged one first.
    pub vertices: Vec<usize>,
    pub merged: usize,
    pub merged_label: i64,
    /// Surviving edges as indices into the scheme's edges, with their end labels.
    pub edges: Vec<(usize, i64, i64)>,
}

impl Truncation {
    /// `Π^{k:±}(l)` for `k` in `1..=n`.
    pub fn new(l: &LabeledScheme, nu: &[usize], k: usize, ascending: bool) -> Result<Self> {
        let s = l.scheme();
        let n = s.n_vertices();
        if k == 0 || k > n {
            return Err(Error::DomainError(format!("relative height {k} outside 1..={n}")));
        }
        let pi = l.height_order(nu);
        let mut pos = vec![0; n];
        for (i, &v) in pi.iter().enumerate() {
            pos[v] = i + 1;
        }
        let below = |p: usize| if ascending { p < k } else { p > k };
        let merged = pi[k - 1];
        let hk = l.height(merged);
        let vertices: Vec<usize> =
            std::iter::once(merged).chain(pi.iter().copied().filter(|&v| v != merged && !below(pos[v]))).collect();
        let mut edges = Vec::new();
        for (i, e) in s.edges().iter().enumerate() {
            let (pu, pv) = (pos[e.u], pos[e.v]);
            let into = |p: usize| below(p) || p == k;
            if into(pu) && into(pv) {
                continue;
            }
            let end = |p: usize, q: usize, lam: i64| if below(p) || (p == k && below(q)) { hk } else { lam };
            edges.push((i, end(pu, pv, l.lambda0(e)), end(pv, pu, l.lambda1(e))));
        }
        Ok(Truncation { vertices, merged, merged_label: hk, edges })
    }

    /// `∏ Δ` weight as exponents of `(D•, D∘)`.
    pub fn weight(&self) -> (u32, u32) {
        let mut w = (0, 0);
        for &(_, a, b) in &self.edges {
            let (x, y) = if a <= b {
                crate::series_engine::delta(a, b).unwrap()
            } else {
                let (p, q) = crate::series_engine::delta(b, a).unwrap();
                (q, p)
            };
            w.0 += x;
            w.1 += y;
        }
        w
    }
}
