//! Cores and schemes of unicellular blossoming maps, labeled schemes and the
//! statistics attached to their height orders.
//!
//! Pruning removes dangling trees. A tree hanging at core dart `w` leaves a
//! stem at `w`: a leaf, unless the tree carried the root bud, in which case
//! the stem is a bud and becomes the root of the core. Removing the
//! interior-degree-2 vertices of a core then yields its scheme.

mod decorate;
mod enumerate;
mod scheme;

pub use decorate::{decorate, enumerate_r_cores, rootable_colors, DecoratedCore};
pub use enumerate::{enumerate_schemes, stemless_interiors, unicellular_interiors, SchemeClass, SchemeCensus};
pub use scheme::{
    classify_edges, consistent_naming, consistent_namings, is_consistent, mirror, permutations, BinaryBijection, EdgeClass, LabeledScheme, SchemeEdge,
    SchemeStats, SchemeStem, Truncation, UnlabeledScheme,
};

use crate::blossoming::{BlossomingMap, StemKind};
use crate::error::{Error, Result};
use crate::map_core::Orientation;
use crate::motzkin::{encode_branch, Branch, Role};

/// A tree removed by [`prune`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dangling {
    /// Stem of the core that replaced the tree.
    pub attach: usize,
    /// The tree; its stem `link` stands for the edge to the core.
    pub tree: BlossomingMap,
    pub link: usize,
}

/// Output of [`prune`]: the core, the removed trees, and where every dart
/// came from.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub core: BlossomingMap,
    pub trees: Vec<Dangling>,
    /// `core_origin[d]` is the dart of the input that core dart `d` was.
    pub core_origin: Vec<usize>,
}

/// Iteratively removes vertices of interior degree one.
pub fn prune(u: &BlossomingMap) -> Result<Pruned> {
    let o = u.canonical_orientation()?;
    let vertex_of = u.vertex_of();
    let verts = u.vertices();
    let mut deg = u.interior_degrees();
    let mut removed = vec![false; verts.len()];
    let mut stack: Vec<usize> = (0..verts.len()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] || deg[v] != 1 {
            continue;
        }
        removed[v] = true;
        let d = verts[v].iter().copied().find(|&d| u.alpha(d).is_some_and(|a| !removed[vertex_of[a]])).unwrap();
        let w = vertex_of[u.alpha(d).unwrap()];
        deg[v] = 0;
        deg[w] -= 1;
        if deg[w] == 1 {
            stack.push(w);
        }
    }
    if removed.iter().all(|&r| r) || (0..verts.len()).all(|v| removed[v] || deg[v] == 0) {
        return Err(Error::DomainError("a tree has no core".into()));
    }
    let kept: Vec<usize> = (0..u.n_darts()).filter(|&d| !removed[vertex_of[d]]).collect();
    let mut new_of = vec![usize::MAX; u.n_darts()];
    for (i, &d) in kept.iter().enumerate() {
        new_of[d] = i;
    }
    let root_kept = !removed[vertex_of[u.root_bud()]];
    let mut sigma = Vec::with_capacity(kept.len());
    let mut alpha = Vec::with_capacity(kept.len());
    let mut kind = Vec::with_capacity(kept.len());
    let mut core_root = if root_kept { new_of[u.root_bud()] } else { usize::MAX };
    let mut attachments = Vec::new();
    for &d in &kept {
        sigma.push(new_of[u.sigma(d)]);
        match u.alpha(d) {
            Some(a) if !removed[vertex_of[a]] => {
                alpha.push(Some(new_of[a]));
                kind.push(None);
            }
            Some(a) => {
                alpha.push(None);
                let k = if o.is_head(d) { StemKind::Leaf } else { StemKind::Bud };
                kind.push(Some(k));
                attachments.push((d, a));
            }
            None => {
                alpha.push(None);
                kind.push(u.kind(d));
            }
        }
    }
    let mut trees = Vec::new();
    for &(d, a) in &attachments {
        let (tree, link, has_root) = extract_tree(u, &o, &vertex_of, &removed, a);
        if has_root {
            core_root = new_of[d];
        }
        trees.push(Dangling { attach: new_of[d], tree, link });
    }
    let core = BlossomingMap::new(sigma, alpha, kind, core_root)?;
    Ok(Pruned { core, trees, core_origin: kept })
}

/// The removed tree entered through dart `start`, with `start` turned into a stem.
fn extract_tree(
    u: &BlossomingMap,
    o: &Orientation,
    vertex_of: &[usize],
    removed: &[bool],
    start: usize,
) -> (BlossomingMap, usize, bool) {
    let mut order = Vec::new();
    let mut seen = vec![false; u.n_darts()];
    let mut queue = std::collections::VecDeque::from([start]);
    seen[start] = true;
    while let Some(d) = queue.pop_front() {
        order.push(d);
        let mut next = vec![u.sigma(d)];
        if d != start {
            next.extend(u.alpha(d));
        }
        for x in next {
            if !seen[x] && removed[vertex_of[x]] {
                seen[x] = true;
                queue.push_back(x);
            }
        }
    }
    let mut new_of = vec![usize::MAX; u.n_darts()];
    for (i, &d) in order.iter().enumerate() {
        new_of[d] = i;
    }
    let sigma = order.iter().map(|&d| new_of[u.sigma(d)]).collect();
    let alpha = order.iter().map(|&d| if d == start { None } else { u.alpha(d).map(|a| new_of[a]) }).collect();
    let link_kind = if o.is_head(start) { StemKind::Leaf } else { StemKind::Bud };
    let kind = order.iter().map(|&d| if d == start { Some(link_kind) } else { u.kind(d) }).collect();
    let has_root = seen[u.root_bud()];
    let root = if has_root { new_of[u.root_bud()] } else { 0 };
    let bm = BlossomingMap { sigma, alpha, kind, root };
    (bm, 0, has_root)
}

/// Inverse of [`prune`]: glues every tree back along its link.
pub fn regraft(p: &Pruned) -> Result<BlossomingMap> {
    let nc = p.core.n_darts();
    let total = nc + p.trees.iter().map(|t| t.tree.n_darts()).sum::<usize>();
    let mut sigma = Vec::with_capacity(total);
    let mut alpha: Vec<Option<usize>> = Vec::with_capacity(total);
    let mut kind = Vec::with_capacity(total);
    for d in 0..nc {
        sigma.push(p.core.sigma(d));
        alpha.push(p.core.alpha(d));
        kind.push(p.core.kind(d));
    }
    let mut root = p.core.root_bud();
    for t in &p.trees {
        let off = sigma.len();
        for d in 0..t.tree.n_darts() {
            sigma.push(off + t.tree.sigma(d));
            alpha.push(t.tree.alpha(d).map(|a| off + a));
            kind.push(t.tree.kind(d));
        }
        alpha[t.attach] = Some(off + t.link);
        alpha[off + t.link] = Some(t.attach);
        kind[t.attach] = None;
        kind[off + t.link] = None;
        if root == t.attach {
            root = off + t.tree.root_bud();
        }
    }
    BlossomingMap::new(sigma, alpha, kind, root)
}

/// A scheme-rooted blossoming map all of whose vertices have interior degree
/// at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlossomingCore {
    pub map: BlossomingMap,
    /// Vertices of interior degree at least three.
    pub scheme_vertices: Vec<usize>,
    /// For every scheme edge, its darts from tail to head and the branch between.
    pub branches: Vec<CoreBranch>,
}

/// A maximal chain of interior-degree-2 vertices, oriented tail to head.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreBranch {
    /// Dart at the tail scheme vertex.
    pub tail: usize,
    /// Dart at the head scheme vertex.
    pub head: usize,
    pub branch: Branch,
    /// Darts of the branch vertices, each in rotation order starting from the incoming one.
    pub vertex_darts: Vec<[usize; 4]>,
}

impl BlossomingCore {
    pub fn new(map: BlossomingMap) -> Result<Self> {
        let deg = map.interior_degrees();
        if deg.iter().any(|&k| k < 2) {
            return Err(Error::DomainError("core has a vertex of interior degree below two".into()));
        }
        let o = map.canonical_orientation()?;
        let vertex_of = map.vertex_of();
        let scheme_vertices: Vec<usize> = (0..deg.len()).filter(|&v| deg[v] >= 3).collect();
        if scheme_vertices.is_empty() {
            return Err(Error::DomainError("core is a cycle".into()));
        }
        if !scheme_vertices.contains(&vertex_of[map.root_bud()]) {
            return Err(Error::NotSchemeRooted);
        }
        let mut branches = Vec::new();
        for d in 0..map.n_darts() {
            if map.is_stem(d) || deg[vertex_of[d]] < 3 || o.is_head(d) {
                continue;
            }
            // walk from the tail dart d through degree-2 vertices
            let mut x = map.alpha(d).unwrap();
            let mut rotations = Vec::new();
            let mut vertex_darts = Vec::new();
            while deg[vertex_of[x]] == 2 {
                let ds = [x, map.sigma(x), map.sigma(map.sigma(x)), map.sigma_inv(x)];
                let roles = ds.map(|y| match (map.alpha(y), map.kind(y)) {
                    _ if y == x => Role::In,
                    (Some(_), _) => Role::Out,
                    (None, Some(StemKind::Bud)) => Role::Bud,
                    (None, _) => Role::Leaf,
                });
                if !o.is_head(x) {
                    return Err(Error::DomainError("branch orientation changes inside a branch".into()));
                }
                rotations.push(roles);
                vertex_darts.push(ds);
                let out = ds.into_iter().find(|&y| y != x && map.alpha(y).is_some()).unwrap();
                x = map.alpha(out).unwrap();
            }
            branches.push(CoreBranch { tail: d, head: x, branch: Branch { rotations }, vertex_darts });
        }
        Ok(BlossomingCore { map, scheme_vertices, branches })
    }

    /// Removes branch vertices; scheme darts keep their relative order.
    pub fn scheme_map(&self) -> Result<(BlossomingMap, Vec<usize>)> {
        let vertex_of = self.map.vertex_of();
        let keep: Vec<usize> =
            (0..self.map.n_darts()).filter(|&d| self.scheme_vertices.contains(&vertex_of[d])).collect();
        let mut new_of = vec![usize::MAX; self.map.n_darts()];
        for (i, &d) in keep.iter().enumerate() {
            new_of[d] = i;
        }
        let mut alpha: Vec<Option<usize>> = vec![None; keep.len()];
        for b in &self.branches {
            alpha[new_of[b.tail]] = Some(new_of[b.head]);
            alpha[new_of[b.head]] = Some(new_of[b.tail]);
        }
        let sigma = keep.iter().map(|&d| new_of[self.map.sigma(d)]).collect();
        let kind = keep.iter().map(|&d| self.map.kind(d)).collect();
        let m = BlossomingMap::new(sigma, alpha, kind, new_of[self.map.root_bud()])?;
        Ok((m, keep))
    }
}

/// The decorated labeled scheme of a scheme-rooted core: its labeled scheme in
/// canonical form and, for every scheme edge, the walk encoding its branch.
pub fn scheme_of(c: &BlossomingCore) -> Result<DecoratedCore> {
    let (m, keep) = c.scheme_map()?;
    let lab = c.map.canonical_labeling()?;
    let order = m.canonical_order();
    let canon = m.relabel_by_order(&order);
    let s = UnlabeledScheme::new(canon)?;
    // scheme corner i is core dart keep[order[i]]
    let labels: Vec<i64> = order.iter().map(|&i| lab.labels[keep[i]]).collect();
    let l = LabeledScheme::from_labels(s, &labels)?;
    let walks = l
        .scheme()
        .edges()
        .iter()
        .map(|e| {
            let tail = keep[order[e.tail]];
            let b = c.branches.iter().find(|b| b.tail == tail).expect("every scheme edge has a branch");
            encode_branch(&b.branch, l.lambda0(e))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecoratedCore { scheme: l, walks })
}

/// A scheme trunk of a good map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Trunk {
    /// An edge dart, at a scheme vertex, leading into a dangling tree.
    Edge(usize),
    /// A rootable stem at a scheme vertex.
    Stem(usize),
}

/// Scheme trunks of `o`, by dart of `o` at the scheme vertex.
pub fn scheme_trunks(o: &BlossomingMap) -> Result<Vec<Trunk>> {
    if o.genus() == 0 {
        return Err(Error::DomainError("planar maps have no scheme".into()));
    }
    let p = prune(o)?;
    let cdeg = p.core.interior_degrees();
    let cvert = p.core.vertex_of();
    let mut out = Vec::new();
    for d in 0..p.core.n_darts() {
        if cdeg[cvert[d]] != 3 || !p.core.is_stem(d) {
            continue;
        }
        let od = p.core_origin[d];
        if o.alpha(od).is_some() {
            out.push(Trunk::Edge(od));
        } else if od == o.root_bud() || o.kind(od) == Some(StemKind::Leaf) {
            out.push(Trunk::Stem(od));
        }
    }
    Ok(out)
}

/// `o^τ`: the root bud of `o` turned into a leaf, with the trunk marked;
/// returned as a canonical key (relabeled from the trunk's dart).
pub fn unrooted_with_trunk(o: &BlossomingMap, t: Trunk) -> BlossomingMap {
    let mut kind = o.kind.clone();
    kind[o.root_bud()] = Some(StemKind::Leaf);
    let start = match t {
        Trunk::Edge(d) | Trunk::Stem(d) => d,
    };
    // a free-standing structure: the marked dart plays the root
    let mut m = BlossomingMap { sigma: o.sigma.clone(), alpha: o.alpha.clone(), kind, root: start };
    m = m.canonical_form();
    m
}

/// Makes `stem` the root bud (see [`BlossomingMap::reroot`]).
pub fn reroot(u: &BlossomingMap, stem: usize) -> Result<BlossomingMap> {
    u.reroot(stem)
}
