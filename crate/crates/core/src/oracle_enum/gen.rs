//! Canonical-order backtracking over rotation systems.
//!
//! Darts are processed in label order; for each dart the slots `sigma`,
//! `sigma⁻¹`, `alpha` are filled in that order, either with an already
//! labeled dart or with the next fresh label. Each complete assignment is its
//! own breadth-first canonical form, so every rooted structure (rooted at
//! dart 0) is produced exactly once.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Unset,
    Pair(usize),
    Stem,
}

/// What to generate.
#[derive(Clone, Debug)]
pub struct GenConfig {
    pub n_darts: usize,
    /// Exact length of every `sigma` cycle.
    pub degree: Option<usize>,
    /// Exact number of stems. Zero means plain maps. With stems, dart 0 is a stem.
    pub stems: usize,
    /// Upper bound on search nodes.
    pub max_nodes: u64,
}

/// A generated structure: `alpha[d] = None` marks a stem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub sigma: Vec<usize>,
    pub alpha: Vec<Option<usize>>,
}

struct State<'a, F: FnMut(&Structure)> {
    cfg: &'a GenConfig,
    sigma: Vec<Option<usize>>,
    sigma_inv: Vec<Option<usize>>,
    alpha: Vec<Slot>,
    next: usize,
    stems: usize,
    pairs: usize,
    nodes: u64,
    visit: F,
}

impl<F: FnMut(&Structure)> State<'_, F> {
    fn darts_before(&self, d: usize) -> usize {
        let mut k = 0;
        let mut x = d;
        while let Some(p) = self.sigma_inv[x] {
            k += 1;
            x = p;
            if x == d {
                break;
            }
        }
        k
    }

    fn darts_after(&self, d: usize) -> usize {
        let mut k = 0;
        let mut x = d;
        while let Some(p) = self.sigma[x] {
            k += 1;
            x = p;
            if x == d {
                break;
            }
        }
        k
    }

    /// Can `sigma(a) = b` be added? `b == self.next` denotes a fresh dart.
    fn sigma_ok(&self, a: usize, b: usize) -> bool {
        let Some(deg) = self.cfg.degree else { return true };
        if b == self.next {
            return self.darts_before(a) + 2 <= deg;
        }
        // closing a cycle iff walking forward from b reaches a
        let mut x = b;
        let mut len = 1;
        while let Some(p) = self.sigma[x] {
            x = p;
            len += 1;
            if len > deg {
                return false;
            }
        }
        if x == a {
            return len == deg;
        }
        self.darts_before(a) + 1 + self.darts_after(b) < deg
    }

    fn fresh(&mut self) -> usize {
        let x = self.next;
        self.next += 1;
        x
    }

    fn run(&mut self, pos: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cfg.max_nodes {
            return Err(Error::ResourceLimit(format!("more than {} search nodes", self.cfg.max_nodes)));
        }
        let n = self.cfg.n_darts;
        let (d, slot) = (pos / 3, pos % 3);
        if d >= self.next {
            if d == n {
                let s = Structure {
                    sigma: self.sigma.iter().map(|x| x.unwrap()).collect(),
                    alpha: self
                        .alpha
                        .iter()
                        .map(|a| match a {
                            Slot::Pair(x) => Some(*x),
                            _ => None,
                        })
                        .collect(),
                };
                (self.visit)(&s);
            }
            return Ok(());
        }
        match slot {
            0 => {
                if self.sigma[d].is_some() {
                    return self.run(pos + 1);
                }
                for x in 0..=self.next.min(n - 1) {
                    let fresh = x == self.next;
                    if !fresh && self.sigma_inv[x].is_some() {
                        continue;
                    }
                    if !self.sigma_ok(d, x) {
                        continue;
                    }
                    if fresh {
                        self.fresh();
                    }
                    self.sigma[d] = Some(x);
                    self.sigma_inv[x] = Some(d);
                    self.run(pos + 1)?;
                    self.sigma[d] = None;
                    self.sigma_inv[x] = None;
                    if fresh {
                        self.next -= 1;
                    }
                }
                Ok(())
            }
            1 => {
                if self.sigma_inv[d].is_some() {
                    return self.run(pos + 1);
                }
                for x in 0..=self.next.min(n - 1) {
                    let fresh = x == self.next;
                    if !fresh && self.sigma[x].is_some() {
                        continue;
                    }
                    if fresh {
                        if let Some(deg) = self.cfg.degree {
                            if self.darts_after(d) + 2 > deg {
                                continue;
                            }
                        }
                    } else if !self.sigma_ok(x, d) {
                        continue;
                    }
                    if fresh {
                        self.fresh();
                    }
                    self.sigma[x] = Some(d);
                    self.sigma_inv[d] = Some(x);
                    self.run(pos + 1)?;
                    self.sigma[x] = None;
                    self.sigma_inv[d] = None;
                    if fresh {
                        self.next -= 1;
                    }
                }
                Ok(())
            }
            _ => {
                if self.alpha[d] != Slot::Unset {
                    return self.run(pos + 1);
                }
                let max_pairs = (n - self.cfg.stems) / 2;
                let stem_allowed = self.stems < self.cfg.stems;
                if d == 0 && self.cfg.stems > 0 {
                    return self.try_stem(d, pos);
                }
                if stem_allowed {
                    self.try_stem(d, pos)?;
                }
                if self.pairs == max_pairs {
                    return Ok(());
                }
                for x in 0..=self.next.min(n - 1) {
                    let fresh = x == self.next;
                    if x == d || (!fresh && self.alpha[x] != Slot::Unset) {
                        continue;
                    }
                    if fresh {
                        self.fresh();
                    }
                    self.alpha[d] = Slot::Pair(x);
                    self.alpha[x] = Slot::Pair(d);
                    self.pairs += 1;
                    self.run(pos + 1)?;
                    self.pairs -= 1;
                    self.alpha[d] = Slot::Unset;
                    self.alpha[x] = Slot::Unset;
                    if fresh {
                        self.next -= 1;
                    }
                }
                Ok(())
            }
        }
    }

    fn try_stem(&mut self, d: usize, pos: usize) -> Result<()> {
        self.alpha[d] = Slot::Stem;
        self.stems += 1;
        let r = self.run(pos + 1);
        self.stems -= 1;
        self.alpha[d] = Slot::Unset;
        r
    }
}

/// Calls `visit` once per rooted structure matching `cfg`.
pub fn generate<F: FnMut(&Structure)>(cfg: &GenConfig, visit: F) -> Result<u64> {
    if cfg.n_darts == 0 {
        return Ok(0);
    }
    let n = cfg.n_darts;
    let mut st = State {
        cfg,
        sigma: vec![None; n],
        sigma_inv: vec![None; n],
        alpha: vec![Slot::Unset; n],
        next: 1,
        stems: 0,
        pairs: 0,
        nodes: 0,
        visit,
    };
    st.run(0)?;
    Ok(st.nodes)
}
