//! Small helpers on permutations stored as `Vec<usize>` (0-based images).

/// Checks that `p` is a permutation of `0..p.len()`.
pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Cycles of `p`, each starting at its smallest element, ordered by that element.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push(cyc);
    }
    out
}

/// For each element, the index of its cycle in [`cycles`].
pub fn cycle_index(p: &[usize]) -> Vec<usize> {
    let mut idx = vec![usize::MAX; p.len()];
    for (c, cyc) in cycles(p).iter().enumerate() {
        for &x in cyc {
            idx[x] = c;
        }
    }
    idx
}

/// `compose(a, b)[x] = a[b[x]]`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_inverse() {
        let p = vec![2, 0, 1, 3];
        assert!(is_permutation(&p));
        assert_eq!(cycles(&p), vec![vec![0, 2, 1], vec![3]]);
        assert_eq!(compose(&p, &inverse(&p)), vec![0, 1, 2, 3]);
        assert!(!is_permutation(&[0, 0]));
    }
}
