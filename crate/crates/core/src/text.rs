//! Record-level text format shared by maps, blossoming maps and schemes.
//!
//! A record is a `/`-separated list of sections, each starting with a keyword:
//! `darts N / sigma (1 3 2 4) / alpha (1 2)(3 4) / root 1`. Dart numbers are
//! 1-based in text and 0-based in memory.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Splits a record into `keyword -> body` pairs.
pub(crate) fn sections(s: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for part in s.split('/') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (kw, body) = match part.find(|c: char| c.is_whitespace() || c == '(') {
            Some(i) => (&part[..i], part[i..].trim()),
            None => (part, ""),
        };
        if out.insert(kw.to_string(), body.to_string()).is_some() {
            return Err(Error::Parse(format!("duplicate section `{kw}`")));
        }
    }
    Ok(out)
}

/// Parses `(a b c)(d e)...` into groups of raw tokens.
pub(crate) fn groups(body: &str) -> Result<Vec<Vec<String>>> {
    let mut out = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected `(` in `{body}`")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed group in `{body}`")))?;
        let inner = &rest[1..close];
        let toks: Vec<String> = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.to_string())
            .collect();
        out.push(toks);
        rest = rest[close + 1..].trim_start();
    }
    Ok(out)
}

pub(crate) fn parse_usize(tok: &str) -> Result<usize> {
    tok.trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad integer `{tok}`")))
}

/// Parses a 1-based dart token into a 0-based index below `n`.
pub(crate) fn parse_dart(tok: &str, n: usize) -> Result<usize> {
    let d = parse_usize(tok)?;
    if d == 0 || d > n {
        return Err(Error::Parse(format!("dart {d} out of range 1..={n}")));
    }
    Ok(d - 1)
}

/// Reads a permutation of `0..n` from cycle notation; omitted darts are fixed.
pub(crate) fn parse_perm(body: &str, n: usize) -> Result<Vec<usize>> {
    let mut p: Vec<Option<usize>> = vec![None; n];
    for g in groups(body)? {
        let ds = g
            .iter()
            .map(|t| parse_dart(t, n))
            .collect::<Result<Vec<_>>>()?;
        for (i, &d) in ds.iter().enumerate() {
            let img = ds[(i + 1) % ds.len()];
            if p[d].is_some() {
                return Err(Error::Parse(format!("dart {} appears twice", d + 1)));
            }
            p[d] = Some(img);
        }
    }
    Ok(p.iter().enumerate().map(|(i, x)| x.unwrap_or(i)).collect())
}

/// Cycle notation for a permutation, fixed points included.
pub(crate) fn format_perm(p: &[usize]) -> String {
    crate::perm::cycles(p)
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|d| (d + 1).to_string()).collect();
            format!("({})", inner.join(" "))
        })
        .collect()
}

/// Pair notation for a partial involution; unmatched darts are skipped.
pub(crate) fn format_pairs(alpha: &[Option<usize>]) -> String {
    let mut s = String::new();
    for (d, a) in alpha.iter().enumerate() {
        if let Some(e) = *a {
            if d < e {
                s.push_str(&format!("({} {})", d + 1, e + 1));
            }
        }
    }
    s
}

pub(crate) fn require<'a>(secs: &'a BTreeMap<String, String>, kw: &str) -> Result<&'a str> {
    secs.get(kw)
        .map(|s| s.as_str())
        .ok_or_else(|| Error::Parse(format!("missing section `{kw}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_round_trip() {
        let p = parse_perm("(1 3 2 4)", 4).unwrap();
        assert_eq!(p, vec![2, 3, 1, 0]);
        assert_eq!(format_perm(&p), "(1 3 2 4)");
        assert_eq!(parse_perm("", 2).unwrap(), vec![0, 1]);
    }

    #[test]
    fn sections_split() {
        let s = sections("darts 2 / sigma (1 2)/alpha(1 2) / root 1").unwrap();
        assert_eq!(s["alpha"], "(1 2)");
        assert_eq!(s["root"], "1");
        assert!(sections("root 1 / root 2").is_err());
    }
}
