//! Permutations as one-line vectors, with disjoint-cycle text format.

use crate::group::GroupError;

pub fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn identity(degree: usize) -> Vec<usize> {
    (0..degree).collect()
}

/// Composition acting on points: `(f ∘ g)(x) = f(g(x))`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    debug_assert_eq!(f.len(), g.len());
    g.iter().map(|&x| f[x]).collect()
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Parses one generator in disjoint-cycle notation, e.g. `(0 1 2)(3 4)`.
/// Fixed points are omitted; points may be separated by spaces or commas.
pub fn parse_cycles(line: &str, degree: usize) -> Result<Vec<usize>, GroupError> {
    let mut perm = identity(degree);
    let mut moved = vec![false; degree];
    let s = line.trim();
    if s.is_empty() || s == "()" {
        return Ok(perm);
    }
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| GroupError::BadPermutation(format!("expected '(' in {line:?}")))?;
        if !rest[..open].trim().is_empty() {
            return Err(GroupError::BadPermutation(format!(
                "unexpected text {:?}",
                &rest[..open]
            )));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| GroupError::BadPermutation(format!("unclosed cycle in {line:?}")))?;
        let body = &rest[open + 1..close];
        let mut cycle = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p: usize = tok
                .parse()
                .map_err(|_| GroupError::BadPermutation(format!("bad point {tok:?}")))?;
            if p >= degree {
                return Err(GroupError::BadPermutation(format!(
                    "point {p} exceeds degree {degree}"
                )));
            }
            if moved[p] {
                return Err(GroupError::BadPermutation(format!("point {p} repeated")));
            }
            moved[p] = true;
            cycle.push(p);
        }
        if cycle.len() == 1 {
            return Err(GroupError::BadPermutation(format!(
                "singleton cycle ({})",
                cycle[0]
            )));
        }
        for w in 0..cycle.len() {
            perm[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
        rest = &rest[close + 1..];
        rest = rest.trim_start();
    }
    Ok(perm)
}

pub fn format_cycles(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut cur = start;
        loop {
            if cur != start {
                out.push(' ');
            }
            out.push_str(&cur.to_string());
            seen[cur] = true;
            cur = p[cur];
            if cur == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
