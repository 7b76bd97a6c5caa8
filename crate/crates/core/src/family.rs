//! Built-in group families with fixed, documented element numbering.
//!
//! Numbering conventions:
//!
//! * `cyclic n`: residues `0..n`, addition mod `n`.
//! * `dihedral n` (order `2n`): ids `0..n` are the rotations `x ↦ x + t`,
//!   ids `n..2n` the reflections `x ↦ t - x` on residues mod `n`.
//! * `symmetric n` / `alternating n` (`n ≤ 7`): permutations of `0..n` in
//!   lexicographic order of their one-line form; composition `(f∘g)(x) = f(g(x))`.
//! * `elementary_abelian p^k`: vectors over `F_p` encoded little-endian,
//!   `id = Σ d_i p^i`, componentwise addition.
//! * `quaternion8`: `0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k`.
//! * `product(A, B)`: pairs `(a, b)` with `id = a·|B| + b`.

use crate::group::{Group, GroupError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian { p: usize, k: u32 },
    Quaternion8,
    Product(Box<Family>, Box<Family>),
}

impl Family {
    pub fn spec_string(&self) -> String {
        match self {
            Family::Cyclic(n) => format!("cyclic:{n}"),
            Family::Dihedral(n) => format!("dihedral:{n}"),
            Family::Symmetric(n) => format!("sym:{n}"),
            Family::Alternating(n) => format!("alt:{n}"),
            Family::ElementaryAbelian { p, k } => format!("ea:{p}^{k}"),
            Family::Quaternion8 => "q8".to_string(),
            Family::Product(a, b) => format!("prod:({},{})", a.spec_string(), b.spec_string()),
        }
    }
}

/// Builds the named group with its documented numbering.
pub fn builtin(f: &Family) -> Result<Group, GroupError> {
    let g = match f {
        Family::Cyclic(n) => cyclic(*n)?,
        Family::Dihedral(n) => dihedral(*n)?,
        Family::Symmetric(n) => symmetric(*n)?,
        Family::Alternating(n) => alternating(*n)?,
        Family::ElementaryAbelian { p, k } => elementary_abelian(*p, *k)?,
        Family::Quaternion8 => quaternion8(),
        Family::Product(a, b) => direct_product(&builtin(a)?, &builtin(b)?),
    };
    Ok(g.with_label(f.spec_string()))
}

pub fn cyclic(n: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::UnsupportedSpec("cyclic:0".into()));
    }
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = ((a + b) % n) as u32;
        }
    }
    Group::from_flat_table(mul, n, Some(format!("cyclic:{n}")))
}

pub fn dihedral(n: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::UnsupportedSpec("dihedral:0".into()));
    }
    let m = 2 * n;
    // Element (flip, t): the affine map x ↦ ±x + t on Z_n.
    // (f1,t1)·(f2,t2) composes maps: x ↦ f1(f2 x + t2) + t1.
    let id = |flip: bool, t: usize| if flip { n + t } else { t };
    let mut mul = vec![0u32; m * m];
    for a in 0..m {
        let (f1, t1) = (a >= n, a % n);
        for b in 0..m {
            let (f2, t2) = (b >= n, b % n);
            let flip = f1 ^ f2;
            let t = if f1 { (t1 + n - t2) % n } else { (t1 + t2) % n };
            mul[a * m + b] = id(flip, t) as u32;
        }
    }
    Group::from_flat_table(mul, m, Some(format!("dihedral:{n}")))
}

fn perms_lex(n: usize, even_only: bool) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        if !even_only || parity(&cur) == 0 {
            all.push(cur.clone());
        }
        // next_permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    all
}

fn parity(p: &[usize]) -> u8 {
    let mut seen = vec![false; p.len()];
    let mut par = 0u8;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            c = p[c];
            len += 1;
        }
        par ^= ((len + 1) % 2) as u8;
    }
    par
}

fn permutation_group(perms: Vec<Vec<usize>>, label: String) -> Result<Group, GroupError> {
    use std::collections::HashMap;
    let n = perms.len();
    let index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let p = crate::perm::compose(&perms[a], &perms[b]);
            mul[a * n + b] = index[p.as_slice()] as u32;
        }
    }
    Group::from_flat_table(mul, n, Some(label))
}

pub fn symmetric(n: usize) -> Result<Group, GroupError> {
    if n == 0 || n > 7 {
        return Err(GroupError::UnsupportedSpec(format!("sym:{n}")));
    }
    permutation_group(perms_lex(n, false), format!("sym:{n}"))
}

pub fn alternating(n: usize) -> Result<Group, GroupError> {
    if n == 0 || n > 7 {
        return Err(GroupError::UnsupportedSpec(format!("alt:{n}")));
    }
    permutation_group(perms_lex(n, true), format!("alt:{n}"))
}

pub fn elementary_abelian(p: usize, k: u32) -> Result<Group, GroupError> {
    let prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    let order = p.checked_pow(k);
    match (prime, k, order) {
        (true, 1.., Some(n)) if n <= 65_536 => {
            let mut mul = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let (mut x, mut y, mut s, mut place) = (a, b, 0usize, 1usize);
                    for _ in 0..k {
                        s += ((x % p + y % p) % p) * place;
                        x /= p;
                        y /= p;
                        place *= p;
                    }
                    mul[a * n + b] = s as u32;
                }
            }
            Group::from_flat_table(mul, n, Some(format!("ea:{p}^{k}")))
        }
        _ => Err(GroupError::UnsupportedSpec(format!("ea:{p}^{k}"))),
    }
}

pub fn quaternion8() -> Group {
    // id = 2*unit + sign with units 1,i,j,k.
    let table_unit = [
        // row: left unit, col: right unit -> (unit, sign)
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let n = 8;
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let (ua, sa) = (a / 2, a % 2);
            let (ub, sb) = (b / 2, b % 2);
            let (u, s) = table_unit[ua][ub];
            mul[a * n + b] = (2 * u + (sa ^ sb ^ s)) as u32;
        }
    }
    Group::from_flat_table(mul, n, Some("q8".into())).expect("quaternion table is a group")
}

pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            mul[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32;
        }
    }
    let label = match (a.label(), b.label()) {
        (Some(la), Some(lb)) => Some(format!("prod:({la},{lb})")),
        _ => None,
    };
    Group::from_flat_table(mul, n, label).expect("product of groups is a group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(6).unwrap().order(), 6);
        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(elementary_abelian(3, 2).unwrap().order(), 9);
        assert!(elementary_abelian(4, 2).is_err());
    }

    #[test]
    fn quaternion_has_exactly_one_involution() {
        let q = quaternion8();
        let invs: Vec<usize> = q.elements().filter(|&g| q.element_order(g) == 2).collect();
        assert_eq!(invs, vec![1]);
        assert_eq!(q.element_order(2), 4);
    }

    #[test]
    fn product_numbering() {
        let g = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap());
        assert_eq!(g.order(), 8);
        // (2,0) has id 4 and is an involution.
        assert_eq!(g.mul(4, 4), 0);
    }
}
