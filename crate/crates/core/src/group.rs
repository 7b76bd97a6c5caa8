//! Table-based finite groups.
//!
//! A [`Group`] stores the full multiplication table over element ids
//! `0..n`, with the identity always relabeled to id `0`. Tables are
//! validated on construction: latin-square shape, identity, inverses,
//! and associativity (exhaustively up to order 512, on 10^5 sampled
//! triples above that).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::perm;
use crate::rng::SplitMix64;

/// Order above which associativity is sampled instead of exhaustive.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;
const SAMPLED_TRIPLES: usize = 100_000;

/// Default cap on generator closure size in [`Group::from_permutations`].
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("table row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not a latin square: {axis} {index} repeats value {value}")]
    NotLatin {
        axis: &'static str,
        index: usize,
        value: usize,
    },
    #[error("associativity fails at triple ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("generator closure exceeded cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("unsupported group family: {0}")]
    UnsupportedSpec(String),
    #[error("subgroup is not normal: conjugate of {h} by {g} falls outside")]
    NotNormal { g: usize, h: usize },
    #[error("set is not closed: {a} * {b} = {product} falls outside")]
    NotClosed { a: usize, b: usize, product: usize },
    #[error("invalid element id {id} for group of order {order}")]
    BadElement { id: usize, order: usize },
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

struct GroupData {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// Finite group on element ids `0..order()`; the identity is id `0`.
///
/// Cloning is cheap (the table is shared), and a `Group` is immutable
/// after construction, so values can be used freely across threads.
#[derive(Clone)]
pub struct Group {
    data: Arc<GroupData>,
    label: Option<Arc<str>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}", self.order())?;
        if let Some(l) = self.label() {
            write!(f, ", {l}")?;
        }
        write!(f, ")")
    }
}

impl Group {
    pub const IDENTITY: usize = 0;

    pub fn order(&self) -> usize {
        self.data.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.data.mul[a * self.data.n + b] as usize
    }

    #[inline]
    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.data.inv[a] as usize
    }

    /// `g x g^{-1}`.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul3(g, x, self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.data.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Group {
        self.label = Some(Arc::from(label.into().as_str()));
        self
    }

    /// Identity of the underlying table, not just equal orders.
    pub fn same_group(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
    }

    /// Tables compared entry-wise (labels ignored).
    pub fn table_eq(&self, other: &Group) -> bool {
        self.data.n == other.data.n && self.data.mul == other.data.mul
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        let mut acc = Self::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut cur = g;
        let mut k = 1;
        while cur != Self::IDENTITY {
            cur = self.mul(cur, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Element-wise product `{ a * b : a ∈ xs, b ∈ ys }` as a bit set.
    pub fn product_set(&self, xs: &[usize], ys: &[usize]) -> crate::BitSet {
        let mut out = crate::BitSet::new(self.order());
        for &a in xs {
            for &b in ys {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// Builds a group from a full Cayley table. The identity is located and
    /// relabeled to id 0; all structural invariants are then validated.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Group, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NoIdentity);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    found: r.len(),
                    expected: n,
                });
            }
            for (col, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange {
                        row,
                        col,
                        value: v,
                        order: n,
                    });
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        // Swap labels 0 <-> e so the identity sits at id 0.
        let sw = |v: usize| {
            if v == 0 {
                e
            } else if v == e {
                0
            } else {
                v
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = sw(table[sw(a)][sw(b)]) as u32;
            }
        }
        Group::from_flat_table(mul, n, None)
    }

    /// Internal constructor from a flat table whose identity is already 0.
    pub(crate) fn from_flat_table(
        mul: Vec<u32>,
        n: usize,
        label: Option<String>,
    ) -> Result<Group, GroupError> {
        debug_assert_eq!(mul.len(), n * n);
        let at = |a: usize, b: usize| mul[a * n + b] as usize;
        if (0..n).any(|g| at(0, g) != g || at(g, 0) != g) {
            return Err(GroupError::NoIdentity);
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                let r = at(i, j);
                if seen_row[r] {
                    return Err(GroupError::NotLatin {
                        axis: "row",
                        index: i,
                        value: r,
                    });
                }
                seen_row[r] = true;
                let c = at(j, i);
                if seen_col[c] {
                    return Err(GroupError::NotLatin {
                        axis: "column",
                        index: i,
                        value: c,
                    });
                }
                seen_col[c] = true;
            }
        }
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(a, b);
                    for c in 0..n {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(GroupError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = SplitMix64::new(0x517c_c1b7_2722_0a95 ^ n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.below(n), rng.below(n), rng.below(n));
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
        let mut inv = vec![0u32; n];
        for g in 0..n {
            let h = (0..n).find(|&h| at(g, h) == 0).unwrap();
            if at(h, g) != 0 {
                return Err(GroupError::NoInverse { element: g });
            }
            inv[g] = h as u32;
        }
        Ok(Group {
            data: Arc::new(GroupData { n, mul, inv }),
            label: label.map(|l| Arc::from(l.as_str())),
        })
    }

    /// Closure of a generating set of permutations, with the default cap.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<Group, GroupError> {
        Ok(Self::from_permutations_capped(degree, gens, DEFAULT_CLOSURE_CAP)?.0)
    }

    /// Closure of a generating set of permutations, also returning the
    /// elements (id order is breadth-first from the identity).
    pub fn from_permutations_elements(
        degree: usize,
        gens: &[Vec<usize>],
    ) -> Result<(Group, Vec<Vec<usize>>), GroupError> {
        Self::from_permutations_capped(degree, gens, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_permutations_capped(
        degree: usize,
        gens: &[Vec<usize>],
        cap: usize,
    ) -> Result<(Group, Vec<Vec<usize>>), GroupError> {
        for g in gens {
            if g.len() != degree || !perm::is_permutation(g) {
                return Err(GroupError::BadPermutation(format!(
                    "generator {:?} is not a permutation of 0..{degree}",
                    g
                )));
            }
        }
        let mut elems: Vec<Vec<usize>> = vec![perm::identity(degree)];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut head = 0;
        while head < elems.len() {
            for g in gens {
                let next = perm::compose(&elems[head], g);
                if !index.contains_key(&next) {
                    if elems.len() >= cap {
                        return Err(GroupError::ClosureTooLarge { cap });
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
            head += 1;
        }
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = perm::compose(&elems[a], &elems[b]);
                mul[a * n + b] = index[&p] as u32;
            }
        }
        let group = Group::from_flat_table(mul, n, None)?;
        Ok((group, elems))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_z3() {
        let g = Group::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        let z3 = Group::from_cayley_table(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(z3.order(), 3);
        assert_eq!(z3.inv(1), 2);
    }

    #[test]
    fn identity_is_relabeled() {
        // Z3 written with identity at id 2.
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = Group::from_cayley_table(&t).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn degenerate_row_is_not_latin() {
        let t = vec![vec![0, 1], vec![0, 0]];
        match Group::from_cayley_table(&t) {
            Err(GroupError::NotLatin { .. }) | Err(GroupError::NoIdentity) => {}
            other => panic!("expected rejection, got {other:?}"),
        }
        // A latin square that is not associative: keep identity row/col valid.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            Group::from_cayley_table(&t),
            Err(GroupError::NotAssociative { .. }) | Err(GroupError::NoInverse { .. })
        ));
    }

    #[test]
    fn closure_from_generators() {
        let (g, _) =
            Group::from_permutations_elements(3, &[perm::parse_cycles("(0 1 2)", 3).unwrap()])
                .unwrap();
        assert_eq!(g.order(), 3);
        // S5 from a transposition and a 5-cycle.
        let gens = vec![
            perm::parse_cycles("(0 1)", 5).unwrap(),
            perm::parse_cycles("(0 1 2 3 4)", 5).unwrap(),
        ];
        let g = Group::from_permutations(5, &gens).unwrap();
        assert_eq!(g.order(), 120);
        // A4 from a 3-cycle and a double transposition.
        let gens = vec![
            perm::parse_cycles("(0 1 2)", 4).unwrap(),
            perm::parse_cycles("(0 1)(2 3)", 4).unwrap(),
        ];
        let g = Group::from_permutations(4, &gens).unwrap();
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn closure_cap() {
        let gens = vec![perm::parse_cycles("(0 1 2 3 4 5 6)", 7).unwrap()];
        assert!(matches!(
            Group::from_permutations_capped(7, &gens, 5),
            Err(GroupError::ClosureTooLarge { cap: 5 })
        ));
    }
}
