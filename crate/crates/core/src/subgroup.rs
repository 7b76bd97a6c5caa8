//! Subgroups, coset spaces, quotients and double cosets.

use crate::bitset::BitSet;
use crate::group::{Group, GroupError, EXHAUSTIVE_ASSOC_LIMIT};
use crate::rng::SplitMix64;

/// Subgroup of a parent [`Group`], stored as a sorted id list plus a
/// membership bit set. Always contains the identity and is verified closed
/// under multiplication and inversion on construction.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    elements: Vec<usize>,
    member: BitSet,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(order {} in order {})",
            self.order(),
            self.parent.order()
        )
    }
}

impl Subgroup {
    /// Validating constructor: the given ids must form a subgroup.
    pub fn new(parent: &Group, ids: impl IntoIterator<Item = usize>) -> Result<Self, GroupError> {
        let n = parent.order();
        let mut member = BitSet::new(n);
        for id in ids {
            if id >= n {
                return Err(GroupError::BadElement { id, order: n });
            }
            member.insert(id);
        }
        member.insert(Group::IDENTITY);
        let elements = member.to_vec();
        for &a in &elements {
            if !member.contains(parent.inv(a)) {
                return Err(GroupError::NoInverse { element: a });
            }
            for &b in &elements {
                let p = parent.mul(a, b);
                if !member.contains(p) {
                    return Err(GroupError::NotClosed { a, b, product: p });
                }
            }
        }
        assert_eq!(n % elements.len(), 0, "Lagrange violation");
        Ok(Subgroup {
            parent: parent.clone(),
            elements,
            member,
        })
    }

    pub fn trivial(parent: &Group) -> Self {
        Subgroup::new(parent, [Group::IDENTITY]).unwrap()
    }

    pub fn whole(parent: &Group) -> Self {
        Subgroup::new(parent, 0..parent.order()).unwrap()
    }

    /// Smallest subgroup containing `seed`. Ids must be valid.
    pub fn generated(parent: &Group, seed: &[usize]) -> Self {
        let n = parent.order();
        for &id in seed {
            assert!(id < n, "element id {id} out of range for order {n}");
        }
        let mut member = BitSet::new(n);
        member.insert(Group::IDENTITY);
        let mut queue: Vec<usize> = vec![Group::IDENTITY];
        let mut gens: Vec<usize> = Vec::new();
        for &s in seed {
            gens.push(s);
            gens.push(parent.inv(s));
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let y = parent.mul(x, g);
                if member.insert(y) {
                    queue.push(y);
                }
            }
        }
        let elements = member.to_vec();
        Subgroup {
            parent: parent.clone(),
            elements,
            member,
        }
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.member.contains(g)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn membership(&self) -> &BitSet {
        &self.member
    }

    /// Position of a parent id in the sorted element list.
    pub fn position_of(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_normal(&self) -> bool {
        self.parent
            .elements()
            .all(|g| self.elements.iter().all(|&h| self.contains(self.parent.conj(g, h))))
    }

    /// Abstract copy: a standalone [`Group`] of order `|H|` whose element
    /// `i` corresponds to `self.elements()[i]` (identity stays at 0).
    pub fn to_group(&self) -> Group {
        let k = self.order();
        let mut pos = vec![usize::MAX; self.parent.order()];
        for (i, &e) in self.elements.iter().enumerate() {
            pos[e] = i;
        }
        let mut mul = vec![0u32; k * k];
        for a in 0..k {
            for b in 0..k {
                mul[a * k + b] = pos[self.parent.mul(self.elements[a], self.elements[b])] as u32;
            }
        }
        let label = self
            .parent
            .label()
            .map(|l| format!("subgroup(order {k}) of {l}"));
        Group::from_flat_table(mul, k, label).expect("subgroup table is a group")
    }

    /// `N_G(self)`: all g with `g · self · g^{-1} = self`.
    pub fn normalizer(&self) -> Subgroup {
        let ids: Vec<usize> = self
            .parent
            .elements()
            .filter(|&g| self.elements.iter().all(|&h| self.contains(self.parent.conj(g, h))))
            .collect();
        Subgroup::new(&self.parent, ids).expect("normalizer is a subgroup")
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let ids: Vec<usize> = self
            .elements
            .iter()
            .copied()
            .filter(|&g| other.contains(g))
            .collect();
        Subgroup::new(&self.parent, ids).expect("intersection is a subgroup")
    }

    /// Sorted element list of `x · self · x^{-1}`.
    pub fn conjugated_elements(&self, x: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements.iter().map(|&h| self.parent.conj(x, h)).collect();
        v.sort_unstable();
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Partition of a group into left or right cosets of a subgroup.
///
/// Coset indices follow discovery order while scanning element ids upward,
/// so the representative of each coset is its smallest element and the
/// identity's coset has index 0.
#[derive(Clone)]
pub struct CosetSpace {
    parent: Group,
    subgroup: Subgroup,
    side: Side,
    reps: Vec<usize>,
    coset_of: Vec<u32>,
    members: Vec<Vec<usize>>,
}

impl CosetSpace {
    pub fn new(parent: &Group, subgroup: &Subgroup, side: Side) -> Self {
        let n = parent.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut members = Vec::new();
        for g in 0..n {
            if coset_of[g] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            let mut coset: Vec<usize> = subgroup
                .elements()
                .iter()
                .map(|&h| match side {
                    Side::Left => parent.mul(g, h),
                    Side::Right => parent.mul(h, g),
                })
                .collect();
            coset.sort_unstable();
            for &x in &coset {
                debug_assert_eq!(coset_of[x], u32::MAX);
                coset_of[x] = idx;
            }
            reps.push(g);
            members.push(coset);
        }
        assert_eq!(reps.len() * subgroup.order(), n);
        CosetSpace {
            parent: parent.clone(),
            subgroup: subgroup.clone(),
            side,
            reps,
            coset_of,
            members,
        }
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g] as usize
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }
}

/// Quotient `G/N` together with the projection table `g ↦ coset id`.
///
/// Coset ids are those of the left coset space of `N`, so the identity coset
/// is 0 and the quotient's identity convention is preserved.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<(Group, Vec<usize>), GroupError> {
    for x in g.elements() {
        for &h in n.elements() {
            let c = g.conj(x, h);
            if !n.contains(c) {
                return Err(GroupError::NotNormal { g: x, h });
            }
        }
    }
    let cosets = CosetSpace::new(g, n, Side::Left);
    let q = cosets.count();
    let mut mul = vec![0u32; q * q];
    for a in 0..q {
        for b in 0..q {
            mul[a * q + b] = cosets.coset_of(g.mul(cosets.rep(a), cosets.rep(b))) as u32;
        }
    }
    let label = g.label().map(|l| format!("{l} / N(order {})", n.order()));
    let quot = Group::from_flat_table(mul, q, label)?;
    let proj: Vec<usize> = (0..g.order()).map(|x| cosets.coset_of(x)).collect();
    // The projection must be a homomorphism; exhaustive at small orders,
    // sampled above.
    let order = g.order();
    if order <= EXHAUSTIVE_ASSOC_LIMIT {
        for a in 0..order {
            for b in 0..order {
                assert_eq!(
                    proj[g.mul(a, b)],
                    quot.mul(proj[a], proj[b]),
                    "projection is not a homomorphism at ({a}, {b})"
                );
            }
        }
    } else {
        let mut rng = SplitMix64::new(0x243f_6a88_85a3_08d3 ^ order as u64);
        for _ in 0..100_000 {
            let (a, b) = (rng.below(order), rng.below(order));
            assert_eq!(proj[g.mul(a, b)], quot.mul(proj[a], proj[b]));
        }
    }
    Ok((quot, proj))
}

/// One double coset `H x H` with its sorted element list.
#[derive(Clone, Debug)]
pub struct DoubleCosetClass {
    pub rep: usize,
    pub elements: Vec<usize>,
}

/// Partition of a group into `H`-double cosets.
#[derive(Clone)]
pub struct DoubleCosetMap {
    parent: Group,
    subgroup: Subgroup,
    classes: Vec<DoubleCosetClass>,
    class_of: Vec<u32>,
}

impl DoubleCosetMap {
    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn classes(&self) -> &[DoubleCosetClass] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g] as usize
    }
}

/// Decomposes `G` into `H`-double cosets. Class indices follow discovery
/// order scanning ids upward; each representative is the smallest element
/// of its class. The size identity `|HxH| = |H|^2 / |H ∩ xHx^{-1}|` is
/// asserted per class.
pub fn double_cosets(g: &Group, h: &Subgroup) -> DoubleCosetMap {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if class_of[x] != u32::MAX {
            continue;
        }
        let idx = classes.len() as u32;
        let mut set = BitSet::new(n);
        for &a in h.elements() {
            let ax = g.mul(a, x);
            for &b in h.elements() {
                set.insert(g.mul(ax, b));
            }
        }
        let elements = set.to_vec();
        for &e in &elements {
            debug_assert_eq!(class_of[e], u32::MAX);
            class_of[e] = idx;
        }
        let stab = h
            .elements()
            .iter()
            .filter(|&&k| h.contains(g.mul3(g.inv(x), k, x)))
            .count();
        assert_eq!(
            elements.len() * stab,
            h.order() * h.order(),
            "double coset size identity fails at rep {x}"
        );
        classes.push(DoubleCosetClass { rep: x, elements });
    }
    DoubleCosetMap {
        parent: g.clone(),
        subgroup: h.clone(),
        classes,
        class_of,
    }
}
