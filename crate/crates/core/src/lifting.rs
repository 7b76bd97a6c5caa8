//! Constructions that assemble a complete mapping of a group out of
//! complete mappings of smaller pieces.
//!
//! The workhorse is [`lift_coset_triple`]: given bijections `x̃, ỹ, z̃`
//! from an index set onto the left cosets of a subgroup `H` with
//! `x̃(i)·ỹ(i) ⊇ z̃(i)` pointwise, a complete mapping of `H` lifts to one
//! of `G`. The normal-subgroup, central-involution, and double-coset
//! constructions all reduce to it.

use thiserror::Error;

use crate::group::{Group, GroupError};
use crate::mapping::{verify_tables, CompleteMapping, MappingError};
use crate::subgroup::{double_cosets, quotient, CosetSpace, Side, Subgroup};

#[derive(Debug, Error)]
pub enum LiftError {
    #[error("involution has a fixed point at {index}")]
    HasFixedPoint { index: usize },
    #[error("table is not an involution (fails at {index})")]
    NotInvolution { index: usize },
    #[error("subgroup orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("bipartite matching between coset spaces failed (implementation bug)")]
    MatchingFailed,
    #[error("coset triple: {which} is not a bijection onto the cosets")]
    TripleNotBijective { which: &'static str },
    #[error("coset triple violates x̃(i)·ỹ(i) ⊇ z̃(i) at index {index}")]
    TripleViolation { index: usize },
    #[error("supplied sub-mapping is invalid: {0}")]
    BadSubmapping(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element {element} is not a central involution")]
    NotCentralInvolution { element: usize },
    #[error("quotient has odd order {order}")]
    QuotientOdd { order: usize },
    #[error("class permutation is not a bijection of the double-coset classes")]
    BadClassPermutation,
    #[error("double-coset size condition fails at class with representative {class_rep}")]
    SizeCondition { class_rep: usize },
    #[error("containment fails at class with representative {class_rep}")]
    ContainmentFailed { class_rep: usize },
    #[error(transparent)]
    Mapping(#[from] MappingError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A pair of fixed-point-free involutions on `0..m`.
#[derive(Clone, Debug)]
pub struct InvolutionPair {
    s: Vec<usize>,
    t: Vec<usize>,
}

impl InvolutionPair {
    pub fn new(s: Vec<usize>, t: Vec<usize>) -> Result<Self, LiftError> {
        if s.len() != t.len() {
            return Err(LiftError::OrderMismatch {
                left: s.len(),
                right: t.len(),
            });
        }
        for table in [&s, &t] {
            for (i, &v) in table.iter().enumerate() {
                if v >= table.len() || table[v] != i {
                    return Err(LiftError::NotInvolution { index: i });
                }
                if v == i {
                    return Err(LiftError::HasFixedPoint { index: i });
                }
            }
        }
        Ok(InvolutionPair { s, t })
    }

    pub fn size(&self) -> usize {
        self.s.len()
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    /// Splits the index set as `J ⊔ K` with `S(J) = T(J) = K`.
    ///
    /// The graph with edges `{i, S(i)}` and `{i, T(i)}` is a union of even
    /// cycles alternating the two edge kinds; each cycle is 2-colored,
    /// starting with color `J` at its smallest unvisited index.
    pub fn partition(&self) -> (Vec<usize>, Vec<usize>) {
        let m = self.size();
        let mut color = vec![u8::MAX; m];
        for start in 0..m {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut cur = start;
            loop {
                let a = self.s[cur];
                debug_assert_ne!(color[a], 0);
                color[a] = 1;
                let b = self.t[a];
                if b == start {
                    break;
                }
                debug_assert_ne!(color[b], 1);
                color[b] = 0;
                cur = b;
            }
        }
        let j: Vec<usize> = (0..m).filter(|&i| color[i] == 0).collect();
        let k: Vec<usize> = (0..m).filter(|&i| color[i] == 1).collect();
        debug_assert_eq!(j.len(), k.len());
        (j, k)
    }
}

/// Convenience wrapper validating raw tables before partitioning.
pub fn partition_involutions(
    s: &[usize],
    t: &[usize],
) -> Result<(Vec<usize>, Vec<usize>), LiftError> {
    Ok(InvolutionPair::new(s.to_vec(), t.to_vec())?.partition())
}

/// Finds a set meeting every left coset of `H` exactly once and every
/// `side` coset of `K` exactly once (`|H| = |K|` required).
///
/// Builds the bipartite graph on the two coset spaces with an edge where
/// cosets intersect, finds a perfect matching by augmenting paths, and
/// picks the smallest element of each matched intersection. The result is
/// indexed by left-coset index of `H`. Both partition conditions are
/// re-checked before returning.
pub fn common_transversal(
    g: &Group,
    h: &Subgroup,
    k: &Subgroup,
    side: Side,
) -> Result<Vec<usize>, LiftError> {
    if h.order() != k.order() {
        return Err(LiftError::OrderMismatch {
            left: h.order(),
            right: k.order(),
        });
    }
    let hc = CosetSpace::new(g, h, Side::Left);
    let kc = CosetSpace::new(g, k, side);
    let m = hc.count();
    debug_assert_eq!(m, kc.count());
    // smallest witness per intersecting coset pair
    let mut witness: Vec<std::collections::HashMap<usize, usize>> = vec![Default::default(); m];
    for x in g.elements() {
        witness[hc.coset_of(x)].entry(kc.coset_of(x)).or_insert(x);
    }
    let adj: Vec<Vec<usize>> = witness
        .iter()
        .map(|w| {
            let mut v: Vec<usize> = w.keys().copied().collect();
            v.sort_unstable();
            v
        })
        .collect();
    let matching = hopcroft_karp(&adj, m);
    if matching.contains(&usize::MAX) {
        return Err(LiftError::MatchingFailed);
    }
    let out: Vec<usize> = (0..m).map(|i| witness[i][&matching[i]]).collect();
    // postcondition self-check
    let mut seen_h = vec![false; m];
    let mut seen_k = vec![false; m];
    for &x in &out {
        assert!(!std::mem::replace(&mut seen_h[hc.coset_of(x)], true));
        assert!(!std::mem::replace(&mut seen_k[kc.coset_of(x)], true));
    }
    Ok(out)
}

/// Maximum bipartite matching; returns for each left vertex its matched
/// right vertex (or `usize::MAX`).
fn hopcroft_karp(adj: &[Vec<usize>], right_count: usize) -> Vec<usize> {
    let left = adj.len();
    let mut match_l = vec![usize::MAX; left];
    let mut match_r = vec![usize::MAX; right_count];
    loop {
        // BFS layering from free left vertices
        let mut dist = vec![u32::MAX; left];
        let mut queue: std::collections::VecDeque<usize> = (0..left)
            .filter(|&i| match_l[i] == usize::MAX)
            .inspect(|&i| dist[i] = 0)
            .collect();
        let mut found_free = false;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                match match_r[j] {
                    usize::MAX => found_free = true,
                    i2 if dist[i2] == u32::MAX => {
                        dist[i2] = dist[i] + 1;
                        queue.push_back(i2);
                    }
                    _ => {}
                }
            }
        }
        if !found_free {
            break;
        }
        fn augment(
            i: usize,
            adj: &[Vec<usize>],
            dist: &mut [u32],
            match_l: &mut [usize],
            match_r: &mut [usize],
        ) -> bool {
            let d = std::mem::replace(&mut dist[i], u32::MAX);
            for &j in &adj[i] {
                let ok = match match_r[j] {
                    usize::MAX => true,
                    i2 => dist[i2] == d + 1 && augment(i2, adj, dist, match_l, match_r),
                };
                if ok {
                    match_l[i] = j;
                    match_r[j] = i;
                    return true;
                }
            }
            false
        }
        let mut advanced = false;
        for i in 0..left {
            if match_l[i] == usize::MAX && dist[i] == 0 {
                advanced |= augment(i, adj, &mut dist, &mut match_l, &mut match_r);
            }
        }
        if !advanced {
            break;
        }
    }
    match_l
}

/// Bijections `x̃, ỹ, z̃` from an index set onto the left cosets of a
/// subgroup, satisfying `x̃(i)·ỹ(i) ⊇ z̃(i)` for every index.
pub struct CosetTriple {
    cosets: CosetSpace,
    x: Vec<usize>,
    y: Vec<usize>,
    z: Vec<usize>,
}

impl CosetTriple {
    /// Validates bijectivity and the containment invariant. Containment
    /// `x̃(i)·ỹ(i) ⊇ z̃(i)` holds iff some `x ∈ x̃(i)` has `x·ỹ(i) = z̃(i)`,
    /// so it is checked by scanning one representative product per element
    /// of `x̃(i)`.
    pub fn new(
        cosets: CosetSpace,
        x: Vec<usize>,
        y: Vec<usize>,
        z: Vec<usize>,
    ) -> Result<Self, LiftError> {
        assert_eq!(cosets.side(), Side::Left);
        let m = cosets.count();
        for (name, t) in [("x̃", &x), ("ỹ", &y), ("z̃", &z)] {
            if t.len() != m {
                return Err(LiftError::TripleNotBijective { which: name });
            }
            let mut seen = vec![false; m];
            for &c in t {
                if c >= m || seen[c] {
                    return Err(LiftError::TripleNotBijective { which: name });
                }
                seen[c] = true;
            }
        }
        let g = cosets.parent().clone();
        for i in 0..m {
            let y_rep = cosets.rep(y[i]);
            let ok = cosets
                .members(x[i])
                .iter()
                .any(|&xx| cosets.coset_of(g.mul(xx, y_rep)) == z[i]);
            if !ok {
                return Err(LiftError::TripleViolation { index: i });
            }
        }
        Ok(CosetTriple { cosets, x, y, z })
    }

    pub fn cosets(&self) -> &CosetSpace {
        &self.cosets
    }

    pub fn index_size(&self) -> usize {
        self.x.len()
    }
}

/// Checks that `cm` is a complete mapping of the subgroup `h` under the
/// position correspondence (`cm` element `i` ↔ `h.elements()[i]`).
fn check_submapping(h: &Subgroup, cm: &CompleteMapping) -> Result<(), LiftError> {
    if cm.group().order() != h.order() {
        return Err(LiftError::BadSubmapping(format!(
            "mapping order {} does not match subgroup order {}",
            cm.group().order(),
            h.order()
        )));
    }
    let parent = h.parent();
    let els = h.elements();
    for j in 0..h.order() {
        let prod = parent.mul(els[j], els[cm.phi_of(j)]);
        if prod != els[cm.psi_of(j)] {
            return Err(LiftError::BadSubmapping(format!(
                "mapping does not respect the subgroup embedding at position {j}"
            )));
        }
    }
    Ok(())
}

/// Lifts a complete mapping of `H` through a coset triple to a complete
/// mapping of the parent group.
///
/// A simultaneous left/right transversal `{y_i}` of `H` is labeled so that
/// `y_i ∈ ỹ(i)`; `x_i ∈ x̃(i)` is the smallest element with
/// `x_i·ỹ(i) = z̃(i)` and `z_i = x_i y_i`. Writing `y_i a(j) = d(i,j)
/// y_{r(i,j)}`, the tables `A(i,j) = x_i d(i,j)`, `B(i,j) = y_{r(i,j)} b(j)`,
/// `C(i,j) = z_i c(j)` form a product triple over `I × J` and hence a
/// complete mapping of `G`.
pub fn lift_coset_triple(
    triple: &CosetTriple,
    cm_h: &CompleteMapping,
) -> Result<CompleteMapping, LiftError> {
    let cosets = &triple.cosets;
    let g = cosets.parent().clone();
    let h = cosets.subgroup();
    check_submapping(h, cm_h)?;
    let m = cosets.count();
    let hk = h.order();

    // simultaneous left/right transversal, indexed by left-coset id
    let trans = common_transversal(&g, h, h, Side::Right)?;
    let y: Vec<usize> = (0..m).map(|i| trans[triple.y[i]]).collect();

    // right-coset lookup: the right coset of y_i determines r(i, j)
    let rc = CosetSpace::new(&g, h, Side::Right);
    let mut right_to_index = vec![usize::MAX; m];
    for (i, &yi) in y.iter().enumerate() {
        let c = rc.coset_of(yi);
        debug_assert_eq!(right_to_index[c], usize::MAX);
        right_to_index[c] = i;
    }

    let mut x = vec![usize::MAX; m];
    let mut z = vec![usize::MAX; m];
    for i in 0..m {
        let xi = cosets
            .members(triple.x[i])
            .iter()
            .copied()
            .find(|&xx| cosets.coset_of(g.mul(xx, y[i])) == triple.z[i])
            .ok_or(LiftError::TripleViolation { index: i })?;
        x[i] = xi;
        z[i] = g.mul(xi, y[i]);
        debug_assert_eq!(cosets.coset_of(z[i]), triple.z[i]);
    }

    // sub-mapping as a triple (a, b, c) in parent element ids
    let els = h.elements();
    let a_h: Vec<usize> = els.to_vec();
    let b_h: Vec<usize> = (0..hk).map(|j| els[cm_h.phi_of(j)]).collect();
    let c_h: Vec<usize> = (0..hk).map(|j| els[cm_h.psi_of(j)]).collect();

    let n = g.order();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    let mut c = Vec::with_capacity(n);
    for i in 0..m {
        for j in 0..hk {
            let prod = g.mul(y[i], a_h[j]);
            let r = right_to_index[rc.coset_of(prod)];
            let d = g.mul(prod, g.inv(y[r]));
            debug_assert!(h.contains(d));
            a.push(g.mul(x[i], d));
            b.push(g.mul(y[r], b_h[j]));
            c.push(g.mul(z[i], c_h[j]));
        }
    }
    let cm = CompleteMapping::from_triple(&g, &a, &b, &c)
        .expect("coset-triple lift always yields a verified mapping");
    Ok(cm)
}

/// Complete mapping of `G` from complete mappings of a normal subgroup
/// and of the quotient. The quotient mapping's tables are interpreted on
/// the left-coset indices of `N`; normality makes the triple containment
/// an equality, and the construction reduces to [`lift_coset_triple`].
pub fn lift_normal(
    g: &Group,
    n: &Subgroup,
    cm_n: &CompleteMapping,
    cm_q: &CompleteMapping,
) -> Result<CompleteMapping, LiftError> {
    let (q, _proj) = match quotient(g, n) {
        Ok(v) => v,
        Err(GroupError::NotNormal { .. }) => return Err(LiftError::NotNormal),
        Err(e) => return Err(e.into()),
    };
    verify_tables(&q, &cm_q.phi(), &cm_q.psi())
        .map_err(|e| LiftError::BadSubmapping(format!("quotient mapping: {e}")))?;
    let cosets = CosetSpace::new(g, n, Side::Left);
    let m = cosets.count();
    let x: Vec<usize> = (0..m).collect();
    let triple = CosetTriple::new(cosets, x, cm_q.phi(), cm_q.psi())?;
    lift_coset_triple(&triple, cm_n)
}

/// Complete mapping of `G` from one of `G/⟨x⟩` for a central involution
/// `x`, by the fixed-point-free involution partition of the index set.
pub fn lift_central_involution(
    g: &Group,
    x: usize,
    cm_q: &CompleteMapping,
) -> Result<CompleteMapping, LiftError> {
    let n = g.order();
    if x == Group::IDENTITY
        || x >= n
        || g.mul(x, x) != Group::IDENTITY
        || g.elements().any(|t| g.mul(t, x) != g.mul(x, t))
    {
        return Err(LiftError::NotCentralInvolution { element: x });
    }
    let nsub = Subgroup::new(g, [Group::IDENTITY, x])?;
    let (q, proj) = quotient(g, &nsub).expect("central subgroup is normal");
    let qn = q.order();
    verify_tables(&q, &cm_q.phi(), &cm_q.psi())
        .map_err(|e| LiftError::BadSubmapping(format!("quotient mapping: {e}")))?;
    if qn % 2 == 1 {
        return Err(LiftError::QuotientOdd { order: qn });
    }
    let ybar = (1..qn)
        .find(|&v| q.mul(v, v) == Group::IDENTITY)
        .expect("even-order group contains an involution");

    // S = b̄^{-1} ∘ (right mult by ȳ) ∘ b̄ and likewise T through c̄.
    let bbar = cm_q.phi();
    let cbar = cm_q.psi();
    let mut b_inv = vec![0usize; qn];
    let mut c_inv = vec![0usize; qn];
    for i in 0..qn {
        b_inv[bbar[i]] = i;
        c_inv[cbar[i]] = i;
    }
    let s: Vec<usize> = (0..qn).map(|i| b_inv[q.mul(bbar[i], ybar)]).collect();
    let t: Vec<usize> = (0..qn).map(|i| c_inv[q.mul(cbar[i], ybar)]).collect();
    let pair = InvolutionPair::new(s.clone(), t.clone())?;
    let (j_set, _k_set) = pair.partition();
    let mut in_j = vec![false; qn];
    for &j in &j_set {
        in_j[j] = true;
    }

    // two preimages per quotient element; lifts on J take the smaller one
    let mut pre = vec![usize::MAX; qn];
    for e in 0..n {
        let v = proj[e];
        if pre[v] == usize::MAX {
            pre[v] = e;
        }
    }
    let y = pre[ybar];

    let mut b = vec![usize::MAX; qn];
    let mut c = vec![usize::MAX; qn];
    for &j in &j_set {
        b[j] = pre[bbar[j]];
        c[j] = pre[cbar[j]];
    }
    for &j in &j_set {
        b[s[j]] = g.mul(b[j], y);
        c[t[j]] = g.mul(c[j], y);
    }
    let a: Vec<usize> = (0..qn).map(|i| g.mul(c[i], g.inv(b[i]))).collect();

    // tables over I × {1, x}
    let y_inv_x = g.mul(g.inv(y), x);
    let mut ta = Vec::with_capacity(n);
    let mut tb = Vec::with_capacity(n);
    let mut tc = Vec::with_capacity(n);
    for i in 0..qn {
        if in_j[i] {
            ta.push(a[i]);
            tb.push(b[i]);
            tc.push(c[i]);
            ta.push(g.mul(a[i], x));
            tb.push(g.mul3(b[i], y, x));
            tc.push(g.mul(c[i], y));
        } else {
            ta.push(a[i]);
            tb.push(g.mul(b[i], y_inv_x));
            tc.push(g.mul(c[i], y_inv_x));
            ta.push(g.mul(a[i], x));
            tb.push(b[i]);
            tc.push(g.mul(c[i], x));
        }
    }
    let cm = CompleteMapping::from_triple(g, &ta, &tb, &tc)
        .expect("central-involution lift always yields a verified mapping");
    Ok(cm)
}

/// Complete mapping of `G` from one of a subgroup `H`, given permutations
/// `phi_cls`, `psi_cls` of the `H`-double-coset classes with
/// `|D| = |phi(D)| = |psi(D)|` and `D·phi(D) ⊇ psi(D)` for every class.
///
/// For each class `D`: `z_D` is the smallest element of `psi(D)`, `x_D`
/// the smallest element of `D` with `x_D^{-1} z_D ∈ phi(D)`, and the
/// index-order bijection pairs a simultaneous transversal inside `H` (for
/// the `x`- and `z`-stabilizer intersections) with a left transversal for
/// the `y`-side. The assembled coset triple is handed to
/// [`lift_coset_triple`].
pub fn lift_double_cosets(
    g: &Group,
    h: &Subgroup,
    cm_h: &CompleteMapping,
    phi_cls: &[usize],
    psi_cls: &[usize],
) -> Result<CompleteMapping, LiftError> {
    check_submapping(h, cm_h)?;
    let dc = double_cosets(g, h);
    let nc = dc.classes().len();
    for perm in [phi_cls, psi_cls] {
        if perm.len() != nc {
            return Err(LiftError::BadClassPermutation);
        }
        let mut seen = vec![false; nc];
        for &v in perm {
            if v >= nc || seen[v] {
                return Err(LiftError::BadClassPermutation);
            }
            seen[v] = true;
        }
    }
    for (d, class) in dc.classes().iter().enumerate() {
        let pd = &dc.classes()[phi_cls[d]];
        let sd = &dc.classes()[psi_cls[d]];
        if class.elements.len() != pd.elements.len() || class.elements.len() != sd.elements.len() {
            return Err(LiftError::SizeCondition {
                class_rep: class.rep,
            });
        }
        let prod = g.product_set(&class.elements, &pd.elements);
        if !prod.is_superset(&crate::BitSet::from_ids(
            g.order(),
            sd.elements.iter().copied(),
        )) {
            return Err(LiftError::ContainmentFailed {
                class_rep: class.rep,
            });
        }
    }

    let h_group = h.to_group();
    let mut h_pos = vec![usize::MAX; g.order()];
    for (i, &e) in h.elements().iter().enumerate() {
        h_pos[e] = i;
    }
    // intersection H ∩ wHw^{-1} mapped into the abstract copy of H
    let intersect = |w: usize| -> Subgroup {
        let ids: Vec<usize> = h
            .elements()
            .iter()
            .filter(|&&k| h.contains(g.mul3(g.inv(w), k, w)))
            .map(|&k| h_pos[k])
            .collect();
        Subgroup::new(&h_group, ids).expect("stabilizer intersection is a subgroup")
    };

    let cosets = CosetSpace::new(g, h, Side::Left);
    let mut x_t = Vec::new();
    let mut y_t = Vec::new();
    let mut z_t = Vec::new();
    for (d, class) in dc.classes().iter().enumerate() {
        let sd = &dc.classes()[psi_cls[d]];
        let z_d = sd.elements[0];
        let (x_d, y_d) = class
            .elements
            .iter()
            .copied()
            .find_map(|xx| {
                let yy = g.mul(g.inv(xx), z_d);
                (dc.class_of(yy) == phi_cls[d]).then_some((xx, yy))
            })
            .ok_or(LiftError::ContainmentFailed {
                class_rep: class.rep,
            })?;
        let hx = intersect(x_d);
        let hz = intersect(z_d);
        let hy = intersect(y_d);
        if hx.order() != hz.order() || hx.order() != hy.order() {
            return Err(LiftError::SizeCondition {
                class_rep: class.rep,
            });
        }
        let x_trans = common_transversal(&h_group, &hx, &hz, Side::Left)?;
        let y_trans = CosetSpace::new(&h_group, &hy, Side::Left);
        debug_assert_eq!(x_trans.len(), y_trans.count());
        for (idx, &hh) in x_trans.iter().enumerate() {
            let hh_parent = h.elements()[hh];
            let mu_parent = h.elements()[y_trans.rep(idx)];
            x_t.push(cosets.coset_of(g.mul(hh_parent, x_d)));
            y_t.push(cosets.coset_of(g.mul(mu_parent, y_d)));
            z_t.push(cosets.coset_of(g.mul(hh_parent, z_d)));
        }
    }
    let triple = CosetTriple::new(cosets, x_t, y_t, z_t)?;
    lift_coset_triple(&triple, cm_h)
}

/// The identity-permutation special case: requires `D² ⊇ D` for every
/// `H`-double coset (checked by set multiplication), then lifts with both
/// class permutations set to the identity.
pub fn lift_double_cosets_identity(
    g: &Group,
    h: &Subgroup,
    cm_h: &CompleteMapping,
) -> Result<CompleteMapping, LiftError> {
    let dc = double_cosets(g, h);
    for class in dc.classes() {
        let sq = g.product_set(&class.elements, &class.elements);
        if !sq.is_superset(&crate::BitSet::from_ids(
            g.order(),
            class.elements.iter().copied(),
        )) {
            return Err(LiftError::ContainmentFailed {
                class_rep: class.rep,
            });
        }
    }
    let id: Vec<usize> = (0..dc.classes().len()).collect();
    lift_double_cosets(g, h, cm_h, &id, &id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use crate::mapping::SearchOutcome;

    #[test]
    fn involution_partition_examples() {
        let (j, k) = partition_involutions(&[1, 0], &[1, 0]).unwrap();
        assert_eq!((j, k), (vec![0], vec![1]));

        let s = vec![1, 0, 3, 2];
        let t = vec![2, 3, 0, 1];
        let (j, k) = partition_involutions(&s, &t).unwrap();
        assert_eq!(j.len(), 2);
        for &jj in &j {
            assert!(k.contains(&s[jj]));
            assert!(k.contains(&t[jj]));
        }
        // a fixed point is unavoidable on odd sets
        assert!(matches!(
            partition_involutions(&[0, 2, 1], &[0, 2, 1]),
            Err(LiftError::HasFixedPoint { .. })
        ));
    }

    #[test]
    fn transversal_examples() {
        let s3 = family::symmetric(3).unwrap();
        let triv = Subgroup::trivial(&s3);
        let all = common_transversal(&s3, &triv, &triv, Side::Left).unwrap();
        assert_eq!(all, (0..6).collect::<Vec<_>>());
        assert!(matches!(
            common_transversal(&s3, &triv, &Subgroup::whole(&s3), Side::Left),
            Err(LiftError::OrderMismatch { left: 1, right: 6 })
        ));

        // two distinct transposition subgroups
        let twos: Vec<usize> = s3.elements().filter(|&x| s3.element_order(x) == 2).collect();
        let h = Subgroup::generated(&s3, &[twos[0]]);
        let k = Subgroup::generated(&s3, &[twos[1]]);
        let x = common_transversal(&s3, &h, &k, Side::Left).unwrap();
        assert_eq!(x.len(), 3);

        // simultaneous left/right transversal of the same subgroup
        let x = common_transversal(&s3, &h, &h, Side::Right).unwrap();
        let rc = CosetSpace::new(&s3, &h, Side::Right);
        let mut seen = vec![false; 3];
        for &e in &x {
            assert!(!std::mem::replace(&mut seen[rc.coset_of(e)], true));
        }
    }

    #[test]
    fn coset_triple_lift_degenerate() {
        // H = G: the triple has one index and the lift returns cm_H up to
        // relabeling.
        let v4 = family::elementary_abelian(2, 2).unwrap();
        let cm = CompleteMapping::search(&v4, 10_000).found().unwrap();
        let whole = Subgroup::whole(&v4);
        let cosets = CosetSpace::new(&v4, &whole, Side::Left);
        let triple = CosetTriple::new(cosets, vec![0], vec![0], vec![0]).unwrap();
        let lifted = lift_coset_triple(&triple, &cm).unwrap();
        assert!(lifted.verify());

        // H trivial: the triple encodes a complete mapping directly.
        let z3 = family::cyclic(3).unwrap();
        let triv = Subgroup::trivial(&z3);
        let cosets = CosetSpace::new(&z3, &triv, Side::Left);
        let cm3 = CompleteMapping::for_odd_group(&z3).unwrap();
        let triple = CosetTriple::new(cosets, (0..3).collect(), cm3.phi(), cm3.psi()).unwrap();
        let cm_triv = CompleteMapping::for_odd_group(&triv.to_group()).unwrap();
        let lifted = lift_coset_triple(&triple, &cm_triv).unwrap();
        assert_eq!(lifted.phi(), cm3.phi());
        assert_eq!(lifted.psi(), cm3.psi());
    }

    #[test]
    fn normal_composition() {
        // Z3 x Z3 with N = first factor
        let z3 = family::cyclic(3).unwrap();
        let g = family::direct_product(&z3, &z3);
        let n = Subgroup::new(&g, [0, 3, 6]).unwrap();
        let cm_n = CompleteMapping::for_odd_group(&n.to_group()).unwrap();
        let (q, _) = quotient(&g, &n).unwrap();
        let cm_q = CompleteMapping::for_odd_group(&q).unwrap();
        let cm = lift_normal(&g, &n, &cm_n, &cm_q).unwrap();
        assert!(cm.verify());
        assert_eq!(cm.group().order(), 9);

        // A4 with N = V4, quotient Z3
        let a4 = family::alternating(4).unwrap();
        let v4: Vec<usize> = a4
            .elements()
            .filter(|&x| x == 0 || a4.element_order(x) == 2)
            .collect();
        let v4 = Subgroup::new(&a4, v4).unwrap();
        let cm_n = CompleteMapping::search(&v4.to_group(), 10_000).found().unwrap();
        let (q, _) = quotient(&a4, &v4).unwrap();
        let cm_q = CompleteMapping::for_odd_group(&q).unwrap();
        let cm = lift_normal(&a4, &v4, &cm_n, &cm_q).unwrap();
        assert!(cm.verify());

        // Z6 with N = Z3: the quotient Z2 has no complete mapping, so no
        // valid cm_q can ever be supplied.
        let z6 = family::cyclic(6).unwrap();
        let n = Subgroup::new(&z6, [0, 2, 4]).unwrap();
        let (q, _) = quotient(&z6, &n).unwrap();
        assert!(matches!(
            CompleteMapping::search(&q, 1_000),
            SearchOutcome::NotFound
        ));
    }

    #[test]
    fn central_involution_lifts() {
        let q8 = family::quaternion8();
        let (q, _) = quotient(&q8, &Subgroup::new(&q8, [0, 1]).unwrap()).unwrap();
        let cm_q = CompleteMapping::search(&q, 10_000).found().unwrap();
        let cm = lift_central_involution(&q8, 1, &cm_q).unwrap();
        assert!(cm.verify());

        let g = family::direct_product(
            &family::cyclic(4).unwrap(),
            &family::cyclic(2).unwrap(),
        );
        let x = 4; // (2, 0)
        let (q, _) = quotient(&g, &Subgroup::new(&g, [0, x]).unwrap()).unwrap();
        let cm_q = CompleteMapping::search(&q, 10_000).found().unwrap();
        let cm = lift_central_involution(&g, x, &cm_q).unwrap();
        assert!(cm.verify());

        // Z4, x = 2: quotient Z2 admits no mapping, so the construction is
        // unreachable with a valid cm_q.
        let z4 = family::cyclic(4).unwrap();
        let n = Subgroup::new(&z4, [0, 2]).unwrap();
        let (q, _) = quotient(&z4, &n).unwrap();
        assert!(matches!(
            CompleteMapping::search(&q, 1_000),
            SearchOutcome::NotFound
        ));
    }

    #[test]
    fn double_coset_lifts() {
        // H = G reduces to cm_H
        let v4 = family::elementary_abelian(2, 2).unwrap();
        let cm = CompleteMapping::search(&v4, 10_000).found().unwrap();
        let whole = Subgroup::whole(&v4);
        let lifted = lift_double_cosets(&v4, &whole, &cm, &[0], &[0]).unwrap();
        assert!(lifted.verify());

        // H trivial: the class permutations encode a complete mapping
        let z3 = family::cyclic(3).unwrap();
        let triv = Subgroup::trivial(&z3);
        let cm3 = CompleteMapping::for_odd_group(&z3).unwrap();
        let cm_triv = CompleteMapping::for_odd_group(&triv.to_group()).unwrap();
        // classes are singletons {0},{1},{2} in id order
        let lifted =
            lift_double_cosets(&z3, &triv, &cm_triv, &cm3.phi(), &cm3.psi()).unwrap();
        assert!(lifted.verify());

        // S3 with H = A3: the complement squares to A3, not itself
        let s3 = family::symmetric(3).unwrap();
        let a3: Vec<usize> = s3.elements().filter(|&x| s3.element_order(x) % 2 == 1).collect();
        let a3 = Subgroup::new(&s3, a3).unwrap();
        let cm_a3 = CompleteMapping::for_odd_group(&a3.to_group()).unwrap();
        assert!(matches!(
            lift_double_cosets_identity(&s3, &a3, &cm_a3),
            Err(LiftError::ContainmentFailed { .. })
        ));
    }
}
