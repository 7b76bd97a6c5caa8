//! `PSL(2, q)` as a permutation group on the projective line, with its
//! Borel-level subgroups and the rank-one complete-mapping pipeline.
//!
//! Elements act as Möbius maps `z ↦ (az + b)/(cz + d)` on the `q + 1`
//! points; point 0 is `∞` and point `1 + t` is the field element `t`.
//! The context carries `U = {z ↦ z + t}` (upper unipotent),
//! `H = {z ↦ λ²z}` (split torus image), `B = stab(∞) = H ⋉ U`, the
//! Weyl representative `n : z ↦ -1/z`, `N = ⟨H, n⟩` and `V = nUn`.

use thiserror::Error;

use crate::bitset::BitSet;
use crate::field::{FieldError, FiniteField};
use crate::group::Group;
use crate::lifting::{lift_coset_triple, lift_double_cosets_identity, lift_normal, CosetTriple, LiftError};
use crate::mapping::{CompleteMapping, MappingError, SearchOutcome};
use crate::subgroup::{quotient, CosetSpace, Side, Subgroup};
use crate::two_part;

#[derive(Debug, Error)]
pub enum Psl2Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("PSL(2,{q}) is bad (q = {q}); no complete mapping exists")]
    BadGroup { q: usize },
    #[error("element {0} is not in the torus subgroup")]
    NotInTorus(usize),
    #[error("no squaring witness found for torus element {h} (implementation bug)")]
    WitnessNotFound { h: usize },
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Mapping(#[from] MappingError),
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
}

pub struct Psl2Context {
    field: FiniteField,
    group: Group,
    perms: Vec<Vec<usize>>,
    b: Subgroup,
    u: Subgroup,
    h: Subgroup,
    n_subgroup: Subgroup,
    v: Subgroup,
    n_elt: usize,
}

impl Psl2Context {
    pub fn q(&self) -> usize {
        self.field.q()
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Permutation of the projective points realized by element `g`.
    pub fn permutation(&self, g: usize) -> &[usize] {
        &self.perms[g]
    }

    pub fn borel(&self) -> &Subgroup {
        &self.b
    }

    pub fn unipotent(&self) -> &Subgroup {
        &self.u
    }

    pub fn torus(&self) -> &Subgroup {
        &self.h
    }

    pub fn monomial(&self) -> &Subgroup {
        &self.n_subgroup
    }

    pub fn opposite_unipotent(&self) -> &Subgroup {
        &self.v
    }

    pub fn weyl_representative(&self) -> usize {
        self.n_elt
    }

    /// True for `q ≥ 4` (PSL(2,2) ≅ S3 and PSL(2,3) ≅ A4 are not simple).
    pub fn is_simple(&self) -> bool {
        self.q() >= 4
    }

    pub fn point_label(&self, p: usize) -> String {
        if p == 0 {
            "inf".to_string()
        } else {
            format!("{}", p - 1)
        }
    }

    /// Every element is uniquely `h·u` or `u'·n·h·u`: checks the two forms
    /// are disjoint, exhaustive, and produced without collisions.
    pub fn verify_normal_form(&self) -> bool {
        let g = &self.group;
        let n = g.order();
        let mut b_part = BitSet::new(n);
        let mut count = 0usize;
        for &h in self.h.elements() {
            for &u in self.u.elements() {
                if b_part.insert(g.mul(h, u)) {
                    count += 1;
                }
            }
        }
        if count != self.h.order() * self.u.order() {
            return false;
        }
        let mut big = BitSet::new(n);
        let mut big_count = 0usize;
        for &u1 in self.u.elements() {
            let lead = g.mul(u1, self.n_elt);
            for &h in self.h.elements() {
                let lh = g.mul(lead, h);
                for &u2 in self.u.elements() {
                    let e = g.mul(lh, u2);
                    if b_part.contains(e) {
                        return false;
                    }
                    if big.insert(e) {
                        big_count += 1;
                    }
                }
            }
        }
        big_count == self.u.order() * self.h.order() * self.u.order()
            && count + big_count == n
    }

    /// Sorted elements of the coset `U·n·h·U`.
    fn unipotent_double_coset(&self, h: usize) -> Vec<usize> {
        let g = &self.group;
        let mut set = BitSet::new(g.order());
        for &u1 in self.u.elements() {
            let lead = g.mul3(u1, self.n_elt, h);
            for &u2 in self.u.elements() {
                set.insert(g.mul(lead, u2));
            }
        }
        set.to_vec()
    }

    /// For odd `q`: `(UnhU)(Unh'U) ⊇ Unh''U` for all torus `h, h', h''`,
    /// plus the intermediate containment `H ⊆ UnUnUn`.
    pub fn verify_u_double_cosets(&self) -> bool {
        let g = &self.group;
        let n = g.order();
        let torus = self.h.elements();
        let classes: Vec<Vec<usize>> = torus
            .iter()
            .map(|&h| self.unipotent_double_coset(h))
            .collect();
        for a in &classes {
            for b in &classes {
                let prod = g.product_set(a, b);
                for c in &classes {
                    if !prod.is_superset(&BitSet::from_ids(n, c.iter().copied())) {
                        return false;
                    }
                }
            }
        }
        // H ⊆ U n U n U n
        let un: Vec<usize> = self
            .u
            .elements()
            .iter()
            .map(|&u| g.mul(u, self.n_elt))
            .collect();
        let s2 = g.product_set(&un, &un);
        let s3 = g.product_set(&s2.to_vec(), &un);
        torus.iter().all(|&h| s3.contains(h))
    }

    /// Smallest `v ∈ U` with `n·h·U ⊆ v·(n·h·U)·(n·h·U)`.
    pub fn squaring_witness(&self, h: usize) -> Result<usize, Psl2Error> {
        if !self.h.contains(h) {
            return Err(Psl2Error::NotInTorus(h));
        }
        let g = &self.group;
        let nh = g.mul(self.n_elt, h);
        let coset: Vec<usize> = self.u.elements().iter().map(|&u| g.mul(nh, u)).collect();
        let square = g.product_set(&coset, &coset);
        for &v in self.u.elements() {
            let vinv = g.inv(v);
            if coset.iter().all(|&e| square.contains(g.mul(vinv, e))) {
                return Ok(v);
            }
        }
        Err(Psl2Error::WitnessNotFound { h })
    }
}

/// Builds the `PSL(2,q)` context for a prime power `q ≤ 16`.
pub fn psl2(q: usize) -> Result<Psl2Context, Psl2Error> {
    let field = FiniteField::new(q)?;
    let points = q + 1;
    // point 0 = ∞, point 1+t = field element t
    let translation = |c: usize| -> Vec<usize> {
        let mut p = vec![0usize; points];
        for t in 0..q {
            p[1 + t] = 1 + field.add(t, c);
        }
        p
    };
    let scaling = |mu: usize| -> Vec<usize> {
        let mut p = vec![0usize; points];
        for t in 0..q {
            p[1 + t] = 1 + field.mul(mu, t);
        }
        p
    };
    let inversion = || -> Vec<usize> {
        let mut p = vec![0usize; points];
        p[0] = 1; // ∞ ↦ 0
        p[1] = 0; // 0 ↦ ∞
        for t in 1..q {
            p[1 + t] = 1 + field.neg(field.inv(t));
        }
        p
    };

    // generators: translations by a basis of (K, +), one torus generator,
    // and the Weyl representative
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let p_char = field.characteristic();
    let mut basis = 1usize;
    for _ in 0..field.degree() {
        gens.push(translation(basis));
        basis *= p_char;
    }
    let squares = field.nonzero_squares();
    if squares.len() > 1 {
        // generator of the square multipliers: the primitive element itself
        // when q is even (squaring is onto), its square otherwise
        let prim = field.primitive_element();
        let gen_mu = if q % 2 == 0 { prim } else { field.mul(prim, prim) };
        gens.push(scaling(gen_mu));
    }
    gens.push(inversion());

    let (group, perms) = Group::from_permutations_elements(points, &gens)?;
    let expected = q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 };
    assert_eq!(group.order(), expected, "PSL(2,{q}) order");

    let mut index = std::collections::HashMap::new();
    for (i, p) in perms.iter().enumerate() {
        index.insert(p.clone(), i);
    }
    let id_of = |p: Vec<usize>| -> usize { index[&p] };

    let u_ids: Vec<usize> = (0..q).map(|c| id_of(translation(c))).collect();
    let h_ids: Vec<usize> = squares.iter().map(|&mu| id_of(scaling(mu))).collect();
    let n_elt = id_of(inversion());
    let u = Subgroup::new(&group, u_ids)?;
    let h = Subgroup::new(&group, h_ids)?;
    let b_ids: Vec<usize> = group.elements().filter(|&e| perms[e][0] == 0).collect();
    let b = Subgroup::new(&group, b_ids)?;
    let mut n_seed = h.elements().to_vec();
    n_seed.push(n_elt);
    let n_subgroup = Subgroup::generated(&group, &n_seed);
    let v_ids: Vec<usize> = u
        .elements()
        .iter()
        .map(|&x| group.mul3(n_elt, x, group.inv(n_elt)))
        .collect();
    let v = Subgroup::new(&group, v_ids)?;

    let ctx = Psl2Context {
        field,
        group,
        perms,
        b,
        u,
        h,
        n_subgroup,
        v,
        n_elt,
    };

    // structural invariants
    let g = &ctx.group;
    assert_eq!(ctx.u.order(), q);
    assert_eq!(ctx.h.order(), (q - 1) / if q % 2 == 0 { 1 } else { 2 });
    assert_eq!(ctx.b.order(), ctx.u.order() * ctx.h.order());
    assert!(ctx.u.elements().iter().all(|&x| ctx.b.contains(x)));
    assert!(ctx.h.elements().iter().all(|&x| ctx.b.contains(x)));
    assert!(g
        .elements()
        .filter(|&x| ctx.b.contains(x))
        .all(|x| ctx.u.elements().iter().all(|&uu| ctx.u.contains(g.mul3(g.inv(x), uu, x)))));
    assert_eq!(ctx.h.intersection(&ctx.u).order(), 1);
    assert_eq!(g.mul(n_elt, n_elt), Group::IDENTITY);
    assert!(!ctx.h.contains(n_elt));
    assert_eq!(ctx.n_subgroup.order(), 2 * ctx.h.order());
    // V = nUn is the opposite unipotent: it fixes the field point 0 and
    // meets U and B only in the identity.
    assert!(ctx.v.elements().iter().all(|&x| ctx.perms[x][1] == 1));
    assert_eq!(ctx.v.intersection(&ctx.b).order(), 1);
    // |U| is the full p-part of |G| and p does not divide [G : U]
    let p = ctx.field.characteristic();
    let mut p_part = 1usize;
    let mut rest = g.order();
    while rest % p == 0 {
        rest /= p;
        p_part *= p;
    }
    assert_eq!(ctx.u.order(), p_part);
    assert_ne!(rest % p, 0);
    if q % 2 == 0 {
        let (_, two) = two_part(g.order());
        assert_eq!(ctx.u.order(), two);
    }
    // the split torus image is cyclic
    let hn = ctx.h.order();
    assert!(
        ctx.h.elements().iter().any(|&x| g.element_order(x) == hn),
        "torus must be cyclic"
    );
    Ok(ctx)
}

/// Which construction [`build_cm_psl2`] took, with the data it used.
#[derive(Clone, Debug)]
pub struct Psl2Trace {
    pub q: usize,
    /// `'a'`: odd `q ≡ 1 (mod 4)`, torus near-mapping pipeline over `U`;
    /// `'b'`: odd `q ≡ 3 (mod 4)`, odd Borel + double-coset lift;
    /// `'c'`: even `q`, Borel assembled from `U` and `B/U`, then the
    /// double-coset lift.
    pub branch: char,
    pub group_order: usize,
    pub borel_order: usize,
    pub unipotent_order: usize,
    pub torus_order: usize,
    /// Squaring witnesses `(h, v_h)` (branch `'a'` only).
    pub witnesses: Vec<(usize, usize)>,
}

/// Builds a verified complete mapping of `PSL(2,q)`.
pub fn build_cm_psl2(q: usize) -> Result<(CompleteMapping, Psl2Trace), Psl2Error> {
    let ctx = psl2(q)?;
    if !crate::analysis::hall_paige_verdict(ctx.group()).good {
        return Err(Psl2Error::BadGroup { q });
    }
    let mut trace = Psl2Trace {
        q,
        branch: ' ',
        group_order: ctx.group().order(),
        borel_order: ctx.borel().order(),
        unipotent_order: ctx.unipotent().order(),
        torus_order: ctx.torus().order(),
        witnesses: Vec::new(),
    };
    let cm = if q % 2 == 0 {
        trace.branch = 'c';
        branch_even(&ctx)?
    } else if q % 4 == 1 {
        trace.branch = 'a';
        branch_torus_pipeline(&ctx, &mut trace)?
    } else {
        trace.branch = 'b';
        branch_odd_borel(&ctx)?
    };
    assert!(cm.verify());
    Ok((cm, trace))
}

/// Odd `q ≡ 1 (mod 4)`: the torus is cyclic of even order, one equation
/// short of a complete mapping. Index the left cosets of `U` by
/// `H ⊔ (U × H)`, patch three values so the triple containment holds
/// everywhere, and lift the odd-order mapping of `U`.
fn branch_torus_pipeline(
    ctx: &Psl2Context,
    trace: &mut Psl2Trace,
) -> Result<CompleteMapping, Psl2Error> {
    let g = ctx.group();
    let hsub = ctx.torus();
    let usub = ctx.unipotent();
    let hn = hsub.order();
    debug_assert_eq!(hn % 2, 0);

    // torus generator: smallest element of full order (H is cyclic)
    let gamma = hsub
        .elements()
        .iter()
        .copied()
        .find(|&x| g.element_order(x) == hn)
        .expect("split torus of PSL2 is cyclic");
    let mut h_elts = Vec::with_capacity(hn);
    let mut cur = Group::IDENTITY;
    for _ in 0..hn {
        h_elts.push(cur);
        cur = g.mul(cur, gamma);
    }

    let near = crate::mapping::near_mapping_cyclic(hn)?;
    let alpha = near.alpha();
    let beta = near.beta();

    let witnesses: Vec<usize> = h_elts
        .iter()
        .map(|&h| ctx.squaring_witness(h))
        .collect::<Result<_, _>>()?;
    trace.witnesses = h_elts.iter().copied().zip(witnesses.iter().copied()).collect();

    let cosets = CosetSpace::new(g, usub, Side::Left);
    let n_elt = ctx.weyl_representative();
    let u_els = usub.elements();

    // index set: residues 0..hn, then pairs (u_pos, residue)
    let mut x_t = Vec::with_capacity(cosets.count());
    let mut y_t = Vec::with_capacity(cosets.count());
    let mut z_t = Vec::with_capacity(cosets.count());
    for i in 0..hn {
        x_t.push(cosets.coset_of(h_elts[i]));
        y_t.push(cosets.coset_of(h_elts[alpha[i]]));
        z_t.push(cosets.coset_of(h_elts[beta[i]]));
    }
    for &u in u_els.iter() {
        for (i, &h) in h_elts.iter().enumerate() {
            let nh = g.mul(n_elt, h);
            x_t.push(cosets.coset_of(g.mul3(u, witnesses[i], nh)));
            let unh = g.mul(u, nh);
            y_t.push(cosets.coset_of(unh));
            z_t.push(cosets.coset_of(unh));
        }
    }

    // patch three indices: the identity residue, (v_ζ, identity), and
    // (identity, ζ), where ζ is the inverse of alpha at the identity
    let zeta = g.inv(h_elts[alpha[0]]);
    let zeta_res = h_elts
        .iter()
        .position(|&e| e == zeta)
        .expect("inverse of a torus element stays in the torus");
    let v_zeta = witnesses[zeta_res];
    let v_one = witnesses[0];
    let idx_one = 0usize;
    let u_pos_of = |u: usize| u_els.binary_search(&u).unwrap();
    let idx_pair = |u: usize, res: usize| hn + u_pos_of(u) * hn + res;
    let idx_a = idx_pair(v_zeta, 0);
    let idx_b = idx_pair(Group::IDENTITY, zeta_res);

    let nz = g.mul(n_elt, zeta);
    x_t[idx_one] = cosets.coset_of(g.mul3(v_zeta, v_one, n_elt));
    y_t[idx_one] = cosets.coset_of(g.mul(v_zeta, n_elt));
    z_t[idx_one] = cosets.coset_of(Group::IDENTITY);
    x_t[idx_a] = cosets.coset_of(g.mul(v_zeta, nz));
    y_t[idx_a] = cosets.coset_of(h_elts[alpha[0]]);
    z_t[idx_a] = cosets.coset_of(g.mul(v_zeta, n_elt));
    x_t[idx_b] = cosets.coset_of(Group::IDENTITY);
    y_t[idx_b] = cosets.coset_of(nz);
    z_t[idx_b] = cosets.coset_of(nz);

    let triple = CosetTriple::new(cosets, x_t, y_t, z_t)?;
    let cm_u = CompleteMapping::for_odd_group(&usub.to_group())?;
    Ok(lift_coset_triple(&triple, &cm_u)?)
}

/// Odd `q ≡ 3 (mod 4)`: the Borel subgroup has odd order, so it carries
/// the direct odd-order mapping; its double cosets square onto themselves.
fn branch_odd_borel(ctx: &Psl2Context) -> Result<CompleteMapping, Psl2Error> {
    let b = ctx.borel();
    debug_assert_eq!(b.order() % 2, 1);
    let cm_b = CompleteMapping::for_odd_group(&b.to_group())?;
    Ok(lift_double_cosets_identity(ctx.group(), b, &cm_b)?)
}

/// Even `q ≥ 4`: `U` is elementary abelian and non-cyclic, the quotient
/// `B/U` is cyclic of odd order; compose them to a mapping of `B`, then
/// lift through the double cosets.
fn branch_even(ctx: &Psl2Context) -> Result<CompleteMapping, Psl2Error> {
    let g = ctx.group();
    let b = ctx.borel();
    let b_group = b.to_group();
    let u_in_b: Vec<usize> = ctx
        .unipotent()
        .elements()
        .iter()
        .map(|&e| b.position_of(e).expect("U lies inside B"))
        .collect();
    let u_sub = Subgroup::new(&b_group, u_in_b)?;
    let cm_u = match CompleteMapping::search(&u_sub.to_group(), 10_000_000) {
        SearchOutcome::Found(cm) => cm,
        _ => unreachable!("elementary abelian 2-groups of rank ≥ 2 have complete mappings"),
    };
    let (q_group, _) = quotient(&b_group, &u_sub).expect("U is normal in B");
    let cm_q = CompleteMapping::for_odd_group(&q_group)?;
    let cm_b = lift_normal(&b_group, &u_sub, &cm_u, &cm_q)?;
    Ok(lift_double_cosets_identity(g, b, &cm_b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_invariants() {
        let ctx = psl2(5).unwrap();
        assert_eq!(ctx.group().order(), 60);
        assert_eq!(ctx.unipotent().order(), 5);
        assert_eq!(ctx.torus().order(), 2);

        let ctx = psl2(7).unwrap();
        assert_eq!(ctx.group().order(), 168);
        assert_eq!(ctx.torus().order(), 3);

        let ctx = psl2(4).unwrap();
        assert_eq!(ctx.group().order(), 60);
        assert_eq!(ctx.unipotent().order(), 4);
        // U non-cyclic for q = 4
        assert!(ctx
            .unipotent()
            .elements()
            .iter()
            .all(|&x| ctx.group().element_order(x) <= 2));
    }

    #[test]
    fn normal_form_counts() {
        for q in [5, 7, 9] {
            let ctx = psl2(q).unwrap();
            assert!(ctx.verify_normal_form(), "q = {q}");
        }
    }

    #[test]
    fn unipotent_double_coset_products() {
        for q in [5, 9, 13] {
            let ctx = psl2(q).unwrap();
            assert!(ctx.verify_u_double_cosets(), "q = {q}");
        }
    }

    #[test]
    fn squaring_witnesses_exist() {
        let ctx = psl2(5).unwrap();
        ctx.squaring_witness(Group::IDENTITY).unwrap();
        let ctx = psl2(9).unwrap();
        for &h in ctx.torus().elements() {
            ctx.squaring_witness(h).unwrap();
        }
        let ctx = psl2(7).unwrap();
        ctx.squaring_witness(Group::IDENTITY).unwrap();
    }

    #[test]
    fn small_q_flags() {
        assert!(!psl2(2).unwrap().is_simple());
        assert!(!psl2(3).unwrap().is_simple());
        assert!(psl2(5).unwrap().is_simple());
        assert!(matches!(
            build_cm_psl2(2),
            Err(Psl2Error::BadGroup { q: 2 })
        ));
    }
}
