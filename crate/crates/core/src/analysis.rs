//! Two-local structure: Sylow-2 subgroups, the Hall–Paige good/bad
//! verdict, the index-2 characteristic subgroup of a bad group, and the
//! related counting checks.

use thiserror::Error;

use crate::group::Group;
use crate::subgroup::{quotient, Subgroup};
use crate::two_part;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("group is not bad (its Sylow-2 subgroup is trivial or non-cyclic)")]
    NotBad,
    #[error("precondition failed: {0}")]
    BadPrecondition(&'static str),
}

/// Good/bad verdict for a group. "Bad" means the Sylow-2 subgroup is
/// nontrivial and cyclic; every other group is good.
#[derive(Clone, Debug)]
pub struct HpVerdict {
    pub good: bool,
    pub sylow2_order: usize,
    pub sylow2_cyclic: bool,
    pub witness: Subgroup,
}

/// Computes a Sylow-2 subgroup by normalizer ascent.
///
/// Starts from the cyclic subgroup generated by a 2-element of maximal
/// order (smallest id on ties) and repeatedly extends by the smallest
/// 2-element of `N_G(P) - P` until the full 2-part of `|G|` is reached.
/// A proper 2-subgroup always has a strictly larger normalizer inside any
/// Sylow-2 subgroup containing it, so the ascent cannot stall.
pub fn sylow2(g: &Group) -> Subgroup {
    let (_, target) = two_part(g.order());
    if target == 1 {
        return Subgroup::trivial(g);
    }
    let start = g
        .elements()
        .filter(|&x| g.element_order(x).is_power_of_two())
        .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
        .expect("even-order group has a 2-element");
    let mut p = Subgroup::generated(g, &[start]);
    while p.order() < target {
        let norm = p.normalizer();
        let t = norm
            .elements()
            .iter()
            .copied()
            .find(|&t| !p.contains(t) && g.element_order(t).is_power_of_two())
            .expect("normalizer of a non-Sylow 2-subgroup contains a fresh 2-element");
        let mut seed = p.elements().to_vec();
        seed.push(t);
        p = Subgroup::generated(g, &seed);
        debug_assert!(p.order().is_power_of_two());
    }
    p
}

pub fn hall_paige_verdict(g: &Group) -> HpVerdict {
    let witness = sylow2(g);
    let m = witness.order();
    let cyclic = witness
        .elements()
        .iter()
        .any(|&x| g.element_order(x) == m);
    HpVerdict {
        good: m == 1 || !cyclic,
        sylow2_order: m,
        sylow2_cyclic: cyclic,
        witness,
    }
}

/// For a bad group, the kernel of the sign of the regular representation:
/// `g` lies outside exactly when `ord(g)` is even and `|G|/ord(g)` is odd.
/// The result is verified to be a subgroup of index 2.
pub fn index_two_characteristic(g: &Group) -> Result<Subgroup, AnalysisError> {
    if hall_paige_verdict(g).good {
        return Err(AnalysisError::NotBad);
    }
    let n = g.order();
    let ids: Vec<usize> = g
        .elements()
        .filter(|&x| {
            let ord = g.element_order(x);
            !(ord % 2 == 0 && (n / ord) % 2 == 1)
        })
        .collect();
    assert_eq!(ids.len() * 2, n, "sign kernel must have index 2");
    let sub = Subgroup::new(g, ids).expect("sign kernel is a subgroup");
    // characteristic by construction (the defining condition only reads
    // element orders); normality is still cheap to confirm directly
    assert!(sub.is_normal(), "sign kernel must be normal");
    Ok(sub)
}

/// Iterates the index-2 construction down to a subgroup of odd order.
/// Returns the odd core and the full descending chain ending in it.
/// The quotient by the core is verified to be a cyclic 2-group.
pub fn odd_core_tower(g: &Group) -> Result<(Subgroup, Vec<Subgroup>), AnalysisError> {
    if hall_paige_verdict(g).good {
        return Err(AnalysisError::NotBad);
    }
    let mut current = Subgroup::whole(g);
    let mut tower = Vec::new();
    while current.order() % 2 == 0 {
        let abs = current.to_group();
        let inner = index_two_characteristic(&abs)
            .expect("descent stays bad until the order turns odd");
        let mapped: Vec<usize> = inner
            .elements()
            .iter()
            .map(|&i| current.elements()[i])
            .collect();
        current = Subgroup::new(g, mapped).expect("mapped subgroup stays a subgroup");
        tower.push(current.clone());
    }
    let core = current;
    assert!((g.order() / core.order()).is_power_of_two());
    assert!(core.is_normal(), "odd core must be normal");
    let (q, _) = quotient(g, &core).expect("odd core is normal");
    let qn = q.order();
    assert!(
        q.elements().any(|x| q.element_order(x) == qn),
        "quotient by the odd core must be cyclic"
    );
    Ok((core, tower))
}

/// The number of 2-elements is divisible by the Sylow-2 order
/// (a special case of Frobenius' divisibility theorem). A `false` return
/// indicates an implementation bug, never a property of the group.
pub fn verify_frobenius2(g: &Group) -> bool {
    let (_, p) = two_part(g.order());
    let count = g
        .elements()
        .filter(|&x| g.element_order(x).is_power_of_two())
        .count();
    count % p == 0
}

/// For a good group with a normal subgroup of index 2: the cyclic
/// subgroups generated by 2-elements outside `N` are not all conjugate.
/// Returns `true` when they are not all conjugate (the expected outcome).
pub fn two_element_classes_not_all_conjugate(
    g: &Group,
    n: &Subgroup,
) -> Result<bool, AnalysisError> {
    if !hall_paige_verdict(g).good {
        return Err(AnalysisError::BadPrecondition("group is bad"));
    }
    if n.order() * 2 != g.order() {
        return Err(AnalysisError::BadPrecondition("subgroup index is not 2"));
    }
    if !n.is_normal() {
        return Err(AnalysisError::BadPrecondition("subgroup is not normal"));
    }
    let two_elements: Vec<usize> = g
        .elements()
        .filter(|&x| !n.contains(x) && g.element_order(x).is_power_of_two())
        .collect();
    let mut cyclics: Vec<Vec<usize>> = Vec::new();
    for &x in &two_elements {
        let s = Subgroup::generated(g, &[x]);
        let v = s.elements().to_vec();
        if !cyclics.contains(&v) {
            cyclics.push(v);
        }
    }
    assert!(!cyclics.is_empty(), "Sylow-2 subgroup escapes N");
    let base = Subgroup::new(g, cyclics[0].iter().copied()).unwrap();
    let all_conjugate = cyclics.iter().skip(1).all(|other| {
        other.len() == base.order()
            && g.elements().any(|t| &base.conjugated_elements(t) == other)
    });
    Ok(!all_conjugate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    #[test]
    fn sylow_orders() {
        assert_eq!(sylow2(&family::cyclic(15).unwrap()).order(), 1);
        assert_eq!(sylow2(&family::symmetric(3).unwrap()).order(), 2);
        let s4 = family::symmetric(4).unwrap();
        let p = sylow2(&s4);
        // independent cross-check: the 2-part of 24 is 8, and the returned
        // subgroup consists of 2-elements only
        assert_eq!(p.order(), 8);
        assert!(p
            .elements()
            .iter()
            .all(|&x| s4.element_order(x).is_power_of_two()));
    }

    #[test]
    fn verdicts() {
        assert!(!hall_paige_verdict(&family::cyclic(2).unwrap()).good);
        let q8 = family::quaternion8();
        let v = hall_paige_verdict(&q8);
        assert!(v.good && v.sylow2_order == 8 && !v.sylow2_cyclic);
        assert!(hall_paige_verdict(&family::elementary_abelian(2, 2).unwrap()).good);
    }

    #[test]
    fn index_two() {
        let z6 = family::cyclic(6).unwrap();
        assert_eq!(index_two_characteristic(&z6).unwrap().elements(), &[0, 2, 4]);
        let s3 = family::symmetric(3).unwrap();
        let a3 = index_two_characteristic(&s3).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(a3.elements().iter().all(|&x| s3.element_order(x) % 2 == 1));
        assert!(matches!(
            index_two_characteristic(&family::elementary_abelian(2, 2).unwrap()),
            Err(AnalysisError::NotBad)
        ));
    }

    #[test]
    fn towers() {
        let (n, tower) = odd_core_tower(&family::cyclic(6).unwrap()).unwrap();
        assert_eq!(n.elements(), &[0, 2, 4]);
        assert_eq!(tower.len(), 1);
        let (n, tower) = odd_core_tower(&family::cyclic(12).unwrap()).unwrap();
        assert_eq!(n.order(), 3);
        assert_eq!(tower.len(), 2);
        let (n, _) = odd_core_tower(&family::symmetric(3).unwrap()).unwrap();
        assert_eq!(n.order(), 3);
    }

    #[test]
    fn frobenius_counts() {
        let s3 = family::symmetric(3).unwrap();
        let count = s3
            .elements()
            .filter(|&x| s3.element_order(x).is_power_of_two())
            .count();
        assert_eq!(count, 4);
        assert!(verify_frobenius2(&s3));
        assert!(verify_frobenius2(&family::cyclic(8).unwrap()));
        let a4 = family::alternating(4).unwrap();
        let count = a4
            .elements()
            .filter(|&x| a4.element_order(x).is_power_of_two())
            .count();
        assert_eq!(count, 4);
        assert!(verify_frobenius2(&a4));
    }

    #[test]
    fn conjugacy_lemma() {
        let v4 = family::elementary_abelian(2, 2).unwrap();
        let n = Subgroup::generated(&v4, &[v4.elements().find(|&x| x != 0).unwrap()]);
        assert!(two_element_classes_not_all_conjugate(&v4, &n).unwrap());

        let d4 = family::dihedral(4).unwrap();
        let rot = Subgroup::generated(&d4, &[1]);
        assert_eq!(rot.order(), 4);
        assert!(two_element_classes_not_all_conjugate(&d4, &rot).unwrap());

        let s3 = family::symmetric(3).unwrap();
        let a3 = index_two_characteristic(&s3).unwrap();
        assert!(matches!(
            two_element_classes_not_all_conjugate(&s3, &a3),
            Err(AnalysisError::BadPrecondition(_))
        ));
    }
}
