//! Deterministic test catalog of small groups.
//!
//! Families: cyclic, dihedral, elementary abelian, the quaternion group,
//! `A4`, `S4`, `A5`, and pairwise direct products from a fixed base list.
//! Used by the verification suites to sweep "every small group" claims.

use crate::family::{self, Family};
use crate::group::Group;

/// All catalog groups of order at most `max_order`, labeled, in a fixed
/// deterministic order.
pub fn catalog(max_order: usize) -> Vec<(String, Group)> {
    let mut out: Vec<(String, Group)> = Vec::new();
    let mut push = |f: &Family| {
        if let Ok(g) = family::builtin(f) {
            if g.order() <= max_order {
                out.push((f.spec_string(), g));
            }
        }
    };
    for n in 1..=max_order {
        push(&Family::Cyclic(n));
    }
    for n in 2..=max_order / 2 {
        push(&Family::Dihedral(n));
    }
    for p in [2usize, 3, 5, 7, 11, 13] {
        for k in 2..=16u32 {
            match p.checked_pow(k) {
                Some(o) if o <= max_order => push(&Family::ElementaryAbelian { p, k }),
                _ => break,
            }
        }
    }
    push(&Family::Quaternion8);
    push(&Family::Alternating(4));
    push(&Family::Symmetric(4));
    push(&Family::Alternating(5));
    // pairwise products over a compact base
    let mut base: Vec<Family> = Vec::new();
    for n in 2..=32usize {
        base.push(Family::Cyclic(n));
    }
    for n in 2..=16usize {
        base.push(Family::Dihedral(n));
    }
    base.push(Family::Quaternion8);
    base.push(Family::Alternating(4));
    base.push(Family::Symmetric(4));
    base.push(Family::Alternating(5));
    let order_of = |f: &Family| -> usize {
        match f {
            Family::Cyclic(n) => *n,
            Family::Dihedral(n) => 2 * n,
            Family::Quaternion8 => 8,
            Family::Alternating(4) => 12,
            Family::Symmetric(4) => 24,
            Family::Alternating(5) => 60,
            _ => unreachable!(),
        }
    };
    for i in 0..base.len() {
        for j in i..base.len() {
            if order_of(&base[i]) * order_of(&base[j]) <= max_order {
                push(&Family::Product(
                    Box::new(base[i].clone()),
                    Box::new(base[j].clone()),
                ));
            }
        }
    }
    out
}
