//! Property tests for the structural invariants.

use hallpaige_core::family;
use hallpaige_core::lifting::partition_involutions;
use hallpaige_core::mapping::near_mapping_cyclic;
use hallpaige_core::{double_cosets, CosetSpace, Side, Subgroup};
use proptest::prelude::*;

/// Random fixed-point-free involution from a shuffled perfect matching.
fn fpf_involution(m: usize, seed: &mut impl FnMut() -> u64) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..m).collect();
    // Fisher-Yates with the supplied generator
    for i in (1..m).rev() {
        let j = (seed() % (i as u64 + 1)) as usize;
        idx.swap(i, j);
    }
    let mut inv = vec![0usize; m];
    for pair in idx.chunks(2) {
        inv[pair[0]] = pair[1];
        inv[pair[1]] = pair[0];
    }
    inv
}

fn splitmix(seed: u64) -> impl FnMut() -> u64 {
    let mut state = seed;
    move || {
        state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

proptest! {
    #[test]
    fn involution_partition_invariants(seed in any::<u64>(), half in 1usize..50) {
        let m = 2 * half;
        let mut gen = splitmix(seed);
        let s = fpf_involution(m, &mut gen);
        let t = fpf_involution(m, &mut gen);
        let (j, k) = partition_involutions(&s, &t).unwrap();
        prop_assert_eq!(j.len(), m / 2);
        prop_assert_eq!(k.len(), m / 2);
        let mut sj: Vec<usize> = j.iter().map(|&i| s[i]).collect();
        let mut tj: Vec<usize> = j.iter().map(|&i| t[i]).collect();
        sj.sort_unstable();
        tj.sort_unstable();
        prop_assert_eq!(&sj, &k);
        prop_assert_eq!(&tj, &k);
    }

    #[test]
    fn near_mapping_invariants(half in 1usize..=500) {
        let order = 2 * half;
        let nm = near_mapping_cyclic(order).unwrap();
        let alpha = nm.alpha();
        let beta = nm.beta();
        prop_assert_eq!(beta[0], 0);
        prop_assert_eq!(alpha[0], half);
        for c in 1..order {
            prop_assert_eq!((c + alpha[c]) % order, beta[c]);
        }
    }
}

#[test]
fn double_coset_classes_are_coset_unions() {
    let s4 = family::symmetric(4).unwrap();
    let t = s4.elements().find(|&x| s4.element_order(x) == 2).unwrap();
    let c4 = s4.elements().find(|&x| s4.element_order(x) == 4).unwrap();
    for h in [
        Subgroup::generated(&s4, &[t]),
        Subgroup::generated(&s4, &[c4]),
        Subgroup::generated(&s4, &[t, c4]),
    ] {
        let dc = double_cosets(&s4, &h);
        for side in [Side::Left, Side::Right] {
            let cs = CosetSpace::new(&s4, &h, side);
            for g in s4.elements() {
                // every coset lies inside a single class
                let class = dc.class_of(g);
                let coset = cs.coset_of(g);
                for x in s4.elements() {
                    if cs.coset_of(x) == coset {
                        assert_eq!(dc.class_of(x), class);
                    }
                }
            }
        }
    }
}

#[test]
fn sylow_order_matches_two_part_across_catalog() {
    for (name, g) in hallpaige_core::catalog::catalog(64) {
        let p = hallpaige_core::sylow2(&g);
        let two_part = {
            let mut m = g.order();
            let mut t = 1;
            while m % 2 == 0 {
                m /= 2;
                t *= 2;
            }
            t
        };
        assert_eq!(p.order(), two_part, "{name}");
        assert!(
            p.elements().iter().all(|&x| g.element_order(x).is_power_of_two()),
            "{name}"
        );
    }
}
