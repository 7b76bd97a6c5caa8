//! Sampled length-function properties across the supported types.

use hallpaige_coxeter::{CoxeterSystem, CoxeterType, Word};

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

fn random_word(gen: &mut impl FnMut() -> u64, rank: usize, max_len: usize) -> Word {
    let len = (gen() % (max_len as u64 + 1)) as usize;
    Word::from_letters(
        (0..len)
            .map(|_| (gen() % rank as u64) as u8 + 1)
            .collect::<Vec<u8>>(),
    )
}

#[test]
fn length_is_subadditive_with_equality_iff_reduced_concatenation() {
    for t in [
        CoxeterType::A(3),
        CoxeterType::B(3),
        CoxeterType::D(4),
        CoxeterType::F4,
        CoxeterType::E6,
        CoxeterType::I2(7),
    ] {
        let sys = CoxeterSystem::new(t).unwrap();
        let mut gen = splitmix(0xc0c0_0000 ^ t.rank() as u64 ^ t.order() as u64);
        for _ in 0..200 {
            let w = random_word(&mut gen, sys.rank(), 8);
            let u = random_word(&mut gen, sys.rank(), 8);
            let lw = sys.length(&w).unwrap();
            let lu = sys.length(&u).unwrap();
            let cat = w.concat(&u);
            let lcat = sys.length(&cat).unwrap();
            assert!(lcat <= lw + lu, "{t:?}: {w} · {u}");
            // equality means the concatenation of reduced words for the
            // two elements is reduced; compare against canonical forms
            let ew = sys.element_of_word(&w).unwrap();
            let eu = sys.element_of_word(&u).unwrap();
            let canonical_cat = sys
                .canonical_word(&ew)
                .concat(&sys.canonical_word(&eu));
            let reduced = sys.is_reduced(&canonical_cat).unwrap();
            assert_eq!(lcat == lw + lu, reduced, "{t:?}: {w} · {u}");
        }
    }
}

#[test]
fn single_letters_and_identity() {
    for t in [CoxeterType::A(5), CoxeterType::E7, CoxeterType::I2(12)] {
        let sys = CoxeterSystem::new(t).unwrap();
        assert_eq!(sys.length(&Word::empty()).unwrap(), 0);
        for s in 1..=sys.rank() as u8 {
            assert_eq!(sys.length(&Word::from_letters(vec![s])).unwrap(), 1);
        }
    }
}
