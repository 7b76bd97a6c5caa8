//! Sweep: the double-coset lift succeeds exactly when the brute-force
//! containment check passes, across catalog groups of order ≤ 60 and a
//! generated family of subgroups in each.

use std::collections::BTreeSet;
use std::time::Instant;

use hallpaige_core::catalog::catalog;
use hallpaige_core::{
    double_cosets, hall_paige_verdict, lift_double_cosets_identity, CompleteMapping, Group,
    LiftError, SearchOutcome, Subgroup,
};

/// Containment `D² ⊇ D` for every double coset, recomputed from scratch.
fn brute_force_containment(g: &Group, h: &Subgroup) -> bool {
    let dc = double_cosets(g, h);
    dc.classes().iter().all(|class| {
        let square = g.product_set(&class.elements, &class.elements);
        class.elements.iter().all(|&e| square.contains(e))
    })
}

#[test]
fn double_coset_lift_matches_brute_force_containment() {
    let start = Instant::now();
    let mut pairs = 0usize;
    let mut containment_held = 0usize;
    for (name, g) in catalog(60) {
        let n = g.order();
        // distinct subgroups generated by one or two elements from a
        // bounded prefix of the element ids
        let limit = n.min(12);
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut subs: Vec<Subgroup> = Vec::new();
        for x in 0..limit {
            for y in x..limit {
                let s = Subgroup::generated(&g, &[x, y]);
                if seen.insert(s.elements().to_vec()) {
                    subs.push(s);
                }
            }
        }
        for h in subs {
            // the lift needs a complete mapping of H to run at all
            if !hall_paige_verdict(&h.to_group()).good {
                continue;
            }
            let cm_h = match CompleteMapping::search(&h.to_group(), 4_000_000) {
                SearchOutcome::Found(cm) => cm,
                other => panic!("{name}: good subgroup of order {} gave {other:?}", h.order()),
            };
            let expected = brute_force_containment(&g, &h);
            pairs += 1;
            match lift_double_cosets_identity(&g, &h, &cm_h) {
                Ok(cm) => {
                    assert!(expected, "{name}: lift succeeded but containment fails");
                    assert!(cm.verify(), "{name}");
                    containment_held += 1;
                }
                Err(LiftError::ContainmentFailed { .. }) => {
                    assert!(!expected, "{name}: containment holds but lift refused");
                }
                Err(e) => panic!("{name}: unexpected error {e}"),
            }
        }
    }
    // the sweep must actually exercise both outcomes
    assert!(pairs > 300, "only {pairs} pairs swept");
    assert!(containment_held > 50);
    assert!(containment_held < pairs);
    println!(
        "swept {pairs} (G, H) pairs, containment held for {containment_held}, in {:?}",
        start.elapsed()
    );
}
