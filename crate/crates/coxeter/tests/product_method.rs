//! Product-method square containment across the small-order types.

use hallpaige_coxeter::{verify_double_coset_squares, CoxeterSystem, CoxeterType, VerifyMethod};

fn all_pass(t: CoxeterType, r: u8) {
    let sys = CoxeterSystem::new(t).unwrap();
    let reports =
        verify_double_coset_squares(&sys, r, VerifyMethod::Product, 1_000_000).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|c| c.pass), "{t:?} drop {r}");
}

#[test]
fn dihedral_and_classical() {
    for m in 3..=8 {
        all_pass(CoxeterType::I2(m), 1);
    }
    for l in 1..=5 {
        all_pass(CoxeterType::A(l), l as u8);
    }
    for l in 2..=4 {
        all_pass(CoxeterType::B(l), l as u8);
    }
    all_pass(CoxeterType::D(4), 4);
    all_pass(CoxeterType::F4, 4);
}

#[test]
fn f4_end_nodes_pass_middle_nodes_report_failures() {
    // Both end nodes work; dropping a middle node leaves classes whose
    // minimal representative fails the sufficient w ∈ P(w,w) check, and
    // the report says so honestly.
    all_pass(CoxeterType::F4, 1);
    let sys = CoxeterSystem::new(CoxeterType::F4).unwrap();
    let reports =
        verify_double_coset_squares(&sys, 2, VerifyMethod::Product, 1_000_000).unwrap();
    assert!(reports.iter().any(|c| !c.pass));
}

#[test]
fn e6_product() {
    all_pass(CoxeterType::E6, 6);
}
