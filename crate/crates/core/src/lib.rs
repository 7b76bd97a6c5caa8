//! Finite-group toolkit built around complete mappings.
//!
//! A complete mapping of a finite group `G` is a pair of permutations
//! `(phi, psi)` of the elements with `g * phi(g) = psi(g)` for every `g`;
//! equivalently, a transversal of the Cayley table viewed as a latin square.
//! This crate provides:
//!
//! * a table-based [`Group`] type with subgroups, cosets, quotients and
//!   double cosets ([`group`], [`subgroup`]);
//! * the Hall–Paige good/bad verdict and related 2-local structure
//!   ([`analysis`]);
//! * exact-cover transversal search plus the direct constructions for
//!   odd-order and cyclic groups ([`mapping`], [`dlx`]);
//! * constructions that assemble a complete mapping of a group from
//!   complete mappings of subgroups or quotients ([`lifting`]);
//! * the rank-one Lie-type pipeline realized on `PSL(2,q)`
//!   ([`mod@psl2`]).

pub mod analysis;
pub mod bitset;
pub mod catalog;
pub mod dlx;
pub mod family;
pub mod field;
pub mod group;
pub mod io;
pub mod lifting;
pub mod mapping;
pub mod perm;
pub mod psl2;
mod rng;
pub mod subgroup;

pub use analysis::{
    hall_paige_verdict, index_two_characteristic, odd_core_tower, sylow2,
    two_element_classes_not_all_conjugate, verify_frobenius2, AnalysisError, HpVerdict,
};
pub use bitset::BitSet;
pub use family::Family;
pub use group::{Group, GroupError};
pub use lifting::{
    common_transversal, lift_central_involution, lift_coset_triple, lift_double_cosets,
    lift_double_cosets_identity, lift_normal, partition_involutions, CosetTriple, InvolutionPair,
    LiftError,
};
pub use mapping::{
    near_mapping_cyclic, CompleteMapping, MappingError, NearMappingCyclic, SearchOutcome,
};
pub use psl2::{build_cm_psl2, psl2, Psl2Context, Psl2Error, Psl2Trace};
pub use subgroup::{double_cosets, quotient, CosetSpace, DoubleCosetMap, Side, Subgroup};

/// Largest power of two dividing `n`, with its exponent.
pub(crate) fn two_part(n: usize) -> (u32, usize) {
    debug_assert!(n > 0);
    let v = n.trailing_zeros();
    (v, 1usize << v)
}
