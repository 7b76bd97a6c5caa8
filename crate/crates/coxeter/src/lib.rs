//! Finite Coxeter systems for types `A_l`, `B_l`, `D_l`, `E6`, `E7`,
//! `E8`, `F4` and the dihedral family `I2(m)`.
//!
//! Crystallographic types carry integer root data; group elements are
//! represented exactly by their action on simple-root coordinates.
//! Supported queries: word lengths and reduced words, minimal coset and
//! double-coset representatives for maximal parabolic subgroups,
//! products of parabolic double cosets in the 0-Hecke sense, and
//! verification that every parabolic double coset is contained in its
//! own square.

mod cartan;
pub mod hecke;
pub mod parabolic;
pub mod system;
pub mod verify;
pub mod word;

pub use hecke::hecke_product_set;
pub use parabolic::{double_coset_reps, min_coset_reps, DcClass, ParabolicDoubleCosets};
pub use system::{CoxeterSystem, CoxeterType, Element};
pub use verify::{
    builtin_certificates, verify_conjugate_form, verify_double_coset_squares, ClassReport,
    FormCertificate, VerifyMethod,
};
pub use word::Word;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoxeterError {
    #[error("unsupported Coxeter type: {0}")]
    Unsupported(String),
    #[error("invalid generator label {label} for rank {rank}")]
    BadLabel { label: u8, rank: usize },
    #[error("word is not reduced: {0}")]
    NotReduced(String),
    #[error("product set exceeded cap of {cap} elements")]
    SetTooLarge { cap: usize },
    #[error("certificate core contains non-commuting generators {a} and {b}")]
    NonCommutingCore { a: u8, b: u8 },
    #[error("no stored certificate for {0}")]
    MissingCertificate(String),
}
