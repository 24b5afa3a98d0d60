//! Repeated-root constacyclic codes of length 4p^s over F_{p^m}.
//!
//! The crate builds beta-constacyclic codes as ideals of
//! F_{p^m}[x]/(x^(4p^s) - beta), evaluates closed-form Hamming-distance
//! case tables keyed by the factorization shape of x^4 - b0, classifies
//! almost-MDS codes, derives CSS quantum codes from dual-containing ones,
//! and carries an independent brute-force distance oracle used to validate
//! every closed-form claim at desk scale.

pub mod amds;
pub mod code;
pub mod distance;
pub mod error;
pub mod field;
pub mod oracle;
pub mod poly;
pub mod quantum;
pub mod verify;

pub use amds::{
    amds_verdict, classify_amds, enumerate_amds, is_amds, is_mds, sweep_single, AmdsSweep,
    AmdsVerdict, Classification, Finding, OracleConfig, SweepRow,
};
pub use code::{constacyclic_shift, CodeParams, ConstaCode};
pub use distance::{
    label_is_anticipated, single_factor_term, theorem_distance, window_of, DistanceWindow,
    FamilyClass, TheoremDistance,
};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec, MAX_FIELD_ORDER};
pub use oracle::{
    check_formula_distance, full_enum, min_distance_oracle, weight_search, DistanceCheck,
    OracleOutcome, Strategy, DEFAULT_ENUM_BUDGET,
};
pub use poly::{factor_quartic, FactorSet, Polynomial};
pub use quantum::{
    css_from_dual_containing, css_general, enumerate_qamds, is_qamds, quantum_singleton_defect,
    QamdsRow, QamdsSweep, QuantumParams,
};
pub use verify::{run_verify, Agreement, VerifyReport, VerifyRow};
