//! Relations among the values `ℒ^{ab}`: generation and numerical checks.

pub mod checks;
pub mod phi;
pub mod relation;
pub mod series;

pub use checks::{
    associator_inverse_check, conjugation_constant, euler_inversion_check, shuffle_relation_check,
    sigma_euler_inversion_check, verify, verify_all, VerificationReport,
};
pub use phi::{l_ab_poly, phi_coefficients, PhiTruncation};
pub use relation::{duality_pairs, sigma_duality_pairs, Provenance, Relation};
pub use series::NcSeries;
