//! Singular-set configurations and their Möbius symmetries.

pub mod action;
pub mod config;
pub mod mobius;

pub use action::{
    act_on_dual_alphabet, act_on_letter, act_on_poly, classify_involution, tau, InvolutionClass,
    InvolutionForm, LinearForm, Symmetry,
};
pub use config::SigmaConfig;
pub use mobius::{apply_mobius, induced_permutation, ExtendedPoint, MobiusMap};
