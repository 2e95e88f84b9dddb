//! Arbitrary-precision evaluation of nested sums and multiple polylogarithms.

pub mod complex;
pub mod context;
pub(crate) mod nested;
pub mod polylog;

pub use complex::BigComplex;
pub use context::{Acceleration, Estimate, PrecisionContext};
pub use polylog::{
    l_ab, l_ab_with, lambda_eval, li_ab, li_b, mobius_eval, multiple_l_value, mzv, root_of_unity,
    split_point, LambdaArgs, Route,
};
