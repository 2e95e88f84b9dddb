//! Words over the letters `{x_c : c ∈ Σ}` and the shuffle algebra.

pub mod point;
pub mod poly;
pub mod shuffle;
pub mod word;

pub use point::Point;
pub use poly::WordPoly;
pub use shuffle::{antipode, antipode_word, concat, deconcatenations, shuffle, shuffle_poly, shuffle_power};
pub use word::{words_of_weight, words_up_to, Letter, Word};
