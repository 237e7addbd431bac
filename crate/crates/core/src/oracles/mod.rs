//! Brute-force ground truth: monotone factorisation search and the
//! pair-of-permutations model of dessins.

pub mod dessin;
pub mod monotone;

pub use dessin::{dessin_connected_count, dessin_disconnected_count, DessinPair};
pub use monotone::{enumerate_monotone, strictly_monotone, weighted_counts, MonotoneFactorisation};
