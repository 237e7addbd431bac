//! Permutations, partitions, characters and the symmetric group algebra.

pub mod algebra;
pub mod character;
pub mod partition;
pub mod perm;

pub use algebra::{jucys_cycle_identity_check, ClassVector, GroupAlgebra};
pub use character::{character_table, dimension_square_sum_check, first_orthogonality_check, mn_character};
pub use partition::{factorial, partitions_of, Partition};
pub use perm::Permutation;
