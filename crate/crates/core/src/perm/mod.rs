//! Permutations, permutation groups and the sum constructions.

mod group;
mod permutation;
pub mod regular;
pub mod sums;

pub use group::PermGroup;
pub(crate) use permutation::{parse_cycle_word, parse_raw_word};
pub use permutation::Permutation;
pub use regular::{involution, plus_group, regular_group};
pub use sums::{direct_sum, parallel_sum, subdirect_sum, Cosets, FactorIso};
