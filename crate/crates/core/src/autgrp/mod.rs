//! Automorphism groups of coloured graphs by partition refinement and
//! backtracking, plus a brute-force oracle.

mod brute;
mod engine;

pub use brute::{brute_force_aut, BRUTE_FORCE_MAX_VERTICES};
pub use engine::{
    aut_equals, automorphism_generators, automorphism_group, find_isomorphism, is_automorphism,
    AutResult,
};
