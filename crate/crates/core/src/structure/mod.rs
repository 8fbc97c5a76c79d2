//! Orbit structure of intransitive abelian groups and the GR/DGR decision
//! procedures.

mod classify;
mod decompose;
mod factor;
mod orbits;

pub use classify::{classify, ClassificationReport, OrbitRecord};
pub use decompose::{subdirect_decompose, SubdirectDecomposition};
pub use factor::{factor_invariants, is_elementary_abelian_2_factors};
pub use orbits::{adjacent, isolated, orbit_structure, OrbitStructure};
