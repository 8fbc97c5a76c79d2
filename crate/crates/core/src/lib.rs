pub mod autgrp;
pub mod cgraph;
pub mod closure;
pub mod error;
pub mod limits;
mod lexer;
pub mod perm;
pub mod spec;
pub mod structure;
pub mod synth;

pub use error::{Error, Result};
pub use perm::{PermGroup, Permutation};
