//! Process-wide size limits.
//!
//! Every enumeration in the crate is bounded. The defaults suit all the
//! constructions shipped here; the CLI can raise them with
//! `--limit-elements` and `--limit-vertices`.

use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_ELEMENT_CAP: usize = 20_000;
pub const DEFAULT_VERTEX_LIMIT: usize = 64;
/// Upper bound on assemblies explored by the 2-orbit-closure backtracking.
pub const DEFAULT_ASSEMBLY_CAP: usize = 1_000_000;
/// Upper bound on colour partitions examined by one merge search.
pub const DEFAULT_PARTITION_GUARD: usize = 1_000_000;

static ELEMENT_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ELEMENT_CAP);
static VERTEX_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_VERTEX_LIMIT);

pub fn element_cap() -> usize {
    ELEMENT_CAP.load(Ordering::Relaxed)
}

pub fn set_element_cap(cap: usize) {
    ELEMENT_CAP.store(cap, Ordering::Relaxed);
}

pub fn vertex_limit() -> usize {
    VERTEX_LIMIT.load(Ordering::Relaxed)
}

pub fn set_vertex_limit(limit: usize) {
    VERTEX_LIMIT.store(limit, Ordering::Relaxed);
}
