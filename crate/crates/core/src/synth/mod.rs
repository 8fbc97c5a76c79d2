//! Witness graphs: given a representable abelian group, build a coloured
//! graph or digraph with at most four colours whose automorphism group is
//! exactly that group. Every result is checked by the automorphism engine
//! before it is returned.

mod catalogue;
mod induct;
mod merge;
mod regular;
mod two_orbit;

pub use catalogue::{catalogue, catalogue_entry, CatalogueEntry};
pub use induct::{classify_with_witnesses, synthesize_digraph, synthesize_graph, trivial_witness};
pub use merge::{colour_merge_search, min_colour_count, partition_count, sampled_merge_search};
pub use regular::{represent_regular_digraph, represent_regular_plus};
pub use two_orbit::two_orbit_graph;

use crate::autgrp::aut_equals;
use crate::cgraph::ColouredGraph;
use crate::error::Result;
use crate::perm::PermGroup;

/// Most colours any construction here uses.
pub const MAX_COLOURS: usize = 4;

/// All relabellings of the colours `0..4`, identity first.
fn colour_permutations() -> Vec<[u32; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u32 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                let d = 6 - a - b - c;
                out.push([a, b, c, d]);
            }
        }
    }
    out
}

/// True if `g` with its colours renamed by `pi` is connected in colours 2
/// and 3.
fn connected_under(g: &ColouredGraph, pi: &[u32; 4]) -> bool {
    let palette: Vec<u32> = (0..g.colour_count() as u32)
        .filter(|&c| matches!(pi[c as usize], 2 | 3))
        .collect();
    g.is_connected_in(&palette)
}

/// A colour matrix under construction, with components placed on point
/// sets and joins between them.
struct Canvas {
    directed: bool,
    n: usize,
    colours: Vec<u32>,
}

impl Canvas {
    fn new(directed: bool, n: usize) -> Canvas {
        Canvas {
            directed,
            n,
            colours: vec![0; n * n],
        }
    }

    /// Copies `g` onto `points` (local vertex `i` is point `points[i]`),
    /// renaming colours by `pi`. Loops stay 0.
    fn place(&mut self, g: &ColouredGraph, points: &[usize], pi: &[u32; 4]) {
        for (i, &u) in points.iter().enumerate() {
            for (j, &v) in points.iter().enumerate() {
                if i != j {
                    self.colours[u * self.n + v] = pi[g.colour(i, j) as usize];
                }
            }
        }
    }

    /// Colours the pair `(u, v)`, and `(v, u)` too when undirected.
    fn set(&mut self, u: usize, v: usize, c: u32) {
        self.colours[u * self.n + v] = c;
        if !self.directed {
            self.colours[v * self.n + u] = c;
        }
    }

    /// The finished graph, with unused colours squeezed out in order.
    fn finish(&self) -> ColouredGraph {
        let mut used = [false; MAX_COLOURS];
        for u in 0..self.n {
            for v in (0..self.n).filter(|&v| v != u) {
                used[self.colours[u * self.n + v] as usize] = true;
            }
        }
        let mut rename = [0u32; MAX_COLOURS];
        let mut next = 0;
        for c in 0..MAX_COLOURS {
            if used[c] {
                rename[c] = next;
                next += 1;
            }
        }
        let colours = self.colours.iter().map(|&c| rename[c as usize]).collect();
        ColouredGraph::new(self.directed, self.n, colours).expect("squeezed colours have no gaps")
    }
}

/// Pairs `(τx₀, τz)` for `τ ∈ A` and `z` in the orbit of `z_start` under
/// the pointwise stabilizer of `from_orbit`. With `z_start` in the orbit of
/// `x₀`'s partner, this joins each kernel coset on one orbit with its image
/// under `φ` on the other.
fn coset_join(a: &PermGroup, from_orbit: &[usize], z_start: usize) -> Vec<(usize, usize)> {
    let x0 = from_orbit[0];
    let k = a.pointwise_stabilizer(from_orbit);
    let targets = k.orbit_of(z_start).to_vec();
    let mut pairs: Vec<(usize, usize)> = a
        .elements()
        .iter()
        .flat_map(|t| targets.iter().map(move |&z| (t.apply(x0), t.apply(z))))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Tries colour relabellings of two components, each connected in colours
/// 2 and 3, until the assembled graph represents `target`.
fn assemble(
    target: &PermGroup,
    directed: bool,
    parts: [(&ColouredGraph, &[usize]); 2],
    joins: &[(Vec<(usize, usize)>, u32)],
) -> Result<Option<ColouredGraph>> {
    let perms = colour_permutations();
    let usable = |g: &ColouredGraph| -> Vec<[u32; 4]> {
        perms.iter().copied().filter(|p| connected_under(g, p)).collect()
    };
    let (first, second) = (usable(parts[0].0), usable(parts[1].0));
    for p1 in &first {
        for p2 in &second {
            let mut canvas = Canvas::new(directed, target.degree());
            canvas.place(parts[0].0, parts[0].1, p1);
            canvas.place(parts[1].0, parts[1].1, p2);
            for (pairs, c) in joins {
                for &(u, v) in pairs {
                    canvas.set(u, v, *c);
                }
            }
            let g = canvas.finish();
            if aut_equals(&g, target)? {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}
