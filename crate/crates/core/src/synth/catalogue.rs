//! Hand-built coloured graphs for the groups the general constructions
//! cannot reach.

use crate::autgrp::aut_equals;
use crate::cgraph::{cayley_star, ColourPartition, ColouredGraph};
use crate::error::{Error, Result};
use crate::perm::regular::mixed_radix_index;
use crate::perm::sums::join;
use crate::perm::{parallel_sum, plus_group, regular_group, PermGroup, Permutation};

/// A named graph together with the group it is known to represent.
#[derive(Debug, Clone)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub graph: ColouredGraph,
    pub expected_group: PermGroup,
    /// How the graph is built, e.g. `Cay*(Z3^2; 10, 01, 11)`.
    pub construction: &'static str,
}

impl CatalogueEntry {
    /// Runs the automorphism engine and compares against the expected group.
    pub fn verify(&self) -> Result<bool> {
        aut_equals(&self.graph, &self.expected_group)
    }

    pub fn answers_to(&self, name: &str) -> bool {
        self.name == name || self.aliases.contains(&name)
    }
}

struct Spec {
    name: &'static str,
    aliases: &'static [&'static str],
    construction: &'static str,
    build: fn() -> Result<(ColouredGraph, PermGroup)>,
}

const SPECS: &[Spec] = &[
    Spec {
        name: "z2_2",
        aliases: &[],
        construction: "Cay*(Z2^2; 10, 01)",
        build: || regular_entry(&[2, 2], &[&["10"], &["01"]]),
    },
    Spec {
        name: "z2_3",
        aliases: &[],
        construction: "Cay*(Z2^3; 100, 010, 001)",
        build: || regular_entry(&[2, 2, 2], &[&["100"], &["010"], &["001"]]),
    },
    Spec {
        name: "z2_4",
        aliases: &["fig1"],
        construction: "Cay*(Z2^4; 1000, [0100, 1010], [0010, 0001])",
        build: || regular_entry(&[2, 2, 2, 2], &[&["1000"], &["0100", "1010"], &["0010", "0001"]]),
    },
    Spec {
        name: "z4_z2_plus",
        aliases: &[],
        construction: "Cay*(Z4 x Z2; 10, 01)",
        build: || plus_entry(&[4, 2], &[&["10"], &["01"]]),
    },
    Spec {
        name: "z4_z2_2_plus",
        aliases: &[],
        construction: "Cay*(Z4 x Z2^2; 001, 011, [100, 010])",
        build: || plus_entry(&[4, 2, 2], &[&["001"], &["011"], &["100", "010"]]),
    },
    Spec {
        name: "z3_2_plus",
        aliases: &["fig2_left"],
        construction: "Cay*(Z3^2; 10, 01, 11)",
        build: || plus_entry(&[3, 3], &[&["10"], &["01"], &["11"]]),
    },
    Spec {
        name: "z3_3_plus",
        aliases: &[],
        construction: "Cay*(Z3^3; 010, [001, 100], [110, 101])",
        build: || plus_entry(&[3, 3, 3], &[&["010"], &["001", "100"], &["110", "101"]]),
    },
    Spec {
        name: "z4_2_plus",
        aliases: &[],
        construction: "Cay*(Z4^2; 10, 01, 13)",
        build: || plus_entry(&[4, 4], &[&["10"], &["01"], &["13"]]),
    },
    Spec {
        name: "fig3",
        aliases: &["z3_2_kernel_z3"],
        construction: "Cay*(Z3^2; 01, 11, 10) and Cay*(Z3^2; 10, 01); colour 3 joins xy to the copies with x+y = y, colour 1 to those with x+y = y+1",
        build: fig3,
    },
    Spec {
        name: "z3_2_par",
        aliases: &[],
        construction: "Cay*(Z3^2; 10, 01, 11) and Cay*(Z3^2; 01, 10); colour 1 joins xy to its copy, colour 3 to the copy of x(y+1)",
        build: z3_2_par,
    },
    Spec {
        name: "delta",
        aliases: &["fig2_right"],
        construction: "digraph on Z3^2: arcs x -> x+10 in colour 1, x -> x+01 in colour 2",
        build: delta,
    },
];

fn cay(orders: &[usize], blocks: &[&[&str]]) -> Result<(ColouredGraph, PermGroup)> {
    let a = regular_group(orders)?;
    let pi = ColourPartition::from_labels(&a, orders, blocks)?;
    Ok((cayley_star(&a, &pi)?, a))
}

fn regular_entry(orders: &[usize], blocks: &[&[&str]]) -> Result<(ColouredGraph, PermGroup)> {
    cay(orders, blocks)
}

fn plus_entry(orders: &[usize], blocks: &[&[&str]]) -> Result<(ColouredGraph, PermGroup)> {
    let (g, a) = cay(orders, blocks)?;
    Ok((g, plus_group(&a)?))
}

/// Two nine-point components side by side with `cross(left, right)`
/// colouring the edges between them.
fn two_grids(
    left: &ColouredGraph,
    right: &ColouredGraph,
    cross: impl Fn([usize; 2], [usize; 2]) -> u32,
) -> Result<ColouredGraph> {
    let coord = |p: usize| [p / 3, p % 3];
    ColouredGraph::from_fn(false, 18, |u, v| match (u < 9, v < 9) {
        (true, true) => left.colour(u, v),
        (false, false) => right.colour(u - 9, v - 9),
        (true, false) => cross(coord(u), coord(v - 9)),
        (false, true) => cross(coord(v), coord(u - 9)),
    })
}

/// Left kernel `⟨10⟩`, right kernel `⟨12⟩`: the cross edges pair the row
/// `y` on the left with the diagonal `x + y` on the right.
fn fig3() -> Result<(ColouredGraph, PermGroup)> {
    let (left, z) = cay(&[3, 3], &[&["01"], &["11"], &["10"]])?;
    let (right, _) = cay(&[3, 3], &[&["10"], &["01"]])?;
    let g = two_grids(&left, &right, |[_, y], [x2, y2]| {
        let d = (x2 + y2) % 3;
        if d == y {
            3
        } else if d == (y + 1) % 3 {
            1
        } else {
            0
        }
    })?;
    let [e10, e01] = grid_generators(&z);
    let e12 = e10.compose(&e01.pow(2));
    let id = Permutation::identity(9);
    let group = PermGroup::from_generators(
        18,
        vec![join(&e10, &id), join(&id, &e12), join(&e01, &e01)],
    )?;
    Ok((g, group))
}

fn z3_2_par() -> Result<(ColouredGraph, PermGroup)> {
    let (left, z) = cay(&[3, 3], &[&["10"], &["01"], &["11"]])?;
    let (right, _) = cay(&[3, 3], &[&["01"], &["10"]])?;
    // the shifted colour-3 join rules out inverting both grids at once
    let g = two_grids(&left, &right, |[x, y], b| {
        if b == [x, y] {
            1
        } else if b == [x, (y + 1) % 3] {
            3
        } else {
            0
        }
    })?;
    Ok((g, parallel_sum(&z, 2)?))
}

fn delta() -> Result<(ColouredGraph, PermGroup)> {
    let z = regular_group(&[3, 3])?;
    let idx = |t: [usize; 2]| mixed_radix_index(&[3, 3], &t);
    let g = ColouredGraph::from_fn(true, 9, |u, v| {
        let (x, y) = (u / 3, u % 3);
        if v == idx([x + 1, y]) {
            1
        } else if v == idx([x, y + 1]) {
            2
        } else {
            0
        }
    })?;
    Ok((g, z))
}

/// Translations by `10` and `01` in `regular_group(&[3, 3])`.
fn grid_generators(z: &PermGroup) -> [Permutation; 2] {
    let by = |d: usize| {
        z.elements()
            .iter()
            .find(|e| e.apply(0) == d)
            .expect("regular")
            .clone()
    };
    [by(3), by(1)]
}

/// All entries, built afresh.
pub fn catalogue() -> Result<Vec<CatalogueEntry>> {
    SPECS.iter().map(build).collect()
}

/// The entry with the given name or alias.
pub fn catalogue_entry(name: &str) -> Result<CatalogueEntry> {
    let spec = SPECS
        .iter()
        .find(|s| s.name == name || s.aliases.contains(&name))
        .ok_or_else(|| {
            let names: Vec<&str> = SPECS.iter().map(|s| s.name).collect();
            Error::domain(format!(
                "no catalogue entry '{name}' (known: {})",
                names.join(", ")
            ))
        })?;
    build(spec)
}

fn build(spec: &Spec) -> Result<CatalogueEntry> {
    let (graph, expected_group) = (spec.build)()?;
    Ok(CatalogueEntry {
        name: spec.name,
        aliases: spec.aliases,
        graph,
        expected_group,
        construction: spec.construction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgrp::{automorphism_generators, brute_force_aut};

    #[test]
    fn every_entry_verifies() {
        for e in catalogue().unwrap() {
            assert!(e.verify().unwrap(), "{}", e.name);
            assert!(e.graph.edge_colour_count() <= 4, "{}", e.name);
        }
    }

    #[test]
    fn orders() {
        let want = [
            ("z2_2", 4),
            ("z2_3", 8),
            ("fig1", 16),
            ("z4_z2_plus", 16),
            ("z4_z2_2_plus", 32),
            ("z3_2_plus", 18),
            ("z3_3_plus", 54),
            ("z4_2_plus", 32),
            ("fig3", 27),
            ("z3_2_par", 9),
            ("fig2_right", 9),
        ];
        for (name, order) in want {
            let e = catalogue_entry(name).unwrap();
            let r = automorphism_generators(&e.graph).unwrap();
            assert_eq!(r.order_usize(), Some(order), "{name}");
        }
    }

    #[test]
    fn small_entries_match_brute_force() {
        for name in ["z2_2", "z2_3", "delta"] {
            let e = catalogue_entry(name).unwrap();
            assert!(brute_force_aut(&e.graph).unwrap().equals(&e.expected_group), "{name}");
        }
    }

    #[test]
    fn delta_uses_three_colours() {
        let e = catalogue_entry("delta").unwrap();
        assert!(e.graph.is_directed());
        assert_eq!(e.graph.colour_count(), 3);
    }

    #[test]
    fn unknown_name() {
        assert!(catalogue_entry("k5").is_err());
    }
}
