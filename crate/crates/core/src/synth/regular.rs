//! Witnesses for transitive abelian groups and their `A⁺` extensions.

use crate::autgrp::aut_equals;
use crate::cgraph::ColouredGraph;
use crate::error::{Error, Result};
use crate::perm::regular::{find_coordinates, require_regular_abelian};
use crate::perm::{plus_group, PermGroup};
use crate::structure::factor_invariants;

use super::catalogue::catalogue_entry;
use super::merge::{colour_merge_search, sampled_merge_search};

const SAMPLE_TRIES: usize = 400;
const SAMPLE_SEED: u64 = 0x00ab_e1e7;

/// Groups whose `A⁺` needs a catalogue graph, by cyclic orders.
const PLUS_EXCEPTIONS: &[(&[usize], &str)] = &[
    (&[2, 2], "z2_2"),
    (&[2, 2, 2], "z2_3"),
    (&[2, 2, 2, 2], "z2_4"),
    (&[4, 2], "z4_z2_plus"),
    (&[4, 2, 2], "z4_z2_2_plus"),
    (&[3, 3], "z3_2_plus"),
    (&[3, 3, 3], "z3_3_plus"),
    (&[4, 4], "z4_2_plus"),
];

/// Groups with no two-colour digraph, by cyclic orders.
const DIGRAPH_EXCEPTIONS: &[(&[usize], &str)] = &[
    (&[2, 2], "z2_2"),
    (&[2, 2, 2], "z2_3"),
    (&[2, 2, 2, 2], "z2_4"),
    (&[3, 3], "delta"),
];

/// Invariant factors of a transitive abelian group, descending, e.g.
/// `[4, 2]` for `Z4 × Z2`.
fn group_type(a: &PermGroup) -> Result<Vec<usize>> {
    let trivial = PermGroup::trivial(a.degree());
    let mut t = factor_invariants(a, &trivial)?;
    t.reverse();
    Ok(t)
}

/// A catalogue graph moved onto the points of `a`, if `a` has one of the
/// listed types.
fn from_catalogue(
    a: &PermGroup,
    table: &[(&[usize], &str)],
    directed: bool,
) -> Result<Option<ColouredGraph>> {
    let t = group_type(a)?;
    let Some((orders, name)) = table.iter().find(|(o, _)| *o == t.as_slice()) else {
        return Ok(None);
    };
    let entry = catalogue_entry(name)?;
    let coords = find_coordinates(a, orders)?
        .ok_or_else(|| Error::Verification(format!("no coordinates of type {orders:?}")))?;
    let mut g = entry.graph.relabel_vertices(&coords.relabelling());
    if directed && !g.is_directed() {
        g = as_digraph(&g);
    }
    Ok(Some(g))
}

/// The same graph with every edge read as a pair of opposite arcs.
pub(crate) fn as_digraph(g: &ColouredGraph) -> ColouredGraph {
    ColouredGraph::new(true, g.n(), g.matrix().to_vec()).expect("undirected matrix has zero diagonal")
}

/// Merge search with up to four colours, falling back to sampling when the
/// merge space is too large.
fn search(target: &PermGroup, directed: bool) -> Result<ColouredGraph> {
    for k in 2..=4 {
        match colour_merge_search(target, directed, k) {
            Ok(Some(g)) => return Ok(g),
            Ok(None) => {}
            Err(Error::SearchLimit(_)) => {
                if let Some(g) = sampled_merge_search(target, directed, k, SAMPLE_TRIES, SAMPLE_SEED)? {
                    return Ok(g);
                }
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::SearchLimit(format!(
        "no representation with at most 4 colours found on {} points",
        target.degree()
    )))
}

/// A coloured graph with `Aut = ⟨A, α⟩` for a transitive abelian `A`.
pub fn represent_regular_plus(a: &PermGroup) -> Result<ColouredGraph> {
    require_regular_abelian(a)?;
    let target = plus_group(a)?;
    let g = match from_catalogue(a, PLUS_EXCEPTIONS, false)? {
        Some(g) => g,
        None => search(&target, false)?,
    };
    verified(g, &target)
}

/// A coloured digraph with `Aut = A` for a transitive abelian `A`.
pub fn represent_regular_digraph(a: &PermGroup) -> Result<ColouredGraph> {
    require_regular_abelian(a)?;
    let g = match from_catalogue(a, DIGRAPH_EXCEPTIONS, true)? {
        Some(g) => g,
        None => search(a, true)?,
    };
    verified(g, a)
}

pub(crate) fn verified(g: ColouredGraph, target: &PermGroup) -> Result<ColouredGraph> {
    if !aut_equals(&g, target)? {
        return Err(Error::Verification(format!(
            "constructed graph on {} points does not represent the group of order {}",
            g.n(),
            target.order()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgrp::brute_force_aut;
    use crate::perm::{regular_group, Permutation};

    #[test]
    fn types() {
        assert_eq!(group_type(&regular_group(&[2, 4]).unwrap()).unwrap(), vec![4, 2]);
        assert_eq!(group_type(&PermGroup::cyclic(6).unwrap()).unwrap(), vec![6]);
        assert_eq!(group_type(&PermGroup::trivial(1)).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn z3_squared_plus_from_catalogue() {
        // a scrambled copy of Z3^2 still lands on the catalogue graph
        let f = Permutation::parse_cycles("(1 5 9 2)(3 7)", 9).unwrap();
        let a = regular_group(&[3, 3]).unwrap().conjugate(&f);
        let g = represent_regular_plus(&a).unwrap();
        assert_eq!(g.colour_count(), 4);
        assert_eq!(brute_force_aut(&g).unwrap().order(), 18);
    }

    #[test]
    fn cyclic_plus_is_dihedral() {
        let c5 = PermGroup::cyclic(5).unwrap();
        let g = represent_regular_plus(&c5).unwrap();
        assert!(brute_force_aut(&g).unwrap().equals(&plus_group(&c5).unwrap()));
        assert!(g.colour_count() <= 2);
    }

    #[test]
    fn tiny_groups() {
        for n in 1..=2 {
            let a = PermGroup::cyclic(n).unwrap();
            assert_eq!(represent_regular_plus(&a).unwrap().n(), n);
            assert_eq!(represent_regular_digraph(&a).unwrap().n(), n);
        }
    }

    #[test]
    fn digraphs() {
        let c4 = PermGroup::cyclic(4).unwrap();
        let g = represent_regular_digraph(&c4).unwrap();
        assert_eq!(g.colour_count(), 2);
        let z33 = regular_group(&[3, 3]).unwrap();
        assert_eq!(represent_regular_digraph(&z33).unwrap().colour_count(), 3);
        let z222 = regular_group(&[2, 2, 2]).unwrap();
        let g = represent_regular_digraph(&z222).unwrap();
        assert!(g.is_directed());
        assert_eq!(g.colour_count(), 4);
    }

    #[test]
    fn plus_for_every_small_type() {
        for orders in [&[6][..], &[4, 2], &[2, 2, 2], &[3, 3], &[7], &[8], &[2, 6]] {
            let a = regular_group(orders).unwrap();
            let g = represent_regular_plus(&a).unwrap();
            assert!(g.colour_count() <= 4, "{orders:?}");
        }
    }
}
