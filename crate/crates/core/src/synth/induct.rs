//! Witnesses for groups with any number of orbits, built one orbit (or one
//! adjacent pair of orbits) at a time on top of a witness for the 2-orbit
//! closure of the rest.

use crate::cgraph::ColouredGraph;
use crate::closure::two_orbit_closure;
use crate::error::{Error, Result};
use crate::perm::PermGroup;
use crate::structure::{classify, orbit_structure, subdirect_decompose, ClassificationReport, OrbitStructure};

use super::regular::{represent_regular_digraph, represent_regular_plus, verified};
use super::two_orbit::two_orbit_graph;
use super::{assemble, coset_join, MAX_COLOURS};

/// A graph with no automorphisms on `n ≠ 2` vertices: a path whose first
/// edge has its own colour for `n ≤ 5`, a path with the chord `{v₂, v₄}`
/// beyond that.
pub fn trivial_witness(n: usize) -> Result<ColouredGraph> {
    if n == 2 {
        return Err(Error::domain("no graph on two vertices has a trivial automorphism group"));
    }
    let g = ColouredGraph::from_fn(false, n, |u, v| {
        let (u, v) = (u.min(v), u.max(v));
        match (n, u, v) {
            (3..=5, 0, 1) => 2,
            (6.., 1, 3) => 1,
            _ if v == u + 1 => 1,
            _ => 0,
        }
    })?;
    verified(g, &PermGroup::trivial(n))
}

/// The directed path `v₁ → v₂ → … → vₙ`.
fn directed_path(n: usize) -> ColouredGraph {
    ColouredGraph::from_fn(true, n, |u, v| u32::from(v == u + 1)).expect("two colours")
}

/// A coloured graph with at most four colours whose automorphism group is
/// exactly `A`.
///
/// Fails with a domain error unless `A` is abelian and representable.
pub fn synthesize_graph(a: &PermGroup) -> Result<ColouredGraph> {
    if a.is_trivial() {
        return trivial_witness(a.degree());
    }
    if !classify(a)?.verdict_gr {
        return Err(Error::domain("group is not the automorphism group of a coloured graph"));
    }
    let g = verified(build_graph(a)?, a)?;
    bounded(g)
}

/// A coloured digraph with at most four colours whose automorphism group is
/// exactly `A`.
pub fn synthesize_digraph(a: &PermGroup) -> Result<ColouredGraph> {
    if !classify(a)?.verdict_dgr {
        return Err(Error::domain("group is not the automorphism group of a coloured digraph"));
    }
    let g = verified(build_digraph(a)?, a)?;
    bounded(g)
}

/// [`classify`] with witnesses attached to the positive verdicts.
pub fn classify_with_witnesses(a: &PermGroup) -> Result<ClassificationReport> {
    let mut report = classify(a)?;
    if report.verdict_gr {
        report.witness_graph = Some(synthesize_graph(a)?);
    }
    if report.verdict_dgr {
        report.witness_digraph = Some(synthesize_digraph(a)?);
    }
    Ok(report)
}

fn bounded(g: ColouredGraph) -> Result<ColouredGraph> {
    if g.colour_count() > MAX_COLOURS {
        return Err(Error::Verification(format!("witness uses {} colours", g.colour_count())));
    }
    Ok(g)
}

fn sorted_orbits(a: &PermGroup) -> Vec<Vec<usize>> {
    a.orbits()
        .iter()
        .map(|o| {
            let mut o = o.clone();
            o.sort_unstable();
            o
        })
        .collect()
}

fn complement(n: usize, y: &[usize]) -> Vec<usize> {
    (0..n).filter(|p| !y.contains(p)).collect()
}

/// The 2-orbit closure of `A` restricted to `points`.
fn closed_rest(a: &PermGroup, points: &[usize]) -> Result<PermGroup> {
    two_orbit_closure(&a.restriction(points)?)
}

/// Which part is split off next.
enum Split {
    Orbit(usize),
    Pair(usize, usize),
}

/// Fixed points first, then isolated orbits, then any orbit whose removal
/// keeps the isolated orbits of the closed remainder unchanged and leaves a
/// nontrivial remainder, then the first adjacent pair.
fn choose_split(a: &PermGroup, s: &OrbitStructure, orbits: &[Vec<usize>]) -> Result<Split> {
    let r = orbits.len();
    if let Some(i) = (0..r).find(|&i| orbits[i].len() == 1) {
        return Ok(Split::Orbit(i));
    }
    if let Some(i) = (0..r).find(|&i| s.isolated[i]) {
        return Ok(Split::Orbit(i));
    }
    for i in 0..r {
        let rest = complement(a.degree(), &orbits[i]);
        let b = closed_rest(a, &rest)?;
        if b.is_trivial() {
            continue;
        }
        let t = orbit_structure(&b)?;
        let keeps = (0..r).filter(|&j| j != i).all(|j| {
            let local = rest.binary_search(&orbits[j][0]).expect("orbit in remainder");
            let k = b.orbit_index(local);
            t.isolated[k] == s.isolated[j]
        });
        if keeps {
            return Ok(Split::Orbit(i));
        }
    }
    for i in 0..r {
        if let Some(j) = (i + 1..r).find(|&j| s.adjacency[i][j]) {
            return Ok(Split::Pair(i, j));
        }
    }
    Err(Error::Verification("no orbit can be split off".into()))
}

fn build_graph(a: &PermGroup) -> Result<ColouredGraph> {
    let orbits = sorted_orbits(a);
    match orbits.len() {
        1 => return represent_regular_plus(a),
        2 => return two_orbit_graph(a, &subdirect_decompose(a, &orbits[0])?),
        _ => {}
    }
    let s = orbit_structure(a)?;
    let (y, g1) = match choose_split(a, &s, &orbits)? {
        Split::Orbit(i) => (orbits[i].clone(), represent_regular_plus(&a.restriction(&orbits[i])?)?),
        Split::Pair(i, j) => {
            let mut y: Vec<usize> = orbits[i].iter().chain(&orbits[j]).copied().collect();
            y.sort_unstable();
            let c = a.restriction(&y)?;
            let first: Vec<usize> = orbits[i].iter().map(|p| y.binary_search(p).expect("in y")).collect();
            let g1 = two_orbit_graph(&c, &subdirect_decompose(&c, &first)?)?;
            (y, g1)
        }
    };
    let z = complement(a.degree(), &y);
    let g2 = build_graph(&closed_rest(a, &z)?)?;
    let joins = parallel_joins(a, &orbits, &y);
    assemble(a, false, [(&g1, &y), (&g2, &z)], &[(joins, 1)])?.ok_or_else(|| {
        Error::Verification(format!(
            "no colour relabelling represents the group of order {} on {} points",
            a.order(),
            a.degree()
        ))
    })
}

fn build_digraph(a: &PermGroup) -> Result<ColouredGraph> {
    if a.is_trivial() {
        return Ok(directed_path(a.degree()));
    }
    let orbits = sorted_orbits(a);
    if orbits.len() == 1 {
        return represent_regular_digraph(a);
    }
    let y = orbits[0].clone();
    let g1 = represent_regular_digraph(&a.restriction(&y)?)?;
    let z = complement(a.degree(), &y);
    let g2 = build_digraph(&closed_rest(a, &z)?)?;
    let joins = parallel_joins(a, &orbits, &y);
    assemble(a, true, [(&g1, &y), (&g2, &z)], &[(joins, 1)])?.ok_or_else(|| {
        Error::Verification(format!(
            "no colour relabelling represents the group of order {} on {} points as a digraph",
            a.order(),
            a.degree()
        ))
    })
}

/// Colour-1 coset joins from every orbit inside `y` to every orbit outside.
fn parallel_joins(a: &PermGroup, orbits: &[Vec<usize>], y: &[usize]) -> Vec<(usize, usize)> {
    let (inside, outside): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) =
        orbits.iter().partition(|o| y.contains(&o[0]));
    let mut pairs = Vec::new();
    for o in &inside {
        for q in &outside {
            pairs.extend(coset_join(a, o, q[0]));
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgrp::brute_force_aut;
    use crate::perm::regular_group;
    use crate::spec::parse_group_spec;

    #[test]
    fn trivial_witnesses() {
        for n in [1, 3, 4, 5, 6, 7, 10] {
            let g = trivial_witness(n).unwrap();
            assert!(g.colour_count() <= 3, "n = {n}");
        }
        assert!(trivial_witness(2).is_err());
        assert_eq!(trivial_witness(6).unwrap().colour_count(), 2);
        assert!(synthesize_graph(&PermGroup::trivial(2)).is_err());
    }

    #[test]
    fn directed_paths() {
        for n in 1..=5 {
            let g = synthesize_digraph(&PermGroup::trivial(n)).unwrap();
            assert!(g.colour_count() <= 2);
        }
    }

    #[test]
    fn elementary_abelian_regular() {
        let a = regular_group(&[2, 2, 2]).unwrap();
        let g = synthesize_graph(&a).unwrap();
        assert_eq!(g.colour_count(), 4);
    }

    #[test]
    fn three_orbits() {
        // C3 plus two parallel copies of C3
        let a = parse_group_spec("dsum(cyclic(3), par(cyclic(3), 2))").unwrap();
        assert!(synthesize_graph(&a).is_err());
        let d = synthesize_digraph(&a).unwrap();
        assert!(brute_force_aut(&d).unwrap().equals(&a));
        for spec in ["gens: (1 2)(3 4), (5 6)", "gens: (1 2 3)(4 5 6), (7 8)"] {
            let b = parse_group_spec(spec).unwrap();
            let g = synthesize_graph(&b).unwrap();
            assert!(brute_force_aut(&g).unwrap().equals(&b), "{spec}");
        }
        // Klein group on three pairs, no involution fixing a pair
        let k = parse_group_spec("gens: (1 2)(3 4), (5 6)(3 4)").unwrap();
        assert!(synthesize_graph(&k).is_err());
    }

    #[test]
    fn two_copies_of_c3_digraph() {
        let a = parse_group_spec("par(cyclic(3), 2)").unwrap();
        let d = synthesize_digraph(&a).unwrap();
        assert!(brute_force_aut(&d).unwrap().equals(&a));
        assert!(synthesize_graph(&a).is_ok());
    }

    #[test]
    fn non_representable_rejected() {
        assert!(synthesize_graph(&PermGroup::cyclic(4).unwrap()).is_err());
        assert!(synthesize_digraph(&PermGroup::cyclic(4).unwrap()).is_ok());
        let a = parse_group_spec("gens: (1 2 3)(4 5 6), (4 5 6)(7 8 9)").unwrap();
        assert!(synthesize_digraph(&a).is_err());
    }

    #[test]
    fn witnesses_in_report() {
        let r = classify_with_witnesses(&PermGroup::cyclic(4).unwrap()).unwrap();
        assert!(r.witness_graph.is_none());
        assert!(r.witness_digraph.is_some());
    }
}
