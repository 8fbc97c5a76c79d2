//! Witness graphs for abelian groups with exactly two orbits.

use crate::cgraph::ColouredGraph;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::structure::{factor_invariants, is_elementary_abelian_2_factors, orbit_structure, SubdirectDecomposition};

use super::catalogue::catalogue_entry;
use super::regular::{represent_regular_plus, verified};
use super::{assemble, coset_join};

/// A graph with `Aut = A` for a nontrivial abelian `A = B[B'] ⊕_φ C[C']`
/// with two orbits in which every orbit with elementary abelian 2 star
/// factor has an elementary abelian 2 constituent.
///
/// Each orbit carries a graph for `B⁺` or `C⁺`. Colour 1 joins every
/// `B'`-coset with its `φ`-partner. When the orbits are adjacent, colour 2
/// joins each coset `yB'` with the partner of `yxB'` for the least `x` with
/// `x²` outside `B'`, which rules out the inversion maps. The colours inside
/// the orbits are then relabelled until only `A` survives.
pub fn two_orbit_graph(a: &PermGroup, decomp: &SubdirectDecomposition) -> Result<ColouredGraph> {
    check(a, decomp)?;
    let o = &decomp.left_points;
    let q = &decomp.right_points;
    let factor = factor_invariants(&decomp.left, &decomp.left_kernel)?;
    let adjacent = !is_elementary_abelian_2_factors(&factor);
    if adjacent && is_z3_squared(&decomp.left)? && is_z3_squared(&decomp.right)? {
        return z3_squared_pair(a, o, q);
    }

    let g1 = represent_regular_plus(&decomp.left)?;
    let g2 = represent_regular_plus(&decomp.right)?;
    let mut joins = vec![(coset_join(a, o, q[0]), 1)];
    if adjacent {
        let x0 = o[0];
        let kernel_orbit = a.pointwise_stabilizer(q).orbit_of(x0).to_vec();
        let x = a
            .elements()
            .iter()
            .find(|s| !kernel_orbit.contains(&s.apply(s.apply(x0))))
            .ok_or_else(|| Error::Verification("adjacent orbits with no element of order > 2 modulo the kernel".into()))?;
        joins.push((coset_join(a, o, x.apply(q[0])), 2));
    }
    assemble(a, false, [(&g1, o), (&g2, q)], &joins)?.ok_or_else(|| {
        Error::Verification(format!(
            "no colour relabelling represents the two-orbit group of order {}",
            a.order()
        ))
    })
}

fn check(a: &PermGroup, decomp: &SubdirectDecomposition) -> Result<()> {
    if a.orbits().len() != 2 {
        return Err(Error::domain(format!(
            "expected a group with two orbits, found {}",
            a.orbits().len()
        )));
    }
    if a.is_trivial() {
        return Err(Error::domain("the trivial group on two points has no graph"));
    }
    let mut first = a.orbits()[0].clone();
    first.sort_unstable();
    let mut second = a.orbits()[1].clone();
    second.sort_unstable();
    if decomp.left_points != first && decomp.left_points != second {
        return Err(Error::domain("decomposition does not split along an orbit"));
    }
    let s = orbit_structure(a)?;
    for i in 0..2 {
        if s.star_factor_elementary_abelian_2(i) && !s.constituents[i].is_elementary_abelian_2() {
            return Err(Error::domain(format!(
                "orbit {} has an elementary abelian 2 star factor but a constituent that is not",
                i + 1
            )));
        }
    }
    Ok(())
}

fn is_z3_squared(g: &PermGroup) -> Result<bool> {
    Ok(g.degree() == 9 && factor_invariants(g, &PermGroup::trivial(9))? == [3, 3])
}

/// `g₁^x g₂^y p` for the nine points of a `Z3²` grid.
fn grid(g1: &Permutation, g2: &Permutation, p: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(9);
    for x in 0..3 {
        for y in 0..3 {
            out.push(g1.pow(x).compose(&g2.pow(y)).apply(p));
        }
    }
    out
}

/// Two `Z3²` orbits with kernel `Z3` or trivial kernel: moves the matching
/// catalogue graph onto coordinates adapted to `A`.
fn z3_squared_pair(a: &PermGroup, o: &[usize], q: &[usize]) -> Result<ColouredGraph> {
    let (x0, z0) = (o[0], q[0]);
    let first = |group: &PermGroup| group.elements().iter().find(|e| !e.is_identity()).cloned();
    let left_kernel = a.pointwise_stabilizer(q);
    let (name, left, right) = match first(&left_kernel) {
        Some(g1) => {
            let h1 = first(&a.pointwise_stabilizer(o))
                .ok_or_else(|| Error::Verification("kernels of different orders".into()))?;
            let k_orbit = left_kernel.orbit_of(x0);
            let s = a
                .elements()
                .iter()
                .find(|s| !k_orbit.contains(&s.apply(x0)))
                .expect("constituent larger than kernel");
            // the right kernel sits on the diagonal 12: xy = x·12 + (x+y)·01
            let right = (0..9)
                .map(|i| {
                    let (x, y) = (i as u64 / 3, i as u64 % 3);
                    h1.pow(x).compose(&s.pow((x + y) % 3)).apply(z0)
                })
                .collect();
            ("fig3", grid(&g1, s, x0), right)
        }
        None => {
            let s1 = first(a).expect("nontrivial");
            let span: Vec<usize> = (0..3).map(|k| s1.pow(k).apply(x0)).collect();
            let s2 = a
                .elements()
                .iter()
                .find(|s| !span.contains(&s.apply(x0)))
                .expect("order 9");
            ("z3_2_par", grid(&s1, s2, x0), grid(&s1, s2, z0))
        }
    };
    let entry = catalogue_entry(name)?;
    let f = Permutation::from_images(left.into_iter().chain(right).collect())?;
    verified(entry.graph.relabel_vertices(&f), a)
}
