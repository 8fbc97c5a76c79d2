use crate::error::{Error, Result};
use crate::perm::PermGroup;

use super::factor::{factor_invariants, is_elementary_abelian_2_factors};

/// Constituents, kernels and the adjacency relation between orbits of an
/// abelian group.
///
/// `A_i` is the restriction to orbit `X_i`; `A_i^j` the restriction to `X_i`
/// of the pointwise stabilizer of `X_j`; `A_i^*` the restriction to `X_i` of
/// the pointwise stabilizer of everything outside `X_i`. Orbits `i` and `j`
/// are adjacent when `A_i/A_i^j` is not an elementary abelian 2-group.
#[derive(Debug, Clone)]
pub struct OrbitStructure {
    pub orbits: Vec<Vec<usize>>,
    pub constituents: Vec<PermGroup>,
    /// `pair_kernels[i][j]` is `A_i^j`; the diagonal holds `A_i`.
    pub pair_kernels: Vec<Vec<PermGroup>>,
    pub star_kernels: Vec<PermGroup>,
    /// Invariant factors of `A_i/A_i^j`; empty on the diagonal.
    pub pair_factor_invariants: Vec<Vec<Vec<usize>>>,
    pub adjacency: Vec<Vec<bool>>,
    pub isolated: Vec<bool>,
    /// Invariant factors of `A_i/A_i^*`.
    pub factor_invariants: Vec<Vec<usize>>,
}

pub fn orbit_structure(a: &PermGroup) -> Result<OrbitStructure> {
    if !a.is_abelian() {
        return Err(Error::domain("orbit structure needs an abelian group"));
    }
    let orbits: Vec<Vec<usize>> = a
        .orbits()
        .iter()
        .map(|o| {
            let mut o = o.clone();
            o.sort_unstable();
            o
        })
        .collect();
    let r = orbits.len();
    let constituents = orbits
        .iter()
        .map(|o| a.restriction(o))
        .collect::<Result<Vec<_>>>()?;
    let stabilizers: Vec<PermGroup> = orbits.iter().map(|o| a.pointwise_stabilizer(o)).collect();
    let mut pair_kernels = Vec::with_capacity(r);
    let mut pair_factor_invariants = Vec::with_capacity(r);
    let mut adjacency = vec![vec![false; r]; r];
    for i in 0..r {
        let mut row = Vec::with_capacity(r);
        let mut inv_row = Vec::with_capacity(r);
        for j in 0..r {
            if i == j {
                row.push(constituents[i].clone());
                inv_row.push(Vec::new());
                continue;
            }
            let k = stabilizers[j].restriction(&orbits[i])?;
            let inv = factor_invariants(&constituents[i], &k)?;
            adjacency[i][j] = !is_elementary_abelian_2_factors(&inv);
            row.push(k);
            inv_row.push(inv);
        }
        pair_kernels.push(row);
        pair_factor_invariants.push(inv_row);
    }
    let mut star_kernels = Vec::with_capacity(r);
    let mut star_invariants = Vec::with_capacity(r);
    for (i, o) in orbits.iter().enumerate() {
        let outside: Vec<usize> = (0..a.degree()).filter(|p| o.binary_search(p).is_err()).collect();
        let k = a.pointwise_stabilizer(&outside).restriction(o)?;
        star_invariants.push(factor_invariants(&constituents[i], &k)?);
        star_kernels.push(k);
    }
    let isolated = adjacency.iter().map(|row| row.iter().all(|&x| !x)).collect();
    Ok(OrbitStructure {
        orbits,
        constituents,
        pair_kernels,
        star_kernels,
        pair_factor_invariants,
        adjacency,
        isolated,
        factor_invariants: star_invariants,
    })
}

impl OrbitStructure {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> Result<bool> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(Error::domain("adjacency is defined for distinct orbits"));
        }
        Ok(self.adjacency[i][j])
    }

    pub fn isolated(&self, i: usize) -> Result<bool> {
        self.check(i)?;
        Ok(self.isolated[i])
    }

    /// `A_i/A_i^*` is an elementary abelian 2-group.
    pub fn star_factor_elementary_abelian_2(&self, i: usize) -> bool {
        is_elementary_abelian_2_factors(&self.factor_invariants[i])
    }

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.orbits.len() {
            return Err(Error::domain(format!(
                "orbit index {} out of range 1..={}",
                i + 1,
                self.orbits.len()
            )));
        }
        Ok(())
    }
}

/// Adjacency of orbits `i` and `j` (0-based) of `A`.
pub fn adjacent(a: &PermGroup, i: usize, j: usize) -> Result<bool> {
    orbit_structure(a)?.adjacent(i, j)
}

/// True iff orbit `i` (0-based) of `A` is adjacent to no other orbit.
pub fn isolated(a: &PermGroup, i: usize) -> Result<bool> {
    orbit_structure(a)?.isolated(i)
}
