//! The 2-closure, 2*-closure and 2-orbit-closure of a permutation group.

use std::collections::HashSet;

use crate::autgrp::{aut_equals, automorphism_group};
use crate::cgraph::{orb_digraph, orb_graph};
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{PermGroup, Permutation};

/// `Aut(Orb(G))`, the largest group with the same orbitals as `G`.
pub fn two_closure(g: &PermGroup) -> Result<PermGroup> {
    automorphism_group(&orb_digraph(g))
}

/// `Aut(Orb*(G))`, the largest group with the same orbits on unordered pairs.
pub fn two_star_closure(g: &PermGroup) -> Result<PermGroup> {
    automorphism_group(&orb_graph(g))
}

pub fn is_2_closed(g: &PermGroup) -> Result<bool> {
    aut_equals(&orb_digraph(g), g)
}

pub fn is_2_star_closed(g: &PermGroup) -> Result<bool> {
    aut_equals(&orb_graph(g), g)
}

/// True iff `s` fixes every orbit of `G` setwise and agrees with some
/// element of `G` on each union of two orbits. For a transitive group this
/// is membership.
pub fn two_orbit_compatible(g: &PermGroup, s: &Permutation) -> Result<bool> {
    if s.degree() != g.degree() {
        return Err(Error::domain(format!(
            "permutation has degree {}, group has degree {}",
            s.degree(),
            g.degree()
        )));
    }
    let orbits = g.orbits();
    if !orbits.iter().all(|o| s.preserves_set(o)) {
        return Ok(false);
    }
    if orbits.len() <= 1 {
        return Ok(g.contains(s));
    }
    for i in 0..orbits.len() {
        for j in i + 1..orbits.len() {
            let mut pts: Vec<usize> = orbits[i].iter().chain(&orbits[j]).copied().collect();
            pts.sort_unstable();
            let target = s.restrict(&pts).expect("orbits preserved");
            if !g.elements().iter().any(|e| e.restrict(&pts).as_ref() == Some(&target)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Per-orbit constituents and the pairs of constituent elements that occur
/// together in `G`.
struct Assembly {
    orbits: Vec<Vec<usize>>,
    constituents: Vec<Vec<Permutation>>,
    /// allowed[i][j][a * |A_j| + b]: element a of A_i and b of A_j occur in
    /// one element of G
    allowed: Vec<Vec<Vec<bool>>>,
}

impl Assembly {
    fn new(g: &PermGroup) -> Result<Assembly> {
        let orbits: Vec<Vec<usize>> = g
            .orbits()
            .iter()
            .map(|o| {
                let mut o = o.clone();
                o.sort_unstable();
                o
            })
            .collect();
        let r = orbits.len();
        let mut constituents = Vec::with_capacity(r);
        let mut index_of = Vec::with_capacity(r);
        for o in &orbits {
            let a = g.restriction(o)?;
            // position of each element of G's restriction in A_i
            let idx: Vec<usize> = g
                .elements()
                .iter()
                .map(|e| a.element_index(&e.restrict(o).expect("orbit")).expect("restriction"))
                .collect();
            index_of.push(idx);
            constituents.push(a.elements().to_vec());
        }
        let mut allowed = vec![vec![Vec::new(); r]; r];
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let m = constituents[j].len();
                let mut table = vec![false; constituents[i].len() * m];
                for e in 0..g.order() {
                    table[index_of[i][e] * m + index_of[j][e]] = true;
                }
                allowed[i][j] = table;
            }
        }
        Ok(Assembly {
            orbits,
            constituents,
            allowed,
        })
    }

    /// All compatible choices of one constituent element per orbit; stops
    /// once `stop` assemblies are found.
    fn run(&self, stop: usize) -> Result<Vec<Vec<usize>>> {
        let r = self.orbits.len();
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.orbits[i].len()), i));
        let mut out = Vec::new();
        let mut choice = vec![0; r];
        let mut visited = 0usize;
        self.extend(&order, 0, &mut choice, &mut out, stop, &mut visited)?;
        Ok(out)
    }

    fn extend(
        &self,
        order: &[usize],
        depth: usize,
        choice: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        stop: usize,
        visited: &mut usize,
    ) -> Result<()> {
        if out.len() >= stop {
            return Ok(());
        }
        if depth == order.len() {
            out.push(choice.clone());
            return Ok(());
        }
        let i = order[depth];
        for a in 0..self.constituents[i].len() {
            *visited += 1;
            if *visited > limits::DEFAULT_ASSEMBLY_CAP {
                return Err(Error::Capacity {
                    what: "2-orbit-closure assembly".into(),
                    cap: limits::DEFAULT_ASSEMBLY_CAP,
                });
            }
            let m = self.constituents[i].len();
            let ok = order[..depth]
                .iter()
                .all(|&j| self.allowed[j][i][choice[j] * m + a]);
            if ok {
                choice[i] = a;
                self.extend(order, depth + 1, choice, out, stop, visited)?;
                if out.len() >= stop {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    fn permutation(&self, degree: usize, choice: &[usize]) -> Permutation {
        let mut images: Vec<usize> = (0..degree).collect();
        for (o, (pts, &c)) in self.orbits.iter().zip(choice).enumerate() {
            let a = &self.constituents[o][c];
            for (k, &p) in pts.iter().enumerate() {
                images[p] = pts[a.apply(k)];
            }
        }
        Permutation::from_images(images).expect("orbitwise bijection")
    }
}

/// The group of all permutations 2-orbit-compatible with `G`, assembled
/// orbit by orbit from the constituents.
pub fn two_orbit_closure(g: &PermGroup) -> Result<PermGroup> {
    if g.orbits().len() <= 2 {
        return Ok(g.clone());
    }
    let asm = Assembly::new(g)?;
    let cap = limits::element_cap();
    let choices = asm.run(cap.saturating_add(1))?;
    if choices.len() > cap {
        return Err(Error::Capacity {
            what: "2-orbit-closure enumeration".into(),
            cap,
        });
    }
    let mut elements: Vec<Permutation> = Vec::with_capacity(choices.len());
    let mut seen = HashSet::new();
    for c in &choices {
        let p = asm.permutation(g.degree(), c);
        if seen.insert(p.clone()) {
            elements.push(p);
        }
    }
    let id = Permutation::identity(g.degree());
    let pos = elements.iter().position(|e| *e == id).expect("identity assembles");
    elements.swap(0, pos);
    Ok(PermGroup::from_closed_elements(g.degree(), elements))
}

/// True iff every 2-orbit-compatible permutation lies in `G`.
pub fn is_2_orbit_closed(g: &PermGroup) -> Result<bool> {
    if g.orbits().len() <= 2 {
        return Ok(true);
    }
    let asm = Assembly::new(g)?;
    Ok(asm.run(g.order() + 1)?.len() == g.order())
}
