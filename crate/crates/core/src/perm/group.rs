use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::limits;

use super::Permutation;

/// A permutation group given by generators, with its full element list.
///
/// Elements are enumerated eagerly at construction and bounded by
/// [`limits::element_cap`]. The element list always starts with the
/// identity; the orbit partition is sorted by least point.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    orbits: Vec<Vec<usize>>,
}

impl PermGroup {
    /// Closure of the generators under composition.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_capped(degree, generators, limits::element_cap())
    }

    pub fn from_generators_capped(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::domain(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let elements = close(degree, &gens, cap)?;
        Ok(Self::assemble(degree, gens, elements))
    }

    /// Group from a composition-closed element list; a small generating set
    /// is chosen greedily in list order.
    pub(crate) fn from_closed_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let mut have: HashSet<Permutation> = HashSet::new();
        have.insert(Permutation::identity(degree));
        let mut gens = Vec::new();
        for e in &elements {
            if have.contains(e) {
                continue;
            }
            gens.push(e.clone());
            have = close(degree, &gens, usize::MAX)
                .expect("uncapped closure")
                .into_iter()
                .collect();
        }
        debug_assert_eq!(have.len(), elements.len(), "element list was not closed");
        let ordered = close(degree, &gens, usize::MAX).expect("uncapped closure");
        Self::assemble(degree, gens, ordered)
    }

    fn assemble(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let orbits = orbits_of(degree, &generators);
        PermGroup {
            degree,
            generators,
            elements,
            index,
            orbits,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::assemble(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    /// The full symmetric group, generated by a transposition and an n-cycle.
    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[vec![0, 1]])?);
            gens.push(Permutation::from_cycles(degree, &[(0..degree).collect()])?);
        }
        Self::from_generators(degree, gens)
    }

    /// The alternating group, generated by the 3-cycles `(1 2 k)`.
    pub fn alternating(degree: usize) -> Result<Self> {
        let gens = (2..degree)
            .map(|k| Permutation::from_cycles(degree, &[vec![0, 1, k]]))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(degree, gens)
    }

    /// `C_n`, generated by the n-cycle `(1 2 … n)`.
    pub fn cyclic(degree: usize) -> Result<Self> {
        let gens = if degree >= 2 {
            vec![Permutation::from_cycles(degree, &[(0..degree).collect()])?]
        } else {
            Vec::new()
        };
        Self::from_generators(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() <= 1
    }

    /// Index of the orbit containing `point`.
    pub fn orbit_index(&self, point: usize) -> usize {
        self.orbits
            .iter()
            .position(|o| o.contains(&point))
            .expect("point out of range")
    }

    /// True iff all generator pairs commute.
    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..].iter().all(|b| a.commutes_with(b))
        })
    }

    /// Abelian with every generator squaring to the identity; the trivial
    /// group qualifies.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.is_abelian()
            && self
                .generators
                .iter()
                .all(|g| g.compose(g).is_identity())
    }

    /// Equality of element sets: same order, then generator membership both ways.
    pub fn equals(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.generators.iter().all(|g| self.contains(g))
            && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && other.order().is_multiple_of(self.order())
            && self.generators.iter().all(|g| other.contains(g))
    }

    /// True if `points` is a union of orbits.
    pub fn is_union_of_orbits(&self, points: &[usize]) -> bool {
        let mut inside = vec![false; self.degree];
        for &p in points {
            if p >= self.degree {
                return false;
            }
            inside[p] = true;
        }
        self.orbits
            .iter()
            .all(|o| o.iter().all(|&p| inside[p]) || o.iter().all(|&p| !inside[p]))
    }

    /// The constituent on a union of orbits, re-indexed to `0..points.len()`
    /// in increasing point order.
    pub fn restriction(&self, points: &[usize]) -> Result<PermGroup> {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if !self.is_union_of_orbits(&pts) {
            return Err(Error::domain("restriction: point set is not a union of orbits"));
        }
        let mut seen = HashSet::new();
        let mut elements = Vec::new();
        for e in &self.elements {
            let r = e.restrict(&pts).expect("orbit union is invariant");
            if seen.insert(r.clone()) {
                elements.push(r);
            }
        }
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| g.restrict(&pts).expect("orbit union is invariant"))
            .filter(|g| !g.is_identity())
            .collect();
        let mut gens_dedup = Vec::new();
        for g in gens {
            if !gens_dedup.contains(&g) {
                gens_dedup.push(g);
            }
        }
        Ok(Self::assemble(pts.len(), gens_dedup, elements))
    }

    /// Subgroup fixing every point of `points`, on the full degree.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|e| points.iter().all(|&p| e.apply(p) == p))
            .cloned()
            .collect();
        Self::from_closed_elements(self.degree, elements)
    }

    /// Subgroup generated by a subset of elements of this group.
    pub fn subgroup(&self, generators: Vec<Permutation>) -> Result<PermGroup> {
        for g in &generators {
            if !self.contains(g) {
                return Err(Error::domain(format!("{g} is not an element of the group")));
            }
        }
        Self::from_generators(self.degree, generators)
    }

    /// The group `{f∘g∘f⁻¹}`: the same action with point `x` renamed `f(x)`.
    pub fn conjugate(&self, f: &Permutation) -> PermGroup {
        let fi = f.inverse();
        let conj = |g: &Permutation| f.compose(g).compose(&fi);
        let generators = self.generators.iter().map(conj).collect();
        let elements = self.elements.iter().map(conj).collect();
        Self::assemble(self.degree, generators, elements)
    }

    /// Orbit of a point under the group.
    pub fn orbit_of(&self, point: usize) -> &[usize] {
        &self.orbits[self.orbit_index(point)]
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {}, gens [", self.degree, self.order())?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

/// Breadth-first closure from the identity; elements come out in BFS order.
fn close(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let next = e.compose(g);
            if !seen.contains(&next) {
                if elements.len() >= cap {
                    return Err(Error::Capacity {
                        what: "group element enumeration".into(),
                        cap,
                    });
                }
                seen.insert(next.clone());
                elements.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(elements)
}

/// Orbits under the generators by union-find, sorted by least point.
pub(crate) fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..degree {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); degree];
    for x in 0..degree {
        let r = find(&mut parent, x);
        by_root[r].push(x);
    }
    by_root.into_iter().filter(|o| !o.is_empty()).collect()
}
