use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;

use crate::cgraph::ColouredGraph;
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{PermGroup, Permutation};

/// An ordered partition of the vertices with the hash of the refinement
/// steps that produced it.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
    trace: u64,
}

impl Partition {
    fn from_cells(n: usize, cells: Vec<Vec<usize>>, trace: u64) -> Self {
        let mut cell_of = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        Partition { cells, cell_of, trace }
    }

    /// Vertices split by loop colour, in colour order.
    pub fn initial(g: &ColouredGraph) -> Self {
        let n = g.n();
        let mut by_loop: Vec<(u32, usize)> = (0..n).map(|v| (g.colour(v, v), v)).collect();
        by_loop.sort_unstable();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut h = DefaultHasher::new();
        let mut last = None;
        for (c, v) in by_loop {
            if last != Some(c) {
                cells.push(Vec::new());
                (c, cells.len()).hash(&mut h);
                last = Some(c);
            }
            cells.last_mut().expect("cell").push(v);
        }
        Self::from_cells(n, cells, h.finish())
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    fn shape(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().map(|c| c.len())
    }

    /// Same trace and cell sizes: a necessary condition for an isomorphism
    /// between the two partitions to exist.
    pub fn matches(&self, other: &Partition) -> bool {
        self.trace == other.trace && self.cells.len() == other.cells.len() && self.shape().eq(other.shape())
    }

    /// Smallest non-singleton cell, earliest on ties.
    pub fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    /// Splits `v` off the front of its cell.
    pub fn individualize(&self, v: usize) -> Partition {
        let t = self.cell_of[v];
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..t]);
        cells.push(vec![v]);
        cells.push(self.cells[t].iter().copied().filter(|&x| x != v).collect());
        cells.extend_from_slice(&self.cells[t + 1..]);
        let mut h = DefaultHasher::new();
        (self.trace, "indiv", t).hash(&mut h);
        Self::from_cells(self.cell_of.len(), cells, h.finish())
    }

    /// Refines to an equitable partition: each cell is split by the multiset
    /// of (cell, colour out, colour in) over the other vertices, all cells
    /// at once, until nothing splits.
    pub fn refine(mut self, g: &ColouredGraph) -> Partition {
        let n = g.n();
        let mut h = DefaultHasher::new();
        self.trace.hash(&mut h);
        let mut sig: Vec<Vec<(usize, u32, u32)>> = vec![Vec::new(); n];
        loop {
            for (v, s) in sig.iter_mut().enumerate() {
                s.clear();
                if self.cells[self.cell_of[v]].len() == 1 {
                    continue;
                }
                s.extend(
                    (0..n)
                        .filter(|&u| u != v)
                        .map(|u| (self.cell_of[u], g.colour(v, u), g.colour(u, v))),
                );
                s.sort_unstable();
            }
            let mut cells = Vec::with_capacity(self.cells.len());
            let mut split = false;
            for (i, cell) in self.cells.iter().enumerate() {
                if cell.len() == 1 {
                    cells.push(cell.clone());
                    continue;
                }
                let mut members = cell.clone();
                members.sort_by(|&a, &b| sig[a].cmp(&sig[b]).then(a.cmp(&b)));
                let mut start = 0;
                let mut parts = 0;
                for k in 1..=members.len() {
                    if k == members.len() || sig[members[k]] != sig[members[start]] {
                        (i, k - start).hash(&mut h);
                        sig[members[start]].hash(&mut h);
                        cells.push(members[start..k].to_vec());
                        start = k;
                        parts += 1;
                    }
                }
                split |= parts > 1;
            }
            self = Self::from_cells(n, cells, 0);
            if !split {
                break;
            }
        }
        self.trace = h.finish();
        self
    }
}

/// True iff `p` preserves every colour, loops included.
pub fn is_automorphism(g: &ColouredGraph, p: &Permutation) -> Result<bool> {
    if p.degree() != g.n() {
        return Err(Error::domain(format!(
            "permutation has degree {}, graph has {} vertices",
            p.degree(),
            g.n()
        )));
    }
    Ok(preserves(g, g, p))
}

fn preserves(from: &ColouredGraph, to: &ColouredGraph, p: &Permutation) -> bool {
    let n = from.n();
    (0..n).all(|u| {
        let pu = p.apply(u);
        (0..n).all(|v| from.colour(u, v) == to.colour(pu, p.apply(v)))
    })
}

/// Depth-first search for a map `left → right` extending the cell
/// correspondence of two matching equitable partitions.
fn search_iso(
    gl: &ColouredGraph,
    gr: &ColouredGraph,
    left: &Partition,
    right: &Partition,
) -> Option<Permutation> {
    if left.is_discrete() {
        let mut images = vec![0; gl.n()];
        for (a, b) in left.cells.iter().zip(&right.cells) {
            images[a[0]] = b[0];
        }
        let p = Permutation::from_images(images).expect("cells pair up");
        return preserves(gl, gr, &p).then_some(p);
    }
    let t = left.target_cell().expect("non-discrete");
    let u = *left.cells[t].iter().min().expect("cell");
    let l2 = left.individualize(u).refine(gl);
    let mut candidates = right.cells[t].clone();
    candidates.sort_unstable();
    for w in candidates {
        let r2 = right.individualize(w).refine(gr);
        if l2.matches(&r2) {
            if let Some(p) = search_iso(gl, gr, &l2, &r2) {
                return Some(p);
            }
        }
    }
    None
}

/// Generators of `Aut(Γ)` with the base and basic orbit sizes of the
/// stabilizer chain they came from.
#[derive(Debug, Clone)]
pub struct AutResult {
    pub generators: Vec<Permutation>,
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
}

impl AutResult {
    pub fn order(&self) -> BigUint {
        self.orbit_sizes.iter().map(|&s| BigUint::from(s)).product()
    }

    /// The order if it fits in `usize`.
    pub fn order_usize(&self) -> Option<usize> {
        self.orbit_sizes
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s))
    }
}

fn orbit_labels(n: usize, gens: &[Permutation]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

struct Chain<'a> {
    g: &'a ColouredGraph,
    gens: Vec<Permutation>,
    base: Vec<usize>,
    orbit_sizes: Vec<usize>,
}

impl Chain<'_> {
    /// Fills in the stabilizer chain below `pi`; generators found fix every
    /// vertex individualized on the way to `pi`.
    fn run(&mut self, pi: &Partition) {
        let Some(t) = pi.target_cell() else { return };
        let cell = {
            let mut c = pi.cells[t].clone();
            c.sort_unstable();
            c
        };
        let b = cell[0];
        let pi_b = pi.individualize(b).refine(self.g);
        let level = self.base.len();
        self.base.push(b);
        self.orbit_sizes.push(1);
        self.run(&pi_b);

        let n = self.g.n();
        let mut labels = orbit_labels(n, &self.gens);
        let mut failed: Vec<usize> = Vec::new();
        for &v in &cell[1..] {
            if labels[v] == labels[b] || failed.iter().any(|&f| labels[f] == labels[v]) {
                continue;
            }
            let pi_v = pi.individualize(v).refine(self.g);
            let found = if pi_b.matches(&pi_v) {
                search_iso(self.g, self.g, &pi_b, &pi_v)
            } else {
                None
            };
            match found {
                Some(p) => {
                    self.gens.push(p);
                    labels = orbit_labels(n, &self.gens);
                }
                None => failed.push(v),
            }
        }
        self.orbit_sizes[level] = cell.iter().filter(|&&v| labels[v] == labels[b]).count();
    }
}

fn check_limit(g: &ColouredGraph) -> Result<()> {
    let limit = limits::vertex_limit();
    if g.n() > limit {
        return Err(Error::VertexLimit { n: g.n(), limit });
    }
    Ok(())
}

/// Generators and order of `Aut(Γ)` without enumerating the group.
pub fn automorphism_generators(g: &ColouredGraph) -> Result<AutResult> {
    check_limit(g)?;
    let pi = Partition::initial(g).refine(g);
    let mut chain = Chain {
        g,
        gens: Vec::new(),
        base: Vec::new(),
        orbit_sizes: Vec::new(),
    };
    chain.run(&pi);
    // levels whose orbit is a single point contribute nothing
    let (base, orbit_sizes) = chain
        .base
        .into_iter()
        .zip(chain.orbit_sizes)
        .filter(|&(_, s)| s > 1)
        .unzip();
    Ok(AutResult {
        generators: chain.gens,
        base,
        orbit_sizes,
    })
}

/// `Aut(Γ)` with its elements enumerated; fails if the order exceeds the
/// element cap.
pub fn automorphism_group(g: &ColouredGraph) -> Result<PermGroup> {
    let r = automorphism_generators(g)?;
    let cap = limits::element_cap();
    match r.order_usize() {
        Some(o) if o <= cap => {}
        _ => {
            return Err(Error::Capacity {
                what: format!("automorphism group of order {}", r.order()),
                cap,
            })
        }
    }
    let expected = r.order_usize();
    let group = PermGroup::from_generators(g.n(), r.generators)?;
    debug_assert_eq!(Some(group.order()), expected);
    Ok(group)
}

/// True iff `Aut(Γ)` and `G` have the same elements.
pub fn aut_equals(g: &ColouredGraph, group: &PermGroup) -> Result<bool> {
    if group.degree() != g.n() {
        return Ok(false);
    }
    let r = automorphism_generators(g)?;
    Ok(r.order_usize() == Some(group.order()) && r.generators.iter().all(|p| group.contains(p)))
}

/// A vertex bijection `p` with `colour₂(p(u), p(v)) = colour₁(u, v)`.
pub fn find_isomorphism(g1: &ColouredGraph, g2: &ColouredGraph) -> Result<Option<Permutation>> {
    check_limit(g1)?;
    if g1.n() != g2.n() || g1.is_directed() != g2.is_directed() {
        return Ok(None);
    }
    let a = Partition::initial(g1).refine(g1);
    let b = Partition::initial(g2).refine(g2);
    if !a.matches(&b) {
        return Ok(None);
    }
    Ok(search_iso(g1, g2, &a, &b))
}
