use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::io::GraphJson;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A complete edge-coloured graph or digraph stored as an `n × n` matrix.
///
/// Undirected graphs are symmetric and keep `0` on the diagonal, which is
/// ignored. Directed graphs use the diagonal as loop colours; they act as
/// vertex colours for automorphisms. Colours are `0..colour_count` with no
/// gaps.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphJson", try_from = "GraphJson")]
pub struct ColouredGraph {
    directed: bool,
    n: usize,
    colour_count: usize,
    colours: Vec<u32>,
}

impl ColouredGraph {
    /// Builds a graph from a row-major matrix, checking symmetry and that
    /// the colours used are exactly `0..k`.
    pub fn new(directed: bool, n: usize, mut colours: Vec<u32>) -> Result<Self> {
        if colours.len() != n * n {
            return Err(Error::domain(format!(
                "colour matrix has {} entries, expected {}",
                colours.len(),
                n * n
            )));
        }
        if !directed {
            for u in 0..n {
                colours[u * n + u] = 0;
                for v in u + 1..n {
                    if colours[u * n + v] != colours[v * n + u] {
                        return Err(Error::domain(format!(
                            "undirected colour matrix is not symmetric at ({}, {})",
                            u + 1,
                            v + 1
                        )));
                    }
                }
            }
        }
        let mut used = BTreeSet::new();
        for u in 0..n {
            for v in 0..n {
                if directed || u != v {
                    used.insert(colours[u * n + v]);
                }
            }
        }
        let colour_count = used.len();
        if let Some(&max) = used.iter().next_back() {
            if max as usize + 1 != colour_count {
                let gap = (0..=max).find(|c| !used.contains(c)).unwrap_or(0);
                return Err(Error::domain(format!("colour {gap} is unused but {max} occurs")));
            }
        }
        Ok(ColouredGraph {
            directed,
            n,
            colour_count,
            colours,
        })
    }

    /// Builds a graph from a colouring function on ordered pairs; for
    /// undirected graphs only `u < v` is queried.
    pub fn from_fn(directed: bool, n: usize, mut f: impl FnMut(usize, usize) -> u32) -> Result<Self> {
        let mut colours = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                if directed {
                    colours[u * n + v] = f(u, v);
                } else if u < v {
                    let c = f(u, v);
                    colours[u * n + v] = c;
                    colours[v * n + u] = c;
                }
            }
        }
        Self::new(directed, n, colours)
    }

    pub fn from_rows(directed: bool, rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("colour matrix is not square"));
        }
        Self::new(directed, n, rows.concat())
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of colours in use, loop colours included.
    pub fn colour_count(&self) -> usize {
        self.colour_count
    }

    /// Number of distinct colours on pairs of distinct vertices.
    pub fn edge_colour_count(&self) -> usize {
        let mut used = BTreeSet::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v {
                    used.insert(self.colour(u, v));
                }
            }
        }
        used.len()
    }

    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> u32 {
        self.colours[u * self.n + v]
    }

    pub fn matrix(&self) -> &[u32] {
        &self.colours
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.colours.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    /// Recolours through `map`, which must be onto `0..k'`.
    pub fn merge_colours(&self, map: &[u32]) -> Result<ColouredGraph> {
        if map.len() != self.colour_count {
            return Err(Error::domain(format!(
                "merge map has {} entries for {} colours",
                map.len(),
                self.colour_count
            )));
        }
        let image: BTreeSet<u32> = map.iter().copied().collect();
        if image.iter().enumerate().any(|(i, &c)| i as u32 != c) {
            return Err(Error::domain("merge map is not onto an initial range of colours"));
        }
        let colours = self.colours.iter().map(|&c| map[c as usize]).collect();
        Self::new(self.directed, self.n, colours)
    }

    /// The graph `Γ^p` with `colour(p(u), p(v)) = colour(u, v)`.
    pub fn relabel_vertices(&self, p: &Permutation) -> ColouredGraph {
        assert_eq!(p.degree(), self.n, "degree mismatch in relabel_vertices");
        let n = self.n;
        let mut colours = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                colours[p.apply(u) * n + p.apply(v)] = self.colour(u, v);
            }
        }
        ColouredGraph {
            directed: self.directed,
            n,
            colour_count: self.colour_count,
            colours,
        }
    }

    /// Count of out-neighbours per colour, loops excluded.
    pub fn colour_degree_tuple(&self, v: usize) -> Vec<usize> {
        let mut t = vec![0; self.colour_count];
        for u in (0..self.n).filter(|&u| u != v) {
            t[self.colour(v, u) as usize] += 1;
        }
        t
    }

    /// Count of in-neighbours per colour, loops excluded.
    pub fn in_colour_degree_tuple(&self, v: usize) -> Vec<usize> {
        let mut t = vec![0; self.colour_count];
        for u in (0..self.n).filter(|&u| u != v) {
            t[self.colour(u, v) as usize] += 1;
        }
        t
    }

    /// Induced subgraph on `vertices`, in the order listed. Colours keep
    /// their numbers, so the result may have gaps closed by renumbering.
    pub fn induced(&self, vertices: &[usize]) -> Result<ColouredGraph> {
        let m = vertices.len();
        let mut colours = vec![0; m * m];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                colours[i * m + j] = self.colour(u, v);
            }
        }
        let mut used: Vec<u32> = colours.clone();
        if !self.directed {
            for i in 0..m {
                used[i * m + i] = u32::MAX;
            }
        }
        let mut distinct: Vec<u32> = used.into_iter().filter(|&c| c != u32::MAX).collect();
        distinct.sort_unstable();
        distinct.dedup();
        for c in colours.iter_mut() {
            *c = distinct.binary_search(c).map(|i| i as u32).unwrap_or(0);
        }
        Self::new(self.directed, m, colours)
    }

    /// True if the vertices are connected using only edges whose colour is
    /// in `palette` (arcs read in either direction).
    pub fn is_connected_in(&self, palette: &[u32]) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if !seen[v]
                    && (palette.contains(&self.colour(u, v)) || palette.contains(&self.colour(v, u)))
                {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl std::fmt::Debug for ColouredGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "ColouredGraph({}, n = {}, {} colours)",
            if self.directed { "directed" } else { "undirected" },
            self.n,
            self.colour_count
        )?;
        for r in self.rows() {
            let r: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  {}", r.join(" "))?;
        }
        Ok(())
    }
}
