//! Exhaustive and sampled searches over colour merges of orbital graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::autgrp::aut_equals;
use crate::cgraph::{orb_digraph, orb_graph, ColouredGraph};
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::PermGroup;

/// The off-diagonal orbital classes of `G` as a class index per ordered
/// pair (`u32::MAX` on the diagonal) plus the class count.
struct Classes {
    directed: bool,
    n: usize,
    class: Vec<u32>,
    count: usize,
}

impl Classes {
    fn new(g: &PermGroup, directed: bool) -> Classes {
        let base = if directed { orb_digraph(g) } else { orb_graph(g) };
        let n = g.degree();
        let mut renumber = vec![u32::MAX; base.colour_count()];
        let mut count = 0u32;
        let mut class = vec![u32::MAX; n * n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let c = base.colour(u, v) as usize;
                if renumber[c] == u32::MAX {
                    renumber[c] = count;
                    count += 1;
                }
                class[u * n + v] = renumber[c];
            }
        }
        Classes {
            directed,
            n,
            class,
            count: count as usize,
        }
    }

    /// The merged graph; the diagonal is colour 0.
    fn graph(&self, blocks: &[u32]) -> ColouredGraph {
        let colours = self
            .class
            .iter()
            .map(|&c| if c == u32::MAX { 0 } else { blocks[c as usize] })
            .collect();
        ColouredGraph::new(self.directed, self.n, colours).expect("restricted-growth blocks have no gaps")
    }
}

/// Stirling numbers of the second kind `S(m, j)` for `j ≤ k`, summed:
/// the number of partitions of `m` classes into at most `k` blocks.
pub fn partition_count(m: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for _ in 0..m {
        for j in (1..=k).rev() {
            row[j] = row[j].saturating_mul(j as u128).saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

/// Calls `visit` on every restricted-growth string of length `m` with
/// values below `k`, in lexicographic order, until it returns true.
fn restricted_growth(m: usize, k: usize, mut visit: impl FnMut(&[u32]) -> Result<bool>) -> Result<bool> {
    if m == 0 {
        return visit(&[]);
    }
    if k == 0 {
        return Ok(false);
    }
    let mut s = vec![0u32; m];
    // prefix maxima: max[i] = max(s[0..=i])
    let mut max = vec![0u32; m];
    loop {
        if visit(&s)? {
            return Ok(true);
        }
        // increment the rightmost position that can still grow
        let mut i = m - 1;
        loop {
            if i == 0 {
                return Ok(false);
            }
            let bound = max[i - 1] + 1;
            if s[i] < bound && (s[i] as usize) + 1 < k {
                s[i] += 1;
                max[i] = max[i - 1].max(s[i]);
                for j in i + 1..m {
                    s[j] = 0;
                    max[j] = max[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// The first merge of `Orb(G)` (directed) or `Orb*(G)` (undirected) into at
/// most `k` colours whose automorphism group is exactly `G`.
///
/// Merges are visited as restricted-growth strings over the off-diagonal
/// classes, numbered by least pair, so the first class always has colour 0.
/// `None` means no such merge exists. Fails with a search-limit error when
/// the number of merges exceeds the partition guard.
pub fn colour_merge_search(g: &PermGroup, directed: bool, k: usize) -> Result<Option<ColouredGraph>> {
    let classes = Classes::new(g, directed);
    let total = partition_count(classes.count, k);
    if total > limits::DEFAULT_PARTITION_GUARD as u128 {
        return Err(Error::SearchLimit(format!(
            "{total} merges of {} orbital classes into at most {k} colours",
            classes.count
        )));
    }
    let mut found = None;
    restricted_growth(classes.count, k, |blocks| {
        let candidate = classes.graph(blocks);
        if aut_equals(&candidate, g)? {
            found = Some(candidate);
            return Ok(true);
        }
        Ok(false)
    })?;
    Ok(found)
}

/// The least number of colours in a merge of the orbital graph representing
/// `G`, or `None` when no merge does.
pub fn min_colour_count(g: &PermGroup, directed: bool) -> Result<Option<usize>> {
    let classes = Classes::new(g, directed).count;
    for k in 1..=classes.max(1) {
        if colour_merge_search(g, directed, k)?.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Seeded random merges into exactly `k` colours, for groups whose merge
/// space is too large to enumerate.
pub fn sampled_merge_search(
    g: &PermGroup,
    directed: bool,
    k: usize,
    tries: usize,
    seed: u64,
) -> Result<Option<ColouredGraph>> {
    let classes = Classes::new(g, directed);
    if classes.count < k || k == 0 {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tries {
        let mut blocks: Vec<u32> = (0..classes.count).map(|_| rng.gen_range(0..k as u32)).collect();
        // renumber by first occurrence so colours have no gaps
        let mut seen = vec![u32::MAX; k];
        let mut next = 0;
        for b in blocks.iter_mut() {
            if seen[*b as usize] == u32::MAX {
                seen[*b as usize] = next;
                next += 1;
            }
            *b = seen[*b as usize];
        }
        let candidate = classes.graph(&blocks);
        if aut_equals(&candidate, g)? {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}
