use crate::error::{Error, Result};
use crate::perm::regular::{involution, mixed_radix_index, parse_tuple_label, require_regular_abelian};
use crate::perm::{PermGroup, Permutation};

use super::ColouredGraph;

/// A partition `Π` of a set `S` of connection elements of a regular abelian
/// group. Elements are named by the point they send point 0 to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourPartition {
    pub blocks: Vec<Vec<usize>>,
    pub group_degree: usize,
}

impl ColourPartition {
    /// Checks the blocks against `a`: disjoint, nonempty, no identity, at
    /// most one of each `{g, g⁻¹}`, and some pair left out.
    pub fn new(a: &PermGroup, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let alpha = involution(a)?;
        let n = a.degree();
        let mut covered = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::domain("empty block in colour partition"));
            }
            for &d in b {
                if d >= n {
                    return Err(Error::domain(format!("element {} out of range", d + 1)));
                }
                if d == 0 {
                    return Err(Error::domain("colour partition contains the identity"));
                }
                if covered[d] {
                    return Err(Error::domain(format!(
                        "element {} or its inverse appears twice",
                        d + 1
                    )));
                }
                covered[d] = true;
                covered[alpha.apply(d)] = true;
            }
        }
        if covered.iter().skip(1).all(|&c| c) {
            return Err(Error::domain("colour partition leaves no pair for colour 0"));
        }
        Ok(ColourPartition {
            blocks,
            group_degree: n,
        })
    }

    /// Blocks given by element labels of `Z_{k1} × … × Z_{km}` such as
    /// `"10"`, for use with [`crate::perm::regular_group`].
    pub fn from_labels(a: &PermGroup, orders: &[usize], blocks: &[&[&str]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|l| parse_tuple_label(orders, l).map(|t| mixed_radix_index(orders, &t)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(a, blocks)
    }
}

/// The element of a regular group mapping 0 to `x`, indexed by `x`.
pub(crate) fn translations(a: &PermGroup) -> Vec<Permutation> {
    let mut by_point = vec![None; a.degree()];
    for e in a.elements() {
        by_point[e.apply(0)] = Some(e.clone());
    }
    by_point.into_iter().map(|e| e.expect("regular")).collect()
}

/// `Cay*(A; Π)`: edge `{x, y}` gets colour `i + 1` when `x⁻¹y` or its
/// inverse lies in block `i`, and colour 0 otherwise.
pub fn cayley_star(a: &PermGroup, pi: &ColourPartition) -> Result<ColouredGraph> {
    require_regular_abelian(a)?;
    if pi.group_degree != a.degree() {
        return Err(Error::domain("colour partition belongs to a group of another degree"));
    }
    let alpha = involution(a)?;
    let n = a.degree();
    let mut block_of = vec![0u32; n];
    for (i, b) in pi.blocks.iter().enumerate() {
        for &d in b {
            block_of[d] = i as u32 + 1;
            block_of[alpha.apply(d)] = i as u32 + 1;
        }
    }
    let inv: Vec<Permutation> = translations(a).iter().map(|g| g.inverse()).collect();
    ColouredGraph::from_fn(false, n, |x, y| block_of[inv[x].apply(y)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cgraph::orb_graph;
    use crate::perm::regular_group;

    fn cay(orders: &[usize], blocks: &[&[&str]]) -> ColouredGraph {
        let a = regular_group(orders).unwrap();
        let pi = ColourPartition::from_labels(&a, orders, blocks).unwrap();
        cayley_star(&a, &pi).unwrap()
    }

    #[test]
    fn klein_three_colours() {
        let g = cay(&[2, 2], &[&["10"], &["01"]]);
        assert_eq!((g.n(), g.colour_count()), (4, 3));
        for v in 0..4 {
            assert_eq!(g.colour_degree_tuple(v), vec![1, 1, 1]);
        }
    }

    #[test]
    fn z2_4_cayley_shape() {
        let g = cay(&[2, 2, 2, 2], &[&["1000"], &["0100", "1010"], &["0010", "0001"]]);
        assert_eq!((g.n(), g.colour_count()), (16, 4));
        assert_eq!(g.colour_degree_tuple(0), vec![10, 1, 2, 2]);
        // 0000 -- 1010 is in the 0100 block
        assert_eq!(g.colour(0, 10), 2);
    }

    #[test]
    fn z3_squared_four_colours() {
        let g = cay(&[3, 3], &[&["10"], &["01"], &["11"]]);
        assert_eq!((g.n(), g.colour_count()), (9, 4));
        assert_eq!(g.colour_degree_tuple(4), vec![2, 2, 2, 2]);
    }

    #[test]
    fn merge_of_orbit_graph() {
        // every colour class of Cay* is a union of classes of Orb*(A)
        let a = regular_group(&[2, 2, 2, 2]).unwrap();
        let g = cay(&[2, 2, 2, 2], &[&["1000"], &["0100", "1010"], &["0010", "0001"]]);
        let o = orb_graph(&a);
        let mut map = vec![None; o.colour_count()];
        for u in 0..16 {
            for v in u + 1..16 {
                let c = o.colour(u, v) as usize;
                assert!(map[c].is_none() || map[c] == Some(g.colour(u, v)));
                map[c] = Some(g.colour(u, v));
            }
        }
        let map: Vec<u32> = map.into_iter().map(Option::unwrap).collect();
        assert_eq!(o.merge_colours(&map).unwrap(), g);
    }

    #[test]
    fn partition_validation() {
        let a = regular_group(&[4]).unwrap();
        assert!(ColourPartition::from_labels(&a, &[4], &[&["0"]]).is_err());
        assert!(ColourPartition::from_labels(&a, &[4], &[&["1"], &["3"]]).is_err());
        assert!(ColourPartition::from_labels(&a, &[4], &[&["1"], &["2"]]).is_err());
        assert!(ColourPartition::from_labels(&a, &[4], &[&["1"]]).is_ok());
    }
}
