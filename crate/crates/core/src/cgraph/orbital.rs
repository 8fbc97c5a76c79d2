use crate::perm::PermGroup;

use super::ColouredGraph;

const UNSET: u32 = u32::MAX;

/// `Orb(G)`: ordered pairs coloured by their orbital, diagonal included.
/// Colours are numbered by least pair in lexicographic order.
pub fn orb_digraph(g: &PermGroup) -> ColouredGraph {
    let n = g.degree();
    let mut colours = vec![UNSET; n * n];
    let mut next = 0;
    for u in 0..n {
        for v in 0..n {
            if colours[u * n + v] != UNSET {
                continue;
            }
            colours[u * n + v] = next;
            let mut stack = vec![(u, v)];
            while let Some((a, b)) = stack.pop() {
                for p in g.generators() {
                    let (x, y) = (p.apply(a), p.apply(b));
                    if colours[x * n + y] == UNSET {
                        colours[x * n + y] = next;
                        stack.push((x, y));
                    }
                }
            }
            next += 1;
        }
    }
    ColouredGraph::new(true, n, colours).expect("orbitals give a valid colouring")
}

/// `Orb*(G)`: unordered pairs coloured by their orbit under `G`.
pub fn orb_graph(g: &PermGroup) -> ColouredGraph {
    let n = g.degree();
    let mut colours = vec![UNSET; n * n];
    for u in 0..n {
        colours[u * n + u] = 0;
    }
    let mut next = 0;
    for u in 0..n {
        for v in u + 1..n {
            if colours[u * n + v] != UNSET {
                continue;
            }
            colours[u * n + v] = next;
            colours[v * n + u] = next;
            let mut stack = vec![(u, v)];
            while let Some((a, b)) = stack.pop() {
                for p in g.generators() {
                    let (x, y) = (p.apply(a), p.apply(b));
                    if colours[x * n + y] == UNSET {
                        colours[x * n + y] = next;
                        colours[y * n + x] = next;
                        stack.push((x, y));
                    }
                }
            }
            next += 1;
        }
    }
    ColouredGraph::new(false, n, colours).expect("orbits on pairs give a valid colouring")
}
