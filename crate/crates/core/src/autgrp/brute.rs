use crate::cgraph::ColouredGraph;
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{PermGroup, Permutation};

pub const BRUTE_FORCE_MAX_VERTICES: usize = 10;

/// `Aut(Γ)` by trying every vertex bijection, rejecting a partial map as
/// soon as a pair of assigned vertices changes colour. Independent of the
/// refinement engine; meant as a test oracle.
pub fn brute_force_aut(g: &ColouredGraph) -> Result<PermGroup> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::VertexLimit {
            n,
            limit: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let cap = limits::element_cap().max(40_320);
    let mut found = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, 0, &mut images, &mut used, &mut found, cap)?;
    // identity is found first: it is the lexicographically least bijection
    Ok(PermGroup::from_closed_elements(n, found))
}

fn extend(
    g: &ColouredGraph,
    u: usize,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Permutation>,
    cap: usize,
) -> Result<()> {
    let n = g.n();
    if u == n {
        if found.len() >= cap {
            return Err(Error::Capacity {
                what: "brute-force automorphism list".into(),
                cap,
            });
        }
        found.push(Permutation::from_images(images.clone())?);
        return Ok(());
    }
    for w in 0..n {
        if used[w] {
            continue;
        }
        let consistent = g.colour(u, u) == g.colour(w, w)
            && (0..u).all(|x| {
                g.colour(x, u) == g.colour(images[x], w) && g.colour(u, x) == g.colour(w, images[x])
            });
        if consistent {
            images[u] = w;
            used[w] = true;
            extend(g, u + 1, images, used, found, cap)?;
            used[w] = false;
        }
    }
    images[u] = usize::MAX;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_directed_triangle() {
        let k3 = ColouredGraph::from_fn(false, 3, |_, _| 0).unwrap();
        assert_eq!(brute_force_aut(&k3).unwrap().order(), 6);
        let c3 = ColouredGraph::from_fn(true, 3, |u, v| u32::from((u + 1) % 3 == v)).unwrap();
        assert!(brute_force_aut(&c3).unwrap().equals(&PermGroup::cyclic(3).unwrap()));
    }

    #[test]
    fn too_large() {
        let k = ColouredGraph::from_fn(false, 11, |_, _| 0).unwrap();
        assert!(brute_force_aut(&k).is_err());
    }
}
