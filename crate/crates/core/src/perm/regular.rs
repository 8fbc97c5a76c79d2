//! Regular abelian groups: the translation action of `Z_{k1} × … × Z_{km}`
//! on itself, coordinate systems for arbitrary regular abelian groups, and
//! the inversion map.

use crate::error::{Error, Result};

use super::{PermGroup, Permutation};

/// Point index of a tuple in mixed radix, first coordinate most significant.
///
/// This makes the point order agree with the lexicographic order of the
/// string labels (`"0100"` for `Z_2^4`).
pub fn mixed_radix_index(orders: &[usize], tuple: &[usize]) -> usize {
    orders
        .iter()
        .zip(tuple)
        .fold(0, |acc, (&k, &a)| acc * k + a % k)
}

pub fn mixed_radix_tuple(orders: &[usize], mut index: usize) -> Vec<usize> {
    let mut t = vec![0; orders.len()];
    for i in (0..orders.len()).rev() {
        t[i] = index % orders[i];
        index /= orders[i];
    }
    t
}

/// Label of a tuple: concatenated digits when every order is at most 10,
/// otherwise comma-separated inside parentheses.
pub fn tuple_label(orders: &[usize], tuple: &[usize]) -> String {
    if orders.iter().all(|&k| k <= 10) {
        tuple.iter().map(|a| a.to_string()).collect()
    } else {
        let parts: Vec<String> = tuple.iter().map(|a| a.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// Parses a label such as `"0100"` (or `"(3,11)"`) back into a tuple.
pub fn parse_tuple_label(orders: &[usize], label: &str) -> Result<Vec<usize>> {
    let parts: Vec<usize> = if let Some(inner) = label.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        inner
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::domain(format!("bad label '{label}'"))))
            .collect::<Result<_>>()?
    } else {
        label
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::domain(format!("bad label '{label}'")))
            })
            .collect::<Result<_>>()?
    };
    if parts.len() != orders.len() || parts.iter().zip(orders).any(|(&a, &k)| a >= k) {
        return Err(Error::domain(format!(
            "label '{label}' does not name an element of Z{orders:?}"
        )));
    }
    Ok(parts)
}

/// The regular (translation) action of `Z_{k1} × … × Z_{km}` on itself.
pub fn regular_group(orders: &[usize]) -> Result<PermGroup> {
    if orders.contains(&0) {
        return Err(Error::domain("cyclic orders must be positive"));
    }
    let degree: usize = orders.iter().product();
    let mut gens = Vec::new();
    for i in 0..orders.len() {
        if orders[i] < 2 {
            continue;
        }
        let images = (0..degree)
            .map(|x| {
                let mut t = mixed_radix_tuple(orders, x);
                t[i] = (t[i] + 1) % orders[i];
                mixed_radix_index(orders, &t)
            })
            .collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    PermGroup::from_generators(degree, gens)
}

/// Checks that `a` is transitive and abelian, hence regular.
pub fn require_regular_abelian(a: &PermGroup) -> Result<()> {
    if !a.is_transitive() {
        return Err(Error::domain("group is not transitive"));
    }
    if !a.is_abelian() {
        return Err(Error::domain("group is not abelian"));
    }
    if a.order() != a.degree() {
        return Err(Error::domain("group is not regular"));
    }
    Ok(())
}

/// The element of a regular group that maps `base` to `x`, per point.
fn translations(a: &PermGroup, base: usize) -> Vec<Permutation> {
    let mut by_point = vec![None; a.degree()];
    for e in a.elements() {
        by_point[e.apply(base)] = Some(e.clone());
    }
    by_point.into_iter().map(|e| e.expect("regular")).collect()
}

/// The inversion map `x ↦ x⁻¹` of a transitive abelian group, with point 0
/// as the identity.
pub fn involution(a: &PermGroup) -> Result<Permutation> {
    require_regular_abelian(a)?;
    let images = translations(a, 0)
        .iter()
        .map(|g| g.inverse().apply(0))
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// `A⁺ = ⟨A, α⟩`.
pub fn plus_group(a: &PermGroup) -> Result<PermGroup> {
    let alpha = involution(a)?;
    let mut gens = a.generators().to_vec();
    gens.push(alpha);
    PermGroup::from_generators(a.degree(), gens)
}

/// A coordinate system on a regular abelian group: point `coords[t]` is the
/// image of `base` under `g_1^{t_1} ⋯ g_m^{t_m}` for a basis `g_i` of the
/// requested orders, `t` read in mixed radix.
#[derive(Debug, Clone)]
pub struct Coordinates {
    pub orders: Vec<usize>,
    pub basis: Vec<Permutation>,
    pub base: usize,
    points: Vec<usize>,
    tuples: Vec<usize>,
}

impl Coordinates {
    pub fn point(&self, tuple: &[usize]) -> usize {
        self.points[mixed_radix_index(&self.orders, tuple)]
    }

    pub fn point_of_index(&self, index: usize) -> usize {
        self.points[index]
    }

    pub fn tuple(&self, point: usize) -> Vec<usize> {
        mixed_radix_tuple(&self.orders, self.tuples[point])
    }

    /// Point permutation sending the standard mixed-radix labelling of
    /// `regular_group(orders)` onto this coordinate system.
    pub fn relabelling(&self) -> Permutation {
        Permutation::from_images_unchecked(self.points.clone())
    }
}

/// Finds a basis of the regular abelian group `a` with the given cyclic
/// orders (first in enumeration order), or `None` if `a` is not isomorphic
/// to `Z_{k1} × … × Z_{km}`.
pub fn find_coordinates(a: &PermGroup, orders: &[usize]) -> Result<Option<Coordinates>> {
    require_regular_abelian(a)?;
    let degree = a.degree();
    if orders.iter().product::<usize>() != degree {
        return Ok(None);
    }
    let base = 0;
    let by_point = translations(a, base);
    let candidates: Vec<Vec<usize>> = orders
        .iter()
        .map(|&k| {
            (0..degree)
                .filter(|&x| by_point[x].order() as usize == k)
                .collect()
        })
        .collect();

    // span[t] = point reached by the prefix basis with exponent tuple t
    fn extend(
        level: usize,
        orders: &[usize],
        candidates: &[Vec<usize>],
        by_point: &[Permutation],
        span: Vec<usize>,
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if level == orders.len() {
            return Some(span);
        }
        'cand: for &x in &candidates[level] {
            let g = &by_point[x];
            let mut next = Vec::with_capacity(span.len() * orders[level]);
            let mut seen = vec![false; by_point.len()];
            for &p in &span {
                let mut q = p;
                for _ in 0..orders[level] {
                    if seen[q] {
                        continue 'cand;
                    }
                    seen[q] = true;
                    next.push(q);
                    q = g.apply(q);
                }
            }
            // next[i * k + c] = g^c(span[i]): the new coordinate is least significant
            chosen.push(x);
            if let Some(s) = extend(level + 1, orders, candidates, by_point, next, chosen) {
                return Some(s);
            }
            chosen.pop();
        }
        None
    }

    let mut chosen = Vec::new();
    let Some(points) = extend(0, orders, &candidates, &by_point, vec![base], &mut chosen) else {
        return Ok(None);
    };
    let mut tuples = vec![0; degree];
    for (i, &p) in points.iter().enumerate() {
        tuples[p] = i;
    }
    Ok(Some(Coordinates {
        orders: orders.to_vec(),
        basis: chosen.iter().map(|&x| by_point[x].clone()).collect(),
        base,
        points,
        tuples,
    }))
}
