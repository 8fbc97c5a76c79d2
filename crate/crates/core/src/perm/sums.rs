//! Direct, subdirect and parallel sums of permutation groups.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{PermGroup, Permutation};

/// `(σ, τ)` acting on the disjoint union: σ on the first `σ.degree()`
/// points, τ shifted onto the rest.
pub fn join(left: &Permutation, right: &Permutation) -> Permutation {
    let n = left.degree();
    let images = left
        .images()
        .iter()
        .copied()
        .chain(right.images().iter().map(|&x| x + n))
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `G ⊕ H`: the summands act independently on disjoint point sets.
pub fn direct_sum(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let id_g = Permutation::identity(g.degree());
    let id_h = Permutation::identity(h.degree());
    let gens = g
        .generators()
        .iter()
        .map(|a| join(a, &id_h))
        .chain(h.generators().iter().map(|b| join(&id_g, b)))
        .collect();
    PermGroup::from_generators(g.degree() + h.degree(), gens)
}

/// `k` copies of `G` acting identically on disjoint copies of its points.
pub fn parallel_sum(g: &PermGroup, copies: usize) -> Result<PermGroup> {
    if copies == 0 {
        return Err(Error::domain("parallel sum needs at least one copy"));
    }
    let n = g.degree();
    let gens = g
        .generators()
        .iter()
        .map(|a| {
            let images = (0..copies)
                .flat_map(|c| a.images().iter().map(move |&x| x + c * n))
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    PermGroup::from_generators(n * copies, gens)
}

/// The left cosets `σH` of a normal subgroup, numbered by least element.
#[derive(Debug, Clone)]
pub struct Cosets {
    coset_of: Vec<usize>,
    reps: Vec<Permutation>,
}

impl Cosets {
    pub fn new(g: &PermGroup, h: &PermGroup) -> Result<Cosets> {
        if !h.is_subgroup_of(g) {
            return Err(Error::domain("kernel is not a subgroup"));
        }
        for x in g.generators() {
            let xi = x.inverse();
            for y in h.generators() {
                if !h.contains(&x.compose(y).compose(&xi)) {
                    return Err(Error::domain("kernel is not a normal subgroup"));
                }
            }
        }
        let mut assigned = vec![usize::MAX; g.order()];
        let mut classes: Vec<(Permutation, Vec<usize>)> = Vec::new();
        for (i, e) in g.elements().iter().enumerate() {
            if assigned[i] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = h
                .elements()
                .iter()
                .map(|k| g.element_index(&e.compose(k)).expect("closed"))
                .collect();
            for &m in &members {
                assigned[m] = classes.len();
            }
            let least = members
                .iter()
                .map(|&m| &g.elements()[m])
                .min()
                .expect("nonempty coset")
                .clone();
            classes.push((least, members));
        }
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by(|&a, &b| classes[a].0.cmp(&classes[b].0));
        let mut rank = vec![0; classes.len()];
        for (r, &c) in order.iter().enumerate() {
            rank[c] = r;
        }
        let coset_of = assigned.into_iter().map(|c| rank[c]).collect();
        let reps = order.into_iter().map(|c| classes[c].0.clone()).collect();
        Ok(Cosets { coset_of, reps })
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Least element of each coset; index 0 is the subgroup itself.
    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn coset_of(&self, g: &PermGroup, p: &Permutation) -> usize {
        self.coset_of[g.element_index(p).expect("element of the group")]
    }

    pub fn coset_of_index(&self, element_index: usize) -> usize {
        self.coset_of[element_index]
    }

    /// Coset of the product of two cosets.
    pub fn multiply(&self, g: &PermGroup, a: usize, b: usize) -> usize {
        self.coset_of(g, &self.reps[a].compose(&self.reps[b]))
    }
}

/// An isomorphism `φ: G₁/H₁ → G₂/H₂` given by paired coset transversals.
#[derive(Debug, Clone)]
pub struct FactorIso {
    pub coset_reps_left: Vec<Permutation>,
    pub coset_reps_right: Vec<Permutation>,
    /// `pairing[i] = j` means `φ(left[i]·H₁) = right[j]·H₂`.
    pub pairing: Vec<usize>,
}

impl FactorIso {
    /// The isomorphism generated by pairs `(σ, τ)` meaning `φ(σH₁) = τH₂`.
    ///
    /// The pairs need only generate the factor groups; the rest of the
    /// map is obtained by closure. Fails if the generated correspondence
    /// is not a bijective function.
    pub fn from_pairs(
        g1: &PermGroup,
        h1: &PermGroup,
        g2: &PermGroup,
        h2: &PermGroup,
        pairs: &[(Permutation, Permutation)],
    ) -> Result<FactorIso> {
        let c1 = Cosets::new(g1, h1)?;
        let c2 = Cosets::new(g2, h2)?;
        if c1.count() != c2.count() {
            return Err(Error::domain(format!(
                "factor groups have different orders {} and {}",
                c1.count(),
                c2.count()
            )));
        }
        let mut gens = Vec::new();
        for (s, t) in pairs {
            if !g1.contains(s) {
                return Err(Error::domain(format!("{s} is not in the left group")));
            }
            if !g2.contains(t) {
                return Err(Error::domain(format!("{t} is not in the right group")));
            }
            gens.push((c1.coset_of(g1, s), c2.coset_of(g2, t)));
        }
        let mut map = vec![usize::MAX; c1.count()];
        map[0] = 0;
        let mut stack = vec![0usize];
        while let Some(a) = stack.pop() {
            for &(s, t) in &gens {
                let a2 = c1.multiply(g1, a, s);
                let b2 = c2.multiply(g2, map[a], t);
                if map[a2] == usize::MAX {
                    map[a2] = b2;
                    stack.push(a2);
                } else if map[a2] != b2 {
                    return Err(Error::domain("coset pairing is not a well-defined map"));
                }
            }
        }
        if map.contains(&usize::MAX) {
            return Err(Error::domain("coset pairs do not generate the left factor group"));
        }
        let iso = FactorIso {
            coset_reps_left: c1.representatives().to_vec(),
            coset_reps_right: c2.representatives().to_vec(),
            pairing: map,
        };
        iso.validate(g1, h1, g2, h2)?;
        Ok(iso)
    }

    /// The trivial isomorphism between one-element factor groups.
    pub fn trivial(degree_left: usize, degree_right: usize) -> FactorIso {
        FactorIso {
            coset_reps_left: vec![Permutation::identity(degree_left)],
            coset_reps_right: vec![Permutation::identity(degree_right)],
            pairing: vec![0],
        }
    }

    /// Checks bijectivity and `φ(aH₁·bH₁) = φ(aH₁)·φ(bH₁)` on all pairs.
    pub fn validate(&self, g1: &PermGroup, h1: &PermGroup, g2: &PermGroup, h2: &PermGroup) -> Result<()> {
        let c1 = Cosets::new(g1, h1)?;
        let c2 = Cosets::new(g2, h2)?;
        let k = self.pairing.len();
        if self.coset_reps_left.len() != k || self.coset_reps_right.len() != k {
            return Err(Error::domain("transversal sizes differ from pairing size"));
        }
        if c1.count() != k || c2.count() != k {
            return Err(Error::domain("transversals do not match the factor group orders"));
        }
        let left: Vec<usize> = self
            .coset_reps_left
            .iter()
            .map(|s| g1.element_index(s).map(|i| c1.coset_of_index(i)))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::domain("left representative not in G1"))?;
        let right: Vec<usize> = self
            .coset_reps_right
            .iter()
            .map(|t| g2.element_index(t).map(|i| c2.coset_of_index(i)))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::domain("right representative not in G2"))?;
        let distinct = |v: &[usize]| {
            let mut s = v.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len() == v.len()
        };
        if !distinct(&left) || !distinct(&right) || !distinct(&self.pairing) {
            return Err(Error::domain("coset pairing is not a bijection of transversals"));
        }
        // phi as a map on coset numbers
        let mut phi = vec![0; k];
        for i in 0..k {
            phi[left[i]] = right[self.pairing[i]];
        }
        for a in 0..k {
            for b in 0..k {
                let ab = c1.multiply(g1, a, b);
                if phi[ab] != c2.multiply(g2, phi[a], phi[b]) {
                    return Err(Error::domain("coset pairing is not a homomorphism"));
                }
            }
        }
        Ok(())
    }

    /// `(σ, τ)` pairs, one per coset, as `φ(σH₁) = τH₂`.
    pub fn pairs(&self) -> impl Iterator<Item = (&Permutation, &Permutation)> {
        self.coset_reps_left
            .iter()
            .zip(&self.pairing)
            .map(|(s, &j)| (s, &self.coset_reps_right[j]))
    }
}

/// `G₁[H₁] ⊕_φ G₂[H₂]`: all `(σ, τ)` with `φ(σH₁) = τH₂`.
pub fn subdirect_sum(
    g1: &PermGroup,
    h1: &PermGroup,
    g2: &PermGroup,
    h2: &PermGroup,
    iso: &FactorIso,
) -> Result<PermGroup> {
    iso.validate(g1, h1, g2, h2)?;
    let expected = h1.order() * h2.order() * iso.pairing.len();
    if expected > crate::limits::element_cap() {
        return Err(Error::Capacity {
            what: "subdirect sum enumeration".into(),
            cap: crate::limits::element_cap(),
        });
    }
    let mut elements = Vec::with_capacity(expected);
    let mut seen = HashMap::new();
    for (s, t) in iso.pairs() {
        for a in h1.elements() {
            let left = s.compose(a);
            for b in h2.elements() {
                let p = join(&left, &t.compose(b));
                if seen.insert(p.clone(), ()).is_none() {
                    elements.push(p);
                }
            }
        }
    }
    debug_assert_eq!(elements.len(), expected);
    // identity first
    let id = Permutation::identity(g1.degree() + g2.degree());
    if let Some(pos) = elements.iter().position(|e| *e == id) {
        elements.swap(0, pos);
    }
    Ok(PermGroup::from_closed_elements(g1.degree() + g2.degree(), elements))
}
