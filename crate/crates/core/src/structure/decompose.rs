use crate::error::{Error, Result};
use crate::perm::{subdirect_sum, Cosets, FactorIso, PermGroup, Permutation};

/// `G = G₁[H₁] ⊕_φ G₂[H₂]` with respect to a split of the points into a
/// union of orbits `Y` and its complement `Z`.
#[derive(Debug, Clone)]
pub struct SubdirectDecomposition {
    /// Points of `Y` in increasing order; position `i` is point `i` of `G₁`.
    pub left_points: Vec<usize>,
    /// Points of `Z` in increasing order.
    pub right_points: Vec<usize>,
    pub left: PermGroup,
    pub left_kernel: PermGroup,
    pub right: PermGroup,
    pub right_kernel: PermGroup,
    pub iso: FactorIso,
}

impl SubdirectDecomposition {
    /// The subdirect sum in the original point labelling.
    pub fn reassemble(&self) -> Result<PermGroup> {
        let sum = subdirect_sum(
            &self.left,
            &self.left_kernel,
            &self.right,
            &self.right_kernel,
            &self.iso,
        )?;
        let f: Vec<usize> = self.left_points.iter().chain(&self.right_points).copied().collect();
        Ok(sum.conjugate(&Permutation::from_images(f)?))
    }
}

/// Splits `A` along `Y`: `H₁` is the restriction to `Y` of the pointwise
/// stabilizer of `Z`, and `φ` pairs the cosets of `σ|_Y` and `σ|_Z` for
/// every `σ ∈ A`.
pub fn subdirect_decompose(a: &PermGroup, y: &[usize]) -> Result<SubdirectDecomposition> {
    let mut left_points = y.to_vec();
    left_points.sort_unstable();
    left_points.dedup();
    if left_points.is_empty() || left_points.len() >= a.degree() || !a.is_union_of_orbits(&left_points) {
        return Err(Error::domain(
            "split set must be a proper nonempty union of orbits",
        ));
    }
    let right_points: Vec<usize> = (0..a.degree()).filter(|p| left_points.binary_search(p).is_err()).collect();
    let left = a.restriction(&left_points)?;
    let right = a.restriction(&right_points)?;
    let left_kernel = a.pointwise_stabilizer(&right_points).restriction(&left_points)?;
    let right_kernel = a.pointwise_stabilizer(&left_points).restriction(&right_points)?;
    let c1 = Cosets::new(&left, &left_kernel)?;
    let c2 = Cosets::new(&right, &right_kernel)?;
    let mut pairing = vec![usize::MAX; c1.count()];
    for e in a.elements() {
        let l = c1.coset_of(&left, &e.restrict(&left_points).expect("orbit union"));
        let r = c2.coset_of(&right, &e.restrict(&right_points).expect("orbit union"));
        debug_assert!(pairing[l] == usize::MAX || pairing[l] == r);
        pairing[l] = r;
    }
    let iso = FactorIso {
        coset_reps_left: c1.representatives().to_vec(),
        coset_reps_right: c2.representatives().to_vec(),
        pairing,
    };
    iso.validate(&left, &left_kernel, &right, &right_kernel)?;
    Ok(SubdirectDecomposition {
        left_points,
        right_points,
        left,
        left_kernel,
        right,
        right_kernel,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{direct_sum, parallel_sum};
    use crate::spec::parse_group_spec;

    #[test]
    fn direct_sum_has_full_kernels() {
        let c3 = PermGroup::cyclic(3).unwrap();
        let a = direct_sum(&c3, &c3).unwrap();
        let d = subdirect_decompose(&a, &[0, 1, 2]).unwrap();
        assert!(d.left_kernel.equals(&d.left));
        assert!(d.right_kernel.equals(&d.right));
        assert!(d.reassemble().unwrap().equals(&a));
    }

    #[test]
    fn parallel_sum_has_trivial_kernels() {
        let c3 = PermGroup::cyclic(3).unwrap();
        let a = parallel_sum(&c3, 2).unwrap();
        let d = subdirect_decompose(&a, &[0, 1, 2]).unwrap();
        assert!(d.left.equals(&c3) && d.right.equals(&c3));
        assert!(d.left_kernel.is_trivial() && d.right_kernel.is_trivial());
        assert_eq!(d.iso.pairing.len(), 3);
        assert!(d.reassemble().unwrap().equals(&a));
    }

    #[test]
    fn c8_c12_subdirect_group() {
        let a = parse_group_spec(
            "subdir(cyclic(8), gens: (1 5)(2 6)(3 7)(4 8), cyclic(12), \
             gens: (1 5 9)(2 6 10)(3 7 11)(4 8 12), \
             [(1 2 3 4 5 6 7 8) -> (1 2 3 4 5 6 7 8 9 10 11 12)])",
        )
        .unwrap();
        let d = subdirect_decompose(&a, &(0..8).collect::<Vec<_>>()).unwrap();
        assert_eq!((d.left.order(), d.left_kernel.order()), (8, 2));
        assert_eq!((d.right.order(), d.right_kernel.order()), (12, 3));
        assert!(d.reassemble().unwrap().equals(&a));
        // the split also works with the orbits interleaved
        let mixed = a.conjugate(&Permutation::from_images((0..20).map(|i| (i * 7) % 20).collect()).unwrap());
        let y = mixed.orbits()[0].clone();
        let d = subdirect_decompose(&mixed, &y).unwrap();
        assert!(d.reassemble().unwrap().equals(&mixed));
    }

    #[test]
    fn bad_split() {
        let c3 = PermGroup::cyclic(3).unwrap();
        let a = direct_sum(&c3, &c3).unwrap();
        assert!(subdirect_decompose(&a, &[0, 1]).is_err());
        assert!(subdirect_decompose(&a, &[]).is_err());
        assert!(subdirect_decompose(&a, &[0, 1, 2, 3, 4, 5]).is_err());
    }
}
