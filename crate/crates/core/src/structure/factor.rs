use crate::error::{Error, Result};
use crate::perm::{Cosets, PermGroup};

/// Invariant factors `d₁ | d₂ | …` of the abelian factor group `G/H`, in
/// ascending order; empty for the trivial group.
///
/// For each prime `p`, counting cosets with `x^{p^k} ∈ H` for growing `k`
/// gives the partition of exponents of the `p`-primary part.
pub fn factor_invariants(g: &PermGroup, h: &PermGroup) -> Result<Vec<usize>> {
    if !g.is_abelian() {
        return Err(Error::domain("factor invariants need an abelian group"));
    }
    let cosets = Cosets::new(g, h)?;
    let order = cosets.count();
    let reps = cosets.representatives();
    // (p, exponents of the p-primary part, largest first)
    let mut primary: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in prime_factors(order) {
        let mut counts = vec![1usize];
        let mut pk = 1u64;
        loop {
            pk *= p as u64;
            let c = reps
                .iter()
                .filter(|r| cosets.coset_of(g, &r.pow(pk)) == 0)
                .count();
            let prev = counts[counts.len() - 1];
            counts.push(c);
            if c == prev {
                break;
            }
        }
        // at_least[k-1] = number of cyclic factors of exponent ≥ k
        let at_least: Vec<u32> = counts
            .windows(2)
            .map(|w| ilog(w[1] / w[0], p))
            .take_while(|&m| m > 0)
            .collect();
        let factors = at_least.first().copied().unwrap_or(0);
        let exps: Vec<u32> = (0..factors)
            .map(|i| at_least.iter().filter(|&&m| m > i).count() as u32)
            .collect();
        primary.push((p, exps));
    }
    let count = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut out: Vec<usize> = (0..count)
        .map(|i| {
            primary
                .iter()
                .map(|(p, e)| e.get(i).map_or(1, |&x| p.pow(x)))
                .product()
        })
        .collect();
    out.reverse();
    debug_assert_eq!(out.iter().product::<usize>(), order);
    Ok(out)
}

/// True iff the invariant factors describe an elementary abelian 2-group.
pub fn is_elementary_abelian_2_factors(invariants: &[usize]) -> bool {
    invariants.iter().all(|&d| d == 2)
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ilog(mut x: usize, p: usize) -> u32 {
    let mut k = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0);
        x /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::regular_group;

    #[test]
    fn cyclic_quotients() {
        let c4 = PermGroup::cyclic(4).unwrap();
        let h = c4.subgroup(vec![c4.generators()[0].pow(2)]).unwrap();
        assert_eq!(factor_invariants(&c4, &h).unwrap(), vec![2]);
        let z8 = PermGroup::cyclic(8).unwrap();
        let h = z8.subgroup(vec![z8.generators()[0].pow(4)]).unwrap();
        assert_eq!(factor_invariants(&z8, &h).unwrap(), vec![4]);
        assert_eq!(factor_invariants(&z8, &z8).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn products() {
        let g = regular_group(&[3, 3]).unwrap();
        assert_eq!(factor_invariants(&g, &PermGroup::trivial(9)).unwrap(), vec![3, 3]);
        let g = regular_group(&[4, 2, 3]).unwrap();
        assert_eq!(factor_invariants(&g, &PermGroup::trivial(24)).unwrap(), vec![2, 12]);
        let g = regular_group(&[2, 4, 4]).unwrap();
        assert_eq!(factor_invariants(&g, &PermGroup::trivial(32)).unwrap(), vec![2, 4, 4]);
        let g = regular_group(&[6, 10]).unwrap();
        assert_eq!(factor_invariants(&g, &PermGroup::trivial(60)).unwrap(), vec![2, 30]);
        assert!(is_elementary_abelian_2_factors(&[2, 2]));
        assert!(is_elementary_abelian_2_factors(&[]));
        assert!(!is_elementary_abelian_2_factors(&[2, 4]));
    }

    #[test]
    fn nonabelian_rejected() {
        let s3 = PermGroup::symmetric(3).unwrap();
        assert!(factor_invariants(&s3, &PermGroup::trivial(3)).is_err());
    }

    proptest::proptest! {
        #[test]
        fn invariants_multiply_to_the_index(orders in proptest::collection::vec(2usize..5, 1..4)) {
            proptest::prop_assume!(orders.iter().product::<usize>() <= 64);
            let a = regular_group(&orders).unwrap();
            let inv = factor_invariants(&a, &PermGroup::trivial(a.degree())).unwrap();
            proptest::prop_assert_eq!(inv.iter().product::<usize>(), a.order());
            for w in inv.windows(2) {
                proptest::prop_assert_eq!(w[1] % w[0], 0);
            }
        }
    }
}
