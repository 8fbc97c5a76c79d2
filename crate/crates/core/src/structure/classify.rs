use serde::{Deserialize, Serialize};

use crate::cgraph::ColouredGraph;
use crate::closure::is_2_orbit_closed;
use crate::error::{Error, Result};
use crate::perm::PermGroup;

use super::orbits::orbit_structure;

/// Per-orbit facts behind the verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    /// 1-based points of the orbit.
    pub points: Vec<usize>,
    pub size: usize,
    /// Invariant factors of `A_i/A_i^*`.
    pub factor_invariants: Vec<usize>,
    pub factor_elementary_abelian_2: bool,
    pub constituent_elementary_abelian_2: bool,
    pub isolated: bool,
}

/// Whether an abelian group is the automorphism group of a coloured graph
/// (`GR`) or digraph (`DGR`), with optional verified witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub degree: usize,
    pub order: usize,
    pub is_abelian: bool,
    pub is_2_orbit_closed: bool,
    pub orbits: Vec<OrbitRecord>,
    #[serde(rename = "verdict_GR")]
    pub verdict_gr: bool,
    #[serde(rename = "verdict_DGR")]
    pub verdict_dgr: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_graph: Option<ColouredGraph>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_digraph: Option<ColouredGraph>,
}

/// Decides `GR` and `DGR` membership of an abelian group.
///
/// A nontrivial abelian group is in `DGR` iff it is 2-orbit-closed, and in
/// `GR` iff additionally every orbit whose `A_i/A_i^*` is an elementary
/// abelian 2-group has `A_i` elementary abelian 2 as well. The trivial group
/// on `n` points is in `DGR` always and in `GR` unless `n = 2`.
pub fn classify(a: &PermGroup) -> Result<ClassificationReport> {
    let s = orbit_structure(a)?;
    let closed = is_2_orbit_closed(a)?;
    let orbits: Vec<OrbitRecord> = (0..s.orbit_count())
        .map(|i| OrbitRecord {
            points: s.orbits[i].iter().map(|p| p + 1).collect(),
            size: s.orbits[i].len(),
            factor_invariants: s.factor_invariants[i].clone(),
            factor_elementary_abelian_2: s.star_factor_elementary_abelian_2(i),
            constituent_elementary_abelian_2: s.constituents[i].is_elementary_abelian_2(),
            isolated: s.isolated[i],
        })
        .collect();
    if closed {
        // an orbit is isolated iff its star factor is elementary abelian 2
        for (i, o) in orbits.iter().enumerate() {
            if o.isolated != o.factor_elementary_abelian_2 {
                return Err(Error::Verification(format!(
                    "orbit {} of a 2-orbit-closed group: isolated = {} but A_i/A_i^* elementary abelian 2 = {}",
                    i + 1,
                    o.isolated,
                    o.factor_elementary_abelian_2
                )));
            }
        }
    }
    let (verdict_gr, verdict_dgr) = if a.is_trivial() {
        (a.degree() != 2, true)
    } else {
        let condition_2 = orbits
            .iter()
            .all(|o| !o.factor_elementary_abelian_2 || o.constituent_elementary_abelian_2);
        (closed && condition_2, closed)
    };
    Ok(ClassificationReport {
        degree: a.degree(),
        order: a.order(),
        is_abelian: true,
        is_2_orbit_closed: closed,
        orbits,
        verdict_gr,
        verdict_dgr,
        witness_graph: None,
        witness_digraph: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::regular_group;

    #[test]
    fn cyclic_four() {
        let r = classify(&PermGroup::cyclic(4).unwrap()).unwrap();
        assert!(r.verdict_dgr && !r.verdict_gr);
        assert!(r.orbits[0].factor_elementary_abelian_2);
        assert!(!r.orbits[0].constituent_elementary_abelian_2);
    }

    #[test]
    fn elementary_abelian_regular() {
        let r = classify(&regular_group(&[2, 2, 2]).unwrap()).unwrap();
        assert!(r.verdict_gr && r.verdict_dgr);
    }

    #[test]
    fn trivial_groups() {
        let r = classify(&PermGroup::trivial(2)).unwrap();
        assert!(!r.verdict_gr && r.verdict_dgr);
        for n in [1, 3, 7] {
            let r = classify(&PermGroup::trivial(n)).unwrap();
            assert!(r.verdict_gr && r.verdict_dgr, "n = {n}");
        }
    }

    #[test]
    fn json_field_names() {
        let r = classify(&PermGroup::cyclic(4).unwrap()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict_GR"], false);
        assert_eq!(v["verdict_DGR"], true);
        assert!(v.get("witness_graph").is_none());
        assert_eq!(v["orbits"][0]["points"], serde_json::json!([1, 2, 3, 4]));
    }

    #[test]
    fn nonabelian_rejected() {
        assert!(classify(&PermGroup::symmetric(3).unwrap()).is_err());
    }
}
