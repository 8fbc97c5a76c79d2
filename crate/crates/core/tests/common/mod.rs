#![allow(dead_code)]

use std::collections::HashSet;

use abelrep::perm::{direct_sum, parallel_sum, regular_group};
use abelrep::spec::parse_group_spec;
use abelrep::{PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_DEGREE: usize = 12;

/// Orders of regular abelian constituents available on ≤ 12 points,
/// built from cyclic factors of order 1..=6.
const PIECES: &[&[usize]] = &[
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[2, 2],
    &[2, 3],
    &[2, 4],
    &[2, 5],
    &[2, 6],
    &[3, 3],
    &[3, 4],
    &[2, 2, 2],
    &[2, 2, 3],
];

fn piece(orders: &[usize]) -> PermGroup {
    if orders == [1] {
        PermGroup::trivial(1)
    } else {
        regular_group(orders).unwrap()
    }
}

fn key(g: &PermGroup) -> (usize, Vec<Vec<usize>>) {
    let mut els: Vec<Vec<usize>> = g.elements().iter().map(|e| e.images().to_vec()).collect();
    els.sort();
    (g.degree(), els)
}

struct Corpus {
    seen: HashSet<(usize, Vec<Vec<usize>>)>,
    groups: Vec<(String, PermGroup)>,
}

impl Corpus {
    fn add(&mut self, name: String, g: PermGroup) {
        assert!(g.is_abelian(), "{name} is not abelian");
        assert!(g.degree() <= MAX_DEGREE, "{name} has degree {}", g.degree());
        if self.seen.insert(key(&g)) {
            self.groups.push((name, g));
        }
    }
}

/// A deterministic corpus of distinct abelian permutation groups of degree
/// at most 12: regular products, direct, parallel and subdirect sums of
/// cyclic pieces, and seeded random subgroups of direct sums of regular
/// abelian groups.
pub fn corpus() -> Vec<(String, PermGroup)> {
    let mut c = Corpus {
        seen: HashSet::new(),
        groups: Vec::new(),
    };
    for n in 1..=MAX_DEGREE {
        c.add(format!("cyclic({n})"), PermGroup::cyclic(n).unwrap());
        c.add(format!("trivial({n})"), PermGroup::trivial(n));
    }
    for p in PIECES.iter().filter(|p| p.len() > 1) {
        c.add(format!("regular: {p:?}"), piece(p));
    }
    for a in PIECES {
        for b in PIECES {
            let (ga, gb) = (piece(a), piece(b));
            if ga.degree() + gb.degree() <= MAX_DEGREE {
                c.add(format!("dsum({a:?}, {b:?})"), direct_sum(&ga, &gb).unwrap());
            }
        }
    }
    for p in PIECES.iter().skip(1) {
        let g = piece(p);
        for k in 2..=MAX_DEGREE / g.degree() {
            c.add(format!("par({p:?}, {k})"), parallel_sum(&g, k).unwrap());
        }
    }
    // chains ⟨c₁c₂, c₂c₃, …⟩ of m cyclic orbits: their 2-orbit-closure is
    // the full direct sum
    for k in 2..=4 {
        for m in 3..=MAX_DEGREE / k {
            let ambient = (1..m).fold(PermGroup::cyclic(k).unwrap(), |acc, _| {
                direct_sum(&acc, &PermGroup::cyclic(k).unwrap()).unwrap()
            });
            let cyc = ambient.generators().to_vec();
            for twist in [1, k as u64 - 1] {
                let gens = (0..m - 1).map(|i| cyc[i].compose(&cyc[i + 1].pow(twist))).collect();
                c.add(
                    format!("chain(cyclic({k}), {m}, twist {twist})"),
                    PermGroup::from_generators(k * m, gens).unwrap(),
                );
            }
        }
    }
    for text in SUBDIRECT {
        c.add(text.to_string(), parse_group_spec(text).unwrap());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_ab31);
    let mut attempts = 0;
    while c.groups.len() < 320 && attempts < 20_000 {
        attempts += 1;
        let mut parts: Vec<&[usize]> = Vec::new();
        let mut degree = 0;
        let want = rng.gen_range(2..=4);
        while parts.len() < want {
            let p = *PIECES.choose(&mut rng).unwrap();
            let d: usize = p.iter().product();
            if degree + d > MAX_DEGREE {
                break;
            }
            degree += d;
            parts.push(p);
        }
        if parts.len() < 2 {
            continue;
        }
        let ambient = parts
            .iter()
            .skip(1)
            .fold(piece(parts[0]), |acc, p| direct_sum(&acc, &piece(p)).unwrap());
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=3))
            .map(|_| ambient.elements()[rng.gen_range(0..ambient.order())].clone())
            .collect();
        let g = PermGroup::from_generators(degree, gens).unwrap();
        let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
        c.add(format!("random {parts:?} <{}>", gens.join(", ")), g);
    }
    c.groups
}

const SUBDIRECT: &[&str] = &[
    "subdir(cyclic(4), gens: (1 3)(2 4), cyclic(6), gens: (1 3 5)(2 4 6), [(1 2 3 4) -> (1 2 3 4 5 6)])",
    "subdir(cyclic(4), trivial(4), cyclic(4), trivial(4), [(1 2 3 4) -> (1 4 3 2)])",
    "subdir(cyclic(6), gens: (1 3 5)(2 4 6), cyclic(4), gens: (1 3)(2 4), [(1 2 3 4 5 6) -> (1 2 3 4)])",
    "subdir(cyclic(6), gens: (1 4)(2 5)(3 6), cyclic(6), gens: (1 4)(2 5)(3 6), [(1 2 3 4 5 6) -> (1 2 3 4 5 6)])",
    "subdir(cyclic(6), gens: (1 4)(2 5)(3 6), cyclic(3), trivial(3), [(1 2 3 4 5 6) -> (1 2 3)])",
    "subdir(cyclic(6), gens: (1 3 5)(2 4 6), cyclic(2), trivial(2), [(1 2 3 4 5 6) -> (1 2)])",
    "subdir(cyclic(5), trivial(5), cyclic(5), trivial(5), [(1 2 3 4 5) -> (1 3 5 2 4)])",
    "subdir(cyclic(4), gens: (1 3)(2 4), cyclic(2), trivial(2), [(1 2 3 4) -> (1 2)])",
    "subdir(regular: [2, 2], gens: (1 2)(3 4), cyclic(2), trivial(2), [(1 3)(2 4) -> (1 2)])",
    "subdir(regular: [2, 4], gens: (1 5)(2 6)(3 7)(4 8), cyclic(4), trivial(4), [(1 2 3 4)(5 6 7 8) -> (1 2 3 4), (1 5)(2 6)(3 7)(4 8) -> id])",
    "subdir(cyclic(3), trivial(3), regular: [3, 3], gens: (1 2 3)(4 5 6)(7 8 9), [(1 2 3) -> (1 4 7)(2 5 8)(3 6 9)])",
    "subdir(regular: [2, 2], trivial(4), regular: [2, 2], trivial(4), [(1 3)(2 4) -> (1 2)(3 4), (1 2)(3 4) -> (1 3)(2 4)])",
    "subdir(cyclic(2), trivial(2), dsum(cyclic(2), cyclic(2), cyclic(2)), gens: (1 2)(3 4), (3 4)(5 6), [(1 2) -> (1 2)])",
    "subdir(cyclic(3), trivial(3), dsum(cyclic(3), cyclic(3)), gens: (1 2 3)(4 6 5), [(1 2 3) -> (1 2 3)])",
];
