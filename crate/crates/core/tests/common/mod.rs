//! Brute-force oracles over raw image arrays, plus the model corpus.
//!
//! Nothing here goes through the library's closure, lattice or coset code;
//! groups are read out of it once as plain element lists.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use galmag::constructions::FamilySpec;
use galmag::{Caps, ExtensionModel, PermGroup};

pub type Perm = Vec<u32>;

pub fn mul(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&x| p[x as usize]).collect()
}

pub fn inv(p: &Perm) -> Perm {
    let mut out = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

pub fn raw(g: &PermGroup) -> Vec<Perm> {
    g.elements()
        .unwrap()
        .iter()
        .map(|p| p.images().to_vec())
        .collect()
}

pub fn raw_set(g: &PermGroup) -> BTreeSet<Perm> {
    raw(g).into_iter().collect()
}

/// Closure under products, by repeated multiplication until stable.
pub fn closure(degree: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..degree as u32).collect();
    let mut set: BTreeSet<Perm> = BTreeSet::from([id]);
    let mut frontier: Vec<Perm> = set.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = mul(g, x);
                if set.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    set
}

fn conj_set(g: &Perm, h: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    let gi = inv(g);
    h.iter().map(|x| mul(&mul(g, x), &gi)).collect()
}

pub fn normalizer(g: &[Perm], h: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    g.iter().filter(|x| conj_set(x, h) == *h).cloned().collect()
}

pub fn normal_closure(degree: usize, g: &[Perm], h: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    let mut gens = BTreeSet::new();
    for x in g {
        gens.extend(conj_set(x, h));
    }
    closure(degree, &gens.into_iter().collect::<Vec<_>>())
}

pub fn is_normal(g: &[Perm], h: &BTreeSet<Perm>) -> bool {
    g.iter().all(|x| conj_set(x, h) == *h)
}

/// Cosets `gH` as sets; fixed cosets of `H` counted directly.
pub fn fixed_cosets(g: &[Perm], h: &BTreeSet<Perm>) -> usize {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut cosets: Vec<BTreeSet<Perm>> = Vec::new();
    for x in g {
        if seen.contains(x) {
            continue;
        }
        let c: BTreeSet<Perm> = h.iter().map(|y| mul(x, y)).collect();
        seen.extend(c.iter().cloned());
        cosets.push(c);
    }
    cosets
        .iter()
        .filter(|c| {
            h.iter().all(|y| {
                let moved: BTreeSet<Perm> = c.iter().map(|z| mul(y, z)).collect();
                moved == **c
            })
        })
        .count()
}

/// Every subgroup, as joins of cyclic subgroups.
pub fn all_subgroups(degree: usize, g: &[Perm]) -> Vec<BTreeSet<Perm>> {
    let mut cyclic: Vec<BTreeSet<Perm>> = Vec::new();
    for x in g {
        let c = closure(degree, std::slice::from_ref(x));
        if !cyclic.contains(&c) {
            cyclic.push(c);
        }
    }
    let mut found: Vec<BTreeSet<Perm>> = vec![closure(degree, &[])];
    let mut known: HashSet<BTreeSet<Perm>> = found.iter().cloned().collect();
    let mut i = 0;
    while i < found.len() {
        for c in &cyclic {
            if c.is_subset(&found[i]) {
                continue;
            }
            let gens: Vec<Perm> = found[i].iter().chain(c.iter()).cloned().collect();
            let j = closure(degree, &gens);
            if known.insert(j.clone()) {
                found.push(j);
            }
        }
        i += 1;
    }
    found
}

pub fn normal_subgroups(degree: usize, g: &[Perm]) -> Vec<BTreeSet<Perm>> {
    all_subgroups(degree, g)
        .into_iter()
        .filter(|h| is_normal(g, h))
        .collect()
}

/// Ordered pairs `(A, B)` of normal subgroups with `G = A × B`.
pub fn decompositions(degree: usize, g: &[Perm]) -> Vec<(BTreeSet<Perm>, BTreeSet<Perm>)> {
    let normals = normal_subgroups(degree, g);
    let mut out = Vec::new();
    for a in &normals {
        for b in &normals {
            if a.len() * b.len() == g.len() && a.intersection(b).count() == 1 {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

pub fn corpus() -> Vec<FamilySpec> {
    use FamilySpec::*;
    vec![
        SemidirectCluster { r: 2, s: 2 },
        SemidirectCluster { r: 2, s: 3 },
        SemidirectCluster { r: 3, s: 2 },
        SemidirectCluster { r: 4, s: 2 },
        SemidirectCluster { r: 3, s: 3 },
        SnTuple { n: 4, k: 1 },
        SnTuple { n: 4, k: 2 },
        SnTuple { n: 5, k: 2 },
        SnTuple { n: 5, k: 3 },
        AltProduct { n: 4, k: 1 },
        AltProduct { n: 5, k: 2 },
        Dihedral4,
        Psl2Max { p: 5 },
        Psl2Max { p: 7 },
        Psl2BorelImage { p: 7, r: 3 },
        BorelCase { p: 7, r: 1 },
        BorelCase { p: 7, r: 2 },
        BorelCase { p: 11, r: 2 },
        BorelCase { p: 13, r: 3 },
        CyclicGalois { n: 6 },
        CyclicGalois { n: 8 },
        CyclicGalois { n: 9 },
        AnSquare { n: 5 },
    ]
}

pub fn build(spec: &FamilySpec) -> ExtensionModel {
    spec.build(&Caps::default()).unwrap()
}

/// A few small groups outside the families.
pub fn small_groups() -> Vec<(&'static str, PermGroup)> {
    vec![
        (
            "klein",
            PermGroup::parse(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap(),
        ),
        (
            "z2xz4",
            PermGroup::parse(6, &["(1 2)", "(3 4 5 6)"]).unwrap(),
        ),
        (
            "z2^3",
            PermGroup::parse(6, &["(1 2)", "(3 4)", "(5 6)"]).unwrap(),
        ),
        (
            "quaternion",
            PermGroup::parse(8, &["(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"]).unwrap(),
        ),
        (
            "s3xs3",
            PermGroup::parse(6, &["(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"]).unwrap(),
        ),
        ("a4", PermGroup::alternating(4).unwrap()),
        ("z12", PermGroup::cyclic(12).unwrap()),
    ]
}
