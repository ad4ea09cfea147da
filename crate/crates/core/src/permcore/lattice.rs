use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::group::PermGroup;
use super::permutation::Permutation;
use super::table;
use crate::error::{Error, Result};

/// Normal subgroups of an enumerated group, as bitsets over its element table.
///
/// Every normal subgroup is generated by the conjugacy classes it contains,
/// so the lattice is the join-closure of the subgroups generated by single
/// classes. Entries are sorted by order, then by element list.
pub(crate) struct NormalLattice {
    pub table: std::sync::Arc<Vec<Permutation>>,
    pub members: Vec<FixedBitSet>,
}

impl NormalLattice {
    pub fn new(g: &PermGroup) -> Result<Self> {
        let cap = g.caps().lattice;
        if g.order()? > cap {
            return Err(Error::CapExceeded {
                what: "normal subgroup lattice",
                cap,
            });
        }
        let table = g.element_table()?.clone();
        let classes = conjugacy_classes(&table, g.generators());

        // subgroup generated by each nontrivial class
        let mut atoms: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        for class in classes.iter().filter(|c| c[0] != 0) {
            let mut gens = Vec::new();
            let mut bits = table::close(&table, &gens);
            for &x in class {
                if !bits.contains(x) {
                    gens.push(x);
                    bits = table::close(&table, &gens);
                }
            }
            if seen.insert(bits.clone()) {
                atoms.push((bits, gens));
            }
        }

        let trivial = table::close(&table, &[]);
        let mut found: Vec<(FixedBitSet, Vec<usize>)> = vec![(trivial.clone(), Vec::new())];
        let mut known: HashSet<FixedBitSet> = HashSet::from([trivial]);
        let mut i = 0;
        while i < found.len() {
            for (atom, atom_gens) in &atoms {
                if atom.is_subset(&found[i].0) {
                    continue;
                }
                let mut gens = found[i].1.clone();
                gens.extend(
                    atom_gens
                        .iter()
                        .copied()
                        .filter(|&x| !found[i].0.contains(x)),
                );
                let bits = table::close(&table, &gens);
                if known.insert(bits.clone()) {
                    found.push((bits, gens));
                }
            }
            i += 1;
        }

        found.sort_by(|a, b| {
            a.0.count_ones(..)
                .cmp(&b.0.count_ones(..))
                .then_with(|| a.0.ones().cmp(b.0.ones()))
        });
        Ok(NormalLattice {
            table,
            members: found.into_iter().map(|(bits, _)| bits).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn order(&self, i: usize) -> usize {
        self.members[i].count_ones(..)
    }

    pub fn group(&self, i: usize, like: &PermGroup) -> PermGroup {
        PermGroup::from_bitset(like.degree(), &self.table, &self.members[i], like.caps())
    }
}

/// Conjugacy classes as sorted index lists, ordered by smallest member.
pub(crate) fn conjugacy_classes(table: &[Permutation], gens: &[Permutation]) -> Vec<Vec<usize>> {
    let conj: Vec<(Permutation, Permutation)> =
        gens.iter().map(|g| (g.clone(), g.inverse())).collect();
    let mut seen = FixedBitSet::with_capacity(table.len());
    let mut classes = Vec::new();
    for start in 0..table.len() {
        if seen.put(start) {
            continue;
        }
        let mut class = vec![start];
        let mut i = 0;
        while i < class.len() {
            let x = &table[class[i]];
            for (g, ginv) in &conj {
                let y = table::index(table, &g.conjugate_with(ginv, x));
                if !seen.put(y) {
                    class.push(y);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

impl PermGroup {
    /// All normal subgroups, sorted by order then canonical element list.
    /// Includes the trivial group and the group itself.
    pub fn normal_subgroups(&self) -> Result<Vec<PermGroup>> {
        let lat = NormalLattice::new(self)?;
        Ok((0..lat.len()).map(|i| lat.group(i, self)).collect())
    }

    /// Number of conjugacy classes.
    pub fn class_count(&self) -> Result<usize> {
        Ok(conjugacy_classes(self.elements()?, self.generators()).len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(g: &PermGroup) -> Vec<usize> {
        g.normal_subgroups()
            .unwrap()
            .iter()
            .map(|n| n.order().unwrap())
            .collect()
    }

    #[test]
    fn s4_normal_subgroups() {
        assert_eq!(
            orders(&PermGroup::symmetric(4).unwrap()),
            vec![1, 4, 12, 24]
        );
    }

    #[test]
    fn z6_normal_subgroups() {
        assert_eq!(orders(&PermGroup::cyclic(6).unwrap()), vec![1, 2, 3, 6]);
    }

    #[test]
    fn klein_four_has_five() {
        let v = PermGroup::parse(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
        assert_eq!(orders(&v), vec![1, 2, 2, 2, 4]);
    }

    #[test]
    fn a5_is_simple() {
        assert_eq!(orders(&PermGroup::alternating(5).unwrap()), vec![1, 60]);
        assert_eq!(PermGroup::alternating(5).unwrap().class_count().unwrap(), 5);
    }

    #[test]
    fn lattice_cap() {
        let s5 = PermGroup::symmetric(5).unwrap().with_caps(crate::Caps {
            elements: 1000,
            lattice: 100,
        });
        assert!(s5.normal_subgroups().unwrap_err().is_cap());
    }

    #[test]
    fn every_entry_is_normal() {
        let g = PermGroup::parse(4, &["(1 2 3 4)", "(1 3)"]).unwrap();
        let normals = g.normal_subgroups().unwrap();
        assert_eq!(normals.len(), 6);
        for n in normals {
            let rel = crate::SubgroupRel::new(g.clone(), n).unwrap();
            assert!(rel.is_normal().unwrap());
        }
    }
}
