//! Index arithmetic over a sorted element table of an enumerated group.
//!
//! Subgroups of an enumerated group are represented as bitsets over the
//! table; these helpers close generator sets and look elements up.

use fixedbitset::FixedBitSet;

use super::permutation::Permutation;

#[inline]
pub(crate) fn lookup(table: &[Permutation], p: &Permutation) -> Option<usize> {
    table.binary_search(p).ok()
}

/// Index of `p`, which must be a member of the group.
#[inline]
pub(crate) fn index(table: &[Permutation], p: &Permutation) -> usize {
    lookup(table, p).expect("element outside enumerated group")
}

/// Subgroup generated by the given table indices. The identity sits at
/// index 0 of any sorted table.
pub(crate) fn close(table: &[Permutation], gens: &[usize]) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(table.len());
    bits.insert(0);
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = &table[queue[i]];
        for &g in gens {
            let y = index(table, &x.mul(&table[g]));
            if !bits.put(y) {
                queue.push(y);
            }
        }
        i += 1;
    }
    bits
}

pub(crate) fn to_bitset(table: &[Permutation], members: &[Permutation]) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(table.len());
    for m in members {
        bits.insert(index(table, m));
    }
    bits
}
