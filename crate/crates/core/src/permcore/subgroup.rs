use fixedbitset::FixedBitSet;

use super::group::PermGroup;
use super::permutation::Permutation;
use super::table;
use crate::error::{Error, Result};
use crate::parallel;

/// A checked containment `sub ≤ ambient`.
#[derive(Debug, Clone)]
pub struct SubgroupRel {
    ambient: PermGroup,
    sub: PermGroup,
}

impl SubgroupRel {
    pub fn new(ambient: PermGroup, sub: PermGroup) -> Result<Self> {
        if ambient.degree() != sub.degree() {
            return Err(Error::DegreeMismatch {
                expected: ambient.degree(),
                found: sub.degree(),
            });
        }
        for g in sub.generators() {
            if !ambient.contains(g)? {
                return Err(Error::NotSubgroup(g.to_string()));
            }
        }
        Ok(SubgroupRel { ambient, sub })
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn sub(&self) -> &PermGroup {
        &self.sub
    }

    /// `[ambient : sub]`.
    pub fn index(&self) -> Result<usize> {
        Ok(self.ambient.order()? / self.sub.order()?)
    }

    pub fn sub_bitset(&self) -> Result<FixedBitSet> {
        Ok(table::to_bitset(
            self.ambient.elements()?,
            self.sub.elements()?,
        ))
    }

    /// `N_G(H) = {g ∈ G : gHg⁻¹ = H}`.
    pub fn normalizer(&self) -> Result<PermGroup> {
        let g = self.ambient.elements()?;
        let h = self.sub.elements()?;
        let hgens = self.sub.generators();
        let keep = parallel::filter_indices(g.len(), |i| {
            let x = &g[i];
            let xinv = x.inverse();
            hgens
                .iter()
                .all(|s| table::lookup(h, &x.conjugate_with(&xinv, s)).is_some())
        });
        let elems = keep.into_iter().map(|i| g[i].clone()).collect();
        Ok(PermGroup::from_sorted_elements(
            self.ambient.degree(),
            elems,
            self.ambient.caps(),
        ))
    }

    /// Smallest normal subgroup of `ambient` containing `sub`.
    pub fn normal_closure(&self) -> Result<PermGroup> {
        let table = self.ambient.elements()?;
        let bits = normal_closure_bits(
            table,
            self.ambient.generators(),
            &table::to_bitset(table, self.sub.generators()),
        );
        Ok(PermGroup::from_bitset(
            self.ambient.degree(),
            table,
            &bits,
            self.ambient.caps(),
        ))
    }

    /// `⋂_{g∈G} gHg⁻¹`, the largest normal subgroup of `ambient` inside `sub`.
    pub fn core(&self) -> Result<PermGroup> {
        let table = self.ambient.elements()?;
        let mut members = self.sub_bitset()?;
        let gens: Vec<(Permutation, Permutation)> = self
            .ambient
            .generators()
            .iter()
            .map(|g| (g.clone(), g.inverse()))
            .collect();
        // Largest subset of H stable under conjugation by the generators.
        loop {
            let drop: Vec<usize> = members
                .ones()
                .filter(|&i| {
                    gens.iter().any(|(g, ginv)| {
                        let c = g.conjugate_with(ginv, &table[i]);
                        !members.contains(table::index(table, &c))
                    })
                })
                .collect();
            if drop.is_empty() {
                break;
            }
            for i in drop {
                members.set(i, false);
            }
        }
        Ok(PermGroup::from_bitset(
            self.ambient.degree(),
            table,
            &members,
            self.ambient.caps(),
        ))
    }

    pub fn is_normal(&self) -> Result<bool> {
        for g in self.ambient.generators() {
            let ginv = g.inverse();
            for h in self.sub.generators() {
                if !self.sub.contains(&g.conjugate_with(&ginv, h))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Action of `ambient` on the left cosets of `sub`.
    pub fn coset_action(&self) -> Result<CosetAction> {
        let table = self.ambient.element_table()?.clone();
        let h = self.sub.elements()?;
        let n = table.len() / h.len();
        if n > self.ambient.caps().elements {
            return Err(Error::CapExceeded {
                what: "coset space",
                cap: self.ambient.caps().elements,
            });
        }
        // Scanning in sorted order makes each coset's label follow its
        // minimal element.
        let mut label = vec![u32::MAX; table.len()];
        let mut reps = Vec::with_capacity(n);
        for i in 0..table.len() {
            if label[i] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(i);
            for x in h {
                label[table::index(&table, &table[i].mul(x))] = c;
            }
        }
        let act = |g: &Permutation| -> Permutation {
            let images = reps
                .iter()
                .map(|&r| label[table::index(&table, &g.mul(&table[r]))])
                .collect();
            Permutation::from_images_unchecked(images)
        };
        let gens = self.ambient.generators().iter().map(act).collect();
        let sub_gens = self.sub.generators().iter().map(act).collect();
        let caps = self.ambient.caps();
        Ok(CosetAction {
            group: PermGroup::lazy(n, gens, caps)?,
            sub_image: PermGroup::lazy(n, sub_gens, caps)?,
            base_point: label[0] as usize + 1,
            representatives: reps,
            label,
            table,
        })
    }
}

pub(crate) fn normal_closure_bits(
    table: &[Permutation],
    ambient_gens: &[Permutation],
    sub_gens: &FixedBitSet,
) -> FixedBitSet {
    let conj: Vec<(Permutation, Permutation)> = ambient_gens
        .iter()
        .map(|g| (g.clone(), g.inverse()))
        .collect();
    let mut gens: Vec<usize> = sub_gens.ones().collect();
    let mut bits = table::close(table, &gens);
    let mut checked = 0;
    while checked < gens.len() {
        let x = &table[gens[checked]];
        checked += 1;
        for (g, ginv) in &conj {
            let c = table::index(table, &g.conjugate_with(ginv, x));
            if !bits.contains(c) {
                gens.push(c);
                bits = table::close(table, &gens);
            }
        }
    }
    bits
}

/// Left-coset action `x·gH = (xg)H` with deterministic labels 1..=n.
pub struct CosetAction {
    group: PermGroup,
    sub_image: PermGroup,
    base_point: usize,
    representatives: Vec<usize>,
    label: Vec<u32>,
    table: std::sync::Arc<Vec<Permutation>>,
}

impl CosetAction {
    /// Image of the ambient group, generated by the images of its
    /// generators. Elements are enumerated lazily.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Image of the subgroup; it stabilizes [`base_point`](Self::base_point).
    pub fn sub_image(&self) -> &PermGroup {
        &self.sub_image
    }

    /// Label of the coset `H` itself.
    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn degree(&self) -> usize {
        self.representatives.len()
    }

    /// Minimal element of the coset with the given 1-based label.
    pub fn representative(&self, point: usize) -> &Permutation {
        &self.table[self.representatives[point - 1]]
    }

    /// Label of the coset containing `g`, or `None` if `g ∉ G`.
    pub fn point_of(&self, g: &Permutation) -> Option<usize> {
        table::lookup(&self.table, g).map(|i| self.label[i] as usize + 1)
    }

    /// Permutation of cosets induced by `g ∈ G`.
    pub fn act(&self, g: &Permutation) -> Option<Permutation> {
        table::lookup(&self.table, g)?;
        let images = self
            .representatives
            .iter()
            .map(|&r| self.label[table::index(&self.table, &g.mul(&self.table[r]))])
            .collect();
        Some(Permutation::from_images_unchecked(images))
    }

    /// Elements of `G` acting trivially on the cosets.
    pub fn kernel(&self) -> Vec<Permutation> {
        let keep = parallel::filter_indices(self.table.len(), |i| {
            let g = &self.table[i];
            self.representatives.iter().all(|&r| {
                self.label[table::index(&self.table, &g.mul(&self.table[r]))] as usize
                    == self.label[r] as usize
            })
        });
        keep.into_iter().map(|i| self.table[i].clone()).collect()
    }
}
