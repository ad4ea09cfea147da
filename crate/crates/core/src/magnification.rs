//! Direct-product decompositions and the primitivity deciders.
//!
//! A model `(G, H)` arises by strong general magnification exactly when
//! `G = A × B` internally (both factors normal, `A ∩ B = 1`,
//! `|A|·|B| = |G|`) with `H = (H∩A)(H∩B)` and both `[A:H∩A]` and
//! `[B:H∩B]` greater than one. It arises by strong cluster magnification
//! when `G = A × B` with `H ≤ A`, `[A:H] > 2` and `B` nontrivial: the
//! Galois factor is the fixed field of `A` and the smaller field is fixed
//! by `HB`, which has degree `[A:H]` and must exceed 2.
//!
//! The thresholds differ (`> 2` against `> 1`), so a Klein four-group
//! Galois model is primitive while still decomposing.
//!
//! Whether the cluster criterion above is equivalent to the field-level
//! definition for every `(G, H)` is not settled here; it agrees with every
//! family in [`crate::constructions`].

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::cluster::ExtensionModel;
use crate::error::Result;
use crate::parallel;
use crate::permcore::{table, NormalLattice, PermGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MagnificationKind {
    /// Strong cluster magnification.
    #[serde(rename = "SCM")]
    StrongCluster,
    /// Strong general magnification.
    #[serde(rename = "SGM")]
    StrongGeneral,
}

/// `G = A × B` certifying a magnification.
///
/// `indices` is `([A:H∩A], [B:H∩B])` for [`MagnificationKind::StrongGeneral`]
/// and `([A:H], |B|)` for [`MagnificationKind::StrongCluster`].
#[derive(Debug, Clone)]
pub struct DecompositionWitness {
    pub kind: MagnificationKind,
    pub a: PermGroup,
    pub b: PermGroup,
    pub indices: (usize, usize),
}

/// Why a quick sufficient condition fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuickReason {
    /// `H` lies in no proper normal subgroup (`H^G = G`).
    NotInProperNormal,
    /// Fewer than two proper nontrivial normal subgroups.
    FewNormalSubgroups,
    /// Any two nontrivial normal subgroups meet nontrivially.
    NormalsIntersect,
}

/// Ordered pairs of lattice indices `(a, b)` with `A ∩ B = 1` and
/// `|A||B| = |G|`, in lattice order.
fn decomposition_pairs(lat: &NormalLattice) -> Vec<(usize, usize)> {
    let total = lat.table.len();
    let n = lat.len();
    let orders: Vec<usize> = (0..n).map(|i| lat.order(i)).collect();
    let hits = parallel::filter_indices(n * n, |k| {
        let (a, b) = (k / n, k % n);
        orders[a] * orders[b] == total && lat.members[a].intersection(&lat.members[b]).count() == 1
    });
    hits.into_iter().map(|k| (k / n, k % n)).collect()
}

/// All ordered pairs `(A, B)` of normal subgroups with `G = A × B`,
/// trivial factors included, sorted by the lattice order of `A` then `B`.
pub fn enumerate_decompositions(g: &PermGroup) -> Result<Vec<(PermGroup, PermGroup)>> {
    let lat = NormalLattice::new(g)?;
    Ok(decomposition_pairs(&lat)
        .into_iter()
        .map(|(a, b)| (lat.group(a, g), lat.group(b, g)))
        .collect())
}

fn count_in(members: &FixedBitSet, sub: &FixedBitSet) -> usize {
    members.intersection(sub).count()
}

impl ExtensionModel {
    fn search_witness(&self, kind: MagnificationKind) -> Result<Option<DecompositionWitness>> {
        let g = self.group();
        let lat = NormalLattice::new(g)?;
        let h = table::to_bitset(&lat.table, self.sub().elements()?);
        let h_order = h.count_ones(..);
        // Largest A first: the witness then names the larger factor `A`.
        let mut pairs = decomposition_pairs(&lat);
        pairs.reverse();
        for (ai, bi) in pairs {
            let (a, b) = (&lat.members[ai], &lat.members[bi]);
            let (a_order, b_order) = (lat.order(ai), lat.order(bi));
            let indices = match kind {
                MagnificationKind::StrongCluster => {
                    if b_order > 1 && h.is_subset(a) && a_order / h_order > 2 {
                        Some((a_order / h_order, b_order))
                    } else {
                        None
                    }
                }
                MagnificationKind::StrongGeneral => {
                    let (ha, hb) = (count_in(a, &h), count_in(b, &h));
                    if ha * hb == h_order && a_order > ha && b_order > hb {
                        Some((a_order / ha, b_order / hb))
                    } else {
                        None
                    }
                }
            };
            if let Some(indices) = indices {
                return Ok(Some(DecompositionWitness {
                    kind,
                    a: lat.group(ai, g),
                    b: lat.group(bi, g),
                    indices,
                }));
            }
        }
        Ok(None)
    }

    /// Decomposition showing the model is a nontrivial strong cluster
    /// magnification, if one exists.
    pub fn scm_witness(&self) -> Result<Option<DecompositionWitness>> {
        self.search_witness(MagnificationKind::StrongCluster)
    }

    /// Not obtained by a nontrivial strong cluster magnification.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.scm_witness()?.is_none())
    }

    pub fn sgm_witness(&self) -> Result<Option<DecompositionWitness>> {
        self.search_witness(MagnificationKind::StrongGeneral)
    }

    /// Not obtained by a nontrivial strong general magnification.
    pub fn is_general_primitive(&self) -> Result<bool> {
        Ok(self.sgm_witness()?.is_none())
    }

    /// Sufficient condition for primitivity: `H` is contained in no proper
    /// normal subgroup of `G`. `None` means the check is silent.
    pub fn quick_primitive_check(&self) -> Result<Option<QuickReason>> {
        let closure = self.rel().normal_closure()?;
        Ok((closure.order()? == self.group().order()?).then_some(QuickReason::NotInProperNormal))
    }

    /// Sufficient conditions for general primitivity that look only at the
    /// normal subgroup lattice of `G`.
    pub fn quick_general_primitive_check(&self) -> Result<Option<QuickReason>> {
        let lat = NormalLattice::new(self.group())?;
        let total = lat.table.len();
        let nontrivial: Vec<usize> = (0..lat.len()).filter(|&i| lat.order(i) > 1).collect();
        let proper = nontrivial.iter().filter(|&&i| lat.order(i) < total).count();
        if proper < 2 {
            return Ok(Some(QuickReason::FewNormalSubgroups));
        }
        let all_meet = nontrivial.iter().all(|&a| {
            nontrivial
                .iter()
                .all(|&b| lat.members[a].intersection(&lat.members[b]).count() > 1)
        });
        Ok(all_meet.then_some(QuickReason::NormalsIntersect))
    }
}

impl DecompositionWitness {
    /// Re-checks the defining conditions against `model` by direct
    /// computation on the groups, independent of the lattice search.
    pub fn verify(&self, model: &ExtensionModel) -> Result<bool> {
        let g = model.group();
        let h = model.sub();
        let (a, b) = (&self.a, &self.b);
        let normal = |x: &PermGroup| -> Result<bool> {
            crate::SubgroupRel::new(g.clone(), x.clone())?.is_normal()
        };
        if !normal(a)? || !normal(b)? {
            return Ok(false);
        }
        let meet = a
            .elements()?
            .iter()
            .filter(|x| b.contains(x).unwrap_or(false))
            .count();
        if meet != 1 || a.order()? * b.order()? != g.order()? {
            return Ok(false);
        }
        let h_in = |x: &PermGroup| -> Result<usize> {
            let mut k = 0;
            for e in h.elements()? {
                if x.contains(e)? {
                    k += 1;
                }
            }
            Ok(k)
        };
        let (ha, hb) = (h_in(a)?, h_in(b)?);
        Ok(match self.kind {
            MagnificationKind::StrongCluster => {
                let idx = a.order()? / h.order()?;
                ha == h.order()? && idx > 2 && b.order()? > 1 && self.indices == (idx, b.order()?)
            }
            MagnificationKind::StrongGeneral => {
                ha * hb == h.order()?
                    && a.order()? > ha
                    && b.order()? > hb
                    && self.indices == (a.order()? / ha, b.order()? / hb)
            }
        })
    }
}
