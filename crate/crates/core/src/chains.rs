//! Unique descending and ascending chains.
//!
//! In group form the descending chain `L = N₀ ⊋ N₁ ⊋ …` is the chain of
//! iterated normalizers `H = H₀ < H₁ = N_G(H₀) < …`, and the ascending chain
//! `K = F₀ ⊊ F₁ ⊊ …` is the chain of iterated normal closures
//! `G = M₀ > M₁ = H^{M₀} > …`. Fields are the fixed fields of these
//! subgroups.
//!
//! The descending chain stops once `H_i = G` or `N_G(H_i) = H_i`; the
//! ascending chain stops once `M_j = H` or `H^{M_j} = M_j`.
//!
//! For `x^(2^k) − c` over the rationals both chains have length `k` and meet
//! in every step; that example needs number-field data and is not modeled.

use serde::Serialize;

use crate::cluster::ExtensionModel;
use crate::error::Result;
use crate::permcore::{PermGroup, SubgroupRel};

/// `H = H₀ < H₁ < … < H_k` with `H_{i+1} = N_G(H_i)`.
#[derive(Debug, Clone)]
pub struct DescendingChain {
    subgroups: Vec<PermGroup>,
}

/// `G = M₀ > M₁ > … > M_l` with `M_{j+1} = H^{M_j}`.
#[derive(Debug, Clone)]
pub struct AscendingChain {
    subgroups: Vec<PermGroup>,
}

/// A subgroup lying on both chains, different from `H` and `G`.
#[derive(Debug, Clone)]
pub struct CoincidenceCertificate {
    pub subgroup: PermGroup,
    pub descending_index: usize,
    pub ascending_index: usize,
}

/// One entry of a chain report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub order: usize,
    pub index_in_group: usize,
    pub generators: Vec<String>,
}

fn links(subgroups: &[PermGroup], group_order: usize) -> Result<Vec<ChainLink>> {
    subgroups
        .iter()
        .map(|s| {
            let order = s.order()?;
            Ok(ChainLink {
                order,
                index_in_group: group_order / order,
                generators: s.generators().iter().map(|g| g.to_string()).collect(),
            })
        })
        .collect()
}

macro_rules! chain_accessors {
    ($t:ty) => {
        impl $t {
            pub fn subgroups(&self) -> &[PermGroup] {
                &self.subgroups
            }

            pub fn len(&self) -> usize {
                self.subgroups.len()
            }

            pub fn is_empty(&self) -> bool {
                self.subgroups.is_empty()
            }

            pub fn last(&self) -> &PermGroup {
                self.subgroups.last().expect("chains are never empty")
            }

            pub fn orders(&self) -> Result<Vec<usize>> {
                self.subgroups.iter().map(|s| s.order()).collect()
            }

            pub fn links(&self, group_order: usize) -> Result<Vec<ChainLink>> {
                links(&self.subgroups, group_order)
            }

            /// Entry `i`, repeating the last entry past the end.
            pub fn padded(&self, i: usize) -> &PermGroup {
                &self.subgroups[i.min(self.subgroups.len() - 1)]
            }
        }
    };
}

chain_accessors!(DescendingChain);
chain_accessors!(AscendingChain);

impl DescendingChain {
    /// The chain reaches `K`, i.e. its last subgroup is `G`.
    pub fn reaches_base(&self, model: &ExtensionModel) -> Result<bool> {
        Ok(self.last().order()? == model.group().order()?)
    }
}

impl AscendingChain {
    /// The chain reaches `L`, i.e. its last subgroup is `H`.
    pub fn reaches_top(&self, model: &ExtensionModel) -> Result<bool> {
        Ok(self.last().order()? == model.sub().order()?)
    }
}

impl ExtensionModel {
    pub fn descending_chain(&self) -> Result<DescendingChain> {
        let g = self.group();
        let g_order = g.order()?;
        let mut subgroups = vec![self.sub().clone()];
        loop {
            let cur = subgroups.last().unwrap();
            let cur_order = cur.order()?;
            if cur_order == g_order {
                break;
            }
            let next = SubgroupRel::new(g.clone(), cur.clone())?.normalizer()?;
            if next.order()? == cur_order {
                break;
            }
            subgroups.push(next);
        }
        Ok(DescendingChain { subgroups })
    }

    pub fn ascending_chain(&self) -> Result<AscendingChain> {
        let h = self.sub();
        let h_order = h.order()?;
        let mut subgroups = vec![self.group().clone()];
        loop {
            let cur = subgroups.last().unwrap();
            let cur_order = cur.order()?;
            if cur_order == h_order {
                break;
            }
            let next = SubgroupRel::new(cur.clone(), h.clone())?.normal_closure()?;
            if next.order()? == cur_order {
                break;
            }
            subgroups.push(next);
        }
        Ok(AscendingChain { subgroups })
    }

    /// First `(i, j)` in lexicographic order with `H_i = M_j ∉ {H, G}`.
    pub fn chains_coincide(&self) -> Result<Option<CoincidenceCertificate>> {
        let desc = self.descending_chain()?;
        let asc = self.ascending_chain()?;
        self.coincidence_of(&desc, &asc)
    }

    fn coincidence_of(
        &self,
        desc: &DescendingChain,
        asc: &AscendingChain,
    ) -> Result<Option<CoincidenceCertificate>> {
        let h_order = self.sub().order()?;
        let g_order = self.group().order()?;
        for (i, x) in desc.subgroups.iter().enumerate() {
            let order = x.order()?;
            if order == h_order || order == g_order {
                continue;
            }
            for (j, y) in asc.subgroups.iter().enumerate() {
                if x.same_elements(y)? {
                    return Ok(Some(CoincidenceCertificate {
                        subgroup: x.clone(),
                        descending_index: i,
                        ascending_index: j,
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Sufficient condition for primitivity: the two chains meet strictly
    /// between `L` and `K`. `None` means the criterion is silent, not that
    /// the model fails to be primitive.
    pub fn primitivity_certificate_via_chains(&self) -> Result<Option<CoincidenceCertificate>> {
        if self.is_trivial()? {
            return Ok(None);
        }
        self.chains_coincide()
    }
}

/// Checks that the chains of `l × j` are the products of the factor chains,
/// the shorter factor chain padded by its last entry.
pub fn product_chain_structure_check(l: &ExtensionModel, j: &ExtensionModel) -> Result<bool> {
    let m = l.product(j)?;
    let (dl, dj, dm) = (
        l.descending_chain()?,
        j.descending_chain()?,
        m.descending_chain()?,
    );
    if dm.len() != dl.len().max(dj.len()) {
        return Ok(false);
    }
    for (i, x) in dm.subgroups().iter().enumerate() {
        if !x.same_elements(&dl.padded(i).direct_product(dj.padded(i))?)? {
            return Ok(false);
        }
    }
    let (al, aj, am) = (
        l.ascending_chain()?,
        j.ascending_chain()?,
        m.ascending_chain()?,
    );
    if am.len() != al.len().max(aj.len()) {
        return Ok(false);
    }
    for (i, x) in am.subgroups().iter().enumerate() {
        if !x.same_elements(&al.padded(i).direct_product(aj.padded(i))?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The four alternatives that must hold when `M = L·J` (strong general
/// magnification) has coinciding chains:
///
/// 1. `L` is primitive;
/// 2. `J` is nontrivial and primitive;
/// 3. `J` nontrivial, `r(J) = 1`, `t(L) = 1`, the ascending chain of `J`
///    reaches `J` and the descending chain of `L` reaches `K`;
/// 4. the mirror of 3.
///
/// Returns `None` when the product's chains do not coincide.
pub fn coincidence_alternatives(
    l: &ExtensionModel,
    j: &ExtensionModel,
) -> Result<Option<[bool; 4]>> {
    let m = l.product(j)?;
    if m.is_trivial()? || m.chains_coincide()?.is_none() {
        return Ok(None);
    }
    let nontrivial = !j.is_trivial()?;
    let (il, ij) = (l.invariants()?, j.invariants()?);
    let clause3 = nontrivial
        && ij.r == 1
        && il.t == 1
        && j.ascending_chain()?.reaches_top(j)?
        && l.descending_chain()?.reaches_base(l)?;
    let clause4 = nontrivial
        && il.r == 1
        && ij.t == 1
        && l.ascending_chain()?.reaches_top(l)?
        && j.descending_chain()?.reaches_base(j)?;
    Ok(Some([
        l.is_primitive()?,
        nontrivial && j.is_primitive()?,
        clause3,
        clause4,
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s5_pair_model() -> ExtensionModel {
        let s5 = PermGroup::symmetric(5).unwrap();
        let h = PermGroup::parse(5, &["(3 4)", "(3 4 5)"]).unwrap();
        ExtensionModel::new(s5, h).unwrap()
    }

    #[test]
    fn galois_chains() {
        let m = ExtensionModel::galois(PermGroup::cyclic(6).unwrap()).unwrap();
        assert_eq!(m.descending_chain().unwrap().orders().unwrap(), vec![1, 6]);
        assert_eq!(m.ascending_chain().unwrap().orders().unwrap(), vec![6, 1]);
        assert!(m.chains_coincide().unwrap().is_none());
        assert!(m.primitivity_certificate_via_chains().unwrap().is_none());
    }

    #[test]
    fn symmetric_pair_chains() {
        let m = s5_pair_model();
        let d = m.descending_chain().unwrap();
        assert_eq!(d.orders().unwrap(), vec![6, 12]);
        assert!(!d.reaches_base(&m).unwrap());
        assert_eq!(m.ascending_chain().unwrap().orders().unwrap(), vec![120]);
        assert!(m.chains_coincide().unwrap().is_none());
        assert!(m.is_primitive().unwrap());
    }

    #[test]
    fn degenerate_chains() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let m = ExtensionModel::new(s3.clone(), s3).unwrap();
        assert_eq!(m.descending_chain().unwrap().len(), 1);
        assert_eq!(m.ascending_chain().unwrap().len(), 1);
        assert!(m.primitivity_certificate_via_chains().unwrap().is_none());
    }

    #[test]
    fn first_steps_match_invariants() {
        let m = s5_pair_model();
        let inv = m.invariants().unwrap();
        let d = m.descending_chain().unwrap().orders().unwrap();
        assert_eq!(d[1] / d[0], inv.r);
        let s4 = PermGroup::symmetric(4).unwrap();
        let m = ExtensionModel::new(s4, PermGroup::parse(4, &["(1 2)(3 4)"]).unwrap()).unwrap();
        let a = m.ascending_chain().unwrap().orders().unwrap();
        assert_eq!(a, vec![24, 4, 2]);
        assert_eq!(a[0] / a[1], m.invariants().unwrap().t);
    }

    #[test]
    fn chain_links_report() {
        let m = ExtensionModel::galois(PermGroup::cyclic(4).unwrap()).unwrap();
        let links = m.descending_chain().unwrap().links(4).unwrap();
        assert_eq!(links[0].order, 1);
        assert_eq!(links[0].index_in_group, 4);
        assert!(links[0].generators.is_empty());
        assert_eq!(links[1].generators, vec!["(1 2 3 4)".to_string()]);
    }
}
