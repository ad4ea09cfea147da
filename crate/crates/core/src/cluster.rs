//! Cluster invariants of an extension model.
//!
//! For a model `(G, H)`:
//!
//! | symbol | value          | meaning                                   |
//! |--------|----------------|-------------------------------------------|
//! | `n`    | `[G:H]`        | degree of `L/K`                           |
//! | `r`    | `[N_G(H):H]`   | cluster size                              |
//! | `s`    | `[G:N_G(H)]`   | number of clusters (conjugate fields)     |
//! | `t`    | `[G:H^G]`      | ascending index (`H^G` the normal closure) |
//! | `u`    | `[H^G:H]`      |                                           |
//!
//! so that `r·s = n = t·u`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::{PermGroup, SubgroupRel};

/// The pair `(G, H)` standing for `L/K` with `G = Gal(L̃/K)`, `H = Gal(L̃/L)`.
#[derive(Debug, Clone)]
pub struct ExtensionModel {
    rel: SubgroupRel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ClusterInvariants {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub u: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MagnificationTuple {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub u: usize,
}

impl ExtensionModel {
    pub fn new(group: PermGroup, sub: PermGroup) -> Result<Self> {
        Ok(ExtensionModel {
            rel: SubgroupRel::new(group, sub)?,
        })
    }

    pub fn from_rel(rel: SubgroupRel) -> Self {
        ExtensionModel { rel }
    }

    /// Galois model: `H` trivial.
    pub fn galois(group: PermGroup) -> Result<Self> {
        let sub = PermGroup::trivial(group.degree());
        Self::new(group, sub)
    }

    pub fn group(&self) -> &PermGroup {
        self.rel.ambient()
    }

    pub fn sub(&self) -> &PermGroup {
        self.rel.sub()
    }

    pub fn rel(&self) -> &SubgroupRel {
        &self.rel
    }

    /// `[G:H]`.
    pub fn degree(&self) -> Result<usize> {
        self.rel.index()
    }

    /// Degree-one model `H = G`.
    pub fn is_trivial(&self) -> Result<bool> {
        Ok(self.degree()? == 1)
    }

    pub fn invariants(&self) -> Result<ClusterInvariants> {
        let g = self.group().order()?;
        let h = self.sub().order()?;
        let norm = self.rel.normalizer()?.order()?;
        let closure = self.rel.normal_closure()?.order()?;
        let inv = ClusterInvariants {
            n: g / h,
            r: norm / h,
            s: g / norm,
            t: g / closure,
            u: closure / h,
        };
        debug_assert!(inv.identities_hold());
        Ok(inv)
    }

    /// Cluster size counted as the number of cosets `gH` fixed by `H` in the
    /// coset action. Agrees with `invariants().r` without going through the
    /// normalizer.
    pub fn fixed_point_cluster_size(&self) -> Result<usize> {
        let action = self.rel.coset_action()?;
        Ok(action.sub_image().fixed_points().len())
    }

    /// `(G₁ × G₂, H₁ × H₂)` on the disjoint union of the two domains; the
    /// compositum of linearly disjoint extensions.
    pub fn product(&self, other: &ExtensionModel) -> Result<ExtensionModel> {
        let g = self.group().direct_product(other.group())?;
        let h = self.sub().direct_product(other.sub())?;
        Self::new(g, h)
    }
}

impl ClusterInvariants {
    pub fn identities_hold(&self) -> bool {
        self.r * self.s == self.n && self.t * self.u == self.n
    }

    pub fn componentwise_product(&self, other: &ClusterInvariants) -> ClusterInvariants {
        ClusterInvariants {
            n: self.n * other.n,
            r: self.r * other.r,
            s: self.s * other.s,
            t: self.t * other.t,
            u: self.u * other.u,
        }
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize) {
        (self.n, self.r, self.s, self.t, self.u)
    }
}

impl MagnificationTuple {
    pub fn is_trivial(&self) -> bool {
        (self.r, self.s, self.t, self.u) == (1, 1, 1, 1)
    }
}

fn quotient(big: usize, small: usize) -> Option<usize> {
    (small != 0 && big.is_multiple_of(small)).then(|| big / small)
}

/// Component-wise quotients `M/L` when `L`'s `r, s, t, u` all divide `M`'s.
///
/// Whether `L` really is a subextension of `M` cannot be read off two
/// unrelated `(G, H)` pairs; that premise belongs to the caller.
pub fn magnification_tuple(
    m: &ClusterInvariants,
    l: &ClusterInvariants,
) -> Option<MagnificationTuple> {
    Some(MagnificationTuple {
        r: quotient(m.r, l.r)?,
        s: quotient(m.s, l.s)?,
        t: quotient(m.t, l.t)?,
        u: quotient(m.u, l.u)?,
    })
}

/// `r_M / r_L` when `r_L | r_M`.
pub fn weak_cluster_factor(m: &ClusterInvariants, l: &ClusterInvariants) -> Option<usize> {
    quotient(m.r, l.r)
}

impl TryFrom<(PermGroup, PermGroup)> for ExtensionModel {
    type Error = Error;

    fn try_from((g, h): (PermGroup, PermGroup)) -> Result<Self> {
        Self::new(g, h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(n: usize, r: usize, s: usize, t: usize, u: usize) -> ClusterInvariants {
        ClusterInvariants { n, r, s, t, u }
    }

    #[test]
    fn s4_two_point_stabilizer() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let h = PermGroup::parse(4, &["(3 4)"]).unwrap();
        let m = ExtensionModel::new(s4, h).unwrap();
        assert_eq!(m.invariants().unwrap(), inv(12, 2, 6, 1, 12));
        assert_eq!(m.fixed_point_cluster_size().unwrap(), 2);
    }

    #[test]
    fn degenerate_model() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let m = ExtensionModel::new(s3.clone(), s3).unwrap();
        assert!(m.is_trivial().unwrap());
        assert_eq!(m.invariants().unwrap(), inv(1, 1, 1, 1, 1));
        assert_eq!(m.fixed_point_cluster_size().unwrap(), 1);
    }

    #[test]
    fn galois_z6() {
        let m = ExtensionModel::galois(PermGroup::cyclic(6).unwrap()).unwrap();
        assert_eq!(m.invariants().unwrap(), inv(6, 6, 1, 6, 1));
        assert_eq!(m.fixed_point_cluster_size().unwrap(), 6);
    }

    #[test]
    fn product_of_galois_models() {
        let a = ExtensionModel::galois(PermGroup::cyclic(3).unwrap()).unwrap();
        let b = ExtensionModel::galois(PermGroup::cyclic(2).unwrap()).unwrap();
        let p = a.product(&b).unwrap();
        assert_eq!(p.invariants().unwrap(), inv(6, 6, 1, 6, 1));
    }

    #[test]
    fn product_with_trivial_model() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let m = ExtensionModel::new(s4, PermGroup::parse(4, &["(3 4)"]).unwrap()).unwrap();
        let t = ExtensionModel::new(PermGroup::cyclic(3).unwrap(), PermGroup::cyclic(3).unwrap())
            .unwrap();
        assert_eq!(
            m.product(&t).unwrap().invariants().unwrap(),
            m.invariants().unwrap()
        );
    }

    #[test]
    fn tuple_divisibility() {
        // S4: 2-tuple vs 1-point field, 4 ∤ 6
        assert_eq!(
            magnification_tuple(&inv(12, 2, 6, 1, 12), &inv(4, 1, 4, 1, 4)),
            None
        );
        // S5: 3-tuple over 2-tuple
        let t = magnification_tuple(&inv(60, 6, 10, 1, 60), &inv(20, 2, 10, 1, 20)).unwrap();
        assert_eq!((t.r, t.s, t.t, t.u), (3, 1, 1, 3));
        assert!(!t.is_trivial());
        let same = inv(6, 2, 3, 3, 2);
        assert!(magnification_tuple(&same, &same).unwrap().is_trivial());
    }

    #[test]
    fn weak_factor() {
        let with_r = |r| inv(r, r, 1, r, 1);
        assert_eq!(weak_cluster_factor(&with_r(6), &with_r(2)), Some(3));
        assert_eq!(weak_cluster_factor(&with_r(2), &with_r(2)), Some(1));
        assert_eq!(weak_cluster_factor(&with_r(2), &with_r(1)), Some(2));
        assert_eq!(weak_cluster_factor(&with_r(2), &with_r(3)), None);
    }
}
