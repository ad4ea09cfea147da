mod common;

use std::collections::BTreeSet;

use galmag::chains::product_chain_structure_check;
use galmag::{ExtensionModel, PermGroup, Permutation, SubgroupRel};
use proptest::prelude::*;

const MAX_DEGREE: usize = 6;
/// Keeps product orders under the lattice cap.
const PRODUCT_DEGREE: usize = 5;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn model() -> impl Strategy<Value = ExtensionModel> {
    model_on(MAX_DEGREE)
}

/// A random group on up to `max_degree` points and a random subgroup of it.
fn model_on(max_degree: usize) -> impl Strategy<Value = ExtensionModel> {
    (2..=max_degree)
        .prop_flat_map(|d| {
            (
                prop::collection::vec(perm(d), 1..=3),
                prop::collection::vec(any::<usize>(), 0..=2),
                Just(d),
            )
        })
        .prop_map(|(gens, picks, d)| {
            let g = PermGroup::from_generators(d, gens).unwrap();
            let elems = g.elements().unwrap();
            let sub: Vec<Permutation> = picks
                .iter()
                .map(|i| elems[i % elems.len()].clone())
                .collect();
            let h = PermGroup::from_generators(d, sub).unwrap();
            ExtensionModel::new(g, h).unwrap()
        })
}

fn set(g: &PermGroup) -> BTreeSet<common::Perm> {
    common::raw_set(g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_stabilizer(m in model()) {
        let g = m.group();
        for orbit in g.orbits() {
            let stab = g.point_stabilizer(orbit[0]).unwrap();
            prop_assert_eq!(orbit.len() * stab.order().unwrap(), g.order().unwrap());
        }
    }

    #[test]
    fn closure_matches_oracle(m in model()) {
        let g = m.group();
        let gens: Vec<_> = g.generators().iter().map(|p| p.images().to_vec()).collect();
        prop_assert_eq!(set(g), common::closure(g.degree(), &gens));
    }

    #[test]
    fn normalizer_and_closures(m in model()) {
        let (g, h) = (m.group(), m.sub());
        let elems = common::raw(g);
        let hs = set(h);
        let rel = m.rel();
        let n = set(&rel.normalizer().unwrap());
        prop_assert_eq!(&n, &common::normalizer(&elems, &hs));
        prop_assert!(hs.is_subset(&n));

        let nc = set(&rel.normal_closure().unwrap());
        prop_assert_eq!(&nc, &common::normal_closure(g.degree(), &elems, &hs));
        prop_assert!(common::is_normal(&elems, &nc));

        let core = set(&rel.core().unwrap());
        prop_assert!(core.is_subset(&hs));
        prop_assert!(common::is_normal(&elems, &core));
    }

    #[test]
    fn coset_action_shape(m in model()) {
        let rel = m.rel();
        let act = rel.coset_action().unwrap();
        prop_assert_eq!(act.degree(), rel.index().unwrap());
        prop_assert!(act.group().is_transitive());
        let kernel: BTreeSet<common::Perm> = act.kernel().iter().map(|p| p.images().to_vec()).collect();
        prop_assert_eq!(kernel, set(&rel.core().unwrap()));
    }

    #[test]
    fn invariants_identities_and_oracle(m in model()) {
        let inv = m.invariants().unwrap();
        prop_assert!(inv.identities_hold());
        let hs = set(m.sub());
        prop_assert_eq!(inv.r, common::fixed_cosets(&common::raw(m.group()), &hs));
        prop_assert_eq!(m.fixed_point_cluster_size().unwrap(), inv.r);
    }

    #[test]
    fn deciders_are_consistent(m in model()) {
        let prim = m.is_primitive().unwrap();
        if m.is_general_primitive().unwrap() {
            prop_assert!(prim);
        }
        if m.quick_primitive_check().unwrap().is_some() {
            prop_assert!(prim);
        }
        if m.quick_general_primitive_check().unwrap().is_some() {
            prop_assert!(m.is_general_primitive().unwrap());
        }
        for w in [m.scm_witness().unwrap(), m.sgm_witness().unwrap()].into_iter().flatten() {
            prop_assert!(w.verify(&m).unwrap());
        }
        if m.chains_coincide().unwrap().is_some() {
            prop_assert!(prim);
        }
    }

    #[test]
    fn chains_are_hereditary(m in model()) {
        let d = m.descending_chain().unwrap();
        for w in d.subgroups().windows(2) {
            let rel = SubgroupRel::new(m.group().clone(), w[0].clone()).unwrap();
            prop_assert!(rel.normalizer().unwrap().same_elements(&w[1]).unwrap());
            prop_assert!(w[1].order().unwrap() > w[0].order().unwrap());
        }
        let a = m.ascending_chain().unwrap();
        for w in a.subgroups().windows(2) {
            prop_assert!(m.sub().is_subgroup_of(&w[1]).unwrap());
            prop_assert!(SubgroupRel::new(w[0].clone(), w[1].clone()).unwrap().is_normal().unwrap());
        }
    }

    #[test]
    fn products_multiply_and_decompose(l in model_on(PRODUCT_DEGREE), j in model_on(PRODUCT_DEGREE)) {
        let p = l.product(&j).unwrap();
        let want = l.invariants().unwrap().componentwise_product(&j.invariants().unwrap());
        prop_assert_eq!(p.invariants().unwrap(), want);
        prop_assert!(product_chain_structure_check(&l, &j).unwrap());
        if !l.is_trivial().unwrap() && !j.is_trivial().unwrap() {
            prop_assert!(!p.is_general_primitive().unwrap());
        }
    }

    #[test]
    fn regenerated_generators_change_nothing(m in model()) {
        // same groups, generators replaced by the full element lists
        let g2 = PermGroup::from_generators(m.group().degree(), m.group().elements().unwrap().to_vec()).unwrap();
        let h2 = PermGroup::from_generators(m.sub().degree(), m.sub().elements().unwrap().to_vec()).unwrap();
        let m2 = ExtensionModel::new(g2, h2).unwrap();
        prop_assert_eq!(m.invariants().unwrap(), m2.invariants().unwrap());
        prop_assert_eq!(m.is_primitive().unwrap(), m2.is_primitive().unwrap());
        prop_assert_eq!(m.is_general_primitive().unwrap(), m2.is_general_primitive().unwrap());
        prop_assert_eq!(
            m.descending_chain().unwrap().orders().unwrap(),
            m2.descending_chain().unwrap().orders().unwrap()
        );
        let (w1, w2) = (m.sgm_witness().unwrap(), m2.sgm_witness().unwrap());
        prop_assert_eq!(w1.map(|w| w.indices), w2.map(|w| w.indices));
    }
}

#[test]
fn small_groups_are_what_they_claim() {
    let orders: Vec<usize> = common::small_groups()
        .iter()
        .map(|(_, g)| g.order().unwrap())
        .collect();
    assert_eq!(orders, vec![4, 8, 8, 8, 36, 12, 12]);
    // the quaternion group has a single involution
    let q = &common::small_groups()[3].1;
    let involutions = q
        .elements()
        .unwrap()
        .iter()
        .filter(|p| p.order() == 2)
        .count();
    assert_eq!(involutions, 1);
}
