//! Randomized invariants over small arbitrary complexes.

use proptest::prelude::*;

use topo_core::cohomology::{cap, cup_cochain, kronecker, verify_cup_laws};
use topo_core::complex::SimplicialComplex;
use topo_core::exactlinalg::PrimeField;
use topo_core::homology::{
    betti_numbers, chain_complex, euler_three_ways, homology_groups, Coefficients,
};
use topo_core::pi1::{abelianization, edge_path_group_with_tree, verify_hurewicz};

fn arb_tokens(max_vertex: u32, max_simplices: usize, max_size: usize) -> BoxedStrategy<Vec<Vec<String>>> {
    prop::collection::vec(
        prop::collection::btree_set(0..max_vertex, 1..=max_size),
        1..=max_simplices,
    )
    .prop_map(|sets| {
        sets.into_iter()
            .map(|s| s.into_iter().map(|v| format!("v{}", v)).collect())
            .collect()
    })
    .boxed()
}

fn arb_complex() -> BoxedStrategy<SimplicialComplex> {
    arb_tokens(8, 10, 4)
        .prop_map(|t| SimplicialComplex::build_complex(&t).unwrap())
        .boxed()
}

fn small_complex() -> BoxedStrategy<SimplicialComplex> {
    arb_tokens(5, 6, 3)
        .prop_map(|t| SimplicialComplex::build_complex(&t).unwrap())
        .boxed()
}

fn groups_of(k: &SimplicialComplex) -> Vec<(usize, Vec<String>)> {
    homology_groups(k, Coefficients::Z, false)
        .unwrap()
        .iter()
        .map(|g| (g.betti, g.torsion.iter().map(|t| t.to_string()).collect()))
        .collect()
}

proptest! {
    #[test]
    fn boundary_of_boundary_vanishes(k in arb_complex()) {
        let cx = chain_complex(&k, false);
        for q in 1..=k.dim().max(0) as usize {
            let prod = cx.boundary(q).mul(&cx.boundary(q + 1));
            prop_assert!(prod.is_zero_matrix());
        }
    }

    #[test]
    fn closure_is_idempotent(k in arb_complex()) {
        let again = SimplicialComplex::build_complex(&k.maximal_simplices_tokens()).unwrap();
        prop_assert_eq!(again, k);
    }

    #[test]
    fn degree_zero_counts_components(k in arb_complex()) {
        let b = betti_numbers(&k, Coefficients::Q).unwrap();
        prop_assert_eq!(b[0], k.components_count());
    }

    #[test]
    fn euler_routes_agree(k in arb_complex()) {
        prop_assert!(euler_three_ways(&k).unwrap().agree());
    }

    #[test]
    fn cone_is_acyclic(k in arb_complex()) {
        let c = k.cone("apex").unwrap();
        for g in homology_groups(&c, Coefficients::Z, true).unwrap() {
            prop_assert!(g.is_trivial(), "{}", g);
        }
    }

    #[test]
    fn relabeling_preserves_homology(k in arb_complex()) {
        let renamed = k
            .relabel(&|t| {
                let d: u32 = t[1..].parse().unwrap();
                format!("w{}", 9 - d)
            })
            .unwrap();
        prop_assert_eq!(groups_of(&renamed), groups_of(&k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn subdivision_preserves_homology(k in arb_complex()) {
        let sd = k.barycentric_subdivision();
        prop_assert_eq!(groups_of(&sd), groups_of(&k));
    }

    #[test]
    fn product_multiplies_alternating_sums(
        k in small_complex(),
        l in small_complex(),
    ) {
        let p = k.product(&l);
        let ek = euler_three_ways(&k).unwrap().value().unwrap();
        let el = euler_three_ways(&l).unwrap().value().unwrap();
        let ep = euler_three_ways(&p).unwrap().value().unwrap();
        prop_assert_eq!(ep, ek * el);
    }

    #[test]
    fn cup_laws_hold_mod_two(k in small_complex()) {
        let f2 = PrimeField::new(2).unwrap();
        let r = verify_cup_laws(&f2, &k).unwrap();
        prop_assert!(r.passed(), "{:?}", r.items);
    }

    #[test]
    fn cap_is_adjoint_to_cup(k in arb_complex(), p_pick in 0usize..4) {
        let f5 = PrimeField::new(5).unwrap();
        prop_assume!(k.dim() >= 1);
        let n = k.dim() as usize;
        let p = p_pick.min(n);
        let q = n - p;
        let z: Vec<u64> = (0..k.simplices(n).len() as u64).map(|j| (3 * j + 1) % 5).collect();
        let phi: Vec<u64> = (0..k.simplices(p).len() as u64).map(|i| (2 * i + 1) % 5).collect();
        for t in 0..k.simplices(q).len() {
            let mut theta = vec![0u64; k.simplices(q).len()];
            theta[t] = 1;
            let capped = cap(&f5, &k, n, &z, p, &phi);
            let lhs = kronecker(&f5, &theta, &capped);
            let cup = cup_cochain(&f5, &k, p, q, &phi, &theta);
            let rhs = kronecker(&f5, &cup, &z);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tree_choice_does_not_change_abelianization(k in small_complex()) {
        prop_assume!(k.components_count() == 1);
        let nv = k.n_vertices() as u32;
        let natural: Vec<u32> = (0..nv).collect();
        let reversed: Vec<u32> = (0..nv).rev().collect();
        let rotated: Vec<u32> = (0..nv).map(|i| (i + nv / 2) % nv).collect();
        let base = abelianization(&edge_path_group_with_tree(&k, &natural).unwrap());
        for pr in [reversed, rotated] {
            let other = abelianization(&edge_path_group_with_tree(&k, &pr).unwrap());
            prop_assert_eq!(other.betti, base.betti);
            prop_assert_eq!(&other.torsion, &base.torsion);
        }
    }

    #[test]
    fn degree_one_classes_match_cycles(k in small_complex()) {
        prop_assume!(k.components_count() == 1);
        let r = verify_hurewicz(&k).unwrap();
        prop_assert!(r.passed(), "{:?}", r.items);
    }
}

proptest! {
    #[test]
    fn power_trace_matches_closed_form(
        degrees in prop::collection::vec((0u64..6).prop_map(|d| 2 * d + 1), 0..=6),
        l in -6i64..=6,
    ) {
        use num_bigint::BigInt;
        use topo_core::hopfcatalog::{power_map_lefschetz, ExteriorModel};
        let m = ExteriorModel::new("m", degrees).unwrap();
        let got = power_map_lefschetz(&m, l).unwrap();
        let expect = (BigInt::from(1) - BigInt::from(l)).pow(m.rank() as u32);
        prop_assert_eq!(got, expect);
    }
}
