mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{attach_trees, cycle_pairs, orient, random_leafless, wog};
use wog_toric::exactalg::{bounded_integer_kernel, determinant, make_primitive, primitive_integer_vector, Matrix};
use wog_toric::graph::{prune_leaves, simple_cycles, Cycle, EdgeGraph};
use wog_toric::oracle::{saturate_markov_basis, Budget};
use wog_toric::toric::{
    balanced_cycle_generator, compute_toric_ideal, incidence_matrix, incidence_matrix_in, is_balanced,
    is_uniformly_balanced, is_zero_ideal, phi_image, principal_generator,
};

fn cofactor(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor(&minor)
        })
        .sum()
}

fn square_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-5i64..=5, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn determinant_matches_cofactor_expansion(rows in square_matrix()) {
        let expected = cofactor(&rows);
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        prop_assert_eq!(determinant(&Matrix::from_rows(rows).unwrap()).unwrap(), expected);
        prop_assert_eq!(determinant(&Matrix::from_rows(big).unwrap()).unwrap(), BigInt::from(expected));
    }

    #[test]
    fn primitive_vector_ignores_scaling(v in prop::collection::vec(-20i64..=20, 1..6), k in -6i64..=6) {
        prop_assume!(k != 0 && v.iter().any(|&x| x != 0));
        let scaled: Vec<i64> = v.iter().map(|x| x * k).collect();
        prop_assert_eq!(make_primitive(scaled), make_primitive(v.clone()));
        let halves: Vec<Ratio<i64>> = v.iter().map(|&x| Ratio::new(x * k, 2)).collect();
        prop_assert_eq!(primitive_integer_vector(&halves).unwrap(), make_primitive(v));
    }

    #[test]
    fn bounded_kernel_is_closed(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=3)) {
        let m = Matrix::from_rows(rows).unwrap();
        let found: BTreeSet<Vec<i64>> = bounded_integer_kernel(&m, 3).into_iter().collect();
        for u in &found {
            prop_assert!(u.iter().any(|&x| x != 0) && u.iter().all(|x| x.abs() <= 3));
            prop_assert!(m.mul_vec(u).unwrap().iter().all(|&x| x == 0));
            prop_assert!(found.contains(&u.iter().map(|x| -x).collect::<Vec<_>>()));
            for v in &found {
                let s: Vec<i64> = u.iter().zip(v).map(|(a, b)| a + b).collect();
                if s.iter().any(|&x| x != 0) && s.iter().all(|x| x.abs() <= 3) {
                    prop_assert!(found.contains(&s));
                }
            }
        }
    }

    #[test]
    fn pruning_is_idempotent_and_preserves_the_ideal(seed in any::<u64>(), extra in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let core = random_leafless(&mut rng, 7, 3);
        let g = attach_trees(&mut rng, &core, extra);
        let once = prune_leaves(&g);
        let twice = prune_leaves(&once.graph);
        prop_assert!(twice.removed_edges.is_empty());
        prop_assert_eq!(&twice.graph, &once.graph);
        prop_assert_eq!(once.edge_map, (1..=core.edge_count()).collect::<Vec<_>>());
        let identity: Vec<usize> = (1..=core.edge_count()).collect();
        let lifted: Vec<_> = compute_toric_ideal(&core).unwrap().generators.iter().map(|b| b.embed(g.edge_count(), &identity)).collect();
        prop_assert_eq!(compute_toric_ideal(&g).unwrap().generators, lifted);
    }

    #[test]
    fn cycles_match_subset_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_leafless(&mut rng, 7, 1);
        let listed: BTreeSet<Vec<usize>> = simple_cycles(&g).iter().map(Cycle::sorted_edges).collect();
        let mut brute = BTreeSet::new();
        for subset in 1u32..1 << g.edge_count() {
            let edges: Vec<usize> = (1..=g.edge_count()).filter(|e| subset >> (e - 1) & 1 == 1).collect();
            if Cycle::from_edges(&g, &edges).is_ok() {
                brute.insert(edges);
            }
        }
        prop_assert_eq!(listed, brute);
    }

    #[test]
    fn emitted_binomials_are_homogeneous(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let extra = rng.gen_range(0..3);
        let core = random_leafless(&mut rng, 7, 3);
        let g = attach_trees(&mut rng, &core, extra);
        for b in compute_toric_ideal(&g).unwrap().generators {
            prop_assert_eq!(phi_image(&g, b.plus()).unwrap(), phi_image(&g, b.minus()).unwrap());
        }
    }

    #[test]
    fn balanced_cycles_use_every_edge(seed in any::<u64>(), half in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2 * half;
        let pairs = orient(&cycle_pairs(n), rng.gen());
        let all: Vec<usize> = (1..=n).collect();
        let w: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let g = wog(&w, &pairs);
        let balanced = is_balanced(&g, &all).unwrap();
        prop_assert_eq!(balanced, !is_zero_ideal(&g).is_zero);
        if balanced {
            let b = balanced_cycle_generator(&g, &all).unwrap();
            prop_assert_eq!(b.support(), all.iter().copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(&b, &principal_generator(&g).unwrap());
            for u in bounded_integer_kernel(&incidence_matrix_in::<i64, _>(&g).matrix, 4) {
                prop_assert!(u.iter().all(|&x| x != 0));
            }
        }
    }

    #[test]
    fn constant_weight_balance_is_uniform(mask in any::<u64>(), half in 2usize..=5, c in 2u64..=5) {
        let n = 2 * half;
        let g = wog(&vec![c; n], &orient(&cycle_pairs(n), mask));
        let all: Vec<usize> = (1..=n).collect();
        prop_assert_eq!(is_balanced(&g, &all).unwrap(), is_uniformly_balanced(&g, &all).unwrap());
    }

    #[test]
    fn oracle_is_deterministic(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_leafless(&mut rng, 7, 3);
        let a = incidence_matrix(&g);
        prop_assert_eq!(saturate_markov_basis(&a, &Budget::default()), saturate_markov_basis(&a, &Budget::default()));
    }
}
