//! Randomized properties of the algebraic checks: positivity propagation,
//! the Jacobian rank identity on random isolated seeds, agreement between
//! numeric evaluation and symbolic mutation, and the covering-pair
//! dichotomy on complete classes.

use clusterscope_core::*;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_positive(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(1i64..=9).into(), rng.gen_range(1i64..=9).into())
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> BigRational {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    random_positive(rng) * BigRational::from_integer(sign.into())
}

#[test]
fn positive_starts_stay_positive_on_catalog_seeds() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for name in ["smallex", "markov", "torus1", "torus2", "sphere4", "x6", "x7", "triang_b"] {
        let q = catalog_quiver(name).unwrap();
        let n = q.vertex_count();
        let s = Seed::initial(q);
        for _ in 0..12 {
            let start =
                PointAssignment::new((0..n).map(|_| random_positive(&mut rng)).collect());
            let path: Vec<usize> = (0..6).map(|_| rng.gen_range(0..n)).collect();
            let steps = evaluate_cluster_point(&s, &start, &path)
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            for (t, p) in steps.iter().enumerate() {
                assert!(
                    p.values.iter().all(|v| v.is_positive()),
                    "{name} step {t} lost positivity"
                );
            }
        }
    }
}

#[test]
fn random_isolated_seeds_satisfy_the_rank_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for round in 0..100 {
        let mutable = rng.gen_range(1..=3usize);
        let frozen = rng.gen_range(1..=3usize);
        let n = mutable + frozen;
        let mut arrows = Vec::new();
        for i in 0..mutable {
            for f in mutable..n {
                if rng.gen_bool(0.6) {
                    let c = rng.gen_range(1..=3);
                    if rng.gen_bool(0.5) {
                        arrows.push((i, f, c));
                    } else {
                        arrows.push((f, i, c));
                    }
                }
            }
        }
        let frozen_list: Vec<usize> = (mutable..n).collect();
        let q = IceQuiver::from_arrows(n, &arrows, &frozen_list).unwrap();
        if q.mutable_vertices().iter().any(|&v| (0..n).all(|j| q.entry(v, j) == 0)) {
            continue; // vacuous instances are covered by a unit test
        }
        let values = PointAssignment::new((0..n).map(|_| random_nonzero(&mut rng)).collect());
        let out = isolated_jacobian_check(&Seed::initial(q), &values).unwrap();
        assert!(matches!(out, JacobianOutcome::Pass { .. }), "round {round}: {out:?}");
    }
}

#[test]
fn numeric_evaluation_matches_symbolic_mutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for name in ["smallex", "markov", "torus2", "x6"] {
        let q = catalog_quiver(name).unwrap();
        let n = q.vertex_count();
        for _ in 0..8 {
            let path: Vec<usize> = (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(0..n)).collect();
            let start =
                PointAssignment::new((0..n).map(|_| random_positive(&mut rng)).collect());
            let symbolic = Seed::replay(q.clone(), &path).unwrap();
            let numeric = evaluate_cluster_point(&Seed::initial(q.clone()), &start, &path)
                .unwrap()
                .pop()
                .unwrap();
            for v in 0..n {
                let substituted = symbolic.cluster()[v].eval_rational(&start.values).unwrap();
                assert_eq!(substituted, numeric.values[v], "{name} vertex {v} path {path:?}");
            }
        }
    }
}

#[test]
fn complete_classes_split_between_hom_and_pair() {
    let with_hom = ["markov", "torus1", "sphere4", "x7"];
    let with_pair = ["smallex", "torus2", "x6", "triang_a", "triang_b", "triang_c"];
    for name in with_hom {
        let q = catalog_quiver(name).unwrap();
        match build_degenerate_hom(&q, 5).unwrap() {
            HomOutcome::Hom(h) => {
                // No frozen or isolated vertices anywhere in these classes.
                assert!(h.values.values().all(|v| v == &BigRational::from_integer(0.into())),
                    "{name}");
            }
            other => panic!("{name}: expected a homomorphism, got {other:?}"),
        }
        assert!(catalog_quiver(name).unwrap().covering_pairs().is_empty(), "{name}");
    }
    for name in with_pair {
        let q = catalog_quiver(name).unwrap();
        match build_degenerate_hom(&q, 5).unwrap() {
            HomOutcome::Inapplicable { .. } => {}
            other => panic!("{name}: expected inapplicability, got {other:?}"),
        }
    }
}
