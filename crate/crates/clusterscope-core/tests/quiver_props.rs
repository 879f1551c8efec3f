//! Randomized property tests for quiver operations, checked against
//! brute-force oracles where one exists.

use clusterscope_core::{CoveringPair, IceQuiver};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random ice quiver: each unordered pair gets an arrow with the given
/// density, multiplicity 1..=2, random direction; each vertex freezes with
/// probability 1/5.
fn random_quiver(rng: &mut ChaCha8Rng, n: usize, density: f64) -> IceQuiver {
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                let c = rng.gen_range(1..=2);
                if rng.gen_bool(0.5) {
                    arrows.push((i, j, c));
                } else {
                    arrows.push((j, i, c));
                }
            }
        }
    }
    let frozen: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.2)).collect();
    IceQuiver::from_arrows(n, &arrows, &frozen).unwrap()
}

fn random_mutable_vertex(rng: &mut ChaCha8Rng, q: &IceQuiver) -> Option<usize> {
    let mv = q.mutable_vertices();
    if mv.is_empty() {
        None
    } else {
        Some(mv[rng.gen_range(0..mv.len())])
    }
}

#[test]
fn mutation_is_involutive_on_random_quivers() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let q = random_quiver(&mut rng, n, 0.5);
        let Some(k) = random_mutable_vertex(&mut rng, &q) else { continue };
        assert_eq!(q.mutate(k).unwrap().mutate(k).unwrap(), q);
    }
}

#[test]
fn mutation_preserves_skew_symmetry_and_exchange_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let n = rng.gen_range(2..=6);
        let mut q = random_quiver(&mut rng, n, 0.5);
        let rank = q.exchange_rank();
        for _step in 0..12 {
            let Some(k) = random_mutable_vertex(&mut rng, &q) else { break };
            match q.mutate(k) {
                Ok(next) => q = next,
                // Arrow counts can blow up along adversarial paths; the
                // overflow error is the contract, so just stop this walk.
                Err(_) => break,
            }
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(q.entry(i, j), -q.entry(j, i));
                }
            }
            assert_eq!(q.exchange_rank(), rank, "rank drifted along mutation path");
        }
    }
}

#[test]
fn freezing_preserves_full_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut seen_full = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let q = random_quiver(&mut rng, n, 0.6);
        if !q.is_full_rank() {
            continue;
        }
        seen_full += 1;
        let mv = q.mutable_vertices();
        let take = rng.gen_range(0..=mv.len());
        let q2 = q.freeze(&mv[..take]).unwrap();
        assert!(q2.is_full_rank(), "freezing broke full rank");
    }
    assert!(seen_full > 20, "generator produced too few full-rank quivers");
}

/// Walks of bounded length witnessing "a cycle upstream of v" (repeat on a
/// backward walk) or "a cycle downstream of v".
fn has_repeat_walk(adj: &[Vec<usize>], start: usize, max_len: usize) -> bool {
    fn dfs(adj: &[Vec<usize>], walk: &mut Vec<usize>, max_len: usize) -> bool {
        let v = *walk.last().unwrap();
        for &w in &adj[v] {
            if walk.contains(&w) {
                return true;
            }
            if walk.len() <= max_len {
                walk.push(w);
                if dfs(adj, walk, max_len) {
                    return true;
                }
                walk.pop();
            }
        }
        false
    }
    dfs(adj, &mut vec![start], max_len)
}

/// Covering pairs the slow way: enumerate walks through each arrow.
fn covering_pairs_oracle(q: &IceQuiver) -> Vec<CoveringPair> {
    let n = q.vertex_count();
    let mut fwd = vec![Vec::new(); n];
    let mut bwd = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if q.is_mutable(i) && q.is_mutable(j) && q.entry(i, j) > 0 {
                fwd[i].push(j);
                bwd[j].push(i);
            }
        }
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !(q.is_mutable(a) && q.is_mutable(b) && q.entry(a, b) > 0) {
                continue;
            }
            let upstream_cycle = has_repeat_walk(&bwd, a, 2 * n);
            let downstream_cycle = has_repeat_walk(&fwd, b, 2 * n);
            if !(upstream_cycle && downstream_cycle) {
                out.push(CoveringPair { source: a, target: b });
            }
        }
    }
    out
}

#[test]
fn covering_pairs_match_bruteforce_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let q = random_quiver(&mut rng, n, 0.5);
        assert_eq!(q.covering_pairs(), covering_pairs_oracle(&q));
    }
}

#[test]
fn structural_class_implication_chain_on_random_quivers() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..400 {
        let n = rng.gen_range(0..=7);
        let q = random_quiver(&mut rng, n, 0.35);
        let c = q.structural_class();
        assert!(!c.isolated || c.a_type);
        assert!(!c.a_type || c.finite_type);
        assert!(!c.finite_type || c.tree_type);
        assert!(!c.tree_type || c.acyclic);
    }
}

#[test]
fn source_or_sink_with_arrow_forces_a_covering_pair() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut interesting = 0;
    for _ in 0..400 {
        let n = rng.gen_range(2..=6);
        let q = random_quiver(&mut rng, n, 0.5);
        let mv = q.mutable_vertices();
        let has_source_or_sink = mv.iter().any(|&v| {
            let outs = mv.iter().filter(|&&w| q.entry(v, w) > 0).count();
            let ins = mv.iter().filter(|&&w| q.entry(w, v) > 0).count();
            (outs > 0 && ins == 0) || (ins > 0 && outs == 0)
        });
        if has_source_or_sink {
            interesting += 1;
            assert!(
                !q.covering_pairs().is_empty(),
                "mutable subquiver has a source or sink but no covering pair"
            );
        }
    }
    assert!(interesting > 50, "generator produced too few sources/sinks");
}

#[test]
fn canonical_form_is_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let q = random_quiver(&mut rng, n, 0.5);
        // Random permutation by sorting random keys.
        let mut keyed: Vec<(u64, usize)> = (0..n).map(|v| (rng.gen(), v)).collect();
        keyed.sort();
        let mut perm = vec![0usize; n];
        for (slot, &(_, v)) in keyed.iter().enumerate() {
            perm[v] = slot;
        }
        let p = q.permuted(&perm).unwrap();
        assert_eq!(q.canonical_form(), p.canonical_form());
    }
}

#[test]
fn canonical_form_separates_different_arrow_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..100 {
        let n = rng.gen_range(2..=6);
        let q = random_quiver(&mut rng, n, 0.5);
        // Bump one pair's count: total arrow weight differs, so the quivers
        // cannot be isomorphic.
        let i = rng.gen_range(0..n);
        let j = (i + 1 + rng.gen_range(0..n - 1)) % n;
        let mut rows = q.matrix_rows();
        rows[i][j] += 3;
        rows[j][i] -= 3;
        let bumped = IceQuiver::new(&rows, &q.frozen_vertices()).unwrap();
        assert_ne!(q.canonical_form(), bumped.canonical_form());
    }
}

#[test]
fn delete_vertices_index_map_is_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let q = random_quiver(&mut rng, n, 0.5);
        let drop: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        let (sub, map) = q.delete_vertices(&drop);
        assert_eq!(sub.vertex_count() + drop.len(), n);
        for (new_i, &old_i) in map.iter().enumerate() {
            assert_eq!(sub.is_frozen(new_i), q.is_frozen(old_i));
            for (new_j, &old_j) in map.iter().enumerate() {
                assert_eq!(sub.entry(new_i, new_j), q.entry(old_i, old_j));
            }
        }
    }
}
