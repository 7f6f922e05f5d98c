#![allow(clippy::needless_range_loop)]
mod common;

use biclayout::layout::random_layout;
use biclayout::model::{cons, expand};
use biclayout::objectives::{
    demerit_perm, demerit_triple, evaluate, partial_score, score_area, score_prox,
};
use biclayout::postprocess::{density, similarity, suggest_with_fraction};
use biclayout::tsp::solve_tsp;
use biclayout::{
    compute_blocks, run_algorithm, suggest, zone_layout, AlgorithmId, Axis, BinaryMatrix, Layout,
    ObjectiveKind, SearchConfig, TspConfig,
};
use common::oracle::{self, Instance};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn instance(seed: u64, max_m: usize, max_n: usize, max_k: usize) -> Instance {
    oracle::random_instance(&mut ChaCha8Rng::seed_from_u64(seed), max_m, max_n, max_k)
}

fn random_matrix(rng: &mut impl Rng, m: usize, n: usize) -> BinaryMatrix {
    let p: f64 = rng.random_range(0.1..0.9);
    let ones: Vec<(usize, usize)> = (0..m)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .filter(|_| rng.random_bool(p))
        .collect();
    BinaryMatrix::new(m, n, ones).unwrap()
}

proptest! {
    #[test]
    fn cons_partitions_into_maximal_runs(xs in prop::collection::btree_set(0usize..40, 0..20)) {
        let runs = cons(xs.iter().copied());
        let flat: Vec<usize> = runs.iter().flat_map(|r| r.clone()).collect();
        prop_assert_eq!(flat, xs.iter().copied().collect::<Vec<_>>());
        for w in runs.windows(2) {
            prop_assert!(w[0].end < w[1].start);
        }
        let interval = xs.is_empty() || xs.iter().next_back().unwrap() - xs.iter().next().unwrap() + 1 == xs.len();
        prop_assert_eq!(runs.len() == 1, !xs.is_empty() && interval);
    }

    #[test]
    fn blocks_partition_axes(seed in any::<u64>()) {
        let inst = instance(seed, 10, 10, 5);
        let bc = inst.biclustering();
        let d = compute_blocks(&bc, inst.m, inst.n).unwrap();
        for (axis, len) in [(Axis::Row, inst.m), (Axis::Column, inst.n)] {
            let blocks = d.blocks(axis);
            prop_assert_eq!(blocks.iter().map(|b| b.len()).sum::<usize>(), len);
            let sigs: std::collections::BTreeSet<_> = blocks.iter().map(|b| b.signature.clone()).collect();
            prop_assert_eq!(sigs.len(), blocks.len());
            let memberships = bc.memberships(axis, len);
            for b in blocks {
                for &e in &b.members {
                    prop_assert_eq!(&memberships[e], &b.signature);
                }
            }
        }
    }

    #[test]
    fn expand_keeps_blocks_and_clusters_whole(seed in any::<u64>(), shuffle_seed in any::<u64>()) {
        let inst = instance(seed, 10, 10, 5);
        let bc = inst.biclustering();
        let d = compute_blocks(&bc, inst.m, inst.n).unwrap();
        let l = random_layout(&d, shuffle_seed);
        let pi = expand(l.sigma_r(), d.row_blocks()).unwrap();
        prop_assert_eq!(&pi, l.pi_r());
        let mut seen = vec![false; inst.m];
        for &e in pi.order() { prop_assert!(!seen[e]); seen[e] = true; }
        for b in d.row_blocks() {
            prop_assert_eq!(cons(pi.image(&b.members)).len(), 1);
        }
        for (i, cl) in bc.clusters().iter().enumerate() {
            let union: usize = d.row_blocks().iter().filter(|b| b.signature.contains(&i)).map(|b| b.len()).sum();
            prop_assert_eq!(union, cl.rows().len());
        }
    }

    #[test]
    fn area_and_proximity_bounds(seed in any::<u64>(), shuffle_seed in any::<u64>()) {
        let inst = instance(seed, 12, 12, 4);
        let bc = inst.biclustering();
        let d = compute_blocks(&bc, inst.m, inst.n).unwrap();
        let l = random_layout(&d, shuffle_seed);
        for cl in bc.clusters() {
            let a = cl.area();
            let single = cons(l.pi_r().image(cl.rows())).len() == 1 && cons(l.pi_c().image(cl.cols())).len() == 1;
            let unsquared = oracle::area_unsquared(cl.rows(), cl.cols(), l.pi_r().positions(), l.pi_c().positions());
            prop_assert_eq!(unsquared, a);
            let prox = score_prox(cl, l.pi_r(), l.pi_c()).unwrap();
            prop_assert!(prox >= a);
            prop_assert_eq!(prox == a, single);
            let sq = score_area(cl, l.pi_r(), l.pi_c());
            prop_assert!(sq <= a * a);
            prop_assert_eq!(sq == a * a, single);
        }
    }

    #[test]
    fn demerit_symmetric_and_reversal_invariant(seed in any::<u64>(), shuffle_seed in any::<u64>()) {
        let inst = instance(seed, 10, 10, 5);
        let bc = inst.biclustering();
        let d = compute_blocks(&bc, inst.m, inst.n).unwrap();
        for axis in [Axis::Row, Axis::Column] {
            let anchors = d.blocks(axis.other());
            let blocks = d.blocks(axis);
            for a in anchors {
                for x in blocks {
                    for y in blocks {
                        prop_assert_eq!(demerit_triple(a, x, y), demerit_triple(a, y, x));
                    }
                }
            }
            let l = random_layout(&d, shuffle_seed);
            let mut rev = l.sigma(axis).to_vec();
            rev.reverse();
            prop_assert_eq!(demerit_perm(&d, axis, l.sigma(axis)), demerit_perm(&d, axis, &rev));
        }
    }

    #[test]
    fn column_demerit_ignores_row_order(seed in any::<u64>(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let inst = instance(seed, 10, 10, 5);
        let bc = inst.biclustering();
        let d = compute_blocks(&bc, inst.m, inst.n).unwrap();
        let a = random_layout(&d, s1);
        let b = random_layout(&d, s2);
        let mixed = Layout::from_block_orders(&d, b.sigma_r().to_vec(), a.sigma_c().to_vec()).unwrap();
        prop_assert_eq!(demerit_perm(&d, Axis::Column, a.sigma_c()), demerit_perm(&d, Axis::Column, mixed.sigma_c()));
    }

    #[test]
    fn scores_match_oracle_and_partial_on_full(seed in any::<u64>(), shuffle_seed in any::<u64>()) {
        let inst = instance(seed, 10, 10, 5);
        let bc = inst.biclustering();
        let d = compute_blocks(&bc, inst.m, inst.n).unwrap();
        let l = random_layout(&d, shuffle_seed);
        let (pr, pc) = (l.pi_r().positions(), l.pi_c().positions());
        prop_assert_eq!(evaluate(ObjectiveKind::Proximity, &bc, &d, &l).unwrap(), oracle::prox(&inst, pr, pc));
        prop_assert_eq!(evaluate(ObjectiveKind::ConsecutiveClusterArea, &bc, &d, &l).unwrap(), oracle::area(&inst, pr, pc));
        prop_assert_eq!(evaluate(ObjectiveKind::UninterruptedArea, &bc, &d, &l).unwrap(), oracle::unint(&inst, pr, pc));
        prop_assert_eq!(
            evaluate(ObjectiveKind::Demerit, &bc, &d, &l).unwrap(),
            oracle::demerit_order(&inst, true, l.sigma_r()) + oracle::demerit_order(&inst, false, l.sigma_c())
        );
        for kind in ObjectiveKind::ALL {
            prop_assert_eq!(partial_score(kind, l.sigma_r(), l.sigma_c(), &bc, &d), evaluate(kind, &bc, &d, &l).unwrap());
        }
    }

    #[test]
    fn scores_independent_of_block_labels(seed in any::<u64>(), shuffle_seed in any::<u64>()) {
        // reversing cluster order relabels every signature without moving any element
        let inst = instance(seed, 10, 10, 5);
        let bc = inst.biclustering();
        let mut flipped = inst.clone();
        flipped.clusters.reverse();
        let bc2 = flipped.biclustering();
        let d = compute_blocks(&bc, inst.m, inst.n).unwrap();
        let d2 = compute_blocks(&bc2, inst.m, inst.n).unwrap();
        let l = random_layout(&d, shuffle_seed);
        let l2 = Layout::from_element_orders(&d2, l.pi_r().clone(), l.pi_c().clone()).unwrap();
        for kind in ObjectiveKind::ALL {
            prop_assert_eq!(evaluate(kind, &bc, &d, &l).unwrap(), evaluate(kind, &bc2, &d2, &l2).unwrap());
        }
    }

    #[test]
    fn every_algorithm_returns_valid_deterministic_layout(seed in any::<u64>()) {
        let inst = instance(seed, 8, 8, 4);
        let bc = inst.biclustering();
        let d = compute_blocks(&bc, inst.m, inst.n).unwrap();
        let cfg = SearchConfig { seed, ..SearchConfig::default() };
        for id in AlgorithmId::ALL {
            let l = run_algorithm(id, &d, &bc, &cfg).unwrap();
            let again = run_algorithm(id, &d, &bc, &cfg).unwrap();
            prop_assert_eq!(&l, &again);
            prop_assert!(Layout::from_element_orders(&d, l.pi_r().clone(), l.pi_c().clone()).is_ok());
        }
    }

    #[test]
    fn two_opt_never_worse_than_construction(n in 1usize..12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut w = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.random_range(0..50);
                w[i][j] = v;
                w[j][i] = v;
            }
        }
        let s = solve_tsp(&w, &TspConfig { seed, ..TspConfig::default() }).unwrap();
        prop_assert!(s.cost <= s.initial_cost);
        let mut sorted = s.tour.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..n).collect::<Vec<_>>());
    }

    #[test]
    fn suggestions_respect_threshold(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = oracle::random_instance(&mut rng, 10, 10, 3);
        let a = random_matrix(&mut rng, inst.m, inst.n);
        let bc = inst.biclustering();
        let s = suggest(&a, &bc).unwrap();
        for (axis, len) in [(Axis::Row, inst.m), (Axis::Column, inst.n)] {
            let memberships = bc.memberships(axis, len);
            for e in (0..len).filter(|&e| memberships[e].is_empty()) {
                let mut any = false;
                for (i, cl) in bc.clusters().iter().enumerate() {
                    let ok = similarity(&a, axis, e, cl.members(axis.other())).unwrap()
                        >= density(cl, &a).unwrap() / Ratio::from_integer(2);
                    prop_assert_eq!(ok, s.suggested(axis)[i].contains(&e));
                    any |= ok;
                }
                prop_assert_eq!(!any, s.leftover(axis).contains(&e));
            }
        }
    }

    #[test]
    fn zone_layout_is_bijective_and_keeps_clustered_order(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = oracle::random_instance(&mut rng, 10, 10, 3);
        let a = random_matrix(&mut rng, inst.m, inst.n);
        let bc = inst.biclustering();
        let d = compute_blocks(&bc, inst.m, inst.n).unwrap();
        let base = random_layout(&d, seed);
        let z = zone_layout(&base, &suggest(&a, &bc).unwrap(), &bc, &d).unwrap();
        for axis in [Axis::Row, Axis::Column] {
            let clustered = |l: &Layout| -> Vec<usize> {
                l.pi(axis).order().iter().copied()
                    .filter(|&e| !d.blocks(axis)[d.block_of(axis, e)].is_unclustered())
                    .collect()
            };
            prop_assert_eq!(clustered(&base), clustered(&z));
            prop_assert_eq!(z.pi(axis).len(), d.element_count(axis));
        }
    }

    #[test]
    fn lower_threshold_only_grows_suggestions(seed in any::<u64>(), num in 0u64..4, den in 1u64..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = oracle::random_instance(&mut rng, 10, 10, 3);
        let a = random_matrix(&mut rng, inst.m, inst.n);
        let bc = inst.biclustering();
        let high = Ratio::new(num, den);
        let low = high / 2;
        let strict = suggest_with_fraction(&a, &bc, high).unwrap();
        let loose = suggest_with_fraction(&a, &bc, low).unwrap();
        for axis in [Axis::Row, Axis::Column] {
            for (s, l) in strict.suggested(axis).iter().zip(loose.suggested(axis)) {
                prop_assert!(s.iter().all(|e| l.contains(e)));
            }
        }
    }
}
