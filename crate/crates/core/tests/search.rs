use neighborly::bounds::{alon_lower, report};
use neighborly::search::{
    best_greedy, build_graph, certify, greedy_family, max_family, max_family_in, Budget,
    Certification, CompatGraph, Evidence, SearchStatus,
};
use neighborly::{is_k_neighborly, JokerVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Distance on the text form, independent of the mask encoding.
fn text_distance(a: &str, b: &str) -> usize {
    a.chars()
        .zip(b.chars())
        .filter(|&(x, y)| x != '*' && y != '*' && x != y)
        .count()
}

fn words(d: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..d {
        out = out
            .iter()
            .flat_map(|w| ["0", "1", "*"].map(|s| format!("{w}{s}")))
            .collect();
    }
    out
}

fn brute_force_max(k: usize, d: usize) -> usize {
    let ws = words(d);
    let n = ws.len();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let chosen: Vec<&String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &ws[i]).collect();
        let ok = chosen.iter().enumerate().all(|(i, a)| {
            chosen[i + 1..].iter().all(|b| {
                let dist = text_distance(a, b);
                dist >= 1 && dist <= k
            })
        });
        if ok {
            best = best.max(chosen.len());
        }
    }
    best
}

#[test]
fn matches_subset_enumeration_for_tiny_dimensions() {
    let plain = Budget {
        formula_cutoff: false,
        use_constructions: false,
        greedy_restarts: 1,
        ..Budget::unlimited()
    };
    for d in 1..=2 {
        for k in 1..=d {
            let oracle = brute_force_max(k, d);
            for budget in [Budget::unlimited(), plain.clone()] {
                let r = max_family(k, d, &budget, None).unwrap();
                assert_eq!(r.best_size, oracle, "k={k} d={d}");
                assert_eq!(r.status, SearchStatus::Optimal);
            }
            let g = build_graph(k, d).unwrap();
            assert_eq!(max_family_in(&g, &Budget::unlimited()).unwrap().best_size, oracle);
        }
    }
}

#[test]
fn graph_edges_match_text_distance() {
    for d in 1..=3 {
        for k in 1..=d {
            let g = build_graph(k, d).unwrap();
            let texts: Vec<String> = g.vertices().iter().map(JokerVector::to_string).collect();
            for i in 0..g.len() {
                for j in 0..g.len() {
                    let dist = text_distance(&texts[i], &texts[j]);
                    assert_eq!(g.adjacent(i, j), dist >= 1 && dist <= k);
                }
            }
        }
    }
}

#[test]
fn relabeling_does_not_change_the_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 2..=4 {
        for k in 1..=d {
            let base = build_graph(k, d).unwrap();
            let expected = max_family_in(&base, &Budget::unlimited()).unwrap().best_size;
            for _ in 0..3 {
                let mut perm: Vec<usize> = (0..d).collect();
                perm.shuffle(&mut rng);
                let flip: u128 = rng.gen::<u128>() & ((1 << d) - 1);
                let mut vs: Vec<JokerVector> = base
                    .vertices()
                    .iter()
                    .map(|v| v.transform(&perm, flip).unwrap())
                    .collect();
                vs.shuffle(&mut rng);
                let g = CompatGraph::from_vertices(k, d, vs).unwrap();
                let r = max_family_in(&g, &Budget::unlimited()).unwrap();
                assert_eq!(r.best_size, expected, "k={k} d={d} perm={perm:?} flip={flip:b}");
            }
        }
    }
}

#[test]
fn optimum_is_monotone_and_sound() {
    let mut table = vec![vec![0usize; 6]; 6];
    for d in 1..=5 {
        for k in 1..=d {
            let r = max_family(k, d, &Budget::unlimited(), None).unwrap();
            assert_eq!(r.status, SearchStatus::Optimal);
            assert!(is_k_neighborly(&r.witness).is_none());
            assert_eq!(r.witness.len(), r.best_size);
            assert!(r.best_size as u128 >= alon_lower(k, d).unwrap().0);
            assert!(r.best_size as u128 <= report(k, d).unwrap().best_upper.0);
            table[k][d] = r.best_size;
        }
    }
    for d in 1..=5 {
        for k in 2..=d {
            assert!(table[k][d] >= table[k - 1][d]);
        }
    }
    for k in 1..=4 {
        for d in k + 1..=5 {
            assert!(table[k][d] >= table[k][d - 1]);
        }
    }
}

#[test]
fn greedy_restarts_reach_nine_for_k2_d4() {
    let best = (0..64)
        .map(|seed| greedy_family(2, 4, seed).unwrap().len())
        .max()
        .unwrap();
    assert_eq!(best, 9);
    assert_eq!(best_greedy(2, 4, 0, 64).unwrap().len(), 9);
}

#[test]
fn greedy_is_valid_everywhere() {
    for d in 1..=5 {
        for k in 1..=d {
            for seed in 0..20 {
                let f = greedy_family(k, d, seed).unwrap();
                assert!(!f.is_empty());
                assert!(is_k_neighborly(&f).is_none());
            }
        }
    }
    for seed in 0..100 {
        assert!(is_k_neighborly(&greedy_family(3, 6, seed).unwrap()).is_none());
    }
}

#[test]
fn searches_never_exceed_known_values() {
    let quick = Budget::default()
        .with_nodes(Some(20_000))
        .with_time(Some(std::time::Duration::from_secs(5)));
    for (k, d, exact) in [(3, 6, 27usize), (4, 6, 37), (5, 7, 74), (6, 8, 150)] {
        let r = max_family(k, d, &quick, None).unwrap();
        assert!(r.best_size <= exact, "k={k} d={d} found {}", r.best_size);
        if r.status == SearchStatus::Optimal {
            assert_eq!(r.best_size, exact);
        }
        match certify(k, d, &quick).unwrap().0 {
            Certification::Certified { value, .. } => assert_eq!(value, exact as u128),
            Certification::Gap { lower, upper } => {
                assert!(lower <= exact as u128 && exact as u128 <= upper)
            }
        }
    }
}

#[test]
fn certification_by_search() {
    // (2,5): formulas leave 12..14, search closes it
    let (c, r) = certify(2, 5, &Budget::default()).unwrap();
    assert_eq!(
        c,
        Certification::Certified {
            value: 12,
            evidence: Evidence::Search
        }
    );
    assert!(r.unwrap().nodes_explored > 0);
}
