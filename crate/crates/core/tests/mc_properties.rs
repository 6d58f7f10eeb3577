mod common;

use mclab::bounds::{caro_yuster_certificates, mc_lower_bound, mc_upper_bound, pair_count};
use mclab::coloring::first_uncovered_pair;
use mclab::exact::{exact_mc_search, exact_mc_small};
use mclab::rng::SplitMix64;
use mclab::{analyze, sample_gnp, spanning_tree_coloring, verify_mc_coloring};
use mclab::{AnalyzeOptions, Certificate, EdgeColoring, Graph, RngSeed};

fn connected_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (2..=max_n).flat_map(common::all_graphs).filter(common::connected)
}

#[test]
fn exact_search_matches_partition_brute_force() {
    let mut count = 0;
    for g in (1..=5).flat_map(common::all_graphs) {
        assert_eq!(exact_mc_small(&g, 12).unwrap(), common::mc_brute(&g), "{g:?}");
        count += 1;
    }
    assert_eq!(count, 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn exact_witness_is_an_mc_coloring_with_value_colors() {
    for g in connected_graphs(5) {
        let r = exact_mc_search(&g, 12, true).unwrap();
        let w = r.witness.expect("connected graphs have a witness");
        assert_eq!(w.num_colors(), r.value);
        assert!(common::is_mc(&g, w.labels()), "{g:?}");
    }
}

#[test]
fn pruning_does_not_change_the_answer() {
    let mut checked = 0;
    for stream in 0..400 {
        let n = 4 + (stream % 4) as usize;
        let g = sample_gnp(n, 0.55, RngSeed::new(77, stream)).unwrap();
        if g.m() > 8 {
            continue;
        }
        let a = exact_mc_search(&g, 8, true).unwrap().value;
        let b = exact_mc_search(&g, 8, false).unwrap().value;
        assert_eq!(a, b, "{g:?}");
        checked += 1;
    }
    assert!(checked > 150, "only {checked} graphs had m <= 8");
}

#[test]
fn verifier_agrees_with_bfs_oracle_on_random_colorings() {
    let mut rng = SplitMix64::from_state(2024);
    for stream in 0..1000 {
        let n = 3 + (stream % 6) as usize;
        let g = sample_gnp(n, 0.6, RngSeed::new(9, stream)).unwrap();
        if g.m() == 0 {
            continue;
        }
        let k = 1 + (rng.next() % g.m() as u64) as usize;
        let labels: Vec<usize> = (0..g.m()).map(|_| (rng.next() % k as u64) as usize).collect();
        let c = EdgeColoring::from_labels(labels);
        let expected = common::connected(&g) && common::is_mc(&g, c.labels());
        assert_eq!(verify_mc_coloring(&g, &c).unwrap(), expected, "{g:?} {c:?}");
        match first_uncovered_pair(&g, &c).unwrap() {
            None => assert!(expected),
            Some((u, v)) => {
                assert!(!expected && u < v);
                let none = vec![false; n];
                let joined = (0..c.num_colors()).any(|col| common::reach(&g, u, &none, |i| c.labels()[i] == col)[v]);
                assert!(!joined, "({u}, {v}) is covered in {g:?}");
            }
        }
    }
}

#[test]
fn tree_coloring_on_random_connected_graphs() {
    let mut done = 0;
    let mut stream = 0;
    while done < 1000 {
        let n = 4 + (stream % 47) as usize;
        let p = 2.5 * (n as f64).ln() / n as f64;
        let g = sample_gnp(n, p.min(0.9), RngSeed::new(31, stream)).unwrap();
        stream += 1;
        if !g.is_connected() {
            continue;
        }
        let c = spanning_tree_coloring(&g).unwrap();
        assert_eq!(c.num_colors(), g.m() + 2 - g.n());
        assert!(verify_mc_coloring(&g, &c).unwrap());
        if n <= 12 {
            assert!(common::is_mc(&g, c.labels()));
        }
        done += 1;
    }
}

#[test]
fn bounds_sandwich_and_certificates_are_sound() {
    for g in connected_graphs(5) {
        let exact = common::mc_brute(&g);
        let lower = mc_lower_bound(&g);
        let upper = mc_upper_bound(&g, 16).unwrap().value;
        assert!(
            lower <= exact && exact <= upper,
            "{lower} <= {exact} <= {upper} fails for {g:?}"
        );
        if g.n() > 3 {
            for c in caro_yuster_certificates(&g).unwrap() {
                assert_eq!(exact, lower, "{c} fired on {g:?}");
            }
        }
        let b = analyze(&g, &AnalyzeOptions::default()).unwrap();
        assert_eq!(b.exact, Some(exact), "{g:?}");
        assert_eq!((b.lower, b.upper), (lower, upper));
    }
}

#[test]
fn completeness_characterizes_the_maximum() {
    for g in connected_graphs(5) {
        let exact = exact_mc_small(&g, 12).unwrap();
        if g.is_complete() {
            assert_eq!(exact, pair_count(g.n()));
        } else {
            assert!(exact < pair_count(g.n()), "{g:?}");
        }
    }
}

#[test]
fn adding_an_edge_never_lowers_mc() {
    for g in connected_graphs(5) {
        let base = exact_mc_small(&g, 12).unwrap();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !g.has_edge(u, v) {
                    let h = g.with_edge(u, v).unwrap();
                    assert!(exact_mc_small(&h, 12).unwrap() >= base, "{g:?} + ({u}, {v})");
                }
            }
        }
    }
}

#[test]
fn analyze_without_search_stays_sound() {
    let opts = AnalyzeOptions {
        search: false,
        ..Default::default()
    };
    for stream in 0..200 {
        let g = sample_gnp(7, 0.5, RngSeed::new(4, stream)).unwrap();
        let b = analyze(&g, &opts).unwrap();
        if !g.is_connected() {
            assert_eq!(b.certificates, vec![Certificate::Disconnected]);
            continue;
        }
        assert!(!b.certificates.contains(&Certificate::ExactSearch));
        if g.m() <= 12 {
            let e = exact_mc_small(&g, 12).unwrap();
            assert!(b.lower <= e && e <= b.upper);
            if let Some(x) = b.exact {
                assert_eq!(x, e, "{g:?}");
            }
        }
    }
}
