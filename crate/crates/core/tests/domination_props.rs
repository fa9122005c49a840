mod common;

use quadtour_core::domination::{
    competition_graph, dominates, domination_graph, domination_number, gamma_exceeds,
};
use quadtour_core::generators::{all_tournaments, random_tournament, u_n};
use quadtour_core::Seed;

#[test]
fn gamma_and_min_set_match_brute_force() {
    for n in 1..=6 {
        for t in all_tournaments(n).unwrap() {
            let info = domination_number(&t).unwrap();
            let a = common::adj(&t);
            assert_eq!(info.gamma, common::gamma(&a));
            assert!(dominates(&t, &info.min_set).unwrap());
            // lexicographically smallest among minimum dominating sets
            let mut best: Option<Vec<usize>> = None;
            for m in 1u32..1 << n {
                if m.count_ones() as usize == info.gamma && common::dominates_mask(&a, m) {
                    let s: Vec<usize> = (0..n).filter(|v| m >> v & 1 == 1).collect();
                    if best.as_ref().is_none_or(|b| s < *b) {
                        best = Some(s);
                    }
                }
            }
            assert_eq!(Some(info.min_set.clone()), best);
            if n >= 2 {
                assert_eq!(!info.pairs.is_empty(), info.gamma <= 2);
            }
        }
    }
}

#[test]
fn gamma_exceeds_matches_gamma() {
    for n in 1..=6 {
        for t in all_tournaments(n).unwrap() {
            let g = common::gamma(&common::adj(&t));
            for k in 1..=3 {
                assert_eq!(gamma_exceeds(&t, k).unwrap(), g > k);
            }
        }
    }
    for s in 0..300 {
        let t = random_tournament(7 + (s % 8) as usize, Seed(s));
        let g = domination_number(&t).unwrap().gamma;
        for k in 1..=3 {
            assert_eq!(gamma_exceeds(&t, k).unwrap(), g > k);
        }
    }
}

#[test]
fn domination_graph_edges_are_dominating_pairs() {
    for n in 1..=6 {
        for t in all_tournaments(n).unwrap() {
            let g = domination_graph(&t);
            for x in 0..n {
                for y in x + 1..n {
                    assert_eq!(g.has_edge(x, y), dominates(&t, &[x, y]).unwrap());
                }
            }
            if n >= 2 {
                assert_eq!(gamma_exceeds(&t, 2).unwrap(), g.edges.is_empty());
            }
        }
    }
}

#[test]
fn small_tournaments_have_a_dominant_pair() {
    for n in 2..=6 {
        for t in all_tournaments(n).unwrap() {
            assert!(domination_graph(&t).edge_count() >= 1);
        }
    }
}

#[test]
fn u5_domination_graph_is_a_five_cycle() {
    let g = domination_graph(&u_n(5).unwrap());
    let cycle = [0, 2, 4, 1, 3];
    for i in 0..5 {
        assert!(g.has_edge(cycle[i], cycle[(i + 1) % 5]));
    }
    assert_eq!(g.edge_count(), 5);
}

#[test]
fn reversed_competition_graph_is_the_complement() {
    for n in 1..=5 {
        for t in all_tournaments(n).unwrap() {
            assert_eq!(competition_graph(&t.dual()).complement(), domination_graph(&t));
        }
    }
    for s in 0..500 {
        let t = random_tournament(3 + (s % 8) as usize, Seed(s));
        assert_eq!(competition_graph(&t.dual()).complement(), domination_graph(&t));
    }
}
