mod common;

use std::collections::BTreeSet;

use cograph_bei_core::cotree::{build_cotree, find_induced_p4, Recognition};
use cograph_bei_core::enumeration::enumerate_cotrees;
use cograph_bei_core::invariants::{
    alpha_cotree, count_max_cliques_cotree, count_max_indep_cotree,
    oracle_maximal_independent_sets,
};
use cograph_bei_core::Graph;
use common::*;
use num_bigint::BigUint;

/// Witness from recognition iff the quadruple scan finds an induced P4, on
/// every labeled graph with at most 7 vertices.
#[test]
fn recognition_agrees_with_p4_scan_on_all_graphs() {
    for n in 1..=7usize {
        let m = n * (n - 1) / 2;
        for bits in 0..1u64 << m {
            let g = graph_from_bits(n, bits);
            let brute = has_induced_p4_brute(&rows(n, bits));
            match build_cotree(&g) {
                Recognition::Cograph(t) => {
                    assert!(!brute, "n={n} bits={bits:b}");
                    assert_eq!(t.to_graph().unwrap(), g);
                }
                Recognition::NotCograph(w) => {
                    assert!(brute, "n={n} bits={bits:b}");
                    assert!(w.is_valid_in(&g));
                }
            }
            assert_eq!(find_induced_p4(&g).is_some(), brute);
        }
    }
}

#[test]
fn canonical_keys_decide_isomorphism() {
    for n in 1..=6 {
        let perms = permutations(n);
        let trees = enumerate_cotrees(n).unwrap();
        let graphs: Vec<Graph> = trees.iter().map(|t| t.to_graph().unwrap()).collect();
        // distinct keys -> non-isomorphic
        for (i, g) in graphs.iter().enumerate() {
            for h in &graphs[i + 1..] {
                assert!(!isomorphic_brute(g, h));
            }
        }
        // relabeled copies -> equal keys
        for (t, g) in trees.iter().zip(&graphs) {
            for p in &perms {
                let q = g.permuted(p).unwrap();
                assert_eq!(
                    build_cotree(&q).cotree().unwrap().canonical_key(),
                    t.canonical_key()
                );
            }
        }
    }
}

#[test]
fn enumeration_matches_labeled_filter() {
    for n in 1..=6 {
        assert_eq!(enumerate_cotrees(n).unwrap().len(), p4_free_class_count(n), "n={n}");
    }
}

#[test]
fn invariant_recursions_match_subset_search() {
    for n in 1..=8 {
        for t in enumerate_cotrees(n).unwrap() {
            let g = t.to_graph().unwrap();
            let indep = maximal_independent_subsets(&g);
            let cliques = maximal_independent_subsets(&g.complement());
            assert_eq!(alpha_cotree(&t), indep.iter().map(Vec::len).max().unwrap());
            assert_eq!(count_max_indep_cotree(&t), BigUint::from(indep.len()));
            assert_eq!(count_max_cliques_cotree(&t), BigUint::from(cliques.len()));

            let mut bk = oracle_maximal_independent_sets(&g).unwrap();
            let mut subsets = indep;
            bk.sort();
            subsets.sort();
            assert_eq!(bk, subsets);
        }
    }
}

#[test]
fn connectivity_dichotomy_on_cographs() {
    for n in 2..=9 {
        for t in enumerate_cotrees(n).unwrap() {
            let g = t.to_graph().unwrap();
            assert_ne!(g.is_connected(), g.complement().is_connected());
            assert_eq!(g.is_connected(), t.is_connected());
        }
    }
}

#[test]
fn enumeration_closed_under_recognition() {
    for n in 1..=10 {
        let ts = enumerate_cotrees(n).unwrap();
        let keys: BTreeSet<Vec<u8>> = ts.iter().map(|t| t.canonical_key()).collect();
        assert_eq!(keys.len(), ts.len());
        for t in &ts {
            let back = build_cotree(&t.to_graph().unwrap()).cotree().unwrap();
            assert!(keys.contains(&back.canonical_key()));
        }
    }
}
