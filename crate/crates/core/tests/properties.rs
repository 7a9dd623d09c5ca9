//! Cross-module property tests, each backed by an independent oracle:
//! Floyd-Warshall distances, exhaustive cycle enumeration, permutation
//! isomorphism search, and the biconnectivity definition.

use proptest::prelude::*;

use sti_core::canon::{are_isomorphic, canonical_form};
use sti_core::enumerate::{enumerate_connected, is_sti};
use sti_core::families::{balanced_complete_bipartite, hatted_cycle, theta};
use sti_core::graph::Graph;
use sti_core::graph6;
use sti_core::indices::{edge_balances, mostar, mostar_checked, zagreb1};
use sti_core::metric::{
    diameter, distance_profile, eccentricity_sum, tr_extremes, wiener, wiener_complexity,
};
use sti_core::oracle;
use sti_core::structure::{bipartition, girth, is_connected, is_two_connected};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |cells| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if cells[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", is_connected)
}

fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in arb_graph_and_perm(10)) {
        let relabeled = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&relabeled));
    }
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(20)) {
        let line = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&line).unwrap(), g);
    }

    #[test]
    fn distances_match_cubic_oracle(g in arb_connected_graph(9)) {
        let p = distance_profile(&g).unwrap();
        let fw = oracle::floyd_warshall(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(p.dist(u, v) as u32, fw[u][v]);
            }
        }
    }

    #[test]
    fn distance_matrix_shape(g in arb_connected_graph(9)) {
        let p = distance_profile(&g).unwrap();
        let n = g.order();
        for u in 0..n {
            prop_assert_eq!(p.dist(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(p.dist(u, v), p.dist(v, u));
                for w in 0..n {
                    prop_assert!(p.dist(u, w) <= p.dist(u, v) + p.dist(v, w));
                }
            }
        }
    }

    #[test]
    fn wiener_routes_agree(g in arb_connected_graph(10)) {
        let p = distance_profile(&g).unwrap();
        // wiener() itself asserts pairwise-sum == half-transmission-sum.
        let w = wiener(&p);
        let fw = oracle::floyd_warshall(&g);
        let oracle_sum: u64 = (0..g.order())
            .flat_map(|u| ((u + 1)..g.order()).map(move |v| (u, v)))
            .map(|(u, v)| fw[u][v] as u64)
            .sum();
        prop_assert_eq!(w, oracle_sum);
    }

    #[test]
    fn girth_matches_exhaustive_oracle(g in arb_graph(8)) {
        prop_assert_eq!(girth(&g), oracle::girth_exhaustive(&g));
    }

    #[test]
    fn biconnectivity_matches_definition(g in arb_graph(9)) {
        prop_assert_eq!(is_two_connected(&g), oracle::two_connected_definition(&g));
    }

    #[test]
    fn mostar_routes_agree(g in arb_connected_graph(10)) {
        let p = distance_profile(&g).unwrap();
        prop_assert_eq!(mostar(&g, &p), mostar_checked(&g, &p));
    }

    // Each edge term of the Mostar index equals the transmission gap on
    // every connected graph, bipartite or not: ties contribute zero.
    #[test]
    fn edge_balance_matches_transmission_gap(g in arb_connected_graph(10)) {
        let p = distance_profile(&g).unwrap();
        for b in edge_balances(&g, &p) {
            prop_assert_eq!(b.closer_to_u.abs_diff(b.closer_to_v) as u32, b.tr_diff);
        }
    }

    #[test]
    fn zagreb_forms_agree(g in arb_graph(12)) {
        // zagreb1() asserts vertex form == edge form internally.
        let degs = g.degrees();
        let expected: u64 = degs.iter().map(|&d| (d * d) as u64).sum();
        prop_assert_eq!(zagreb1(&g), expected);
    }

    #[test]
    fn eccentricity_bounds(g in arb_connected_graph(10)) {
        let p = distance_profile(&g).unwrap();
        let diam = diameter(&p) as u64;
        let min_ecc = *p.eccentricities().iter().min().unwrap() as u64;
        for &e in p.eccentricities() {
            prop_assert!((e as u64) <= diam);
        }
        prop_assert!(diam <= 2 * min_ecc);
        prop_assert!(eccentricity_sum(&p) >= diam);
        prop_assert!(wiener_complexity(&p) >= 1);
        let ex = tr_extremes(&p);
        prop_assert!(ex.min <= ex.max);
    }

    #[test]
    fn canonical_certificates_decide_isomorphism(
        a in arb_graph(7),
        b in arb_graph(7),
    ) {
        prop_assert_eq!(
            are_isomorphic(&a, &b),
            oracle::isomorphic_exhaustive(&a, &b)
        );
    }
}

// Distance parity on bipartite graphs follows side parity, and for odd
// order the transmission gap across any edge is odd.
#[test]
fn bipartite_parity_invariants() {
    for n in [5usize, 7, 9] {
        for cert in enumerate_connected(n, true) {
            let g = cert.to_graph();
            let bip = bipartition(&g).unwrap().expect("bipartite by construction");
            let p = distance_profile(&g).unwrap();
            for u in 0..n {
                for v in 0..n {
                    let same_side = bip.side_of(u) == bip.side_of(v);
                    assert_eq!(p.dist(u, v) % 2 == 0, same_side);
                }
            }
            let tr = p.transmissions();
            for (u, v) in g.edges() {
                assert_eq!(tr[u].abs_diff(tr[v]) % 2, 1, "odd-order bipartite edge gap");
            }
        }
    }
}

// Certificate count over all graphs on up to 5 vertices equals the
// isomorphism-class count from the permutation oracle.
#[test]
fn certificates_count_isomorphism_classes_exhaustively() {
    use std::collections::HashSet;
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let mut connected_certs = HashSet::new();
        let mut bipartite_certs = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            if !is_connected(&g) {
                continue;
            }
            let cert = canonical_form(&g);
            if bipartition(&g).unwrap().is_some() {
                bipartite_certs.insert(cert.clone());
            }
            connected_certs.insert(cert);
        }
        assert_eq!(
            connected_certs.len(),
            oracle::count_connected_up_to_iso(n, false)
        );
        assert_eq!(
            bipartite_certs.len(),
            oracle::count_connected_up_to_iso(n, true)
        );
    }
}

#[test]
fn family_formula_invariants() {
    for n in (5..=25usize).step_by(2) {
        let ni = n as u64;
        let hatted = hatted_cycle(n).unwrap();
        let hp = distance_profile(&hatted).unwrap();
        assert!(is_sti(&hatted, &hp), "hatted cycle n={n} must be STI");
        assert_eq!(wiener(&hp), (ni * ni * ni - ni * ni - ni + 17) / 8);
        assert_eq!(tr_extremes(&hp).max as u64, (ni * ni - 1) / 4);
        assert_eq!(eccentricity_sum(&hp), ni * (ni - 1) / 2);
        assert_eq!(diameter(&hp) as u64, (ni - 1) / 2);
        assert_eq!(hatted.size() as u64, ni + 1);

        let balanced = balanced_complete_bipartite(n).unwrap();
        let bp = distance_profile(&balanced).unwrap();
        assert!(is_sti(&balanced, &bp), "balanced bipartite n={n} must be STI");
        assert_eq!(wiener(&bp), (3 * ni * ni - 4 * ni + 1) / 4);
        assert_eq!(tr_extremes(&bp).min as u64, (3 * ni - 5) / 2);
        assert_eq!(eccentricity_sum(&bp), 2 * ni);
        assert_eq!(balanced.size() as u64, (ni * ni - 1) / 4);

        assert!(are_isomorphic(&theta(n, 2, 2).unwrap(), &hatted));
    }
}
