//! Brute-force reference implementations and randomized test inputs.
//!
//! Everything here is deliberately independent of the production code
//! paths it cross-checks: cubic all-pairs distances instead of BFS,
//! exhaustive cycle enumeration instead of the BFS girth, permutation
//! search instead of canonical forms, and the biconnectivity definition
//! taken literally. Not optimized, only correct.

use std::collections::HashSet;

use rand::Rng;

use crate::graph::{bits, Graph};

/// Distance marking an unreachable pair in [`floyd_warshall`].
pub const FAR: u32 = u32::MAX / 2;

/// Cubic all-pairs shortest paths.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![FAR; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let alt = d[i][k].saturating_add(d[k][j]);
                if alt < d[i][j] {
                    d[i][j] = alt;
                }
            }
        }
    }
    d
}

/// Girth by exhaustive enumeration of simple cycles. Exponential; use
/// on small graphs only.
pub fn girth_exhaustive(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    // Every cycle is found from its smallest vertex; larger vertices only.
    fn extend(
        g: &Graph,
        start: usize,
        current: usize,
        visited: u64,
        len: usize,
        best: &mut Option<usize>,
    ) {
        if let Some(b) = *best {
            if len + 1 >= b {
                return;
            }
        }
        for &w in g.neighbors(current) {
            if w == start && len >= 2 {
                let cycle = len + 1;
                if best.map_or(true, |b| cycle < b) {
                    *best = Some(cycle);
                }
            } else if w > start && visited >> w & 1 == 0 {
                extend(g, start, w, visited | 1 << w, len + 1, best);
            }
        }
    }
    for start in 0..n {
        extend(g, start, start, 1 << start, 0, &mut best);
    }
    best
}

/// Isomorphism by backtracking over all vertex mappings.
pub fn isomorphic_exhaustive(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        let u = map.len();
        if u == a.order() {
            return true;
        }
        for v in 0..b.order() {
            if used >> v & 1 == 1 || a.degree(u) != b.degree(v) {
                continue;
            }
            if (0..u).all(|w| a.has_edge(w, u) == b.has_edge(map[w], v)) {
                map.push(v);
                if extend(a, b, map, used | 1 << v) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(a, b, &mut Vec::new(), 0)
}

/// Biconnectivity straight from the definition: connected, and still
/// connected after removing any single vertex.
pub fn two_connected_definition(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let full = (1u64 << n) - 1;
    connected_within(g, full) && (0..n).all(|v| connected_within(g, full & !(1 << v)))
}

fn connected_within(g: &Graph, allowed: u64) -> bool {
    if allowed == 0 {
        return true;
    }
    let start = allowed.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= g.row(v);
        }
        frontier = next & allowed & !seen;
        seen |= frontier;
    }
    seen == allowed
}

/// Count connected graphs on `n` vertices up to isomorphism by
/// enumerating every edge mask and deduplicating over all vertex
/// permutations. Exponential twice over; keep `n` at 5 or below.
pub fn count_connected_up_to_iso(n: usize, bipartite_only: bool) -> usize {
    assert!(n >= 1 && n <= 6, "oracle census is factorial-time");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i][j] = k;
        pair_index[j][i] = k;
    }
    let perms = permutations(n);
    let mut seen: HashSet<u64> = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rows = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        let g = graph_from_rows(n, rows);
        if !connected_within(&g, (1u64 << n) - 1) {
            continue;
        }
        if bipartite_only && !two_colorable_exhaustive(&g) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut remapped = 0u64;
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        remapped |= 1 << pair_index[p[i]][p[j]];
                    }
                }
                remapped
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

fn graph_from_rows(n: usize, rows: Vec<u64>) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| bits(rows[u]).filter(move |&v| u < v).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

// Try all 2^n colorings.
fn two_colorable_exhaustive(g: &Graph) -> bool {
    let n = g.order();
    (0u64..1 << n).any(|coloring| {
        g.edges()
            .all(|(u, v)| coloring >> u & 1 != coloring >> v & 1)
    })
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// Uniform G(n, p) graph.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Random connected graph: a random attachment tree plus G(n, p) extras.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Uniform random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floyd_warshall_path() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let d = floyd_warshall(&p3);
        assert_eq!(d[0], vec![0, 1, 2]);
        let split = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(floyd_warshall(&split)[0][2], FAR);
    }

    #[test]
    fn girth_exhaustive_basics() {
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(girth_exhaustive(&k4), Some(3));
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(girth_exhaustive(&p3), None);
    }

    #[test]
    fn iso_oracle_basics() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::from_edge_list(3, &[(1, 0), (0, 2)]).unwrap();
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(isomorphic_exhaustive(&p3, &p3b));
        assert!(!isomorphic_exhaustive(&p3, &k3));
    }

    #[test]
    fn known_iso_counts() {
        // Connected graphs on 1..4 vertices: 1, 1, 2, 6.
        assert_eq!(count_connected_up_to_iso(1, false), 1);
        assert_eq!(count_connected_up_to_iso(2, false), 1);
        assert_eq!(count_connected_up_to_iso(3, false), 2);
        assert_eq!(count_connected_up_to_iso(4, false), 6);
        assert_eq!(count_connected_up_to_iso(3, true), 1);
    }
}
