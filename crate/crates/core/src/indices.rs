//! Edge-based topological indices: Mostar and the two Zagreb indices.

use crate::graph::Graph;
use crate::metric::DistanceProfile;

/// Per-edge balance data: how many vertices lie strictly closer to each
/// endpoint (the endpoint itself included), and the transmission gap.
///
/// On an edge ties contribute to neither count, so
/// `Tr(u) - Tr(v) = closer_to_v - closer_to_u` on every connected
/// graph; bipartite graphs have no ties at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBalance {
    pub u: usize,
    pub v: usize,
    pub closer_to_u: usize,
    pub closer_to_v: usize,
    pub tr_diff: u32,
}

/// Balance data for every edge, computed from the distance matrix in
/// one pass per edge.
pub fn edge_balances(g: &Graph, p: &DistanceProfile) -> Vec<EdgeBalance> {
    let n = g.order();
    let tr = p.transmissions();
    g.edges()
        .map(|(u, v)| {
            let mut nu = 0;
            let mut nv = 0;
            for w in 0..n {
                let du = p.dist(w, u);
                let dv = p.dist(w, v);
                if du < dv {
                    nu += 1;
                } else if dv < du {
                    nv += 1;
                }
            }
            EdgeBalance {
                u,
                v,
                closer_to_u: nu,
                closer_to_v: nv,
                tr_diff: tr[u].abs_diff(tr[v]),
            }
        })
        .collect()
}

/// Mostar index from the closer-vertex counts. Debug builds cross-check
/// each edge term against the transmission difference.
pub fn mostar(g: &Graph, p: &DistanceProfile) -> u64 {
    edge_balances(g, p)
        .iter()
        .map(|b| {
            debug_assert_eq!(
                b.closer_to_u.abs_diff(b.closer_to_v) as u32,
                b.tr_diff,
                "edge ({}, {}) balance disagrees with transmission gap",
                b.u,
                b.v
            );
            b.closer_to_u.abs_diff(b.closer_to_v) as u64
        })
        .sum()
}

/// Mostar index with both formulations always evaluated and asserted
/// equal: the closer-count form and the transmission-difference form.
pub fn mostar_checked(g: &Graph, p: &DistanceProfile) -> u64 {
    let by_counts = mostar(g, p);
    let tr = p.transmissions();
    let by_transmissions: u64 = g
        .edges()
        .map(|(u, v)| tr[u].abs_diff(tr[v]) as u64)
        .sum();
    assert_eq!(by_counts, by_transmissions, "Mostar routes disagree");
    by_counts
}

/// First Zagreb index. The vertex form (sum of squared degrees) and the
/// edge form (sum of endpoint degrees over edges) must agree exactly.
pub fn zagreb1(g: &Graph) -> u64 {
    let degs = g.degrees();
    let vertex_form: u64 = degs.iter().map(|&d| (d * d) as u64).sum();
    let edge_form: u64 = g.edges().map(|(u, v)| (degs[u] + degs[v]) as u64).sum();
    assert_eq!(vertex_form, edge_form, "Zagreb forms disagree");
    vertex_form
}

/// Second Zagreb index: sum of degree products over edges.
pub fn zagreb2(g: &Graph) -> u64 {
    let degs = g.degrees();
    g.edges().map(|(u, v)| (degs[u] * degs[v]) as u64).sum()
}
