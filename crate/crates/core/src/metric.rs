//! All-pairs BFS distances and the quantities derived from them:
//! transmissions, eccentricities, diameter, eccentricity sum, Wiener
//! index, and Wiener complexity.

use crate::error::GraphError;
use crate::graph::Graph;

const UNSET: u16 = u16::MAX;

/// Exact hop distances from every source, with per-vertex transmission
/// (sum of distances) and eccentricity (maximum distance).
///
/// Distances fit in 16 bits by the order cap; the flat matrix keeps
/// bulk enumeration cache-friendly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    n: usize,
    dist: Vec<u16>,
    tr: Vec<u32>,
    ecc: Vec<u16>,
}

impl DistanceProfile {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> u16 {
        self.dist[u * self.n + v]
    }

    /// Transmission of every vertex.
    pub fn transmissions(&self) -> &[u32] {
        &self.tr
    }

    /// Eccentricity of every vertex.
    pub fn eccentricities(&self) -> &[u16] {
        &self.ecc
    }
}

/// BFS from every source. Errors on disconnected input, naming an
/// unreachable pair.
pub fn distance_profile(g: &Graph) -> Result<DistanceProfile, GraphError> {
    let n = g.order();
    let mut dist = vec![UNSET; n * n];
    let mut tr = vec![0u32; n];
    let mut ecc = vec![0u16; n];
    let mut queue: Vec<usize> = Vec::with_capacity(n);
    for src in 0..n {
        let row = &mut dist[src * n..(src + 1) * n];
        row[src] = 0;
        queue.clear();
        queue.push(src);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == UNSET {
                    row[v] = du + 1;
                    queue.push(v);
                }
            }
        }
        if queue.len() < n {
            let to = (0..n).find(|&v| row[v] == UNSET).unwrap();
            return Err(GraphError::Disconnected { from: src, to });
        }
        let mut sum = 0u32;
        let mut max = 0u16;
        for &d in row.iter() {
            sum += d as u32;
            max = max.max(d);
        }
        tr[src] = sum;
        ecc[src] = max;
    }
    Ok(DistanceProfile { n, dist, tr, ecc })
}

/// Wiener index: the sum of distances over unordered pairs. Also
/// computed as half the transmission sum; the two routes must agree.
pub fn wiener(p: &DistanceProfile) -> u64 {
    let n = p.n;
    let mut pairwise = 0u64;
    for u in 0..n {
        for v in (u + 1)..n {
            pairwise += p.dist(u, v) as u64;
        }
    }
    let tr_sum: u64 = p.tr.iter().map(|&t| t as u64).sum();
    assert_eq!(pairwise, tr_sum / 2, "distance-sum routes disagree");
    assert_eq!(tr_sum % 2, 0);
    pairwise
}

/// Number of distinct transmission values.
pub fn wiener_complexity(p: &DistanceProfile) -> usize {
    let mut values: Vec<u32> = p.tr.clone();
    values.sort_unstable();
    values.dedup();
    values.len()
}

/// Largest eccentricity.
pub fn diameter(p: &DistanceProfile) -> u16 {
    *p.ecc.iter().max().expect("nonempty")
}

/// Sum of the vertex eccentricities.
pub fn eccentricity_sum(p: &DistanceProfile) -> u64 {
    p.ecc.iter().map(|&e| e as u64).sum()
}

/// Vertices at maximum distance from `v`.
pub fn eccentric_vertices(p: &DistanceProfile, v: usize) -> Vec<usize> {
    let e = p.ecc[v];
    (0..p.n).filter(|&u| p.dist(v, u) == e).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransmissionExtremes {
    pub min: u32,
    pub max: u32,
    pub argmin: Vec<usize>,
    pub argmax: Vec<usize>,
}

/// Exact extremes of the transmission vector with their attainers.
pub fn tr_extremes(p: &DistanceProfile) -> TransmissionExtremes {
    let min = *p.tr.iter().min().expect("nonempty");
    let max = *p.tr.iter().max().expect("nonempty");
    TransmissionExtremes {
        min,
        max,
        argmin: (0..p.n).filter(|&v| p.tr[v] == min).collect(),
        argmax: (0..p.n).filter(|&v| p.tr[v] == max).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{balanced_complete_bipartite, hatted_cycle};

    fn profile(g: &Graph) -> DistanceProfile {
        distance_profile(g).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn transmissions_k23() {
        // Small side first: vertices 0,1 form the 2-side.
        let k23 = balanced_complete_bipartite(5).unwrap();
        assert_eq!(profile(&k23).transmissions(), &[5, 5, 6, 6, 6]);
    }

    #[test]
    fn transmissions_p3() {
        assert_eq!(profile(&p3()).transmissions(), &[3, 2, 3]);
    }

    #[test]
    fn hatted_eleven_vertex_seven() {
        let g11 = hatted_cycle(11).unwrap();
        let p = profile(&g11);
        // v_7 in 1-based labels.
        assert_eq!(p.transmissions()[6], 30);
        assert_eq!(tr_extremes(&p).max, 30);
        assert_eq!(30, (11 * 11 - 1) / 4);
    }

    #[test]
    fn wiener_values() {
        assert_eq!(wiener(&profile(&balanced_complete_bipartite(5).unwrap())), 14);
        assert_eq!(wiener(&profile(&p3())), 4);
        assert_eq!(wiener(&profile(&hatted_cycle(11).unwrap())), 152);
    }

    #[test]
    fn wiener_complexity_values() {
        assert_eq!(wiener_complexity(&profile(&balanced_complete_bipartite(5).unwrap())), 2);
        let c6: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let c6 = Graph::from_edge_list(6, &c6).unwrap();
        assert_eq!(wiener_complexity(&profile(&c6)), 1);
        assert_eq!(wiener_complexity(&profile(&p3())), 2);
    }

    #[test]
    fn eccentricity_quantities() {
        let k23 = profile(&balanced_complete_bipartite(5).unwrap());
        assert_eq!(diameter(&k23), 2);
        assert_eq!(eccentricity_sum(&k23), 10);
        let g11 = profile(&hatted_cycle(11).unwrap());
        assert_eq!(diameter(&g11), 5);
        assert_eq!(eccentricity_sum(&g11), 55);
        // Every vertex of the hatted cycle attains the diameter.
        assert!(g11.eccentricities().iter().all(|&e| e == 5));
    }

    #[test]
    fn eccentric_vertex_sets() {
        let k23 = balanced_complete_bipartite(5).unwrap();
        let p = profile(&k23);
        assert_eq!(eccentric_vertices(&p, 0), vec![1]);
        assert_eq!(eccentric_vertices(&p, 2), vec![3, 4]);
    }

    #[test]
    fn extremes() {
        let p = profile(&balanced_complete_bipartite(5).unwrap());
        let e = tr_extremes(&p);
        assert_eq!((e.min, e.max), (5, 6));
        assert_eq!(e.min, (3 * 5 - 5) / 2);
        assert_eq!(e.argmin, vec![0, 1]);
        let e = tr_extremes(&profile(&p3()));
        assert_eq!((e.min, e.max), (2, 3));
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            distance_profile(&g),
            Err(GraphError::Disconnected { from: 0, to: 2 })
        );
    }
}
