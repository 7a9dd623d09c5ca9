//! Immutable simple undirected graphs on the vertex set `0..n-1`.
//!
//! Adjacency is stored twice: bitset rows (one `u64` per vertex) for
//! subset tests and enumeration pruning, and sorted neighbor lists for
//! traversal. Both views are built once at construction.

use crate::error::GraphError;

/// Largest supported order. Keeps a bitset row in one machine word and
/// matches the single-byte graph6 header range.
pub const MAX_ORDER: usize = 62;

/// A simple undirected graph. No self-loops, no multi-edges, immutable
/// after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    rows: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Self::from_rows(n, rows))
    }

    /// Build directly from bitset rows. The relation must be symmetric
    /// and irreflexive; only checked in debug builds.
    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        debug_assert_eq!(rows.len(), n);
        debug_assert!(rows.iter().enumerate().all(|(v, &r)| r >> v & 1 == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| rows[u] >> v & 1 == rows[v] >> u & 1)));
        let adj: Vec<Vec<usize>> = rows.iter().map(|&r| bits(r).collect()).collect();
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n, m, rows, adj }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighbors of `v` as a bitset.
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph::from_rows(self.n, rows)
    }

    /// Parse the plain-text edge-list format: first line the order,
    /// then one `u v` pair per line. Blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines
            .next()
            .ok_or_else(|| GraphError::EdgeList("missing order line".into()))?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| GraphError::EdgeList(format!("bad order line {first:?}")))?;
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(GraphError::EdgeList(format!(
                        "line {}: expected \"u v\", got {line:?}",
                        idx + 1
                    )))
                }
            };
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| GraphError::EdgeList(format!("line {}: bad vertex {s:?}", idx + 1)))
            };
            edges.push((parse(u)?, parse(v)?));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Emit the edge-list text format, edges sorted.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Iterate the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_three() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(0, 1) && !g.has_edge(0, 2));
    }

    #[test]
    fn complete_bipartite_k23_size() {
        let edges: Vec<(usize, usize)> =
            [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)].to_vec();
        let g = Graph::from_edge_list(5, &edges).unwrap();
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::from_edge_list(0, &[]), Err(GraphError::ZeroOrder));
        assert_eq!(Graph::from_edge_list(63, &[]), Err(GraphError::OrderTooLarge(63)));
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = g.to_edge_list_string();
        let h = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn edge_list_text_errors() {
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("x\n").is_err());
        assert!(Graph::parse_edge_list("3\n0\n").is_err());
        assert!(Graph::parse_edge_list("3\n0 1 2\n").is_err());
    }
}
