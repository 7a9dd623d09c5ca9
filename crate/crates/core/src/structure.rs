//! Structural predicates: connectivity, bipartiteness, biconnectivity,
//! and girth.

use crate::error::GraphError;
use crate::graph::{bits, Graph};

/// True iff every vertex is reachable from vertex 0.
pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= g.row(v);
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen.count_ones() as usize == n
}

/// A two-coloring of a connected bipartite graph, normalized so that
/// side 0 is the smaller side (|X| <= |Y|).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<u8>,
    masks: [u64; 2],
    sizes: (usize, usize),
}

impl Bipartition {
    pub fn side_of(&self, v: usize) -> usize {
        self.side[v] as usize
    }

    /// Side sizes `(|X|, |Y|)` with `|X| <= |Y|`.
    pub fn sizes(&self) -> (usize, usize) {
        self.sizes
    }

    pub fn side_mask(&self, side: usize) -> u64 {
        self.masks[side]
    }

    pub fn vertices_on(&self, side: usize) -> Vec<usize> {
        bits(self.masks[side]).collect()
    }
}

/// Two-color a connected graph. Returns `None` when an odd cycle makes
/// that impossible, and an error when the graph is disconnected.
pub fn bipartition(g: &Graph) -> Result<Option<Bipartition>, GraphError> {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    side[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &v in g.neighbors(u) {
            if side[v] == u8::MAX {
                side[v] = 1 - side[u];
                queue.push(v);
            } else if side[v] == side[u] {
                return Ok(None);
            }
        }
    }
    if queue.len() < n {
        let to = (0..n).find(|&v| side[v] == u8::MAX).unwrap();
        return Err(GraphError::Disconnected { from: 0, to });
    }
    let count0 = side.iter().filter(|&&s| s == 0).count();
    if count0 > n - count0 {
        for s in side.iter_mut() {
            *s = 1 - *s;
        }
    }
    let mut masks = [0u64; 2];
    for (v, &s) in side.iter().enumerate() {
        masks[s as usize] |= 1 << v;
    }
    let sizes = (
        masks[0].count_ones() as usize,
        masks[1].count_ones() as usize,
    );
    Ok(Some(Bipartition { side, masks, sizes }))
}

/// True iff the graph is connected and has no articulation vertex.
/// Orders below 3 return false by convention.
pub fn is_two_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let mut dfs = LowpointDfs {
        g,
        num: vec![0; n],
        low: vec![0; n],
        counter: 0,
        cut_found: false,
    };
    let root_children = dfs.visit(0, usize::MAX);
    !dfs.cut_found && root_children < 2 && dfs.counter == n
}

struct LowpointDfs<'a> {
    g: &'a Graph,
    num: Vec<usize>,
    low: Vec<usize>,
    counter: usize,
    cut_found: bool,
}

impl LowpointDfs<'_> {
    // Returns the number of DFS children of `v`; the root is an
    // articulation vertex exactly when it has two or more.
    fn visit(&mut self, v: usize, parent: usize) -> usize {
        self.counter += 1;
        self.num[v] = self.counter;
        self.low[v] = self.counter;
        let mut children = 0;
        for &w in self.g.neighbors(v) {
            if self.num[w] == 0 {
                children += 1;
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if parent != usize::MAX && self.low[w] >= self.num[v] {
                    self.cut_found = true;
                }
            } else if w != parent {
                self.low[v] = self.low[v].min(self.num[w]);
            }
        }
        children
    }
}

/// Length of a shortest cycle, `None` for acyclic graphs.
///
/// One BFS per root; the first non-tree edge seen from a root closes a
/// walk of length `dist[u] + dist[w] + 1`, which always contains a
/// cycle no longer than itself, and for a root on a shortest cycle the
/// walk realizes the girth exactly. The minimum over roots is exact.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if let Some(b) = best {
                // Candidates from u have length at least 2*dist[u].
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if w != parent[u] {
                    let len = dist[u] + dist[w] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}
