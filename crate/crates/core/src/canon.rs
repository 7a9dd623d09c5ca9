//! Canonical forms via color refinement with individualization.
//!
//! The search keeps an ordered partition of the vertices. Refinement
//! repeatedly splits cells by the multiset of neighbor counts into the
//! current cells, ordering fragments by their count signature, which is
//! label-invariant. When the partition is not discrete, the first
//! non-singleton cell is split by individualizing each of its vertices
//! in turn; the certificate is the lexicographically least adjacency
//! encoding over all leaves.
//!
//! Two prunings keep highly symmetric graphs (complete bipartite,
//! cycles) tractable. Leaves whose encoding equals the first leaf's
//! yield an automorphism; the search then jumps back to the deepest
//! node shared with the first path, because the abandoned subtree is
//! the automorphic image of an already explored one. Discovered
//! automorphisms that fix the current individualization prefix
//! pointwise also let sibling candidates in the same orbit be skipped.

use crate::graph::Graph;

/// Relabeling-invariant certificate: equal exactly for isomorphic
/// graphs. Layout is the order byte followed by the packed upper
/// triangle of the canonically relabeled adjacency matrix (same column
/// order as graph6), so the canonical representative can be decoded
/// back out of the certificate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn order(&self) -> usize {
        self.bytes[0] as usize
    }

    /// Decode the canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = vec![0u64; n];
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.bytes[1 + k / 8] >> (7 - k % 8) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows(n, rows)
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.bytes {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Compute the canonical certificate of a graph.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (bytes, _) = Searcher::new(g).run();
    CanonicalForm { bytes }
}

/// A labeling (vertex to position) that realizes the canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let (_, labeling) = Searcher::new(g).run();
    labeling
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && canonical_form(a) == canonical_form(b)
}

type Cells = Vec<Vec<usize>>;

const NO_JUMP: usize = usize::MAX;

struct FirstLeaf {
    cert: Vec<u8>,
    vertex_at: Vec<usize>,
    path: Vec<usize>,
}

struct Searcher<'g> {
    g: &'g Graph,
    n: usize,
    best: Vec<u8>,
    best_vertex_at: Vec<usize>,
    have_best: bool,
    first: Option<FirstLeaf>,
    autos: Vec<Vec<usize>>,
    path: Vec<usize>,
    jump_to: usize,
}

impl<'g> Searcher<'g> {
    fn new(g: &'g Graph) -> Self {
        Searcher {
            g,
            n: g.order(),
            best: Vec::new(),
            best_vertex_at: Vec::new(),
            have_best: false,
            first: None,
            autos: Vec::new(),
            path: Vec::new(),
            jump_to: NO_JUMP,
        }
    }

    fn run(mut self) -> (Vec<u8>, Vec<usize>) {
        let mut cells: Cells = vec![(0..self.n).collect()];
        refine(self.g, &mut cells);
        self.search(cells);
        let mut bytes = Vec::with_capacity(1 + self.best.len());
        bytes.push(self.n as u8);
        bytes.extend_from_slice(&self.best);
        let mut labeling = vec![0usize; self.n];
        for (pos, &v) in self.best_vertex_at.iter().enumerate() {
            labeling[v] = pos;
        }
        (bytes, labeling)
    }

    fn search(&mut self, cells: Cells) {
        let target = match cells.iter().position(|c| c.len() > 1) {
            None => {
                self.visit_leaf(&cells);
                return;
            }
            Some(t) => t,
        };
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &candidates {
            if self.in_tried_orbit(w, &tried) {
                continue;
            }
            tried.push(w);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target]
                .iter()
                .copied()
                .filter(|&x| x != w)
                .collect();
            child[target] = vec![w];
            child.insert(target + 1, rest);
            refine(self.g, &mut child);
            self.path.push(w);
            self.search(child);
            self.path.pop();
            if self.jump_to != NO_JUMP {
                if self.jump_to < self.path.len() {
                    return;
                }
                self.jump_to = NO_JUMP;
            }
        }
    }

    fn visit_leaf(&mut self, cells: &Cells) {
        let vertex_at: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = encode_triangle(self.g, &vertex_at);
        if let Some(first) = &self.first {
            if cert == first.cert {
                let auto = permutation_between(&vertex_at, &first.vertex_at);
                debug_assert!(is_automorphism(self.g, &auto));
                let common = self
                    .path
                    .iter()
                    .zip(&first.path)
                    .take_while(|(a, b)| a == b)
                    .count();
                self.autos.push(auto);
                self.jump_to = common;
                return;
            }
        } else {
            self.first = Some(FirstLeaf {
                cert: cert.clone(),
                vertex_at: vertex_at.clone(),
                path: self.path.clone(),
            });
        }
        if !self.have_best || cert < self.best {
            self.best = cert;
            self.best_vertex_at = vertex_at;
            self.have_best = true;
        } else if cert == self.best {
            let auto = permutation_between(&vertex_at, &self.best_vertex_at);
            debug_assert!(is_automorphism(self.g, &auto));
            self.autos.push(auto);
        }
    }

    // Candidate w duplicates an already-expanded sibling if some known
    // automorphism that fixes every individualized vertex maps a tried
    // sibling onto it (closed under composition via union-find).
    fn in_tried_orbit(&self, w: usize, tried: &[usize]) -> bool {
        if tried.is_empty() || self.autos.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        let mut used_any = false;
        for auto in &self.autos {
            if self.path.iter().any(|&p| auto[p] != p) {
                continue;
            }
            used_any = true;
            for v in 0..self.n {
                union(&mut parent, v, auto[v]);
            }
        }
        if !used_any {
            return false;
        }
        let rw = find(&mut parent, w);
        tried.iter().any(|&t| find(&mut parent, t) == rw)
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

// The vertex map sending each vertex to the one holding the same
// position in the other leaf. When both leaves encode identically this
// is an automorphism.
fn permutation_between(vertex_at: &[usize], other_vertex_at: &[usize]) -> Vec<usize> {
    let n = vertex_at.len();
    let mut pos = vec![0usize; n];
    for (p, &v) in vertex_at.iter().enumerate() {
        pos[v] = p;
    }
    (0..n).map(|v| other_vertex_at[pos[v]]).collect()
}

fn is_automorphism(g: &Graph, map: &[usize]) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    for &p in map {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    g.edges().all(|(u, v)| g.has_edge(map[u], map[v]))
}

// Split every cell by the vector of neighbor counts into all current
// cells, until stable. Fragment order follows the count signature, so
// the resulting ordered partition is independent of vertex labels.
fn refine(g: &Graph, cells: &mut Cells) {
    let n = g.order();
    loop {
        if cells.len() == n {
            return;
        }
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig: Vec<u32> = masks
                        .iter()
                        .map(|&m| (g.row(v) & m).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            let mut fragments = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|kv| kv.1).collect());
                    fragments += 1;
                    start = i;
                }
            }
            if fragments > 1 {
                split = true;
            }
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

fn encode_triangle(g: &Graph, vertex_at: &[usize]) -> Vec<u8> {
    let n = vertex_at.len();
    let nbits = n * (n - 1) / 2;
    let mut bytes = vec![0u8; nbits.div_ceil(8)];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(vertex_at[i], vertex_at[j]) {
                bytes[k / 8] |= 1 << (7 - k % 8);
            }
            k += 1;
        }
    }
    bytes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{balanced_complete_bipartite, hatted_cycle};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn hatted_five_is_k23() {
        let g5 = hatted_cycle(5).unwrap();
        let k23 = balanced_complete_bipartite(5).unwrap();
        assert_eq!(canonical_form(&g5), canonical_form(&k23));
        assert!(are_isomorphic(&g5, &k23));
    }

    #[test]
    fn relabeling_invariance_c6() {
        let c6 = cycle(6);
        let shuffled = c6.relabel(&[3, 5, 1, 0, 4, 2]);
        assert_eq!(canonical_form(&c6), canonical_form(&shuffled));
    }

    #[test]
    fn different_graphs_differ() {
        let k23 = balanced_complete_bipartite(5).unwrap();
        assert_ne!(canonical_form(&k23), canonical_form(&cycle(5)));
    }

    #[test]
    fn labeling_realizes_certificate() {
        let g = hatted_cycle(9).unwrap();
        let cert = canonical_form(&g);
        let labeling = canonical_labeling(&g);
        let relabeled = g.relabel(&labeling);
        assert_eq!(canonical_form(&relabeled).to_graph(), relabeled);
        assert_eq!(cert.to_graph(), relabeled);
    }

    #[test]
    fn certificate_round_trips_through_graph() {
        let g = hatted_cycle(11).unwrap();
        let cert = canonical_form(&g);
        assert_eq!(canonical_form(&cert.to_graph()), cert);
        assert_eq!(cert.order(), 11);
    }

    #[test]
    fn large_symmetric_graphs_terminate() {
        // Automorphism groups of size 12!*13!-ish; relies on the
        // backjump pruning to finish quickly.
        let k = balanced_complete_bipartite(25).unwrap();
        let cert = canonical_form(&k);
        assert_eq!(cert.order(), 25);
        let c = cycle(40);
        assert_eq!(canonical_form(&c).order(), 40);
    }

    #[test]
    fn single_vertex_and_edge() {
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(canonical_form(&k1).as_bytes(), &[1]);
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(canonical_form(&k2).as_bytes(), &[2, 0b1000_0000]);
    }
}
