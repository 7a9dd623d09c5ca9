//! Constructors for the extremal graph families and membership tests
//! against them.
//!
//! Membership is decided by canonical-form equality against a freshly
//! constructed representative of the same order, never by structural
//! pattern matching.

use serde::{Serialize, Serializer};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::FamilyError;
use crate::graph::Graph;

/// Tag naming a family member. A graph can match several tags at once;
/// notably order 5, where the hatted cycle and the balanced complete
/// bipartite graph coincide.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    Path3,
    HattedCycle(usize),
    BalancedCompleteBipartite(usize),
    Theta { n: usize, p: usize, q: usize },
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyTag::Path3 => write!(f, "path(3)"),
            FamilyTag::HattedCycle(n) => write!(f, "hatted-cycle({n})"),
            FamilyTag::BalancedCompleteBipartite(n) => {
                write!(f, "balanced-complete-bipartite({n})")
            }
            FamilyTag::Theta { n, p, q } => write!(f, "theta({n},{p},{q})"),
        }
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The hatted cycle on odd `n >= 5`: a cycle on the first `n-1`
/// vertices plus a final vertex adjacent to the first and third cycle
/// vertices. Size is `n + 1`.
pub fn hatted_cycle(n: usize) -> Result<Graph, FamilyError> {
    if n % 2 == 0 {
        return Err(FamilyError::EvenOrder(n));
    }
    if n < 5 {
        return Err(FamilyError::OrderTooSmall { got: n, min: 5 });
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, (i + 1) % (n - 1))).collect();
    edges.push((n - 1, 0));
    edges.push((n - 1, 2));
    Ok(Graph::from_edge_list(n, &edges).expect("valid construction"))
}

/// The balanced complete bipartite graph of odd order: sides of sizes
/// `(n-1)/2` and `(n+1)/2`, the small side on the low vertex indices.
pub fn balanced_complete_bipartite(n: usize) -> Result<Graph, FamilyError> {
    if n % 2 == 0 {
        return Err(FamilyError::EvenOrder(n));
    }
    if n < 3 {
        return Err(FamilyError::OrderTooSmall { got: n, min: 3 });
    }
    let a = (n - 1) / 2;
    let mut edges = Vec::with_capacity(a * (n - a));
    for x in 0..a {
        for y in a..n {
            edges.push((x, y));
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("valid construction"))
}

/// The theta graph on `n` vertices: two hub vertices joined by three
/// internally disjoint paths of lengths `p <= q <= n - p - q + 1`. At
/// most one path may have length 1. Size is `n + 1`.
pub fn theta(n: usize, p: usize, q: usize) -> Result<Graph, FamilyError> {
    let err = |reason| FamilyError::InvalidTheta { n, p, q, reason };
    if p < 1 {
        return Err(err("path lengths start at 1"));
    }
    if p > q {
        return Err(err("lengths must be ordered p <= q"));
    }
    if n + 1 < p + q {
        return Err(err("order too small for the given lengths"));
    }
    let r = n + 1 - p - q;
    if q > r {
        return Err(err("lengths must be ordered q <= n - p - q + 1"));
    }
    if q == 1 {
        return Err(err("two paths of length 1 would be a multi-edge"));
    }
    let hubs = (0, 1);
    let mut edges = Vec::new();
    let mut next = 2;
    for len in [p, q, r] {
        let mut prev = hubs.0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, hubs.1));
    }
    debug_assert_eq!(next, n);
    Ok(Graph::from_edge_list(n, &edges).expect("valid construction"))
}

/// All family tags matching the graph, in tag order. Coincidences are
/// reported in full rather than collapsed to one family. A theta tag
/// with lengths (2, 2) is reported as the hatted cycle when the order
/// is odd, since that is the same graph.
pub fn identify_family(g: &Graph) -> Vec<FamilyTag> {
    identify_family_with_cert(g, &canonical_form(g))
}

/// Same as [`identify_family`] for callers that already hold the
/// certificate.
pub fn identify_family_with_cert(g: &Graph, cert: &CanonicalForm) -> Vec<FamilyTag> {
    let n = g.order();
    let m = g.size();
    let mut tags = Vec::new();
    if n == 3 && m == 2 {
        tags.push(FamilyTag::Path3);
    }
    if n % 2 == 1 && n >= 5 && m == n + 1 {
        if let Ok(h) = hatted_cycle(n) {
            if canonical_form(&h) == *cert {
                tags.push(FamilyTag::HattedCycle(n));
            }
        }
    }
    if n % 2 == 1 && n >= 3 && m == (n * n - 1) / 4 {
        if let Ok(k) = balanced_complete_bipartite(n) {
            if canonical_form(&k) == *cert {
                tags.push(FamilyTag::BalancedCompleteBipartite(n));
            }
        }
    }
    if m == n + 1 {
        for p in 1..=n {
            for q in p.max(2)..=n {
                if n + 1 < p + q || q > n + 1 - p - q {
                    continue;
                }
                if (p, q) == (2, 2) && n % 2 == 1 && n >= 5 {
                    continue; // identical to the hatted cycle, tagged above
                }
                if let Ok(t) = theta(n, p, q) {
                    if canonical_form(&t) == *cert {
                        tags.push(FamilyTag::Theta { n, p, q });
                    }
                }
            }
        }
    }
    tags.sort();
    tags
}
