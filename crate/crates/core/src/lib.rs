//! Distance-based graph invariants, extremal graph families, and
//! isomorph-free enumeration of stepwise transmission irregular (STI)
//! graphs: connected graphs whose adjacent vertices always have
//! transmissions differing by exactly one.
//!
//! The crate is organized around small immutable graphs:
//!
//! - [`graph`]: the bitset-backed [`Graph`] type and edge-list text I/O.
//! - [`structure`]: connectivity, bipartiteness, biconnectivity, girth.
//! - [`graph6`]: the graph6 line codec.
//! - [`canon`]: canonical forms for isomorphism rejection.
//! - [`metric`]: all-pairs BFS distances, transmissions, Wiener index.
//! - [`indices`]: Mostar and Zagreb indices.
//! - [`families`]: hatted cycles, balanced complete bipartite graphs,
//!   theta graphs, and family identification.
//! - [`enumerate`]: STI censuses by canonical augmentation or graph6
//!   stream filtering.
//! - [`verify`]: machine checks of extremal bounds and equality
//!   characterizations over censuses.
//! - [`report`]: one-stop per-graph invariant reports.
//! - [`oracle`]: brute-force references for the test suites.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod metric;
pub mod oracle;
pub mod report;
pub mod structure;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm};
pub use enumerate::{
    enumerate_connected, enumerate_sti, filter_sti_stream, is_sti, probe_girth_conjecture,
    CensusResult, EnumerationTask, DEFAULT_INTERNAL_CAP,
};
pub use error::{EnumerateError, FamilyError, Graph6Error, GraphError};
pub use families::{
    balanced_complete_bipartite, hatted_cycle, identify_family, theta, FamilyTag,
};
pub use graph::{Graph, MAX_ORDER};
pub use indices::{edge_balances, mostar, mostar_checked, zagreb1, zagreb2, EdgeBalance};
pub use metric::{
    diameter, distance_profile, eccentric_vertices, eccentricity_sum, tr_extremes, wiener,
    wiener_complexity, DistanceProfile, TransmissionExtremes,
};
pub use report::{analyze, InvariantReport};
pub use structure::{bipartition, girth, is_connected, is_two_connected, Bipartition};
pub use verify::{verify_census, verify_report, VerificationReport};
