//! The stepwise-transmission-irregularity predicate, isomorph-free
//! census generation, and graph6 stream filtering.
//!
//! Internal generation grows graphs one vertex per level: every
//! connected graph on k+1 vertices arises from a connected graph on k
//! vertices by attaching a new vertex to a nonempty subset of the old
//! ones (delete any non-cut vertex to see this), so augmenting every
//! parent with every admissible subset and deduplicating by canonical
//! form visits each isomorphism class exactly once per level. In
//! bipartite mode the subset is drawn from one side of the parent's
//! bipartition, which is unique for connected parents, so children
//! that cannot be two-colored are never built at all.
//!
//! Minimum-degree pruning applies only at the final level: earlier
//! vertices may still gain edges from vertices added later. At the
//! final level the attachment subset must cover every vertex still
//! below the target degree, so the subset generator bakes the
//! requirement in instead of filtering after the fact.

use std::collections::BTreeMap;
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{EnumerateError, Graph6Error};
use crate::graph::{bits, Graph, MAX_ORDER};
use crate::graph6;
use crate::metric::{distance_profile, DistanceProfile};
use crate::report::{analyze, InvariantReport};
use crate::structure::{bipartition, is_connected, is_two_connected, Bipartition};

/// Largest order generated internally by default. Larger odd orders
/// are expected to arrive as graph6 streams from an external generator.
pub const DEFAULT_INTERNAL_CAP: usize = 11;

pub const CENSUS_SCHEMA: &str = "sti-census/1";

/// True iff adjacent transmissions differ by exactly one on every edge.
pub fn is_sti(g: &Graph, profile: &DistanceProfile) -> bool {
    let tr = profile.transmissions();
    g.edges().all(|(u, v)| tr[u].abs_diff(tr[v]) == 1)
}

/// Configuration for one census run.
#[derive(Clone, Debug)]
pub struct EnumerationTask {
    /// Odd order of the census.
    pub n: usize,
    /// Refuse internal generation above this order.
    pub internal_cap: usize,
    /// Apply the necessary-condition prunings (bipartite search space,
    /// final minimum degree 2, biconnectivity). Disabling them searches
    /// all connected graphs and keeps only the STI predicate; the
    /// censuses must agree.
    pub use_prefilters: bool,
}

impl EnumerationTask {
    pub fn new(n: usize) -> Self {
        EnumerationTask {
            n,
            internal_cap: DEFAULT_INTERNAL_CAP,
            use_prefilters: true,
        }
    }
}

/// Counters describing one census run.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct EnumerationStats {
    pub mode: String,
    /// Final-level graphs examined (internal) or right-order stream lines.
    pub candidates: u64,
    /// Candidates surviving the biconnectivity gate (internal mode).
    pub two_connected: u64,
    /// STI hits before isomorphism deduplication.
    pub sti_labeled: u64,
    pub stream_lines: u64,
    pub stream_skipped_order: u64,
    pub stream_rejected: u64,
}

/// Girth distribution of a census, with acyclic members listed apart
/// and cyclic members of girth other than four called out.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GirthProbe {
    pub histogram: BTreeMap<usize, usize>,
    pub acyclic: Vec<String>,
    pub counterexamples: Vec<String>,
}

/// One census member: its certificate and full invariant report. The
/// reported graph carries the canonical labeling.
#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    #[serde(skip)]
    pub certificate: CanonicalForm,
    #[serde(flatten)]
    pub report: InvariantReport,
}

/// The census of STI graphs of one odd order, sorted by certificate.
#[derive(Clone, Debug, Serialize)]
pub struct CensusResult {
    pub schema: String,
    pub n: usize,
    pub count: usize,
    pub girth: GirthProbe,
    pub stats: EnumerationStats,
    #[serde(rename = "graphs")]
    pub entries: Vec<CensusEntry>,
}

impl CensusResult {
    pub fn graph6_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.report.graph6);
            out.push('\n');
        }
        out
    }
}

/// Generate the census of STI graphs of odd order `n` internally.
pub fn enumerate_sti(task: &EnumerationTask) -> Result<CensusResult, EnumerateError> {
    let n = task.n;
    if n < 3 || n % 2 == 0 {
        return Err(EnumerateError::InvalidOrder(n));
    }
    if n > task.internal_cap {
        return Err(EnumerateError::AboveCap {
            n,
            cap: task.internal_cap,
        });
    }
    let mut level = vec![canonical_form(&Graph::from_edge_list(1, &[]).unwrap())];
    for _ in 1..n - 1 {
        level = level_up(&level, task.use_prefilters);
    }
    let (certs, mut stats) = final_level_sti(&level, n, task.use_prefilters);
    stats.mode = "internal".into();
    Ok(build_census(n, certs, stats))
}

/// All connected graphs on `n` vertices up to isomorphism, optionally
/// restricted to bipartite ones, as sorted canonical forms.
pub fn enumerate_connected(n: usize, bipartite_only: bool) -> Vec<CanonicalForm> {
    assert!(n >= 1 && n <= MAX_ORDER);
    let mut level = vec![canonical_form(&Graph::from_edge_list(1, &[]).unwrap())];
    for _ in 1..n {
        level = level_up(&level, bipartite_only);
    }
    level
}

/// Filter a graph6 stream down to the STI census of order `n`. Lines of
/// other orders are counted and skipped; malformed lines abort with
/// their line number. An optional `>>graph6<<` prefix is tolerated.
pub fn filter_sti_stream<R: BufRead>(n: usize, reader: R) -> Result<CensusResult, EnumerateError> {
    if n < 3 || n % 2 == 0 {
        return Err(EnumerateError::InvalidOrder(n));
    }
    let mut stats = EnumerationStats {
        mode: "stream".into(),
        ..EnumerationStats::default()
    };
    let mut certs: Vec<CanonicalForm> = Vec::new();
    let mut batch: Vec<(usize, String)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim_end_matches(['\r', '\n']);
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        if text.is_empty() {
            continue;
        }
        batch.push((idx + 1, text.to_string()));
        if batch.len() >= STREAM_BATCH {
            drain_batch(n, &mut batch, &mut stats, &mut certs)?;
        }
    }
    drain_batch(n, &mut batch, &mut stats, &mut certs)?;
    certs.par_sort_unstable();
    certs.dedup();
    Ok(build_census(n, certs, stats))
}

/// Girth distribution over one census.
pub fn probe_girth_conjecture(census: &CensusResult) -> GirthProbe {
    probe_entries(&census.entries)
}

const STREAM_BATCH: usize = 1 << 16;

enum StreamOutcome {
    WrongOrder,
    Rejected,
    Sti(CanonicalForm),
}

fn drain_batch(
    n: usize,
    batch: &mut Vec<(usize, String)>,
    stats: &mut EnumerationStats,
    certs: &mut Vec<CanonicalForm>,
) -> Result<(), EnumerateError> {
    let results: Vec<Result<StreamOutcome, (usize, Graph6Error)>> = batch
        .par_iter()
        .map(|(line, text)| {
            let g = graph6::decode(text).map_err(|e| (*line, e))?;
            Ok(classify(n, &g))
        })
        .collect();
    batch.clear();
    for r in results {
        stats.stream_lines += 1;
        match r {
            Err((line, source)) => return Err(EnumerateError::Stream { line, source }),
            Ok(StreamOutcome::WrongOrder) => stats.stream_skipped_order += 1,
            Ok(StreamOutcome::Rejected) => {
                stats.candidates += 1;
                stats.stream_rejected += 1;
            }
            Ok(StreamOutcome::Sti(cert)) => {
                stats.candidates += 1;
                stats.sti_labeled += 1;
                certs.push(cert);
            }
        }
    }
    Ok(())
}

// Necessary conditions first, cheapest first; the STI predicate and
// canonical form only run on what survives.
fn classify(n: usize, g: &Graph) -> StreamOutcome {
    if g.order() != n {
        return StreamOutcome::WrongOrder;
    }
    if !is_connected(g) {
        return StreamOutcome::Rejected;
    }
    if n >= 5 {
        if !matches!(bipartition(g), Ok(Some(_))) {
            return StreamOutcome::Rejected;
        }
        if !is_two_connected(g) {
            return StreamOutcome::Rejected;
        }
    }
    let profile = distance_profile(g).expect("connectivity was checked");
    if is_sti(g, &profile) {
        StreamOutcome::Sti(canonical_form(g))
    } else {
        StreamOutcome::Rejected
    }
}

fn build_census(n: usize, certs: Vec<CanonicalForm>, stats: EnumerationStats) -> CensusResult {
    let entries: Vec<CensusEntry> = certs
        .into_par_iter()
        .map(|certificate| {
            let g = certificate.to_graph();
            let report = analyze(&g).expect("census members are connected");
            CensusEntry {
                certificate,
                report,
            }
        })
        .collect();
    let girth = probe_entries(&entries);
    CensusResult {
        schema: CENSUS_SCHEMA.into(),
        n,
        count: entries.len(),
        girth,
        stats,
        entries,
    }
}

fn probe_entries(entries: &[CensusEntry]) -> GirthProbe {
    let mut histogram = BTreeMap::new();
    let mut acyclic = Vec::new();
    let mut counterexamples = Vec::new();
    for e in entries {
        match e.report.girth {
            None => acyclic.push(e.report.graph6.clone()),
            Some(gi) => {
                *histogram.entry(gi).or_insert(0) += 1;
                if gi != 4 {
                    counterexamples.push(e.report.graph6.clone());
                }
            }
        }
    }
    GirthProbe {
        histogram,
        acyclic,
        counterexamples,
    }
}

fn attach(parent: &Graph, mask: u64) -> Graph {
    let k = parent.order();
    let mut rows: Vec<u64> = (0..k).map(|v| parent.row(v)).collect();
    rows.push(mask);
    for v in bits(mask) {
        rows[v] |= 1 << k;
    }
    Graph::from_rows(k + 1, rows)
}

fn push_submasks(set: u64, required: u64, min_size: u32, out: &mut Vec<u64>) {
    let mut t = set;
    loop {
        let s = t | required;
        if s.count_ones() >= min_size {
            out.push(s);
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & set;
    }
}

fn attach_masks(parent: &Graph, bipartite_only: bool) -> Vec<u64> {
    let mut masks = Vec::new();
    if bipartite_only {
        let bip = bipartition(parent)
            .expect("parents are connected")
            .expect("parents are bipartite");
        for side in 0..2 {
            let side_mask = bip.side_mask(side);
            if side_mask != 0 {
                push_submasks(side_mask, 0, 1, &mut masks);
            }
        }
    } else {
        push_submasks((1u64 << parent.order()) - 1, 0, 1, &mut masks);
    }
    masks
}

// Final-level masks must give the new vertex degree >= min_deg and
// cover every parent vertex still below min_deg.
fn final_masks(parent: &Graph, bip: &Bipartition, min_deg: usize) -> Vec<u64> {
    let mut required = 0u64;
    for v in 0..parent.order() {
        if parent.degree(v) + 1 < min_deg {
            return Vec::new();
        }
        if parent.degree(v) < min_deg {
            required |= 1 << v;
        }
    }
    let mut masks = Vec::new();
    for side in 0..2 {
        let side_mask = bip.side_mask(side);
        if side_mask == 0 || required & !side_mask != 0 {
            continue;
        }
        push_submasks(side_mask & !required, required, min_deg as u32, &mut masks);
    }
    masks
}

fn level_up(parents: &[CanonicalForm], bipartite_only: bool) -> Vec<CanonicalForm> {
    let mut children: Vec<CanonicalForm> = parents
        .par_iter()
        .flat_map_iter(|cert| {
            let parent = cert.to_graph();
            attach_masks(&parent, bipartite_only)
                .into_iter()
                .map(move |mask| canonical_form(&attach(&parent, mask)))
                .collect::<Vec<_>>()
        })
        .collect();
    children.par_sort_unstable();
    children.dedup();
    children
}

fn final_level_sti(
    parents: &[CanonicalForm],
    n: usize,
    prefilters: bool,
) -> (Vec<CanonicalForm>, EnumerationStats) {
    let min_deg = if n >= 5 { 2 } else { 1 };
    let (mut certs, stats) = parents
        .par_iter()
        .map(|cert| {
            let parent = cert.to_graph();
            let mut local = Vec::new();
            let mut stats = EnumerationStats::default();
            let masks = if prefilters {
                let bip = bipartition(&parent)
                    .expect("parents are connected")
                    .expect("parents are bipartite");
                final_masks(&parent, &bip, min_deg)
            } else {
                attach_masks(&parent, false)
            };
            for mask in masks {
                stats.candidates += 1;
                let g = attach(&parent, mask);
                if prefilters && n >= 5 {
                    if !is_two_connected(&g) {
                        continue;
                    }
                    stats.two_connected += 1;
                }
                let profile = distance_profile(&g).expect("children are connected");
                if !is_sti(&g, &profile) {
                    continue;
                }
                stats.sti_labeled += 1;
                local.push(canonical_form(&g));
            }
            (local, stats)
        })
        .reduce(
            || (Vec::new(), EnumerationStats::default()),
            |(mut av, mut astats), (bv, bstats)| {
                av.extend(bv);
                astats.candidates += bstats.candidates;
                astats.two_connected += bstats.two_connected;
                astats.sti_labeled += bstats.sti_labeled;
                (av, astats)
            },
        );
    certs.par_sort_unstable();
    certs.dedup();
    (certs, stats)
}
