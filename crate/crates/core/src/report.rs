//! One-stop invariant report for a single graph.

use serde::Serialize;

use crate::canon::canonical_form;
use crate::error::GraphError;
use crate::families::{identify_family_with_cert, FamilyTag};
use crate::graph::Graph;
use crate::graph6;
use crate::indices::{mostar_checked, zagreb1, zagreb2};
use crate::metric::{
    diameter, distance_profile, eccentricity_sum, tr_extremes, wiener, wiener_complexity,
};
use crate::structure::{bipartition, girth, is_two_connected};
use crate::enumerate::is_sti;

/// Every invariant the library computes for one graph. Serializes to a
/// flat JSON object; `girth` is null for acyclic graphs and `bipartite`
/// is null for non-bipartite ones.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvariantReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub bipartite: Option<[usize; 2]>,
    pub two_connected: bool,
    pub girth: Option<usize>,
    pub diameter: u16,
    pub eccentricity_sum: u64,
    pub transmissions: Vec<u32>,
    pub transmission_min: u32,
    pub transmission_max: u32,
    pub wiener: u64,
    pub wiener_complexity: usize,
    pub mostar: u64,
    pub zagreb1: u64,
    pub zagreb2: u64,
    pub sti: bool,
    pub families: Vec<FamilyTag>,
}

/// Compute the full report. Errors on disconnected input.
pub fn analyze(g: &Graph) -> Result<InvariantReport, GraphError> {
    let profile = distance_profile(g)?;
    let bip = bipartition(g)?;
    let extremes = tr_extremes(&profile);
    let cert = canonical_form(g);
    Ok(InvariantReport {
        graph6: graph6::encode(g),
        n: g.order(),
        m: g.size(),
        bipartite: bip.map(|b| {
            let (x, y) = b.sizes();
            [x, y]
        }),
        two_connected: is_two_connected(g),
        girth: girth(g),
        diameter: diameter(&profile),
        eccentricity_sum: eccentricity_sum(&profile),
        transmissions: profile.transmissions().to_vec(),
        transmission_min: extremes.min,
        transmission_max: extremes.max,
        wiener: wiener(&profile),
        wiener_complexity: wiener_complexity(&profile),
        mostar: mostar_checked(g, &profile),
        zagreb1: zagreb1(g),
        zagreb2: zagreb2(g),
        sti: is_sti(g, &profile),
        families: identify_family_with_cert(g, &cert),
    })
}
