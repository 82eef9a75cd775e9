//! Exhaustive checks of the ergodicity characterisation over all
//! z-orientations, per-orientation proposition checks, the catalogue of named
//! orientations and the helpers used to build orientations of connected sums
//! and subdivisions.

mod catalog;
mod constructions;

pub use catalog::{catalog_tau, horizontal_zigzag, skew_zigzag, vertical_zigzag, Instance, TauName};
pub use constructions::{lifted_orientation, summed_orientation, LiftedOrientation, SummedOrientation};

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::three_color;
use crate::markov::{build_chain, period, MarkovError, TransitionChain};
use crate::surface::{SurfaceError, Triangulation};
use crate::zigzag::{classify, EdgeType, FaceType, ZOrientation, ZigzagError, ZigzagSystem};

pub const DEFAULT_MAX_K: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("{k} zigzag pairs exceeds the limit of {max_k}")]
    TooManyZigzags { k: usize, max_k: usize },
    #[error("unknown catalogue instance")]
    UnknownInstance,
    #[error("unknown orientation name {0}")]
    UnknownName(String),
    #[error("catalogue match failed: {0}")]
    MatchFailure(String),
    #[error("orientation is not all type II: {0}")]
    NotAllTypeII(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Zigzag(#[from] ZigzagError),
    #[error(transparent)]
    Markov(#[from] MarkovError),
}

impl LabError {
    pub fn code(&self) -> &'static str {
        match self {
            LabError::TooManyZigzags { .. } => "TooManyZigzags",
            LabError::UnknownInstance => "UnknownInstance",
            LabError::UnknownName(_) => "UnknownName",
            LabError::MatchFailure(_) => "MatchFailure",
            LabError::NotAllTypeII(_) => "NotAllTypeII",
            LabError::Surface(e) => e.code(),
            LabError::Zigzag(e) => e.code(),
            LabError::Markov(e) => e.code(),
        }
    }
}

/// The three mutually exclusive cases for a z-oriented triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Case {
    /// Some face of type I; ergodic.
    A,
    /// All faces type II and 3-colourable; not ergodic.
    B,
    /// All faces type II and not 3-colourable; ergodic.
    C,
}

impl Case {
    pub fn of(all_type_ii: bool, colorable: bool) -> Case {
        match (all_type_ii, colorable) {
            (false, _) => Case::A,
            (true, true) => Case::B,
            (true, false) => Case::C,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauRecord {
    pub bits: String,
    pub all_type2: bool,
    pub has_type1_face: bool,
    pub period: usize,
    pub ergodic: bool,
    pub case: Case,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub instance: String,
    pub k: usize,
    pub colorable: bool,
    pub chi: i64,
    pub taus: Vec<TauRecord>,
    pub theorem1_holds: bool,
    /// On spheres: not ergodic exactly when all faces are type II.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sphere_simplification_holds: Option<bool>,
}

impl VerificationReport {
    pub fn case_count(&self, case: Case) -> usize {
        self.taus.iter().filter(|t| t.case == case).count()
    }
}

fn tau_record(
    tri: &Triangulation,
    system: &ZigzagSystem,
    zor: &ZOrientation,
    colorable: bool,
) -> Result<TauRecord, LabError> {
    let (edges, faces) = classify(tri, system, zor)?;
    let chain = build_chain(tri, &edges);
    let period = period(&chain)?;
    let all_type2 = faces.all_type_ii();
    Ok(TauRecord {
        bits: zor.to_string(),
        all_type2,
        has_type1_face: faces.has_type_i(),
        period,
        ergodic: period == 1,
        case: Case::of(all_type2, colorable),
    })
}

/// Classifies and analyses the chain for every one of the `2^k`
/// z-orientations and checks that a chain fails to be ergodic exactly when the
/// triangulation is 3-colourable and all faces are of type II.
///
/// Orientations are evaluated in parallel; records are ordered by bit string.
pub fn verify_theorem1(tri: &Triangulation, instance: &str, max_k: usize) -> Result<VerificationReport, LabError> {
    let system = ZigzagSystem::new(tri);
    let k = system.k();
    if k > max_k || k >= 64 {
        return Err(LabError::TooManyZigzags { k, max_k });
    }
    let colorable = three_color(tri).is_some();
    let chi = tri.euler_characteristic();

    let taus: Vec<TauRecord> = (0..1u64 << k)
        .into_par_iter()
        .map(|idx| tau_record(tri, &system, &ZOrientation::from_index(k, idx), colorable))
        .collect::<Result<_, _>>()?;

    let theorem1_holds = taus.iter().all(|t| !t.ergodic == (colorable && t.all_type2));
    let sphere_simplification_holds = (chi == 2).then(|| taus.iter().all(|t| !t.ergodic == t.all_type2));
    Ok(VerificationReport {
        instance: instance.to_string(),
        k,
        colorable,
        chi,
        taus,
        theorem1_holds,
        sphere_simplification_holds,
    })
}

/// Per-orientation checks of the structural propositions about the chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub bits: String,
    /// Vertices with no directed 3-cycle through them.
    pub missing_three_cycles: Vec<String>,
    pub irreducible: bool,
    pub period: Option<usize>,
    pub ergodic: bool,
    /// A face of type I, if any.
    pub type1_face: Option<String>,
    /// Closed walk of length 5 through that face.
    pub five_walk: Option<Vec<String>>,
    pub passed: bool,
}

/// A directed 3-cycle `v -> a -> b -> v` in the chain's digraph.
pub fn three_cycle_through(chain: &TransitionChain, v: usize) -> Option<[usize; 3]> {
    chain
        .successors(v)
        .find_map(|a| chain.successors(a).find(|&b| chain.has_arc(b, v)).map(|b| [v, a, b]))
}

/// For a type I face with type II edge `v1 -> v2` and apex `v3`, the closed
/// walk `v1 v2 v3 v2 v3 v1`, returned only if every step has positive
/// probability.
pub fn five_walk(chain: &TransitionChain, tail: usize, head: usize, apex: usize) -> Option<[usize; 6]> {
    let walk = [tail, head, apex, head, apex, tail];
    walk.windows(2).all(|w| chain.has_arc(w[0], w[1])).then_some(walk)
}

pub fn check_propositions(
    tri: &Triangulation,
    system: &ZigzagSystem,
    zor: &ZOrientation,
) -> Result<PropositionReport, LabError> {
    let (edges, faces) = classify(tri, system, zor)?;
    let chain = build_chain(tri, &edges);
    let missing_three_cycles: Vec<String> = (0..tri.vertex_count())
        .filter(|&v| three_cycle_through(&chain, v).is_none())
        .map(|v| tri.label(v).to_string())
        .collect();
    let period = period(&chain).ok();
    let irreducible = period.is_some();
    let ergodic = period == Some(1);

    let mut type1_face = None;
    let mut five = None;
    let mut witness_ok = true;
    if let Some(fid) = (0..tri.face_count()).find(|&f| faces.get(f) == FaceType::I) {
        let [a, b, c] = tri.faces()[fid];
        let arc = [(a, b), (b, c), (a, c)]
            .into_iter()
            .find_map(|(x, y)| match edges.get(tri.edge_id(x, y).unwrap()) {
                EdgeType::II { tail, head } => Some((tail, head)),
                EdgeType::I => None,
            })
            .expect("type I face has a type II edge");
        let apex = [a, b, c].into_iter().find(|&x| x != arc.0 && x != arc.1).unwrap();
        type1_face = Some(tri.face_name(fid));
        match five_walk(&chain, arc.0, arc.1, apex) {
            Some(w) => five = Some(w.iter().map(|&v| tri.label(v).to_string()).collect()),
            None => witness_ok = false,
        }
        witness_ok &= ergodic;
    }

    let passed = missing_three_cycles.is_empty() && irreducible && matches!(period, Some(1) | Some(3)) && witness_ok;
    Ok(PropositionReport {
        bits: zor.to_string(),
        missing_three_cycles,
        irreducible,
        period,
        ergodic,
        type1_face,
        five_walk: five,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::octahedron;

    #[test]
    fn case_assignment() {
        assert_eq!(Case::of(false, true), Case::A);
        assert_eq!(Case::of(false, false), Case::A);
        assert_eq!(Case::of(true, true), Case::B);
        assert_eq!(Case::of(true, false), Case::C);
    }

    #[test]
    fn too_many_zigzags() {
        let o = octahedron();
        assert_eq!(
            verify_theorem1(&o, "octahedron", 3).unwrap_err(),
            LabError::TooManyZigzags { k: 4, max_k: 3 }
        );
    }
}
