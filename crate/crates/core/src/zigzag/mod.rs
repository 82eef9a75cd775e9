//! Zigzags (closed left-right paths), z-orientations and the type I / type II
//! classification of edges and faces they induce.
//!
//! A trace state is a vertex triple `(x, v, w)` spanning a face: the walk has
//! just traversed `x -> v` and continues along `v -> w`. The successor of
//! `(x, v, w)` is `(v, w, u)` where `u` is the apex of the *other* face on
//! `{v, w}`. This is a permutation of the `6F` states and its cycles are the
//! zigzags.

mod classify;
mod lift;
mod orientation;

pub use classify::{classify, EdgeClassification, EdgeType, FaceClassification, FaceType};
pub use lift::{lift_subdivision, original_edges};
pub use orientation::{orientation_from_edge_directions, ZOrientation};

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::surface::{EdgeId, Triangulation, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZigzagError {
    #[error("edges {0} and {1} are not adjacent")]
    NotAdjacent(String, String),
    #[error("z-orientation has {got} bits, the zigzag system has {want} pairs")]
    WrongLength { got: usize, want: usize },
    #[error("invalid z-orientation: {0}")]
    Parse(String),
    #[error("classification contradiction: {0}")]
    ClassificationContradiction(String),
    #[error("edge directions do not make face {0} a directed cycle")]
    InconsistentDirections(String),
    #[error("no direction given for edge {0}")]
    MissingDirection(String),
    #[error("{0} is not an edge to be directed")]
    UnexpectedDirection(String),
    #[error("zigzag pair {0} both agrees and disagrees with the edge directions")]
    NoConsistentChoice(usize),
    #[error("no z-orientation satisfies the lift constraints")]
    NoSolution,
    #[error("{0} z-orientations satisfy the lift constraints")]
    NotUnique(usize),
    #[error("{0} unconstrained zigzag pairs is too many to search")]
    SearchTooLarge(usize),
}

impl ZigzagError {
    pub fn code(&self) -> &'static str {
        match self {
            ZigzagError::NotAdjacent(..) => "NotAdjacent",
            ZigzagError::WrongLength { .. } => "WrongLength",
            ZigzagError::Parse(_) => "ParseError",
            ZigzagError::ClassificationContradiction(_) => "ClassificationContradiction",
            ZigzagError::InconsistentDirections(_) => "InconsistentDirections",
            ZigzagError::MissingDirection(_) => "MissingDirection",
            ZigzagError::UnexpectedDirection(_) => "UnexpectedDirection",
            ZigzagError::NoConsistentChoice(_) => "NoConsistentChoice",
            ZigzagError::NoSolution => "NoSolution",
            ZigzagError::NotUnique(_) => "NotUnique",
            ZigzagError::SearchTooLarge(_) => "SearchTooLarge",
        }
    }
}

/// A zigzag as a cyclic vertex sequence, stored at its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Zigzag {
    vertices: Vec<VertexId>,
}

impl Zigzag {
    pub fn from_cycle(cycle: &[VertexId]) -> Self {
        Zigzag {
            vertices: least_rotation(cycle),
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Number of edge traversals.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn reversed(&self) -> Zigzag {
        let mut rev = self.vertices.clone();
        rev.reverse();
        Zigzag::from_cycle(&rev)
    }

    /// Directed edge traversals `v_i -> v_{i+1}`, cyclically.
    pub fn traversals(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// True when `cycle` is a rotation of this zigzag.
    pub fn is_rotation_of(&self, cycle: &[VertexId]) -> bool {
        cycle.len() == self.len() && least_rotation(cycle) == self.vertices
    }

    pub fn labels<'a>(&self, tri: &'a Triangulation) -> Vec<&'a str> {
        self.vertices.iter().map(|&v| tri.label(v)).collect()
    }

    pub fn display(&self, tri: &Triangulation) -> String {
        self.labels(tri).join(",")
    }
}

fn least_rotation(cycle: &[VertexId]) -> Vec<VertexId> {
    let n = cycle.len();
    (0..n)
        .map(|r| cycle[r..].iter().chain(&cycle[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Traces the zigzag containing the traversal `tail -> head` followed by the
/// edge `{head, next}`.
pub fn trace(tri: &Triangulation, tail: VertexId, head: VertexId, next: VertexId) -> Result<Zigzag, ZigzagError> {
    let adjacent = tail != next
        && tri.are_adjacent(tail, head)
        && tri.are_adjacent(head, next)
        && tri.face_id([tail, head, next]).is_some();
    if !adjacent {
        let name = |a: VertexId, b: VertexId| format!("{}->{}", tri.label(a), tri.label(b));
        return Err(ZigzagError::NotAdjacent(name(tail, head), name(head, next)));
    }
    Ok(Zigzag::from_cycle(&trace_cycle(tri, (tail, head, next))))
}

/// Label-based convenience wrapper around [`trace`].
pub fn trace_labels(tri: &Triangulation, tail: &str, head: &str, next: &str) -> Result<Zigzag, ZigzagError> {
    let id = |s: &str| {
        tri.vertex_id(s)
            .ok_or_else(|| ZigzagError::NotAdjacent(tail.into(), next.into()))
    };
    trace(tri, id(tail)?, id(head)?, id(next)?)
}

type State = (VertexId, VertexId, VertexId);

fn successor(tri: &Triangulation, (x, v, w): State) -> State {
    let u = tri
        .opposite_apex(v, w, x)
        .expect("valid triangulation: every edge has two faces");
    (v, w, u)
}

fn trace_cycle(tri: &Triangulation, start: State) -> Vec<VertexId> {
    let mut cycle = Vec::new();
    let mut state = start;
    loop {
        cycle.push(state.0);
        state = successor(tri, state);
        if state == start {
            return cycle;
        }
    }
}

/// All zigzags of a triangulation, grouped into reversal pairs.
///
/// Pair `i` holds `(canonical, reverse)` where the canonical member is the
/// lexicographically smaller of the two least rotations; pairs are sorted by
/// their canonical member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagSystem {
    pairs: Vec<(Zigzag, Zigzag)>,
    // edge traversals of each canonical member: (edge, runs from edge[0] to edge[1])
    traversals: Vec<Vec<(EdgeId, bool)>>,
}

impl ZigzagSystem {
    pub fn new(tri: &Triangulation) -> Self {
        let mut seen: HashSet<State> = HashSet::with_capacity(6 * tri.face_count());
        let mut all: BTreeSet<Zigzag> = BTreeSet::new();
        for &[a, b, c] in tri.faces() {
            for start in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                if seen.contains(&start) {
                    continue;
                }
                let cycle = trace_cycle(tri, start);
                let n = cycle.len();
                for i in 0..n {
                    seen.insert((cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]));
                }
                all.insert(Zigzag::from_cycle(&cycle));
            }
        }

        // `all` is sorted, so the first member met of each pair is the canonical one
        let mut pairs: Vec<(Zigzag, Zigzag)> = Vec::with_capacity(all.len() / 2);
        let mut taken: HashSet<Zigzag> = HashSet::new();
        for z in &all {
            if taken.contains(z) {
                continue;
            }
            let r = z.reversed();
            assert_ne!(&r, z, "a zigzag cannot be self-reversed");
            assert!(all.contains(&r), "reverse of a zigzag is a zigzag");
            taken.insert(r.clone());
            pairs.push((z.clone(), r));
        }

        let traversals = pairs
            .iter()
            .map(|(z, _)| {
                z.traversals()
                    .map(|(a, b)| {
                        let e = tri.edge_id(a, b).expect("consecutive zigzag vertices are adjacent");
                        (e, a < b)
                    })
                    .collect()
            })
            .collect();
        ZigzagSystem { pairs, traversals }
    }

    /// Number of reversal pairs.
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(Zigzag, Zigzag)] {
        &self.pairs
    }

    pub fn canonical(&self, i: usize) -> &Zigzag {
        &self.pairs[i].0
    }

    /// The member of pair `i` selected by `reversed`.
    pub fn member(&self, i: usize, reversed: bool) -> &Zigzag {
        if reversed {
            &self.pairs[i].1
        } else {
            &self.pairs[i].0
        }
    }

    pub(crate) fn canonical_traversals(&self, i: usize) -> &[(EdgeId, bool)] {
        &self.traversals[i]
    }

    /// Index of the pair containing `cycle` (given up to rotation) and whether
    /// it matched the reversed member.
    pub fn find(&self, cycle: &[VertexId]) -> Option<(usize, bool)> {
        let z = Zigzag::from_cycle(cycle);
        self.pairs.iter().enumerate().find_map(|(i, (c, r))| {
            if *c == z {
                Some((i, false))
            } else if *r == z {
                Some((i, true))
            } else {
                None
            }
        })
    }

    /// The zigzags selected by `zor`, one per pair.
    pub fn selected<'a>(&'a self, zor: &'a ZOrientation) -> impl Iterator<Item = &'a Zigzag> + 'a {
        zor.bits().iter().enumerate().map(move |(i, &b)| self.member(i, b))
    }

    /// One line per pair: `index<TAB>comma-separated canonical cycle`.
    pub fn listing(&self, tri: &Triangulation) -> String {
        let mut out = String::new();
        for (i, (z, _)) in self.pairs.iter().enumerate() {
            out.push_str(&format!("{i}\t{}\n", z.display(tri)));
        }
        out
    }
}

pub fn zigzag_system(tri: &Triangulation) -> ZigzagSystem {
    ZigzagSystem::new(tri)
}

impl fmt::Display for Zigzag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}
