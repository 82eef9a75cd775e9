//! Combinatorial triangulations of closed surfaces.
//!
//! A [`Triangulation`] is stored as a sorted label table plus a sorted list of
//! vertex triples. Everything else (edges, edge/face incidence, vertex stars)
//! is derived on construction, after the closed-surface conditions have been
//! checked:
//!
//! - every face has three distinct vertices and no triple repeats,
//! - every edge lies in exactly two faces,
//! - the link of every vertex is a single cycle,
//! - the face-adjacency graph is connected.
//!
//! Faces carry no cyclic orientation, so the same model covers orientable and
//! non-orientable surfaces.

mod construct;
mod generators;
mod io;

pub use construct::{center_label, connected_sum, subdivide, VertexMap};
pub use generators::{grid_label, octahedron, torus_grid};
pub use io::{load, save};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(String),
    #[error("face {face} references undeclared vertex {vertex}")]
    UnknownVertex { face: String, vertex: String },
    #[error("face {0} repeats a vertex")]
    DegenerateFace(String),
    #[error("face {0} appears more than once")]
    DuplicateFace(String),
    #[error("edge {edge} lies in {count} faces, expected 2")]
    EdgeNotInTwoFaces { edge: String, count: usize },
    #[error("link of vertex {0} is not a single cycle")]
    BrokenVertexLink(String),
    #[error("face adjacency graph is disconnected: face {0} unreachable")]
    Disconnected(String),
    #[error("triangulation has no faces")]
    Empty,
    #[error("torus grid needs k >= 3 and m >= 3, got {k}x{m}")]
    GridTooSmall { k: usize, m: usize },
    #[error("face {0} not found")]
    FaceNotFound(String),
    #[error("invalid vertex map: {0}")]
    InvalidMap(String),
    #[error("construction produced an invalid triangulation: {0}")]
    ResultNotSimple(Box<SurfaceError>),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl SurfaceError {
    /// Stable machine-readable code used in JSON error reports.
    pub fn code(&self) -> &'static str {
        match self {
            SurfaceError::InvalidLabel(_) => "InvalidLabel",
            SurfaceError::DuplicateVertex(_) => "DuplicateVertex",
            SurfaceError::UnknownVertex { .. } => "UnknownVertex",
            SurfaceError::DegenerateFace(_) => "DegenerateFace",
            SurfaceError::DuplicateFace(_) => "DuplicateFace",
            SurfaceError::EdgeNotInTwoFaces { .. } => "EdgeNotInTwoFaces",
            SurfaceError::BrokenVertexLink(_) => "BrokenVertexLink",
            SurfaceError::Disconnected(_) => "Disconnected",
            SurfaceError::Empty => "Empty",
            SurfaceError::GridTooSmall { .. } => "GridTooSmall",
            SurfaceError::FaceNotFound(_) => "FaceNotFound",
            SurfaceError::InvalidMap(_) => "InvalidMap",
            SurfaceError::ResultNotSimple(_) => "ResultNotSimple",
            SurfaceError::Parse { .. } => "ParseError",
        }
    }
}

fn valid_label(label: &str) -> bool {
    !label.is_empty() && !label.starts_with('#') && !label.chars().any(char::is_whitespace)
}

/// A simple triangulation of a connected closed surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    labels: Vec<String>,
    faces: Vec<[VertexId; 3]>,
    edges: Vec<[VertexId; 2]>,
    edge_index: HashMap<[VertexId; 2], EdgeId>,
    edge_faces: Vec<[FaceId; 2]>,
    vertex_edges: Vec<Vec<EdgeId>>,
}

impl Triangulation {
    /// Builds and validates a triangulation from declared vertices and faces.
    ///
    /// Vertex ids are assigned in lexicographic label order, faces are stored
    /// with sorted vertices and sorted among themselves.
    pub fn new<V, F, S, T>(vertices: V, faces: F) -> Result<Self, SurfaceError>
    where
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
        F: IntoIterator<Item = [T; 3]>,
        T: AsRef<str>,
    {
        let mut labels: Vec<String> = Vec::new();
        for v in vertices {
            let v = v.as_ref();
            if !valid_label(v) {
                return Err(SurfaceError::InvalidLabel(v.to_string()));
            }
            labels.push(v.to_string());
        }
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(SurfaceError::DuplicateVertex(w[0].clone()));
        }

        let mut face_ids = Vec::new();
        for face in faces {
            let names = face.each_ref().map(|s| s.as_ref().to_string());
            let shown = format!("{{{}}}", names.join(","));
            let mut ids = [0; 3];
            for (slot, name) in ids.iter_mut().zip(&names) {
                *slot = labels.binary_search(name).map_err(|_| SurfaceError::UnknownVertex {
                    face: shown.clone(),
                    vertex: name.clone(),
                })?;
            }
            ids.sort_unstable();
            if ids[0] == ids[1] || ids[1] == ids[2] {
                return Err(SurfaceError::DegenerateFace(shown));
            }
            face_ids.push(ids);
        }
        Self::from_ids(labels, face_ids)
    }

    /// Builds a triangulation whose vertex set is exactly the vertices used by `faces`.
    pub fn from_faces<F, T>(faces: F) -> Result<Self, SurfaceError>
    where
        F: IntoIterator<Item = [T; 3]>,
        T: AsRef<str>,
    {
        let faces: Vec<[String; 3]> = faces
            .into_iter()
            .map(|f| f.each_ref().map(|s| s.as_ref().to_string()))
            .collect();
        let mut labels: Vec<String> = faces.iter().flatten().cloned().collect();
        labels.sort();
        labels.dedup();
        Self::new(labels, faces)
    }

    fn from_ids(labels: Vec<String>, mut faces: Vec<[VertexId; 3]>) -> Result<Self, SurfaceError> {
        if faces.is_empty() {
            return Err(SurfaceError::Empty);
        }
        faces.sort_unstable();
        let show_face = |f: &[VertexId; 3]| format!("{{{},{},{}}}", labels[f[0]], labels[f[1]], labels[f[2]]);
        if let Some(w) = faces.windows(2).find(|w| w[0] == w[1]) {
            return Err(SurfaceError::DuplicateFace(show_face(&w[0])));
        }

        let mut incidence: HashMap<[VertexId; 2], Vec<FaceId>> = HashMap::new();
        for (fid, f) in faces.iter().enumerate() {
            for [a, b] in [[f[0], f[1]], [f[0], f[2]], [f[1], f[2]]] {
                incidence.entry([a, b]).or_default().push(fid);
            }
        }
        let mut edges: Vec<[VertexId; 2]> = incidence.keys().copied().collect();
        edges.sort_unstable();
        for e in &edges {
            let count = incidence[e].len();
            if count != 2 {
                return Err(SurfaceError::EdgeNotInTwoFaces {
                    edge: format!("{{{},{}}}", labels[e[0]], labels[e[1]]),
                    count,
                });
            }
        }
        let edge_index: HashMap<[VertexId; 2], EdgeId> = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let edge_faces: Vec<[FaceId; 2]> = edges
            .iter()
            .map(|e| {
                let fs = &incidence[e];
                [fs[0], fs[1]]
            })
            .collect();
        let mut vertex_edges = vec![Vec::new(); labels.len()];
        for (eid, e) in edges.iter().enumerate() {
            vertex_edges[e[0]].push(eid);
            vertex_edges[e[1]].push(eid);
        }

        let tri = Triangulation {
            labels,
            faces,
            edges,
            edge_index,
            edge_faces,
            vertex_edges,
        };
        tri.check_links()?;
        tri.check_connected()?;
        Ok(tri)
    }

    // Every link vertex already has degree 2 (each edge is in two faces), so
    // the link is a single cycle iff it is connected.
    fn check_links(&self) -> Result<(), SurfaceError> {
        let mut star: Vec<Vec<[VertexId; 2]>> = vec![Vec::new(); self.labels.len()];
        for f in &self.faces {
            star[f[0]].push([f[1], f[2]]);
            star[f[1]].push([f[0], f[2]]);
            star[f[2]].push([f[0], f[1]]);
        }
        for (v, link) in star.iter().enumerate() {
            if link.is_empty() {
                return Err(SurfaceError::BrokenVertexLink(self.labels[v].clone()));
            }
            let mut adj: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
            for &[a, b] in link {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
            let start = link[0][0];
            let mut seen = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &adj[&x] {
                    if !seen.contains(&y) {
                        seen.push(y);
                        stack.push(y);
                    }
                }
            }
            if seen.len() != adj.len() {
                return Err(SurfaceError::BrokenVertexLink(self.labels[v].clone()));
            }
        }
        Ok(())
    }

    fn check_connected(&self) -> Result<(), SurfaceError> {
        let mut seen = vec![false; self.faces.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(f) = queue.pop_front() {
            for g in self.adjacent_faces(f) {
                if !seen[g] {
                    seen[g] = true;
                    queue.push_back(g);
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(f) => Err(SurfaceError::Disconnected(self.face_name(f))),
            None => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Vertex labels in id order (lexicographic).
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn vertex_id(&self, label: &str) -> Option<VertexId> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    /// Faces as sorted vertex triples, in lexicographic order.
    pub fn faces(&self) -> &[[VertexId; 3]] {
        &self.faces
    }

    /// Edges as sorted vertex pairs, in lexicographic order.
    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.edges
    }

    pub fn edge_id(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let key = if a < b { [a, b] } else { [b, a] };
        self.edge_index.get(&key).copied()
    }

    pub fn edge_faces(&self, e: EdgeId) -> [FaceId; 2] {
        self.edge_faces[e]
    }

    pub fn vertex_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.vertex_edges[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertex_edges[v].len()
    }

    /// Neighbours of `v` in increasing id order.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.vertex_edges[v]
            .iter()
            .map(|&e| other_end(self.edges[e], v))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn are_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_id(a, b).is_some()
    }

    pub fn face_id(&self, vertices: [VertexId; 3]) -> Option<FaceId> {
        let mut key = vertices;
        key.sort_unstable();
        self.faces.binary_search(&key).ok()
    }

    /// Looks a face up by its three vertex labels, in any order.
    pub fn face_by_labels<S: AsRef<str>>(&self, labels: &[S; 3]) -> Option<FaceId> {
        let mut ids = [0; 3];
        for (slot, l) in ids.iter_mut().zip(labels) {
            *slot = self.vertex_id(l.as_ref())?;
        }
        self.face_id(ids)
    }

    pub fn face_name(&self, f: FaceId) -> String {
        let [a, b, c] = self.faces[f];
        format!("{{{},{},{}}}", self.labels[a], self.labels[b], self.labels[c])
    }

    pub fn edge_name(&self, e: EdgeId) -> String {
        let [a, b] = self.edges[e];
        format!("{{{},{}}}", self.labels[a], self.labels[b])
    }

    /// The vertex of the face on edge `{v, w}` that is not `not`.
    ///
    /// In a simple triangulation the two faces on an edge have distinct apexes,
    /// so excluding one apex picks the other face.
    pub fn opposite_apex(&self, v: VertexId, w: VertexId, not: VertexId) -> Option<VertexId> {
        let e = self.edge_id(v, w)?;
        self.edge_faces[e]
            .iter()
            .map(|&f| third_vertex(self.faces[f], v, w))
            .find(|&u| u != not)
    }

    /// Faces sharing an edge with `f`.
    pub fn adjacent_faces(&self, f: FaceId) -> impl Iterator<Item = FaceId> + '_ {
        let [a, b, c] = self.faces[f];
        [[a, b], [a, c], [b, c]].into_iter().map(move |[x, y]| {
            let e = self.edge_index[&[x, y]];
            let [f0, f1] = self.edge_faces[e];
            if f0 == f {
                f1
            } else {
                f0
            }
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Whether the faces admit a coherent orientation.
    ///
    /// Each face gets one of its two cyclic orders; neighbours across an edge
    /// must traverse that edge in opposite directions.
    pub fn is_orientable(&self) -> bool {
        let directed = |f: &[VertexId; 3], flip: bool| -> [[VertexId; 2]; 3] {
            let [x, y, z] = *f;
            if flip {
                [[y, x], [z, y], [x, z]]
            } else {
                [[x, y], [y, z], [z, x]]
            }
        };
        let mut flip: Vec<Option<bool>> = vec![None; self.faces.len()];
        flip[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(f) = queue.pop_front() {
            let ff = flip[f].unwrap();
            for [u, v] in directed(&self.faces[f], ff) {
                let e = self.edge_index[&if u < v { [u, v] } else { [v, u] }];
                let [f0, f1] = self.edge_faces[e];
                let g = if f0 == f { f1 } else { f0 };
                // g must contain v -> u
                let want = !directed(&self.faces[g], false).contains(&[v, u]);
                match flip[g] {
                    None => {
                        flip[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(have) if have != want => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }

    pub fn report(&self) -> SurfaceReport {
        SurfaceReport {
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            face_count: self.face_count(),
            euler_characteristic: self.euler_characteristic(),
            orientable: self.is_orientable(),
        }
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triangulation (V={}, E={}, F={})",
            self.vertex_count(),
            self.edge_count(),
            self.face_count()
        )
    }
}

/// Counts and topological invariants of a triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
}

pub fn surface_report(tri: &Triangulation) -> SurfaceReport {
    tri.report()
}

pub(crate) fn other_end(edge: [VertexId; 2], v: VertexId) -> VertexId {
    if edge[0] == v {
        edge[1]
    } else {
        edge[0]
    }
}

pub(crate) fn third_vertex(face: [VertexId; 3], a: VertexId, b: VertexId) -> VertexId {
    face.into_iter()
        .find(|&x| x != a && x != b)
        .expect("face has three distinct vertices")
}
