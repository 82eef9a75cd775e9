use serde::Serialize;

use super::{ZOrientation, ZigzagError, ZigzagSystem};
use crate::surface::{EdgeId, FaceId, Triangulation, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeType {
    /// Traversed once in each direction.
    I,
    /// Traversed twice in the same direction.
    II { tail: VertexId, head: VertexId },
}

impl EdgeType {
    pub fn is_type_ii(&self) -> bool {
        matches!(self, EdgeType::II { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FaceType {
    I,
    II,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    types: Vec<EdgeType>,
}

impl EdgeClassification {
    pub fn get(&self, e: EdgeId) -> EdgeType {
        self.types[e]
    }

    pub fn types(&self) -> &[EdgeType] {
        &self.types
    }

    /// Directed type II edges, in edge order.
    pub fn type_ii_arcs(&self) -> Vec<(VertexId, VertexId)> {
        self.types
            .iter()
            .filter_map(|t| match *t {
                EdgeType::II { tail, head } => Some((tail, head)),
                EdgeType::I => None,
            })
            .collect()
    }

    pub fn type_i_count(&self) -> usize {
        self.types.iter().filter(|t| !t.is_type_ii()).count()
    }

    /// In- and out-degree of every vertex in the type II sub-digraph.
    pub fn type_ii_degrees(&self, vertex_count: usize) -> Vec<(usize, usize)> {
        let mut deg = vec![(0, 0); vertex_count];
        for (tail, head) in self.type_ii_arcs() {
            deg[tail].1 += 1;
            deg[head].0 += 1;
        }
        deg
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceClassification {
    types: Vec<FaceType>,
}

impl FaceClassification {
    pub fn get(&self, f: FaceId) -> FaceType {
        self.types[f]
    }

    pub fn types(&self) -> &[FaceType] {
        &self.types
    }

    pub fn all_type_ii(&self) -> bool {
        self.types.iter().all(|t| *t == FaceType::II)
    }

    pub fn all_type_i(&self) -> bool {
        self.types.iter().all(|t| *t == FaceType::I)
    }

    pub fn has_type_i(&self) -> bool {
        self.types.contains(&FaceType::I)
    }

    pub fn count(&self, ty: FaceType) -> usize {
        self.types.iter().filter(|t| **t == ty).count()
    }
}

/// Classifies every edge by the directions of its two traversals under `zor`,
/// then every face by the type I / type II dichotomy.
pub fn classify(
    tri: &Triangulation,
    system: &ZigzagSystem,
    zor: &ZOrientation,
) -> Result<(EdgeClassification, FaceClassification), ZigzagError> {
    zor.check(system)?;
    // (forward, backward) traversal counts per edge
    let mut counts = vec![(0u8, 0u8); tri.edge_count()];
    for (i, &rev) in zor.bits().iter().enumerate() {
        for &(e, fwd) in system.canonical_traversals(i) {
            let c = &mut counts[e];
            if fwd != rev {
                c.0 = c.0.saturating_add(1);
            } else {
                c.1 = c.1.saturating_add(1);
            }
        }
    }

    let mut types = Vec::with_capacity(tri.edge_count());
    for (e, &(f, b)) in counts.iter().enumerate() {
        let [lo, hi] = tri.edges()[e];
        types.push(match (f, b) {
            (1, 1) => EdgeType::I,
            (2, 0) => EdgeType::II { tail: lo, head: hi },
            (0, 2) => EdgeType::II { tail: hi, head: lo },
            _ => {
                return Err(ZigzagError::ClassificationContradiction(format!(
                    "edge {} traversed {f} times forward and {b} times backward",
                    tri.edge_name(e)
                )))
            }
        });
    }
    let edges = EdgeClassification { types };

    let mut face_types = Vec::with_capacity(tri.face_count());
    for (fid, &[a, b, c]) in tri.faces().iter().enumerate() {
        let sides = [(a, b), (b, c), (a, c)].map(|(x, y)| edges.get(tri.edge_id(x, y).unwrap()));
        let type_i = sides.iter().filter(|t| !t.is_type_ii()).count();
        let ty = match type_i {
            2 => FaceType::I,
            0 if is_directed_triangle(&sides) => FaceType::II,
            _ => {
                return Err(ZigzagError::ClassificationContradiction(format!(
                    "face {} has {type_i} type I edges",
                    tri.face_name(fid)
                )))
            }
        };
        face_types.push(ty);
    }
    Ok((edges, FaceClassification { types: face_types }))
}

fn is_directed_triangle(sides: &[EdgeType; 3]) -> bool {
    let mut tails = Vec::with_capacity(3);
    for s in sides {
        match *s {
            EdgeType::II { tail, .. } => tails.push(tail),
            EdgeType::I => return false,
        }
    }
    tails.sort_unstable();
    tails.dedup();
    tails.len() == 3
}
