//! Exact 3-colouring, the mod-3 potential of a directed Eulerian
//! triangulation, colour factors and the bipartite-remainder test.

use std::collections::VecDeque;

use thiserror::Error;

use crate::surface::{Triangulation, VertexId};
use crate::zigzag::{EdgeClassification, FaceClassification};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("not every face is of type II")]
    NotAllTypeII,
    #[error("invalid colour factor: {0}")]
    InvalidFactor(String),
}

impl ColoringError {
    pub fn code(&self) -> &'static str {
        match self {
            ColoringError::NotAllTypeII => "NotAllTypeII",
            ColoringError::InvalidFactor(_) => "InvalidFactor",
        }
    }
}

/// A colour in `{0, 1, 2}` per vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(colors: Vec<u8>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> u8 {
        self.colors[v]
    }

    pub fn is_proper(&self, tri: &Triangulation) -> bool {
        self.colors.len() == tri.vertex_count()
            && self.colors.iter().all(|&c| c < 3)
            && tri.edges().iter().all(|&[a, b]| self.colors[a] != self.colors[b])
    }

    /// Vertices of colour `c`, in id order.
    pub fn class(&self, c: u8) -> Vec<VertexId> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }
}

/// Exact backtracking 3-colouring.
///
/// Vertices are visited in breadth-first order from the least vertex (ties by
/// id); the first vertex is fixed to colour 0 and its first neighbour to 1,
/// and colours are tried in increasing order, so the result is deterministic.
pub fn three_color(tri: &Triangulation) -> Option<Coloring> {
    let n = tri.vertex_count();
    let order = bfs_order(tri);
    let neighbors: Vec<Vec<VertexId>> = (0..n).map(|v| tri.neighbors(v)).collect();
    let mut colors = vec![u8::MAX; n];

    fn go(pos: usize, order: &[VertexId], neighbors: &[Vec<VertexId>], colors: &mut [u8]) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let choices: &[u8] = match pos {
            0 => &[0],
            1 => &[1],
            _ => &[0, 1, 2],
        };
        for &c in choices {
            if neighbors[v].iter().all(|&w| colors[w] != c) {
                colors[v] = c;
                if go(pos + 1, order, neighbors, colors) {
                    return true;
                }
            }
        }
        colors[v] = u8::MAX;
        false
    }

    go(0, &order, &neighbors, &mut colors).then(|| Coloring::new(colors))
}

fn bfs_order(tri: &Triangulation) -> Vec<VertexId> {
    let n = tri.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    if n == 0 {
        return order;
    }
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in tri.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

/// Propagates `phi(head) = phi(tail) + 1 (mod 3)` along every type II arc from
/// the least vertex (with `phi = 0`). Returns `phi` when it is consistent.
pub fn mod3_potential(
    tri: &Triangulation,
    edges: &EdgeClassification,
    faces: &FaceClassification,
) -> Result<Option<Coloring>, ColoringError> {
    if !faces.all_type_ii() {
        return Err(ColoringError::NotAllTypeII);
    }
    let n = tri.vertex_count();
    // (neighbour, potential step)
    let mut adj: Vec<Vec<(VertexId, u8)>> = vec![Vec::new(); n];
    for (tail, head) in edges.type_ii_arcs() {
        adj[tail].push((head, 1));
        adj[head].push((tail, 2));
    }
    let mut phi = vec![u8::MAX; n];
    phi[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(w, d) in &adj[v] {
            let want = (phi[v] + d) % 3;
            if phi[w] == u8::MAX {
                phi[w] = want;
                queue.push_back(w);
            } else if phi[w] != want {
                return Ok(None);
            }
        }
    }
    Ok(Some(Coloring::new(phi)))
}

/// A vertex set meeting every face in exactly one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorFactor {
    vertices: Vec<VertexId>,
}

impl ColorFactor {
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        ColorFactor { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn validate(&self, tri: &Triangulation) -> Result<(), ColoringError> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= tri.vertex_count()) {
            return Err(ColoringError::InvalidFactor(format!("vertex {v} out of range")));
        }
        for (fid, f) in tri.faces().iter().enumerate() {
            let hits = f.iter().filter(|&&v| self.contains(v)).count();
            if hits != 1 {
                return Err(ColoringError::InvalidFactor(format!(
                    "face {} contains {hits} factor vertices",
                    tri.face_name(fid)
                )));
            }
        }
        Ok(())
    }
}

/// The lexicographically least colour factor, by backtracking over vertices in
/// id order (include before exclude) with per-face pruning.
pub fn color_factor(tri: &Triangulation) -> Option<ColorFactor> {
    let n = tri.vertex_count();
    let mut vertex_faces = vec![Vec::new(); n];
    for (fid, f) in tri.faces().iter().enumerate() {
        for &v in f {
            vertex_faces[v].push(fid);
        }
    }
    // per face: (chosen, still undecided)
    let mut state: Vec<(u8, u8)> = vec![(0, 3); tri.face_count()];
    let mut chosen = Vec::new();

    fn go(v: usize, vf: &[Vec<usize>], state: &mut [(u8, u8)], chosen: &mut Vec<VertexId>) -> bool {
        if v == vf.len() {
            return state.iter().all(|&(c, _)| c == 1);
        }
        for include in [true, false] {
            let ok = vf[v].iter().all(|&f| {
                let (c, open) = state[f];
                let c = c + include as u8;
                c <= 1 && (c == 1 || open > 1)
            });
            if !ok {
                continue;
            }
            for &f in &vf[v] {
                state[f].0 += include as u8;
                state[f].1 -= 1;
            }
            if include {
                chosen.push(v);
            }
            if go(v + 1, vf, state, chosen) {
                return true;
            }
            if include {
                chosen.pop();
            }
            for &f in &vf[v] {
                state[f].0 -= include as u8;
                state[f].1 += 1;
            }
        }
        false
    }

    go(0, &vertex_faces, &mut state, &mut chosen).then(|| ColorFactor::new(chosen))
}

/// Deletes the factor and tests the remaining graph for 2-colourability.
pub fn bipartite_without(tri: &Triangulation, factor: &ColorFactor) -> Result<bool, ColoringError> {
    factor.validate(tri)?;
    let n = tri.vertex_count();
    let mut side = vec![u8::MAX; n];
    for root in 0..n {
        if factor.contains(root) || side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in tri.neighbors(v) {
                if factor.contains(w) {
                    continue;
                }
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
