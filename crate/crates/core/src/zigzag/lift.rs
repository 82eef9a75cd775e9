use std::collections::HashSet;

use super::orientation::direction_table;
use super::{classify, ZOrientation, ZigzagError, ZigzagSystem};
use crate::surface::{EdgeId, Triangulation, VertexId};

const MAX_FREE_PAIRS: usize = 20;

/// Edges of a subdivided triangulation `T(G)` that come from `G`: both ends
/// have degree other than 3. Centres of subdivided faces have degree exactly
/// 3, original vertices have degree at least 6.
pub fn original_edges(tri: &Triangulation) -> Vec<EdgeId> {
    tri.edges()
        .iter()
        .enumerate()
        .filter(|(_, [a, b])| tri.degree(*a) != 3 && tri.degree(*b) != 3)
        .map(|(e, _)| e)
        .collect()
}

/// Finds the z-orientation of a subdivision `T(G)` under which every face is
/// of type I and the type II edges are exactly the original edges, directed
/// as in `arcs`.
///
/// Zigzags that traverse an original edge are fixed by the direction of that
/// traversal; any zigzag pair touching no original edge is resolved by
/// exhaustive search. The solution must exist and be unique.
pub fn lift_subdivision(
    tri: &Triangulation,
    system: &ZigzagSystem,
    arcs: &[(VertexId, VertexId)],
) -> Result<ZOrientation, ZigzagError> {
    let table = direction_table(tri, arcs)?;
    let originals = original_edges(tri);
    let original_set: HashSet<EdgeId> = originals.iter().copied().collect();
    if let Some(&e) = originals.iter().find(|e| !table.contains_key(e)) {
        return Err(ZigzagError::MissingDirection(tri.edge_name(e)));
    }
    if let Some(&e) = table.keys().find(|e| !original_set.contains(e)) {
        return Err(ZigzagError::UnexpectedDirection(tri.edge_name(e)));
    }

    let mut bits = vec![false; system.k()];
    let mut free = Vec::new();
    for (i, bit) in bits.iter_mut().enumerate() {
        let mut agree = 0;
        let mut disagree = 0;
        for (e, fwd) in system.canonical_traversals(i) {
            if let Some(&dir) = table.get(e) {
                if dir == *fwd {
                    agree += 1;
                } else {
                    disagree += 1;
                }
            }
        }
        match (agree, disagree) {
            (0, 0) => free.push(i),
            (_, 0) => *bit = false,
            (0, _) => *bit = true,
            _ => return Err(ZigzagError::NoSolution),
        }
    }
    if free.len() > MAX_FREE_PAIRS {
        return Err(ZigzagError::SearchTooLarge(free.len()));
    }

    let mut want: Vec<(VertexId, VertexId)> = arcs.to_vec();
    want.sort_unstable();
    let mut solutions = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        let mut candidate = bits.clone();
        for (j, &i) in free.iter().enumerate() {
            candidate[i] = (mask >> j) & 1 == 1;
        }
        let zor = ZOrientation::new(candidate);
        let (edges, faces) = classify(tri, system, &zor)?;
        if !faces.all_type_i() {
            continue;
        }
        let mut got = edges.type_ii_arcs();
        got.sort_unstable();
        if got == want {
            solutions.push(zor);
        }
    }
    match solutions.len() {
        0 => Err(ZigzagError::NoSolution),
        1 => Ok(solutions.pop().unwrap()),
        n => Err(ZigzagError::NotUnique(n)),
    }
}
