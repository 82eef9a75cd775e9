use super::LabError;
use crate::surface::{connected_sum, subdivide, Triangulation, VertexId, VertexMap};
use crate::zigzag::{classify, lift_subdivision, orientation_from_edge_directions, ZOrientation, ZigzagSystem};

/// A connected sum together with the all-type-II orientation it inherits.
#[derive(Debug, Clone)]
pub struct SummedOrientation {
    pub tri: Triangulation,
    pub system: ZigzagSystem,
    pub zor: ZOrientation,
}

fn type_ii_arcs_by_label(
    tri: &Triangulation,
    zor: &ZOrientation,
    what: &str,
) -> Result<Vec<(String, String)>, LabError> {
    let system = ZigzagSystem::new(tri);
    let (edges, faces) = classify(tri, &system, zor)?;
    if !faces.all_type_ii() {
        return Err(LabError::NotAllTypeII(format!("{what} orientation {zor}")));
    }
    Ok(edges
        .type_ii_arcs()
        .into_iter()
        .map(|(t, h)| (tri.label(t).to_string(), tri.label(h).to_string()))
        .collect())
}

fn to_ids(tri: &Triangulation, arcs: &[(String, String)]) -> Result<Vec<(VertexId, VertexId)>, LabError> {
    arcs.iter()
        .map(|(t, h)| match (tri.vertex_id(t), tri.vertex_id(h)) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(LabError::MatchFailure(format!(
                "arc {t}->{h} not in the constructed triangulation"
            ))),
        })
        .collect()
}

/// Glues two all-type-II z-oriented triangulations and orients the sum by
/// the inherited edge directions.
///
/// The second summand's directions are reversed when needed so that both
/// removed faces run the same way around the glued boundary.
pub fn summed_orientation<S: AsRef<str>>(
    a: &Triangulation,
    zor_a: &ZOrientation,
    face_a: [S; 3],
    b: &Triangulation,
    zor_b: &ZOrientation,
    face_b: [S; 3],
    map: &VertexMap,
) -> Result<SummedOrientation, LabError> {
    let face_a = face_a.map(|s| s.as_ref().to_string());
    let face_b = face_b.map(|s| s.as_ref().to_string());
    let tri = connected_sum(a, face_a.clone(), b, face_b.clone(), map)?;

    let arcs_a = type_ii_arcs_by_label(a, zor_a, "left")?;
    let mut arcs_b = type_ii_arcs_by_label(b, zor_b, "right")?;

    // one boundary arc of the left face, carried over by the map
    let (t, h) = arcs_a
        .iter()
        .find(|(t, h)| face_a.contains(t) && face_a.contains(h))
        .expect("faces of an all-type-II orientation are directed cycles");
    let (gt, gh) = (map.get(t).unwrap().to_string(), map.get(h).unwrap().to_string());
    if !arcs_b.contains(&(gt, gh)) {
        for arc in arcs_b.iter_mut() {
            *arc = (arc.1.clone(), arc.0.clone());
        }
    }

    let right = |v: &str| match map.pairs().iter().find(|(_, tgt)| tgt == v) {
        Some((src, _)) => format!("L.{src}"),
        None => format!("R.{v}"),
    };
    let mut arcs: Vec<(String, String)> = arcs_a
        .iter()
        .map(|(t, h)| (format!("L.{t}"), format!("L.{h}")))
        .chain(arcs_b.iter().map(|(t, h)| (right(t), right(h))))
        .collect();
    arcs.sort();
    arcs.dedup();

    let system = ZigzagSystem::new(&tri);
    let ids = to_ids(&tri, &arcs)?;
    let zor = orientation_from_edge_directions(&tri, &system, &ids)?;
    Ok(SummedOrientation { tri, system, zor })
}

/// A subdivision `T(G)` with its all-type-I orientation.
#[derive(Debug, Clone)]
pub struct LiftedOrientation {
    pub tri: Triangulation,
    pub system: ZigzagSystem,
    pub zor: ZOrientation,
    /// Type II arcs of the base orientation, in the subdivision's vertex ids.
    pub arcs: Vec<(VertexId, VertexId)>,
}

/// Subdivides an all-type-II z-oriented triangulation and lifts its
/// orientation to the unique all-type-I orientation of the subdivision.
pub fn lifted_orientation(tri: &Triangulation, zor: &ZOrientation) -> Result<LiftedOrientation, LabError> {
    let arcs = type_ii_arcs_by_label(tri, zor, "base")?;
    let sub = subdivide(tri)?;
    let system = ZigzagSystem::new(&sub);
    let arcs = to_ids(&sub, &arcs)?;
    let zor = lift_subdivision(&sub, &system, &arcs)?;
    Ok(LiftedOrientation {
        tri: sub,
        system,
        zor,
        arcs,
    })
}
