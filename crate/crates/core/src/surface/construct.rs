use std::collections::{BTreeSet, HashMap};

use super::{SurfaceError, Triangulation};

/// A vertex-to-vertex gluing of one face boundary onto another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    pairs: [(String, String); 3],
}

impl VertexMap {
    pub fn new<S: Into<String>>(pairs: [(S, S); 3]) -> Self {
        VertexMap {
            pairs: pairs.map(|(a, b)| (a.into(), b.into())),
        }
    }

    /// Parses `u1:v1,u2:v2,u3:v3`. Pairs may be separated by `;` instead,
    /// which is required when labels contain commas (`0,0:0,0;1,0:1,0;...`).
    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        let sep = if text.contains(';') { ';' } else { ',' };
        let parts: Vec<&str> = text.split(sep).collect();
        if parts.len() != 3 {
            return Err(SurfaceError::InvalidMap(format!("expected three pairs in {text:?}")));
        }
        let mut pairs: Vec<(String, String)> = Vec::with_capacity(3);
        for p in parts {
            let (a, b) = p
                .split_once(':')
                .ok_or_else(|| SurfaceError::InvalidMap(format!("pair {p:?} lacks ':'")))?;
            pairs.push((a.trim().to_string(), b.trim().to_string()));
        }
        let pairs: [(String, String); 3] = pairs.try_into().expect("three pairs");
        Ok(VertexMap { pairs })
    }

    pub fn pairs(&self) -> &[(String, String); 3] {
        &self.pairs
    }

    pub fn get(&self, source: &str) -> Option<&str> {
        self.pairs.iter().find(|(s, _)| s == source).map(|(_, t)| t.as_str())
    }
}

fn face_labels(tri: &Triangulation, face: &[String; 3], which: &str) -> Result<BTreeSet<String>, SurfaceError> {
    tri.face_by_labels(face)
        .ok_or_else(|| SurfaceError::FaceNotFound(format!("{which} {{{}}}", face.join(","))))?;
    Ok(face.iter().cloned().collect())
}

/// Glues `a` and `b` along the boundaries of `face_a` and `face_b` after
/// removing both faces.
///
/// Vertices of `a` are renamed `L.<label>` and vertices of `b` `R.<label>`;
/// each mapped pair is merged into the `L.` vertex.
pub fn connected_sum<S: AsRef<str>>(
    a: &Triangulation,
    face_a: [S; 3],
    b: &Triangulation,
    face_b: [S; 3],
    map: &VertexMap,
) -> Result<Triangulation, SurfaceError> {
    let face_a = face_a.map(|s| s.as_ref().to_string());
    let face_b = face_b.map(|s| s.as_ref().to_string());
    let sources = face_labels(a, &face_a, "left")?;
    let targets = face_labels(b, &face_b, "right")?;

    let map_sources: BTreeSet<String> = map.pairs.iter().map(|(s, _)| s.clone()).collect();
    let map_targets: BTreeSet<String> = map.pairs.iter().map(|(_, t)| t.clone()).collect();
    if map_sources != sources {
        return Err(SurfaceError::InvalidMap(format!(
            "sources {:?} are not the vertices of the left face",
            map.pairs.iter().map(|p| &p.0).collect::<Vec<_>>()
        )));
    }
    if map_targets != targets {
        return Err(SurfaceError::InvalidMap(format!(
            "targets {:?} are not the vertices of the right face",
            map.pairs.iter().map(|p| &p.1).collect::<Vec<_>>()
        )));
    }

    let merged: HashMap<&str, &str> = map.pairs.iter().map(|(s, t)| (t.as_str(), s.as_str())).collect();
    let left = |v: &str| format!("L.{v}");
    let right = |v: &str| match merged.get(v) {
        Some(src) => format!("L.{src}"),
        None => format!("R.{v}"),
    };

    let skip_a = a.face_by_labels(&face_a);
    let skip_b = b.face_by_labels(&face_b);
    let mut faces: Vec<[String; 3]> = Vec::with_capacity(a.face_count() + b.face_count() - 2);
    for (fid, f) in a.faces().iter().enumerate() {
        if Some(fid) != skip_a {
            faces.push(f.map(|v| left(a.label(v))));
        }
    }
    for (fid, f) in b.faces().iter().enumerate() {
        if Some(fid) != skip_b {
            faces.push(f.map(|v| right(b.label(v))));
        }
    }
    Triangulation::from_faces(faces).map_err(|e| SurfaceError::ResultNotSimple(Box::new(e)))
}

/// Label of the vertex added inside the face `{a,b,c}` by [`subdivide`].
pub fn center_label(a: &str, b: &str, c: &str) -> String {
    format!("c[{a}|{b}|{c}]")
}

/// Stars every face: a new vertex per face joined to its three corners.
pub fn subdivide(tri: &Triangulation) -> Result<Triangulation, SurfaceError> {
    let mut faces = Vec::with_capacity(3 * tri.face_count());
    for f in tri.faces() {
        let [u, v, w] = f.map(|x| tri.label(x).to_string());
        let c = center_label(&u, &v, &w);
        faces.push([c.clone(), u.clone(), v.clone()]);
        faces.push([c.clone(), v, w.clone()]);
        faces.push([c, w, u]);
    }
    Triangulation::from_faces(faces).map_err(|e| SurfaceError::ResultNotSimple(Box::new(e)))
}
