//! The `.tri` text format: one face per line as three whitespace-separated
//! labels; blank lines and lines starting with `#` are ignored.

use super::{SurfaceError, Triangulation};

pub fn load(text: &str) -> Result<Triangulation, SurfaceError> {
    let mut faces = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let face: [&str; 3] = tokens.as_slice().try_into().map_err(|_| SurfaceError::Parse {
            line: n + 1,
            message: format!("expected 3 vertex labels, found {}", tokens.len()),
        })?;
        faces.push(face);
    }
    Triangulation::from_faces(faces)
}

/// Canonical form: sorted vertices within each face, faces in lexicographic order.
pub fn save(tri: &Triangulation) -> String {
    let mut out = String::new();
    for f in tri.faces() {
        let [a, b, c] = f.map(|v| tri.label(v));
        out.push_str(a);
        out.push(' ');
        out.push_str(b);
        out.push(' ');
        out.push_str(c);
        out.push('\n');
    }
    out
}
