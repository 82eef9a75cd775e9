use super::{SurfaceError, Triangulation};

/// The octahedron: outer triangle a1 a2 a3, inner triangle b1 b2 b3, with
/// ai and bi the only non-adjacent pairs.
pub fn octahedron() -> Triangulation {
    let faces = [
        ["a1", "a2", "a3"],
        ["b1", "b2", "b3"],
        ["a1", "b2", "b3"],
        ["a2", "b1", "b3"],
        ["a3", "b1", "b2"],
        ["a1", "a2", "b3"],
        ["a2", "a3", "b1"],
        ["a3", "a1", "b2"],
    ];
    Triangulation::from_faces(faces).expect("octahedron is a valid triangulation")
}

/// Label of grid vertex `(i, j)`.
pub fn grid_label(i: usize, j: usize) -> String {
    format!("{i},{j}")
}

/// The k x m torus grid with opposite sides identified; every square
/// `(i,j),(i+1,j),(i+1,j+1),(i,j+1)` is split by the diagonal `(i,j+1)-(i+1,j)`.
pub fn torus_grid(k: usize, m: usize) -> Result<Triangulation, SurfaceError> {
    if k < 3 || m < 3 {
        return Err(SurfaceError::GridTooSmall { k, m });
    }
    let v = |i: usize, j: usize| grid_label(i % k, j % m);
    let mut faces = Vec::with_capacity(2 * k * m);
    for i in 0..k {
        for j in 0..m {
            faces.push([v(i, j), v(i + 1, j), v(i, j + 1)]);
            faces.push([v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    Triangulation::from_faces(faces)
}
