//! Fixtures shared by the benchmarks.

use zchain_core::lab::{catalog_tau, Instance, TauName};
use zchain_core::surface::{octahedron, torus_grid, Triangulation};
use zchain_core::zigzag::{ZOrientation, ZigzagSystem};

/// Catalogue instances with their zigzag systems and all-type-II orientation.
pub fn fixtures() -> Vec<(String, Triangulation, ZigzagSystem, ZOrientation)> {
    let mut out = Vec::new();
    let mut tris = vec![octahedron()];
    for (k, m) in [(3, 3), (4, 3), (6, 6)] {
        tris.push(torus_grid(k, m).expect("grid of size at least 3"));
    }
    for tri in tris {
        let instance = Instance::detect(&tri).expect("catalogue instance");
        let system = ZigzagSystem::new(&tri);
        let tau = catalog_tau(&tri, &system, instance, TauName::Tau2).expect("tau2 is catalogued");
        out.push((instance.to_string(), tri, system, tau));
    }
    out
}
