//! Connected sums and subdivisions with their inherited orientations.

use zchain_core::coloring::{bipartite_without, color_factor, three_color};
use zchain_core::lab::{catalog_tau, lifted_orientation, summed_orientation, Instance, TauName};
use zchain_core::markov::{build_chain, is_ergodic, period};
use zchain_core::surface::{octahedron, torus_grid, Triangulation, VertexMap};
use zchain_core::zigzag::{
    classify, lift_subdivision, orientation_from_edge_directions, original_edges, ZOrientation, ZigzagError,
    ZigzagSystem,
};

fn tau2(tri: &Triangulation) -> ZOrientation {
    let sys = ZigzagSystem::new(tri);
    catalog_tau(tri, &sys, Instance::detect(tri).unwrap(), TauName::Tau2).unwrap()
}

fn grid_face() -> [&'static str; 3] {
    ["0,0", "1,0", "0,1"]
}

fn grid_map() -> VertexMap {
    VertexMap::parse("0,0:0,0;1,0:1,0;0,1:0,1").unwrap()
}

#[test]
fn sum_of_two_period_three_tori_stays_colourable() {
    let t = torus_grid(3, 3).unwrap();
    let tau = tau2(&t);
    let s = summed_orientation(&t, &tau, grid_face(), &t, &tau, grid_face(), &grid_map()).unwrap();
    assert_eq!(s.tri.euler_characteristic(), -2);
    let (edges, faces) = classify(&s.tri, &s.system, &s.zor).unwrap();
    assert!(faces.all_type_ii());
    assert!(three_color(&s.tri).is_some());
    let chain = build_chain(&s.tri, &edges);
    assert_eq!(period(&chain), Ok(3));
    assert!(!is_ergodic(&chain));
}

#[test]
fn sum_with_a_non_colourable_torus_is_ergodic() {
    let a = torus_grid(4, 3).unwrap();
    let b = torus_grid(3, 3).unwrap();
    let s = summed_orientation(&a, &tau2(&a), grid_face(), &b, &tau2(&b), grid_face(), &grid_map()).unwrap();
    let (edges, faces) = classify(&s.tri, &s.system, &s.zor).unwrap();
    assert!(faces.all_type_ii());
    assert!(three_color(&s.tri).is_none());
    assert!(is_ergodic(&build_chain(&s.tri, &edges)));
}

#[test]
fn sum_with_a_mismatched_map_reverses_the_right_summand() {
    // a2 -> a1 on the right face runs against a1 -> a2 on the left
    let o = octahedron();
    let tau = tau2(&o);
    let map = VertexMap::new([("a1", "a2"), ("a2", "a1"), ("a3", "a3")]);
    let s = summed_orientation(&o, &tau, ["a1", "a2", "a3"], &o, &tau, ["a1", "a2", "a3"], &map).unwrap();
    let (_, faces) = classify(&s.tri, &s.system, &s.zor).unwrap();
    assert!(faces.all_type_ii());
    assert_eq!(s.tri.euler_characteristic(), 2);
}

#[test]
fn summands_must_be_all_type_ii() {
    let o = octahedron();
    let sys = ZigzagSystem::new(&o);
    let tau1 = catalog_tau(&o, &sys, Instance::Octahedron, TauName::Tau1).unwrap();
    let map = VertexMap::new([("a1", "a1"), ("a2", "a2"), ("a3", "a3")]);
    let err = summed_orientation(&o, &tau1, ["a1", "a2", "a3"], &o, &tau2(&o), ["a1", "a2", "a3"], &map).unwrap_err();
    assert_eq!(err.code(), "NotAllTypeII");
}

fn check_lift(base: &Triangulation) {
    let lifted = lifted_orientation(base, &tau2(base)).unwrap();
    let (edges, faces) = classify(&lifted.tri, &lifted.system, &lifted.zor).unwrap();
    assert!(faces.all_type_i());
    let mut got = edges.type_ii_arcs();
    got.sort();
    let mut want = lifted.arcs.clone();
    want.sort();
    assert_eq!(got, want);
    assert_eq!(got.len(), base.edge_count());
    assert_eq!(original_edges(&lifted.tri).len(), base.edge_count());
    assert!(is_ergodic(&build_chain(&lifted.tri, &edges)));
}

#[test]
fn lift_of_the_octahedron_is_all_type_i() {
    check_lift(&octahedron());
}

#[test]
fn lift_of_a_torus_is_all_type_i() {
    check_lift(&torus_grid(3, 3).unwrap());
    check_lift(&torus_grid(4, 3).unwrap());
}

#[test]
fn lift_rejects_incomplete_directions() {
    let o = octahedron();
    let lifted = lifted_orientation(&o, &tau2(&o)).unwrap();
    let partial = &lifted.arcs[1..];
    let err = lift_subdivision(&lifted.tri, &lifted.system, partial).unwrap_err();
    assert!(matches!(err, ZigzagError::MissingDirection(_)));
}

#[test]
fn edge_directions_must_make_faces_directed_cycles() {
    let o = octahedron();
    let sys = ZigzagSystem::new(&o);
    let (edges, _) = classify(&o, &sys, &tau2(&o)).unwrap();
    let arcs = edges.type_ii_arcs();
    assert_eq!(orientation_from_edge_directions(&o, &sys, &arcs).unwrap(), tau2(&o));

    let mut flipped = arcs.clone();
    flipped[0] = (arcs[0].1, arcs[0].0);
    let err = orientation_from_edge_directions(&o, &sys, &flipped).unwrap_err();
    assert!(matches!(err, ZigzagError::InconsistentDirections(_)));

    let err = orientation_from_edge_directions(&o, &sys, &arcs[1..]).unwrap_err();
    assert!(matches!(err, ZigzagError::MissingDirection(_)));
}

#[test]
fn colour_factor_leaves_a_bipartite_remainder() {
    for tri in [octahedron(), torus_grid(3, 3).unwrap(), torus_grid(6, 3).unwrap()] {
        let f = color_factor(&tri).expect("colourable");
        f.validate(&tri).unwrap();
        assert!(bipartite_without(&tri, &f).unwrap());
    }
    assert!(color_factor(&torus_grid(4, 3).unwrap()).is_none());
}
