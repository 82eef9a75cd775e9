//! The octahedron and torus-grid examples: zigzags, named orientations, face
//! types and ergodicity.

use zchain_core::coloring::{mod3_potential, three_color, ColoringError};
use zchain_core::lab::{catalog_tau, Instance, TauName};
use zchain_core::markov::{build_chain, is_ergodic, is_irreducible, period};
use zchain_core::surface::{octahedron, torus_grid, Triangulation, VertexId};
use zchain_core::zigzag::{classify, EdgeType, FaceType, ZOrientation, ZigzagSystem};

fn ids(tri: &Triangulation, labels: &[&str]) -> Vec<VertexId> {
    labels.iter().map(|l| tri.vertex_id(l).unwrap()).collect()
}

fn named(tri: &Triangulation, sys: &ZigzagSystem, name: &str) -> ZOrientation {
    let instance = Instance::detect(tri).unwrap();
    catalog_tau(tri, sys, instance, name.parse().unwrap()).unwrap()
}

const OCTAHEDRON_ZIGZAGS: [[&str; 6]; 4] = [
    ["a1", "a2", "a3", "b1", "b2", "b3"],
    ["a2", "a3", "a1", "b2", "b3", "b1"],
    ["a3", "a1", "a2", "b3", "b1", "b2"],
    ["a1", "b2", "a3", "b1", "a2", "b3"],
];

#[test]
fn octahedron_zigzags_are_z1_to_z4() {
    let o = octahedron();
    let sys = ZigzagSystem::new(&o);
    assert_eq!(sys.k(), 4);
    let mut hit = [false; 4];
    for z in OCTAHEDRON_ZIGZAGS {
        let (i, _) = sys.find(&ids(&o, &z)).expect("listed zigzag is traced");
        assert!(!hit[i], "two listed zigzags in one pair");
        hit[i] = true;
    }
    assert!(hit.iter().all(|&h| h));
}

#[test]
fn octahedron_face_types() {
    let o = octahedron();
    let sys = ZigzagSystem::new(&o);
    let (_, f1) = classify(&o, &sys, &named(&o, &sys, "tau1")).unwrap();
    assert!(f1.all_type_i());
    let (e2, f2) = classify(&o, &sys, &named(&o, &sys, "tau2")).unwrap();
    assert!(f2.all_type_ii());
    let (_, f3) = classify(&o, &sys, &named(&o, &sys, "tau3")).unwrap();
    assert!(f3.count(FaceType::I) > 0 && f3.count(FaceType::II) > 0);

    // outer triangle runs a1 -> a2 -> a3 -> a1 under tau2
    let arcs = e2.type_ii_arcs();
    for (t, h) in [("a1", "a2"), ("a2", "a3"), ("a3", "a1")] {
        assert!(
            arcs.contains(&(o.vertex_id(t).unwrap(), o.vertex_id(h).unwrap())),
            "{t}->{h}"
        );
    }
}

#[test]
fn tau2_directions_match_the_figure() {
    // arrows of the all-type-II picture
    let o = octahedron();
    let sys = ZigzagSystem::new(&o);
    let (edges, _) = classify(&o, &sys, &named(&o, &sys, "tau2")).unwrap();
    let want = [
        ("a1", "a2"),
        ("a2", "a3"),
        ("a3", "a1"),
        ("b1", "b2"),
        ("b2", "b3"),
        ("b3", "b1"),
        ("a1", "b2"),
        ("b3", "a1"),
        ("b1", "a2"),
        ("a2", "b3"),
        ("a3", "b1"),
        ("b2", "a3"),
    ];
    let mut want: Vec<(VertexId, VertexId)> = want
        .iter()
        .map(|(t, h)| (o.vertex_id(t).unwrap(), o.vertex_id(h).unwrap()))
        .collect();
    want.sort();
    let mut got = edges.type_ii_arcs();
    got.sort();
    assert_eq!(got, want);
}

#[test]
fn tau1_and_tau3_type_ii_edges_match_the_figure() {
    let o = octahedron();
    let sys = ZigzagSystem::new(&o);
    let arcs = |name: &str| {
        let (e, _) = classify(&o, &sys, &named(&o, &sys, name)).unwrap();
        let mut v: Vec<(String, String)> = e
            .type_ii_arcs()
            .iter()
            .map(|&(t, h)| (o.label(t).to_string(), o.label(h).to_string()))
            .collect();
        v.sort();
        v
    };
    let s = |v: &[(&str, &str)]| {
        let mut out: Vec<(String, String)> = v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        out.sort();
        out
    };
    // double arrows in the tau1 picture: a2->a3, b2->b3, b3->a2, a3->b2
    assert_eq!(
        arcs("tau1"),
        s(&[("a2", "a3"), ("b2", "b3"), ("b3", "a2"), ("a3", "b2")])
    );
    // tau3 picture: a2->a3, b2->b3, a1->b2, b3->a1, b1->a2, a3->b1
    assert_eq!(
        arcs("tau3"),
        s(&[
            ("a2", "a3"),
            ("b2", "b3"),
            ("a1", "b2"),
            ("b3", "a1"),
            ("b1", "a2"),
            ("a3", "b1")
        ])
    );
}

#[test]
fn torus_vertical_zigzag_through_the_first_columns() {
    let t = torus_grid(4, 3).unwrap();
    let sys = ZigzagSystem::new(&t);
    let z = ids(&t, &["0,0", "1,0", "0,1", "1,1", "0,2", "1,2"]);
    assert!(sys.find(&z).is_some());
}

#[test]
fn torus_families_cover_every_pair() {
    for (k, m) in [(3, 3), (3, 4), (4, 3), (4, 4)] {
        let t = torus_grid(k, m).unwrap();
        let sys = ZigzagSystem::new(&t);
        let g = num_gcd(k, m);
        // 3 vertical, 4 horizontal for 3x4, and gcd(k, m) skew pairs
        assert_eq!(sys.k(), k + m + g, "{k}x{m}");
        let lengths: Vec<usize> = sys.pairs().iter().map(|(z, _)| z.len()).collect();
        assert!(lengths.iter().filter(|&&l| l == 2 * m).count() >= k);
        assert_eq!(lengths.iter().sum::<usize>(), 6 * k * m);
    }
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn torus_face_types() {
    for (k, m) in [(3, 3), (3, 4), (4, 4), (4, 3), (5, 3)] {
        let t = torus_grid(k, m).unwrap();
        let sys = ZigzagSystem::new(&t);
        let (_, f1) = classify(&t, &sys, &named(&t, &sys, "tau1")).unwrap();
        assert!(f1.all_type_i(), "{k}x{m} tau1");
        let (_, f2) = classify(&t, &sys, &named(&t, &sys, "tau2")).unwrap();
        assert!(f2.all_type_ii(), "{k}x{m} tau2");
    }
}

#[test]
fn ergodicity_table() {
    let o = octahedron();
    let sys = ZigzagSystem::new(&o);
    let chain = |tri: &Triangulation, sys: &ZigzagSystem, z: &ZOrientation| {
        let (e, _) = classify(tri, sys, z).unwrap();
        build_chain(tri, &e)
    };
    assert_eq!(period(&chain(&o, &sys, &named(&o, &sys, "tau1"))), Ok(1));
    assert_eq!(period(&chain(&o, &sys, &named(&o, &sys, "tau2"))), Ok(3));
    assert!(is_ergodic(&chain(&o, &sys, &named(&o, &sys, "tau3"))));

    for (k, m, ergodic_tau2) in [(3, 3, false), (4, 3, true), (3, 4, true), (4, 4, true), (6, 3, false)] {
        let t = torus_grid(k, m).unwrap();
        let s = ZigzagSystem::new(&t);
        let c1 = chain(&t, &s, &named(&t, &s, "tau1"));
        assert!(is_irreducible(&c1));
        assert!(is_ergodic(&c1), "{k}x{m} tau1");
        let c2 = chain(&t, &s, &named(&t, &s, "tau2"));
        assert_eq!(is_ergodic(&c2), ergodic_tau2, "{k}x{m} tau2");
        assert_eq!(period(&c2).unwrap(), if ergodic_tau2 { 1 } else { 3 });
    }
}

#[test]
fn potential_agrees_with_exact_colouring() {
    let o = octahedron();
    let sys = ZigzagSystem::new(&o);
    let (e, f) = classify(&o, &sys, &named(&o, &sys, "tau2")).unwrap();
    let phi = mod3_potential(&o, &e, &f).unwrap().expect("octahedron is 3-colourable");
    assert!(phi.is_proper(&o));
    let (e1, f1) = classify(&o, &sys, &named(&o, &sys, "tau1")).unwrap();
    assert_eq!(mod3_potential(&o, &e1, &f1), Err(ColoringError::NotAllTypeII));

    let t = torus_grid(4, 3).unwrap();
    let s = ZigzagSystem::new(&t);
    let (e, f) = classify(&t, &s, &named(&t, &s, "tau2")).unwrap();
    assert_eq!(mod3_potential(&t, &e, &f), Ok(None));
    assert!(three_color(&t).is_none());
}

#[test]
fn reversal_preserves_types() {
    let o = octahedron();
    let sys = ZigzagSystem::new(&o);
    let tau2 = named(&o, &sys, "tau2");
    let (e, f) = classify(&o, &sys, &tau2.reverse()).unwrap();
    assert!(f.all_type_ii());
    let a1 = o.vertex_id("a1").unwrap();
    let a2 = o.vertex_id("a2").unwrap();
    assert_eq!(e.get(o.edge_id(a1, a2).unwrap()), EdgeType::II { tail: a2, head: a1 });
    assert_eq!(tau2.reverse().reverse(), tau2);
}

#[test]
fn named_orientation_is_rejected_for_other_instances() {
    let t = zchain_core::surface::subdivide(&octahedron()).unwrap();
    assert!(Instance::detect(&t).is_none());
    assert!("tau4".parse::<TauName>().is_err());
}
