//! Named z-orientations of the worked examples, recovered by matching their
//! closed-form zigzags against the traced zigzag system.

use std::fmt;
use std::str::FromStr;

use num::integer::Integer;

use super::LabError;
use crate::surface::{grid_label, octahedron, torus_grid, SurfaceError, Triangulation, VertexId};
use crate::zigzag::{ZOrientation, ZigzagSystem};

/// A catalogued instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instance {
    Octahedron,
    TorusGrid { k: usize, m: usize },
}

impl Instance {
    pub fn build(&self) -> Result<Triangulation, SurfaceError> {
        match *self {
            Instance::Octahedron => Ok(octahedron()),
            Instance::TorusGrid { k, m } => torus_grid(k, m),
        }
    }

    /// Recognises a triangulation equal to a catalogued instance.
    pub fn detect(tri: &Triangulation) -> Option<Instance> {
        if *tri == octahedron() {
            return Some(Instance::Octahedron);
        }
        let mut k = 0;
        let mut m = 0;
        for label in tri.labels() {
            let (i, j) = label.split_once(',')?;
            k = k.max(i.parse::<usize>().ok()? + 1);
            m = m.max(j.parse::<usize>().ok()? + 1);
        }
        match torus_grid(k, m) {
            Ok(t) if t == *tri => Some(Instance::TorusGrid { k, m }),
            _ => None,
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Octahedron => write!(f, "octahedron"),
            Instance::TorusGrid { k, m } => write!(f, "torus({k},{m})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauName {
    Tau1,
    Tau2,
    Tau3,
}

impl FromStr for TauName {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tau1" => Ok(TauName::Tau1),
            "tau2" => Ok(TauName::Tau2),
            "tau3" => Ok(TauName::Tau3),
            other => Err(LabError::UnknownName(other.to_string())),
        }
    }
}

impl fmt::Display for TauName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TauName::Tau1 => "tau1",
            TauName::Tau2 => "tau2",
            TauName::Tau3 => "tau3",
        };
        f.write_str(s)
    }
}

/// A closed-form zigzag: vertex labels, plus whether the orientation takes its reverse.
type Selection = (Vec<String>, bool);

fn octahedron_selection(name: TauName) -> Vec<Selection> {
    let z = |s: [&str; 6]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let zs = [
        z(["a1", "a2", "a3", "b1", "b2", "b3"]),
        z(["a2", "a3", "a1", "b2", "b3", "b1"]),
        z(["a3", "a1", "a2", "b3", "b1", "b2"]),
        z(["a1", "b2", "a3", "b1", "a2", "b3"]),
    ];
    let reversed: [bool; 4] = match name {
        TauName::Tau1 => [false, false, true, true],
        TauName::Tau2 => [false, false, false, false],
        TauName::Tau3 => [false, false, true, false],
    };
    zs.into_iter().zip(reversed).collect()
}

/// Vertical zigzag through columns `i` and `i+1`.
pub fn vertical_zigzag(k: usize, m: usize, i: usize) -> Vec<String> {
    (0..m)
        .flat_map(|j| [grid_label(i % k, j), grid_label((i + 1) % k, j)])
        .collect()
}

/// Horizontal zigzag through rows `j` and `j+1`.
pub fn horizontal_zigzag(k: usize, m: usize, j: usize) -> Vec<String> {
    (0..k)
        .flat_map(|i| [grid_label(i, j % m), grid_label(i, (j + 1) % m)])
        .collect()
}

/// Skew zigzag `0(s+1), 0s, 1s, 1(s-1), ...` followed until it closes,
/// which takes `2 lcm(k, m)` steps.
pub fn skew_zigzag(k: usize, m: usize, s: usize) -> Vec<String> {
    let len = k.lcm(&m);
    (0..len)
        .flat_map(|t| {
            let i = t % k;
            let hi = (s + 1 + m * len - t) % m;
            let lo = (s + m * len - t) % m;
            [grid_label(i, hi), grid_label(i, lo)]
        })
        .collect()
}

fn torus_selection(k: usize, m: usize, name: TauName) -> Result<Vec<Selection>, LabError> {
    let reverse_horizontal = match name {
        TauName::Tau1 => false,
        TauName::Tau2 => true,
        TauName::Tau3 => {
            return Err(LabError::UnknownName(format!(
                "{name} is only defined for the octahedron"
            )))
        }
    };
    let mut out = Vec::new();
    out.extend((0..k).map(|i| (vertical_zigzag(k, m, i), false)));
    out.extend((0..m).map(|j| (horizontal_zigzag(k, m, j), reverse_horizontal)));
    // the family is indexed 0 <= s <= gcd(k, m); s = gcd repeats s = 0
    out.extend((0..=k.gcd(&m)).map(|s| (skew_zigzag(k, m, s), false)));
    Ok(out)
}

/// Sets one bit per zigzag pair from the named closed-form selection.
///
/// Fails if a closed-form zigzag is not traced, if two selections disagree on
/// a pair, or if some pair is left unset.
pub fn catalog_tau(
    tri: &Triangulation,
    system: &ZigzagSystem,
    instance: Instance,
    name: TauName,
) -> Result<ZOrientation, LabError> {
    let selection = match instance {
        Instance::Octahedron => octahedron_selection(name),
        Instance::TorusGrid { k, m } => torus_selection(k, m, name)?,
    };
    let mut bits: Vec<Option<bool>> = vec![None; system.k()];
    for (labels, want_reverse) in selection {
        let ids: Vec<VertexId> = labels
            .iter()
            .map(|l| tri.vertex_id(l))
            .collect::<Option<_>>()
            .ok_or_else(|| LabError::MatchFailure(format!("{} uses unknown vertices", labels.join(","))))?;
        let (pair, found_reverse) = system
            .find(&ids)
            .ok_or_else(|| LabError::MatchFailure(format!("{} is not a traced zigzag", labels.join(","))))?;
        let bit = found_reverse != want_reverse;
        match bits[pair] {
            Some(b) if b != bit => {
                return Err(LabError::MatchFailure(format!(
                    "pair {pair} selected in both directions"
                )))
            }
            _ => bits[pair] = Some(bit),
        }
    }
    let bits: Vec<bool> = bits
        .iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| LabError::MatchFailure(format!("pair {i} not covered by {name}"))))
        .collect::<Result<_, _>>()?;
    Ok(ZOrientation::new(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zigzag::zigzag_system;

    #[test]
    fn detects_catalogue_instances() {
        assert_eq!(Instance::detect(&octahedron()), Some(Instance::Octahedron));
        let t = torus_grid(4, 3).unwrap();
        assert_eq!(Instance::detect(&t), Some(Instance::TorusGrid { k: 4, m: 3 }));
        let s = crate::surface::subdivide(&octahedron()).unwrap();
        assert_eq!(Instance::detect(&s), None);
    }

    #[test]
    fn torus_pair_count_matches_families() {
        for (k, m) in [(3, 3), (3, 4), (4, 3), (4, 4), (3, 6), (5, 3)] {
            let t = torus_grid(k, m).unwrap();
            let sys = zigzag_system(&t);
            assert_eq!(sys.k(), k + m + k.gcd(&m), "{k}x{m}");
            for name in [TauName::Tau1, TauName::Tau2] {
                catalog_tau(&t, &sys, Instance::TorusGrid { k, m }, name).unwrap();
            }
        }
    }

    #[test]
    fn tau3_only_for_octahedron() {
        let t = torus_grid(3, 3).unwrap();
        let sys = zigzag_system(&t);
        assert!(matches!(
            catalog_tau(&t, &sys, Instance::TorusGrid { k: 3, m: 3 }, TauName::Tau3),
            Err(LabError::UnknownName(_))
        ));
        assert!("tau9".parse::<TauName>().is_err());
    }

    #[test]
    fn wrong_instance_fails_to_match() {
        let t = torus_grid(3, 4).unwrap();
        let sys = zigzag_system(&t);
        assert!(matches!(
            catalog_tau(&t, &sys, Instance::Octahedron, TauName::Tau1),
            Err(LabError::MatchFailure(_))
        ));
    }
}
