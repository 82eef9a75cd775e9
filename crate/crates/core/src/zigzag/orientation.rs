use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{ZigzagError, ZigzagSystem};
use crate::surface::{EdgeId, Triangulation, VertexId};

/// A z-orientation: bit `i` selects the canonical member (false) or the
/// reverse (true) of zigzag pair `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZOrientation {
    bits: Vec<bool>,
}

impl ZOrientation {
    pub fn new(bits: Vec<bool>) -> Self {
        ZOrientation { bits }
    }

    /// All-canonical orientation of a system with `k` pairs.
    pub fn canonical(k: usize) -> Self {
        ZOrientation { bits: vec![false; k] }
    }

    /// The `index`-th orientation in bit-string order (bit 0 is the most
    /// significant), so iterating `0..2^k` visits bit strings in sorted order.
    pub fn from_index(k: usize, index: u64) -> Self {
        ZOrientation {
            bits: (0..k).map(|i| (index >> (k - 1 - i)) & 1 == 1).collect(),
        }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The reversed orientation: every zigzag replaced by its reverse.
    pub fn reverse(&self) -> Self {
        ZOrientation {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i] = !self.bits[i];
    }

    pub fn check(&self, system: &ZigzagSystem) -> Result<(), ZigzagError> {
        if self.len() == system.k() {
            Ok(())
        } else {
            Err(ZigzagError::WrongLength {
                got: self.len(),
                want: system.k(),
            })
        }
    }

    /// The `.zor` file body: `k <count>` then the bit string.
    pub fn to_zor(&self) -> String {
        format!("k {}\n{}\n", self.len(), self)
    }

    pub fn parse_zor(text: &str) -> Result<Self, ZigzagError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| ZigzagError::Parse("empty input".into()))?;
        let k: usize = header
            .strip_prefix('k')
            .map(str::trim)
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| ZigzagError::Parse(format!("bad header {header:?}")))?;
        let bits: ZOrientation = lines.next().unwrap_or("").parse()?;
        if bits.len() != k {
            return Err(ZigzagError::Parse(format!(
                "header says {k} bits, found {}",
                bits.len()
            )));
        }
        if let Some(extra) = lines.next() {
            return Err(ZigzagError::Parse(format!("unexpected line {extra:?}")));
        }
        Ok(bits)
    }
}

impl fmt::Display for ZOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for ZOrientation {
    type Err = ZigzagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ZigzagError::Parse(format!("bit string contains {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ZOrientation::new)
    }
}

/// Per-edge direction table built from a list of arcs; `true` means the edge
/// runs from its smaller vertex id to its larger one.
pub(crate) fn direction_table(
    tri: &Triangulation,
    arcs: &[(VertexId, VertexId)],
) -> Result<HashMap<EdgeId, bool>, ZigzagError> {
    let mut table = HashMap::with_capacity(arcs.len());
    for &(a, b) in arcs {
        let e = tri
            .edge_id(a, b)
            .ok_or_else(|| ZigzagError::UnexpectedDirection(format!("{}->{}", tri.label(a), tri.label(b))))?;
        if table.insert(e, a < b).is_some() {
            return Err(ZigzagError::UnexpectedDirection(format!(
                "{} (directed twice)",
                tri.edge_name(e)
            )));
        }
    }
    Ok(table)
}

/// Selects, in every zigzag pair, the member whose traversals agree with the
/// given edge directions.
///
/// Requires every edge to be directed and every face to be a directed
/// 3-cycle. Agreement is then constant along each zigzag, and the result
/// classifies every edge as type II with exactly these directions.
pub fn orientation_from_edge_directions(
    tri: &Triangulation,
    system: &ZigzagSystem,
    arcs: &[(VertexId, VertexId)],
) -> Result<ZOrientation, ZigzagError> {
    let table = direction_table(tri, arcs)?;
    if let Some(e) = (0..tri.edge_count()).find(|e| !table.contains_key(e)) {
        return Err(ZigzagError::MissingDirection(tri.edge_name(e)));
    }
    for (fid, &[a, b, c]) in tri.faces().iter().enumerate() {
        // with a<b<c the face is a directed cycle iff ab and bc agree and ac opposes them
        let ab = table[&tri.edge_id(a, b).unwrap()];
        let bc = table[&tri.edge_id(b, c).unwrap()];
        let ac = table[&tri.edge_id(a, c).unwrap()];
        if !(ab == bc && ac != ab) {
            return Err(ZigzagError::InconsistentDirections(tri.face_name(fid)));
        }
    }

    let mut bits = Vec::with_capacity(system.k());
    for i in 0..system.k() {
        let trav = system.canonical_traversals(i);
        let agree = trav.iter().filter(|(e, fwd)| table[e] == *fwd).count();
        if agree == trav.len() {
            bits.push(false);
        } else if agree == 0 {
            bits.push(true);
        } else {
            return Err(ZigzagError::NoConsistentChoice(i));
        }
    }
    Ok(ZOrientation::new(bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reverse_is_an_involution() {
        let z: ZOrientation = "0110".parse().unwrap();
        assert_eq!(z.reverse().to_string(), "1001");
        assert_eq!(z.reverse().reverse(), z);
    }

    #[test]
    fn index_order_matches_string_order() {
        let all: Vec<String> = (0..8).map(|i| ZOrientation::from_index(3, i).to_string()).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[1], "001");
    }

    #[test]
    fn zor_format() {
        let z: ZOrientation = "0101".parse().unwrap();
        assert_eq!(z.to_zor(), "k 4\n0101\n");
        assert_eq!(ZOrientation::parse_zor(&z.to_zor()).unwrap(), z);
        assert!(ZOrientation::parse_zor("k 3\n0101\n").is_err());
        assert!(ZOrientation::parse_zor("k 4\n01a1\n").is_err());
        assert!(ZOrientation::parse_zor("x 4\n0101\n").is_err());
        assert!(ZOrientation::parse_zor("").is_err());
    }
}
