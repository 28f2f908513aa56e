use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::field::{is_prime, Field, FieldElement};
use crate::graph::{MixedGraph, VertexLabel};

use super::{GeneratorError, Result};

/// Circulant digraph on `n0, ..., n(q-1)` with an arc `a -> a + i (mod q)` for
/// every jump `i`.
pub fn gen_circulant(q: usize, jumps: &[usize]) -> Result<MixedGraph> {
    if q < 2 {
        return Err(GeneratorError::InvalidParams(format!("circulant order {q} must be >= 2")));
    }
    if jumps.is_empty() {
        return Err(GeneratorError::InvalidParams("circulant needs at least one jump".into()));
    }
    let mut seen = BTreeSet::new();
    for &jump in jumps {
        if jump == 0 || jump >= q {
            return Err(GeneratorError::InvalidJump {
                jump: jump as u32,
                reason: format!("circulant jumps must lie in [1, {}]", q - 1),
            });
        }
        if !seen.insert(jump) {
            return Err(GeneratorError::InvalidJump { jump: jump as u32, reason: "repeated".into() });
        }
    }
    let vertices = (0..q).map(VertexLabel::Plain);
    let arcs = (0..q).flat_map(|a| jumps.iter().map(move |&i| (VertexLabel::Plain(a), VertexLabel::Plain((a + i) % q))));
    Ok(MixedGraph::build(vertices, [], arcs)?)
}

/// Which half of the biaffine graph a bipartite circulant lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Lines `[m, b]` and their copies, for a fixed slope `m`.
    Line,
    /// Points `(x, y)` and their copies, for a fixed abscissa `x`.
    Point,
}

impl Side {
    pub(super) fn original(self, index: FieldElement, coord: FieldElement) -> VertexLabel {
        match self {
            Side::Line => VertexLabel::Line(index, coord),
            Side::Point => VertexLabel::Point(index, coord),
        }
    }

    pub(super) fn copy(self, index: FieldElement, coord: FieldElement) -> VertexLabel {
        match self {
            Side::Line => VertexLabel::LineCopy(index, coord),
            Side::Point => VertexLabel::PointCopy(index, coord),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Line => "line",
            Side::Point => "point",
        })
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "line" => Ok(Side::Line),
            "point" => Ok(Side::Point),
            _ => Err(format!("unknown side {s:?} (expected line or point)")),
        }
    }
}

pub(super) fn check_jump_sets(q: u32, to_copy: &[u32], to_orig: &[u32]) -> Result<()> {
    for (set, lo, name) in [(to_copy, 0, "original-to-copy"), (to_orig, 1, "copy-to-original")] {
        if set.is_empty() {
            return Err(GeneratorError::InvalidParams(format!("{name} jump set is empty")));
        }
        let mut seen = BTreeSet::new();
        for &jump in set {
            if jump < lo || jump >= q {
                return Err(GeneratorError::InvalidJump {
                    jump,
                    reason: format!("{name} jumps must lie in [{lo}, {}]", q - 1),
                });
            }
            if !seen.insert(jump) {
                return Err(GeneratorError::InvalidJump { jump, reason: format!("repeated in {name} set") });
            }
        }
    }
    Ok(())
}

/// Arcs of the bipartite circulant on one line class (or point class):
/// `v(b) -> v'(b + j)` for `j` in `to_copy` and `v'(b) -> v(b + j)` for `j` in
/// `to_orig`.
pub(super) fn bipartite_circulant_arcs(
    field: Field,
    side: Side,
    index: FieldElement,
    to_copy: &[u32],
    to_orig: &[u32],
) -> Vec<(VertexLabel, VertexLabel)> {
    let mut arcs = Vec::with_capacity(field.order() as usize * (to_copy.len() + to_orig.len()));
    for b in field.elements() {
        for &j in to_copy {
            let j = field.element(j).expect("validated jump");
            arcs.push((side.original(index, b), side.copy(index, b + j)));
        }
        for &j in to_orig {
            let j = field.element(j).expect("validated jump");
            arcs.push((side.copy(index, b), side.original(index, b + j)));
        }
    }
    arcs
}

/// The digraph `C_m` (line side) or `C_x` (point side) on `2q` vertices.
pub fn gen_bipartite_circulant(q: u32, side: Side, index: u32, to_copy: &[u32], to_orig: &[u32]) -> Result<MixedGraph> {
    if q < 3 || !is_prime(q) {
        return Err(GeneratorError::NotOddPrime(q));
    }
    let field = Field::new(q)?;
    let index = field.element(index)?;
    check_jump_sets(q, to_copy, to_orig)?;
    let vertices = field.elements().flat_map(|b| [side.original(index, b), side.copy(index, b)]);
    let arcs = bipartite_circulant_arcs(field, side, index, to_copy, to_orig);
    Ok(MixedGraph::build(vertices, [], arcs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::FamilyParams;
    use crate::graph::Degrees;

    #[test]
    fn circulant_degrees() {
        let g = gen_circulant(11, &[1, 2]).unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(g.degree_profile().uniform(), Some(Degrees::new(2, 2, 0)));
        let c6 = gen_circulant(6, &[1]).unwrap();
        assert_eq!(c6.arcs().len(), 6);
        let k5 = gen_circulant(5, &[1, 2, 3, 4]).unwrap();
        assert_eq!(k5.arcs().len(), 20);
        assert!(k5.has_antiparallel_arcs());
    }

    #[test]
    fn circulant_rejects_bad_jumps() {
        assert!(matches!(gen_circulant(5, &[0]), Err(GeneratorError::InvalidJump { jump: 0, .. })));
        assert!(matches!(gen_circulant(5, &[5]), Err(GeneratorError::InvalidJump { jump: 5, .. })));
        assert!(gen_circulant(5, &[1, 1]).is_err());
        assert!(gen_circulant(5, &[]).is_err());
        assert!(gen_circulant(1, &[1]).is_err());
    }

    #[test]
    fn default_bipartite_circulant_is_z_regular() {
        for q in [3u32, 5, 7, 11, 13] {
            let params = FamilyParams::new(q).unwrap();
            let (to_copy, to_orig) = params.default_jumps();
            for side in [Side::Line, Side::Point] {
                let g = gen_bipartite_circulant(q, side, 1, &to_copy, &to_orig).unwrap();
                assert_eq!(g.order() as u32, 2 * q);
                assert_eq!(g.degree_profile().uniform(), Some(Degrees::new(params.z as usize, params.z as usize, 0)));
                assert!(!g.has_antiparallel_arcs());
                // every arc joins an original to a copy
                for (u, v) in g.arc_labels() {
                    let is_copy = |l: &VertexLabel| matches!(l, VertexLabel::LineCopy(..) | VertexLabel::PointCopy(..));
                    assert_ne!(is_copy(u), is_copy(v));
                }
            }
        }
    }

    #[test]
    fn q3_default_is_directed_six_cycle() {
        let g = gen_bipartite_circulant(3, Side::Line, 0, &[0], &[1]).unwrap();
        assert_eq!(g.arcs().len(), 6);
        assert_eq!(g.degree_profile().uniform(), Some(Degrees::new(1, 1, 0)));
    }

    #[test]
    fn bipartite_circulant_rejects_bad_input() {
        assert!(matches!(gen_bipartite_circulant(9, Side::Line, 0, &[0], &[1]), Err(GeneratorError::NotOddPrime(9))));
        assert!(matches!(gen_bipartite_circulant(2, Side::Line, 0, &[0], &[1]), Err(GeneratorError::NotOddPrime(2))));
        assert!(gen_bipartite_circulant(5, Side::Line, 0, &[0], &[0]).is_err());
        assert!(gen_bipartite_circulant(5, Side::Line, 0, &[5], &[1]).is_err());
        assert!(gen_bipartite_circulant(5, Side::Line, 0, &[], &[1]).is_err());
        assert!(gen_bipartite_circulant(5, Side::Point, 7, &[0], &[1]).is_err());
    }
}
