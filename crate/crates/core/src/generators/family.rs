use crate::field::{is_prime, Field};
use crate::graph::{MixedGraph, VertexLabel};

use super::circulant::{bipartite_circulant_arcs, check_jump_sets, Side};
use super::incidence::affine_part;
use super::{GeneratorError, Result};

/// Parameters of the girth-6 family over `Z_q`: `p = (q-1)/2`, in/out arc
/// degree `z` and edge degree `r = q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub q: u32,
    pub p: u32,
    pub z: u32,
    pub r: u32,
}

impl FamilyParams {
    pub fn new(q: u32) -> Result<Self> {
        if q < 3 || !is_prime(q) {
            return Err(GeneratorError::NotOddPrime(q));
        }
        let p = (q - 1) / 2;
        let z = if p % 2 == 1 { (p + 1) / 2 } else { p / 2 };
        Ok(Self { q, p, z, r: q })
    }

    pub fn p_is_odd(&self) -> bool {
        self.p % 2 == 1
    }

    /// `(to_copy, to_orig)` jump sets: `{0..(p-1)/2}` and `{1..(p+1)/2}` for odd
    /// `p`, `{0..p/2-1}` and `{1..p/2}` for even `p`. Both have `z` elements.
    pub fn default_jumps(&self) -> (Vec<u32>, Vec<u32>) {
        let to_copy = (0..self.z).collect();
        let to_orig = (1..=self.z).collect();
        (to_copy, to_orig)
    }

    pub fn order(&self) -> u64 {
        4 * u64::from(self.q) * u64::from(self.q)
    }
}

/// `G_{p,q}`: two copies of the biaffine graph `B_q` joined by the bipartite
/// circulants on every line class and every point class.
pub fn gen_family(q: u32) -> Result<MixedGraph> {
    let params = FamilyParams::new(q)?;
    let (to_copy, to_orig) = params.default_jumps();
    gen_family_with_jumps(q, &to_copy, &to_orig)
}

/// [`gen_family`] with explicit jump sets.
pub fn gen_family_with_jumps(q: u32, to_copy: &[u32], to_orig: &[u32]) -> Result<MixedGraph> {
    FamilyParams::new(q)?;
    check_jump_sets(q, to_copy, to_orig)?;
    let field = Field::new(q)?;
    let (originals, original_edges) = affine_part(field);
    let copy_of = |label: &VertexLabel| match *label {
        VertexLabel::Point(x, y) => VertexLabel::PointCopy(x, y),
        VertexLabel::Line(m, b) => VertexLabel::LineCopy(m, b),
        _ => unreachable!("affine part only holds points and lines"),
    };
    let copies: Vec<VertexLabel> = originals.iter().map(copy_of).collect();
    let copy_edges: Vec<_> = original_edges.iter().map(|(u, v)| (copy_of(u), copy_of(v))).collect();

    let mut arcs = Vec::new();
    for index in field.elements() {
        arcs.extend(bipartite_circulant_arcs(field, Side::Line, index, to_copy, to_orig));
        arcs.extend(bipartite_circulant_arcs(field, Side::Point, index, to_copy, to_orig));
    }
    Ok(MixedGraph::build(
        originals.into_iter().chain(copies),
        original_edges.into_iter().chain(copy_edges),
        arcs,
    )?)
}

/// One of the many 6-cycles of `gen_family(q)` through the line `[m, b]` and
/// its points with abscissae `x1 != x2`, for a copy-to-original jump `j`
/// (with `j - 1` an original-to-copy jump).
///
/// Returned in traversal order:
/// `(x1, y1) - [m, b] - (x2, y2) -> (x2', y2 + j - 1) - L' - (x1', y1 - j) -> (x1, y1)`
/// where `y_i = m x_i + b` and `L'` is the copy line through the two copy
/// points.
pub fn family_six_cycle(q: u32, m: u32, b: u32, x1: u32, x2: u32, j: u32) -> Result<Vec<VertexLabel>> {
    let params = FamilyParams::new(q)?;
    let field = Field::new(q)?;
    let (to_copy, to_orig) = params.default_jumps();
    if !to_orig.contains(&j) || !to_copy.contains(&(j - 1)) {
        return Err(GeneratorError::InvalidJump { jump: j, reason: format!("not a valid family jump for q = {q}") });
    }
    if x1 == x2 {
        return Err(GeneratorError::InvalidParams("six-cycle needs x1 != x2".into()));
    }
    let (m, b) = (field.element(m)?, field.element(b)?);
    let (x1, x2) = (field.element(x1)?, field.element(x2)?);
    let jump = field.element(j)?;
    let (y1, y2) = (m * x1 + b, m * x2 + b);
    let y1_copy = y1 - jump;
    let y2_copy = y2 + jump - field.one();
    let slope = (y2_copy - y1_copy) * (x2 - x1).inv()?;
    let intercept = y1_copy - slope * x1;
    Ok(vec![
        VertexLabel::Point(x1, y1),
        VertexLabel::Line(m, b),
        VertexLabel::Point(x2, y2),
        VertexLabel::PointCopy(x2, y2_copy),
        VertexLabel::LineCopy(slope, intercept),
        VertexLabel::PointCopy(x1, y1_copy),
    ])
}
