use crate::graph::{MixedGraph, VertexLabel};

use super::circulant::gen_circulant;
use super::{GeneratorError, Result};

type Pairs = Vec<(VertexLabel, VertexLabel)>;

/// Undirected Moore tree of the given depth hanging off `root`: the root gets
/// `r` children, every deeper node `r - 1`. Children of path vertex `a` are
/// labelled `t<a>.<c>`, grandchildren `t<a>.<c>.<c2>`, and so on.
fn attach_moore_tree(root: usize, r: usize, depth: usize, vertices: &mut Vec<VertexLabel>, edges: &mut Pairs) {
    let mut frontier: Vec<(VertexLabel, Vec<usize>)> = vec![(VertexLabel::Plain(root), vec![root])];
    for level in 0..depth {
        let branching = if level == 0 { r } else { r - 1 };
        let mut next = Vec::with_capacity(frontier.len() * branching);
        for (parent, path) in &frontier {
            for c in 0..branching {
                let mut child_path = path.clone();
                child_path.push(c);
                let child = VertexLabel::TreeNode(child_path.clone());
                vertices.push(child.clone());
                edges.push((parent.clone(), child.clone()));
                next.push((child, child_path));
            }
        }
        frontier = next;
    }
}

/// Tree part of the mixed tree `T_{r,g}`: returns the non-path nodes and the
/// tree edges. Path vertex `v_{i+1}` is `n<i>`.
fn moore_tree_parts(r: usize, g: usize) -> (Vec<VertexLabel>, Pairs) {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for depth in 1..=(g - 1) / 2 {
        // v_{depth+1} and v_{g-depth}, zero-based
        let (left, right) = (depth, g - 1 - depth);
        attach_moore_tree(left, r, depth, &mut vertices, &mut edges);
        if right != left {
            attach_moore_tree(right, r, depth, &mut vertices, &mut edges);
        }
    }
    (vertices, edges)
}

fn check_tree_params(r: usize, g: usize) -> Result<()> {
    if r < 1 || g < 3 {
        return Err(GeneratorError::InvalidParams(format!("mixed tree needs r >= 1 and g >= 3 (got r={r}, g={g})")));
    }
    Ok(())
}

/// The mixed tree `T_{r,g}`: directed path `n0 -> ... -> n<g-1>` with Moore
/// trees of depth `i` attached at the `(i+1)`-th and `(g-i)`-th path vertices.
/// For odd `g` the two deepest attachments coincide and a single tree is
/// grown at the middle vertex.
pub fn gen_moore_tree(r: usize, g: usize) -> Result<MixedGraph> {
    check_tree_params(r, g)?;
    let (tree_nodes, edges) = moore_tree_parts(r, g);
    let path = (0..g).map(VertexLabel::Plain);
    let arcs = (1..g).map(|i| (VertexLabel::Plain(i - 1), VertexLabel::Plain(i)));
    Ok(MixedGraph::build(path.chain(tree_nodes), edges, arcs)?)
}

/// Circulant `C_{z(g-1)+1}(1..z)` with `T_{r,g}` grown on the consecutive
/// vertices `n0..n<g-1>`. The tree's path arcs are the circulant's jump-1 arcs.
pub fn gen_lower_bound_witness(z: usize, r: usize, g: usize) -> Result<MixedGraph> {
    check_tree_params(r, g)?;
    if z < 1 {
        return Err(GeneratorError::InvalidParams("witness needs z >= 1".into()));
    }
    let q = z * (g - 1) + 1;
    let jumps: Vec<usize> = (1..=z).collect();
    let circulant = gen_circulant(q, &jumps)?;
    let (tree_nodes, edges) = moore_tree_parts(r, g);
    let arcs: Vec<_> = circulant.arc_labels().map(|(u, v)| (u.clone(), v.clone())).collect();
    Ok(MixedGraph::build(circulant.vertices().iter().cloned().chain(tree_nodes), edges, arcs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Degrees;

    #[test]
    fn tree_sizes() {
        assert_eq!(gen_moore_tree(5, 6).unwrap().order(), 66);
        assert_eq!(gen_moore_tree(3, 6).unwrap().order(), 6 + 4 * 3 + 2 * 3 * 2);
        for r in 1..7 {
            assert_eq!(gen_moore_tree(r, 4).unwrap().order(), 4 + 2 * r);
        }
        // odd girth: one depth-1 tree at the middle of a 3-path
        assert_eq!(gen_moore_tree(4, 3).unwrap().order(), 3 + 4);
    }

    #[test]
    fn tree_structure() {
        let t = gen_moore_tree(3, 6).unwrap();
        assert_eq!(t.arcs().len(), 5);
        assert_eq!(t.edges().len(), t.order() - 6);
        let profile = t.degree_profile();
        // inner path vertices carry r edges
        for i in 1..5 {
            let idx = t.index_of(&VertexLabel::Plain(i)).unwrap();
            assert_eq!(profile.get(idx).edges, 3);
        }
        let leaf = t.index_of(&VertexLabel::TreeNode(vec![2, 0, 1])).unwrap();
        assert_eq!(profile.get(leaf), Degrees::new(0, 0, 1));
    }

    #[test]
    fn witness_sizes() {
        let w = gen_lower_bound_witness(2, 5, 6).unwrap();
        // C_11(1,2) plus the 66-node tree, sharing the 6 path vertices
        assert_eq!(w.order(), 11 + 66 - 6);
        assert_eq!(w.arcs().len(), 22);
        assert_eq!(gen_lower_bound_witness(1, 3, 6).unwrap().order(), 30);
    }

    #[test]
    fn invalid_params() {
        assert!(gen_moore_tree(0, 5).is_err());
        assert!(gen_moore_tree(3, 2).is_err());
        assert!(gen_lower_bound_witness(0, 3, 5).is_err());
    }
}
