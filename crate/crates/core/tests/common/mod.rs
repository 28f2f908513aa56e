#![allow(dead_code)]

use mixcage::generators::{
    gen_biaffine, gen_bipartite_circulant, gen_cage_136, gen_circulant, gen_family, gen_lower_bound_witness,
    gen_moore_tree, gen_projective_incidence, FamilyParams, Side,
};
use mixcage::{MixedGraph, VertexLabel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Neighbour lists built straight from the edge and arc lists, tagged with a
/// per-element id so a cycle can be checked not to reuse one.
fn steps(graph: &MixedGraph) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new(); graph.order()];
    for (id, &(u, v)) in graph.edges().iter().enumerate() {
        out[u].push((v, id));
        out[v].push((u, id));
    }
    let offset = graph.edges().len();
    for (id, &(u, v)) in graph.arcs().iter().enumerate() {
        out[u].push((v, offset + id));
    }
    out
}

fn search(
    out: &[Vec<(usize, usize)>],
    start: usize,
    current: usize,
    depth: usize,
    limit: usize,
    on_path: &mut [bool],
    used: &mut Vec<usize>,
) -> bool {
    for &(to, id) in &out[current] {
        if used.contains(&id) {
            continue;
        }
        if to == start {
            if depth >= 2 {
                return true;
            }
            continue;
        }
        if to < start || on_path[to] || depth == limit {
            continue;
        }
        on_path[to] = true;
        used.push(id);
        let found = search(out, start, to, depth + 1, limit, on_path, used);
        used.pop();
        on_path[to] = false;
        if found {
            return true;
        }
    }
    false
}

/// Length of a shortest simple mixed cycle by iterative deepening over
/// simple paths rooted at their smallest vertex.
pub fn brute_force_girth(graph: &MixedGraph) -> Option<usize> {
    let out = steps(graph);
    let n = graph.order();
    let mut on_path = vec![false; n];
    for limit in 2..=n {
        for start in 0..n {
            on_path[start] = true;
            let found = search(&out, start, start, 1, limit, &mut on_path, &mut Vec::new());
            on_path[start] = false;
            if found {
                return Some(limit);
            }
        }
    }
    None
}

/// Random simple mixed graph on at most `max_n` vertices. Each pair gets an
/// edge, an arc either way, a digon, or nothing.
pub fn random_mixed_graph(seed: u64, max_n: usize) -> MixedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(max_n / 3..=max_n);
    let density = rng.gen_range(1.5..4.0) / n as f64;
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    let v = VertexLabel::Plain;
    for i in 0..n {
        for j in i + 1..n {
            if !rng.gen_bool(density) {
                continue;
            }
            match rng.gen_range(0..100) {
                0..=39 => edges.push((v(i), v(j))),
                40..=69 => arcs.push((v(i), v(j))),
                70..=98 => arcs.push((v(j), v(i))),
                _ => {
                    arcs.push((v(i), v(j)));
                    arcs.push((v(j), v(i)));
                }
            }
        }
    }
    MixedGraph::build((0..n).map(v), edges, arcs).expect("random graph is simple")
}

/// Every generator output with at most `max_order` vertices, named.
pub fn generated_graphs(max_order: usize) -> Vec<(String, MixedGraph)> {
    let mut all: Vec<(String, MixedGraph)> = Vec::new();
    for q in [2u32, 3, 4, 5, 7] {
        all.push((format!("pg({q})"), gen_projective_incidence(q).unwrap()));
        all.push((format!("biaffine({q})"), gen_biaffine(q).unwrap()));
    }
    for q in [3u32, 5, 7] {
        all.push((format!("family({q})"), gen_family(q).unwrap()));
    }
    for q in [3u32, 5, 7, 11, 13] {
        let (to_copy, to_orig) = FamilyParams::new(q).unwrap().default_jumps();
        for side in [Side::Line, Side::Point] {
            all.push((format!("bicirculant({q},{side})"), gen_bipartite_circulant(q, side, 1, &to_copy, &to_orig).unwrap()));
        }
    }
    for (q, jumps) in [(6usize, vec![1usize]), (7, vec![1, 2]), (11, vec![1, 2]), (13, vec![2, 5]), (9, vec![3])] {
        all.push((format!("circulant({q},{jumps:?})"), gen_circulant(q, &jumps).unwrap()));
    }
    all.push(("cage136".into(), gen_cage_136().unwrap()));
    for (r, g) in [(3usize, 5usize), (3, 6), (5, 6), (4, 4), (2, 8)] {
        all.push((format!("moore_tree({r},{g})"), gen_moore_tree(r, g).unwrap()));
    }
    for (z, r, g) in [(1usize, 3usize, 5usize), (2, 3, 6), (2, 5, 6), (3, 4, 5)] {
        all.push((format!("witness({z},{r},{g})"), gen_lower_bound_witness(z, r, g).unwrap()));
    }
    all.retain(|(_, g)| g.order() <= max_order);
    all
}
