#![allow(dead_code)]

use nonrainbow::generators::{bipyramid, icosahedron, octahedron, projective_base, stacked, tetrahedron};
use nonrainbow::graph::{build_graph, ClosedWalk, EdgeId, MultiGraph, VertexId};
use nonrainbow::surface::Triangulation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Stacked triangulation on `n` vertices with face choices drawn from `rng`.
pub fn random_stacked(n: usize, rng: &mut ChaCha8Rng) -> Triangulation {
    let choices: Vec<usize> = (4..n).map(|step| rng.gen_range(0..4 + 2 * (step - 4))).collect();
    stacked(n, &choices).unwrap()
}

/// Sphere catalog: tetrahedron, bipyramids, octahedron, icosahedron and
/// `per_n` seeded random stacked triangulations for each `n` in `ns`.
pub fn sphere_catalog(ns: std::ops::RangeInclusive<usize>, per_n: usize, max_bipyramid: usize) -> Vec<(String, Triangulation)> {
    let mut out = vec![
        ("tetrahedron".to_string(), tetrahedron()),
        ("octahedron".to_string(), octahedron()),
        ("icosahedron".to_string(), icosahedron()),
    ];
    for q in 3..=max_bipyramid {
        out.push((format!("bipyramid{q}"), bipyramid(q).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in ns {
        for i in 0..per_n {
            out.push((format!("stacked{n}-{i}"), random_stacked(n, &mut rng)));
        }
    }
    out
}

/// Catalog triangulations with at most `max_n` vertices, plus the projective K6.
pub fn small_catalog(max_n: usize, per_n: usize) -> Vec<(String, Triangulation)> {
    let mut out: Vec<_> = sphere_catalog(5..=max_n, per_n, max_n - 2)
        .into_iter()
        .filter(|(_, t)| t.vertex_count() <= max_n)
        .collect();
    out.push(("projective-k6".to_string(), projective_base()));
    out
}

/// Every labeled simple graph on `n` vertices, one per edge subset of `K_n`.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = MultiGraph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        build_graph(n, &edges).unwrap()
    })
}

pub fn all_connected_graphs(max_n: usize) -> Vec<MultiGraph> {
    (1..=max_n)
        .flat_map(all_labeled_graphs)
        .filter(MultiGraph::is_connected)
        .collect()
}

fn edge_between(g: &MultiGraph, a: VertexId, b: VertexId) -> EdgeId {
    g.incident(a).iter().copied().find(|&e| g.edge(e).joins(a, b)).unwrap()
}

/// Simple cycles of a simple graph, each listed once: it starts at its
/// smallest vertex and its second vertex is smaller than its last.
pub fn simple_cycles(g: &MultiGraph) -> Vec<ClosedWalk> {
    fn extend(g: &MultiGraph, path: &mut Vec<VertexId>, on_path: &mut Vec<bool>, out: &mut Vec<ClosedWalk>) {
        let start = path[0];
        let last = *path.last().unwrap();
        let mut nbrs: Vec<VertexId> = g.neighbors(last).collect();
        nbrs.sort();
        nbrs.dedup();
        for x in nbrs {
            if x == start && path.len() >= 3 && path[1] < last {
                let mut edges: Vec<EdgeId> = path.windows(2).map(|w| edge_between(g, w[0], w[1])).collect();
                edges.push(edge_between(g, last, start));
                out.push(ClosedWalk::from_vertices(g, path, &edges));
            } else if x > start && !on_path[x.index()] {
                on_path[x.index()] = true;
                path.push(x);
                extend(g, path, on_path, out);
                path.pop();
                on_path[x.index()] = false;
            }
        }
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        let mut on_path = vec![false; g.vertex_count()];
        on_path[s.index()] = true;
        extend(g, &mut vec![s], &mut on_path, &mut out);
    }
    out
}
