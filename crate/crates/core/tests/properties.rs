mod common;

use std::collections::BTreeSet;

use nonrainbow::coloring::{bichromatic_face_count, is_non_rainbow, quotient_graph, Coloring};
use nonrainbow::formats::{parse_planar_code, write_planar_code, PlanarCode};
use nonrainbow::generators::projective_base;
use nonrainbow::graph::{build_graph, fundamental_cycles, spanning_tree, EdgeId, MultiGraph, SpanningTree, VertexId};
use nonrainbow::homology::{
    coloring_induced_matrix, coloring_induced_matrix_with, identification_induced_matrix, ij_edge_count_on_walk,
    is_epimorphism, is_null_coloring, ColorGraph,
};
use nonrainbow::search::{
    all_colorings, chi_f, exists_non_rainbow_k, is_null_by_chains, max_null, maximal_null_colorings,
    null_colorings, SearchBudget,
};
use nonrainbow::snf::{smith_normal_form, IntMatrix};
use nonrainbow::surface::{
    face_count_expected, subdivide_face, validate_triangulation, Face, SurfaceKind,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::{all_connected_graphs, random_stacked, simple_cycles, small_catalog};

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// Connected multigraph on 1..=6 vertices: a random tree plus extra edges,
/// which may be loops or parallels.
fn arb_graph() -> impl Strategy<Value = MultiGraph> {
    (1usize..=6).prop_flat_map(|n| {
        let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((1..=n, 1..=n), 0..6);
        (Just(n), tree, extra).prop_map(|(n, tree, extra)| {
            let mut edges: Vec<(usize, usize)> =
                tree.iter().enumerate().map(|(i, ix)| (i + 2, ix.index(i + 1) + 1)).collect();
            edges.extend(extra);
            build_graph(n, &edges).unwrap()
        })
    })
}

fn arb_graph_and_coloring() -> impl Strategy<Value = (MultiGraph, Coloring)> {
    arb_graph().prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), proptest::collection::vec(0u8..4, n)).prop_map(|(g, raw)| (g, Coloring::from_raw(&raw)))
    })
}

// determinantal divisors: d1 d2 ... dk = gcd of the k x k minors
fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for j in 0..m.len() {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

fn divisors_by_minors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let sub: Vec<Vec<BigInt>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| BigInt::from(rows[i][j])).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

#[test]
fn snf_oracle_spot_values() {
    assert_eq!(divisors_by_minors(&[vec![2, 0], vec![0, 3]]), vec![BigInt::from(1), BigInt::from(6)]);
    assert!(divisors_by_minors(&[vec![0, 0]]).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn snf_matches_determinantal_divisors(rows in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
    })) {
        let m = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(&snf, &divisors_by_minors(&rows));
        for w in snf.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn cotree_size_is_cycle_rank(g in arb_graph()) {
        let t = spanning_tree(&g);
        let cycles = fundamental_cycles(&g, &t);
        prop_assert_eq!(t.cotree().len(), g.edge_count() + g.component_count() - g.vertex_count());
        prop_assert_eq!(g.is_forest(), cycles.is_empty());
        for (i, c) in cycles.iter().enumerate() {
            prop_assert_eq!(c.vertices.first(), c.vertices.last());
            for (j, o) in t.cotree().iter().enumerate() {
                let uses = c.edges.iter().filter(|&&e| e == o.edge).count();
                prop_assert_eq!(uses, usize::from(i == j));
            }
        }
    }

    #[test]
    fn null_test_ignores_tree_and_orientation(
        (g, f) in arb_graph_and_coloring(),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
        order.shuffle(&mut rng);
        let mut tree = SpanningTree::with_edge_order(&g, &order);
        for i in 0..tree.cotree().len() {
            if rng.gen_bool(0.5) {
                tree.flip(i);
            }
        }
        let reference = is_null_coloring(&g, &f).unwrap();
        let other = coloring_induced_matrix_with(&g, &tree, &f).unwrap();
        prop_assert_eq!(other.is_zero(), reference);
        prop_assert_eq!(is_null_by_chains(&g, &f), reference);
    }

    #[test]
    fn induced_matrices_compose(
        (g, f) in arb_graph_and_coloring(),
        pick in any::<prop::sample::Index>(),
    ) {
        // factor f through the identification of two same-colored vertices
        let pairs: Vec<(VertexId, VertexId)> = g.vertices()
            .flat_map(|u| g.vertices().filter(move |&v| u < v).map(move |v| (u, v)))
            .filter(|&(u, v)| f.color(u) == f.color(v))
            .collect();
        prop_assume!(!pairs.is_empty());
        let (u, v) = *pick.get(&pairs);
        for id in [g.identify_vertices(u, v).unwrap(), g.identify_vertices_simple(u, v).unwrap()] {
            let raw: Vec<u32> = (0..id.graph.vertex_count())
                .map(|i| {
                    let pre = id.vertex_map.iter().position(|x| x.index() == i).unwrap();
                    f.colors()[pre]
                })
                .collect();
            let f2 = Coloring::from_raw(&raw);
            prop_assert_eq!(f2.k(), f.k());
            // from_raw may renumber colors; compose with the renumbering's own map
            let m_h = identification_induced_matrix(&g, &id).unwrap();
            let m_f2 = coloring_induced_matrix(&id.graph, &f2).unwrap();
            let m_f = coloring_induced_matrix(&g, &f).unwrap();
            if f2.colors() == raw.as_slice() {
                prop_assert_eq!(m_h.then(&m_f2), m_f.clone());
            }
            prop_assert_eq!(m_h.then(&m_f2).is_zero(), m_f.is_zero());
        }
    }

    #[test]
    fn random_stacked_triangulations_are_valid(n in 4usize..=30, seed in any::<u64>()) {
        use rand::SeedableRng;
        let t = random_stacked(n, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(t.face_count(), face_count_expected(n, SurfaceKind::Sphere).unwrap());
        prop_assert_eq!(3 * t.face_count(), 2 * t.edge_count());
        let again = validate_triangulation(n, t.faces().to_vec()).unwrap();
        prop_assert_eq!(&again, &t);
        let s = subdivide_face(&t, t.faces()[n % t.face_count()]).unwrap();
        prop_assert_eq!(
            (s.vertex_count(), s.edge_count(), s.face_count(), s.kind()),
            (n + 1, t.edge_count() + 3, t.face_count() + 2, t.kind())
        );
    }

    #[test]
    fn planar_code_round_trips(n in 4usize..=20, seed in any::<u64>()) {
        use rand::SeedableRng;
        let t = random_stacked(n, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let code = PlanarCode::from_triangulation(&t).unwrap();
        let bytes = write_planar_code(std::slice::from_ref(&code), true);
        let parsed = parse_planar_code(&bytes).unwrap();
        prop_assert_eq!(write_planar_code(&parsed, true), bytes);
        let back = parsed[0].to_triangulation().unwrap();
        let faces = |t: &nonrainbow::Triangulation| t.faces().iter().copied().collect::<BTreeSet<Face>>();
        prop_assert_eq!(faces(&back), faces(&t));
    }
}

#[test]
fn identification_of_adjacent_vertices_keeps_cycle_rank() {
    for g in all_connected_graphs(5) {
        for e in g.edges() {
            let id = g.identify_vertices(e.u, e.v).unwrap();
            assert_eq!(id.graph.cycle_rank(), g.cycle_rank());
            let h = identification_induced_matrix(&g, &id).unwrap();
            assert!(is_epimorphism(&h, id.graph.cycle_rank()), "contraction is an isomorphism on H1");
        }
    }
}

#[test]
fn multigraph_identification_at_distance_two_is_never_onto() {
    for g in all_connected_graphs(5) {
        for u in g.vertices() {
            let dist = g.distances_from(u);
            for v in g.vertices().filter(|&v| v > u && dist[v.index()] == nonrainbow::Distance::Finite(2)) {
                let id = g.identify_vertices(u, v).unwrap();
                assert_eq!(id.graph.cycle_rank(), g.cycle_rank() + 1);
                let h = identification_induced_matrix(&g, &id).unwrap();
                assert!(!is_epimorphism(&h, id.graph.cycle_rank()));
            }
        }
    }
}

#[test]
fn simple_cycle_oracle_counts() {
    let complete = |n: usize| {
        let pairs: Vec<_> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        build_graph(n, &pairs).unwrap()
    };
    assert_eq!(simple_cycles(&complete(3)).len(), 1);
    assert_eq!(simple_cycles(&complete(4)).len(), 7);
    assert_eq!(simple_cycles(&complete(5)).len(), 37);
    assert_eq!(simple_cycles(&complete(6)).len(), 197);
}

#[test]
fn maximal_null_without_monochromatic_edge_means_bipartite() {
    for g in all_connected_graphs(5) {
        for f in maximal_null_colorings(&g, &budget()).unwrap() {
            let mono = g.edges().iter().any(|e| f.color(e.u) == f.color(e.v));
            if !mono {
                assert!(g.is_bipartite(), "{g:?} {f:?}");
            }
        }
    }
}

#[test]
fn maximality_survives_identification_at_distance_two() {
    let b = budget();
    for g in all_connected_graphs(5) {
        let (best, _) = max_null(&g, &b).unwrap();
        for f in maximal_null_colorings(&g, &b).unwrap() {
            let dist: Vec<_> = g.vertices().map(|u| g.distances_from(u)).collect();
            for u in g.vertices() {
                for v in g.vertices().filter(|&v| v > u && f.color(u) == f.color(v)) {
                    if !dist[u.index()][v.index()].at_most(2) {
                        continue;
                    }
                    let id = g.identify_vertices_simple(u, v).unwrap();
                    let raw: Vec<u32> = (0..id.graph.vertex_count())
                        .map(|i| f.colors()[id.vertex_map.iter().position(|x| x.index() == i).unwrap()])
                        .collect();
                    let f2 = Coloring::from_raw(&raw);
                    assert!(is_null_coloring(&id.graph, &f2).unwrap());
                    assert_eq!(max_null(&id.graph, &b).unwrap().0, best);
                    assert_eq!(quotient_graph(&id.graph, &f2).edges(), quotient_graph(&g, &f).edges());
                }
            }
        }
    }
}

#[test]
fn null_enumeration_agrees_with_matrix_test() {
    for g in all_connected_graphs(5).iter().step_by(7) {
        let fast: Vec<Coloring> = null_colorings(g, &budget()).unwrap();
        let slow: Vec<Coloring> = all_colorings(g.vertex_count()).filter(|f| is_null_coloring(g, f).unwrap()).collect();
        assert_eq!(fast, slow);
    }
}

#[test]
fn monotonicity_below_chi_f() {
    for (name, t) in small_catalog(8, 10) {
        let top = chi_f(&t, &budget()).unwrap().chi_f;
        assert!(top >= 2, "{name}");
        for k in 1..=top {
            let w = exists_non_rainbow_k(&t, k, &budget()).unwrap().unwrap_or_else(|| panic!("{name}: no {k}-coloring"));
            assert_eq!(w.k(), k);
            assert!(is_non_rainbow(&t, &w));
        }
    }
}

#[test]
fn maximum_null_equals_chi_f_on_triangulations() {
    for (name, t) in small_catalog(7, 10) {
        let report = chi_f(&t, &budget()).unwrap();
        let (k, _) = max_null(t.skeleton(), &budget()).unwrap();
        assert_eq!(k, report.chi_f, "{name}");
    }
}

#[test]
fn chi_f_matches_brute_force_on_small_catalog() {
    for (name, t) in small_catalog(7, 5) {
        let brute = all_colorings(t.vertex_count())
            .filter(|f| is_non_rainbow(&t, f))
            .map(|f| f.k())
            .max()
            .unwrap();
        assert_eq!(chi_f(&t, &budget()).unwrap().chi_f, brute, "{name}");
    }
}

#[test]
fn octahedron_chi_f_is_three() {
    let t = nonrainbow::generators::octahedron();
    let r = chi_f(&t, &budget()).unwrap();
    assert_eq!((r.chi_f, r.bound, r.tight), (3, 3, true));
    let counts: Vec<usize> = quotient_graph(t.skeleton(), &r.witness)
        .edges()
        .iter()
        .map(|&(i, j)| bichromatic_face_count(&t, &r.witness, i, j).unwrap())
        .collect();
    assert!(counts.iter().all(|&c| c >= 3));
}

#[test]
fn projective_base_is_found_by_exhaustive_face_search() {
    // all 10-subsets of the 20 triples of {1..6} that triangulate a surface
    let triples: Vec<Face> = (1..=6)
        .flat_map(|a| (a + 1..=6).flat_map(move |b| (b + 1..=6).map(move |c| Face::new(a, b, c).unwrap())))
        .collect();
    assert_eq!(triples.len(), 20);
    let mut found = Vec::new();
    for mask in 0u32..1 << 20 {
        if mask.count_ones() != 10 {
            continue;
        }
        let faces: Vec<Face> = (0..20).filter(|i| mask >> i & 1 == 1).map(|i| triples[i]).collect();
        if let Ok(t) = validate_triangulation(6, faces) {
            found.push(t);
        }
    }
    assert!(!found.is_empty());
    for t in &found {
        assert_eq!(t.kind(), SurfaceKind::ProjectivePlane);
        assert_eq!(t.edge_count(), 15);
    }
    let base: BTreeSet<Face> = projective_base().faces().iter().copied().collect();
    assert!(found.iter().any(|t| t.faces().iter().copied().collect::<BTreeSet<_>>() == base));
    // one triangulation per labeling: 6!/|Aut| = 720/60
    assert_eq!(found.len(), 12);
}

#[test]
fn parity_on_simple_cycles_of_small_graphs() {
    for g in all_connected_graphs(5) {
        let cycles = simple_cycles(&g);
        for f in null_colorings(&g, &budget()).unwrap() {
            for c in &cycles {
                for i in 1..=f.k() as u32 {
                    for j in i + 1..=f.k() as u32 {
                        assert_eq!(ij_edge_count_on_walk(&f, c, i, j).unwrap() % 2, 0);
                    }
                }
            }
        }
    }
}

#[test]
fn color_graph_basis_sizes() {
    let kk = ColorGraph::new(5);
    assert_eq!(kk.graph().edge_count(), 10);
    assert_eq!(kk.tree().cotree().len(), 6);
}
