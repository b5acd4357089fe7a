//! First homology of graphs and the maps induced on it by vertex maps.
//!
//! `H1` of a graph is free abelian with one generator per cotree edge of a
//! spanning forest. A closed walk is written in that basis by counting, with
//! sign, how often it runs along each oriented cotree edge. A vertex map
//! induces a matrix whose row `i` holds the coordinates of the image of the
//! `i`-th fundamental cycle.

use num_traits::One;
use thiserror::Error;

use crate::coloring::{Color, Coloring, ColoringError};
use crate::graph::{
    build_graph, fundamental_cycles, spanning_tree, ClosedWalk, EdgeImage, Identification,
    MultiGraph, SpanningTree, VertexId,
};
use crate::snf::{smith_normal_form, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("image of edge {edge} does not match the images of its endpoints")]
    InconsistentEdgeImage { edge: usize },
    #[error("vertex map has {got} entries for {expected} vertices")]
    VertexMapSize { got: usize, expected: usize },
    #[error("spanning tree does not belong to the graph")]
    ForeignTree,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// The complete graph `K_k` on the colors, with its deterministic spanning
/// tree (the star at color 1). Edge `{i, j}`, `i < j`, is stored as `(i, j)`.
#[derive(Debug, Clone)]
pub struct ColorGraph {
    k: usize,
    graph: MultiGraph,
    tree: SpanningTree,
}

impl ColorGraph {
    pub fn new(k: usize) -> Self {
        let mut pairs = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for i in 1..=k {
            for j in i + 1..=k {
                pairs.push((i, j));
            }
        }
        let graph = build_graph(k, &pairs).expect("pairs within 1..=k");
        let tree = spanning_tree(&graph);
        ColorGraph { k, graph, tree }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    /// Index of edge `{i, j}` in lexicographic pair order.
    fn edge_index(&self, i: Color, j: Color) -> usize {
        let (i, j) = (i.min(j) as usize, i.max(j) as usize);
        // pairs (a, b) with a < i come first: sum_{a<i} (k - a)
        (1..i).map(|a| self.k - a).sum::<usize>() + (j - i - 1)
    }

    /// Where an edge between colors `a` and `b` (stored as `a -> b`) goes.
    pub fn image(&self, a: Color, b: Color) -> EdgeImage {
        if a == b {
            EdgeImage::Vertex(VertexId::new(a as usize))
        } else {
            EdgeImage::Edge {
                edge: crate::graph::EdgeId::from_index(self.edge_index(a, b)),
                forward: a < b,
            }
        }
    }
}

/// Matrix of `f_*: H1(domain) -> H1(codomain)` in fundamental-cycle bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMatrix {
    matrix: IntMatrix,
}

impl InducedMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Matrix of the composite `g_* . f_*` given `self` for `f` and `next`
    /// for `g` (row-vector convention, so this is `self * next`).
    pub fn then(&self, next: &InducedMatrix) -> InducedMatrix {
        InducedMatrix {
            matrix: self.matrix.mul(&next.matrix),
        }
    }
}

/// Coordinates in the cotree basis of `ctree` of the image of each
/// fundamental cycle of `dtree`.
pub fn induced_matrix(
    domain: &MultiGraph,
    dtree: &SpanningTree,
    codomain: &MultiGraph,
    ctree: &SpanningTree,
    vmap: &[VertexId],
    emap: &[EdgeImage],
) -> Result<InducedMatrix, HomologyError> {
    if !dtree.belongs_to(domain) || !ctree.belongs_to(codomain) {
        return Err(HomologyError::ForeignTree);
    }
    if vmap.len() != domain.vertex_count() {
        return Err(HomologyError::VertexMapSize {
            got: vmap.len(),
            expected: domain.vertex_count(),
        });
    }
    check_edge_images(domain, codomain, vmap, emap)?;

    let cycles = fundamental_cycles(domain, dtree);
    let cols = ctree.cotree().len();
    let mut matrix = IntMatrix::zeros(cycles.len(), cols);
    for (row, walk) in cycles.iter().enumerate() {
        for (_, _, e, forward) in walk.steps() {
            let EdgeImage::Edge { edge, forward: kept } = emap[e.index()] else {
                continue;
            };
            let Some(col) = ctree.cotree_column(edge) else {
                continue;
            };
            let along_stored = forward == kept;
            let along_chosen = along_stored == ctree.cotree()[col].agrees_with_stored;
            matrix[(row, col)] += if along_chosen { 1 } else { -1 };
        }
    }
    Ok(InducedMatrix { matrix })
}

fn check_edge_images(
    domain: &MultiGraph,
    codomain: &MultiGraph,
    vmap: &[VertexId],
    emap: &[EdgeImage],
) -> Result<(), HomologyError> {
    if emap.len() != domain.edge_count() {
        return Err(HomologyError::InconsistentEdgeImage {
            edge: emap.len().min(domain.edge_count()) + 1,
        });
    }
    for (e, image) in domain.edges().iter().zip(emap) {
        let (a, b) = (vmap[e.u.index()], vmap[e.v.index()]);
        let ok = match *image {
            EdgeImage::Vertex(x) => a == x && b == x,
            EdgeImage::Edge { edge, forward } => {
                edge.get() <= codomain.edge_count() && {
                    let c = codomain.edge(edge);
                    if forward {
                        (c.u, c.v) == (a, b)
                    } else {
                        (c.v, c.u) == (a, b)
                    }
                }
            }
        };
        if !ok {
            return Err(HomologyError::InconsistentEdgeImage { edge: e.id.get() });
        }
    }
    Ok(())
}

/// `f_*` for a coloring viewed as a map onto `K_k`, using the default
/// spanning trees of both graphs.
pub fn coloring_induced_matrix(g: &MultiGraph, f: &Coloring) -> Result<InducedMatrix, HomologyError> {
    coloring_induced_matrix_with(g, &spanning_tree(g), f)
}

/// As [`coloring_induced_matrix`], with a caller-chosen domain tree.
pub fn coloring_induced_matrix_with(
    g: &MultiGraph,
    tree: &SpanningTree,
    f: &Coloring,
) -> Result<InducedMatrix, HomologyError> {
    f.check_size(g.vertex_count())?;
    let kk = ColorGraph::new(f.k());
    let vmap: Vec<VertexId> = g
        .vertices()
        .map(|v| VertexId::new(f.color(v) as usize))
        .collect();
    let emap: Vec<EdgeImage> = g
        .edges()
        .iter()
        .map(|e| kk.image(f.color(e.u), f.color(e.v)))
        .collect();
    induced_matrix(g, tree, kk.graph(), kk.tree(), &vmap, &emap)
}

/// True iff the coloring induces the zero map on first homology.
pub fn is_null_coloring(g: &MultiGraph, f: &Coloring) -> Result<bool, HomologyError> {
    Ok(coloring_induced_matrix(g, f)?.is_zero())
}

/// `h_*` for the quotient map of a vertex identification, default trees.
pub fn identification_induced_matrix(
    g: &MultiGraph,
    id: &Identification,
) -> Result<InducedMatrix, HomologyError> {
    induced_matrix(
        g,
        &spanning_tree(g),
        &id.graph,
        &spanning_tree(&id.graph),
        &id.vertex_map,
        &id.edge_image,
    )
}

/// Whether `m` is onto `Z^codomain_rank`: it must have exactly that many
/// columns, full column rank, and all elementary divisors equal to 1.
pub fn is_epimorphism(m: &InducedMatrix, codomain_rank: usize) -> bool {
    if m.cols() != codomain_rank {
        return false;
    }
    let divisors = smith_normal_form(m.matrix());
    divisors.len() == codomain_rank && divisors.iter().all(One::is_one)
}

/// Steps of `w` whose edge joins a vertex colored `i` to one colored `j`.
pub fn ij_edge_count_on_walk(
    f: &Coloring,
    w: &ClosedWalk,
    i: Color,
    j: Color,
) -> Result<usize, ColoringError> {
    if i == j {
        return Err(ColoringError::SameColor(i));
    }
    Ok(w.steps()
        .filter(|&(a, b, _, _)| {
            let (ca, cb) = (f.color(a), f.color(b));
            (ca == i && cb == j) || (ca == j && cb == i)
        })
        .count())
}
