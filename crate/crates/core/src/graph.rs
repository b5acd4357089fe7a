//! Finite multigraphs regarded as 1-dimensional cell complexes.
//!
//! Parallel edges and loops are first-class: identifying two vertices of a
//! simple graph routinely produces both, and each of them carries a generator
//! of the first homology group.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// A 1-based vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    /// Panics on zero; vertex labels start at 1.
    pub fn new(label: usize) -> Self {
        assert!(label >= 1, "vertex labels are 1-based");
        VertexId(label)
    }

    pub fn from_index(index: usize) -> Self {
        VertexId(index + 1)
    }

    /// The 1-based label.
    pub fn get(self) -> usize {
        self.0
    }

    /// The 0-based position, for indexing per-vertex arrays.
    pub fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A 1-based edge label, dense in `1..=m` in insertion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(usize);

impl EdgeId {
    pub fn new(label: usize) -> Self {
        assert!(label >= 1, "edge labels are 1-based");
        EdgeId(label)
    }

    pub fn from_index(index: usize) -> Self {
        EdgeId(index + 1)
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge with its endpoints in stored order. The stored order is the
/// reference direction for signed traversal counts; it carries no other
/// meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite `x`. For a loop this is `x` itself.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn joins(&self, a: VertexId, b: VertexId) -> bool {
        (self.u == a && self.v == b) || (self.u == b && self.v == a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("endpoint {endpoint} of edge {edge} is outside 1..={n}")]
    EndpointOutOfRange { edge: usize, endpoint: usize, n: usize },
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(usize),
    #[error("cannot identify vertex {0} with itself")]
    SameVertex(usize),
}

/// Undirected multigraph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
    // incident edge ids per vertex, ascending; a loop is listed once
    incidence: Vec<Vec<EdgeId>>,
}

/// Builds a multigraph whose edge ids follow the order of `edge_list`.
pub fn build_graph(n: usize, edge_list: &[(usize, usize)]) -> Result<MultiGraph, GraphError> {
    let mut edges = Vec::with_capacity(edge_list.len());
    for (i, &(a, b)) in edge_list.iter().enumerate() {
        for endpoint in [a, b] {
            if endpoint == 0 || endpoint > n {
                return Err(GraphError::EndpointOutOfRange {
                    edge: i + 1,
                    endpoint,
                    n,
                });
            }
        }
        edges.push(Edge {
            id: EdgeId::from_index(i),
            u: VertexId::new(a),
            v: VertexId::new(b),
        });
    }
    Ok(MultiGraph::from_edges(n, edges))
}

/// Shortest-path length; `Infinite` between different components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn at_most(self, d: usize) -> bool {
        matches!(self, Distance::Finite(x) if x <= d)
    }
}

impl MultiGraph {
    fn from_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for e in &edges {
            incidence[e.u.index()].push(e.id);
            if !e.is_loop() {
                incidence[e.v.index()].push(e.id);
            }
        }
        MultiGraph {
            n,
            edges,
            incidence,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.index()]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId::from_index)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.get() <= self.n
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex(v.get()))
        }
    }

    /// Incident edge ids of `v`, ascending.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.index()]
    }

    /// Neighbors of `v` (with repetition for parallel edges, `v` itself for loops).
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incident(v).iter().map(move |&e| self.edge(e).other(v))
    }

    pub fn are_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.incident(a).iter().any(|&e| self.edge(e).joins(a, b))
    }

    /// Component label per vertex (0-based, in order of lowest vertex) and the
    /// number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut queue = VecDeque::from([VertexId::from_index(start)]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if label[y.index()] == usize::MAX {
                        label[y.index()] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.components().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Rank of the first homology group: `m - n + c`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.n
    }

    pub fn distances_from(&self, u: VertexId) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        dist[u.index()] = Distance::Finite(0);
        let mut queue = VecDeque::from([(u, 0usize)]);
        while let Some((x, d)) = queue.pop_front() {
            for y in self.neighbors(x) {
                if dist[y.index()] == Distance::Infinite {
                    dist[y.index()] = Distance::Finite(d + 1);
                    queue.push_back((y, d + 1));
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Distance, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v.index()])
    }

    /// True iff the graph has no cycle; loops and parallel edges count as cycles.
    pub fn is_forest(&self) -> bool {
        self.cycle_rank() == 0
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([VertexId::from_index(start)]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x.index()].unwrap();
                for y in self.neighbors(x) {
                    match side[y.index()] {
                        None => {
                            side[y.index()] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Merges `u` and `v` into one vertex.
    ///
    /// The merged vertex takes the smaller label and labels above the larger
    /// one shift down by one. If `u` and `v` are adjacent, the lowest-id edge
    /// between them is contracted; any further `u`-`v` edges become loops.
    /// All other edges survive, in their original order.
    pub fn identify_vertices(&self, u: VertexId, v: VertexId) -> Result<Identification, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u.get()));
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let vertex_map: Vec<VertexId> = self
            .vertices()
            .map(|x| match x.cmp(&hi) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => lo,
                std::cmp::Ordering::Greater => VertexId::new(x.get() - 1),
            })
            .collect();

        let contracted = self
            .edges
            .iter()
            .find(|e| e.joins(lo, hi))
            .map(|e| e.id);

        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_image = Vec::with_capacity(self.edges.len());
        let mut preimage = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if Some(e.id) == contracted {
                edge_image.push(EdgeImage::Vertex(lo));
                continue;
            }
            let id = EdgeId::from_index(edges.len());
            edges.push(Edge {
                id,
                u: vertex_map[e.u.index()],
                v: vertex_map[e.v.index()],
            });
            edge_image.push(EdgeImage::Edge { edge: id, forward: true });
            preimage.push(e.id);
        }
        Ok(Identification {
            graph: MultiGraph::from_edges(self.n - 1, edges),
            merged: lo,
            vertex_map,
            edge_image,
            preimage,
        })
    }

    /// Identification followed by simplification: every edge that becomes a
    /// loop collapses onto the merged vertex and each class of parallel
    /// edges is represented by its lowest-id member.
    ///
    /// On simple graphs this is the usual graph-theoretic identification,
    /// for which `h_*` is onto whenever `d(u, v) <= 2`. The multigraph
    /// version of [`identify_vertices`](Self::identify_vertices) gains a free
    /// generator at distance 2 and is never onto there.
    pub fn identify_vertices_simple(&self, u: VertexId, v: VertexId) -> Result<Identification, GraphError> {
        let multi = self.identify_vertices(u, v)?;
        let merged = multi.merged;
        let mut edges: Vec<Edge> = Vec::new();
        let mut preimage = Vec::new();
        // representative edge of each multigraph edge, None for loops
        let mut representative: Vec<Option<(EdgeId, bool)>> = Vec::with_capacity(multi.graph.edge_count());
        for e in multi.graph.edges() {
            if e.is_loop() {
                representative.push(None);
                continue;
            }
            match edges.iter().find(|r| r.joins(e.u, e.v)) {
                Some(r) => representative.push(Some((r.id, r.u == e.u))),
                None => {
                    let id = EdgeId::from_index(edges.len());
                    edges.push(Edge { id, u: e.u, v: e.v });
                    preimage.push(multi.preimage[e.id.index()]);
                    representative.push(Some((id, true)));
                }
            }
        }
        let edge_image = multi
            .edge_image
            .iter()
            .map(|image| match *image {
                EdgeImage::Vertex(x) => EdgeImage::Vertex(x),
                EdgeImage::Edge { edge, forward } => match representative[edge.index()] {
                    None => EdgeImage::Vertex(multi.graph.edge(edge).u),
                    Some((rep, same)) => EdgeImage::Edge {
                        edge: rep,
                        forward: forward == same,
                    },
                },
            })
            .collect();
        Ok(Identification {
            graph: MultiGraph::from_edges(self.n - 1, edges),
            merged,
            vertex_map: multi.vertex_map,
            edge_image,
            preimage,
        })
    }
}

/// Where a domain edge goes under a cellular vertex map: onto an edge of the
/// codomain (with `forward` telling whether the stored direction is kept), or
/// onto a single vertex when both endpoints land on the same vertex and the
/// edge collapses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeImage {
    Edge { edge: EdgeId, forward: bool },
    Vertex(VertexId),
}

/// The quotient map `h: G -> G'` of a single vertex identification.
#[derive(Debug, Clone)]
pub struct Identification {
    pub graph: MultiGraph,
    /// The vertex of `G'` that `u` and `v` became.
    pub merged: VertexId,
    /// `vertex_map[x.index()]` is the image of `x`.
    pub vertex_map: Vec<VertexId>,
    /// Image of each edge of `G`, indexed by edge index.
    pub edge_image: Vec<EdgeImage>,
    /// Pre-image in `G` of each edge of `G'`, indexed by edge index.
    pub preimage: Vec<EdgeId>,
}

/// A cotree edge together with the direction chosen for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientedEdge {
    pub edge: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
    /// Whether (tail, head) agrees with the edge's stored (u, v). Only
    /// informative for loops, where tail = head.
    pub agrees_with_stored: bool,
}

/// A spanning forest plus an oriented, ordered list of the remaining edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    n: usize,
    m: usize,
    in_tree: Vec<bool>,
    cotree: Vec<OrientedEdge>,
    // column of each edge in `cotree`, if it is a cotree edge
    column: Vec<Option<usize>>,
    // tree parent of each vertex (edge, parent vertex), None at roots
    parent: Vec<Option<(EdgeId, VertexId)>>,
    depth: Vec<usize>,
}

/// Deterministic spanning forest: edges are scanned in id order and kept when
/// they join two different trees. Cotree edges are listed by id and oriented
/// from lower to higher endpoint.
pub fn spanning_tree(g: &MultiGraph) -> SpanningTree {
    let order: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
    SpanningTree::with_edge_order(g, &order)
}

impl SpanningTree {
    /// Spanning forest grown greedily along `order`, which must be a
    /// permutation of the edge ids of `g`. Cotree edges keep their id order.
    pub fn with_edge_order(g: &MultiGraph, order: &[EdgeId]) -> SpanningTree {
        assert_eq!(order.len(), g.edge_count(), "order must list every edge");
        let mut dsu = DisjointSets::new(g.vertex_count());
        let mut in_tree = vec![false; g.edge_count()];
        for &id in order {
            let e = g.edge(id);
            if dsu.union(e.u.index(), e.v.index()) {
                in_tree[id.index()] = true;
            }
        }
        let mut cotree = Vec::new();
        let mut column = vec![None; g.edge_count()];
        for e in g.edges() {
            if in_tree[e.id.index()] {
                continue;
            }
            column[e.id.index()] = Some(cotree.len());
            let (tail, head) = if e.u <= e.v { (e.u, e.v) } else { (e.v, e.u) };
            cotree.push(OrientedEdge {
                edge: e.id,
                tail,
                head,
                agrees_with_stored: e.u <= e.v,
            });
        }

        let mut parent = vec![None; g.vertex_count()];
        let mut depth = vec![0; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        for root in g.vertices() {
            if seen[root.index()] {
                continue;
            }
            seen[root.index()] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &eid in g.incident(x) {
                    if !in_tree[eid.index()] {
                        continue;
                    }
                    let y = g.edge(eid).other(x);
                    if !seen[y.index()] {
                        seen[y.index()] = true;
                        parent[y.index()] = Some((eid, x));
                        depth[y.index()] = depth[x.index()] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }

        SpanningTree {
            n: g.vertex_count(),
            m: g.edge_count(),
            in_tree,
            cotree,
            column,
            parent,
            depth,
        }
    }

    /// Reverses the chosen orientation of cotree edge `i`.
    pub fn flip(&mut self, i: usize) {
        let o = &mut self.cotree[i];
        std::mem::swap(&mut o.tail, &mut o.head);
        o.agrees_with_stored = !o.agrees_with_stored;
    }

    pub fn belongs_to(&self, g: &MultiGraph) -> bool {
        self.n == g.vertex_count() && self.m == g.edge_count()
    }

    pub fn tree_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.in_tree
            .iter()
            .enumerate()
            .filter(|(_, &t)| t)
            .map(|(i, _)| EdgeId::from_index(i))
    }

    pub fn is_tree_edge(&self, e: EdgeId) -> bool {
        self.in_tree[e.index()]
    }

    pub fn cotree(&self) -> &[OrientedEdge] {
        &self.cotree
    }

    /// Column index of `e` among the cotree edges.
    pub fn cotree_column(&self, e: EdgeId) -> Option<usize> {
        self.column[e.index()]
    }

    /// Tree path from `from` to `to` as (edge, next vertex) steps. Both
    /// vertices must lie in the same component.
    fn tree_path(&self, from: VertexId, to: VertexId) -> Vec<(EdgeId, VertexId)> {
        let (mut a, mut b) = (from, to);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while a != b {
            if self.depth[a.index()] >= self.depth[b.index()] {
                let (e, p) = self.parent[a.index()].expect("vertices in different trees");
                up.push((e, p));
                a = p;
            } else {
                let (e, p) = self.parent[b.index()].expect("vertices in different trees");
                down.push((e, b));
                b = p;
            }
        }
        up.extend(down.into_iter().rev());
        up
    }
}

/// A closed walk `v0, e1, v1, ..., eL, vL = v0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    /// `len() + 1` vertices, first equal to last.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    /// Whether step `i` runs along the stored direction of its edge. Needed
    /// because a loop's direction is not recoverable from the vertices.
    pub forward: Vec<bool>,
}

impl ClosedWalk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Walk through the listed vertices and back to the first, following the
    /// given edges. Panics if an edge does not join its two vertices.
    pub fn from_vertices(g: &MultiGraph, vertices: &[VertexId], edges: &[EdgeId]) -> ClosedWalk {
        assert_eq!(vertices.len(), edges.len());
        let mut vs = vertices.to_vec();
        vs.push(vertices[0]);
        let forward = edges
            .iter()
            .enumerate()
            .map(|(i, &id)| {
                let e = g.edge(id);
                assert!(e.joins(vs[i], vs[i + 1]), "edge {id} does not join its walk vertices");
                e.u == vs[i]
            })
            .collect();
        ClosedWalk {
            vertices: vs,
            edges: edges.to_vec(),
            forward,
        }
    }

    /// Steps as (from, to, edge, forward).
    pub fn steps(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeId, bool)> + '_ {
        (0..self.len()).map(move |i| {
            (
                self.vertices[i],
                self.vertices[i + 1],
                self.edges[i],
                self.forward[i],
            )
        })
    }
}

/// One closed walk per cotree edge: the edge in its chosen direction, then
/// the tree path from its head back to its tail.
pub fn fundamental_cycles(g: &MultiGraph, t: &SpanningTree) -> Vec<ClosedWalk> {
    debug_assert!(t.belongs_to(g));
    t.cotree()
        .iter()
        .map(|o| {
            let mut vertices = vec![o.tail, o.head];
            let mut edges = vec![o.edge];
            let mut forward = vec![o.agrees_with_stored];
            for (e, next) in t.tree_path(o.head, o.tail) {
                let prev = *vertices.last().unwrap();
                forward.push(g.edge(e).u == prev);
                edges.push(e);
                vertices.push(next);
            }
            ClosedWalk {
                vertices,
                edges,
                forward,
            }
        })
        .collect()
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: usize) -> VertexId {
        VertexId::new(x)
    }

    fn triangle() -> MultiGraph {
        build_graph(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    fn complete(k: usize) -> MultiGraph {
        let mut edges = Vec::new();
        for i in 1..=k {
            for j in i + 1..=k {
                edges.push((i, j));
            }
        }
        build_graph(k, &edges).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(triangle().edge_count(), 3);
        let single = build_graph(1, &[]).unwrap();
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        let digon = build_graph(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(digon.edge_count(), 2);
        assert_eq!(digon.edge(EdgeId::new(2)).id, EdgeId::new(2));
    }

    #[test]
    fn build_rejects_bad_endpoint() {
        assert_eq!(
            build_graph(3, &[(1, 2), (2, 4)]),
            Err(GraphError::EndpointOutOfRange { edge: 2, endpoint: 4, n: 3 })
        );
        assert!(build_graph(3, &[(0, 1)]).is_err());
    }

    #[test]
    fn distance_examples() {
        let path = build_graph(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(path.distance(v(1), v(3)).unwrap(), Distance::Finite(2));
        assert_eq!(path.distance(v(2), v(2)).unwrap(), Distance::Finite(0));
        let split = build_graph(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(split.distance(v(1), v(4)).unwrap(), Distance::Infinite);
        assert!(path.distance(v(1), v(9)).is_err());
    }

    #[test]
    fn spanning_tree_examples() {
        let t = spanning_tree(&triangle());
        assert_eq!(t.tree_edges().count(), 2);
        assert_eq!(t.cotree().len(), 1);

        let path = build_graph(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(spanning_tree(&path).cotree().is_empty());

        let k4 = complete(4);
        let t = spanning_tree(&k4);
        assert_eq!(t.tree_edges().count(), 3);
        assert_eq!(t.cotree().len(), k4.edge_count() - 4 + 1);
        // lowest-id-first keeps the star at vertex 1
        assert_eq!(t.tree_edges().map(EdgeId::get).collect::<Vec<_>>(), vec![1, 2, 3]);
        for o in t.cotree() {
            assert!(o.tail < o.head);
        }
    }

    #[test]
    fn loops_are_cotree() {
        let g = build_graph(2, &[(1, 1), (1, 2), (2, 2)]).unwrap();
        let t = spanning_tree(&g);
        let cot: Vec<usize> = t.cotree().iter().map(|o| o.edge.get()).collect();
        assert_eq!(cot, vec![1, 3]);
        let cycles = fundamental_cycles(&g, &t);
        assert!(cycles.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn fundamental_cycle_examples() {
        let g = triangle();
        let cycles = fundamental_cycles(&g, &spanning_tree(&g));
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 3);
        assert_eq!(cycles[0].vertices.first(), cycles[0].vertices.last());

        let path = build_graph(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(fundamental_cycles(&path, &spanning_tree(&path)).is_empty());

        let digon = build_graph(2, &[(1, 2), (1, 2)]).unwrap();
        let cycles = fundamental_cycles(&digon, &spanning_tree(&digon));
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 2);
        let mut used = cycles[0].edges.clone();
        used.sort();
        assert_eq!(used, vec![EdgeId::new(1), EdgeId::new(2)]);
    }

    #[test]
    fn each_fundamental_cycle_uses_its_own_cotree_edge_once() {
        let g = complete(5);
        let t = spanning_tree(&g);
        for (i, c) in fundamental_cycles(&g, &t).iter().enumerate() {
            for (j, o) in t.cotree().iter().enumerate() {
                let uses = c.edges.iter().filter(|&&e| e == o.edge).count();
                assert_eq!(uses, usize::from(i == j));
            }
            for (a, b, e, fwd) in c.steps() {
                let edge = g.edge(e);
                assert_eq!((edge.u, edge.v), if fwd { (a, b) } else { (b, a) });
            }
        }
    }

    #[test]
    fn forest_and_bipartite() {
        let path = build_graph(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(path.is_forest());
        assert!(path.is_bipartite());
        assert!(!triangle().is_forest());
        assert!(!triangle().is_bipartite());
        let looped = build_graph(2, &[(1, 2), (2, 2)]).unwrap();
        assert!(!looped.is_forest());
        assert!(!looped.is_bipartite());
        let c4 = build_graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(c4.is_bipartite());
        assert!(!c4.is_forest());
        let two_trees = build_graph(5, &[(1, 2), (4, 5)]).unwrap();
        assert!(two_trees.is_forest());
    }

    #[test]
    fn identify_distance_two_makes_digon() {
        let path = build_graph(3, &[(1, 2), (2, 3)]).unwrap();
        let id = path.identify_vertices(v(1), v(3)).unwrap();
        assert_eq!(id.graph.vertex_count(), 2);
        assert_eq!(id.graph.edge_count(), 2);
        assert!(id.graph.edges().iter().all(|e| e.joins(v(1), v(2))));
        assert_eq!(id.graph.cycle_rank(), 1);
        assert_eq!(id.preimage, vec![EdgeId::new(1), EdgeId::new(2)]);
    }

    #[test]
    fn identify_adjacent_contracts_one_edge() {
        let edge = build_graph(2, &[(1, 2)]).unwrap();
        let id = edge.identify_vertices(v(1), v(2)).unwrap();
        assert_eq!((id.graph.vertex_count(), id.graph.edge_count()), (1, 0));
        assert_eq!(id.edge_image, vec![EdgeImage::Vertex(v(1))]);

        let g = triangle();
        let id = g.identify_vertices(v(2), v(1)).unwrap();
        assert_eq!(id.graph.edge_count(), 2);
        assert_eq!(id.graph.cycle_rank(), g.cycle_rank());
        assert!(id.graph.edges().iter().all(|e| e.joins(v(1), v(2))));
    }

    #[test]
    fn identify_parallel_edges_leave_loops() {
        let g = build_graph(2, &[(1, 2), (2, 1), (1, 2)]).unwrap();
        let id = g.identify_vertices(v(1), v(2)).unwrap();
        assert_eq!(id.graph.edge_count(), 2);
        assert!(id.graph.edges().iter().all(Edge::is_loop));
        assert_eq!(id.graph.cycle_rank(), g.cycle_rank());
    }

    #[test]
    fn simple_identification_merges_parallels() {
        let path = build_graph(3, &[(1, 2), (2, 3)]).unwrap();
        let id = path.identify_vertices_simple(v(1), v(3)).unwrap();
        assert_eq!((id.graph.vertex_count(), id.graph.edge_count()), (2, 1));
        assert_eq!(
            id.edge_image,
            vec![
                EdgeImage::Edge { edge: EdgeId::new(1), forward: true },
                EdgeImage::Edge { edge: EdgeId::new(1), forward: false },
            ]
        );

        let g = triangle();
        let id = g.identify_vertices_simple(v(1), v(2)).unwrap();
        assert_eq!(id.graph.edge_count(), 1);
        assert!(id.graph.is_forest());
        assert_eq!(id.preimage, vec![EdgeId::new(2)]);
    }

    #[test]
    fn identify_relabels_above_the_merged_pair() {
        let g = build_graph(5, &[(1, 2), (2, 4), (4, 5), (3, 5)]).unwrap();
        let id = g.identify_vertices(v(4), v(2)).unwrap();
        assert_eq!(id.merged, v(2));
        assert_eq!(
            id.vertex_map,
            vec![v(1), v(2), v(3), v(2), v(4)]
        );
        assert_eq!(g.identify_vertices(v(3), v(3)).unwrap_err(), GraphError::SameVertex(3));
    }
}
