//! Triangulations of the sphere and the projective plane, stored as face lists.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{build_graph, MultiGraph, VertexId};

/// An unordered triangle, kept with its vertices in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face([VertexId; 3]);

impl Face {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Face, SurfaceError> {
        if a == 0 || b == 0 || c == 0 || a == b || b == c || a == c {
            return Err(SurfaceError::FaceNotTriple([a, b, c]));
        }
        let mut vs = [a, b, c];
        vs.sort_unstable();
        Ok(Face(vs.map(VertexId::new)))
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// The three vertex pairs, each in ascending order.
    pub fn edges(&self) -> [(VertexId, VertexId); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    /// The two vertices other than `v`, if `v` is on the face.
    pub fn opposite(&self, v: VertexId) -> Option<(VertexId, VertexId)> {
        let [a, b, c] = self.0;
        if v == a {
            Some((b, c))
        } else if v == b {
            Some((a, c))
        } else if v == c {
            Some((a, b))
        } else {
            None
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{a} {b} {c}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    Sphere,
    ProjectivePlane,
}

impl SurfaceKind {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            SurfaceKind::Sphere => 2,
            SurfaceKind::ProjectivePlane => 1,
        }
    }

    /// Smallest vertex count of a triangulation with a simple 1-skeleton.
    pub fn min_vertices(self) -> usize {
        match self {
            SurfaceKind::Sphere => 4,
            SurfaceKind::ProjectivePlane => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::Sphere => "sphere",
            SurfaceKind::ProjectivePlane => "projective",
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SurfaceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sphere" => Ok(SurfaceKind::Sphere),
            "projective" | "projective-plane" | "projective_plane" => Ok(SurfaceKind::ProjectivePlane),
            other => Err(format!("unknown surface '{other}' (expected sphere or projective)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("face {0:?} does not have three distinct positive vertices")]
    FaceNotTriple([usize; 3]),
    #[error("face {face} uses a vertex outside 1..={n}")]
    VertexOutOfRange { face: Face, n: usize },
    #[error("face {0} is listed twice")]
    DuplicateFace(Face),
    #[error("edge {0}-{1} lies in {2} faces, expected 2")]
    EdgeNotInTwoFaces(VertexId, VertexId, usize),
    #[error("link of vertex {0} is not a single cycle")]
    VertexLinkNotSingleCycle(VertexId),
    #[error("the 1-skeleton is disconnected")]
    Disconnected,
    #[error("Euler characteristic {0} is neither 2 (sphere) nor 1 (projective plane)")]
    UnsupportedSurface(i64),
    #[error("{face} is not a face of the triangulation")]
    NotAFace { face: Face },
    #[error("a {kind} triangulation needs at least {min} vertices, got {n}")]
    TooFewVertices { kind: SurfaceKind, n: usize, min: usize },
}

/// A validated triangulation with its 1-skeleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    n: usize,
    faces: Vec<Face>,
    skeleton: MultiGraph,
    kind: SurfaceKind,
}

impl Triangulation {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.skeleton.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Simple graph whose edges are the face sides, ids in ascending
    /// (lower, higher) pair order.
    pub fn skeleton(&self) -> &MultiGraph {
        &self.skeleton
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.n as i64 - self.edge_count() as i64 + self.face_count() as i64
    }
}

/// Checks that `faces` triangulate a closed surface that is a sphere or a
/// projective plane, with a simple connected 1-skeleton.
pub fn validate_triangulation(n: usize, faces: Vec<Face>) -> Result<Triangulation, SurfaceError> {
    let mut seen = BTreeSet::new();
    for &f in &faces {
        if f.vertices().iter().any(|v| v.get() > n) {
            return Err(SurfaceError::VertexOutOfRange { face: f, n });
        }
        if !seen.insert(f) {
            return Err(SurfaceError::DuplicateFace(f));
        }
    }

    let mut edge_faces: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for f in &faces {
        for e in f.edges() {
            *edge_faces.entry(e).or_default() += 1;
        }
    }
    if let Some((&(a, b), &count)) = edge_faces.iter().find(|(_, &c)| c != 2) {
        return Err(SurfaceError::EdgeNotInTwoFaces(a, b, count));
    }

    // link of v: the sides opposite v; with every edge in two faces each link
    // vertex has degree 2, so it remains to check the link is connected
    let mut link: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); n];
    for f in &faces {
        for v in f.vertices() {
            link[v.index()].push(f.opposite(v).unwrap());
        }
    }
    for (i, sides) in link.iter().enumerate() {
        if !link_is_single_cycle(sides) {
            return Err(SurfaceError::VertexLinkNotSingleCycle(VertexId::from_index(i)));
        }
    }

    let pairs: Vec<(usize, usize)> = edge_faces.keys().map(|(a, b)| (a.get(), b.get())).collect();
    let skeleton = build_graph(n, &pairs).expect("face vertices were range-checked");
    if !skeleton.is_connected() {
        return Err(SurfaceError::Disconnected);
    }

    let chi = n as i64 - skeleton.edge_count() as i64 + faces.len() as i64;
    let kind = match chi {
        2 => SurfaceKind::Sphere,
        1 => SurfaceKind::ProjectivePlane,
        other => return Err(SurfaceError::UnsupportedSurface(other)),
    };
    Ok(Triangulation {
        n,
        faces,
        skeleton,
        kind,
    })
}

fn link_is_single_cycle(sides: &[(VertexId, VertexId)]) -> bool {
    if sides.len() < 3 {
        return false;
    }
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(a, b) in sides {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|nb| nb.len() != 2) {
        return false;
    }
    // walk the cycle from the first vertex; it must cover every side
    let start = *adj.keys().next().unwrap();
    let (mut prev, mut cur) = (start, adj[&start][0]);
    let mut steps = 1;
    while cur != start {
        let nb = &adj[&cur];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
        steps += 1;
        if steps > sides.len() {
            return false;
        }
    }
    steps == sides.len()
}

pub fn classify_surface(t: &Triangulation) -> SurfaceKind {
    t.kind()
}

/// Face count forced by Euler's formula: `2n - 4` on the sphere, `2n - 2` on
/// the projective plane.
pub fn face_count_expected(n: usize, kind: SurfaceKind) -> Result<usize, SurfaceError> {
    let min = kind.min_vertices();
    if n < min {
        return Err(SurfaceError::TooFewVertices { kind, n, min });
    }
    Ok(match kind {
        SurfaceKind::Sphere => 2 * n - 4,
        SurfaceKind::ProjectivePlane => 2 * n - 2,
    })
}

/// Puts a new vertex `n + 1` inside `face` and joins it to the three corners.
///
/// The subdivided face is removed from the list and the three new faces are
/// appended, so all other faces keep their relative order.
pub fn subdivide_face(t: &Triangulation, face: Face) -> Result<Triangulation, SurfaceError> {
    let pos = t
        .faces
        .iter()
        .position(|&f| f == face)
        .ok_or(SurfaceError::NotAFace { face })?;
    let u = t.n + 1;
    let [a, b, c] = face.vertices().map(VertexId::get);
    let mut faces = t.faces.clone();
    faces.remove(pos);
    faces.push(Face::new(u, a, b)?);
    faces.push(Face::new(u, b, c)?);
    faces.push(Face::new(u, a, c)?);
    validate_triangulation(u, faces)
}
