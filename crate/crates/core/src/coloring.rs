//! Vertex colorings, rainbow faces and quotient graphs.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::graph::{build_graph, MultiGraph, VertexId};
use crate::surface::{Face, Triangulation};

/// A color label in `1..=k`.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("no color given for vertex {0}")]
    MissingVertex(usize),
    #[error("color given for vertex {vertex}, but the graph has {n} vertices")]
    ExtraVertex { vertex: usize, n: usize },
    #[error("coloring covers {got} vertices, graph has {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("colors must differ, got {0} twice")]
    SameColor(Color),
}

/// A surjective map from vertices onto `1..=k`.
///
/// Colors are normalised by order of first appearance, so vertex 1 always
/// has color 1 and the color sequence is a restricted growth string. Two
/// colorings with the same classes are therefore equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<Color>,
    k: usize,
}

impl Coloring {
    /// Relabels arbitrary color values to `1..=k`, keeping the classes.
    pub fn from_raw<T: Eq + std::hash::Hash + Copy>(raw: &[T]) -> Coloring {
        let mut relabel: HashMap<T, Color> = HashMap::new();
        let colors = raw
            .iter()
            .map(|c| {
                let next = relabel.len() as Color + 1;
                *relabel.entry(*c).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            k: relabel.len(),
        }
    }

    pub fn monochromatic(n: usize) -> Coloring {
        Coloring::from_raw(&vec![0u8; n])
    }

    pub fn all_distinct(n: usize) -> Coloring {
        Coloring::from_raw(&(0..n).collect::<Vec<_>>())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v.index()]
    }

    /// Colors in vertex order.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Color classes in color order.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut classes = vec![Vec::new(); self.k];
        for (i, &c) in self.colors.iter().enumerate() {
            classes[c as usize - 1].push(VertexId::from_index(i));
        }
        classes
    }

    pub fn check_size(&self, n: usize) -> Result<(), ColoringError> {
        if self.colors.len() == n {
            Ok(())
        } else {
            Err(ColoringError::SizeMismatch {
                got: self.colors.len(),
                expected: n,
            })
        }
    }
}

/// Builds a coloring of the vertices `1..=n` from `(vertex, raw color)`
/// pairs; every vertex must be assigned.
pub fn make_coloring<I>(n: usize, assignment: I) -> Result<Coloring, ColoringError>
where
    I: IntoIterator<Item = (usize, u64)>,
{
    let mut raw: Vec<Option<u64>> = vec![None; n];
    for (v, c) in assignment {
        if v == 0 || v > n {
            return Err(ColoringError::ExtraVertex { vertex: v, n });
        }
        raw[v - 1] = Some(c);
    }
    let raw = raw
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or(ColoringError::MissingVertex(i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coloring::from_raw(&raw))
}

fn face_colors(f: &Face, col: &Coloring) -> [Color; 3] {
    f.vertices().map(|v| col.color(v))
}

fn is_rainbow(c: [Color; 3]) -> bool {
    c[0] != c[1] && c[1] != c[2] && c[0] != c[2]
}

/// Faces whose three corners carry three distinct colors, in face order.
pub fn rainbow_faces(t: &Triangulation, f: &Coloring) -> Vec<Face> {
    t.faces()
        .iter()
        .filter(|face| is_rainbow(face_colors(face, f)))
        .copied()
        .collect()
}

pub fn is_non_rainbow(t: &Triangulation, f: &Coloring) -> bool {
    !t.faces().iter().any(|face| is_rainbow(face_colors(face, f)))
}

/// The simple graph `G/f` on the color classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    graph: MultiGraph,
}

impl QuotientGraph {
    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    /// Adjacent color pairs `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(Color, Color)> {
        self.graph
            .edges()
            .iter()
            .map(|e| (e.u.get() as Color, e.v.get() as Color))
            .collect()
    }

    pub fn is_forest(&self) -> bool {
        self.graph.is_forest()
    }
}

/// Color classes become vertices; two classes are adjacent when some edge of
/// `g` joins them. Edges inside a class and repeated class pairs are dropped.
pub fn quotient_graph(g: &MultiGraph, f: &Coloring) -> QuotientGraph {
    let pairs: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|e| {
            let (a, b) = (f.color(e.u) as usize, f.color(e.v) as usize);
            (a != b).then(|| (a.min(b), a.max(b)))
        })
        .collect();
    let pairs: Vec<_> = pairs.into_iter().collect();
    QuotientGraph {
        graph: build_graph(f.k(), &pairs).expect("colors lie in 1..=k"),
    }
}

/// Faces colored with exactly the two colors `i` and `j`.
pub fn bichromatic_face_count(
    t: &Triangulation,
    f: &Coloring,
    i: Color,
    j: Color,
) -> Result<usize, ColoringError> {
    if i == j {
        return Err(ColoringError::SameColor(i));
    }
    Ok(t.faces()
        .iter()
        .filter(|face| {
            let c = face_colors(face, f);
            c.iter().all(|&x| x == i || x == j) && c.contains(&i) && c.contains(&j)
        })
        .count())
}
