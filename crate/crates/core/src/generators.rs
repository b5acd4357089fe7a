//! Catalog triangulations and extremal non-rainbow colorings.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::search::{bound, chi_f, SearchBudget, SearchError};
use crate::surface::{subdivide_face, validate_triangulation, Face, SurfaceError, SurfaceKind, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{what} needs {min} or more, got {got}")]
    TooSmall { what: &'static str, got: usize, min: usize },
    #[error("subdivision step {step}: face index {index} out of range ({faces} faces)")]
    InvalidFaceChoice { step: usize, index: usize, faces: usize },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

fn from_triples(n: usize, triples: &[[usize; 3]]) -> Triangulation {
    let faces = triples
        .iter()
        .map(|&[a, b, c]| Face::new(a, b, c).expect("catalog faces are triples"))
        .collect();
    validate_triangulation(n, faces).expect("catalog triangulations are valid")
}

pub fn tetrahedron() -> Triangulation {
    from_triples(4, &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
}

/// Poles 1 and 6 over the equator 2-3-4-5.
pub fn octahedron() -> Triangulation {
    let mut faces = Vec::new();
    for i in 0..4 {
        let (a, b) = (2 + i, 2 + (i + 1) % 4);
        faces.push([1, a, b]);
        faces.push([6, a, b]);
    }
    from_triples(6, &faces)
}

/// Vertex 1 on top, rings 2..=6 and 7..=11, vertex 12 at the bottom.
pub fn icosahedron() -> Triangulation {
    let upper = |i: usize| 2 + i % 5;
    let lower = |i: usize| 7 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push([1, upper(i), upper(i + 1)]);
        faces.push([upper(i), upper(i + 1), lower(i)]);
        faces.push([lower(i), lower(i + 1), upper(i + 1)]);
        faces.push([12, lower(i), lower(i + 1)]);
    }
    from_triples(12, &faces)
}

/// Equator cycle `1..=q` with apexes `q + 1` and `q + 2`.
pub fn bipyramid(q: usize) -> Result<Triangulation, GeneratorError> {
    if q < 3 {
        return Err(GeneratorError::TooSmall { what: "bipyramid equator", got: q, min: 3 });
    }
    let mut faces = Vec::new();
    for i in 0..q {
        let (a, b) = (1 + i, 1 + (i + 1) % q);
        faces.push([a, b, q + 1]);
        faces.push([a, b, q + 2]);
    }
    Ok(from_triples(q + 2, &faces))
}

/// Subdivides faces of `base` until it has `n` vertices. Step `i` subdivides
/// the face at position `choices[i]` of the current face list, or position 0
/// once `choices` runs out.
fn grow(base: Triangulation, n: usize, choices: &[usize]) -> Result<Triangulation, GeneratorError> {
    let mut t = base;
    let steps = n - t.vertex_count();
    for step in 0..steps {
        let index = choices.get(step).copied().unwrap_or(0);
        let face = *t.faces().get(index).ok_or(GeneratorError::InvalidFaceChoice {
            step,
            index,
            faces: t.face_count(),
        })?;
        t = subdivide_face(&t, face)?;
    }
    Ok(t)
}

/// Stacked sphere triangulation: the tetrahedron after `n - 4` subdivisions.
pub fn stacked(n: usize, face_choices: &[usize]) -> Result<Triangulation, GeneratorError> {
    if n < 4 {
        return Err(GeneratorError::TooSmall { what: "stacked triangulation", got: n, min: 4 });
    }
    grow(tetrahedron(), n, face_choices)
}

/// `K6` embedded in the projective plane (the hemi-icosahedron): the wheel
/// around vertex 1 on the rim 2-3-4-5-6, closed by five faces that cross
/// the cross-cap.
pub fn projective_base() -> Triangulation {
    from_triples(
        6,
        &[
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
        ],
    )
}

/// The projective base after `n - 6` subdivisions.
pub fn projective_family(n: usize, face_choices: &[usize]) -> Result<Triangulation, GeneratorError> {
    if n < 6 {
        return Err(GeneratorError::TooSmall { what: "projective triangulation", got: n, min: 6 });
    }
    grow(projective_base(), n, face_choices)
}

/// How an extremal witness was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// Base triangulation on `base_vertices` vertices, one color, plus one
    /// fresh color per subdivided face.
    Subdivision { base_vertices: usize, subdivided: Vec<Face> },
    /// Hand-picked coloring of a small catalog triangulation.
    Explicit,
    /// Exact search; the witness has χ_f colors, which may fall short of the
    /// bound.
    Search { tight: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalWitness {
    pub triangulation: Triangulation,
    pub coloring: Coloring,
    pub colors: usize,
    pub bound: usize,
    pub construction: Construction,
}

/// A triangulation on `n` vertices with a non-rainbow coloring using as
/// many colors as the bound allows.
///
/// When the base for the subdivision scheme would be too small to be a
/// simple triangulation, small spheres get explicit witnesses and
/// projective planes with `n <= 13` fall back to exact search on
/// [`projective_family`].
pub fn extremal(n: usize, kind: SurfaceKind, b: &SearchBudget) -> Result<ExtremalWitness, GeneratorError> {
    let min = kind.min_vertices();
    if n < min {
        return Err(GeneratorError::TooSmall { what: "extremal construction", got: n, min });
    }
    let colors = bound(n, kind)?;
    let base_vertices = n - colors + 1;

    if base_vertices >= min {
        let base = match kind {
            SurfaceKind::Sphere => stacked(base_vertices, &[])?,
            SurfaceKind::ProjectivePlane => projective_family(base_vertices, &[])?,
        };
        // distinct base faces; nesting would put two fresh colors on one face
        let subdivided: Vec<Face> = base.faces()[..colors - 1].to_vec();
        let mut t = base;
        for &face in &subdivided {
            t = subdivide_face(&t, face)?;
        }
        let raw: Vec<usize> = (1..=n).map(|v| v.saturating_sub(base_vertices)).collect();
        let coloring = Coloring::from_raw(&raw);
        return Ok(ExtremalWitness {
            triangulation: t,
            colors: coloring.k(),
            coloring,
            bound: colors,
            construction: Construction::Subdivision { base_vertices, subdivided },
        });
    }

    match (kind, n) {
        (SurfaceKind::Sphere, 4) => Ok(ExtremalWitness {
            triangulation: tetrahedron(),
            coloring: Coloring::from_raw(&[1, 1, 1, 2]),
            colors: 2,
            bound: colors,
            construction: Construction::Explicit,
        }),
        (SurfaceKind::Sphere, 5) => Ok(ExtremalWitness {
            triangulation: bipyramid(3)?,
            coloring: Coloring::from_raw(&[1, 1, 1, 2, 3]),
            colors: 3,
            bound: colors,
            construction: Construction::Explicit,
        }),
        (SurfaceKind::ProjectivePlane, _) => {
            let t = projective_family(n, &[])?;
            let report = chi_f(&t, b)?;
            Ok(ExtremalWitness {
                triangulation: t,
                colors: report.chi_f,
                coloring: report.witness,
                bound: colors,
                construction: Construction::Search { tight: report.tight },
            })
        }
        (SurfaceKind::Sphere, _) => unreachable!("sphere bases exist from n = 6 on"),
    }
}
