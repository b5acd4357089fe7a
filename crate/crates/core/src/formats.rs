//! Text and binary file formats.
//!
//! * triangulation files: `vertices N` followed by `face a b c` lines
//! * coloring files: `color v c` lines
//! * report lines: tab-separated χ_f summaries
//! * `planar_code`: the binary rotation-system format written by plantri
//!
//! Lines starting with `#` and blank lines are ignored in the text formats.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{make_coloring, Color, Coloring, ColoringError};
use crate::graph::VertexId;
use crate::search::BoundReport;
use crate::surface::{validate_triangulation, Face, SurfaceError, SurfaceKind, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("planar_code graph {graph}: stream ends inside the record")]
    Truncated { graph: usize },
    #[error("planar_code graph {graph}: vertex counts above 255 are not supported")]
    WideRecord { graph: usize },
    #[error("planar_code graph {graph}: vertex {vertex} lists neighbor {neighbor} outside 1..={n}")]
    BadNeighbor { graph: usize, vertex: usize, neighbor: usize, n: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Meaningful lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn number<T: std::str::FromStr>(line: usize, token: &str) -> Result<T, FormatError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected a non-negative integer, found '{token}'")))
}

/// A parsed, not yet validated, triangulation file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationFile {
    pub n: usize,
    pub faces: Vec<[usize; 3]>,
}

impl TriangulationFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut n = None;
        let mut faces = Vec::new();
        for (line, tokens) in content_lines(text) {
            match (tokens[0], n) {
                ("vertices", None) if tokens.len() == 2 => n = Some(number(line, tokens[1])?),
                ("vertices", Some(_)) => return Err(syntax(line, "second 'vertices' line")),
                ("face", Some(_)) if tokens.len() == 4 => faces.push([
                    number(line, tokens[1])?,
                    number(line, tokens[2])?,
                    number(line, tokens[3])?,
                ]),
                ("face", None) => return Err(syntax(line, "'face' before 'vertices'")),
                _ => {
                    return Err(syntax(
                        line,
                        "expected 'vertices N' or 'face a b c'",
                    ))
                }
            }
        }
        let n = n.ok_or_else(|| syntax(0, "missing 'vertices' line"))?;
        Ok(TriangulationFile { n, faces })
    }

    pub fn into_triangulation(self) -> Result<Triangulation, SurfaceError> {
        let faces = self
            .faces
            .iter()
            .map(|&[a, b, c]| Face::new(a, b, c))
            .collect::<Result<Vec<_>, _>>()?;
        validate_triangulation(self.n, faces)
    }
}

pub fn write_triangulation(t: &Triangulation) -> String {
    let mut out = format!("vertices {}\n", t.vertex_count());
    for f in t.faces() {
        writeln!(out, "face {f}").unwrap();
    }
    out
}

/// `(vertex, color)` pairs of a coloring file, in file order.
pub fn parse_coloring(text: &str) -> Result<Vec<(usize, u64)>, FormatError> {
    let mut seen = HashMap::new();
    let mut pairs = Vec::new();
    for (line, tokens) in content_lines(text) {
        if tokens.len() != 3 || tokens[0] != "color" {
            return Err(syntax(line, "expected 'color v c'"));
        }
        let v: usize = number(line, tokens[1])?;
        let c: u64 = number(line, tokens[2])?;
        if let Some(first) = seen.insert(v, line) {
            return Err(syntax(line, format!("vertex {v} already colored on line {first}")));
        }
        pairs.push((v, c));
    }
    Ok(pairs)
}

/// Parses a coloring file for a graph on `n` vertices.
pub fn read_coloring(text: &str, n: usize) -> Result<Result<Coloring, ColoringError>, FormatError> {
    Ok(make_coloring(n, parse_coloring(text)?))
}

pub fn write_coloring(f: &Coloring) -> String {
    let mut out = String::new();
    for (i, c) in f.colors().iter().enumerate() {
        writeln!(out, "color {} {c}", i + 1).unwrap();
    }
    out
}

/// One tab-separated line of a χ_f report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub faces: usize,
    pub surface: SurfaceKind,
    pub chi_f: usize,
    pub bound: usize,
    pub tight: bool,
    pub witness: Vec<Color>,
}

impl ReportLine {
    pub fn from_report(id: impl Into<String>, r: &BoundReport) -> Self {
        ReportLine {
            id: id.into(),
            n: r.n,
            m: r.m,
            faces: r.faces,
            surface: r.kind,
            chi_f: r.chi_f,
            bound: r.bound,
            tight: r.tight,
            witness: r.witness.colors().to_vec(),
        }
    }

    pub const HEADER: &'static str = "id\tn\tm\tF\tsurface\tchi_f\tbound\ttight\twitness";

    pub fn to_tsv(&self) -> String {
        let witness: Vec<String> = self.witness.iter().map(Color::to_string).collect();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.id,
            self.n,
            self.m,
            self.faces,
            self.surface,
            self.chi_f,
            self.bound,
            u8::from(self.tight),
            witness.join(",")
        )
    }

    pub fn parse(line: &str) -> Result<Self, FormatError> {
        let fields: Vec<&str> = line.trim_end_matches(['\n', '\r']).split('\t').collect();
        if fields.len() != 9 {
            return Err(syntax(1, format!("expected 9 tab-separated fields, found {}", fields.len())));
        }
        let tight = match fields[7] {
            "0" => false,
            "1" => true,
            other => return Err(syntax(1, format!("tight must be 0 or 1, found '{other}'"))),
        };
        let witness = if fields[8].is_empty() {
            Vec::new()
        } else {
            fields[8]
                .split(',')
                .map(|c| number(1, c))
                .collect::<Result<_, _>>()?
        };
        Ok(ReportLine {
            id: fields[0].to_string(),
            n: number(1, fields[1])?,
            m: number(1, fields[2])?,
            faces: number(1, fields[3])?,
            surface: fields[4].parse().map_err(|e: String| syntax(1, e))?,
            chi_f: number(1, fields[5])?,
            bound: number(1, fields[6])?,
            tight,
            witness,
        })
    }
}

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// One planar_code record: for each vertex, its neighbors in rotation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarCode {
    /// 1-based neighbor labels per vertex.
    pub rotations: Vec<Vec<usize>>,
}

/// Why a planar_code record is not a usable sphere triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error("vertex {0} lists a neighbor twice or itself")]
    NotSimple(usize),
    #[error("edge {0}-{1} appears in only one rotation")]
    Asymmetric(usize, usize),
    #[error("face of length {0} (not a triangulation)")]
    NonTriangularFace(usize),
    #[error("not a sphere triangulation: {0}")]
    Surface(#[from] SurfaceError),
    #[error("only sphere triangulations have a planar_code")]
    NotSphere,
}

/// Splits a planar_code stream into records. The header is optional.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlanarCode>, FormatError> {
    let mut rest = bytes.strip_prefix(PLANAR_CODE_HEADER).unwrap_or(bytes);
    let mut graphs = Vec::new();
    while let Some((&n, body)) = rest.split_first() {
        let graph = graphs.len() + 1;
        if n == 0 {
            return Err(FormatError::WideRecord { graph });
        }
        let n = n as usize;
        let mut rotations = Vec::with_capacity(n);
        let mut pos = 0;
        for vertex in 1..=n {
            let mut rot = Vec::new();
            loop {
                let &b = body.get(pos).ok_or(FormatError::Truncated { graph })?;
                pos += 1;
                if b == 0 {
                    break;
                }
                let neighbor = b as usize;
                if neighbor > n {
                    return Err(FormatError::BadNeighbor { graph, vertex, neighbor, n });
                }
                rot.push(neighbor);
            }
            rotations.push(rot);
        }
        graphs.push(PlanarCode { rotations });
        rest = &body[pos..];
    }
    Ok(graphs)
}

pub fn write_planar_code(graphs: &[PlanarCode], header: bool) -> Vec<u8> {
    let mut out = Vec::new();
    if header {
        out.extend_from_slice(PLANAR_CODE_HEADER);
    }
    for g in graphs {
        out.push(u8::try_from(g.rotations.len()).expect("at most 255 vertices"));
        for rot in &g.rotations {
            out.extend(rot.iter().map(|&x| x as u8));
            out.push(0);
        }
    }
    out
}

impl PlanarCode {
    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    /// Face boundaries traced through the rotation system: from the dart
    /// `u -> v` the walk continues with `v -> w`, `w` following `u` in the
    /// rotation at `v`.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>, RecordError> {
        // position of each neighbor in each rotation
        let mut position: Vec<HashMap<usize, usize>> = Vec::with_capacity(self.rotations.len());
        for (i, rot) in self.rotations.iter().enumerate() {
            let mut pos = HashMap::new();
            for (p, &x) in rot.iter().enumerate() {
                if x == i + 1 || pos.insert(x, p).is_some() {
                    return Err(RecordError::NotSimple(i + 1));
                }
            }
            position.push(pos);
        }
        for (i, rot) in self.rotations.iter().enumerate() {
            for &x in rot {
                if !position[x - 1].contains_key(&(i + 1)) {
                    return Err(RecordError::Asymmetric(i + 1, x));
                }
            }
        }

        let mut used: Vec<Vec<bool>> = self.rotations.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..self.rotations.len() {
            for p in 0..self.rotations[u].len() {
                if used[u][p] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut q) = (u, p);
                while !used[a][q] {
                    used[a][q] = true;
                    face.push(a + 1);
                    let b = self.rotations[a][q] - 1;
                    let back = position[b][&(a + 1)];
                    q = (back + 1) % self.rotations[b].len();
                    a = b;
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    pub fn to_triangulation(&self) -> Result<Triangulation, RecordError> {
        let faces = self
            .faces()?
            .into_iter()
            .map(|f| match f[..] {
                [a, b, c] => Ok(Face::new(a, b, c)?),
                _ => Err(RecordError::NonTriangularFace(f.len())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let t = validate_triangulation(self.vertex_count(), faces)?;
        if t.kind() != SurfaceKind::Sphere {
            return Err(RecordError::NotSphere);
        }
        Ok(t)
    }

    /// Rotation system of a sphere triangulation, from a coherent orientation
    /// of its faces. Each rotation starts at the smallest neighbor.
    pub fn from_triangulation(t: &Triangulation) -> Result<PlanarCode, RecordError> {
        if t.kind() != SurfaceKind::Sphere {
            return Err(RecordError::NotSphere);
        }
        let oriented = orient_faces(t).ok_or(RecordError::NotSphere)?;
        // for each vertex p and oriented face (p, a, b): b is followed by a
        let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); t.vertex_count()];
        for f in &oriented {
            for r in 0..3 {
                let (p, a, b) = (f[r], f[(r + 1) % 3], f[(r + 2) % 3]);
                succ[p - 1].insert(b, a);
            }
        }
        let rotations = succ
            .iter()
            .map(|s| {
                let start = *s.keys().next().expect("every vertex lies on a face");
                let mut rot = vec![start];
                let mut x = s[&start];
                while x != start {
                    rot.push(x);
                    x = s[&x];
                }
                rot
            })
            .collect();
        Ok(PlanarCode { rotations })
    }
}

/// Orients every face so that each edge is traversed once in each direction,
/// or `None` on a non-orientable surface.
fn orient_faces(t: &Triangulation) -> Option<Vec<[usize; 3]>> {
    let mut by_edge: HashMap<(VertexId, VertexId), Vec<usize>> = HashMap::new();
    for (i, f) in t.faces().iter().enumerate() {
        for e in f.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut oriented: Vec<Option<[usize; 3]>> = vec![None; t.face_count()];
    let mut stack = Vec::new();
    for seed in 0..t.face_count() {
        if oriented[seed].is_some() {
            continue;
        }
        oriented[seed] = Some(t.faces()[seed].vertices().map(VertexId::get));
        stack.push(seed);
        while let Some(i) = stack.pop() {
            let f = oriented[i].unwrap();
            for r in 0..3 {
                let (x, y) = (f[r], f[(r + 1) % 3]);
                let key = (VertexId::new(x.min(y)), VertexId::new(x.max(y)));
                for &j in &by_edge[&key] {
                    if j == i {
                        continue;
                    }
                    let z = t.faces()[j]
                        .vertices()
                        .map(VertexId::get)
                        .into_iter()
                        .find(|&z| z != x && z != y)
                        .unwrap();
                    // the neighbor must run along y -> x
                    let want = [y, x, z];
                    match oriented[j] {
                        None => {
                            oriented[j] = Some(want);
                            stack.push(j);
                        }
                        Some(have) => {
                            if !same_cycle(have, want) {
                                return None;
                            }
                        }
                    }
                }
            }
        }
    }
    oriented.into_iter().collect()
}

fn same_cycle(a: [usize; 3], b: [usize; 3]) -> bool {
    (0..3).any(|r| a == [b[r], b[(r + 1) % 3], b[(r + 2) % 3]])
}
