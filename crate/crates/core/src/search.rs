//! Exact search over set partitions of the vertex set.
//!
//! Partitions are enumerated as restricted growth strings in vertex order:
//! vertex 1 gets block 0 and every later vertex either joins an existing
//! block or opens the next one. Each partition is visited once, so color
//! relabelings never have to be filtered out, and the first hit of a
//! depth-first run is the lexicographically smallest one.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::graph::{fundamental_cycles, spanning_tree, MultiGraph};
use crate::homology::{is_null_coloring, HomologyError};
use crate::surface::{SurfaceKind, Triangulation};

/// Limits on an exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Inputs with more vertices are refused outright.
    pub max_vertices: usize,
    /// Cap on assignments tried over one top-level call; `None` is unlimited.
    pub max_nodes: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 64,
            max_nodes: None,
        }
    }
}

impl SearchBudget {
    pub fn with_max_nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(max_nodes),
            ..SearchBudget::default()
        }
    }
}

/// Where the χ_f descent starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Descent {
    /// At the proven upper bound. Cannot see a violation of the bound.
    #[default]
    FromBound,
    /// At `n`, so a coloring beating the bound would be found.
    FromVertexCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("{n} vertices exceeds the search limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("the bound is defined for n >= 4, got {0}")]
    BoundUndefined(usize),
    #[error("cannot ask for {k} colors on {n} vertices")]
    InvalidTarget { k: usize, n: usize },
    #[error("coloring is not a null coloring")]
    NotNull,
    #[error("bound violated: chi_f = {} exceeds {}", .0.chi_f, .0.bound)]
    BoundViolation(Box<BoundReport>),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// Result of computing χ_f for one triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub faces: usize,
    pub kind: SurfaceKind,
    pub chi_f: usize,
    pub witness: Coloring,
    pub bound: usize,
    pub tight: bool,
}

/// Upper bound on the colors of a non-rainbow coloring:
/// `⌊(2n-1)/3⌋` on the sphere, `⌊(2n+1)/3⌋` on the projective plane.
pub fn bound(n: usize, kind: SurfaceKind) -> Result<usize, SearchError> {
    if n < 4 {
        return Err(SearchError::BoundUndefined(n));
    }
    Ok(match kind {
        SurfaceKind::Sphere => (2 * n - 1) / 3,
        SurfaceKind::ProjectivePlane => (2 * n + 1) / 3,
    })
}

/// A pruning rule checked each time a vertex is assigned; `assigned` holds
/// the blocks of vertices `0..=v`.
trait PartialCheck {
    fn accepts(&self, assigned: &[u32], v: usize) -> bool;
}

#[cfg(test)]
struct NoCheck;

#[cfg(test)]
impl PartialCheck for NoCheck {
    fn accepts(&self, _: &[u32], _: usize) -> bool {
        true
    }
}

/// Rejects as soon as a face with all corners assigned is rainbow.
struct RainbowCheck {
    // for each vertex, the other two corners of faces whose last corner it is
    closing: Vec<Vec<(usize, usize)>>,
}

impl RainbowCheck {
    fn new(t: &Triangulation) -> Self {
        let mut closing = vec![Vec::new(); t.vertex_count()];
        for f in t.faces() {
            let [a, b, c] = f.vertices().map(|v| v.index());
            closing[c].push((a, b));
        }
        RainbowCheck { closing }
    }
}

impl PartialCheck for RainbowCheck {
    fn accepts(&self, assigned: &[u32], v: usize) -> bool {
        let cv = assigned[v];
        self.closing[v].iter().all(|&(a, b)| {
            let (ca, cb) = (assigned[a], assigned[b]);
            ca == cb || ca == cv || cb == cv
        })
    }
}

/// Rejects as soon as a fundamental cycle with all vertices assigned has a
/// nonzero image chain in `K_k`. A 1-cycle of a graph is zero in homology
/// iff it is zero as a chain, so this is exactly the null condition and does
/// not depend on `k` or on a basis of `H1(K_k)`.
struct NullCheck {
    // for each vertex, the (from, to) steps of cycles whose last vertex it is
    closing: Vec<Vec<Vec<(usize, usize)>>>,
}

impl NullCheck {
    fn new(g: &MultiGraph) -> Self {
        let mut closing = vec![Vec::new(); g.vertex_count()];
        for walk in fundamental_cycles(g, &spanning_tree(g)) {
            let last = walk.vertices.iter().map(|v| v.index()).max().unwrap();
            let steps: Vec<(usize, usize)> = walk
                .steps()
                .map(|(a, b, _, _)| (a.index(), b.index()))
                .filter(|(a, b)| a != b)
                .collect();
            closing[last].push(steps);
        }
        NullCheck { closing }
    }
}

impl PartialCheck for NullCheck {
    fn accepts(&self, assigned: &[u32], v: usize) -> bool {
        let mut chain: Vec<((u32, u32), i32)> = Vec::new();
        self.closing[v].iter().all(|steps| {
            chain.clear();
            for &(a, b) in steps {
                let (ca, cb) = (assigned[a], assigned[b]);
                if ca == cb {
                    continue;
                }
                let (key, sign) = if ca < cb { ((ca, cb), 1) } else { ((cb, ca), -1) };
                match chain.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, c)) => *c += sign,
                    None => chain.push((key, sign)),
                }
            }
            chain.iter().all(|&(_, c)| c == 0)
        })
    }
}

struct Dfs<'a, C> {
    n: usize,
    check: &'a C,
    target: Option<usize>,
    nodes: &'a mut u64,
    max_nodes: Option<u64>,
    assigned: Vec<u32>,
}

impl<C: PartialCheck> Dfs<'_, C> {
    fn run<F>(&mut self, visit: &mut F) -> Result<(), SearchError>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        if self.n == 0 {
            if self.target.unwrap_or(0) == 0 {
                let _ = visit(&[]);
            }
            return Ok(());
        }
        self.step(0, 0, visit).map(|_| ())
    }

    fn step<F>(&mut self, v: usize, blocks: u32, visit: &mut F) -> Result<ControlFlow<()>, SearchError>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        let remaining = self.n - v - 1;
        let top = match self.target {
            Some(k) => blocks.min(k as u32 - 1),
            None => blocks,
        };
        for c in 0..=top {
            *self.nodes += 1;
            if self.max_nodes.is_some_and(|max| *self.nodes > max) {
                return Err(SearchError::BudgetExhausted { nodes: *self.nodes - 1 });
            }
            let used = blocks.max(c + 1);
            if let Some(k) = self.target {
                if (used as usize) + remaining < k {
                    continue;
                }
            }
            self.assigned[v] = c;
            if !self.check.accepts(&self.assigned, v) {
                continue;
            }
            let flow = if remaining == 0 {
                match self.target {
                    Some(k) if used as usize != k => ControlFlow::Continue(()),
                    _ => visit(&self.assigned),
                }
            } else {
                self.step(v + 1, used, visit)?
            };
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn to_coloring(rgs: &[u32]) -> Coloring {
    Coloring::from_raw(rgs)
}

fn check_size(n: usize, b: &SearchBudget) -> Result<(), SearchError> {
    if n > b.max_vertices {
        Err(SearchError::TooManyVertices { n, max: b.max_vertices })
    } else {
        Ok(())
    }
}

fn first_match<C: PartialCheck>(
    n: usize,
    check: &C,
    k: usize,
    nodes: &mut u64,
    b: &SearchBudget,
) -> Result<Option<Coloring>, SearchError> {
    let mut found = None;
    let mut dfs = Dfs {
        n,
        check,
        target: Some(k),
        nodes,
        max_nodes: b.max_nodes,
        assigned: vec![0; n],
    };
    dfs.run(&mut |rgs: &[u32]| {
        found = Some(to_coloring(rgs));
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// A non-rainbow coloring with exactly `k` colors, lexicographically first
/// by color sequence, or `None` if there is none.
pub fn exists_non_rainbow_k(
    t: &Triangulation,
    k: usize,
    b: &SearchBudget,
) -> Result<Option<Coloring>, SearchError> {
    let n = t.vertex_count();
    check_size(n, b)?;
    if k == 0 || k > n {
        return Err(SearchError::InvalidTarget { k, n });
    }
    first_match(n, &RainbowCheck::new(t), k, &mut 0, b)
}

/// χ_f with the default descent from the bound.
pub fn chi_f(t: &Triangulation, b: &SearchBudget) -> Result<BoundReport, SearchError> {
    chi_f_with(t, b, Descent::FromBound)
}

/// Largest `k` admitting a non-rainbow `k`-coloring, found by trying
/// `k = start, start - 1, ...` and stopping at the first success.
pub fn chi_f_with(t: &Triangulation, b: &SearchBudget, descent: Descent) -> Result<BoundReport, SearchError> {
    let n = t.vertex_count();
    check_size(n, b)?;
    let bound = bound(n, t.kind())?;
    let start = match descent {
        Descent::FromBound => bound.min(n),
        Descent::FromVertexCount => n,
    };
    let check = RainbowCheck::new(t);
    let mut nodes = 0;
    for k in (1..=start).rev() {
        if let Some(witness) = first_match(n, &check, k, &mut nodes, b)? {
            return Ok(BoundReport {
                n,
                m: t.edge_count(),
                faces: t.face_count(),
                kind: t.kind(),
                chi_f: k,
                witness,
                bound,
                tight: k == bound,
            });
        }
    }
    unreachable!("the one-color partition is always non-rainbow")
}

/// χ_f checked against the bound. Overshooting is an error carrying the
/// offending report; it can only be observed with
/// [`Descent::FromVertexCount`].
pub fn verify_bound(t: &Triangulation, b: &SearchBudget) -> Result<BoundReport, SearchError> {
    verify_bound_with(t, b, Descent::FromBound)
}

pub fn verify_bound_with(t: &Triangulation, b: &SearchBudget, descent: Descent) -> Result<BoundReport, SearchError> {
    let report = chi_f_with(t, b, descent)?;
    if report.chi_f > report.bound {
        return Err(SearchError::BoundViolation(Box::new(report)));
    }
    Ok(report)
}

/// Largest number of colors of a null coloring of `g`, with the
/// lexicographically first witness.
pub fn max_null(g: &MultiGraph, b: &SearchBudget) -> Result<(usize, Coloring), SearchError> {
    let n = g.vertex_count();
    check_size(n, b)?;
    let check = NullCheck::new(g);
    let mut nodes = 0;
    for k in (1..=n).rev() {
        if let Some(witness) = first_match(n, &check, k, &mut nodes, b)? {
            return Ok((k, witness));
        }
    }
    Ok((0, Coloring::from_raw::<u32>(&[])))
}

/// Every null coloring of `g`, in lexicographic order of color sequences.
pub fn null_colorings(g: &MultiGraph, b: &SearchBudget) -> Result<Vec<Coloring>, SearchError> {
    let n = g.vertex_count();
    check_size(n, b)?;
    let check = NullCheck::new(g);
    let mut out = Vec::new();
    let mut nodes = 0;
    let mut dfs = Dfs {
        n,
        check: &check,
        target: None,
        nodes: &mut nodes,
        max_nodes: b.max_nodes,
        assigned: vec![0; n],
    };
    dfs.run(&mut |rgs: &[u32]| {
        out.push(to_coloring(rgs));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The null colorings of `g` using the maximum number of colors.
pub fn maximal_null_colorings(g: &MultiGraph, b: &SearchBudget) -> Result<Vec<Coloring>, SearchError> {
    let all = null_colorings(g, b)?;
    let best = all.iter().map(Coloring::k).max().unwrap_or(0);
    Ok(all.into_iter().filter(|f| f.k() == best).collect())
}

/// Whether `f`, which must be null, uses as many colors as any null coloring.
pub fn is_maximal_null(g: &MultiGraph, f: &Coloring, b: &SearchBudget) -> Result<bool, SearchError> {
    if !is_null_coloring(g, f)? {
        return Err(SearchError::NotNull);
    }
    Ok(max_null(g, b)?.0 == f.k())
}

/// Every set partition of `n` vertices as a coloring, lexicographically.
pub fn all_colorings(n: usize) -> SetPartitions {
    SetPartitions {
        rgs: vec![0; n],
        done: false,
    }
}

/// Iterator over restricted growth strings of a fixed length.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Vec<Color>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let current = to_coloring(&self.rgs);
        // advance: bump the rightmost position that may grow, zero the tail
        let mut prefix_max = Vec::with_capacity(self.rgs.len());
        let mut m = 0;
        for &c in &self.rgs {
            m = m.max(c);
            prefix_max.push(m);
        }
        let bump = (1..self.rgs.len()).rev().find(|&i| self.rgs[i] <= prefix_max[i - 1]);
        match bump {
            Some(i) => {
                self.rgs[i] += 1;
                for x in &mut self.rgs[i + 1..] {
                    *x = 0;
                }
            }
            None => self.done = true,
        }
        Some(current)
    }
}

/// Null test by image chains instead of the induced matrix. Agrees with
/// [`is_null_coloring`]; this is the criterion the search prunes with.
pub fn is_null_by_chains(g: &MultiGraph, f: &Coloring) -> bool {
    let check = NullCheck::new(g);
    let assigned = f.colors();
    (0..g.vertex_count()).all(|v| check.accepts(assigned, v))
}

#[cfg(test)]
fn count_partitions(n: usize) -> usize {
    let mut count = 0;
    let mut nodes = 0;
    let mut dfs = Dfs {
        n,
        check: &NoCheck,
        target: None,
        nodes: &mut nodes,
        max_nodes: None,
        assigned: vec![0; n],
    };
    let _ = dfs.run(&mut |_: &[u32]| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}
