//! Laplacian spectra of metric graphs with natural vertex conditions.
//!
//! Three routes are available:
//!
//! * [`von_below_spectrum`] for equilateral graphs, from the normalized
//!   Laplacian of the combinatorial graph via λ = arccos(1 − α)²/ℓ²;
//! * [`subdivision_spectrum`] for commensurable lengths, which inserts
//!   dummy vertices at mesh `h` and applies the same formula;
//! * [`fd_spectrum`], a finite-difference discretisation with Richardson
//!   extrapolation, for arbitrary real lengths.
//!
//! Only the principal arccos branch is used, so the exact routes certify
//! eigenvalues strictly below (π/h)².

use std::f64::consts::PI;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::MetricGraph;
use crate::length::{rational_gcd, Length};
use crate::linalg::{cholesky, cholesky_solve, eigen_sym, tolerance, SymmetricMatrix};
use crate::weighted::{normalized_spectrum, WeightedGraph};

/// Refined graphs above this size are not handed to the dense solver.
pub const SUBDIVISION_VERTEX_CAP: usize = 400;
/// Relative Richardson disagreement accepted by [`fd_spectrum`].
pub const FD_TOLERANCE: f64 = 1e-3;
/// Target node count of the coarse finite-difference mesh chosen by [`spectrum`].
const FD_TARGET_NODES: f64 = 2000.0;
// α this close to 2 counts as the branch endpoint
const BRANCH_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMethod {
    VonBelow,
    Subdivision,
    FiniteDifference,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumResult {
    /// λ₁ ≤ λ₂ ≤ …, as many as requested.
    pub eigenvalues: Vec<f64>,
    pub method: OracleMethod,
    /// Largest value the method vouches for.
    pub validity_threshold: f64,
    /// Mesh width `h` for the exact routes, points per unit length for FD.
    pub mesh: String,
    /// Absolute error estimate; the eigensolver tolerance for exact routes.
    pub error_estimate: f64,
}

impl SpectrumResult {
    /// One-based access, λ_i.
    pub fn nth(&self, i: usize) -> f64 {
        self.eigenvalues[i - 1]
    }
}

fn arccos_branch(alpha: &[f64], ell: f64) -> Vec<f64> {
    alpha
        .iter()
        .filter(|&&a| a < 2.0 - BRANCH_EPS)
        .map(|&a| (1.0 - a.clamp(0.0, 2.0)).acos().powi(2) / (ell * ell))
        .collect()
}

/// von Below's formula on a graph whose edges all have length `ℓ`.
pub fn von_below_spectrum(g: &MetricGraph, count: usize) -> Result<SpectrumResult> {
    let ell = g.common_length().ok_or(Error::NotEquilateral)?;
    let gamma =
        WeightedGraph::new(g.vertex_count(), g.edges.iter().map(|e| (e.ends[0], e.ends[1], Length::integer(1))))?;
    let alpha = normalized_spectrum(&gamma, tolerance())?;
    let ell_f = ell.to_f64();
    let values = arccos_branch(&alpha.values, ell_f);
    if count > values.len() {
        return Err(Error::CountExceedsBranch { requested: count, available: values.len() });
    }
    Ok(SpectrumResult {
        eigenvalues: values[..count].to_vec(),
        method: OracleMethod::VonBelow,
        validity_threshold: (PI / ell_f).powi(2),
        mesh: ell.to_string(),
        error_estimate: alpha.residual.max(tolerance()),
    })
}

/// Combinatorial graph of the equilateral refinement at mesh `h`.
fn refine(g: &MetricGraph, h: &Length) -> Result<WeightedGraph> {
    let mut n = g.vertex_count();
    let mut edges = Vec::new();
    for e in &g.edges {
        let k = e.length.multiple_of(h).filter(|&k| k > 0).ok_or_else(|| {
            Error::IncommensurableLengths(format!("edge {} of length {} is not a multiple of {}", e.id, e.length, h))
        })? as usize;
        let mut prev = e.ends[0];
        for _ in 1..k {
            edges.push((prev, n, Length::integer(1)));
            prev = n;
            n += 1;
        }
        edges.push((prev, e.ends[1], Length::integer(1)));
    }
    WeightedGraph::new(n, edges)
}

fn refined_vertex_count(g: &MetricGraph, h: &Length) -> Option<usize> {
    let mut n = g.vertex_count();
    for e in &g.edges {
        n += e.length.multiple_of(h)? as usize - 1;
    }
    Some(n)
}

/// Exact spectrum below (π/h)² by subdividing every edge at mesh `h`.
pub fn subdivision_spectrum(g: &MetricGraph, h: &Length, count: usize) -> Result<SpectrumResult> {
    if !h.is_positive_finite() || !h.is_exact() {
        return Err(Error::BadParameter(format!("mesh must be a positive rational, got {h}")));
    }
    let gamma = refine(g, h)?;
    let alpha = normalized_spectrum(&gamma, tolerance())?;
    let hf = h.to_f64();
    let threshold = (PI / hf).powi(2);
    let values = arccos_branch(&alpha.values, hf);
    if count > values.len() {
        return Err(Error::ThresholdExceeded { requested: count, available: values.len(), threshold });
    }
    Ok(SpectrumResult {
        eigenvalues: values[..count].to_vec(),
        method: OracleMethod::Subdivision,
        validity_threshold: threshold,
        mesh: h.to_string(),
        error_estimate: alpha.residual.max(tolerance()),
    })
}

/// Largest mesh dividing every edge length, if all lengths are rational.
pub fn gcd_mesh(g: &MetricGraph) -> Option<Length> {
    let exact: Option<Vec<_>> = g.edges.iter().map(|e| e.length.as_exact()).collect();
    rational_gcd(exact?).map(Length::from)
}

/// Subdivision at the gcd of the edge lengths, halved until `count`
/// eigenvalues lie below the threshold.
pub fn subdivision_auto(g: &MetricGraph, count: usize) -> Result<SpectrumResult> {
    let mut h = gcd_mesh(g).ok_or_else(|| Error::IncommensurableLengths("edge lengths are not all rational".into()))?;
    loop {
        let size = refined_vertex_count(g, &h).unwrap_or(usize::MAX);
        if size > SUBDIVISION_VERTEX_CAP {
            return Err(Error::TooLarge { vertices: size, cap: SUBDIVISION_VERTEX_CAP });
        }
        match subdivision_spectrum(g, &h, count) {
            Err(Error::ThresholdExceeded { .. }) => h = h.half(),
            other => return other,
        }
    }
}

/// Exact route when the lengths allow it, finite differences otherwise.
pub fn spectrum(g: &MetricGraph, count: usize) -> Result<SpectrumResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match subdivision_auto(g, count) {
        Err(Error::IncommensurableLengths(_)) | Err(Error::TooLarge { .. }) => {
            let ppu = (FD_TARGET_NODES / g.total_length().to_f64()).max(8.0);
            fd_spectrum(g, ppu, count)
        }
        other => other,
    }
}

/// Closed-form spectral gaps.
#[derive(Clone, Debug, PartialEq)]
pub enum AnalyticKind {
    Cycle(f64),
    Path(f64),
    EquilateralPumpkin { m: usize, ell: f64 },
}

impl FromStr for AnalyticKind {
    type Err = Error;

    /// `cycle:L`, `path:L` or `pumpkin:m:ℓ`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownKind(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| x.parse::<f64>().ok().filter(|v| *v > 0.0 && v.is_finite()).ok_or_else(unknown);
        match parts[..] {
            ["cycle", l] => Ok(AnalyticKind::Cycle(num(l)?)),
            ["path", l] => Ok(AnalyticKind::Path(num(l)?)),
            ["pumpkin" | "equilateral_pumpkin", m, l] => {
                Ok(AnalyticKind::EquilateralPumpkin { m: m.parse().map_err(|_| unknown())?, ell: num(l)? })
            }
            _ => Err(unknown()),
        }
    }
}

pub fn analytic_gap(kind: &AnalyticKind) -> f64 {
    match *kind {
        AnalyticKind::Cycle(l) => 4.0 * PI * PI / (l * l),
        AnalyticKind::Path(l) => PI * PI / (l * l),
        // every eigenfunction of a pumpkin with m ≥ 2 equal edges is either
        // symmetric (interval) or vanishes at both ends
        AnalyticKind::EquilateralPumpkin { ell, .. } => PI * PI / (ell * ell),
    }
}

struct FdEdge {
    a: usize,
    b: usize,
    segments: usize,
    h: f64,
    /// Index of the first interior node.
    offset: usize,
}

/// Lumped-mass P1 discretisation: K = Σ (u_p − u_q)²/h per segment, M
/// diagonal. Continuity is built in and the natural Kirchhoff condition is
/// the variational one.
struct FdMesh {
    vertices: usize,
    edges: Vec<FdEdge>,
    size: usize,
    mass: Vec<f64>,
}

impl FdMesh {
    fn new(g: &MetricGraph, segments: &[usize]) -> Self {
        let mut size = g.vertex_count();
        let mut edges = Vec::with_capacity(g.edge_count());
        for (e, &k) in g.edges.iter().zip(segments) {
            edges.push(FdEdge {
                a: e.ends[0],
                b: e.ends[1],
                segments: k,
                h: e.length.to_f64() / k as f64,
                offset: size,
            });
            size += k - 1;
        }
        let mut mass = vec![0.0; size];
        for e in &edges {
            mass[e.a] += e.h / 2.0;
            mass[e.b] += e.h / 2.0;
            for i in 0..e.segments - 1 {
                mass[e.offset + i] = e.h;
            }
        }
        FdMesh { vertices: g.vertex_count(), edges, size, mass }
    }

    /// Node indices along an edge, from `a` to `b`.
    fn node(&self, e: &FdEdge, i: usize) -> usize {
        if i == 0 {
            e.a
        } else if i == e.segments {
            e.b
        } else {
            e.offset + i - 1
        }
    }

    fn apply_k(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.size];
        for e in &self.edges {
            let w = 1.0 / e.h;
            for i in 0..e.segments {
                let (p, q) = (self.node(e, i), self.node(e, i + 1));
                let d = w * (x[p] - x[q]);
                y[p] += d;
                y[q] -= d;
            }
        }
        y
    }

    fn dense_k(&self) -> SymmetricMatrix {
        let mut k = SymmetricMatrix::zeros(self.size);
        for e in &self.edges {
            let w = 1.0 / e.h;
            for i in 0..e.segments {
                let (p, q) = (self.node(e, i), self.node(e, i + 1));
                k.set(p, p, k.get(p, p) + w);
                k.set(q, q, k.get(q, q) + w);
                let off = k.get(p, q) - w;
                k.set_sym(p, q, off);
            }
        }
        k
    }

    fn max_h(&self) -> f64 {
        self.edges.iter().map(|e| e.h).fold(0.0, f64::max)
    }
}

/// Solver for (K + sM) y = f: edge interiors are eliminated by tridiagonal
/// solves, leaving a dense Schur complement on the original vertices.
struct ShiftedSolver<'a> {
    mesh: &'a FdMesh,
    shift: f64,
    /// T⁻¹ e_first and T⁻¹ e_last per edge (empty without interior nodes).
    ends: Vec<(Vec<f64>, Vec<f64>)>,
    schur: SymmetricMatrix,
}

impl<'a> ShiftedSolver<'a> {
    fn new(mesh: &'a FdMesh, shift: f64) -> Result<Self> {
        let nv = mesh.vertices;
        let mut s = SymmetricMatrix::zeros(nv);
        for v in 0..nv {
            s.set(v, v, shift * mesh.mass[v]);
        }
        let mut ends = Vec::with_capacity(mesh.edges.len());
        for e in &mesh.edges {
            let w = 1.0 / e.h;
            s.set(e.a, e.a, s.get(e.a, e.a) + w);
            s.set(e.b, e.b, s.get(e.b, e.b) + w);
            let r = e.segments - 1;
            if r == 0 {
                let off = s.get(e.a, e.b) - w;
                s.set_sym(e.a, e.b, off);
                ends.push((Vec::new(), Vec::new()));
                continue;
            }
            let mut first = vec![0.0; r];
            first[0] = 1.0;
            let mut last = vec![0.0; r];
            last[r - 1] = 1.0;
            thomas(e, shift, &mut first);
            thomas(e, shift, &mut last);
            let w2 = w * w;
            s.set(e.a, e.a, s.get(e.a, e.a) - w2 * first[0]);
            s.set(e.b, e.b, s.get(e.b, e.b) - w2 * last[r - 1]);
            let off = s.get(e.a, e.b) - w2 * first[r - 1];
            s.set_sym(e.a, e.b, off);
            ends.push((first, last));
        }
        let schur = cholesky(&s).ok_or(Error::NoConvergence(0))?;
        Ok(ShiftedSolver { mesh, shift, ends, schur })
    }

    fn solve(&self, f: &[f64]) -> Vec<f64> {
        let mesh = self.mesh;
        let mut y = f.to_vec();
        let mut rhs = f[..mesh.vertices].to_vec();
        for e in &mesh.edges {
            let r = e.segments - 1;
            if r == 0 {
                continue;
            }
            let z = &mut y[e.offset..e.offset + r];
            thomas(e, self.shift, z);
            rhs[e.a] += z[0] / e.h;
            rhs[e.b] += z[r - 1] / e.h;
        }
        cholesky_solve(&self.schur, &mut rhs);
        y[..mesh.vertices].copy_from_slice(&rhs);
        for (e, (first, last)) in mesh.edges.iter().zip(&self.ends) {
            let r = e.segments - 1;
            let (ca, cb) = (rhs[e.a] / e.h, rhs[e.b] / e.h);
            for i in 0..r {
                y[e.offset + i] += ca * first[i] + cb * last[i];
            }
        }
        y
    }
}

/// In-place solve with the interior block of one edge: diagonal
/// 2/h + s·h, off-diagonal −1/h.
fn thomas(e: &FdEdge, shift: f64, b: &mut [f64]) {
    let r = b.len();
    let diag = 2.0 / e.h + shift * e.h;
    let off = -1.0 / e.h;
    let mut c = vec![0.0; r];
    let mut denom = diag;
    c[0] = off / denom;
    b[0] /= denom;
    for i in 1..r {
        denom = diag - off * c[i - 1];
        c[i] = off / denom;
        b[i] = (b[i] - off * b[i - 1]) / denom;
    }
    for i in (0..r.saturating_sub(1)).rev() {
        b[i] -= c[i] * b[i + 1];
    }
}

fn m_dot(mass: &[f64], x: &[f64], y: &[f64]) -> f64 {
    mass.iter().zip(x).zip(y).map(|((m, a), b)| m * a * b).sum()
}

/// Modified Gram–Schmidt in the M inner product, run twice. Columns that
/// collapse are replaced by fresh random vectors.
fn m_orthonormalize(mass: &[f64], cols: &mut [Vec<f64>], rng: &mut StdRng) {
    for k in 0..cols.len() {
        for attempt in 0..3 {
            for _ in 0..2 {
                for j in 0..k {
                    let proj = m_dot(mass, &cols[k], &cols[j]);
                    let (head, tail) = cols.split_at_mut(k);
                    for (x, y) in tail[0].iter_mut().zip(&head[j]) {
                        *x -= proj * y;
                    }
                }
            }
            let norm = m_dot(mass, &cols[k], &cols[k]).sqrt();
            if norm > 1e-10 || attempt == 2 {
                cols[k].iter_mut().for_each(|x| *x /= norm);
                break;
            }
            cols[k].iter_mut().for_each(|x| *x = rng.random::<f64>() - 0.5);
        }
    }
}

/// The `count` smallest eigenvalues of K u = λ M u.
fn fd_eigenvalues(mesh: &FdMesh, count: usize, scale: f64) -> Result<Vec<f64>> {
    let n = mesh.size;
    if count > n {
        return Err(Error::ThresholdExceeded { requested: count, available: n, threshold: f64::INFINITY });
    }
    if n <= 200 {
        fd_dense(mesh, count)
    } else {
        fd_iterative(mesh, count, scale)
    }
}

fn fd_dense(mesh: &FdMesh, count: usize) -> Result<Vec<f64>> {
    let n = mesh.size;
    let k = mesh.dense_k();
    let mut a = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            a.set(i, j, k.get(i, j) / (mesh.mass[i] * mesh.mass[j]).sqrt());
        }
    }
    let (values, _) = eigen_sym(&a, tolerance())?;
    Ok(values.into_iter().take(count).map(|v| v.max(0.0)).collect())
}

/// Shift-invert block subspace iteration with Rayleigh–Ritz projection.
fn fd_iterative(mesh: &FdMesh, count: usize, scale: f64) -> Result<Vec<f64>> {
    let n = mesh.size;
    let p = (count + (count / 2).max(6)).min(n);
    let solver = ShiftedSolver::new(mesh, scale)?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut x: Vec<Vec<f64>> = (0..p).map(|_| (0..n).map(|_| rng.random::<f64>() - 0.5).collect()).collect();
    m_orthonormalize(&mesh.mass, &mut x, &mut rng);
    let mut previous = vec![f64::INFINITY; count];
    for _ in 0..2000 {
        let mut y: Vec<Vec<f64>> = x
            .iter()
            .map(|col| {
                let f: Vec<f64> = col.iter().zip(&mesh.mass).map(|(a, m)| a * m).collect();
                solver.solve(&f)
            })
            .collect();
        m_orthonormalize(&mesh.mass, &mut y, &mut rng);
        let ky: Vec<Vec<f64>> = y.iter().map(|col| mesh.apply_k(col)).collect();
        let mut proj = SymmetricMatrix::zeros(p);
        for i in 0..p {
            for j in i..p {
                let v: f64 = y[i].iter().zip(&ky[j]).map(|(a, b)| a * b).sum();
                proj.set_sym(i, j, v);
            }
        }
        // restore exact symmetry lost to rounding
        for i in 0..p {
            for j in i + 1..p {
                let avg = 0.5 * (proj.get(i, j) + proj.get(j, i));
                proj.set_sym(i, j, avg);
            }
        }
        let (theta, w) = eigen_sym(&proj, tolerance())?;
        x = w.iter().map(|wk| (0..n).map(|r| (0..p).map(|c| wk[c] * y[c][r]).sum()).collect()).collect();
        let change = theta
            .iter()
            .zip(&previous)
            .take(count)
            .map(|(t, o)| (t - o).abs() / t.abs().max(scale))
            .fold(0.0, f64::max);
        previous = theta[..count].to_vec();
        if change < 1e-11 {
            return Ok(previous.into_iter().map(|v| v.max(0.0)).collect());
        }
    }
    Err(Error::NoConvergence(2000))
}

/// Finite differences at `points_per_unit` and twice that density,
/// combined by Richardson extrapolation.
pub fn fd_spectrum(g: &MetricGraph, points_per_unit: f64, count: usize) -> Result<SpectrumResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(e) = g.edges.iter().find(|e| e.is_loop()) {
        return Err(Error::LoopPresent(e.ends[0]));
    }
    if !(points_per_unit.is_finite() && points_per_unit > 0.0) {
        return Err(Error::BadParameter(format!("points per unit length must be positive, got {points_per_unit}")));
    }
    let coarse: Vec<usize> =
        g.edges.iter().map(|e| ((e.length.to_f64() * points_per_unit - 1e-9).ceil() as usize).max(1)).collect();
    let fine: Vec<usize> = coarse.iter().map(|k| 2 * k).collect();
    let (mc, mf) = (FdMesh::new(g, &coarse), FdMesh::new(g, &fine));
    let total = g.total_length().to_f64();
    let scale = (PI / total).powi(2);
    let lc = fd_eigenvalues(&mc, count, scale)?;
    let lf = fd_eigenvalues(&mf, count, scale)?;
    let threshold = (PI / (8.0 * mc.max_h())).powi(2);
    let mut values = Vec::with_capacity(count);
    let mut error: f64 = 0.0;
    for (c, f) in lc.iter().zip(&lf) {
        let disagreement = (f - c).abs() / f.abs().max(scale);
        if disagreement > FD_TOLERANCE {
            return Err(Error::MeshTooCoarse { disagreement, tolerance: FD_TOLERANCE });
        }
        values.push(((4.0 * f - c) / 3.0).max(0.0));
        error = error.max((f - c).abs() / 3.0);
    }
    if let Some(&top) = values.last() {
        if top > threshold {
            let available = values.iter().filter(|&&v| v <= threshold).count();
            return Err(Error::ThresholdExceeded { requested: count, available, threshold });
        }
    }
    Ok(SpectrumResult {
        eigenvalues: values,
        method: OracleMethod::FiniteDifference,
        validity_threshold: threshold,
        mesh: format!("{points_per_unit}"),
        error_estimate: error,
    })
}

/// Whether `h` divides every edge length; used to pick meshes in tests and
/// the command line.
pub fn mesh_fits(g: &MetricGraph, h: &Length) -> bool {
    g.edges.iter().all(|e| e.length.multiple_of(h).is_some_and(|k| k > 0))
}

/// `1/2^k` as a [`Length`].
pub fn dyadic(k: u32) -> Length {
    (0..k).fold(Length::integer(1), |h, _| h.half())
}
