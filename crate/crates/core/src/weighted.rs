//! Weighted combinatorial graphs and their normalized Laplacians.
//!
//! A [`WeightedGraph`] is simple: parallel edges of a [`WeightedMultigraph`]
//! are merged by [`reduce`], summing their weights. Weights keep the exact
//! [`Length`] representation so vicinity-graph identities can be checked
//! without rounding; everything spectral runs in `f64`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::length::Length;
use crate::linalg::{eigenvalues_sym, Spectrum, SymmetricMatrix};

/// Exhaustive Cheeger enumeration refuses graphs above this many vertices.
pub const CHEEGER_CAP: usize = 22;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedMultigraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, Length)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    vertex_count: usize,
    /// Keyed by `(u, v)` with `u < v`.
    weights: BTreeMap<(usize, usize), Length>,
}

pub fn reduce(multigraph: &WeightedMultigraph) -> Result<WeightedGraph> {
    let mut weights: BTreeMap<(usize, usize), Length> = BTreeMap::new();
    for (u, v, w) in &multigraph.edges {
        if u == v {
            return Err(Error::LoopPresent(*u));
        }
        let key = (*u.min(v), *u.max(v));
        let entry = weights.entry(key).or_default();
        *entry = &*entry + w;
    }
    Ok(WeightedGraph { vertex_count: multigraph.vertex_count, weights })
}

impl WeightedGraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize, Length)>) -> Result<Self> {
        reduce(&WeightedMultigraph { vertex_count, edges: edges.into_iter().collect() })
    }

    /// Unweighted simple graph (all weights 1) on `n` vertices.
    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(u, v)| (u, v, Length::integer(1))))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Length)> {
        self.weights.iter().map(|(&(u, v), w)| (u, v, w))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&Length> {
        self.weights.get(&(u.min(v), u.max(v)))
    }

    /// Weighted degrees d_v = Σ_{e∼v} μ_e, exact when all weights are.
    pub fn degrees(&self) -> Vec<Length> {
        let mut d = vec![Length::zero(); self.vertex_count];
        for (&(u, v), w) in &self.weights {
            d[u] = &d[u] + w;
            d[v] = &d[v] + w;
        }
        d
    }

    /// Vol_μ = Σ_v d_v.
    pub fn volume(&self) -> Length {
        self.degrees().iter().sum()
    }

    pub fn neighbours(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (&(u, v), w) in &self.weights {
            let w = w.to_f64();
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        adj
    }

    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        let mut count = self.vertex_count;
        for &(u, v) in self.weights.keys() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Shortest-path diameter with edge lengths 1/μ_e.
    pub fn inverse_weight_diameter(&self) -> Result<f64> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.vertex_count;
        let mut d = vec![vec![f64::INFINITY; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = 0.0;
        }
        for (u, v, w) in self.edges() {
            let len = 1.0 / w.to_f64();
            d[u][v] = len;
            d[v][u] = len;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let c = d[i][k] + d[k][j];
                    if c < d[i][j] {
                        d[i][j] = c;
                    }
                }
            }
        }
        Ok(d.iter().flatten().copied().fold(0.0, f64::max))
    }
}

/// Λ_sym = D^{-1/2} 𝓘 M 𝓘ᵀ D^{-1/2}: unit diagonal, off-diagonal −μ_ij/√(d_i d_j).
pub fn normalized_laplacian_sym(g: &WeightedGraph) -> Result<SymmetricMatrix> {
    let degrees: Vec<f64> = g.degrees().iter().map(Length::to_f64).collect();
    if let Some(v) = degrees.iter().position(|&d| d <= 0.0) {
        return Err(Error::IsolatedVertex(v));
    }
    let mut m = SymmetricMatrix::identity(g.vertex_count());
    for (u, v, w) in g.edges() {
        m.set_sym(u, v, -w.to_f64() / (degrees[u] * degrees[v]).sqrt());
    }
    Ok(m)
}

/// Normalized Laplacian eigenvalues α₁ ≤ … ≤ α_V.
pub fn normalized_spectrum(g: &WeightedGraph, tol: f64) -> Result<Spectrum> {
    let mut s = eigenvalues_sym(&normalized_laplacian_sym(g)?, tol)?;
    // clamp round-off just outside [0, 2]
    for v in &mut s.values {
        if *v < 0.0 && *v > -1e-9 {
            *v = 0.0;
        }
        if *v > 2.0 && *v < 2.0 + 1e-9 {
            *v = 2.0;
        }
    }
    Ok(s)
}

/// h = min over S with 0 < Vol(S) ≤ Vol(G)/2 of μ(∂S)/Vol(S), by exhaustive
/// Gray-code enumeration of vertex subsets.
pub fn cheeger_constant(g: &WeightedGraph) -> Result<f64> {
    let n = g.vertex_count();
    if n > CHEEGER_CAP {
        return Err(Error::TooLarge { vertices: n, cap: CHEEGER_CAP });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n < 2 {
        return Err(Error::BadParameter("Cheeger constant needs at least two vertices".into()));
    }
    let adj = g.neighbours();
    let deg: Vec<f64> = g.degrees().iter().map(Length::to_f64).collect();
    let half = deg.iter().sum::<f64>() / 2.0;
    let slack = 1e-12 * half;
    let mut inside = vec![false; n];
    let (mut boundary, mut vol) = (0.0f64, 0.0f64);
    let mut best = f64::INFINITY;
    for step in 1u64..(1u64 << n) {
        let v = step.trailing_zeros() as usize;
        let sign = if inside[v] { -1.0 } else { 1.0 };
        for &(u, w) in &adj[v] {
            // crossing edges become internal and vice versa
            boundary += if inside[u] { -sign * w } else { sign * w };
        }
        inside[v] = !inside[v];
        vol += sign * deg[v];
        if vol > 0.0 && vol <= half + slack {
            best = best.min(boundary / vol);
        }
    }
    Ok(best.max(0.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Alpha2Sandwich {
    pub lower: f64,
    pub upper: f64,
    pub cheeger: f64,
    pub inverse_weight_diameter: f64,
    pub volume: f64,
}

/// max(h²/2, 4/(D_{μ⁻¹}·Vol_μ)) ≤ α₂ ≤ 2h.
pub fn alpha2_sandwich(g: &WeightedGraph) -> Result<Alpha2Sandwich> {
    let h = cheeger_constant(g)?;
    let diam = g.inverse_weight_diameter()?;
    let vol = g.volume().to_f64();
    Ok(Alpha2Sandwich {
        lower: (h * h / 2.0).max(4.0 / (diam * vol)),
        upper: 2.0 * h,
        cheeger: h,
        inverse_weight_diameter: diam,
        volume: vol,
    })
}

/// Lower end of the sandwich that does not need the Cheeger constant; this
/// is all that is available above [`CHEEGER_CAP`].
pub fn alpha2_diameter_lower_bound(g: &WeightedGraph) -> Result<f64> {
    let diam = g.inverse_weight_diameter()?;
    Ok(4.0 / (diam * g.volume().to_f64()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_TOL;

    fn cycle(n: usize) -> WeightedGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        WeightedGraph::unweighted(n, &edges).unwrap()
    }

    #[test]
    fn reduce_sums_parallel_weights() {
        let g = reduce(&WeightedMultigraph {
            vertex_count: 2,
            edges: vec![(0, 1, Length::integer(1)), (1, 0, Length::integer(2))],
        })
        .unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.weight(0, 1), Some(&Length::integer(3)));
    }

    #[test]
    fn reduce_four_pumpkin() {
        let g = reduce(&WeightedMultigraph { vertex_count: 2, edges: vec![(0, 1, Length::integer(1)); 4] }).unwrap();
        assert_eq!(g.weight(0, 1), Some(&Length::integer(4)));
    }

    #[test]
    fn reduce_rejects_loops() {
        let r = reduce(&WeightedMultigraph { vertex_count: 1, edges: vec![(0, 0, Length::integer(1))] });
        assert_eq!(r, Err(Error::LoopPresent(0)));
    }

    #[test]
    fn k2_laplacian() {
        let g = WeightedGraph::unweighted(2, &[(0, 1)]).unwrap();
        let m = normalized_laplacian_sym(&g).unwrap();
        assert_eq!(m.rows(), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
    }

    #[test]
    fn weighted_path_off_diagonals() {
        // d = (1, 4, 3)
        let g = WeightedGraph::new(3, [(0, 1, Length::integer(1)), (1, 2, Length::integer(3))]).unwrap();
        let m = normalized_laplacian_sym(&g).unwrap();
        assert!((m.get(0, 1) + 0.5).abs() < 1e-15);
        assert!((m.get(1, 2) + 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(m.get(0, 2), 0.0);
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = WeightedGraph::unweighted(3, &[(0, 1)]).unwrap();
        assert_eq!(normalized_laplacian_sym(&g), Err(Error::IsolatedVertex(2)));
    }

    #[test]
    fn cheeger_small_cases() {
        let k2 = WeightedGraph::unweighted(2, &[(0, 1)]).unwrap();
        assert_eq!(cheeger_constant(&k2).unwrap(), 1.0);
        assert!((cheeger_constant(&cycle(4)).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn cheeger_errors() {
        let big = cycle(CHEEGER_CAP + 1);
        assert!(matches!(cheeger_constant(&big), Err(Error::TooLarge { .. })));
        let split = WeightedGraph::unweighted(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(cheeger_constant(&split), Err(Error::Disconnected));
    }

    #[test]
    fn sandwich_k2_collapses() {
        let k2 = WeightedGraph::unweighted(2, &[(0, 1)]).unwrap();
        let s = alpha2_sandwich(&k2).unwrap();
        assert_eq!((s.lower, s.upper), (2.0, 2.0));
    }

    #[test]
    fn sandwich_c4() {
        let s = alpha2_sandwich(&cycle(4)).unwrap();
        assert!((s.lower - 0.25).abs() < 1e-15);
        assert!((s.upper - 1.0).abs() < 1e-15);
        let a2 = normalized_spectrum(&cycle(4), DEFAULT_TOL).unwrap().nth(2);
        assert!((a2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complete_graph_gap() {
        for m in 2..7usize {
            let edges: Vec<_> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
            let s = normalized_spectrum(&WeightedGraph::unweighted(m, &edges).unwrap(), DEFAULT_TOL).unwrap();
            assert!(s.values[0].abs() < 1e-12);
            for v in &s.values[1..] {
                assert!((v - m as f64 / (m as f64 - 1.0)).abs() < 1e-12);
            }
        }
    }
}
