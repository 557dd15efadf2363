//! Compact metric graphs: vertices, edges with positive lengths, and an
//! optional rotation system describing a planar embedding.
//!
//! Edges are identified by index (with a user-facing label), never by their
//! endpoint pair, so parallel edges are first-class.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::length::Length;

/// One end of an edge: `end == 0` sits at `ends[0]`, `end == 1` at `ends[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge {
    pub edge: usize,
    pub end: u8,
}

impl HalfEdge {
    pub fn new(edge: usize, end: u8) -> Self {
        HalfEdge { edge, end }
    }

    pub fn reversed(self) -> Self {
        HalfEdge { edge: self.edge, end: 1 - self.end }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub id: String,
    pub ends: [usize; 2],
    pub length: Length,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    pub fn other(&self, v: usize) -> usize {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetricGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    /// Cyclic order of half-edges around each vertex, indexed like `vertices`.
    pub rotation: Option<Vec<Vec<HalfEdge>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub total_length: String,
    pub total_length_f64: f64,
    pub connected: bool,
    pub loop_edges: Vec<String>,
    pub bridge_edges: Vec<String>,
    pub bridgeless: bool,
    pub has_rotation: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphMetrics {
    pub total_length: f64,
    pub diameter: f64,
    pub bridge_total_length: f64,
    pub vertex_degrees: Vec<usize>,
    pub weighted_vertex_degrees: Vec<f64>,
}

impl MetricGraph {
    /// Builds a graph with generated labels `0..n` for vertices and `0..m` for edges.
    pub fn from_edge_list(vertex_count: usize, edges: Vec<(usize, usize, Length)>) -> Self {
        MetricGraph {
            vertices: (0..vertex_count).map(|i| i.to_string()).collect(),
            edges: edges
                .into_iter()
                .enumerate()
                .map(|(i, (u, v, length))| Edge { id: i.to_string(), ends: [u, v], length })
                .collect(),
            rotation: None,
        }
    }

    pub fn with_rotation(mut self, rotation: Vec<Vec<HalfEdge>>) -> Self {
        self.rotation = Some(rotation);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_length(&self) -> Length {
        self.edges.iter().map(|e| &e.length).sum()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Vertex at which the half-edge sits.
    pub fn tail(&self, h: HalfEdge) -> usize {
        self.edges[h.edge].ends[h.end as usize]
    }

    /// Vertex reached by walking along the half-edge.
    pub fn head(&self, h: HalfEdge) -> usize {
        self.edges[h.edge].ends[1 - h.end as usize]
    }

    /// Half-edges incident to each vertex, in edge order. A loop contributes two.
    pub fn incidence(&self) -> Vec<Vec<HalfEdge>> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.ends[0]].push(HalfEdge::new(i, 0));
            inc[e.ends[1]].push(HalfEdge::new(i, 1));
        }
        inc
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence().iter().map(Vec::len).collect()
    }

    pub fn weighted_degrees(&self) -> Vec<Length> {
        let mut deg = vec![Length::zero(); self.vertices.len()];
        for e in &self.edges {
            deg[e.ends[0]] = &deg[e.ends[0]] + &e.length;
            if !e.is_loop() {
                deg[e.ends[1]] = &deg[e.ends[1]] + &e.length;
            }
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let inc = self.incidence();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for h in &inc[v] {
                let w = self.head(*h);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Indices of bridge edges (removal disconnects their component).
    pub fn bridges(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let inc = self.incidence();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut bridges = Vec::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, edge used to enter, next incidence slot)
            let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, parent_edge, ref mut slot)) = stack.last_mut() {
                if *slot < inc[v].len() {
                    let h = inc[v][*slot];
                    *slot += 1;
                    if Some(h.edge) == parent_edge {
                        continue;
                    }
                    let w = self.head(h);
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, Some(h.edge), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(&(p, _, _)), Some(e)) = (stack.last(), parent_edge) {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push(e);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Checks positivity of lengths, endpoint indices and the rotation system.
    pub fn validate(&self) -> Result<ValidationReport> {
        for e in &self.edges {
            for &v in &e.ends {
                if v >= self.vertices.len() {
                    return Err(Error::UnknownEndpoint { edge: e.id.clone(), vertex: v.to_string() });
                }
            }
            if !e.length.is_positive_finite() {
                return Err(Error::NonpositiveLength { edge: e.id.clone(), length: e.length.to_string() });
            }
        }
        if let Some(rot) = &self.rotation {
            self.check_rotation(rot)?;
        }
        let total = self.total_length();
        let bridges = self.bridges();
        let connected = self.is_connected();
        Ok(ValidationReport {
            vertex_count: self.vertices.len(),
            edge_count: self.edges.len(),
            total_length: total.to_string(),
            total_length_f64: total.to_f64(),
            connected,
            loop_edges: self.edges.iter().filter(|e| e.is_loop()).map(|e| e.id.clone()).collect(),
            bridgeless: bridges.is_empty(),
            bridge_edges: bridges.iter().map(|&i| self.edges[i].id.clone()).collect(),
            has_rotation: self.rotation.is_some(),
        })
    }

    pub(crate) fn check_rotation(&self, rot: &[Vec<HalfEdge>]) -> Result<()> {
        if rot.len() != self.vertices.len() {
            return Err(Error::InvalidRotation {
                vertex: "*".into(),
                reason: format!("{} cyclic lists for {} vertices", rot.len(), self.vertices.len()),
            });
        }
        let inc = self.incidence();
        for (v, cyc) in rot.iter().enumerate() {
            let want: BTreeSet<HalfEdge> = inc[v].iter().copied().collect();
            let got: BTreeSet<HalfEdge> = cyc.iter().copied().collect();
            if got.len() != cyc.len() {
                return Err(Error::InvalidRotation {
                    vertex: self.vertices[v].clone(),
                    reason: "a half-edge is listed twice".into(),
                });
            }
            if let Some(extra) = got.difference(&want).next() {
                return Err(Error::InvalidRotation {
                    vertex: self.vertices[v].clone(),
                    reason: format!("half-edge {}:{} is not incident", self.edge_label(extra.edge), extra.end),
                });
            }
            if let Some(missing) = want.difference(&got).next() {
                return Err(Error::InvalidRotation {
                    vertex: self.vertices[v].clone(),
                    reason: format!("half-edge {}:{} is missing", self.edge_label(missing.edge), missing.end),
                });
            }
        }
        Ok(())
    }

    fn edge_label(&self, e: usize) -> &str {
        self.edges.get(e).map(|e| e.id.as_str()).unwrap_or("?")
    }

    /// Replaces each loop of length ℓ by two edges of length ℓ/2 through a
    /// fresh vertex. Non-loop edges keep their index and label.
    pub fn split_loops(&self) -> MetricGraph {
        if !self.edges.iter().any(Edge::is_loop) {
            return self.clone();
        }
        let mut g = self.clone();
        // (loop edge index, new edge index) for rotation rewriting
        let mut rewired = Vec::new();
        for i in 0..self.edges.len() {
            if !self.edges[i].is_loop() {
                continue;
            }
            let v = self.edges[i].ends[0];
            let w = g.vertices.len();
            g.vertices.push(fresh_label(&g.vertices, &format!("{}~mid", self.edges[i].id)));
            let half = self.edges[i].length.half();
            let j = g.edges.len();
            g.edges[i].ends = [v, w];
            g.edges[i].length = half.clone();
            g.edges.push(Edge {
                id: fresh_edge_label(&g.edges, &format!("{}~b", self.edges[i].id)),
                ends: [w, v],
                length: half,
            });
            rewired.push((i, j));
        }
        if let Some(rot) = g.rotation.as_mut() {
            for &(i, j) in &rewired {
                let v = g.edges[i].ends[0];
                // the loop's far end (i,1) now belongs to the new edge, arriving at v
                for h in rot[v].iter_mut() {
                    if *h == HalfEdge::new(i, 1) {
                        *h = HalfEdge::new(j, 1);
                    }
                }
                rot.push(vec![HalfEdge::new(i, 1), HalfEdge::new(j, 0)]);
            }
        }
        g
    }

    /// All-pairs vertex distances in the path metric.
    pub fn vertex_distances(&self) -> Vec<Vec<f64>> {
        let n = self.vertices.len();
        let mut d = vec![vec![f64::INFINITY; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = 0.0;
        }
        for e in &self.edges {
            let [a, b] = e.ends;
            let l = e.length.to_f64();
            if l < d[a][b] {
                d[a][b] = l;
                d[b][a] = l;
            }
        }
        for k in 0..n {
            for i in 0..n {
                let dik = d[i][k];
                if dik.is_infinite() {
                    continue;
                }
                for j in 0..n {
                    let cand = dik + d[k][j];
                    if cand < d[i][j] {
                        d[i][j] = cand;
                    }
                }
            }
        }
        d
    }

    /// Metric diameter over all points of the graph, edge interiors included.
    ///
    /// For a point at distance `s` from one end of edge `e = (a, b)` and a
    /// different edge `f = (c, d)`, the farthest point on `f` sits at distance
    /// `(A + B + ℓ_f) / 2` where `A`, `B` are the distances to `c`, `d`. That
    /// expression is concave and piecewise linear in `s`, so its maximum is
    /// attained at `s ∈ {0, ℓ_e}` or at one of the two kinks.
    pub fn diameter(&self) -> Result<f64> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.edges.is_empty() {
            return Ok(0.0);
        }
        let dist = self.vertex_distances();
        let mut best: f64 = 0.0;
        for e in &self.edges {
            let [a, b] = e.ends;
            let le = e.length.to_f64();
            let to = |s: f64, x: usize| (s + dist[a][x]).min(le - s + dist[b][x]);
            // same edge: go around through the rest of the graph
            best = best.max(le.min((le + dist[a][b]) / 2.0));
            for f in &self.edges {
                if std::ptr::eq(e, f) {
                    continue;
                }
                let [c, d] = f.ends;
                let lf = f.length.to_f64();
                let mut candidates = vec![0.0, le];
                for x in [c, d] {
                    let kink = (le + dist[b][x] - dist[a][x]) / 2.0;
                    if kink > 0.0 && kink < le {
                        candidates.push(kink);
                    }
                }
                for s in candidates {
                    best = best.max((to(s, c) + to(s, d) + lf) / 2.0);
                }
            }
        }
        Ok(best)
    }

    pub fn metrics(&self) -> Result<GraphMetrics> {
        let diameter = self.diameter()?;
        let bridges = self.bridges();
        Ok(GraphMetrics {
            total_length: self.total_length().to_f64(),
            diameter,
            bridge_total_length: bridges.iter().map(|&i| self.edges[i].length.to_f64()).sum(),
            vertex_degrees: self.degrees(),
            weighted_vertex_degrees: self.weighted_degrees().iter().map(Length::to_f64).collect(),
        })
    }

    /// The metric subgraph spanned by the given edges, keeping only their
    /// endpoints. Labels are preserved; the rotation system is dropped.
    pub fn subgraph(&self, edges: &BTreeSet<usize>) -> MetricGraph {
        let mut map = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        let mut out = Vec::with_capacity(edges.len());
        for &i in edges {
            let e = &self.edges[i];
            let mut ends = [0; 2];
            for (k, &v) in e.ends.iter().enumerate() {
                if map[v] == usize::MAX {
                    map[v] = vertices.len();
                    vertices.push(self.vertices[v].clone());
                }
                ends[k] = map[v];
            }
            out.push(Edge { id: e.id.clone(), ends, length: e.length.clone() });
        }
        MetricGraph { vertices, edges: out, rotation: None }
    }

    /// `Some(ℓ)` when every edge has the same length.
    pub fn common_length(&self) -> Option<Length> {
        let first = self.edges.first()?.length.clone();
        self.edges.iter().all(|e| e.length == first).then_some(first)
    }

    pub fn all_lengths_exact(&self) -> bool {
        self.edges.iter().all(|e| e.length.is_exact())
    }

    pub fn max_edge_length(&self) -> f64 {
        self.edges.iter().map(|e| e.length.to_f64()).fold(0.0, f64::max)
    }
}

fn fresh_label(existing: &[String], base: &str) -> String {
    let mut label = base.to_string();
    let mut k = 1;
    while existing.iter().any(|v| v == &label) {
        label = format!("{base}{k}");
        k += 1;
    }
    label
}

fn fresh_edge_label(existing: &[Edge], base: &str) -> String {
    let mut label = base.to_string();
    let mut k = 1;
    while existing.iter().any(|e| e.id == label) {
        label = format!("{base}{k}");
        k += 1;
    }
    label
}
