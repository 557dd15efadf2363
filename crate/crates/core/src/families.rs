//! Generators for the graph families used throughout: Platonic solids (with
//! the rotation system of their standard embedding), pumpkins, pumpkin chains,
//! cycles, intervals and stars.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, HalfEdge, MetricGraph};
use crate::length::Length;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Platonic {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Platonic {
    pub const ALL: [Platonic; 5] =
        [Platonic::Tetrahedron, Platonic::Cube, Platonic::Octahedron, Platonic::Dodecahedron, Platonic::Icosahedron];

    pub fn name(self) -> &'static str {
        match self {
            Platonic::Tetrahedron => "tetrahedron",
            Platonic::Cube => "cube",
            Platonic::Octahedron => "octahedron",
            Platonic::Dodecahedron => "dodecahedron",
            Platonic::Icosahedron => "icosahedron",
        }
    }

    /// (vertices, edges, faces)
    pub fn counts(self) -> (usize, usize, usize) {
        match self {
            Platonic::Tetrahedron => (4, 6, 4),
            Platonic::Cube => (8, 12, 6),
            Platonic::Octahedron => (6, 12, 8),
            Platonic::Dodecahedron => (20, 30, 12),
            Platonic::Icosahedron => (12, 30, 20),
        }
    }

    /// Schläfli symbol {face size, vertex degree}.
    pub fn schlafli(self) -> (usize, usize) {
        match self {
            Platonic::Tetrahedron => (3, 3),
            Platonic::Cube => (4, 3),
            Platonic::Octahedron => (3, 4),
            Platonic::Dodecahedron => (5, 3),
            Platonic::Icosahedron => (3, 5),
        }
    }

    pub fn dual(self) -> Platonic {
        match self {
            Platonic::Tetrahedron => Platonic::Tetrahedron,
            Platonic::Cube => Platonic::Octahedron,
            Platonic::Octahedron => Platonic::Cube,
            Platonic::Dodecahedron => Platonic::Icosahedron,
            Platonic::Icosahedron => Platonic::Dodecahedron,
        }
    }

    fn coordinates(self) -> Vec<[f64; 3]> {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let signs = [1.0, -1.0];
        let mut pts = Vec::new();
        match self {
            Platonic::Tetrahedron => {
                pts = vec![[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]];
            }
            Platonic::Cube => {
                for x in signs {
                    for y in signs {
                        for z in signs {
                            pts.push([x, y, z]);
                        }
                    }
                }
            }
            Platonic::Octahedron => {
                for axis in 0..3 {
                    for s in signs {
                        let mut p = [0.0; 3];
                        p[axis] = s;
                        pts.push(p);
                    }
                }
            }
            Platonic::Icosahedron => {
                for a in signs {
                    for b in signs {
                        pts.push([0.0, a, b * phi]);
                        pts.push([a, b * phi, 0.0]);
                        pts.push([b * phi, 0.0, a]);
                    }
                }
            }
            Platonic::Dodecahedron => {
                for x in signs {
                    for y in signs {
                        for z in signs {
                            pts.push([x, y, z]);
                        }
                    }
                }
                for a in signs {
                    for b in signs {
                        pts.push([0.0, a / phi, b * phi]);
                        pts.push([a / phi, b * phi, 0.0]);
                        pts.push([b * phi, 0.0, a / phi]);
                    }
                }
            }
        }
        pts
    }
}

impl FromStr for Platonic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Platonic::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::UnknownFamily(format!("platonic:{s}")))
    }
}

/// A chain of `n` pumpkins; pumpkin `i` has `multiplicities[i]` parallel edges.
#[derive(Clone, Debug, PartialEq)]
pub struct PumpkinChainSpec {
    pub multiplicities: Vec<usize>,
    pub lengths: Vec<PumpkinLengths>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PumpkinLengths {
    /// Locally equilateral pumpkin.
    Common(Length),
    PerEdge(Vec<Length>),
}

impl PumpkinChainSpec {
    pub fn equilateral(multiplicities: &[usize], lengths: &[Length]) -> Self {
        PumpkinChainSpec {
            multiplicities: multiplicities.to_vec(),
            lengths: lengths.iter().cloned().map(PumpkinLengths::Common).collect(),
        }
    }

    pub fn unit(multiplicities: &[usize]) -> Self {
        let ones = vec![Length::integer(1); multiplicities.len()];
        Self::equilateral(multiplicities, &ones)
    }

    pub fn len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if self.multiplicities.is_empty() {
            return Err(Error::BadSpec("a chain needs at least one pumpkin".into()));
        }
        if self.lengths.len() != self.multiplicities.len() {
            return Err(Error::BadSpec(format!(
                "{} length entries for {} pumpkins",
                self.lengths.len(),
                self.multiplicities.len()
            )));
        }
        for (i, (&m, lens)) in self.multiplicities.iter().zip(&self.lengths).enumerate() {
            if m == 0 {
                return Err(Error::BadSpec(format!("pumpkin {} has no edges", i + 1)));
            }
            let ok = match lens {
                PumpkinLengths::Common(l) => l.is_positive_finite(),
                PumpkinLengths::PerEdge(v) => v.len() == m && v.iter().all(Length::is_positive_finite),
            };
            if !ok {
                return Err(Error::BadSpec(format!("pumpkin {} has bad lengths", i + 1)));
            }
        }
        Ok(())
    }

    /// Lengths of the edges of pumpkin `i`.
    pub fn edge_lengths(&self, i: usize) -> Vec<Length> {
        match &self.lengths[i] {
            PumpkinLengths::Common(l) => vec![l.clone(); self.multiplicities[i]],
            PumpkinLengths::PerEdge(v) => v.clone(),
        }
    }

    /// Total length |𝒫_i| of each pumpkin.
    pub fn pumpkin_lengths(&self) -> Vec<Length> {
        (0..self.len()).map(|i| self.edge_lengths(i).iter().sum()).collect()
    }

    pub fn max_edge_length(&self) -> f64 {
        (0..self.len()).flat_map(|i| self.edge_lengths(i)).map(|l| l.to_f64()).fold(0.0, f64::max)
    }

    pub fn is_bridgeless(&self) -> bool {
        self.multiplicities.iter().all(|&m| m >= 2)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Platonic(Platonic, Length),
    /// Two vertices joined by one edge per listed length.
    Pumpkin(Vec<Length>),
    PumpkinChain(PumpkinChainSpec),
    /// Cycle of the given total length split into `edges` equal edges (at least 2).
    Cycle {
        length: Length,
        edges: usize,
    },
    /// Interval.
    Path(Length),
    /// Star with one leg per listed length.
    Star(Vec<Length>),
}

pub fn generate(family: &FamilySpec) -> Result<MetricGraph> {
    let g = match family {
        FamilySpec::Platonic(p, len) => platonic(*p, len.clone())?,
        FamilySpec::Pumpkin(lengths) => {
            if lengths.is_empty() {
                return Err(Error::BadParameter("a pumpkin needs at least one edge".into()));
            }
            pumpkin_chain(&PumpkinChainSpec {
                multiplicities: vec![lengths.len()],
                lengths: vec![PumpkinLengths::PerEdge(lengths.clone())],
            })?
        }
        FamilySpec::PumpkinChain(spec) => pumpkin_chain(spec)?,
        FamilySpec::Cycle { length, edges } => {
            if *edges < 2 {
                return Err(Error::BadParameter("a cycle needs at least two edges".into()));
            }
            let piece = match length {
                Length::Exact(r) => Length::Exact(r / num_bigint::BigInt::from(*edges)),
                Length::Real(x) => Length::Real(x / *edges as f64),
            };
            let n = *edges;
            let mut g = MetricGraph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n, piece.clone())).collect());
            let rot = (0..n).map(|v| vec![HalfEdge::new(v, 0), HalfEdge::new((v + n - 1) % n, 1)]).collect();
            g.rotation = Some(rot);
            g
        }
        FamilySpec::Path(length) => MetricGraph::from_edge_list(2, vec![(0, 1, length.clone())])
            .with_rotation(vec![vec![HalfEdge::new(0, 0)], vec![HalfEdge::new(0, 1)]]),
        FamilySpec::Star(legs) => {
            if legs.is_empty() {
                return Err(Error::BadParameter("a star needs at least one leg".into()));
            }
            let g = MetricGraph::from_edge_list(
                legs.len() + 1,
                legs.iter().enumerate().map(|(i, l)| (0, i + 1, l.clone())).collect(),
            );
            let mut rot = vec![(0..legs.len()).map(|i| HalfEdge::new(i, 0)).collect::<Vec<_>>()];
            rot.extend((0..legs.len()).map(|i| vec![HalfEdge::new(i, 1)]));
            g.with_rotation(rot)
        }
    };
    g.validate().map_err(|e| Error::BadParameter(e.to_string()))?;
    Ok(g)
}

/// Pumpkin chain on vertices `0..=n`; pumpkin `i` joins `i` and `i + 1` and
/// owns edges labelled `"{i+1}.{j+1}"`. The emitted rotation lists the edges
/// of each pumpkin in order on the left vertex and in reverse on the right,
/// so the faces of the embedding are exactly the cycles `e_{i,j} ∪ e_{i,j+1}`.
pub fn pumpkin_chain(spec: &PumpkinChainSpec) -> Result<MetricGraph> {
    spec.validate()?;
    let n = spec.len();
    let mut edges = Vec::new();
    let mut rot: Vec<Vec<HalfEdge>> = vec![Vec::new(); n + 1];
    for i in 0..n {
        let first = edges.len();
        for (j, l) in spec.edge_lengths(i).into_iter().enumerate() {
            edges.push(Edge { id: format!("{}.{}", i + 1, j + 1), ends: [i, i + 1], length: l });
        }
        let last = edges.len();
        rot[i].extend((first..last).map(|e| HalfEdge::new(e, 0)));
        // right vertex: reversed order, placed before the next pumpkin's edges
        let mut right: Vec<HalfEdge> = (first..last).rev().map(|e| HalfEdge::new(e, 1)).collect();
        right.append(&mut rot[i + 1]);
        rot[i + 1] = right;
    }
    Ok(MetricGraph { vertices: (0..=n).map(|v| v.to_string()).collect(), edges, rotation: Some(rot) })
}

/// Equilateral Platonic solid with the rotation system induced by its convex
/// embedding (neighbours ordered counter-clockwise seen from outside).
pub fn platonic(p: Platonic, length: Length) -> Result<MetricGraph> {
    if !length.is_positive_finite() {
        return Err(Error::BadParameter(format!("edge length {length} must be positive")));
    }
    let pts = p.coordinates();
    let n = pts.len();
    let dist2 = |a: &[f64; 3], b: &[f64; 3]| (0..3).map(|k| (a[k] - b[k]).powi(2)).sum::<f64>();
    let mut min = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            min = min.min(dist2(&pts[i], &pts[j]));
        }
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if (dist2(&pts[i], &pts[j]) - min).abs() < 1e-9 * min {
                pairs.push((i, j, length.clone()));
            }
        }
    }
    let g = MetricGraph::from_edge_list(n, pairs);
    let inc = g.incidence();
    let mut rot = Vec::with_capacity(n);
    for v in 0..n {
        let normal = normalize(pts[v]);
        // tangent basis at v
        let helper = if normal[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
        let t1 = normalize(cross(normal, helper));
        let t2 = cross(normal, t1);
        let mut around: Vec<(f64, HalfEdge)> = inc[v]
            .iter()
            .map(|h| {
                let w = g.head(*h);
                let d = [pts[w][0] - pts[v][0], pts[w][1] - pts[v][1], pts[w][2] - pts[v][2]];
                (dot(d, t2).atan2(dot(d, t1)), *h)
            })
            .collect();
        around.sort_by(|a, b| a.0.total_cmp(&b.0));
        rot.push(around.into_iter().map(|(_, h)| h).collect());
    }
    Ok(g.with_rotation(rot))
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    let n = dot(a, a).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn platonic_counts_and_degrees() {
        for p in Platonic::ALL {
            let g = platonic(p, Length::integer(1)).unwrap();
            let (v, e, _) = p.counts();
            assert_eq!(g.vertex_count(), v, "{}", p.name());
            assert_eq!(g.edge_count(), e, "{}", p.name());
            let (_, deg) = p.schlafli();
            assert!(g.degrees().iter().all(|&d| d == deg));
            let r = g.validate().unwrap();
            assert!(r.connected && r.bridgeless && r.loop_edges.is_empty());
        }
    }

    #[test]
    fn icosahedron_metrics() {
        let g = platonic(Platonic::Icosahedron, Length::integer(1)).unwrap();
        let r = g.validate().unwrap();
        assert_eq!(r.total_length, "30");
        let m = g.metrics().unwrap();
        assert!((m.diameter - 3.0).abs() < 1e-12);
        assert!(m.weighted_vertex_degrees.iter().all(|&d| d == 5.0));
    }

    #[test]
    fn chain_324() {
        let g = generate(&FamilySpec::PumpkinChain(PumpkinChainSpec::unit(&[3, 2, 4]))).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 9);
        assert!(g.edges.iter().all(|e| e.length == Length::integer(1)));
        assert!(g.validate().unwrap().bridgeless);
    }

    #[test]
    fn two_pumpkin_is_a_cycle() {
        let (a, b) = (Length::ratio(3, 2), Length::integer(2));
        let g = generate(&FamilySpec::Pumpkin(vec![a, b])).unwrap();
        assert_eq!(g.total_length(), Length::ratio(7, 2));
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!((g.diameter().unwrap() - 1.75).abs() < 1e-12);
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(generate(&FamilySpec::Pumpkin(vec![])), Err(Error::BadParameter(_))));
        assert!(matches!(
            generate(&FamilySpec::Cycle { length: Length::integer(1), edges: 1 }),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(platonic(Platonic::Cube, Length::zero()), Err(Error::BadParameter(_))));
        assert!(matches!("prism".parse::<Platonic>(), Err(Error::UnknownFamily(_))));
        let bad = PumpkinChainSpec { multiplicities: vec![2, 0], lengths: vec![] };
        assert!(matches!(pumpkin_chain(&bad), Err(Error::BadSpec(_))));
    }

    #[test]
    fn chain_bridgelessness_matches_multiplicities() {
        assert!(PumpkinChainSpec::unit(&[2, 3]).is_bridgeless());
        let spec = PumpkinChainSpec::unit(&[2, 1, 3]);
        assert!(!spec.is_bridgeless());
        let g = pumpkin_chain(&spec).unwrap();
        assert_eq!(g.validate().unwrap().bridge_edges, vec!["2.1".to_string()]);
    }
}
