#![allow(dead_code)]

use qgb_core::bounds::four_pumpkin_graph;
use qgb_core::covers::{build_cover, pumpkin_orderings};
use qgb_core::families::{generate, platonic};
use qgb_core::{Cover, CoverStrategy, FamilySpec, Length, MetricGraph, Platonic, PumpkinChainSpec, PumpkinLengths};

pub const PI2: f64 = std::f64::consts::PI * std::f64::consts::PI;

pub struct Sample {
    pub name: String,
    pub graph: MetricGraph,
    pub chain: Option<PumpkinChainSpec>,
}

fn sample(name: impl Into<String>, graph: MetricGraph, chain: Option<PumpkinChainSpec>) -> Sample {
    Sample { name: name.into(), graph, chain }
}

pub fn platonics() -> Vec<Sample> {
    let mut out = Vec::new();
    for p in Platonic::ALL {
        out.push(sample(p.name(), platonic(p, Length::integer(1)).unwrap(), None));
    }
    for p in [Platonic::Tetrahedron, Platonic::Cube] {
        out.push(sample(format!("{}@1/2", p.name()), platonic(p, Length::ratio(1, 2)).unwrap(), None));
    }
    out
}

/// Chains of two and three pumpkins with multiplicities in {2, 3, 4}, unit
/// and with per-pumpkin rational lengths, plus a few non-equilateral pumpkins.
pub fn chains() -> Vec<Sample> {
    let palette =
        [Length::integer(1), Length::ratio(1, 2), Length::ratio(3, 2), Length::integer(3), Length::integer(2)];
    let mut shapes: Vec<Vec<usize>> = Vec::new();
    for a in 2..=4 {
        for b in 2..=4 {
            shapes.push(vec![a, b]);
            for c in 2..=4 {
                shapes.push(vec![a, b, c]);
            }
        }
    }
    let mut out = Vec::new();
    for (k, ms) in shapes.iter().enumerate() {
        let unit = PumpkinChainSpec::unit(ms);
        out.push(sample(
            format!("chain{ms:?}"),
            generate(&FamilySpec::PumpkinChain(unit.clone())).unwrap(),
            Some(unit),
        ));
        let lengths: Vec<Length> = (0..ms.len()).map(|i| palette[(i + k) % palette.len()].clone()).collect();
        let spec = PumpkinChainSpec::equilateral(ms, &lengths);
        let name = format!("chain{ms:?}@{}", lengths.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
        out.push(sample(name, generate(&FamilySpec::PumpkinChain(spec.clone())).unwrap(), Some(spec)));
    }
    let mixed = PumpkinChainSpec {
        multiplicities: vec![2, 3],
        lengths: vec![
            PumpkinLengths::PerEdge(vec![Length::integer(1), Length::integer(2)]),
            PumpkinLengths::PerEdge(vec![Length::ratio(1, 2), Length::integer(1), Length::ratio(3, 2)]),
        ],
    };
    out.push(sample("chain[2,3]@mixed", generate(&FamilySpec::PumpkinChain(mixed.clone())).unwrap(), Some(mixed)));
    out
}

pub fn four_pumpkins() -> Vec<Sample> {
    [
        Length::integer(1),
        Length::ratio(3, 2),
        Length::integer(2),
        Length::integer(4),
        Length::real(2.0 + 5f64.sqrt()),
        Length::integer(5),
        Length::integer(10),
    ]
    .into_iter()
    .map(|a| sample(format!("four_pumpkin:{a}"), four_pumpkin_graph(a).unwrap(), None))
    .collect()
}

pub fn corpus() -> Vec<Sample> {
    let mut all = platonics();
    all.extend(chains());
    all.extend(four_pumpkins());
    all
}

/// Every cover construction that applies to the sample.
pub fn covers(s: &Sample) -> Vec<(String, Cover)> {
    let mut strategies = vec![CoverStrategy::Star, CoverStrategy::Copies(2), CoverStrategy::Copies(3)];
    if s.graph.rotation.is_some() && s.graph.bridges().is_empty() {
        strategies.extend([CoverStrategy::Faces, CoverStrategy::FacePairs]);
    }
    if s.chain.as_ref().is_some_and(|c| c.len() >= 2) {
        strategies.extend([CoverStrategy::Layered, CoverStrategy::Concatenated]);
    }
    if s.chain.is_none() && s.graph.vertex_count() == 2 {
        for order in pumpkin_orderings(s.graph.edge_count()) {
            strategies.push(CoverStrategy::PumpkinCycles(Some(order)));
        }
    }
    strategies.into_iter().filter_map(|st| build_cover(&s.graph, &st).ok().map(|c| (format!("{st:?}"), c))).collect()
}

/// α-spectra of the Platonic skeletons, (value, multiplicity).
pub fn platonic_alpha(p: Platonic) -> Vec<(f64, usize)> {
    let s = 5f64.sqrt();
    match p {
        Platonic::Tetrahedron => vec![(0.0, 1), (4.0 / 3.0, 3)],
        Platonic::Cube => vec![(0.0, 1), (2.0 / 3.0, 3), (4.0 / 3.0, 3), (2.0, 1)],
        Platonic::Octahedron => vec![(0.0, 1), (1.0, 3), (1.5, 2)],
        Platonic::Dodecahedron => {
            vec![(0.0, 1), ((3.0 - s) / 3.0, 3), (2.0 / 3.0, 5), (1.0, 4), (5.0 / 3.0, 4), ((3.0 + s) / 3.0, 3)]
        }
        Platonic::Icosahedron => vec![(0.0, 1), ((5.0 - s) / 5.0, 3), (1.2, 5), ((5.0 + s) / 5.0, 3)],
    }
}

pub fn expand(list: &[(f64, usize)]) -> Vec<f64> {
    list.iter().flat_map(|&(v, k)| std::iter::repeat_n(v, k)).collect()
}

/// Symmetric normalized Laplacian I − D^{-1/2} W D^{-1/2} from an edge list,
/// built without the library.
pub fn lambda_sym(n: usize, edges: &[(usize, usize, f64)]) -> nalgebra::DMatrix<f64> {
    let mut w = nalgebra::DMatrix::<f64>::zeros(n, n);
    for &(u, v, x) in edges {
        w[(u, v)] += x;
        w[(v, u)] += x;
    }
    let d: Vec<f64> = (0..n).map(|i| w.row(i).sum()).collect();
    nalgebra::DMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        id - w[(i, j)] / (d[i] * d[j]).sqrt()
    })
}

/// Sorted eigenvalues through nalgebra.
pub fn sorted_eigenvalues(m: nalgebra::DMatrix<f64>) -> Vec<f64> {
    let mut v: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}
