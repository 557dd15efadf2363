//! Eigenvalue estimators: the cover transference bound, the star bound,
//! pumpkin-chain and 4-pumpkin bounds, and classical comparison bounds.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::covers::{
    chain_layout, element_length, pumpkin_cycle_cover, star_cover, validate_cover, vicinity_graph, Cover, CoverElement,
};
use crate::error::{Error, Result};
use crate::families::{PumpkinChainSpec, PumpkinLengths};
use crate::graph::MetricGraph;
use crate::length::Length;
use crate::linalg::tolerance;
use crate::oracle::{self, SpectrumResult};
use crate::weighted::normalized_spectrum;

const PI2: f64 = PI * PI;

/// How the spectral gap η of each cover element is estimated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaStrategy {
    /// 4π²/|𝒞|², exact for cycles.
    ExactCycle,
    /// 4π²/|𝒰|², valid for 2-edge-connected elements.
    DoublyConnected,
    /// π²/|𝒰|², valid for every element.
    Nicaise,
    /// Best of the three star estimates.
    StarBest,
    /// Numerical λ₂ of the element.
    Oracle,
    /// Largest closed-form estimate applicable to each element.
    Auto,
}

impl EtaStrategy {
    pub fn name(self) -> &'static str {
        match self {
            EtaStrategy::ExactCycle => "exact_cycle",
            EtaStrategy::DoublyConnected => "doubly_connected",
            EtaStrategy::Nicaise => "nicaise",
            EtaStrategy::StarBest => "star_best",
            EtaStrategy::Oracle => "oracle",
            EtaStrategy::Auto => "auto",
        }
    }
}

impl fmt::Display for EtaStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EtaStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exact" | "exact_cycle" => EtaStrategy::ExactCycle,
            "cycle" | "doubly_connected" => EtaStrategy::DoublyConnected,
            "nicaise" => EtaStrategy::Nicaise,
            "star" | "star_best" => EtaStrategy::StarBest,
            "oracle" => EtaStrategy::Oracle,
            "auto" => EtaStrategy::Auto,
            _ => return Err(Error::BadParameter(format!("unknown eta strategy '{s}'"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ElementEta {
    pub label: String,
    pub length: String,
    pub eta: f64,
    /// Which estimate produced `eta`.
    pub rule: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Ingredients {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta_strategy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    /// Multiplier in front of α_i, e.g. (m − 1)/m · η.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<ElementEta>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub alpha: Vec<f64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub constants: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundRow {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub method: String,
    pub rows: Vec<BoundRow>,
    pub ingredients: Ingredients,
    /// Some ingredient came from a numerical eigenvalue computation.
    pub numerically_assisted: bool,
    /// The formula was inferred from worked instances rather than stated.
    pub reconstructed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl BoundReport {
    fn new(method: impl Into<String>) -> Self {
        BoundReport {
            method: method.into(),
            rows: Vec::new(),
            ingredients: Ingredients::default(),
            numerically_assisted: false,
            reconstructed: false,
            warnings: Vec::new(),
        }
    }

    pub fn lower(&self, index: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.index == index).and_then(|r| r.lower)
    }

    pub fn upper(&self, index: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.index == index).and_then(|r| r.upper)
    }

    /// Drops rows above index `k`.
    pub fn truncate(&mut self, k: usize) {
        self.rows.retain(|r| r.index <= k);
    }
}

/// Shape of a cover element relevant to the η estimates.
struct ElementShape {
    sub: MetricGraph,
    length: Length,
    is_cycle: bool,
    doubly_connected: bool,
    /// (ℓ_max, total length, star diameter) when all edges meet one vertex.
    star: Option<(f64, f64, f64)>,
}

fn shape(g: &MetricGraph, el: &CoverElement) -> ElementShape {
    let sub = g.subgraph(&el.edges);
    let connected = sub.is_connected();
    let is_cycle = connected && sub.degrees().iter().all(|&d| d == 2);
    let doubly_connected = connected && sub.bridges().is_empty();
    let star = (0..sub.vertex_count()).any(|v| sub.edges.iter().all(|e| e.ends.contains(&v))).then(|| {
        let mut lens: Vec<f64> = sub.edges.iter().map(|e| e.length.to_f64()).collect();
        lens.sort_by(|a, b| b.total_cmp(a));
        let diameter = if lens.len() >= 2 { lens[0] + lens[1] } else { 2.0 * lens[0] };
        (lens[0], lens.iter().sum(), diameter)
    });
    ElementShape { length: element_length(g, el), sub, is_cycle, doubly_connected, star }
}

/// max(π²/(4ℓ_max²), π²/deg², 1/(D·deg)) for a star.
fn star_eta(ell_max: f64, deg: f64, diameter: f64) -> (f64, &'static str) {
    [
        (PI2 / (4.0 * ell_max * ell_max), "star_edge"),
        (PI2 / (deg * deg), "star_length"),
        (1.0 / (diameter * deg), "star_diameter"),
    ]
    .into_iter()
    .fold((0.0, ""), |best, c| if c.0 > best.0 { c } else { best })
}

/// Lower estimate of λ₂ of a single element under `strategy`, with the rule used.
pub fn element_eta(g: &MetricGraph, el: &CoverElement, strategy: EtaStrategy) -> Result<(f64, String)> {
    let s = shape(g, el);
    let len = s.length.to_f64();
    let unavailable = || Error::EtaUnavailable { strategy: strategy.name().into(), element: el.label.clone() };
    let cycle = 4.0 * PI2 / (len * len);
    Ok(match strategy {
        EtaStrategy::ExactCycle => (s.is_cycle.then_some(cycle).ok_or_else(unavailable)?, "exact_cycle".into()),
        EtaStrategy::DoublyConnected => {
            (s.doubly_connected.then_some(cycle).ok_or_else(unavailable)?, "doubly_connected".into())
        }
        EtaStrategy::Nicaise => (PI2 / (len * len), "nicaise".into()),
        EtaStrategy::StarBest => {
            let (l, d, diam) = s.star.ok_or_else(unavailable)?;
            let (v, rule) = star_eta(l, d, diam);
            (v, rule.into())
        }
        EtaStrategy::Oracle => (oracle::spectrum(&s.sub, 2)?.nth(2), "oracle".into()),
        EtaStrategy::Auto => {
            let mut best = (PI2 / (len * len), "nicaise".to_string());
            if s.doubly_connected && cycle > best.0 {
                let rule = if s.is_cycle { "exact_cycle" } else { "doubly_connected" };
                best = (cycle, rule.into());
            }
            if let Some((l, d, diam)) = s.star {
                let (v, rule) = star_eta(l, d, diam);
                if v > best.0 {
                    best = (v, rule.into());
                }
            }
            best
        }
    })
}

/// λ_i(g) ≥ ((m − 1)/m)·η·α_i(Γ) for i = 1..k.
pub fn transfer_bound(g: &MetricGraph, cover: &Cover, eta: EtaStrategy) -> Result<BoundReport> {
    let m = validate_cover(g, cover)?;
    let gamma = vicinity_graph(g, cover)?;
    let alpha = normalized_spectrum(&gamma, tolerance())?.values;
    let mut elements = Vec::with_capacity(cover.len());
    for el in &cover.elements {
        let (value, rule) = element_eta(g, el, eta)?;
        elements.push(ElementEta {
            label: el.label.clone(),
            length: element_length(g, el).to_string(),
            eta: value,
            rule,
        });
    }
    let eta_min = elements.iter().map(|e| e.eta).fold(f64::INFINITY, f64::min);
    let coefficient = (m - 1) as f64 / m as f64 * eta_min;
    let mut report = BoundReport::new(format!("transfer[{eta}]"));
    report.rows = alpha
        .iter()
        .enumerate()
        .map(|(i, a)| BoundRow { index: i + 1, lower: Some(coefficient * a), upper: None })
        .collect();
    if !gamma.is_connected() {
        report.warnings.push("vicinity graph is disconnected; alpha_2 = 0 and the bound is trivial".into());
    }
    report.numerically_assisted = eta == EtaStrategy::Oracle;
    report.ingredients = Ingredients {
        m: Some(m),
        eta_strategy: Some(eta.name().into()),
        eta: Some(eta_min),
        coefficient: Some(coefficient),
        elements,
        alpha,
        constants: BTreeMap::new(),
    };
    Ok(report)
}

/// λ_i(g) ≥ max(π²/(8ℓ_max²), π²/(2·deg_max²), 1/(2·(D·deg)_max))·α_i(𝖦)
/// over the reduced combinatorial graph 𝖦, from the star double cover.
pub fn star_bound(g: &MetricGraph) -> Result<BoundReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cover = star_cover(g)?;
    let gamma = vicinity_graph(g, &cover)?;
    let alpha = normalized_spectrum(&gamma, tolerance())?.values;
    let ell_max = g.max_edge_length();
    let mut deg_max: f64 = 0.0;
    let mut d_deg_max: f64 = 0.0;
    for el in &cover.elements {
        let (_, deg, diam) = shape(g, el).star.expect("star cover elements are stars");
        deg_max = deg_max.max(deg);
        d_deg_max = d_deg_max.max(diam * deg);
    }
    let terms = [
        ("edge", PI2 / (8.0 * ell_max * ell_max)),
        ("degree", PI2 / (2.0 * deg_max * deg_max)),
        ("diameter", 1.0 / (2.0 * d_deg_max)),
    ];
    let (rule, coefficient) = terms.iter().copied().fold(("", 0.0), |b, t| if t.1 > b.1 { t } else { b });
    let mut report = BoundReport::new("star");
    report.rows = alpha
        .iter()
        .enumerate()
        .map(|(i, a)| BoundRow { index: i + 1, lower: Some(coefficient * a), upper: None })
        .collect();
    let mut constants = BTreeMap::new();
    constants.insert("ell_max".into(), ell_max);
    constants.insert("deg_max".into(), deg_max);
    constants.insert("diameter_deg_max".into(), d_deg_max);
    for (name, v) in terms {
        constants.insert(format!("term_{name}"), v);
    }
    report.ingredients = Ingredients {
        m: Some(2),
        eta_strategy: Some(format!("star_{rule}")),
        eta: Some(2.0 * coefficient),
        coefficient: Some(coefficient),
        elements: Vec::new(),
        alpha,
        constants,
    };
    Ok(report)
}

/// Reads the pumpkin structure off a graph laid out as a chain.
pub fn chain_spec(g: &MetricGraph) -> Result<PumpkinChainSpec> {
    let layout = chain_layout(g)?;
    Ok(PumpkinChainSpec {
        multiplicities: layout.iter().map(Vec::len).collect(),
        lengths: layout
            .iter()
            .map(|p| PumpkinLengths::PerEdge(p.iter().map(|&e| g.edges[e].length.clone()).collect()))
            .collect(),
    })
}

fn single(method: &str, index: usize, lower: Option<f64>, upper: Option<f64>) -> BoundReport {
    let mut r = BoundReport::new(method);
    r.rows.push(BoundRow { index, lower, upper });
    r
}

/// Lower bounds on λ₂ from the star cover of a pumpkin chain, in the
/// sharper form and the weaker mean-ratio form, plus the known upper bound
/// (n + 1)²π²/(4L²) when n ≥ 2.
pub fn pumpkin_chain_bounds(spec: &PumpkinChainSpec) -> Result<Vec<BoundReport>> {
    spec.validate()?;
    let n = spec.len();
    let sizes: Vec<f64> = spec.pumpkin_lengths().iter().map(Length::to_f64).collect();
    let ell = spec.max_edge_length();
    let total: f64 = sizes.iter().sum();
    let inverse: f64 = sizes.iter().map(|p| 1.0 / p).sum();
    let (pmin, pmax) = sizes.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &p| (lo.min(p), hi.max(p)));
    let diam = PI2 / (4.0 * ell * ell) / (total * inverse);
    let harm = 4.0 * pmin * pmax / (pmin + pmax).powi(2) * PI2 / (4.0 * (n * n) as f64 * ell * ell);
    debug_assert!(harm <= diam * (1.0 + 1e-12));

    let mut constants = BTreeMap::new();
    constants.insert("ell_max".to_string(), ell);
    constants.insert("sum_lengths".to_string(), total);
    constants.insert("sum_inverse_lengths".to_string(), inverse);
    constants.insert("min_pumpkin_length".to_string(), pmin);
    constants.insert("max_pumpkin_length".to_string(), pmax);

    let mut a = single("chain_diam", 2, Some(diam), None);
    a.ingredients.constants = constants.clone();
    let mut b = single("chain_harm", 2, Some(harm), None);
    b.ingredients.constants = constants;
    let mut out = vec![a, b];
    if n >= 2 {
        let upper = ((n + 1) * (n + 1)) as f64 * PI2 / (4.0 * total * total);
        let mut c = single("chain_upper", 2, None, Some(upper));
        c.ingredients.constants.insert("total_length".into(), total);
        if spec.is_bridgeless() && upper <= 4.0 * PI2 / (total * total) * (1.0 + 1e-12) {
            c.warnings.push(format!(
                "upper value {upper:.6} does not exceed the doubly connected lower bound 4pi^2/L^2 = {:.6}",
                4.0 * PI2 / (total * total)
            ));
        }
        out.push(c);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Better {
    C1,
    C2,
    Tie,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FourPumpkin {
    pub a: f64,
    pub bound_c1: f64,
    pub bound_c2: f64,
    pub better: Better,
}

/// Closed-form bounds π²/(2a²) and 4π²/(a+1)³ for the pumpkin with edge
/// lengths (1, 1, a, a).
pub fn four_pumpkin_bounds(a: f64) -> Result<FourPumpkin> {
    if !(a.is_finite() && a >= 1.0) {
        return Err(Error::BadParameter(format!("4-pumpkin needs a >= 1, got {a}")));
    }
    let bound_c1 = PI2 / (2.0 * a * a);
    let bound_c2 = 4.0 * PI2 / (a + 1.0).powi(3);
    let better = if (bound_c1 - bound_c2).abs() <= 1e-12 * bound_c1.max(bound_c2) {
        Better::Tie
    } else if bound_c1 > bound_c2 {
        Better::C1
    } else {
        Better::C2
    };
    Ok(FourPumpkin { a, bound_c1, bound_c2, better })
}

/// The pumpkin with edges `e1, e1', ea, ea'` of lengths (1, 1, a, a).
pub fn four_pumpkin_graph(a: Length) -> Result<MetricGraph> {
    let one = Length::integer(1);
    let mut g = crate::families::generate(&crate::families::FamilySpec::Pumpkin(vec![one.clone(), one, a.clone(), a]))?;
    for (e, id) in g.edges.iter_mut().zip(["e1", "e1'", "ea", "ea'"]) {
        e.id = id.into();
    }
    Ok(g)
}

/// Covers 𝔠₁ (cycle order e1, e1', ea', ea) and 𝔠₂ (order e1, ea, e1', ea')
/// of [`four_pumpkin_graph`].
pub fn four_pumpkin_covers(g: &MetricGraph) -> Result<(Cover, Cover)> {
    Ok((pumpkin_cycle_cover(g, Some(&[0, 1, 3, 2]))?, pumpkin_cycle_cover(g, Some(&[0, 2, 1, 3]))?))
}

/// Friedlander, Nicaise (lower and upper), Band–Lévy when the graph is
/// 2-edge-connected, and the diameter form 1/(𝒟·L).
pub fn classical_bounds(g: &MetricGraph, k_max: usize) -> Result<Vec<BoundReport>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let total = g.total_length().to_f64();
    let l2 = total * total;
    let edges = g.edge_count() as f64;
    let mut out = Vec::new();

    let mut fried = BoundReport::new("friedlander");
    fried.rows = (2..=k_max.max(2))
        .map(|k| BoundRow { index: k, lower: Some(PI2 * (k * k) as f64 / (4.0 * l2)), upper: None })
        .collect();
    fried.ingredients.constants.insert("total_length".into(), total);
    out.push(fried);

    let mut nicaise = single("nicaise", 2, Some(PI2 / l2), Some(PI2 * edges * edges / l2));
    nicaise.ingredients.constants.insert("total_length".into(), total);
    nicaise.ingredients.constants.insert("edge_count".into(), edges);
    out.push(nicaise);

    if g.bridges().is_empty() {
        let mut bl = single("band_levy", 2, Some(4.0 * PI2 / l2), None);
        bl.ingredients.constants.insert("total_length".into(), total);
        out.push(bl);
    }

    let diameter = g.diameter()?;
    let mut kennedy = single("kennedy", 2, Some(1.0 / (diameter * total)), None);
    kennedy.reconstructed = true;
    kennedy.ingredients.constants.insert("total_length".into(), total);
    kennedy.ingredients.constants.insert("diameter".into(), diameter);
    out.push(kennedy);
    Ok(out)
}

/// Band–Lévy alone, failing on graphs with bridges.
pub fn band_levy(g: &MetricGraph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.bridges().is_empty() {
        return Err(Error::NotDoublyConnected);
    }
    let total = g.total_length().to_f64();
    Ok(4.0 * PI2 / (total * total))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompareRow {
    pub method: String,
    pub index: usize,
    pub bound: f64,
    pub oracle: Option<f64>,
    pub ratio: Option<f64>,
    pub ingredients: String,
}

fn ingredient_summary(r: &BoundReport, index: usize) -> String {
    let ing = &r.ingredients;
    let mut parts = Vec::new();
    if let Some(m) = ing.m {
        parts.push(format!("m={m}"));
    }
    if let (Some(s), Some(e)) = (&ing.eta_strategy, ing.eta) {
        parts.push(format!("eta[{s}]={e:.6}"));
    }
    if let Some(a) = ing.alpha.get(index - 1) {
        parts.push(format!("alpha={a:.6}"));
    }
    if ing.alpha.is_empty() {
        for (k, v) in &ing.constants {
            parts.push(format!("{k}={v:.6}"));
        }
    }
    if r.numerically_assisted {
        parts.push("numerical".into());
    }
    if r.reconstructed {
        parts.push("reconstructed".into());
    }
    parts.join(";")
}

/// One row per (method, index) with the oracle eigenvalue and the ratio
/// bound/oracle where available. Upper bounds get a `:upper` suffix.
pub fn compare_report(reports: &[BoundReport], oracle: Option<&SpectrumResult>) -> Vec<CompareRow> {
    let mut rows = Vec::new();
    for r in reports {
        for row in &r.rows {
            let exact = oracle.and_then(|o| o.eigenvalues.get(row.index - 1).copied());
            for (suffix, value) in [("", row.lower), (":upper", row.upper)] {
                let Some(bound) = value else { continue };
                rows.push(CompareRow {
                    method: format!("{}{suffix}", r.method),
                    index: row.index,
                    bound,
                    oracle: exact,
                    ratio: exact.filter(|&x| x > 0.0).map(|x| bound / x),
                    ingredients: ingredient_summary(r, row.index),
                });
            }
        }
    }
    rows.sort_by(|a, b| (a.method.as_str(), a.index).cmp(&(b.method.as_str(), b.index)));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{build_cover, CoverStrategy};
    use crate::families::{platonic, pumpkin_chain, Platonic};

    fn unit(p: Platonic) -> MetricGraph {
        platonic(p, Length::integer(1)).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn icosahedron_faces_bound() {
        let g = unit(Platonic::Icosahedron);
        let c = build_cover(&g, &CoverStrategy::Faces).unwrap();
        let r = transfer_bound(&g, &c, EtaStrategy::ExactCycle).unwrap();
        assert!(close(r.lower(2).unwrap(), 2.0 * PI2 * (3.0 - 5f64.sqrt()) / 27.0));
        assert!(close(r.lower(18).unwrap(), 2.0 * PI2 * (3.0 + 5f64.sqrt()) / 27.0));
    }

    #[test]
    fn icosahedron_star_bound() {
        let r = star_bound(&unit(Platonic::Icosahedron)).unwrap();
        assert!(close(r.lower(2).unwrap(), PI2 * (5.0 - 5f64.sqrt()) / 40.0));
    }

    #[test]
    fn tetrahedron_star_bound() {
        let r = star_bound(&unit(Platonic::Tetrahedron)).unwrap();
        assert!(close(r.lower(2).unwrap(), PI2 / 6.0));
    }

    #[test]
    fn dodecahedron_star_bound_reaches_pi2_over_8() {
        let r = star_bound(&unit(Platonic::Dodecahedron)).unwrap();
        assert!(close(r.lower(9).unwrap(), PI2 / 12.0));
        assert!(close(r.lower(10).unwrap(), PI2 / 8.0));
    }

    #[test]
    fn exact_cycle_needs_cycles() {
        let g = unit(Platonic::Cube);
        let c = build_cover(&g, &CoverStrategy::Star).unwrap();
        assert!(matches!(transfer_bound(&g, &c, EtaStrategy::ExactCycle), Err(Error::EtaUnavailable { .. })));
        let r = transfer_bound(&g, &c, EtaStrategy::StarBest).unwrap();
        assert!(close(r.lower(2).unwrap(), star_bound(&g).unwrap().lower(2).unwrap()));
    }

    #[test]
    fn cube_sixfold() {
        let g = unit(Platonic::Cube);
        let c = build_cover(&g, &CoverStrategy::FacePairs).unwrap();
        let r = transfer_bound(&g, &c, EtaStrategy::ExactCycle).unwrap();
        assert!(close(r.lower(2).unwrap(), 8.0 * PI2 / 81.0));
        assert!(close(r.lower(11).unwrap(), PI2 / 9.0));
    }

    #[test]
    fn disconnected_vicinity_warns() {
        let g = pumpkin_chain(&PumpkinChainSpec::unit(&[2, 2])).unwrap();
        let layout = chain_layout(&g).unwrap();
        let cycles = Cover {
            m: 2,
            elements: layout
                .iter()
                .flat_map(|p| {
                    [0, 1].map(|k| CoverElement { label: format!("c{}", p[0] + k), edges: p.iter().copied().collect() })
                })
                .collect(),
        };
        let r = transfer_bound(&g, &cycles, EtaStrategy::ExactCycle).unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert!(r.lower(2).unwrap().abs() < 1e-12);
    }

    #[test]
    fn chain_bounds() {
        let r = pumpkin_chain_bounds(&PumpkinChainSpec::unit(&[3, 2, 4])).unwrap();
        assert!(close(r[0].lower(2).unwrap(), PI2 / (4.0 * 9.0 * 13.0 / 12.0)));
        assert!(r[1].lower(2).unwrap() <= r[0].lower(2).unwrap());
        assert!(close(r[2].upper(2).unwrap(), 16.0 * PI2 / (4.0 * 81.0)));
        assert_eq!(r[2].warnings.len(), 1);
    }

    #[test]
    fn chain_single_pumpkin() {
        let spec = PumpkinChainSpec::equilateral(&[4], &[Length::integer(2)]);
        let r = pumpkin_chain_bounds(&spec).unwrap();
        assert_eq!(r.len(), 2);
        assert!(close(r[0].lower(2).unwrap(), PI2 / 16.0));
        assert!(close(r[1].lower(2).unwrap(), PI2 / 16.0));
    }

    #[test]
    fn chain_spec_round_trip() {
        let spec = PumpkinChainSpec::unit(&[3, 2, 4]);
        let g = pumpkin_chain(&spec).unwrap();
        let back = chain_spec(&g).unwrap();
        assert_eq!(back.multiplicities, spec.multiplicities);
        assert_eq!(back.pumpkin_lengths(), spec.pumpkin_lengths());
    }

    #[test]
    fn four_pumpkin_closed_forms() {
        let t = four_pumpkin_bounds(1.0).unwrap();
        assert!(close(t.bound_c1, PI2 / 2.0) && close(t.bound_c2, PI2 / 2.0));
        assert_eq!(t.better, Better::Tie);
        assert_eq!(four_pumpkin_bounds(2.0 + 5f64.sqrt()).unwrap().better, Better::Tie);
        let t = four_pumpkin_bounds(10.0).unwrap();
        assert!(close(t.bound_c1, PI2 / 200.0) && close(t.bound_c2, 4.0 * PI2 / 1331.0));
        assert_eq!(t.better, Better::C1);
        assert_eq!(four_pumpkin_bounds(3.0).unwrap().better, Better::C2);
        assert!(four_pumpkin_bounds(0.5).is_err());
    }

    #[test]
    fn four_pumpkin_covers_reproduce_formulas() {
        for a in [Length::integer(2), Length::integer(5)] {
            let af = a.to_f64();
            let g = four_pumpkin_graph(a).unwrap();
            let (c1, c2) = four_pumpkin_covers(&g).unwrap();
            let want = four_pumpkin_bounds(af).unwrap();
            let b1 = transfer_bound(&g, &c1, EtaStrategy::DoublyConnected).unwrap();
            let b2 = transfer_bound(&g, &c2, EtaStrategy::DoublyConnected).unwrap();
            assert!(close(b1.lower(2).unwrap(), want.bound_c1));
            assert!(close(b2.lower(2).unwrap(), want.bound_c2));
        }
    }

    #[test]
    fn classical_icosahedron() {
        let r = classical_bounds(&unit(Platonic::Icosahedron), 18).unwrap();
        let by = |m: &str| r.iter().find(|x| x.method == m).unwrap();
        assert!(close(by("kennedy").lower(2).unwrap(), 1.0 / 90.0));
        assert!(by("kennedy").reconstructed);
        assert!(close(by("band_levy").lower(2).unwrap(), PI2 / 225.0));
        assert!(close(by("friedlander").lower(18).unwrap(), 324.0 * PI2 / 3600.0));
    }

    #[test]
    fn band_levy_needs_bridgeless() {
        let g = pumpkin_chain(&PumpkinChainSpec::unit(&[2, 1, 2])).unwrap();
        assert_eq!(band_levy(&g), Err(Error::NotDoublyConnected));
        assert!(classical_bounds(&g, 2).unwrap().iter().all(|r| r.method != "band_levy"));
    }

    #[test]
    fn compare_rows_sorted() {
        let g = unit(Platonic::Tetrahedron);
        let faces = build_cover(&g, &CoverStrategy::Faces).unwrap();
        let mut reports = vec![star_bound(&g).unwrap(), transfer_bound(&g, &faces, EtaStrategy::ExactCycle).unwrap()];
        reports.extend(classical_bounds(&g, 3).unwrap());
        let o = oracle::spectrum(&g, 4).unwrap();
        let rows = compare_report(&reports, Some(&o));
        let keys: Vec<_> = rows.iter().map(|r| (r.method.clone(), r.index)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(rows.iter().any(|r| r.method == "nicaise:upper"));
        for r in rows.iter().filter(|r| !r.method.ends_with(":upper")) {
            assert!(r.bound <= r.oracle.unwrap() + 1e-9, "{r:?}");
        }
    }
}
