//! Edge-aligned m-fold covers and their vicinity graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{HalfEdge, MetricGraph};
use crate::length::Length;
use crate::linalg::SymmetricMatrix;
use crate::weighted::WeightedGraph;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverElement {
    pub label: String,
    /// Indices into the host graph's edge list.
    pub edges: BTreeSet<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cover {
    pub m: usize,
    pub elements: Vec<CoverElement>,
}

impl Cover {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn push(&mut self, label: impl Into<String>, edges: impl IntoIterator<Item = usize>) {
        self.elements.push(CoverElement { label: label.into(), edges: edges.into_iter().collect() });
    }
}

/// Cover constructions available through [`build_cover`].
#[derive(Clone, Debug, PartialEq)]
pub enum CoverStrategy {
    Star,
    Faces,
    /// Symmetric differences of the two faces at each edge, deduplicated.
    FacePairs,
    /// Cycles `e_σ(i) ∪ e_σ(i+1)` of a single pumpkin; `None` is the edge order.
    PumpkinCycles(Option<Vec<usize>>),
    Layered,
    Concatenated,
    Copies(usize),
}

impl std::str::FromStr for CoverStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameter(format!("unknown cover strategy '{s}'"));
        Ok(match s {
            "star" => CoverStrategy::Star,
            "faces" => CoverStrategy::Faces,
            "face_pairs" | "face-pairs" => CoverStrategy::FacePairs,
            "pumpkin" | "pumpkin_cycles" => CoverStrategy::PumpkinCycles(None),
            "layered" => CoverStrategy::Layered,
            "concatenated" => CoverStrategy::Concatenated,
            _ => {
                if let Some(m) = s.strip_prefix("copies:") {
                    CoverStrategy::Copies(m.parse().map_err(|_| bad())?)
                } else if let Some(order) = s.strip_prefix("pumpkin:") {
                    let order =
                        order.split(',').map(|x| x.trim().parse::<usize>()).collect::<std::result::Result<_, _>>();
                    CoverStrategy::PumpkinCycles(Some(order.map_err(|_| bad())?))
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

pub fn build_cover(g: &MetricGraph, strategy: &CoverStrategy) -> Result<Cover> {
    let cover = match strategy {
        CoverStrategy::Star => star_cover(g)?,
        CoverStrategy::Faces => face_cover(g)?,
        CoverStrategy::FacePairs => face_pair_cover(g)?,
        CoverStrategy::PumpkinCycles(order) => pumpkin_cycle_cover(g, order.as_deref())?,
        CoverStrategy::Layered => layered_cover(g)?,
        CoverStrategy::Concatenated => concatenated_cover(g)?,
        CoverStrategy::Copies(m) => copies_cover(g, *m)?,
    };
    validate_cover(g, &cover)?;
    Ok(cover)
}

/// Checks that every edge lies in exactly `m` elements and every element is
/// connected; returns `m`.
pub fn validate_cover(g: &MetricGraph, c: &Cover) -> Result<usize> {
    if c.m < 2 {
        return Err(Error::BadParameter(format!("cover multiplicity must be at least 2, got {}", c.m)));
    }
    let mut count = vec![0usize; g.edge_count()];
    for el in &c.elements {
        for &e in &el.edges {
            if e >= g.edge_count() {
                return Err(Error::UnknownEdge(format!("index {e} in element '{}'", el.label)));
            }
            count[e] += 1;
        }
    }
    if let Some((e, &n)) = count.iter().enumerate().find(|(_, &n)| n != c.m) {
        return Err(Error::NotUniform { edge: g.edges[e].id.clone(), count: n, expected: c.m });
    }
    for el in &c.elements {
        if el.edges.is_empty() || !g.subgraph(&el.edges).is_connected() {
            return Err(Error::DisconnectedElement(el.label.clone()));
        }
    }
    Ok(c.m)
}

/// Total length |𝒰| of an element.
pub fn element_length(g: &MetricGraph, el: &CoverElement) -> Length {
    el.edges.iter().map(|&e| &g.edges[e].length).sum()
}

/// Vicinity graph Γ: one vertex per element, μ_ij = |𝒰_i ∩ 𝒰_j|.
pub fn vicinity_graph(g: &MetricGraph, c: &Cover) -> Result<WeightedGraph> {
    validate_cover(g, c)?;
    let mut edges = Vec::new();
    for (i, a) in c.elements.iter().enumerate() {
        for (j, b) in c.elements.iter().enumerate().skip(i + 1) {
            let shared: Length = a.edges.intersection(&b.edges).map(|&e| &g.edges[e].length).sum();
            if !shared.is_zero() {
                edges.push((i, j, shared));
            }
        }
    }
    WeightedGraph::new(c.len(), edges)
}

/// Gram matrix of the normalized element indicators, entries
/// |𝒰_i ∩ 𝒰_j| / √(|𝒰_i||𝒰_j|). `m·I` minus this matrix equals
/// `(m − 1)·Λ_sym(Γ)`.
pub fn overlap_gram(g: &MetricGraph, c: &Cover) -> SymmetricMatrix {
    let lens: Vec<f64> = c.elements.iter().map(|el| element_length(g, el).to_f64()).collect();
    let k = c.len();
    let mut gram = SymmetricMatrix::zeros(k);
    for i in 0..k {
        for j in i..k {
            let shared: f64 =
                c.elements[i].edges.intersection(&c.elements[j].edges).map(|&e| g.edges[e].length.to_f64()).sum();
            gram.set_sym(i, j, shared / (lens[i] * lens[j]).sqrt());
        }
    }
    gram
}

fn require_loopless(g: &MetricGraph) -> Result<()> {
    match g.edges.iter().position(|e| e.is_loop()) {
        Some(i) => Err(Error::LoopPresent(g.edges[i].ends[0])),
        None => Ok(()),
    }
}

/// One (pumpkin) star per vertex; every non-loop edge lies in two stars.
pub fn star_cover(g: &MetricGraph) -> Result<Cover> {
    require_loopless(g)?;
    let mut c = Cover { m: 2, elements: Vec::new() };
    for (v, inc) in g.incidence().iter().enumerate() {
        c.push(format!("S{}", g.vertices[v]), inc.iter().map(|h| h.edge));
    }
    Ok(c)
}

pub fn copies_cover(g: &MetricGraph, m: usize) -> Result<Cover> {
    if m < 2 {
        return Err(Error::BadParameter(format!("copies needs m >= 2, got {m}")));
    }
    let mut c = Cover { m, elements: Vec::new() };
    for i in 0..m {
        c.push(format!("copy{}", i + 1), 0..g.edge_count());
    }
    Ok(c)
}

/// Boundary walks of the embedding, as dart sequences. The dart following
/// `h` is the successor of `h` reversed in the rotation at the head of `h`.
pub fn faces(g: &MetricGraph) -> Result<Vec<Vec<HalfEdge>>> {
    let rot = g.rotation.as_ref().ok_or(Error::NoRotation)?;
    g.check_rotation(rot)?;
    let mut succ: BTreeMap<HalfEdge, HalfEdge> = BTreeMap::new();
    for cyc in rot {
        for (k, &h) in cyc.iter().enumerate() {
            succ.insert(h, cyc[(k + 1) % cyc.len()]);
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        for end in 0..2 {
            let start = HalfEdge::new(e, end);
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut h = start;
            while seen.insert(h) {
                face.push(h);
                h = succ[&h.reversed()];
            }
            out.push(face);
        }
    }
    Ok(out)
}

fn face_edge_sets(g: &MetricGraph) -> Result<Vec<BTreeSet<usize>>> {
    let mut sets = Vec::new();
    for (f, walk) in faces(g)?.iter().enumerate() {
        let set: BTreeSet<usize> = walk.iter().map(|h| h.edge).collect();
        if set.len() != walk.len() {
            let dup = walk.iter().find(|h| walk.iter().filter(|x| x.edge == h.edge).count() > 1).unwrap();
            return Err(Error::NotBridgeless(format!(
                "edge {} borders face {} on both sides",
                g.edges[dup.edge].id,
                f + 1
            )));
        }
        sets.push(set);
    }
    Ok(sets)
}

/// Face boundaries of the embedding; a cycle double cover when the graph is
/// bridgeless.
pub fn face_cover(g: &MetricGraph) -> Result<Cover> {
    let mut c = Cover { m: 2, elements: Vec::new() };
    for (f, set) in face_edge_sets(g)?.into_iter().enumerate() {
        c.push(format!("F{}", f + 1), set);
    }
    Ok(c)
}

/// For every edge, the boundary of the union of its two faces. Identical
/// elements are kept once, so the tetrahedron yields its three diamonds and
/// the cube twelve hexagons.
pub fn face_pair_cover(g: &MetricGraph) -> Result<Cover> {
    let sets = face_edge_sets(g)?;
    let mut faces_of = vec![Vec::new(); g.edge_count()];
    for (f, set) in sets.iter().enumerate() {
        for &e in set {
            faces_of[e].push(f);
        }
    }
    let mut seen = BTreeSet::new();
    let mut elements = Vec::new();
    for (e, fs) in faces_of.iter().enumerate() {
        let [a, b] = fs[..] else {
            return Err(Error::NotBridgeless(format!("edge {} is not shared by two faces", g.edges[e].id)));
        };
        let union: BTreeSet<usize> = sets[a].symmetric_difference(&sets[b]).copied().collect();
        if seen.insert(union.clone()) {
            elements.push(CoverElement { label: format!("F{}+F{}", a + 1, b + 1), edges: union });
        }
    }
    let m = (0..g.edge_count()).map(|e| elements.iter().filter(|el| el.edges.contains(&e)).count()).max().unwrap_or(0);
    Ok(Cover { m, elements })
}

/// Every ordering of `0..m` that gives a distinct cyclic pumpkin cover,
/// up to rotation and reflection: (m−1)!/2 of them for m ≥ 3.
pub fn pumpkin_orderings(m: usize) -> Vec<Vec<usize>> {
    if m <= 2 {
        return vec![(0..m).collect()];
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (1..m).collect();
    permute(&mut rest, 0, &mut |p| {
        if p[0] < p[p.len() - 1] {
            let mut order = vec![0];
            order.extend_from_slice(p);
            out.push(order);
        }
    });
    out.sort();
    out
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// 𝒞_i = e_σ(i) ∪ e_σ(i+1) (cyclically) on a single pumpkin.
pub fn pumpkin_cycle_cover(g: &MetricGraph, order: Option<&[usize]>) -> Result<Cover> {
    let layout = chain_layout(g)?;
    if layout.len() != 1 {
        return Err(Error::NotAChain(format!("expected a single pumpkin, found {}", layout.len())));
    }
    let edges = &layout[0];
    let m = edges.len();
    let order: Vec<usize> = order.map(<[usize]>::to_vec).unwrap_or_else(|| (0..m).collect());
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (0..m).collect::<Vec<_>>() {
        return Err(Error::BadParameter(format!("{order:?} is not a permutation of 0..{m}")));
    }
    if m < 2 {
        return Err(Error::NotBridgeless("a one-edge pumpkin has no cycles".into()));
    }
    let mut c = Cover { m: 2, elements: Vec::new() };
    for i in 0..m {
        let (a, b) = (edges[order[i]], edges[order[(i + 1) % m]]);
        c.push(format!("C{}", i + 1), [a, b]);
    }
    Ok(c)
}

/// Edges of each pumpkin along a pumpkin chain, pumpkin by pumpkin from the
/// end vertex with the smaller index; inside a pumpkin, edges keep the
/// graph's edge order.
pub fn chain_layout(g: &MetricGraph) -> Result<Vec<Vec<usize>>> {
    require_loopless(g)?;
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return Err(Error::NotAChain("need a connected graph on at least two vertices".into()));
    }
    let mut nbrs = vec![BTreeSet::new(); n];
    for e in &g.edges {
        nbrs[e.ends[0]].insert(e.ends[1]);
        nbrs[e.ends[1]].insert(e.ends[0]);
    }
    if nbrs.iter().any(|s| s.len() > 2) || n != distinct_pairs(g) + 1 {
        return Err(Error::NotAChain("underlying simple graph is not a path".into()));
    }
    let start = (0..n).find(|&v| nbrs[v].len() == 1).unwrap();
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = nbrs[cur].iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    let mut layout = Vec::new();
    for w in order.windows(2) {
        let pair = (w[0].min(w[1]), w[0].max(w[1]));
        let edges: Vec<usize> = (0..g.edge_count())
            .filter(|&i| {
                let [a, b] = g.edges[i].ends;
                (a.min(b), a.max(b)) == pair
            })
            .collect();
        layout.push(edges);
    }
    Ok(layout)
}

fn distinct_pairs(g: &MetricGraph) -> usize {
    g.edges.iter().map(|e| (e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1]))).collect::<BTreeSet<_>>().len()
}

fn bridgeless_layout(g: &MetricGraph) -> Result<Vec<Vec<usize>>> {
    let layout = chain_layout(g)?;
    if let Some(i) = layout.iter().position(|p| p.len() < 2) {
        return Err(Error::NotBridgeless(format!("pumpkin {} is a single edge", i + 1)));
    }
    Ok(layout)
}

/// 𝒞_{i,j} = e_{i,j} ∪ e_{i,j+1}, with j one-based and wrapping at m_i.
fn pumpkin_cycle(layout: &[Vec<usize>], i: usize, j: usize) -> [usize; 2] {
    let p = &layout[i];
    [p[j - 1], p[j % p.len()]]
}

fn pumpkin_tag(pumpkins: &[usize]) -> String {
    pumpkins.iter().map(|i| (i + 1).to_string()).collect()
}

/// Layer `j` is the union of 𝒞_{i,j} over pumpkins with j < m_i, split into
/// connected pieces; a last element locks up every pumpkin with 𝒞_{i,m_i}.
pub fn layered_cover(g: &MetricGraph) -> Result<Cover> {
    let layout = bridgeless_layout(g)?;
    let n = layout.len();
    let max_m = layout.iter().map(Vec::len).max().unwrap();
    let mut c = Cover { m: 2, elements: Vec::new() };
    for j in 1..max_m {
        let members: Vec<usize> = (0..n).filter(|&i| j < layout[i].len()).collect();
        // consecutive pumpkins share a vertex; gaps split the layer
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for i in members {
            match runs.last_mut() {
                Some(run) if *run.last().unwrap() + 1 == i => run.push(i),
                _ => runs.push(vec![i]),
            }
        }
        for run in runs {
            let edges = run.iter().flat_map(|&i| pumpkin_cycle(&layout, i, j));
            c.push(format!("layer{j}:{}", pumpkin_tag(&run)), edges);
        }
    }
    let all: Vec<usize> = (0..n).collect();
    c.push(format!("lock:{}", pumpkin_tag(&all)), (0..n).flat_map(|i| pumpkin_cycle(&layout, i, layout[i].len())));
    Ok(c)
}

/// 𝒰_i = 𝒞_{i,1} ∪ 𝒞_{i+1,2} for consecutive pumpkins, then every cycle
/// 𝒞_{i,j} not used so far.
pub fn concatenated_cover(g: &MetricGraph) -> Result<Cover> {
    let layout = bridgeless_layout(g)?;
    let n = layout.len();
    let mut c = Cover { m: 2, elements: Vec::new() };
    let mut used = BTreeSet::new();
    for i in 0..n.saturating_sub(1) {
        let edges = pumpkin_cycle(&layout, i, 1).into_iter().chain(pumpkin_cycle(&layout, i + 1, 2));
        c.push(format!("U{}:{}", i + 1, pumpkin_tag(&[i, i + 1])), edges);
        used.insert((i, 1));
        used.insert((i + 1, 2));
    }
    for (i, p) in layout.iter().enumerate() {
        for j in 1..=p.len() {
            if !used.contains(&(i, j)) {
                c.push(format!("C{},{}:{}", i + 1, j, i + 1), pumpkin_cycle(&layout, i, j));
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, platonic, pumpkin_chain, FamilySpec, Platonic, PumpkinChainSpec};

    fn unit(p: Platonic) -> MetricGraph {
        platonic(p, Length::integer(1)).unwrap()
    }

    fn chain(ms: &[usize]) -> MetricGraph {
        pumpkin_chain(&PumpkinChainSpec::unit(ms)).unwrap()
    }

    fn tags(c: &Cover) -> Vec<String> {
        c.elements.iter().map(|e| e.label.split(':').nth(1).unwrap().to_string()).collect()
    }

    #[test]
    fn star_cover_of_icosahedron() {
        let g = unit(Platonic::Icosahedron);
        let c = build_cover(&g, &CoverStrategy::Star).unwrap();
        assert_eq!((c.m, c.len()), (2, 12));
    }

    #[test]
    fn face_counts_match_euler() {
        for p in Platonic::ALL {
            let g = unit(p);
            let c = build_cover(&g, &CoverStrategy::Faces).unwrap();
            let (v, e, f) = p.counts();
            assert_eq!(c.len(), f, "{}", p.name());
            assert_eq!(v as i64 - e as i64 + c.len() as i64, 2);
            let (n, _) = p.schlafli();
            assert!(c.elements.iter().all(|el| el.edges.len() == n));
        }
    }

    #[test]
    fn tetrahedron_faces_give_k4() {
        let g = unit(Platonic::Tetrahedron);
        let gamma = vicinity_graph(&g, &build_cover(&g, &CoverStrategy::Faces).unwrap()).unwrap();
        assert_eq!(gamma.edge_count(), 6);
        assert!(gamma.edges().all(|(_, _, w)| *w == Length::integer(1)));
    }

    #[test]
    fn cube_faces_give_octahedron() {
        let g = unit(Platonic::Cube);
        let gamma = vicinity_graph(&g, &build_cover(&g, &CoverStrategy::Faces).unwrap()).unwrap();
        assert_eq!((gamma.vertex_count(), gamma.edge_count()), (6, 12));
        assert!(gamma.degrees().iter().all(|d| *d == Length::integer(4)));
    }

    #[test]
    fn face_pairs() {
        let tet = unit(Platonic::Tetrahedron);
        let c = build_cover(&tet, &CoverStrategy::FacePairs).unwrap();
        assert_eq!((c.m, c.len()), (2, 3));
        assert!(c.elements.iter().all(|el| el.edges.len() == 4));
        let cube = unit(Platonic::Cube);
        let c = build_cover(&cube, &CoverStrategy::FacePairs).unwrap();
        assert_eq!((c.m, c.len()), (6, 12));
        assert!(c.elements.iter().all(|el| el.edges.len() == 6));
    }

    #[test]
    fn copies_give_complete_graph() {
        let g = chain(&[3, 2]);
        let c = build_cover(&g, &CoverStrategy::Copies(3)).unwrap();
        assert_eq!(validate_cover(&g, &c), Ok(3));
        let gamma = vicinity_graph(&g, &c).unwrap();
        assert_eq!(gamma.edge_count(), 3);
        assert!(gamma.edges().all(|(_, _, w)| *w == Length::integer(5)));
    }

    #[test]
    fn star_vicinity_is_reduced_graph() {
        let g = chain(&[3, 2, 4]);
        let gamma = vicinity_graph(&g, &star_cover(&g).unwrap()).unwrap();
        let w: Vec<_> = gamma.edges().map(|(u, v, w)| (u, v, w.clone())).collect();
        assert_eq!(w, vec![(0, 1, Length::integer(3)), (1, 2, Length::integer(2)), (2, 3, Length::integer(4))]);
    }

    #[test]
    fn non_uniform_rejected() {
        let g = chain(&[2]);
        let c = Cover { m: 2, elements: vec![CoverElement { label: "a".into(), edges: [0, 1].into() }] };
        assert!(matches!(validate_cover(&g, &c), Err(Error::NotUniform { count: 1, .. })));
    }

    #[test]
    fn disconnected_element_rejected() {
        let g = chain(&[2, 2, 2]);
        let c = Cover {
            m: 2,
            elements: vec![
                CoverElement { label: "x".into(), edges: (0..6).collect() },
                CoverElement { label: "y".into(), edges: [0, 4].into() },
                CoverElement { label: "z".into(), edges: [1, 2, 3, 5].into() },
            ],
        };
        assert_eq!(validate_cover(&g, &c), Err(Error::DisconnectedElement("y".into())));
    }

    #[test]
    fn orderings_count() {
        let fact = |n: usize| (1..=n).product::<usize>();
        for m in 3..8 {
            assert_eq!(pumpkin_orderings(m).len(), fact(m - 1) / 2);
        }
        assert_eq!(pumpkin_orderings(2).len(), 1);
    }

    #[test]
    fn pumpkin_cycles_are_two_edge_cycles() {
        for m in 2..7 {
            let g = generate(&FamilySpec::Pumpkin(vec![Length::integer(1); m])).unwrap();
            for order in pumpkin_orderings(m) {
                let c = build_cover(&g, &CoverStrategy::PumpkinCycles(Some(order))).unwrap();
                assert_eq!(c.len(), m);
                assert!(c.elements.iter().all(|el| el.edges.len() == 2));
            }
        }
    }

    #[test]
    fn layered_chain_324() {
        let c = build_cover(&chain(&[3, 2, 4]), &CoverStrategy::Layered).unwrap();
        assert_eq!(tags(&c), ["123", "1", "3", "3", "123"]);
    }

    #[test]
    fn layered_chain_324_weights() {
        let g = chain(&[3, 2, 4]);
        let gamma = vicinity_graph(&g, &layered_cover(&g).unwrap()).unwrap();
        assert_eq!(gamma.weight(0, 4), Some(&Length::integer(4)));
        assert_eq!(gamma.weight(0, 1), Some(&Length::integer(1)));
        assert_eq!(gamma.weight(1, 4), Some(&Length::integer(1)));
        assert_eq!(gamma.edge_count(), 6);
    }

    #[test]
    fn concatenated_chain_324() {
        let g = chain(&[3, 2, 4]);
        let c = build_cover(&g, &CoverStrategy::Concatenated).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(tags(&c), ["12", "23", "1", "1", "3", "3", "3"]);
        let gamma = vicinity_graph(&g, &c).unwrap();
        assert_eq!(gamma.weight(0, 1), Some(&Length::integer(2)));
        assert_eq!(gamma.edge_count(), 8);
    }

    #[test]
    fn chain_requires_bridgeless() {
        let g = chain(&[2, 1, 3]);
        assert!(matches!(build_cover(&g, &CoverStrategy::Layered), Err(Error::NotBridgeless(_))));
        let tet = unit(Platonic::Tetrahedron);
        assert!(matches!(build_cover(&tet, &CoverStrategy::Layered), Err(Error::NotAChain(_))));
    }

    #[test]
    fn faces_need_rotation() {
        let mut g = unit(Platonic::Cube);
        g.rotation = None;
        assert_eq!(build_cover(&g, &CoverStrategy::Faces), Err(Error::NoRotation));
    }

    #[test]
    fn faces_of_a_tree_are_not_cycles() {
        let g = generate(&FamilySpec::Star(vec![Length::integer(1); 3])).unwrap();
        assert!(matches!(build_cover(&g, &CoverStrategy::Faces), Err(Error::NotBridgeless(_))));
    }

    #[test]
    fn chain_faces_are_pumpkin_cycles() {
        let g = chain(&[3, 2, 4]);
        let c = face_cover(&g).unwrap();
        assert_eq!(validate_cover(&g, &c), Ok(2));
        let mut sizes: Vec<usize> = c.elements.iter().map(|el| el.edges.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [2, 2, 2, 2, 2, 2, 6]);
    }

    #[test]
    fn strategy_parsing() {
        assert_eq!("copies:3".parse::<CoverStrategy>(), Ok(CoverStrategy::Copies(3)));
        assert_eq!("pumpkin:0,2,1".parse::<CoverStrategy>(), Ok(CoverStrategy::PumpkinCycles(Some(vec![0, 2, 1]))));
        assert!("bogus".parse::<CoverStrategy>().is_err());
    }
}
