//! JSON graph and cover files, and the compact family strings used by `gen`.
//!
//! Graph file:
//!
//! ```json
//! {"vertices": ["a", "b"],
//!  "edges": [{"id": "e0", "ends": ["a", "b"], "length": "1/2"}],
//!  "rotation": {"a": [{"edge": "e0", "end": 0}], "b": [{"edge": "e0", "end": 1}]}}
//! ```
//!
//! Vertex and edge ids may be strings or integers; they are stored as strings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::covers::{validate_cover, Cover, CoverElement};
use crate::error::{Error, Result};
use crate::families::{FamilySpec, Platonic, PumpkinChainSpec, PumpkinLengths};
use crate::graph::{Edge, HalfEdge, MetricGraph};
use crate::length::Length;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
enum RawId {
    Str(String),
    Int(i64),
}

impl fmt::Display for RawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RawId::Str(s) => f.write_str(s),
            RawId::Int(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    vertices: Vec<RawId>,
    edges: Vec<RawEdge>,
    #[serde(default)]
    rotation: Option<BTreeMap<String, Vec<RawHalfEdge>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    id: RawId,
    ends: [RawId; 2],
    length: Length,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHalfEdge {
    edge: RawId,
    end: u8,
}

#[derive(Serialize)]
struct WireGraph<'a> {
    vertices: &'a [String],
    edges: Vec<WireEdge<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rotation: Option<BTreeMap<&'a str, Vec<WireHalfEdge<'a>>>>,
}

#[derive(Serialize)]
struct WireEdge<'a> {
    id: &'a str,
    ends: [&'a str; 2],
    length: &'a Length,
}

#[derive(Serialize)]
struct WireHalfEdge<'a> {
    edge: &'a str,
    end: u8,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCover {
    m: usize,
    elements: Vec<RawElement>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawElement {
    #[serde(default)]
    label: Option<String>,
    edges: Vec<RawId>,
}

#[derive(Serialize)]
struct WireCover<'a> {
    m: usize,
    elements: Vec<WireElement<'a>>,
}

#[derive(Serialize)]
struct WireElement<'a> {
    label: &'a str,
    edges: Vec<&'a str>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn syntax_err(e: serde_json::Error) -> Error {
    parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Parses a graph file. Loops are split into two half-length edges.
pub fn graph_from_json(text: &str) -> Result<MetricGraph> {
    let raw: RawGraph = serde_json::from_str(text).map_err(syntax_err)?;

    let mut vertex_index = HashMap::new();
    let mut vertices = Vec::with_capacity(raw.vertices.len());
    for (i, v) in raw.vertices.iter().enumerate() {
        let name = v.to_string();
        if vertex_index.insert(name.clone(), i).is_some() {
            return Err(parse_err(format!("vertices[{i}]"), format!("duplicate vertex id {name}")));
        }
        vertices.push(name);
    }

    let mut edge_index = HashMap::new();
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (i, e) in raw.edges.into_iter().enumerate() {
        let id = e.id.to_string();
        let at = format!("edges[{i}] (edge {id})");
        if edge_index.insert(id.clone(), i).is_some() {
            return Err(parse_err(at, format!("duplicate edge id {id}")));
        }
        let mut ends = [0; 2];
        for (k, v) in e.ends.iter().enumerate() {
            ends[k] = *vertex_index
                .get(&v.to_string())
                .ok_or_else(|| parse_err(&at, format!("edge {id} refers to unknown vertex {v}")))?;
        }
        if !e.length.is_positive_finite() {
            return Err(parse_err(at, format!("edge {id} has non-positive length {}", e.length)));
        }
        edges.push(Edge { id, ends, length: e.length });
    }

    let mut g = MetricGraph { vertices, edges, rotation: None };

    if let Some(raw_rot) = raw.rotation {
        let mut rot = vec![Vec::new(); g.vertices.len()];
        for (v, cyc) in raw_rot {
            let at = format!("rotation.{v}");
            let vi = *vertex_index.get(&v).ok_or_else(|| parse_err(&at, format!("unknown vertex {v}")))?;
            for (k, h) in cyc.iter().enumerate() {
                let ei = *edge_index
                    .get(&h.edge.to_string())
                    .ok_or_else(|| parse_err(format!("{at}[{k}]"), format!("unknown edge {}", h.edge)))?;
                if h.end > 1 {
                    return Err(parse_err(format!("{at}[{k}]"), format!("end must be 0 or 1, got {}", h.end)));
                }
                rot[vi].push(HalfEdge::new(ei, h.end));
            }
        }
        g.check_rotation(&rot).map_err(|e| match e {
            Error::InvalidRotation { vertex, reason } => {
                parse_err(format!("rotation.{vertex}"), format!("vertex {vertex}: {reason}"))
            }
            other => other,
        })?;
        g.rotation = Some(rot);
    }

    let g = g.split_loops();
    g.validate()?;
    Ok(g)
}

pub fn graph_to_json(g: &MetricGraph) -> String {
    let wire = WireGraph {
        vertices: &g.vertices,
        edges: g
            .edges
            .iter()
            .map(|e| WireEdge { id: &e.id, ends: [&g.vertices[e.ends[0]], &g.vertices[e.ends[1]]], length: &e.length })
            .collect(),
        rotation: g.rotation.as_ref().map(|rot| {
            rot.iter()
                .enumerate()
                .map(|(v, cyc)| {
                    let hs = cyc.iter().map(|h| WireHalfEdge { edge: &g.edges[h.edge].id, end: h.end }).collect();
                    (g.vertices[v].as_str(), hs)
                })
                .collect()
        }),
    };
    serde_json::to_string_pretty(&wire).expect("graph serialization cannot fail")
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<MetricGraph> {
    graph_from_json(&read(path.as_ref())?)
}

pub fn save_graph(g: &MetricGraph, path: impl AsRef<Path>) -> Result<()> {
    write(path.as_ref(), &graph_to_json(g))
}

/// Parses a cover file against `g` and validates it.
pub fn cover_from_json(g: &MetricGraph, text: &str) -> Result<Cover> {
    let raw: RawCover = serde_json::from_str(text).map_err(syntax_err)?;
    let index: HashMap<&str, usize> = g.edges.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect();
    let mut elements = Vec::with_capacity(raw.elements.len());
    for (i, el) in raw.elements.into_iter().enumerate() {
        let mut edges = std::collections::BTreeSet::new();
        for id in &el.edges {
            let id = id.to_string();
            let e = *index.get(id.as_str()).ok_or(Error::UnknownEdge(id))?;
            edges.insert(e);
        }
        elements.push(CoverElement { label: el.label.unwrap_or_else(|| format!("U{i}")), edges });
    }
    let cover = Cover { m: raw.m, elements };
    validate_cover(g, &cover)?;
    Ok(cover)
}

pub fn cover_to_json(g: &MetricGraph, cover: &Cover) -> String {
    let wire = WireCover {
        m: cover.m,
        elements: cover
            .elements
            .iter()
            .map(|el| WireElement {
                label: &el.label,
                edges: el.edges.iter().map(|&e| g.edges[e].id.as_str()).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&wire).expect("cover serialization cannot fail")
}

pub fn load_cover(g: &MetricGraph, path: impl AsRef<Path>) -> Result<Cover> {
    cover_from_json(g, &read(path.as_ref())?)
}

fn lengths(list: &str, family: &str) -> Result<Vec<Length>> {
    list.split(',').map(|s| s.parse::<Length>().map_err(|m| Error::BadParameter(format!("{family}: {m}")))).collect()
}

fn count(s: &str, family: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::BadParameter(format!("{family}: `{s}` is not a count")))
}

/// Parses a family string.
///
/// | string | graph |
/// |---|---|
/// | `platonic:NAME` | Platonic solid, every edge of length `length` |
/// | `pumpkin:M` | M parallel edges of length `length` |
/// | `pumpkin:L1,L2,...` | one parallel edge per listed length |
/// | `chain:M1,M2,...` | pumpkin chain, every edge of length `length` |
/// | `chain:M1,...@L1,...` | pumpkin chain, pumpkin i equilateral with edge length Li |
/// | `cycle:N` | N edges of length `length` around a cycle |
/// | `path` / `path:L` | interval of length `length` / L |
/// | `star:K` | K legs of length `length` |
/// | `star:L1,L2,...` | one leg per listed length |
///
/// `length` defaults to 1.
pub fn parse_family(s: &str, length: Option<Length>) -> Result<FamilySpec> {
    let ell = length.unwrap_or_else(|| Length::integer(1));
    let (name, arg) = match s.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (s, None),
    };
    let unknown = || Error::UnknownFamily(s.to_string());
    let spec = match (name, arg) {
        ("platonic", Some(p)) => FamilySpec::Platonic(p.parse::<Platonic>()?, ell),
        ("pumpkin", Some(a)) if a.contains(',') => FamilySpec::Pumpkin(lengths(a, s)?),
        ("pumpkin", Some(a)) => FamilySpec::Pumpkin(vec![ell; count(a, s)?]),
        ("chain", Some(a)) => {
            let (ms, ls) = match a.split_once('@') {
                Some((m, l)) => (m, Some(l)),
                None => (a, None),
            };
            let multiplicities = ms.split(',').map(|m| count(m, s)).collect::<Result<Vec<_>>>()?;
            let per = match ls {
                Some(l) => lengths(l, s)?,
                None => vec![ell; multiplicities.len()],
            };
            let spec =
                PumpkinChainSpec { multiplicities, lengths: per.into_iter().map(PumpkinLengths::Common).collect() };
            spec.validate()?;
            FamilySpec::PumpkinChain(spec)
        }
        ("cycle", Some(n)) => {
            let edges = count(n, s)?;
            FamilySpec::Cycle { length: &ell * &Length::integer(edges as i64), edges }
        }
        ("path", None) => FamilySpec::Path(ell),
        ("path", Some(l)) => FamilySpec::Path(lengths(l, s)?.remove(0)),
        ("star", Some(a)) if a.contains(',') => FamilySpec::Star(lengths(a, s)?),
        ("star", Some(a)) => FamilySpec::Star(vec![ell; count(a, s)?]),
        _ => return Err(unknown()),
    };
    Ok(spec)
}
