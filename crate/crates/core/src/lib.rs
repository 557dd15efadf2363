//! Spectral gap lower bounds for compact metric graphs via covers and
//! vicinity graphs.

#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod covers;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod length;
pub mod linalg;
pub mod oracle;
pub mod repro;
pub mod weighted;

pub use bounds::{BoundReport, BoundRow, CompareRow, EtaStrategy};
pub use covers::{Cover, CoverElement, CoverStrategy};
pub use error::{Error, Result};
pub use families::{FamilySpec, Platonic, PumpkinChainSpec, PumpkinLengths};
pub use graph::{Edge, HalfEdge, MetricGraph, ValidationReport};
pub use length::Length;
pub use oracle::{OracleMethod, SpectrumResult};
pub use repro::{ReproCase, ReproRow, Status};
pub use weighted::{WeightedGraph, WeightedMultigraph};
