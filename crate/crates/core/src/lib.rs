//! Graded Betti numbers, regularity, projective dimension and depth of
//! edge ideals of vertex-weighted oriented graphs, with closed-form
//! predictions for rooted forests, oriented cycles and unicyclic graphs.
//!
//! All arithmetic is exact. Betti numbers come from the reduced homology
//! of upper Koszul simplicial complexes over the rationals.

pub mod betti;
pub mod campaign;
pub mod classify;
pub mod digraph;
pub mod error;
pub mod fixtures;
pub mod formulas;
pub mod generate;
pub mod linalg;
pub mod monomial;
pub mod repro;
pub mod simplicial;
pub mod splitting;
pub mod syntax;

pub use betti::{BettiEngine, BettiTable, Convention, Guard, InvariantSummary};
pub use classify::{check_hypotheses, classify, ClassTag, GraphClass, HypothesisReport};
pub use digraph::{Vertex, WeightedDigraph};
pub use error::{Error, Result};
pub use formulas::{predict, verify_formula, FormulaPrediction, InvariantReport, Verdict};
pub use generate::{random_instance, InstanceParams};
pub use monomial::{intersect, lcm_of, make_ideal, multiply_external, polarize, Monomial, MonomialIdeal, Variable};
pub use splitting::{build_split, check_betti_splitting, has_linear_resolution, split_report, SplitPair};
pub use syntax::{parse_ideal, parse_monomial};

/// Serializes to pretty JSON with object keys sorted.
pub fn canonical_json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}
