//! Exact combinatorics of compactified Jacobians of stable curves.
//!
//! A stable curve is represented by its weighted dual graph. From it the
//! crate computes the degree class group, the sets of balanced and strictly
//! balanced multidegrees, the index set of irreducible components of the
//! degree-`d` compactified Jacobian, and whether that Jacobian has as many
//! components as the Néron model (is "of Néron type").

pub mod balance;
pub mod census;
pub mod class_group;
pub mod error;
pub mod format;
pub mod graph;
pub mod iso;
pub mod lattice;
pub mod locus;
pub mod neron;
pub mod survey;
pub mod surgery;

pub use balance::{
    alpha, enumerate_balanced, is_balanced, is_d_general, is_strictly_balanced,
    is_weakly_d_general, m_lower_bound, BalanceBound, BalanceSystem, BalancedSet,
};
pub use census::census;
pub use class_group::{
    class_group, class_representatives, intersection_matrix, same_class, ClassGroup, ClassKey,
    IntersectionMatrix, Multidegree,
};
pub use error::{Error, Result};
pub use format::{graph_to_json, parse_graph};
pub use graph::{Diagnostics, EdgeSubset, Subcurve, VertexSet, WeightedGraph};
pub use iso::{canonical_form, is_isomorphic, CanonicalForm};
pub use locus::{
    codim_report, d_special_vine_scan, gcd_remark_audit, is_d_special, vine, CodimReport,
    Codimension, VineCurve,
};
pub use neron::{
    check_g_minus_1, component_count, extremal_pair, is_neron_type, s_of_mu, strata_index,
    CurveAnalysis, ExtremalPair, NeronVerdict, Route, Stratum,
};
pub use survey::{census_run, CensusReport, CensusRow};
pub use surgery::{blow_up, contract_separating, is_tree_like, separating_edges, BlowUp, Contraction};
