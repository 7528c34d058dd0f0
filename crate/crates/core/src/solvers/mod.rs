//! Exact solvers. Each optimized search has a naive full-enumeration
//! counterpart in [`oracle`] used as ground truth by the test suite and
//! the oracle-equivalence sweep.

mod between;
mod cliques;
mod general_position;
mod geodetic;
mod lines;
mod mono;
pub mod oracle;

pub use cliques::{clique_numbers, iuc_numbers, min_independent_dominating_set};
pub use general_position::{gp_number, lower_gp_number};
pub use geodetic::geodetic_number;
pub use lines::{check_chen_chvatal, count_distinct_lines, has_universal_line, ChenChvatal};
pub use mono::{lower_mp_number, mp_number, DEFAULT_MONOPHONIC_CAP};

use crate::bitset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    /// Largest general position set.
    Gp,
    /// Smallest maximal general position set.
    LowerGp,
    /// Smallest geodetic set (undefined for disconnected graphs).
    Geodetic,
    /// Largest monophonic position set.
    Mp,
    /// Smallest maximal monophonic position set.
    LowerMp,
    /// Largest clique.
    Omega,
    /// Smallest maximal clique.
    LowerOmega,
    /// Largest independent union of cliques.
    AlphaOmega,
    /// Smallest maximal independent union of >= 2 cliques
    /// (undefined for complete graphs).
    LowerAlphaOmega,
    /// Smallest independent dominating set.
    Ids,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Gp => "gp",
            Invariant::LowerGp => "gp-",
            Invariant::Geodetic => "geodetic",
            Invariant::Mp => "mp",
            Invariant::LowerMp => "mp-",
            Invariant::Omega => "omega",
            Invariant::LowerOmega => "omega-",
            Invariant::AlphaOmega => "iuc",
            Invariant::LowerAlphaOmega => "iuc-",
            Invariant::Ids => "ids",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Pruned exact search.
    Pruned,
    /// Naive full enumeration.
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Pruned => "pruned",
            Method::Oracle => "oracle",
        }
    }
}

/// Result of one invariant computation. `value` is None when the
/// invariant is undefined for the input; otherwise `witness` is a set
/// certifying the value (re-checkable with the position predicates).
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub invariant: Invariant,
    pub value: Option<usize>,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub method: Method,
}

impl InvariantReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "invariant": self.invariant.name(),
            "value": self.value,
            "witness": self.witness.to_vec(),
            "nodes_explored": self.nodes_explored,
            "method": self.method.name(),
        })
    }
}
