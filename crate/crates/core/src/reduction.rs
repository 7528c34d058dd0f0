//! Polynomial transformation from Independent Dominating Set to the
//! decision problem "is there a maximal general position set of size at
//! most k'?". The target graph is (complement(G) u K_{n+1}) joined with
//! a single apex vertex, with k' = k + 1: a smallest maximal clique of
//! complement(G) is exactly a minimum independent dominating set of G,
//! and the join formula pins the target's lower gp number to one more.

use crate::error::{Error, Result};
use crate::graph::{complete_graph, Graph};
use crate::solvers::{lower_gp_number, min_independent_dominating_set};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// Copy of a source vertex inside the complement part.
    Complement(usize),
    /// Vertex of the K_{n+1} padding clique.
    Clique,
    /// The universal join vertex.
    Apex,
}

impl Role {
    pub fn to_json(self) -> serde_json::Value {
        match self {
            Role::Complement(v) => serde_json::json!({"role": "complement", "source_vertex": v}),
            Role::Clique => serde_json::json!({"role": "clique"}),
            Role::Apex => serde_json::json!({"role": "apex"}),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub source: Graph,
    pub k: usize,
    pub target: Graph,
    pub k_prime: usize,
    /// Role of each target vertex, indexed by target vertex number.
    pub roles: Vec<Role>,
}

impl ReductionInstance {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "source_order": self.source.n(),
            "k": self.k,
            "target_order": self.target.n(),
            "k_prime": self.k_prime,
            "roles": self.roles.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Builds the decision-problem instance for "does G have an independent
/// dominating set of size <= k". Target layout: vertices 0..n are the
/// complement part, n..2n+1 the padding clique, 2n+1 the apex.
pub fn build_lgp_instance(g: &Graph, k: usize) -> Result<ReductionInstance> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::input(format!("threshold k = {k} must satisfy 1 <= k <= {n}")));
    }
    let target = g
        .complement()
        .disjoint_union(&complete_graph(n + 1))
        .join(&complete_graph(1));
    let mut roles: Vec<Role> = (0..n).map(Role::Complement).collect();
    roles.extend(std::iter::repeat_n(Role::Clique, n + 1));
    roles.push(Role::Apex);
    debug_assert_eq!(target.n(), 2 * n + 2);
    Ok(ReductionInstance { source: g.clone(), k, target, k_prime: k + 1, roles })
}

pub const REDUCTION_VERIFY_CAP: usize = 10;

/// Decides both sides of the instance exactly and reports whether the
/// answers agree. A `false` is a correctness bug, not a property of the
/// input.
pub fn verify_reduction(g: &Graph, k: usize) -> Result<bool> {
    if g.n() > REDUCTION_VERIFY_CAP {
        return Err(Error::capacity(format!(
            "reduction verification decides both sides exactly; capped at {REDUCTION_VERIFY_CAP} source vertices, got {}",
            g.n()
        )));
    }
    let instance = build_lgp_instance(g, k)?;
    let ids = min_independent_dominating_set(g).value.expect("ids is always defined");
    let lower_gp = lower_gp_number(&instance.target)
        .value
        .expect("lower gp is always defined");
    Ok((ids <= k) == (lower_gp <= instance.k_prime))
}
