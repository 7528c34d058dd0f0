//! Ground-truth solvers by full subset enumeration. Deliberately naive:
//! they walk all 2^n subsets and apply the plain predicates, sharing none
//! of the pruned searches' incremental machinery. Test-scale only.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::metric::DistanceMatrix;
use crate::position::{
    independent_union_of_cliques, is_general_position, is_geodetic, is_monophonic_position,
};

use super::{Invariant, InvariantReport, Method};

const ORACLE_CAP: usize = 20;

fn mask_to_set(n: usize, mask: u32) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for v in 0..n {
        if mask >> v & 1 == 1 {
            s.insert(v);
        }
    }
    s
}

fn report(invariant: Invariant, value: Option<usize>, witness: VertexSet, n: usize) -> InvariantReport {
    InvariantReport {
        invariant,
        value,
        witness,
        nodes_explored: 1u64 << n,
        method: Method::Oracle,
    }
}

/// Runs `check` over every subset; keeps the first largest (if `largest`)
/// or first smallest hit.
fn extremal_subset(
    n: usize,
    largest: bool,
    mut check: impl FnMut(&VertexSet) -> bool,
) -> Option<VertexSet> {
    assert!(n <= ORACLE_CAP, "oracle enumeration is capped at {ORACLE_CAP} vertices");
    let mut best: Option<VertexSet> = None;
    for mask in 0..(1u32 << n) {
        let s = mask_to_set(n, mask);
        let improves = match &best {
            None => true,
            Some(b) => {
                if largest {
                    s.len() > b.len()
                } else {
                    s.len() < b.len()
                }
            }
        };
        if improves && check(&s) {
            best = Some(s);
        }
    }
    best
}

pub fn gp_number(g: &Graph) -> InvariantReport {
    let d = DistanceMatrix::of(g);
    let best = extremal_subset(g.n(), true, |s| is_general_position(&d, s))
        .expect("the empty set is in general position");
    report(Invariant::Gp, Some(best.len()), best, g.n())
}

fn naive_maximal_gp(d: &DistanceMatrix, s: &VertexSet) -> bool {
    if !is_general_position(d, s) {
        return false;
    }
    (0..d.n()).all(|w| {
        if s.contains(w) {
            return true;
        }
        let mut bigger = s.clone();
        bigger.insert(w);
        !is_general_position(d, &bigger)
    })
}

pub fn lower_gp_number(g: &Graph) -> InvariantReport {
    let d = DistanceMatrix::of(g);
    let best = extremal_subset(g.n(), false, |s| naive_maximal_gp(&d, s))
        .expect("a maximal general position set always exists");
    report(Invariant::LowerGp, Some(best.len()), best, g.n())
}

pub fn geodetic_number(g: &Graph) -> InvariantReport {
    if !g.is_connected() {
        return report(Invariant::Geodetic, None, VertexSet::empty(g.n()), g.n());
    }
    let d = DistanceMatrix::of(g);
    let best = extremal_subset(g.n(), false, |s| is_geodetic(&d, s))
        .expect("the full vertex set is geodetic");
    report(Invariant::Geodetic, Some(best.len()), best, g.n())
}

pub fn mp_number(g: &Graph) -> InvariantReport {
    let best = extremal_subset(g.n(), true, |s| is_monophonic_position(g, s))
        .expect("the empty set is in monophonic position");
    report(Invariant::Mp, Some(best.len()), best, g.n())
}

fn naive_maximal_mp(g: &Graph, s: &VertexSet) -> bool {
    if !is_monophonic_position(g, s) {
        return false;
    }
    (0..g.n()).all(|w| {
        if s.contains(w) {
            return true;
        }
        let mut bigger = s.clone();
        bigger.insert(w);
        !is_monophonic_position(g, &bigger)
    })
}

pub fn lower_mp_number(g: &Graph) -> InvariantReport {
    let best = extremal_subset(g.n(), false, |s| naive_maximal_mp(g, s))
        .expect("a maximal monophonic position set always exists");
    report(Invariant::LowerMp, Some(best.len()), best, g.n())
}

fn naive_maximal_clique(g: &Graph, s: &VertexSet) -> bool {
    if !g.is_clique(s) {
        return false;
    }
    (0..g.n()).all(|w| {
        if s.contains(w) {
            return true;
        }
        let mut bigger = s.clone();
        bigger.insert(w);
        !g.is_clique(&bigger)
    })
}

pub fn clique_numbers(g: &Graph) -> (InvariantReport, InvariantReport) {
    let max = extremal_subset(g.n(), true, |s| g.is_clique(s))
        .expect("the empty set is a clique");
    let min = extremal_subset(g.n(), false, |s| naive_maximal_clique(g, s))
        .expect("a maximal clique always exists");
    (
        report(Invariant::Omega, Some(max.len()), max, g.n()),
        report(Invariant::LowerOmega, Some(min.len()), min, g.n()),
    )
}

fn naive_maximal_iuc(g: &Graph, s: &VertexSet) -> bool {
    if independent_union_of_cliques(g, s).is_none() {
        return false;
    }
    (0..g.n()).all(|w| {
        if s.contains(w) {
            return true;
        }
        let mut bigger = s.clone();
        bigger.insert(w);
        independent_union_of_cliques(g, &bigger).is_none()
    })
}

pub fn iuc_numbers(g: &Graph) -> (InvariantReport, InvariantReport) {
    let max = extremal_subset(g.n(), true, |s| independent_union_of_cliques(g, s).is_some())
        .expect("the empty set is an independent union of cliques");
    let min = extremal_subset(g.n(), false, |s| {
        independent_union_of_cliques(g, s).is_some_and(|c| c >= 2) && naive_maximal_iuc(g, s)
    });
    let lower = match min {
        Some(w) => report(Invariant::LowerAlphaOmega, Some(w.len()), w, g.n()),
        None => report(Invariant::LowerAlphaOmega, None, VertexSet::empty(g.n()), g.n()),
    };
    (report(Invariant::AlphaOmega, Some(max.len()), max, g.n()), lower)
}

fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    let mut covered = s.clone();
    for v in s.iter() {
        covered.union_with(g.neighbors(v));
    }
    covered.len() == g.n()
}

pub fn min_independent_dominating_set(g: &Graph) -> InvariantReport {
    let best = extremal_subset(g.n(), false, |s| is_independent(g, s) && is_dominating(g, s))
        .expect("a maximal independent set dominates");
    report(Invariant::Ids, Some(best.len()), best, g.n())
}
