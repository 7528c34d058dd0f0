//! Exact monophonic position solvers. Extension tests re-run the induced
//! path predicate, so these are capped by instance size; the cap is a
//! parameter because dense instances stay tractable well past the default.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::position::is_monophonic_position;

use super::{Invariant, InvariantReport, Method};

/// Default vertex-count cap for the monophonic searches.
pub const DEFAULT_MONOPHONIC_CAP: usize = 16;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::capacity(format!(
            "monophonic search on {} vertices exceeds the cap of {cap}",
            g.n()
        )));
    }
    Ok(())
}

fn extension_keeps_mp(g: &Graph, set: &VertexSet, w: usize) -> bool {
    let mut bigger = set.clone();
    bigger.insert(w);
    is_monophonic_position(g, &bigger)
}

fn is_maximal_mp(g: &Graph, set: &VertexSet) -> bool {
    (0..g.n()).all(|w| set.contains(w) || !extension_keeps_mp(g, set, w))
}

struct LowerSearch<'a> {
    g: &'a Graph,
    nodes: u64,
}

impl LowerSearch<'_> {
    fn dfs(&mut self, set: &mut VertexSet, from: usize, left: usize) -> Option<VertexSet> {
        self.nodes += 1;
        if left == 0 {
            if is_maximal_mp(self.g, set) {
                return Some(set.clone());
            }
            return None;
        }
        let n = self.g.n();
        for w in from..n {
            if n - w < left {
                break;
            }
            if extension_keeps_mp(self.g, set, w) {
                set.insert(w);
                let hit = self.dfs(set, w + 1, left - 1);
                set.remove(w);
                if hit.is_some() {
                    return hit;
                }
            }
        }
        None
    }
}

/// Smallest maximal monophonic position set, cardinalities in increasing
/// order.
pub fn lower_mp_number(g: &Graph, cap: usize) -> Result<InvariantReport> {
    check_cap(g, cap)?;
    let n = g.n();
    if n == 0 {
        return Ok(InvariantReport {
            invariant: Invariant::LowerMp,
            value: Some(0),
            witness: VertexSet::empty(0),
            nodes_explored: 0,
            method: Method::Pruned,
        });
    }
    let mut nodes = 0;
    for k in 1..=n {
        let mut search = LowerSearch { g, nodes: 0 };
        let hit = search.dfs(&mut VertexSet::empty(n), 0, k);
        nodes += search.nodes;
        if let Some(witness) = hit {
            return Ok(InvariantReport {
                invariant: Invariant::LowerMp,
                value: Some(k),
                witness,
                nodes_explored: nodes,
                method: Method::Pruned,
            });
        }
    }
    unreachable!("every non-empty graph has a maximal monophonic position set");
}

struct MaxSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
    nodes: u64,
}

impl MaxSearch<'_> {
    fn dfs(&mut self, set: &mut VertexSet, cand: &[usize]) {
        self.nodes += 1;
        if set.len() > self.best.len() {
            self.best = set.clone();
        }
        for (i, &w) in cand.iter().enumerate() {
            if set.len() + (cand.len() - i) <= self.best.len() {
                break;
            }
            set.insert(w);
            let child_cand: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&x| extension_keeps_mp(self.g, set, x))
                .collect();
            self.dfs(set, &child_cand);
            set.remove(w);
        }
    }
}

/// Largest monophonic position set, branch and bound.
pub fn mp_number(g: &Graph, cap: usize) -> Result<InvariantReport> {
    check_cap(g, cap)?;
    let n = g.n();
    if n == 0 {
        return Ok(InvariantReport {
            invariant: Invariant::Mp,
            value: Some(0),
            witness: VertexSet::empty(0),
            nodes_explored: 0,
            method: Method::Pruned,
        });
    }
    // greedy seed
    let mut seed = VertexSet::empty(n);
    for w in 0..n {
        if extension_keeps_mp(g, &seed, w) {
            seed.insert(w);
        }
    }
    let mut search = MaxSearch { g, best: seed, nodes: 0 };
    let root: Vec<usize> = (0..n).collect();
    search.dfs(&mut VertexSet::empty(n), &root);
    Ok(InvariantReport {
        invariant: Invariant::Mp,
        value: Some(search.best.len()),
        witness: search.best,
        nodes_explored: search.nodes,
        method: Method::Pruned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn complete_graphs_take_everything() {
        let g = complete_graph(6);
        assert_eq!(mp_number(&g, 16).unwrap().value, Some(6));
        assert_eq!(lower_mp_number(&g, 16).unwrap().value, Some(6));
    }

    #[test]
    fn paths_and_cycles() {
        // both ends of a path, and nothing in between, are maximal
        assert_eq!(lower_mp_number(&path_graph(6), 16).unwrap().value, Some(2));
        // in a cycle of length >= 4 both arcs between a non-adjacent pair
        // are induced, so any third vertex sits inside one of them
        assert_eq!(mp_number(&cycle_graph(6), 16).unwrap().value, Some(2));
        assert_eq!(mp_number(&cycle_graph(4), 16).unwrap().value, Some(2));
        assert_eq!(mp_number(&cycle_graph(3), 16).unwrap().value, Some(3));
    }

    #[test]
    fn cap_is_enforced() {
        let g = path_graph(17);
        assert!(matches!(lower_mp_number(&g, 16), Err(Error::Capacity(_))));
        assert!(matches!(mp_number(&g, 16), Err(Error::Capacity(_))));
        assert!(mp_number(&g, 17).is_ok());
    }

    #[test]
    fn witnesses_certify() {
        let g = cycle_graph(7);
        let lower = lower_mp_number(&g, 16).unwrap();
        assert!(is_monophonic_position(&g, &lower.witness));
        assert!(is_maximal_mp(&g, &lower.witness));
        let upper = mp_number(&g, 16).unwrap();
        assert!(is_monophonic_position(&g, &upper.witness));
        assert!(lower.value <= upper.value);
    }
}
