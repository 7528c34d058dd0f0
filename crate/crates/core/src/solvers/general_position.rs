//! Exact general position searches.
//!
//! Both solvers walk subsets in ascending vertex order and only ever
//! extend sets that stay in general position, using the precomputed
//! betweenness rows. A growing set carries its `blocked` mask — the union
//! of the betweenness rows over its pairs — so an extension test is one
//! membership check plus one row-union intersection.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::metric::DistanceMatrix;

use super::between::BetweenTables;
use super::{Invariant, InvariantReport, Method};

/// Union of blockers(u, w) over u in the current set: the vertices that
/// would sit strictly between w and a member.
fn endpoint_blockers(bt: &BetweenTables, members: &[usize], w: usize) -> VertexSet {
    let mut out = VertexSet::empty(bt.n());
    for &u in members {
        out.union_with(bt.blockers(u, w));
    }
    out
}

/// If `members + w` is still in general position, returns the rows to fold
/// into the blocked mask. `blocked` must be the pair-blocker union of the
/// current set, which is in general position.
fn try_extend(
    bt: &BetweenTables,
    members: &[usize],
    set: &VertexSet,
    blocked: &VertexSet,
    w: usize,
) -> Option<VertexSet> {
    if blocked.contains(w) {
        return None; // w lies between two members
    }
    let rows = endpoint_blockers(bt, members, w);
    if rows.intersects(set) {
        return None; // some member lies between w and another member
    }
    Some(rows)
}

fn is_maximal(bt: &BetweenTables, members: &[usize], set: &VertexSet, blocked: &VertexSet) -> bool {
    (0..bt.n()).all(|w| set.contains(w) || try_extend(bt, members, set, blocked, w).is_none())
}

struct LowerSearch<'a> {
    bt: &'a BetweenTables,
    k: usize,
    nodes: u64,
}

impl LowerSearch<'_> {
    /// First (lexicographically least) maximal general position k-set.
    fn run(&mut self) -> Option<VertexSet> {
        let mut members = Vec::with_capacity(self.k);
        let mut set = VertexSet::empty(self.bt.n());
        self.dfs(&mut members, &mut set, &VertexSet::empty(self.bt.n()), 0)
    }

    fn dfs(
        &mut self,
        members: &mut Vec<usize>,
        set: &mut VertexSet,
        blocked: &VertexSet,
        from: usize,
    ) -> Option<VertexSet> {
        self.nodes += 1;
        if members.len() == self.k {
            if is_maximal(self.bt, members, set, blocked) {
                return Some(set.clone());
            }
            return None;
        }
        let needed = self.k - members.len();
        let n = self.bt.n();
        for w in from..n {
            if n - w < needed {
                break;
            }
            if let Some(rows) = try_extend(self.bt, members, set, blocked, w) {
                let mut child_blocked = blocked.clone();
                child_blocked.union_with(&rows);
                members.push(w);
                set.insert(w);
                let hit = self.dfs(members, set, &child_blocked, w + 1);
                set.remove(w);
                members.pop();
                if hit.is_some() {
                    return hit;
                }
            }
        }
        None
    }
}

/// Smallest maximal general position set, by exhausting cardinalities in
/// increasing order. Disconnected graphs are fine: unreachable pairs never
/// create betweenness violations.
pub fn lower_gp_number(g: &Graph) -> InvariantReport {
    let n = g.n();
    if n == 0 {
        return InvariantReport {
            invariant: Invariant::LowerGp,
            value: Some(0),
            witness: VertexSet::empty(0),
            nodes_explored: 0,
            method: Method::Pruned,
        };
    }
    let d = DistanceMatrix::of(g);
    let bt = BetweenTables::of(&d);
    let mut nodes = 0;
    for k in 1..=n {
        let mut search = LowerSearch { bt: &bt, k, nodes: 0 };
        let hit = search.run();
        nodes += search.nodes;
        if let Some(witness) = hit {
            return InvariantReport {
                invariant: Invariant::LowerGp,
                value: Some(k),
                witness,
                nodes_explored: nodes,
                method: Method::Pruned,
            };
        }
    }
    unreachable!("every non-empty graph has a maximal general position set");
}

struct MaxSearch<'a> {
    bt: &'a BetweenTables,
    best: VertexSet,
    nodes: u64,
}

impl MaxSearch<'_> {
    fn dfs(
        &mut self,
        members: &mut Vec<usize>,
        set: &mut VertexSet,
        blocked: &VertexSet,
        cand: &[(usize, VertexSet)],
    ) {
        self.nodes += 1;
        if members.len() > self.best.len() {
            self.best = set.clone();
        }
        for (i, (w, rows)) in cand.iter().enumerate() {
            if members.len() + (cand.len() - i) <= self.best.len() {
                break; // even taking the whole suffix cannot improve
            }
            let mut child_blocked = blocked.clone();
            child_blocked.union_with(rows);
            members.push(*w);
            set.insert(*w);
            let child_cand: Vec<(usize, VertexSet)> = cand[i + 1..]
                .iter()
                .filter_map(|&(x, _)| {
                    try_extend(self.bt, members, set, &child_blocked, x).map(|r| (x, r))
                })
                .collect();
            self.dfs(members, set, &child_blocked, &child_cand);
            set.remove(*w);
            members.pop();
        }
    }
}

/// Largest general position set, branch and bound. A greedy sweep seeds
/// the bound; candidates are revalidated at every level so the bound
/// |set| + |candidates| is exact for the subtree.
pub fn gp_number(g: &Graph) -> InvariantReport {
    let n = g.n();
    if n == 0 {
        return InvariantReport {
            invariant: Invariant::Gp,
            value: Some(0),
            witness: VertexSet::empty(0),
            nodes_explored: 0,
            method: Method::Pruned,
        };
    }
    let d = DistanceMatrix::of(g);
    let bt = BetweenTables::of(&d);

    // greedy seed
    let mut members = Vec::new();
    let mut seed = VertexSet::empty(n);
    let mut blocked = VertexSet::empty(n);
    for w in 0..n {
        if let Some(rows) = try_extend(&bt, &members, &seed, &blocked, w) {
            members.push(w);
            seed.insert(w);
            blocked.union_with(&rows);
        }
    }

    let mut search = MaxSearch { bt: &bt, best: seed, nodes: 0 };
    let root_cand: Vec<(usize, VertexSet)> =
        (0..n).map(|w| (w, VertexSet::empty(n))).collect();
    search.dfs(
        &mut Vec::new(),
        &mut VertexSet::empty(n),
        &VertexSet::empty(n),
        &root_cand,
    );
    InvariantReport {
        invariant: Invariant::Gp,
        value: Some(search.best.len()),
        witness: search.best,
        nodes_explored: search.nodes,
        method: Method::Pruned,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};
    use crate::position::{is_general_position, is_maximal_general_position};

    #[test]
    fn lower_gp_of_cycles() {
        // even cycles have an antipodal maximal pair, odd cycles do not
        assert_eq!(lower_gp_number(&cycle_graph(6)).value, Some(2));
        assert_eq!(lower_gp_number(&cycle_graph(7)).value, Some(3));
        assert_eq!(lower_gp_number(&cycle_graph(4)).value, Some(2));
        assert_eq!(lower_gp_number(&cycle_graph(3)).value, Some(3));
    }

    #[test]
    fn lower_gp_of_paths_and_complete_graphs() {
        assert_eq!(lower_gp_number(&path_graph(7)).value, Some(2));
        assert_eq!(lower_gp_number(&complete_graph(5)).value, Some(5));
        assert_eq!(lower_gp_number(&complete_graph(1)).value, Some(1));
    }

    #[test]
    fn gp_of_small_graphs() {
        assert_eq!(gp_number(&cycle_graph(4)).value, Some(2));
        assert_eq!(gp_number(&cycle_graph(5)).value, Some(3));
        assert_eq!(gp_number(&complete_graph(6)).value, Some(6));
        assert_eq!(gp_number(&path_graph(6)).value, Some(2));
    }

    #[test]
    fn witnesses_certify_values() {
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 7), (7, 3)],
        )
        .unwrap();
        let d = DistanceMatrix::of(&g);
        let lower = lower_gp_number(&g);
        assert!(is_maximal_general_position(&d, &lower.witness));
        assert_eq!(lower.witness.len(), lower.value.unwrap());
        let upper = gp_number(&g);
        assert!(is_general_position(&d, &upper.witness));
        assert_eq!(upper.witness.len(), upper.value.unwrap());
        assert!(lower.value <= upper.value);
        assert!(lower.nodes_explored > 0 && upper.nodes_explored > 0);
    }

    #[test]
    fn disconnected_graphs_are_first_class() {
        // 3K2: no finite triple exists, so only the full set is maximal
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(lower_gp_number(&g).value, Some(6));
        assert_eq!(gp_number(&g).value, Some(6));
        // empty graph on 3 vertices behaves the same way
        let e3 = Graph::empty(3);
        assert_eq!(lower_gp_number(&e3).value, Some(3));
    }

    #[test]
    fn deterministic_reports() {
        let g = cycle_graph(9);
        let a = lower_gp_number(&g);
        let b = lower_gp_number(&g);
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }
}
