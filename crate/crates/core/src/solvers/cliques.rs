//! Clique-flavoured solvers: extremal maximal cliques, independent unions
//! of cliques, and independent dominating sets.

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::{Invariant, InvariantReport, Method};

fn pivot(g: &Graph, p: &VertexSet, x: &VertexSet) -> usize {
    let mut best = usize::MAX;
    let mut best_score = usize::MAX; // forces initialization on first candidate
    for v in p.iter().chain(x.iter()) {
        let score = p.intersection_len(g.neighbors(v));
        if best == usize::MAX || score > best_score {
            best = v;
            best_score = score;
        }
    }
    best
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut VertexSet,
    p: &mut VertexSet,
    x: &mut VertexSet,
    nodes: &mut u64,
    visit: &mut impl FnMut(&VertexSet),
) {
    *nodes += 1;
    if p.is_empty() && x.is_empty() {
        visit(r);
        return;
    }
    let piv = pivot(g, p, x);
    let ext = p.difference(g.neighbors(piv));
    for v in ext.iter() {
        let mut p2 = p.intersection(g.neighbors(v));
        let mut x2 = x.intersection(g.neighbors(v));
        r.insert(v);
        bron_kerbosch(g, r, &mut p2, &mut x2, nodes, visit);
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
}

/// (omega, lower omega): largest clique and smallest maximal clique, via
/// pivoted maximal-clique enumeration. Ties break toward the
/// lexicographically least witness.
pub fn clique_numbers(g: &Graph) -> (InvariantReport, InvariantReport) {
    let n = g.n();
    let mut nodes = 0;
    let mut max: Option<VertexSet> = None;
    let mut min: Option<VertexSet> = None;
    bron_kerbosch(
        g,
        &mut VertexSet::empty(n),
        &mut VertexSet::full(n),
        &mut VertexSet::empty(n),
        &mut nodes,
        &mut |clique| {
            let better_max = match &max {
                None => true,
                Some(best) => {
                    clique.len() > best.len()
                        || (clique.len() == best.len() && clique.lex_cmp(best).is_lt())
                }
            };
            if better_max {
                max = Some(clique.clone());
            }
            let better_min = match &min {
                None => true,
                Some(best) => {
                    clique.len() < best.len()
                        || (clique.len() == best.len() && clique.lex_cmp(best).is_lt())
                }
            };
            if better_min {
                min = Some(clique.clone());
            }
        },
    );
    let max = max.unwrap_or_else(|| VertexSet::empty(n));
    let min = min.unwrap_or_else(|| VertexSet::empty(n));
    (
        InvariantReport {
            invariant: Invariant::Omega,
            value: Some(max.len()),
            witness: max,
            nodes_explored: nodes,
            method: Method::Pruned,
        },
        InvariantReport {
            invariant: Invariant::LowerOmega,
            value: Some(min.len()),
            witness: min,
            nodes_explored: nodes,
            method: Method::Pruned,
        },
    )
}

/// Can `w` join the independent union of cliques `set` (with induced
/// components `comps`)? Exactly when its neighbourhood inside the set is
/// empty (new singleton component) or equals one whole component.
/// Returns the index of the component it joins, or `comps.len()` for a
/// fresh one.
fn iuc_join_target(g: &Graph, comps: &[VertexSet], set: &VertexSet, w: usize) -> Option<usize> {
    let nb = g.neighbors(w).intersection(set);
    if nb.is_empty() {
        return Some(comps.len());
    }
    comps.iter().position(|c| *c == nb)
}

fn iuc_is_maximal(g: &Graph, comps: &[VertexSet], set: &VertexSet) -> bool {
    (0..g.n()).all(|w| set.contains(w) || iuc_join_target(g, comps, set, w).is_none())
}

fn is_complete(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) == g.n() - 1)
}

struct IucMaxSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
    nodes: u64,
}

impl IucMaxSearch<'_> {
    fn dfs(&mut self, set: &mut VertexSet, comps: &[VertexSet], cand: &[usize]) {
        self.nodes += 1;
        if set.len() > self.best.len() {
            self.best = set.clone();
        }
        for (i, &w) in cand.iter().enumerate() {
            if set.len() + (cand.len() - i) <= self.best.len() {
                break;
            }
            let target = iuc_join_target(self.g, comps, set, w)
                .expect("candidates are prevalidated");
            let mut child_comps = comps.to_vec();
            if target == child_comps.len() {
                child_comps.push(VertexSet::singleton(self.g.n(), w));
            } else {
                child_comps[target].insert(w);
            }
            set.insert(w);
            let child_cand: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&x| iuc_join_target(self.g, &child_comps, set, x).is_some())
                .collect();
            self.dfs(set, &child_comps, &child_cand);
            set.remove(w);
        }
    }
}

struct IucLowerSearch<'a> {
    g: &'a Graph,
    k: usize,
    nodes: u64,
}

impl IucLowerSearch<'_> {
    fn dfs(&mut self, set: &mut VertexSet, comps: &mut Vec<VertexSet>, from: usize) -> Option<VertexSet> {
        self.nodes += 1;
        if set.len() == self.k {
            if comps.len() >= 2 && iuc_is_maximal(self.g, comps, set) {
                return Some(set.clone());
            }
            return None;
        }
        let n = self.g.n();
        let left = self.k - set.len();
        for w in from..n {
            if n - w < left {
                break;
            }
            if let Some(target) = iuc_join_target(self.g, comps, set, w) {
                let fresh = target == comps.len();
                if fresh {
                    comps.push(VertexSet::singleton(n, w));
                } else {
                    comps[target].insert(w);
                }
                set.insert(w);
                let hit = self.dfs(set, comps, w + 1);
                set.remove(w);
                if fresh {
                    comps.pop();
                } else {
                    comps[target].remove(w);
                }
                if hit.is_some() {
                    return hit;
                }
            }
        }
        None
    }
}

/// (alpha-omega, lower alpha-omega): the largest independent union of
/// cliques, and the smallest set that is maximal among independent unions
/// of cliques while having at least two components. The latter is
/// undefined exactly for complete graphs: once two members are
/// non-adjacent they stay in different components under any extension.
pub fn iuc_numbers(g: &Graph) -> (InvariantReport, InvariantReport) {
    let n = g.n();
    let mut max_search = IucMaxSearch { g, best: VertexSet::empty(n), nodes: 0 };
    let root: Vec<usize> = (0..n).collect();
    max_search.dfs(&mut VertexSet::empty(n), &[], &root);
    let alpha = InvariantReport {
        invariant: Invariant::AlphaOmega,
        value: Some(max_search.best.len()),
        witness: max_search.best,
        nodes_explored: max_search.nodes,
        method: Method::Pruned,
    };

    let mut lower = InvariantReport {
        invariant: Invariant::LowerAlphaOmega,
        value: None,
        witness: VertexSet::empty(n),
        nodes_explored: 0,
        method: Method::Pruned,
    };
    if !is_complete(g) {
        let mut nodes = 0;
        for k in 2..=n {
            let mut search = IucLowerSearch { g, k, nodes: 0 };
            let hit = search.dfs(&mut VertexSet::empty(n), &mut Vec::new(), 0);
            nodes += search.nodes;
            if let Some(witness) = hit {
                lower.value = Some(k);
                lower.witness = witness;
                break;
            }
        }
        lower.nodes_explored = nodes;
        debug_assert!(lower.value.is_some(), "non-complete graphs always have one");
    }
    (alpha, lower)
}

/// Smallest independent dominating set, i.e. smallest maximal independent
/// set. Defined for every graph; cardinalities in increasing order.
pub fn min_independent_dominating_set(g: &Graph) -> InvariantReport {
    let n = g.n();
    let mut nodes = 0u64;

    fn dfs(
        g: &Graph,
        set: &mut VertexSet,
        dominated: &VertexSet,
        banned: &VertexSet,
        from: usize,
        left: usize,
        nodes: &mut u64,
    ) -> Option<VertexSet> {
        *nodes += 1;
        if left == 0 {
            if dominated.len() == g.n() {
                return Some(set.clone());
            }
            return None;
        }
        let n = g.n();
        for w in from..n {
            if n - w < left {
                break;
            }
            if banned.contains(w) {
                continue; // adjacent to a member: would break independence
            }
            let mut child_dominated = dominated.clone();
            child_dominated.insert(w);
            child_dominated.union_with(g.neighbors(w));
            let mut child_banned = banned.clone();
            child_banned.union_with(g.neighbors(w));
            set.insert(w);
            let hit = dfs(g, set, &child_dominated, &child_banned, w + 1, left - 1, nodes);
            set.remove(w);
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    for k in 0..=n {
        let hit = dfs(
            g,
            &mut VertexSet::empty(n),
            &VertexSet::empty(n),
            &VertexSet::empty(n),
            0,
            k,
            &mut nodes,
        );
        if let Some(witness) = hit {
            return InvariantReport {
                invariant: Invariant::Ids,
                value: Some(k),
                witness,
                nodes_explored: nodes,
                method: Method::Pruned,
            };
        }
    }
    unreachable!("a greedy maximal independent set always exists");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};
    use crate::position::independent_union_of_cliques;

    #[test]
    fn clique_numbers_examples() {
        let (omega, lower) = clique_numbers(&complete_graph(5));
        assert_eq!(omega.value, Some(5));
        assert_eq!(lower.value, Some(5));

        // triangle with a pendant: maximal cliques are the triangle and the edge
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let (omega, lower) = clique_numbers(&paw);
        assert_eq!(omega.value, Some(3));
        assert_eq!(omega.witness.to_vec(), vec![0, 1, 2]);
        assert_eq!(lower.value, Some(2));
        assert_eq!(lower.witness.to_vec(), vec![2, 3]);

        // triangle-free: every edge is a maximal clique
        let (omega, lower) = clique_numbers(&cycle_graph(5));
        assert_eq!((omega.value, lower.value), (Some(2), Some(2)));
        assert_eq!(lower.witness.to_vec(), vec![0, 1]);
    }

    #[test]
    fn clique_numbers_on_edgeless_graphs() {
        let (omega, lower) = clique_numbers(&Graph::empty(3));
        assert_eq!((omega.value, lower.value), (Some(1), Some(1)));
        assert_eq!(lower.witness.to_vec(), vec![0]);
    }

    #[test]
    fn iuc_numbers_on_c5() {
        // no 2-set is maximal (something always joins), but an edge plus a
        // far vertex is: every 4-subset of C5 has a 3-vertex path component
        let (alpha, lower) = iuc_numbers(&cycle_graph(5));
        assert_eq!(alpha.value, Some(3));
        assert_eq!(lower.value, Some(3));
        assert_eq!(lower.witness.to_vec(), vec![0, 1, 3]);
        let g = cycle_graph(5);
        assert_eq!(independent_union_of_cliques(&g, &lower.witness), Some(2));
    }

    #[test]
    fn iuc_lower_undefined_on_complete_graphs() {
        let (alpha, lower) = iuc_numbers(&complete_graph(4));
        assert_eq!(alpha.value, Some(4));
        assert_eq!(lower.value, None);
        let (alpha, lower) = iuc_numbers(&complete_graph(1));
        assert_eq!(alpha.value, Some(1));
        assert_eq!(lower.value, None);
    }

    #[test]
    fn iuc_on_paths() {
        // two disjoint edges {0,1} and {3,4} are the largest union in P5;
        // every 2-set extends, so the lower value is 3
        let (alpha, lower) = iuc_numbers(&path_graph(5));
        assert_eq!(alpha.value, Some(4));
        assert_eq!(alpha.witness.to_vec(), vec![0, 1, 3, 4]);
        assert_eq!(lower.value, Some(3));
        let g = path_graph(5);
        assert!(independent_union_of_cliques(&g, &lower.witness).unwrap() >= 2);
    }

    #[test]
    fn ids_examples() {
        assert_eq!(min_independent_dominating_set(&cycle_graph(5)).value, Some(2));
        assert_eq!(min_independent_dominating_set(&complete_graph(7)).value, Some(1));
        assert_eq!(min_independent_dominating_set(&path_graph(6)).value, Some(2));
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(min_independent_dominating_set(&star).value, Some(1));
        assert_eq!(min_independent_dominating_set(&star).witness.to_vec(), vec![0]);
        assert_eq!(min_independent_dominating_set(&Graph::empty(0)).value, Some(0));
    }
}
