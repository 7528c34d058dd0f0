//! Smallest geodetic set. Every geodetic set must contain every
//! simplicial vertex (a simplicial vertex is never interior to a
//! geodesic), so the search fixes those and only chooses the rest.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::metric::DistanceMatrix;
use crate::position::{geodetic_closure, simplicial_vertices};

use super::{Invariant, InvariantReport, Method};

struct Search<'a> {
    d: &'a DistanceMatrix,
    others: &'a [usize],
    full: VertexSet,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(
        &mut self,
        set: &mut VertexSet,
        closure: &VertexSet,
        from: usize,
        left: usize,
    ) -> Option<VertexSet> {
        self.nodes += 1;
        if left == 0 {
            if *closure == self.full {
                return Some(set.clone());
            }
            return None;
        }
        for i in from..self.others.len() {
            if self.others.len() - i < left {
                break;
            }
            let w = self.others[i];
            let mut child_closure = closure.clone();
            child_closure.insert(w);
            for u in set.iter() {
                child_closure.union_with(&self.d.interval(u, w));
            }
            set.insert(w);
            let hit = self.dfs(set, &child_closure, i + 1, left - 1);
            set.remove(w);
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

/// Geodetic number; undefined (None) for disconnected graphs.
pub fn geodetic_number(g: &Graph) -> InvariantReport {
    let n = g.n();
    let report = |value, witness, nodes| InvariantReport {
        invariant: Invariant::Geodetic,
        value,
        witness,
        nodes_explored: nodes,
        method: Method::Pruned,
    };
    if n == 0 {
        return report(Some(0), VertexSet::empty(0), 0);
    }
    if !g.is_connected() {
        return report(None, VertexSet::empty(n), 0);
    }
    let d = DistanceMatrix::of(g);
    let base = simplicial_vertices(g);
    let base_closure = geodetic_closure(&d, &base);
    let others: Vec<usize> = base.complement().iter().collect();
    let full = VertexSet::full(n);
    let min_size = if n == 1 { 1 } else { 2 };

    let mut search = Search { d: &d, others: &others, full, nodes: 0 };
    for k in base.len().max(min_size)..=n {
        let mut set = base.clone();
        let hit = search.dfs(&mut set, &base_closure, 0, k - base.len());
        if let Some(witness) = hit {
            return report(Some(k), witness, search.nodes);
        }
    }
    unreachable!("the whole vertex set of a connected graph is geodetic");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};
    use crate::position::is_geodetic;

    #[test]
    fn geodetic_small_cases() {
        assert_eq!(geodetic_number(&path_graph(5)).value, Some(2));
        assert_eq!(geodetic_number(&cycle_graph(4)).value, Some(2));
        assert_eq!(geodetic_number(&cycle_graph(5)).value, Some(3));
        assert_eq!(geodetic_number(&cycle_graph(6)).value, Some(2));
        assert_eq!(geodetic_number(&complete_graph(4)).value, Some(4));
        assert_eq!(geodetic_number(&complete_graph(1)).value, Some(1));
    }

    #[test]
    fn undefined_on_disconnected_graphs() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = geodetic_number(&g);
        assert_eq!(r.value, None);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn witness_is_geodetic_and_contains_simplicial_vertices() {
        // a star: the three leaves are simplicial and form the unique
        // minimum geodetic set
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = geodetic_number(&star);
        assert_eq!(r.value, Some(3));
        assert_eq!(r.witness.to_vec(), vec![1, 2, 3]);

        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 2)])
            .unwrap();
        let r = geodetic_number(&g);
        let d = DistanceMatrix::of(&g);
        assert!(is_geodetic(&d, &r.witness));
        assert!(simplicial_vertices(&g).is_subset_of(&r.witness));
    }
}
