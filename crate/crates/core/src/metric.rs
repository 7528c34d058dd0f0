//! All-pairs shortest-path distances and the derived interval / line machinery.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Sentinel distance between vertices in different components.
/// Any betweenness formula that touches it evaluates to false.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// BFS from every vertex.
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut d = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let row = &mut d[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(v) = queue.pop_front() {
                let dv = row[v];
                for w in g.neighbors(v).iter() {
                    if row[w] == UNREACHABLE {
                        row[w] = dv + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn finite(&self, u: usize, v: usize) -> Option<u32> {
        match self.get(u, v) {
            UNREACHABLE => None,
            x => Some(x),
        }
    }

    /// True iff all three distances are finite and d(u,m) + d(m,v) = d(u,v).
    /// With m = u or m = v this is trivially true for a reachable pair.
    pub fn between(&self, u: usize, m: usize, v: usize) -> bool {
        let (a, b, c) = (self.get(u, m), self.get(m, v), self.get(u, v));
        a != UNREACHABLE && b != UNREACHABLE && c != UNREACHABLE && a + b == c
    }

    /// Geodesic interval: all vertices on shortest u-v paths.
    /// For an unreachable pair this degenerates to {u, v}.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        let mut set = VertexSet::empty(self.n);
        if self.get(u, v) == UNREACHABLE {
            set.insert(u);
            set.insert(v);
            return set;
        }
        for w in 0..self.n {
            if self.between(u, w, v) {
                set.insert(w);
            }
        }
        set
    }

    /// The line of a pair: z is on it when one of u, v, z lies between
    /// the other two, i.e. d(u,v) = d(u,z) + d(z,v) or d(u,v) = |d(u,z) - d(z,v)|.
    /// For an unreachable pair this degenerates to {u, v}, matching `interval`.
    pub fn line(&self, u: usize, v: usize) -> VertexSet {
        let duv = self.get(u, v);
        if duv == UNREACHABLE {
            let mut set = VertexSet::empty(self.n);
            set.insert(u);
            set.insert(v);
            return set;
        }
        let mut set = VertexSet::empty(self.n);
        for z in 0..self.n {
            let (a, b) = (self.get(u, z), self.get(z, v));
            if a == UNREACHABLE || b == UNREACHABLE {
                continue;
            }
            if a + b == duv || a.abs_diff(b) == duv {
                set.insert(z);
            }
        }
        set
    }

    /// Largest finite distance; None for the empty graph or when some
    /// pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        if self.n == 0 {
            return None;
        }
        let mut max = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                match self.get(u, v) {
                    UNREACHABLE => return None,
                    x => max = max.max(x),
                }
            }
        }
        Some(max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};

    #[test]
    fn distances_on_p4() {
        let d = DistanceMatrix::of(&path_graph(4));
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(3, 0), 3);
        assert_eq!(d.get(1, 1), 0);
        assert_eq!(d.diameter(), Some(3));
    }

    #[test]
    fn unreachable_pairs() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = DistanceMatrix::of(&g);
        assert_eq!(d.get(0, 2), UNREACHABLE);
        assert_eq!(d.finite(0, 2), None);
        assert!(!d.between(0, 2, 1));
        assert!(!d.between(0, 2, 3));
        assert_eq!(d.interval(0, 2).to_vec(), vec![0, 2]);
        assert_eq!(d.line(0, 2).to_vec(), vec![0, 2]);
        assert_eq!(d.diameter(), None);
    }

    #[test]
    fn adjacency_iff_distance_one() {
        let g = cycle_graph(6);
        let d = DistanceMatrix::of(&g);
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    assert_eq!(g.has_edge(u, v), d.get(u, v) == 1);
                }
            }
        }
    }

    #[test]
    fn interval_in_complete_bipartite_k23() {
        // parts {0,1} and {2,3,4}
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let d = DistanceMatrix::of(&g);
        // every vertex of the big part lies between the two degree-3 vertices
        assert_eq!(d.interval(0, 1).to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!(d.interval(2, 3).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(d.interval(0, 2).to_vec(), vec![0, 2]);
    }

    #[test]
    fn line_on_c5() {
        let d = DistanceMatrix::of(&cycle_graph(5));
        assert_eq!(d.line(0, 1).to_vec(), vec![0, 1, 2, 4]);
        assert_eq!(d.line(0, 2).to_vec(), vec![0, 1, 2]);
        // lines always contain the defining pair and the interval
        for u in 0..5 {
            for v in u + 1..5 {
                assert!(d.interval(u, v).is_subset_of(&d.line(u, v)));
            }
        }
    }

    #[test]
    fn line_in_complete_graph_is_just_the_pair() {
        let d = DistanceMatrix::of(&complete_graph(4));
        for u in 0..4 {
            for v in u + 1..4 {
                assert_eq!(d.line(u, v).to_vec(), vec![u, v]);
            }
        }
    }

    #[test]
    fn bipartite_line_is_universal_on_c4() {
        let d = DistanceMatrix::of(&cycle_graph(4));
        assert_eq!(d.line(0, 1).len(), 4);
    }
}
