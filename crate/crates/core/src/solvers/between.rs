//! Precomputed betweenness rows: for each pair (u, v), the set of vertices
//! strictly between them. Lets the searches test general-position
//! extensions with a handful of word operations.

use crate::bitset::VertexSet;
use crate::metric::DistanceMatrix;

pub(crate) struct BetweenTables {
    n: usize,
    rows: Vec<VertexSet>,
}

impl BetweenTables {
    pub fn of(d: &DistanceMatrix) -> Self {
        let n = d.n();
        let mut rows = vec![VertexSet::empty(n); n * n];
        for u in 0..n {
            for v in u + 1..n {
                let mut row = VertexSet::empty(n);
                for m in 0..n {
                    if m != u && m != v && d.between(u, m, v) {
                        row.insert(m);
                    }
                }
                rows[v * n + u] = row.clone();
                rows[u * n + v] = row;
            }
        }
        BetweenTables { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices strictly between u and v (excluding u, v themselves).
    pub fn blockers(&self, u: usize, v: usize) -> &VertexSet {
        &self.rows[u * self.n + v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_graph;

    #[test]
    fn blockers_exclude_endpoints() {
        let d = DistanceMatrix::of(&path_graph(5));
        let bt = BetweenTables::of(&d);
        assert_eq!(bt.blockers(0, 4).to_vec(), vec![1, 2, 3]);
        assert_eq!(bt.blockers(4, 0).to_vec(), vec![1, 2, 3]);
        assert!(bt.blockers(0, 1).is_empty());
    }
}
