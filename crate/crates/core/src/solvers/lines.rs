//! Lines induced by vertex pairs, universal lines, and the
//! fewer-lines-implies-universal-line check.

use std::collections::HashSet;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::DistanceMatrix;

fn require_connected(g: &Graph) -> Result<DistanceMatrix> {
    if !g.is_connected() {
        return Err(Error::input("line computations need a connected graph"));
    }
    Ok(DistanceMatrix::of(g))
}

/// First pair (by lexicographic order) whose line is the whole vertex set,
/// or None. Errors on disconnected input.
pub fn has_universal_line(g: &Graph) -> Result<Option<(usize, usize)>> {
    let d = require_connected(g)?;
    let n = g.n();
    let full = VertexSet::full(n);
    for u in 0..n {
        for v in u + 1..n {
            if d.line(u, v) == full {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Number of distinct lines over all vertex pairs. Errors on disconnected
/// input. Graphs with fewer than two vertices have no lines.
pub fn count_distinct_lines(g: &Graph) -> Result<usize> {
    let d = require_connected(g)?;
    let n = g.n();
    let mut lines: HashSet<VertexSet> = HashSet::new();
    for u in 0..n {
        for v in u + 1..n {
            lines.insert(d.line(u, v));
        }
    }
    Ok(lines.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChenChvatal {
    pub line_count: usize,
    pub universal_pair: Option<(usize, usize)>,
    /// The implication "fewer lines than vertices => some line is
    /// universal". A false here on a connected graph would contradict a
    /// proven theorem, so it points at an implementation bug or a finding
    /// worth chasing — never ignore it.
    pub holds: bool,
}

/// Check the fewer-lines implication on a connected graph.
/// Trivially true below two vertices (there are no lines to speak of).
pub fn check_chen_chvatal(g: &Graph) -> Result<ChenChvatal> {
    if g.n() < 2 {
        require_connected(g)?;
        return Ok(ChenChvatal { line_count: 0, universal_pair: None, holds: true });
    }
    let line_count = count_distinct_lines(g)?;
    let universal_pair = has_universal_line(g)?;
    let holds = line_count >= g.n() || universal_pair.is_some();
    Ok(ChenChvatal { line_count, universal_pair, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};

    #[test]
    fn universal_lines() {
        // bipartite graphs have universal lines (any edge works on C4)
        assert_eq!(has_universal_line(&cycle_graph(4)).unwrap(), Some((0, 1)));
        assert_eq!(has_universal_line(&path_graph(3)).unwrap(), Some((0, 1)));
        // odd cycles of length >= 5 have none
        assert_eq!(has_universal_line(&cycle_graph(5)).unwrap(), None);
        assert_eq!(has_universal_line(&cycle_graph(7)).unwrap(), None);
        // in a complete graph every line is just its defining pair
        assert_eq!(has_universal_line(&complete_graph(3)).unwrap(), None);
        assert_eq!(has_universal_line(&complete_graph(2)).unwrap(), Some((0, 1)));
    }

    #[test]
    fn distinct_line_counts() {
        // all three lines of P3 are the whole vertex set
        assert_eq!(count_distinct_lines(&path_graph(3)).unwrap(), 1);
        // in K_n every pair is its own line
        assert_eq!(count_distinct_lines(&complete_graph(3)).unwrap(), 3);
        assert_eq!(count_distinct_lines(&complete_graph(4)).unwrap(), 6);
        // C5: five 4-element edge lines plus five 3-element non-edge lines
        assert_eq!(count_distinct_lines(&cycle_graph(5)).unwrap(), 10);
        assert_eq!(count_distinct_lines(&complete_graph(1)).unwrap(), 0);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(has_universal_line(&g), Err(Error::Input(_))));
        assert!(matches!(count_distinct_lines(&g), Err(Error::Input(_))));
        assert!(matches!(check_chen_chvatal(&g), Err(Error::Input(_))));
    }

    #[test]
    fn chen_chvatal_on_small_graphs() {
        let r = check_chen_chvatal(&complete_graph(3)).unwrap();
        assert!(r.holds && r.line_count == 3 && r.universal_pair.is_none());
        let r = check_chen_chvatal(&path_graph(3)).unwrap();
        assert!(r.holds && r.line_count == 1 && r.universal_pair == Some((0, 1)));
        let r = check_chen_chvatal(&complete_graph(1)).unwrap();
        assert!(r.holds);
    }
}
