//! Position-type predicates: general position, geodetic, monophonic,
//! independent unions of cliques. These are the plain reference forms;
//! the solvers keep their own incremental machinery and are tested
//! against what is defined here.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::metric::DistanceMatrix;

/// A betweenness violation: `mid` lies on a geodesic between `u` and `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleWitness {
    pub u: usize,
    pub mid: usize,
    pub v: usize,
}

/// First violating triple in lexicographic (u, mid, v) order with u < v,
/// or None when `s` is in general position. Unreachable pairs never violate.
pub fn general_position_violation(d: &DistanceMatrix, s: &VertexSet) -> Option<TripleWitness> {
    for u in s.iter() {
        for mid in s.iter() {
            if mid == u {
                continue;
            }
            for v in s.iter() {
                if v <= u || v == mid {
                    continue;
                }
                if d.between(u, mid, v) {
                    return Some(TripleWitness { u, mid, v });
                }
            }
        }
    }
    None
}

/// No vertex of `s` lies on a geodesic between two others.
pub fn is_general_position(d: &DistanceMatrix, s: &VertexSet) -> bool {
    general_position_violation(d, s).is_none()
}

/// Would `s + w` still be in general position, assuming `s` already is?
/// Only triples that involve `w` need to be checked.
pub fn extension_keeps_general_position(d: &DistanceMatrix, s: &VertexSet, w: usize) -> bool {
    let members: Vec<usize> = s.iter().collect();
    // w as the middle vertex
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if d.between(u, w, v) {
                return false;
            }
        }
    }
    // w as an endpoint (covers both orientations by symmetry)
    for &mid in &members {
        for &v in &members {
            if mid != v && d.between(w, mid, v) {
                return false;
            }
        }
    }
    true
}

/// General position and no single-vertex extension stays in general position.
pub fn is_maximal_general_position(d: &DistanceMatrix, s: &VertexSet) -> bool {
    if !is_general_position(d, s) {
        return false;
    }
    for w in 0..d.n() {
        if !s.contains(w) && extension_keeps_general_position(d, s, w) {
            return false;
        }
    }
    true
}

/// Vertices whose neighbourhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if g.is_clique(g.neighbors(v)) {
            out.insert(v);
        }
    }
    out
}

/// Union of the geodesic intervals over all pairs of `s` (including
/// degenerate pairs, so the closure always contains `s`).
pub fn geodetic_closure(d: &DistanceMatrix, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    let members: Vec<usize> = s.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out.union_with(&d.interval(u, v));
        }
    }
    out
}

pub fn is_geodetic(d: &DistanceMatrix, s: &VertexSet) -> bool {
    geodetic_closure(d, s) == VertexSet::full(d.n())
}

/// Stream every induced (chordless) path from `u` to `v` in ascending
/// DFS order. The visitor returns false to abort the enumeration.
/// The endpoint pair itself counts when adjacent: the single-edge path
/// is the only induced u-v path in that case, since the edge would be a
/// chord of any longer one.
pub fn enumerate_induced_paths(
    g: &Graph,
    u: usize,
    v: usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
) {
    assert_ne!(u, v, "endpoints must differ");
    let mut path = vec![u];
    // forbidden = path vertices below the tip plus all their neighbours
    let forbidden = VertexSet::empty(g.n());
    dfs_induced(g, v, &mut path, &forbidden, visit);
}

fn dfs_induced(
    g: &Graph,
    target: usize,
    path: &mut Vec<usize>,
    forbidden: &VertexSet,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let tip = *path.last().unwrap();
    let mut candidates = g.neighbors(tip).difference(forbidden);
    candidates.remove(tip);
    if candidates.contains(target) {
        path.push(target);
        let keep_going = visit(path);
        path.pop();
        if !keep_going {
            return false;
        }
        candidates.remove(target);
    }
    if candidates.is_empty() {
        return true;
    }
    let mut next_forbidden = forbidden.clone();
    next_forbidden.union_with(g.neighbors(tip));
    next_forbidden.insert(tip);
    for w in candidates.iter() {
        path.push(w);
        let keep_going = dfs_induced(g, target, path, &next_forbidden, visit);
        path.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// First induced path that witnesses a monophonic-position violation:
/// an induced path between two members of `s` with a third member in its
/// interior. None when `s` is in monophonic position.
pub fn monophonic_violation(g: &Graph, s: &VertexSet) -> Option<Vec<usize>> {
    let members: Vec<usize> = s.iter().collect();
    let mut found: Option<Vec<usize>> = None;
    for (i, &a) in members.iter().enumerate() {
        for &c in &members[i + 1..] {
            enumerate_induced_paths(g, a, c, &mut |path| {
                let interior_hit = path[1..path.len() - 1].iter().any(|&x| s.contains(x));
                if interior_hit {
                    found = Some(path.to_vec());
                    false
                } else {
                    true
                }
            });
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

/// No induced path contains three or more members of `s`. Any violating
/// path yields an induced subpath between two members with a third in the
/// interior, so checking member pairs suffices.
pub fn is_monophonic_position(g: &Graph, s: &VertexSet) -> bool {
    monophonic_violation(g, s).is_none()
}

/// If every component of the subgraph induced by `s` is a clique,
/// returns the number of components (0 for the empty set).
pub fn independent_union_of_cliques(g: &Graph, s: &VertexSet) -> Option<usize> {
    let mut remaining = s.clone();
    let mut count = 0;
    while let Some(start) = remaining.first() {
        // gather the component of `start` inside s
        let mut comp = VertexSet::singleton(g.n(), start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let mut fresh = g.neighbors(x).intersection(s);
            fresh.subtract(&comp);
            for y in fresh.iter() {
                comp.insert(y);
                stack.push(y);
            }
        }
        if !g.is_clique(&comp) {
            return None;
        }
        remaining.subtract(&comp);
        count += 1;
    }
    Some(count)
}

pub fn is_independent_union_of_cliques(g: &Graph, s: &VertexSet) -> bool {
    independent_union_of_cliques(g, s).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs)
    }

    #[test]
    fn two_element_sets_are_always_general_position() {
        let d = DistanceMatrix::of(&path_graph(5));
        assert!(is_general_position(&d, &set(5, &[0, 4])));
        assert!(is_general_position(&d, &set(5, &[1, 3])));
    }

    #[test]
    fn p4_endpoints_plus_interior_violates() {
        let d = DistanceMatrix::of(&path_graph(4));
        let w = general_position_violation(&d, &set(4, &[0, 1, 3])).unwrap();
        assert_eq!((w.u, w.mid, w.v), (0, 1, 3));
        assert!(!is_general_position(&d, &set(4, &[0, 1, 3])));
    }

    #[test]
    fn unreachable_triples_never_violate() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let d = DistanceMatrix::of(&g);
        // 0-1-2 is a geodesic, so that triple still violates
        assert!(!is_general_position(&d, &set(5, &[0, 1, 2])));
        // but anything split across components is fine
        assert!(is_general_position(&d, &set(5, &[0, 2, 3])));
        assert!(is_general_position(&d, &set(5, &[0, 3, 4])));
    }

    #[test]
    fn antipodal_pair_in_even_cycle_is_maximal() {
        let d = DistanceMatrix::of(&cycle_graph(6));
        assert!(is_maximal_general_position(&d, &set(6, &[0, 3])));
        // non-antipodal pairs extend
        assert!(!is_maximal_general_position(&d, &set(6, &[0, 2])));
        // and a non-GP set is never maximal
        assert!(!is_maximal_general_position(&d, &set(6, &[0, 1, 2])));
    }

    #[test]
    fn incremental_extension_matches_full_recheck() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6), (6, 2)],
        )
        .unwrap();
        let d = DistanceMatrix::of(&g);
        for mask in 0u32..(1 << 7) {
            let s = set(7, &(0..7).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>());
            if !is_general_position(&d, &s) {
                continue;
            }
            for w in 0..7 {
                if s.contains(w) {
                    continue;
                }
                let mut bigger = s.clone();
                bigger.insert(w);
                assert_eq!(
                    extension_keeps_general_position(&d, &s, w),
                    is_general_position(&d, &bigger),
                    "mismatch at set {s:?} + {w}"
                );
            }
        }
    }

    #[test]
    fn simplicial_vertices_examples() {
        // leaves of a path are simplicial, interior vertices are not
        assert_eq!(simplicial_vertices(&path_graph(4)).to_vec(), vec![0, 3]);
        // every vertex of a complete graph is simplicial
        assert_eq!(simplicial_vertices(&complete_graph(3)).len(), 3);
        // no vertex of a cycle of length >= 4 is simplicial
        assert!(simplicial_vertices(&cycle_graph(5)).is_empty());
    }

    #[test]
    fn geodetic_on_c4() {
        let d = DistanceMatrix::of(&cycle_graph(4));
        assert!(is_geodetic(&d, &set(4, &[0, 2])));
        assert!(!is_geodetic(&d, &set(4, &[0, 1])));
        assert_eq!(geodetic_closure(&d, &set(4, &[0, 1])).to_vec(), vec![0, 1]);
    }

    #[test]
    fn induced_paths_in_c5() {
        let g = cycle_graph(5);
        let mut paths = Vec::new();
        enumerate_induced_paths(&g, 0, 2, &mut |p| {
            paths.push(p.to_vec());
            true
        });
        // both arcs of the cycle, nothing else
        assert_eq!(paths, vec![vec![0, 1, 2], vec![0, 4, 3, 2]]);
    }

    #[test]
    fn adjacent_endpoints_have_only_the_edge_path() {
        // the u-v edge chords every longer u-v path
        let g = complete_graph(4);
        let mut paths = Vec::new();
        enumerate_induced_paths(&g, 0, 3, &mut |p| {
            paths.push(p.to_vec());
            true
        });
        assert_eq!(paths, vec![vec![0, 3]]);
    }

    #[test]
    fn enumeration_can_be_aborted() {
        let g = cycle_graph(6);
        let mut count = 0;
        enumerate_induced_paths(&g, 0, 3, &mut |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn monophonic_position_examples() {
        let g = path_graph(4);
        assert!(is_monophonic_position(&g, &set(4, &[0, 3])));
        let viol = monophonic_violation(&g, &set(4, &[0, 1, 3])).unwrap();
        assert_eq!(viol, vec![0, 1, 2, 3]);

        // whole vertex set of a complete graph: induced paths are edges
        let k = complete_graph(5);
        assert!(is_monophonic_position(&k, &set(5, &[0, 1, 2, 3, 4])));
    }

    #[test]
    fn monophonic_is_stricter_than_general_position() {
        // on C6, {0,2,4} is in general position but 0-1-2-3-4 is an
        // induced path through all three of 0, 2, 4
        let g = cycle_graph(6);
        let d = DistanceMatrix::of(&g);
        let s = set(6, &[0, 2, 4]);
        assert!(is_general_position(&d, &s));
        assert!(!is_monophonic_position(&g, &s));
    }

    #[test]
    fn iuc_component_counts() {
        let g = cycle_graph(5);
        assert_eq!(independent_union_of_cliques(&g, &set(5, &[0, 2])), Some(2));
        assert_eq!(independent_union_of_cliques(&g, &set(5, &[0, 1])), Some(1));
        assert_eq!(independent_union_of_cliques(&g, &set(5, &[0, 1, 2])), None);
        assert_eq!(independent_union_of_cliques(&g, &VertexSet::empty(5)), Some(0));

        // three pairwise disjoint pairs in the Kneser graph K(6,2) induce
        // a triangle: one clique
        let pairs: Vec<(usize, usize)> = (0..6)
            .flat_map(|a| ((a + 1)..6).map(move |b| (a, b)))
            .collect();
        let mut edges = Vec::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, e)) in pairs.iter().enumerate().skip(i + 1) {
                if a != c && a != e && b != c && b != e {
                    edges.push((i, j));
                }
            }
        }
        let kneser = Graph::from_edges(15, &edges).unwrap();
        let idx = |x: usize, y: usize| pairs.iter().position(|&p| p == (x, y)).unwrap();
        let matching = set(15, &[idx(0, 1), idx(2, 3), idx(4, 5)]);
        assert_eq!(independent_union_of_cliques(&kneser, &matching), Some(1));
    }

    #[test]
    fn diameter_two_general_position_equals_iuc() {
        // exhaustive over all subsets of the Petersen-sized rook graph K3xK3
        let g = complete_graph(3).cartesian_product(&complete_graph(3));
        let d = DistanceMatrix::of(&g);
        assert_eq!(d.diameter(), Some(2));
        for mask in 0u32..(1 << 9) {
            let s = set(9, &(0..9).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>());
            assert_eq!(
                is_general_position(&d, &s),
                is_independent_union_of_cliques(&g, &s),
                "mismatch at {s:?}"
            );
        }
    }
}
