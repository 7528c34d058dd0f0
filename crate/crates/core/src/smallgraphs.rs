//! Exhaustive lists of pairwise non-isomorphic graphs on up to
//! [`MAX_ENUMERATION_N`] vertices, used by the sweep-style checks.
//! Graphs are canonicalised by taking the minimum upper-triangle edge
//! bitmask over all vertex permutations; each order-n list is built by
//! attaching a new vertex to every representative one order down and
//! deduplicating, which reaches every isomorphism class.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::graph::Graph;

/// Largest order the enumeration is willing to build. 1044 classes on 7
/// vertices canonicalise in seconds; order 8 (12346 classes, 8! = 40320
/// permutations each) would not.
pub const MAX_ENUMERATION_N: usize = 7;

/// Bit position of pair (i, j), i < j, in the row-major upper triangle.
fn pair_bit(n: usize, i: usize, j: usize) -> u32 {
    debug_assert!(i < j && j < n);
    (i * n - i * (i + 1) / 2 + (j - i - 1)) as u32
}

/// Heap's algorithm; calls `f` once per permutation of 0..n.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn canonical_mask(n: usize, edges: &[(usize, usize)]) -> u32 {
    if edges.is_empty() {
        return 0;
    }
    let mut best = u32::MAX;
    for_each_permutation(n, |p| {
        let mut m = 0u32;
        for &(i, j) in edges {
            let (a, b) = (p[i], p[j]);
            m |= 1 << if a < b { pair_bit(n, a, b) } else { pair_bit(n, b, a) };
        }
        best = best.min(m);
    });
    best
}

fn mask_to_graph(n: usize, mask: u32) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_bit(n, i, j) & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

fn build_level(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut seen = HashSet::new();
    for parent in all_graphs(n - 1) {
        let edges = parent.edges();
        for nb in 0..(1u32 << (n - 1)) {
            let mut child = edges.clone();
            for k in 0..n - 1 {
                if nb >> k & 1 == 1 {
                    child.push((k, n - 1));
                }
            }
            seen.insert(canonical_mask(n, &child));
        }
    }
    let mut masks: Vec<u32> = seen.into_iter().collect();
    masks.sort_unstable();
    masks.into_iter().map(|m| mask_to_graph(n, m)).collect()
}

/// All non-isomorphic graphs on n vertices, canonical representatives in
/// a fixed order. Built once per process.
pub fn all_graphs(n: usize) -> &'static [Graph] {
    assert!(
        n <= MAX_ENUMERATION_N,
        "graph enumeration is capped at {MAX_ENUMERATION_N} vertices"
    );
    static LEVELS: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_N + 1] =
        [const { OnceLock::new() }; MAX_ENUMERATION_N + 1];
    LEVELS[n].get_or_init(|| build_level(n))
}

/// The connected graphs among [`all_graphs`], same relative order.
pub fn connected_graphs(n: usize) -> &'static [Graph] {
    assert!(
        n <= MAX_ENUMERATION_N,
        "graph enumeration is capped at {MAX_ENUMERATION_N} vertices"
    );
    static LEVELS: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_N + 1] =
        [const { OnceLock::new() }; MAX_ENUMERATION_N + 1];
    LEVELS[n].get_or_init(|| {
        all_graphs(n).iter().filter(|g| g.is_connected()).cloned().collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_literature() {
        let all: Vec<usize> = (1..=7).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let conn: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let mut masks = HashSet::new();
        for g in all_graphs(5) {
            assert_eq!(g.n(), 5);
            let canon = canonical_mask(5, &g.edges());
            let mut direct = 0u32;
            for (i, j) in g.edges() {
                direct |= 1 << pair_bit(5, i, j);
            }
            assert_eq!(canon, direct, "stored representative is not canonical");
            assert!(masks.insert(canon), "duplicate isomorphism class");
        }
    }

    #[test]
    fn permutation_count_is_factorial() {
        let mut count = 0;
        for_each_permutation(5, |_| count += 1);
        assert_eq!(count, 120);
    }
}
