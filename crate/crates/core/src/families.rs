//! Deterministic generators for named graph families and the
//! constructions used by the realisation sweeps. Every generator returns
//! the graph together with a [`FamilySpec`] carrying the parameters,
//! closed-form expected invariant values where a formula pins them, and
//! per-vertex labels for the families whose vertices decode to something
//! (2-subsets, clique membership, ...). Expected values come from the
//! closed forms only — never from the solvers they are used to test.

use crate::error::{Error, Result};
use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};
use crate::metric::DistanceMatrix;
use crate::solvers::Invariant;

#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub family: &'static str,
    pub params: Vec<usize>,
    /// Closed-form values of invariants this family pins, if any.
    pub expected: Vec<(Invariant, Option<usize>)>,
    /// One label per vertex for families with decodable vertices; empty
    /// when vertices are plain indices.
    pub labels: Vec<String>,
}

impl FamilySpec {
    fn plain(family: &'static str, params: Vec<usize>) -> Self {
        FamilySpec { family, params, expected: Vec::new(), labels: Vec::new() }
    }

    pub fn expect(&mut self, invariant: Invariant, value: usize) {
        self.expected.push((invariant, Some(value)));
    }

    pub fn to_json(&self) -> serde_json::Value {
        let expected: serde_json::Map<String, serde_json::Value> = self
            .expected
            .iter()
            .map(|(inv, v)| {
                (inv.name().to_string(), match v {
                    Some(x) => serde_json::json!(x),
                    None => serde_json::Value::Null,
                })
            })
            .collect();
        let mut obj = serde_json::json!({
            "family": self.family,
            "params": self.params,
            "expected": expected,
        });
        if !self.labels.is_empty() {
            obj["labels"] = serde_json::json!(self.labels);
        }
        obj
    }
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub spec: FamilySpec,
}

pub const FAMILY_NAMES: [&str; 11] = [
    "cycle",
    "path",
    "complete",
    "complete_multipartite",
    "kneser_2",
    "realisation_gp_geodetic",
    "realisation_gp_lower_gp",
    "size_extremal",
    "hexagon_blowup",
    "z_graph",
    "petersen",
];

/// Builds the family `name` with the given parameter vector.
pub fn generate(name: &str, params: &[usize]) -> Result<Generated> {
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::input(format!(
                "family {name} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "cycle" => {
            arity(1)?;
            cycle(params[0])
        }
        "path" => {
            arity(1)?;
            path(params[0])
        }
        "complete" => {
            arity(1)?;
            complete(params[0])
        }
        "complete_multipartite" => {
            if params.is_empty() {
                return Err(Error::input("complete_multipartite needs at least one part"));
            }
            complete_multipartite(params)
        }
        "kneser_2" => {
            arity(1)?;
            kneser_2(params[0])
        }
        "realisation_gp_geodetic" => {
            arity(2)?;
            realisation_gp_geodetic(params[0], params[1])
        }
        "realisation_gp_lower_gp" => {
            arity(2)?;
            realisation_gp_lower_gp(params[0], params[1])
        }
        "size_extremal" => {
            arity(2)?;
            size_extremal(params[0], params[1])
        }
        "hexagon_blowup" => {
            arity(2)?;
            hexagon_blowup(params[0], params[1])
        }
        "z_graph" => {
            arity(3)?;
            z_graph(params[0], params[1], params[2])
        }
        "petersen" => {
            arity(0)?;
            Ok(petersen())
        }
        _ => Err(Error::input(format!("unknown family {name:?}"))),
    }
}

pub fn cycle(n: usize) -> Result<Generated> {
    if n < 3 {
        return Err(Error::input("cycle needs n >= 3"));
    }
    let mut spec = FamilySpec::plain("cycle", vec![n]);
    spec.expect(Invariant::LowerGp, if n.is_multiple_of(2) { 2 } else { 3 });
    Ok(Generated { graph: cycle_graph(n), spec })
}

pub fn path(n: usize) -> Result<Generated> {
    if n < 1 {
        return Err(Error::input("path needs n >= 1"));
    }
    let mut spec = FamilySpec::plain("path", vec![n]);
    // A tree on >= 2 vertices has a smallest maximal general position
    // set of size 2 (two leaves of a longest path); K1 degenerates to 1.
    spec.expect(Invariant::LowerGp, if n == 1 { 1 } else { 2 });
    Ok(Generated { graph: path_graph(n), spec })
}

pub fn complete(n: usize) -> Result<Generated> {
    if n < 1 {
        return Err(Error::input("complete needs n >= 1"));
    }
    let mut spec = FamilySpec::plain("complete", vec![n]);
    spec.expect(Invariant::LowerGp, n);
    spec.expect(Invariant::Gp, n);
    Ok(Generated { graph: complete_graph(n), spec })
}

/// Complete multipartite graph; vertices are numbered consecutively by
/// part in the order given.
pub fn complete_multipartite(parts: &[usize]) -> Result<Generated> {
    if parts.contains(&0) {
        return Err(Error::input("complete_multipartite parts must be positive"));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = vec![0usize; n];
    let mut labels = Vec::with_capacity(n);
    let mut v = 0;
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            part_of[v] = i;
            labels.push(format!("p{i}.{j}"));
            v += 1;
        }
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for w in u + 1..n {
            if part_of[u] != part_of[w] {
                g.add_edge(u, w).unwrap();
            }
        }
    }
    let mut spec = FamilySpec::plain("complete_multipartite", parts.to_vec());
    spec.labels = labels;
    // gp- = min{number of parts, smallest part}, valid when every part
    // has at least two vertices and there are at least two parts.
    let smallest = *parts.iter().min().unwrap();
    if parts.len() >= 2 && smallest >= 2 {
        spec.expect(Invariant::LowerGp, parts.len().min(smallest));
    }
    Ok(Generated { graph: g, spec })
}

/// Kneser graph K(n,2): vertices are the 2-subsets of {1..n} in
/// lexicographic order, adjacent iff disjoint.
pub fn kneser_2(n: usize) -> Result<Generated> {
    if n < 3 {
        return Err(Error::input("kneser_2 needs n >= 3"));
    }
    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            pairs.push((a, b));
        }
    }
    let mut g = Graph::empty(pairs.len());
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    let mut spec = FamilySpec::plain("kneser_2", vec![n]);
    spec.labels = pairs.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
    spec.expect(Invariant::LowerGp, match n {
        3 | 6 | 7 => 3,
        5 | 8 | 9 => 4,
        10 | 11 => 5,
        _ => 6,
    });
    Ok(Generated { graph: g, spec })
}

/// Graph with smallest-maximal general position number `a` and geodetic
/// number `b`. Feasible iff 2 <= a <= b or 4 <= b < a.
pub fn realisation_gp_geodetic(a: usize, b: usize) -> Result<Generated> {
    let mut spec = FamilySpec::plain("realisation_gp_geodetic", vec![a, b]);
    spec.expect(Invariant::LowerGp, a);
    spec.expect(Invariant::Geodetic, b);
    if 2 <= a && a <= b {
        // b independent vertices joined to a clique of order a-1.
        let n = b + (a - 1);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for w in u + 1..n {
                if u >= b || w >= b {
                    g.add_edge(u, w).unwrap();
                }
            }
        }
        let mut labels: Vec<String> = (0..b).map(|i| format!("i{i}")).collect();
        labels.extend((0..a - 1).map(|i| format!("k{i}")));
        spec.labels = labels;
        return Ok(Generated { graph: g, spec });
    }
    if 4 <= b && b < a {
        // Cliques X1, X2 of order a-2 (with distinguished x1, x2), a
        // clique Y of order b-3, all X1-Y edges, x1 joined to X2, x2
        // joined to X1, a vertex w joined to X2, and a universal vertex z.
        let x1_start = 0;
        let x2_start = a - 2;
        let y_start = 2 * (a - 2);
        let w = y_start + (b - 3);
        let z = w + 1;
        let n = z + 1;
        let x1 = x1_start; // distinguished vertex of X1
        let x2 = x2_start;
        let mut g = Graph::empty(n);
        let clique = |g: &mut Graph, lo: usize, hi: usize| {
            for u in lo..hi {
                for v in u + 1..hi {
                    g.add_edge(u, v).unwrap();
                }
            }
        };
        clique(&mut g, x1_start, x2_start);
        clique(&mut g, x2_start, y_start);
        clique(&mut g, y_start, w);
        for u in x1_start..x2_start {
            for v in y_start..w {
                g.add_edge(u, v).unwrap();
            }
        }
        for v in x2_start..y_start {
            g.add_edge(x1, v).unwrap();
        }
        for v in x1_start..x2_start {
            g.add_edge(x2, v).unwrap();
        }
        for v in x2_start..y_start {
            g.add_edge(w, v).unwrap();
        }
        for v in 0..z {
            g.add_edge(z, v).unwrap();
        }
        let mut labels = Vec::with_capacity(n);
        labels.extend((0..a - 2).map(|i| if i == 0 { "x1".into() } else { format!("X1.{i}") }));
        labels.extend((0..a - 2).map(|i| if i == 0 { "x2".into() } else { format!("X2.{i}") }));
        labels.extend((0..b - 3).map(|i| format!("Y.{i}")));
        labels.push("w".into());
        labels.push("z".into());
        spec.labels = labels;
        return Ok(Generated { graph: g, spec });
    }
    Err(Error::input(format!(
        "no graph has lower gp {a} and geodetic number {b}; feasible iff 2 <= a <= b or 4 <= b < a"
    )))
}

/// Graph with smallest-maximal general position number `a` and general
/// position number `b`, for 2 <= a < b: the join of (K_c u K_{b-a+c})
/// with K_{a-c}, c minimal with a <= b-a+2c <= b.
pub fn realisation_gp_lower_gp(a: usize, b: usize) -> Result<Generated> {
    if !(2 <= a && a < b) {
        return Err(Error::input("realisation_gp_lower_gp needs 2 <= a < b"));
    }
    let c = 1.max(a.saturating_sub(b / 2));
    debug_assert!(a <= b - a + 2 * c && b - a + 2 * c <= b);
    let left = complete_graph(c).disjoint_union(&complete_graph(b - a + c));
    let g = left.join(&complete_graph(a - c));
    let mut labels: Vec<String> = (0..c).map(|i| format!("A.{i}")).collect();
    labels.extend((0..b - a + c).map(|i| format!("B.{i}")));
    labels.extend((0..a - c).map(|i| format!("J.{i}")));
    let mut spec = FamilySpec::plain("realisation_gp_lower_gp", vec![a, b]);
    spec.labels = labels;
    spec.expect(Invariant::LowerGp, a);
    spec.expect(Invariant::Gp, b);
    Ok(Generated { graph: g, spec })
}

/// K_n minus a star of k-1 edges at vertex 0 into {1..k-1}: the unique
/// (up to isomorphism) largest graph with lower gp number k on n >= 2k-1
/// vertices. Its size is C(n,2) - k + 1.
pub fn size_extremal(n: usize, k: usize) -> Result<Generated> {
    if k < 2 || n < 2 * k - 1 {
        return Err(Error::input("size_extremal needs k >= 2 and n >= 2k-1"));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !(u == 0 && v < k) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    let mut spec = FamilySpec::plain("size_extremal", vec![n, k]);
    spec.expect(Invariant::LowerGp, k);
    Ok(Generated { graph: g, spec })
}

/// Blow-up of a 6-cycle into cliques W0..W5 (consecutive cliques fully
/// joined), sized so that the lower monophonic position number is `a`
/// and the lower general position number is `b`; needs 2 <= a < b.
pub fn hexagon_blowup(a: usize, b: usize) -> Result<Generated> {
    if !(2 <= a && a < b) {
        return Err(Error::input("hexagon_blowup needs 2 <= a < b"));
    }
    let sizes: [usize; 6] = if a.is_multiple_of(2) {
        let small = a / 2;
        let big = b - a / 2;
        [small, big, small, big, big, big]
    } else {
        let big = b - (a - 1) / 2;
        [a.div_ceil(2), big, (a - 1) / 2, big, big, big]
    };
    if sizes.contains(&0) {
        return Err(Error::input("hexagon_blowup parameters give an empty clique"));
    }
    let n: usize = sizes.iter().sum();
    let mut start = [0usize; 7];
    for i in 0..6 {
        start[i + 1] = start[i] + sizes[i];
    }
    let block = |v: usize| (0..6).find(|&i| v < start[i + 1]).unwrap();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let (bu, bv) = (block(u), block(v));
            if bu == bv || (bu + 1) % 6 == bv || (bv + 1) % 6 == bu {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    let mut spec = FamilySpec::plain("hexagon_blowup", vec![a, b]);
    spec.labels = (0..n).map(|v| format!("W{}.{}", block(v), v - start[block(v)])).collect();
    spec.expect(Invariant::LowerMp, a);
    spec.expect(Invariant::LowerGp, b);
    Ok(Generated { graph: g, spec })
}

/// A clique split into parts W, R, S1, S2 (|W| = w >= s, |R| = r >= 1,
/// |S1| = |S2| = s >= 1) plus apex x1 joined to S1 u R and apex x2
/// joined to S2 u R. Lower gp number s+2, lower mp number min{w+2, r+s+1}.
pub fn z_graph(w: usize, r: usize, s: usize) -> Result<Generated> {
    if s < 1 || w < s || r < 1 {
        return Err(Error::input("z_graph needs w >= s >= 1 and r >= 1"));
    }
    let core = w + r + 2 * s;
    let x1 = core;
    let x2 = core + 1;
    let mut g = Graph::empty(core + 2);
    for u in 0..core {
        for v in u + 1..core {
            g.add_edge(u, v).unwrap();
        }
    }
    // layout: W = 0..w, R = w..w+r, S1 next, S2 last.
    for v in w..w + r + s {
        g.add_edge(x1, v).unwrap();
    }
    for v in w..w + r {
        g.add_edge(x2, v).unwrap();
    }
    for v in w + r + s..core {
        g.add_edge(x2, v).unwrap();
    }
    let mut labels: Vec<String> = (0..w).map(|i| format!("W.{i}")).collect();
    labels.extend((0..r).map(|i| format!("R.{i}")));
    labels.extend((0..s).map(|i| format!("S1.{i}")));
    labels.extend((0..s).map(|i| format!("S2.{i}")));
    labels.push("x1".into());
    labels.push("x2".into());
    let mut spec = FamilySpec::plain("z_graph", vec![w, r, s]);
    spec.labels = labels;
    spec.expect(Invariant::LowerGp, s + 2);
    spec.expect(Invariant::LowerMp, (w + 2).min(r + s + 1));
    Ok(Generated { graph: g, spec })
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes
/// chosen so the inner cycle visits 5-6-7-8-9 in index order.
pub fn petersen() -> Generated {
    let edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
        (5, 6), (6, 7), (7, 8), (8, 9), (5, 9),
        (0, 5), (1, 8), (2, 6), (3, 9), (4, 7),
    ];
    let g = Graph::from_edges(10, &edges).unwrap();
    let mut spec = FamilySpec::plain("petersen", vec![]);
    spec.labels = (0..5)
        .map(|i| format!("outer{i}"))
        .chain((0..5).map(|i| format!("inner{i}")))
        .collect();
    spec.expect(Invariant::Gp, 6);
    spec.expect(Invariant::LowerGp, 4);
    spec.expect(Invariant::LowerMp, 2);
    Generated { graph: g, spec }
}

/// Cheap isomorphism-invariant fingerprint: order, size, sorted degree
/// sequence, sorted multiset of finite pairwise distances, triangle
/// count. Distinguishes the fixed targets the tests compare against;
/// not a full isomorphism test.
pub fn isomorphism_signature(g: &Graph) -> (usize, usize, Vec<usize>, Vec<u32>, usize) {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let d = DistanceMatrix::of(g);
    let mut dists = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            dists.push(d.get(u, v));
        }
    }
    dists.sort_unstable();
    let mut triangles = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                continue;
            }
            let mut common = g.neighbors(u).intersection(g.neighbors(v));
            common.remove(u);
            common.remove(v);
            triangles += common.iter().filter(|&w| w > v).count();
        }
    }
    (g.n(), g.m(), degrees, dists, triangles)
}
