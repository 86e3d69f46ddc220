//! The index lattice `{1, …, d-1}^n`, its intersection pairing, and the
//! intersection graph `Γ_{n,d}`.
//!
//! Vanishing cycles of the Fermat polynomial of degree `d` in `n` variables
//! are indexed by multi-indices `i = (i_1, …, i_n)` with `1 ≤ i_ν ≤ d-1`.
//! Two distinct cycles intersect (pairing `-1`) exactly when their indices
//! differ by at most one in every component and never in opposite directions;
//! the self-pairing is `-2`. The graph on the index set with an edge for each
//! pair of intersecting distinct cycles controls every relation family of the
//! fundamental-group presentations.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point of the index lattice: `n` components, each in `1..=d-1`.
pub type MultiIndex = Vec<u32>;

/// Size guard: constructions are refused outside `(d-1)^n ≤ 2^20`.
pub const MAX_VERTICES: usize = 1 << 20;

/// Size guard for operations that materialize all vertex pairs
/// (non-edge lists, presentations, …).
pub const MAX_DENSE_VERTICES: usize = 1 << 12;

/// The dimension/degree pair `(n, d)` with `n ≥ 1`, `d ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Params {
    pub n: u32,
    pub d: u32,
}

impl Params {
    pub fn new(n: u32, d: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::Invalid("n must be at least 1".into()));
        }
        if d < 2 {
            return Err(Error::Invalid("d must be at least 2".into()));
        }
        let params = Params { n, d };
        match params.checked_vertex_count() {
            Some(v) if v <= MAX_VERTICES => Ok(params),
            _ => Err(Error::TooLarge(format!(
                "(d-1)^n exceeds the supported bound {MAX_VERTICES} for n={n}, d={d}"
            ))),
        }
    }

    /// `(d-1)^n`, the number of lattice points.
    pub fn vertex_count(&self) -> usize {
        self.checked_vertex_count()
            .expect("Params::new enforces the size bound")
    }

    fn checked_vertex_count(&self) -> Option<usize> {
        let base = (self.d - 1) as usize;
        let mut acc: usize = 1;
        for _ in 0..self.n {
            acc = acc.checked_mul(base)?;
            if acc > MAX_VERTICES {
                return None;
            }
        }
        Some(acc)
    }

    /// All lattice points in ascending natural lexicographic order.
    ///
    /// This is the default labelling order: the generator `t_k` of a
    /// presentation corresponds to `points()[k-1]`.
    pub fn points(&self) -> Vec<MultiIndex> {
        let n = self.n as usize;
        let top = self.d - 1;
        let mut out = Vec::with_capacity(self.vertex_count());
        let mut cur = vec![1u32; n];
        loop {
            out.push(cur.clone());
            // odometer increment on the last component
            let mut pos = n;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if cur[pos] < top {
                    cur[pos] += 1;
                    for c in cur.iter_mut().skip(pos + 1) {
                        *c = 1;
                    }
                    break;
                }
            }
        }
    }

    /// Natural-order position of a lattice point (0-based), the inverse of
    /// `points()` indexing.
    pub fn position(&self, i: &[u32]) -> usize {
        let base = (self.d - 1) as usize;
        i.iter().fold(0usize, |acc, &c| acc * base + (c as usize - 1))
    }

    fn check_point(&self, i: &[u32]) -> Result<()> {
        if i.len() != self.n as usize {
            return Err(Error::Invalid(format!(
                "multi-index has {} components, expected {}",
                i.len(),
                self.n
            )));
        }
        if i.iter().any(|&c| c < 1 || c > self.d - 1) {
            return Err(Error::Invalid(format!(
                "multi-index components must lie in 1..={}",
                self.d - 1
            )));
        }
        Ok(())
    }
}

/// Intersection pairing of the vanishing cycles indexed by `i` and `j`.
///
/// Returns `-2` if `i = j`; `0` if some component differs by two or more, or
/// if two components differ in opposite directions; `-1` otherwise.
pub fn pairing(params: Params, i: &[u32], j: &[u32]) -> Result<i32> {
    params.check_point(i)?;
    params.check_point(j)?;
    if i == j {
        return Ok(-2);
    }
    let mut up = false;
    let mut down = false;
    for (&a, &b) in i.iter().zip(j) {
        let diff = a as i64 - b as i64;
        if diff.abs() >= 2 {
            return Ok(0);
        }
        if diff > 0 {
            up = true;
        } else if diff < 0 {
            down = true;
        }
    }
    if up && down {
        Ok(0)
    } else {
        Ok(-1)
    }
}

/// Enumerates the lattice in the order `≺_κ` used to spell out the generator
/// products `δ_κ`, for `0 ≤ κ ≤ n`.
///
/// `≺_0` is lexicographic with every component compared in descending order.
/// For `κ ≥ 1` the κ-th component is promoted to the most significant key and
/// compared ascending; the remaining components keep their positional order
/// and are compared descending. Each order is a permutation of the lattice,
/// and `≺_κ` restricted to a fixed κ-th value agrees with `≺_0` on the
/// remaining components.
pub fn enumerate(params: Params, kappa: u32) -> Result<Vec<MultiIndex>> {
    if kappa > params.n {
        return Err(Error::Invalid(format!(
            "kappa must lie in 0..={}, got {kappa}",
            params.n
        )));
    }
    let mut pts = params.points();
    pts.sort_by(|a, b| cmp_order(a, b, kappa));
    Ok(pts)
}

fn cmp_order(a: &[u32], b: &[u32], kappa: u32) -> Ordering {
    if kappa >= 1 {
        let k = (kappa - 1) as usize;
        match a[k].cmp(&b[k]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    for nu in 0..a.len() {
        if kappa >= 1 && nu == (kappa - 1) as usize {
            continue;
        }
        match b[nu].cmp(&a[nu]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// The intersection graph `Γ_{n,d}`.
///
/// Vertices carry 1-based labels in ascending natural lexicographic order of
/// their multi-indices; `edges`, `non_edges`, and `triangles` hold label
/// tuples in ascending order, each list sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub params: Params,
    pub vertices: Vec<MultiIndex>,
    pub edges: Vec<(u32, u32)>,
    pub non_edges: Vec<(u32, u32)>,
    pub triangles: Vec<(u32, u32, u32)>,
}

impl Graph {
    /// Builds the graph. Vertices are adjacent iff their multi-indices differ
    /// by at most one in each component, all in the same direction — i.e. the
    /// edge/triangle structure below is the subgraph geometry of the pairing.
    pub fn build(params: Params) -> Result<Graph> {
        let v = params.vertex_count();
        if v > MAX_DENSE_VERTICES {
            return Err(Error::TooLarge(format!(
                "graph construction is limited to (d-1)^n ≤ {MAX_DENSE_VERTICES}"
            )));
        }
        let vertices = params.points();
        let n = params.n as usize;
        let top = params.d - 1;

        // Every edge has a coordinatewise-smaller endpoint: the other endpoint
        // is obtained by adding a nonzero 0/1-vector. Triangles are totally
        // ordered chains i < i+δ < i+ε for nested nonzero 0/1-vectors δ ⊂ ε.
        let mut edges = Vec::new();
        let mut triangles = Vec::new();
        if top >= 2 {
            let masks: Vec<u32> = (1..(1u32 << n)).collect();
            let mut shifted = vec![0u32; n];
            for (pos, i) in vertices.iter().enumerate() {
                let label = pos as u32 + 1;
                let mut valid = Vec::with_capacity(masks.len());
                for &m in &masks {
                    let mut ok = true;
                    for (nu, s) in shifted.iter_mut().enumerate() {
                        let bump = (m >> (n - 1 - nu)) & 1;
                        let c = i[nu] + bump;
                        if c > top {
                            ok = false;
                            break;
                        }
                        *s = c;
                    }
                    if ok {
                        let other = params.position(&shifted) as u32 + 1;
                        edges.push((label, other));
                        valid.push((m, other));
                    }
                }
                for (ai, &(ma, la)) in valid.iter().enumerate() {
                    for &(mb, lb) in &valid[ai + 1..] {
                        // nested masks ⇒ the two upper endpoints are adjacent
                        if ma & mb == ma || ma & mb == mb {
                            let (x, y) = if la < lb { (la, lb) } else { (lb, la) };
                            triangles.push((label, x, y));
                        }
                    }
                }
            }
        }
        edges.sort_unstable();
        triangles.sort_unstable();

        let edge_set: BTreeSet<(u32, u32)> = edges.iter().copied().collect();
        let mut non_edges = Vec::new();
        for a in 1..=v as u32 {
            for b in (a + 1)..=v as u32 {
                if !edge_set.contains(&(a, b)) {
                    non_edges.push((a, b));
                }
            }
        }

        Ok(Graph {
            params,
            vertices,
            edges,
            non_edges,
            triangles,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Closed form for the edge count: `(2d-3)^n − (d-1)^n`.
    pub fn expected_edge_count(params: Params) -> usize {
        let n = params.n;
        let a = (2 * params.d as usize).saturating_sub(3);
        let b = params.d as usize - 1;
        a.pow(n) - b.pow(n)
    }

    /// Closed form for the triangle count:
    /// `Σ_{w=2}^{n} C(n,w)·(2^w − 2)·(d-2)^w·(d-1)^{n-w}`.
    pub fn expected_triangle_count(params: Params) -> usize {
        let n = params.n as usize;
        let d = params.d as usize;
        if d < 3 {
            return 0;
        }
        let mut total = 0usize;
        for w in 2..=n {
            total += binomial(n, w) * ((1usize << w) - 2) * (d - 2).pow(w as u32)
                * (d - 1).pow((n - w) as u32);
        }
        total
    }

    /// First triple of labels `(u, v, w)`, in ascending lexicographic order,
    /// whose induced subgraph has exactly one edge. Returns `None` when no
    /// such triple exists (this happens only for complete or near-complete
    /// graphs, i.e. very small parameters).
    pub fn find_single_edge_triple(&self) -> Option<(u32, u32, u32)> {
        let v = self.vertex_count();
        let edge_set: BTreeSet<(u32, u32)> = self.edges.iter().copied().collect();
        let is_edge = |a: u32, b: u32| edge_set.contains(&(a.min(b), a.max(b)));
        for u in 1..=v as u32 {
            for w in (u + 1)..=v as u32 {
                for x in (w + 1)..=v as u32 {
                    let count =
                        is_edge(u, w) as u32 + is_edge(u, x) as u32 + is_edge(w, x) as u32;
                    if count == 1 {
                        return Some((u, w, x));
                    }
                }
            }
        }
        None
    }

    /// Whether the graph is connected (true for every valid parameter pair;
    /// exposed so the self-check suite can assert it).
    pub fn is_connected(&self) -> bool {
        let v = self.vertex_count();
        if v == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); v + 1];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        let mut seen = vec![false; v + 1];
        let mut stack = vec![1u32];
        seen[1] = true;
        let mut reached = 0;
        while let Some(x) = stack.pop() {
            reached += 1;
            for &y in &adj[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        reached == v
    }

    /// GraphViz DOT rendering, deterministic. Vertex labels are the
    /// multi-index components, concatenated when `d ≤ 10` and comma-separated
    /// otherwise.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "graph gamma_{}_{} {{\n",
            self.params.n, self.params.d
        ));
        for (pos, i) in self.vertices.iter().enumerate() {
            let label: String = if self.params.d <= 10 {
                i.iter().map(|c| c.to_string()).collect()
            } else {
                i.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            out.push_str(&format!("  v{} [label=\"{}\"];\n", pos + 1, label));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, d: u32) -> Params {
        Params::new(n, d).unwrap()
    }

    #[test]
    fn params_guards() {
        assert!(Params::new(0, 3).is_err());
        assert!(Params::new(1, 1).is_err());
        assert!(Params::new(1, 3).is_ok());
        // (d-1)^n too large
        assert!(Params::new(2, 2000).is_err());
        // d = 2 keeps the lattice a single point for any n
        assert_eq!(p(8, 2).vertex_count(), 1);
    }

    #[test]
    fn points_natural_order() {
        assert_eq!(
            p(2, 3).points(),
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
        let pts = p(3, 3).points();
        assert_eq!(pts.len(), 8);
        assert_eq!(pts[0], vec![1, 1, 1]);
        assert_eq!(pts[7], vec![2, 2, 2]);
        for (pos, i) in pts.iter().enumerate() {
            assert_eq!(p(3, 3).position(i), pos);
        }
    }

    #[test]
    fn pairing_values() {
        let params = p(2, 3);
        assert_eq!(pairing(params, &[1, 1], &[1, 1]).unwrap(), -2);
        assert_eq!(pairing(params, &[1, 1], &[1, 2]).unwrap(), -1);
        assert_eq!(pairing(params, &[1, 1], &[2, 2]).unwrap(), -1);
        // opposite directions
        assert_eq!(pairing(params, &[1, 2], &[2, 1]).unwrap(), 0);
        // distance two in one component
        let params = p(1, 4);
        assert_eq!(pairing(params, &[1], &[3]).unwrap(), 0);
        assert_eq!(pairing(params, &[1], &[2]).unwrap(), -1);
    }

    #[test]
    fn pairing_rejects_bad_points() {
        let params = p(2, 3);
        assert!(pairing(params, &[1], &[1, 1]).is_err());
        assert!(pairing(params, &[0, 1], &[1, 1]).is_err());
        assert!(pairing(params, &[1, 3], &[1, 1]).is_err());
    }

    #[test]
    fn enumerate_two_three() {
        let params = p(2, 3);
        assert_eq!(
            enumerate(params, 0).unwrap(),
            vec![vec![2, 2], vec![2, 1], vec![1, 2], vec![1, 1]]
        );
        assert_eq!(
            enumerate(params, 1).unwrap(),
            vec![vec![1, 2], vec![1, 1], vec![2, 2], vec![2, 1]]
        );
        assert_eq!(
            enumerate(params, 2).unwrap(),
            vec![vec![2, 1], vec![1, 1], vec![2, 2], vec![1, 2]]
        );
        assert!(enumerate(params, 3).is_err());
    }

    #[test]
    fn enumerate_is_permutation() {
        for (n, d) in [(1, 5), (2, 4), (3, 3)] {
            let params = p(n, d);
            let natural: BTreeSet<MultiIndex> = params.points().into_iter().collect();
            for kappa in 0..=n {
                let order = enumerate(params, kappa).unwrap();
                assert_eq!(order.len(), natural.len());
                let seen: BTreeSet<MultiIndex> = order.into_iter().collect();
                assert_eq!(seen, natural);
            }
        }
    }

    #[test]
    fn graph_small_cases() {
        // n = 1: a path on d-1 vertices
        for d in 2..=12 {
            let g = Graph::build(p(1, d)).unwrap();
            let v = (d - 1) as usize;
            assert_eq!(g.vertex_count(), v);
            let path: Vec<(u32, u32)> = (1..v as u32).map(|k| (k, k + 1)).collect();
            assert_eq!(g.edges, path);
            assert!(g.triangles.is_empty());
            assert!(g.is_connected());
        }

        let g = Graph::build(p(2, 3)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges, vec![(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(g.non_edges, vec![(2, 3)]);
        assert_eq!(g.triangles, vec![(1, 2, 4), (1, 3, 4)]);

        let g = Graph::build(p(2, 4)).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edges.len(), 16);

        let g = Graph::build(p(3, 3)).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edges.len(), 19);
        assert_eq!(g.non_edges.len(), 9);
        assert_eq!(g.triangles.len(), 18);
    }

    #[test]
    fn graph_counts_match_closed_forms() {
        for (n, d) in [(1, 2), (1, 7), (2, 3), (2, 5), (3, 3), (3, 4), (4, 3), (2, 12)] {
            let params = p(n, d);
            let g = Graph::build(params).unwrap();
            assert_eq!(g.edges.len(), Graph::expected_edge_count(params), "({n},{d})");
            assert_eq!(
                g.triangles.len(),
                Graph::expected_triangle_count(params),
                "({n},{d})"
            );
            assert_eq!(
                g.edges.len() + g.non_edges.len(),
                g.vertex_count() * (g.vertex_count().saturating_sub(1)) / 2
            );
            for &(a, b, c) in &g.triangles {
                assert!(a < b && b < c);
                for pair in [(a, b), (a, c), (b, c)] {
                    assert!(g.edges.binary_search(&pair).is_ok());
                }
            }
            assert!(g.is_connected());
        }
    }

    #[test]
    fn graph_edges_match_pairing() {
        for (n, d) in [(1, 6), (2, 4), (3, 3)] {
            let params = p(n, d);
            let g = Graph::build(params).unwrap();
            let pts = &g.vertices;
            let mut expected = Vec::new();
            for a in 0..pts.len() {
                for b in (a + 1)..pts.len() {
                    if pairing(params, &pts[a], &pts[b]).unwrap() != 0 {
                        expected.push((a as u32 + 1, b as u32 + 1));
                    }
                }
            }
            assert_eq!(g.edges, expected);
        }
    }

    #[test]
    fn single_edge_triples() {
        let g = Graph::build(p(1, 5)).unwrap();
        assert_eq!(g.find_single_edge_triple(), Some((1, 2, 4)));

        let g = Graph::build(p(2, 4)).unwrap();
        // labels 1 = (1,1), 2 = (1,2), 7 = (3,1)
        assert_eq!(g.find_single_edge_triple(), Some((1, 2, 7)));
        assert_eq!(g.vertices[0], vec![1, 1]);
        assert_eq!(g.vertices[1], vec![1, 2]);
        assert_eq!(g.vertices[6], vec![3, 1]);

        // the exceptional parameter pairs admit no such triple
        assert_eq!(Graph::build(p(1, 4)).unwrap().find_single_edge_triple(), None);
        assert_eq!(Graph::build(p(2, 3)).unwrap().find_single_edge_triple(), None);
        // and for n ≥ 3 every d ≥ 3 admits one
        let g = Graph::build(p(3, 3)).unwrap();
        assert!(g.find_single_edge_triple().is_some());
    }

    #[test]
    fn dot_output_shape() {
        let g = Graph::build(p(2, 3)).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph gamma_2_3 {"));
        assert!(dot.contains("v1 [label=\"11\"];"));
        assert!(dot.contains("v1 -- v2;"));
        assert!(dot.ends_with("}\n"));
    }
}
