//! Graphs, numberings and the validity count.
//!
//! Vertices are the ids `1..=n` everywhere in the public API. A numbering is a
//! bijection from vertices onto `1..=n`; a 2-path `<x, u, y>` is valid under a
//! numbering when the middle vertex `u` carries a smaller number than both
//! endpoints.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// `C(k, 2)`.
#[inline]
pub fn choose2(k: usize) -> u64 {
    let k = k as u64;
    k * k.saturating_sub(1) / 2
}

/// A finite, simple, undirected graph on the vertex ids `1..=n`.
///
/// Neighbor lists are kept sorted, so two graphs with the same edge set
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting out-of-range ids,
    /// self-loops and repeated edges. Endpoint order within a pair is free.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u - 1].push(v);
            adj[v - 1].push(u);
            m += 1;
        }
        for (i, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (i + 1, w[0]);
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        Ok(Self { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n()
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n() && self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let u = i + 1;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// Components of the graph with the vertices in `removed` deleted.
    pub fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Renames every vertex `v` to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n())?;
        Self::from_edges(
            self.n(),
            self.edges().map(|(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }

    /// Places `other` after `self`, shifting its ids by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect()),
        );
        Self {
            adj,
            m: self.m + other.m,
        }
    }

    /// Adjacency bitmasks indexed by `v - 1`, bit `w - 1` set for each neighbor.
    pub(crate) fn neighbor_masks(&self) -> Option<Vec<u128>> {
        if self.n() > 128 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u128, |acc, &w| acc | 1 << (w - 1)))
                .collect(),
        )
    }
}

fn check_permutation(values: &[usize], n: usize) -> Result<()> {
    if values.len() != n {
        return Err(Error::NumberingLength {
            expected: n,
            found: values.len(),
        });
    }
    let mut seen = vec![false; n + 1];
    for (i, &x) in values.iter().enumerate() {
        if x == 0 || x > n {
            return Err(Error::NotBijective {
                n,
                reason: format!("vertex {} has number {x}", i + 1),
            });
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::NotBijective {
                n,
                reason: format!("number {x} is used twice"),
            });
        }
    }
    Ok(())
}

/// A bijection from vertices `1..=n` onto numbers `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Numbering {
    assignment: Vec<usize>,
}

impl Numbering {
    /// `assignment[v - 1]` is the number of vertex `v`.
    pub fn new(assignment: Vec<usize>) -> Result<Self> {
        check_permutation(&assignment, assignment.len())?;
        Ok(Self { assignment })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            assignment: (1..=n).collect(),
        }
    }

    /// Builds the numbering that gives `order[i]` the number `i + 1`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        check_permutation(order, order.len())?;
        let mut assignment = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            assignment[v - 1] = i + 1;
        }
        Ok(Self { assignment })
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn number(&self, v: usize) -> usize {
        self.assignment[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.assignment
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.assignment
    }

    /// Vertices listed by increasing number.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.len()];
        for (i, &x) in self.assignment.iter().enumerate() {
            order[x - 1] = i + 1;
        }
        order
    }

    /// Exchanges the numbers carried by vertices `a` and `b`.
    pub fn swap(&mut self, a: usize, b: usize) {
        self.assignment.swap(a - 1, b - 1);
    }

    /// The same numbering seen through the vertex renaming `v -> perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.len())?;
        let mut assignment = vec![0; self.len()];
        for (i, &x) in self.assignment.iter().enumerate() {
            assignment[perm[i] - 1] = x;
        }
        Ok(Self { assignment })
    }
}

impl fmt::Display for Numbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.assignment.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A 2-path `<x, u, y>`: `middle` is adjacent to both endpoints, which are
/// stored as `(min, max)`. The derived order sorts by middle, then endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoPath {
    pub middle: usize,
    pub endpoints: (usize, usize),
}

impl TwoPath {
    pub fn new(x: usize, middle: usize, y: usize) -> Self {
        Self {
            middle,
            endpoints: (x.min(y), x.max(y)),
        }
    }
}

impl fmt::Display for TwoPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            self.endpoints.0, self.middle, self.endpoints.1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    pub count: u64,
    /// The valid paths sorted by (middle, endpoints), when requested.
    pub paths: Option<Vec<TwoPath>>,
}

/// Total number of 2-paths: `sum over v of C(deg v, 2)`.
pub fn count_two_paths(g: &Graph) -> u64 {
    g.vertices().map(|v| choose2(g.degree(v))).sum()
}

/// Valid paths with middle `u`: pairs drawn from the neighbors numbered above `u`.
#[inline]
pub(crate) fn middle_validity(g: &Graph, pi: &Numbering, u: usize) -> u64 {
    let own = pi.number(u);
    choose2(
        g.neighbors(u)
            .iter()
            .filter(|&&w| pi.number(w) > own)
            .count(),
    )
}

/// Validity without the dimension check; callers guarantee `pi.len() == g.n()`.
pub(crate) fn validity_unchecked(g: &Graph, pi: &Numbering) -> u64 {
    g.vertices().map(|u| middle_validity(g, pi, u)).sum()
}

fn check_dimensions(g: &Graph, pi: &Numbering) -> Result<()> {
    if pi.len() != g.n() {
        return Err(Error::NumberingLength {
            expected: g.n(),
            found: pi.len(),
        });
    }
    Ok(())
}

/// Number of 2-paths made valid by `pi`.
pub fn count_validity(g: &Graph, pi: &Numbering) -> Result<ValidityReport> {
    check_dimensions(g, pi)?;
    Ok(ValidityReport {
        count: validity_unchecked(g, pi),
        paths: None,
    })
}

/// Like [`count_validity`], also listing every valid path once.
pub fn valid_paths(g: &Graph, pi: &Numbering) -> Result<ValidityReport> {
    check_dimensions(g, pi)?;
    let mut paths = Vec::new();
    for u in g.vertices() {
        let own = pi.number(u);
        let higher: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| pi.number(w) > own)
            .collect();
        for (i, &x) in higher.iter().enumerate() {
            for &y in &higher[i + 1..] {
                paths.push(TwoPath::new(x, u, y));
            }
        }
    }
    // Neighbor lists are sorted, so `paths` already is.
    debug_assert!(paths.windows(2).all(|w| w[0] < w[1]));
    Ok(ValidityReport {
        count: paths.len() as u64,
        paths: Some(paths),
    })
}

/// Validity split over connected components.
pub fn validity_of_components(g: &Graph, pi: &Numbering) -> Result<Vec<(Vec<usize>, u64)>> {
    check_dimensions(g, pi)?;
    Ok(g.components()
        .into_iter()
        .map(|comp| {
            let count = comp.iter().map(|&u| middle_validity(g, pi, u)).sum();
            (comp, count)
        })
        .collect())
}

/// True iff `assignment` is a permutation of `1..=g.n()`.
pub fn is_valid_numbering(g: &Graph, assignment: &[usize]) -> bool {
    check_permutation(assignment, g.n()).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v, v + 1))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, [(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        );
    }

    #[test]
    fn two_path_totals() {
        let star = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(count_two_paths(&star), 3);
        assert_eq!(count_two_paths(&path(7)), 5);
        assert_eq!(count_two_paths(&complete(4)), 12);
    }

    #[test]
    fn numbering_validation() {
        let g = Graph::empty(3);
        assert!(is_valid_numbering(&g, &[2, 1, 3]));
        assert!(!is_valid_numbering(&g, &[1, 1, 3]));
        assert!(!is_valid_numbering(&g, &[0, 1, 2]));
        assert!(!is_valid_numbering(&g, &[1, 2]));
        assert!(Numbering::new(vec![3, 1, 3]).is_err());
    }

    #[test]
    fn order_round_trips() {
        let pi = Numbering::new(vec![3, 1, 4, 2]).unwrap();
        assert_eq!(pi.order(), vec![2, 4, 1, 3]);
        assert_eq!(Numbering::from_order(&pi.order()).unwrap(), pi);
    }

    #[test]
    fn complete_graph_is_numbering_independent() {
        let g = complete(4);
        for pi in [vec![1, 2, 3, 4], vec![4, 3, 2, 1], vec![2, 4, 1, 3]] {
            let pi = Numbering::new(pi).unwrap();
            assert_eq!(count_validity(&g, &pi).unwrap().count, 4);
        }
    }

    #[test]
    fn sequential_path_has_no_valid_paths() {
        let r = count_validity(&path(3), &Numbering::identity(3)).unwrap();
        assert_eq!(r.count, 0);
        let pi = Numbering::new(vec![2, 1, 3]).unwrap();
        let r = valid_paths(&path(3), &pi).unwrap();
        assert_eq!(r.paths.unwrap(), vec![TwoPath::new(1, 2, 3)]);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert_eq!(
            count_validity(&path(4), &Numbering::identity(3)),
            Err(Error::NumberingLength {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn components_split_the_count() {
        let tri = complete(3);
        let g = tri.disjoint_union(&tri);
        let pi = Numbering::new(vec![6, 2, 4, 1, 5, 3]).unwrap();
        let parts = validity_of_components(&g, &pi).unwrap();
        assert_eq!(parts, vec![(vec![1, 2, 3], 1), (vec![4, 5, 6], 1)]);

        let parts = validity_of_components(&Graph::empty(5), &Numbering::identity(5)).unwrap();
        assert_eq!(parts.len(), 5);
        assert!(parts.iter().all(|(_, c)| *c == 0));
    }

    #[test]
    fn tiny_graphs_have_zero_validity() {
        for n in 0..3 {
            let g = complete(n);
            assert_eq!(
                count_validity(&g, &Numbering::identity(n)).unwrap().count,
                0
            );
        }
    }
}
