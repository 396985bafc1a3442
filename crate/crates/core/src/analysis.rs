//! Triangle counts and necessary conditions for maximal planar graphs.
//!
//! No planar embedding is ever computed. A separating triangle is detected by
//! the disconnection characterisation: deleting its three corners splits the
//! rest of the graph. For 3-connected triangulations (the Apollonian graphs
//! built here and the fixed polyhedral skeletons) that coincides with "a
//! triangle that is not a face". On other graphs the count is still
//! well-defined but carries no planar meaning.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All triangles `[u, v, w]` with `u < v < w`, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let (nu, nv) = (g.neighbors(u), g.neighbors(v));
        // Sorted-list intersection restricted to w > v.
        let (mut i, mut j) = (
            nu.partition_point(|&w| w <= v),
            nv.partition_point(|&w| w <= v),
        );
        while i < nu.len() && j < nv.len() {
            match nu[i].cmp(&nv[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push([u, v, nu[i]]);
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out
}

pub fn triangle_count(g: &Graph) -> u64 {
    triangles(g).len() as u64
}

/// Triangles whose removal disconnects the remaining vertices.
pub fn separating_triangles(g: &Graph) -> Result<Vec<[usize; 3]>> {
    if g.n() < 4 {
        return Err(Error::TooSmall("separating triangles need n >= 4"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(triangles(g)
        .into_iter()
        .filter(|t| g.components_avoiding(t).len() > 1)
        .collect())
}

pub fn separating_triangle_count(g: &Graph) -> Result<u64> {
    separating_triangles(g).map(|t| t.len() as u64)
}

/// Necessary (not sufficient) conditions for a maximal planar graph:
/// `m = 3n - 6`, minimum degree at least 3, and `2n - 4 <= triangles <= 3n - 8`.
pub fn is_triangulation_candidate(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || g.m() != 3 * n - 6 {
        return false;
    }
    if g.min_degree().unwrap_or(0) < 3 {
        return false;
    }
    let tau = triangle_count(g) as usize;
    (2 * n - 4..=3 * n - 8).contains(&tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, generate_apollonian_random, named_graph};
    use crate::{GraphClassSpec, NamedGraph};

    // Independent oracle: every vertex triple.
    fn triangles_by_triples(g: &Graph) -> u64 {
        let n = g.n();
        let mut c = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                for d in b + 1..=n {
                    if g.has_edge(a, b) && g.has_edge(b, d) && g.has_edge(a, d) {
                        c += 1;
                    }
                }
            }
        }
        c
    }

    #[test]
    fn triangle_counts() {
        let k4 = generate(&GraphClassSpec::Complete { n: 4 }).unwrap();
        assert_eq!(triangle_count(&k4), 4);
        let oct = named_graph(NamedGraph::Octahedral);
        assert_eq!(triangle_count(&oct), triangles_by_triples(&oct));
        assert_eq!(triangle_count(&oct), 8);
        for seed in 0..10 {
            let (g, _) = generate_apollonian_random(11, seed).unwrap();
            assert_eq!(triangle_count(&g), triangles_by_triples(&g));
            assert_eq!(triangle_count(&g), 3 * 11 - 8);
        }
    }

    #[test]
    fn separating_triangle_counts() {
        let k4 = generate(&GraphClassSpec::Complete { n: 4 }).unwrap();
        assert_eq!(separating_triangle_count(&k4).unwrap(), 0);
        let oct = named_graph(NamedGraph::Octahedral);
        assert_eq!(separating_triangle_count(&oct).unwrap(), 0);
        let (g, _) = generate_apollonian_random(10, 5).unwrap();
        assert_eq!(separating_triangle_count(&g).unwrap(), 6);
    }

    #[test]
    fn separating_triangle_errors() {
        let k3 = generate(&GraphClassSpec::Complete { n: 3 }).unwrap();
        assert!(matches!(
            separating_triangle_count(&k3),
            Err(Error::TooSmall(_))
        ));
        let two = k3.disjoint_union(&k3);
        assert_eq!(separating_triangle_count(&two), Err(Error::Disconnected));
    }

    #[test]
    fn triangulation_candidates() {
        let (g, _) = generate_apollonian_random(10, 1).unwrap();
        assert!(is_triangulation_candidate(&g));
        assert!(!is_triangulation_candidate(
            &generate(&GraphClassSpec::Cycle { n: 6 }).unwrap()
        ));
        // K_5 has the triangles but one edge too many.
        let k5 = generate(&GraphClassSpec::Complete { n: 5 }).unwrap();
        assert_eq!(triangle_count(&k5), 10);
        assert!(!is_triangulation_candidate(&k5));
        assert!(is_triangulation_candidate(&named_graph(
            NamedGraph::Octahedral
        )));
    }
}
