//! Explicit numberings that attain the known optima.
//!
//! Every function numbers the canonical instance produced by
//! [`generate`](crate::generate), so vertex ids follow the generator's
//! conventions (hub of a star or wheel is vertex 1, grid cell `(i, j)` is
//! `(i - 1) * cols + j`, and so on). Free choices are resolved by ascending
//! vertex id.

use crate::error::{Error, Result};
use crate::generators::{generate_with_trace, DimpleTrace, GraphClassSpec};
use crate::graph::{Graph, Numbering};
use crate::heuristics::greedy_start;
use crate::Objective;

fn need(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParams(msg.to_string()))
    }
}

fn from_assignment(assignment: Vec<usize>) -> Numbering {
    Numbering::new(assignment).expect("construction yields a permutation")
}

/// Sequential numbering from one end; no valid paths.
pub fn path_min(n: usize) -> Result<Numbering> {
    need(n >= 1, "path needs n >= 1")?;
    Ok(Numbering::identity(n))
}

// Positions 2, 4, 6, ... (odd distance from vertex 1) get 1, 2, 3, ...; the
// rest follow in position order. Each interior small vertex is a valid middle.
fn path_max_numbers(len: usize) -> Vec<usize> {
    let low = len / 2;
    let mut next_high = low;
    (1..=len)
        .map(|v| {
            if v % 2 == 0 {
                v / 2
            } else {
                next_high += 1;
                next_high
            }
        })
        .collect()
}

/// `ceil(n/2) - 1` valid paths.
pub fn path_max(n: usize) -> Result<Numbering> {
    need(n >= 3, "path maximum needs n >= 3")?;
    Ok(from_assignment(path_max_numbers(n)))
}

/// Leaf peeling: least remaining degree first, smallest id on ties.
pub fn tree_min(g: &Graph) -> Result<Numbering> {
    if g.n() == 0 {
        return Err(Error::NotATree("empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::NotATree("graph is disconnected"));
    }
    if g.m() != g.n() - 1 {
        return Err(Error::NotATree("graph has a cycle"));
    }
    Ok(greedy_start(g, Objective::Min))
}

/// Hub first, then the leaves: `C(n-1, 2)` valid paths.
pub fn star_max(n: usize) -> Result<Numbering> {
    need(n >= 2, "star needs n >= 2")?;
    Ok(Numbering::identity(n))
}

/// Sequential around the cycle; only vertex 1 is a valid middle.
pub fn cycle_min(n: usize) -> Result<Numbering> {
    need(n >= 3, "cycle needs n >= 3")?;
    Ok(Numbering::identity(n))
}

/// Vertex 1 gets 1 and the path `2..=n` gets the path maximum on `2..=n`.
pub fn cycle_max(n: usize) -> Result<Numbering> {
    need(n >= 3, "cycle needs n >= 3")?;
    Ok(from_assignment(cycle_max_numbers(n)))
}

fn cycle_max_numbers(n: usize) -> Vec<usize> {
    std::iter::once(1)
        .chain(path_max_numbers(n - 1).into_iter().map(|x| x + 1))
        .collect()
}

/// Hub gets `n`, rim sequential: `n` valid paths.
pub fn wheel_min(n: usize) -> Result<Numbering> {
    need(n >= 4, "wheel needs n >= 4")?;
    Ok(from_assignment(std::iter::once(n).chain(1..n).collect()))
}

/// Hub gets 1, rim numbered by the cycle maximum on `2..=n`.
pub fn wheel_max(n: usize) -> Result<Numbering> {
    need(n >= 4, "wheel needs n >= 4")?;
    Ok(from_assignment(
        std::iter::once(1)
            .chain(cycle_max_numbers(n - 1).into_iter().map(|x| x + 1))
            .collect(),
    ))
}

fn check_bipartite(p: usize, q: usize) -> Result<()> {
    need(p >= 1 && p <= q, "complete bipartite needs 1 <= p <= q")
}

/// Small part gets `1..=p`: `p * C(q, 2)` valid paths.
pub fn bipartite_max(p: usize, q: usize) -> Result<Numbering> {
    check_bipartite(p, q)?;
    Ok(Numbering::identity(p + q))
}

/// Small part gets the `p` highest numbers of the parity of `q + 1`
/// (odd when `q` is even, even when `q` is odd); the large part takes the rest
/// in ascending order.
pub fn bipartite_min(p: usize, q: usize) -> Result<Numbering> {
    check_bipartite(p, q)?;
    let n = p + q;
    let parity = (q + 1) % 2;
    let mut small: Vec<usize> = (1..=n).rev().filter(|x| x % 2 == parity).take(p).collect();
    small.reverse();
    let large = (1..=n).filter(|x| !small.contains(x));
    Ok(from_assignment(
        small.iter().copied().chain(large).collect(),
    ))
}

/// Reverse dimpling order: the last inserted vertex gets 1, and the base
/// `K_4` takes the four largest numbers in id order. Gives `3n - 8`.
pub fn apollonian_min(g: &Graph, trace: &DimpleTrace) -> Result<Numbering> {
    if trace.replay()? != *g {
        return Err(Error::TraceMismatch);
    }
    let order: Vec<usize> = trace.removal_order().chain(1..=4).collect();
    Numbering::from_order(&order)
}

/// Highest remaining degree first, smallest id on ties.
///
/// Degrees are recomputed after every removal. Ordering by the degrees of
/// the full graph falls short on the spine family from eight vertices on
/// (37 instead of 38 at `n = 8`).
pub fn apollonian_max(g: &Graph) -> Numbering {
    greedy_start(g, Objective::Max)
}

fn grid_check(rows: usize, cols: usize) -> Result<()> {
    need(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1")
}

/// Row-major from the top-left cell.
pub fn grid_min(rows: usize, cols: usize) -> Result<Numbering> {
    grid_check(rows, cols)?;
    Ok(Numbering::identity(rows * cols))
}

/// Cells with `i + j` odd first, then the rest, each group in id order.
/// A single row or column is numbered as a path.
pub fn grid_max(rows: usize, cols: usize) -> Result<Numbering> {
    grid_check(rows, cols)?;
    let n = rows * cols;
    if rows == 1 || cols == 1 {
        return Ok(if n >= 3 {
            from_assignment(path_max_numbers(n))
        } else {
            Numbering::identity(n)
        });
    }
    let odd = |v: usize| ((v - 1) / cols + (v - 1) % cols) % 2 == 1;
    let order: Vec<usize> = (1..=n)
        .filter(|&v| odd(v))
        .chain((1..=n).filter(|&v| !odd(v)))
        .collect();
    Numbering::from_order(&order)
}

/// Whether [`construct`] is known to be optimal for this pair.
///
/// Apollonian maxima are only claimed for the spine family and for instances
/// small enough (n <= 6) that every Apollonian graph is a spine.
pub fn claims_optimal(spec: &GraphClassSpec, objective: Objective) -> bool {
    use GraphClassSpec as S;
    match (*spec, objective) {
        (S::Path { .. } | S::Cycle { .. } | S::Star { .. } | S::Wheel { .. }, _) => true,
        (S::Complete { .. } | S::CompleteBipartite { .. }, _) => true,
        (S::RandomTree { .. }, Objective::Min) => true,
        (S::RandomTree { .. }, Objective::Max) => false,
        (S::Grid { rows, cols }, _) => rows == 1 || cols == 1 || (rows == cols && rows % 2 == 1),
        (S::ApollonianSpine { .. }, _) => true,
        (S::ApollonianRandom { .. }, Objective::Min) => true,
        (S::ApollonianRandom { n, .. }, Objective::Max) => n <= 6,
        (S::Named { .. }, _) => false,
    }
}

/// Builds the instance and its constructed numbering for `objective`.
///
/// Returns [`Error::Unsupported`] for pairs without a construction: named
/// graphs, and the maximum of a general tree.
pub fn construct(spec: &GraphClassSpec, objective: Objective) -> Result<(Graph, Numbering)> {
    use GraphClassSpec as S;
    use Objective::{Max, Min};
    let (g, trace) = generate_with_trace(spec)?;
    let pi = match (*spec, objective) {
        (S::Path { n }, Min) => path_min(n)?,
        (S::Path { n }, Max) if n < 3 => Numbering::identity(n),
        (S::Path { n }, Max) => path_max(n)?,
        (S::Cycle { n }, Min) => cycle_min(n)?,
        (S::Cycle { n }, Max) => cycle_max(n)?,
        (S::Star { .. } | S::RandomTree { .. }, Min) => tree_min(&g)?,
        (S::Star { n }, Max) => star_max(n)?,
        (S::Wheel { n }, Min) => wheel_min(n)?,
        (S::Wheel { n }, Max) => wheel_max(n)?,
        (S::Complete { n }, _) => Numbering::identity(n),
        (S::CompleteBipartite { p, q }, Min) => bipartite_min(p, q)?,
        (S::CompleteBipartite { p, q }, Max) => bipartite_max(p, q)?,
        (S::Grid { rows, cols }, Min) => grid_min(rows, cols)?,
        (S::Grid { rows, cols }, Max) => grid_max(rows, cols)?,
        (S::ApollonianSpine { .. } | S::ApollonianRandom { .. }, Min) => match &trace {
            Some(t) => apollonian_min(&g, t)?,
            None => Numbering::identity(g.n()),
        },
        (S::ApollonianSpine { .. } | S::ApollonianRandom { .. }, Max) => apollonian_max(&g),
        (S::RandomTree { .. }, Max) | (S::Named { .. }, _) => {
            return Err(Error::Unsupported(format!(
                "no {objective} construction for {spec}"
            )))
        }
    };
    Ok((g, pi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::formula_value;
    use crate::generators::{generate, generate_apollonian_random, generate_apollonian_spine};
    use crate::graph::count_validity;
    use crate::{analysis, named_graph, NamedGraph};

    fn count(g: &Graph, pi: &Numbering) -> u64 {
        count_validity(g, pi).unwrap().count
    }

    fn built(spec: GraphClassSpec, obj: Objective) -> u64 {
        let (g, pi) = construct(&spec, obj).unwrap();
        count(&g, &pi)
    }

    #[test]
    fn paths() {
        assert_eq!(path_min(1).unwrap().as_slice(), &[1]);
        assert_eq!(path_max(3).unwrap().as_slice(), &[2, 1, 3]);
        assert_eq!(built(GraphClassSpec::Path { n: 5 }, Objective::Min), 0);
        assert_eq!(built(GraphClassSpec::Path { n: 7 }, Objective::Max), 3);
        assert_eq!(built(GraphClassSpec::Path { n: 6 }, Objective::Max), 2);
        assert!(path_max(2).is_err());
    }

    #[test]
    fn trees_and_stars() {
        let star = generate(&GraphClassSpec::Star { n: 5 }).unwrap();
        let pi = tree_min(&star).unwrap();
        assert_eq!(pi.as_slice(), &[5, 1, 2, 3, 4]);
        assert_eq!(count(&star, &pi), 0);
        for (n, v) in [(3, 1), (4, 3), (5, 6)] {
            assert_eq!(built(GraphClassSpec::Star { n }, Objective::Max), v);
        }
        for seed in 0..30 {
            for n in 1..=12 {
                assert_eq!(
                    built(GraphClassSpec::RandomTree { n, seed }, Objective::Min),
                    0
                );
            }
        }
        let c4 = generate(&GraphClassSpec::Cycle { n: 4 }).unwrap();
        assert_eq!(tree_min(&c4), Err(Error::NotATree("graph has a cycle")));
    }

    #[test]
    fn cycles_and_wheels() {
        assert_eq!(built(GraphClassSpec::Cycle { n: 6 }, Objective::Min), 1);
        assert_eq!(built(GraphClassSpec::Cycle { n: 5 }, Objective::Max), 2);
        assert_eq!(built(GraphClassSpec::Cycle { n: 3 }, Objective::Max), 1);
        assert_eq!(built(GraphClassSpec::Wheel { n: 6 }, Objective::Min), 6);
        assert_eq!(built(GraphClassSpec::Wheel { n: 5 }, Objective::Max), 8);
        assert_eq!(built(GraphClassSpec::Wheel { n: 4 }, Objective::Max), 4);
    }

    #[test]
    fn bipartite() {
        assert_eq!(
            built(
                GraphClassSpec::CompleteBipartite { p: 2, q: 4 },
                Objective::Max
            ),
            12
        );
        assert_eq!(
            built(
                GraphClassSpec::CompleteBipartite { p: 2, q: 4 },
                Objective::Min
            ),
            3
        );
        assert_eq!(
            built(
                GraphClassSpec::CompleteBipartite { p: 3, q: 3 },
                Objective::Min
            ),
            5
        );
        // q even: small part on the highest odd numbers.
        assert_eq!(bipartite_min(2, 4).unwrap().as_slice()[..2], [3, 5]);
        assert_eq!(bipartite_min(2, 3).unwrap().as_slice()[..2], [2, 4]);
    }

    #[test]
    fn grids() {
        assert_eq!(
            built(GraphClassSpec::Grid { rows: 3, cols: 3 }, Objective::Min),
            4
        );
        assert_eq!(
            built(GraphClassSpec::Grid { rows: 3, cols: 3 }, Objective::Max),
            12
        );
        assert_eq!(
            built(GraphClassSpec::Grid { rows: 4, cols: 4 }, Objective::Min),
            9
        );
        assert_eq!(
            built(GraphClassSpec::Grid { rows: 4, cols: 4 }, Objective::Max),
            26
        );
        assert_eq!(
            built(GraphClassSpec::Grid { rows: 5, cols: 5 }, Objective::Min),
            16
        );
        assert_eq!(
            built(GraphClassSpec::Grid { rows: 1, cols: 7 }, Objective::Max),
            3
        );
    }

    #[test]
    fn apollonian() {
        let k4 = generate(&GraphClassSpec::Complete { n: 4 }).unwrap();
        let (_, t4) = generate_apollonian_spine(4).unwrap();
        assert_eq!(count(&k4, &apollonian_min(&k4, &t4).unwrap()), 4);
        assert_eq!(
            built(GraphClassSpec::ApollonianSpine { n: 7 }, Objective::Min),
            13
        );
        assert_eq!(
            built(
                GraphClassSpec::ApollonianRandom { n: 10, seed: 7 },
                Objective::Min
            ),
            22
        );
        assert_eq!(
            built(GraphClassSpec::ApollonianSpine { n: 8 }, Objective::Max),
            38
        );
        assert_eq!(
            built(GraphClassSpec::ApollonianSpine { n: 9 }, Objective::Max),
            52
        );
        let h29 = named_graph(NamedGraph::Heptahedral29);
        assert_eq!(count(&h29, &apollonian_max(&h29)), 24);
        let two = named_graph(NamedGraph::TwoApollonian);
        assert_eq!(count(&two, &apollonian_max(&two)), 25);
    }

    #[test]
    fn apollonian_min_counts_one_path_per_triangle() {
        for seed in 0..20 {
            let (g, trace) = generate_apollonian_random(14, seed).unwrap();
            let pi = apollonian_min(&g, &trace).unwrap();
            assert_eq!(count(&g, &pi), analysis::triangle_count(&g));
        }
    }

    #[test]
    fn apollonian_min_rejects_a_foreign_trace() {
        let (g, _) = generate_apollonian_random(9, 1).unwrap();
        let (_, other) = generate_apollonian_spine(9).unwrap();
        if g != other.replay().unwrap() {
            assert_eq!(apollonian_min(&g, &other), Err(Error::TraceMismatch));
        }
    }

    #[test]
    fn constructions_match_exact_formulas() {
        let classes = [
            "path",
            "cycle",
            "star",
            "wheel",
            "complete",
            "bipartite",
            "apollonian-spine",
        ];
        for class in classes {
            for spec in crate::family(class, 3..=14, 0).unwrap() {
                for obj in [Objective::Min, Objective::Max] {
                    if let Ok(v) = formula_value(&spec, obj) {
                        if let (Some(exact), true) = (v.exact(), claims_optimal(&spec, obj)) {
                            assert_eq!(built(spec, obj), exact, "{spec} {obj}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unsupported_pairs() {
        let named = GraphClassSpec::Named {
            id: NamedGraph::Octahedral,
        };
        assert!(matches!(
            construct(&named, Objective::Min),
            Err(Error::Unsupported(_))
        ));
        let tree = GraphClassSpec::RandomTree { n: 8, seed: 1 };
        assert!(matches!(
            construct(&tree, Objective::Max),
            Err(Error::Unsupported(_))
        ));
    }
}
