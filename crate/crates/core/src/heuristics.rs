//! Greedy peeling starts and pairwise-swap local search.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{middle_validity, validity_unchecked, Graph, Numbering};
use crate::solver::{Method, SearchStats, SolveResult};
use crate::Objective;

/// Peeling numbering: repeatedly removes the vertex of least (for `Min`) or
/// greatest (for `Max`) degree in the remaining graph and gives it the lowest
/// unused number. Ties go to the smallest id, except that `Min` first prefers
/// the smaller original degree (so a star's hub is numbered after every leaf).
///
/// On a tree the `Min` order only ever removes leaves, so every 2-path has a
/// larger-numbered middle and the count is 0.
pub fn greedy_start(g: &Graph, objective: Objective) -> Numbering {
    let n = g.n();
    let mut deg: Vec<usize> = (0..=n)
        .map(|v| if v == 0 { 0 } else { g.degree(v) })
        .collect();
    // Keyed so that the first element is the next vertex to peel.
    let key = |d: usize, v: usize| match objective {
        Objective::Min => (d as isize, g.degree(v), v),
        Objective::Max => (-(d as isize), 0, v),
    };
    let mut queue: BTreeSet<(isize, usize, usize)> = g.vertices().map(|v| key(deg[v], v)).collect();
    let mut removed = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    while let Some((_, _, v)) = queue.pop_first() {
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&key(deg[w], w));
                deg[w] -= 1;
                queue.insert(key(deg[w], w));
            }
        }
    }
    Numbering::from_order(&order).expect("peeling visits every vertex once")
}

/// Change in validity if the numbers of `a` and `b` are exchanged.
///
/// Only 2-paths whose middle is `a`, `b` or a neighbour of either can change.
pub fn swap_delta(g: &Graph, pi: &mut Numbering, a: usize, b: usize) -> i64 {
    if a == b {
        return 0;
    }
    let mut touched: Vec<usize> = [a, b]
        .into_iter()
        .chain(g.neighbors(a).iter().copied())
        .chain(g.neighbors(b).iter().copied())
        .collect();
    touched.sort_unstable();
    touched.dedup();
    let sum = |pi: &Numbering| -> i64 {
        touched
            .iter()
            .map(|&u| middle_validity(g, pi, u) as i64)
            .sum()
    };
    let before = sum(pi);
    pi.swap(a, b);
    let after = sum(pi);
    pi.swap(a, b);
    after - before
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalSearchConfig {
    /// Shuffles the scan order in first-improvement mode.
    pub seed: u64,
    /// Cap on accepted swaps.
    pub max_iters: u64,
    /// Accept the first improving swap instead of the best one.
    pub first_improvement: bool,
}

impl Default for LocalSearchConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_iters: 100_000,
            first_improvement: false,
        }
    }
}

/// Swap-based hill climbing from `start`.
///
/// Best-improvement mode scans every pair `(i, j)`, `i < j`, and keeps the
/// first pair achieving the best delta, so ties go to the lexicographically
/// smallest pair. The result never claims optimality.
pub fn local_search(
    g: &Graph,
    start: &Numbering,
    objective: Objective,
    config: &LocalSearchConfig,
) -> Result<SolveResult> {
    let began = Instant::now();
    let mut pi = start.clone();
    crate::graph::count_validity(g, &pi)?;
    let mut value = validity_unchecked(g, &pi) as i64;
    let n = g.n();
    let gain = |delta: i64| match objective {
        Objective::Min => -delta,
        Objective::Max => delta,
    };
    let mut pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut nodes = 0u64;
    let mut accepted = 0u64;
    while accepted < config.max_iters {
        let mut best: Option<(i64, (usize, usize))> = None;
        if config.first_improvement {
            pairs.shuffle(&mut rng);
        }
        for &(i, j) in &pairs {
            nodes += 1;
            let d = gain(swap_delta(g, &mut pi, i, j));
            if d > 0 && best.is_none_or(|(b, _)| d > b) {
                best = Some((d, (i, j)));
                if config.first_improvement {
                    break;
                }
            }
        }
        let Some((d, (i, j))) = best else { break };
        pi.swap(i, j);
        value += match objective {
            Objective::Min => -d,
            Objective::Max => d,
        };
        accepted += 1;
    }
    debug_assert_eq!(value as u64, validity_unchecked(g, &pi));
    Ok(SolveResult {
        objective,
        value: value as u64,
        witness: pi,
        method: Method::Local,
        stats: SearchStats {
            nodes,
            elapsed: began.elapsed(),
            proven: false,
        },
    })
}
