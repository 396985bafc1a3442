//! Exact optimisation and the two decision problems.
//!
//! Both solvers hand out numbers in ascending order. Giving the next number
//! to `v` adds `C(d, 2)` valid paths, where `d` counts the neighbours of `v`
//! that are still unnumbered: those neighbours will all receive larger
//! numbers, and neighbours numbered earlier never make `v` a valid middle.
//! Partial costs are therefore final, and what remains to be paid is exactly
//! the validity of the subgraph induced on the unnumbered vertices.
//!
//! Candidates are tried in ascending vertex id and an incumbent is replaced
//! only on strict improvement, so the witness is the optimal numbering whose
//! vertex order (vertex numbered 1, then 2, ...) is lexicographically
//! smallest. Branch-and-bound keeps that witness, including when the first
//! level is split across threads.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{choose2, validity_unchecked, Graph, Numbering};
use crate::heuristics::greedy_start;
use crate::Objective;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Bnb,
    Local,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Bnb => "bnb",
            Method::Local => "local",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "bnb" => Ok(Method::Bnb),
            "local" => Ok(Method::Local),
            other => Err(Error::InvalidParams(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest order accepted by [`solve_brute`].
    pub brute_cap: usize,
    /// Search-node budget for branch-and-bound; `None` is unlimited.
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Worker threads for branch-and-bound; 1 runs on the calling thread.
    pub threads: usize,
    /// Only try vertex 1 as the first vertex. Sound for vertex-transitive
    /// graphs; see [`GraphClassSpec::is_vertex_transitive`](crate::GraphClassSpec::is_vertex_transitive).
    pub symmetric_first: bool,
}

pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            brute_cap: 10,
            node_limit: Some(DEFAULT_NODE_LIMIT),
            time_limit: None,
            threads: 1,
            symmetric_first: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
    /// The search finished, so `value` is the optimum.
    pub proven: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub objective: Objective,
    pub value: u64,
    pub witness: Numbering,
    pub method: Method,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Some numbering has at most `k` valid paths.
    AtMost,
    /// Some numbering has at least `k` valid paths.
    AtLeast,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "at-most" | "at_most" | "atmost" => Ok(Direction::AtMost),
            "at-least" | "at_least" | "atleast" => Ok(Direction::AtLeast),
            other => Err(Error::InvalidParams(format!("unknown direction `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DecisionQuery<'a> {
    pub graph: &'a Graph,
    pub k: u64,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Numbering),
    No,
    /// The budget ran out first.
    Unknown,
}

const FLUSH_EVERY: u64 = 4096;
const MEMO_CAPACITY: usize = 1 << 22;

/// Shared between workers: node counter, deadline and stop flag.
struct Budget {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    stop: AtomicBool,
    exhausted: AtomicBool,
}

impl Budget {
    fn new(node_limit: Option<u64>, time_limit: Option<Duration>) -> Self {
        Self {
            node_limit,
            deadline: time_limit.map(|t| Instant::now() + t),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            exhausted: AtomicBool::new(false),
        }
    }

    fn charge(&self, nodes: u64) {
        let total = self.nodes.fetch_add(nodes, Ordering::Relaxed) + nodes;
        let over_nodes = self.node_limit.is_some_and(|l| total > l);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
        }
    }
}

/// Best value so far and its vertex order.
type Incumbent = (u64, Vec<usize>);

struct Search<'a> {
    adj: &'a [u128],
    objective: Objective,
    prune: bool,
    /// Stop as soon as a leaf reaches this value (decision mode).
    target: Option<u64>,
    /// Best value known to any worker (initially the greedy start); only
    /// used to cut subtrees that cannot even tie it, which leaves the
    /// tie-break untouched.
    shared: &'a AtomicU64,
    budget: &'a Budget,
    best: Option<Incumbent>,
    order: Vec<usize>,
    /// Unnumbered-neighbour counts, indexed by `v - 1`.
    deg: Vec<u64>,
    memo: Option<HashMap<u128, u64>>,
    nodes: u64,
    pending: u64,
}

impl<'a> Search<'a> {
    fn new(
        adj: &'a [u128],
        objective: Objective,
        prune: bool,
        shared: &'a AtomicU64,
        budget: &'a Budget,
    ) -> Self {
        let deg = adj.iter().map(|m| m.count_ones() as u64).collect();
        Self {
            adj,
            objective,
            prune,
            target: None,
            shared,
            budget,
            best: None,
            order: Vec::with_capacity(adj.len()),
            deg,
            memo: prune.then(HashMap::new),
            nodes: 0,
            pending: 0,
        }
    }

    fn stopped(&self) -> bool {
        self.budget.stop.load(Ordering::Relaxed)
    }

    fn run(&mut self, first: u128) {
        let n = self.adj.len();
        let all = if n == 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        };
        let ub: u64 = self.deg.iter().map(|&d| choose2(d as usize)).sum();
        self.dfs(all, first, 0, ub);
        self.budget.charge(self.pending);
        self.pending = 0;
    }

    fn leaf(&mut self, cost: u64) {
        let better = match &self.best {
            None => true,
            Some((b, _)) => self.objective.improves(cost, *b),
        };
        if better {
            self.best = Some((cost, self.order.clone()));
            match self.objective {
                Objective::Min => self.shared.fetch_min(cost, Ordering::Relaxed),
                Objective::Max => self.shared.fetch_max(cost, Ordering::Relaxed),
            };
            let reached = self
                .target
                .is_some_and(|t| !self.objective.improves(t, cost));
            if reached {
                self.budget.stop.store(true, Ordering::Relaxed);
            }
        }
    }

    // True when no completion of this node can matter.
    fn cut(&mut self, unassigned: u128, cost: u64, ub: u64) -> bool {
        let shared = self.shared.load(Ordering::Relaxed);
        match self.objective {
            Objective::Min => {
                let mut min_deg = u64::MAX;
                let mut rest = unassigned;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    min_deg = min_deg.min(self.deg[i]);
                }
                // The first of the remaining vertices to be numbered pays at
                // least C(min degree, 2).
                let lb = cost + choose2(min_deg as usize);
                if self.best.as_ref().is_some_and(|(b, _)| lb >= *b)
                    || lb > shared
                    || self.target.is_some_and(|t| lb > t)
                {
                    return true;
                }
            }
            Objective::Max => {
                let top = cost + ub;
                if self.best.as_ref().is_some_and(|(b, _)| top <= *b)
                    || top < shared
                    || self.target.is_some_and(|t| top < t)
                {
                    return true;
                }
            }
        }
        // A set of numbered vertices reached before with a cost at least as
        // good has already been explored (or cut) from a lexicographically
        // earlier prefix.
        let objective = self.objective;
        let memo = self.memo.as_mut().expect("memo exists when pruning");
        match memo.get_mut(&unassigned) {
            Some(seen) if !objective.improves(cost, *seen) => true,
            Some(seen) => {
                *seen = cost;
                false
            }
            None => {
                if memo.len() < MEMO_CAPACITY {
                    memo.insert(unassigned, cost);
                }
                false
            }
        }
    }

    fn dfs(&mut self, unassigned: u128, choices: u128, cost: u64, ub: u64) {
        self.nodes += 1;
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.budget.charge(self.pending);
            self.pending = 0;
        }
        if unassigned == 0 {
            self.leaf(cost);
            return;
        }
        if self.stopped() {
            return;
        }
        if self.prune && self.cut(unassigned, cost, ub) {
            return;
        }
        let mut rest = choices;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = self.deg[i];
            let step = choose2(d as usize);
            let others = unassigned & !(1u128 << i);
            let nbrs = self.adj[i] & others;
            let mut drop = step;
            let mut it = nbrs;
            while it != 0 {
                let w = it.trailing_zeros() as usize;
                it &= it - 1;
                drop += self.deg[w] - 1;
                self.deg[w] -= 1;
            }
            self.order.push(i + 1);
            self.dfs(others, others, cost + step, ub - drop);
            self.order.pop();
            let mut it = nbrs;
            while it != 0 {
                let w = it.trailing_zeros() as usize;
                it &= it - 1;
                self.deg[w] += 1;
            }
            if self.stopped() {
                return;
            }
        }
    }
}

struct Outcome {
    best: (u64, Vec<usize>),
    nodes: u64,
    exhausted: bool,
}

fn masks(g: &Graph) -> Result<Vec<u128>> {
    g.neighbor_masks()
        .ok_or_else(|| Error::Unsupported(format!("exact search supports n <= 128, got {}", g.n())))
}

fn search(
    g: &Graph,
    objective: Objective,
    prune: bool,
    target: Option<u64>,
    config: &SolverConfig,
) -> Result<Outcome> {
    let adj = masks(g)?;
    let n = adj.len();
    let budget = if prune {
        Budget::new(config.node_limit, config.time_limit)
    } else {
        Budget::new(None, None)
    };
    if n == 0 {
        return Ok(Outcome {
            best: (0, Vec::new()),
            nodes: 1,
            exhausted: false,
        });
    }
    // The greedy start bounds the search and is the fallback incumbent if
    // the budget runs out before any leaf is reached.
    let seed = prune.then(|| {
        let pi = greedy_start(g, objective);
        (validity_unchecked(g, &pi), pi.order())
    });
    let shared = AtomicU64::new(match (&seed, objective) {
        (Some((v, _)), _) => *v,
        (None, Objective::Min) => u64::MAX,
        (None, Objective::Max) => 0,
    });
    if let (Some((v, order)), Some(t)) = (&seed, target) {
        if !objective.improves(t, *v) {
            return Ok(Outcome {
                best: (*v, order.clone()),
                nodes: 0,
                exhausted: false,
            });
        }
    }
    let firsts: Vec<usize> = if config.symmetric_first {
        vec![0]
    } else {
        (0..n).collect()
    };

    let worker = |first_mask: u128| {
        let mut s = Search::new(&adj, objective, prune, &shared, &budget);
        s.target = target;
        s.run(first_mask);
        (s.best, s.nodes)
    };

    let results: Vec<(Option<Incumbent>, u64)> = if config.threads > 1 && firsts.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
        pool.install(|| firsts.par_iter().map(|&i| worker(1u128 << i)).collect())
    } else {
        let first_mask = firsts.iter().fold(0u128, |m, &i| m | 1u128 << i);
        vec![worker(first_mask)]
    };

    // Merge: best value, then smallest first vertex (results are in first-vertex order).
    let mut best: Option<Incumbent> = None;
    let mut nodes = 0;
    for (candidate, count) in results {
        nodes += count;
        if let Some((v, order)) = candidate {
            if best.as_ref().is_none_or(|(b, _)| objective.improves(v, *b)) {
                best = Some((v, order));
            }
        }
    }
    // A complete search always reaches a leaf at least as good as the seed.
    let best = match (best, seed) {
        (Some(b), Some(s)) if objective.improves(s.0, b.0) => s,
        (Some(b), _) => b,
        (None, Some(s)) => s,
        (None, None) => unreachable!("exhaustive search visits every leaf"),
    };
    Ok(Outcome {
        best,
        nodes,
        exhausted: budget.exhausted.load(Ordering::Relaxed),
    })
}

fn finish(
    objective: Objective,
    method: Method,
    outcome: Outcome,
    started: Instant,
) -> Result<SolveResult> {
    let (value, order) = outcome.best;
    Ok(SolveResult {
        objective,
        value,
        witness: Numbering::from_order(&order)?,
        method,
        stats: SearchStats {
            nodes: outcome.nodes,
            elapsed: started.elapsed(),
            proven: !outcome.exhausted,
        },
    })
}

/// Enumerates all `n!` numberings without pruning. Refuses graphs larger
/// than `config.brute_cap`.
pub fn solve_brute(g: &Graph, objective: Objective, config: &SolverConfig) -> Result<SolveResult> {
    if g.n() > config.brute_cap {
        return Err(Error::CapExceeded {
            n: g.n(),
            cap: config.brute_cap,
        });
    }
    let started = Instant::now();
    let serial = SolverConfig {
        threads: 1,
        ..config.clone()
    };
    let outcome = search(g, objective, false, None, &serial)?;
    finish(objective, Method::Brute, outcome, started)
}

/// Depth-first branch-and-bound.
///
/// The maximum is bounded by `cost + sum C(d(u), 2)` over unnumbered `u`,
/// the minimum by `cost + C(min d(u), 2)`, with `d` the unnumbered degree.
/// Sets of numbered vertices are memoised with the best cost seen. If the
/// budget runs out the incumbent is returned with `stats.proven == false`.
pub fn solve_bnb(g: &Graph, objective: Objective, config: &SolverConfig) -> Result<SolveResult> {
    let started = Instant::now();
    let outcome = search(g, objective, true, None, config)?;
    finish(objective, Method::Bnb, outcome, started)
}

/// Answers "at most k" (by minimising) or "at least k" (by maximising),
/// stopping at the first numbering that meets the threshold. The greedy start
/// is tried before any search.
pub fn decide(query: &DecisionQuery<'_>, config: &SolverConfig) -> Result<Decision> {
    let objective = match query.direction {
        Direction::AtMost => Objective::Min,
        Direction::AtLeast => Objective::Max,
    };
    let outcome = search(query.graph, objective, true, Some(query.k), config)?;
    let meets = |v: u64| match query.direction {
        Direction::AtMost => v <= query.k,
        Direction::AtLeast => v >= query.k,
    };
    match outcome.best {
        (v, order) if meets(v) => Ok(Decision::Yes(Numbering::from_order(&order)?)),
        _ if outcome.exhausted => Ok(Decision::Unknown),
        _ => Ok(Decision::No),
    }
}
