//! Valid 2-path numberings of graphs.
//!
//! A numbering assigns `1..=n` to the vertices of a graph; a 2-path
//! `<x, u, y>` is *valid* when the middle vertex carries the smallest of the
//! three numbers. This crate counts valid paths, finds numberings that
//! minimise or maximise the count (exhaustively, by branch-and-bound, or by
//! local search), builds the known optimal numberings for structured graph
//! classes, and evaluates their closed-form optima.
//!
//! ```
//! use vpath::{generate, count_validity, GraphClassSpec, Numbering};
//!
//! let grid = generate(&GraphClassSpec::Grid { rows: 4, cols: 4 }).unwrap();
//! let report = count_validity(&grid, &Numbering::identity(16)).unwrap();
//! assert_eq!(report.count, 9);
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub mod analysis;
pub mod closed_form;
pub mod constructive;
pub mod error;
pub mod generators;
pub mod graph;
pub mod heuristics;
pub mod io;
pub mod solver;
pub mod verify;

pub use analysis::{is_triangulation_candidate, separating_triangle_count, triangle_count};
pub use closed_form::{formula_table, formula_value, FormulaRow, FormulaValue};
pub use constructive::construct;
pub use error::{Error, Result};
pub use generators::{
    dimple, family, generate, generate_apollonian_random, generate_apollonian_spine,
    generate_with_trace, named_graph, DimpleTrace, GraphClassSpec, NamedGraph,
};
pub use graph::{
    count_two_paths, count_validity, is_valid_numbering, valid_paths, validity_of_components,
    Graph, Numbering, TwoPath, ValidityReport,
};
pub use heuristics::{greedy_start, local_search, LocalSearchConfig};
pub use solver::{
    decide, solve_bnb, solve_brute, Decision, DecisionQuery, Direction, Method, SearchStats,
    SolveResult, SolverConfig,
};
pub use verify::{verify_class, RowStatus, VerifyRow};

/// Which extreme of the validity count is sought.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Min,
    Max,
}

impl Objective {
    /// True when `candidate` is strictly better than `incumbent`.
    pub fn improves(self, candidate: u64, incumbent: u64) -> bool {
        match self {
            Objective::Min => candidate < incumbent,
            Objective::Max => candidate > incumbent,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Min => "min",
            Objective::Max => "max",
        })
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Objective::Min),
            "max" => Ok(Objective::Max),
            other => Err(Error::InvalidParams(format!("unknown objective `{other}`"))),
        }
    }
}
