//! Formula / construction / solver agreement matrix.

use std::fmt;

use serde::Serialize;

use crate::closed_form::{formula_value, FormulaValue};
use crate::constructive::{claims_optimal, construct};
use crate::error::Result;
use crate::generators::{generate, GraphClassSpec};
use crate::graph::count_validity;
use crate::solver::{solve_bnb, solve_brute, SolverConfig};
use crate::Objective;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    /// Every enforced comparison holds.
    Agree,
    /// Some enforced comparison fails.
    Disagree,
    /// Disputed formula, settled by the solver; `resolved_by` names the match.
    Flagged,
    /// Only an upper bound is known and it holds.
    Bound,
    /// Nothing to enforce; values are reported as-is.
    Informational,
    /// No solver value (order above `exact_cap` or budget exhausted) and no
    /// other comparison to make.
    Skipped,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Agree => "agree",
            RowStatus::Disagree => "DISAGREE",
            RowStatus::Flagged => "flagged",
            RowStatus::Bound => "bound",
            RowStatus::Informational => "info",
            RowStatus::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub spec: String,
    pub n: usize,
    pub objective: Objective,
    pub formula: Option<FormulaValue>,
    pub constructed: Option<u64>,
    pub construction_optimal: bool,
    pub solver: Option<u64>,
    pub status: RowStatus,
    /// Candidate formulas matching the solver value on flagged rows.
    pub resolved_by: Vec<&'static str>,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Instances above this order get no solver column.
    pub exact_cap: usize,
    pub solver: SolverConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            exact_cap: 10,
            solver: SolverConfig::default(),
        }
    }
}

/// Exact optimum: brute force up to the brute cap, branch-and-bound above.
fn exact_value(
    spec: &GraphClassSpec,
    objective: Objective,
    config: &VerifyConfig,
) -> Result<Option<u64>> {
    if spec.order() > config.exact_cap {
        return Ok(None);
    }
    let g = generate(spec)?;
    let solver = SolverConfig {
        symmetric_first: spec.is_vertex_transitive(),
        ..config.solver.clone()
    };
    let r = if g.n() <= solver.brute_cap {
        solve_brute(&g, objective, &solver)?
    } else {
        solve_bnb(&g, objective, &solver)?
    };
    Ok(r.stats.proven.then_some(r.value))
}

pub fn verify_row(
    spec: &GraphClassSpec,
    objective: Objective,
    config: &VerifyConfig,
) -> Result<VerifyRow> {
    let formula = formula_value(spec, objective).ok();
    let constructed = match construct(spec, objective) {
        Ok((g, pi)) => Some(count_validity(&g, &pi)?.count),
        Err(_) => None,
    };
    let claims = constructed.is_some() && claims_optimal(spec, objective);
    let solver = exact_value(spec, objective, config)?;

    // A claimed-optimal construction must equal the true optimum.
    let mut ok = match (solver, claims) {
        (Some(s), true) => constructed == Some(s),
        _ => true,
    };
    // Any construction must lie on the feasible side of the optimum.
    if let (Some(s), Some(c)) = (solver, constructed) {
        ok &= !objective.improves(c, s);
    }
    let mut resolved_by = Vec::new();
    let status = match formula {
        Some(FormulaValue::Exact { value }) => {
            if let Some(s) = solver {
                ok &= s == value;
            }
            if claims {
                ok &= constructed == Some(value);
            } else if let Some(c) = constructed {
                ok &= !objective.improves(c, value);
            }
            match (ok, solver.is_some() || claims) {
                (false, _) => RowStatus::Disagree,
                (true, true) => RowStatus::Agree,
                (true, false) => RowStatus::Skipped,
            }
        }
        Some(FormulaValue::UpperBound { value }) => {
            ok &= solver.is_none_or(|s| s <= value) && constructed.is_none_or(|c| c <= value);
            if ok {
                RowStatus::Bound
            } else {
                RowStatus::Disagree
            }
        }
        Some(f @ FormulaValue::Disputed { .. }) => match solver {
            Some(s) => {
                resolved_by = f.resolve(s);
                if ok && !resolved_by.is_empty() {
                    RowStatus::Flagged
                } else {
                    RowStatus::Disagree
                }
            }
            None if ok => RowStatus::Skipped,
            None => RowStatus::Disagree,
        },
        None => match (ok, solver, claims) {
            (false, _, _) => RowStatus::Disagree,
            (true, None, _) => RowStatus::Skipped,
            (true, Some(_), true) => RowStatus::Agree,
            (true, Some(_), false) => RowStatus::Informational,
        },
    };
    Ok(VerifyRow {
        spec: spec.to_string(),
        n: spec.order(),
        objective,
        formula,
        constructed,
        construction_optimal: claims,
        solver,
        status,
        resolved_by,
    })
}

/// One row per instance and objective, in the order given.
pub fn verify_class(
    specs: &[GraphClassSpec],
    objectives: &[Objective],
    config: &VerifyConfig,
) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::with_capacity(specs.len() * objectives.len());
    for spec in specs {
        for &obj in objectives {
            rows.push(verify_row(spec, obj, config)?);
        }
    }
    Ok(rows)
}

/// Fixed-width table for terminals.
pub fn render_table(rows: &[VerifyRow]) -> String {
    let cell = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
    let mut out = format!(
        "{:<34} {:>3} {:<4} {:>12} {:>11} {:>7}  {}\n",
        "instance", "n", "obj", "formula", "constructed", "solver", "status"
    );
    for r in rows {
        let formula = r.formula.map_or("-".to_string(), |f| f.to_string());
        let mark = if r.construction_optimal { "" } else { "*" };
        let mut status = r.status.to_string();
        if !r.resolved_by.is_empty() {
            status.push_str(&format!(" ({})", r.resolved_by.join(" | ")));
        }
        out.push_str(&format!(
            "{:<34} {:>3} {:<4} {:>12} {:>11} {:>7}  {}\n",
            r.spec,
            r.n,
            r.objective.to_string(),
            formula,
            format!("{}{mark}", cell(r.constructed)),
            cell(r.solver),
            status
        ));
    }
    out
}

/// True when some row that is not flagged disagrees.
pub fn has_disagreement(rows: &[VerifyRow]) -> bool {
    rows.iter().any(|r| r.status == RowStatus::Disagree)
}
