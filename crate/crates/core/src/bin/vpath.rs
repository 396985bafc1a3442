use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use vpath::io::{self, ResultRecord};
use vpath::verify::{has_disagreement, render_table, VerifyConfig};
use vpath::{
    construct, count_validity, decide, family, generate, greedy_start, local_search, solve_bnb,
    solve_brute, valid_paths, verify_class, Decision, DecisionQuery, Direction, Error,
    GraphClassSpec, LocalSearchConfig, NamedGraph, Numbering, Objective, SolverConfig,
};

#[derive(Parser)]
#[command(
    name = "vpath",
    version,
    about = "Valid 2-path counts and optimal numberings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file for a class instance.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count the valid 2-paths of a numbering.
    Count {
        graph: PathBuf,
        numbering: PathBuf,
        /// Also print every valid path as `x u y`.
        #[arg(long)]
        list: bool,
    },
    /// Find an optimal (or, with `local`, a good) numbering.
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        #[arg(long, value_enum, default_value = "bnb")]
        method: MethodArg,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Seed for the local search scan order.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Accepted swaps allowed to the local search.
        #[arg(long, default_value_t = 100_000)]
        max_iters: u64,
        /// Fix vertex 1 first; only sound when the graph is vertex-transitive.
        #[arg(long)]
        vertex_transitive: bool,
    },
    /// Decide whether some numbering meets a threshold. Exit 0 = YES, 1 = NO, 2 = error or unknown.
    Decide {
        graph: PathBuf,
        #[arg(short)]
        k: u64,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Print the witness numbering after YES.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compare closed forms, constructions and exact optima over class ranges.
    Verify {
        /// Comma-separated class names.
        #[arg(long, value_delimiter = ',', required = true)]
        classes: Vec<String>,
        /// Sizes as `a..b`, `a..=b`, `a-b` or a single number.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, value_enum, default_value = "both")]
        objective: ObjectiveChoice,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Largest order given an exact solver column.
        #[arg(long, default_value_t = 10)]
        exact_cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print the constructed numbering for a class instance.
    Construct {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    class: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Named graph id, for `--class named`.
    #[arg(long)]
    id: Option<NamedGraph>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search-node limit for branch-and-bound.
    #[arg(long, env = "VPATH_NODE_BUDGET", default_value_t = vpath::solver::DEFAULT_NODE_LIMIT)]
    budget: u64,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl BudgetArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            node_limit: Some(self.budget),
            time_limit: self.time_limit.map(Duration::from_secs_f64),
            threads: self.threads.max(1),
            ..SolverConfig::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Min,
    Max,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Min => Objective::Min,
            ObjectiveArg::Max => Objective::Max,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveChoice {
    Min,
    Max,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Bnb,
    Local,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    AtMost,
    AtLeast,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Jsonl,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad size `{t}`"))
    };
    let (a, b) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let x = num(s)?;
        (x, x)
    };
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok((a, b))
}

impl SpecArgs {
    fn to_spec(&self) -> Result<GraphClassSpec, Error> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Error::InvalidParams(format!("--class {} needs --{flag}", self.class)))
        };
        let n = || need(self.n, "n");
        let seed = self.seed;
        let spec = match self.class.as_str() {
            "path" => GraphClassSpec::Path { n: n()? },
            "cycle" => GraphClassSpec::Cycle { n: n()? },
            "star" => GraphClassSpec::Star { n: n()? },
            "random-tree" | "tree" => GraphClassSpec::RandomTree { n: n()?, seed },
            "wheel" => GraphClassSpec::Wheel { n: n()? },
            "complete" => GraphClassSpec::Complete { n: n()? },
            "complete-bipartite" | "bipartite" => GraphClassSpec::CompleteBipartite {
                p: need(self.p, "p")?,
                q: need(self.q, "q")?,
            },
            "grid" => GraphClassSpec::Grid {
                rows: need(self.rows, "rows")?,
                cols: need(self.cols, "cols")?,
            },
            "apollonian-spine" => GraphClassSpec::ApollonianSpine { n: n()? },
            "apollonian-random" => GraphClassSpec::ApollonianRandom { n: n()?, seed },
            "named" => GraphClassSpec::Named {
                id: self
                    .id
                    .ok_or_else(|| Error::InvalidParams("--class named needs --id".into()))?,
            },
            other => return Err(Error::InvalidParams(format!("unknown class `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidParams(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| Error::InvalidParams(format!("stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen { spec, output } => {
            let g = generate(&spec.to_spec()?)?;
            emit(&output, &io::write_graph(&g))?;
        }
        Command::Count {
            graph,
            numbering,
            list,
        } => {
            let g = io::read_graph(&graph)?;
            let pi = io::read_numbering(&numbering, Some(g.n()))?;
            if list {
                let report = valid_paths(&g, &pi)?;
                println!("{}", report.count);
                for path in report.paths.unwrap_or_default() {
                    println!("{path}");
                }
            } else {
                println!("{}", count_validity(&g, &pi)?.count);
            }
        }
        Command::Solve {
            graph,
            objective,
            method,
            budget,
            seed,
            max_iters,
            vertex_transitive,
        } => {
            let g = io::read_graph(&graph)?;
            let objective = Objective::from(objective);
            let config = SolverConfig {
                symmetric_first: vertex_transitive,
                ..budget.config()
            };
            let result = match method {
                MethodArg::Brute => solve_brute(&g, objective, &config)?,
                MethodArg::Bnb => solve_bnb(&g, objective, &config)?,
                MethodArg::Local => {
                    let start = greedy_start(&g, objective);
                    let cfg = LocalSearchConfig {
                        seed,
                        max_iters,
                        first_improvement: false,
                    };
                    local_search(&g, &start, objective, &cfg)?
                }
            };
            println!(
                "{}",
                ResultRecord::from_solve("solve", &g, &result).to_json_line()
            );
        }
        Command::Decide {
            graph,
            k,
            direction,
            witness,
            budget,
        } => {
            let g = io::read_graph(&graph)?;
            let direction = match direction {
                DirectionArg::AtMost => Direction::AtMost,
                DirectionArg::AtLeast => Direction::AtLeast,
            };
            let query = DecisionQuery {
                graph: &g,
                k,
                direction,
            };
            return Ok(match decide(&query, &budget.config())? {
                Decision::Yes(w) => {
                    println!("YES");
                    if witness {
                        print!(
                            "{}",
                            io::write_numbering(&w, Some(count_validity(&g, &w)?.count))
                        );
                    }
                    ExitCode::SUCCESS
                }
                Decision::No => {
                    println!("NO");
                    ExitCode::from(1)
                }
                Decision::Unknown => {
                    eprintln!("vpath: budget exhausted before a decision");
                    ExitCode::from(2)
                }
            });
        }
        Command::Verify {
            classes,
            n_range,
            objective,
            format,
            exact_cap,
            seed,
            budget,
        } => {
            let mut specs = Vec::new();
            for class in &classes {
                specs.extend(family(class, n_range.0..=n_range.1, seed)?);
            }
            let objectives: &[Objective] = match objective {
                ObjectiveChoice::Min => &[Objective::Min],
                ObjectiveChoice::Max => &[Objective::Max],
                ObjectiveChoice::Both => &[Objective::Min, Objective::Max],
            };
            let config = VerifyConfig {
                exact_cap,
                solver: budget.config(),
            };
            let rows = verify_class(&specs, objectives, &config)?;
            match format {
                Format::Table => print!("{}", render_table(&rows)),
                Format::Jsonl => {
                    for row in &rows {
                        println!("{}", serde_json::to_string(row).expect("row serialises"));
                    }
                }
            }
            if has_disagreement(&rows) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Construct {
            spec,
            objective,
            output,
        } => {
            let (g, pi): (_, Numbering) = construct(&spec.to_spec()?, objective.into())?;
            let value = count_validity(&g, &pi)?.count;
            emit(&output, &io::write_numbering(&pi, Some(value)))?;
            if output.is_some() {
                println!("{value}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("vpath: {e}");
            ExitCode::from(2)
        }
    }
}
