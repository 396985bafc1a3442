//! C ABI for `vpath`.
//!
//! Graphs and solver results are opaque handles that must be released with
//! their `*_free` function. Every call returns a [`VpStatus`]; on failure a
//! message is available from [`vp_last_error_message`] on the same thread.
//! Numberings cross the boundary as `size_t` arrays where element `v - 1`
//! holds the number of vertex `v`. No entry point lets a panic unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use vpath::{
    analysis, count_two_paths, count_validity, decide, formula_value, generate, greedy_start,
    local_search, solve_bnb, solve_brute, Decision, DecisionQuery, Direction, Error, FormulaValue,
    Graph, GraphClassSpec, LocalSearchConfig, NamedGraph, Numbering, Objective, SolveResult,
    SolverConfig,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidNumbering = 3,
    ParseError = 4,
    LimitExceeded = 5,
    Unsupported = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpObjective {
    Min = 0,
    Max = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpMethod {
    Brute = 0,
    Bnb = 1,
    Local = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpDirection {
    AtMost = 0,
    AtLeast = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpDecision {
    No = 0,
    Yes = 1,
    Unknown = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpClass {
    Path = 0,
    Cycle = 1,
    Star = 2,
    RandomTree = 3,
    Wheel = 4,
    Complete = 5,
    CompleteBipartite = 6,
    Grid = 7,
    ApollonianSpine = 8,
    ApollonianRandom = 9,
    Named = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpNamedGraph {
    Octahedral = 0,
    Johnson12 = 1,
    Johnson13 = 2,
    Hexahedral5 = 3,
    Heptahedral15 = 4,
    Heptahedral29 = 5,
    Heptahedral34 = 6,
    TwoApollonian = 7,
}

/// Class and parameters. Only the fields used by `family` are read:
/// `n` for most classes, `p`/`q` for complete bipartite graphs, `rows`/`cols`
/// for grids, `seed` for random classes and `named` for fixed graphs.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct VpClassSpec {
    pub family: VpClass,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub rows: usize,
    pub cols: usize,
    pub seed: u64,
    pub named: VpNamedGraph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct VpSolveOptions {
    /// Branch-and-bound node budget; 0 means unlimited.
    pub node_limit: u64,
    /// Wall-clock limit in seconds; 0 or negative means none.
    pub time_limit_secs: f64,
    /// Worker threads for branch-and-bound.
    pub threads: usize,
    /// Fix vertex 1 first. Only sound for vertex-transitive graphs.
    pub symmetric_first: bool,
    /// Largest order accepted by the brute-force method.
    pub brute_cap: usize,
    /// Local search scan-order seed.
    pub seed: u64,
    /// Local search swap cap.
    pub max_iters: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpFormulaKind {
    Exact = 0,
    UpperBound = 1,
    /// `value` is the stated formula; `alt_low..=alt_high` the conflicting one.
    Disputed = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VpFormula {
    pub kind: VpFormulaKind,
    pub value: u64,
    pub alt_low: u64,
    pub alt_high: u64,
}

/// Opaque graph handle.
pub struct VpGraph {
    inner: Graph,
}

/// Opaque solver result handle.
pub struct VpSolveResult {
    inner: SolveResult,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(VpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NumberingLength { .. } | Error::NotBijective { .. } => {
                VpStatus::InvalidNumbering
            }
            Error::Parse { .. } => VpStatus::ParseError,
            Error::CapExceeded { .. } => VpStatus::LimitExceeded,
            Error::NoFormula { .. } | Error::Unsupported(_) => VpStatus::Unsupported,
            _ => VpStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> VpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            VpStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            VpStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(VpStatus::NullPointer, "null pointer argument".into())
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(null)
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(p, len))
}

/// Copies `values` into a caller buffer, reporting the needed length.
unsafe fn fill(
    values: &[usize],
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> Result<(), Failure> {
    if !len.is_null() {
        *len = values.len();
    }
    if cap < values.len() {
        return Err(Failure(
            VpStatus::BufferTooSmall,
            format!("buffer holds {cap} entries, {} needed", values.len()),
        ));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(null());
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(())
}

fn objective(o: VpObjective) -> Objective {
    match o {
        VpObjective::Min => Objective::Min,
        VpObjective::Max => Objective::Max,
    }
}

fn named(id: VpNamedGraph) -> NamedGraph {
    match id {
        VpNamedGraph::Octahedral => NamedGraph::Octahedral,
        VpNamedGraph::Johnson12 => NamedGraph::Johnson12,
        VpNamedGraph::Johnson13 => NamedGraph::Johnson13,
        VpNamedGraph::Hexahedral5 => NamedGraph::Hexahedral5,
        VpNamedGraph::Heptahedral15 => NamedGraph::Heptahedral15,
        VpNamedGraph::Heptahedral29 => NamedGraph::Heptahedral29,
        VpNamedGraph::Heptahedral34 => NamedGraph::Heptahedral34,
        VpNamedGraph::TwoApollonian => NamedGraph::TwoApollonian,
    }
}

fn class_spec(s: &VpClassSpec) -> GraphClassSpec {
    let n = s.n;
    match s.family {
        VpClass::Path => GraphClassSpec::Path { n },
        VpClass::Cycle => GraphClassSpec::Cycle { n },
        VpClass::Star => GraphClassSpec::Star { n },
        VpClass::RandomTree => GraphClassSpec::RandomTree { n, seed: s.seed },
        VpClass::Wheel => GraphClassSpec::Wheel { n },
        VpClass::Complete => GraphClassSpec::Complete { n },
        VpClass::CompleteBipartite => GraphClassSpec::CompleteBipartite { p: s.p, q: s.q },
        VpClass::Grid => GraphClassSpec::Grid {
            rows: s.rows,
            cols: s.cols,
        },
        VpClass::ApollonianSpine => GraphClassSpec::ApollonianSpine { n },
        VpClass::ApollonianRandom => GraphClassSpec::ApollonianRandom { n, seed: s.seed },
        VpClass::Named => GraphClassSpec::Named { id: named(s.named) },
    }
}

fn solver_config(o: &VpSolveOptions) -> SolverConfig {
    SolverConfig {
        brute_cap: o.brute_cap,
        node_limit: (o.node_limit > 0).then_some(o.node_limit),
        time_limit: (o.time_limit_secs > 0.0).then(|| Duration::from_secs_f64(o.time_limit_secs)),
        threads: o.threads.max(1),
        symmetric_first: o.symmetric_first,
    }
}

unsafe fn options(o: *const VpSolveOptions) -> VpSolveOptions {
    o.as_ref()
        .copied()
        .unwrap_or_else(|| vp_solve_options_default())
}

unsafe fn numbering(g: &Graph, values: *const usize, len: usize) -> Result<Numbering, Failure> {
    let values = slice(values, len)?;
    if values.len() != g.n() {
        return Err(Error::NumberingLength {
            expected: g.n(),
            found: values.len(),
        }
        .into());
    }
    Ok(Numbering::new(values.to_vec())?)
}

unsafe fn give_graph(g: Graph, out_graph: *mut *mut VpGraph) -> Result<(), Failure> {
    *out(out_graph)? = Box::into_raw(Box::new(VpGraph { inner: g }));
    Ok(())
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next `vp_` call on the same thread.
#[no_mangle]
pub extern "C" fn vp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn vp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Defaults: 10^8 nodes, no time limit, one thread, brute-force cap 10.
#[no_mangle]
pub extern "C" fn vp_solve_options_default() -> VpSolveOptions {
    let d = SolverConfig::default();
    let l = LocalSearchConfig::default();
    VpSolveOptions {
        node_limit: d.node_limit.unwrap_or(0),
        time_limit_secs: 0.0,
        threads: d.threads,
        symmetric_first: d.symmetric_first,
        brute_cap: d.brute_cap,
        seed: l.seed,
        max_iters: l.max_iters,
    }
}

/// Builds a graph on vertices `1..=n` from `m` pairs stored flat in `edges`
/// (`edges[2i]`, `edges[2i + 1]`).
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or may be null when
/// `m == 0`), and `out_graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vp_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out_graph: *mut *mut VpGraph,
) -> VpStatus {
    guard(|| {
        let flat = slice(edges, m.checked_mul(2).ok_or_else(null)?)?;
        let g = Graph::from_edges(n, flat.chunks_exact(2).map(|e| (e[0], e[1])))?;
        give_graph(g, out_graph)
    })
}

/// Parses the `n m` / `u v` edge-list text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out_graph` writable.
#[no_mangle]
pub unsafe extern "C" fn vp_graph_parse(
    text: *const c_char,
    out_graph: *mut *mut VpGraph,
) -> VpStatus {
    guard(|| {
        let text = CStr::from_ptr(deref(text)?)
            .to_str()
            .map_err(|_| Failure(VpStatus::ParseError, "input is not UTF-8".into()))?;
        give_graph(vpath::io::parse_graph(text)?, out_graph)
    })
}

/// Generates the canonical instance of a class.
///
/// # Safety
/// `spec` must be readable and `out_graph` writable.
#[no_mangle]
pub unsafe extern "C" fn vp_graph_generate(
    spec: *const VpClassSpec,
    out_graph: *mut *mut VpGraph,
) -> VpStatus {
    guard(|| give_graph(generate(&class_spec(deref(spec)?))?, out_graph))
}

/// Serialises a graph to the edge-list format. Free with [`vp_string_free`].
///
/// # Safety
/// `graph` must be a live handle and `out_text` writable.
#[no_mangle]
pub unsafe extern "C" fn vp_graph_to_text(
    graph: *const VpGraph,
    out_text: *mut *mut c_char,
) -> VpStatus {
    guard(|| {
        let text = vpath::io::write_graph(&deref(graph)?.inner);
        *out(out_text)? = CString::new(text).expect("no NUL in output").into_raw();
        Ok(())
    })
}

/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vp_graph_free(graph: *mut VpGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vp_graph_order(graph: *const VpGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vp_graph_size(graph: *const VpGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.m())
}

/// Number of valid 2-paths under `numbering`.
///
/// # Safety
/// `graph` must be live, `numbering` must hold `len` values and `out_count`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn vp_count_validity(
    graph: *const VpGraph,
    numbering_values: *const usize,
    len: usize,
    out_count: *mut u64,
) -> VpStatus {
    guard(|| {
        let g = &deref(graph)?.inner;
        let pi = numbering(g, numbering_values, len)?;
        *out(out_count)? = count_validity(g, &pi)?.count;
        Ok(())
    })
}

/// Total number of 2-paths, the upper limit of any count.
///
/// # Safety
/// `graph` must be live and `out_count` writable.
#[no_mangle]
pub unsafe extern "C" fn vp_count_two_paths(
    graph: *const VpGraph,
    out_count: *mut u64,
) -> VpStatus {
    guard(|| {
        *out(out_count)? = count_two_paths(&deref(graph)?.inner);
        Ok(())
    })
}

/// # Safety
/// `graph` must be live and `out_count` writable.
#[no_mangle]
pub unsafe extern "C" fn vp_triangle_count(graph: *const VpGraph, out_count: *mut u64) -> VpStatus {
    guard(|| {
        *out(out_count)? = analysis::triangle_count(&deref(graph)?.inner);
        Ok(())
    })
}

/// Triangles whose removal disconnects the graph. Needs a connected graph
/// on at least four vertices.
///
/// # Safety
/// `graph` must be live and `out_count` writable.
#[no_mangle]
pub unsafe extern "C" fn vp_separating_triangle_count(
    graph: *const VpGraph,
    out_count: *mut u64,
) -> VpStatus {
    guard(|| {
        *out(out_count)? = analysis::separating_triangle_count(&deref(graph)?.inner)?;
        Ok(())
    })
}

/// Optimises the count. `options` may be null for defaults. The local method
/// starts from the greedy numbering and never reports optimality.
///
/// # Safety
/// `graph` must be live, `options` null or readable, `out_result` writable.
#[no_mangle]
pub unsafe extern "C" fn vp_solve(
    graph: *const VpGraph,
    goal: VpObjective,
    method: VpMethod,
    options_ptr: *const VpSolveOptions,
    out_result: *mut *mut VpSolveResult,
) -> VpStatus {
    guard(|| {
        let g = &deref(graph)?.inner;
        let opts = options(options_ptr);
        let config = solver_config(&opts);
        let obj = objective(goal);
        let r = match method {
            VpMethod::Brute => solve_brute(g, obj, &config)?,
            VpMethod::Bnb => solve_bnb(g, obj, &config)?,
            VpMethod::Local => {
                let cfg = LocalSearchConfig {
                    seed: opts.seed,
                    max_iters: opts.max_iters,
                    first_improvement: false,
                };
                local_search(g, &greedy_start(g, obj), obj, &cfg)?
            }
        };
        *out(out_result)? = Box::into_raw(Box::new(VpSolveResult { inner: r }));
        Ok(())
    })
}

/// # Safety
/// `result` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn vp_result_value(result: *const VpSolveResult) -> u64 {
    result.as_ref().map_or(0, |r| r.inner.value)
}

/// Whether the value is a proven optimum.
///
/// # Safety
/// `result` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn vp_result_proven(result: *const VpSolveResult) -> bool {
    result.as_ref().is_some_and(|r| r.inner.stats.proven)
}

/// # Safety
/// `result` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn vp_result_nodes(result: *const VpSolveResult) -> u64 {
    result.as_ref().map_or(0, |r| r.inner.stats.nodes)
}

/// Copies the witness numbering. `out_len` (if not null) receives the vertex
/// count even when the buffer is too small.
///
/// # Safety
/// `result` must be live, `buf` must hold `cap` values, `out_len` null or writable.
#[no_mangle]
pub unsafe extern "C" fn vp_result_witness(
    result: *const VpSolveResult,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> VpStatus {
    guard(|| fill(deref(result)?.inner.witness.as_slice(), buf, cap, out_len))
}

/// # Safety
/// `result` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vp_result_free(result: *mut VpSolveResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Is there a numbering with at most (or at least) `k` valid paths?
/// On YES the witness is copied to `witness` when it is not null.
///
/// # Safety
/// `graph` must be live, `options` null or readable, `out_decision` writable,
/// and `witness` null or able to hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn vp_decide(
    graph: *const VpGraph,
    k: u64,
    direction: VpDirection,
    options_ptr: *const VpSolveOptions,
    out_decision: *mut VpDecision,
    witness: *mut usize,
    cap: usize,
) -> VpStatus {
    guard(|| {
        let g = &deref(graph)?.inner;
        let direction = match direction {
            VpDirection::AtMost => Direction::AtMost,
            VpDirection::AtLeast => Direction::AtLeast,
        };
        let config = solver_config(&options(options_ptr));
        let query = DecisionQuery {
            graph: g,
            k,
            direction,
        };
        let answer = out(out_decision)?;
        match decide(&query, &config)? {
            Decision::Yes(w) => {
                if !witness.is_null() {
                    fill(w.as_slice(), witness, cap, ptr::null_mut())?;
                }
                *answer = VpDecision::Yes;
            }
            Decision::No => *answer = VpDecision::No,
            Decision::Unknown => *answer = VpDecision::Unknown,
        }
        Ok(())
    })
}

/// Writes the constructed numbering for a class instance and its count.
///
/// # Safety
/// `spec` must be readable, `buf` must hold `cap` values, `out_len` and
/// `out_value` null or writable.
#[no_mangle]
pub unsafe extern "C" fn vp_construct(
    spec: *const VpClassSpec,
    goal: VpObjective,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
    out_value: *mut u64,
) -> VpStatus {
    guard(|| {
        let (g, pi) = vpath::construct(&class_spec(deref(spec)?), objective(goal))?;
        fill(pi.as_slice(), buf, cap, out_len)?;
        if !out_value.is_null() {
            *out_value = count_validity(&g, &pi)?.count;
        }
        Ok(())
    })
}

/// Closed-form optimum for a class instance; `UNSUPPORTED` when none exists.
///
/// # Safety
/// `spec` must be readable and `out_formula` writable.
#[no_mangle]
pub unsafe extern "C" fn vp_formula_value(
    spec: *const VpClassSpec,
    goal: VpObjective,
    out_formula: *mut VpFormula,
) -> VpStatus {
    guard(|| {
        let f = formula_value(&class_spec(deref(spec)?), objective(goal))?;
        *out(out_formula)? = match f {
            FormulaValue::Exact { value } => VpFormula {
                kind: VpFormulaKind::Exact,
                value,
                alt_low: value,
                alt_high: value,
            },
            FormulaValue::UpperBound { value } => VpFormula {
                kind: VpFormulaKind::UpperBound,
                value,
                alt_low: value,
                alt_high: value,
            },
            FormulaValue::Disputed {
                stated,
                alternative,
            } => VpFormula {
                kind: VpFormulaKind::Disputed,
                value: stated.low,
                alt_low: alternative.low,
                alt_high: alternative.high,
            },
        };
        Ok(())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
