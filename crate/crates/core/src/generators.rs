//! Instances of the graph classes: paths, cycles, stars, random trees, wheels,
//! complete and complete bipartite graphs, grids, Apollonian triangulations
//! built by face dimpling, and a handful of fixed polyhedral skeletons.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Fixed small graphs with hand-transcribed edge lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedGraph {
    Octahedral,
    Johnson12,
    Johnson13,
    Hexahedral5,
    Heptahedral15,
    Heptahedral29,
    Heptahedral34,
    TwoApollonian,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 8] = [
        NamedGraph::Octahedral,
        NamedGraph::Johnson12,
        NamedGraph::Johnson13,
        NamedGraph::Hexahedral5,
        NamedGraph::Heptahedral15,
        NamedGraph::Heptahedral29,
        NamedGraph::Heptahedral34,
        NamedGraph::TwoApollonian,
    ];

    pub fn id(self) -> &'static str {
        match self {
            NamedGraph::Octahedral => "octahedral",
            NamedGraph::Johnson12 => "johnson12",
            NamedGraph::Johnson13 => "johnson13",
            NamedGraph::Hexahedral5 => "hexahedral5",
            NamedGraph::Heptahedral15 => "heptahedral15",
            NamedGraph::Heptahedral29 => "heptahedral29",
            NamedGraph::Heptahedral34 => "heptahedral34",
            NamedGraph::TwoApollonian => "two_apollonian",
        }
    }

    /// Whether the graph can be grown from `K_4` by dimpling.
    pub fn is_apollonian(self) -> bool {
        !matches!(
            self,
            NamedGraph::Octahedral | NamedGraph::Johnson13 | NamedGraph::Heptahedral34
        )
    }

    // Vertices are numbered a=1, b=2, ... following the order of the
    // usual drawing: a, b, c are the outer triangle (bottom-left,
    // bottom-right, top), the rest are interior. A straight chord drawn
    // through collinear interior vertices is split into its segments.
    fn edges(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            // Octahedron K_{2,2,2}; outer a b c, inner d (right), e (bottom), f (left).
            NamedGraph::Octahedral => (
                6,
                &[
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (1, 6),
                    (3, 6),
                    (3, 4),
                    (2, 4),
                    (2, 5),
                    (4, 5),
                    (4, 6),
                    (5, 6),
                    (1, 5),
                ],
            ),
            // Triangular bipyramid; chord c-e passes through d.
            NamedGraph::Johnson12 => (
                5,
                &[
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (1, 4),
                    (2, 4),
                    (1, 5),
                    (2, 5),
                    (3, 4),
                    (4, 5),
                ],
            ),
            // Pentagonal bipyramid; d right, e bottom, f left, g centre.
            NamedGraph::Johnson13 => (
                7,
                &[
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (3, 6),
                    (1, 6),
                    (1, 5),
                    (2, 5),
                    (2, 4),
                    (3, 4),
                    (3, 7),
                    (5, 7),
                    (5, 6),
                    (6, 7),
                    (4, 7),
                    (4, 5),
                ],
            ),
            // Base a-b, spine c-d-e-f.
            NamedGraph::Hexahedral5 => (
                6,
                &[
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (1, 4),
                    (2, 4),
                    (1, 5),
                    (2, 5),
                    (1, 6),
                    (2, 6),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                ],
            ),
            // Base a-b, spine c-d-e-f-g.
            NamedGraph::Heptahedral15 => (
                7,
                &[
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (1, 4),
                    (2, 4),
                    (1, 5),
                    (2, 5),
                    (1, 6),
                    (2, 6),
                    (1, 7),
                    (2, 7),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                ],
            ),
            // Hexahedral 5 plus g joined to b, e, f.
            NamedGraph::Heptahedral29 => (
                7,
                &[
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (1, 4),
                    (2, 4),
                    (1, 5),
                    (2, 5),
                    (1, 6),
                    (2, 6),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (5, 7),
                    (2, 7),
                ],
            ),
            // Octahedron (as above) plus g joined to c, d, f.
            NamedGraph::Heptahedral34 => (
                7,
                &[
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (3, 6),
                    (1, 6),
                    (1, 5),
                    (2, 5),
                    (2, 4),
                    (4, 6),
                    (5, 6),
                    (4, 5),
                    (3, 4),
                    (3, 7),
                    (6, 7),
                    (4, 7),
                ],
            ),
            // Hexahedral 5 plus g joined to b, d, e.
            NamedGraph::TwoApollonian => (
                7,
                &[
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (1, 4),
                    (2, 4),
                    (1, 5),
                    (2, 5),
                    (1, 6),
                    (2, 6),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (4, 7),
                    (5, 7),
                    (2, 7),
                ],
            ),
        }
    }

    /// Dimpling history for the Apollonian members, `None` otherwise.
    pub fn trace(self) -> Option<DimpleTrace> {
        let (spine, extra) = match self {
            NamedGraph::Johnson12 => (5, None),
            NamedGraph::Hexahedral5 => (6, None),
            NamedGraph::Heptahedral15 => (7, None),
            NamedGraph::Heptahedral29 => (6, Some([2, 5, 6])),
            NamedGraph::TwoApollonian => (6, Some([2, 4, 5])),
            _ => return None,
        };
        let mut trace = spine_trace(spine);
        if let Some(face) = extra {
            trace.steps.push(DimpleStep { face, vertex: 7 });
        }
        Some(trace)
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.id() == key)
            .ok_or_else(|| Error::InvalidParams(format!("unknown named graph `{s}`")))
    }
}

/// A graph class together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum GraphClassSpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_{1, n-1}` with the hub as vertex 1.
    Star {
        n: usize,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Hub is vertex 1; the rim `2..=n` is a cycle in id order.
    Wheel {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Part of size `p` is `1..=p`, part of size `q` follows.
    CompleteBipartite {
        p: usize,
        q: usize,
    },
    /// Cell `(i, j)` is vertex `(i - 1) * cols + j`.
    Grid {
        rows: usize,
        cols: usize,
    },
    /// Base edge 1-2, spine path `3..=n`, both base vertices joined to the spine.
    ApollonianSpine {
        n: usize,
    },
    ApollonianRandom {
        n: usize,
        seed: u64,
    },
    Named {
        id: NamedGraph,
    },
}

impl GraphClassSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        match *self {
            GraphClassSpec::Path { n } | GraphClassSpec::RandomTree { n, .. } if n < 1 => {
                bad(format!("{self} needs n >= 1"))
            }
            GraphClassSpec::Complete { n } if n < 1 => bad(format!("{self} needs n >= 1")),
            GraphClassSpec::Cycle { n } if n < 3 => bad(format!("{self} needs n >= 3")),
            GraphClassSpec::Star { n } if n < 2 => bad(format!("{self} needs n >= 2")),
            GraphClassSpec::Wheel { n } if n < 4 => bad(format!("{self} needs n >= 4")),
            GraphClassSpec::CompleteBipartite { p, q } if p < 1 || p > q => {
                bad(format!("{self} needs 1 <= p <= q"))
            }
            GraphClassSpec::Grid { rows, cols } if rows < 1 || cols < 1 => {
                bad(format!("{self} needs rows, cols >= 1"))
            }
            GraphClassSpec::ApollonianSpine { n } | GraphClassSpec::ApollonianRandom { n, .. }
                if n < 3 =>
            {
                bad(format!("{self} needs n >= 3"))
            }
            _ => Ok(()),
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            GraphClassSpec::Path { n }
            | GraphClassSpec::Cycle { n }
            | GraphClassSpec::Star { n }
            | GraphClassSpec::RandomTree { n, .. }
            | GraphClassSpec::Wheel { n }
            | GraphClassSpec::Complete { n }
            | GraphClassSpec::ApollonianSpine { n }
            | GraphClassSpec::ApollonianRandom { n, .. } => n,
            GraphClassSpec::CompleteBipartite { p, q } => p + q,
            GraphClassSpec::Grid { rows, cols } => rows * cols,
            GraphClassSpec::Named { id } => id.edges().0,
        }
    }

    /// Known vertex-transitive instances, used as a symmetry hint by the solvers.
    pub fn is_vertex_transitive(&self) -> bool {
        match *self {
            GraphClassSpec::Cycle { .. } | GraphClassSpec::Complete { .. } => true,
            GraphClassSpec::CompleteBipartite { p, q } => p == q,
            GraphClassSpec::Wheel { n } => n == 4,
            GraphClassSpec::Named { id } => id == NamedGraph::Octahedral,
            _ => false,
        }
    }

    /// Short tag used on the command line and in reports.
    pub fn class_name(&self) -> &'static str {
        match self {
            GraphClassSpec::Path { .. } => "path",
            GraphClassSpec::Cycle { .. } => "cycle",
            GraphClassSpec::Star { .. } => "star",
            GraphClassSpec::RandomTree { .. } => "random-tree",
            GraphClassSpec::Wheel { .. } => "wheel",
            GraphClassSpec::Complete { .. } => "complete",
            GraphClassSpec::CompleteBipartite { .. } => "complete-bipartite",
            GraphClassSpec::Grid { .. } => "grid",
            GraphClassSpec::ApollonianSpine { .. } => "apollonian-spine",
            GraphClassSpec::ApollonianRandom { .. } => "apollonian-random",
            GraphClassSpec::Named { .. } => "named",
        }
    }
}

/// Instances of one class over a size range, as used by the report tables.
///
/// `sizes` is the vertex count for every class except `grid`, where it is the
/// side of a square grid. Complete bipartite graphs enumerate every
/// `1 <= p <= q` with `p + q` in range; named graphs are filtered by order.
/// Sizes below a class minimum are skipped.
pub fn family(
    class: &str,
    sizes: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Result<Vec<GraphClassSpec>> {
    let specs: Vec<GraphClassSpec> = match class {
        "complete-bipartite" | "bipartite" => sizes
            .flat_map(|total| {
                (1..=total / 2).map(move |p| GraphClassSpec::CompleteBipartite { p, q: total - p })
            })
            .collect(),
        "grid" => sizes
            .map(|s| GraphClassSpec::Grid { rows: s, cols: s })
            .collect(),
        "named" => NamedGraph::ALL
            .into_iter()
            .map(|id| GraphClassSpec::Named { id })
            .filter(|s| sizes.contains(&s.order()))
            .collect(),
        _ => {
            let make: fn(usize, u64) -> GraphClassSpec = match class {
                "path" => |n, _| GraphClassSpec::Path { n },
                "cycle" => |n, _| GraphClassSpec::Cycle { n },
                "star" => |n, _| GraphClassSpec::Star { n },
                "random-tree" | "tree" => |n, seed| GraphClassSpec::RandomTree { n, seed },
                "wheel" => |n, _| GraphClassSpec::Wheel { n },
                "complete" => |n, _| GraphClassSpec::Complete { n },
                "apollonian-spine" => |n, _| GraphClassSpec::ApollonianSpine { n },
                "apollonian-random" => |n, seed| GraphClassSpec::ApollonianRandom { n, seed },
                other => return Err(Error::InvalidParams(format!("unknown class `{other}`"))),
            };
            sizes.map(|n| make(n, seed)).collect()
        }
    };
    Ok(specs.into_iter().filter(|s| s.validate().is_ok()).collect())
}

impl fmt::Display for GraphClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.class_name();
        match *self {
            GraphClassSpec::Path { n }
            | GraphClassSpec::Cycle { n }
            | GraphClassSpec::Star { n }
            | GraphClassSpec::Wheel { n }
            | GraphClassSpec::Complete { n }
            | GraphClassSpec::ApollonianSpine { n } => write!(f, "{name}(n={n})"),
            GraphClassSpec::RandomTree { n, seed }
            | GraphClassSpec::ApollonianRandom { n, seed } => {
                write!(f, "{name}(n={n},seed={seed})")
            }
            GraphClassSpec::CompleteBipartite { p, q } => write!(f, "{name}(p={p},q={q})"),
            GraphClassSpec::Grid { rows, cols } => write!(f, "{name}({rows}x{cols})"),
            GraphClassSpec::Named { id } => write!(f, "{name}({id})"),
        }
    }
}

/// Generates the canonical instance of `spec`.
pub fn generate(spec: &GraphClassSpec) -> Result<Graph> {
    generate_with_trace(spec).map(|(g, _)| g)
}

/// Like [`generate`], also returning the dimpling history for Apollonian
/// instances on at least four vertices.
pub fn generate_with_trace(spec: &GraphClassSpec) -> Result<(Graph, Option<DimpleTrace>)> {
    spec.validate()?;
    let g = match *spec {
        GraphClassSpec::Path { n } => Graph::from_edges(n, (1..n).map(|v| (v, v + 1)))?,
        GraphClassSpec::Cycle { n } => {
            Graph::from_edges(n, (1..n).map(|v| (v, v + 1)).chain([(n, 1)]))?
        }
        GraphClassSpec::Star { n } => Graph::from_edges(n, (2..=n).map(|v| (1, v)))?,
        GraphClassSpec::RandomTree { n, seed } => random_tree(n, seed)?,
        GraphClassSpec::Wheel { n } => Graph::from_edges(
            n,
            (2..=n)
                .map(|v| (1, v))
                .chain((2..n).map(|v| (v, v + 1)))
                .chain([(n, 2)]),
        )?,
        GraphClassSpec::Complete { n } => complete(n),
        GraphClassSpec::CompleteBipartite { p, q } => Graph::from_edges(
            p + q,
            (1..=p).flat_map(|u| (p + 1..=p + q).map(move |v| (u, v))),
        )?,
        GraphClassSpec::Grid { rows, cols } => grid(rows, cols)?,
        GraphClassSpec::ApollonianSpine { n } | GraphClassSpec::ApollonianRandom { n, .. }
            if n == 3 =>
        {
            complete(3)
        }
        GraphClassSpec::ApollonianSpine { n } => {
            let (g, trace) = generate_apollonian_spine(n)?;
            return Ok((g, Some(trace)));
        }
        GraphClassSpec::ApollonianRandom { n, seed } => {
            let (g, trace) = generate_apollonian_random(n, seed)?;
            return Ok((g, Some(trace)));
        }
        GraphClassSpec::Named { id } => return Ok((named_graph(id), id.trace())),
    };
    Ok((g, None))
}

fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
        .expect("complete graph edges are simple")
}

fn grid(rows: usize, cols: usize) -> Result<Graph> {
    let id = |i: usize, j: usize| (i - 1) * cols + j;
    let mut edges = Vec::new();
    for i in 1..=rows {
        for j in 1..=cols {
            if j < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges)
}

/// Uniform labelled tree from a seeded Prüfer sequence.
fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n <= 2 {
        return Graph::from_edges(n, (n == 2).then_some((1, 2)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    let mut remaining = vec![1usize; n + 1];
    for &c in &code {
        remaining[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| remaining[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves
            .pop_first()
            .expect("a Prüfer decode always has a leaf");
        edges.push((leaf, c));
        remaining[c] -= 1;
        if remaining[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges)
}

pub fn named_graph(id: NamedGraph) -> Graph {
    let (n, edges) = id.edges();
    Graph::from_edges(n, edges.iter().copied()).expect("named edge lists are simple")
}

/// Inserts vertex `n + 1` into the triangle `face`, joining it to all three corners.
pub fn dimple(g: &Graph, face: [usize; 3]) -> Result<Graph> {
    let [a, b, c] = face;
    let n = g.n();
    for v in face {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return Err(Error::NotATriangle(a, b, c));
    }
    let new = n + 1;
    Graph::from_edges(new, g.edges().chain([(a, new), (b, new), (c, new)]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimpleStep {
    /// Sorted corner ids of the face that was dimpled.
    pub face: [usize; 3],
    /// Id of the inserted vertex.
    pub vertex: usize,
}

/// How an Apollonian graph was grown: `K_4` on `1..=4` followed by dimples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimpleTrace {
    pub steps: Vec<DimpleStep>,
}

const K4_FACES: [[usize; 3]; 4] = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]];

impl DimpleTrace {
    pub fn base() -> Graph {
        complete(4)
    }

    pub fn order(&self) -> usize {
        4 + self.steps.len()
    }

    /// Rebuilds the graph, checking that each step dimples a face that is
    /// still a face (not a triangle already split by an earlier step).
    pub fn replay(&self) -> Result<Graph> {
        let mut g = Self::base();
        let mut faces = FaceList::k4();
        for step in &self.steps {
            if step.vertex != g.n() + 1 {
                return Err(Error::InvalidParams(format!(
                    "dimple step inserts vertex {} but the next id is {}",
                    step.vertex,
                    g.n() + 1
                )));
            }
            let idx = faces.position(step.face).ok_or({
                let [a, b, c] = step.face;
                Error::NotAFace(a, b, c)
            })?;
            g = dimple(&g, step.face)?;
            faces.split(idx, step.vertex);
        }
        Ok(g)
    }

    /// Current faces after all steps, in the order they are tracked.
    pub fn faces(&self) -> Vec<[usize; 3]> {
        let mut faces = FaceList::k4();
        for step in &self.steps {
            if let Some(idx) = faces.position(step.face) {
                faces.split(idx, step.vertex);
            }
        }
        faces.0
    }

    /// Inserted vertices, most recent first.
    pub fn removal_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps.iter().rev().map(|s| s.vertex)
    }
}

struct FaceList(Vec<[usize; 3]>);

impl FaceList {
    fn k4() -> Self {
        Self(K4_FACES.to_vec())
    }

    fn position(&self, face: [usize; 3]) -> Option<usize> {
        let mut key = face;
        key.sort_unstable();
        self.0.iter().position(|f| *f == key)
    }

    // Replace face `idx` by its three children; `v` is larger than every corner.
    fn split(&mut self, idx: usize, v: usize) {
        let [a, b, c] = self.0[idx];
        self.0[idx] = [a, b, v];
        self.0.push([a, c, v]);
        self.0.push([b, c, v]);
    }
}

fn spine_trace(n: usize) -> DimpleTrace {
    DimpleTrace {
        steps: (5..=n)
            .map(|v| DimpleStep {
                face: [1, 2, v - 1],
                vertex: v,
            })
            .collect(),
    }
}

/// The Apollonian graph whose base edge 1-2 is joined to every vertex of the
/// spine path `3, 4, ..., n`. Grown by always dimpling the newest face that
/// contains the base edge.
pub fn generate_apollonian_spine(n: usize) -> Result<(Graph, DimpleTrace)> {
    if n < 4 {
        return Err(Error::TooSmall(
            "Apollonian generation starts from K_4 (n >= 4)",
        ));
    }
    let trace = spine_trace(n);
    let g = trace.replay()?;
    Ok((g, trace))
}

/// An Apollonian graph grown by `n - 4` dimples into faces drawn uniformly
/// with a seeded generator.
pub fn generate_apollonian_random(n: usize, seed: u64) -> Result<(Graph, DimpleTrace)> {
    if n < 4 {
        return Err(Error::TooSmall(
            "Apollonian generation starts from K_4 (n >= 4)",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces = FaceList::k4();
    let mut steps = Vec::with_capacity(n - 4);
    for v in 5..=n {
        let idx = rng.gen_range(0..faces.0.len());
        steps.push(DimpleStep {
            face: faces.0[idx],
            vertex: v,
        });
        faces.split(idx, v);
    }
    let trace = DimpleTrace { steps };
    let g = trace.replay()?;
    Ok((g, trace))
}
