use proptest::prelude::*;

use vpath::heuristics::swap_delta;
use vpath::io::{parse_graph, parse_numbering, write_graph, write_numbering};
use vpath::{
    count_two_paths, count_validity, decide, solve_bnb, solve_brute, triangle_count,
    validity_of_components, Decision, DecisionQuery, Direction, Graph, Numbering, Objective,
    SolverConfig,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn numbering(n: usize) -> impl Strategy<Value = Numbering> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Numbering::new(v).unwrap())
}

fn with_numbering(max_n: usize) -> impl Strategy<Value = (Graph, Numbering)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), numbering(n))
    })
}

fn count(g: &Graph, pi: &Numbering) -> u64 {
    count_validity(g, pi).unwrap().count
}

/// Ranks of `pi` restricted to `part`, i.e. the induced numbering of `1..=part.len()`.
fn restrict(pi: &Numbering, part: std::ops::Range<usize>) -> Numbering {
    let mut vs: Vec<usize> = part.clone().collect();
    vs.sort_by_key(|&v| pi.number(v));
    let mut a = vec![0; vs.len()];
    for (rank, v) in vs.into_iter().enumerate() {
        a[v - part.start] = rank + 1;
    }
    Numbering::new(a).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn validity_is_between_triangles_and_two_paths((g, pi) in with_numbering(12)) {
        let c = count(&g, &pi);
        prop_assert!(c <= count_two_paths(&g));
        // Each triangle's lowest-numbered corner is a valid middle.
        prop_assert!(c >= triangle_count(&g));
    }

    #[test]
    fn disjoint_unions_add(
        (a, b, pi) in (graph(7), graph(7)).prop_flat_map(|(a, b)| {
            let n = a.n() + b.n();
            (Just(a), Just(b), numbering(n))
        })
    ) {
        let u = a.disjoint_union(&b);
        let total = count(&u, &pi);
        let left = count(&a, &restrict(&pi, 1..a.n() + 1));
        let right = count(&b, &restrict(&pi, a.n() + 1..u.n() + 1));
        prop_assert_eq!(total, left + right);
        let per_component: u64 = validity_of_components(&u, &pi).unwrap().iter().map(|c| c.1).sum();
        prop_assert_eq!(per_component, total);
    }

    #[test]
    fn relabelling_preserves_validity(
        (g, pi, perm) in with_numbering(10).prop_flat_map(|(g, pi)| {
            let n = g.n();
            (Just(g), Just(pi), numbering(n))
        })
    ) {
        let p = perm.as_slice();
        prop_assert_eq!(count(&g.relabel(p).unwrap(), &pi.relabel(p).unwrap()), count(&g, &pi));
    }

    #[test]
    fn swap_delta_equals_recount((g, mut pi) in with_numbering(10), a in 1usize..=10, b in 1usize..=10) {
        let (a, b) = ((a - 1) % g.n() + 1, (b - 1) % g.n() + 1);
        let before = count(&g, &pi) as i64;
        let d = swap_delta(&g, &mut pi, a, b);
        pi.swap(a, b);
        prop_assert_eq!(count(&g, &pi) as i64 - before, d);
    }

    #[test]
    fn graph_round_trip(g in graph(15)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn numbering_round_trip(pi in (1usize..40).prop_flat_map(numbering), v in proptest::option::of(0u64..100)) {
        let n = pi.len();
        prop_assert_eq!(parse_numbering(&write_numbering(&pi, v), Some(n)).unwrap(), pi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn brute_and_bnb_agree(g in graph(8)) {
        let cfg = SolverConfig::default();
        let mut values = Vec::new();
        for obj in [Objective::Min, Objective::Max] {
            let brute = solve_brute(&g, obj, &cfg).unwrap();
            let bnb = solve_bnb(&g, obj, &cfg).unwrap();
            prop_assert!(brute.stats.proven && bnb.stats.proven);
            prop_assert_eq!(brute.value, bnb.value);
            prop_assert_eq!(&brute.witness, &bnb.witness);
            // The incremental cost the solver tracked equals a full recount.
            prop_assert_eq!(count(&g, &brute.witness), brute.value);
            prop_assert_eq!(count(&g, &bnb.witness), bnb.value);
            values.push(brute.value);
        }
        prop_assert!(values[0] <= values[1]);
        prop_assert!(values[1] <= count_two_paths(&g));
    }

    #[test]
    fn parallel_search_is_deterministic(g in graph(8)) {
        let one = SolverConfig::default();
        let many = SolverConfig { threads: 3, ..SolverConfig::default() };
        for obj in [Objective::Min, Objective::Max] {
            let a = solve_bnb(&g, obj, &one).unwrap();
            let b = solve_bnb(&g, obj, &many).unwrap();
            prop_assert_eq!(a.value, b.value);
            prop_assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn decisions_match_optima(g in graph(7), k in 0u64..12) {
        let cfg = SolverConfig::default();
        let min = solve_brute(&g, Objective::Min, &cfg).unwrap().value;
        let max = solve_brute(&g, Objective::Max, &cfg).unwrap().value;
        for (direction, expect) in [(Direction::AtMost, min <= k), (Direction::AtLeast, max >= k)] {
            let got = decide(&DecisionQuery { graph: &g, k, direction }, &cfg).unwrap();
            match got {
                Decision::Yes(w) => {
                    prop_assert!(expect);
                    let c = count(&g, &w);
                    let meets = if direction == Direction::AtMost { c <= k } else { c >= k };
                    prop_assert!(meets);
                }
                Decision::No => prop_assert!(!expect),
                Decision::Unknown => prop_assert!(false, "budget exhausted on a small graph"),
            }
        }
    }
}
