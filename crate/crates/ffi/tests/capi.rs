use std::ffi::{CStr, CString};
use std::ptr;

use vpath_ffi::*;

fn spec(class: VpClass) -> VpClassSpec {
    VpClassSpec {
        family: class,
        n: 0,
        p: 0,
        q: 0,
        rows: 0,
        cols: 0,
        seed: 0,
        named: VpNamedGraph::Octahedral,
    }
}

fn generated(s: VpClassSpec) -> *mut VpGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { vp_graph_generate(&s, &mut g) }, VpStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(vp_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn edges_and_counting() {
    let edges = [1usize, 2, 2, 3, 3, 4, 1, 4];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            vp_graph_from_edges(4, edges.as_ptr(), 4, &mut g),
            VpStatus::Ok
        );
        assert_eq!((vp_graph_order(g), vp_graph_size(g)), (4, 4));
        let mut c = 0;
        assert_eq!(
            vp_count_validity(g, [1usize, 2, 3, 4].as_ptr(), 4, &mut c),
            VpStatus::Ok
        );
        assert_eq!(c, 1);
        assert_eq!(vp_count_two_paths(g, &mut c), VpStatus::Ok);
        assert_eq!(c, 4);
        assert_eq!(vp_triangle_count(g, &mut c), VpStatus::Ok);
        assert_eq!(c, 0);
        vp_graph_free(g);
    }
}

#[test]
fn bad_inputs_map_to_status_codes() {
    let mut g = ptr::null_mut();
    unsafe {
        let loops = [1usize, 1];
        assert_eq!(
            vp_graph_from_edges(2, loops.as_ptr(), 1, &mut g),
            VpStatus::InvalidArgument
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            vp_graph_from_edges(2, ptr::null(), 1, &mut g),
            VpStatus::NullPointer
        );

        let text = CString::new("3 2\n1 2\n2 2\n").unwrap();
        assert_eq!(vp_graph_parse(text.as_ptr(), &mut g), VpStatus::ParseError);
        assert!(last_error().contains("line 3"));

        let p3 = generated(VpClassSpec {
            n: 3,
            ..spec(VpClass::Path)
        });
        let mut c = 0;
        let dup = [1usize, 1, 3];
        assert_eq!(
            vp_count_validity(p3, dup.as_ptr(), 3, &mut c),
            VpStatus::InvalidNumbering
        );
        assert_eq!(
            vp_count_validity(p3, dup.as_ptr(), 2, &mut c),
            VpStatus::InvalidNumbering
        );
        assert_eq!(
            vp_count_validity(ptr::null(), dup.as_ptr(), 3, &mut c),
            VpStatus::NullPointer
        );
        assert_eq!(
            vp_graph_generate(
                &VpClassSpec {
                    n: 3,
                    ..spec(VpClass::Wheel)
                },
                &mut g
            ),
            VpStatus::InvalidArgument
        );
        vp_graph_free(p3);
        vp_graph_free(ptr::null_mut());
    }
}

#[test]
fn text_round_trip() {
    let g = generated(VpClassSpec {
        rows: 2,
        cols: 3,
        ..spec(VpClass::Grid)
    });
    unsafe {
        let mut text = ptr::null_mut();
        assert_eq!(vp_graph_to_text(g, &mut text), VpStatus::Ok);
        assert!(CStr::from_ptr(text).to_str().unwrap().starts_with("6 7\n"));
        let mut back = ptr::null_mut();
        assert_eq!(vp_graph_parse(text, &mut back), VpStatus::Ok);
        assert_eq!(vp_graph_size(back), 7);
        vp_string_free(text);
        vp_graph_free(back);
        vp_graph_free(g);
    }
}

#[test]
fn solve_and_witness() {
    let g = generated(VpClassSpec {
        rows: 4,
        cols: 4,
        ..spec(VpClass::Grid)
    });
    unsafe {
        for (goal, method, value) in [
            (VpObjective::Min, VpMethod::Bnb, 9),
            (VpObjective::Max, VpMethod::Bnb, 26),
        ] {
            let mut r = ptr::null_mut();
            assert_eq!(vp_solve(g, goal, method, ptr::null(), &mut r), VpStatus::Ok);
            assert_eq!(vp_result_value(r), value);
            assert!(vp_result_proven(r));
            assert!(vp_result_nodes(r) > 0);

            let mut len = 0;
            let mut small = [0usize; 4];
            assert_eq!(
                vp_result_witness(r, small.as_mut_ptr(), small.len(), &mut len),
                VpStatus::BufferTooSmall
            );
            assert_eq!(len, 16);
            let mut w = vec![0usize; len];
            assert_eq!(
                vp_result_witness(r, w.as_mut_ptr(), w.len(), &mut len),
                VpStatus::Ok
            );
            let mut c = 0;
            assert_eq!(
                vp_count_validity(g, w.as_ptr(), w.len(), &mut c),
                VpStatus::Ok
            );
            assert_eq!(c, value);
            vp_result_free(r);
        }

        let mut r = ptr::null_mut();
        assert_eq!(
            vp_solve(g, VpObjective::Max, VpMethod::Brute, ptr::null(), &mut r),
            VpStatus::LimitExceeded
        );
        let opts = vp_solve_options_default();
        assert_eq!(
            vp_solve(g, VpObjective::Max, VpMethod::Local, &opts, &mut r),
            VpStatus::Ok
        );
        assert!(!vp_result_proven(r) && vp_result_value(r) <= 26);
        vp_result_free(r);
        vp_graph_free(g);
    }
}

#[test]
fn decide_answers() {
    let c4 = generated(VpClassSpec {
        n: 4,
        ..spec(VpClass::Cycle)
    });
    let p5 = generated(VpClassSpec {
        n: 5,
        ..spec(VpClass::Path)
    });
    let mut d = VpDecision::Unknown;
    unsafe {
        let st = vp_decide(
            c4,
            0,
            VpDirection::AtMost,
            ptr::null(),
            &mut d,
            ptr::null_mut(),
            0,
        );
        assert_eq!((st, d), (VpStatus::Ok, VpDecision::No));

        let mut w = [0usize; 5];
        let st = vp_decide(
            p5,
            0,
            VpDirection::AtMost,
            ptr::null(),
            &mut d,
            w.as_mut_ptr(),
            5,
        );
        assert_eq!((st, d), (VpStatus::Ok, VpDecision::Yes));
        let mut c = 1;
        assert_eq!(vp_count_validity(p5, w.as_ptr(), 5, &mut c), VpStatus::Ok);
        assert_eq!(c, 0);
        vp_graph_free(c4);
        vp_graph_free(p5);
    }

    let grid = generated(VpClassSpec {
        rows: 5,
        cols: 5,
        ..spec(VpClass::Grid)
    });
    let opts = VpSolveOptions {
        node_limit: 100,
        ..vp_solve_options_default()
    };
    unsafe {
        let st = vp_decide(
            grid,
            49,
            VpDirection::AtLeast,
            &opts,
            &mut d,
            ptr::null_mut(),
            0,
        );
        assert_eq!((st, d), (VpStatus::Ok, VpDecision::Unknown));
        vp_graph_free(grid);
    }
}

#[test]
fn construct_and_formula() {
    let wheel = VpClassSpec {
        n: 6,
        ..spec(VpClass::Wheel)
    };
    let mut buf = [0usize; 6];
    let (mut len, mut value) = (0, 0);
    unsafe {
        let st = vp_construct(
            &wheel,
            VpObjective::Min,
            buf.as_mut_ptr(),
            6,
            &mut len,
            &mut value,
        );
        assert_eq!((st, len, value), (VpStatus::Ok, 6, 6));
        let g = generated(wheel);
        let mut c = 0;
        assert_eq!(vp_count_validity(g, buf.as_ptr(), 6, &mut c), VpStatus::Ok);
        assert_eq!(c, 6);
        vp_graph_free(g);

        let mut f = VpFormula {
            kind: VpFormulaKind::Exact,
            value: 0,
            alt_low: 0,
            alt_high: 0,
        };
        assert_eq!(
            vp_formula_value(&wheel, VpObjective::Min, &mut f),
            VpStatus::Ok
        );
        assert_eq!((f.kind, f.value), (VpFormulaKind::Exact, 6));
        assert_eq!(
            vp_formula_value(&wheel, VpObjective::Max, &mut f),
            VpStatus::Ok
        );
        assert_eq!(f.kind, VpFormulaKind::Disputed);
        let random = VpClassSpec {
            n: 9,
            seed: 1,
            ..spec(VpClass::ApollonianRandom)
        };
        assert_eq!(
            vp_formula_value(&random, VpObjective::Max, &mut f),
            VpStatus::Ok
        );
        assert_eq!((f.kind, f.value), (VpFormulaKind::UpperBound, 52));

        let named = spec(VpClass::Named);
        assert_eq!(
            vp_formula_value(&named, VpObjective::Min, &mut f),
            VpStatus::Unsupported
        );
        assert_eq!(
            vp_construct(
                &named,
                VpObjective::Min,
                buf.as_mut_ptr(),
                6,
                &mut len,
                &mut value
            ),
            VpStatus::Unsupported
        );
    }
}

#[test]
fn version_is_a_string() {
    let v = unsafe { CStr::from_ptr(vp_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
