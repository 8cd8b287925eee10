mod common;

use std::collections::BTreeSet;

use common::{brute_force_classes, g};
use taxicab5::cli::{write_classes, OutputFormat};
use taxicab5::{
    canonicalize_solution, run_search, solution_orbit, verify_solution, Quadruple, SearchConfig,
};

fn search(bound: u64, include_zero: bool, shards: usize) -> Vec<taxicab5::SolutionClass> {
    run_search(&SearchConfig {
        bound,
        exponent: 5,
        shards,
        include_zero,
    })
    .unwrap()
}

#[test]
fn matches_brute_force_without_zero() {
    for bound in 1..=5 {
        let got: BTreeSet<Quadruple> = search(bound, false, 3)
            .into_iter()
            .map(|c| c.representative)
            .collect();
        assert_eq!(
            got,
            brute_force_classes(bound as i64, false, 5),
            "B = {bound}"
        );
    }
}

#[test]
fn matches_brute_force_with_zero() {
    for bound in 1..=3 {
        let got: BTreeSet<Quadruple> = search(bound, true, 2)
            .into_iter()
            .map(|c| c.representative)
            .collect();
        let want = brute_force_classes(bound as i64, true, 5);
        assert_eq!(got, want, "B = {bound}");
        assert!(got.iter().any(|q| q.entries().iter().any(|z| z.is_zero())));
    }
}

#[test]
fn matches_brute_force_at_other_exponents() {
    for exponent in [1, 2, 3, 4, 7] {
        let got: BTreeSet<Quadruple> = run_search(&SearchConfig {
            bound: 2,
            exponent,
            shards: 2,
            include_zero: false,
        })
        .unwrap()
        .into_iter()
        .map(|c| c.representative)
        .collect();
        assert_eq!(
            got,
            brute_force_classes(2, false, exponent),
            "e = {exponent}"
        );
    }
}

#[test]
fn smallest_box_classes() {
    // The eight nonzero points of the unit box only collide at sum 0.
    let classes = search(1, false, 1);
    let reps: Vec<Quadruple> = classes.iter().map(|c| c.representative.clone()).collect();
    assert_eq!(
        reps,
        vec![
            Quadruple::fifth(g(-1, -1), g(1, 1), g(-1, 0), g(1, 0)),
            Quadruple::fifth(g(-1, -1), g(1, 1), g(-1, 1), g(1, -1)),
            Quadruple::fifth(g(-1, 0), g(1, 0), g(0, -1), g(0, 1)),
        ]
    );
    assert_eq!(
        classes.iter().map(|c| c.orbit_size).collect::<Vec<_>>(),
        vec![32, 8, 8]
    );
}

#[test]
fn orbit_sizes_and_symmetry_closure() {
    for class in search(4, false, 2) {
        let orbit = solution_orbit(&class.representative);
        assert_eq!(orbit.len(), class.orbit_size);
        assert_eq!(orbit[0], class.representative);
        for image in &orbit {
            assert!(verify_solution(image));
            assert_eq!(canonicalize_solution(image).unwrap(), class.representative);
        }
    }
}

#[test]
fn output_is_independent_of_shard_count() {
    let render = |shards| {
        let mut buf = Vec::new();
        write_classes(OutputFormat::Json, &search(6, false, shards), &mut buf).unwrap();
        buf
    };
    let one = render(1);
    for shards in [2, 3, 8, 17] {
        assert_eq!(render(shards), one, "shards = {shards}");
    }
}
