mod common;

use horocoh::root_system::DotAction;
use horocoh::{build_root_datum, ParabolicSpec, Weight};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn weights(rank: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-10i64..=10, rank)
}

#[test]
fn dot_sort_matches_brute_force_orbit() {
    for label in ["A1", "A2", "A3", "B2", "G2"] {
        let datum = build_root_datum(label).unwrap();
        let r = datum.rank();
        let letters: Vec<usize> = (1..=r).collect();
        let mut runner = TestRunner::new(Config::with_cases(200));
        runner
            .run(&weights(r), |lambda| {
                let lambda = Weight(lambda);
                let nu = Weight(lambda.0.iter().map(|c| c + 1).collect());
                let orb = common::orbit(&datum, &nu, &letters);
                let dominant: Vec<_> = orb
                    .iter()
                    .filter(|(x, _)| x.is_strictly_dominant())
                    .collect();
                match datum.to_dominant_dot(&lambda).unwrap() {
                    DotAction::Singular => prop_assert!(dominant.is_empty(), "{label} {lambda}"),
                    DotAction::Regular {
                        dominant: mu,
                        length,
                        word,
                    } => {
                        prop_assert_eq!(dominant.len(), 1);
                        let (top, dist) = dominant[0];
                        let mu_rho = Weight(mu.0.iter().map(|c| c + 1).collect());
                        prop_assert_eq!(&mu_rho, top);
                        prop_assert_eq!(length, *dist);
                        prop_assert_eq!(word.inversion_count(&datum).unwrap(), length);
                        prop_assert_eq!(word.act_on_weight(&datum, &nu).unwrap(), mu_rho);
                    }
                }
                Ok(())
            })
            .unwrap_or_else(|e| panic!("{label}: {e}"));
    }
}

#[test]
fn reflections_are_involutions() {
    for label in ["A1", "A2", "A3", "B2", "C3", "G2", "F4", "D4"] {
        let datum = build_root_datum(label).unwrap();
        let r = datum.rank();
        let mut runner = TestRunner::new(Config::with_cases(50));
        runner
            .run(&weights(r), |lambda| {
                let lambda = Weight(lambda);
                for i in 1..=r {
                    let once = datum.reflect(i, &lambda).unwrap();
                    prop_assert_eq!(datum.reflect(i, &once).unwrap(), lambda.clone());
                }
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn coset_reps_times_levi_order_is_group_order() {
    for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2"] {
        let datum = build_root_datum(label).unwrap();
        let r = datum.rank();
        let all: Vec<usize> = (1..=r).collect();
        let order = common::group_order(&datum, &all);
        for mask in 0u32..(1 << r) {
            let levi: Vec<usize> = (1..=r).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let spec = ParabolicSpec::new(r, levi.iter().copied()).unwrap();
            let reps = datum.minimal_coset_reps(&spec, 100_000).unwrap();
            let levi_order = common::group_order(&datum, &levi);
            assert_eq!(reps.len() * levi_order, order, "{label} levi {levi:?}");
            assert_eq!(common::distinct(&reps), reps.len());
            for w in &reps {
                assert!(w.is_reduced(&datum).unwrap());
                assert!(datum.is_minimal_coset_rep(w, &spec).unwrap());
            }
            let top = reps.iter().map(|w| w.length).max().unwrap();
            assert_eq!(top, datum.flag_dimension(&spec), "{label} levi {levi:?}");
        }
    }
}

#[test]
fn trivial_module_has_dimension_one() {
    for label in [
        "A1", "A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "A2xB2",
    ] {
        let datum = build_root_datum(label).unwrap();
        assert_eq!(
            datum.weyl_dimension(&Weight::zero(datum.rank())).unwrap(),
            1,
            "{label}"
        );
    }
}

#[test]
fn a2_duality_swaps_coordinates() {
    let datum = build_root_datum("A2").unwrap();
    for a in 0..=5 {
        for b in 0..=5 {
            assert_eq!(
                datum.weyl_dimension(&Weight(vec![a, b])).unwrap(),
                datum.weyl_dimension(&Weight(vec![b, a])).unwrap()
            );
        }
    }
}

#[test]
fn coroots_are_roots_of_the_transpose() {
    for label in ["B3", "C3", "F4", "G2"] {
        let datum = build_root_datum(label).unwrap();
        let dual = datum.dual_positive_roots();
        let mut coroots = datum.positive_coroots.clone();
        coroots.sort();
        let mut dual_sorted = dual.clone();
        dual_sorted.sort();
        assert_eq!(coroots, dual_sorted, "{label}");
    }
}
