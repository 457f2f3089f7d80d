use approx::assert_abs_diff_eq;
use num_complex::Complex64;
use proptest::prelude::*;

use qwalk_core::algorithms::{
    build_oracle, catalogue_function, dj_program, run_bv, run_dj, two_bit_catalogue, BooleanFn,
    FnClass, HiddenString, Scheme,
};
use qwalk_core::photonic::{
    compile, count_components, full_dj_circuit, photonic_bv, photonic_dj, simulate_photonic,
    ComponentCount, PhotonState, PhotonicCircuit,
};
use qwalk_core::walk::{
    apply_step, build_shift, run_program, Shift, Topology, WalkState, WalkStep,
};
use qwalk_core::Error;

#[test]
fn photonic_and_walk_runs_agree_on_the_catalogue() {
    for (name, f) in two_bit_catalogue() {
        for scheme in Scheme::ALL {
            let walk = run_dj(&f, scheme).unwrap();
            let optics = photonic_dj(&f, scheme).unwrap();
            assert_abs_diff_eq!(walk.p_all_zero, optics.p_all_zero, epsilon = 1e-9);
            assert_eq!(walk.classification, optics.classification, "({name}) {scheme}");
        }
    }
    for s in ["00", "01", "10", "11"] {
        let s: HiddenString = s.parse().unwrap();
        for scheme in Scheme::ALL {
            assert_eq!(photonic_bv(&s, scheme).unwrap().recovered, run_bv(&s, scheme).unwrap().recovered);
        }
    }
}

#[test]
fn compiled_circuits_round_trip_through_json() {
    for (_, f) in two_bit_catalogue() {
        for scheme in Scheme::ALL {
            let circuit = full_dj_circuit(&f, scheme).unwrap();
            let text = serde_json::to_string(&circuit).unwrap();
            let back: PhotonicCircuit = serde_json::from_str(&text).unwrap();
            assert_eq!(back, circuit);
        }
    }
}

#[test]
fn with_aux_constant_one_oracle_counts() {
    let f = catalogue_function("ii").unwrap();
    let oracle = build_oracle(&f, Scheme::WithAux).unwrap();
    let circuit = compile(&oracle.program, Scheme::WithAux).unwrap();
    assert_eq!(count_components(&circuit), ComponentCount { hwp: 4, bs: 0, phase_shifter: 0, pbs: 0 });
}

#[test]
fn no_aux_zero_function_returns_photon_to_start() {
    let circuit = full_dj_circuit(&BooleanFn::constant(2, 0).unwrap(), Scheme::NoAux).unwrap();
    let out = simulate_photonic(&circuit, &PhotonState::basis(2, 0, 0).unwrap()).unwrap();
    assert_abs_diff_eq!(out.probabilities()[0], 1.0, epsilon = 1e-12);
}

#[test]
fn neither_function_is_rejected() {
    let and = BooleanFn::new(2, vec![0, 0, 0, 1]).unwrap();
    for scheme in Scheme::ALL {
        assert_eq!(run_dj(&and, scheme), Err(Error::PromiseViolation));
        // The program itself is still well defined.
        assert!(dj_program(&and, scheme).is_ok());
    }
}

#[test]
fn long_open_line_rejects_off_end_moves() {
    let line = Topology::open_line(3).unwrap();
    assert!(matches!(build_shift(Shift::Plus(0), line), Err(Error::BoundaryViolation { .. })));
    let at_end = WalkState::basis(line, 0, 2).unwrap();
    assert!(apply_step(&at_end, &WalkStep::shift_only(Shift::Plus(0))).is_err());
    // Moving inward is fine.
    let moved = apply_step(&at_end, &WalkStep::shift_only(Shift::Minus(0))).unwrap();
    assert_eq!(moved.amplitude(0, 1), Complex64::new(1.0, 0.0));
}

proptest! {
    #[test]
    fn balanced_two_bit_tables_are_detected(perm in Just(vec![0u8, 0, 1, 1]).prop_shuffle()) {
        let f = BooleanFn::new(2, perm).unwrap();
        for scheme in Scheme::ALL {
            let out = run_dj(&f, scheme).unwrap();
            prop_assert_eq!(out.classification, FnClass::Balanced);
            prop_assert!(out.p_all_zero.abs() <= 1e-10);
        }
    }

    #[test]
    fn walk_program_runs_are_normalized(name in prop::sample::select(vec!["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"]), with_aux in any::<bool>()) {
        let scheme = if with_aux { Scheme::WithAux } else { Scheme::NoAux };
        let f = catalogue_function(name).unwrap();
        let start = WalkState::basis(scheme.topology(), 0, 0).unwrap();
        let end = run_program(&start, &dj_program(&f, scheme).unwrap()).unwrap();
        prop_assert!((end.norm_sqr() - 1.0).abs() <= 1e-10);
    }
}
