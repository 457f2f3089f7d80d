//! Named invariant suites, run by the `verify` command and the acceptance
//! tests.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::algorithms::{
    brute_force_reference, build_oracle, classify_fn, dj_final_state, dj_program,
    global_phase_distance, hadamard_layer, operator_phase_distance, oracles_equivalent,
    reference_circuit_oracle, run_bv, run_dj, two_bit_catalogue, working_register_probability,
    BooleanFn, Encoding, FnClass, HiddenString, Scheme, BV_STRINGS,
};
use crate::error::{Error, Result};
use crate::photonic::{
    bv_entries, count_components, dj_entries, full_dj_circuit, hwp_jones, induced_unitary,
    photonic_final_walk_state, resource_report, simulate_photonic_traced, OpticalComponent,
    PhotonState, PhotonicCircuit,
};
use crate::walk::{
    apply_step, build_coin, build_shift, measure_joint, measure_position, program_operator,
    run_program, CoinParams, Shift, Topology, WalkProgram, WalkState, WalkStep,
};

const SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct VerifyOptions {
    /// Added to every HWP angle of compiled circuits (fault injection).
    pub hwp_offset: f64,
}

type Outcome = std::result::Result<String, String>;

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    run: fn(&VerifyOptions) -> Outcome,
}

impl Suite {
    pub fn run(&self, options: &VerifyOptions) -> SuiteReport {
        let (passed, message) = match (self.run)(options) {
            Ok(m) => (true, m),
            Err(m) => (false, m),
        };
        SuiteReport {
            name: self.name,
            passed,
            message,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    /// Summary on success, first failing check otherwise.
    pub message: String,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "coin-unitarity", description: "1000 random coins are unitary to 1e-12", run: coin_unitarity },
    Suite { name: "coin-determinant", description: "det of every sampled coin is e^{2ip}", run: coin_determinant },
    Suite { name: "shift-permutation", description: "every shift is a permutation matrix", run: shift_permutation },
    Suite { name: "step-norm", description: "random steps preserve the norm to 1e-10", run: step_norm },
    Suite { name: "program-concat", description: "running a concatenation equals running in sequence", run: program_concat },
    Suite { name: "measure-sums", description: "position and joint distributions sum to 1", run: measure_sums },
    Suite { name: "oracle-equiv", description: "with-aux oracles equal the X/CNOT circuit oracles", run: oracle_equiv },
    Suite { name: "no-aux-diagonal", description: "no-aux oracles are diag((-1)^f) up to phase", run: no_aux_diagonal },
    Suite { name: "reference-agreement", description: "walk DJ final states match the textbook simulation", run: reference_agreement },
    Suite { name: "dj-determinism", description: "p_all_zero is 0 or 1 for every promised function", run: dj_determinism },
    Suite { name: "bv-exactness", description: "every hidden string is recovered with probability 1", run: bv_exactness },
    Suite { name: "bv-dj-oracle-identity", description: "BV oracles are the DJ catalogue oracles", run: bv_dj_oracle_identity },
    Suite { name: "hadamard-involution", description: "Hadamard layers square to identity up to phase", run: hadamard_involution },
    Suite { name: "hwp-jones", description: "HWP matrices: special angles and orthogonality", run: hwp_matrices },
    Suite { name: "hwp-hadamard-square", description: "HWP(pi/8) squared is the identity", run: hwp_hadamard_square },
    Suite { name: "photonic-fidelity", description: "compiled circuits reproduce walk operators and states", run: photonic_fidelity },
    Suite { name: "photonic-norm", description: "photonic simulation preserves the norm per stage", run: photonic_norm },
    Suite { name: "photonic-outcomes", description: "photonic DJ/BV probabilities match the walk", run: photonic_outcomes },
    Suite { name: "permuter-count", description: "mode permuters never change component counts", run: permuter_count },
    Suite { name: "resource-comparison", description: "no-aux circuits use fewer components", run: resource_comparison },
    Suite { name: "scaling", description: "textbook DJ for n = 3..10 on random balanced and constant functions", run: scaling },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Runs the named suites (all of them when `names` is empty), in registry
/// order.
pub fn run_suites(names: &[String], options: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    if let Some(unknown) = names.iter().find(|n| suite(n).is_none()) {
        return Err(Error::Unsupported(format!("unknown suite '{unknown}'")));
    }
    Ok(SUITES
        .iter()
        .filter(|s| names.is_empty() || names.iter().any(|n| n == s.name))
        .map(|s| s.run(options))
        .collect())
}

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn fail(e: Error) -> String {
    e.to_string()
}

fn random_params(rng: &mut StdRng) -> CoinParams {
    CoinParams::new(
        rng.gen_range(-PI..PI),
        rng.gen_range(-PI..PI),
        rng.gen_range(-PI..PI),
        rng.gen_range(-PI..PI),
    )
}

fn topologies() -> Vec<Topology> {
    let mut out = Vec::new();
    for size in 2..=6 {
        out.push(Topology::closed_cycle(size).expect("size > 0"));
    }
    out.push(Topology::open_line(2).expect("size > 0"));
    out
}

fn random_state(rng: &mut StdRng, topology: Topology) -> WalkState {
    let mut amps: Vec<Complex64> = (0..topology.dim())
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|z| *z /= norm);
    WalkState::new(topology, amps).expect("normalized")
}

fn random_step(rng: &mut StdRng, topology: Topology) -> WalkStep {
    let shifts = [Shift::None, Shift::Plus(0), Shift::Plus(1), Shift::Minus(0), Shift::Minus(1)];
    let mut coins = Vec::new();
    for l in 0..topology.size {
        if rng.gen_bool(0.7) {
            coins.push((l, build_coin(random_params(rng))));
        }
    }
    WalkStep::position_coins(coins)
        .with_shift(*shifts.choose(rng).expect("non-empty"))
        .with_global_phase(rng.gen_range(-PI..PI))
}

fn coin_unitarity(_: &VerifyOptions) -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let params = random_params(&mut rng);
        let d = build_coin(params).unitarity_deviation();
        check!(d <= 1e-12, "coin {params:?} deviates from unitarity by {d:e}");
        worst = worst.max(d);
    }
    Ok(format!("1000 coins, worst deviation {worst:.1e}"))
}

fn coin_determinant(_: &VerifyOptions) -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    for _ in 0..1000 {
        let params = random_params(&mut rng);
        let det = build_coin(params).determinant();
        let expected = Complex64::from_polar(1.0, 2.0 * params.p);
        check!((det - expected).norm() <= 1e-12, "coin {params:?}: det {det} != e^(2ip)");
    }
    Ok("1000 coins".into())
}

fn shift_permutation(_: &VerifyOptions) -> Outcome {
    let mut checked = 0;
    for topology in topologies() {
        for shift in [Shift::None, Shift::Plus(0), Shift::Plus(1), Shift::Minus(0), Shift::Minus(1)] {
            let op = build_shift(shift, topology).map_err(fail)?;
            let rows = op.to_rows();
            for (i, row) in rows.iter().enumerate() {
                let ones = row.iter().filter(|z| **z == Complex64::new(1.0, 0.0)).count();
                let zeros = row.iter().filter(|z| **z == Complex64::new(0.0, 0.0)).count();
                check!(ones == 1 && zeros == row.len() - 1, "{shift:?} on {topology:?}: row {i} is not a permutation row");
            }
            for j in 0..rows.len() {
                let ones = rows.iter().filter(|r| r[j] == Complex64::new(1.0, 0.0)).count();
                check!(ones == 1, "{shift:?} on {topology:?}: column {j} is not a permutation column");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} shift operators"))
}

fn step_norm(_: &VerifyOptions) -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    for topology in topologies() {
        for _ in 0..100 {
            let state = random_state(&mut rng, topology);
            let step = random_step(&mut rng, topology);
            let next = apply_step(&state, &step).map_err(fail)?;
            check!((next.norm_sqr() - 1.0).abs() <= 1e-10, "norm drifted to {} on {topology:?}", next.norm_sqr());
        }
    }
    Ok("600 random steps".into())
}

fn program_concat(_: &VerifyOptions) -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 3);
    for topology in topologies() {
        for _ in 0..20 {
            let state = random_state(&mut rng, topology);
            let first = WalkProgram::from_steps("a", (0..rng.gen_range(0..5)).map(|_| random_step(&mut rng, topology)).collect());
            let second = WalkProgram::from_steps("b", (0..rng.gen_range(0..5)).map(|_| random_step(&mut rng, topology)).collect());
            let joined = run_program(&state, &first.clone().concat(second.clone())).map_err(fail)?;
            let staged = run_program(&run_program(&state, &first).map_err(fail)?, &second).map_err(fail)?;
            check!(joined == staged, "concatenated run differs on {topology:?}");
        }
    }
    Ok("120 program pairs, bit-identical".into())
}

fn measure_sums(_: &VerifyOptions) -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 4);
    for topology in topologies() {
        for _ in 0..50 {
            let state = random_state(&mut rng, topology);
            let p: f64 = measure_position(&state).iter().sum();
            let j: f64 = measure_joint(&state).iter().sum();
            check!((p - 1.0).abs() <= 1e-10 && (j - 1.0).abs() <= 1e-10, "sums {p}, {j} on {topology:?}");
        }
    }
    Ok("300 random states".into())
}

fn oracle_equiv(_: &VerifyOptions) -> Outcome {
    for (name, f) in two_bit_catalogue() {
        let walk = build_oracle(&f, Scheme::WithAux).map_err(fail)?.circuit_operator().map_err(fail)?;
        let ok = oracles_equivalent(&walk, &reference_circuit_oracle(&f)).map_err(fail)?;
        check!(ok, "({name}): walk oracle differs from the circuit oracle");
    }
    Ok("8 functions".into())
}

fn no_aux_diagonal(_: &VerifyOptions) -> Outcome {
    for (name, f) in two_bit_catalogue() {
        let op = build_oracle(&f, Scheme::NoAux).map_err(fail)?.circuit_operator().map_err(fail)?;
        let phase = op.get(0, 0) / if f.eval(0) == 1 { -1.0 } else { 1.0 };
        check!((phase.norm() - 1.0).abs() <= 1e-10, "({name}): entry (0,0) is not a phase");
        for r in 0..op.dim() {
            for c in 0..op.dim() {
                let expected = if r != c {
                    Complex64::new(0.0, 0.0)
                } else if f.eval(r) == 1 {
                    -phase
                } else {
                    phase
                };
                check!((op.get(r, c) - expected).norm() <= 1e-10, "({name}): entry ({r},{c}) is {}", op.get(r, c));
            }
        }
    }
    Ok("8 functions".into())
}

fn reference_agreement(_: &VerifyOptions) -> Outcome {
    for (name, f) in two_bit_catalogue() {
        for scheme in Scheme::ALL {
            let encoding = Encoding::new(scheme, 2).map_err(fail)?;
            let walk = dj_final_state(&f, scheme).map_err(fail)?;
            let mut circuit = vec![Complex64::new(0.0, 0.0); walk.amplitudes().len()];
            for (i, z) in walk.amplitudes().iter().enumerate() {
                circuit[encoding.circuit_index(i)] = *z;
            }
            let reference = brute_force_reference(scheme, &f).map_err(fail)?;
            let d = global_phase_distance(&circuit, &reference);
            check!(d <= 1e-10, "({name}) {scheme}: deviation {d:e}");
        }
    }
    Ok("8 functions x 2 schemes".into())
}

fn random_balanced(rng: &mut StdRng, n: usize) -> BooleanFn {
    let mut table: Vec<u8> = (0..1usize << n).map(|x| u8::from(x < 1 << (n - 1))).collect();
    table.shuffle(rng);
    BooleanFn::new(n, table).expect("valid table")
}

fn dj_determinism(_: &VerifyOptions) -> Outcome {
    for (name, f) in two_bit_catalogue() {
        let class = classify_fn(&f);
        for scheme in Scheme::ALL {
            let outcome = run_dj(&f, scheme).map_err(fail)?;
            let expected = if class == FnClass::Constant { 1.0 } else { 0.0 };
            check!((outcome.p_all_zero - expected).abs() <= 1e-10, "({name}) {scheme}: p_all_zero = {}", outcome.p_all_zero);
            check!(outcome.classification == class, "({name}) {scheme}: classified {}", outcome.classification);
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED + 5);
    for n in 3..=6 {
        for _ in 0..20 {
            let f = random_balanced(&mut rng, n);
            for scheme in Scheme::ALL {
                let state = brute_force_reference(scheme, &f).map_err(fail)?;
                let p = working_register_probability(scheme, &state, 0);
                check!(p <= 1e-10, "balanced n = {n} {scheme}: p_all_zero = {p}");
            }
        }
    }
    Ok("n = 2 exhaustive, n = 3..6 sampled".into())
}

fn bv_exactness(_: &VerifyOptions) -> Outcome {
    for (s, _) in BV_STRINGS {
        let hidden: HiddenString = s.parse().map_err(fail)?;
        for scheme in Scheme::ALL {
            let outcome = run_bv(&hidden, scheme).map_err(fail)?;
            check!(outcome.recovered == hidden, "s = {s} {scheme}: recovered {}", outcome.recovered);
            check!((outcome.probability - 1.0).abs() <= 1e-10, "s = {s} {scheme}: p = {}", outcome.probability);
        }
    }
    Ok("4 strings x 2 schemes".into())
}

fn bv_dj_oracle_identity(_: &VerifyOptions) -> Outcome {
    for (s, name) in BV_STRINGS {
        let f = s.parse::<HiddenString>().map_err(fail)?.to_function();
        let catalogue = crate::algorithms::catalogue_function(name).expect("catalogue name");
        for scheme in Scheme::ALL {
            let a = build_oracle(&f, scheme).map_err(fail)?;
            let b = build_oracle(&catalogue, scheme).map_err(fail)?;
            check!(a == b, "s = {s} {scheme}: oracle differs from ({name})");
        }
    }
    Ok("4 strings x 2 schemes".into())
}

fn hadamard_involution(_: &VerifyOptions) -> Outcome {
    for scheme in Scheme::ALL {
        let topology = scheme.topology();
        let op = program_operator(&hadamard_layer(scheme, topology).map_err(fail)?, topology).map_err(fail)?;
        let square = op.compose(&op).map_err(fail)?;
        let d = operator_phase_distance(&square, &crate::walk::Unitary::identity(op.dim()));
        check!(d <= 1e-10, "{scheme}: H^2 deviates from identity by {d:e}");
    }
    Ok("both schemes".into())
}

fn jones_close(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            worst = worst.max((a[i][j] - b[i][j]).abs());
        }
    }
    worst
}

fn hwp_matrices(_: &VerifyOptions) -> Outcome {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let specials = [
        ("pi/8", FRAC_PI_8, [[s, s], [s, -s]]),
        ("pi/4", FRAC_PI_4, [[0.0, 1.0], [1.0, 0.0]]),
        ("0", 0.0, [[1.0, 0.0], [0.0, -1.0]]),
        ("pi/2", FRAC_PI_2, [[-1.0, 0.0], [0.0, 1.0]]),
    ];
    for (label, alpha, expected) in specials {
        let d = jones_close(hwp_jones(alpha), expected);
        check!(d <= 1e-12, "HWP({label}) off by {d:e}");
    }
    for k in 0..360 {
        let j = hwp_jones(k as f64 * PI / 180.0);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        check!((det + 1.0).abs() <= 1e-12, "HWP({k} deg) det {det}");
        let jtj = [
            [j[0][0] * j[0][0] + j[1][0] * j[1][0], j[0][0] * j[0][1] + j[1][0] * j[1][1]],
            [j[0][1] * j[0][0] + j[1][1] * j[1][0], j[0][1] * j[0][1] + j[1][1] * j[1][1]],
        ];
        check!(jones_close(jtj, [[1.0, 0.0], [0.0, 1.0]]) <= 1e-12, "HWP({k} deg) not orthogonal");
    }
    Ok("4 special angles, 360-angle grid".into())
}

fn hwp_hadamard_square(_: &VerifyOptions) -> Outcome {
    let h = hwp_jones(FRAC_PI_8);
    let hh = [
        [h[0][0] * h[0][0] + h[0][1] * h[1][0], h[0][0] * h[0][1] + h[0][1] * h[1][1]],
        [h[1][0] * h[0][0] + h[1][1] * h[1][0], h[1][0] * h[0][1] + h[1][1] * h[1][1]],
    ];
    let d = jones_close(hh, [[1.0, 0.0], [0.0, 1.0]]);
    check!(d <= 1e-12, "HWP(pi/8)^2 off identity by {d:e}");
    Ok(format!("deviation {d:.1e}"))
}

/// Every DJ catalogue function and BV string, with its label.
fn catalogue_cases() -> Vec<(String, BooleanFn)> {
    dj_entries()
        .into_iter()
        .chain(bv_entries())
        .map(|e| (e.name, e.function))
        .collect()
}

fn compiled(f: &BooleanFn, scheme: Scheme, options: &VerifyOptions) -> std::result::Result<PhotonicCircuit, String> {
    Ok(full_dj_circuit(f, scheme).map_err(fail)?.with_hwp_offset(options.hwp_offset))
}

fn photonic_fidelity(options: &VerifyOptions) -> Outcome {
    let mut worst = 0.0f64;
    for (name, f) in catalogue_cases() {
        for scheme in Scheme::ALL {
            let encoding = Encoding::new(scheme, 2).map_err(fail)?;
            let circuit = compiled(&f, scheme, options)?;
            let program = dj_program(&f, scheme).map_err(fail)?;
            let d_op = operator_phase_distance(
                &induced_unitary(&circuit).map_err(fail)?,
                &program_operator(&program, encoding.topology()).map_err(fail)?,
            );
            check!(d_op <= 1e-9, "{name} {scheme}: circuit operator off by {d_op:e}");
            let photonic = photonic_final_walk_state(&circuit, &encoding).map_err(fail)?;
            let walk = dj_final_state(&f, scheme).map_err(fail)?;
            let d_state = global_phase_distance(photonic.amplitudes(), walk.amplitudes());
            check!(d_state <= 1e-9, "{name} {scheme}: final state off by {d_state:e}");
            worst = worst.max(d_op).max(d_state);
        }
    }
    Ok(format!("12 cases x 2 schemes, worst deviation {worst:.1e}"))
}

fn photonic_norm(options: &VerifyOptions) -> Outcome {
    for (name, f) in catalogue_cases() {
        for scheme in Scheme::ALL {
            let circuit = compiled(&f, scheme, options)?;
            for mode in 0..circuit.n_modes() {
                for pol in 0..2 {
                    let input = PhotonState::basis(circuit.n_modes(), pol, mode).map_err(fail)?;
                    let trace = simulate_photonic_traced(&circuit, &input).map_err(fail)?;
                    for (stage, state) in trace.iter().enumerate() {
                        let drift = (state.norm_sqr() - 1.0).abs();
                        check!(drift <= 1e-10, "{name} {scheme}: norm drift {drift:e} after stage {stage}");
                    }
                }
            }
        }
    }
    Ok("every stage of 24 circuits on every basis input".into())
}

fn photonic_outcomes(options: &VerifyOptions) -> Outcome {
    for (name, f) in catalogue_cases() {
        for scheme in Scheme::ALL {
            let encoding = Encoding::new(scheme, 2).map_err(fail)?;
            let circuit = compiled(&f, scheme, options)?;
            let photonic = photonic_final_walk_state(&circuit, &encoding).map_err(fail)?;
            let walk = dj_final_state(&f, scheme).map_err(fail)?;
            let a = crate::algorithms::working_distribution(&photonic, &encoding);
            let b = crate::algorithms::working_distribution(&walk, &encoding);
            for (x, (pa, pb)) in a.iter().zip(&b).enumerate() {
                check!((pa - pb).abs() <= 1e-9, "{name} {scheme}: P(x = {x}) is {pa:.6e} photonic vs {pb:.6e} walk");
            }
        }
    }
    Ok("12 cases x 2 schemes".into())
}

fn permuter_count(_: &VerifyOptions) -> Outcome {
    for (name, f) in catalogue_cases() {
        for scheme in Scheme::ALL {
            let circuit = full_dj_circuit(&f, scheme).map_err(fail)?;
            let n = circuit.n_modes();
            let mut stages = circuit.stages().to_vec();
            let rotate: Vec<usize> = (0..n).map(|m| (m + 1) % n).collect();
            stages.push(vec![OpticalComponent::ModePermuter { permutation: rotate }]);
            stages.insert(0, vec![OpticalComponent::ModePermuter { permutation: (0..n).rev().collect() }]);
            let padded = PhotonicCircuit::new(n, stages).map_err(fail)?;
            check!(count_components(&padded) == count_components(&circuit), "{name} {scheme}: permuters changed the count");
        }
    }
    Ok("24 circuits".into())
}

fn resource_comparison(_: &VerifyOptions) -> Outcome {
    let mut entries = dj_entries();
    entries.extend(bv_entries());
    let rows = resource_report(&entries, &Scheme::ALL).map_err(fail)?;
    for pair in rows.chunks(2) {
        let (with, without) = (&pair[0], &pair[1]);
        check!(
            without.total < with.total,
            "{}: no-aux total {} is not below with-aux total {}",
            with.function_name,
            without.total,
            with.total
        );
    }
    Ok(format!("{} functions", rows.len() / 2))
}

fn scaling(_: &VerifyOptions) -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 6);
    for n in 3..=10 {
        for _ in 0..50 {
            let f = random_balanced(&mut rng, n);
            let state = brute_force_reference(Scheme::WithAux, &f).map_err(fail)?;
            let p = working_register_probability(Scheme::WithAux, &state, 0);
            check!(p <= 1e-12, "balanced n = {n}: p_all_zero = {p:e}");
        }
        for value in 0..2 {
            let f = BooleanFn::constant(n, value).map_err(fail)?;
            let state = brute_force_reference(Scheme::WithAux, &f).map_err(fail)?;
            let p = working_register_probability(Scheme::WithAux, &state, 0);
            check!(p >= 1.0 - 1e-12, "constant {value}, n = {n}: p_all_zero = {p}");
        }
    }
    Ok("n = 3..10, 50 balanced + 2 constant each".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_covers_every_invariant() {
        // walk: 6, algorithms: 7, photonic: 7, plus the scaling check.
        assert_eq!(SUITES.len(), 21);
        let mut names: Vec<_> = SUITES.iter().map(|s| s.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
    }

    #[test]
    fn all_suites_pass() {
        for report in run_suites(&[], &VerifyOptions::default()).unwrap() {
            assert!(report.passed, "{}: {}", report.name, report.message);
        }
    }

    #[test]
    fn hwp_fault_is_detected() {
        let options = VerifyOptions { hwp_offset: 0.01 };
        let reports = run_suites(&["photonic-fidelity".into(), "photonic-norm".into()], &options).unwrap();
        assert!(!reports[0].passed);
        assert!(reports[1].passed);
    }

    #[test]
    fn filter_and_unknown_names() {
        let reports = run_suites(&["oracle-equiv".into()], &VerifyOptions::default()).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(run_suites(&["nope".into()], &VerifyOptions::default()).is_err());
    }
}
