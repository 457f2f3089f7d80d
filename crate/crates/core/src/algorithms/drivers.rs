//! End-to-end Deutsch-Jozsa and Bernstein-Vazirani walks.

use serde::Serialize;

use super::boolean::{classify_fn, BooleanFn, FnClass, HiddenString};
use super::encoding::{Encoding, Scheme};
use super::layers::{hadamard_layer, position_hadamard_layer};
use super::oracle::build_oracle;
use crate::error::{Error, Result};
use crate::walk::{
    coins, measure_joint, run_program, Segment, WalkProgram, WalkState, WalkStep,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DjOutcome {
    pub scheme: Scheme,
    /// Probability that the working register reads all zeros.
    pub p_all_zero: f64,
    /// `Constant` iff `p_all_zero > 0.5`.
    pub classification: FnClass,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BvOutcome {
    pub scheme: Scheme,
    #[serde(serialize_with = "serialize_display")]
    pub recovered: HiddenString,
    pub probability: f64,
    /// `(working-register string, probability)` in register order.
    pub distribution: Vec<(String, f64)>,
}

fn serialize_display<S: serde::Serializer>(
    v: &HiddenString,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `|0⟩` coin at vertex 0.
pub fn initial_state(encoding: &Encoding) -> WalkState {
    WalkState::basis(encoding.topology(), 0, 0).expect("vertex 0 exists")
}

/// Prep, Hadamards, oracle, Hadamards. With an auxiliary the coin is first
/// flipped to `|1⟩` by an X coin at the start vertex, and the closing layer
/// acts on the path qubits only.
pub fn dj_program(f: &BooleanFn, scheme: Scheme) -> Result<WalkProgram> {
    let encoding = Encoding::new(scheme, f.n())?;
    let topology = encoding.topology();
    let oracle = build_oracle(f, scheme)?;
    let mut program = WalkProgram::new();
    match scheme {
        Scheme::WithAux => {
            program.push(Segment::generic(
                "prep",
                vec![WalkStep::position_coins([(0, coins::pauli_x())])],
            ));
            program.extend(hadamard_layer(scheme, topology)?);
            program.extend(oracle.program);
            program.extend(position_hadamard_layer(scheme, topology)?);
        }
        Scheme::NoAux => {
            program.extend(hadamard_layer(scheme, topology)?);
            program.extend(oracle.program);
            program.extend(hadamard_layer(scheme, topology)?);
        }
    }
    Ok(program)
}

/// Working-register distribution indexed by register value `x`.
pub fn working_distribution(state: &WalkState, encoding: &Encoding) -> Vec<f64> {
    let topology = encoding.topology();
    let joint = measure_joint(state);
    let width = match encoding.scheme() {
        Scheme::WithAux => encoding.path_qubits(),
        Scheme::NoAux => encoding.n(),
    };
    let mut dist = vec![0.0; 1 << width];
    for coin in 0..2 {
        for v in 0..topology.size {
            dist[encoding.input_of(coin, v)] += joint[topology.index(coin, v)];
        }
    }
    dist
}

pub fn dj_final_state(f: &BooleanFn, scheme: Scheme) -> Result<WalkState> {
    let encoding = Encoding::new(scheme, f.n())?;
    run_program(&initial_state(&encoding), &dj_program(f, scheme)?)
}

pub fn run_dj(f: &BooleanFn, scheme: Scheme) -> Result<DjOutcome> {
    if classify_fn(f) == FnClass::Neither {
        return Err(Error::PromiseViolation);
    }
    let encoding = Encoding::new(scheme, f.n())?;
    let state = dj_final_state(f, scheme)?;
    let p_all_zero = working_distribution(&state, &encoding)[0];
    Ok(DjOutcome {
        scheme,
        p_all_zero,
        classification: if p_all_zero > 0.5 {
            FnClass::Constant
        } else {
            FnClass::Balanced
        },
    })
}

pub fn run_dj_with_aux(f: &BooleanFn) -> Result<DjOutcome> {
    run_dj(f, Scheme::WithAux)
}

pub fn run_dj_no_aux(f: &BooleanFn) -> Result<DjOutcome> {
    run_dj(f, Scheme::NoAux)
}

/// BV runs the DJ pipeline on `f(x) = x·s` and reads the whole register.
pub fn run_bv(s: &HiddenString, scheme: Scheme) -> Result<BvOutcome> {
    let f = s.to_function();
    let encoding = Encoding::new(scheme, f.n())?;
    let state = dj_final_state(&f, scheme)?;
    let dist = working_distribution(&state, &encoding);
    let (best, &probability) = dist
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty distribution");
    let recovered = HiddenString::from_index(f.n(), best)?;
    let distribution = dist
        .iter()
        .enumerate()
        .map(|(x, &p)| (HiddenString::from_index(f.n(), x).expect("width").to_string(), p))
        .collect();
    Ok(BvOutcome {
        scheme,
        recovered,
        probability,
        distribution,
    })
}
