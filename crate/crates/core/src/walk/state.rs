use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::topology::{shift_target, Shift, Topology};
use super::Unitary;
use crate::error::{Error, Result};

/// Tolerance on state norms and probability sums.
pub const NORM_TOL: f64 = 1e-10;

/// Amplitude below which an off-end shift is treated as empty.
const BOUNDARY_TOL: f64 = 1e-12;

/// Walker state over coin ⊗ position, flat index `coin * size + position`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkState {
    topology: Topology,
    amplitudes: Vec<Complex64>,
}

impl WalkState {
    pub fn new(topology: Topology, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != topology.dim() {
            return Err(Error::DimensionMismatch {
                expected: topology.dim(),
                actual: amplitudes.len(),
            });
        }
        let state = Self {
            topology,
            amplitudes,
        };
        let norm_sqr = state.norm_sqr();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(state)
    }

    pub fn basis(topology: Topology, coin: usize, position: usize) -> Result<Self> {
        if coin > 1 {
            return Err(Error::InvalidCoinLabel(coin as u8));
        }
        if position >= topology.size {
            return Err(Error::PositionOutOfRange {
                position,
                size: topology.size,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); topology.dim()];
        amplitudes[topology.index(coin, position)] = Complex64::new(1.0, 0.0);
        Ok(Self {
            topology,
            amplitudes,
        })
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, coin: usize, position: usize) -> Complex64 {
        self.amplitudes[self.topology.index(coin, position)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// One walk step: position-dependent coin, global phase, then shift.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkStep {
    /// Coin per position; positions not present get the identity.
    pub coin_map: BTreeMap<usize, Unitary>,
    pub shift: Shift,
    #[serde(default)]
    pub global_phase: f64,
}

impl WalkStep {
    pub fn identity() -> Self {
        Self {
            coin_map: BTreeMap::new(),
            shift: Shift::None,
            global_phase: 0.0,
        }
    }

    /// The same coin at every position of a graph with `size` vertices.
    pub fn uniform_coin(coin: &Unitary, size: usize) -> Self {
        Self::position_coins((0..size).map(|l| (l, coin.clone())))
    }

    pub fn position_coins(coins: impl IntoIterator<Item = (usize, Unitary)>) -> Self {
        Self {
            coin_map: coins.into_iter().collect(),
            ..Self::identity()
        }
    }

    pub fn shift_only(shift: Shift) -> Self {
        Self {
            shift,
            ..Self::identity()
        }
    }

    pub fn with_shift(mut self, shift: Shift) -> Self {
        self.shift = shift;
        self
    }

    pub fn with_global_phase(mut self, phase: f64) -> Self {
        self.global_phase = phase;
        self
    }

    fn validate(&self, topology: Topology) -> Result<()> {
        self.shift.validate()?;
        for (&position, coin) in &self.coin_map {
            if position >= topology.size {
                return Err(Error::PositionOutOfRange {
                    position,
                    size: topology.size,
                });
            }
            if coin.dim() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    actual: coin.dim(),
                });
            }
        }
        if self.shift != Shift::None && topology.size < 2 {
            return Err(Error::InvalidTopology(
                "shift operators need at least two vertices".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SegmentKind {
    Generic,
    /// The segment applies `[[1, 1], [1, -1]]/√2` to every `(a, b)` vertex
    /// pair, identically for both coin values, and acts trivially elsewhere.
    PositionHadamard { pairs: Vec<(usize, usize)> },
}

/// A labelled run of steps. Labels name pipeline stages in traces and
/// reports; the kind tells the photonic compiler how to lower the run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub label: String,
    pub kind: SegmentKind,
    pub steps: Vec<WalkStep>,
}

impl Segment {
    pub fn generic(label: impl Into<String>, steps: Vec<WalkStep>) -> Self {
        Self {
            label: label.into(),
            kind: SegmentKind::Generic,
            steps,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct WalkProgram {
    pub segments: Vec<Segment>,
}

impl WalkProgram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_steps(label: impl Into<String>, steps: Vec<WalkStep>) -> Self {
        Self {
            segments: vec![Segment::generic(label, steps)],
        }
    }

    pub fn push(&mut self, segment: Segment) {
        self.segments.push(segment);
    }

    pub fn extend(&mut self, other: WalkProgram) {
        self.segments.extend(other.segments);
    }

    pub fn concat(mut self, other: WalkProgram) -> Self {
        self.extend(other);
        self
    }

    pub fn steps(&self) -> impl Iterator<Item = &WalkStep> {
        self.segments.iter().flat_map(|s| s.steps.iter())
    }

    pub fn len(&self) -> usize {
        self.segments.iter().map(|s| s.steps.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn apply_step(state: &WalkState, step: &WalkStep) -> Result<WalkState> {
    let topology = state.topology;
    step.validate(topology)?;
    let n = topology.size;
    let phase = Complex64::from_polar(1.0, step.global_phase);

    let mut coined = state.amplitudes.clone();
    for l in 0..n {
        let a0 = state.amplitude(0, l);
        let a1 = state.amplitude(1, l);
        let (b0, b1) = match step.coin_map.get(&l) {
            Some(c) => (c.get(0, 0) * a0 + c.get(0, 1) * a1, c.get(1, 0) * a0 + c.get(1, 1) * a1),
            None => (a0, a1),
        };
        coined[topology.index(0, l)] = b0 * phase;
        coined[topology.index(1, l)] = b1 * phase;
    }

    let mut shifted = vec![Complex64::new(0.0, 0.0); topology.dim()];
    for coin in 0..2u8 {
        for l in 0..n {
            let amp = coined[topology.index(coin as usize, l)];
            match shift_target(step.shift, topology, coin, l) {
                Some(target) => shifted[topology.index(coin as usize, target)] += amp,
                None if amp.norm() > BOUNDARY_TOL => {
                    return Err(Error::BoundaryViolation { coin, position: l })
                }
                None => {}
            }
        }
    }

    Ok(WalkState {
        topology,
        amplitudes: shifted,
    })
}

pub fn run_program(initial: &WalkState, program: &WalkProgram) -> Result<WalkState> {
    let mut state = initial.clone();
    for (index, step) in program.steps().enumerate() {
        state = apply_step(&state, step).map_err(|e| Error::StepFailed {
            index,
            source: Box::new(e),
        })?;
    }
    Ok(state)
}

/// Runs the program and records the state after each segment, labelled by
/// the segment label. The first entry is the initial state.
pub fn run_program_traced(
    initial: &WalkState,
    program: &WalkProgram,
) -> Result<Vec<(String, WalkState)>> {
    let mut trace = vec![("initial".to_string(), initial.clone())];
    let mut state = initial.clone();
    let mut index = 0;
    for segment in &program.segments {
        for step in &segment.steps {
            state = apply_step(&state, step).map_err(|e| Error::StepFailed {
                index,
                source: Box::new(e),
            })?;
            index += 1;
        }
        trace.push((segment.label.clone(), state.clone()));
    }
    Ok(trace)
}

fn operator_of(topology: Topology, run: impl Fn(&WalkState) -> Result<WalkState>) -> Result<Unitary> {
    let mut columns = Vec::with_capacity(topology.dim());
    for coin in 0..2 {
        for l in 0..topology.size {
            let out = run(&WalkState::basis(topology, coin, l)?)?;
            columns.push(out.amplitudes);
        }
    }
    Unitary::from_columns(topology.dim(), &columns)
}

/// Full-space operator of a single step.
pub fn step_operator(step: &WalkStep, topology: Topology) -> Result<Unitary> {
    operator_of(topology, |s| apply_step(s, step))
}

/// Full-space operator of a program (columns are images of basis states).
pub fn program_operator(program: &WalkProgram, topology: Topology) -> Result<Unitary> {
    operator_of(topology, |s| run_program(s, program))
}

/// `P(l) = Σ_c |ψ(c, l)|²`.
pub fn measure_position(state: &WalkState) -> Vec<f64> {
    (0..state.topology.size)
        .map(|l| state.amplitude(0, l).norm_sqr() + state.amplitude(1, l).norm_sqr())
        .collect()
}

/// `P(c, l)` with the same flat layout as the amplitudes.
pub fn measure_joint(state: &WalkState) -> Vec<f64> {
    state.amplitudes.iter().map(|z| z.norm_sqr()).collect()
}
