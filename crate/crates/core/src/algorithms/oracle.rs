//! Function oracles as walk steps, and the textbook circuit oracle used as
//! ground truth.

use serde::{Deserialize, Serialize};

use super::boolean::BooleanFn;
use super::encoding::{Encoding, Scheme};
use crate::error::{Error, Result};
use crate::walk::{coins, program_operator, Unitary, WalkProgram, WalkStep};

/// Diagonal two-level coins available to the phase oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PhaseCoin {
    /// `diag(1, 1)`
    Identity,
    /// `diag(1, -1)`
    O1,
    /// `diag(-1, 1)`
    O2,
    /// `e^{iπ} diag(1, 1)`
    O3,
}

impl PhaseCoin {
    /// Coin with diagonal `((-1)^{f0}, (-1)^{f1})`.
    pub fn from_outputs(f0: u8, f1: u8) -> Self {
        match (f0, f1) {
            (0, 0) => PhaseCoin::Identity,
            (0, _) => PhaseCoin::O1,
            (_, 0) => PhaseCoin::O2,
            _ => PhaseCoin::O3,
        }
    }

    pub fn unitary(&self) -> Unitary {
        match self {
            PhaseCoin::Identity => coins::identity(),
            PhaseCoin::O1 => coins::o1(),
            PhaseCoin::O2 => coins::o2(),
            PhaseCoin::O3 => coins::o3(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Oracle {
    pub scheme: Scheme,
    pub encoding: Encoding,
    pub program: WalkProgram,
}

impl Oracle {
    pub fn step(&self) -> &WalkStep {
        self.program.steps().next().expect("oracle has one step")
    }

    pub fn operator(&self) -> Result<Unitary> {
        program_operator(&self.program, self.encoding.topology())
    }

    /// The oracle operator re-indexed into the textbook circuit basis.
    pub fn circuit_operator(&self) -> Result<Unitary> {
        to_circuit_basis(&self.operator()?, &self.encoding)
    }
}

/// `U_f|x⟩|y⟩ = |x⟩|y ⊕ f(x)⟩` as an X coin at every vertex whose label has
/// `f = 1`, with no shift.
pub fn build_oracle_with_aux(f: &BooleanFn) -> Result<Oracle> {
    let encoding = Encoding::new(Scheme::WithAux, f.n())?;
    let size = encoding.topology().size;
    let step = WalkStep::position_coins(
        (0..size)
            .filter(|&v| f.eval(encoding.label_of_vertex(v)) == 1)
            .map(|v| (v, coins::pauli_x())),
    );
    Ok(Oracle {
        scheme: Scheme::WithAux,
        encoding,
        program: WalkProgram::from_steps("oracle", vec![step]),
    })
}

/// Phase-oracle coins per position (`x₂ = 0, 1`) for a two-bit function.
pub fn no_aux_coin_pattern(f: &BooleanFn) -> Result<[PhaseCoin; 2]> {
    if f.n() != 2 {
        return Err(Error::SchemeMismatch(format!(
            "no-aux oracles are built for n = 2, got {}",
            f.n()
        )));
    }
    // x = (x₁ x₂), x₁ on the coin, x₂ on the position.
    Ok([0, 1].map(|x2| PhaseCoin::from_outputs(f.eval(x2), f.eval(0b10 | x2))))
}

/// `U_f|x⟩ = (-1)^{f(x)}|x⟩` as one position-dependent diagonal coin step.
pub fn build_oracle_no_aux(f: &BooleanFn) -> Result<Oracle> {
    let pattern = no_aux_coin_pattern(f)?;
    let encoding = Encoding::new(Scheme::NoAux, 2)?;
    let step = WalkStep::position_coins(
        pattern
            .iter()
            .enumerate()
            .map(|(x2, coin)| (encoding.vertex_of_label(x2), coin.unitary())),
    );
    Ok(Oracle {
        scheme: Scheme::NoAux,
        encoding,
        program: WalkProgram::from_steps("oracle", vec![step]),
    })
}

pub fn build_oracle(f: &BooleanFn, scheme: Scheme) -> Result<Oracle> {
    match scheme {
        Scheme::WithAux => build_oracle_with_aux(f),
        Scheme::NoAux => build_oracle_no_aux(f),
    }
}

/// The X/CNOT circuit oracle as a permutation on `|x⟩|q_a⟩` (index `2x + q_a`).
pub fn reference_circuit_oracle(f: &BooleanFn) -> Unitary {
    let perm: Vec<usize> = (0..2usize << f.n())
        .map(|idx| {
            let (x, y) = (idx >> 1, idx & 1);
            (x << 1) | (y ^ f.eval(x) as usize)
        })
        .collect();
    Unitary::permutation(&perm).expect("XOR on the output bit is a permutation")
}

/// Re-indexes a walk-space operator into circuit ordering.
pub fn to_circuit_basis(op: &Unitary, encoding: &Encoding) -> Result<Unitary> {
    let dim = op.dim();
    if dim != encoding.topology().dim() {
        return Err(Error::DimensionMismatch {
            expected: encoding.topology().dim(),
            actual: dim,
        });
    }
    let mut entries = vec![num_complex::Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            entries[encoding.circuit_index(i) * dim + encoding.circuit_index(j)] = op.get(i, j);
        }
    }
    Unitary::from_rows(dim, &entries)
}
