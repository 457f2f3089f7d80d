use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::Unitary;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyKind {
    OpenLine,
    ClosedCycle,
}

/// A finite 1D position graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Topology {
    pub kind: TopologyKind,
    pub size: usize,
}

impl Topology {
    pub fn new(kind: TopologyKind, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidTopology("size must be positive".into()));
        }
        Ok(Self { kind, size })
    }

    pub fn open_line(size: usize) -> Result<Self> {
        Self::new(TopologyKind::OpenLine, size)
    }

    pub fn closed_cycle(size: usize) -> Result<Self> {
        Self::new(TopologyKind::ClosedCycle, size)
    }

    /// Dimension of coin ⊗ position space.
    pub fn dim(&self) -> usize {
        2 * self.size
    }

    pub fn index(&self, coin: usize, position: usize) -> usize {
        coin * self.size + position
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "coin", rename_all = "snake_case")]
pub enum Shift {
    None,
    /// `S₊ᵇ`: move right when the coin is `b`.
    Plus(u8),
    /// `S₋ᵃ`: move left when the coin is `a`.
    Minus(u8),
}

impl Shift {
    pub fn coin(&self) -> Option<u8> {
        match *self {
            Shift::None => None,
            Shift::Plus(b) | Shift::Minus(b) => Some(b),
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match self.coin() {
            Some(b) if b > 1 => Err(Error::InvalidCoinLabel(b)),
            _ => Ok(()),
        }
    }
}

/// Where basis state `|coin⟩|position⟩` goes under `shift`. `None` means the
/// walker would step off the end of an open line.
///
/// On a cycle positions wrap modulo the size. On a two-vertex line each
/// vertex has the other as its only neighbour, so a coin-matched walker
/// always hops across the single edge.
pub fn shift_target(shift: Shift, topology: Topology, coin: u8, position: usize) -> Option<usize> {
    let n = topology.size;
    let delta: isize = match shift {
        Shift::None => return Some(position),
        Shift::Plus(b) if b == coin => 1,
        Shift::Minus(a) if a == coin => -1,
        _ => return Some(position),
    };
    match topology.kind {
        TopologyKind::ClosedCycle => Some((position as isize + delta).rem_euclid(n as isize) as usize),
        TopologyKind::OpenLine => {
            let next = position as isize + delta;
            if (0..n as isize).contains(&next) {
                Some(next as usize)
            } else if n == 2 {
                Some(1 - position)
            } else {
                None
            }
        }
    }
}

/// Full-space shift operator on coin ⊗ position.
pub fn build_shift(shift: Shift, topology: Topology) -> Result<Unitary> {
    shift.validate()?;
    if topology.size < 2 {
        return Err(Error::InvalidTopology(
            "shift operators need at least two vertices".into(),
        ));
    }
    let dim = topology.dim();
    let mut m = DMatrix::zeros(dim, dim);
    for coin in 0..2u8 {
        for l in 0..topology.size {
            let target = shift_target(shift, topology, coin, l).ok_or(Error::BoundaryViolation {
                coin,
                position: l,
            })?;
            m[(topology.index(coin as usize, target), topology.index(coin as usize, l))] =
                Complex64::new(1.0, 0.0);
        }
    }
    Unitary::new(m)
}
