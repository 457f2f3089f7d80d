//! How qubits are carried by the walker.
//!
//! With an auxiliary qubit the coin is the auxiliary and the `n` working
//! qubits label the vertices of a `2ⁿ`-cycle in Gray-code order, so that
//! neighbouring vertices differ in one bit. For two bits the vertex order is
//! `|00⟩, |01⟩, |11⟩, |10⟩`.
//!
//! Without an auxiliary qubit (two bits only) the coin carries `x₁` and the
//! position on a two-vertex line carries `x₂`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::walk::Topology;

/// Largest `n` for which the with-auxiliary encoding is built.
pub const MAX_WALK_BITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    WithAux,
    NoAux,
}

impl Scheme {
    pub const ALL: [Scheme; 2] = [Scheme::WithAux, Scheme::NoAux];

    pub fn as_str(&self) -> &'static str {
        match self {
            Scheme::WithAux => "with-aux",
            Scheme::NoAux => "no-aux",
        }
    }

    /// Topology of the two-bit construction.
    pub fn topology(&self) -> Topology {
        Encoding::new(*self, 2).expect("two-bit encoding").topology()
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "with-aux" => Ok(Scheme::WithAux),
            "no-aux" => Ok(Scheme::NoAux),
            other => Err(Error::SchemeMismatch(format!("unknown scheme '{other}'"))),
        }
    }
}

pub fn gray_label(vertex: usize) -> usize {
    vertex ^ (vertex >> 1)
}

pub fn vertex_of_gray_label(label: usize) -> usize {
    let mut v = label;
    let mut shift = label >> 1;
    while shift != 0 {
        v ^= shift;
        shift >>= 1;
    }
    v
}

/// Qubit layout of one scheme at input width `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Encoding {
    scheme: Scheme,
    n: usize,
    topology: Topology,
}

impl Encoding {
    pub fn new(scheme: Scheme, n: usize) -> Result<Self> {
        let topology = match scheme {
            Scheme::WithAux if (1..=MAX_WALK_BITS).contains(&n) => Topology::closed_cycle(1 << n)?,
            Scheme::WithAux => {
                return Err(Error::SchemeMismatch(format!(
                    "with-aux walks support 1..={MAX_WALK_BITS} input bits, got {n}"
                )))
            }
            Scheme::NoAux if n == 2 => Topology::open_line(2)?,
            Scheme::NoAux => {
                return Err(Error::SchemeMismatch(format!(
                    "no-aux walks are built for n = 2, got {n}"
                )))
            }
        };
        Ok(Self { scheme, n, topology })
    }

    /// Encoding matching `topology`, or an error if it fits neither scheme.
    pub fn for_topology(scheme: Scheme, topology: Topology) -> Result<Self> {
        let n = match scheme {
            Scheme::WithAux => topology.size.trailing_zeros() as usize,
            Scheme::NoAux => 2,
        };
        let enc = Self::new(scheme, n)?;
        if enc.topology != topology {
            return Err(Error::SchemeMismatch(format!(
                "{scheme} expects {:?}, got {topology:?}",
                enc.topology
            )));
        }
        Ok(enc)
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    /// Number of qubits stored in the position register.
    pub fn path_qubits(&self) -> usize {
        match self.scheme {
            Scheme::WithAux => self.n,
            Scheme::NoAux => self.n - 1,
        }
    }

    /// Path-register value carried by `vertex`, most significant path qubit first.
    pub fn label_of_vertex(&self, vertex: usize) -> usize {
        match self.scheme {
            Scheme::WithAux => gray_label(vertex),
            Scheme::NoAux => vertex,
        }
    }

    pub fn vertex_of_label(&self, label: usize) -> usize {
        match self.scheme {
            Scheme::WithAux => vertex_of_gray_label(label),
            Scheme::NoAux => label,
        }
    }

    /// Bit string (`x₁` first) printed for a path-register value.
    pub fn label_string(&self, label: usize) -> String {
        let width = self.path_qubits();
        (0..width)
            .map(|k| if (label >> (width - 1 - k)) & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Working-register input `x` read from basis state `|coin⟩|vertex⟩`.
    pub fn input_of(&self, coin: usize, vertex: usize) -> usize {
        match self.scheme {
            Scheme::WithAux => self.label_of_vertex(vertex),
            Scheme::NoAux => (coin << self.path_qubits()) | self.label_of_vertex(vertex),
        }
    }

    /// Walk index `coin * size + vertex` to the textbook circuit index:
    /// `|x⟩|q_a⟩ ↦ 2x + q_a` with an auxiliary, `|x⟩ ↦ x` without.
    pub fn circuit_index(&self, walk_index: usize) -> usize {
        let size = self.topology.size;
        let (coin, vertex) = (walk_index / size, walk_index % size);
        match self.scheme {
            Scheme::WithAux => (self.label_of_vertex(vertex) << 1) | coin,
            Scheme::NoAux => self.input_of(coin, vertex),
        }
    }

    pub fn walk_index(&self, circuit_index: usize) -> usize {
        match self.scheme {
            Scheme::WithAux => {
                let coin = circuit_index & 1;
                let vertex = self.vertex_of_label(circuit_index >> 1);
                self.topology.index(coin, vertex)
            }
            Scheme::NoAux => {
                let coin = circuit_index >> self.path_qubits();
                let label = circuit_index & ((1 << self.path_qubits()) - 1);
                self.topology.index(coin, self.vertex_of_label(label))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_bit_cycle_order() {
        let enc = Encoding::new(Scheme::WithAux, 2).unwrap();
        let labels: Vec<_> = (0..4).map(|v| enc.label_string(enc.label_of_vertex(v))).collect();
        assert_eq!(labels, ["00", "01", "11", "10"]);
    }

    #[test]
    fn gray_neighbours_differ_in_one_bit() {
        for n in 1..=MAX_WALK_BITS {
            let size = 1usize << n;
            for v in 0..size {
                let d = gray_label(v) ^ gray_label((v + 1) % size);
                assert_eq!(d.count_ones(), 1);
                assert_eq!(vertex_of_gray_label(gray_label(v)), v);
            }
        }
    }

    #[test]
    fn index_maps_are_inverse() {
        for scheme in Scheme::ALL {
            let enc = Encoding::new(scheme, 2).unwrap();
            let mut seen = vec![false; enc.topology().dim()];
            for w in 0..enc.topology().dim() {
                let c = enc.circuit_index(w);
                assert!(!seen[c]);
                seen[c] = true;
                assert_eq!(enc.walk_index(c), w);
            }
        }
    }

    #[test]
    fn scheme_topologies() {
        assert_eq!(Scheme::WithAux.topology(), Topology::closed_cycle(4).unwrap());
        assert_eq!(Scheme::NoAux.topology(), Topology::open_line(2).unwrap());
        assert!(Encoding::new(Scheme::NoAux, 3).is_err());
        assert!(Encoding::for_topology(Scheme::NoAux, Topology::closed_cycle(4).unwrap()).is_err());
        assert_eq!("no-aux".parse::<Scheme>().unwrap(), Scheme::NoAux);
    }
}
