use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest input width accepted anywhere in the crate.
pub const MAX_BITS: usize = 20;

/// Truth table of `f: {0,1}ⁿ → {0,1}`. Entry `x` is `f(x₁…xₙ)` with `x₁`
/// the most significant bit of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFn")]
pub struct BooleanFn {
    n: usize,
    table: Vec<u8>,
}

#[derive(Deserialize)]
struct RawFn {
    n: usize,
    table: Vec<u8>,
}

impl TryFrom<RawFn> for BooleanFn {
    type Error = Error;

    fn try_from(raw: RawFn) -> Result<Self> {
        BooleanFn::new(raw.n, raw.table)
    }
}

impl BooleanFn {
    pub fn new(n: usize, table: Vec<u8>) -> Result<Self> {
        if n == 0 || n > MAX_BITS {
            return Err(Error::InvalidFunction(format!("n must be in 1..={MAX_BITS}, got {n}")));
        }
        if table.len() != 1 << n {
            return Err(Error::InvalidFunction(format!(
                "table must have 2^{n} = {} entries, got {}",
                1 << n,
                table.len()
            )));
        }
        if let Some(bad) = table.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidFunction(format!("table entry {bad} is not a bit")));
        }
        Ok(Self { n, table })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> u8) -> Result<Self> {
        if n == 0 || n > MAX_BITS {
            return Err(Error::InvalidFunction(format!("n must be in 1..={MAX_BITS}, got {n}")));
        }
        Self::new(n, (0..1usize << n).map(f).collect())
    }

    pub fn constant(n: usize, value: u8) -> Result<Self> {
        Self::from_fn(n, |_| value)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn eval(&self, x: usize) -> u8 {
        self.table[x]
    }

    /// Bit `k` (0-based from `x₁`) of input `x`.
    pub fn input_bit(&self, x: usize, k: usize) -> u8 {
        ((x >> (self.n - 1 - k)) & 1) as u8
    }

    pub fn ones(&self) -> usize {
        self.table.iter().filter(|&&b| b == 1).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FnClass {
    Constant,
    Balanced,
    Neither,
}

impl fmt::Display for FnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FnClass::Constant => "constant",
            FnClass::Balanced => "balanced",
            FnClass::Neither => "neither",
        })
    }
}

pub fn classify_fn(f: &BooleanFn) -> FnClass {
    let ones = f.ones();
    if ones == 0 || ones == f.table.len() {
        FnClass::Constant
    } else if 2 * ones == f.table.len() {
        FnClass::Balanced
    } else {
        FnClass::Neither
    }
}

/// Roman-numeral names, formulas and truth tables of the eight constant or
/// balanced two-bit functions, rows ordered (0,0), (0,1), (1,0), (1,1).
pub const TWO_BIT_FUNCTIONS: [(&str, &str, [u8; 4]); 8] = [
    ("i", "0", [0, 0, 0, 0]),
    ("ii", "1", [1, 1, 1, 1]),
    ("iii", "x1", [0, 0, 1, 1]),
    ("iv", "x2", [0, 1, 0, 1]),
    ("v", "not x1", [1, 1, 0, 0]),
    ("vi", "not x2", [1, 0, 1, 0]),
    ("vii", "x1 xor x2", [0, 1, 1, 0]),
    ("viii", "not (x1 xor x2)", [1, 0, 0, 1]),
];

pub fn two_bit_catalogue() -> Vec<(&'static str, BooleanFn)> {
    TWO_BIT_FUNCTIONS
        .iter()
        .map(|(name, _, table)| (*name, BooleanFn::new(2, table.to_vec()).expect("valid table")))
        .collect()
}

pub fn catalogue_function(name: &str) -> Option<BooleanFn> {
    two_bit_catalogue()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f)
}

/// Hidden string `s₁…sₙ` of a Bernstein-Vazirani instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HiddenString {
    bits: Vec<u8>,
}

impl HiddenString {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() || bits.len() > MAX_BITS {
            return Err(Error::InvalidHiddenString(format!(
                "length must be in 1..={MAX_BITS}"
            )));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidHiddenString("bits must be 0 or 1".into()));
        }
        Ok(Self { bits })
    }

    /// String whose bits are the binary digits of `value` (width `n`, `s₁` first).
    pub fn from_index(n: usize, value: usize) -> Result<Self> {
        Self::new((0..n).map(|k| ((value >> (n - 1 - k)) & 1) as u8).collect())
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `s` read as an integer with `s₁` most significant.
    pub fn index(&self) -> usize {
        self.bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
    }

    /// `f(x) = x·s mod 2`.
    pub fn to_function(&self) -> BooleanFn {
        let mask = self.index();
        BooleanFn::from_fn(self.len(), |x| ((x & mask).count_ones() % 2) as u8)
            .expect("length validated on construction")
    }
}

impl FromStr for HiddenString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidHiddenString(format!(
                    "'{other}' is not a binary digit"
                ))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(bits)
    }
}

impl fmt::Display for HiddenString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The four two-bit hidden strings paired with the catalogue function they
/// induce.
pub const BV_STRINGS: [(&str, &str); 4] = [("00", "i"), ("01", "iv"), ("10", "iii"), ("11", "vii")];
