//! Dense complex matrices that are checked to be unitary on construction.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Max-abs tolerance for `U†U = I`.
pub const UNITARY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    matrix: DMatrix<Complex64>,
}

impl Unitary {
    /// Wraps `matrix`, rejecting non-square or non-unitary input.
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        Self::with_tolerance(matrix, UNITARY_TOL)
    }

    pub fn with_tolerance(matrix: DMatrix<Complex64>, tol: f64) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                actual: matrix.ncols(),
            });
        }
        if matrix.nrows() == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        let deviation = unitarity_deviation(&matrix);
        if deviation > tol {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { matrix })
    }

    /// Builds a matrix from row-major entries.
    pub fn from_rows(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        Self::new(DMatrix::from_row_slice(dim, dim, entries))
    }

    /// Builds a matrix column by column. Used when the columns are images of
    /// basis vectors under an evolution that is already known to be unitary.
    pub(crate) fn from_columns(dim: usize, columns: &[Vec<Complex64>]) -> Result<Self> {
        let mut matrix = DMatrix::zeros(dim, dim);
        for (j, col) in columns.iter().enumerate() {
            for (i, z) in col.iter().enumerate() {
                matrix[(i, j)] = *z;
            }
        }
        Self::new(matrix)
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: DMatrix::identity(dim, dim),
        }
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let dim = perm.len();
        let mut seen = vec![false; dim];
        let mut matrix = DMatrix::zeros(dim, dim);
        for (j, &i) in perm.iter().enumerate() {
            if i >= dim || seen[i] {
                return Err(Error::InvalidCircuit(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[i] = true;
            matrix[(i, j)] = Complex64::new(1.0, 0.0);
        }
        Ok(Self { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    /// `self · other`, i.e. `other` acts first.
    pub fn compose(&self, other: &Unitary) -> Result<Unitary> {
        self.check_dim(other)?;
        Ok(Self {
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn kron(&self, other: &Unitary) -> Unitary {
        Self {
            matrix: self.matrix.kronecker(&other.matrix),
        }
    }

    pub fn adjoint(&self) -> Unitary {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    /// `e^{iφ} · self`.
    pub fn with_phase(&self, phi: f64) -> Unitary {
        let phase = Complex64::from_polar(1.0, phi);
        Self {
            matrix: self.matrix.map(|z| z * phase),
        }
    }

    pub fn determinant(&self) -> Complex64 {
        self.matrix.clone().determinant()
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: v.len(),
            });
        }
        let n = self.dim();
        Ok((0..n)
            .map(|i| (0..n).map(|j| self.matrix[(i, j)] * v[j]).sum())
            .collect())
    }

    pub fn unitarity_deviation(&self) -> f64 {
        unitarity_deviation(&self.matrix)
    }

    pub fn max_abs_diff(&self, other: &Unitary) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Row-major copy of the entries.
    pub fn to_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.matrix[(i, j)]).collect())
            .collect()
    }

    fn check_dim(&self, other: &Unitary) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(())
    }
}

fn unitarity_deviation(m: &DMatrix<Complex64>) -> f64 {
    let product = m.adjoint() * m;
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((product[(i, j)] - Complex64::new(target, 0.0)).norm());
        }
    }
    worst
}

// JSON form: {"dim": n, "entries": [[[re, im], ...], ...]} (row-major).
impl Serialize for Unitary {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Unitary", 2)?;
        s.serialize_field("dim", &self.dim())?;
        s.serialize_field("entries", &self.to_rows())?;
        s.end()
    }
}

#[derive(Deserialize)]
struct RawUnitary {
    dim: usize,
    entries: Vec<Vec<Complex64>>,
}

impl<'de> Deserialize<'de> for Unitary {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawUnitary::deserialize(deserializer)?;
        if raw.entries.len() != raw.dim || raw.entries.iter().any(|r| r.len() != raw.dim) {
            return Err(serde::de::Error::custom("entries do not match dim"));
        }
        let flat: Vec<Complex64> = raw.entries.into_iter().flatten().collect();
        Unitary::from_rows(raw.dim, &flat).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_non_unitary() {
        let err = Unitary::from_rows(2, &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(err, Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn rejects_wrong_entry_count() {
        let err = Unitary::from_rows(2, &[c(1.0, 0.0)]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn permutation_maps_columns() {
        let p = Unitary::permutation(&[2, 0, 1]).unwrap();
        let out = p.apply(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(out[2], c(1.0, 0.0));
        assert!(Unitary::permutation(&[0, 0, 1]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = 0.5f64.sqrt();
        let h = Unitary::from_rows(2, &[c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0)]).unwrap();
        let text = serde_json::to_string(&h).unwrap();
        assert!(text.starts_with("{\"dim\":2,\"entries\":[[["));
        let back: Unitary = serde_json::from_str(&text).unwrap();
        assert_eq!(back, h);
    }
}
