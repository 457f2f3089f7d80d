//! Equality up to a global phase.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::walk::Unitary;

/// Max-abs tolerance of [`oracles_equivalent`].
pub const EQUIV_TOL: f64 = 1e-10;

/// True iff `a = e^{iφ} b` for some real `φ`, within [`EQUIV_TOL`] max-abs.
/// The phase is read off the first entry (row-major) where `b` is nonzero.
pub fn oracles_equivalent(a: &Unitary, b: &Unitary) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            actual: b.dim(),
        });
    }
    let rows_a = a.to_rows().concat();
    let rows_b = b.to_rows().concat();
    let Some(k) = rows_b.iter().position(|z| z.norm() > EQUIV_TOL) else {
        return Ok(rows_a.iter().all(|z| z.norm() <= EQUIV_TOL));
    };
    let ratio = rows_a[k] / rows_b[k];
    if (ratio.norm() - 1.0).abs() > EQUIV_TOL {
        return Ok(false);
    }
    Ok(max_deviation(&rows_a, &rows_b, ratio) <= EQUIV_TOL)
}

/// Max-abs distance between `a` and `b` after removing the best global phase
/// estimate (taken at the largest entry of `b`).
pub fn global_phase_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let Some((k, _)) = b
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
    else {
        return 0.0;
    };
    let ratio = if b[k].norm() > 0.0 && a[k].norm() > 0.0 {
        let r = a[k] / b[k];
        r / r.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    max_deviation(a, b, ratio)
}

/// [`global_phase_distance`] for operators.
pub fn operator_phase_distance(a: &Unitary, b: &Unitary) -> f64 {
    if a.dim() != b.dim() {
        return f64::INFINITY;
    }
    global_phase_distance(&a.to_rows().concat(), &b.to_rows().concat())
}

fn max_deviation(a: &[Complex64], b: &[Complex64], phase: Complex64) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - phase * y).norm())
        .fold(0.0, f64::max)
}
