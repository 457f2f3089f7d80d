//! Coin-based discrete-time quantum walks on finite 1D graphs.
//!
//! A walk step applies a position-dependent 2×2 coin, an optional global
//! phase, and then a coin-conditioned shift. The coin is the family
//!
//! ```text
//! C(p, q, r, θ) = e^{ip} [[ e^{iq} cos θ,   e^{ir} sin θ ],
//!                         [ -e^{-ir} sin θ, e^{-iq} cos θ ]]
//! ```
//!
//! and the shifts `S₊ᵇ` / `S₋ᵃ` move the walker one vertex right / left when
//! the coin reads `b` / `a`, leaving the other coin sector in place.

mod state;
mod topology;
mod unitary;

pub use state::{
    apply_step, measure_joint, measure_position, program_operator, run_program,
    run_program_traced, step_operator, Segment, SegmentKind, WalkProgram, WalkState, WalkStep,
    NORM_TOL,
};
pub use topology::{build_shift, shift_target, Shift, Topology, TopologyKind};
pub use unitary::{Unitary, UNITARY_TOL};

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// The four real angles of the coin family, in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoinParams {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub theta: f64,
}

impl CoinParams {
    pub const fn new(p: f64, q: f64, r: f64, theta: f64) -> Self {
        Self { p, q, r, theta }
    }
}

pub fn build_coin(params: CoinParams) -> Unitary {
    let CoinParams { p, q, r, theta } = params;
    let global = Complex64::from_polar(1.0, p);
    let (s, c) = theta.sin_cos();
    let m = DMatrix::from_row_slice(
        2,
        2,
        &[
            global * Complex64::from_polar(c, q),
            global * Complex64::from_polar(s, r),
            -global * Complex64::from_polar(s, -r),
            global * Complex64::from_polar(c, -q),
        ],
    );
    Unitary::new(m).expect("coin family is unitary for all real angles")
}

/// Named coins used by the algorithm constructions, each built from its
/// coin-family angles.
pub mod coins {
    use super::*;

    pub const IDENTITY: CoinParams = CoinParams::new(0.0, 0.0, 0.0, 0.0);
    pub const PAULI_X: CoinParams = CoinParams::new(-FRAC_PI_2, 0.0, FRAC_PI_2, FRAC_PI_2);
    /// Hadamard. The sign of `q` is positive; with `q = -π/2` the family
    /// gives `[[-1, 1], [1, 1]]/√2` instead.
    pub const HADAMARD: CoinParams = CoinParams::new(-FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, FRAC_PI_4);
    /// `diag(1, -1)`, also the Pauli-Z coin.
    pub const O1: CoinParams = CoinParams::new(FRAC_PI_2, FRAC_PI_2, 0.0, PI);
    /// `diag(-1, 1)`.
    pub const O2: CoinParams = CoinParams::new(FRAC_PI_2, FRAC_PI_2, 0.0, 0.0);

    pub fn identity() -> Unitary {
        build_coin(IDENTITY)
    }

    pub fn pauli_x() -> Unitary {
        build_coin(PAULI_X)
    }

    pub fn hadamard() -> Unitary {
        build_coin(HADAMARD)
    }

    pub fn o1() -> Unitary {
        build_coin(O1)
    }

    pub fn o2() -> Unitary {
        build_coin(O2)
    }

    /// `e^{iπ} · C(0, 0, 0, 0)`.
    pub fn o3() -> Unitary {
        build_coin(IDENTITY).with_phase(PI)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_matrix(u: &Unitary, expected: [[f64; 2]; 2], tol: f64) {
        for i in 0..2 {
            for j in 0..2 {
                let d = (u.get(i, j) - Complex64::new(expected[i][j], 0.0)).norm();
                assert!(d < tol, "entry ({i},{j}) = {} vs {}", u.get(i, j), expected[i][j]);
            }
        }
    }

    // Independent evaluation of the coin family from its closed form, entry
    // by entry with cos/sin/exp written out.
    fn coin_by_hand(p: f64, q: f64, r: f64, t: f64) -> [[Complex64; 2]; 2] {
        let e = |a: f64| Complex64::new(a.cos(), a.sin());
        [
            [e(p + q) * t.cos(), e(p + r) * t.sin()],
            [-e(p - r) * t.sin(), e(p - q) * t.cos()],
        ]
    }

    #[test]
    fn zero_angles_give_identity() {
        assert_matrix(&build_coin(coins::IDENTITY), [[1.0, 0.0], [0.0, 1.0]], 1e-15);
    }

    #[test]
    fn named_coins() {
        assert_matrix(&coins::pauli_x(), [[0.0, 1.0], [1.0, 0.0]], 1e-15);
        assert_matrix(&coins::o1(), [[1.0, 0.0], [0.0, -1.0]], 1e-15);
        assert_matrix(&coins::o2(), [[-1.0, 0.0], [0.0, 1.0]], 1e-15);
        assert_matrix(&coins::o3(), [[-1.0, 0.0], [0.0, -1.0]], 1e-15);
        let s = 0.5f64.sqrt();
        assert_matrix(&coins::hadamard(), [[s, s], [s, -s]], 1e-15);
    }

    #[test]
    fn negated_q_tuple_is_not_hadamard() {
        let s = 0.5f64.sqrt();
        let flipped = build_coin(CoinParams::new(-FRAC_PI_2, -FRAC_PI_2, FRAC_PI_2, FRAC_PI_4));
        assert_matrix(&flipped, [[-s, s], [s, s]], 1e-15);
        let hand = coin_by_hand(-FRAC_PI_2, -FRAC_PI_2, FRAC_PI_2, FRAC_PI_4);
        assert!((hand[0][0] - Complex64::new(-s, 0.0)).norm() < 1e-15);
        // Not H up to any global phase: H has equal-sign first row.
        let ratio0 = flipped.get(0, 0) / coins::hadamard().get(0, 0);
        let ratio1 = flipped.get(0, 1) / coins::hadamard().get(0, 1);
        assert!((ratio0 - ratio1).norm() > 1.0);
    }

    #[test]
    fn hadamard_tuple_matches_hand_evaluation() {
        let hand = coin_by_hand(-FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, FRAC_PI_4);
        let h = coins::hadamard();
        for i in 0..2 {
            for j in 0..2 {
                assert!((h.get(i, j) - hand[i][j]).norm() < 1e-15);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn coin_is_unitary_with_det_e2ip(
            p in -10.0f64..10.0, q in -10.0f64..10.0,
            r in -10.0f64..10.0, theta in -10.0f64..10.0,
        ) {
            let u = build_coin(CoinParams::new(p, q, r, theta));
            prop_assert!(u.unitarity_deviation() <= 1e-12);
            let det = u.determinant();
            prop_assert!((det - Complex64::from_polar(1.0, 2.0 * p)).norm() <= 1e-12);
            let hand = coin_by_hand(p, q, r, theta);
            for i in 0..2 {
                for j in 0..2 {
                    prop_assert!((u.get(i, j) - hand[i][j]).norm() <= 1e-12);
                }
            }
        }
    }
}
