use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Optical elements acting on `n_modes` paths × {H, V} polarization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OpticalComponent {
    /// Half-wave plate at angle `alpha` to the horizontal, on one mode.
    Hwp { alpha: f64, mode: usize },
    /// 50:50 beam splitter mixing two modes, polarization-independent.
    Bs { mode_a: usize, mode_b: usize },
    /// Multiplies one mode (both polarizations) by `e^{iφ}`.
    PhaseShifter { phi: f64, mode: usize },
    /// Polarizing beam splitter: H is transmitted, V is exchanged between
    /// `mode_a` and `mode_b`.
    Pbs { mode_a: usize, mode_b: usize },
    /// Relabels paths: light in mode `i` leaves in mode `permutation[i]`.
    ModePermuter { permutation: Vec<usize> },
}

/// Jones matrix of a half-wave plate: `[[cos 2α, sin 2α], [sin 2α, -cos 2α]]`.
pub fn hwp_jones(alpha: f64) -> [[f64; 2]; 2] {
    let (s, c) = (2.0 * alpha).sin_cos();
    [[c, s], [s, -c]]
}

/// `[[1, 1], [1, -1]] / √2`.
pub fn bs_matrix() -> [[f64; 2]; 2] {
    [[FRAC_1_SQRT_2, FRAC_1_SQRT_2], [FRAC_1_SQRT_2, -FRAC_1_SQRT_2]]
}

pub fn pbs(mode_a: usize, mode_b: usize) -> Result<OpticalComponent> {
    if mode_a == mode_b {
        return Err(Error::InvalidCircuit(format!("PBS needs two distinct modes, got {mode_a} twice")));
    }
    Ok(OpticalComponent::Pbs { mode_a, mode_b })
}

impl OpticalComponent {
    /// Modes the component touches; a mode permuter touches all of them.
    pub fn modes(&self, n_modes: usize) -> Vec<usize> {
        match self {
            OpticalComponent::Hwp { mode, .. } | OpticalComponent::PhaseShifter { mode, .. } => {
                vec![*mode]
            }
            OpticalComponent::Bs { mode_a, mode_b } | OpticalComponent::Pbs { mode_a, mode_b } => {
                vec![*mode_a, *mode_b]
            }
            OpticalComponent::ModePermuter { .. } => (0..n_modes).collect(),
        }
    }

    pub(crate) fn validate(&self, n_modes: usize) -> Result<()> {
        let in_range = |m: usize| {
            if m < n_modes {
                Ok(())
            } else {
                Err(Error::InvalidCircuit(format!("mode {m} out of range for {n_modes} modes")))
            }
        };
        match self {
            OpticalComponent::Hwp { mode, .. } | OpticalComponent::PhaseShifter { mode, .. } => {
                in_range(*mode)
            }
            OpticalComponent::Bs { mode_a, mode_b } | OpticalComponent::Pbs { mode_a, mode_b } => {
                in_range(*mode_a)?;
                in_range(*mode_b)?;
                if mode_a == mode_b {
                    return Err(Error::InvalidCircuit(format!(
                        "two-mode component uses mode {mode_a} twice"
                    )));
                }
                Ok(())
            }
            OpticalComponent::ModePermuter { permutation } => {
                let mut seen = vec![false; n_modes];
                if permutation.len() != n_modes {
                    return Err(Error::InvalidCircuit("mode permutation has wrong length".into()));
                }
                for &m in permutation {
                    in_range(m)?;
                    if std::mem::replace(&mut seen[m], true) {
                        return Err(Error::InvalidCircuit(format!(
                            "{permutation:?} is not a permutation"
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    /// Applies the component in place to amplitudes laid out as
    /// `polarization * n_modes + mode`.
    pub(crate) fn apply(&self, amps: &mut [Complex64], n_modes: usize) {
        let idx = |pol: usize, mode: usize| pol * n_modes + mode;
        match self {
            OpticalComponent::Hwp { alpha, mode } => {
                let j = hwp_jones(*alpha);
                let (h, v) = (amps[idx(0, *mode)], amps[idx(1, *mode)]);
                amps[idx(0, *mode)] = h * j[0][0] + v * j[0][1];
                amps[idx(1, *mode)] = h * j[1][0] + v * j[1][1];
            }
            OpticalComponent::Bs { mode_a, mode_b } => {
                let m = bs_matrix();
                for pol in 0..2 {
                    let (a, b) = (amps[idx(pol, *mode_a)], amps[idx(pol, *mode_b)]);
                    amps[idx(pol, *mode_a)] = a * m[0][0] + b * m[0][1];
                    amps[idx(pol, *mode_b)] = a * m[1][0] + b * m[1][1];
                }
            }
            OpticalComponent::PhaseShifter { phi, mode } => {
                let phase = Complex64::from_polar(1.0, *phi);
                for pol in 0..2 {
                    amps[idx(pol, *mode)] *= phase;
                }
            }
            OpticalComponent::Pbs { mode_a, mode_b } => {
                amps.swap(idx(1, *mode_a), idx(1, *mode_b));
            }
            OpticalComponent::ModePermuter { permutation } => {
                let before = amps.to_vec();
                for pol in 0..2 {
                    for (m, &to) in permutation.iter().enumerate() {
                        amps[idx(pol, to)] = before[idx(pol, m)];
                    }
                }
            }
        }
    }
}
