use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::component::OpticalComponent;
use crate::error::{Error, Result};
use crate::walk::{Unitary, NORM_TOL};

/// Stages of optical components; components within a stage act on
/// disjoint modes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCircuit")]
pub struct PhotonicCircuit {
    n_modes: usize,
    stages: Vec<Vec<OpticalComponent>>,
}

#[derive(Deserialize)]
struct RawCircuit {
    n_modes: usize,
    stages: Vec<Vec<OpticalComponent>>,
}

impl TryFrom<RawCircuit> for PhotonicCircuit {
    type Error = Error;

    fn try_from(raw: RawCircuit) -> Result<Self> {
        PhotonicCircuit::new(raw.n_modes, raw.stages)
    }
}

impl PhotonicCircuit {
    pub fn new(n_modes: usize, stages: Vec<Vec<OpticalComponent>>) -> Result<Self> {
        if n_modes == 0 {
            return Err(Error::InvalidCircuit("circuit needs at least one mode".into()));
        }
        for (s, stage) in stages.iter().enumerate() {
            let mut used = vec![false; n_modes];
            for component in stage {
                component.validate(n_modes)?;
                for m in component.modes(n_modes) {
                    if std::mem::replace(&mut used[m], true) {
                        return Err(Error::InvalidCircuit(format!(
                            "stage {s} uses mode {m} more than once"
                        )));
                    }
                }
            }
        }
        Ok(Self { n_modes, stages })
    }

    pub fn empty(n_modes: usize) -> Result<Self> {
        Self::new(n_modes, Vec::new())
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn stages(&self) -> &[Vec<OpticalComponent>] {
        &self.stages
    }

    pub fn components(&self) -> impl Iterator<Item = &OpticalComponent> {
        self.stages.iter().flatten()
    }

    /// Copy with every HWP angle offset by `delta` radians.
    pub fn with_hwp_offset(&self, delta: f64) -> PhotonicCircuit {
        let stages = self
            .stages
            .iter()
            .map(|stage| {
                stage
                    .iter()
                    .map(|c| match c {
                        OpticalComponent::Hwp { alpha, mode } => OpticalComponent::Hwp {
                            alpha: alpha + delta,
                            mode: *mode,
                        },
                        other => other.clone(),
                    })
                    .collect()
            })
            .collect();
        Self {
            n_modes: self.n_modes,
            stages,
        }
    }
}

/// Single-photon state, flat index `polarization * n_modes + mode` with
/// `H = 0`, `V = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhotonState {
    n_modes: usize,
    amplitudes: Vec<Complex64>,
}

impl PhotonState {
    pub fn new(n_modes: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != 2 * n_modes {
            return Err(Error::DimensionMismatch {
                expected: 2 * n_modes,
                actual: amplitudes.len(),
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self {
            n_modes,
            amplitudes,
        })
    }

    pub fn basis(n_modes: usize, polarization: usize, mode: usize) -> Result<Self> {
        if polarization > 1 || mode >= n_modes {
            return Err(Error::InvalidCircuit(format!(
                "no basis state ({polarization}, {mode}) with {n_modes} modes"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 2 * n_modes];
        amplitudes[polarization * n_modes + mode] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_modes,
            amplitudes,
        })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|z| z.norm_sqr()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// State after each stage; the first entry is the input.
pub fn simulate_photonic_traced(circuit: &PhotonicCircuit, input: &PhotonState) -> Result<Vec<PhotonState>> {
    if input.n_modes != circuit.n_modes {
        return Err(Error::DimensionMismatch {
            expected: circuit.n_modes,
            actual: input.n_modes,
        });
    }
    let mut trace = vec![input.clone()];
    let mut amps = input.amplitudes.clone();
    for stage in &circuit.stages {
        for component in stage {
            component.apply(&mut amps, circuit.n_modes);
        }
        trace.push(PhotonState {
            n_modes: circuit.n_modes,
            amplitudes: amps.clone(),
        });
    }
    Ok(trace)
}

pub fn simulate_photonic(circuit: &PhotonicCircuit, input: &PhotonState) -> Result<PhotonState> {
    Ok(simulate_photonic_traced(circuit, input)?
        .pop()
        .expect("trace holds the input"))
}

/// The circuit's operator on polarization ⊗ modes.
pub fn induced_unitary(circuit: &PhotonicCircuit) -> Result<Unitary> {
    let n = circuit.n_modes;
    let mut rows = vec![Complex64::new(0.0, 0.0); 4 * n * n];
    for pol in 0..2 {
        for mode in 0..n {
            let col = pol * n + mode;
            let out = simulate_photonic(circuit, &PhotonState::basis(n, pol, mode)?)?;
            for (row, z) in out.amplitudes.iter().enumerate() {
                rows[row * 2 * n + col] = *z;
            }
        }
    }
    Unitary::from_rows(2 * n, &rows)
}

/// Physical element tally. Mode permuters are path relabelings and are not
/// counted; neither are sources and detectors.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCount {
    pub hwp: usize,
    pub bs: usize,
    pub phase_shifter: usize,
    pub pbs: usize,
}

impl ComponentCount {
    pub fn total(&self) -> usize {
        self.hwp + self.bs + self.phase_shifter + self.pbs
    }
}

pub fn count_components(circuit: &PhotonicCircuit) -> ComponentCount {
    let mut count = ComponentCount::default();
    for component in circuit.components() {
        match component {
            OpticalComponent::Hwp { .. } => count.hwp += 1,
            OpticalComponent::Bs { .. } => count.bs += 1,
            OpticalComponent::PhaseShifter { .. } => count.phase_shifter += 1,
            OpticalComponent::Pbs { .. } => count.pbs += 1,
            OpticalComponent::ModePermuter { .. } => {}
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::photonic::component::pbs;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn empty_circuit_is_identity() {
        let c = PhotonicCircuit::empty(3).unwrap();
        let input = PhotonState::basis(3, 1, 2).unwrap();
        assert_eq!(simulate_photonic(&c, &input).unwrap(), input);
        assert_eq!(count_components(&c), ComponentCount::default());
    }

    #[test]
    fn x_plate_turns_h_into_v() {
        let c = PhotonicCircuit::new(4, vec![vec![OpticalComponent::Hwp { alpha: FRAC_PI_4, mode: 0 }]]).unwrap();
        let out = simulate_photonic(&c, &PhotonState::basis(4, 0, 0).unwrap()).unwrap();
        assert!((out.amplitudes()[4] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn stage_disjointness_enforced() {
        let clash = vec![vec![
            OpticalComponent::Hwp { alpha: 0.0, mode: 1 },
            OpticalComponent::Bs { mode_a: 0, mode_b: 1 },
        ]];
        assert!(PhotonicCircuit::new(2, clash).is_err());
        let permuter_plus = vec![vec![
            OpticalComponent::ModePermuter { permutation: vec![1, 0] },
            OpticalComponent::PhaseShifter { phi: 1.0, mode: 0 },
        ]];
        assert!(PhotonicCircuit::new(2, permuter_plus).is_err());
    }

    #[test]
    fn json_shape_and_validation() {
        let c = PhotonicCircuit::new(2, vec![vec![OpticalComponent::Bs { mode_a: 0, mode_b: 1 }]]).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"n_modes":2,"stages":[[{"kind":"bs","mode_a":0,"mode_b":1}]]}"#);
        assert_eq!(serde_json::from_str::<PhotonicCircuit>(&text).unwrap(), c);
        let bad = r#"{"n_modes":2,"stages":[[{"kind":"hwp","alpha":0.5,"mode":2}]]}"#;
        assert!(serde_json::from_str::<PhotonicCircuit>(bad).is_err());
    }

    #[test]
    fn permuters_are_not_counted() {
        let base = vec![vec![OpticalComponent::Hwp { alpha: 0.1, mode: 0 }, pbs(1, 2).unwrap()]];
        let mut with_perm = base.clone();
        with_perm.push(vec![OpticalComponent::ModePermuter { permutation: vec![2, 0, 1] }]);
        let a = count_components(&PhotonicCircuit::new(3, base).unwrap());
        let b = count_components(&PhotonicCircuit::new(3, with_perm).unwrap());
        assert_eq!(a, b);
        assert_eq!(a, ComponentCount { hwp: 1, bs: 0, phase_shifter: 0, pbs: 1 });
    }

    fn arb_component(n: usize) -> impl Strategy<Value = OpticalComponent> {
        let pair = (0..n, 0..n).prop_filter("distinct", |(a, b)| a != b);
        prop_oneof![
            (-3.0f64..3.0, 0..n).prop_map(|(alpha, mode)| OpticalComponent::Hwp { alpha, mode }),
            pair.clone().prop_map(|(mode_a, mode_b)| OpticalComponent::Bs { mode_a, mode_b }),
            (-3.0f64..3.0, 0..n).prop_map(|(phi, mode)| OpticalComponent::PhaseShifter { phi, mode }),
            pair.prop_map(|(mode_a, mode_b)| OpticalComponent::Pbs { mode_a, mode_b }),
            Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|permutation| OpticalComponent::ModePermuter { permutation }),
        ]
    }

    proptest! {
        #[test]
        fn every_stage_preserves_norm(
            components in proptest::collection::vec(arb_component(4), 1..12),
            pol in 0usize..2, mode in 0usize..4,
        ) {
            let circuit = PhotonicCircuit::new(4, components.into_iter().map(|c| vec![c]).collect()).unwrap();
            let trace = simulate_photonic_traced(&circuit, &PhotonState::basis(4, pol, mode).unwrap()).unwrap();
            for s in trace {
                prop_assert!((s.norm_sqr() - 1.0).abs() <= NORM_TOL);
            }
            prop_assert!(induced_unitary(&circuit).is_ok());
        }
    }
}
