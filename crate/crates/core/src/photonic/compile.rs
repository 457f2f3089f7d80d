use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::circuit::PhotonicCircuit;
use super::component::OpticalComponent;
use crate::algorithms::{operator_phase_distance, Scheme, EQUIV_TOL};
use crate::error::{Error, Result};
use crate::walk::{
    coins, program_operator, shift_target, Segment, SegmentKind, Shift, Topology, Unitary,
    WalkProgram, WalkStep,
};

/// Max-abs tolerance when matching a coin against the shipped alphabet.
pub const COIN_MATCH_TOL: f64 = 1e-12;

/// Optical element realising a coin on one mode; `Ok(None)` for the identity.
pub fn lower_coin(coin: &Unitary, mode: usize) -> Option<Option<OpticalComponent>> {
    let is = |u: Unitary| coin.max_abs_diff(&u).is_ok_and(|d| d <= COIN_MATCH_TOL);
    let hwp = |alpha| Some(Some(OpticalComponent::Hwp { alpha, mode }));
    if is(coins::identity()) {
        Some(None)
    } else if is(coins::pauli_x()) {
        hwp(FRAC_PI_4)
    } else if is(coins::o1()) {
        hwp(0.0)
    } else if is(coins::o2()) {
        hwp(FRAC_PI_2)
    } else if is(coins::hadamard()) {
        hwp(FRAC_PI_8)
    } else if is(coins::o3()) {
        Some(Some(OpticalComponent::PhaseShifter { phi: PI, mode }))
    } else {
        None
    }
}

/// Compiles a two-bit program for `scheme` (4 modes with aux, 2 without).
pub fn compile(program: &WalkProgram, scheme: Scheme) -> Result<PhotonicCircuit> {
    compile_on(program, scheme.topology())
}

/// Compiles a program on any topology; one mode per vertex, polarization
/// carries the coin.
///
/// Step global phases are dropped, so the circuit matches the program up to
/// a global phase.
pub fn compile_on(program: &WalkProgram, topology: Topology) -> Result<PhotonicCircuit> {
    let mut stages = Vec::new();
    let mut step_index = 0;
    for segment in &program.segments {
        match &segment.kind {
            SegmentKind::PositionHadamard { pairs } => {
                check_position_hadamard(segment, pairs, topology)?;
                stages.extend(butterfly(pairs, topology.size));
                step_index += segment.steps.len();
            }
            SegmentKind::Generic => {
                for step in &segment.steps {
                    lower_step(step, step_index, topology, &mut stages)?;
                    step_index += 1;
                }
            }
        }
    }
    PhotonicCircuit::new(topology.size, stages)
}

fn lower_step(
    step: &WalkStep,
    step_index: usize,
    topology: Topology,
    stages: &mut Vec<Vec<OpticalComponent>>,
) -> Result<()> {
    let mut coin_stage = Vec::new();
    for (&position, coin) in &step.coin_map {
        if position >= topology.size {
            return Err(Error::PositionOutOfRange {
                position,
                size: topology.size,
            });
        }
        match lower_coin(coin, position) {
            Some(Some(component)) => coin_stage.push(component),
            Some(None) => {}
            None => {
                return Err(Error::UnsupportedCoin {
                    step: step_index,
                    position,
                })
            }
        }
    }
    if !coin_stage.is_empty() {
        stages.push(coin_stage);
    }
    lower_shift(step.shift, topology, stages)
}

/// A coin-conditioned shift as PBS swaps of the V component. Shifts acting
/// on the H sector are wrapped in HWP(π/4) on every mode.
fn lower_shift(shift: Shift, topology: Topology, stages: &mut Vec<Vec<OpticalComponent>>) -> Result<()> {
    shift.validate()?;
    let Some(coin) = shift.coin() else {
        return Ok(());
    };
    let n = topology.size;
    let mut target = Vec::with_capacity(n);
    for position in 0..n {
        target.push(
            shift_target(shift, topology, coin, position)
                .ok_or(Error::BoundaryViolation { coin, position })?,
        );
    }
    let flip: Vec<_> = (0..n)
        .map(|mode| OpticalComponent::Hwp { alpha: FRAC_PI_4, mode })
        .collect();
    if coin == 0 {
        stages.push(flip.clone());
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut next = target[start];
        while next != start {
            seen[next] = true;
            cycle.push(next);
            next = target[next];
        }
        // c0 → c1 → … → c_k → c0 as swaps (c_{k-1}, c_k), …, (c0, c1).
        for w in cycle.windows(2).rev() {
            stages.push(vec![OpticalComponent::Pbs { mode_a: w[0], mode_b: w[1] }]);
        }
    }
    if coin == 0 {
        stages.push(flip);
    }
    Ok(())
}

fn check_position_hadamard(segment: &Segment, pairs: &[(usize, usize)], topology: Topology) -> Result<()> {
    let mismatch = || Error::SegmentMismatch {
        label: segment.label.clone(),
    };
    let n = topology.size;
    let mut used = vec![false; n];
    for &(a, b) in pairs {
        if a >= n || b >= n || a == b || used[a] || used[b] {
            return Err(mismatch());
        }
        used[a] = true;
        used[b] = true;
    }
    let actual = program_operator(&WalkProgram::from_steps(segment.label.clone(), segment.steps.clone()), topology)?;
    let declared = declared_position_hadamard(pairs, topology)?;
    if operator_phase_distance(&actual, &declared) > EQUIV_TOL {
        return Err(mismatch());
    }
    Ok(())
}

fn declared_position_hadamard(pairs: &[(usize, usize)], topology: Topology) -> Result<Unitary> {
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut m = DMatrix::identity(topology.dim(), topology.dim());
    for coin in 0..2 {
        for &(a, b) in pairs {
            let (ia, ib) = (topology.index(coin, a), topology.index(coin, b));
            m[(ia, ia)] = s;
            m[(ia, ib)] = s;
            m[(ib, ia)] = s;
            m[(ib, ib)] = -s;
        }
    }
    Unitary::new(m)
}

/// BS on each pair; pairs on non-neighbouring paths are first brought
/// together by a mode permuter and returned afterwards.
fn butterfly(pairs: &[(usize, usize)], n_modes: usize) -> Vec<Vec<OpticalComponent>> {
    if pairs.iter().all(|&(a, b)| a.abs_diff(b) == 1) {
        let stage = pairs
            .iter()
            .map(|&(mode_a, mode_b)| OpticalComponent::Bs { mode_a, mode_b })
            .collect();
        return vec![stage];
    }
    let mut permutation = vec![usize::MAX; n_modes];
    let mut stage = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        permutation[a] = 2 * i;
        permutation[b] = 2 * i + 1;
        stage.push(OpticalComponent::Bs { mode_a: 2 * i, mode_b: 2 * i + 1 });
    }
    let unpaired = permutation.iter_mut().filter(|p| **p == usize::MAX);
    for (slot, free) in unpaired.zip(2 * pairs.len()..) {
        *slot = free;
    }
    let mut inverse = vec![0; n_modes];
    for (from, &to) in permutation.iter().enumerate() {
        inverse[to] = from;
    }
    vec![
        vec![OpticalComponent::ModePermuter { permutation }],
        stage,
        vec![OpticalComponent::ModePermuter { permutation: inverse }],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{
        build_oracle, catalogue_function, dj_program, hadamard_layer, BooleanFn, Encoding,
    };
    use crate::photonic::{count_components, induced_unitary, ComponentCount};
    use crate::walk::CoinParams;

    fn oracle_circuit(name: &str, scheme: Scheme) -> PhotonicCircuit {
        let f = catalogue_function(name).unwrap();
        compile(&build_oracle(&f, scheme).unwrap().program, scheme).unwrap()
    }

    #[test]
    fn with_aux_constant_one_oracle_is_four_x_plates() {
        let c = oracle_circuit("ii", Scheme::WithAux);
        assert_eq!(c.stages().len(), 1);
        for (mode, comp) in c.stages()[0].iter().enumerate() {
            assert_eq!(*comp, OpticalComponent::Hwp { alpha: FRAC_PI_4, mode });
        }
        assert_eq!(count_components(&c), ComponentCount { hwp: 4, bs: 0, phase_shifter: 0, pbs: 0 });
    }

    #[test]
    fn no_aux_x2_oracle_is_one_phase_shifter() {
        let f = BooleanFn::from_fn(2, |x| (x & 1) as u8).unwrap();
        let c = compile(&build_oracle(&f, Scheme::NoAux).unwrap().program, Scheme::NoAux).unwrap();
        assert_eq!(c.stages(), &[vec![OpticalComponent::PhaseShifter { phi: PI, mode: 1 }]]);
    }

    #[test]
    fn no_aux_xor_oracle_is_z_plates() {
        let f = BooleanFn::from_fn(2, |x| ((x >> 1) ^ x) as u8 & 1).unwrap();
        let c = compile(&build_oracle(&f, Scheme::NoAux).unwrap().program, Scheme::NoAux).unwrap();
        assert_eq!(
            c.stages(),
            &[vec![
                OpticalComponent::Hwp { alpha: 0.0, mode: 0 },
                OpticalComponent::Hwp { alpha: FRAC_PI_2, mode: 1 },
            ]]
        );
    }

    #[test]
    fn unsupported_coin_is_rejected() {
        let odd = crate::walk::build_coin(CoinParams::new(0.1, 0.2, 0.3, 0.4));
        let program = WalkProgram::from_steps("odd", vec![WalkStep::identity(), WalkStep::position_coins([(1, odd)])]);
        assert_eq!(
            compile(&program, Scheme::NoAux),
            Err(Error::UnsupportedCoin { step: 1, position: 1 })
        );
    }

    #[test]
    fn hadamard_layers_compile_to_matching_beam_splitters() {
        for scheme in Scheme::ALL {
            let topology = scheme.topology();
            let layer = hadamard_layer(scheme, topology).unwrap();
            let circuit = compile(&layer, scheme).unwrap();
            let d = operator_phase_distance(
                &induced_unitary(&circuit).unwrap(),
                &program_operator(&layer, topology).unwrap(),
            );
            assert!(d <= 1e-9, "{scheme}: {d}");
        }
    }

    #[test]
    fn mislabelled_position_hadamard_is_caught() {
        let topology = Scheme::WithAux.topology();
        let mut layer = hadamard_layer(Scheme::WithAux, topology).unwrap();
        for seg in &mut layer.segments {
            if let SegmentKind::PositionHadamard { pairs } = &mut seg.kind {
                pairs.swap(0, 1);
                pairs[0] = (pairs[0].1, pairs[0].0);
            }
        }
        assert!(matches!(compile(&layer, Scheme::WithAux), Err(Error::SegmentMismatch { .. })));
    }

    #[test]
    fn bare_shifts_lower_to_pbs_chains() {
        let cycle = Scheme::WithAux.topology();
        for shift in [Shift::Plus(0), Shift::Plus(1), Shift::Minus(0), Shift::Minus(1)] {
            let program = WalkProgram::from_steps("shift", vec![WalkStep::shift_only(shift)]);
            let circuit = compile(&program, Scheme::WithAux).unwrap();
            assert_eq!(count_components(&circuit).pbs, 3);
            let d = induced_unitary(&circuit)
                .unwrap()
                .max_abs_diff(&program_operator(&program, cycle).unwrap())
                .unwrap();
            assert!(d < 1e-12, "{shift:?}: {d}");
        }
    }

    #[test]
    fn full_programs_match_walk_operators() {
        for (name, f) in crate::algorithms::two_bit_catalogue() {
            for scheme in Scheme::ALL {
                let program = dj_program(&f, scheme).unwrap();
                let topology = Encoding::new(scheme, 2).unwrap().topology();
                let circuit = compile(&program, scheme).unwrap();
                let d = operator_phase_distance(
                    &induced_unitary(&circuit).unwrap(),
                    &program_operator(&program, topology).unwrap(),
                );
                assert!(d <= 1e-9, "{name} {scheme}: {d}");
            }
        }
    }
}
