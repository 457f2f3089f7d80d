//! Hadamard layers built from coin and shift steps.
//!
//! A Hadamard on a path qubit is `SWAP · H_coin · SWAP`, where the swap of
//! the coin with that path qubit is a basis permutation. The permutation is
//! realised by the shortest word over steps of the form "X coin on a subset
//! of vertices, then one shift", found by breadth-first search over the
//! group those steps generate. The search is exhaustive, so it is only run
//! on spaces of dimension at most [`MAX_SYNTH_DIM`].

use std::collections::{HashMap, VecDeque};
use std::sync::{Mutex, OnceLock};

use super::encoding::{Encoding, Scheme};
use crate::error::{Error, Result};
use crate::walk::{
    coins, shift_target, Segment, SegmentKind, Shift, Topology, WalkProgram, WalkStep,
};

pub const MAX_SYNTH_DIM: usize = 8;

const SHIFTS: [Shift; 5] = [
    Shift::None,
    Shift::Plus(0),
    Shift::Minus(0),
    Shift::Plus(1),
    Shift::Minus(1),
];

type Perm = Vec<u8>;

struct Generator {
    flip_mask: usize,
    shift: Shift,
    perm: Perm,
}

fn generators(topology: Topology) -> Vec<Generator> {
    let n = topology.size;
    let mut seen: Vec<Perm> = vec![(0..topology.dim() as u8).collect()];
    let mut out = Vec::new();
    for shift in SHIFTS {
        for flip_mask in 0..1usize << n {
            let mut perm = vec![0u8; topology.dim()];
            let mut valid = true;
            for coin in 0..2usize {
                for l in 0..n {
                    let flipped = coin ^ ((flip_mask >> l) & 1);
                    match shift_target(shift, topology, flipped as u8, l) {
                        Some(t) => perm[topology.index(coin, l)] = topology.index(flipped, t) as u8,
                        None => valid = false,
                    }
                }
            }
            if valid && !seen.contains(&perm) {
                seen.push(perm.clone());
                out.push(Generator {
                    flip_mask,
                    shift,
                    perm,
                });
            }
        }
    }
    out
}

/// Permutation of at most 8 points, one nibble per image.
fn pack(images: impl Iterator<Item = u8>) -> u32 {
    images.enumerate().fold(0, |acc, (i, t)| acc | (t as u32) << (4 * i))
}

fn nibble(packed: u32, i: usize) -> u8 {
    ((packed >> (4 * i)) & 0xf) as u8
}

fn step_of(g: &Generator) -> WalkStep {
    WalkStep::position_coins(
        (0..usize::BITS as usize)
            .filter(|l| (g.flip_mask >> l) & 1 == 1)
            .map(|l| (l, coins::pauli_x())),
    )
    .with_shift(g.shift)
}

/// Shortest step word whose operator is the permutation sending basis index
/// `j` to `target[j]`.
pub fn synthesize_permutation(topology: Topology, target: &[usize]) -> Result<Vec<WalkStep>> {
    let dim = topology.dim();
    if target.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: target.len(),
        });
    }
    if dim > MAX_SYNTH_DIM {
        return Err(Error::Unsupported(format!(
            "permutation synthesis is limited to dimension {MAX_SYNTH_DIM}, got {dim}"
        )));
    }
    let gens = generators(topology);
    let goal = pack(target.iter().map(|&t| t as u8));
    let start = pack(0..dim as u8);
    let apply = |p: u32, g: &Generator| pack((0..dim).map(|i| g.perm[nibble(p, i) as usize]));

    let mut parent: HashMap<u32, (u32, usize)> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    let mut found = start == goal;
    'search: while let Some(current) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let next = apply(current, g);
            if next != start && !parent.contains_key(&next) {
                parent.insert(next, (current, gi));
                if next == goal {
                    found = true;
                    break 'search;
                }
                queue.push_back(next);
            }
        }
    }
    if found {
        let mut word = Vec::new();
        let mut node = goal;
        while let Some(&(prev, g)) = parent.get(&node) {
            word.push(step_of(&gens[g]));
            node = prev;
        }
        word.reverse();
        return Ok(word);
    }
    Err(Error::Unsupported(format!(
        "permutation {target:?} is not generated by coin flips and shifts on {topology:?}"
    )))
}

/// Basis permutation exchanging the coin with path qubit `k` (0 = most
/// significant path qubit).
pub fn coin_path_swap_permutation(encoding: &Encoding, k: usize) -> Vec<usize> {
    let topology = encoding.topology();
    let bit = encoding.path_qubits() - 1 - k;
    let mut perm = vec![0; topology.dim()];
    for coin in 0..2 {
        for v in 0..topology.size {
            let label = encoding.label_of_vertex(v);
            let path_bit = (label >> bit) & 1;
            let new_label = (label & !(1 << bit)) | (coin << bit);
            perm[topology.index(coin, v)] =
                topology.index(path_bit, encoding.vertex_of_label(new_label));
        }
    }
    perm
}

fn swap_word(encoding: &Encoding, k: usize) -> Result<Vec<WalkStep>> {
    type Cache = Mutex<HashMap<(Topology, Vec<usize>), Vec<WalkStep>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let target = coin_path_swap_permutation(encoding, k);
    let key = (encoding.topology(), target);
    let cache = CACHE.get_or_init(Default::default);
    if let Some(word) = cache.lock().expect("cache lock").get(&key) {
        return Ok(word.clone());
    }
    let word = synthesize_permutation(key.0, &key.1)?;
    cache.lock().expect("cache lock").insert(key, word.clone());
    Ok(word)
}

/// Vertex pairs `(label with bit k = 0, label with bit k = 1)` mixed by a
/// Hadamard on path qubit `k`.
pub fn path_qubit_pairs(encoding: &Encoding, k: usize) -> Vec<(usize, usize)> {
    let bit = encoding.path_qubits() - 1 - k;
    (0..1usize << encoding.path_qubits())
        .filter(|label| (label >> bit) & 1 == 0)
        .map(|label| {
            (
                encoding.vertex_of_label(label),
                encoding.vertex_of_label(label | (1 << bit)),
            )
        })
        .collect()
}

pub fn path_hadamard_segment(encoding: &Encoding, k: usize) -> Result<Segment> {
    let swap = swap_word(encoding, k)?;
    let mut steps = swap.clone();
    steps.push(WalkStep::uniform_coin(&coins::hadamard(), encoding.topology().size));
    steps.extend(swap);
    Ok(Segment {
        label: format!("hadamard/path q{}", k + 1),
        kind: SegmentKind::PositionHadamard {
            pairs: path_qubit_pairs(encoding, k),
        },
        steps,
    })
}

pub fn coin_hadamard_segment(encoding: &Encoding) -> Segment {
    Segment::generic(
        "hadamard/coin",
        vec![WalkStep::uniform_coin(&coins::hadamard(), encoding.topology().size)],
    )
}

/// Hadamard on every path qubit.
pub fn position_hadamard_layer(scheme: Scheme, topology: Topology) -> Result<WalkProgram> {
    let encoding = Encoding::for_topology(scheme, topology)?;
    let mut program = WalkProgram::new();
    for k in 0..encoding.path_qubits() {
        program.push(path_hadamard_segment(&encoding, k)?);
    }
    Ok(program)
}

/// Hadamard on the coin and on every path qubit.
pub fn hadamard_layer(scheme: Scheme, topology: Topology) -> Result<WalkProgram> {
    let encoding = Encoding::for_topology(scheme, topology)?;
    let mut program = WalkProgram::new();
    program.push(coin_hadamard_segment(&encoding));
    program.extend(position_hadamard_layer(scheme, topology)?);
    Ok(program)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::compare::oracles_equivalent;
    use crate::algorithms::oracle::to_circuit_basis;
    use crate::walk::{program_operator, Unitary};

    fn textbook_hadamard(qubits: usize) -> Unitary {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let h = Unitary::from_rows(
            2,
            &[s, s, s, -s].map(|x| num_complex::Complex64::new(x, 0.0)),
        )
        .unwrap();
        (1..qubits).fold(h.clone(), |acc, _| acc.kron(&h))
    }

    #[test]
    fn swap_words_realise_their_permutation() {
        for scheme in Scheme::ALL {
            let enc = Encoding::new(scheme, 2).unwrap();
            for k in 0..enc.path_qubits() {
                let target = coin_path_swap_permutation(&enc, k);
                let word = swap_word(&enc, k).unwrap();
                let op = program_operator(&WalkProgram::from_steps("swap", word), enc.topology())
                    .unwrap();
                let expected = Unitary::permutation(&target).unwrap();
                assert!(op.max_abs_diff(&expected).unwrap() < 1e-15, "{scheme} q{k}");
            }
        }
    }

    #[test]
    fn no_aux_swap_is_two_steps() {
        let enc = Encoding::new(Scheme::NoAux, 2).unwrap();
        assert_eq!(swap_word(&enc, 0).unwrap().len(), 2);
    }

    #[test]
    fn layers_equal_textbook_hadamards() {
        // Circuit ordering puts every qubit in a tensor factor: with-aux is
        // |x₁ x₂⟩|q_a⟩ (3 qubits), no-aux is |x₁ x₂⟩ (2 qubits).
        for (scheme, qubits) in [(Scheme::WithAux, 3), (Scheme::NoAux, 2)] {
            let enc = Encoding::new(scheme, 2).unwrap();
            let layer = hadamard_layer(scheme, enc.topology()).unwrap();
            let op = to_circuit_basis(&program_operator(&layer, enc.topology()).unwrap(), &enc)
                .unwrap();
            assert!(oracles_equivalent(&op, &textbook_hadamard(qubits)).unwrap(), "{scheme}");
        }
    }

    #[test]
    fn with_aux_position_layer_leaves_coin_alone() {
        let enc = Encoding::new(Scheme::WithAux, 2).unwrap();
        let layer = position_hadamard_layer(Scheme::WithAux, enc.topology()).unwrap();
        let op = to_circuit_basis(&program_operator(&layer, enc.topology()).unwrap(), &enc).unwrap();
        let expected = textbook_hadamard(2).kron(&Unitary::identity(2));
        assert!(oracles_equivalent(&op, &expected).unwrap());
    }

    #[test]
    fn layer_squares_to_identity() {
        for scheme in Scheme::ALL {
            let topo = scheme.topology();
            let layer = hadamard_layer(scheme, topo).unwrap();
            let op = program_operator(&layer.clone().concat(layer), topo).unwrap();
            assert!(oracles_equivalent(&op, &Unitary::identity(topo.dim())).unwrap());
        }
    }

    #[test]
    fn inconsistent_scheme_topology() {
        assert!(hadamard_layer(Scheme::WithAux, Topology::open_line(2).unwrap()).is_err());
        assert!(hadamard_layer(Scheme::NoAux, Topology::closed_cycle(4).unwrap()).is_err());
        // Exhaustive search does not scale to the 8-cycle.
        let big = Topology::closed_cycle(8).unwrap();
        assert!(matches!(hadamard_layer(Scheme::WithAux, big), Err(Error::Unsupported(_))));
    }

    #[test]
    fn pairs_follow_gray_labels() {
        let enc = Encoding::new(Scheme::WithAux, 2).unwrap();
        assert_eq!(path_qubit_pairs(&enc, 0), vec![(0, 3), (1, 2)]);
        assert_eq!(path_qubit_pairs(&enc, 1), vec![(0, 1), (3, 2)]);
    }
}
