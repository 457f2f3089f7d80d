//! Oracle synthesis and the DJ/BV drivers.

mod boolean;
mod compare;
mod drivers;
mod encoding;
mod layers;
mod oracle;
mod reference;

pub use boolean::{
    catalogue_function, classify_fn, two_bit_catalogue, BooleanFn, FnClass, HiddenString,
    BV_STRINGS, MAX_BITS, TWO_BIT_FUNCTIONS,
};
pub use compare::{global_phase_distance, operator_phase_distance, oracles_equivalent, EQUIV_TOL};
pub use drivers::{
    dj_final_state, dj_program, initial_state, run_bv, run_dj, run_dj_no_aux, run_dj_with_aux,
    working_distribution, BvOutcome, DjOutcome,
};
pub use encoding::{gray_label, vertex_of_gray_label, Encoding, Scheme, MAX_WALK_BITS};
pub use layers::{
    coin_path_swap_permutation, hadamard_layer, path_qubit_pairs, position_hadamard_layer,
    synthesize_permutation, MAX_SYNTH_DIM,
};
pub use oracle::{
    build_oracle, build_oracle_no_aux, build_oracle_with_aux, no_aux_coin_pattern,
    reference_circuit_oracle, to_circuit_basis, Oracle, PhaseCoin,
};
pub use reference::{brute_force_reference, working_register_probability, MAX_REFERENCE_BITS};
