//! Optical circuits over path modes ⊗ polarization, and the compiler from
//! walk programs.

mod circuit;
mod compile;
mod component;
mod report;

pub use circuit::{
    count_components, induced_unitary, simulate_photonic, simulate_photonic_traced,
    ComponentCount, PhotonState, PhotonicCircuit,
};
pub use compile::{compile, compile_on, lower_coin, COIN_MATCH_TOL};
pub use component::{bs_matrix, hwp_jones, pbs, OpticalComponent};
pub use report::{
    bv_entries, dj_entries, full_bv_circuit, full_dj_circuit, photonic_bv, photonic_dj,
    photonic_final_walk_state, readout, report_csv, report_json, resource_report, Algorithm,
    ReportEntry, Readout, ResourceRow,
};
