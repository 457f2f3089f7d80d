//! Single-particle discrete-time quantum walk realisations of the
//! Deutsch-Jozsa and Bernstein-Vazirani algorithms.
//!
//! The crate is layered bottom-up:
//!
//! - [`walk`]: coin and shift operators, walk states and programs on
//!   open lines and closed cycles.
//! - [`algorithms`]: Boolean functions, oracle synthesis (walk-based and
//!   reference circuit-model), the DJ/BV drivers for both encodings and a
//!   brute-force state-vector reference.
//! - [`photonic`]: Jones-calculus optical components, the walk-to-optics
//!   compiler, a photonic simulator and component counting.
//! - [`verify`]: the invariant suites used by the CLI's `verify` command
//!   and by the acceptance tests.
//!
//! Index conventions shared by every module: a walk state over `size`
//! vertices stores amplitude `(coin, position)` at `coin * size + position`,
//! and a photon state over `n_modes` paths stores `(polarization, mode)` at
//! `polarization * n_modes + mode`, with `H ↔ |0⟩` and `V ↔ |1⟩`.

pub mod algorithms;
pub mod error;
pub mod photonic;
pub mod verify;
pub mod walk;

pub use error::{Error, Result};
pub use num_complex::Complex64;
