//! Textbook state-vector DJ/BV, independent of any walk operator.
//!
//! States live in circuit ordering: `|x⟩|y⟩ ↦ 2x + y` with the auxiliary
//! output qubit `y`, or `|x⟩ ↦ x` without one; `x₁` is the most significant
//! bit of `x`.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::boolean::BooleanFn;
use super::encoding::Scheme;
use crate::error::{Error, Result};

pub const MAX_REFERENCE_BITS: usize = 10;

/// Applies `H` to the qubit stored at bit `bit` of the basis index.
fn hadamard_on(state: &mut [Complex64], bit: usize) {
    let mask = 1usize << bit;
    for i in 0..state.len() {
        if i & mask == 0 {
            let (a, b) = (state[i], state[i | mask]);
            state[i] = (a + b) * FRAC_1_SQRT_2;
            state[i | mask] = (a - b) * FRAC_1_SQRT_2;
        }
    }
}

/// Final DJ/BV state before measurement.
pub fn brute_force_reference(scheme: Scheme, f: &BooleanFn) -> Result<Vec<Complex64>> {
    let n = f.n();
    if n > MAX_REFERENCE_BITS {
        return Err(Error::Unsupported(format!(
            "reference simulation is limited to n <= {MAX_REFERENCE_BITS}"
        )));
    }
    let zero = Complex64::new(0.0, 0.0);
    match scheme {
        Scheme::WithAux => {
            let mut state = vec![zero; 2 << n];
            state[1] = Complex64::new(1.0, 0.0);
            for bit in 0..=n {
                hadamard_on(&mut state, bit);
            }
            let before = state.clone();
            for (idx, amp) in state.iter_mut().enumerate() {
                let (x, y) = (idx >> 1, idx & 1);
                *amp = before[(x << 1) | (y ^ f.eval(x) as usize)];
            }
            for bit in 1..=n {
                hadamard_on(&mut state, bit);
            }
            Ok(state)
        }
        Scheme::NoAux => {
            let mut state = vec![zero; 1 << n];
            state[0] = Complex64::new(1.0, 0.0);
            for bit in 0..n {
                hadamard_on(&mut state, bit);
            }
            for (x, amp) in state.iter_mut().enumerate() {
                if f.eval(x) == 1 {
                    *amp = -*amp;
                }
            }
            for bit in 0..n {
                hadamard_on(&mut state, bit);
            }
            Ok(state)
        }
    }
}

/// Probability that the working register reads `x`.
pub fn working_register_probability(scheme: Scheme, state: &[Complex64], x: usize) -> f64 {
    match scheme {
        Scheme::WithAux => state[x << 1].norm_sqr() + state[(x << 1) | 1].norm_sqr(),
        Scheme::NoAux => state[x].norm_sqr(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::boolean::{catalogue_function, HiddenString};
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    // Closed form: |Σ_x (-1)^{f(x)} / 2ⁿ|².
    fn closed_form_p0(f: &BooleanFn) -> f64 {
        let sum: f64 = f.table().iter().map(|&b| if b == 1 { -1.0 } else { 1.0 }).sum();
        (sum / f.table().len() as f64).powi(2)
    }

    #[test]
    fn no_aux_zero_function_returns_to_zero() {
        let s = brute_force_reference(Scheme::NoAux, &BooleanFn::constant(2, 0).unwrap()).unwrap();
        assert!((s[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(s[1..].iter().all(|z| z.norm() < 1e-15));
    }

    #[test]
    fn with_aux_x1_concentrates_on_10() {
        let s = brute_force_reference(Scheme::WithAux, &catalogue_function("iii").unwrap()).unwrap();
        assert!((working_register_probability(Scheme::WithAux, &s, 0b10) - 1.0).abs() < 1e-12);
        // Auxiliary stays in |−⟩.
        let (a0, a1) = (s[0b100], s[0b101]);
        assert!((a0 + a1).norm() < 1e-12 && (a0.norm() - FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn matches_closed_form_for_random_balanced() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=6 {
            let mut table = vec![0u8; 1 << n];
            table[..1 << (n - 1)].fill(1);
            table.shuffle(&mut rng);
            let f = BooleanFn::new(n, table).unwrap();
            for scheme in Scheme::ALL {
                let s = brute_force_reference(scheme, &f).unwrap();
                let p0 = working_register_probability(scheme, &s, 0);
                assert!((p0 - closed_form_p0(&f)).abs() < 1e-12);
                assert!(p0 < 1e-12);
            }
        }
    }

    #[test]
    fn bv_strings_recovered() {
        for n in 1..=5 {
            for value in 0..1usize << n {
                let s = HiddenString::from_index(n, value).unwrap();
                let state = brute_force_reference(Scheme::NoAux, &s.to_function()).unwrap();
                assert!((state[value].norm_sqr() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_oversized_input() {
        let f = BooleanFn::constant(11, 0).unwrap();
        assert!(brute_force_reference(Scheme::NoAux, &f).is_err());
    }
}
