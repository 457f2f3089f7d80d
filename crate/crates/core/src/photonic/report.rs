use serde::Serialize;
use serde_json::json;

use super::circuit::{count_components, simulate_photonic, PhotonState, PhotonicCircuit};
use super::compile::compile_on;
use crate::algorithms::{
    classify_fn, dj_program, two_bit_catalogue, working_distribution, BooleanFn, BvOutcome,
    DjOutcome, Encoding, FnClass, HiddenString, Scheme, BV_STRINGS,
};
use crate::error::{Error, Result};
use crate::walk::WalkState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Dj,
    Bv,
}

/// A named function fed to [`resource_report`].
#[derive(Debug, Clone, PartialEq)]
pub struct ReportEntry {
    pub name: String,
    pub algorithm: Algorithm,
    pub function: BooleanFn,
}

/// The eight two-bit catalogue functions, named `dj/i` … `dj/viii`.
pub fn dj_entries() -> Vec<ReportEntry> {
    two_bit_catalogue()
        .into_iter()
        .map(|(name, function)| ReportEntry {
            name: format!("dj/{name}"),
            algorithm: Algorithm::Dj,
            function,
        })
        .collect()
}

/// The four two-bit hidden strings, named `bv/00` … `bv/11`.
pub fn bv_entries() -> Vec<ReportEntry> {
    BV_STRINGS
        .iter()
        .map(|(s, _)| ReportEntry {
            name: format!("bv/{s}"),
            algorithm: Algorithm::Bv,
            function: s.parse::<HiddenString>().expect("catalogue string").to_function(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResourceRow {
    pub function_name: String,
    pub scheme: Scheme,
    pub hwp: usize,
    pub bs: usize,
    pub phase_shifter: usize,
    pub pbs: usize,
    pub total: usize,
}

pub fn full_dj_circuit(f: &BooleanFn, scheme: Scheme) -> Result<PhotonicCircuit> {
    let encoding = Encoding::new(scheme, f.n())?;
    compile_on(&dj_program(f, scheme)?, encoding.topology())
}

pub fn full_bv_circuit(s: &HiddenString, scheme: Scheme) -> Result<PhotonicCircuit> {
    full_dj_circuit(&s.to_function(), scheme)
}

/// One row per (entry, scheme), entries outermost.
pub fn resource_report(entries: &[ReportEntry], schemes: &[Scheme]) -> Result<Vec<ResourceRow>> {
    let mut rows = Vec::with_capacity(entries.len() * schemes.len());
    for entry in entries {
        for &scheme in schemes {
            let count = count_components(&full_dj_circuit(&entry.function, scheme)?);
            rows.push(ResourceRow {
                function_name: entry.name.clone(),
                scheme,
                hwp: count.hwp,
                bs: count.bs,
                phase_shifter: count.phase_shifter,
                pbs: count.pbs,
                total: count.total(),
            });
        }
    }
    Ok(rows)
}

pub fn report_csv(rows: &[ResourceRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Terminal measurement optics; not part of the component counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Readout {
    pub algorithm: Algorithm,
    pub scheme: Scheme,
    /// Paths that carry a detector.
    pub detector_modes: Vec<usize>,
    /// Whether each detected path is split by polarization first.
    pub polarization_resolved: bool,
    pub description: String,
}

pub fn readout(algorithm: Algorithm, scheme: Scheme) -> Readout {
    let n_modes = scheme.topology().size;
    let (detector_modes, polarization_resolved, description) = match (algorithm, scheme) {
        (Algorithm::Dj, Scheme::WithAux) => (
            vec![0],
            false,
            "single detector on path |00>; a click means constant",
        ),
        (Algorithm::Dj, Scheme::NoAux) => (
            (0..n_modes).collect(),
            true,
            "PBS and two detectors per path; a click at (H, path 0) means constant",
        ),
        (Algorithm::Bv, Scheme::WithAux) => (
            (0..n_modes).collect(),
            false,
            "detector on every path; the clicking path's Gray label is s",
        ),
        (Algorithm::Bv, Scheme::NoAux) => (
            (0..n_modes).collect(),
            true,
            "PBS and two detectors per path; polarization gives s1, path gives s2",
        ),
    };
    Readout {
        algorithm,
        scheme,
        detector_modes,
        polarization_resolved,
        description: description.to_string(),
    }
}

/// Rows plus counting conventions and readout structure, for plotting.
pub fn report_json(rows: &[ResourceRow]) -> serde_json::Value {
    let mut readouts = Vec::new();
    for algorithm in [Algorithm::Dj, Algorithm::Bv] {
        for scheme in Scheme::ALL {
            readouts.push(readout(algorithm, scheme));
        }
    }
    json!({
        "rows": rows,
        "conventions": {
            "counted": ["hwp", "bs", "phase_shifter", "pbs"],
            "not_counted": ["mode_permuter", "photon source", "measurement optics", "detectors"],
            "with_aux_prep": "the HWP(pi/4) preparing |V> on path |00> is counted",
            "per_instance": "every plate on every path counts once",
        },
        "readouts": readouts,
    })
}

/// Reinterprets the circuit output as a walk state (polarization = coin,
/// mode = vertex).
pub fn photonic_final_walk_state(circuit: &PhotonicCircuit, encoding: &Encoding) -> Result<WalkState> {
    let topology = encoding.topology();
    if circuit.n_modes() != topology.size {
        return Err(Error::DimensionMismatch {
            expected: topology.size,
            actual: circuit.n_modes(),
        });
    }
    let input = PhotonState::basis(circuit.n_modes(), 0, 0)?;
    let output = simulate_photonic(circuit, &input)?;
    WalkState::new(topology, output.amplitudes().to_vec())
}

/// DJ decided by simulating the compiled circuit.
pub fn photonic_dj(f: &BooleanFn, scheme: Scheme) -> Result<DjOutcome> {
    if classify_fn(f) == FnClass::Neither {
        return Err(Error::PromiseViolation);
    }
    let encoding = Encoding::new(scheme, f.n())?;
    let state = photonic_final_walk_state(&full_dj_circuit(f, scheme)?, &encoding)?;
    let p_all_zero = working_distribution(&state, &encoding)[0];
    Ok(DjOutcome {
        scheme,
        p_all_zero,
        classification: if p_all_zero > 0.5 {
            FnClass::Constant
        } else {
            FnClass::Balanced
        },
    })
}

/// BV decided by simulating the compiled circuit.
pub fn photonic_bv(s: &HiddenString, scheme: Scheme) -> Result<BvOutcome> {
    let encoding = Encoding::new(scheme, s.len())?;
    let state = photonic_final_walk_state(&full_bv_circuit(s, scheme)?, &encoding)?;
    let dist = working_distribution(&state, &encoding);
    let (best, &probability) = dist
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty distribution");
    let distribution = dist
        .iter()
        .enumerate()
        .map(|(x, &p)| Ok((HiddenString::from_index(s.len(), x)?.to_string(), p)))
        .collect::<Result<_>>()?;
    Ok(BvOutcome {
        scheme,
        recovered: HiddenString::from_index(s.len(), best)?,
        probability,
        distribution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{dj_final_state, run_bv, run_dj, Encoding};
    use crate::algorithms::global_phase_distance;

    #[test]
    fn counts_for_the_catalogue() {
        // Hand count: with aux, X prep (1) + coin H (4) + two path-qubit
        // Hadamards twice (4 BS) + closing layer (4 BS) + oracle plates;
        // without aux, two layers of (2 H plates + 1 BS) + oracle.
        let rows = resource_report(&dj_entries(), &Scheme::ALL).unwrap();
        let totals: Vec<_> = rows.iter().map(|r| (r.function_name.as_str(), r.scheme, r.total)).collect();
        let expected_with = [13, 17, 15, 15, 15, 15, 15, 15];
        let expected_without = [6, 8, 8, 7, 8, 7, 8, 8];
        for (i, chunk) in totals.chunks(2).enumerate() {
            assert_eq!(chunk[0].1, Scheme::WithAux);
            assert_eq!(chunk[1].1, Scheme::NoAux);
            assert_eq!(chunk[0].2, expected_with[i], "{}", chunk[0].0);
            assert_eq!(chunk[1].2, expected_without[i], "{}", chunk[1].0);
            assert!(chunk[1].2 < chunk[0].2);
        }
        assert!(rows.iter().all(|r| r.pbs == 0));
    }

    #[test]
    fn bv_report_has_eight_rows() {
        let rows = resource_report(&bv_entries(), &Scheme::ALL).unwrap();
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[0].function_name, "bv/00");
        for pair in rows.chunks(2) {
            assert!(pair[1].total < pair[0].total);
        }
    }

    #[test]
    fn csv_header_and_row() {
        let rows = resource_report(&dj_entries()[..1], &[Scheme::NoAux]).unwrap();
        let csv = report_csv(&rows).unwrap();
        assert_eq!(csv, "function_name,scheme,hwp,bs,phase_shifter,pbs,total\ndj/i,no-aux,4,2,0,0,6\n");
    }

    #[test]
    fn json_carries_readouts() {
        let v = report_json(&[]);
        assert_eq!(v["readouts"].as_array().unwrap().len(), 4);
        assert_eq!(v["readouts"][0]["detector_modes"], json!([0]));
    }

    #[test]
    fn no_aux_constant_zero_ends_in_h_mode_zero() {
        let f = BooleanFn::constant(2, 0).unwrap();
        let circuit = full_dj_circuit(&f, Scheme::NoAux).unwrap();
        let out = simulate_photonic(&circuit, &PhotonState::basis(2, 0, 0).unwrap()).unwrap();
        assert!((out.probabilities()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn photonic_states_match_walk_states() {
        for (name, f) in two_bit_catalogue() {
            for scheme in Scheme::ALL {
                let enc = Encoding::new(scheme, 2).unwrap();
                let photonic = photonic_final_walk_state(&full_dj_circuit(&f, scheme).unwrap(), &enc).unwrap();
                let walk = dj_final_state(&f, scheme).unwrap();
                let d = global_phase_distance(photonic.amplitudes(), walk.amplitudes());
                assert!(d <= 1e-9, "{name} {scheme}: {d}");
                if classify_fn(&f) != FnClass::Neither {
                    let a = photonic_dj(&f, scheme).unwrap();
                    let b = run_dj(&f, scheme).unwrap();
                    assert!((a.p_all_zero - b.p_all_zero).abs() <= 1e-9);
                }
            }
        }
        for (s, _) in BV_STRINGS {
            let s: HiddenString = s.parse().unwrap();
            for scheme in Scheme::ALL {
                let a = photonic_bv(&s, scheme).unwrap();
                let b = run_bv(&s, scheme).unwrap();
                assert_eq!(a.recovered, s);
                assert!((a.probability - b.probability).abs() <= 1e-9);
            }
        }
    }
}
