use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use qwalk_core::algorithms::{
    catalogue_function, dj_program, initial_state, run_bv, run_dj, BooleanFn, Encoding,
    HiddenString, Scheme,
};
use qwalk_core::photonic::{bv_entries, dj_entries, report_csv, report_json, resource_report, ResourceRow};
use qwalk_core::verify::{run_suites, VerifyOptions, SUITES};
use qwalk_core::walk::run_program_traced;
use qwalk_core::Error;
use serde_json::{json, Value};

use crate::{BvArgs, Common, DjArgs, Format, ReportArgs, SchemeArg, VerifyArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_PROMISE: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PromiseViolation => Self {
                code: EXIT_PROMISE,
                message: "promise violated: the function is neither constant nor balanced".into(),
            },
            other => Self::input(other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn schemes(arg: SchemeArg) -> Vec<Scheme> {
    match arg {
        SchemeArg::WithAux => vec![Scheme::WithAux],
        SchemeArg::NoAux => vec![Scheme::NoAux],
        SchemeArg::Both => Scheme::ALL.to_vec(),
    }
}

fn emit(common: &Common, body: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => fs::write(path, body)
            .map_err(|e| Failure::input(format!("--output {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields.join(",");
    line.push('\n');
    line
}

/// Walk states after each labelled stage of the DJ pipeline.
fn trace(f: &BooleanFn, scheme: Scheme) -> Result<Value, Failure> {
    let encoding = Encoding::new(scheme, f.n())?;
    let program = dj_program(f, scheme)?;
    let stages = run_program_traced(&initial_state(&encoding), &program)?;
    Ok(Value::Array(
        stages
            .into_iter()
            .map(|(label, state)| json!({ "stage": label, "state": state }))
            .collect(),
    ))
}

fn check_dump_format(dump: bool, format: Format) -> Result<(), Failure> {
    if dump && format == Format::Csv {
        return Err(Failure::input("--dump-state needs --format json or text"));
    }
    Ok(())
}

fn load_function(args: &DjArgs) -> Result<(String, BooleanFn), Failure> {
    if let Some(name) = &args.function {
        let f = catalogue_function(name).ok_or_else(|| {
            Failure::input(format!("--function: unknown catalogue function '{name}' (expected i to viii)"))
        })?;
        return Ok((name.clone(), f));
    }
    let path = args.table.as_ref().expect("clap requires --function or --table");
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("--table {}: {e}", path.display())))?;
    let f: BooleanFn = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("--table {}: {e}", path.display())))?;
    Ok((path.display().to_string(), f))
}

pub fn dj(args: &DjArgs) -> Outcome {
    check_dump_format(args.dump_state, args.common.format)?;
    let (name, f) = load_function(args)?;
    let schemes = schemes(args.scheme);
    let mut outcomes = Vec::new();
    for &scheme in &schemes {
        outcomes.push(run_dj(&f, scheme)?);
    }
    let agree = outcomes.windows(2).all(|w| w[0].classification == w[1].classification);
    let body = match args.common.format {
        Format::Json => {
            let mut v = json!({ "function": name, "results": outcomes });
            if schemes.len() > 1 {
                v["schemes_agree"] = json!(agree);
            }
            if args.dump_state {
                let mut traces = serde_json::Map::new();
                for &scheme in &schemes {
                    traces.insert(scheme.to_string(), trace(&f, scheme)?);
                }
                v["trace"] = Value::Object(traces);
            }
            pretty(&v)
        }
        Format::Csv => {
            let mut s = csv_line(&["function".into(), "scheme".into(), "p_all_zero".into(), "classification".into()]);
            for o in &outcomes {
                s += &csv_line(&[name.clone(), o.scheme.to_string(), o.p_all_zero.to_string(), o.classification.to_string()]);
            }
            s
        }
        Format::Text => {
            let mut s = format!("function {name}\n");
            for o in &outcomes {
                let _ = writeln!(s, "{}: p_all_zero = {:.6}, {}", o.scheme, o.p_all_zero, o.classification);
            }
            if schemes.len() > 1 {
                s += if agree { "schemes agree\n" } else { "schemes DISAGREE\n" };
            }
            if args.dump_state {
                for &scheme in &schemes {
                    append_trace(&mut s, scheme, &trace(&f, scheme)?);
                }
            }
            s
        }
    };
    emit(&args.common, &body)?;
    Ok(if agree { EXIT_OK } else { EXIT_VERIFY })
}

fn append_trace(s: &mut String, scheme: Scheme, trace: &Value) {
    for stage in trace.as_array().expect("trace is an array") {
        let _ = writeln!(
            s,
            "{scheme} {}: {}",
            stage["stage"].as_str().unwrap_or_default(),
            serde_json::to_string(&stage["state"]).expect("JSON values serialize")
        );
    }
}

pub fn bv(args: &BvArgs) -> Outcome {
    check_dump_format(args.dump_state, args.common.format)?;
    let hidden: HiddenString = args
        .string
        .parse()
        .map_err(|e: Error| Failure::input(format!("--string: {e}")))?;
    let schemes = schemes(args.scheme);
    let mut outcomes = Vec::new();
    for &scheme in &schemes {
        outcomes.push(run_bv(&hidden, scheme)?);
    }
    let recovered = outcomes.iter().all(|o| o.recovered == hidden);
    let f = hidden.to_function();
    let body = match args.common.format {
        Format::Json => {
            let mut v = json!({ "string": hidden.to_string(), "results": outcomes, "recovered": recovered });
            if args.dump_state {
                let mut traces = serde_json::Map::new();
                for &scheme in &schemes {
                    traces.insert(scheme.to_string(), trace(&f, scheme)?);
                }
                v["trace"] = Value::Object(traces);
            }
            pretty(&v)
        }
        Format::Csv => {
            let mut s = csv_line(&["string".into(), "scheme".into(), "recovered".into(), "probability".into()]);
            for o in &outcomes {
                s += &csv_line(&[hidden.to_string(), o.scheme.to_string(), o.recovered.to_string(), o.probability.to_string()]);
            }
            s
        }
        Format::Text => {
            let mut s = format!("hidden string {hidden}\n");
            for o in &outcomes {
                let _ = writeln!(s, "{}: recovered {} with p = {:.6}", o.scheme, o.recovered, o.probability);
            }
            if args.dump_state {
                for &scheme in &schemes {
                    append_trace(&mut s, scheme, &trace(&f, scheme)?);
                }
            }
            s
        }
    };
    emit(&args.common, &body)?;
    Ok(if recovered { EXIT_OK } else { EXIT_VERIFY })
}

fn parse_perturb(arg: &str) -> Result<VerifyOptions, Failure> {
    let bad = || Failure::input(format!("--perturb: expected hwp=<radians>, got '{arg}'"));
    let (key, value) = arg.split_once('=').ok_or_else(bad)?;
    if key.trim() != "hwp" {
        return Err(bad());
    }
    let hwp_offset: f64 = value.trim().parse().map_err(|_| bad())?;
    if !hwp_offset.is_finite() {
        return Err(bad());
    }
    Ok(VerifyOptions { hwp_offset })
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    if args.list {
        let body: String = SUITES.iter().map(|s| format!("{}: {}\n", s.name, s.description)).collect();
        emit(&args.common, &body)?;
        return Ok(EXIT_OK);
    }
    let options = match &args.perturb {
        Some(arg) => parse_perturb(arg)?,
        None => VerifyOptions::default(),
    };
    let reports = run_suites(&args.suites, &options).map_err(|e| Failure::input(format!("--suite: {e}")))?;
    let all_passed = reports.iter().all(|r| r.passed);
    let body = match args.common.format {
        Format::Json => pretty(&json!({ "passed": all_passed, "suites": reports })),
        Format::Csv => {
            let mut s = csv_line(&["suite".into(), "passed".into()]);
            for r in &reports {
                s += &csv_line(&[r.name.into(), r.passed.to_string()]);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.message);
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            let _ = writeln!(s, "{} of {} suites passed", reports.len() - failed, reports.len());
            s
        }
    };
    emit(&args.common, &body)?;
    if let Some(first) = reports.iter().find(|r| !r.passed) {
        eprintln!("verification failed: {}: {}", first.name, first.message);
        return Ok(EXIT_VERIFY);
    }
    Ok(EXIT_OK)
}

fn report_rows(algorithms: &[String]) -> Result<Vec<ResourceRow>, Failure> {
    let mut entries = Vec::new();
    for name in algorithms {
        match name.trim() {
            "dj" => entries.extend(dj_entries()),
            "bv" => entries.extend(bv_entries()),
            other => return Err(Failure::input(format!("--algorithms: unknown algorithm '{other}' (expected dj or bv)"))),
        }
    }
    Ok(resource_report(&entries, &Scheme::ALL)?)
}

fn text_table(rows: &[ResourceRow]) -> String {
    let mut s = format!("{:<10} {:<9} {:>4} {:>4} {:>6} {:>4} {:>6}\n", "function", "scheme", "hwp", "bs", "phase", "pbs", "total");
    for r in rows {
        let _ = writeln!(
            s,
            "{:<10} {:<9} {:>4} {:>4} {:>6} {:>4} {:>6}",
            r.function_name, r.scheme.to_string(), r.hwp, r.bs, r.phase_shifter, r.pbs, r.total
        );
    }
    s
}

pub fn report(args: &ReportArgs) -> Outcome {
    let rows = report_rows(&args.algorithms)?;
    let blob = pretty(&report_json(&rows));
    let body = match args.common.format {
        Format::Csv => report_csv(&rows)?,
        Format::Json => blob.clone(),
        Format::Text => text_table(&rows),
    };
    emit(&args.common, &body)?;
    if let (Format::Csv, Some(path)) = (args.common.format, &args.common.output) {
        let json_path = Path::new(path).with_extension("json");
        fs::write(&json_path, blob)
            .map_err(|e| Failure::input(format!("--output {}: {e}", json_path.display())))?;
    }
    Ok(EXIT_OK)
}
