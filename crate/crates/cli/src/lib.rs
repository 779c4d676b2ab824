//! Command-line front end for the `strange` verification harness.
//!
//! [`run`] parses an argument list, dispatches to one subcommand and writes
//! a report document or data dump. Exit codes: 0 when every case is
//! verified or vacuous, 1 on any counterexample, 2 on invalid usage or a
//! domain error.

pub mod args;
pub mod document;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use strange_core::exec::Exec;
use strange_core::fishburn::{
    fishburn_numbers, minus_one_over_24, prime_power, t_set, FishburnValues,
};
use strange_core::grids;
use strange_core::report::VerificationReport;
use strange_core::strange::{
    check_theorem1_table, dissection_table, pentagonal_residues, verify_theorem1, DissectionTable,
};
use strange_core::{Error, IntPoly};

use args::{Cli, Command, Format, Which};
use document::ReportDocument;

enum CliError {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

/// What a subcommand produced: a rendered payload and its exit code.
struct Rendered {
    text: String,
    code: i32,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if informational {
                let _ = out.write_all(text.as_bytes());
                return 0;
            }
            let _ = err.write_all(text.as_bytes());
            return 2;
        }
    };
    if cli.workers == 0 {
        let _ = writeln!(err, "error: --workers must be at least 1");
        return 2;
    }
    let exec = Exec::from_workers(cli.workers);
    match dispatch(&cli, exec) {
        Ok(rendered) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &rendered.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out
                    .write_all(rendered.text.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            match written {
                Ok(()) => rendered.code,
                Err(m) => {
                    let _ = writeln!(err, "error: {m}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn report(
    cli: &Cli,
    command: &str,
    params: Map<String, Value>,
    run_cases: impl FnOnce() -> Vec<VerificationReport>,
) -> Result<Rendered, CliError> {
    let start = Instant::now();
    let cases = run_cases();
    let doc = ReportDocument::new(command, params, cases, start.elapsed().as_millis() as u64);
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => doc.to_json(),
        Format::Csv => doc.to_csv(),
        Format::Plain => doc.to_plain(),
    };
    Ok(Rendered {
        text,
        code: doc.exit_code(),
    })
}

fn data(text: String) -> Result<Rendered, CliError> {
    Ok(Rendered { text, code: 0 })
}

fn to_params(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("value serializes");
    s.push('\n');
    s
}

fn require_positive(name: &str, v: usize) -> Result<(), CliError> {
    if v == 0 {
        return Err(CliError::Usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

/// Dissection dump as written by `dissect` and read by `verify-theorem`.
#[derive(Serialize, Deserialize)]
struct TableDump {
    #[serde(rename = "N")]
    n: usize,
    t: usize,
    polys: Vec<IntPoly>,
}

fn read_table(path: &Path) -> Result<DissectionTable, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let dump: TableDump = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{} is not a dissection dump: {e}", path.display())))?;
    require_positive("t", dump.t)?;
    Ok(DissectionTable::from_polys(dump.n, dump.t, dump.polys)?)
}

fn dispatch(cli: &Cli, exec: Exec) -> Result<Rendered, CliError> {
    match &cli.command {
        Command::Pentagonal { t, p, r } => pentagonal(cli, *t, *p, *r),
        Command::Dissect { t, n } => {
            require_positive("t", *t)?;
            let table = dissection_table(*n, *t)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => data(json_line(&table)),
                Format::Plain => {
                    let mut text = String::new();
                    for (i, a) in table.polys().iter().enumerate() {
                        text.push_str(&format!("A_{t}({n}, {i}, q) = {a}\n"));
                    }
                    data(text)
                }
                Format::Csv => Err(CliError::Usage("dissect supports json and plain output".into())),
            }
        }
        Command::VerifyTheorem {
            t,
            n,
            grid,
            from_file,
        } => {
            let modes = [t.is_some() || n.is_some(), grid.is_some(), from_file.is_some()];
            if modes.iter().filter(|&&m| m).count() != 1 {
                return Err(CliError::Usage(
                    "verify-theorem takes exactly one of --t/--N, --grid, --from-file".into(),
                ));
            }
            if let Some(path) = from_file {
                let table = read_table(path)?;
                let params = to_params(json!({"from_file": path.display().to_string()}));
                let id = format!("thm1/t={}/N={}", table.t(), table.n());
                return report(cli, "verify-theorem", params, || {
                    vec![VerificationReport::or_error(id, check_theorem1_table(&table))]
                });
            }
            if let Some((t_max, n_max)) = *grid {
                require_positive("grid TMAX", t_max)?;
                let params = to_params(json!({"t_max": t_max, "N_max": n_max}));
                return report(cli, "verify-theorem", params, || {
                    grids::theorem1_grid(t_max, n_max, exec)
                });
            }
            let (Some(t), Some(n)) = (*t, *n) else {
                return Err(CliError::Usage("verify-theorem needs both --t and --N".into()));
            };
            require_positive("t", t)?;
            let params = to_params(json!({"t": t, "N": n}));
            report(cli, "verify-theorem", params, || {
                let id = format!("thm1/t={t}/N={n}");
                vec![VerificationReport::or_error(id, exec.install(|| verify_theorem1(n, t)))]
            })
        }
        Command::VerifyIdentities {
            which,
            t_max,
            n_max,
            nu_max,
            k_max,
            root_max,
            lambda_max,
        } => {
            for (name, v) in [("t-max", t_max), ("k-max", k_max), ("root-max", root_max)] {
                if let Some(v) = v {
                    require_positive(name, *v)?;
                }
            }
            let mut params = Map::new();
            params.insert("which".into(), json!(format!("{which:?}").to_lowercase()));
            for (name, v) in [
                ("t_max", t_max),
                ("N_max", n_max),
                ("nu_max", nu_max),
                ("k_max", k_max),
                ("root_max", root_max),
                ("lambda_max", lambda_max),
            ] {
                if let Some(v) = v {
                    params.insert(name.into(), json!(v));
                }
            }
            let sel = |w: Which| *which == Which::All || *which == w;
            report(cli, "verify-identities", params, || {
                let mut cases = Vec::new();
                if sel(Which::Cyclotomic) {
                    cases.extend(grids::cyclotomic_grid(
                        t_max.unwrap_or(12),
                        n_max.unwrap_or(40),
                        lambda_max.unwrap_or(15),
                        exec,
                    ));
                }
                if sel(Which::Theta) {
                    cases.extend(grids::theta_grid(
                        t_max.unwrap_or(6),
                        n_max.unwrap_or(30),
                        nu_max.unwrap_or(3),
                        exec,
                    ));
                }
                if sel(Which::Refinement) {
                    cases.extend(grids::refinement_grid(
                        t_max.unwrap_or(6),
                        k_max.unwrap_or(4),
                        n_max.unwrap_or(30),
                        exec,
                    ));
                }
                if sel(Which::Stability) {
                    cases.extend(grids::stability_grid(
                        root_max.unwrap_or(4),
                        t_max.unwrap_or(4),
                        nu_max.unwrap_or(2),
                        exec,
                    ));
                }
                if sel(Which::Vanishing) {
                    cases.extend(grids::vanishing_grid(
                        t_max.unwrap_or(12),
                        nu_max.unwrap_or(3),
                        exec,
                    ));
                }
                cases
            })
        }
        Command::Fishburn { n_max, modulus } => {
            let series = exec.install(|| fishburn_numbers(*n_max, *modulus))?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => data(series.to_csv()),
                Format::Json => {
                    let values = series_strings(series.values());
                    data(json_line(&json!({
                        "n_max": n_max,
                        "modulus": modulus,
                        "values": values,
                    })))
                }
                Format::Plain => {
                    let mut text = String::new();
                    let suffix = modulus.map(|m| format!(" (mod {m})")).unwrap_or_default();
                    for (n, v) in series_strings(series.values()).iter().enumerate() {
                        text.push_str(&format!("xi({n}) = {v}{suffix}\n"));
                    }
                    data(text)
                }
            }
        }
        Command::Congruences { p, r, n_count } => {
            prime_power(*p, *r)?;
            require_positive("n-count", *n_count)?;
            let params = to_params(json!({"p": p, "r": r, "n_count": n_count}));
            let case = (*p, *r, *n_count);
            report(cli, "congruences", params, || grids::congruence_suite(&[case], exec))
        }
        Command::SpFacts { p, r } => {
            prime_power(*p, *r)?;
            if *r < 2 {
                return Err(CliError::Usage("sp-facts needs --r >= 2".into()));
            }
            let params = to_params(json!({"p": p, "r": r}));
            let case = (*p, *r);
            report(cli, "sp-facts", params, || grids::sp_structure_suite(&[case], exec))
        }
        Command::Binomial { p, r, k_max } => {
            prime_power(*p, *r)?;
            let params = to_params(json!({"p": p, "r": r, "k_max": k_max}));
            let case = (*p, *r, *k_max);
            report(cli, "binomial", params, || grids::binomial_suite(&[case], exec))
        }
        Command::Decompose { p, r, n } => {
            prime_power(*p, *r)?;
            require_positive("n", *n)?;
            let params = to_params(json!({"p": p, "r": r, "n": n}));
            let case = (*p, *r, *n);
            report(cli, "decompose", params, || grids::decomposition_suite(&[case], exec))
        }
        Command::FullReport => report(cli, "full-report", Map::new(), || grids::full_report(exec)),
    }
}

fn series_strings(values: &FishburnValues) -> Vec<String> {
    match values {
        FishburnValues::Exact(v) => v.iter().map(ToString::to_string).collect(),
        FishburnValues::Modular { residues, .. } => residues.iter().map(ToString::to_string).collect(),
    }
}

fn pentagonal(
    cli: &Cli,
    t: Option<usize>,
    p: Option<u64>,
    r: Option<u32>,
) -> Result<Rendered, CliError> {
    let format = cli.format.unwrap_or(Format::Json);
    match (t, p, r) {
        (Some(t), None, None) => {
            require_positive("t", t)?;
            let s = pentagonal_residues(t)?;
            match format {
                Format::Json => data(json_line(&json!({"t": t, "s_set": s.residues()}))),
                Format::Plain => data(format!("S({t}) = {:?}\n", s.residues())),
                Format::Csv => Err(CliError::Usage("pentagonal supports json and plain output".into())),
            }
        }
        (None, Some(p), Some(r)) => {
            let classes = t_set(p, r)?;
            let special = minus_one_over_24(p)?;
            match format {
                Format::Json => {
                    let mut v = serde_json::to_value(&classes).expect("serializes");
                    v["minus_one_over_24"] = json!(special);
                    data(json_line(&v))
                }
                Format::Plain => data(format!(
                    "S({p}^{r}) has {} residues, max {}\nT({p}^{r}) = {:?}\n",
                    classes.s_set.len(),
                    classes.max_s,
                    classes.t_set
                )),
                Format::Csv => Err(CliError::Usage("pentagonal supports json and plain output".into())),
            }
        }
        _ => Err(CliError::Usage(
            "pentagonal takes either --t T or both --p P and --r R".into(),
        )),
    }
}
