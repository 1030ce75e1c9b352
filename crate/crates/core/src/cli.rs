//! The `hopfforge` command line: every command prints one JSON report on
//! stdout and exits 0 (pass), 1 (negative mathematical verdict) or 2 (usage,
//! IO or parse error).

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::catalog::{catalog_get, catalog_list, family_get, family_list};
use crate::degeneration::{
    degenerate_closed_form, degenerate_symbolic, family_limit, graded_degeneration, graded_symbolic,
    DegenerationReport, GradingVector,
};
use crate::hopf::{map_from_json, write_hopf};
use crate::invariants::{biderivations, check_isomorphism, fingerprint};
use crate::random::{random_transport, rng_from_seed, seed_from_env};
use crate::{Conductor, Error, FamilyData, HopfData, LinearMap};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

const FINGERPRINT_NOTE: &str =
    "fingerprints are one-sided: different fingerprints prove non-isomorphism, equal fingerprints prove nothing";

#[derive(Parser, Debug)]
#[command(name = "hopfforge", version, about = "Exact computations with finite-dimensional Hopf algebras")]
struct Cli {
    /// Print a prose summary on stderr.
    #[arg(long, global = true)]
    summary: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the bialgebra axioms, and the antipode identities if an antipode is stored.
    Verify { file: PathBuf },
    /// Compute the dual Hopf algebra.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute basis-independent invariants.
    Fingerprint {
        file: PathBuf,
        /// Also recompute the fingerprint after N seeded random basis changes.
        #[arg(long, value_name = "N")]
        random_basis: Option<usize>,
        /// Seed for --random-basis (defaults to HOPFFORGE_SEED or the built-in seed).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Degenerate along φ + t·id.
    Degenerate {
        file: PathBuf,
        /// JSON matrix file for φ.
        #[arg(long)]
        phi: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Associated graded Hopf algebra for the filtration given by basis degrees.
    Graded {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        degrees: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Limit at t = 0 of a family file whose scalars are rational functions of t.
    FamilyLimit {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Built-in Hopf algebras and families.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Dimension of the orbit under change of basis.
    OrbitDim { file: PathBuf },
    /// Check that a map carries the first structure onto the second.
    Isocheck { map: PathBuf, file1: PathBuf, file2: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Get {
        id: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Family {
        id: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Closed,
    Symbolic,
    Both,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CliReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub result: Value,
    pub exit_code: i32,
}

/// What a run produced: the report for stdout and prose for stderr.
#[derive(Clone, Debug)]
pub struct CliRun {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

struct Outcome {
    result: Value,
    exit_code: i32,
    summary: String,
}

impl Outcome {
    fn new(result: impl Serialize, pass: bool, summary: impl Into<String>) -> Self {
        Outcome {
            result: serde_json::to_value(result).expect("reports serialize"),
            exit_code: if pass { EXIT_PASS } else { EXIT_NEGATIVE },
            summary: summary.into(),
        }
    }
}

#[derive(Default)]
struct Inputs(Vec<InputDigest>);

impl Inputs {
    fn read(&mut self, path: &Path) -> crate::Result<String> {
        let bytes = std::fs::read(path)?;
        self.0.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        String::from_utf8(bytes).map_err(|e| Error::Parse {
            position: e.utf8_error().valid_up_to(),
            message: "input is not UTF-8".into(),
        })
    }

    fn hopf(&mut self, path: &Path) -> crate::Result<HopfData> {
        HopfData::from_json_str(&self.read(path)?)
    }

    fn family(&mut self, path: &Path) -> crate::Result<FamilyData> {
        FamilyData::from_json_str(&self.read(path)?)
    }

    /// Reads a map for use with structures over `c`; maps over ℚ (conductor 1)
    /// are read directly into ℚ(ζ_m).
    fn map(&mut self, path: &Path, c: Conductor) -> crate::Result<LinearMap> {
        let mut value: Value = serde_json::from_str(&self.read(path)?)?;
        if value.get("conductor") == Some(&json!(1)) {
            value["conductor"] = json!(c.m());
        }
        map_from_json(value)
    }
}

/// Errors that are mathematical verdicts rather than tool failures.
fn is_verdict(e: &Error) -> bool {
    matches!(e, Error::Grading(_) | Error::NotABialgebraFamily(_))
}

fn emit(h: &HopfData, output: &Option<PathBuf>) -> crate::Result<Value> {
    match output {
        Some(path) => {
            write_hopf(h, path)?;
            Ok(json!({ "written": path.display().to_string() }))
        }
        None => Ok(h.to_json_value()),
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "passed"
    } else {
        "failed"
    }
}

fn degeneration_outcome(
    primary: DegenerationReport,
    oracle: Option<DegenerationReport>,
    output: &Option<PathBuf>,
) -> crate::Result<Outcome> {
    let mut report = primary;
    if let Some(o) = &oracle {
        report.oracle_agreement = Some(report.agrees_with(o));
    }
    let agreed = report.oracle_agreement.unwrap_or(true);
    let pass = report.succeeded() && agreed;
    let mut result = serde_json::to_value(&report)?;
    if let Some(o) = &oracle {
        result["oracle"] = serde_json::to_value(o)?;
    }
    if let (Some(limit), Some(_)) = (&report.limit, output) {
        result["limit"] = emit(limit, output)?;
    }
    let summary = match (&report.limit, agreed) {
        (Some(l), true) => format!("degeneration exists; limit has dimension {}", l.dim()),
        (Some(_), false) => "limits disagree between closed form and symbolic oracle".to_string(),
        (None, _) if !report.mul_condition.holds || !report.comul_condition.holds => format!(
            "no degeneration: multiplication condition {}, comultiplication condition {}",
            verdict(report.mul_condition.holds),
            verdict(report.comul_condition.holds)
        ),
        (None, _) => format!(
            "limit structure lacks a unit ({}), counit ({}) or antipode ({})",
            report.unit_found, report.counit_found, report.antipode_found
        ),
    };
    Ok(Outcome {
        result,
        exit_code: if pass { EXIT_PASS } else { EXIT_NEGATIVE },
        summary,
    })
}

fn execute(cmd: &Command, inputs: &mut Inputs) -> crate::Result<Outcome> {
    match cmd {
        Command::Verify { file } => {
            let h = inputs.hopf(file)?;
            let report = h.verify();
            let mut summary = format!(
                "{} equation families checked, {} failing coordinates",
                report.checked.len(),
                report.failure_count
            );
            if h.antipode().is_none() {
                summary.push_str(" (no antipode stored; bialgebra axioms only)");
            }
            Ok(Outcome::new(&report, report.passed(), summary))
        }
        Command::Dual { file, output } => {
            let d = inputs.hopf(file)?.dual()?;
            Ok(Outcome::new(emit(&d, output)?, true, format!("dual of dimension {}", d.dim())))
        }
        Command::Fingerprint { file, random_basis, seed } => {
            let h = inputs.hopf(file)?;
            let fp = fingerprint(&h)?;
            let mut result = json!({ "fingerprint": &fp, "note": FINGERPRINT_NOTE });
            let mut pass = true;
            if let Some(count) = random_basis {
                let seed = seed.unwrap_or_else(seed_from_env);
                let mut rng = rng_from_seed(seed);
                let maps: Vec<LinearMap> = (0..*count)
                    .map(|_| random_transport(&mut rng, h.conductor(), h.dim()))
                    .collect();
                let mut changed = Vec::new();
                for (k, f) in maps.iter().enumerate() {
                    let other = fingerprint(&h.transport(f)?)?;
                    let diff = fp.differences(&other);
                    if !diff.is_empty() {
                        changed.push(json!({ "transport": k, "fields": diff }));
                    }
                }
                pass = changed.is_empty();
                result["random_basis"] = json!({
                    "count": count,
                    "seed": seed,
                    "invariant": pass,
                    "changes": changed,
                });
            }
            let summary = format!(
                "dimension {}, {} grouplikes, antipode order {:?}; {}",
                fp.dim, fp.grouplike_count, fp.antipode_order, FINGERPRINT_NOTE
            );
            Ok(Outcome::new(result, pass, summary))
        }
        Command::Degenerate { file, phi, mode, output } => {
            let h = inputs.hopf(file)?;
            let phi = inputs.map(phi, h.conductor())?;
            let (primary, oracle) = match mode {
                Mode::Closed => (degenerate_closed_form(&h, &phi)?, None),
                Mode::Symbolic => (degenerate_symbolic(&h, &phi)?, None),
                Mode::Both => (degenerate_closed_form(&h, &phi)?, Some(degenerate_symbolic(&h, &phi)?)),
            };
            degeneration_outcome(primary, oracle, output)
        }
        Command::Graded {
            file,
            degrees,
            mode,
            output,
        } => {
            let h = inputs.hopf(file)?;
            let grading = GradingVector::new(degrees.clone())?;
            let (primary, oracle) = match mode {
                Mode::Closed => (graded_degeneration(&h, &grading)?, None),
                Mode::Symbolic => (graded_symbolic(&h, &grading)?, None),
                Mode::Both => (graded_degeneration(&h, &grading)?, Some(graded_symbolic(&h, &grading)?)),
            };
            degeneration_outcome(primary, oracle, output)
        }
        Command::FamilyLimit { file, output } => {
            let fam = inputs.family(file)?;
            let out = family_limit(&fam)?;
            let pass = out.limit.is_some() && out.verification.as_ref().is_some_and(|v| v.passed());
            let mut result = serde_json::to_value(&out)?;
            if let (Some(limit), Some(_)) = (&out.limit, output) {
                result["limit"] = emit(limit, output)?;
            }
            let summary = match &out.poles.first {
                Some(p) if out.limit.is_none() => {
                    format!("pole of order {} at t = 0 in {:?} entry {:?}", -p.valuation, p.tensor, p.indices)
                }
                _ => format!("limit exists; verification {}", verdict(pass)),
            };
            Ok(Outcome::new(result, pass, summary))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let list = json!({ "hopf_algebras": catalog_list(), "families": family_list() });
                Ok(Outcome::new(list, true, "catalog listing"))
            }
            CatalogAction::Get { id, output } => {
                let h = catalog_get(id)?;
                Ok(Outcome::new(emit(&h, output)?, true, format!("{id}: dimension {}", h.dim())))
            }
            CatalogAction::Family { id, output } => {
                let fam = family_get(id)?;
                let body = match output {
                    Some(path) => {
                        write_hopf(&fam, path)?;
                        json!({ "written": path.display().to_string() })
                    }
                    None => fam.to_json_value(),
                };
                Ok(Outcome::new(body, true, format!("family {id}: dimension {}", fam.dim())))
            }
        },
        Command::OrbitDim { file } => {
            let h = inputs.hopf(file)?;
            let n = h.dim();
            let der = biderivations(&h).len();
            let result = json!({ "dim": n, "biderivation_dim": der, "orbit_dimension": n * n - der });
            Ok(Outcome::new(result, true, format!("orbit dimension {} of {}", n * n - der, n * n)))
        }
        Command::Isocheck { map, file1, file2 } => {
            let h1 = inputs.hopf(file1)?;
            let h2 = inputs.hopf(file2)?;
            let f = inputs.map(map, h1.conductor())?;
            let iso = check_isomorphism(&f, &h1, &h2)?;
            let summary = if iso {
                "the map transports the first structure onto the second"
            } else {
                "the map is not an isomorphism between the two structures"
            };
            Ok(Outcome::new(json!({ "isomorphic": iso }), iso, summary))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CliRun
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CliRun {
                    stdout: e.to_string(),
                    stderr: String::new(),
                    exit_code: EXIT_PASS,
                };
            }
            let report = CliReport {
                command: echo,
                inputs: Vec::new(),
                result: json!({ "error": e.kind().to_string() }),
                exit_code: EXIT_ERROR,
            };
            return CliRun {
                stdout: to_text(&report),
                stderr: e.render().to_string(),
                exit_code: EXIT_ERROR,
            };
        }
    };
    let mut inputs = Inputs::default();
    let (result, exit_code, mut stderr) = match execute(&cli.command, &mut inputs) {
        Ok(o) => (o.result, o.exit_code, if cli.summary { o.summary + "\n" } else { String::new() }),
        Err(e) => {
            let code = if is_verdict(&e) { EXIT_NEGATIVE } else { EXIT_ERROR };
            (json!({ "error": e.to_string() }), code, format!("error: {e}\n"))
        }
    };
    if cli.summary && exit_code == EXIT_ERROR {
        stderr.push_str("exit 2: usage, input or parse error\n");
    }
    let report = CliReport {
        command: echo,
        inputs: inputs.0,
        result,
        exit_code,
    };
    CliRun {
        stdout: to_text(&report),
        stderr,
        exit_code,
    }
}

fn to_text(report: &CliReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_2_with_json() {
        let out = run(["hopfforge", "verify"]);
        assert_eq!(out.exit_code, EXIT_ERROR);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["exit_code"], 2);
    }

    #[test]
    fn missing_file_is_an_error() {
        let out = run(["hopfforge", "verify", "/nonexistent/file.json"]);
        assert_eq!(out.exit_code, EXIT_ERROR);
    }

    #[test]
    fn catalog_list_passes() {
        let out = run(["hopfforge", "--summary", "catalog", "list"]);
        assert_eq!(out.exit_code, EXIT_PASS);
        assert!(out.stderr.contains("catalog"));
    }
}
