//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on
//! invalid usage or parameters.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use num_rational::Rational64;
use serde_json::{json, Value};

use crate::ce_oracle::equivariant_table_from_oracle;
use crate::error::{Error, Result};
use crate::kostant::{homology_table, Family};
use crate::modrule::{o_modification_border, sp_modification_border, sp_modification_weyl};
use crate::partition::Partition;
use crate::verify::{self, SuiteReport};
use crate::weyl::{self, Blocks, WeylFamily};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "NILHOM_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "nilhom",
    version,
    about = "Homology of 2-step nilpotent Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the homology table of a family.
    Homology(HomologyArgs),
    /// Apply a modification rule to a partition.
    Modrule(ModruleArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// List minimal coset representatives with their lengths.
    Wp(WpArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Sp,
    O,
    Gl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Paper,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyParams {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
}

fn required(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| Error::InvalidParameters(format!("{family} needs --{flag}")))
}

impl FamilyParams {
    fn family(&self, name: FamilyName) -> Result<Family> {
        let family = match name {
            FamilyName::Sp => Family::Sp {
                n: required(self.n, "n", "sp")?,
                k: required(self.k, "k", "sp")?,
            },
            FamilyName::O => Family::O {
                m: required(self.m, "m", "o")?,
                k: required(self.k, "k", "o")?,
            },
            FamilyName::Gl => Family::Gl {
                n: required(self.n, "n", "gl")?,
                k: required(self.k, "k", "gl")?,
                l: required(self.l, "l", "gl")?,
            },
        };
        family.validate()?;
        Ok(family)
    }
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    pub family: FamilyName,
    #[command(flatten)]
    pub params: FamilyParams,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Compute with the Chevalley–Eilenberg oracle instead.
    #[arg(long)]
    pub oracle: bool,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleFamily {
    Sp,
    O,
}

#[derive(Debug, Args)]
pub struct ModruleArgs {
    pub family: RuleFamily,
    /// Partition as a JSON array, e.g. [3,1,1].
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Golden,
    Counts,
    DefsAgree,
    KostantRule,
    Oracle,
    Heisenberg,
    Free2step,
    Euler,
    Lengths,
    StripColumns,
    Stable,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    /// Restrict oracle and Euler suites to one family.
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    #[command(flatten)]
    pub params: FamilyParams,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_k: Option<usize>,
    /// Largest Weyl group rank for the length suite.
    #[arg(long, default_value_t = 3)]
    pub max_rank: usize,
    /// Random partitions for the strip-column suite.
    #[arg(long, default_value_t = 500)]
    pub cases: usize,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WpFamily {
    Sp,
    OOdd,
    OEven,
    Gl,
}

#[derive(Debug, Args)]
pub struct WpArgs {
    pub family: WpFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub l: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

/// What a command produced: text for standard output and an exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(e: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_USAGE,
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn cmd_homology(args: &HomologyArgs) -> Result<String> {
    let family = args.params.family(args.family)?;
    let table = if args.oracle {
        equivariant_table_from_oracle(family)?
    } else {
        homology_table(family)?
    };
    Ok(match args.format {
        Format::Json => pretty(&table),
        Format::Tsv => table.to_tsv(),
        Format::Paper => table.to_tuples(),
    })
}

fn cmd_modrule(args: &ModruleArgs) -> Result<String> {
    let lambda = &args.lambda;
    let out = match args.family {
        RuleFamily::Sp => {
            let n = required(args.n, "n", "sp")?;
            let border = sp_modification_border(lambda, n);
            let weyl = sp_modification_weyl(lambda, n)?;
            json!({
                "family": "sp",
                "lambda": lambda,
                "n": n,
                "index": border.index,
                "tau": border.reduced,
                "strips": border.strips,
                "weyl": { "index": weyl.index, "tau": weyl.reduced },
                "agree": border.outcome() == weyl.outcome(),
            })
        }
        RuleFamily::O => {
            let m = required(args.m, "m", "o")?;
            let rule = o_modification_border(lambda, m);
            json!({
                "family": "o",
                "lambda": lambda,
                "m": m,
                "index": rule.index,
                "tau": rule.reduced,
                "strips": rule.strips,
                "associated": rule.associated,
            })
        }
    };
    Ok(pretty(&out))
}

fn range(
    single: Option<usize>,
    min: usize,
    max: Option<usize>,
    default_max: usize,
) -> RangeInclusive<usize> {
    match single {
        Some(x) => x..=x,
        None => min..=max.unwrap_or(default_max),
    }
}

fn run_suites(args: &VerifyArgs) -> Result<Vec<SuiteReport>> {
    let p = &args.params;
    let families = match args.family {
        Some(name) => vec![p.family(name)?],
        None => verify::default_oracle_families(),
    };
    let one = |suite: Suite| -> Vec<SuiteReport> {
        match suite {
            Suite::Golden => vec![verify::golden()],
            Suite::Counts => vec![verify::counts(
                range(p.n, 1, args.max_n, 4),
                range(p.k, 1, args.max_k, 4),
            )],
            Suite::DefsAgree => vec![verify::defs_agree(
                range(p.n, 0, args.max_n, 3),
                range(p.k, 1, args.max_k, 3),
            )],
            Suite::KostantRule => vec![verify::kostant_vs_rule(
                range(p.n, 0, args.max_n, 3),
                range(p.k, 1, args.max_k, 3),
            )],
            Suite::Oracle => vec![verify::oracle(&families)],
            Suite::Heisenberg => vec![verify::heisenberg(range(p.n, 0, args.max_n, 5))],
            Suite::Free2step => vec![verify::free_two_step(range(p.k, 1, args.max_k, 3))],
            Suite::Euler => vec![verify::euler(&families)],
            Suite::Lengths => vec![verify::lengths(args.max_rank)],
            Suite::StripColumns => vec![verify::lemma_strip_columns(args.cases, args.seed)],
            Suite::Stable => vec![verify::stable_range(
                range(p.n, 0, args.max_n, 4),
                range(p.k, 1, args.max_k, 3),
            )],
            Suite::All => Vec::new(),
        }
    };
    Ok(if args.suite == Suite::All {
        Suite::value_variants()
            .iter()
            .filter(|&&s| s != Suite::All)
            .flat_map(|&s| one(s))
            .collect()
    } else {
        one(args.suite)
    })
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let reports = match run_suites(args) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let passed = reports.iter().all(|r| r.passed);
    let mut stderr = String::new();
    for r in reports.iter().filter(|r| !r.passed) {
        stderr.push_str(&format!("suite {} failed\n", r.suite));
        for f in &r.failures {
            stderr.push_str(&format!("  {f}\n"));
        }
    }
    Outcome {
        stdout: pretty(&json!({ "passed": passed, "suites": reports })),
        stderr,
        code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
    }
}

fn rational_json(x: &Rational64) -> Value {
    if x.is_integer() {
        json!(x.to_integer())
    } else {
        json!(x.to_string())
    }
}

fn cmd_wp(args: &WpArgs) -> Result<String> {
    let family = match args.family {
        WpFamily::Sp => WeylFamily::Sp,
        WpFamily::OOdd => WeylFamily::OOdd,
        WpFamily::OEven => WeylFamily::OEven,
        WpFamily::Gl => WeylFamily::Gl,
    };
    if family != WeylFamily::Gl && args.l != 0 {
        return Err(Error::InvalidParameters("--l only applies to gl".into()));
    }
    let blocks = Blocks::new(args.k, args.n, args.l);
    let rho = weyl::rho(family, blocks)?;
    let zero = vec![Rational64::from_integer(0); rho.len()];
    let mut rows = Vec::new();
    for w in weyl::enumerate_wp(family, blocks)? {
        rows.push((
            w.length(&rho)?,
            w.rho_image(&rho)?,
            w.dot_action(&zero, &rho)?,
        ));
    }
    rows.sort();
    Ok(match args.format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(len, image, levi)| {
                    json!({
                        "length": len,
                        "w_rho": image.iter().map(rational_json).collect::<Vec<_>>(),
                        "levi_weight": levi.iter().map(rational_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            pretty(
                &json!({ "family": format!("{family:?}"), "count": rows.len(), "elements": items }),
            )
        }
        Format::Tsv => {
            let mut s = String::from("length\tw_rho\tlevi_weight\n");
            for (len, image, levi) in &rows {
                s.push_str(&format!(
                    "{len}\t({})\t({})\n",
                    image.iter().join(", "),
                    levi.iter().join(", ")
                ));
            }
            s
        }
        Format::Paper => rows
            .iter()
            .map(|(len, image, _)| format!("{len}  ({})\n", image.iter().join(", ")))
            .collect(),
    })
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            Error::InvalidParameters(format!(
                "{THREADS_ENV} must be a positive integer, got `{value}`"
            ))
        })?;
    // a pool may already exist when called twice in one process
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    if let Err(e) = configure_threads() {
        return Outcome::usage(e);
    }
    let text = match &cli.command {
        Command::Homology(a) => cmd_homology(a),
        Command::Modrule(a) => cmd_modrule(a),
        Command::Wp(a) => cmd_wp(a),
        Command::Verify(a) => return cmd_verify(a),
    };
    match text {
        Ok(s) => Outcome::ok(s),
        Err(e) => Outcome::usage(e),
    }
}

/// Parses arguments, runs, writes output, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = execute(&cli);
    let output = match &cli.command {
        Command::Homology(HomologyArgs {
            output: Some(path), ..
        }) if outcome.code == EXIT_OK => {
            if let Err(e) = std::fs::write(path, &outcome.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
            String::new()
        }
        _ => outcome.stdout,
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(output.as_bytes());
    let _ = stdout.flush();
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Outcome {
        let cli =
            Cli::try_parse_from(std::iter::once("nilhom").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    #[test]
    fn homology_formats() {
        let out = exec(&[
            "homology", "sp", "--n", "2", "--k", "2", "--format", "paper",
        ]);
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout, verify::SP_2_2_TABLE);
        let out = exec(&["homology", "sp", "--n", "1", "--k", "1", "--format", "tsv"]);
        assert_eq!(out.stdout.lines().count(), 5);
        let out = exec(&["homology", "gl", "--n", "1", "--k", "1", "--l", "1"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 6);
        assert_eq!(v["family"], "gl");
        assert_eq!(v["params"]["l"], 1);
    }

    #[test]
    fn modrule_examples() {
        let out = exec(&["modrule", "sp", "--lambda", "[1,1,1]", "--n", "1"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["index"], 1);
        assert_eq!(v["tau"], json!([1]));
        assert_eq!(v["agree"], true);
        let out = exec(&["modrule", "sp", "--lambda", "[6,5,5,3,2,1,1]", "--n", "1"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["index"], "inf");
        assert_eq!(v["tau"], Value::Null);
        let out = exec(&["modrule", "sp", "--lambda", "[]", "--n", "3"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["index"], 0);
        assert_eq!(v["tau"], json!([]));
        let out = exec(&["modrule", "o", "--lambda", "[2,1]", "--m", "1"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["index"], 1);
        assert_eq!(v["associated"], true);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(exec(&["homology", "sp", "--n", "2"]).code, EXIT_USAGE);
        assert_eq!(
            exec(&["homology", "sp", "--n", "2", "--k", "0"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            exec(&["homology", "sp", "--n", "20", "--k", "2"]).code,
            EXIT_USAGE
        );
        assert_eq!(exec(&["modrule", "o", "--lambda", "[1]"]).code, EXIT_USAGE);
        assert_eq!(
            exec(&["wp", "sp", "--n", "1", "--k", "1", "--l", "1"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            run(["nilhom", "modrule", "sp", "--lambda", "[1,2]", "--n", "1"]),
            EXIT_USAGE
        );
        assert_eq!(run(["nilhom", "frobnicate"]), EXIT_USAGE);
    }

    #[test]
    fn verify_reports() {
        let out = exec(&["verify", "defs-agree", "--n", "0", "--k", "1"]);
        assert_eq!(out.code, EXIT_OK);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["suites"][0]["suite"], "defs-agree");
        let out = exec(&["verify", "oracle", "--family", "sp", "--n", "1", "--k", "1"]);
        assert_eq!(out.code, EXIT_OK);
        let out = exec(&["verify", "counts", "--n", "1", "--k", "0"]);
        assert_eq!(out.code, EXIT_VERIFY_FAILED);
        assert!(out.stderr.contains("counts"));
    }

    #[test]
    fn wp_listing() {
        let out = exec(&["wp", "sp", "--n", "1", "--k", "1", "--format", "paper"]);
        assert_eq!(out.stdout, "0  (2, 1)\n1  (1, 2)\n2  (-1, 2)\n3  (-2, 1)\n");
        let out = exec(&["wp", "o-odd", "--n", "1", "--k", "1"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["count"], 4);
        assert_eq!(v["elements"][0]["w_rho"], json!(["3/2", "1/2"]));
        let out = exec(&["wp", "gl", "--n", "1", "--k", "1", "--l", "1"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["count"], 6);
    }
}
