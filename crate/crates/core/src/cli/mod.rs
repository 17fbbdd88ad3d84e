//! Command-line front end. [`run`] parses arguments, builds a [`Report`] and
//! returns the rendered output with the exit code; the binary only forwards
//! them to the process.
//!
//! Exit codes: 0 on success, 1 when a verification suite or audit fails,
//! 2 for usage, parse and configuration errors.

mod state;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::basicrep::BasicRep;
use crate::error::{Error, Result};
use crate::lattice::RootSystem;
use crate::report::{Cell, Cutoffs, Format, Report, Table};
use crate::verify::{self, Suite, SuiteConfig};
use crate::verq::{cosocle_report, tensor_audit_so16, VerQModule};

pub use state::{parse_state, StateExpr};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kstructure",
    version,
    about = "Compact subalgebras of affine algebras and their finite-dimensional modules"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Finite root system: A<r>, D<r> (r >= 4), E6, E7 or E8.
    #[arg(long, global = true, default_value = "A1")]
    pub algebra: String,

    /// Loop-level cutoff for basic-representation states.
    #[arg(short = 'L', long = "loop-cutoff", global = true, default_value_t = 2)]
    pub loop_cutoff: u32,

    /// Parabolic level.
    #[arg(short = 'N', long = "level", global = true, default_value_t = 1)]
    pub level: u32,

    /// Seed for randomised suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    /// Write the report to this path instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DimsTarget {
    Basic,
    Verq,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summary of the root system.
    Info,
    /// Graded dimension tables.
    Dims {
        #[arg(long, value_enum)]
        what: DimsTarget,
    },
    /// Project a basic-representation state onto Ver_Q(N).
    Project {
        /// State expression, for example "e[1,0]*h1[-1]^2".
        #[arg(long)]
        state: String,
    },
    /// Run invariant suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Compare E8 graded dimensions of Ver_Q(N) with so(16) tensor products.
    #[command(name = "audit-so16")]
    AuditSo16,
    /// Dimensions of the kernel filtration up to level N.
    Cosocle,
}

/// Rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok((report, failed)) => match emit(&cli.config, &report) {
            Ok(stdout) => {
                let stderr = if failed {
                    failure_dump(&report)
                } else {
                    String::new()
                };
                Outcome {
                    code: if failed { EXIT_FAILURE } else { EXIT_OK },
                    stdout,
                    stderr,
                }
            }
            Err(e) => usage_error(&e),
        },
        Err(e) => usage_error(&e),
    }
}

fn usage_error(e: &Error) -> Outcome {
    Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn emit(config: &Config, report: &Report) -> Result<String> {
    let body = report.render(config.format)?;
    match &config.out {
        Some(path) => {
            std::fs::write(path, body)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(body),
    }
}

fn failure_dump(report: &Report) -> String {
    let mut out = String::from("verification failed\n");
    for t in report
        .tables
        .iter()
        .filter(|t| t.name == "counterexamples" || t.name == "so16_audit")
    {
        for row in &t.rows {
            let line: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Int(n) => n.to_string(),
                    Cell::Bool(b) => b.to_string(),
                    Cell::Text(s) => s.clone(),
                })
                .collect();
            out.push_str(&format!("  {}\n", line.join(" | ")));
        }
    }
    out
}

/// Build the report; the flag is true when a check failed.
fn execute(cli: &Cli) -> Result<(Report, bool)> {
    let cfg = &cli.config;
    let rs = RootSystem::parse(&cfg.algebra)?;
    let name = rs.name();
    match &cli.command {
        Command::Info => Ok((info(&rs), false)),
        Command::Dims {
            what: DimsTarget::Basic,
        } => {
            let mut report = Report::new(
                &name,
                Cutoffs {
                    loop_cutoff: Some(cfg.loop_cutoff),
                    parabolic_level: None,
                },
            );
            let rep = BasicRep::new(&rs, cfg.loop_cutoff as i64);
            let mut t = Table::new("basic_graded_dims", &["level", "dim"]);
            for level in 0..=cfg.loop_cutoff {
                t.push(vec![level.into(), rep.graded_dimension(level).into()]);
            }
            report.tables.push(t);
            Ok((report, false))
        }
        Command::Dims {
            what: DimsTarget::Verq,
        } => {
            let mut report = Report::new(
                &name,
                Cutoffs {
                    loop_cutoff: None,
                    parabolic_level: Some(cfg.level),
                },
            );
            let module = VerQModule::build(&rs, cfg.level);
            let mut t = Table::new("verq_graded_dims", &["parabolic_level", "dim"]);
            for (k, d) in module.graded_dims().iter().enumerate() {
                t.push(vec![k.into(), (*d).into()]);
            }
            report.tables.push(t);
            let mut s = Table::new("verq_summary", &["level", "cosets", "dim"]);
            s.push(vec![
                cfg.level.into(),
                module.coset_representatives().len().into(),
                module.dim().into(),
            ]);
            report.tables.push(s);
            Ok((report, false))
        }
        Command::Project { state } => project(&rs, cfg, state),
        Command::Verify { suite } => {
            let suite_cfg = SuiteConfig {
                cap: cfg.level,
                loop_cutoff: cfg.loop_cutoff,
                seed: cfg.seed,
            };
            let results = verify::run(&rs, *suite, &suite_cfg);
            let mut report = Report::new(
                &name,
                Cutoffs {
                    loop_cutoff: Some(cfg.loop_cutoff),
                    parabolic_level: Some(cfg.level),
                },
            );
            let mut summary = Table::new("suites", &["suite", "checks", "failures", "status"]);
            let mut examples = Table::new("counterexamples", &["suite", "index", "detail"]);
            let mut failed = false;
            for r in &results {
                failed |= !r.passed();
                summary.push(vec![
                    r.suite.as_str().into(),
                    r.checks.into(),
                    r.failures.into(),
                    if r.passed() { "pass" } else { "fail" }.into(),
                ]);
                for (i, c) in r.counterexamples.iter().enumerate() {
                    examples.push(vec![r.suite.as_str().into(), i.into(), c.as_str().into()]);
                }
                report
                    .diagnostics
                    .notes
                    .extend(r.notes.iter().map(|n| format!("{}: {n}", r.suite)));
            }
            report.tables.push(summary);
            report.tables.push(examples);
            Ok((report, failed))
        }
        Command::AuditSo16 => {
            let rows = tensor_audit_so16(&rs, cfg.level)?;
            let mut report = Report::new(
                &name,
                Cutoffs {
                    loop_cutoff: None,
                    parabolic_level: Some(cfg.level),
                },
            );
            let mut t = Table::new(
                "so16_audit",
                &[
                    "level",
                    "verq_graded_dim",
                    "so16_decomposition",
                    "so16_dim",
                    "matches",
                ],
            );
            let mut failed = false;
            for r in rows {
                failed |= !r.matches;
                t.push(vec![
                    r.level.into(),
                    r.verq_graded_dim.into(),
                    r.so16_decomposition.into(),
                    r.so16_dim.into(),
                    r.matches.into(),
                ]);
            }
            report.tables.push(t);
            Ok((report, failed))
        }
        Command::Cosocle => {
            let mut report = Report::new(
                &name,
                Cutoffs {
                    loop_cutoff: None,
                    parabolic_level: Some(cfg.level),
                },
            );
            let mut t = Table::new(
                "cosocle",
                &[
                    "level",
                    "verq_dim",
                    "top_graded_dim",
                    "quotient_dim",
                    "measured_image_rank",
                ],
            );
            let mut failed = false;
            for r in cosocle_report(&rs, cfg.level) {
                failed |= r.measured_image_rank.is_some_and(|m| m != r.verq_dim);
                t.push(vec![
                    r.level.into(),
                    r.verq_dim.into(),
                    r.top_graded_dim.into(),
                    r.quotient_dim.into(),
                    r.measured_image_rank.map_or(Cell::from("-"), Cell::from),
                ]);
            }
            report.tables.push(t);
            Ok((report, failed))
        }
    }
}

fn info(rs: &RootSystem) -> Report {
    let mut report = Report::new(&rs.name(), Cutoffs::default());
    let roots = rs.roots().len();
    let norm4 = rs
        .enumerate_lattice_vectors(4)
        .iter()
        .filter(|v| rs.norm(v) == 4)
        .count();
    let mut t = Table::new("summary", &["property", "value"]);
    t.push(vec!["rank".into(), rs.rank().into()]);
    t.push(vec!["roots".into(), roots.into()]);
    t.push(vec![
        "positive_roots".into(),
        rs.positive_roots().count().into(),
    ]);
    t.push(vec!["dimension".into(), (roots + rs.rank()).into()]);
    t.push(vec!["norm4_vectors".into(), norm4.into()]);
    t.push(vec!["compact_dimension".into(), (roots / 2).into()]);
    report.tables.push(t);
    let cols: Vec<String> = (1..=rs.rank()).map(|j| format!("a{j}")).collect();
    let col_refs: Vec<&str> = std::iter::once("row")
        .chain(cols.iter().map(String::as_str))
        .collect();
    let mut c = Table::new("cartan_matrix", &col_refs);
    for (i, row) in rs.cartan_matrix().iter().enumerate() {
        let mut cells = vec![Cell::from(format!("a{}", i + 1))];
        cells.extend(row.iter().map(|x| Cell::from(*x)));
        c.push(cells);
    }
    report.tables.push(c);
    report
}

fn project(rs: &RootSystem, cfg: &Config, expr: &str) -> Result<(Report, bool)> {
    let parsed = parse_state(expr)?.resolve(rs.rank())?;
    let rep = BasicRep::new(rs, cfg.loop_cutoff as i64);
    let mut v = rep.zero();
    for (gamma, f) in &parsed {
        rs.check_vector(gamma)?;
        v = v.add(&rep.state(gamma, f)?);
    }
    let module = VerQModule::build(rs, cfg.level);
    let image = module.project(&v);
    let mut report = Report::new(
        &rs.name(),
        Cutoffs {
            loop_cutoff: Some(cfg.loop_cutoff),
            parabolic_level: Some(cfg.level),
        },
    );
    let mut input = Table::new("state", &["lattice", "polynomial"]);
    for (gamma, f) in v.components() {
        input.push(vec![gamma.to_string().into(), f.to_string().into()]);
    }
    report.tables.push(input);
    let mut t = Table::new("projection", &["coset", "coefficient"]);
    for (coset, u) in image.terms() {
        t.push(vec![coset.to_string().into(), u.to_string().into()]);
    }
    report.tables.push(t);
    let mut s = Table::new("summary", &["property", "value"]);
    s.push(vec!["in_kernel".into(), image.is_zero().into()]);
    report.tables.push(s);
    report.diagnostics.truncated_terms = rep.truncated_terms();
    Ok((report, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("kstructure").chain(args.iter().copied()))
    }

    #[test]
    fn dims_basic_e8() {
        let out = go(&[
            "dims",
            "--what",
            "basic",
            "--algebra",
            "E8",
            "-L",
            "2",
            "--format",
            "csv",
        ]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        assert!(out.stdout.contains(
            "basic_graded_dims,0,1\nbasic_graded_dims,1,248\nbasic_graded_dims,2,4124\n"
        ));
    }

    #[test]
    fn project_kernel_example() {
        let out = go(&[
            "project",
            "--algebra",
            "A1",
            "-N",
            "0",
            "--state",
            "e[0]*h1[-1]",
            "--format",
            "csv",
        ]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        assert!(out.stdout.contains("summary,in_kernel,true"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(go(&["project", "--state", "e[1"]).code, EXIT_USAGE);
        assert_eq!(go(&["info", "--algebra", "B2"]).code, EXIT_USAGE);
        assert_eq!(go(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(go(&["audit-so16", "--algebra", "A2"]).code, EXIT_USAGE);
        assert_eq!(
            go(&["project", "--state", "h1[-1]^4", "-L", "2"]).code,
            EXIT_USAGE
        );
    }

    #[test]
    fn failure_dump_lists_counterexamples() {
        let mut report = Report::new("A1", Cutoffs::default());
        let mut t = Table::new("counterexamples", &["suite", "case"]);
        t.push(vec!["rho".into(), "n=3".into()]);
        report.tables.push(t);
        assert_eq!(failure_dump(&report), "verification failed\n  rho | n=3\n");
    }

    #[test]
    fn help_exits_zero() {
        let out = go(&["--help"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("audit-so16"));
    }
}
