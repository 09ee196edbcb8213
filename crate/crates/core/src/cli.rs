//! The `symrep` command line.
//!
//! [`run`] does all the work and returns the exit status together with the
//! text destined for stdout and stderr, so the binary is a thin wrapper and
//! tests can drive the CLI in-process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::characters::{character_table, mn_character, CycleType};
use crate::combinatorics::{count_tableaux, enumerate_partitions, enumerate_tableaux, format_raw, SkewShape};
use crate::error::Error;
use crate::limits::{Limits, SIZE_CAP_ENV};
use crate::oracle::{run_suite, spectrum_bruteforce, suite_ceiling, CheckStatus};
use crate::permutation::Permutation;
use crate::linalg::format_scalar;
use crate::representations::{format_real, matrix_json, Entries, FormKind, MatrixSubject, RepMatrix, YoungModule};

const FORMATS: &str = "\
Formats:
  partition     comma list of parts, e.g. 3,2,1
  skew shape    outer/inner, e.g. 3,2/1
  cycle type    comma list of cycle lengths in any order, e.g. 3,1,1
  permutation   cycle notation \"(1 2 3)(4 5)\" for --perm, images 2,3,1 for --oneline
  tableau       rows separated by ';', boxes of the inner shape shown as '.'
  content       [a_1,...,a_n]

Exit status: 0 success, 1 verification failure, 2 usage error, 3 size cap exceeded.
The environment variable SYMREP_SIZE_CAP overrides the enumeration cap (default 20).";

#[derive(Debug, Parser)]
#[command(name = "symrep", version, about = "Irreducible representations of the symmetric groups in exact arithmetic")]
#[command(after_help = FORMATS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct JsonFlag {
    /// Emit JSON instead of the human-readable form.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the partitions of n in reverse lexicographic order.
    Partitions {
        n: usize,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// List the standard tableaux of a (skew) shape with their content vectors.
    Tableaux {
        shape: SkewShape,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Number of standard tableaux of a (skew) shape.
    Dim {
        shape: SkewShape,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Content vectors of size n, grouped by shape.
    Spectrum {
        n: usize,
        /// Compute the joint YJM eigenvalues on the regular representation instead (n <= 5).
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Matrix of a group element in Young's seminormal or orthogonal form.
    Matrix {
        shape: SkewShape,
        #[command(flatten)]
        subject: Subject,
        /// seminormal (exact rationals) or orthogonal (floating point).
        #[arg(long, default_value = "seminormal")]
        form: FormKind,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Character value by the Murnaghan-Nakayama rule.
    Character {
        shape: SkewShape,
        cycle_type: CycleType,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Full character table of S_n.
    CharTable {
        n: usize,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[command(flatten)]
        out: JsonFlag,
    },
    /// Run the verification suite for sizes up to n.
    Verify {
        n: usize,
        /// Raise every size cap by one.
        #[arg(long)]
        deep: bool,
        #[command(flatten)]
        out: JsonFlag,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Subject {
    /// Permutation in cycle notation, e.g. "(1 2 3)(4 5)".
    #[arg(long)]
    perm: Option<String>,
    /// Permutation in one-line notation, e.g. 2,3,1.
    #[arg(long)]
    oneline: Option<String>,
    /// Coxeter generator s_i = (i i+1).
    #[arg(long)]
    generator: Option<usize>,
    /// Young-Jucys-Murphy element X_j.
    #[arg(long)]
    yjm: Option<usize>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { status: 0, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        let status = if matches!(e, Error::SizeCap { .. }) { 3 } else { 2 };
        let mut stderr = format!("error: {e}\n");
        if status == 3 {
            let _ = writeln!(stderr, "hint: `verify --deep` raises the caps by one; {SIZE_CAP_ENV} sets the enumeration cap");
        }
        Output { status, stdout: String::new(), stderr }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { status: 2, stdout: String::new(), stderr: text }
            } else {
                Output::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => Output::error(&e),
    }
}

fn dispatch(command: Command) -> crate::Result<Output> {
    let text = match command {
        Command::Partitions { n, out } => {
            let ps = enumerate_partitions(n)?;
            if out.json {
                json_line(&json!(ps.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>()))
            } else {
                lines(ps.iter().map(ToString::to_string))
            }
        }
        Command::Tableaux { shape, out } => {
            let tabs = enumerate_tableaux(&shape)?;
            if out.json {
                let docs: Vec<_> =
                    tabs.iter().map(|t| json!({"tableau": t.to_string(), "contents": t.contents()})).collect();
                json_line(&json!(docs))
            } else {
                lines(tabs.iter().map(|t| format!("{t}  {}", format_raw(&t.contents()))))
            }
        }
        Command::Dim { shape, out } => {
            crate::limits::check("dimension", shape.size(), Limits::current().enumeration)?;
            let dim = count_tableaux(&shape);
            if out.json {
                json_line(&json!({"shape": shape.to_string(), "dim": dim}))
            } else {
                format!("{dim}\n")
            }
        }
        Command::Spectrum { n, oracle, out } => spectrum(n, oracle, out.json)?,
        Command::Matrix { shape, subject, form, out } => matrix(shape, subject, form, out.json)?,
        Command::Character { shape, cycle_type, out } => {
            let value = mn_character(&shape, &cycle_type)?;
            if out.json {
                json_line(&json!({"shape": shape.to_string(), "cycle_type": cycle_type.to_string(), "value": value}))
            } else {
                format!("{value}\n")
            }
        }
        Command::CharTable { n, csv, out } => {
            let table = character_table(n)?;
            if csv {
                table.to_csv()
            } else if out.json {
                format!("{}\n", table.to_json())
            } else {
                table.to_string()
            }
        }
        Command::Verify { n, deep, out } => return verify(n, deep, out.json),
    };
    Ok(Output::ok(text))
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn json_line(value: &serde_json::Value) -> String {
    format!("{value}\n")
}

fn spectrum(n: usize, oracle: bool, as_json: bool) -> crate::Result<String> {
    let brute = if oracle { Some(spectrum_bruteforce(n)?) } else { None };
    let mut groups = Vec::new();
    for p in enumerate_partitions(n)? {
        let shape = p.to_string();
        let vectors: Vec<Vec<i64>> =
            enumerate_tableaux(&SkewShape::straight(p))?.iter().map(|t| t.contents()).collect();
        groups.push((shape, vectors));
    }
    if as_json {
        let docs: Vec<_> = groups
            .iter()
            .map(|(shape, vectors)| {
                let entries: Vec<_> = vectors
                    .iter()
                    .map(|v| match &brute {
                        Some(b) => json!({"contents": v, "multiplicity": b.get(v).copied().unwrap_or(0)}),
                        None => json!({"contents": v}),
                    })
                    .collect();
                json!({"shape": shape, "vectors": entries})
            })
            .collect();
        return Ok(json_line(&json!(docs)));
    }
    let mut text = String::new();
    for (shape, vectors) in &groups {
        let _ = writeln!(text, "{shape}");
        for v in vectors {
            match &brute {
                Some(b) => {
                    let _ = writeln!(text, "  {}  x{}", format_raw(v), b.get(v).copied().unwrap_or(0));
                }
                None => {
                    let _ = writeln!(text, "  {}", format_raw(v));
                }
            }
        }
    }
    if let Some(b) = &brute {
        let known: usize = groups.iter().map(|(_, v)| v.len()).sum();
        if b.len() != known {
            let _ = writeln!(text, "warning: the oracle found {} tuples, expected {known}", b.len());
        }
    }
    Ok(text)
}

fn matrix(shape: SkewShape, subject: Subject, form: FormKind, as_json: bool) -> crate::Result<String> {
    let module = YoungModule::new(shape.clone())?;
    let degree = module.degree();
    let (subject, m) = if let Some(cycles) = subject.perm {
        let g = Permutation::parse_cycles(&cycles, degree)?;
        let m = module.permutation(&g, form)?;
        (MatrixSubject::Permutation(g), m)
    } else if let Some(images) = subject.oneline {
        let g = Permutation::parse_one_line(&images)?;
        let m = module.permutation(&g, form)?;
        (MatrixSubject::Permutation(g), m)
    } else if let Some(i) = subject.generator {
        (MatrixSubject::Generator(i), module.coxeter(i, form)?)
    } else if let Some(j) = subject.yjm {
        (MatrixSubject::Yjm(j), module.yjm(j, form)?)
    } else {
        unreachable!("clap requires one subject flag")
    };
    if as_json {
        return Ok(format!("{}\n", matrix_json(&shape, &subject, &m)));
    }
    Ok(render_matrix(&m))
}

fn render_matrix(m: &RepMatrix) -> String {
    let cells: Vec<Vec<String>> = match m.entries() {
        Entries::Seminormal(a) => a.to_rows().iter().map(|r| r.iter().map(format_scalar).collect()).collect(),
        Entries::Orthogonal(a) => a.to_rows().iter().map(|r| r.iter().map(|&x| format_real(x)).collect()).collect(),
    };
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut text = String::new();
    let basis: Vec<String> = m.basis().iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "# basis: {}", basis.join(" | "));
    for row in cells {
        let line: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(text, "{}", line.join(" "));
    }
    text
}

fn verify(n: usize, deep: bool, as_json: bool) -> crate::Result<Output> {
    let mut limits = Limits::current();
    if deep {
        limits = limits.deeper();
        limits.install();
    }
    let ceiling = suite_ceiling(&limits);
    if n > ceiling {
        return Err(Error::SizeCap { what: "verify", n, cap: ceiling });
    }
    let reports = run_suite(n, &limits);
    let failed = reports.iter().filter(|r| r.status == CheckStatus::Fail).count();
    let stdout = if as_json {
        format!("{}\n", serde_json::to_string(&reports).expect("reports serialize"))
    } else {
        let mut text = String::new();
        for r in &reports {
            let tag = if r.status == CheckStatus::Pass { "PASS" } else { "FAIL" };
            let _ = writeln!(text, "{tag}  {:<30} n={:<2} {}", r.check_id, r.n, r.detail);
        }
        let _ = writeln!(text, "{} checks, {failed} failed", reports.len());
        text
    };
    let status = if failed > 0 { 1 } else { 0 };
    Ok(Output { status, stdout, stderr: String::new() })
}
