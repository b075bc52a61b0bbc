//! The `siltglue` command line. Every verb parses its arguments, calls one
//! library operation and prints the result.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};

use crate::cyclic_oracle::compare_with_arcs;
use crate::expansion::{Adjoint, ExpansionSpec};
use crate::glue::{self, GlueOutcome, TiltingSpec};
use crate::kronecker::{self, classify_silting, glue_kronecker, parse_row, parse_terms, Summand, Term};
use crate::tube::{Arc, ArcCollection, TubeCtx};

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "siltglue", version, about = "Hom/Ext, tube arcs and gluing of silting and tilting objects")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
#[command(group(ArgGroup::new("category").required(true).args(["tube", "kronecker"])))]
struct Category {
    /// Arcs in the tube of this rank
    #[arg(long, value_name = "N")]
    tube: Option<usize>,
    /// Kronecker modules and two-term complexes
    #[arg(long)]
    kronecker: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// dim Ext¹(A, B)
    Ext {
        a: String,
        b: String,
        #[command(flatten)]
        category: Category,
    },
    /// dim Hom(A, B)
    Hom {
        a: String,
        b: String,
        #[command(flatten)]
        category: Category,
    },
    /// The Auslander-Reiten translate
    Tau {
        a: String,
        #[command(flatten)]
        category: Category,
    },
    /// Glue two Kronecker silting objects along a recollement
    GlueKronecker {
        #[arg(long)]
        row: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Glue tube data with a simple S_λ of the expanded tube
    GlueTube {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_parser = parse_adjoint)]
        side: Adjoint,
        /// S_λ in the expanded tube
        #[arg(long)]
        lambda: String,
        /// The point to expand; may be omitted when the curve has one point
        #[arg(long)]
        point: Option<String>,
    },
    /// Pick the simple, side and reduced data that glue back to the input
    ChooseSeed {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Apply i^* (left) or i^! (right) to the tube data at a point
    Reduce {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_parser = parse_adjoint)]
        adjoint: Adjoint,
        #[arg(long)]
        point: Option<String>,
    },
    /// Check the (B,V) shape of a spec
    Verify {
        #[arg(long)]
        spec: PathBuf,
    },
    /// choose-seed followed by gluing, compared with the input
    RoundTrip {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// List the maximal rigid collections of a tube
    EnumerateRigid {
        #[arg(long)]
        rank: usize,
        /// Defaults to SILTGLUE_MAXLEN, else 2·rank
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        pruefer: bool,
    },
    /// The classification of silting Kronecker modules
    ClassifySilting {
        /// Cut for the infinite families; defaults to SILTGLUE_MAXLEN, else 6
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Compare arc Hom/Ext with the cyclic-quiver oracle
    OracleCheck {
        #[arg(long)]
        rank: usize,
        /// Defaults to SILTGLUE_MAXLEN, else 2·rank + 1
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// The translation quiver in DOT
    EmitQuiver {
        #[arg(long)]
        rank: usize,
        /// Defaults to SILTGLUE_MAXLEN, else 2·rank
        #[arg(long)]
        max_len: Option<usize>,
    },
}

fn parse_adjoint(s: &str) -> Result<Adjoint, String> {
    s.parse()
}

/// A failure: `2` for malformed input, `1` for a domain error.
struct Failure(i32, String);

fn usage(e: impl ToString) -> Failure {
    Failure(2, e.to_string())
}

fn domain(e: impl ToString) -> Failure {
    Failure(1, e.to_string())
}

fn default_bound(given: Option<usize>, fallback: usize) -> Result<usize, Failure> {
    if let Some(b) = given {
        return Ok(b);
    }
    match std::env::var("SILTGLUE_MAXLEN") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("SILTGLUE_MAXLEN must be a number, got '{v}'"))),
        Err(_) => Ok(fallback),
    }
}

fn tube_ctx(n: usize) -> Result<TubeCtx, Failure> {
    TubeCtx::new(n).map_err(usage)
}

fn arc(text: &str) -> Result<Arc, Failure> {
    text.parse::<Arc>().map_err(usage)
}

fn terms(text: &str) -> Result<Vec<Term>, Failure> {
    parse_terms(text).map_err(usage)
}

fn read_spec(path: &PathBuf) -> Result<TiltingSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    text.parse::<TiltingSpec>().map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// The point to work at: the given one, or the only one.
fn pick_point(t: &TiltingSpec, point: Option<String>) -> Result<String, Failure> {
    match point {
        Some(x) => Ok(x),
        None if t.tubes.len() == 1 => Ok(t.tubes.keys().next().cloned().expect("one point")),
        None => Err(usage("the curve has several points; pass --point")),
    }
}

fn expansion(rank: usize, lambda: &str) -> Result<ExpansionSpec, Failure> {
    ExpansionSpec::new(rank, arc(lambda)?).map_err(domain)
}

fn two(category: &Category, a: &str, b: &str, ext: bool) -> Result<String, Failure> {
    if let Some(n) = category.tube {
        let ctx = tube_ctx(n)?;
        let (a, b) = (arc(a)?, arc(b)?);
        let d = if ext { ctx.ext_dim(&a, &b) } else { ctx.hom_dim(&a, &b).map_err(domain)? };
        return Ok(format!("{d}\n"));
    }
    let d = kronecker::hom_terms(&terms(a)?, &terms(b)?, i64::from(ext)).map_err(domain)?;
    Ok(format!("{d}\n"))
}

fn tau(category: &Category, a: &str) -> Result<String, Failure> {
    if let Some(n) = category.tube {
        return Ok(format!("{}\n", tube_ctx(n)?.tau(&arc(a)?)));
    }
    match kronecker::parse_object(a).map_err(usage)? {
        Summand::Module(m) => match kronecker::ar_translate(&m) {
            Some(t) => Ok(format!("{t}\n")),
            None => Err(domain(format!("{m} is projective; its translate is not a module"))),
        },
        s @ Summand::Shifted(_) => Err(domain(format!("{s} is not a module"))),
    }
}

fn collection_line(c: &ArcCollection) -> String {
    c.arcs.iter().map(Arc::to_string).collect::<Vec<_>>().join(" ")
}

fn outcome_line(o: &GlueOutcome) -> String {
    match o {
        GlueOutcome::NewSummand(a) => format!("new-summand {a}"),
        GlueOutcome::TorsionUnchanged => "torsion-unchanged".to_string(),
        GlueOutcome::Undetermined => "undetermined".to_string(),
    }
}

fn dispatch(command: Command) -> Result<String, Failure> {
    match command {
        Command::Ext { a, b, category } => two(&category, &a, &b, true),
        Command::Hom { a, b, category } => two(&category, &a, &b, false),
        Command::Tau { a, category } => tau(&category, &a),
        Command::GlueKronecker { row, left, right } => {
            let row = parse_row(&row).map_err(usage)?;
            let glued = glue_kronecker(&row, &terms(&left)?, &terms(&right)?).map_err(domain)?;
            Ok(format!("{}\n", glued.sum))
        }
        Command::GlueTube { spec, side, lambda, point } => {
            let t = read_spec(&spec)?;
            let x = pick_point(&t, point)?;
            let rank = t.tube(&x).ok_or_else(|| domain(format!("no tube at point {x}")))?.rank;
            let e = expansion(rank + 1, &lambda)?;
            let (outcome, out) = glue::glue(&e, &t, &x, side).map_err(domain)?;
            Ok(format!("{}\n{out}", outcome_line(&outcome)))
        }
        Command::ChooseSeed { spec, point } => {
            let t = read_spec(&spec)?;
            let seed = glue::choose_seed(&t, &point).map_err(domain)?;
            Ok(format!("side {}\nlambda {}\n{}", seed.side, seed.lambda, seed.reduced))
        }
        Command::Reduce { spec, lambda, adjoint, point } => {
            let t = read_spec(&spec)?;
            let x = pick_point(&t, point)?;
            let rank = t.tube(&x).ok_or_else(|| domain(format!("no tube at point {x}")))?.rank;
            let e = expansion(rank, &lambda)?;
            Ok(glue::reduce_spec(&e, &t, &x, adjoint).map_err(domain)?.to_string())
        }
        Command::Verify { spec } => {
            let verdict = read_spec(&spec)?.verify();
            if verdict.is_valid() {
                Ok("valid\n".to_string())
            } else {
                Err(domain(format!("invalid\n{}", verdict.reasons.join("\n"))))
            }
        }
        Command::RoundTrip { spec, point } => {
            let t = read_spec(&spec)?;
            glue::round_trip(&t, &point).map_err(domain)?;
            Ok("ok\n".to_string())
        }
        Command::EnumerateRigid { rank, max_len, pruefer } => {
            let ctx = tube_ctx(rank)?;
            let bound = default_bound(max_len, 2 * rank)?;
            let mut out = String::new();
            for c in ctx.enumerate_maximal_rigid(bound, pruefer) {
                writeln!(out, "{}", collection_line(&c)).expect("write to string");
            }
            Ok(out)
        }
        Command::ClassifySilting { bound } => {
            let bound = default_bound(bound, 6)?;
            Ok(classify_silting(bound).iter().map(|e| format!("{e}\n")).collect())
        }
        Command::OracleCheck { rank, max_len } => {
            let bound = default_bound(max_len, 2 * rank + 1)?;
            let report = compare_with_arcs(rank, bound).map_err(usage)?;
            if report.mismatches.is_empty() {
                Ok(report.to_string())
            } else {
                Err(domain(report))
            }
        }
        Command::EmitQuiver { rank, max_len } => {
            let bound = default_bound(max_len, 2 * rank)?;
            Ok(tube_ctx(rank)?.translation_quiver(bound + 1).to_dot())
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: 2, stdout: String::new(), stderr: text }
            } else {
                CliOutput { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => CliOutput { code: 0, stdout, stderr: String::new() },
        Err(Failure(code, msg)) => CliOutput { code, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}
