//! Command-line surface.
//!
//! Exit codes: 0 success (or a passing/vacuous check), 1 a check failed,
//! 2 a check's hypothesis is not met, 3 bad input or usage.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::betti::{ek_betti, quotient_diagram, BettiDiagram};
use crate::cli::parse::IdealExpr;
use crate::cli::render::{render_betti, render_decomposition, Normalization};
use crate::decompose::bs_decompose;
use crate::enumerate::{run_campaign, CampaignConfig, Check};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, variable_name};
use crate::verify;

pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lexbs", version, about = "Betti diagrams and Boij-Söderberg decompositions of lex-segment ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Comma-separated generators, e.g. "x^2, xy, xz, y^2".
    ideal: String,
    /// Number of variables.
    #[arg(long = "vars", default_value_t = 3)]
    vars: usize,
}

#[derive(Clone, Copy, ValueEnum, Debug)]
enum Norm {
    Lcm,
    Unit,
}

#[derive(Clone, Copy, ValueEnum, Debug)]
enum CheckArg {
    Thm1,
    Cor,
    Thm2,
    Conjecture,
    Bhp,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Betti table (stable ideals only).
    Betti {
        #[command(flatten)]
        input: IdealArgs,
        /// Table of R/I instead of I.
        #[arg(long)]
        quotient: bool,
    },
    /// Greedy Boij-Söderberg decomposition.
    Decompose {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long)]
        quotient: bool,
        #[arg(long, value_enum, default_value_t = Norm::Lcm)]
        norm: Norm,
        /// Emit `p/q<TAB>d0,d1,...` lines only.
        #[arg(long)]
        machine: bool,
    },
    /// Check one statement on one ideal.
    Check {
        #[arg(value_enum)]
        which: CheckArg,
        #[command(flatten)]
        input: IdealArgs,
    },
    /// Attribute each summand of beta(L) to the colon ideals or (L, x).
    Explain {
        /// Artinian lex-segment ideal in k[x,y,z].
        ideal: String,
    },
    /// Run checks over every Artinian lex ideal of k[x,y,z] up to a degree.
    Enumerate {
        #[arg(long = "max-deg")]
        max_deg: u32,
        #[arg(long, value_delimiter = ',', default_value = "thm1,thm2,conjecture,ek_vs_cone,bhp,lemmas")]
        checks: Vec<String>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        machine: bool,
    },
    /// Generator helpers.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// All monomials of degree D in the given variables, e.g. `power-ideal y,z 8`.
    PowerIdeal {
        /// Comma-separated variable names.
        vars: String,
        degree: u32,
        /// Number of variables of the ambient ring.
        #[arg(long = "vars", default_value_t = 3)]
        ambient: usize,
    },
}

fn load(text: &str, n: usize, err: &mut dyn Write) -> Result<MonomialIdeal> {
    let expr = IdealExpr::parse(text, n)?;
    for w in expr.warnings() {
        let _ = writeln!(err, "warning: {w}");
    }
    expr.to_ideal()
}

fn diagram(ideal: &MonomialIdeal, quotient: bool) -> Result<BettiDiagram> {
    let b = ek_betti(ideal)?;
    Ok(if quotient { quotient_diagram(&b) } else { b })
}

fn power_ideal(vars: &str, degree: u32, n: usize) -> Result<String> {
    let names: Vec<String> = (1..=n).map(|i| variable_name(n, i)).collect();
    let mut chosen = Vec::new();
    for v in vars.split(',').map(str::trim) {
        match names.iter().position(|name| name == v) {
            Some(i) => chosen.push(i),
            None => return Err(Error::UnknownVariable { name: v.to_string(), offset: vars.find(v).unwrap_or(0) }),
        }
    }
    let gens: Vec<String> = monomials_of_degree(n, degree)
        .into_iter()
        .filter(|u| u.exponents().iter().enumerate().all(|(i, &e)| e == 0 || chosen.contains(&i)))
        .map(|u| u.to_string())
        .collect();
    Ok(gens.join(", "))
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let w = |out: &mut dyn Write, s: &str| {
        let _ = out.write_all(s.as_bytes());
    };
    match cli.command {
        Command::Betti { input, quotient } => {
            let i = load(&input.ideal, input.vars, err)?;
            w(out, &render_betti(&diagram(&i, quotient)?));
            Ok(0)
        }
        Command::Decompose { input, quotient, norm, machine } => {
            let i = load(&input.ideal, input.vars, err)?;
            let d = bs_decompose(&diagram(&i, quotient)?)?;
            let norm = match norm {
                Norm::Lcm => Normalization::Lcm,
                Norm::Unit => Normalization::Unit,
            };
            w(out, &render_decomposition(&d, norm, machine));
            Ok(0)
        }
        Command::Check { which, input } => {
            let i = load(&input.ideal, input.vars, err)?;
            let report = match which {
                CheckArg::Thm1 => verify::check_theorem1(&i),
                CheckArg::Cor => verify::check_corollary(&i),
                CheckArg::Thm2 => verify::check_theorem2(&i),
                CheckArg::Conjecture => verify::check_conjecture(&i),
                CheckArg::Bhp => verify::check_bhp_dominance(&i),
            };
            w(out, &report.to_string());
            Ok(report.exit_code())
        }
        Command::Explain { ideal } => {
            let i = load(&ideal, 3, err)?;
            w(out, &verify::explain_chain(&i)?.to_string());
            Ok(0)
        }
        Command::Enumerate { max_deg, checks, jobs, machine } => {
            let checks = checks.iter().map(|c| c.trim().parse::<Check>()).collect::<Result<Vec<_>>>()?;
            let mut cfg = CampaignConfig::new(max_deg, checks);
            cfg.parallelism = jobs;
            let summary = run_campaign(&cfg)?;
            if machine {
                w(out, &summary.render_machine());
            } else {
                w(out, &summary.to_string());
            }
            if summary.conjecture_counterexamples() > 0 {
                let _ = writeln!(err, "conjecture counterexamples found: {}", summary.conjecture_counterexamples());
            }
            Ok(summary.exit_status())
        }
        Command::Gen { what: GenCommand::PowerIdeal { vars, degree, ambient } } => {
            w(out, &power_ideal(&vars, degree, ambient)?);
            w(out, "\n");
            Ok(0)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
