//! Command-line front end.
//!
//! Exit codes: 0 on success (and `equal`), 1 for a negative answer
//! (`not-equal`, oracle disagreement), 2 for usage and input errors.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};

use crate::barbell::{add_meridian_terms, delta_k, realize, theta, theta_cerf, theta_g, theta_special, CerfIntersectionData};
use crate::error::Error;
use crate::manifold::ManifoldData;
use crate::oracle::{agreement_run, random_relation_walk, FiniteSetup};
use crate::syntax::{
    format_barbell, format_manifold, parse_barbell, parse_manifold, parse_module_elem, parse_wh, parse_word,
    parse_word_list,
};
use crate::whitehead::{involute, wh_equal, wh_normalize};

#[derive(Parser, Debug)]
#[command(name = "hwtheta", version, about = "Normal forms in Wh_1(pi_1; Z_2 x pi_2) and barbell invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Arithmetic in the twisted Whitehead group
    #[command(subcommand)]
    Wh(WhCommand),
    /// Invariants of barbell descriptors
    #[command(subcommand)]
    Barbell(BarbellCommand),
    /// Independent checks of the normal form
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args, Debug)]
struct ManifoldArg {
    /// Manifold file (`-` for stdin)
    #[arg(long)]
    manifold: String,
}

#[derive(Args, Debug)]
struct BarbellSource {
    /// Manifold file; defaults to the barbell file
    #[arg(long)]
    manifold: Option<String>,
    /// Barbell descriptor file (`-` for stdin)
    #[arg(long)]
    barbell: String,
}

#[derive(Subcommand, Debug)]
enum WhCommand {
    /// Print the normal form of an element
    Normalize {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long)]
        expr: String,
    },
    /// Decide equality; prints `equal` or `not-equal`
    Eq {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Normal form of the involution applied to an element
    Bar {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Subcommand, Debug)]
enum BarbellCommand {
    /// Invariant of the pseudo-isotopy f_beta
    Theta {
        #[command(flatten)]
        source: BarbellSource,
    },
    /// Invariant of the companion pseudo-isotopy g_beta
    ThetaG {
        #[command(flatten)]
        source: BarbellSource,
    },
    /// (0, sigma) * sum_i [gamma_i]
    ThetaSpecial {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        /// `;`-separated words
        #[arg(long, default_value = "")]
        gammas: String,
    },
    /// Invariant from Cerf intersection data, given as a Wh element
    ThetaCerf {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the manifold and descriptor of the barbell delta_k
    Deltak {
        #[arg(long)]
        k: i64,
    },
    /// Print a descriptor whose invariant is (0, sigma)[alpha]
    Realize {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long)]
        alpha: String,
    },
    /// Append meridian circles at the given `;`-separated paths
    AddMeridians {
        #[command(flatten)]
        source: BarbellSource,
        #[arg(long, visible_alias = "deltas", default_value = "")]
        gammas: String,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Compare the normal form with the lattice oracle over Z/m
    Check {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rewrite an element by random relation moves
    Walk {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure while executing a command; all of these exit with status 2.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: Error },
    #[error("{0}")]
    Core(#[from] Error),
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_cache: Option<String>,
}

impl Inputs<'_> {
    fn read(&mut self, path: &str) -> Result<String, CliError> {
        if path == "-" {
            if self.stdin_cache.is_none() {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
                self.stdin_cache = Some(s);
            }
            return Ok(self.stdin_cache.clone().unwrap_or_default());
        }
        fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
    }

    fn manifold(&mut self, path: &str) -> Result<ManifoldData, CliError> {
        let text = self.read(path)?;
        parse_manifold(&text).map_err(|source| CliError::Input { path: path.into(), source })
    }

    fn barbell(&mut self, source: &BarbellSource) -> Result<(ManifoldData, crate::barbell::BarbellDescriptor), CliError> {
        let manifold = self.manifold(source.manifold.as_deref().unwrap_or(&source.barbell))?;
        let text = self.read(&source.barbell)?;
        let b = parse_barbell(&text, &manifold)
            .map_err(|e| CliError::Input { path: source.barbell.clone(), source: e })?;
        Ok((manifold, b))
    }
}

/// `(exit code, stdout text)`
fn execute(cli: Cli, inputs: &mut Inputs<'_>) -> Result<(i32, String), CliError> {
    let line = |s: String| Ok((0, s + "\n"));
    match cli.command {
        Command::Wh(cmd) => match cmd {
            WhCommand::Normalize { manifold, expr } => {
                let x = inputs.manifold(&manifold.manifold)?;
                let nf = wh_normalize(&parse_wh(&expr, &x)?, &x)?;
                line(nf.show(x.group()).to_string())
            }
            WhCommand::Eq { manifold, lhs, rhs } => {
                let x = inputs.manifold(&manifold.manifold)?;
                let (a, b) = (parse_wh(&lhs, &x)?, parse_wh(&rhs, &x)?);
                if wh_equal(&a, &b, &x)? {
                    Ok((0, "equal\n".into()))
                } else {
                    Ok((1, "not-equal\n".into()))
                }
            }
            WhCommand::Bar { manifold, expr } => {
                let x = inputs.manifold(&manifold.manifold)?;
                let nf = wh_normalize(&involute(&parse_wh(&expr, &x)?, &x)?, &x)?;
                line(nf.show(x.group()).to_string())
            }
        },
        Command::Barbell(cmd) => match cmd {
            BarbellCommand::Theta { source } => {
                let (x, b) = inputs.barbell(&source)?;
                line(theta(&b, &x)?.show(x.group()).to_string())
            }
            BarbellCommand::ThetaG { source } => {
                let (x, b) = inputs.barbell(&source)?;
                line(theta_g(&b, &x)?.show(x.group()).to_string())
            }
            BarbellCommand::ThetaSpecial { manifold, sigma, gammas } => {
                let x = inputs.manifold(&manifold.manifold)?;
                let sigma = parse_module_elem(&sigma, &x)?;
                let gammas = parse_word_list(&gammas, &x)?;
                line(theta_special(&sigma, &gammas, &x)?.show(x.group()).to_string())
            }
            BarbellCommand::ThetaCerf { manifold, expr } => {
                let x = inputs.manifold(&manifold.manifold)?;
                let data = CerfIntersectionData::from_element(&parse_wh(&expr, &x)?);
                line(theta_cerf(&data, &x)?.show(x.group()).to_string())
            }
            BarbellCommand::Deltak { k } => {
                let (x, b) = delta_k(k)?;
                Ok((0, format_manifold(&x) + &format_barbell(&b, &x)))
            }
            BarbellCommand::Realize { manifold, sigma, alpha } => {
                let x = inputs.manifold(&manifold.manifold)?;
                let b = realize(&parse_module_elem(&sigma, &x)?, &parse_word(&alpha, &x)?, &x)?;
                Ok((0, format_barbell(&b, &x)))
            }
            BarbellCommand::AddMeridians { source, gammas } => {
                let (x, b) = inputs.barbell(&source)?;
                let deltas = parse_word_list(&gammas, &x)?;
                let out = add_meridian_terms(&b, deltas.len(), &deltas)?;
                Ok((0, format_barbell(&out, &x)))
            }
        },
        Command::Oracle(cmd) => match cmd {
            OracleCommand::Check { m, rank, trials, seed } => {
                let report = agreement_run(FiniteSetup::new(m, rank)?, trials, seed)?;
                let code = if report.all_agree() { 0 } else { 1 };
                Ok((
                    code,
                    format!("agree={}/{}\n", report.agree, report.trials),
                ))
            }
            OracleCommand::Walk { manifold, expr, steps, seed } => {
                let x = inputs.manifold(&manifold.manifold)?;
                let el = parse_wh(&expr, &x)?;
                el.check(&x)?;
                line(random_relation_walk(&el, &x, steps, seed).show(x.group()).to_string())
            }
        },
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut inputs = Inputs { stdin, stdin_cache: None };
    match execute(cli, &mut inputs) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
