//! Command-line front end: JSON in, JSON out.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse or usage error. Every
//! outcome, including errors, is a single JSON document on stdout.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use quivmod::chow::{chern_to_ch, ChChar, RiemannRoch};
use quivmod::json::*;
use quivmod::quiver::sample_strata;
use quivmod::{classify_sheaf, moduli_point, s_equiv_lines, stability_class, verify_paper, Error};

#[derive(Debug, Parser)]
#[command(name = "quivmod", version, about = "Kronecker (2,2) moduli and Riemann-Roch on V5")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Input JSON file, or `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,

    /// Pretty-print the output.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stability class of a representation, with a witness.
    Stability,
    /// Normalized point of P⁵ for a semistable representation.
    Moduli,
    /// Jordan-Hölder lines of a strictly semistable representation.
    Sequiv,
    /// Sheaf-side classification of a semistable representation.
    Classify,
    /// Chern character of Chern data.
    Chern,
    /// Hilbert polynomial χ(F(n)) from Chern data or a Chern character.
    Hilbert,
    /// Euler pairing χ(E, F) of a two-element array.
    Pairing,
    /// Stratum counts over seeded random representations.
    Sample {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        count: u64,
        #[arg(long, default_value_t = 10)]
        bound: u64,
    },
    /// Run the identity checks and report each one.
    VerifyPaper,
}

/// Exit status and the JSON document to print.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub body: Value,
}

impl Outcome {
    fn ok(body: Value) -> Self {
        Outcome { code: 0, body }
    }

    fn err(e: &Error) -> Self {
        Outcome { code: if e.is_parse() { 2 } else { 1 }, body: error_to_json(e) }
    }

    pub fn render(&self, pretty: bool) -> String {
        let text = if pretty {
            serde_json::to_string_pretty(&self.body)
        } else {
            serde_json::to_string(&self.body)
        };
        text.expect("JSON values always serialize") + "\n"
    }
}

fn read_input(path: &str) -> Result<Value, Error> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(PathBuf::from(path))
            .map_err(|e| Error::Parse(format!("reading {path}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

/// A Chern character given either as Chern data or as a 4-array.
fn character_from_json(v: &Value) -> Result<ChChar, Error> {
    if v.is_array() {
        chchar_from_json(v)
    } else {
        Ok(chern_to_ch(&chern_from_json(v)?))
    }
}

fn dispatch(command: &Command, input: impl FnOnce() -> Result<Value, Error>) -> Result<Value, Error> {
    let rep = |v: Value| rep_from_json(&v);
    Ok(match command {
        Command::Stability => stability_to_json(&stability_class(&rep(input()?)?)),
        Command::Moduli => moduli_to_json(&moduli_point(&rep(input()?)?)?),
        Command::Sequiv => line_pair_to_json(&s_equiv_lines(&rep(input()?)?)?),
        Command::Classify => sheaf_class_to_json(&classify_sheaf(&rep(input()?)?)?),
        Command::Chern => chchar_to_json(&chern_to_ch(&chern_from_json(&input()?)?)),
        Command::Hilbert => {
            hilbert_to_json(&RiemannRoch::default().hilbert_poly(&character_from_json(&input()?)?))
        }
        Command::Pairing => {
            let v = input()?;
            let pair = v
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse("pairing expects a two-element array".into()))?;
            let (e, f) = (character_from_json(&pair[0])?, character_from_json(&pair[1])?);
            rational_to_json(&RiemannRoch::default().euler_pairing(&e, &f))
        }
        Command::Sample { seed, count, bound } => strata_to_json(&sample_strata(*seed, *count, *bound)?),
        Command::VerifyPaper => verify_paper().to_json(),
    })
}

/// Runs one command; `input` is only read by commands that take a document.
pub fn execute(command: &Command, input: impl FnOnce() -> Result<Value, Error>) -> Outcome {
    if let Command::VerifyPaper = command {
        let report = verify_paper();
        return Outcome { code: if report.all_pass() { 0 } else { 1 }, body: report.to_json() };
    }
    match dispatch(command, input) {
        Ok(v) => Outcome::ok(v),
        Err(e) => Outcome::err(&e),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Help and version requests are returned as plain text with status 0.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            let body = json!({"error": {"code": "ERR_USAGE", "message": e.kind().to_string()}});
            return (2, Outcome { code: 2, body }.render(false));
        }
    };
    let input_path = cli.input.clone();
    let outcome = execute(&cli.command, || read_input(&input_path));
    (outcome.code, outcome.render(cli.pretty))
}
