//! `motzkin` command-line front end.
//!
//! Payloads go to the output stream, diagnostics to the error stream. Exit
//! codes: 0 success, 1 failed verification, 2 usage error.

pub mod check;
pub mod format;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use motzkin_core::{
    algeq_to_ode, dp_table, f0_series, f_even_series, g_odd_series, guess_algebraic,
    guess_recurrence, homogenize_ode, kernel_context, level_series, ode_to_recurrence,
    open_series_closed, open_series_dp, rec_extend, rec_verify, verify_algebraic, verify_ode,
    AlgebraicEq, Error, LinearODE, PRecurrence, Rat, Series, StepModel,
};
use serde::Serialize;

use crate::format::{format_bfile, format_csv, format_json, strings, SeqPayload};

#[derive(Parser, Debug)]
#[command(
    name = "motzkin",
    version,
    about = "Parity-weighted Motzkin path enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    A,
    B,
    General,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Bfile,
    Csv,
}

#[derive(clap::Args, Debug)]
struct ModelOpts {
    /// A: two level-step variants on odd levels; B: on even levels.
    #[arg(long, value_enum, default_value = "a", ignore_case = true)]
    model: ModelArg,
    /// Level-step multiplicities `EVEN,ODD` for `--model general`.
    #[arg(long, value_parser = parse_weights)]
    weights: Option<(u32, u32)>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesWhat {
    F0,
    FEven,
    GOdd,
    W,
    A,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OpenSource {
    Closed,
    Dp,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DeriveFrom {
    /// Start from the algebraic equation guessed on the closed form.
    Algeq,
    /// Start from the algebraic equation guessed on the path counts.
    Dp,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GuessWhat {
    Algeq,
    Recurrence,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Path counts to a fixed level from the dynamic-programming table.
    Dp {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        #[arg(long, default_value_t = 0)]
        level: usize,
        #[arg(long, value_enum, default_value = "bfile")]
        format: Format,
    },
    /// Closed-form generating functions.
    Series {
        #[arg(long, value_enum)]
        what: SeriesWhat,
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        #[arg(long, value_enum, default_value = "bfile")]
        format: Format,
    },
    /// Open paths, ending at any level.
    Open {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        #[arg(long, value_enum, default_value = "closed")]
        source: OpenSource,
        #[arg(long, value_enum, default_value = "bfile")]
        format: Format,
    },
    /// Algebraic equation, ODE, homogeneous ODE and recurrence for f0.
    Derive {
        #[arg(long, value_enum, default_value = "algeq")]
        from: DeriveFrom,
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// Guess a relation for the returning-path counts.
    Guess {
        #[arg(long, value_enum)]
        what: GuessWhat,
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, default_value_t = 40)]
        terms: usize,
        /// Recurrence order bound.
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Recurrence coefficient degree bound.
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value_t = 2)]
        deg_y: usize,
        #[arg(long, default_value_t = 3)]
        deg_z: usize,
    },
    /// Cross-verify closed forms, the derivation pipeline and the oracle.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        what: check::CheckWhat,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
}

fn parse_weights(s: &str) -> Result<(u32, u32), String> {
    let (e, o) = s
        .split_once(',')
        .ok_or_else(|| "expected EVEN,ODD".to_string())?;
    let e = e.trim().parse::<u32>().map_err(|e| e.to_string())?;
    let o = o.trim().parse::<u32>().map_err(|e| e.to_string())?;
    Ok((e, o))
}

/// Failure modes of a subcommand.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl ModelOpts {
    fn resolve(&self) -> Result<StepModel, Failure> {
        match (self.model, self.weights) {
            (ModelArg::A, None) => Ok(StepModel::A),
            (ModelArg::B, None) => Ok(StepModel::B),
            (ModelArg::General, Some((e, o))) => Ok(StepModel::new(e, o)),
            (ModelArg::General, None) => {
                Err(Failure::Usage("--model general needs --weights".into()))
            }
            (_, Some(_)) => Err(Failure::Usage(
                "--weights is only valid with --model general".into(),
            )),
        }
    }

    /// Models with closed forms.
    fn resolve_closed(&self) -> Result<StepModel, Failure> {
        match self.resolve()? {
            m @ (StepModel::A | StepModel::B) => Ok(m),
            m => Err(Failure::Usage(format!("no closed form for model {m}"))),
        }
    }
}

fn emit_seq(format: Format, payload: SeqPayload, seq: &[Rat]) -> String {
    match format {
        Format::Bfile => format_bfile(seq),
        Format::Csv => format_csv(seq),
        Format::Json => format_json(&payload),
    }
}

#[derive(Serialize)]
struct EquationJson {
    text: String,
    /// Entry `j` lists the z-coefficients of the `y^j` (or `y^{(j)}`) term.
    coefficients: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inhomogeneous: Option<Vec<String>>,
    verified: bool,
}

impl EquationJson {
    fn algebraic(eq: &AlgebraicEq, verified: bool) -> Self {
        EquationJson {
            text: eq.to_string(),
            coefficients: eq.coeffs().iter().map(|p| strings(p.coeffs())).collect(),
            inhomogeneous: None,
            verified,
        }
    }

    fn ode(ode: &LinearODE, verified: bool) -> Self {
        EquationJson {
            text: ode.to_string(),
            coefficients: ode.coeffs().iter().map(|p| strings(p.coeffs())).collect(),
            inhomogeneous: Some(strings(ode.inhomog().coeffs())),
            verified,
        }
    }
}

#[derive(Serialize)]
struct RecurrenceJson {
    text: String,
    /// Entry `i` lists the n-coefficients multiplying `a(n+i)`.
    coefficients: Vec<Vec<String>>,
    rhs: Vec<String>,
    valid_from: usize,
    initial: Vec<String>,
    verified: bool,
}

impl RecurrenceJson {
    fn new(rec: &PRecurrence, initial: &[Rat], verified: bool) -> Self {
        RecurrenceJson {
            text: rec.to_string(),
            coefficients: rec.coeffs().iter().map(|p| strings(p.coeffs())).collect(),
            rhs: strings(rec.rhs()),
            valid_from: rec.valid_from(),
            initial: strings(initial),
            verified,
        }
    }
}

#[derive(Serialize)]
struct DerivePayload {
    model: String,
    terms: usize,
    algebraic_equation: EquationJson,
    ode: EquationJson,
    homogeneous_ode: EquationJson,
    recurrence: RecurrenceJson,
}

fn dp_column0(model: StepModel, terms: usize) -> Series {
    level_series(model, 0, terms)
}

fn derive(from: DeriveFrom, model: StepModel, terms: usize) -> Result<String, Failure> {
    let source = match from {
        DeriveFrom::Algeq => f0_series(model, terms)?,
        DeriveFrom::Dp => dp_column0(model, terms),
    };
    let eq = guess_algebraic(&source, 2, 3)?;
    let eq_ok = verify_algebraic(&eq, &source);
    let ode = algeq_to_ode(&eq)?;
    let ode_ok = verify_ode(&ode, &source)?;
    let hom = homogenize_ode(&ode)?;
    let hom_ok = verify_ode(&hom, &source)?;
    let rec = ode_to_recurrence(&ode)?;
    let seq = source.coeffs();
    let initial = &seq[..rec.order().min(seq.len())];
    let rec_ok = rec_verify(&rec, seq) && rec_extend(&rec, initial, seq.len())? == seq;

    let payload = DerivePayload {
        model: model.to_string(),
        terms,
        algebraic_equation: EquationJson::algebraic(&eq, eq_ok),
        ode: EquationJson::ode(&ode, ode_ok),
        homogeneous_ode: EquationJson::ode(&hom, hom_ok),
        recurrence: RecurrenceJson::new(&rec, initial, rec_ok),
    };
    let out = format_json(&payload);
    if eq_ok && ode_ok && hom_ok && rec_ok {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

#[derive(Serialize)]
struct GuessPayload<T> {
    model: String,
    what: &'static str,
    terms: usize,
    relation: T,
}

fn execute(command: Command) -> Result<String, Failure> {
    match command {
        Command::Dp {
            model,
            terms,
            level,
            format,
        } => {
            let model = model.resolve()?;
            let terms = terms as usize;
            let table = dp_table(model, terms - 1);
            let seq: Vec<Rat> = table
                .column(level)
                .into_iter()
                .map(|c| Rat::from_integer(c.into()))
                .collect();
            let payload = SeqPayload::new(model.to_string(), format!("dp:level={level}"), &seq);
            Ok(emit_seq(format, payload, &seq))
        }
        Command::Series {
            what,
            model,
            k,
            terms,
            format,
        } => {
            let terms = terms as usize;
            let (label, series) = match what {
                SeriesWhat::F0 => ("f0".to_string(), f0_series(model.resolve_closed()?, terms)?),
                SeriesWhat::FEven => (
                    format!("f_even:k={k}"),
                    f_even_series(model.resolve_closed()?, k, terms)?,
                ),
                SeriesWhat::GOdd => (format!("g_odd:k={k}"), g_odd_series(k, terms)?),
                SeriesWhat::W => ("W".to_string(), kernel_context(terms)?.w),
                SeriesWhat::A => ("A".to_string(), kernel_context(terms)?.a),
            };
            let model_name = match what {
                SeriesWhat::F0 | SeriesWhat::FEven => model.resolve_closed()?.to_string(),
                _ => "any".to_string(),
            };
            let seq = series.into_coeffs();
            Ok(emit_seq(
                format,
                SeqPayload::new(model_name, label, &seq),
                &seq,
            ))
        }
        Command::Open {
            model,
            terms,
            source,
            format,
        } => {
            let terms = terms as usize;
            let (model, series) = match source {
                OpenSource::Closed => {
                    let m = model.resolve_closed()?;
                    (m, open_series_closed(m, terms)?)
                }
                OpenSource::Dp => {
                    let m = model.resolve()?;
                    (m, open_series_dp(m, terms))
                }
            };
            let seq = series.into_coeffs();
            Ok(emit_seq(
                format,
                SeqPayload::new(model.to_string(), "open", &seq),
                &seq,
            ))
        }
        Command::Derive { from, model, terms } => derive(from, model.resolve_closed()?, terms),
        Command::Guess {
            what,
            model,
            terms,
            order,
            degree,
            deg_y,
            deg_z,
        } => {
            let model = model.resolve()?;
            let seq = dp_column0(model, terms.max(1));
            match what {
                GuessWhat::Algeq => {
                    let eq = guess_algebraic(&seq, deg_y, deg_z)?;
                    Ok(format_json(&GuessPayload {
                        model: model.to_string(),
                        what: "algeq",
                        terms,
                        relation: EquationJson::algebraic(&eq, verify_algebraic(&eq, &seq)),
                    }))
                }
                GuessWhat::Recurrence => {
                    let rec = guess_recurrence(seq.coeffs(), order, degree)?;
                    let initial = &seq.coeffs()[..rec.order()];
                    Ok(format_json(&GuessPayload {
                        model: model.to_string(),
                        what: "recurrence",
                        terms,
                        relation: RecurrenceJson::new(
                            &rec,
                            initial,
                            rec_verify(&rec, seq.coeffs()),
                        ),
                    }))
                }
            }
        }
        Command::Check { what, terms } => {
            let report = check::run_checks(what, terms)?;
            let out = format_json(&report);
            if report.passed {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

/// Parses `argv` (program name first) and runs one command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command) {
        Ok(payload) => {
            if out.write_all(payload.as_bytes()).is_err() {
                return 2;
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verification(payload)) => {
            let _ = out.write_all(payload.as_bytes());
            let _ = writeln!(err, "verification failed");
            1
        }
    }
}
