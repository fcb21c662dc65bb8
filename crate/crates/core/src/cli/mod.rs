//! Command-line front end.
//!
//! Exit status: 0 complete intersection / check passed, 3 not a complete
//! intersection / check refuted, 2 precondition violated, 1 usage, parse or
//! timeout error.

mod cert_json;
mod ideal_file;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

pub use cert_json::{
    certificate_from_json, certificate_to_json, CertificateDocument, OutcomeDocument,
    FORMAT_VERSION,
};
pub use ideal_file::{parse_point, split_coordinates, IdealFile};

use crate::decision::{
    check_condition_iv, reduce_to_ci, trivially_contains, verify_certificate, Certificate,
    GeneratorSystem, Outcome,
};
use crate::error::{Error, Result};
use crate::groebner::{
    ideal_member, projective_dimension, reduced_groebner, set_deadline, MonomialOrder,
};
use crate::parse::parse_polynomial;
use crate::poly::{Polynomial, ProjectivePoint};
use crate::scalar::{Field, FieldDescriptor, Fp, Rational};

pub const TIMEOUT_ENV: &str = "CIFORGE_TIMEOUT_SECS";
pub const DEFAULT_TIMEOUT_SECS: u64 = 300;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_REFUTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ciforge",
    version,
    about = "Decide whether a smooth projective variety is a complete intersection"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide complete intersection at a smooth point and emit a certificate.
    Decide {
        file: PathBuf,
        /// Smooth point, e.g. "1,1,1,1"; defaults to the file's point.
        #[arg(long)]
        point: Option<String>,
        /// Override the file's field: q or fp:<p>.
        #[arg(long)]
        field: Option<String>,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the reduced Groebner basis.
    Groebner {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        #[arg(long)]
        field: Option<String>,
    },
    /// Print the projective dimension and codimension.
    Dim {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Test ideal membership and print the cofactors.
    Member {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Test trivial containment of an ideal member.
    Trivial {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Test the tangent-space containment for F against a lower-degree family;
    /// refuted when it holds for a non-trivially contained F.
    CheckIv {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        /// Semicolon-separated family of lower-degree polynomials.
        #[arg(long, default_value = "")]
        family: String,
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Re-check a certificate against its input.
    Verify {
        file: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        point: Option<String>,
    },
}

/// Exit status for an error.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::PointNotOnVariety { .. }
        | Error::NotSmooth { .. }
        | Error::NotAMember
        | Error::ImproperIdeal
        | Error::DegreeConstraint(_) => EXIT_PRECONDITION,
        Error::HashMismatch => EXIT_REFUTED,
        _ => EXIT_ERROR,
    }
}

fn timeout_from_env() -> std::result::Result<Duration, String> {
    match std::env::var(TIMEOUT_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Duration::from_secs)
            .map_err(|_| format!("{TIMEOUT_ENV} must be a whole number of seconds, got `{v}`")),
        Err(_) => Ok(Duration::from_secs(DEFAULT_TIMEOUT_SECS)),
    }
}

/// Runs one command line, writing the report to `out` and diagnostics to
/// `err`, and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let timeout = match timeout_from_env() {
        Ok(t) => t,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_ERROR;
        }
    };
    set_deadline(Instant::now().checked_add(timeout));
    let result = execute(&cli.command, out, err);
    set_deadline(None);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::IdealFile {
        line: 0,
        message: format!("{}: {e}", path.display()),
    }
}

fn load(path: &Path) -> Result<IdealFile> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    IdealFile::parse(&text)
}

fn field_of(file: &IdealFile, field: &Option<String>) -> Result<FieldDescriptor> {
    match field {
        Some(f) => FieldDescriptor::parse(f),
        None => Ok(file.field),
    }
}

fn write_report(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Certificate(format!("cannot write output: {e}")))
}

fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let (path, field) = match command {
        Command::Decide { file, field, .. }
        | Command::Groebner { file, field, .. }
        | Command::Dim { file, field }
        | Command::Member { file, field, .. }
        | Command::Trivial { file, field, .. }
        | Command::CheckIv { file, field, .. } => (file, field.clone()),
        Command::Verify { file, .. } => (file, None),
    };
    let file = load(path)?;
    let field = field_of(&file, &field)?;
    let mut report = String::new();
    let code = match field {
        FieldDescriptor::Rational => {
            execute_in::<Rational>(command, &file, field, &mut report, err)?
        }
        FieldDescriptor::Prime(_) => execute_in::<Fp>(command, &file, field, &mut report, err)?,
    };
    write_report(out, &report)?;
    Ok(code)
}

fn choose_point<K: Field>(
    file: &IdealFile,
    arg: &Option<String>,
    system: &GeneratorSystem<K>,
) -> Result<ProjectivePoint<K>> {
    let coords = match (arg, &file.point) {
        (Some(p), _) => split_coordinates(p),
        (None, Some(p)) => p.clone(),
        (None, None) => {
            return Err(Error::IdealFile {
                line: 0,
                message: "no point given (use --point or a `point:` line)".into(),
            })
        }
    };
    parse_point(&coords, system.ring())
}

fn lines<K: Field>(report: &mut String, label: &str, polys: &[Polynomial<K>]) {
    report.push_str(&format!("{label}:\n"));
    for p in polys {
        report.push_str(&format!("  {p}\n"));
    }
}

fn execute_in<K: Field>(
    command: &Command,
    file: &IdealFile,
    field: FieldDescriptor,
    report: &mut String,
    err: &mut dyn Write,
) -> Result<i32> {
    let ring = file.ring(field)?;
    let system: GeneratorSystem<K> = file.system(&ring)?;
    let parse = |text: &str| parse_polynomial::<K>(text, &ring);
    match command {
        Command::Decide { point, out, .. } => {
            let x = choose_point(file, point, &system)?;
            let cert = reduce_to_ci(&system, &x)?;
            let json = certificate_to_json(&cert);
            let code = decision_code(&cert);
            match out {
                Some(path) => {
                    std::fs::write(path, &json).map_err(|e| {
                        Error::Certificate(format!("cannot write {}: {e}", path.display()))
                    })?;
                    summarize(report, &cert);
                }
                None => report.push_str(&json),
            }
            Ok(code)
        }
        Command::Groebner { order, .. } => {
            let order = match order {
                OrderArg::Grevlex => MonomialOrder::GrevLex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let basis = reduced_groebner(&ring, system.gens(), order)?;
            for g in basis.elements() {
                report.push_str(&format!("{g}\n"));
            }
            Ok(EXIT_OK)
        }
        Command::Dim { .. } => {
            let dim = projective_dimension(&ring, system.gens())?;
            let codim = ring.num_vars() as i64 - 1 - dim;
            report.push_str(&format!("dimension: {dim}\ncodimension: {codim}\n"));
            Ok(EXIT_OK)
        }
        Command::Member { poly, .. } => {
            let f = parse(poly)?;
            let m = ideal_member(&f, system.gens())?;
            match m.record {
                Some(record) if m.is_member => {
                    report.push_str("member\n");
                    lines(report, "cofactors", &record.quotients);
                    Ok(EXIT_OK)
                }
                _ => {
                    report.push_str("not a member\n");
                    Ok(EXIT_REFUTED)
                }
            }
        }
        Command::Trivial { poly, .. } => {
            let f = parse(poly)?;
            let t = trivially_contains(&system, &f)?;
            if t.contained {
                report.push_str("trivially contained\n");
                lines(report, "lower-degree generators", &t.psi);
                lines(report, "cofactors", &t.cofactors);
                Ok(EXIT_OK)
            } else {
                report.push_str("not trivially contained\n");
                lines(report, "truncated generators", &t.truncated);
                report.push_str(&format!("remainder: {}\n", t.remainder));
                Ok(EXIT_REFUTED)
            }
        }
        Command::CheckIv {
            poly,
            family,
            point,
            ..
        } => {
            let f = parse(poly)?;
            let family = family
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(parse)
                .collect::<Result<Vec<_>>>()?;
            let x = choose_point(file, point, &system)?;
            let holds = check_condition_iv(&f, &family, &x, &system)?;
            if !holds {
                report.push_str("containment fails: differential outside the family's span\n");
                return Ok(EXIT_OK);
            }
            if trivially_contains(&system, &f)?.contained {
                report.push_str("containment holds for a trivially contained polynomial\n");
                return Ok(EXIT_OK);
            }
            report.push_str(
                "condition refuted: containment holds for a non-trivially contained polynomial\n",
            );
            Ok(EXIT_REFUTED)
        }
        Command::Verify { cert, point, .. } => {
            let text = std::fs::read_to_string(cert)
                .map_err(|e| Error::Certificate(format!("cannot read {}: {e}", cert.display())))?;
            let doc = CertificateDocument::from_json(&text)?;
            if doc.input_hash != system.input_hash() {
                let _ = writeln!(err, "error: {}", Error::HashMismatch);
                report.push_str("rejected\n");
                return Ok(EXIT_REFUTED);
            }
            let cert = doc.to_certificate::<K>(&ring)?;
            let x = match point {
                Some(p) => parse_point(&split_coordinates(p), &ring)?,
                None if file.point.is_some() => choose_point(file, &None, &system)?,
                None => cert.point.clone(),
            };
            if verify_certificate(&cert, &system, &x)? {
                report.push_str("verified\n");
                Ok(EXIT_OK)
            } else {
                report.push_str("rejected\n");
                Ok(EXIT_REFUTED)
            }
        }
    }
}

fn decision_code<K: Field>(cert: &Certificate<K>) -> i32 {
    if cert.is_complete_intersection() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    }
}

fn summarize<K: Field>(report: &mut String, cert: &Certificate<K>) {
    let trace: Vec<String> = cert.trace.iter().map(ToString::to_string).collect();
    match &cert.outcome {
        Outcome::CompleteIntersection { generators } => {
            report.push_str("complete intersection\n");
            report.push_str(&format!("codimension: {}\n", cert.codimension));
            report.push_str(&format!("trace: {}\n", trace.join(" > ")));
            lines(report, "generators", generators);
        }
        Outcome::NotCompleteIntersection { witness, .. } => {
            report.push_str("not a complete intersection\n");
            report.push_str(&format!("codimension: {}\n", cert.codimension));
            report.push_str(&format!("trace: {}\n", trace.join(" > ")));
            report.push_str(&format!("witness: {witness}\n"));
        }
    }
}
