//! Command-line surface: fan files in, numbers out.
//!
//! Exit codes: 0 success, 2 malformed input (unreadable files, parse or
//! shape errors, bad flags), 3 fan validation failure, 4 computation
//! error (for example an unbounded divisor polyhedron).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use crate::classgroup::ClassGroupPresentation;
use crate::cohomology::{cohomology_dims_with, DEFAULT_MARGIN};
use crate::error::Error;
use crate::euler::{chi, chi_trace};
use crate::fan::{Fan, WeilDivisor};
use crate::graded::dim_s;
use crate::ideals::{chow_presentation, irrelevant_ideal, stanley_reisner};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INVALID_FAN: i32 = 3;
pub const EXIT_COMPUTATION: i32 = 4;

/// A fan file: a single JSON object with 1-based cone indices.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDocument {
    #[serde(default)]
    pub name: Option<String>,
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl FanDocument {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Convert to a fan, shifting cone indices to 0-based.
    pub fn to_fan(&self) -> crate::error::Result<Fan> {
        let mut cones = Vec::with_capacity(self.max_cones.len());
        for (c, cone) in self.max_cones.iter().enumerate() {
            let mut shifted = Vec::with_capacity(cone.len());
            for &i in cone {
                if i == 0 {
                    return Err(Error::ConeIndexRange {
                        cone: c + 1,
                        index: 0,
                        count: self.rays.len(),
                    });
                }
                shifted.push(i - 1);
            }
            cones.push(shifted);
        }
        Fan::new(self.dim, self.rays.clone(), cones)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "toric-euler",
    about = "Euler characteristics of divisor sheaves on complete simplicial toric varieties",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the fan invariants and report any violations.
    Validate { fan: PathBuf },
    /// Print the Stanley-Reisner and irrelevant ideals.
    Ideals { fan: PathBuf },
    /// Print the free rank and invariant factors of the class group.
    ClassGroup { fan: PathBuf },
    /// Print the Chow ring presentation: ideal generators and linear forms.
    Chow { fan: PathBuf },
    /// Print the graded dimension of the divisor's class.
    Dim {
        fan: PathBuf,
        /// Divisor coefficients, one per ray: a1,...,ad
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Print the Euler characteristic of the divisor sheaf.
    Chi {
        fan: PathBuf,
        /// Divisor coefficients, one per ray: a1,...,ad
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        /// Exponent for the weight sum; defaults to the exact bound.
        #[arg(long)]
        l: Option<i64>,
        /// Show the per-weight table behind the total.
        #[arg(long)]
        trace: bool,
    },
    /// Print all cohomology dimensions and their alternating sum.
    Cohomology {
        fan: PathBuf,
        /// Divisor coefficients, one per ray: a1,...,ad
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        /// List the lattice points contributing to each degree.
        #[arg(long)]
        per_degree: bool,
    },
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::UnboundedPolyhedron | Error::DegenerateRays => EXIT_COMPUTATION,
        _ => EXIT_MALFORMED,
    }
}

fn parse_divisor(text: &str) -> Result<WeilDivisor, String> {
    let mut coeffs = Vec::new();
    for part in text.split(',') {
        let trimmed = part.trim();
        match trimmed.parse::<i64>() {
            Ok(v) => coeffs.push(v),
            Err(_) => return Err(format!("invalid divisor coefficient '{trimmed}'")),
        }
    }
    Ok(WeilDivisor::new(coeffs))
}

fn load_fan(path: &Path, err: &mut dyn Write) -> Result<(FanDocument, Fan), i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return Err(EXIT_MALFORMED);
        }
    };
    let document = match FanDocument::parse(&text) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return Err(EXIT_MALFORMED);
        }
    };
    let fan = match document.to_fan() {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return Err(EXIT_MALFORMED);
        }
    };
    Ok((document, fan))
}

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter()
        .map(|s| s.iter().map(|&i| i + 1).collect())
        .collect()
}

fn write_index_lists(out: &mut dyn Write, sets: &[Vec<usize>]) {
    for set in one_based(sets) {
        let parts: Vec<String> = set.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(out, "{}", parts.join(" "));
    }
}

fn join_i64(values: &[i64], sep: &str) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Run the CLI on the given arguments (`args[0]` is the program name),
/// writing to the supplied streams, and return the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_MALFORMED
                }
            }
        }
    };
    let json = cli.json;

    let fan_path = match &cli.command {
        Command::Validate { fan }
        | Command::Ideals { fan }
        | Command::ClassGroup { fan }
        | Command::Chow { fan }
        | Command::Dim { fan, .. }
        | Command::Chi { fan, .. }
        | Command::Cohomology { fan, .. } => fan.clone(),
    };
    let (document, fan) = match load_fan(&fan_path, err) {
        Ok(pair) => pair,
        Err(code) => return code,
    };

    let report = fan.validate();
    if let Command::Validate { .. } = cli.command {
        if json {
            let _ = writeln!(
                out,
                "{}",
                json!({
                    "name": document.name,
                    "valid": report.is_valid(),
                    "dim": fan.dim(),
                    "rays": fan.ray_count(),
                    "max_cones": fan.max_cones().len(),
                    "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })
            );
        } else if report.is_valid() {
            let _ = writeln!(
                out,
                "valid: dim {}, {} rays, {} maximal cones",
                fan.dim(),
                fan.ray_count(),
                fan.max_cones().len()
            );
        } else {
            for violation in &report.violations {
                let _ = writeln!(out, "violation: {violation}");
            }
        }
        return if report.is_valid() { EXIT_OK } else { EXIT_INVALID_FAN };
    }
    if !report.is_valid() {
        for violation in &report.violations {
            let _ = writeln!(err, "error: {violation}");
        }
        return EXIT_INVALID_FAN;
    }

    match cli.command {
        Command::Validate { .. } => unreachable!("handled above"),
        Command::Ideals { .. } => {
            let sr = stanley_reisner(&fan);
            let irr = irrelevant_ideal(&fan);
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "stanley_reisner": one_based(&sr.generators()),
                        "irrelevant": one_based(&irr.generators()),
                    })
                );
            } else {
                let _ = writeln!(out, "stanley-reisner:");
                write_index_lists(out, &sr.generators());
                let _ = writeln!(out, "irrelevant:");
                write_index_lists(out, &irr.generators());
            }
            EXIT_OK
        }
        Command::ClassGroup { .. } => {
            let pres = ClassGroupPresentation::new(&fan);
            let factors: Vec<String> = pres
                .invariant_factors()
                .iter()
                .map(|v| v.to_string())
                .collect();
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "free_rank": pres.free_rank(),
                        "invariant_factors": factors,
                    })
                );
            } else {
                let _ = writeln!(out, "free rank {}", pres.free_rank());
                let _ = writeln!(out, "invariant factors {}", factors.join(" "));
            }
            EXIT_OK
        }
        Command::Chow { .. } => {
            let pres = chow_presentation(&fan);
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "stanley_reisner": one_based(&pres.sr_generators),
                        "linear_forms": pres.linear_forms,
                    })
                );
            } else {
                let _ = writeln!(out, "stanley-reisner:");
                write_index_lists(out, &pres.sr_generators);
                let _ = writeln!(out, "linear forms:");
                for form in &pres.linear_forms {
                    let _ = writeln!(out, "{}", join_i64(form, " "));
                }
            }
            EXIT_OK
        }
        Command::Dim { divisor, .. } => {
            let divisor = match parse_divisor(&divisor) {
                Ok(d) => d,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    return EXIT_MALFORMED;
                }
            };
            match dim_s(&fan, &divisor) {
                Ok(value) => {
                    if json {
                        let _ = writeln!(out, "{}", json!({ "dim": value }));
                    } else {
                        let _ = writeln!(out, "{value}");
                    }
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    error_exit_code(&e)
                }
            }
        }
        Command::Chi { divisor, l, trace, .. } => {
            let divisor = match parse_divisor(&divisor) {
                Ok(d) => d,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    return EXIT_MALFORMED;
                }
            };
            if trace {
                match chi_trace(&fan, &divisor, l) {
                    Ok(table) => {
                        if json {
                            let rows: Vec<serde_json::Value> = table
                                .rows
                                .iter()
                                .map(|row| {
                                    json!({
                                        "m": row.weight.coords(),
                                        "face": u8::from(row.face_indicator),
                                        "degree": row.degree,
                                        "dim": row.dim,
                                        "sign": row.sign,
                                        "contribution": row.contribution,
                                    })
                                })
                                .collect();
                            let _ = writeln!(
                                out,
                                "{}",
                                json!({ "l": table.l, "rows": rows, "chi": table.total })
                            );
                        } else {
                            let degree_width = table
                                .rows
                                .iter()
                                .map(|r| format!("({})", join_i64(&r.degree, ",")).len())
                                .max()
                                .unwrap_or(6)
                                .max("degree".len());
                            let weight_width =
                                (2 * fan.ray_count() + 1).max("m".len());
                            let _ = writeln!(
                                out,
                                "{:<weight_width$}  face  {:<degree_width$}  {:>8}  sign  {:>12}",
                                "m", "degree", "dim", "contribution"
                            );
                            for row in &table.rows {
                                let _ = writeln!(
                                    out,
                                    "{:<weight_width$}  {:<4}  {:<degree_width$}  {:>8}  {:>4}  {:>12}",
                                    row.weight.to_string(),
                                    u8::from(row.face_indicator),
                                    format!("({})", join_i64(&row.degree, ",")),
                                    row.dim,
                                    row.sign,
                                    row.contribution
                                );
                            }
                            let _ = writeln!(out, "chi {}", table.total);
                        }
                        EXIT_OK
                    }
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        error_exit_code(&e)
                    }
                }
            } else {
                match chi(&fan, &divisor, l) {
                    Ok(value) => {
                        if json {
                            let _ = writeln!(out, "{}", json!({ "chi": value }));
                        } else {
                            let _ = writeln!(out, "{value}");
                        }
                        EXIT_OK
                    }
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        error_exit_code(&e)
                    }
                }
            }
        }
        Command::Cohomology { divisor, per_degree, .. } => {
            let divisor = match parse_divisor(&divisor) {
                Ok(d) => d,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    return EXIT_MALFORMED;
                }
            };
            match cohomology_dims_with(&fan, &divisor, DEFAULT_MARGIN, per_degree) {
                Ok(vector) => {
                    if json {
                        let mut payload = json!({
                            "h": vector.h,
                            "chi": vector.alternating_sum(),
                        });
                        if let Some(contributions) = &vector.contributions {
                            let points: Vec<serde_json::Value> = contributions
                                .iter()
                                .map(|c| {
                                    json!({
                                        "point": c.point,
                                        "support": c.support.iter().map(|&i| i + 1).collect::<Vec<_>>(),
                                        "ranks": c.ranks,
                                    })
                                })
                                .collect();
                            payload["contributions"] = serde_json::Value::Array(points);
                        }
                        let _ = writeln!(out, "{payload}");
                    } else {
                        let h: Vec<String> = vector.h.iter().map(|v| v.to_string()).collect();
                        let _ = writeln!(out, "{}", h.join(" "));
                        let _ = writeln!(out, "chi {}", vector.alternating_sum());
                        if let Some(contributions) = &vector.contributions {
                            for c in contributions {
                                let support: Vec<String> =
                                    c.support.iter().map(|&i| (i + 1).to_string()).collect();
                                let ranks: Vec<String> = c
                                    .ranks
                                    .iter()
                                    .map(|(i, r)| format!("h{i}+={r}"))
                                    .collect();
                                let _ = writeln!(
                                    out,
                                    "point ({}) support {{{}}} {}",
                                    join_i64(&c.point, ","),
                                    support.join(","),
                                    ranks.join(" ")
                                );
                            }
                        }
                    }
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    error_exit_code(&e)
                }
            }
        }
    }
}
