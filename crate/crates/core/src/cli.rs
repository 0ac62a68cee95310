//! The `quatroot` command line: argument parsing, dispatch and JSON output.
//!
//! Output is one line of JSON. Integers are JSON numbers and other rationals
//! are strings in the `n/d` grammar. Exit code 0 means an affirmative
//! answer, 1 a negative one (not a square, unsolvable, empty intersection)
//! and 2 invalid input.

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::hilbert::hilbert_symbol;
use crate::places::Place;
use crate::qforms::{solve_conic, DiagonalForm};
use crate::quat::{sqrt, QuaternionAlgebra};
use crate::sqclasses::common_value;

/// Exit status and the two output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "quatroot", version, about = "Exact square roots in quaternion algebras over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Square root of q0 + q1 i + q2 j + q3 k in (alpha, beta | Q)
    Sqrt {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true, value_name = "q0,q1,q2,q3")]
        q: String,
    },
    /// Hilbert symbol (a, b) at a place
    Hilbert {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// A prime, or "inf" for the real place
        #[arg(long)]
        place: String,
    },
    /// Whether (alpha, beta | Q) is a matrix algebra
    IsSplit {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// A rational solution of x^2 - alpha y^2 = c
    Conic {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Isotropy of the diagonal form <a1, ..., an> over Q
    Isotropic {
        #[arg(long, allow_hyphen_values = true, value_name = "a1,...,an")]
        form: String,
    },
    /// A common value of two binary diagonal forms
    CommonValue {
        #[arg(long, allow_hyphen_values = true, value_name = "x0,x1")]
        xi: String,
        #[arg(long, allow_hyphen_values = true, value_name = "z0,z1")]
        zeta: String,
    },
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
}

impl AlgebraArgs {
    fn algebra(&self) -> Result<QuaternionAlgebra> {
        QuaternionAlgebra::new(rational(&self.alpha)?, rational(&self.beta)?)
    }
}

/// A rational in JSON: a number when integral, otherwise an `"n/d"` string.
struct Json<'a>(&'a Rational);

impl Serialize for Json<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            let n = serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
            n.serialize(s)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

fn json_vec(v: &[Rational]) -> Vec<Json<'_>> {
    v.iter().map(Json).collect()
}

#[derive(Serialize)]
struct Status {
    status: &'static str,
}

#[derive(Serialize)]
struct SqrtOk<'a> {
    status: &'static str,
    root: Vec<Json<'a>>,
    verified: bool,
}

#[derive(Serialize)]
struct Symbol {
    symbol: i8,
}

#[derive(Serialize)]
struct Split {
    split: bool,
}

#[derive(Serialize)]
struct ConicOk<'a> {
    status: &'static str,
    x: Json<'a>,
    y: Json<'a>,
}

#[derive(Serialize)]
struct Isotropy<'a> {
    isotropic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<Json<'a>>>,
}

#[derive(Serialize)]
struct CommonOk<'a> {
    status: &'static str,
    d: Json<'a>,
}

fn rational(s: &str) -> Result<Rational> {
    s.trim().parse()
}

fn rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(rational).collect()
}

fn binary_form(s: &str) -> Result<DiagonalForm> {
    let entries = rational_list(s)?;
    if entries.len() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            got: entries.len(),
        });
    }
    DiagonalForm::new(entries)
}

fn emit(value: &impl Serialize, affirmative: bool) -> Result<(i32, String)> {
    let line = serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))?;
    Ok((if affirmative { 0 } else { 1 }, line))
}

fn execute(command: &Command) -> Result<(i32, String)> {
    match command {
        Command::Sqrt { algebra, q } => {
            let alg = algebra.algebra()?;
            let coords: [Rational; 4] = rational_list(q)?.try_into().map_err(|v: Vec<_>| Error::Dimension {
                expected: 4,
                got: v.len(),
            })?;
            let q = alg.element(coords);
            match sqrt(&q)? {
                Some(r) => {
                    let verified = r.square() == q;
                    if !verified {
                        return Err(Error::Internal(format!("root {r} does not square to {q}")));
                    }
                    let root = SqrtOk {
                        status: "ok",
                        root: json_vec(r.coords()),
                        verified,
                    };
                    emit(&root, true)
                }
                None => emit(&Status { status: "not_a_square" }, false),
            }
        }
        Command::Hilbert { a, b, place } => {
            let place: Place = place.parse()?;
            let symbol = hilbert_symbol(&rational(a)?, &rational(b)?, &place)?;
            emit(&Symbol { symbol }, true)
        }
        Command::IsSplit { algebra } => emit(&Split { split: algebra.algebra()?.is_split() }, true),
        Command::Conic { alpha, c } => match solve_conic(&rational(alpha)?, &rational(c)?)? {
            Some((x, y)) => emit(
                &ConicOk {
                    status: "ok",
                    x: Json(&x),
                    y: Json(&y),
                },
                true,
            ),
            None => emit(&Status { status: "unsolvable" }, false),
        },
        Command::Isotropic { form } => {
            let form = DiagonalForm::new(rational_list(form)?)?;
            let isotropic = form.is_isotropic()?;
            let witness = if isotropic && form.dim() == 3 {
                form.isotropic_vector()?
            } else {
                None
            };
            let out = Isotropy {
                isotropic,
                witness: witness.as_ref().map(|w| json_vec(w)),
            };
            emit(&out, true)
        }
        Command::CommonValue { xi, zeta } => match common_value(&binary_form(xi)?, &binary_form(zeta)?)? {
            Some(cv) => emit(
                &CommonOk {
                    status: "ok",
                    d: Json(&cv.d),
                },
                true,
            ),
            None => emit(&Status { status: "empty_intersection" }, false),
        },
    }
}

/// Runs one invocation. `argv` includes the program name, as in
/// `std::env::args_os()`.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let first = text.lines().next().unwrap_or("invalid arguments");
                CliOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("{first}\n"),
                }
            } else {
                CliOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok((code, line)) => CliOutput {
            code,
            stdout: format!("{line}\n"),
            stderr: String::new(),
        },
        Err(e) => CliOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> CliOutput {
        run(std::iter::once("quatroot").chain(args.split_whitespace()))
    }

    #[test]
    fn json_rationals() {
        let r: Rational = "-3/4".parse().unwrap();
        assert_eq!(serde_json::to_string(&Json(&r)).unwrap(), "\"-3/4\"");
        let big: Rational = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(serde_json::to_string(&Json(&big)).unwrap(), "123456789012345678901234567890");
    }

    #[test]
    fn usage_errors_are_one_line() {
        for args in ["sqrt --alpha 0 --beta 1 --q 1,0,0,0", "hilbert --a 1 --b 2 --place 4", "conic --alpha 1/0 --c 1", "frobnicate"] {
            let out = call(args);
            assert_eq!(out.code, 2, "{args}");
            assert_eq!(out.stderr.lines().count(), 1, "{args}: {:?}", out.stderr);
            assert!(out.stdout.is_empty());
        }
    }
}
