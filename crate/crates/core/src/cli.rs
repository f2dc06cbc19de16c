//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::dist::{frac_derivative, ft, ift, parse_expr, parse_expr_in, Domain};
use crate::exact::Rational;
use crate::quad::Range;
use crate::series::{
    builtin_series, frac_deriv_series, grid, read_series_csv, sample_series, write_samples_csv,
    write_samples_svg, TrigSeries,
};
use crate::sinc::{sincint, table_csv, SincError};
use crate::verify::{run_verify, VerifyOptions, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(
    name = "distfourier",
    version,
    about = "Exact Fourier transforms of distributions, fractional derivatives and sinc-power integrals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Exact,
    Float,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesName {
    Sawtooth,
    Absx,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fourier transform of an x-side expression.
    Ft {
        #[arg(long)]
        expr: String,
    },
    /// Inverse transform of a k-side expression.
    Ifft {
        #[arg(long)]
        expr: String,
    },
    /// Derivative of order alpha (integer or half-integer).
    Fracderiv {
        #[arg(long)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Rational,
    },
    /// Closed form of the integral of sin^n(x)/x^m.
    Sincint {
        #[arg(long, required_unless_present = "table")]
        n: Option<u32>,
        #[arg(long, required_unless_present = "table")]
        m: Option<u32>,
        #[arg(long, value_parser = parse_range, default_value = "full")]
        range: Range,
        #[arg(long, value_enum, default_value = "exact")]
        format: Format,
        #[arg(long, conflicts_with_all = ["n", "m"], requires = "max_n")]
        table: bool,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Samples a fractional derivative of a trigonometric series to CSV.
    Series {
        #[arg(long, value_enum)]
        name: SeriesName,
        #[arg(long)]
        coeffs: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Rational,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        samples: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = -std::f64::consts::PI)]
        xmin: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = std::f64::consts::PI)]
        xmax: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Runs every invariant check.
    Verify {
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        filter: Option<String>,
    },
}

fn parse_range(s: &str) -> Result<Range, String> {
    s.parse()
}

/// Raised for bad input; maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// code: 2 for parse and flag errors, 1 when a verify check fails, 0
/// otherwise.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("distfourier".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, UsageError> {
    match command {
        Command::Ft { expr } => {
            let e = parse_expr(&expr)?;
            writeln!(out, "{}", ft(&e)?)?;
        }
        Command::Ifft { expr } => {
            let e = parse_expr_in(&expr, Domain::K)?;
            writeln!(out, "{}", ift(&e)?)?;
        }
        Command::Fracderiv { expr, alpha } => {
            let e = parse_expr(&expr)?;
            writeln!(out, "{}", frac_derivative(&e, &alpha)?)?;
        }
        Command::Sincint {
            n,
            m,
            range,
            format,
            table,
            max_n,
        } => {
            if table {
                out.write_all(table_csv(max_n.expect("required by clap")).as_bytes())?;
                return Ok(0);
            }
            let (n, m) = (n.expect("required by clap"), m.expect("required by clap"));
            match sincint(n, m, range) {
                Ok(v) => {
                    if matches!(format, Format::Exact | Format::Both) {
                        writeln!(out, "{v}")?;
                    }
                    if matches!(format, Format::Float | Format::Both) {
                        writeln!(out, "{:.16e}", v.eval_float()?)?;
                    }
                }
                Err(SincError::Divergent { .. }) => {
                    if matches!(format, Format::Exact | Format::Both) {
                        writeln!(out, "divergent")?;
                    }
                    if matches!(format, Format::Float | Format::Both) {
                        writeln!(out, "inf")?;
                    }
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Series {
            name,
            coeffs,
            alpha,
            order,
            samples,
            xmin,
            xmax,
            out: path,
            svg,
        } => {
            if samples < 2 || xmin.is_nan() || xmax.is_nan() || xmin >= xmax {
                return Err(UsageError("need --samples >= 2 and --xmin < --xmax".into()));
            }
            let base = match coeffs {
                Some(file) => truncate(&read_series_csv(&fs::read_to_string(file)?)?, order),
                None => builtin_series(
                    match name {
                        SeriesName::Sawtooth => "sawtooth",
                        SeriesName::Absx => "absx",
                    },
                    order,
                )?,
            };
            let d = frac_deriv_series(&base, &alpha)?;
            let xs = grid(xmin, xmax, samples);
            let ys = sample_series(&d, &xs);
            fs::write(&path, write_samples_csv(&xs, &ys))?;
            if let Some(svg) = svg {
                fs::write(svg, write_samples_svg(&xs, &ys))?;
            }
            writeln!(out, "wrote {samples} samples to {}", path.display())?;
        }
        Command::Verify { tol, seed, filter } => {
            let checks = run_verify(&VerifyOptions { tol, seed, filter });
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            return Ok(if checks.iter().all(|c| c.pass) { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn truncate(s: &TrigSeries, order: u32) -> TrigSeries {
    let mut t = TrigSeries::new(s.mean().clone());
    for (n, a, b) in s.harmonics().filter(|(n, _, _)| *n <= order) {
        t.add_harmonic(n, a.clone(), b.clone());
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_cli(args.iter().copied(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn transforms() {
        assert_eq!(run(&["ft", "--expr", "theta"]).1, "pi*delta + (ik)^(-1)\n");
        let (code, out, _) = run(&["ifft", "--expr", "pi*delta + (ik)^(-1)"]);
        assert_eq!((code, out.as_str()), (0, "theta\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["ft", "--expr", "x^(1/3)*theta"]).0, 2);
        assert_eq!(run(&["ft"]).0, 2);
        assert_eq!(run(&["sincint", "--n", "2", "--m", "3"]).0, 2);
        assert_eq!(
            run(&["fracderiv", "--expr", "theta", "--alpha", "1/3"]).0,
            2
        );
        assert_eq!(run(&["bogus"]).0, 2);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn sinc_integrals() {
        let (_, out, _) = run(&[
            "sincint", "--n", "5", "--m", "4", "--range", "half", "--format", "both",
        ]);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "-45/32*ln(3) + 125/96*ln(5)");
        assert!(lines[1].starts_with("5.50698750875705"), "{}", lines[1]);
        let (code, out, _) = run(&["sincint", "--n", "2", "--m", "1", "--range", "half"]);
        assert_eq!((code, out.as_str()), (0, "divergent\n"));
    }
}
