//! `phibound` command line: evaluate bounds, regenerate the comparison table,
//! locate maximum errors and verify the bound inequality on grids.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage
//! error, 3 when the library rejects an argument.

mod render;

use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand};
use phibound::analysis::{
    error_ratio_with, make_table, max_abs_error_with, verify_crossover, verify_upper_bound_with,
    ErrorRow, Grid, SearchOptions, Table, TABLE_ABSCISSAE, X_MAX,
};
use phibound::{BoundKind, Execution};

pub use render::{exact, Field, Format};
use render::{short, write_rows};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Columns of `eval` and `table` output.
pub const ROW_HEADER: [&str; 6] = [
    "x",
    "bound",
    "kind",
    "reference",
    "error",
    "out_of_validity",
];

#[derive(Debug, Parser)]
#[command(
    name = "phibound",
    version,
    about = "Upper bounds for the standard normal CDF"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate bounds against the reference at given abscissae.
    #[command(allow_negative_numbers = true)]
    Eval {
        /// Bound name; repeat for several. Defaults to all.
        #[arg(long = "bound", value_parser = parse_bound)]
        bounds: Vec<BoundKind>,
        /// Abscissa; repeat for several.
        #[arg(long = "x", required = true)]
        xs: Vec<f64>,
    },
    /// Signed errors of each bound over the table abscissae or a linear grid.
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long = "bound", value_parser = parse_bound)]
        bounds: Vec<BoundKind>,
        /// Use the 31 published abscissae 0.1 .. 8.5 (the default).
        #[arg(long, conflicts_with_all = ["from", "to", "points"])]
        paper_abscissae: bool,
        #[arg(long, requires = "points")]
        from: Option<f64>,
        #[arg(long, requires = "points")]
        to: Option<f64>,
        /// Linear grid size; the grid spans --from (0.1) to --to (8.5).
        #[arg(long)]
        points: Option<usize>,
    },
    /// Locate the maximum of |h| for one bound.
    #[command(allow_negative_numbers = true)]
    Maxerr {
        #[arg(long, value_parser = parse_bound)]
        bound: BoundKind,
        #[command(flatten)]
        range: Range,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Check bound >= phi - slack on a linear grid.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long, value_parser = parse_bound)]
        bound: BoundKind,
        #[arg(long)]
        points: usize,
        #[command(flatten)]
        range: Range,
        #[arg(long, default_value_t = 1e-15)]
        slack: f64,
    },
    /// Where the Eidous bound stops being tighter than Polya's.
    #[command(allow_negative_numbers = true)]
    Crossover {
        #[arg(long, default_value_t = 100_001)]
        points: usize,
        #[arg(long, default_value_t = 1e-15)]
        slack: f64,
    },
    /// Ratio of the maximum errors of Eidous and Eidous*.
    #[command(allow_negative_numbers = true)]
    Ratio {
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

/// Interval endpoints; each defaults to the bound's validity interval
/// clipped to [0, 40].
#[derive(Debug, Args)]
struct Range {
    #[arg(long)]
    from: Option<f64>,
    #[arg(long)]
    to: Option<f64>,
}

impl Range {
    fn resolve(&self, kind: BoundKind) -> (f64, f64) {
        let v = kind.validity_interval();
        (
            self.from.unwrap_or(v.lower.max(0.0)),
            self.to.unwrap_or(v.upper.min(X_MAX)),
        )
    }
}

fn parse_bound(s: &str) -> Result<BoundKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = BoundKind::ALL.iter().map(|k| k.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

enum Failure {
    Library(phibound::Error),
    Io(io::Error),
}

impl From<phibound::Error> for Failure {
    fn from(e: phibound::Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    if !text.contains("Usage:") {
                        let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                    }
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Library(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: writing output: {e}");
            EXIT_DOMAIN
        }
    }
}

fn all_or(bounds: Vec<BoundKind>) -> Vec<BoundKind> {
    if bounds.is_empty() {
        let mut all = BoundKind::TABLE_COLUMNS.to_vec();
        all.push(BoundKind::EidousStar);
        all
    } else {
        bounds
    }
}

fn row_fields(r: &ErrorRow) -> Vec<Field> {
    vec![
        r.x.into(),
        r.bound_value.into(),
        r.kind.name().into(),
        r.reference_value.into(),
        r.error.into(),
        r.out_of_validity.into(),
    ]
}

/// One line per abscissa, one `h_<label>` column per bound. Cells outside a
/// bound's validity interval carry a `*`.
fn write_wide(out: &mut dyn Write, table: &Table) -> io::Result<()> {
    let mut header = vec!["x".to_owned()];
    header.extend(table.columns().iter().map(|k| format!("h_{}", k.label())));
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut flagged = false;
    let rows: Vec<Vec<Field>> = (0..table.abscissae().len())
        .map(|i| {
            let line = table.line(i);
            let mut row = vec![Field::Text(format!("{}", line[0].x))];
            for r in line {
                let mark = if r.out_of_validity { "*" } else { "" };
                flagged |= r.out_of_validity;
                row.push(Field::Text(format!("{}{mark}", short(r.error))));
            }
            row
        })
        .collect();
    write_rows(out, Format::Markdown, &header, &rows)?;
    if flagged {
        writeln!(out, "\n\\* outside the bound's validity interval")?;
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Eval { bounds, xs } => {
            let table = make_table(&xs, &all_or(bounds), Execution::default())?;
            let rows: Vec<_> = table.rows().iter().map(row_fields).collect();
            write_rows(out, format, &ROW_HEADER, &rows)?;
        }
        Command::Table {
            bounds,
            paper_abscissae: _,
            from,
            to,
            points,
        } => {
            let xs = match points {
                Some(n) => Grid::linear(from.unwrap_or(0.1), to.unwrap_or(8.5), n)?
                    .points()
                    .to_vec(),
                None => TABLE_ABSCISSAE.to_vec(),
            };
            let table = make_table(&xs, &all_or(bounds), Execution::default())?;
            if format == Format::Markdown {
                write_wide(out, &table)?;
            } else {
                let rows: Vec<_> = table.rows().iter().map(row_fields).collect();
                write_rows(out, format, &ROW_HEADER, &rows)?;
            }
        }
        Command::Maxerr { bound, range, tol } => {
            let interval = range.resolve(bound);
            let r = max_abs_error_with(bound, interval, tol, &SearchOptions::default())?;
            let header = [
                "bound",
                "location",
                "value",
                "bracket_lo",
                "bracket_hi",
                "x_tolerance",
                "iterations",
                "converged",
            ];
            let row = vec![
                bound.name().into(),
                r.location.into(),
                r.value.into(),
                r.bracket.0.into(),
                r.bracket.1.into(),
                r.x_tolerance.into(),
                r.iterations.into(),
                r.converged.into(),
            ];
            write_rows(out, format, &header, &[row])?;
        }
        Command::Verify {
            bound,
            points,
            range,
            slack,
        } => {
            let (lo, hi) = range.resolve(bound);
            let grid = Grid::linear(lo, hi, points)?;
            let r = verify_upper_bound_with(bound, &grid, slack, Execution::default())?;
            let header = [
                "bound",
                "start",
                "stop",
                "points",
                "passed",
                "worst_violation",
                "worst_location",
                "slack",
                "out_of_validity_points",
            ];
            let row = vec![
                bound.name().into(),
                r.grid.start.into(),
                r.grid.stop.into(),
                r.grid.count.into(),
                r.passed.into(),
                r.worst_violation.into(),
                r.worst_location.into(),
                r.slack.into(),
                r.out_of_validity_points.into(),
            ];
            write_rows(out, format, &header, &[row])?;
            if !r.passed {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
        }
        Command::Crossover { points, slack } => {
            let r = verify_crossover(points, slack)?;
            let header = [
                "exact",
                "printed",
                "numeric_flip",
                "max_gap_below",
                "min_gap_above",
                "max_gap_below_printed",
                "below_ok",
                "above_ok",
                "printed_consistent",
                "slack",
            ];
            let row = vec![
                r.exact.into(),
                r.printed.into(),
                r.numeric_flip.into(),
                r.max_gap_below.into(),
                r.min_gap_above.into(),
                r.max_gap_below_printed.into(),
                r.below_ok().into(),
                r.above_ok().into(),
                r.printed_consistent().into(),
                r.slack.into(),
            ];
            write_rows(out, format, &header, &[row])?;
            if !r.sign_flip_ok() {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
        }
        Command::Ratio { tol } => {
            let r = error_ratio_with(tol, &SearchOptions::default())?;
            let header = [
                "ratio",
                "eidous_max",
                "eidous_location",
                "eidous_star_max",
                "eidous_star_location",
            ];
            let row = vec![
                r.ratio.into(),
                r.eidous.value.abs().into(),
                r.eidous.location.into(),
                r.eidous_star.value.abs().into(),
                r.eidous_star.location.into(),
            ];
            write_rows(out, format, &header, &[row])?;
        }
    }
    Ok(EXIT_OK)
}
