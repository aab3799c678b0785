//! `wheel` — exact hitting times, effective resistances, and spanning-tree
//! counts on wheel graphs, with a built-in verification sweep.
//!
//! Exit codes: 0 on success, 1 when verification finds a mismatch (or a
//! computation fails internally), 2 on usage or input errors.

mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num::ToPrimitive;
use serde_json::{json, Value};

use output::Format;
use wheel_core::closed_form::{
    effective_resistance, hitting_time, identified_tree_count, inverse_folded_matrix,
    spanning_tree_count,
};
use wheel_core::montecarlo::estimate_hitting_time;
use wheel_core::wheel::{build_wheel, folded_matrix, Vertex, WheelSpec};
use wheel_core::{BigRational, Error};

#[derive(Parser)]
#[command(
    name = "wheel",
    version,
    about = "Exact hitting times, effective resistances, and spanning-tree counts on wheel graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expected steps for the random walk from one vertex to first reach another.
    Hitting {
        /// Cycle length of the wheel (at least 3).
        #[arg(long)]
        n: usize,
        /// Start vertex: `p<k>` or `center`.
        #[arg(long, value_parser = parse_vertex)]
        source: Vertex,
        /// Vertex to reach: `p<k>` or `center`.
        #[arg(long, value_parser = parse_vertex)]
        target: Vertex,
    },
    /// Effective resistance between two vertices with every edge a unit resistor.
    Resistance {
        /// Cycle length of the wheel (at least 3).
        #[arg(long)]
        n: usize,
        /// First vertex: `p<k>` or `center`.
        #[arg(long, value_parser = parse_vertex)]
        a: Vertex,
        /// Second vertex: `p<k>` or `center`.
        #[arg(long, value_parser = parse_vertex)]
        b: Vertex,
    },
    /// Spanning-tree count of the wheel, or of the graph with two vertices identified.
    Trees {
        /// Cycle length of the wheel (at least 3).
        #[arg(long)]
        n: usize,
        /// Identify this pair of vertices first, e.g. `center,p0`.
        #[arg(long, value_parser = parse_identify)]
        identify: Option<(Vertex, Vertex)>,
    },
    /// The folded hitting-time coefficient matrix, or its exact inverse.
    Matrix {
        /// Cycle length of the wheel (at least 3).
        #[arg(long)]
        n: usize,
        /// Print the closed-form inverse instead of the matrix itself.
        #[arg(long)]
        inverse: bool,
    },
    /// Every standard quantity for one wheel, row by row.
    Table {
        /// Cycle length of the wheel (at least 3).
        #[arg(long)]
        n: usize,
    },
    /// Monte Carlo estimate of a hitting time from seeded random walks.
    Simulate {
        /// Cycle length of the wheel (at least 3).
        #[arg(long)]
        n: usize,
        /// Start vertex: `p<k>` or `center`.
        #[arg(long, value_parser = parse_vertex)]
        source: Vertex,
        /// Vertex to reach: `p<k>` or `center`.
        #[arg(long, value_parser = parse_vertex)]
        target: Vertex,
        /// Number of independent walks to average.
        #[arg(long, default_value_t = 100_000)]
        walks: u64,
        /// Seed; the estimate is bit-identical for the same seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-check every closed form against the independent oracles.
    Verify {
        /// Smallest cycle length to sweep.
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        /// Largest cycle length to sweep.
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        /// Seed for the Monte Carlo checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the Monte Carlo checks (everything else is exact).
        #[arg(long)]
        skip_montecarlo: bool,
    },
}

/// How a command failed, which decides the exit code.
enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A computation failed underway: exit 1.
    Runtime(String),
    /// The verification sweep found mismatches (already reported): exit 1.
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidCycleLength { .. }
            | Error::VertexOutOfRange { .. }
            | Error::SameVertex
            | Error::TooFewWalks(_)
            | Error::IndexOutOfRange { .. }
            | Error::MissingParameter { .. }
            | Error::NegativeUpperLimit { .. }
            | Error::EnumerationGuard { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Hitting { n, source, target } => cmd_hitting(format, n, source, target),
        Command::Resistance { n, a, b } => cmd_resistance(format, n, a, b),
        Command::Trees { n, identify } => cmd_trees(format, n, identify),
        Command::Matrix { n, inverse } => cmd_matrix(format, n, inverse),
        Command::Table { n } => cmd_table(format, n),
        Command::Simulate {
            n,
            source,
            target,
            walks,
            seed,
        } => cmd_simulate(format, n, source, target, walks, seed),
        Command::Verify {
            n_min,
            n_max,
            seed,
            skip_montecarlo,
        } => cmd_verify(format, n_min, n_max, seed, skip_montecarlo),
    }
}

fn parse_vertex(s: &str) -> Result<Vertex, String> {
    if s == "center" {
        return Ok(Vertex::Center);
    }
    if let Some(digits) = s.strip_prefix('p') {
        if let Ok(k) = digits.parse::<usize>() {
            return Ok(Vertex::Peripheral(k));
        }
    }
    Err(format!("expected `p<k>` or `center`, got `{s}`"))
}

fn parse_identify(s: &str) -> Result<(Vertex, Vertex), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or("expected two vertices separated by a comma, like `center,p0`")?;
    Ok((parse_vertex(a.trim())?, parse_vertex(b.trim())?))
}

/// Reduces a peripheral index into `0..n` so echoed vertex names are
/// canonical.
fn canonical(w: WheelSpec, v: Vertex) -> Vertex {
    match v {
        Vertex::Peripheral(k) => Vertex::Peripheral(k % w.cycle_len()),
        Vertex::Center => Vertex::Center,
    }
}

fn print_json(value: Value) {
    println!("{value}");
}

fn cmd_hitting(format: Format, n: usize, source: Vertex, target: Vertex) -> Result<(), Failure> {
    let w = WheelSpec::new(n)?;
    let exact = hitting_time(w, source, target);
    let (source, target) = (canonical(w, source), canonical(w, target));
    match format {
        Format::Text => println!("{}", output::exact_with_approx(&exact)),
        Format::Csv => {
            output::print_quantity_csv(&[(format!("h({source}->{target})"), exact)])
        }
        Format::Json => print_json(json!({
            "n": n,
            "source": source.to_string(),
            "target": target.to_string(),
            "exact": exact.to_string(),
            "float": output::to_f64(&exact),
        })),
    }
    Ok(())
}

fn cmd_resistance(format: Format, n: usize, a: Vertex, b: Vertex) -> Result<(), Failure> {
    let w = WheelSpec::new(n)?;
    let exact = effective_resistance(w, a, b)?;
    let (a, b) = (canonical(w, a), canonical(w, b));
    match format {
        Format::Text => println!("{}", output::exact_with_approx(&exact)),
        Format::Csv => output::print_quantity_csv(&[(format!("r({a},{b})"), exact)]),
        Format::Json => print_json(json!({
            "n": n,
            "a": a.to_string(),
            "b": b.to_string(),
            "exact": exact.to_string(),
            "float": output::to_f64(&exact),
        })),
    }
    Ok(())
}

fn cmd_trees(
    format: Format,
    n: usize,
    identify: Option<(Vertex, Vertex)>,
) -> Result<(), Failure> {
    let w = WheelSpec::new(n)?;
    let count = match identify {
        None => spanning_tree_count(w),
        Some((a, b)) => identified_tree_count(w, a, b)?,
    };
    let label = match identify {
        None => "T".to_string(),
        Some((a, b)) => format!("tau({},{})", canonical(w, a), canonical(w, b)),
    };
    match format {
        Format::Text => println!("{count}"),
        Format::Csv => {
            output::print_quantity_csv(&[(label, BigRational::from_integer(count))])
        }
        Format::Json => {
            let mut object = serde_json::Map::new();
            object.insert("n".into(), json!(n));
            if let Some((a, b)) = identify {
                object.insert(
                    "identify".into(),
                    json!(format!("{},{}", canonical(w, a), canonical(w, b))),
                );
            }
            object.insert("exact".into(), json!(count.to_string()));
            object.insert("float".into(), json!(count.to_f64().unwrap_or(f64::NAN)));
            print_json(Value::Object(object));
        }
    }
    Ok(())
}

fn cmd_matrix(format: Format, n: usize, inverse: bool) -> Result<(), Failure> {
    let w = WheelSpec::new(n)?;
    let matrix = if inverse {
        inverse_folded_matrix(w)
    } else {
        folded_matrix(w)
    };
    let cells: Vec<Vec<String>> = (0..matrix.rows())
        .map(|i| (0..matrix.cols()).map(|j| matrix[(i, j)].to_string()).collect())
        .collect();
    match format {
        Format::Text => {
            let widths: Vec<usize> = (0..matrix.cols())
                .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
                .collect();
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, width)| format!("{cell:>width$}"))
                    .collect();
                println!("{}", line.join(" "));
            }
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            for row in &cells {
                writer.write_record(row).expect("stdout");
            }
            writer.flush().expect("stdout");
        }
        Format::Json => print_json(json!({
            "n": n,
            "inverse": inverse,
            "entries": cells,
        })),
    }
    Ok(())
}

/// The full quantity list for one wheel, in a fixed order: hitting times by
/// cycle distance, the two centre hitting times, resistances, the tree
/// count, and the identified-pair counts.
fn table_rows(w: WheelSpec) -> Vec<(String, BigRational)> {
    let n = w.cycle_len();
    let p0 = Vertex::Peripheral(0);
    let mut rows = Vec::new();
    for l in 1..=n / 2 {
        rows.push((
            format!("h(0->{l})"),
            hitting_time(w, p0, Vertex::Peripheral(l)),
        ));
    }
    rows.push(("h(center->0)".into(), hitting_time(w, Vertex::Center, p0)));
    rows.push(("h(0->center)".into(), hitting_time(w, p0, Vertex::Center)));
    for l in 1..=n / 2 {
        rows.push((
            format!("r(0,{l})"),
            effective_resistance(w, p0, Vertex::Peripheral(l)).expect("distinct vertices"),
        ));
    }
    rows.push((
        "r(center,0)".into(),
        effective_resistance(w, Vertex::Center, p0).expect("distinct vertices"),
    ));
    rows.push(("T".into(), BigRational::from_integer(spanning_tree_count(w))));
    for l in 1..=n / 2 {
        rows.push((
            format!("tau(0,{l})"),
            BigRational::from_integer(
                identified_tree_count(w, p0, Vertex::Peripheral(l)).expect("distinct vertices"),
            ),
        ));
    }
    rows.push((
        "tau(center,0)".into(),
        BigRational::from_integer(
            identified_tree_count(w, Vertex::Center, p0).expect("distinct vertices"),
        ),
    ));
    rows
}

fn cmd_table(format: Format, n: usize) -> Result<(), Failure> {
    let w = WheelSpec::new(n)?;
    let rows = table_rows(w);
    match format {
        Format::Text => output::print_quantity_text(&rows),
        Format::Csv => output::print_quantity_csv(&rows),
        Format::Json => {
            let mut exact = serde_json::Map::new();
            let mut approx = serde_json::Map::new();
            for (label, value) in &rows {
                exact.insert(label.clone(), json!(value.to_string()));
                approx.insert(label.clone(), json!(output::approx12(output::to_f64(value))));
            }
            print_json(json!({
                "n": n,
                "exact": Value::Object(exact),
                "approx": Value::Object(approx),
            }));
        }
    }
    Ok(())
}

fn cmd_simulate(
    format: Format,
    n: usize,
    source: Vertex,
    target: Vertex,
    walks: u64,
    seed: u64,
) -> Result<(), Failure> {
    let w = WheelSpec::new(n)?;
    let estimate = estimate_hitting_time(
        &build_wheel(w),
        w.vertex_index(source),
        w.vertex_index(target),
        walks,
        seed,
    )?;
    let exact = hitting_time(w, source, target);
    let (source, target) = (canonical(w, source), canonical(w, target));
    match format {
        Format::Text => {
            println!(
                "mean {} +/- {} ({walks} walks, seed {seed})",
                output::approx12(estimate.mean),
                output::approx12(estimate.std_error),
            );
            println!("exact {}", output::exact_with_approx(&exact));
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            writer
                .write_record(["quantity", "mean", "std_error", "walks", "seed", "exact"])
                .expect("stdout");
            writer
                .write_record([
                    &format!("h({source}->{target})"),
                    &output::approx12(estimate.mean),
                    &output::approx12(estimate.std_error),
                    &walks.to_string(),
                    &seed.to_string(),
                    &exact.to_string(),
                ])
                .expect("stdout");
            writer.flush().expect("stdout");
        }
        Format::Json => print_json(json!({
            "n": n,
            "source": source.to_string(),
            "target": target.to_string(),
            "walks": walks,
            "seed": seed,
            "mean": estimate.mean,
            "std_error": estimate.std_error,
            "exact": exact.to_string(),
            "float": output::to_f64(&exact),
        })),
    }
    Ok(())
}

fn cmd_verify(
    format: Format,
    n_min: usize,
    n_max: usize,
    seed: u64,
    skip_montecarlo: bool,
) -> Result<(), Failure> {
    WheelSpec::new(n_min)?;
    WheelSpec::new(n_max)?;
    if n_min > n_max {
        return Err(Failure::Usage(format!(
            "--n-min {n_min} is larger than --n-max {n_max}"
        )));
    }
    let options = verify::Options {
        n_min,
        n_max,
        seed,
        skip_montecarlo,
    };
    let reports = verify::run(&options);
    let ok = reports.iter().all(|r| r.ok());

    match format {
        Format::Text => {
            for report in &reports {
                if report.skipped {
                    println!("{}: skipped", report.name);
                    continue;
                }
                println!(
                    "{}: {}/{} {}",
                    report.name,
                    report.passed,
                    report.total,
                    if report.ok() { "pass" } else { "FAIL" }
                );
                for failure in report.failures.iter().take(3) {
                    println!("  {failure}");
                }
                if report.failures.len() > 3 {
                    println!("  ... and {} more", report.failures.len() - 3);
                }
            }
            println!(
                "verify: {} (n {n_min}..{n_max}, seed {seed})",
                if ok { "PASS" } else { "FAIL" }
            );
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            writer
                .write_record(["class", "passed", "total", "status"])
                .expect("stdout");
            for report in &reports {
                let status = if report.skipped {
                    "skipped"
                } else if report.ok() {
                    "pass"
                } else {
                    "fail"
                };
                writer
                    .write_record([
                        report.name,
                        &report.passed.to_string(),
                        &report.total.to_string(),
                        status,
                    ])
                    .expect("stdout");
            }
            writer.flush().expect("stdout");
        }
        Format::Json => {
            let classes: Vec<Value> = reports
                .iter()
                .map(|report| {
                    json!({
                        "name": report.name,
                        "passed": report.passed,
                        "total": report.total,
                        "skipped": report.skipped,
                        "ok": report.ok(),
                        "failures": report.failures,
                    })
                })
                .collect();
            print_json(json!({
                "n_min": n_min,
                "n_max": n_max,
                "seed": seed,
                "classes": classes,
                "ok": ok,
            }));
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
