//! Rendering helpers shared by the subcommands: exact rationals as `p/q`
//! strings, decimal approximations at a fixed 12 significant digits, and the
//! three output formats.

use num::{BigRational, ToPrimitive};

/// Output format selected by the global `--format` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Formats a float to 12 significant digits in plain decimal notation.
pub fn approx12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact value plus its labelled approximation, as used in text output:
/// integers stand alone, proper fractions carry a decimal companion.
pub fn exact_with_approx(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{} ~ {}", r, approx12(to_f64(r)))
    }
}

/// Writes `rows` to stdout as CSV under the fixed `quantity,exact,approx`
/// header.
pub fn print_quantity_csv(rows: &[(String, BigRational)]) {
    let mut writer = csv::Writer::from_writer(std::io::stdout());
    writer
        .write_record(["quantity", "exact", "approx"])
        .expect("stdout");
    for (label, value) in rows {
        writer
            .write_record([
                label.as_str(),
                &value.to_string(),
                &approx12(to_f64(value)),
            ])
            .expect("stdout");
    }
    writer.flush().expect("stdout");
}

/// Prints `label = exact` lines, with the approximation alongside when the
/// value is not an integer.
pub fn print_quantity_text(rows: &[(String, BigRational)]) {
    for (label, value) in rows {
        println!("{label} = {}", exact_with_approx(value));
    }
}
