//! `hexmul` command-line interface.
//!
//! Every subcommand honors the global `--format {human,json,csv}` flag.
//! JSON output is one object per line with stably ordered keys, so parsing
//! and re-serializing a line is byte-identical. Errors exit nonzero with a
//! one-line diagnostic on stderr.

use std::error::Error;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hexmul::{
    count_3factorizations, enumerate_3factorizations, euler_lucky_check, factor2_full,
    rabinowitsch_check, render_svg, ternary_sieve, GcdSource, Hexagon, SvgStyle, Triple,
};

#[derive(Parser)]
#[command(
    name = "hexmul",
    version,
    about = "Ternary multiplication on the triangular lattice: products, 3-primes, factorization, figures"
)]
struct Cli {
    /// Output format for results on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Count 1 as a 3-prime (prepends 1 to sieve output).
    #[arg(long, global = true)]
    augmented: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the ternary product of X Y Z via all three formula routes.
    Product { x: u64, y: u64, z: u64 },
    /// List the 3-primes up to LIMIT via the staged sieve.
    Sieve3 { limit: u64 },
    /// List every ternary factorization of N.
    Factor3 { n: u64 },
    /// Print the number of ternary factorizations for each n in [START, END].
    Table { start: u64, end: u64 },
    /// Factor N with the congruence-trace algorithm.
    Factor2 { n: u64 },
    /// Write an SVG figure of the hexagon with side counts A B C.
    Hexsvg {
        a: u64,
        b: u64,
        c: u64,
        /// Output file; `-` writes the SVG to stdout.
        path: PathBuf,
        /// Lattice spacing in pixels.
        #[arg(long, default_value_t = 40.0)]
        cell: f64,
        /// Point marker radius in pixels.
        #[arg(long, default_value_t = 5.0)]
        point_radius: f64,
        /// Skip the background grid.
        #[arg(long)]
        no_grid: bool,
    },
    /// List the numbers up to LIMIT satisfying the lucky-number condition.
    Lucky { limit: u64 },
    /// List negative discriminants D = 1 mod 4, |D| <= LIMIT, passing the
    /// Rabinowitsch criterion.
    Rabinowitsch { limit: u64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

type CmdResult = Result<(), Box<dyn Error>>;

fn run(cli: Cli) -> CmdResult {
    let format = cli.format;
    match cli.command {
        Command::Product { x, y, z } => cmd_product(x, y, z, format),
        Command::Sieve3 { limit } => cmd_sieve3(limit, cli.augmented, format),
        Command::Factor3 { n } => cmd_factor3(n, format),
        Command::Table { start, end } => cmd_table(start, end, format),
        Command::Factor2 { n } => cmd_factor2(n, format),
        Command::Hexsvg {
            a,
            b,
            c,
            path,
            cell,
            point_radius,
            no_grid,
        } => cmd_hexsvg(a, b, c, &path, cell, point_radius, no_grid),
        Command::Lucky { limit } => cmd_lucky(limit, format),
        Command::Rabinowitsch { limit } => cmd_rabinowitsch(limit, format),
    }
}

fn cmd_product(x: u64, y: u64, z: u64, format: Format) -> CmdResult {
    let t = Triple::new(x, y, z)?;
    let value = hexmul::product(t)?;
    let symmetric = hexmul::product_symmetric(t)?;
    let strip = hexmul::product_strip(t)?;
    let inclusion = hexmul::product_inclusion(t)?;
    match format {
        Format::Human => {
            println!("<{},{},{}> = {value}", t.x(), t.y(), t.z());
            println!("symmetric: {symmetric}");
            println!("strip: {strip}");
            println!("inclusion: {inclusion}");
        }
        Format::Json => {
            let line = json!({
                "triple": [t.x(), t.y(), t.z()],
                "product": value,
                "symmetric": symmetric,
                "strip": strip,
                "inclusion": inclusion,
            });
            println!("{line}");
        }
        Format::Csv => {
            println!("x,y,z,product,symmetric,strip,inclusion");
            println!(
                "{},{},{},{value},{symmetric},{strip},{inclusion}",
                t.x(),
                t.y(),
                t.z()
            );
        }
    }
    Ok(())
}

fn cmd_sieve3(limit: u64, augmented: bool, format: Format) -> CmdResult {
    let table = ternary_sieve(limit)?;
    let head = if augmented { Some(1u64) } else { None };
    // stream straight from the table; no buffering of the survivor list
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let values = head.into_iter().chain(table.survivors());
    emit_number_stream(&mut out, values, "p", format)?;
    Ok(())
}

fn cmd_factor3(n: u64, format: Format) -> CmdResult {
    let set = enumerate_3factorizations(n)?;
    match format {
        Format::Human => {
            let line: Vec<String> = set.triples().iter().map(|t| t.to_string()).collect();
            println!("{}", line.join(" "));
        }
        Format::Json => {
            for t in set.triples() {
                let line = json!({ "n": n, "triple": [t.x(), t.y(), t.z()] });
                println!("{line}");
            }
        }
        Format::Csv => {
            println!("x,y,z");
            for t in set.triples() {
                println!("{},{},{}", t.x(), t.y(), t.z());
            }
        }
    }
    Ok(())
}

fn cmd_table(start: u64, end: u64, format: Format) -> CmdResult {
    if start == 0 {
        return Err("start must be at least 1".into());
    }
    if end < start {
        return Err("end must not precede start".into());
    }
    let counts: Vec<(u64, u64)> = (start..=end)
        .map(|n| count_3factorizations(n).map(|c| (n, c)))
        .collect::<hexmul::Result<_>>()?;
    match format {
        Format::Human => {
            let row: Vec<String> = counts.iter().map(|(_, c)| c.to_string()).collect();
            println!("{}", row.join(" "));
        }
        Format::Json => {
            for (n, count) in counts {
                let line = json!({ "count": count, "n": n });
                println!("{line}");
            }
        }
        Format::Csv => {
            println!("n,count");
            for (n, count) in counts {
                println!("{n},{count}");
            }
        }
    }
    Ok(())
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn cmd_factor2(n: u64, format: Format) -> CmdResult {
    let report = factor2_full(n)?;
    let prime = report.split().is_none();
    let factor_text = report
        .factors()
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ");
    match format {
        Format::Human => {
            println!("n = {n}");
            if prime {
                println!("2-prime");
            } else {
                let split = report.split().unwrap();
                if let Some(w) = split.witness {
                    let (k, l) = (w.repetition.first, w.repetition.second);
                    println!("repetition: k={k} l={l}");
                    println!("gcd(l-k, n) = {}  gcd(l+k+1, n) = {}", gcd(l - k, n), gcd(l + k + 1, n));
                }
                println!("divisor: {} (cofactor {})", split.divisor, split.cofactor);
            }
            println!("factors: {factor_text}");
        }
        Format::Json => {
            let factors: serde_json::Map<String, serde_json::Value> = report
                .factors()
                .iter()
                .map(|(p, e)| (p.to_string(), json!(e)))
                .collect();
            let mut line = json!({ "n": n, "prime": prime, "factors": factors });
            if let Some(split) = report.split() {
                line["divisor"] = json!(split.divisor);
                line["cofactor"] = json!(split.cofactor);
                if let Some(w) = split.witness {
                    line["repetition"] = json!([w.repetition.first, w.repetition.second]);
                    line["gcd_source"] = json!(match w.source {
                        GcdSource::IndexDifference => "difference",
                        GcdSource::IndexSumPlusOne => "sum_plus_one",
                    });
                }
            }
            println!("{line}");
        }
        Format::Csv => {
            println!("n,prime,divisor,cofactor,rep_first,rep_second,factors");
            let (divisor, cofactor, first, second) = match report.split() {
                Some(split) => (
                    split.divisor.to_string(),
                    split.cofactor.to_string(),
                    split
                        .witness
                        .map(|w| w.repetition.first.to_string())
                        .unwrap_or_default(),
                    split
                        .witness
                        .map(|w| w.repetition.second.to_string())
                        .unwrap_or_default(),
                ),
                None => Default::default(),
            };
            let factors_csv = report
                .factors()
                .iter()
                .map(|(p, e)| format!("{p}:{e}"))
                .collect::<Vec<_>>()
                .join(";");
            println!("{n},{prime},{divisor},{cofactor},{first},{second},{factors_csv}");
        }
    }
    Ok(())
}

fn cmd_hexsvg(
    a: u64,
    b: u64,
    c: u64,
    path: &PathBuf,
    cell: f64,
    point_radius: f64,
    no_grid: bool,
) -> CmdResult {
    let hexagon = Hexagon::new(a, b, c)?;
    let style = SvgStyle {
        cell,
        point_radius,
        draw_grid: !no_grid,
        ..SvgStyle::default()
    };
    let doc = render_svg(&hexagon, &style)?;
    if path.as_os_str() == "-" {
        io::stdout().write_all(doc.text().as_bytes())?;
    } else {
        fs::write(path, doc.text())?;
        eprintln!(
            "wrote {} ({} point markers, {:.0}x{:.0})",
            path.display(),
            doc.point_markers(),
            doc.width(),
            doc.height()
        );
    }
    Ok(())
}

fn cmd_lucky(limit: u64, format: Format) -> CmdResult {
    let mut lucky = Vec::new();
    for p in 1..=limit {
        if euler_lucky_check(p)? {
            lucky.push(p);
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    emit_number_stream(&mut out, lucky.into_iter(), "p", format)?;
    Ok(())
}

fn cmd_rabinowitsch(limit: u64, format: Format) -> CmdResult {
    let mut passing = Vec::new();
    let mut d = -3i64;
    while d.unsigned_abs() <= limit {
        if rabinowitsch_check(d)? {
            passing.push(d);
        }
        d -= 4;
    }
    match format {
        Format::Human => {
            let row: Vec<String> = passing.iter().map(|d| d.to_string()).collect();
            println!("{}", row.join(" "));
        }
        Format::Json => {
            for d in passing {
                println!("{}", json!({ "d": d }));
            }
        }
        Format::Csv => {
            println!("d");
            for d in passing {
                println!("{d}");
            }
        }
    }
    Ok(())
}

fn emit_number_stream(
    out: &mut impl Write,
    values: impl Iterator<Item = u64>,
    json_key: &str,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Human => {
            let mut first = true;
            for v in values {
                if first {
                    write!(out, "{v}")?;
                    first = false;
                } else {
                    write!(out, " {v}")?;
                }
            }
            writeln!(out)?;
        }
        Format::Json => {
            for v in values {
                writeln!(out, "{}", json!({ json_key: v }))?;
            }
        }
        Format::Csv => {
            writeln!(out, "{json_key}")?;
            for v in values {
                writeln!(out, "{v}")?;
            }
        }
    }
    out.flush()
}
