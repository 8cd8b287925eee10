//! Command-line front end.
//!
//! Results go to the output stream and diagnostics to the error stream.
//! Exit codes: 0 success, 1 verification failed, 2 usage or parse error,
//! 3 I/O failure.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::gaussint::GaussInt;
use crate::identities::{
    enumerate_primitive_triples, lemma_lhs, lemma_rhs, th2_solution, PythTriple,
};
use crate::pell::th1_family;
use crate::search::{run_search_report, SearchConfig, SolutionClass};
use crate::solution::{verify_solution, Quadruple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "taxicab5",
    version,
    about = "Gaussian-integer solutions of w^5 + x^5 = y^5 + z^5"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the first N members of the Pell-number solution family.
    PellFamily {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Print the solution derived from every primitive Pythagorean triple
    /// with hypotenuse at most C.
    TripleFamily {
        #[arg(long = "max-c")]
        max_c: u64,
    },
    /// Check w^e + x^e = y^e + z^e exactly.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        exponent: u32,
    },
    /// Evaluate the quadruple identity at (a, b, c) against its closed form.
    Lemma {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        c: BigInt,
    },
    /// Exhaustive search over the box |re|, |im| <= B.
    Search {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=crate::search::MAX_BOUND))]
        bound: u64,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        exponent: u32,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..4096))]
        shards: Option<u64>,
        #[arg(long)]
        include_zero: bool,
        /// Write the solution stream here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs a parsed command, returning the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, diag: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::PellFamily { count } => {
            let rows = (1..=*count).map(|k| (Some(k), None, th1_family(k)));
            emit_family(cli.format, rows, out)
        }
        Command::TripleFamily { max_c } => {
            let rows = enumerate_primitive_triples(*max_c).into_iter().map(|t| {
                let q = th2_solution(&t).expect("enumerated triples are Pythagorean");
                (None, Some(t), q)
            });
            emit_family(cli.format, rows, out)
        }
        Command::Verify {
            w,
            x,
            y,
            z,
            exponent,
        } => cmd_verify(
            cli.format,
            [("w", w), ("x", x), ("y", y), ("z", z)],
            *exponent,
            out,
            diag,
        ),
        Command::Lemma { a, b, c } => cmd_lemma(cli.format, a, b, c, out),
        Command::Search {
            bound,
            exponent,
            shards,
            include_zero,
            out: path,
        } => {
            let shards = shards.map_or_else(thread_count, |s| s as usize);
            let cfg = SearchConfig {
                bound: *bound,
                exponent: *exponent,
                shards,
                include_zero: *include_zero,
            };
            match path {
                Some(path) => match File::create(path) {
                    Ok(file) => {
                        let mut file = BufWriter::new(file);
                        cmd_search(cli.format, &cfg, &mut file, diag)
                            .and_then(|code| file.flush().map(|_| code))
                    }
                    Err(e) => Err(io::Error::new(e.kind(), format!("{}: {e}", path.display()))),
                },
                None => cmd_search(cli.format, &cfg, out, diag),
            }
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(diag, "error: {e}");
            EXIT_IO
        }
    }
}

fn thread_count() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// `3`, but `(2+3i)` and `(-3)`, so a power reads unambiguously.
fn term(z: &GaussInt) -> String {
    if z.is_real() && z.re >= BigInt::from(0) {
        z.to_string()
    } else {
        format!("({z})")
    }
}

pub fn pretty_equation(q: &Quadruple) -> String {
    let e = q.exponent;
    format!(
        "{}^{e} + {}^{e} = {}^{e} + {}^{e}",
        term(&q.w),
        term(&q.x),
        term(&q.y),
        term(&q.z)
    )
}

fn status(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct FamilyRecord<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    triple: Option<PythTriple>,
    w: &'a GaussInt,
    x: &'a GaussInt,
    y: &'a GaussInt,
    z: &'a GaussInt,
    exponent: u32,
    sum: &'a GaussInt,
    verified: bool,
}

const QUADRUPLE_COLUMNS: [&str; 11] = [
    "w_re", "w_im", "x_re", "x_im", "y_re", "y_im", "z_re", "z_im", "sum_re", "sum_im", "verified",
];

fn quadruple_fields(q: &Quadruple, sum: &GaussInt, verified: bool) -> Vec<String> {
    let mut fields: Vec<String> = q
        .entries()
        .into_iter()
        .chain([sum])
        .flat_map(|z| [z.re.to_string(), z.im.to_string()])
        .collect();
    fields.push(verified.to_string());
    fields
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn csv_err(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    }
}

fn emit_family(
    format: OutputFormat,
    rows: impl Iterator<Item = (Option<u64>, Option<PythTriple>, Quadruple)>,
    out: &mut dyn Write,
) -> io::Result<i32> {
    let mut all_ok = true;
    if format == OutputFormat::Csv {
        let mut w = csv_writer(out);
        w.write_record(QUADRUPLE_COLUMNS).map_err(csv_err)?;
        for (_, _, q) in rows {
            let ok = verify_solution(&q);
            all_ok &= ok;
            w.write_record(quadruple_fields(&q, &q.left_sum(), ok))
                .map_err(csv_err)?;
        }
        w.flush()?;
    } else {
        for (k, triple, q) in rows {
            let ok = verify_solution(&q);
            all_ok &= ok;
            if format == OutputFormat::Pretty {
                writeln!(out, "{}  {}", pretty_equation(&q), status(ok))?;
                continue;
            }
            let rec = FamilyRecord {
                k,
                triple,
                w: &q.w,
                x: &q.x,
                y: &q.y,
                z: &q.z,
                exponent: q.exponent,
                sum: &q.left_sum(),
                verified: ok,
            };
            writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Serialize)]
struct ComparisonRecord<'a> {
    lhs: &'a GaussInt,
    rhs: &'a GaussInt,
    equal: bool,
}

fn emit_comparison(
    format: OutputFormat,
    lhs: &GaussInt,
    rhs: &GaussInt,
    out: &mut dyn Write,
) -> io::Result<i32> {
    let equal = lhs == rhs;
    match format {
        OutputFormat::Pretty => {
            writeln!(out, "lhs = {lhs}")?;
            writeln!(out, "rhs = {rhs}")?;
            writeln!(out, "{}", if equal { "OK" } else { "MISMATCH" })?;
        }
        OutputFormat::Json => {
            let rec = ComparisonRecord { lhs, rhs, equal };
            writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        }
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["lhs_re", "lhs_im", "rhs_re", "rhs_im", "equal"])
                .map_err(csv_err)?;
            w.write_record([
                lhs.re.to_string(),
                lhs.im.to_string(),
                rhs.re.to_string(),
                rhs.im.to_string(),
                equal.to_string(),
            ])
            .map_err(csv_err)?;
            w.flush()?;
        }
    }
    Ok(if equal { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_verify(
    format: OutputFormat,
    args: [(&str, &String); 4],
    exponent: u32,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> io::Result<i32> {
    let mut parsed = Vec::with_capacity(4);
    for (name, raw) in args {
        match raw.parse::<GaussInt>() {
            Ok(z) => parsed.push(z),
            Err(e) => {
                writeln!(diag, "error: --{name}: {e}")?;
                return Ok(EXIT_USAGE);
            }
        }
    }
    let [w, x, y, z]: [GaussInt; 4] = parsed.try_into().expect("four arguments");
    let q = Quadruple::new(w, x, y, z, exponent);
    emit_comparison(format, &q.left_sum(), &q.right_sum(), out)
}

fn cmd_lemma(
    format: OutputFormat,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    out: &mut dyn Write,
) -> io::Result<i32> {
    let lhs = lemma_lhs(a.clone(), b.clone(), c.clone());
    let rhs = lemma_rhs(a.clone(), b.clone(), c.clone());
    emit_comparison(format, &lhs, &rhs, out)
}

fn cmd_search(
    format: OutputFormat,
    cfg: &SearchConfig,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> io::Result<i32> {
    let started = Instant::now();
    let report = match run_search_report(cfg) {
        Ok(r) => r,
        Err(e) => {
            writeln!(diag, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    write_classes(format, &report.classes, out)?;
    writeln!(
        diag,
        "search: bound={} exponent={} shards={} points={} pairs={} collision_groups={} classes={} time={:.3}s",
        cfg.bound,
        cfg.exponent,
        cfg.shards,
        report.points,
        report.pairs_enumerated,
        report.collision_groups,
        report.classes.len(),
        started.elapsed().as_secs_f64()
    )?;
    Ok(EXIT_OK)
}

/// Writes search results; the json form is the JSON-lines solution stream.
pub fn write_classes(
    format: OutputFormat,
    classes: &[SolutionClass],
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        OutputFormat::Pretty => {
            for c in classes {
                writeln!(
                    out,
                    "{}  sum={}  orbit={}",
                    pretty_equation(&c.representative),
                    c.sum,
                    c.orbit_size
                )?;
            }
        }
        OutputFormat::Json => {
            for c in classes {
                writeln!(out, "{}", c.to_json_line())?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(QUADRUPLE_COLUMNS.iter().chain(&["orbit_size"]))
                .map_err(csv_err)?;
            for c in classes {
                let ok = verify_solution(&c.representative);
                let mut fields = quadruple_fields(&c.representative, &c.sum, ok);
                fields.push(c.orbit_size.to_string());
                w.write_record(fields).map_err(csv_err)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
