//! `bkfq` command-line front end.
//!
//! Exit codes: 0 success (every checked identity held), 1 at least one
//! identity failed, 2 usage or domain error.

pub mod format;

use std::io::Write;
use std::ops::RangeInclusive;

use bkfq_core::{
    audit, default_grid, fib_pair_fastdouble, qf, ql, verify, GridShape, IdentityId, KContext,
    KMode, ParamGrid, Scalar,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub use format::{format_audit, format_report, OutputFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bkfq",
    version,
    about = "Exact bicomplex k-Fibonacci quaternion toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a table of sequence terms or quaternions.
    Gen {
        /// Integer k >= 1, or `sym` for symbolic k.
        #[arg(long, value_parser = parse_k)]
        k: KMode,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, value_enum, default_value_t = Seq::Fib)]
        seq: Seq,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check one identity on a parameter grid.
    Verify {
        /// Identity name (`cassini`, `sec2-mul`, ...) or equation label (`3.30`).
        #[arg(long)]
        id: IdentityId,
        #[arg(long, value_parser = parse_k, default_value = "sym")]
        k: KMode,
        /// Inclusive range `a..b` (or a single value).
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        n: Option<RangeInclusive<i64>>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        m: Option<RangeInclusive<i64>>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        r: Option<RangeInclusive<i64>>,
        /// Keep only grid points with m <= n.
        #[arg(long)]
        m_le_n: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check every registered identity on its default grid.
    Audit {
        #[arg(long, value_parser = parse_k, default_value = "sym")]
        k: KMode,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Seq {
    Fib,
    Lucas,
    Qf,
    Ql,
}

fn parse_k(s: &str) -> Result<KMode, String> {
    if s.eq_ignore_ascii_case("sym") {
        return Ok(KMode::Sym);
    }
    let k: BigInt = s
        .parse()
        .map_err(|_| format!("expected an integer or `sym`, got `{s}`"))?;
    if k < BigInt::from(1) {
        return Err(format!("integer k must be at least 1, got {k}"));
    }
    Ok(KMode::Int(k))
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("invalid range bound `{t}` in `{s}`"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(format!("empty range `{s}`"));
            }
            Ok(a..=b)
        }
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command) -> Result<(String, i32), String> {
    match cmd {
        Command::Gen {
            k,
            from,
            to,
            seq,
            format,
        } => {
            if from > to {
                return Err(format!("--from {from} is greater than --to {to}"));
            }
            let ctx = KContext::new(k).map_err(|e| e.to_string())?;
            Ok((generate(&ctx, seq, from, to, format), EXIT_OK))
        }
        Command::Verify {
            id,
            k,
            n,
            m,
            r,
            m_le_n,
            format,
        } => {
            let ctx = KContext::new(k).map_err(|e| e.to_string())?;
            let grid = match (n, m.clone(), r.clone()) {
                (None, None, None) if !m_le_n => default_grid(id),
                (None, ..) => return Err("--n is required when --m or --r is given".into()),
                (Some(n), m, r) => ParamGrid {
                    n,
                    m,
                    r,
                    shape: if m_le_n {
                        GridShape::MAtMostN
                    } else {
                        GridShape::Full
                    },
                },
            };
            let report = verify(id, &ctx, &grid).map_err(|e| e.to_string())?;
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_FAIL
            };
            Ok((format_report(&report, format), code))
        }
        Command::Audit { k, format } => {
            let ctx = KContext::new(k).map_err(|e| e.to_string())?;
            let reports = audit(&ctx);
            let code = if reports.iter().all(|r| r.all_passed()) {
                EXIT_OK
            } else {
                EXIT_FAIL
            };
            Ok((format_audit(&reports, format), code))
        }
    }
}

fn label(seq: Seq) -> &'static str {
    match seq {
        Seq::Fib => "F(k,n)",
        Seq::Lucas => "L(k,n)",
        Seq::Qf => "QF(k,n)",
        Seq::Ql => "QL(k,n)",
    }
}

/// Values for rows `from..=to`: one cell for sequences, four for quaternions.
fn rows(ctx: &KContext, seq: Seq, from: i64, to: i64) -> Vec<(i64, Vec<String>)> {
    match (seq, ctx.mode()) {
        // large integer-k Fibonacci ranges start from a fast-doubled pair
        (Seq::Fib, KMode::Int(k)) if from >= 0 => {
            let (mut a, mut b) = fib_pair_fastdouble(k, from as u64);
            (from..=to)
                .map(|n| {
                    let row = (n, vec![a.to_string()]);
                    let next = k * &b + &a;
                    a = std::mem::replace(&mut b, next);
                    row
                })
                .collect()
        }
        (Seq::Fib, _) => (from..=to)
            .map(|n| (n, vec![ctx.fib(n).to_string()]))
            .collect(),
        (Seq::Lucas, _) => (from..=to)
            .map(|n| (n, vec![ctx.lucas(n).to_string()]))
            .collect(),
        (Seq::Qf | Seq::Ql, _) => (from..=to)
            .map(|n| {
                let q = if seq == Seq::Qf {
                    qf(ctx, n)
                } else {
                    ql(ctx, n)
                };
                let cells = q.value().components().map(Scalar::to_string).to_vec();
                (n, cells)
            })
            .collect(),
    }
}

fn generate(ctx: &KContext, seq: Seq, from: i64, to: i64, format: OutputFormat) -> String {
    let rows = rows(ctx, seq, from, to);
    let quaternion = matches!(seq, Seq::Qf | Seq::Ql);
    let header: Vec<String> = if quaternion {
        ["n", "1", "i", "j", "ij"].map(String::from).to_vec()
    } else {
        vec!["n".into(), label(seq).into()]
    };
    match format {
        OutputFormat::Table => {
            let mut table = vec![header];
            table.extend(rows.into_iter().map(|(n, cells)| {
                let mut row = vec![n.to_string()];
                row.extend(cells);
                row
            }));
            format::aligned(&table)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).expect("in-memory write");
            for (n, cells) in rows {
                let mut row = vec![n.to_string()];
                row.extend(cells);
                w.write_record(&row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = rows
                .into_iter()
                .map(|(n, cells)| {
                    let value = if quaternion {
                        json!({ "1": cells[0], "i": cells[1], "j": cells[2], "ij": cells[3] })
                    } else {
                        json!(cells[0])
                    };
                    json!({ "n": n.to_string(), "value": value })
                })
                .collect();
            format::pretty(&json!({
                "seq": label(seq),
                "mode": ctx.mode().to_string(),
                "rows": rows,
            }))
        }
    }
}
