//! Command-line frontend.
//!
//! Exit codes: 0 on success, 1 when a verification property fails, 2 on a
//! usage error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::paths::{build_tree, level_limit, survivors_of};
use crate::pattern::{autocorrelation, correlation_poly, f_table, Pattern};
use crate::riordan::{
    a_sequence_from_poly, d_closed, from_dh, grid_to_json, grid_to_text, h_closed, r_from_f,
    z_sequence, RiordanTriangle,
};
use crate::rules::{
    builtin_avoid_rule, builtin_catalan, builtin_catalan_marked, builtin_motzkin2_jump, expand,
};
use crate::series::USeries;
use crate::verify::run_suite;

pub const MAX_ORDER: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "wordtree", about = "Binary words avoiding a forbidden factor")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    D,
    H,
    A,
    Z,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleName {
    Avoid,
    Catalan,
    CatalanMarked,
    Motzkin2Jump,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Autocorrelation vector and correlation polynomial of a pattern.
    Autocorr {
        pattern: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Matrix F[n][k] of avoider counts: `table PATTERN [N] [FORMAT]`.
    Table {
        #[arg(num_args = 1..=3, required = true)]
        args: Vec<String>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Triangle R (or Rbar with --bar): `triangle PATTERN [N] [FORMAT]` or
    /// `triangle --j J [N] [FORMAT]`.
    Triangle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: Option<u32>,
        #[arg(long)]
        bar: bool,
        args: Vec<String>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// d, h, A and Z series of the family for a given j.
    Series {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        #[arg(value_enum, default_value = "all")]
        which: SeriesName,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Signed level census of a built-in succession rule.
    Rule {
        #[arg(value_enum)]
        name: RuleName,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), default_value_t = 2)]
        j: u32,
        #[arg(long, alias = "order", default_value_t = 7)]
        levels: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Survivors (or all nodes) at one level of the path construction.
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        #[arg(long, alias = "order")]
        level: usize,
        #[arg(long)]
        nodes: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Run the property suite for a family parameter.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        #[arg(long, alias = "order", default_value_t = 6)]
        levels: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg.into() + "\n",
        }
    }
}

/// Parses and runs a command line (the first item is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match cli.command {
        Command::Autocorr { pattern, format } => cmd_autocorr(&pattern, format),
        Command::Table {
            args,
            order,
            format,
        } => cmd_table(&args, order, format),
        Command::Triangle {
            j,
            bar,
            args,
            order,
            format,
        } => cmd_triangle(j.map(|j| j as usize), bar, &args, order, format),
        Command::Series {
            j,
            which,
            order,
            format,
        } => cmd_series(j as usize, which, order, format),
        Command::Rule {
            name,
            j,
            levels,
            format,
        } => cmd_rule(name, j as usize, levels, format),
        Command::Construct {
            j,
            level,
            nodes,
            format,
        } => cmd_construct(j as usize, level, nodes, format),
        Command::Verify { j, levels, format } => cmd_verify(j as usize, levels, format),
    }
}

fn parse_pattern(s: &str) -> Result<Pattern, Outcome> {
    s.parse()
        .map_err(|e: crate::pattern::PatternError| Outcome::usage(e.to_string()))
}

/// Reads trailing `[N] [FORMAT]` positionals; flags take precedence.
fn order_and_format(
    rest: &[String],
    order: Option<usize>,
    format: Option<OutputFormat>,
) -> Result<(usize, OutputFormat), Outcome> {
    if rest.len() > 2 {
        return Err(Outcome::usage(format!(
            "unexpected arguments: {}",
            rest[2..].join(" ")
        )));
    }
    let mut n = 7;
    if let Some(s) = rest.first() {
        n = s.parse().map_err(|_| {
            Outcome::usage(format!("order must be a non-negative integer, got {s:?}"))
        })?;
    }
    let mut fmt = OutputFormat::Text;
    if let Some(s) = rest.get(1) {
        fmt = OutputFormat::from_str(s, true)
            .map_err(|_| Outcome::usage(format!("unknown format {s:?}")))?;
    }
    let n = order.unwrap_or(n);
    if n > MAX_ORDER {
        return Err(Outcome::usage(format!(
            "order limited to {MAX_ORDER}, got {n}"
        )));
    }
    Ok((n, format.unwrap_or(fmt)))
}

fn render_grid(rows: &[Vec<BigInt>], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::new();
            for row in rows {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => grid_to_json(rows),
        OutputFormat::Text => grid_to_text(rows),
    }
}

fn render_triangle(t: &RiordanTriangle, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => t.to_csv(),
        OutputFormat::Json => t.to_json(),
        OutputFormat::Text => t.to_text(),
    }
}

fn cmd_autocorr(pattern: &str, format: OutputFormat) -> Outcome {
    let p = match parse_pattern(pattern) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let c = autocorrelation(&p);
    let poly = correlation_poly(&p, p.len()).to_poly_string();
    let bits: Vec<u8> = c.bits().iter().map(|&b| u8::from(b)).collect();
    let out = match format {
        OutputFormat::Text => format!("c={c}; C={poly}\n"),
        OutputFormat::Csv => {
            let cells: Vec<String> = bits.iter().map(ToString::to_string).collect();
            format!("{}\n", cells.join(","))
        }
        OutputFormat::Json => {
            serde_json::json!({ "pattern": pattern, "c": bits, "C": poly }).to_string() + "\n"
        }
    };
    Outcome::ok(out)
}

fn cmd_table(args: &[String], order: Option<usize>, format: Option<OutputFormat>) -> Outcome {
    let p = match parse_pattern(&args[0]) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let (n, format) = match order_and_format(&args[1..], order, format) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let grid = f_table(&p, n)
        .to_integers()
        .expect("avoider counts are integers");
    Outcome::ok(render_grid(&grid, format))
}

fn cmd_triangle(
    j: Option<usize>,
    bar: bool,
    args: &[String],
    order: Option<usize>,
    format: Option<OutputFormat>,
) -> Outcome {
    let (pattern, rest) = match j {
        Some(j) => (Pattern::family(j), args),
        None => match args.split_first() {
            Some((first, rest)) => match parse_pattern(first) {
                Ok(p) => (p, rest),
                Err(o) => return o,
            },
            None => return Outcome::usage("triangle needs a pattern or --j"),
        },
    };
    let (n, format) = match order_and_format(rest, order, format) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let triangle = match (j, bar) {
        (Some(j), false) => {
            from_dh(&d_closed(j, n), &h_closed(j, n), n).expect("closed forms give a proper pair")
        }
        _ => {
            let (lower, upper) = r_from_f(&f_table(&pattern, n)).expect("integer table");
            if bar {
                upper
            } else {
                lower
            }
        }
    };
    Outcome::ok(render_triangle(&triangle, format))
}

fn cmd_series(j: usize, which: SeriesName, order: usize, format: OutputFormat) -> Outcome {
    if order > MAX_ORDER {
        return Outcome::usage(format!("order limited to {MAX_ORDER}, got {order}"));
    }
    let mut named: Vec<(&str, USeries)> = Vec::new();
    let want = |s: SeriesName| which == s || which == SeriesName::All;
    if want(SeriesName::D) {
        named.push(("d", d_closed(j, order)));
    }
    if want(SeriesName::H) {
        named.push(("h", h_closed(j, order)));
    }
    if want(SeriesName::A) {
        named.push(("A", a_sequence_from_poly(j, order).expect("simple root")));
    }
    if want(SeriesName::Z) {
        let z = z_sequence(&d_closed(j, order + 1), &h_closed(j, order + 1)).expect("proper pair");
        named.push(("Z", z));
    }
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for (name, s) in &named {
                let _ = writeln!(out, "{name}(t) = {s}");
            }
        }
        OutputFormat::Csv => {
            for (name, s) in &named {
                let cells: Vec<String> = s
                    .to_integers()
                    .expect("integer series")
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                let _ = writeln!(out, "{name},{}", cells.join(","));
            }
        }
        OutputFormat::Json => {
            let parts: Vec<String> = named
                .iter()
                .map(|(name, s)| {
                    let cells: Vec<String> = s
                        .to_integers()
                        .expect("integer series")
                        .iter()
                        .map(ToString::to_string)
                        .collect();
                    format!("\"{name}\":[{}]", cells.join(","))
                })
                .collect();
            let _ = writeln!(out, "{{{}}}", parts.join(","));
        }
    }
    Outcome::ok(out)
}

fn cmd_rule(name: RuleName, j: usize, levels: usize, format: OutputFormat) -> Outcome {
    if levels > MAX_ORDER {
        return Outcome::usage(format!("levels limited to {MAX_ORDER}, got {levels}"));
    }
    let rule = match name {
        RuleName::Avoid => builtin_avoid_rule(j),
        RuleName::Catalan => builtin_catalan(),
        RuleName::CatalanMarked => builtin_catalan_marked(),
        RuleName::Motzkin2Jump => builtin_motzkin2_jump(),
    };
    let census = expand(&rule, levels);
    let out = match format {
        OutputFormat::Csv => census.to_csv(),
        OutputFormat::Json => census.to_json(),
        OutputFormat::Text => {
            let mut out = census.to_text();
            let totals: Vec<String> = (0..=levels).map(|n| census.total(n).to_string()).collect();
            let _ = writeln!(out, "totals: {}", totals.join(" "));
            out
        }
    };
    Outcome::ok(out)
}

fn cmd_construct(j: usize, level: usize, nodes: bool, format: OutputFormat) -> Outcome {
    if level > level_limit(j) {
        return Outcome::usage(format!(
            "construction for j = {j} limited to level {}",
            level_limit(j)
        ));
    }
    let tree = build_tree(j, level).expect("within guards");
    let at_level = &tree[level];
    let mut out = String::new();
    if nodes {
        let lines: Vec<String> = at_level.iter().map(|n| n.to_json()).collect();
        match format {
            OutputFormat::Json => {
                let _ = writeln!(out, "[{}]", lines.join(","));
            }
            _ => {
                for l in lines {
                    let _ = writeln!(out, "{l}");
                }
            }
        }
        return Outcome::ok(out);
    }
    let survivors = match survivors_of(at_level) {
        Ok(s) => s,
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("{e}\n"),
            }
        }
    };
    let words: Vec<String> = survivors.iter().map(ToString::to_string).collect();
    match format {
        OutputFormat::Json => {
            out = serde_json::to_string(&words).expect("strings serialize") + "\n";
        }
        _ => {
            for w in words {
                let _ = writeln!(out, "{w}");
            }
        }
    }
    Outcome::ok(out)
}

fn cmd_verify(j: usize, levels: usize, format: OutputFormat) -> Outcome {
    if levels > level_limit(j) {
        return Outcome::usage(format!(
            "verification for j = {j} limited to {} levels",
            level_limit(j)
        ));
    }
    let results = run_suite(j, levels);
    let all = results.iter().all(|r| r.passed);
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            let items: Vec<serde_json::Value> = results
                .iter()
                .map(|r| serde_json::json!({"check": r.name, "passed": r.passed, "detail": r.detail}))
                .collect();
            out = serde_json::Value::Array(items).to_string() + "\n";
        }
        _ => {
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                if r.detail.is_empty() {
                    let _ = writeln!(out, "{status} {}", r.name);
                } else {
                    let _ = writeln!(out, "{status} {} ({})", r.name, r.detail);
                }
            }
        }
    }
    Outcome {
        code: if all { 0 } else { 1 },
        stdout: out,
        stderr: String::new(),
    }
}
