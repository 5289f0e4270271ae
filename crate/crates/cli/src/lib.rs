//! Command-line front end for `neron-core`.
//!
//! [`run`] takes the full argument vector and returns the exit status with
//! everything that would have been printed, so the binary is a thin shell
//! around it and tests can drive it directly.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use neron_core::locus::{gcd_remark_audit, vine_rows, VineRow};
use neron_core::survey::{align, render_json_lines, render_table, SCHEMA_VERSION};
use neron_core::{
    census_run, class_group, codim_report, is_tree_like, is_weakly_d_general, parse_graph,
    CurveAnalysis, Error, Route, WeightedGraph,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_THEOREM: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    JsonLines,
}

#[derive(Debug, Parser)]
#[command(name = "neron", version, about = "Balanced multidegrees and Néron-type checks for stable curves")]
struct Cli {
    /// Reserved. Every command is deterministic, so setting it is an error.
    #[arg(long, global = true)]
    seed: Option<String>,

    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Degrees {
    /// Degree, or range `a..b` (inclusive). Repeatable.
    #[arg(long = "degree", short = 'd', required = true, allow_hyphen_values = true)]
    degree: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a graph file and report genus, connectivity and stability.
    Validate { file: PathBuf },
    /// Validation, class group, balanced counts and Néron verdicts together.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        degrees: Degrees,
    },
    /// List the balanced multidegrees with a strictness flag.
    Balanced {
        file: PathBuf,
        #[command(flatten)]
        degrees: Degrees,
    },
    /// Invariant factors and order of the degree class group.
    ClassGroup { file: PathBuf },
    /// Decide whether the compactified Jacobian is of Néron type.
    Neron {
        file: PathBuf,
        #[command(flatten)]
        degrees: Degrees,
        #[arg(long, default_value = "all")]
        route: String,
    },
    /// Every invariant of every stable graph of a genus, per degree.
    Census {
        #[arg(long)]
        genus: i64,
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[command(flatten)]
        degrees: Degrees,
        /// Stop after this many rows and mark the output as truncated.
        #[arg(long)]
        max_rows: Option<usize>,
    },
    /// Balanced counts on every stable vine curve of a genus.
    VineScan {
        #[arg(long)]
        genus: i64,
        #[command(flatten)]
        degrees: Degrees,
        #[arg(long, default_value_t = 1)]
        min_delta: u32,
    },
    /// Predicted codimension of the special locus against the vine scan.
    CodimReport {
        #[arg(long)]
        genus: i64,
        #[command(flatten)]
        degrees: Degrees,
    },
    /// Both gcd conditions against the census verdict, per degree.
    Audit {
        #[arg(long)]
        genus: i64,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        #[command(flatten)]
        degrees: Degrees,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Theorem(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_) => Failure::Theorem(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<String, Failure>;

/// Runs one command line. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: EXIT_INVALID, stdout: String::new(), stderr: text }
            } else {
                Outcome { status: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => Outcome { status: EXIT_OK, stdout, stderr: String::new() },
        Err(Failure::Invalid(msg)) => Outcome {
            status: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Theorem(msg)) => Outcome {
            status: EXIT_THEOREM,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    if cli.seed.is_some() {
        return Err(Failure::Invalid(
            "--seed is reserved: every command is deterministic".into(),
        ));
    }
    let format = cli.format;
    match &cli.command {
        Command::Validate { file } => validate(&load(file)?, format),
        Command::Analyze { file, degrees } => analyze(&load(file)?, &parse_degrees(degrees)?, format),
        Command::Balanced { file, degrees } => balanced(&load(file)?, &parse_degrees(degrees)?, format),
        Command::ClassGroup { file } => class_group_cmd(&load(file)?, format),
        Command::Neron { file, degrees, route } => {
            let route: Route = route.parse()?;
            neron(&load(file)?, &parse_degrees(degrees)?, route, format)
        }
        Command::Census { genus, max_vertices, degrees, max_rows } => {
            let report = census_run(*genus, *max_vertices, &parse_degrees(degrees)?, *max_rows)?;
            Ok(match format {
                Format::Table => render_table(&report),
                Format::JsonLines => render_json_lines(&report),
            })
        }
        Command::VineScan { genus, degrees, min_delta } => {
            let mut rows = Vec::new();
            for d in parse_degrees(degrees)? {
                rows.extend(vine_rows(*genus, d, *min_delta)?);
            }
            Ok(vine_table(&format!("vine-scan genus {genus}"), &rows, format))
        }
        Command::CodimReport { genus, degrees } => codim(*genus, &parse_degrees(degrees)?, format),
        Command::Audit { genus, max_vertices, degrees } => {
            audit(*genus, *max_vertices, &parse_degrees(degrees)?, format)
        }
    }
}

fn load(path: &Path) -> std::result::Result<WeightedGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

/// Expands `--degree` values, each an integer or an inclusive range `a..b`,
/// keeping first occurrences in order.
pub fn parse_degree_list(values: &[String]) -> neron_core::Result<Vec<i64>> {
    let int = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| Error::InvalidArgument(format!("--degree: {s:?} is not an integer")))
    };
    let mut out = Vec::new();
    for v in values {
        let (lo, hi) = match v.split_once("..") {
            Some((a, b)) => (int(a)?, int(b)?),
            None => {
                let x = int(v)?;
                (x, x)
            }
        };
        if lo > hi {
            return Err(Error::InvalidArgument(format!("--degree: empty range {v}")));
        }
        if hi - lo > 10_000 {
            return Err(Error::InvalidArgument(format!("--degree: range {v} is too long")));
        }
        for d in lo..=hi {
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

fn parse_degrees(d: &Degrees) -> std::result::Result<Vec<i64>, Failure> {
    Ok(parse_degree_list(&d.degree)?)
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn header(title: &str) -> String {
    format!("# schema {SCHEMA_VERSION}; {title}\n")
}

fn json_lines(records: &[Value]) -> String {
    records.iter().map(|r| format!("{r}\n")).collect()
}

fn validate(g: &WeightedGraph, format: Format) -> CmdResult {
    let diag = g.validate();
    Ok(match format {
        Format::JsonLines => json_lines(&[json!({
            "schema": SCHEMA_VERSION,
            "vertices": g.num_vertices(),
            "edges": g.num_edges(),
            "genus": diag.genus,
            "connected": diag.connected,
            "stable": diag.stable,
            "quasistable": diag.quasistable,
        })]),
        Format::Table => {
            let rows = vec![
                vec!["vertices".into(), g.num_vertices().to_string()],
                vec!["edges".into(), g.num_edges().to_string()],
                vec!["genus".into(), diag.genus.to_string()],
                vec!["connected".into(), yes(diag.connected)],
                vec!["stable".into(), yes(diag.stable)],
                vec!["quasistable".into(), yes(diag.quasistable)],
            ];
            header("validate") + &align(&rows)
        }
    })
}

fn class_group_cmd(g: &WeightedGraph, format: Format) -> CmdResult {
    g.require_stable()?;
    let cg = class_group(g)?;
    Ok(match format {
        Format::JsonLines => json_lines(&[json!({
            "schema": SCHEMA_VERSION,
            "invariant_factors": cg.invariant_factors,
            "order": cg.order,
        })]),
        Format::Table => {
            let factors: Vec<String> = cg.invariant_factors.iter().map(|f| format!("Z/{f}")).collect();
            let shape = if factors.is_empty() { "0".to_string() } else { factors.join(" x ") };
            header("class-group") + &format!("{shape}\norder {}\n", cg.order)
        }
    })
}

fn balanced(g: &WeightedGraph, degrees: &[i64], format: Format) -> CmdResult {
    let analysis = CurveAnalysis::new(g)?;
    let mut records = Vec::new();
    let mut lines = vec![{
        let mut h: Vec<String> = vec!["d".into()];
        h.extend((0..g.num_vertices()).map(|v| format!("v{v}")));
        h.push("strict".into());
        h
    }];
    for &d in degrees {
        let set = analysis.balanced(d);
        for (md, &strict) in set.members.iter().zip(&set.strict) {
            records.push(json!({
                "schema": SCHEMA_VERSION,
                "degree": d,
                "multidegree": md.values(),
                "strict": strict,
            }));
            let mut row = vec![d.to_string()];
            row.extend(md.values().iter().map(|x| x.to_string()));
            row.push(yes(strict));
            lines.push(row);
        }
    }
    Ok(match format {
        Format::JsonLines => json_lines(&records),
        Format::Table => header("balanced") + &align(&lines),
    })
}

fn routes_json(r: &neron_core::neron::RouteVerdicts) -> Value {
    json!({
        "count": r.count,
        "criterion": r.criterion,
        "weakly-general": r.weakly_general,
    })
}

fn opt(b: Option<bool>) -> String {
    b.map_or("-".to_string(), yes)
}

fn neron(g: &WeightedGraph, degrees: &[i64], route: Route, format: Format) -> CmdResult {
    let mut analysis = CurveAnalysis::new(g)?;
    let mut records = Vec::new();
    let mut lines = vec![["d", "verdict", "i", "#Delta", "count", "crit", "weak"]
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
    for &d in degrees {
        let v = analysis.is_neron_type(d, route)?;
        records.push(json!({
            "schema": SCHEMA_VERSION,
            "degree": d,
            "verdict": v.verdict,
            "component_count": v.component_count,
            "class_group_order": v.class_group_order,
            "routes": routes_json(&v.routes),
        }));
        lines.push(vec![
            d.to_string(),
            yes(v.verdict),
            v.component_count.to_string(),
            v.class_group_order.to_string(),
            opt(v.routes.count),
            opt(v.routes.criterion),
            opt(v.routes.weakly_general),
        ]);
    }
    Ok(match format {
        Format::JsonLines => json_lines(&records),
        Format::Table => header(&format!("neron route {route}")) + &align(&lines),
    })
}

fn analyze(g: &WeightedGraph, degrees: &[i64], format: Format) -> CmdResult {
    let diag = g.validate();
    let mut analysis = CurveAnalysis::new(g)?;
    let cg = analysis.class_group().clone();
    let tree_like = is_tree_like(g);
    let mut records = Vec::new();
    let mut lines = vec![["d", "#Bbar", "#B", "#Delta", "i", "dgen", "wdgen", "neron"]
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
    for &d in degrees {
        let set = analysis.balanced(d);
        let v = analysis.is_neron_type(d, Route::All)?;
        let d_general = set.num_strict() == set.num_balanced();
        let weak = is_weakly_d_general(g, d)?;
        records.push(json!({
            "schema": SCHEMA_VERSION,
            "degree": d,
            "genus": diag.genus,
            "vertices": g.num_vertices(),
            "edges": g.num_edges(),
            "stable": diag.stable,
            "tree_like": tree_like,
            "invariant_factors": cg.invariant_factors,
            "class_group_order": cg.order,
            "num_balanced": set.num_balanced(),
            "num_strict": set.num_strict(),
            "d_general": d_general,
            "weakly_d_general": weak,
            "component_count": v.component_count,
            "neron": v.verdict,
            "routes": routes_json(&v.routes),
        }));
        lines.push(vec![
            d.to_string(),
            set.num_balanced().to_string(),
            set.num_strict().to_string(),
            cg.order.to_string(),
            v.component_count.to_string(),
            yes(d_general),
            yes(weak),
            yes(v.verdict),
        ]);
    }
    Ok(match format {
        Format::JsonLines => json_lines(&records),
        Format::Table => {
            let factors: Vec<String> = cg.invariant_factors.iter().map(|f| f.to_string()).collect();
            let mut out = header("analyze");
            out.push_str(&format!(
                "genus {}  vertices {}  edges {}  stable {}  tree_like {}\n",
                diag.genus,
                g.num_vertices(),
                g.num_edges(),
                yes(diag.stable),
                yes(tree_like)
            ));
            out.push_str(&format!(
                "class group order {}  invariant factors [{}]\n",
                cg.order,
                factors.join(", ")
            ));
            out + &align(&lines)
        }
    })
}

fn vine_table(title: &str, rows: &[VineRow], format: Format) -> String {
    match format {
        Format::JsonLines => json_lines(
            &rows
                .iter()
                .map(|r| {
                    json!({
                        "schema": SCHEMA_VERSION,
                        "g1": r.vine.g1,
                        "g2": r.vine.g2,
                        "delta": r.vine.delta,
                        "d": r.degree,
                        "num_balanced": r.num_balanced,
                        "num_strict": r.num_strict,
                        "class_group_order": r.class_group_order,
                        "d_special": r.d_special,
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Table => {
            let mut lines = vec![["g1", "g2", "delta", "d", "#Bbar", "#B", "#Delta", "d_special"]
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()];
            for r in rows {
                lines.push(vec![
                    r.vine.g1.to_string(),
                    r.vine.g2.to_string(),
                    r.vine.delta.to_string(),
                    r.degree.to_string(),
                    r.num_balanced.to_string(),
                    r.num_strict.to_string(),
                    r.class_group_order.to_string(),
                    yes(r.d_special),
                ]);
            }
            header(title) + &align(&lines)
        }
    }
}

fn codim(genus: i64, degrees: &[i64], format: Format) -> CmdResult {
    let mut out = String::new();
    let mut inconsistent = Vec::new();
    for &d in degrees {
        let report = codim_report(genus, d)?;
        let rows = vine_rows(genus, d, 2)?;
        if !report.consistent() {
            inconsistent.push(d);
        }
        match format {
            Format::JsonLines => {
                out.push_str(&json_lines(&[json!({
                    "schema": SCHEMA_VERSION,
                    "genus": genus,
                    "d": d,
                    "gcd": report.gcd_value,
                    "predicted_codim": report.predicted_codim.label(),
                    "special_vines": report.empirical_special_vines.len(),
                    "consistent": report.consistent(),
                })]));
                out.push_str(&vine_table("", &rows, format));
            }
            Format::Table => {
                out.push_str(&format!(
                    "# genus {genus} d {d}: gcd {} predicted codimension {} special vines {} consistent {}\n",
                    report.gcd_value,
                    report.predicted_codim.label(),
                    report.empirical_special_vines.len(),
                    yes(report.consistent())
                ));
                out.push_str(&vine_table(&format!("codim-report genus {genus} d {d}"), &rows, format));
            }
        }
    }
    if inconsistent.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Theorem(format!(
            "vine scan contradicts the predicted codimension at genus {genus}, degrees {inconsistent:?}"
        )))
    }
}

fn audit(genus: i64, max_vertices: usize, degrees: &[i64], format: Format) -> CmdResult {
    let mut rows = Vec::new();
    for &d in degrees {
        rows.extend(gcd_remark_audit(genus, d..=d, max_vertices)?);
    }
    Ok(match format {
        Format::JsonLines => json_lines(
            &rows
                .iter()
                .map(|r| {
                    json!({
                        "schema": SCHEMA_VERSION,
                        "genus": r.genus,
                        "d": r.degree,
                        "census_size": r.census_size,
                        "all_general": r.all_general,
                        "gcd_2g_minus_1": r.gcd_odd,
                        "gcd_2g_minus_2": r.gcd_even,
                        "agrees_2g_minus_1": r.odd_modulus_agrees(),
                        "agrees_2g_minus_2": r.even_modulus_agrees(),
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Table => {
            let mut lines = vec![["d", "graphs", "all_general", "gcd(2g-1)", "agrees", "gcd(2g-2)", "agrees"]
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()];
            for r in &rows {
                lines.push(vec![
                    r.degree.to_string(),
                    r.census_size.to_string(),
                    yes(r.all_general),
                    r.gcd_odd.to_string(),
                    yes(r.odd_modulus_agrees()),
                    r.gcd_even.to_string(),
                    yes(r.even_modulus_agrees()),
                ]);
            }
            header(&format!("audit genus {genus} max_vertices {max_vertices}")) + &align(&lines)
        }
    })
}
