//! `bbrack`: command-line front end for biquandle bracket computations.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bbrack::bracket::{is_classical_rmatrix, violations, Matrix};
use bbrack::diagram::{catalog_lookup, knot_names, link_names};
use bbrack::search::search_brackets;
use bbrack::statesum::beta_values;
use bbrack::{
    named, Biquandle, Bracket, DynBracket, InvariantValue, LinkDiagram, Ring, RingSpec,
    SearchOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "bbrack",
    version,
    about = "Biquandle bracket invariants of oriented links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the biquandle axioms for an operation table.
    VerifyBiquandle {
        /// Built-in name or path to an `n x 2n` table.
        biquandle: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the bracket axioms.
    VerifyBracket {
        #[command(flatten)]
        bracket: BracketArgs,
        /// Report every failed condition, not only the first.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count (or list) the colorings of a diagram.
    Colorings {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long)]
        biquandle: String,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the bracket invariant of a diagram.
    Invariant {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[command(flatten)]
        bracket: BracketArgs,
        #[arg(long, value_enum, default_value_t = ValueFormat::Poly)]
        format: ValueFormat,
        /// Also print each coloring with its value.
        #[arg(long)]
        per_coloring: bool,
    },
    /// Find all brackets on a biquandle over a finite ring.
    Search {
        #[arg(long)]
        biquandle: String,
        /// Ring spec such as `Z11` or `GF(2^3;1+t+t^3)`.
        #[arg(long)]
        ring: String,
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute an invariant table over the catalog.
    Tables {
        #[arg(value_enum)]
        which: Table,
        /// Use catalog diagrams as given instead of their mirror images.
        #[arg(long)]
        as_given: bool,
    },
    /// Print the colored R-matrices of a bracket.
    Rmatrix {
        #[command(flatten)]
        bracket: BracketArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct DiagramArgs {
    /// Catalog name, e.g. `4_1` or `L2a1`.
    #[arg(long, group = "diagram_source")]
    knot: Option<String>,
    /// Inline PD code.
    #[arg(long, group = "diagram_source")]
    pd: Option<String>,
    /// File holding a PD code.
    #[arg(long, group = "diagram_source")]
    pd_file: Option<PathBuf>,
    #[arg(long)]
    mirror: bool,
}

#[derive(Args)]
struct BracketArgs {
    /// Built-in name or bracket file.
    #[arg(long)]
    bracket: String,
    /// Built-in name or table file; defaults to the bracket's own biquandle.
    #[arg(long)]
    biquandle: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValueFormat {
    Multiset,
    Poly,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    F8Knots,
    F8Links,
    Z11Knots,
}

/// Exit 1: the input was read but fails validation. Exit 2: unusable input.
enum Failure {
    Invalid(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_biquandle(arg: &str) -> Result<Biquandle, Failure> {
    if let Some(q) = named::biquandle(arg) {
        return Ok(q);
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(usage(format!(
            "`{arg}` is neither a built-in biquandle nor a file"
        )));
    }
    Biquandle::parse(&read(path)?).map_err(invalid)
}

/// Bracket files may name their biquandle in a `biquandle:` line.
fn split_biquandle_hint(text: &str) -> (Option<String>, String) {
    let mut hint = None;
    let mut rest = String::new();
    for line in text.lines() {
        match line.trim().strip_prefix("biquandle:") {
            Some(h) => hint = Some(h.trim().to_string()),
            None => {
                rest.push_str(line);
                rest.push('\n');
            }
        }
    }
    (hint, rest)
}

fn load_bracket(args: &BracketArgs) -> Result<DynBracket, Failure> {
    if let Some(br) = named::bracket(&args.bracket) {
        return match &args.biquandle {
            None => Ok(br),
            Some(q) => {
                let q = load_biquandle(q)?;
                Bracket::verify(
                    q,
                    br.ring().clone(),
                    br.a_matrix().to_vec(),
                    br.b_matrix().to_vec(),
                )
                .map_err(invalid)
            }
        };
    }
    let path = Path::new(&args.bracket);
    if !path.exists() {
        return Err(usage(format!(
            "`{}` is neither a built-in bracket nor a file",
            args.bracket
        )));
    }
    let (hint, text) = split_biquandle_hint(&read(path)?);
    let q = match (&args.biquandle, hint) {
        (Some(q), _) => q.clone(),
        (None, Some(h)) => resolve_relative(path, &h),
        (None, None) => return Err(usage("bracket file names no biquandle; pass --biquandle")),
    };
    Bracket::from_file_text(load_biquandle(&q)?, &text).map_err(invalid)
}

/// Hint paths are relative to the bracket file.
fn resolve_relative(base: &Path, hint: &str) -> String {
    if named::biquandle(hint).is_some() {
        return hint.to_string();
    }
    base.parent().map_or_else(
        || hint.to_string(),
        |p| p.join(hint).to_string_lossy().into_owned(),
    )
}

fn load_diagram(args: &DiagramArgs) -> Result<LinkDiagram, Failure> {
    let d = match (&args.knot, &args.pd, &args.pd_file) {
        (Some(name), _, _) => catalog_lookup(name).map_err(usage)?,
        (_, Some(pd), _) => LinkDiagram::parse(pd).map_err(invalid)?,
        (_, _, Some(path)) => LinkDiagram::parse(&read(path)?).map_err(invalid)?,
        _ => return Err(usage("one of --knot, --pd, --pd-file is required")),
    };
    Ok(if args.mirror { d.mirror() } else { d })
}

fn print_json(v: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    );
}

fn verify_biquandle(arg: &str, format: Format) -> Outcome {
    let text = match named::biquandle(arg) {
        Some(q) => q.to_string(),
        None => read(Path::new(arg))?,
    };
    let result = Biquandle::parse(&text);
    match (format, &result) {
        (Format::Json, Ok(q)) => {
            print_json(&json!({"valid": true, "order": q.size(), "quandle": q.is_quandle()}))
        }
        (Format::Json, Err(e)) => print_json(&json!({"valid": false, "error": e.to_string()})),
        (Format::Text, Ok(q)) => {
            let kind = if q.is_quandle() {
                "quandle"
            } else {
                "biquandle"
            };
            println!("valid {kind} of order {}", q.size());
        }
        (Format::Text, Err(_)) => {}
    }
    result.map(|_| ()).map_err(invalid)
}

fn verify_bracket(args: &BracketArgs, all: bool, format: Format) -> Outcome {
    let result = load_bracket(args);
    let errors: Vec<String> = match &result {
        Ok(_) => Vec::new(),
        Err(Failure::Usage(_)) => return result.map(|_| ()),
        Err(Failure::Invalid(e)) if !all => vec![e.clone()],
        Err(Failure::Invalid(e)) => all_violations(args).unwrap_or_else(|| vec![e.clone()]),
    };
    match (format, &result) {
        (Format::Json, Ok(br)) => {
            let r = br.ring();
            print_json(
                &json!({"valid": true, "ring": r.to_string(), "delta": r.format(br.delta()), "w": r.format(br.w())}),
            )
        }
        (Format::Json, Err(_)) => print_json(&json!({"valid": false, "errors": errors})),
        (Format::Text, Ok(br)) => {
            let r = br.ring();
            println!(
                "valid bracket over {r}: delta = {}, w = {}",
                r.format(br.delta()),
                r.format(br.w())
            );
        }
        (Format::Text, Err(_)) if all => {
            for e in &errors {
                println!("{e}");
            }
        }
        (Format::Text, Err(_)) => {}
    }
    match result {
        Ok(_) => Ok(()),
        Err(_) if all => Err(Failure::Invalid(format!(
            "{} condition(s) fail",
            errors.len()
        ))),
        Err(e) => Err(e),
    }
}

/// Re-reads a bracket file and lists every failed condition.
fn all_violations(args: &BracketArgs) -> Option<Vec<String>> {
    let path = Path::new(&args.bracket);
    let (hint, text) = split_biquandle_hint(&fs::read_to_string(path).ok()?);
    let q = args
        .biquandle
        .clone()
        .or_else(|| hint.map(|h| resolve_relative(path, &h)))?;
    let q = load_biquandle(&q).ok()?;
    let (ring, rows) = bbrack::bracket::parse_bracket_file(&text).ok()?;
    let (a, b) = bbrack::bracket::split_block(q.size(), rows).ok()?;
    Some(
        violations(&q, &ring, &a, &b, true)
            .iter()
            .map(ToString::to_string)
            .collect(),
    )
}

fn colorings(args: &DiagramArgs, biquandle: &str, list: bool, format: Format) -> Outcome {
    let d = load_diagram(args)?;
    let q = load_biquandle(biquandle)?;
    let cols = bbrack::enumerate_colorings(&d, &q);
    match format {
        Format::Json => {
            let mut v = json!({"count": cols.len()});
            if list {
                v["colorings"] = cols.iter().map(|c| json!(c.describe(&d))).collect();
            }
            print_json(&v);
        }
        Format::Text => {
            println!("{}", cols.len());
            if list {
                for c in &cols {
                    println!("{}", c.describe(&d));
                }
            }
        }
    }
    Ok(())
}

fn render(v: &InvariantValue<RingSpec>, format: ValueFormat) {
    match format {
        ValueFormat::Multiset => println!("{}", v.multiset_string()),
        ValueFormat::Poly => println!("{}", v.polynomial_string()),
        ValueFormat::Json => print_json(&v.to_json()),
    }
}

fn invariant(d: &DiagramArgs, b: &BracketArgs, format: ValueFormat, per_coloring: bool) -> Outcome {
    let d = load_diagram(d)?;
    let br = load_bracket(b)?;
    let values = beta_values(&d, &br).map_err(invalid)?;
    if per_coloring {
        for (f, v) in &values {
            println!("{} : {}", f.describe(&d), br.ring().format(v));
        }
    }
    render(
        &InvariantValue::from_values(br.ring().clone(), values.into_iter().map(|(_, v)| v)),
        format,
    );
    Ok(())
}

struct SearchArgs<'a> {
    biquandle: &'a str,
    ring: &'a str,
    dedup: bool,
    limit: Option<usize>,
    out: Option<&'a Path>,
    format: Format,
}

/// `[A | B]` with rows separated by `;`.
fn one_line(br: &DynBracket) -> String {
    let r = br.ring();
    let n = br.size();
    let row = |x: usize| {
        let a: Vec<String> = (0..n).map(|y| r.format(br.a(x, y))).collect();
        let b: Vec<String> = (0..n).map(|y| r.format(br.b(x, y))).collect();
        format!("{} | {}", a.join(" "), b.join(" "))
    };
    format!("[{}]", (0..n).map(row).collect::<Vec<_>>().join("; "))
}

fn search(a: SearchArgs) -> Outcome {
    let q = load_biquandle(a.biquandle)?;
    let ring: RingSpec = a.ring.parse().map_err(usage)?;
    let opts = SearchOptions {
        limit: a.limit,
        dedup: a.dedup,
        ..Default::default()
    };
    let report = search_brackets(&q, &ring, &opts).map_err(usage)?;
    let mut v = report.to_json();
    // keep stdout and files reproducible
    v.as_object_mut().unwrap().remove("elapsed_ms");
    if let Some(path) = a.out {
        let text = serde_json::to_string_pretty(&v).expect("JSON values serialize");
        fs::write(path, text + "\n").map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    match a.format {
        Format::Json => print_json(&v),
        Format::Text => {
            println!(
                "{} brackets ({} candidates examined)",
                report.brackets.len(),
                report.candidates
            );
            for br in &report.brackets {
                println!("{}", one_line(br));
            }
            if let Some(classes) = &report.classes {
                println!("{} equivalence classes", classes.len());
                for c in classes {
                    println!(
                        "{} members: {}",
                        c.members.len(),
                        one_line(&c.representative)
                    );
                }
            }
        }
    }
    Ok(())
}

/// Coloring count and value multiset.
type RowKey = (usize, Vec<(bbrack::Element, usize)>);

/// Rows `value : names`, ordered by coloring count then value.
fn table_rows(which: Table, mirror: bool) -> Vec<(String, Vec<&'static str>)> {
    let (bracket, names): (_, Vec<&str>) = match which {
        Table::F8Knots => ("f8", knot_names().collect()),
        Table::F8Links => ("f8", link_names().collect()),
        Table::Z11Knots => ("z11-dihedral", knot_names().collect()),
    };
    let br = named::bracket(bracket).expect("built-in bracket");
    let mut groups: BTreeMap<RowKey, (String, Vec<&str>)> = BTreeMap::new();
    for name in names {
        let d = catalog_lookup(name).expect("catalog entry");
        let d = if mirror { d.mirror() } else { d };
        let v = bbrack::invariant(&d, &br).expect("catalog diagrams are small");
        let key = (
            v.evaluate_at_u1(),
            v.entries().map(|(e, m)| (e.clone(), m)).collect(),
        );
        let text = match which {
            Table::Z11Knots => v.polynomial_string(),
            _ => v.multiset_string(),
        };
        groups
            .entry(key)
            .or_insert_with(|| (text, Vec::new()))
            .1
            .push(name);
    }
    groups.into_values().collect()
}

fn tables(which: Table, as_given: bool) -> Outcome {
    for (value, names) in table_rows(which, !as_given) {
        println!("{value} : {}", names.join(", "));
    }
    Ok(())
}

fn rmatrix(b: &BracketArgs, format: Format) -> Outcome {
    let br = load_bracket(b)?;
    let r = br.ring();
    let rm = br.to_rmatrices();
    let n = br.size();
    let rows = |m: &Matrix<bbrack::Element>| -> Vec<Vec<String>> {
        m.to_rows()
            .iter()
            .map(|row| row.iter().map(|e| r.format(e)).collect())
            .collect()
    };
    match format {
        Format::Json => {
            let mats: Vec<_> = (0..n * n)
                .map(|i| {
                    let m = &rm.x[i];
                    json!({"x": i / n + 1, "y": i % n + 1, "matrix": rows(m), "classical": is_classical_rmatrix(r, m)})
                })
                .collect();
            print_json(&json!({"U": rows(&rm.u), "N": rows(&rm.n), "X": mats}));
        }
        Format::Text => {
            println!("U = {}", rows(&rm.u).concat().join(" "));
            println!("N = {}", rows(&rm.n).concat().join(" "));
            for i in 0..n * n {
                let m = &rm.x[i];
                let kind = if is_classical_rmatrix(r, m) {
                    "classical"
                } else {
                    "not classical"
                };
                println!("X_{{{},{}}} ({kind})", i / n + 1, i % n + 1);
                println!("{}", m.format(r));
            }
        }
    }
    Ok(())
}

fn configure_threads() {
    if let Some(n) = std::env::var("BBRACK_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // a second initialisation is harmless
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    configure_threads();
    let outcome = match &cli.command {
        Command::VerifyBiquandle { biquandle, format } => verify_biquandle(biquandle, *format),
        Command::VerifyBracket {
            bracket,
            all,
            format,
        } => verify_bracket(bracket, *all, *format),
        Command::Colorings {
            diagram,
            biquandle,
            list,
            format,
        } => colorings(diagram, biquandle, *list, *format),
        Command::Invariant {
            diagram,
            bracket,
            format,
            per_coloring,
        } => invariant(diagram, bracket, *format, *per_coloring),
        Command::Search {
            biquandle,
            ring,
            dedup,
            limit,
            out,
            format,
        } => search(SearchArgs {
            biquandle,
            ring,
            dedup: *dedup,
            limit: *limit,
            out: out.as_deref(),
            format: *format,
        }),
        Command::Tables { which, as_given } => tables(*which, *as_given),
        Command::Rmatrix { bracket, format } => rmatrix(bracket, *format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("invalid: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
