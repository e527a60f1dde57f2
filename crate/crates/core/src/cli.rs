//! The `cliquebounds` command line.
//!
//! Every command prints one JSON envelope
//! `{"command", "version", "schema", "rationals", "payload"}` unless a
//! text or CSV format is requested. Integers are decimal strings and
//! rationals are `{"num", "den", "decimal"}` objects, so nothing passes
//! through a float. Failures print `{"command", "version", "schema",
//! "error": {"kind", "message"}}` and exit with:
//!
//! * `2` for domain, parse and resource errors,
//! * `3` for an inapplicable construction,
//! * `4` when verification finds a counterexample,
//! * `1` for an internal invariant failure.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::board::{apply_move, classify_move, run_board, BoardState};
use crate::bounds::{fj_series, main_bound, nonconsec_bound, ratio_stats};
use crate::complexes::{colored_revlex_complex, revlex_complex, Complex};
use crate::graphs::constructions::{build, plan, verify, Which};
use crate::graphs::io::{from_edge_list, parse_graph6_lines, to_edge_list, to_graph6};
use crate::graphs::{clique_vector, Graph};
use crate::oracle::{build_extremal_tables, EnumOptions, TheoremReport, DEFAULT_N_MAX};
use crate::representations::{colored_rep, kk_rep, lgbd_rep};
use crate::serde_exact::decimal;
use crate::{Error, Nat, VERSION};

pub const SCHEMA: &str = "cliquebounds/1";
const RATIONALS: &str = "exact num/den decimal strings; decimal truncated to 12 places";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;
pub const EXIT_COUNTEREXAMPLE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "cliquebounds", version, about = "Exact bounds on consecutive clique numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cascade, two-term and colored representations of m.
    Repr(ReprArgs),
    /// All bounds on c_(k+1) (or c_(k+step)) given c_k = m.
    Bound(BoundArgs),
    /// Build a graph attaining a bound.
    Construct(ConstructArgs),
    /// Clique vectors of graphs read from a file ("-" for stdin).
    Cliques(CliquesArgs),
    /// Facets of a rev-lex or colored rev-lex complex.
    Revlex(RevlexArgs),
    /// Run the two-row board rearrangement.
    Board(BoardArgs),
    /// Check the main theorem on every graph up to n-max vertices.
    Verify(VerifyArgs),
    /// Statistics over ranges of m.
    #[command(subcommand)]
    Stats(StatsCommand),
}

#[derive(Args, Debug)]
struct ReprArgs {
    #[arg(long)]
    m: Nat,
    #[arg(long)]
    k: u64,
    /// Color budget for the colored representation (default n_k - 1).
    #[arg(long)]
    r: Option<u64>,
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long)]
    m: Nat,
    #[arg(long)]
    k: u64,
    /// Bound c_(k+step) instead of c_(k+1).
    #[arg(long, default_value_t = 1)]
    step: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long)]
    m: Nat,
    #[arg(long)]
    k: u64,
    /// Construction number: 1, 2 or 3.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    which: u8,
    #[arg(long = "graph-format", value_enum, default_value_t = GraphFormat::Graph6)]
    graph_format: GraphFormat,
}

#[derive(Args, Debug)]
struct CliquesArgs {
    file: String,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DocFormat {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct RevlexArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    m: Nat,
    /// Use the first m r-permissible sets.
    #[arg(long)]
    r: Option<u64>,
    /// `text` prints the facet list only.
    #[arg(long, value_enum, default_value_t = DocFormat::Json)]
    format: DocFormat,
}

#[derive(Args, Debug)]
struct BoardArgs {
    #[arg(long)]
    k: u64,
    /// Top row entries from column k, comma separated.
    #[arg(long, value_delimiter = ',')]
    top: Vec<u64>,
    /// Bottom row entries from column k, comma separated (may be empty).
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    bottom: Vec<u64>,
    /// Apply only the next move, without the run's preconditions.
    #[arg(long)]
    single: bool,
    /// `text` prints the boards instead of JSON.
    #[arg(long, value_enum, default_value_t = DocFormat::Json)]
    format: DocFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Clique sizes to check; repeat or comma separate.
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<u64>,
    #[arg(long = "n-max", default_value_t = DEFAULT_N_MAX)]
    n_max: usize,
    /// Allow n-max = 8.
    #[arg(long)]
    long: bool,
    /// Visit only graphs with non-increasing degrees.
    #[arg(long)]
    prune: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Subcommand, Debug)]
enum StatsCommand {
    /// Fraction f_j of m <= j where the large-clique bound wins.
    Fj {
        #[arg(long)]
        k: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        j: Vec<u64>,
    },
    /// Ratio proxy and its bound at one m.
    Ratio {
        #[arg(long)]
        m: Nat,
        #[arg(long)]
        k: u64,
    },
}

/// Failure carried to the exit status.
enum Failure {
    Lib(Error),
    Counterexample(Value),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<Output, Failure>;

enum Output {
    Json(Value),
    Text(String),
}

fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn strs<T: std::fmt::Display>(vs: &[T]) -> Value {
    Value::Array(vs.iter().map(s).collect())
}

fn rational(q: &BigRational) -> Value {
    json!({"num": s(q.numer()), "den": s(q.denom()), "decimal": decimal(q, 12)})
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn repr(a: &ReprArgs) -> Outcome {
    let cascade = kk_rep(&a.m, a.k)?;
    let mut payload = json!({
        "m": s(&a.m),
        "k": s(a.k),
        "cascade": {"terms": strs(&cascade.terms), "value": s(cascade.value())},
    });
    if a.k >= 2 {
        let l = lgbd_rep(&a.m, a.k)?;
        payload["lgbd_form"] = json!({
            "n_k": s(l.top),
            "n_k1": s(l.second),
            "n_k1_present": l.has_second(),
            "a_terms": strs(&l.tail),
            "value": s(l.value()),
        });
    }
    let r = a.r.or_else(|| (cascade.leading() > a.k).then(|| cascade.leading() - 1));
    if let Some(r) = r {
        let c = colored_rep(&a.m, a.k, r)?;
        let terms: Vec<Value> = c.terms.iter().map(|&(n, col)| json!([s(n), s(col)])).collect();
        payload["colored"] = json!({"r": s(r), "terms": terms, "value": s(c.value())});
    }
    Ok(Output::Json(payload))
}

fn bound(a: &BoundArgs) -> Outcome {
    let report = main_bound(&a.m, a.k)?;
    let mut payload = to_value(&report);
    if a.step != 1 {
        payload["nonconsec"] = to_value(&nonconsec_bound(&a.m, a.k, a.step)?);
    }
    payload["step"] = s(a.step);
    Ok(Output::Json(payload))
}

fn render_graph(g: &Graph, f: GraphFormat) -> std::result::Result<String, Error> {
    match f {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::Edgelist => Ok(to_edge_list(g)),
    }
}

fn construct(a: &ConstructArgs) -> Outcome {
    let p = plan(&a.m, a.k, Which::from_index(a.which)?)?;
    let graph = build(&p)?;
    let v = verify(&p, Some(&graph))?;
    if !v.attains {
        return Err(Error::invariant(format!("construction counted {} and {}", v.ck, v.ck1)).into());
    }
    Ok(Output::Json(json!({
        "plan": to_value(&p),
        "verification": to_value(&v),
        "vertices": s(graph.n()),
        "graph_format": match a.graph_format { GraphFormat::Graph6 => "graph6", GraphFormat::Edgelist => "edgelist" },
        "graph": render_graph(&graph, a.graph_format)?,
    })))
}

fn read_input(path: &str) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn cliques(a: &CliquesArgs) -> Outcome {
    let text = read_input(&a.file)?;
    let graphs = match a.format {
        GraphFormat::Graph6 => parse_graph6_lines(&text)?,
        GraphFormat::Edgelist => vec![from_edge_list(&text)?],
    };
    let mut out = Vec::new();
    for g in &graphs {
        let cv = clique_vector(g, None)?;
        out.push(json!({
            "n": s(g.n()),
            "edges": s(g.edge_count()),
            "graph6": to_graph6(g)?,
            "clique_vector": to_value(&cv),
        }));
    }
    Ok(Output::Json(json!({"graphs": out})))
}

fn revlex(a: &RevlexArgs) -> Outcome {
    let c: Complex = match a.r {
        Some(r) => colored_revlex_complex(a.k, &a.m, r)?,
        None => revlex_complex(a.k, &a.m)?,
    };
    if a.format == DocFormat::Text {
        return Ok(Output::Text(c.to_facet_text()));
    }
    let facets: Vec<Value> = c.facets().iter().map(|f| strs(f)).collect();
    Ok(Output::Json(json!({
        "k": s(a.k),
        "m": s(&a.m),
        "r": a.r.map(s),
        "vertices": "1-based",
        "rank": "0-based; facet i has rev-lex rank i",
        "facets": facets,
        "face_vector": strs(&c.face_vector()),
    })))
}

fn board(a: &BoardArgs) -> Outcome {
    if a.single {
        let state = BoardState::new(a.k, a.top.clone(), a.bottom.clone())?;
        let Some(t) = classify_move(&state)? else {
            return Ok(match a.format {
                DocFormat::Text => Output::Text(format!("{}terminal: bottom row empty\n", state.render())),
                DocFormat::Json => Output::Json(json!({"state": to_value(&state), "move": null})),
            });
        };
        let (next, record) = apply_move(&state, t)?;
        return Ok(match a.format {
            DocFormat::Text => Output::Text(format!("{}{:?}\n{}", state.render(), t, next.render())),
            DocFormat::Json => Output::Json(json!({"state": to_value(&state), "move": to_value(&record)})),
        });
    }
    let run = run_board(a.k, &a.top, &a.bottom)?;
    Ok(match a.format {
        DocFormat::Json => Output::Json(to_value(&run)),
        DocFormat::Text => {
            let mut text = String::new();
            if let Some(first) = run.moves.first() {
                text.push_str(&first.pre.render());
            }
            for m in &run.moves {
                text.push_str(&format!("{:?}\n{}", m.move_type, m.post.render()));
            }
            text.push_str(&format!("{} > {}\n", run.lhs, run.rhs));
            Output::Text(text)
        }
    })
}

fn verify_cmd(a: &VerifyArgs) -> Outcome {
    let opts = EnumOptions {
        prune: a.prune,
        allow_long: a.long,
    };
    let tables = build_extremal_tables(&a.k, a.n_max, opts)?;
    let reports: Vec<TheoremReport> = tables.iter().map(TheoremReport::from_table).collect();
    let failed = reports.iter().any(|r| !r.holds());
    let output = match a.format {
        TableFormat::Csv => {
            let mut text = String::new();
            for t in &tables {
                if tables.len() > 1 {
                    text.push_str(&format!("# k={}\n", t.k));
                }
                text.push_str(&t.to_csv());
            }
            Output::Text(text)
        }
        TableFormat::Json => Output::Json(json!({
            "reports": to_value(&reports),
            "tables": to_value(&tables),
        })),
    };
    if failed {
        return Err(Failure::Counterexample(json!({"reports": to_value(&reports)})));
    }
    Ok(output)
}

fn stats(c: &StatsCommand) -> Outcome {
    match c {
        StatsCommand::Fj { k, j } => {
            let series = fj_series(j, *k)?;
            let rows: Vec<Value> = series
                .iter()
                .map(|f| json!({"j": s(f.j), "count": s(f.count), "fraction": rational(&f.fraction)}))
                .collect();
            Ok(Output::Json(json!({"k": s(*k), "fj": rows})))
        }
        StatsCommand::Ratio { m, k } => {
            let r = ratio_stats(m, *k)?;
            Ok(Output::Json(json!({
                "m": s(&r.m),
                "k": s(r.k),
                "oldbd": s(&r.oldbd),
                "lgbd": s(&r.lgbd),
                "conbd_lower": s(&r.conbd_lower),
                "ratio_proxy": rational(&r.ratio_proxy),
                "third_term": r.third_term.map(s),
                "ratbound_rhs": r.ratbound_rhs.as_ref().map(rational),
            })))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Repr(_) => "repr",
        Command::Bound(_) => "bound",
        Command::Construct(_) => "construct",
        Command::Cliques(_) => "cliques",
        Command::Revlex(_) => "revlex",
        Command::Board(_) => "board",
        Command::Verify(_) => "verify",
        Command::Stats(StatsCommand::Fj { .. }) => "stats fj",
        Command::Stats(StatsCommand::Ratio { .. }) => "stats ratio",
    }
}

/// Integers in the envelope are always decimal strings.
fn stringify_numbers(v: &mut Value) {
    match v {
        Value::Number(n) => *v = Value::String(n.to_string()),
        Value::Array(items) => items.iter_mut().for_each(stringify_numbers),
        Value::Object(map) => map.values_mut().for_each(stringify_numbers),
        _ => {}
    }
}

fn envelope(command: &str) -> Value {
    json!({"command": command, "version": VERSION, "schema": SCHEMA, "rationals": RATIONALS})
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inapplicable { .. } => EXIT_INAPPLICABLE,
        Error::Invariant(_) => EXIT_INTERNAL,
        _ => EXIT_DOMAIN,
    }
}

/// Runs the command line on `args` (including the program name), writing
/// to `out` and `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let name = command_name(&cli.command);
    let result = match &cli.command {
        Command::Repr(a) => repr(a),
        Command::Bound(a) => bound(a),
        Command::Construct(a) => construct(a),
        Command::Cliques(a) => cliques(a),
        Command::Revlex(a) => revlex(a),
        Command::Board(a) => board(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Stats(c) => stats(c),
    };
    let mut env = envelope(name);
    let code = match result {
        Ok(Output::Text(text)) => {
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
        Ok(Output::Json(mut payload)) => {
            stringify_numbers(&mut payload);
            env["payload"] = payload;
            EXIT_OK
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "cliquebounds {name}: {e}");
            env["error"] = json!({"kind": e.kind(), "message": e.to_string()});
            if let Error::Inapplicable { construction, reason } = &e {
                env["error"]["construction"] = json!(construction);
                env["error"]["reason"] = json!(reason);
            }
            exit_code(&e)
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "cliquebounds {name}: {msg}");
            env["error"] = json!({"kind": "io", "message": msg});
            EXIT_DOMAIN
        }
        Err(Failure::Counterexample(mut detail)) => {
            stringify_numbers(&mut detail);
            let _ = writeln!(err, "cliquebounds {name}: counterexample found");
            env["error"] = json!({"kind": "counterexample", "message": "a graph exceeds its bound", "detail": detail});
            EXIT_COUNTEREXAMPLE
        }
    };
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&env).expect("json values serialize"));
    code
}
