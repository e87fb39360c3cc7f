//! `fcs`: build FCS graphs and export them, audit structure against the
//! closed-form counts, certify metric and edge metric dimensions, check
//! user-supplied landmark sets, and grade the piecewise code tables.
//!
//! Exit codes are a stable contract: 0 success, 2 usage or parameter error,
//! 3 certification budget exceeded, 4 I/O error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fcs_core::closed_form::{
    primary_landmark_labels, span_audit, verify_formulas, ErrataReport, SpanVerdict,
};
use fcs_core::generators::{
    audit, build_complete, build_cycle, build_fcs, build_path, FcsParams, LabeledGraph,
    StructuralAudit, VertexLabel,
};
use fcs_core::graph::{all_pairs_distances, girth};
use fcs_core::resolvability::{
    certify_dimension, check_minimality, is_independent, is_resolving, Landmarks, Mode,
    ModeObject,
};

const EXIT_USAGE: i32 = 2;
const EXIT_BUDGET: i32 = 3;
const EXIT_IO: i32 = 4;

#[derive(Parser)]
#[command(
    name = "fcs",
    version,
    about = "FCS graph toolkit: generation, certification, and code-table audits"
)]
struct Cli {
    /// Worker threads for certification searches (default: all cores).
    /// Results are identical for any thread count.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Emit a machine-readable run report (schema_version 1) instead of text.
    /// The generate subcommand uses --format instead.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an FCS graph and write it to stdout
    Generate {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Compare structural invariants against their closed forms
    Audit {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Exhaustively certify the metric or edge metric dimension
    Certify {
        #[command(flatten)]
        graph: GraphChoice,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Largest landmark-set size to try (default: one less than the
        /// vertex count)
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Check one landmark set: resolving, independent, minimal
    Check {
        #[command(flatten)]
        params: ParamArgs,
        /// Comma-separated vertex labels, e.g. p1:1,r1:1,r2:7
        #[arg(long)]
        set: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Audit the closed-form code tables and write errata files
    Errata {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Directory for the .txt and .json errata reports
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Certify the path, cycle, and complete baselines for n = 3..8
    Baseline,
}

#[derive(Args)]
struct ParamArgs {
    /// Ring count of the first arm (>= 4)
    #[arg(long)]
    a: u32,
    /// Ring count of the second arm (>= 4)
    #[arg(long)]
    b: u32,
    /// Ring count of the third arm (>= 4)
    #[arg(long)]
    c: u32,
}

impl ParamArgs {
    fn build(&self) -> Result<FcsParams, Failure> {
        FcsParams::new(self.a, self.b, self.c).map_err(|e| usage_err(e.to_string()))
    }

    fn echo(&self) -> Value {
        json!({"a": self.a, "b": self.b, "c": self.c})
    }
}

/// Either an FCS instance (--a/--b/--c) or a baseline family (--family/--n).
#[derive(Args)]
struct GraphChoice {
    #[arg(long, conflicts_with_all = ["family", "n"])]
    a: Option<u32>,
    #[arg(long, conflicts_with_all = ["family", "n"])]
    b: Option<u32>,
    #[arg(long, conflicts_with_all = ["family", "n"])]
    c: Option<u32>,
    #[arg(long, value_enum, requires = "n")]
    family: Option<FamilyArg>,
    /// Order of the baseline graph
    #[arg(long, requires = "family")]
    n: Option<u32>,
}

impl GraphChoice {
    fn resolve(&self) -> Result<(LabeledGraph, String, Value), Failure> {
        match (self.a, self.b, self.c, self.family, self.n) {
            (Some(a), Some(b), Some(c), None, None) => {
                let p = FcsParams::new(a, b, c).map_err(|e| usage_err(e.to_string()))?;
                Ok((
                    build_fcs(p),
                    format!("FCS a={a} b={b} c={c}"),
                    json!({"a": a, "b": b, "c": c}),
                ))
            }
            (None, None, None, Some(family), Some(n)) => {
                let lg = family.build(n).map_err(|e| usage_err(e.to_string()))?;
                Ok((
                    lg,
                    format!("{} n={n}", family.as_str()),
                    json!({"family": family.as_str(), "n": n}),
                ))
            }
            _ => Err(usage_err(
                "pass either --a/--b/--c for an FCS graph or --family/--n for a baseline",
            )),
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    Edgelist,
    Dot,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
enum ModeArg {
    Vertex,
    Edge,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Vertex => Mode::Vertex,
            ModeArg::Edge => Mode::Edge,
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
}

impl FamilyArg {
    fn as_str(self) -> &'static str {
        match self {
            FamilyArg::Path => "path",
            FamilyArg::Cycle => "cycle",
            FamilyArg::Complete => "complete",
        }
    }

    fn build(self, n: u32) -> Result<LabeledGraph, fcs_core::generators::ParamError> {
        match self {
            FamilyArg::Path => build_path(n),
            FamilyArg::Cycle => build_cycle(n),
            FamilyArg::Complete => build_complete(n),
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage_err(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn io_err(context: impl Into<String>, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", context.into()),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global()
                .ok();
        }
    }
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn run(cli: &Cli) -> Result<i32, Failure> {
    let started = Instant::now();
    match &cli.command {
        Command::Generate { params, format } => cmd_generate(params, *format),
        Command::Audit { params } => cmd_audit(params, cli.json, started),
        Command::Certify {
            graph,
            mode,
            max_size,
        } => cmd_certify(graph, (*mode).into(), *max_size, cli.json, started),
        Command::Check { params, set, mode } => {
            cmd_check(params, set, (*mode).into(), cli.json, started)
        }
        Command::Errata { params, mode, out } => {
            cmd_errata(params, (*mode).into(), out, cli.json, started)
        }
        Command::Baseline => cmd_baseline(cli.json, started),
    }
}

/// Wraps a command's payload in the versioned run report, or prints the
/// plain-text rendering. Identical invocations give identical bytes apart
/// from duration_ms.
fn emit(json_mode: bool, command: &str, params: Value, payload: Value, text: &str, started: Instant) {
    if json_mode {
        let report = json!({
            "schema_version": 1,
            "command": command,
            "params": params,
            "payload": payload,
            "duration_ms": started.elapsed().as_millis() as u64,
            "version": env!("CARGO_PKG_VERSION"),
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print!("{text}");
    }
}

/// Edge lines as sorted "<label> <label>" pairs, endpoints in label order.
fn sorted_edge_lines(lg: &LabeledGraph) -> Vec<(String, String)> {
    let mut lines: Vec<(String, String)> = lg
        .graph()
        .edges()
        .iter()
        .map(|&e| {
            let (lu, lv) = lg.endpoint_labels(e);
            let (lu, lv) = (lu.to_string(), lv.to_string());
            if lu <= lv {
                (lu, lv)
            } else {
                (lv, lu)
            }
        })
        .collect();
    lines.sort();
    lines
}

fn cmd_generate(params: &ParamArgs, format: Format) -> Result<i32, Failure> {
    let p = params.build()?;
    let lg = build_fcs(p);
    let lines = sorted_edge_lines(&lg);
    let mut out = String::new();
    match format {
        Format::Edgelist => {
            writeln!(out, "# fcs edgelist a={} b={} c={}", p.a(), p.b(), p.c()).unwrap();
            writeln!(
                out,
                "# vertices={} edges={}",
                lg.graph().vertex_count(),
                lg.graph().edge_count()
            )
            .unwrap();
            for (lu, lv) in &lines {
                writeln!(out, "{lu} {lv}").unwrap();
            }
        }
        Format::Dot => {
            writeln!(out, "graph fcs_a{}_b{}_c{} {{", p.a(), p.b(), p.c()).unwrap();
            for (lu, lv) in &lines {
                writeln!(out, "  \"{lu}\" -- \"{lv}\";").unwrap();
            }
            writeln!(out, "}}").unwrap();
        }
        Format::Json => {
            let vertices: Vec<String> = lg
                .graph()
                .vertices()
                .map(|v| lg.label_of(v).to_string())
                .collect();
            let edges: Vec<Value> = lines.iter().map(|(u, v)| json!([u, v])).collect();
            let doc = json!({
                "schema_version": 1,
                "params": params.echo(),
                "vertices": vertices,
                "edges": edges,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        }
    }
    print!("{out}");
    Ok(0)
}

fn cmd_audit(params: &ParamArgs, json_mode: bool, started: Instant) -> Result<i32, Failure> {
    let p = params.build()?;
    let lg = build_fcs(p);
    let got = audit(&lg);
    let want = StructuralAudit::expected(p);
    let girth_got = girth(lg.graph());
    let ok = got == want && girth_got == Some(6);

    let mut text = String::new();
    writeln!(text, "params: a={} b={} c={}", p.a(), p.b(), p.c()).unwrap();
    let rows: [(&str, usize, usize); 5] = [
        ("vertices", got.vertex_count, want.vertex_count),
        ("edges", got.edge_count, want.edge_count),
        ("degree-2 vertices", got.degree2_count, want.degree2_count),
        ("degree-3 vertices", got.degree3_count, want.degree3_count),
        ("euler faces", got.euler_face_count, want.euler_face_count),
    ];
    for (name, actual, expected) in rows {
        writeln!(text, "{name}: {actual} (expected {expected})").unwrap();
    }
    writeln!(text, "connected: {} (expected true)", got.connected).unwrap();
    match girth_got {
        Some(g) => writeln!(text, "girth: {g} (expected 6)").unwrap(),
        None => writeln!(text, "girth: none (expected 6)").unwrap(),
    }
    writeln!(text, "status: {}", if ok { "ok" } else { "MISMATCH" }).unwrap();

    let payload = json!({
        "actual": audit_json(&got, girth_got),
        "expected": audit_json(&want, Some(6)),
        "ok": ok,
    });
    emit(json_mode, "audit", params.echo(), payload, &text, started);
    Ok(0)
}

fn audit_json(a: &StructuralAudit, girth: Option<u32>) -> Value {
    json!({
        "vertices": a.vertex_count,
        "edges": a.edge_count,
        "degree2": a.degree2_count,
        "degree3": a.degree3_count,
        "euler_faces": a.euler_face_count,
        "connected": a.connected,
        "girth": girth,
    })
}

fn cmd_certify(
    choice: &GraphChoice,
    mode: Mode,
    max_size: Option<usize>,
    json_mode: bool,
    started: Instant,
) -> Result<i32, Failure> {
    let (lg, desc, params_echo) = choice.resolve()?;
    let g = lg.graph();
    let dm = all_pairs_distances(g);
    let max = max_size.unwrap_or_else(|| (g.vertex_count() - 1).max(1));
    if max == 0 {
        return Err(usage_err("--max-size must be at least 1"));
    }
    let res = certify_dimension(g, &dm, mode, max).map_err(|e| usage_err(e.to_string()))?;

    let mut text = String::new();
    writeln!(
        text,
        "graph: {desc} ({} vertices, {} edges)",
        g.vertex_count(),
        g.edge_count()
    )
    .unwrap();
    writeln!(text, "mode: {mode}").unwrap();
    writeln!(text, "max size: {max}").unwrap();
    if res.refutations.is_empty() {
        writeln!(text, "refuted sizes: none").unwrap();
    } else {
        let parts: Vec<String> = res
            .refutations
            .iter()
            .map(|r| format!("{} ({} candidates)", r.size, r.candidates_tested))
            .collect();
        writeln!(text, "refuted sizes: {}", parts.join(", ")).unwrap();
    }
    let witness_labels: Option<Vec<String>> = res.witness.as_ref().map(|w| {
        w.iter()
            .map(|&v| lg.label_of(v).to_string())
            .collect()
    });
    let exit = match res.dimension {
        Some(dim) => {
            writeln!(text, "dimension = {dim}").unwrap();
            writeln!(
                text,
                "witness: {}",
                witness_labels.as_ref().unwrap().join(", ")
            )
            .unwrap();
            0
        }
        None => {
            writeln!(
                text,
                "dimension not determined: every size up to {max} was refuted"
            )
            .unwrap();
            EXIT_BUDGET
        }
    };
    let payload = json!({
        "mode": mode.as_str(),
        "max_size": max,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "dimension": res.dimension,
        "witness": witness_labels,
        "refuted_sizes": res.refuted_sizes,
        "refutations": res
            .refutations
            .iter()
            .map(|r| json!({"size": r.size, "candidates_tested": r.candidates_tested}))
            .collect::<Vec<_>>(),
        "budget_exceeded": res.budget_exceeded(),
    });
    emit(json_mode, "certify", params_echo, payload, &text, started);
    Ok(exit)
}

fn describe_object(lg: &LabeledGraph, obj: ModeObject) -> String {
    match obj {
        ModeObject::Vertex(v) => lg.label_of(v).to_string(),
        ModeObject::Edge(e) => {
            let (lu, lv) = lg.endpoint_labels(e);
            format!("{lu} -- {lv}")
        }
    }
}

fn cmd_check(
    params: &ParamArgs,
    set: &str,
    mode: Mode,
    json_mode: bool,
    started: Instant,
) -> Result<i32, Failure> {
    let p = params.build()?;
    let lg = build_fcs(p);
    let tokens: Vec<&str> = set
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(usage_err("--set needs at least one label"));
    }
    let mut ids = Vec::new();
    let mut labels = Vec::new();
    for tok in tokens {
        let label: VertexLabel = tok
            .parse()
            .map_err(|e| usage_err(format!("label '{tok}': {e}")))?;
        let id = lg.fcs_id(label).ok_or_else(|| {
            usage_err(format!(
                "label '{tok}' is out of range for a={} b={} c={}",
                p.a(),
                p.b(),
                p.c()
            ))
        })?;
        ids.push(id);
        labels.push(label.to_string());
    }
    let lm = Landmarks::new(ids).map_err(|e| usage_err(e.to_string()))?;
    let dm = all_pairs_distances(lg.graph());
    let res = is_resolving(lg.graph(), &dm, &lm, mode).expect("FCS graphs are connected");
    let independent = is_independent(lg.graph(), &lm);
    let minimal = if res.resolving {
        Some(
            check_minimality(lg.graph(), &dm, &lm, mode)
                .expect("resolving set admits a minimality check"),
        )
    } else {
        None
    };

    let mut text = String::new();
    writeln!(text, "params: a={} b={} c={}", p.a(), p.b(), p.c()).unwrap();
    writeln!(text, "mode: {mode}").unwrap();
    writeln!(text, "set: {}", labels.join(", ")).unwrap();
    writeln!(text, "resolving: {}", res.resolving).unwrap();
    let clash = res
        .counterexample
        .map(|(x, y)| (describe_object(&lg, x), describe_object(&lg, y)));
    if let Some((x, y)) = &clash {
        writeln!(text, "unresolved pair: {x} ~ {y}").unwrap();
    }
    writeln!(text, "independent: {independent}").unwrap();
    match minimal {
        Some(m) => writeln!(text, "minimal: {m}").unwrap(),
        None => writeln!(text, "minimal: n/a (set does not resolve)").unwrap(),
    }

    let payload = json!({
        "set": labels,
        "mode": mode.as_str(),
        "resolving": res.resolving,
        "counterexample": clash.map(|(x, y)| json!([x, y])),
        "independent": independent,
        "minimal": minimal,
    });
    emit(json_mode, "check", params.echo(), payload, &text, started);
    Ok(0)
}

fn render_predicted(entry: &fcs_core::closed_form::ErrataEntry) -> (String, String) {
    match &entry.predicted {
        None => ("-".into(), "-".into()),
        Some(coords) => {
            let texts: Vec<&str> = coords.iter().map(|c| c.text).collect();
            let values: Vec<String> = coords
                .iter()
                .map(|c| c.value.map_or_else(|| "?".into(), |v| v.to_string()))
                .collect();
            (
                format!("({})", texts.join(", ")),
                format!("({})", values.join(", ")),
            )
        }
    }
}

fn piece_range(report: &ErrataReport, family: &str, piece: usize) -> Option<String> {
    report
        .families
        .iter()
        .find(|f| f.name == family)
        .map(|f| f.pieces[piece].range_text.clone())
}

fn family_summary_lines(report: &ErrataReport) -> Vec<String> {
    report
        .families
        .iter()
        .map(|f| {
            let mut line = format!("  {}: {} objects, {} match", f.name, f.objects, f.matches);
            if f.mismatches > 0 {
                write!(line, ", {} mismatch", f.mismatches).unwrap();
            }
            if f.untranscribable > 0 {
                write!(line, ", {} untranscribable", f.untranscribable).unwrap();
            }
            if f.uncovered > 0 {
                write!(line, ", {} uncovered", f.uncovered).unwrap();
            }
            line
        })
        .collect()
}

fn render_errata_text(
    lg: &LabeledGraph,
    report: &ErrataReport,
    span: &[SpanVerdict],
) -> String {
    let p = report.params;
    let landmark_text: Vec<String> = primary_landmark_labels(p)
        .iter()
        .map(|l| l.to_string())
        .collect();
    let mut text = String::new();
    writeln!(text, "code table audit").unwrap();
    writeln!(text, "params: a={} b={} c={}", p.a(), p.b(), p.c()).unwrap();
    writeln!(text, "mode: {}", report.mode).unwrap();
    writeln!(text, "landmarks: {}", landmark_text.join(", ")).unwrap();
    writeln!(text, "objects audited: {}", report.total_objects).unwrap();
    writeln!(text).unwrap();
    writeln!(text, "family summaries").unwrap();
    for line in family_summary_lines(report) {
        writeln!(text, "{line}").unwrap();
    }
    let (matches, mismatches, untr, uncov) = report.totals();
    writeln!(
        text,
        "totals: {matches} match, {mismatches} mismatch, {untr} untranscribable, {uncov} uncovered"
    )
    .unwrap();
    writeln!(text).unwrap();
    if report.entries.is_empty() {
        writeln!(text, "findings: none").unwrap();
    } else {
        writeln!(text, "findings (verbatim predicted vs oracle)").unwrap();
        for entry in &report.entries {
            let (texts, values) = render_predicted(entry);
            let mut line = format!("  [{}] {} {}", entry.status, entry.family, entry.object);
            if let Some(d) = entry.d {
                write!(line, " d={d}").unwrap();
            }
            if let Some(piece) = entry.piece {
                let range = piece_range(report, entry.family, piece).unwrap_or_default();
                write!(line, " piece {} [{range}]", piece + 1).unwrap();
            }
            let oracle = format!(
                "({}, {}, {})",
                entry.oracle[0], entry.oracle[1], entry.oracle[2]
            );
            if entry.predicted.is_some() {
                write!(line, ": predicted {texts} = {values}; oracle {oracle}").unwrap();
            } else {
                write!(line, ": no piece covers this index; oracle {oracle}").unwrap();
            }
            writeln!(text, "{line}").unwrap();
            if let Some(note) = &entry.note {
                writeln!(text, "      note: {note}").unwrap();
            }
        }
    }
    writeln!(text).unwrap();
    writeln!(
        text,
        "span audit over a,b,c in (4,4,4) (5,5,5) (4,5,6) (6,4,5)"
    )
    .unwrap();
    for v in span {
        writeln!(
            text,
            "  {} piece {} [{}]: {}",
            v.family,
            v.piece + 1,
            v.range_text,
            v.status.as_str()
        )
        .unwrap();
    }
    let _ = lg;
    text
}

fn errata_json(report: &ErrataReport, span: &[SpanVerdict]) -> Value {
    let p = report.params;
    let (matches, mismatches, untr, uncov) = report.totals();
    json!({
        "schema_version": 1,
        "params": {"a": p.a(), "b": p.b(), "c": p.c()},
        "mode": report.mode.as_str(),
        "landmarks": primary_landmark_labels(p).iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "total_objects": report.total_objects,
        "totals": {
            "match": matches,
            "mismatch": mismatches,
            "untranscribable": untr,
            "uncovered": uncov,
        },
        "families": report.families.iter().map(|f| json!({
            "name": f.name,
            "objects": f.objects,
            "match": f.matches,
            "mismatch": f.mismatches,
            "untranscribable": f.untranscribable,
            "uncovered": f.uncovered,
            "pieces": f.pieces.iter().map(|pc| json!({
                "piece": pc.piece + 1,
                "range": pc.range_text,
                "objects": pc.objects,
                "match": pc.matches,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "entries": report.entries.iter().map(|e| json!({
            "family": e.family,
            "object": e.object,
            "d": e.d,
            "piece": e.piece.map(|i| i + 1),
            "status": e.status.as_str(),
            "predicted": e.predicted.map(|coords| coords.iter().map(|c| json!({
                "text": c.text,
                "value": c.value,
            })).collect::<Vec<_>>()),
            "oracle": e.oracle,
            "note": e.note,
        })).collect::<Vec<_>>(),
        "span": span.iter().map(|v| json!({
            "family": v.family,
            "piece": v.piece + 1,
            "range": v.range_text,
            "affine": v.affine,
            "status": v.status.as_str(),
        })).collect::<Vec<_>>(),
    })
}

fn cmd_errata(
    params: &ParamArgs,
    mode: Mode,
    out: &PathBuf,
    json_mode: bool,
    started: Instant,
) -> Result<i32, Failure> {
    let p = params.build()?;
    let lg = build_fcs(p);
    let report = verify_formulas(&lg, mode);
    let span = span_audit(mode);
    let text_report = render_errata_text(&lg, &report, &span);
    let json_report = errata_json(&report, &span);

    fs::create_dir_all(out).map_err(|e| io_err(format!("create {}", out.display()), e))?;
    let stem = format!(
        "errata_{}_a{}_b{}_c{}",
        mode.as_str(),
        p.a(),
        p.b(),
        p.c()
    );
    let txt_path = out.join(format!("{stem}.txt"));
    let json_path = out.join(format!("{stem}.json"));
    fs::write(&txt_path, &text_report)
        .map_err(|e| io_err(format!("write {}", txt_path.display()), e))?;
    fs::write(
        &json_path,
        serde_json::to_string_pretty(&json_report).unwrap() + "\n",
    )
    .map_err(|e| io_err(format!("write {}", json_path.display()), e))?;

    let (matches, mismatches, untr, uncov) = report.totals();
    let mut text = String::new();
    writeln!(text, "params: a={} b={} c={}", p.a(), p.b(), p.c()).unwrap();
    writeln!(text, "mode: {mode}").unwrap();
    writeln!(text, "family summaries").unwrap();
    for line in family_summary_lines(&report) {
        writeln!(text, "{line}").unwrap();
    }
    writeln!(
        text,
        "totals: {matches} match, {mismatches} mismatch, {untr} untranscribable, {uncov} uncovered"
    )
    .unwrap();
    writeln!(text, "wrote {}", txt_path.display()).unwrap();
    writeln!(text, "wrote {}", json_path.display()).unwrap();

    let payload = json!({
        "report": json_report,
        "files": [txt_path.display().to_string(), json_path.display().to_string()],
    });
    emit(json_mode, "errata", params.echo(), payload, &text, started);
    Ok(0)
}

fn cmd_baseline(json_mode: bool, started: Instant) -> Result<i32, Failure> {
    let mut text = String::new();
    writeln!(text, "family    n  vertex  edge").unwrap();
    let mut rows = Vec::new();
    for n in 3..=8u32 {
        for family in [FamilyArg::Path, FamilyArg::Cycle, FamilyArg::Complete] {
            let lg = family.build(n).expect("n >= 3 is valid for all baselines");
            let dm = all_pairs_distances(lg.graph());
            let mut dims = [0usize; 2];
            for (t, mode) in Mode::BOTH.iter().enumerate() {
                let res = certify_dimension(lg.graph(), &dm, *mode, lg.graph().vertex_count() - 1)
                    .expect("baseline graphs are connected");
                dims[t] = res.dimension.expect("baseline dimensions are below n");
            }
            writeln!(
                text,
                "{:<9} {n}  {:>6}  {:>4}",
                family.as_str(),
                dims[0],
                dims[1]
            )
            .unwrap();
            rows.push(json!({
                "family": family.as_str(),
                "n": n,
                "vertex_dimension": dims[0],
                "edge_dimension": dims[1],
            }));
        }
    }
    emit(
        json_mode,
        "baseline",
        json!({"n_range": [3, 8]}),
        json!({"rows": rows}),
        &text,
        started,
    );
    Ok(0)
}
