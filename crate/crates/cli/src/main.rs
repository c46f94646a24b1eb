//! Batch-oriented command line for the licci graph library. All subcommands
//! are deterministic: identical invocations produce byte-identical output.

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use licci::admissibility::{self, Verdict};
use licci::betti::{self, BettiShape};
use licci::decoration::parse_int_list;
use licci::families;
use licci::graph::{self, EnumerateOptions};
use licci::linkage;
use licci::tor;
use licci::weyl;
use licci::{Decoration, Error as LicciError};

#[derive(Parser)]
#[command(
    name = "licci",
    about = "Combinatorics of licci-ideal Herzog classes as partition pairs",
    after_help = "Config file (--config): lines of `key = value`; recognized keys \
                  max_steps, budget, max_k set defaults for the matching flags.\n\
                  Environment: LICCI_OUT_DIR prefixes relative --out paths."
)]
struct Cli {
    /// Output rendering: machine JSON or a human table
    #[arg(long = "output", global = true, value_enum, default_value_t = OutFormat::Json)]
    output_format: OutFormat,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Key=value config file supplying default budgets
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Reject lambda/mu input that is not already sorted non-increasing
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Table,
}

#[derive(Args)]
struct DecArgs {
    /// Codimension
    #[arg(long)]
    c: Option<u32>,
    /// Comma-separated lambda parts, e.g. 2,2,1,1,1
    #[arg(long)]
    lambda: Option<String>,
    /// Comma-separated mu parts; omit or pass "" for the empty partition
    #[arg(long)]
    mu: Option<String>,
    /// Read the decoration from a JSON file ({"c":..,"lambda":[..],"mu":[..]}); "-" for stdin
    #[arg(long, value_name = "PATH")]
    from_json: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the pair is a decoration (a vertex of the licci graph)
    Check {
        #[command(flatten)]
        dec: DecArgs,
        /// Step budget for the smallest-minimal chain
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// List all links of the decoration
    Neighbors {
        #[command(flatten)]
        dec: DecArgs,
    },
    /// Apply one link with an explicit choice
    Link {
        #[command(flatten)]
        dec: DecArgs,
        /// Comma-separated choice of c parts (zeros allowed), e.g. 2,2,0
        #[arg(long)]
        choice: String,
    },
    /// Smallest-minimal-link chain to the complete intersection, with the
    /// graded Betti shape at every step
    PathToCi {
        #[command(flatten)]
        dec: DecArgs,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Enumerate the licci graph up to a level cap and export it
    Enumerate {
        #[arg(long, default_value_t = 3)]
        c: u32,
        /// Level cap K: all vertices with kappa <= K
        #[arg(long)]
        max_k: Option<u64>,
        /// Working budget for intermediate levels (default max((c-1)K+1-c, K))
        #[arg(long)]
        budget: Option<u64>,
        /// Keep only vertices with this resolution format, as "r1,rc"
        #[arg(long, value_name = "B,T")]
        format_filter: Option<String>,
        /// Export style
        #[arg(long, value_enum, default_value_t = ExportKind::Jsonl)]
        export: ExportKind,
    },
    /// Count and list the Herzog classes of a c=3 resolution format
    Classes {
        #[arg(long, default_value_t = 3)]
        c: u32,
        /// The format as "r1,r3", e.g. 5,2 for (1,5,6,2)
        #[arg(long, value_name = "B,T")]
        format: String,
        /// Level cap; required for non-Dynkin formats
        #[arg(long)]
        max_k: Option<u64>,
    },
    /// Tor-algebra multiplication profile of a c=3 decoration
    TorClass {
        #[command(flatten)]
        dec: DecArgs,
    },
    /// Graded Betti shape of the decoration's special resolution
    Betti {
        #[command(flatten)]
        dec: DecArgs,
    },
    /// Doubling: the Gorenstein decoration one codimension up
    Double {
        #[command(flatten)]
        dec: DecArgs,
    },
    /// Hyperplane section: prepend k to lambda, raise the codimension
    Hyperplane {
        #[command(flatten)]
        dec: DecArgs,
    },
    /// Emit the decorations of a named family
    Family {
        /// One of: ci unit gorenstein3 aci_even aci_odd hyperplane3 brown e6
        /// closest huneke f1683_I f1683_H f1683_J gor4_list gor4_9gen
        /// dev2_list dev2_c7
        name: String,
        /// Integer parameters for the family
        params: Vec<i64>,
    },
    /// Weyl-group oracle commands
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Jsonl,
    Dot,
    /// JSON lines with the edge pass skipped (fast counting runs)
    VerticesOnly,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Cross-check the orbit enumeration against the linkage formula up to a
    /// word length, and every formula edge against a reflection witness
    Verify {
        #[arg(long, default_value_t = 3)]
        c: u32,
        #[arg(long, default_value_t = 14)]
        max_length: usize,
    },
    /// Dump the orbit elements that are licci-graph vertices, as JSON lines
    Vertices {
        #[arg(long, default_value_t = 3)]
        c: u32,
        #[arg(long, default_value_t = 12)]
        max_length: usize,
    },
}

#[derive(Default)]
struct Config {
    max_steps: Option<usize>,
    budget: Option<u64>,
    max_k: Option<u64>,
}

fn load_config(path: &Path) -> Result<Config, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut cfg = Config::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key = value", lineno + 1))?;
        let value = value.trim();
        match key.trim() {
            "max_steps" => {
                cfg.max_steps = Some(value.parse().map_err(|e| format!("max_steps: {e}"))?)
            }
            "budget" => cfg.budget = Some(value.parse().map_err(|e| format!("budget: {e}"))?),
            "max_k" => cfg.max_k = Some(value.parse().map_err(|e| format!("max_k: {e}"))?),
            other => return Err(format!("config line {}: unknown key `{other}`", lineno + 1)),
        }
    }
    Ok(cfg)
}

enum CliError {
    /// Domain error: structured JSON on stdout, exit 1.
    Domain(LicciError),
    /// Usage error: message on stderr, exit 2.
    Usage(String),
}

impl From<LicciError> for CliError {
    fn from(e: LicciError) -> Self {
        CliError::Domain(e)
    }
}

fn error_code(e: &LicciError) -> &'static str {
    match e {
        LicciError::CodimTooSmall(_) => "codim_too_small",
        LicciError::NegativePart(_) => "negative_part",
        LicciError::SumIdentityViolated { .. } => "sum_identity_violated",
        LicciError::CodimMismatch(_, _) => "codim_mismatch",
        LicciError::InvalidChoice(_) => "invalid_choice",
        LicciError::NegativePartProduced(_) => "negative_part_produced",
        LicciError::TooFewParts => "too_few_parts",
        LicciError::WrongCodim { .. } => "wrong_codim",
        LicciError::NotApplicable(_) => "not_applicable",
        LicciError::UnknownVertex(_) => "unknown_vertex",
        LicciError::NotCosetDominant(_) => "not_coset_dominant",
        LicciError::ArmTooShort => "arm_too_short",
        LicciError::BudgetExceeded(_) => "budget_exceeded",
        LicciError::BudgetOverflow(_) => "budget_overflow",
        LicciError::NeedsKCap(_) => "needs_k_cap",
        LicciError::UnknownFamily(_) => "unknown_family",
        LicciError::BadParams(_) => "bad_params",
        LicciError::Parse(_) => "parse_error",
    }
}

impl DecArgs {
    fn resolve(&self, strict: bool) -> Result<Decoration, CliError> {
        if let Some(src) = &self.from_json {
            if self.c.is_some() || self.lambda.is_some() || self.mu.is_some() {
                return Err(CliError::Usage(
                    "--from-json conflicts with --c/--lambda/--mu".into(),
                ));
            }
            let text = if src == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(src)
                    .map_err(|e| CliError::Usage(format!("cannot read {src}: {e}")))?
            };
            let dec: Decoration = serde_json::from_str(&text)
                .map_err(|e| CliError::Domain(LicciError::Parse(e.to_string())))?;
            return Ok(dec);
        }
        let c = self
            .c
            .ok_or_else(|| CliError::Usage("missing --c (or --from-json)".into()))?;
        let lambda = parse_int_list(self.lambda.as_deref().unwrap_or(""))?;
        let mu = parse_int_list(self.mu.as_deref().unwrap_or(""))?;
        let dec = Decoration::new(c, &lambda, &mu)?;
        let unsorted = dec
            .lambda()
            .parts()
            .iter()
            .map(|&x| x as i64)
            .collect::<Vec<_>>()
            != lambda
            || dec
                .mu()
                .parts()
                .iter()
                .map(|&x| x as i64)
                .collect::<Vec<_>>()
                != mu;
        if unsorted {
            if strict {
                return Err(CliError::Usage(
                    "--strict: lambda/mu must be sorted non-increasing with no zeros".into(),
                ));
            }
            eprintln!("note: input canonicalized to {dec}");
        }
        Ok(dec)
    }
}

fn parse_format_pair(s: &str) -> Result<(usize, usize), CliError> {
    let parts = parse_int_list(s).map_err(CliError::Domain)?;
    if parts.len() != 2 || parts.iter().any(|&x| x < 1) {
        return Err(CliError::Usage(format!(
            "expected a pair r1,rc of positive integers, got `{s}`"
        )));
    }
    Ok((parts[0] as usize, parts[1] as usize))
}

#[derive(Serialize)]
struct DecView<'a> {
    #[serde(flatten)]
    dec: &'a Decoration,
    text: String,
    k: u64,
    b: usize,
    t: usize,
    d: i64,
    formatv: Vec<Option<u64>>,
}

fn dec_view(dec: &Decoration) -> DecView<'_> {
    DecView {
        dec,
        text: dec.to_string(),
        k: dec.level(),
        b: dec.gens(),
        t: dec.cmtype(),
        d: dec.deviation(),
        formatv: dec.format().ranks,
    }
}

fn verdict_json(dec: &Decoration, v: &Verdict) -> serde_json::Value {
    json!({
        "decoration": dec_view(dec),
        "verdict": v,
    })
}

fn link_result_json(r: &linkage::LinkResult) -> serde_json::Value {
    json!({
        "choice": r.choice.entries(),
        "p": r.p,
        "target": dec_view(&r.target),
    })
}

struct Output {
    format: OutFormat,
    out: Option<PathBuf>,
}

impl Output {
    fn emit(&self, json: &serde_json::Value, table: String) -> Result<(), CliError> {
        let body = match self.format {
            OutFormat::Json => {
                let mut s = serde_json::to_string_pretty(json).expect("serializable");
                s.push('\n');
                s
            }
            OutFormat::Table => table,
        };
        match &self.out {
            None => {
                print!("{body}");
                Ok(())
            }
            Some(path) => {
                let path = resolve_out_path(path);
                std::fs::write(&path, body)
                    .map_err(|e| CliError::Usage(format!("writing {}: {e}", path.display())))
            }
        }
    }
}

/// Relative --out paths land under $LICCI_OUT_DIR when it is set.
fn resolve_out_path(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("LICCI_OUT_DIR") {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path.to_path_buf()
}

fn betti_json(shape: &BettiShape) -> serde_json::Value {
    json!({
        "c": shape.c,
        "first_shifts": shape.first,
        "middle": shape.middle.map(|(rank, deg)| json!({"rank": rank, "shift": deg})),
        "last_shifts": shape.last,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(e)) => {
            let payload = json!({
                "error": {
                    "code": error_code(&e),
                    "message": e.to_string(),
                }
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = match &cli.config {
        Some(path) => load_config(path).map_err(CliError::Usage)?,
        None => Config::default(),
    };
    let output = Output {
        format: cli.output_format,
        out: cli.out.clone(),
    };
    match cli.cmd {
        Cmd::Check { dec, max_steps } => {
            let dec = dec.resolve(cli.strict)?;
            let steps = max_steps
                .or(cfg.max_steps)
                .unwrap_or(admissibility::DEFAULT_MAX_STEPS);
            let verdict = admissibility::is_decoration_with_budget(&dec, steps);
            let mut table = format!(
                "{dec}\n  status: {:?} ({:?})\n",
                verdict.status, verdict.reason
            );
            if let Some(cert) = &verdict.certificate {
                table.push_str(&format!("  certificate: {} links\n", cert.len()));
            }
            output.emit(&verdict_json(&dec, &verdict), table)
        }
        Cmd::Neighbors { dec } => {
            let dec = dec.resolve(cli.strict)?;
            let ns = linkage::neighbors(&dec);
            let items: Vec<_> = ns.iter().map(link_result_json).collect();
            let mut table = format!("{dec}: {} neighbors\n", ns.len());
            for r in &ns {
                table.push_str(&format!(
                    "  choice {:>12}  p {:>3}  -> {}  format {}\n",
                    format!("{:?}", r.choice.entries()),
                    r.p,
                    r.target,
                    r.target.format()
                ));
            }
            output.emit(
                &json!({"source": dec_view(&dec), "neighbors": items}),
                table,
            )
        }
        Cmd::Link { dec, choice } => {
            let dec = dec.resolve(cli.strict)?;
            let entries: Vec<u64> = parse_int_list(&choice)?
                .into_iter()
                .map(|x| {
                    if x < 0 {
                        Err(LicciError::NegativePart(x))
                    } else {
                        Ok(x as u64)
                    }
                })
                .collect::<Result<_, _>>()?;
            let r = linkage::link_with(&dec, &entries)?;
            let table = format!(
                "{dec}\n  choice {:?}  p {}\n  -> {}  format {}\n",
                r.choice.entries(),
                r.p,
                r.target,
                r.target.format()
            );
            output.emit(&link_result_json(&r), table)
        }
        Cmd::PathToCi { dec, max_steps } => {
            let dec = dec.resolve(cli.strict)?;
            let steps = max_steps
                .or(cfg.max_steps)
                .unwrap_or(admissibility::DEFAULT_MAX_STEPS);
            let verdict = admissibility::is_decoration_smallest_chain(&dec, steps);
            if !verdict.is_yes() {
                return Err(CliError::Domain(LicciError::NotApplicable(format!(
                    "not a decoration (status {:?}, reason {:?})",
                    verdict.status, verdict.reason
                ))));
            }
            let mut steps_json = Vec::new();
            let mut table = format!("{dec}\n{}", betti::betti_shape(&dec).render_table());
            let mut cur = dec.clone();
            for entries in verdict.certificate.as_deref().unwrap_or(&[]) {
                let r = linkage::link_with(&cur, entries)?;
                let shape = betti::betti_shape(&r.target);
                table.push_str(&format!(
                    "-- link {:?} (p = {}) -->\n{}\n{}",
                    entries,
                    r.p,
                    r.target,
                    shape.render_table()
                ));
                steps_json.push(json!({
                    "choice": entries,
                    "p": r.p,
                    "target": dec_view(&r.target),
                    "betti": betti_json(&shape),
                }));
                cur = r.target;
            }
            output.emit(
                &json!({
                    "source": dec_view(&dec),
                    "betti": betti_json(&betti::betti_shape(&dec)),
                    "steps": steps_json,
                }),
                table,
            )
        }
        Cmd::Enumerate {
            c,
            max_k,
            budget,
            format_filter,
            export,
        } => {
            let level_cap = max_k
                .or(cfg.max_k)
                .ok_or_else(|| CliError::Usage("missing --max-k".into()))?;
            let opts = EnumerateOptions {
                working_budget: budget.or(cfg.budget),
                with_edges: export != ExportKind::VerticesOnly,
                ..EnumerateOptions::default()
            };
            let mut g = graph::enumerate_with(c, level_cap, opts)?;
            if let Some(filter) = format_filter {
                let (b, t) = parse_format_pair(&filter)?;
                g.vertices.retain(|v| v.gens() == b && v.cmtype() == t);
                g.edges.retain(|e| {
                    e.source.gens() == b
                        && e.source.cmtype() == t
                        && e.target.gens() == b
                        && e.target.cmtype() == t
                });
            }
            let body = match export {
                ExportKind::Jsonl | ExportKind::VerticesOnly => g.to_jsonl(),
                ExportKind::Dot => g.to_dot(),
            };
            match &cli.out {
                None => {
                    print!("{body}");
                    Ok(())
                }
                Some(path) => {
                    let path = resolve_out_path(path);
                    std::fs::write(&path, body)
                        .map_err(|e| CliError::Usage(format!("writing {}: {e}", path.display())))
                }
            }
        }
        Cmd::Classes { c, format, max_k } => {
            if c != 3 {
                return Err(CliError::Domain(LicciError::WrongCodim {
                    expected: 3,
                    got: c,
                }));
            }
            let (b, t) = parse_format_pair(&format)?;
            let classes = graph::classes_by_format(b, t, max_k.or(cfg.max_k))?;
            let items: Vec<_> = classes.iter().map(dec_view).collect();
            let mut table = format!("format (r1,rc) = ({b},{t}): {} classes\n", classes.len());
            for d in &classes {
                table.push_str(&format!("  {d}  (k = {})\n", d.level()));
            }
            output.emit(
                &json!({"b": b, "t": t, "count": classes.len(), "classes": items}),
                table,
            )
        }
        Cmd::TorClass { dec } => {
            let dec = dec.resolve(cli.strict)?;
            let profile = tor::tor_profile(&dec)?;
            let table = format!(
                "{dec}\n  class: {:?}\n  koszul pairs: {:?}\n  pairings (i,j): {:?}\n",
                profile.class, profile.koszul_pairs, profile.pairing_indices
            );
            output.emit(
                &json!({"decoration": dec_view(&dec), "profile": profile}),
                table,
            )
        }
        Cmd::Betti { dec } => {
            let dec = dec.resolve(cli.strict)?;
            let shape = betti::betti_shape(&dec);
            let table = format!("{dec}\n{}", shape.render_table());
            output.emit(
                &json!({"decoration": dec_view(&dec), "betti": betti_json(&shape)}),
                table,
            )
        }
        Cmd::Double { dec } => {
            let dec = dec.resolve(cli.strict)?;
            let d = families::doubling(&dec);
            output.emit(
                &json!({"source": dec_view(&dec), "doubling": dec_view(&d)}),
                format!("{dec}\n  doubling -> {d}\n"),
            )
        }
        Cmd::Hyperplane { dec } => {
            let dec = dec.resolve(cli.strict)?;
            let h = families::hyperplane_section(&dec);
            output.emit(
                &json!({"source": dec_view(&dec), "hyperplane_section": dec_view(&h)}),
                format!("{dec}\n  hyperplane section -> {h}\n"),
            )
        }
        Cmd::Family { name, params } => {
            let list = families::family(&name, &params)?;
            let items: Vec<_> = list.iter().map(dec_view).collect();
            let mut table = format!("family {name}{params:?}: {} decorations\n", list.len());
            for d in &list {
                table.push_str(&format!("  {d}\n"));
            }
            output.emit(
                &json!({"family": name, "params": params, "decorations": items}),
                table,
            )
        }
        Cmd::Oracle { cmd } => match cmd {
            OracleCmd::Verify { c, max_length } => {
                let report = oracle_verify(c, max_length)?;
                let table = format!(
                    "oracle verify c={c} max_length={max_length}\n\
                     \x20 orbit vertices: {}   orbit edges: {}\n\
                     \x20 vertices missing from formula graph: {}\n\
                     \x20 edges missing from formula graph: {}\n\
                     \x20 formula edges without witness: {}\n\
                     \x20 agreement: {}\n",
                    report.oracle_vertices,
                    report.oracle_edges,
                    report.vertices_missing,
                    report.edges_missing,
                    report.unwitnessed_formula_edges,
                    report.agree
                );
                let jsonv = serde_json::to_value(&report).expect("serializable");
                output.emit(&jsonv, table)
            }
            OracleCmd::Vertices { c, max_length } => {
                let diagram_arm = max_length + 2;
                let diagram = weyl::Diagram::new(c, diagram_arm, diagram_arm)?;
                let verts = weyl::enumerate_vertices(c, max_length)?;
                let mut lines: Vec<String> = verts
                    .iter()
                    .map(|(d, e)| {
                        format!(
                            "{{\"decoration\":{},\"orbit\":{}}}",
                            serde_json::to_string(d).unwrap(),
                            e.dump_json(&diagram)
                        )
                    })
                    .collect();
                lines.sort();
                let body = lines.join("\n") + "\n";
                match &cli.out {
                    None => {
                        print!("{body}");
                        Ok(())
                    }
                    Some(path) => {
                        let path = resolve_out_path(path);
                        std::fs::write(&path, body).map_err(|e| {
                            CliError::Usage(format!("writing {}: {e}", path.display()))
                        })
                    }
                }
            }
        },
    }
}

#[derive(Serialize)]
struct OracleReport {
    c: u32,
    max_length: usize,
    oracle_vertices: usize,
    oracle_edges: usize,
    vertices_missing: usize,
    edges_missing: usize,
    unwitnessed_formula_edges: usize,
    agree: bool,
}

/// Containment of the length-bounded oracle sets in the formula graph, plus a
/// reflection witness for every formula edge at small levels.
fn oracle_verify(c: u32, max_length: usize) -> Result<OracleReport, CliError> {
    let verts = weyl::enumerate_vertices(c, max_length)?;
    let edges = weyl::enumerate_edges(c, max_length)?;
    let max_level = verts
        .iter()
        .map(|(d, _)| d.level())
        .chain(edges.iter().flat_map(|e| {
            let (a, b) = e.pair();
            [a.level(), b.level()]
        }))
        .max()
        .unwrap_or(0);
    let g = graph::enumerate(c, max_level)?;
    let vset: std::collections::BTreeSet<_> = g.vertices.iter().cloned().collect();
    let eset: std::collections::BTreeSet<(Decoration, Decoration)> = g
        .edges
        .iter()
        .map(|e| (e.source.clone(), e.target.clone()))
        .collect();
    let vertices_missing = verts.iter().filter(|(d, _)| !vset.contains(d)).count();
    let edges_missing = edges.iter().filter(|e| !eset.contains(&e.pair())).count();
    // every formula edge among low-level vertices has a reflection witness
    let mut unwitnessed = 0;
    let small = graph::enumerate(c, max_level.min(6))?;
    for v in &small.vertices {
        for r in linkage::neighbors(v) {
            if r.target.level() <= small.level_cap && !weyl::verify_edge(v, &r)? {
                unwitnessed += 1;
            }
        }
    }
    Ok(OracleReport {
        c,
        max_length,
        oracle_vertices: verts.len(),
        oracle_edges: edges.len(),
        vertices_missing,
        edges_missing,
        unwitnessed_formula_edges: unwitnessed,
        agree: vertices_missing == 0 && edges_missing == 0 && unwitnessed == 0,
    })
}
