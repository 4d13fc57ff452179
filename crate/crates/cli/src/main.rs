//! `sesqui`: classify graphs, print decomposition certificates and
//! forbidden-subgraph witnesses, enumerate minimal obstructions and run the
//! verification sweeps.
//!
//! Exit status: 0 success, 1 verification mismatch, 2 usage error,
//! 3 input parse error, 4 size bound or search budget exceeded.

use std::fmt::Write as _;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sesqui::enumeration::{
    minimal_non_sesquicographs_among, minimal_non_sesquicographs_with, verify_minor_equivalence, GenerateOptions,
};
use sesqui::par;
use sesqui::{
    classify, decompose_sesquicograph, from_edge_list, from_graph6, obstruction_witness, to_edge_list, to_graph6,
    verify_closure, verify_theorem_equivalence, ClassificationReport, Decomposition, Error, Execution, FilterMode,
    Graph, ObstructionWitness,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 3;
const EXIT_LIMIT: u8 = 4;

/// Graphs classified per batch before results are written.
const BATCH: usize = 256;

#[derive(Parser)]
#[command(name = "sesqui", version, about = "Sesquicograph recognition, certificates and obstructions")]
struct Cli {
    /// Worker threads (1 runs everything on the calling thread).
    #[arg(long, short = 'j', global = true, env = "SESQUI_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report cograph / sesquicograph / 2-cograph verdicts with a certificate or witness.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print the decomposition tree, or the piece on which decomposition fails.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = TreeFormat::Text)]
        format: TreeFormat,
    },
    /// Print a forbidden induced subgraph, or "none".
    Witness {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// List the minimal non-sesquicographs of one order, or among a graph list.
    EnumerateMinimal {
        /// Order to enumerate.
        #[arg(long, required_unless_present = "input", conflicts_with = "input")]
        order: Option<usize>,
        /// graph6 file (one graph per line) to search instead of generating.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Pruned)]
        mode: Mode,
        /// Permit generation at order 8.
        #[arg(long)]
        allow_order_8: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Cross-check the recognizer, the subgraph criterion, witnesses and
    /// closure properties on every graph up to the given order.
    Verify {
        #[arg(long)]
        max_order: usize,
        /// Also check the induced-minor criterion (orders up to 6).
        #[arg(long)]
        minors: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Translate between graph6 and edge lists.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        format: GraphFormat,
    },
}

#[derive(Args)]
struct Input {
    /// Graph given literally (graph6, or edge-list text).
    #[arg(conflicts_with = "file")]
    graph: Option<String>,
    /// Read graphs from a file instead of stdin.
    #[arg(long, short = 'f')]
    file: Option<PathBuf>,
    /// graph6 input holds one graph per line; edge-list input is one graph.
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    input_format: InputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Naive,
    Pruned,
}

impl From<Mode> for FilterMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Naive => FilterMode::Naive,
            Mode::Pruned => FilterMode::Pruned,
        }
    }
}

/// A failure that decides the exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(e: io::Error) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: format!("i/o error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_limit() { EXIT_LIMIT } else { EXIT_PARSE };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// One input graph, or the reason it could not be read.
struct Item {
    line: usize,
    graph: Result<Graph, Error>,
}

fn read_source(input: &Input) -> Result<String, Failure> {
    if let Some(g) = &input.graph {
        return Ok(g.clone());
    }
    let mut text = String::new();
    match &input.file {
        Some(path) => {
            text = std::fs::read_to_string(path).map_err(|e| Failure {
                code: EXIT_PARSE,
                message: format!("cannot read {}: {e}", path.display()),
            })?
        }
        None => {
            io::stdin().read_to_string(&mut text).map_err(Failure::io)?;
        }
    }
    Ok(text)
}

fn graph6_lines(text: &str) -> Vec<Item> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.trim();
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            (!line.is_empty()).then(|| Item {
                line: i + 1,
                graph: from_graph6(line),
            })
        })
        .collect()
}

fn read_items(input: &Input) -> Result<Vec<Item>, Failure> {
    let text = read_source(input)?;
    Ok(match input.input_format {
        InputFormat::Graph6 => graph6_lines(&text),
        InputFormat::Edgelist => vec![Item {
            line: 1,
            graph: from_edge_list(&text),
        }],
    })
}

/// Runs `f` over the inputs in batches, writing results in input order.
/// Errors are reported on stderr and the most severe one sets the exit code.
fn for_each_graph<F>(exec: Execution, items: &[Item], out: &mut dyn Write, f: F) -> Result<u8, Failure>
where
    F: Fn(&Graph) -> Result<String, Error> + Sync + Send,
{
    let mut worst = 0u8;
    for batch in items.chunks(BATCH) {
        let rendered = par::map(exec, batch, |item| item.graph.clone().and_then(|g| f(&g)));
        for (item, r) in batch.iter().zip(rendered) {
            match r {
                Ok(text) => out.write_all(text.as_bytes()).map_err(Failure::io)?,
                Err(e) => {
                    let failure = Failure::from(e);
                    eprintln!("line {}: {}", item.line, failure.message);
                    worst = worst.max(failure.code);
                }
            }
        }
        out.flush().map_err(Failure::io)?;
    }
    Ok(worst)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_text(w: &ObstructionWitness) -> String {
    let mapping: Vec<String> = w.mapping.iter().map(|(r, h)| format!("{r}->{h}")).collect();
    format!("{} on {:?} ({})", w.name, w.vertices, mapping.join(" "))
}

fn report_text(r: &ClassificationReport) -> String {
    let mut s = format!(
        "{}: n={} cograph={} sesquicograph={} 2-cograph={}",
        r.graph6,
        r.order,
        yes_no(r.is_cograph),
        yes_no(r.is_sesquicograph),
        yes_no(r.is_2_cograph)
    );
    if let Some(t) = &r.certificate {
        let _ = write!(s, " certificate={}", serde_json::to_string(t).expect("tree serialises"));
    }
    if let Some(w) = &r.witness {
        let _ = write!(s, " witness={}", witness_text(w));
    }
    s.push('\n');
    s
}

fn json_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serialises");
    s.push('\n');
    s
}

fn decompose_render(g: &Graph, format: TreeFormat) -> Result<String, Error> {
    let g6 = to_graph6(g).ok();
    Ok(match (decompose_sesquicograph(g), format) {
        (Decomposition::Tree(t), TreeFormat::Text) => format!("# {}\n{}", g6.unwrap_or_default(), t.to_text()),
        (Decomposition::Tree(t), TreeFormat::Json) => json_line(&json!({ "graph6": g6, "certificate": t })),
        (Decomposition::Tree(t), TreeFormat::Dot) => t.to_dot(),
        (Decomposition::Failure(p), TreeFormat::Text) => format!(
            "# {}\nnot a sesquicograph; decomposition fails on {:?}\n",
            g6.unwrap_or_default(),
            p.vertices()
        ),
        (Decomposition::Failure(p), TreeFormat::Json) => json_line(&json!({
            "graph6": g6,
            "failure": { "vertices": p.vertices(), "graph6": to_graph6(&p.graph).ok() },
        })),
        (Decomposition::Failure(p), TreeFormat::Dot) => {
            let mut s = String::from("graph failure {\n  label=\"not a sesquicograph\";\n");
            for v in p.graph.vertices() {
                let _ = writeln!(s, "  {v};");
            }
            for (u, v) in p.graph.edges() {
                let _ = writeln!(s, "  {u} -- {v};");
            }
            s.push_str("}\n");
            s
        }
    })
}

fn witness_render(g: &Graph, format: ReportFormat) -> Result<String, Error> {
    let w = obstruction_witness(g)?;
    Ok(match format {
        ReportFormat::Json => json_line(&json!({ "graph6": to_graph6(g).ok(), "witness": w })),
        ReportFormat::Text => {
            let g6 = to_graph6(g).unwrap_or_default();
            match w {
                Some(w) => format!("{g6}: {}\n", witness_text(&w)),
                None => format!("{g6}: none\n"),
            }
        }
    })
}

fn enumerate(
    exec: Execution,
    order: Option<usize>,
    input: Option<PathBuf>,
    mode: FilterMode,
    allow_order_8: bool,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    let report = match (order, input) {
        (Some(n), _) => {
            let opts = GenerateOptions {
                allow_order_8,
                execution: exec,
            };
            minimal_non_sesquicographs_with(n, mode, &opts)?
        }
        (None, Some(path)) => {
            let source = Input {
                graph: None,
                file: Some(path),
                input_format: InputFormat::Graph6,
            };
            let mut graphs = Vec::new();
            for item in read_items(&source)? {
                match item.graph {
                    Ok(g) => graphs.push(g),
                    Err(e) => {
                        return Err(Failure {
                            code: EXIT_PARSE,
                            message: format!("line {}: {e}", item.line),
                        })
                    }
                }
            }
            minimal_non_sesquicographs_among(&graphs, mode, exec)
        }
        (None, None) => unreachable!("clap requires --order or --input"),
    };
    match format {
        ReportFormat::Json => {
            let v = report.to_json()?;
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serialises")).map_err(Failure::io)?;
        }
        ReportFormat::Text => {
            for g in &report.minimal_obstructions {
                writeln!(out, "{}", to_graph6(g)?).map_err(Failure::io)?;
            }
            let names: Vec<String> = report
                .names()
                .into_iter()
                .map(|n| n.map_or_else(|| "?".to_string(), |n| n.to_string()))
                .collect();
            eprintln!(
                "{} minimal obstruction(s) [{}] among {} graphs ({} screened, {} mode, {:.3}s)",
                report.minimal_obstructions.len(),
                names.join(", "),
                report.total_graphs,
                report.screened,
                report.filter_mode,
                report.elapsed.as_secs_f64()
            );
        }
    }
    Ok(0)
}

fn verify(exec: Execution, max_order: usize, minors: bool, format: ReportFormat, out: &mut dyn Write) -> Result<u8, Failure> {
    let eq = verify_theorem_equivalence(max_order, exec)?;
    let closure = verify_closure(max_order, exec)?;
    let minor = if minors {
        Some(verify_minor_equivalence(max_order, exec)?)
    } else {
        None
    };
    let mismatches = eq.mismatches.len() + closure.violations() + minor.as_ref().map_or(0, |(_, bad)| bad.len());
    match format {
        ReportFormat::Json => {
            let v = json!({
                "max_order": max_order,
                "graphs": eq.total_graphs(),
                "mismatches": mismatches,
                "equivalence": eq,
                "closure": closure,
                "minors": minor.as_ref().map(|(checked, bad)| json!({ "checked": checked, "mismatches": bad })),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serialises")).map_err(Failure::io)?;
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for c in &eq.per_order {
                let _ = writeln!(s, "n={}: {} graphs, {} sesquicographs", c.order, c.graphs, c.sesquicographs);
            }
            for m in &eq.mismatches {
                let _ = writeln!(
                    s,
                    "mismatch {}: recognizer={} subgraph-criterion={} witness={}",
                    m.graph6,
                    m.recognizer,
                    m.subgraph_criterion,
                    m.witness.as_deref().unwrap_or("none")
                );
            }
            let _ = writeln!(
                s,
                "closure: {} sesquicographs, {} deletions, {} contractions, {} violations",
                closure.sesquicographs_checked,
                closure.deletions_checked,
                closure.contractions_checked,
                closure.violations()
            );
            for v in closure
                .deletion_violations
                .iter()
                .chain(&closure.contraction_violations)
                .chain(&closure.certificate_violations)
            {
                let _ = writeln!(s, "violation {v}");
            }
            if let Some((checked, bad)) = &minor {
                let _ = writeln!(s, "induced minors: {checked} graphs, {} mismatches", bad.len());
                for b in bad {
                    let _ = writeln!(s, "minor mismatch {b}");
                }
            }
            let _ = writeln!(s, "{mismatches} mismatches / {} graphs", eq.total_graphs());
            out.write_all(s.as_bytes()).map_err(Failure::io)?;
        }
    }
    Ok(if mismatches == 0 { 0 } else { EXIT_MISMATCH })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let exec = if cli.jobs == Some(1) {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    par::with_jobs(cli.jobs, || -> Result<u8, Failure> {
        let stdout = io::stdout();
        let mut out = BufWriter::new(stdout.lock());
        let code = match cli.command {
            Command::Classify { input, format } => {
                let items = read_items(&input)?;
                for_each_graph(exec, &items, &mut out, |g| {
                    let r = classify(g)?;
                    Ok(match format {
                        ReportFormat::Text => report_text(&r),
                        ReportFormat::Json => json_line(&r),
                    })
                })
            }
            Command::Decompose { input, format } => {
                let items = read_items(&input)?;
                for_each_graph(exec, &items, &mut out, |g| decompose_render(g, format))
            }
            Command::Witness { input, format } => {
                let items = read_items(&input)?;
                for_each_graph(exec, &items, &mut out, |g| witness_render(g, format))
            }
            Command::Convert { input, format } => {
                let items = read_items(&input)?;
                for_each_graph(exec, &items, &mut out, |g| match format {
                    GraphFormat::Graph6 => Ok(format!("{}\n", to_graph6(g)?)),
                    GraphFormat::Edgelist => Ok(to_edge_list(&g.normalized())),
                })
            }
            Command::EnumerateMinimal {
                order,
                input,
                mode,
                allow_order_8,
                format,
            } => enumerate(exec, order, input, mode.into(), allow_order_8, format, &mut out),
            Command::Verify {
                max_order,
                minors,
                format,
            } => verify(exec, max_order, minors, format, &mut out),
        }?;
        out.flush().map_err(Failure::io)?;
        Ok(code)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
