use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cubequot::cube_symmetry::group_file::parse_group_file;
use cubequot::cube_symmetry::CubeGroup;
use cubequot::graph_core::{halved_graphs, local_params, SimpleGraph};
use cubequot::iso_aut::{are_isomorphic, automorphism_group};
use cubequot::quotient::{build_quotient, QuotientGraph};
use cubequot::verify::{self, reports_to_json, ClaimReport, Status};

/// Normal quotients of hypercubes: build, measure, verify.
#[derive(Parser, Debug)]
#[command(name = "cubequot", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the main output here instead of stdout. For `halves`, a path
    /// prefix: `<out>-0.<ext>` and `<out>-1.<ext>`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the verification grid and examples.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Largest group closure to enumerate.
    #[arg(long, global = true, default_value_t = 1 << 16)]
    cap_group: usize,
    /// Include wall-clock runtimes in reports (makes output non-deterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// d_K, |K|, evenness and semiregularity of a group.
    Mindist { group: PathBuf },
    /// The quotient graph (Q_n)_K.
    Quotient { group: PathBuf },
    /// Both halved graphs of a bipartite quotient and whether they are isomorphic.
    Halves { group: PathBuf },
    /// The parameters c_i and a_i of the quotient.
    Params {
        group: PathBuf,
        #[arg(long, default_value_t = 3)]
        levels: u32,
    },
    /// Automorphism group of the quotient, or of one of its halves.
    Aut {
        group: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        half: Option<u8>,
    },
    /// Run claims from the verification suite.
    Verify {
        /// Comma-separated claim ids, or `all`.
        #[arg(long, default_value = "all")]
        claims: String,
        /// List the claim ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Run one worked example.
    Example { name: String },
}

struct Failure {
    code: &'static str,
    message: String,
}

impl From<cubequot::Error> for Failure {
    fn from(e: cubequot::Error) -> Self {
        Failure {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

fn failure(code: &'static str, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("bad arguments");
            eprintln!("error[Usage]: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error[{}]: {}", f.code, f.message.replace('\n', " "));
            if f.code == "Usage" {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn run(cli: &Cli) -> CliResult<ExitCode> {
    let graph_output = matches!(cli.command, Command::Quotient { .. } | Command::Halves { .. });
    if cli.format == Format::Dot && !graph_output {
        return Err(failure("Usage", "--format dot only applies to quotient and halves"));
    }
    match &cli.command {
        Command::Mindist { group } => mindist(cli, &load_group(cli, group)?),
        Command::Quotient { group } => quotient(cli, &load_group(cli, group)?),
        Command::Halves { group } => halves(cli, &load_group(cli, group)?),
        Command::Params { group, levels } => params(cli, &load_group(cli, group)?, *levels),
        Command::Aut { group, half } => aut(cli, &load_group(cli, group)?, *half),
        Command::Verify { claims, list } => {
            if *list {
                let text: String = verify::CLAIMS
                    .iter()
                    .map(|c| format!("{:<22} {}\n", c.id, c.statement))
                    .collect();
                emit(cli, &text)?;
                return Ok(ExitCode::SUCCESS);
            }
            let ids: Vec<&str> = if claims == "all" {
                verify::claim_ids()
            } else {
                claims.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
            };
            let reports = verify::run_claims(&ids, cli.seed)?;
            report_out(cli, reports)
        }
        Command::Example { name } => {
            let r = verify::run_example(name, cli.seed)?;
            report_out(cli, vec![r])
        }
    }
}

fn load_group(cli: &Cli, path: &Path) -> CliResult<CubeGroup> {
    let text = fs::read_to_string(path)
        .map_err(|e| failure("Io", format!("{}: {e}", path.display())))?;
    Ok(parse_group_file(&text)?.build(cli.cap_group)?)
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| failure("Io", format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn mindist(cli: &Cli, k: &CubeGroup) -> CliResult<ExitCode> {
    let d = k.min_distance();
    let text = match cli.format {
        Format::Json => pretty(&json!({
            "n": k.dim(),
            "order": k.order(),
            "d_K": d,
            "even": k.is_even(),
            "semiregular": k.is_semiregular(),
        })),
        _ => format!(
            "n={}\norder={}\nd_K={d}\neven={}\nsemiregular={}\n",
            k.dim(),
            k.order(),
            k.is_even(),
            k.is_semiregular()
        ),
    };
    emit(cli, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn render_graph(format: Format, g: &SimpleGraph) -> String {
    match format {
        Format::Dot => g.to_dot(),
        Format::Json => {
            let mut s = g.to_json();
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("vertices={} edges={}\n", g.vertex_count(), g.edge_count());
            for (u, v) in g.edges() {
                let name = |w: usize| g.label(w).map_or_else(|| w.to_string(), str::to_string);
                s.push_str(&format!("{} {}\n", name(u), name(v)));
            }
            s
        }
    }
}

fn quotient(cli: &Cli, k: &CubeGroup) -> CliResult<ExitCode> {
    let q = build_quotient(k)?;
    emit(cli, &render_graph(cli.format, &q.graph))?;
    Ok(ExitCode::SUCCESS)
}

fn halves(cli: &Cli, k: &CubeGroup) -> CliResult<ExitCode> {
    let q = build_quotient(k)?;
    let h = halved_graphs(&q.graph)?;
    let [a, b] = &h.graphs;
    let iso = are_isomorphic(&a.clone().without_labels(), &b.clone().without_labels())?.is_some();
    let verdict = if iso { "ISOMORPHIC" } else { "NOT_ISOMORPHIC" };
    match &cli.out {
        Some(prefix) => {
            let ext = match cli.format {
                Format::Dot => "dot",
                Format::Json => "json",
                Format::Text => "txt",
            };
            for (i, g) in h.graphs.iter().enumerate() {
                let mut name = prefix.clone().into_os_string();
                name.push(format!("-{i}.{ext}"));
                write_file(Path::new(&name), &render_graph(cli.format, g))?;
            }
            println!("{verdict}");
        }
        None => {
            if cli.format == Format::Json {
                let graphs: Vec<Value> = h
                    .graphs
                    .iter()
                    .map(|g| serde_json::from_str(&g.to_json()).expect("graph json"))
                    .collect();
                print!("{}", pretty(&json!({"halves": graphs, "verdict": verdict})));
            } else {
                for g in &h.graphs {
                    print!("{}", render_graph(cli.format, g));
                }
                println!("{verdict}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn params(cli: &Cli, k: &CubeGroup, levels: u32) -> CliResult<ExitCode> {
    let q: QuotientGraph = build_quotient(k)?;
    let p = local_params(&q.graph, levels);
    let text = match cli.format {
        Format::Json => pretty(&json!({
            "n": q.n,
            "vertices": q.vertex_count(),
            "d_K": k.min_distance(),
            "params": p,
        })),
        _ => {
            let mut s = format!(
                "n={} vertices={} d_K={} valency={}\n",
                q.n,
                q.vertex_count(),
                k.min_distance(),
                q.graph.valency().map_or("irregular".to_string(), |v| v.to_string())
            );
            for lp in &p {
                s.push_str(&format!("i={} c={} a={}\n", lp.level, lp.c_value, lp.a_value));
            }
            s
        }
    };
    emit(cli, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn aut(cli: &Cli, k: &CubeGroup, half: Option<u8>) -> CliResult<ExitCode> {
    let q = build_quotient(k)?;
    let graph = match half {
        Some(i) => halved_graphs(&q.graph)?.graphs[i as usize].clone(),
        None => q.graph.clone(),
    };
    let g = automorphism_group(&graph.without_labels())?;
    let orbits = g.orbits();
    let text = match cli.format {
        Format::Json => pretty(&json!({
            "vertices": g.degree,
            "order": g.order.to_string(),
            "orbits": orbits.len(),
            "orbit_sizes": orbits.iter().map(Vec::len).collect::<Vec<_>>(),
            "vertex_transitive": orbits.len() <= 1,
            "generators": g.generators,
        })),
        _ => format!(
            "vertices={}\norder={}\norbits={}\nvertex_transitive={}\n",
            g.degree,
            g.order,
            orbits.len(),
            orbits.len() <= 1
        ),
    };
    emit(cli, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn report_out(cli: &Cli, reports: Vec<ClaimReport>) -> CliResult<ExitCode> {
    let failed = reports.iter().any(|r| r.status == Status::Fails);
    let reports: Vec<ClaimReport> = if cli.timing {
        reports
    } else {
        reports.into_iter().map(ClaimReport::without_timing).collect()
    };
    let text = match cli.format {
        Format::Json => {
            let mut s = reports_to_json(&reports);
            s.push('\n');
            s
        }
        _ => summary_table(&reports),
    };
    emit(cli, &text)?;
    Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

fn summary_table(reports: &[ClaimReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let checked = r.witnesses.get("checked").and_then(Value::as_u64).unwrap_or(0);
        let skipped = r.witnesses.get("skipped").and_then(Value::as_u64).unwrap_or(0);
        s.push_str(&format!(
            "{:<22} {:<7} checked={checked} skipped={skipped}",
            r.claim_id,
            r.status.to_string()
        ));
        if let Some(ms) = r.runtime_ms {
            s.push_str(&format!(" {ms}ms"));
        }
        s.push('\n');
        if let Some(cx) = r.counterexamples() {
            s.push_str(&format!("  counterexamples: {cx}\n"));
        }
    }
    s
}
