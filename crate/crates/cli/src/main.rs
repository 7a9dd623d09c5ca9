//! Command-line front end.
//!
//! Exit codes: 0 when every expectation is met (known, documented
//! discrepancies included), 2 when the data contradicts a pinned
//! expectation or a checked bound, 1 for usage and I/O errors.

use std::fs;
use std::io::{BufRead, BufReader, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sti_core::enumerate::{
    enumerate_sti, filter_sti_stream, CensusResult, EnumerationTask, DEFAULT_INTERNAL_CAP,
};
use sti_core::error::EnumerateError;
use sti_core::families::{balanced_complete_bipartite, hatted_cycle, theta};
use sti_core::graph::Graph;
use sti_core::graph6;
use sti_core::report::{analyze, InvariantReport};
use sti_core::verify::{verify_report, VerificationReport};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DISCREPANCY: u8 = 2;

#[derive(Parser)]
#[command(
    name = "sti",
    version,
    about = "Distance invariants, censuses, and bound verification for stepwise transmission irregular graphs"
)]
struct Cli {
    /// Worker threads; the STI_THREADS environment variable is used
    /// when the flag is absent.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of the input graphs.
    Analyze(AnalyzeArgs),
    /// Generate or filter the STI census of one odd order.
    Enumerate(EnumerateArgs),
    /// Check all bounds and equality characterizations over censuses.
    Verify(VerifyArgs),
    /// Construct a named family member.
    GenFamily(GenFamilyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input file; '-' or absent reads standard input. graph6 lines
    /// and the edge-list format (order line, then "u v" lines) are
    /// auto-detected.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = TextOrJson::Json)]
    format: TextOrJson,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Census order (odd, at least 3).
    #[arg(long)]
    n: usize,
    /// Filter a graph6 stream ('-' for standard input) instead of
    /// generating internally.
    #[arg(long)]
    stream: Option<PathBuf>,
    /// Expected census count; a mismatch exits with status 2.
    #[arg(long)]
    expect: Option<usize>,
    /// Directory receiving sti-n{N}.g6 and sti-n{N}.json.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CensusFormat::Json)]
    format: CensusFormat,
    /// Internal-generation cap; orders above it need --stream.
    #[arg(long, default_value_t = DEFAULT_INTERNAL_CAP)]
    max_internal: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Census source, repeatable: 'n<order>' enumerates internally
    /// (e.g. n9), anything else is read as a graph6 file holding one
    /// order.
    #[arg(long = "census", required = true)]
    census: Vec<String>,
    /// Expected census counts, matched positionally with --census.
    #[arg(long)]
    expect: Vec<usize>,
    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = TextOrJson::Json)]
    format: TextOrJson,
    /// Internal-generation cap for 'n<order>' sources.
    #[arg(long, default_value_t = DEFAULT_INTERNAL_CAP)]
    max_internal: usize,
}

#[derive(Args)]
struct GenFamilyArgs {
    /// hatted | bipartite | theta | path3
    family: String,
    /// Order of the member.
    n: usize,
    /// Path lengths p and q (theta only).
    #[arg(num_args = 0..=2)]
    lengths: Vec<usize>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CensusFormat {
    Json,
    Text,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = init_threads(cli.threads) {
        eprintln!("sti: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    let result = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::GenFamily(args) => cmd_gen_family(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("sti: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn init_threads(flag: Option<usize>) -> Result<()> {
    let threads = flag.or_else(|| {
        std::env::var("STI_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(t) = threads {
        if t == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("building the thread pool")?;
    }
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8> {
    let text = read_input(args.input.as_deref())?;
    let graphs = parse_graphs(&text)?;
    let mut reports = Vec::with_capacity(graphs.len());
    for (label, g) in &graphs {
        let report = analyze(g).with_context(|| format!("analyzing {label}"))?;
        reports.push(report);
    }
    match args.format {
        TextOrJson::Json => {
            let doc = serde_json::json!({
                "schema": "sti-analyze/1",
                "graphs": reports,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        TextOrJson::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print!("{}", render_report_text(r));
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8> {
    let census = match &args.stream {
        Some(path) => {
            if path.as_os_str() == "-" {
                let stdin = std::io::stdin();
                filter_sti_stream(args.n, stdin.lock())?
            } else {
                let file = fs::File::open(path)
                    .with_context(|| format!("opening {}", path.display()))?;
                filter_sti_stream(args.n, BufReader::new(file))?
            }
        }
        None => {
            let task = EnumerationTask {
                n: args.n,
                internal_cap: args.max_internal,
                use_prefilters: true,
            };
            match enumerate_sti(&task) {
                Ok(census) => census,
                Err(e @ EnumerateError::AboveCap { .. }) => {
                    bail!("{e}; pass --stream <file.g6> or raise --max-internal");
                }
                Err(e) => return Err(e.into()),
            }
        }
    };
    if let Some(dir) = &args.out {
        write_census_files(dir, &census)?;
    }
    match args.format {
        CensusFormat::Json => println!("{}", serde_json::to_string_pretty(&census)?),
        CensusFormat::Graph6 => print!("{}", census.graph6_lines()),
        CensusFormat::Text => print!("{}", render_census_text(&census)),
    }
    if let Some(expected) = args.expect {
        if census.count != expected {
            eprintln!(
                "sti: census count {} for n={} does not match expected {expected}",
                census.count, census.n
            );
            return Ok(EXIT_DISCREPANCY);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    if args.expect.len() > args.census.len() {
        bail!("more --expect values than --census sources");
    }
    let mut censuses = Vec::new();
    let mut descriptions = Vec::new();
    for spec in &args.census {
        let census = load_census(spec, args.max_internal)?;
        descriptions.push(format!("{spec} (n={}, count={})", census.n, census.count));
        censuses.push(census);
    }
    let mut expect_failures = Vec::new();
    for (census, expected) in censuses.iter().zip(&args.expect) {
        if census.count != *expected {
            expect_failures.push(format!(
                "census n={} has {} graphs, expected {expected}",
                census.n, census.count
            ));
        }
    }
    let report = verify_report(&censuses, &descriptions.join(", "));
    if let Some(path) = &args.out {
        let mut doc = serde_json::to_string_pretty(&report)?;
        doc.push('\n');
        fs::write(path, doc).with_context(|| format!("writing {}", path.display()))?;
    }
    match args.format {
        TextOrJson::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        TextOrJson::Text => print!("{}", render_verify_text(&report)),
    }
    for failure in &expect_failures {
        eprintln!("sti: {failure}");
    }
    if report.pass && expect_failures.is_empty() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_DISCREPANCY)
    }
}

fn cmd_gen_family(args: GenFamilyArgs) -> Result<u8> {
    let g = match args.family.as_str() {
        "hatted" | "hatted-cycle" => hatted_cycle(args.n)?,
        "bipartite" | "complete-bipartite" | "balanced-complete-bipartite" => {
            balanced_complete_bipartite(args.n)?
        }
        "theta" => {
            let [p, q] = args.lengths[..] else {
                bail!("theta needs two path lengths: gen-family theta <n> <p> <q>");
            };
            theta(args.n, p, q)?
        }
        "path3" | "path" => {
            if args.n != 3 {
                bail!("path3 only exists at order 3");
            }
            Graph::from_edge_list(3, &[(0, 1), (1, 2)])?
        }
        other => bail!("unknown family {other:?}; use hatted, bipartite, theta, or path3"),
    };
    match args.format {
        GraphFormat::Graph6 => println!("{}", graph6::encode(&g)),
        GraphFormat::Edgelist => print!("{}", g.to_edge_list_string()),
    }
    Ok(EXIT_OK)
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading standard input")?;
            Ok(buf)
        }
    }
}

// Edge lists start with a bare number; anything else is graph6 lines.
fn parse_graphs(text: &str) -> Result<Vec<(String, Graph)>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .context("empty input")?;
    if first.chars().all(|c| c.is_ascii_digit()) {
        let g = Graph::parse_edge_list(text)?;
        return Ok(vec![("edge list".into(), g)]);
    }
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line).with_context(|| format!("graph6 line {}", idx + 1))?;
        graphs.push((format!("line {}", idx + 1), g));
    }
    Ok(graphs)
}

fn load_census(spec: &str, max_internal: usize) -> Result<CensusResult> {
    if let Some(order) = spec.strip_prefix('n').and_then(|s| s.parse::<usize>().ok()) {
        let task = EnumerationTask {
            n: order,
            internal_cap: max_internal,
            use_prefilters: true,
        };
        return enumerate_sti(&task)
            .with_context(|| format!("generating the census for {spec}"));
    }
    let order = peek_graph6_order(Path::new(spec))?;
    let file = fs::File::open(spec).with_context(|| format!("opening {spec}"))?;
    filter_sti_stream(order, BufReader::new(file))
        .with_context(|| format!("filtering {spec}"))
}

fn peek_graph6_order(path: &Path) -> Result<usize> {
    let file = fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
    for line in BufReader::new(file).lines() {
        let line = line?;
        let line = line.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line)
            .with_context(|| format!("reading the leading graph of {}", path.display()))?;
        return Ok(g.order());
    }
    bail!("{} holds no graphs", path.display());
}

fn write_census_files(dir: &Path, census: &CensusResult) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let g6_path = dir.join(format!("sti-n{}.g6", census.n));
    fs::write(&g6_path, census.graph6_lines())
        .with_context(|| format!("writing {}", g6_path.display()))?;
    let json_path = dir.join(format!("sti-n{}.json", census.n));
    let mut doc = serde_json::to_string_pretty(census)?;
    doc.push('\n');
    fs::write(&json_path, doc).with_context(|| format!("writing {}", json_path.display()))?;
    Ok(())
}

// Quantities in source order: structure, size-derived indices, then
// the metric block.
fn render_report_text(r: &InvariantReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<18}{v}\n"));
    line("graph6", r.graph6.clone());
    line("order / size", format!("{} / {}", r.n, r.m));
    line(
        "bipartition",
        match r.bipartite {
            Some([x, y]) => format!("{x} | {y}"),
            None => "not bipartite".into(),
        },
    );
    line("two-connected", yesno(r.two_connected));
    line(
        "girth",
        r.girth.map_or("acyclic".into(), |g| g.to_string()),
    );
    line("sti", yesno(r.sti));
    line("mostar", r.mostar.to_string());
    line("zagreb", format!("Z1={} Z2={}", r.zagreb1, r.zagreb2));
    line("diameter", r.diameter.to_string());
    line("eccentricity sum", r.eccentricity_sum.to_string());
    line("wiener", r.wiener.to_string());
    line("wiener complexity", r.wiener_complexity.to_string());
    line(
        "transmissions",
        r.transmissions
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    line(
        "tr min / max",
        format!("{} / {}", r.transmission_min, r.transmission_max),
    );
    line(
        "families",
        if r.families.is_empty() {
            "none".into()
        } else {
            r.families
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        },
    );
    out
}

fn render_census_text(census: &CensusResult) -> String {
    let mut out = format!(
        "census n={}: {} graphs ({})\n",
        census.n, census.count, census.stats.mode
    );
    out.push_str(&format!("girth histogram: {:?}\n", census.girth.histogram));
    if !census.girth.acyclic.is_empty() {
        out.push_str(&format!("acyclic exceptions: {:?}\n", census.girth.acyclic));
    }
    if !census.girth.counterexamples.is_empty() {
        out.push_str(&format!(
            "girth-4 counterexamples: {:?}\n",
            census.girth.counterexamples
        ));
    }
    out.push_str(&format!(
        "{:<14}{:>4}{:>6}{:>5}{:>5}{:>5}{:>6}{:>7}{:>7}  {}\n",
        "graph6", "m", "W", "Mo", "Z1", "Z2", "diam", "trmin", "trmax", "families"
    ));
    for e in &census.entries {
        let r = &e.report;
        out.push_str(&format!(
            "{:<14}{:>4}{:>6}{:>5}{:>5}{:>5}{:>6}{:>7}{:>7}  {}\n",
            r.graph6,
            r.m,
            r.wiener,
            r.mostar,
            r.zagreb1,
            r.zagreb2,
            r.diameter,
            r.transmission_min,
            r.transmission_max,
            r.families
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", "),
        ));
    }
    out
}

fn render_verify_text(report: &VerificationReport) -> String {
    let mut out = format!("verification over {}\n", report.corpus);
    for o in &report.orders {
        out.push_str(&format!(
            "order {}: census {}, {}\n",
            o.n,
            o.census_size,
            if o.pass { "pass" } else { "FAIL" }
        ));
        for c in &o.checks {
            let mut cols = Vec::new();
            for (side, bound) in [("lower", &c.lower), ("upper", &c.upper)] {
                if let Some(b) = bound {
                    cols.push(format!(
                        "{side} {}: holds={} eq={} {}",
                        b.bound,
                        b.holds,
                        b.attainers.len(),
                        if b.matches_expectation { "ok" } else { "MISMATCH" }
                    ));
                }
            }
            if !c.failing.is_empty() {
                cols.push(format!("failing={:?}", c.failing));
            }
            if cols.is_empty() {
                cols.push("ok".into());
            }
            out.push_str(&format!("  {:<18}{}\n", c.id, cols.join(" | ")));
            for note in &c.notes {
                out.push_str(&format!("  {:<18}note: {note}\n", ""));
            }
        }
        for failure in &o.expectation_failures {
            out.push_str(&format!("  expectation failure: {failure}\n"));
        }
    }
    for d in &report.discrepancies {
        out.push_str(&format!(
            "discrepancy [{}] {} @ n={}\n  expected: {}\n  observed: {}\n",
            if d.known { "known" } else { "NEW" },
            d.id,
            d.order,
            d.expected,
            d.observed
        ));
    }
    out.push_str(&format!(
        "verdict: {} ({} violations, {} expectation failures)\n",
        if report.pass { "pass" } else { "FAIL" },
        report.violations,
        report.expectation_failures
    ));
    out
}

fn yesno(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}
