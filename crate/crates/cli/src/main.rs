//! `mpturan`: bounds, constructions, certificates and exhaustive search for
//! the multipartite Turán minimum-degree problem.
//!
//! Exit codes: 0 success, 1 a verified claim is false, 2 bad input or a
//! construction that does not apply, 3 instance over the oracle size cap,
//! 4 internal consistency failure.

use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mpturan::bounds::{best_known_bounds, BoundEntry, BoundReport};
use mpturan::constructions::{construct, prop61_default, ConstructionOutput, Method};
use mpturan::io::{read_graph_file, write_dimacs, GraphFile};
use mpturan::oracle::{oracle_delta, oracle_f, OracleOptions, OracleResult, HARD_CAP};
use mpturan::verifier::{certify, certify_with, Certificate, Claim, Witness};
use mpturan::{Error, Exec, MultipartiteGraph};

#[derive(Parser)]
#[command(name = "mpturan", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    /// Graph as a DIMACS edge list (construct and oracle only).
    Dimacs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleMode {
    /// Largest minimum degree with no K_{t+1}.
    F,
    /// Smallest maximum degree with no crossing independent set of size t+1.
    Delta,
}

#[derive(Subcommand)]
enum Command {
    /// Every known bound on f(n, r, t+1).
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
    },
    /// Build an extremal construction and certify it.
    Construct {
        #[arg(long, value_parser = parse_method)]
        method: Method,
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "r0")]
        r: Option<usize>,
        #[arg(long, required_unless_present = "t0")]
        t: Option<usize>,
        /// Composition: parts of the inner graph.
        #[arg(long, requires_all = ["t0", "k"])]
        r0: Option<usize>,
        /// Composition: forbidden crossing independent set size.
        #[arg(long)]
        t0: Option<usize>,
        /// Composition: number of blocks.
        #[arg(long)]
        k: Option<usize>,
        /// Write the graph here (DIMACS with `--format dimacs`, JSON
        /// otherwise).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check claims such as `kfree:4` or `min_degree:63` against a graph
    /// file.
    Verify {
        file: PathBuf,
        /// Repeatable; also accepts a comma-separated list.
        #[arg(long = "claim", required = true, value_delimiter = ',')]
        claims: Vec<String>,
    },
    /// Exhaustive search on tiny instances.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = OracleMode::F)]
        mode: OracleMode,
        /// Worker threads.
        #[arg(long, env = "MPTURAN_JOBS")]
        jobs: Option<usize>,
        /// Vertex cap; may only be lowered.
        #[arg(long, default_value_t = HARD_CAP)]
        cap: usize,
        /// Prune symmetric branches.
        #[arg(long)]
        symmetry: bool,
        /// Single-threaded search.
        #[arg(long)]
        sequential: bool,
        /// Reorders top-level tasks. Results never depend on it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Best known bounds across a range of r.
    Table {
        #[arg(long)]
        t: u64,
        /// Inclusive range such as `5..13`.
        #[arg(long, value_parser = parse_range)]
        r: RangeInclusive<u64>,
        #[arg(long)]
        n: u64,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a range like 5..13, got {s:?}"))?;
    let num = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}"));
    let (a, b) = (num(a)?, num(b)?);
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::TooLarge { .. }) => 3,
        Some(Error::Consistency(_)) => 4,
        _ => 2,
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Bounds { n, r, t } => {
            let report = best_known_bounds(*n, *r, *t)?;
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&report)?),
                _ => print!("{}", render_report(&report)),
            }
            Ok(0)
        }
        Command::Construct {
            method,
            n,
            r,
            t,
            r0,
            t0,
            k,
            out,
        } => {
            let built = match (method, r0, t0, k) {
                (Method::Composition, Some(r0), Some(t0), Some(k)) => prop61_default(*n, *r0, *t0, *k)?,
                (Method::Composition, ..) => bail!(Error::Domain("prop61 needs --r0, --t0 and --k".into())),
                (m, ..) => {
                    let (Some(r), Some(t)) = (r, t) else {
                        bail!(Error::Domain(format!("{m} needs --r and --t")));
                    };
                    construct(*m, *n, *r, *t)?
                }
            };
            let cert = certify_construction(&built)?;
            let file = GraphFile::from_graph(&built.graph)
                .with_metadata("method", built.method)
                .with_metadata("n", built.n)
                .with_metadata("r", built.r)
                .with_metadata("t", built.t);
            if let Some(path) = out {
                let text = match cli.format {
                    Format::Dimacs => write_dimacs(&built.graph),
                    _ => file.to_canonical_string(),
                };
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            }
            match cli.format {
                Format::Json => {
                    let mut v = json!({
                        "method": built.method,
                        "vertices": built.graph.num_vertices(),
                        "min_degree": built.graph.min_degree(),
                        "max_degree": built.graph.max_degree(),
                        "certificate": cert,
                    });
                    if out.is_none() {
                        v["graph"] = serde_json::to_value(&file)?;
                    }
                    print_json(&v);
                }
                Format::Dimacs if out.is_none() => print!("{}", write_dimacs(&built.graph)),
                _ => {
                    println!(
                        "{} (n = {}, r = {}, t = {}): {} vertices, {} edges, min degree {}, max degree {}",
                        built.method,
                        built.n,
                        built.r,
                        built.t,
                        built.graph.num_vertices(),
                        built.graph.edge_count(),
                        built.graph.min_degree(),
                        built.graph.max_degree()
                    );
                    print!("{}", render_certificate(&cert));
                }
            }
            Ok(if cert.all_hold() { 0 } else { 1 })
        }
        Command::Verify { file, claims } => {
            let g = read_graph_file(file).with_context(|| format!("reading {}", file.display()))?;
            let claims = claims
                .iter()
                .map(|c| c.parse::<Claim>())
                .collect::<Result<Vec<_>, _>>()?;
            let cert = certify(&g, &claims)?;
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&cert)?),
                _ => print!("{}", render_certificate(&cert)),
            }
            Ok(if cert.all_hold() { 0 } else { 1 })
        }
        Command::Oracle {
            n,
            r,
            t,
            mode,
            jobs,
            cap,
            symmetry,
            sequential,
            seed,
        } => {
            let opts = OracleOptions {
                cap: *cap,
                exec: if *sequential { Exec::Sequential } else { Exec::Parallel },
                jobs: *jobs,
                symmetry: *symmetry,
                seed: *seed,
                ..OracleOptions::default()
            };
            let res = match mode {
                OracleMode::F => oracle_f(*n, *r, t + 1, &opts)?,
                OracleMode::Delta => oracle_delta(*n, *r, t + 1, &opts)?,
            };
            match cli.format {
                Format::Json => print_json(&oracle_json(&res)?),
                Format::Dimacs => print!("{}", write_dimacs(&res.witness)),
                Format::Text => print!("{}", render_oracle(&res, *mode)),
            }
            Ok(0)
        }
        Command::Table { t, r, n } => {
            let reports = r
                .clone()
                .map(|r| best_known_bounds(*n, r, *t))
                .collect::<mpturan::Result<Vec<_>>>()?;
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&reports)?),
                _ => print!("{}", render_table(&reports)),
            }
            Ok(0)
        }
    }
}

fn certify_construction(out: &ConstructionOutput) -> anyhow::Result<Certificate> {
    let mut claims = Vec::new();
    if out.method == Method::Composition {
        claims.push(Claim::NoCrossingIndependent(out.t));
        claims.push(Claim::MinDegree(out.claimed_min_degree));
        if let Some(b) = out.max_degree_bound {
            claims.push(Claim::MaxDegree(b));
        }
    } else {
        claims.push(Claim::KFree(out.t + 1));
        claims.push(Claim::MinDegree(out.claimed_min_degree));
        claims.push(Claim::Colorable(out.t));
    }
    Ok(certify_with(&out.graph, &claims, out.coloring.as_ref())?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value serializes"));
}

fn oracle_json(res: &OracleResult) -> anyhow::Result<Value> {
    Ok(json!({
        "mode": res.mode,
        "n": res.n,
        "r": res.r,
        "forbidden": res.forbidden,
        "value": res.value,
        "instances_explored": res.instances_explored,
        "witness": GraphFile::from_graph(&res.witness),
    }))
}

fn render_oracle(res: &OracleResult, mode: OracleMode) -> String {
    let what = match mode {
        OracleMode::F => format!("f({}, {}, {})", res.n, res.r, res.forbidden),
        OracleMode::Delta => format!("Delta({}, {}, {})", res.n, res.r, res.forbidden),
    };
    let mut s = format!(
        "{what} = {}\nsearch nodes: {}\nwitness: {}\n",
        res.value,
        res.instances_explored,
        describe_graph(&res.witness)
    );
    for (u, v) in res.witness.edges() {
        s.push_str(&format!("  {u} {v}\n"));
    }
    s
}

fn describe_graph(g: &MultipartiteGraph) -> String {
    format!(
        "{} parts {:?}, {} edges, degrees {}..{}",
        g.num_parts(),
        g.part_sizes(),
        g.edge_count(),
        g.min_degree(),
        g.max_degree()
    )
}

fn render_entry(kind: &str, e: &BoundEntry) -> String {
    let flag = if e.conditions_met { "" } else { "  (conditions not met)" };
    format!("  {kind:<5} {:>8}  {}{flag}\n", e.value, e.source.describe())
}

fn render_report(rep: &BoundReport) -> String {
    let q = rep.t + 1;
    let mut s = format!("f({}, {}, {q}): ", rep.n, rep.r);
    match rep.exact {
        Some(v) => s.push_str(&format!("exact {v}\n")),
        None => s.push_str(&format!("{} [{}, {}]\n", status_word(rep), rep.lower, rep.upper)),
    }
    s.push_str(&format!("  r = m t - a with m = {}, a = {}\n", rep.m, rep.a));
    for e in &rep.lower_bounds {
        s.push_str(&render_entry("lower", e));
    }
    for e in &rep.upper_bounds {
        s.push_str(&render_entry("upper", e));
    }
    if rep.equals_chromatic {
        s.push_str("  the t-colourable value coincides with f here\n");
    }
    for note in &rep.notes {
        s.push_str(&format!("  note: {note}\n"));
    }
    s
}

fn status_word(rep: &BoundReport) -> String {
    serde_json::to_value(rep.status)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn render_table(reports: &[BoundReport]) -> String {
    let mut s = format!(
        "{:>4} {:>3} {:>3} {:>9} {:>9}  {:<8} {}\n",
        "r", "m", "a", "lower", "upper", "status", "best lower / best upper"
    );
    for rep in reports {
        let src = |e: Option<&BoundEntry>| e.map(|e| e.source.describe()).unwrap_or("-");
        s.push_str(&format!(
            "{:>4} {:>3} {:>3} {:>9} {:>9}  {:<8} {} / {}\n",
            rep.r,
            rep.m,
            rep.a,
            rep.lower,
            rep.upper,
            status_word(rep),
            src(rep.best_lower()),
            src(rep.best_upper())
        ));
    }
    s
}

fn render_certificate(cert: &Certificate) -> String {
    let mut s = format!(
        "graph {} ({} vertices, {} parts, {} edges)\n",
        cert.graph_digest, cert.vertices, cert.parts, cert.edges
    );
    for p in &cert.properties {
        let verdict = if p.verdict { "holds" } else { "FAILS" };
        let witness = describe_witness(&p.witness);
        s.push_str(&format!("  {:<28} {verdict:<6} {witness}\n", p.claim.to_string()));
    }
    s
}

fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::Clique { vertices } => format!("clique {vertices:?}"),
        Witness::Coloring { classes } => {
            let used = classes.iter().max().map_or(0, |c| c + 1);
            format!("proper colouring with {used} colours")
        }
        Witness::CrossingSet { vertices } => format!("crossing independent set {vertices:?}"),
        Witness::Vertex { vertex, degree } => format!("vertex {vertex} has degree {degree}"),
        Witness::Exhaustive { measured } => format!("exhaustive search, extreme value {measured}"),
    }
}
