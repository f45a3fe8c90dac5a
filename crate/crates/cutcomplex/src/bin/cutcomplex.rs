//! Command-line interface: build cut complexes, compute homology, run
//! Morse matchings, decide structural properties, and drive the
//! verification suites, conjecture sweeps, and Betti tables.
//!
//! Exit codes for `verify`/`sweep`: 0 all pass, 1 any mismatch, 2 usage
//! error, 3 resource caps prevented any verification.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cutcomplex::complex::SimplicialComplex;
use cutcomplex::cutgen::{cut_complex, total_cut_complex};
use cutcomplex::decide::{
    contractibility_certificate, find_shelling, is_vertex_decomposable,
    non_shellability_obstruction,
};
use cutcomplex::error::Error;
use cutcomplex::harness::{
    emit_table, run_suite, sweep_conjecture, Ranges, SuiteResult, TableFamily, SUITE_IDS,
};
use cutcomplex::homology::{betti, euler_characteristic_reduced, homology_oracle_snf, BettiReport};
use cutcomplex::io;
use cutcomplex::morse::{
    element_matching_sequence, morse_report, preset_schedule, verify_acyclic, PresetFamily,
};
use cutcomplex::Graph;

#[derive(Parser)]
#[command(name = "cutcomplex", version, about = "Total k-cut complexes of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a total (or plain) k-cut complex and write it to a file.
    Build(BuildArgs),
    /// Reduced Betti numbers of the total k-cut complex of a graph.
    Homology(HomologyArgs),
    /// Run an element-matching schedule and report the critical cells.
    Morse(MorseArgs),
    /// Decide a structural property of the total k-cut complex.
    Check(CheckArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Sweep a conjecture over a parameter range.
    Sweep(SweepArgs),
    /// Emit a Betti table for a grid family.
    Table(TableArgs),
}

#[derive(Args)]
struct GraphArg {
    /// Family spec (`grid:3,4`, `prism:5`, `wn:9`, `cycle:8`, `kmn:2,3`,
    /// `path:6`, `complete:4`, `edgeless:5`) or a graph file path.
    #[arg(long)]
    graph: String,
}

impl GraphArg {
    fn load(&self) -> Result<Graph, Error> {
        io::graph_from_spec_or_file(&self.graph)
    }
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long)]
    k: usize,
    /// `total` (complements of independent k-sets) or `cut` (complements
    /// of disconnecting k-sets).
    #[arg(long, default_value = "total")]
    variant: String,
    /// Output complex file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long)]
    k: usize,
    /// Cross-check with the dense integer Smith-normal-form oracle.
    #[arg(long)]
    snf: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MorseArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long)]
    k: usize,
    /// `lex`, `preset`, or an explicit comma-separated vertex list.
    #[arg(long, default_value = "lex")]
    schedule: String,
    #[arg(long)]
    verify_acyclic: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long)]
    k: usize,
    /// `vd`, `shelling`, `obstruction`, or `contractible`.
    #[arg(long)]
    property: String,
    #[arg(long, default_value_t = cutcomplex::DEFAULT_FACET_CAP)]
    facet_cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id, or `all`.
    #[arg(long)]
    suite: String,
    /// Overrides like `n=2..6,k=2..5,count=30,seed=7`.
    #[arg(long)]
    ranges: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// `squared_cycle` or `grid_k`.
    #[arg(long)]
    conjecture: String,
    #[arg(long)]
    ranges: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    /// `G2n`, `G3n`, or `G4n`.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 8)]
    kmax: usize,
    #[arg(long, default_value_t = 6)]
    nmax: usize,
    /// `text`, `csv`, `md`, or `json`.
    #[arg(long, default_value = "text")]
    format: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Build(args) => {
            let g = args.graph.load()?;
            let c = match args.variant.as_str() {
                "total" => total_cut_complex(&g, args.k)?,
                "cut" => cut_complex(&g, args.k)?,
                other => return Err(Error::Parse(format!("unknown variant `{other}`"))),
            };
            match args.out {
                Some(path) => io::write_complex(&path, &c)?,
                None => print!("{}", io::complex_to_text(&c)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Homology(args) => {
            let g = args.graph.load()?;
            let c = total_cut_complex(&g, args.k)?;
            let report = betti(&c)?;
            let report = if args.snf {
                let oracle = homology_oracle_snf(&c)?;
                if oracle.betti != report.betti {
                    eprintln!("warning: SNF oracle disagrees with the modular ranks");
                }
                oracle
            } else {
                report
            };
            if args.json {
                println!("{}", homology_json(&g, args.k, &c, &report));
            } else {
                print_homology(&g, args.k, &c, &report)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Morse(args) => {
            let g = args.graph.load()?;
            let c = total_cut_complex(&g, args.k)?;
            let schedule = parse_schedule(&args.schedule, &g, args.k)?;
            let m = element_matching_sequence(&c, &schedule)?;
            if args.verify_acyclic {
                let ok = verify_acyclic(&c, &m)?;
                if !ok {
                    eprintln!("matching is NOT acyclic");
                    return Ok(ExitCode::FAILURE);
                }
            }
            let b = betti(&c).ok();
            let report = morse_report(&c, &m, b.as_ref())?;
            if args.json {
                let val = serde_json::json!({
                    "schedule": m.schedule,
                    "pairs": m.pairs.len(),
                    "critical": m.critical.iter().map(|f| f.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "empty_matched": report.empty_matched,
                    "cells_per_dim": report.cells_per_dim,
                    "certificate": report.certificate,
                    "morse_inequalities_ok": report.morse_inequalities_ok,
                });
                println!("{}", serde_json::to_string_pretty(&val).expect("serializes"));
            } else {
                println!("schedule: {:?}", m.schedule);
                println!("pairs: {}", m.pairs.len());
                println!("empty face matched: {}", report.empty_matched);
                for f in &m.critical {
                    println!("critical: {f}");
                }
                println!("certificate: {:?}", report.certificate);
                if let Some(ok) = report.morse_inequalities_ok {
                    println!("morse inequalities vs betti: {}", if ok { "ok" } else { "VIOLATED" });
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check(args) => {
            let g = args.graph.load()?;
            let c = total_cut_complex(&g, args.k)?;
            let (verdict, detail) = match args.property.as_str() {
                "vd" => match is_vertex_decomposable(&c)? {
                    Some(w) => (true, format!("{w:?}")),
                    None => (false, "no shedding order".into()),
                },
                "shelling" => match find_shelling(&c, args.facet_cap)? {
                    Some(order) => (true, format!("shelling order (facet indices): {order:?}")),
                    None => (false, "no shelling exists".into()),
                },
                "obstruction" => {
                    let b = betti(&c)?;
                    match non_shellability_obstruction(&c, &b)? {
                        Some(ob) => (
                            true,
                            format!(
                                "betti {} in dim {} below top dim {}",
                                ob.betti, ob.dim, ob.top_dim
                            ),
                        ),
                        None => (false, "no homology obstruction".into()),
                    }
                }
                "contractible" => match contractibility_certificate(&c) {
                    Some(cert) => (true, format!("{cert:?}")),
                    None => (false, "no certificate (proves nothing)".into()),
                },
                other => return Err(Error::Parse(format!("unknown property `{other}`"))),
            };
            if args.json {
                let val = serde_json::json!({
                    "property": args.property,
                    "holds": verdict,
                    "detail": detail,
                });
                println!("{}", serde_json::to_string_pretty(&val).expect("serializes"));
            } else {
                println!("{}: {verdict}", args.property);
                println!("{detail}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let ranges = match &args.ranges {
                Some(s) => Ranges::parse(s)?,
                None => Ranges::default(),
            };
            let ids: Vec<&str> = if args.suite == "all" {
                SUITE_IDS.to_vec()
            } else {
                vec![args.suite.as_str()]
            };
            let mut results: Vec<SuiteResult> = Vec::new();
            for id in ids {
                results.push(run_suite(id, &ranges)?);
            }
            if args.json {
                println!("{}", serde_json::to_string_pretty(&results).expect("serializes"));
            }
            let mut any_fail = false;
            let mut any_run = false;
            for r in &results {
                let (pass, fail, skip) = r.tally();
                any_fail |= fail > 0;
                any_run |= pass + fail > 0;
                if !args.json {
                    println!(
                        "suite {}: {} pass, {} fail, {} skip ({} ms)",
                        r.suite_id, pass, fail, skip, r.runtime_ms
                    );
                    for c in r.failures() {
                        println!("  FAIL {} expected {} got {}", c.params, c.expected, c.actual);
                    }
                }
            }
            Ok(if any_fail {
                ExitCode::FAILURE
            } else if !any_run {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Sweep(args) => {
            let ranges = match &args.ranges {
                Some(s) => Ranges::parse(s)?,
                None => Ranges::default(),
            };
            let rows = sweep_conjecture(&args.conjecture, &ranges)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&rows).expect("serializes"));
            } else {
                for row in &rows {
                    println!(
                        "{}: observed {} predicted {}{}{}",
                        row.params,
                        row.observed,
                        row.predicted,
                        if row.matches { "" } else { "  MISMATCH" },
                        match &row.note {
                            Some(n) => format!("  [{n}]"),
                            None => String::new(),
                        }
                    );
                }
            }
            let mismatches = rows.iter().filter(|r| !r.matches).count();
            let skipped = rows
                .iter()
                .filter(|r| r.observed.starts_with("skipped"))
                .count();
            Ok(if mismatches > 0 {
                ExitCode::FAILURE
            } else if skipped == rows.len() && !rows.is_empty() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Table(args) => {
            let fam = TableFamily::parse(&args.family)?;
            let table = emit_table(fam, args.kmax, args.nmax, cutcomplex::face_cap())?;
            let rendered = match args.format.as_str() {
                "text" => table.to_text(),
                "csv" => table.to_csv(),
                "md" => table.to_md(),
                "json" => table.to_json(),
                other => return Err(Error::Parse(format!("unknown format `{other}`"))),
            };
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_schedule(spec: &str, g: &Graph, k: usize) -> Result<Vec<usize>, Error> {
    match spec {
        "lex" => Ok((0..g.n()).collect()),
        "preset" => {
            let fam = match g.name() {
                Some(name) => preset_family_from_name(name, k)?,
                None => {
                    return Err(Error::Parse(
                        "preset schedules need a generated family graph".into(),
                    ))
                }
            };
            preset_schedule(fam)
        }
        list => list
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad schedule vertex `{t}`")))
            })
            .collect(),
    }
}

fn preset_family_from_name(name: &str, k: usize) -> Result<PresetFamily, Error> {
    // family names as the generators write them: Cn, Gn, G(m,n), Km,n, Wn
    if let Some(rest) = name.strip_prefix("G(") {
        let inner = rest.trim_end_matches(')');
        if let Some((m, n)) = inner.split_once(',') {
            let (m, n) = (
                m.parse().map_err(|_| Error::Parse(format!("bad grid name {name}")))?,
                n.parse().map_err(|_| Error::Parse(format!("bad grid name {name}")))?,
            );
            return Ok(PresetFamily::Grid { m, n });
        }
    }
    if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse().ok()) {
        return Ok(PresetFamily::Cycle { n, k });
    }
    if let Some(n) = name.strip_prefix('W').and_then(|s| s.parse().ok()) {
        return Ok(PresetFamily::SquaredCycle { n });
    }
    if let Some(n) = name.strip_prefix('G').and_then(|s| s.parse().ok()) {
        return Ok(PresetFamily::Prism { n });
    }
    if let Some(rest) = name.strip_prefix('K') {
        if let Some((m, n)) = rest.split_once(',') {
            if let (Ok(m), Ok(n)) = (m.parse(), n.parse()) {
                return Ok(PresetFamily::Bipartite { m, n });
            }
        }
    }
    Err(Error::Parse(format!("no preset schedule for graph `{name}`")))
}

fn homology_json(g: &Graph, k: usize, c: &SimplicialComplex, r: &BettiReport) -> String {
    let betti_map: serde_json::Map<String, serde_json::Value> = r
        .betti
        .iter()
        .enumerate()
        .map(|(card, &b)| ((card as i64 - 1).to_string(), serde_json::json!(b)))
        .collect();
    let val = serde_json::json!({
        "n": g.n(),
        "k": k,
        "dim": c.dimension(),
        "f": r.f,
        "betti": betti_map,
        "euler": r.euler_reduced,
        "torsion": r.torsion_found,
        "torsion_checked": r.torsion_checked,
        "void": r.void,
    });
    serde_json::to_string_pretty(&val).expect("serializes")
}

fn print_homology(
    g: &Graph,
    k: usize,
    c: &SimplicialComplex,
    r: &BettiReport,
) -> Result<(), Error> {
    println!(
        "graph: {} vertices, {} edges{}",
        g.n(),
        g.edge_count(),
        g.name().map(|n| format!(" ({n})")).unwrap_or_default()
    );
    if r.void {
        println!("total {k}-cut complex: void");
        return Ok(());
    }
    println!(
        "total {k}-cut complex: dim {}, {} facets",
        c.dimension().expect("nonvoid"),
        c.facets().len()
    );
    println!("f-vector (from empty face): {:?}", r.f);
    let nz = r.nonzero();
    if nz.is_empty() {
        println!("reduced betti: all zero");
    } else {
        for (d, b) in nz {
            println!("betti[{d}] = {b}");
        }
    }
    println!("reduced euler characteristic: {}", euler_characteristic_reduced(c)?);
    if r.torsion_checked {
        println!(
            "torsion: {}",
            if r.torsion_found { format!("primes {:?}", r.torsion_primes) } else { "none".into() }
        );
    }
    Ok(())
}
