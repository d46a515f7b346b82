//! `regraph` command line: verification, classification, isomorphism,
//! H-colourings, constructions, generation and experiments.
//!
//! Exit codes: 0 success (PASS, isomorphic, colouring found, r-graph),
//! 1 negative answer or FAIL, 2 UNDECIDED after node-cap exhaustion,
//! 3 invalid input or usage.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use regraph::construct::{
    dipole, lift_to_rgraph, meredith_all, meredith_extension, p_power, petersen, replace_edge, simple_class2,
    Wiring,
};
use regraph::cuts::{is_r_graph, min_odd_cut, tight_cuts};
use regraph::enumerate::{generate, Filters, GenSpec};
use regraph::experiments::{self, Params, EXPERIMENTS};
use regraph::factors::{class1_decomposition, max_disjoint_pms, Search};
use regraph::hcoloring::{find_hcoloring, Mode, DEFAULT_NODE_CAP};
use regraph::io::{parse_graph6, parse_mgf, write_mgf};
use regraph::iso::{are_isomorphic, canonical_form};
use regraph::{Multigraph, VertexSet};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "regraph", version, about = "r-graphs, perfect matchings and H-colourings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regularity, minimum odd cut and tight cuts.
    Verify {
        file: PathBuf,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Class and perfect matching packing number.
    Classify {
        file: PathBuf,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, env = "REGRAPH_NODE_CAP")]
        node_cap: Option<u64>,
    },
    /// Isomorphism test; exit 0 when isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Canonical certificate in hex.
    Canon { file: PathBuf },
    /// Search for a colouring of the guest by edges of the host.
    Hcolor {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        guest: PathBuf,
        #[arg(long, value_enum, default_value = "first")]
        mode: ModeArg,
        #[arg(long, env = "REGRAPH_NODE_CAP")]
        node_cap: Option<u64>,
    },
    /// Named constructions.
    Construct {
        #[command(subcommand)]
        what: Construction,
    },
    /// Contract a vertex set and lift back to a connected r-graph.
    Lift {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<usize>,
        #[arg(long)]
        r: usize,
    },
    /// Replace a vertex (or every vertex) by a K_{r,r-1} gadget.
    Meredith {
        file: PathBuf,
        #[arg(long, conflicts_with = "all")]
        vertex: Option<usize>,
        #[arg(long)]
        all: bool,
        /// Permutation of 0..r pairing the star with the gadget.
        #[arg(long, value_delimiter = ',')]
        pairing: Option<Vec<usize>>,
    },
    /// Replace an edge of one graph by another graph minus an edge.
    Replace {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        edge: usize,
        #[arg(long)]
        g2: PathBuf,
        #[arg(long)]
        edge2: usize,
        #[arg(long, value_enum, default_value = "straight")]
        wiring: WiringArg,
    },
    /// Generate regular multigraphs up to isomorphism.
    Gen {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_n: usize,
        /// Comma-separated: connected, simple, rgraph (or e.g. 3graph), class1, class2.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run an experiment; `list` prints the ids.
    Experiment {
        id: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        /// JSON report path; a TSV summary is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "REGRAPH_NODE_CAP")]
        node_cap: Option<u64>,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// P plus n_i copies of the i-th perfect matching of P.
    Pm {
        #[arg(long, value_delimiter = ',')]
        partition: Vec<u32>,
    },
    Petersen,
    /// Two vertices joined by r parallel edges.
    Dipole {
        #[arg(long)]
        r: usize,
    },
    /// Simple class 2 r-graph built by edge replacement.
    SimpleClass2 {
        #[arg(long)]
        r: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    First,
    Count,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum WiringArg {
    Straight,
    Crossed,
}

fn read_graph(path: &Path) -> Result<Multigraph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    let g = if first.starts_with("mgf") { parse_mgf(&text) } else { parse_graph6(text.trim()) };
    g.with_context(|| format!("parsing {}", path.display()))
}

fn degree_of(g: &Multigraph, r: Option<usize>) -> Result<usize> {
    match (r, g.regular_degree()) {
        (Some(r), _) => Ok(r),
        (None, Some(r)) => Ok(r),
        (None, None) => bail!("graph is not regular; pass --r"),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn verify(file: &Path, r: Option<usize>) -> Result<u8> {
    let g = read_graph(file)?;
    let r = degree_of(&g, r)?;
    let regular = g.is_regular(r);
    let even = g.n() % 2 == 0 && g.n() > 0;
    let cut = if even { Some(min_odd_cut(&g)?) } else { None };
    let rg = is_r_graph(&g, r);
    let tight = if rg && g.n() <= regraph::cuts::BRUTE_FORCE_MAX {
        Some(tight_cuts(&g, r, true)?.into_iter().map(|t| t.set.to_vec()).collect::<Vec<_>>())
    } else {
        None
    };
    print_json(&json!({
        "regular": regular,
        "min_odd_cut": cut.as_ref().map(|c| c.value),
        "witness": cut.as_ref().map(|c| c.witness.to_vec()),
        "is_r_graph": rg,
        "nontrivial_tight_cuts": tight,
    }));
    Ok(u8::from(!rg))
}

fn classify(file: &Path, r: Option<usize>, cap: u64) -> Result<u8> {
    let g = read_graph(file)?;
    let r = degree_of(&g, r)?;
    if !g.is_regular(r) {
        bail!("graph is not {r}-regular");
    }
    let edges = |pms: &[regraph::factors::PerfectMatching]| pms.iter().map(|m| m.edges.clone()).collect::<Vec<_>>();
    match class1_decomposition(&g, r, Some(cap))? {
        Search::Found(pms) => {
            print_json(&json!({ "class": 1, "pi": r, "witness_matchings": edges(&pms) }));
            Ok(0)
        }
        Search::Exhausted => {
            let pms = max_disjoint_pms(&g)?;
            print_json(&json!({ "class": 2, "pi": pms.len(), "witness_matchings": edges(&pms) }));
            Ok(0)
        }
        Search::Capped => {
            print_json(&json!({ "class": null, "undecided": true, "node_cap": cap }));
            Ok(2)
        }
    }
}

fn hcolor(host: &Path, guest: &Path, mode: ModeArg, cap: u64) -> Result<u8> {
    let h = read_graph(host)?;
    let g = read_graph(guest)?;
    let mode = match mode {
        ModeArg::First => Mode::First,
        ModeArg::Count => Mode::Count,
        ModeArg::All => Mode::AllModAut,
    };
    let out = find_hcoloring(&g, &h, mode, cap)?;
    let colorings: Vec<Vec<[usize; 2]>> =
        out.colorings.iter().map(|c| c.edge_map.iter().enumerate().map(|(e, &f)| [e, f]).collect()).collect();
    print_json(&json!({
        "found": out.decided(),
        "complete": out.complete,
        "count": out.count,
        "nodes": out.nodes,
        "colorings": colorings,
    }));
    Ok(match out.decided() {
        Some(true) => 0,
        Some(false) => 1,
        None => 2,
    })
}

fn construct(what: Construction) -> Result<u8> {
    let g = match what {
        Construction::Pm { partition } => {
            let counts: [u32; 6] =
                partition.try_into().map_err(|_| anyhow::anyhow!("--partition needs exactly six counts"))?;
            p_power(&counts)?
        }
        Construction::Petersen => petersen(),
        Construction::Dipole { r } => dipole(r),
        Construction::SimpleClass2 { r } => simple_class2(r)?,
    };
    print!("{}", write_mgf(&g));
    Ok(0)
}

fn lift(file: &Path, contract: &[usize], r: usize) -> Result<u8> {
    let g = read_graph(file)?;
    if let Some(&v) = contract.iter().find(|&&v| v >= g.n()) {
        bail!("vertex {v} out of range");
    }
    let x = VertexSet::from_vertices(g.n(), contract.iter().copied());
    let (h, steps) = lift_to_rgraph(&g, &x, r)?;
    println!("# lifts: {}", steps.len());
    print!("{}", write_mgf(&h));
    Ok(0)
}

fn meredith(file: &Path, vertex: Option<usize>, all: bool, pairing: Option<Vec<usize>>) -> Result<u8> {
    let g = read_graph(file)?;
    let h = match (vertex, all) {
        (_, true) => meredith_all(&g)?.0,
        (Some(v), false) => {
            let r = g.degree(v.min(g.n().saturating_sub(1)));
            let pairing = pairing.unwrap_or_else(|| (0..r).collect());
            meredith_extension(&g, v, &pairing)?.0
        }
        (None, false) => bail!("pass --vertex or --all"),
    };
    print!("{}", write_mgf(&h));
    Ok(0)
}

fn replace(g: &Path, e: usize, g2: &Path, e2: usize, wiring: WiringArg) -> Result<u8> {
    let wiring = match wiring {
        WiringArg::Straight => Wiring::Straight,
        WiringArg::Crossed => Wiring::Crossed,
    };
    let out = replace_edge(&read_graph(g)?, e, &read_graph(g2)?, e2, wiring)?;
    print!("{}", write_mgf(&out));
    Ok(0)
}

fn parse_filters(r: usize, names: &[String]) -> Result<Filters> {
    let mut f = Filters::default();
    for name in names.iter().map(|s| s.trim().to_ascii_lowercase()) {
        match name.as_str() {
            "" => {}
            "connected" => f.connected = true,
            "simple" => f.simple = true,
            "rgraph" | "r-graph" => f.r_graph = true,
            "class1" => f.class = Some(1),
            "class2" => f.class = Some(2),
            other if other.strip_suffix("graph").and_then(|d| d.parse::<usize>().ok()) == Some(r) => f.r_graph = true,
            other => bail!("unknown filter `{other}`"),
        }
    }
    Ok(f)
}

fn gen(r: usize, max_n: usize, filter: &[String], out: &Path) -> Result<u8> {
    let filters = parse_filters(r, filter)?;
    let graphs = generate(&GenSpec { r, n_max: max_n, filters })?;
    fs::create_dir_all(out)?;
    let mut manifest = Vec::new();
    let mut index_in_order = 0;
    let mut last_n = 0;
    for g in &graphs {
        if g.n() != last_n {
            last_n = g.n();
            index_in_order = 0;
        }
        let name = format!("r{r}_n{}_{index_in_order:04}.mgf", g.n());
        index_in_order += 1;
        fs::write(out.join(&name), write_mgf(g))?;
        let cert = canonical_form(g)?.certificate;
        manifest.push(json!({ "file": name, "n": g.n(), "m": g.m(), "certificate": hex::encode(cert) }));
    }
    let doc = json!({ "r": r, "max_n": max_n, "filters": filters, "count": graphs.len(), "graphs": manifest });
    fs::write(out.join("manifest.json"), serde_json::to_string_pretty(&doc)?)?;
    println!("{} graphs written to {}", graphs.len(), out.display());
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn experiment(
    id: &str,
    r: Option<usize>,
    n_max: Option<usize>,
    seed: u64,
    trials: Option<usize>,
    jobs: Option<usize>,
    out: Option<&Path>,
    node_cap: u64,
) -> Result<u8> {
    if id == "list" {
        for (id, about) in EXPERIMENTS {
            println!("{id}\t{about}");
        }
        return Ok(0);
    }
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
    }
    let params = Params { seed, trials, r, n_max, node_cap };
    let report = experiments::run(id, &params)?;
    match out {
        Some(path) => {
            fs::write(path, report.to_json())?;
            fs::write(path.with_extension("tsv"), report.to_tsv())?;
            for note in &report.notes {
                println!("# {note}");
            }
            println!("{} {:?} ({} instances, {} ms)", report.id, report.verdict, report.instances.len(), report.wall_time_ms);
        }
        None => println!("{}", report.to_json()),
    }
    Ok(report.verdict.exit_code() as u8)
}

fn run(cli: Cli) -> Result<u8> {
    let cap = |c: Option<u64>| c.unwrap_or(DEFAULT_NODE_CAP);
    match cli.command {
        Command::Verify { file, r } => verify(&file, r),
        Command::Classify { file, r, node_cap } => classify(&file, r, cap(node_cap)),
        Command::Iso { a, b } => {
            let (g, h) = (read_graph(&a)?, read_graph(&b)?);
            let iso = are_isomorphic(&g, &h)?;
            print_json(&json!({ "isomorphic": iso }));
            Ok(u8::from(!iso))
        }
        Command::Canon { file } => {
            println!("{}", hex::encode(canonical_form(&read_graph(&file)?)?.certificate));
            Ok(0)
        }
        Command::Hcolor { host, guest, mode, node_cap } => hcolor(&host, &guest, mode, cap(node_cap)),
        Command::Construct { what } => construct(what),
        Command::Lift { file, contract, r } => lift(&file, &contract, r),
        Command::Meredith { file, vertex, all, pairing } => meredith(&file, vertex, all, pairing),
        Command::Replace { g, edge, g2, edge2, wiring } => replace(&g, edge, &g2, edge2, wiring),
        Command::Gen { r, max_n, filter, out } => gen(r, max_n, &filter, &out),
        Command::Experiment { id, r, n_max, seed, trials, jobs, out, node_cap } => {
            experiment(&id, r, n_max, seed, trials, jobs, out.as_deref(), cap(node_cap))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
