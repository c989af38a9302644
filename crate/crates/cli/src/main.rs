//! Command-line front end: exact spanning-tree counts, extremal-family
//! constructors, closed-form bounds, small-graph censuses, and weighted
//! network reduction.
//!
//! Exit codes: 0 success (including NOT_APPLICABLE verdicts), 1 invalid
//! input or parameters, 2 a verification census contradicted the
//! predicted bound or extremal set.

use std::fmt::Write as _;
use std::io::Read as _;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use treemax::extremal::{
    bound_bipartite, bound_conn, bound_econn_mindeg, bound_vconn_mindeg, build_b,
    build_bip_extremal, build_clique_join, build_m, BParams, BipVariant, JoinParams, MParams,
};
use treemax::io::{
    from_graph6, parse_edge_list, parse_weighted_edge_list, to_graph6, write_edge_list,
    write_weighted_edge_list,
};
use treemax::reduce::ReductionLedger;
use treemax::search::{
    census, verify_theorem, CensusOptions, CensusReport, ClassSpec, ConnectivityKind, TheoremId,
    Verdict,
};
use treemax::tau;

#[derive(Parser)]
#[command(
    name = "treemax",
    version,
    about = "Exact spanning-tree counts, extremal families, and small-graph censuses"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count spanning trees of a graph read from an edge list or graph6
    Count(CountArgs),
    /// Construct a named extremal family member
    Build(BuildArgs),
    /// Evaluate the closed-form spanning-tree bound of a theorem
    Bound(BoundArgs),
    /// Census a connectivity class: maximum count and all maximizers
    Search(SearchArgs),
    /// Census a theorem's class and check its bound and equality case
    Verify(VerifyArgs),
    /// Reduce a weighted network, tracking the ledger multiplier
    Reduce(ReduceArgs),
}

#[derive(Args)]
struct CountArgs {
    /// Edge-list file ("n m" header, one "u v" line per edge); "-" reads
    /// stdin
    #[arg(default_value = "-", conflicts_with = "g6")]
    file: String,
    /// Inline graph6 string instead of a file
    #[arg(long)]
    g6: Option<String>,
    #[arg(long, value_enum, default_value_t = PlainFormat::Plain)]
    format: PlainFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlainFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// (K_{n_1} u ... u K_{n_t}) v K_s
    CliqueJoin,
    /// Cliques K_{n_1}, K_{n_2} joined by a q-edge matching
    M,
    /// Six independent sets with the fixed bipartite pattern
    B,
    /// Bipartite extremal family member for given n, r
    BipExtremal,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    A,
    B,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// clique-join: order of the joined clique
    #[arg(long)]
    s: Option<usize>,
    /// clique-join: comma-separated clique orders, e.g. 1,3
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
    /// m: first clique order (n1 >= n2)
    #[arg(long)]
    n1: Option<usize>,
    /// m: second clique order
    #[arg(long)]
    n2: Option<usize>,
    /// m: matching size (1 <= q <= n2)
    #[arg(long)]
    q: Option<usize>,
    /// b: the six independent-set sizes, e.g. 1,0,3,0,1,2
    #[arg(long, value_delimiter = ',')]
    a: Option<Vec<usize>>,
    /// bip-extremal: order
    #[arg(long)]
    n: Option<usize>,
    /// bip-extremal: connectivity
    #[arg(long)]
    r: Option<usize>,
    /// bip-extremal: which of the two extremal shapes
    #[arg(long, value_enum, default_value_t = VariantArg::A)]
    variant: VariantArg,
    /// Emit graph6 instead of an edge list
    #[arg(long)]
    g6: bool,
}

#[derive(Args)]
struct BoundArgs {
    /// conn | vconn-mindeg | econn-mindeg | econn-eq | bip-vconn | bip-econn
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, value_enum, default_value_t = PlainFormat::Plain)]
    format: PlainFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    VertexConn,
    EdgeConn,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Tsv,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Require minimum degree exactly this value
    #[arg(long)]
    delta: Option<usize>,
    /// Restrict to bipartite graphs
    #[arg(long)]
    bipartite: bool,
    /// Worker threads (default: all cores); results are identical for
    /// every value
    #[arg(long)]
    jobs: Option<usize>,
    /// Raise the order cap (clamped to 8 non-bipartite, 9 bipartite)
    #[arg(long)]
    max_n_override: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// conn | vconn-mindeg | econn-mindeg | econn-eq | bip-vconn | bip-econn
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Exact minimum degree (vconn-mindeg and econn-mindeg only)
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    max_n_override: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Args)]
struct ReduceArgs {
    /// Weighted edge-list file ("n m" header, "u v w" lines, w a positive
    /// integer or p/q); "-" reads stdin
    #[arg(default_value = "-")]
    file: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Count(args) => cmd_count(args),
        Cmd::Build(args) => cmd_build(args),
        Cmd::Bound(args) => cmd_bound(args),
        Cmd::Search(args) => cmd_search(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Reduce(args) => cmd_reduce(args),
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn cmd_count(args: CountArgs) -> Result<ExitCode> {
    let graph = match &args.g6 {
        Some(s) => from_graph6(s).context("parsing graph6")?,
        None => parse_edge_list(&read_input(&args.file)?).context("parsing edge list")?,
    };
    let count = tau(&graph);
    match args.format {
        PlainFormat::Plain => println!("{count}"),
        PlainFormat::Json => {
            let doc = json!({
                "n": graph.n(),
                "m": graph.edge_count(),
                "tau": count.to_string(),
            });
            println!("{doc}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_build(args: BuildArgs) -> Result<ExitCode> {
    let graph = match args.family {
        FamilyArg::CliqueJoin => {
            let s = args.s.context("--family clique-join requires --s")?;
            let parts = args
                .parts
                .context("--family clique-join requires --parts")?;
            build_clique_join(&JoinParams::new(s, parts)?)
        }
        FamilyArg::M => {
            let n1 = args.n1.context("--family m requires --n1")?;
            let n2 = args.n2.context("--family m requires --n2")?;
            let q = args.q.context("--family m requires --q")?;
            build_m(&MParams::new(n1, n2, q)?)
        }
        FamilyArg::B => {
            let a = args.a.context("--family b requires --a")?;
            let a: [usize; 6] = a
                .try_into()
                .map_err(|v: Vec<usize>| {
                    anyhow::anyhow!("--a takes exactly 6 sizes, got {}", v.len())
                })?;
            build_b(&BParams::new(a))
        }
        FamilyArg::BipExtremal => {
            let n = args.n.context("--family bip-extremal requires --n")?;
            let r = args.r.context("--family bip-extremal requires --r")?;
            let variant = match args.variant {
                VariantArg::A => BipVariant::A,
                VariantArg::B => BipVariant::B,
            };
            build_bip_extremal(n, r, variant)?
        }
    };
    if args.g6 {
        println!("{}", to_graph6(&graph));
    } else {
        print!("{}", write_edge_list(&graph));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_theorem(s: &str) -> Result<TheoremId> {
    Ok(TheoremId::from_str(s)?)
}

fn check_delta_shape(id: TheoremId, delta: Option<usize>) -> Result<()> {
    let takes = matches!(id, TheoremId::VconnMindeg | TheoremId::EconnMindeg);
    if takes && delta.is_none() {
        bail!("theorem {id} requires --delta");
    }
    if !takes && delta.is_some() {
        bail!("theorem {id} does not take --delta");
    }
    Ok(())
}

fn cmd_bound(args: BoundArgs) -> Result<ExitCode> {
    let id = parse_theorem(&args.theorem)?;
    check_delta_shape(id, args.delta)?;
    let bound = match id {
        TheoremId::Conn | TheoremId::EconnEq => bound_conn(args.n, args.r)?,
        TheoremId::VconnMindeg => {
            bound_vconn_mindeg(args.n, args.r, args.delta.expect("checked"))?
        }
        TheoremId::EconnMindeg => {
            bound_econn_mindeg(args.n, args.r, args.delta.expect("checked"))?
        }
        TheoremId::BipVconn | TheoremId::BipEconn => bound_bipartite(args.n, args.r)?,
    };
    match args.format {
        PlainFormat::Plain => println!("{bound}"),
        PlainFormat::Json => {
            let doc = json!({
                "theorem": id.as_str(),
                "n": args.n,
                "r": args.r,
                "delta": args.delta,
                "bound": bound.to_string(),
            });
            println!("{doc}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn census_options(jobs: Option<usize>, max_n_override: Option<usize>) -> CensusOptions {
    let env_cap = std::env::var("TREEMAX_MAX_N")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    CensusOptions {
        jobs,
        max_n: max_n_override.or(env_cap),
    }
}

fn render_report(report: &CensusReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            serde_json::to_string(&report.doc()).expect("report serializes")
        }
        ReportFormat::Tsv => {
            let doc = report.doc();
            let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
            let list = |v: &[String]| {
                if v.is_empty() {
                    "-".to_string()
                } else {
                    v.join(" ")
                }
            };
            let mut out = String::new();
            out.push_str(
                "kind\tn\tr\tdelta\tbipartite\tclass_size\tmax_tau\tmaximizers\
                 \tpredicted_bound\tpredicted_extremals\tverdict\n",
            );
            let _ = write!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                doc.spec.kind,
                doc.spec.n,
                doc.spec.r,
                doc.spec.delta.map_or("-".into(), |d| d.to_string()),
                doc.spec.bipartite,
                doc.class_size,
                doc.max_tau,
                list(&doc.maximizers),
                opt(doc.predicted_bound),
                doc.predicted_extremals.as_deref().map_or("-".into(), list),
                doc.verdict,
            );
            out
        }
    }
}

fn cmd_search(args: SearchArgs) -> Result<ExitCode> {
    let kind = match args.kind {
        KindArg::VertexConn => ConnectivityKind::Vertex,
        KindArg::EdgeConn => ConnectivityKind::Edge,
    };
    let spec = ClassSpec::new(kind, args.n, args.r, args.delta, args.bipartite)?;
    let opts = census_options(args.jobs, args.max_n_override);
    let report = census(&spec, &opts)?;
    println!("{}", render_report(&report, args.format));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let id = parse_theorem(&args.theorem)?;
    check_delta_shape(id, args.delta)?;
    let opts = census_options(args.jobs, args.max_n_override);
    let report = verify_theorem(id, args.n, args.r, args.delta, &opts)?;
    println!("{}", render_report(&report, args.format));
    Ok(match report.verdict {
        Verdict::Pass | Verdict::NotApplicable => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(2),
    })
}

fn cmd_reduce(args: ReduceArgs) -> Result<ExitCode> {
    let graph =
        parse_weighted_edge_list(&read_input(&args.file)?).context("parsing weighted edge list")?;
    let mut ledger = ReductionLedger::new(graph);
    for step in ledger.reduce() {
        println!("{step}");
    }
    println!("reduced:");
    print!("{}", write_weighted_edge_list(ledger.graph()));
    let m = ledger.multiplier();
    println!("multiplier: {}/{}", m.numer(), m.denom());
    let t = ledger.tau().into_ratio();
    println!("tau: {}/{}", t.numer(), t.denom());
    Ok(ExitCode::SUCCESS)
}
