//! `tensordim` command-line front end.
//!
//! Exit codes: 0 success, 1 set is not resolving, 2 usage or input error.

mod report;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};

use tensordim::constructions::{
    construct_resolving, dim_formula, formula_case, lower_bound_corollary, lower_bound_subproduct,
    upper_bound_construct_t, upper_bound_value, FormulaCase, SubproductMode,
};
use tensordim::edgelist::{read_edge_list, write_edge_list};
use tensordim::{
    all_pairs_distances, build_bipartite_minus_matching, build_clique, exact_metric_dimension,
    greedy_resolving_set, is_resolving, tensor_of_cliques, CliqueFactors, DimResult, DistanceMatrix, Graph,
    OrderedVertexSet, Resolution, SolverOptions,
};

use report::{Bound, BoundsReport, ConstructReport, DimReport, Namer, TableRow};

#[derive(Debug, Parser)]
#[command(name = "tensordim", version, about = "Metric dimension of graphs and tensor products of cliques")]
struct Cli {
    /// Worker threads for the exact solver.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Reserved; no command is randomized.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a graph as an edge list.
    Gen(GenArgs),
    /// Compute the metric dimension.
    Dim(DimArgs),
    /// Check whether a vertex set is resolving.
    Verify(VerifyArgs),
    /// Build the explicit resolving set for a product of cliques.
    Construct(TensorArg),
    /// Report lower and upper bounds for a product of cliques.
    Bounds(BoundsArgs),
    /// Closed form, construction and exact solver side by side, as CSV.
    Table(TableArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Family {
    #[arg(long, value_name = "N")]
    clique: Option<usize>,
    #[arg(long, value_name = "M1,..,MT", value_delimiter = ',')]
    tensor: Option<Vec<usize>>,
    /// K_{n,n} minus a perfect matching.
    #[arg(long, value_name = "N")]
    bmm: Option<usize>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    family: Family,
    /// Output path; stdout when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list file.
    #[arg(long, value_name = "PATH")]
    graph: Option<PathBuf>,
    #[arg(long, value_name = "M1,..,MT", value_delimiter = ',')]
    tensor: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Method {
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    greedy: bool,
    /// Closed form for two clique factors.
    #[arg(long)]
    formula: bool,
}

#[derive(Debug, Args)]
struct DimArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    method: Method,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// JSON list of coordinate tuples (`[[0,0],[1,0]]`) or flat ids (`[0,3]`).
    #[arg(long)]
    set: String,
}

#[derive(Debug, Args)]
struct TensorArg {
    #[arg(long, value_name = "M1,..,MT", value_delimiter = ',', required = true)]
    tensor: Vec<usize>,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long, value_name = "M1,..,MT", value_delimiter = ',', required = true)]
    tensor: Vec<usize>,
    /// Run the exact solver when the product has at most this many vertices.
    #[arg(long, default_value_t = 36)]
    exact_up_to: usize,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    max_m: usize,
    #[arg(long)]
    max_n: usize,
    /// Fill the exact column when m·n is at most this.
    #[arg(long, default_value_t = 0)]
    exact_up_to: usize,
}

/// Set is not resolving.
struct NotResolving;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<NotResolving>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

impl std::fmt::Debug for NotResolving {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("not resolving")
    }
}

impl std::fmt::Display for NotResolving {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("not resolving")
    }
}

impl std::error::Error for NotResolving {}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let solver = SolverOptions { threads: cli.threads.max(1), ..Default::default() };
    match &cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Dim(args) => cmd_dim(args, &solver),
        Command::Verify(args) => cmd_verify(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Bounds(args) => cmd_bounds(args, &solver),
        Command::Table(args) => cmd_table(args, &solver),
    }
}

fn factors(sizes: &[usize]) -> anyhow::Result<CliqueFactors> {
    Ok(CliqueFactors::new(sizes.to_vec())?)
}

fn cmd_gen(args: &GenArgs) -> anyhow::Result<()> {
    let f = &args.family;
    let g = if let Some(n) = f.clique {
        build_clique(n)?
    } else if let Some(sizes) = &f.tensor {
        tensor_of_cliques(&factors(sizes)?)
    } else if let Some(n) = f.bmm {
        build_bipartite_minus_matching(n)?
    } else {
        unreachable!("clap enforces one family")
    };
    match &args.out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write_edge_list(&g, BufWriter::new(file))?;
        }
        None => write_edge_list(&g, io::stdout().lock())?,
    }
    Ok(())
}

/// A loaded input: its distance matrix and, for clique products, factors.
struct Input {
    distances: DistanceMatrix,
    factors: Option<CliqueFactors>,
}

fn load(source: &Source) -> anyhow::Result<Input> {
    if let Some(sizes) = &source.tensor {
        let f = factors(sizes)?;
        return Ok(Input { distances: DistanceMatrix::of_clique_product(&f), factors: Some(f) });
    }
    let path = source.graph.as_ref().expect("clap enforces one source");
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let g: Graph =
        read_edge_list(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))?;
    Ok(Input { distances: all_pairs_distances(&g), factors: None })
}

fn print_json<T: serde::Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_dim(args: &DimArgs, solver: &SolverOptions) -> anyhow::Result<()> {
    let input = load(&args.source)?;
    let namer = Namer::new(input.factors.clone());
    let n = input.distances.n();
    let m = &args.method;

    let (method, result) = if m.formula {
        let f = input
            .factors
            .as_ref()
            .filter(|f| f.len() == 2)
            .ok_or_else(|| anyhow!("--formula needs --tensor with exactly two factors"))?;
        let (a, b) = (f.sizes()[0], f.sizes()[1]);
        let result = match dim_formula(a, b)? {
            DimResult::Disconnected => DimResult::Disconnected,
            DimResult::Value { dim, .. } => {
                DimResult::Value { dim, certificate: Some(construct_resolving(a, b)?) }
            }
        };
        ("formula", result)
    } else if m.greedy {
        let result = if input.distances.is_connected() {
            let w = greedy_resolving_set(&input.distances)?;
            DimResult::Value { dim: w.len(), certificate: Some(w) }
        } else {
            DimResult::Disconnected
        };
        ("greedy", result)
    } else {
        let opts = SolverOptions { clique_factors: input.factors.clone(), ..solver.clone() };
        ("exact", exact_metric_dimension(&input.distances, &opts)?)
    };

    if let Some(w) = result.certificate() {
        if !is_resolving(&input.distances, w)?.is_resolving() {
            bail!("internal error: {method} certificate failed verification");
        }
    }
    print_json(&DimReport::new(n, method, &result, &namer)?)
}

fn parse_set(text: &str, input: &Input) -> anyhow::Result<OrderedVertexSet> {
    let value: serde_json::Value = serde_json::from_str(text).context("--set is not valid JSON")?;
    let items = value.as_array().ok_or_else(|| anyhow!("--set must be a JSON array"))?;
    let n = input.distances.n();
    let as_index = |v: &serde_json::Value| -> anyhow::Result<usize> {
        v.as_u64().map(|x| x as usize).ok_or_else(|| anyhow!("expected a non-negative integer, got {v}"))
    };
    let ids = items
        .iter()
        .map(|item| -> anyhow::Result<usize> {
            let id = match item.as_array() {
                None => as_index(item)?,
                Some(coord) => {
                    let coord = coord.iter().map(as_index).collect::<anyhow::Result<Vec<_>>>()?;
                    match &input.factors {
                        Some(f) => f.flat_index(&coord)?,
                        None if coord.len() == 1 => coord[0],
                        None => bail!("coordinate tuples need --tensor input"),
                    }
                }
            };
            if id >= n {
                bail!("vertex {id} out of range for {n} vertices");
            }
            Ok(id)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(OrderedVertexSet::new(ids)?)
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<()> {
    let input = load(&args.source)?;
    let w = parse_set(&args.set, &input)?;
    let namer = Namer::new(input.factors.clone());
    match is_resolving(&input.distances, &w)? {
        Resolution::Resolving => {
            println!("resolving");
            Ok(())
        }
        Resolution::Unresolved(x, y) => {
            let (a, b) = (namer.tuple_text(x), namer.tuple_text(y));
            println!("unresolved pair ({a},{b}) flat ids ({x},{y})");
            Err(NotResolving.into())
        }
    }
}

fn cmd_construct(args: &TensorArg) -> anyhow::Result<()> {
    let f = factors(&args.tensor)?;
    let namer = Namer::new(Some(f.clone()));
    let report = if f.len() == 2 {
        let (m, n) = (f.sizes()[0], f.sizes()[1]);
        let case = formula_case(m, n)?;
        if case == FormulaCase::Disconnected {
            bail!("K_2 ⊗ K_2 is disconnected; no resolving set is defined");
        }
        let k = match case {
            FormulaCase::Balanced { k } => Some(k),
            _ => None,
        };
        let w = construct_resolving(m, n)?;
        ConstructReport::new(&f, report::case_name(case), k, dim_formula(m, n)?.dim(), &w, &namer)?
    } else if f.len() >= 3 {
        let w = upper_bound_construct_t(&f)?;
        ConstructReport::new(&f, "triple", None, None, &w, &namer)?
    } else {
        bail!("construct needs at least two factors");
    };
    print_json(&report)
}

fn cmd_bounds(args: &BoundsArgs, solver: &SolverOptions) -> anyhow::Result<()> {
    let f = factors(&args.tensor)?;
    let formula = if f.len() == 2 {
        match dim_formula(f.sizes()[0], f.sizes()[1])?.dim() {
            Some(d) => Bound::Value(d),
            None => Bound::Text("disconnected"),
        }
    } else {
        Bound::Text("not applicable")
    };
    let corollary = Bound::from_result(lower_bound_corollary(&f))?;
    let subproduct = Bound::from_result(lower_bound_subproduct(&f, SubproductMode::Recursive))?;
    let construction = Bound::from_result(upper_bound_construct_t(&f).map(|w| w.len()))?;
    let upper_value = Bound::from_result(upper_bound_value(&f))?;
    let exact = if f.vertex_count() <= args.exact_up_to {
        let d = DistanceMatrix::of_clique_product(&f);
        let opts = SolverOptions { clique_factors: Some(f.clone()), ..solver.clone() };
        match exact_metric_dimension(&d, &opts)? {
            DimResult::Disconnected => Bound::Text("disconnected"),
            r => Bound::Value(r.dim().unwrap()),
        }
    } else {
        Bound::Text("not computed")
    };
    print_json(&BoundsReport {
        factors: f.sizes().to_vec(),
        vertices: f.vertex_count(),
        formula,
        corollary_lower: corollary,
        subproduct_lower: subproduct,
        construction_upper: construction,
        upper_bound_value: upper_value,
        exact,
    })
}

fn cmd_table(args: &TableArgs, solver: &SolverOptions) -> anyhow::Result<()> {
    if args.max_m > args.max_n {
        bail!("--max-m must not exceed --max-n");
    }
    let mut out = BufWriter::new(io::stdout().lock());
    writeln!(out, "{}", TableRow::HEADER)?;
    for m in 2..=args.max_m {
        for n in m..=args.max_n {
            let row = table_row(m, n, args.exact_up_to, solver)?;
            writeln!(out, "{}", row.to_csv())?;
        }
    }
    out.flush()?;
    Ok(())
}

fn table_row(m: usize, n: usize, exact_up_to: usize, solver: &SolverOptions) -> anyhow::Result<TableRow> {
    let formula = dim_formula(m, n)?.dim();
    let (size, verified) = match formula {
        None => (None, None),
        Some(_) => match construct_resolving(m, n) {
            Ok(w) => (Some(w.len()), Some(true)),
            Err(tensordim::Error::ConstructionFailed { set, .. }) => (Some(set.len()), Some(false)),
            Err(e) => return Err(e.into()),
        },
    };
    let exact = if m * n <= exact_up_to {
        let f = factors(&[m, n])?;
        let d = DistanceMatrix::of_clique_product(&f);
        let opts = SolverOptions { clique_factors: Some(f), ..solver.clone() };
        Some(exact_metric_dimension(&d, &opts)?)
    } else {
        None
    };
    Ok(TableRow::new(m, n, formula, size, verified, exact.map(|r| r.dim())))
}
