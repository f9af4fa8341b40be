use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use forestcut::constructions::{
    clique_glue, conjecture2_family, cycle_diagonals_universal, fixture, k3_band_cycle, random_connected, GlueSpec,
};
use forestcut::cut::{
    find_cut_exhaustive, find_forest_cut, find_independent_cut, find_independent_cut_avoiding, CutKind,
};
use forestcut::graph::{
    parse_edge_list, parse_graph6, vertex_connectivity_at_least, write_edge_list, write_graph6, Graph,
};
use forestcut::lp::{build_dual, certificate_dual_point, solve_primal_exact, weak_duality_bound};
use forestcut::planar::{
    parse_rotation, prop1_forest_cut, random_stacked_triangulation, write_rotation, PlaneTriangulation,
};
use forestcut::verify::{
    audit_claim_inequalities, check_claim, enumerate_connected_graphs, enumerate_graphs, ingest_graph6, Claim, Corpus,
    Threshold,
};

#[derive(Parser)]
#[command(
    name = "forestcut",
    version,
    about = "Forest cuts and independent cuts in small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a forest or independent cut in each input graph; prints the cut or NONE.
    Check {
        /// Input file, `-` for stdin.
        #[arg(long, short, default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        #[arg(long, value_enum, default_value_t = Kind::Forest)]
        kind: Kind,
        /// Require the cut to avoid this vertex (independent cuts only).
        #[arg(long)]
        avoid: Option<usize>,
        /// Use the brute-force subset search instead of minimal separators.
        #[arg(long)]
        exhaustive: bool,
    },
    /// List one canonical graph per isomorphism class of order n (n <= 7).
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only graphs with vertex connectivity at least k.
        #[arg(long, default_value_t = 1)]
        min_connectivity: usize,
        /// Keep only graphs with fewer edges than this bound, e.g. `11/5n-18/5`.
        #[arg(long)]
        max_edges_lt: Option<Threshold>,
        /// Include disconnected graphs (only with --min-connectivity 0).
        #[arg(long)]
        all: bool,
        #[arg(long, env = "FORESTCUT_WORKERS", default_value_t = 0)]
        workers: usize,
    },
    /// Sweep a claim over a corpus; exit status 1 if any counterexample is found.
    Verify {
        #[arg(long)]
        claim: ClaimArg,
        /// Built-in corpus: all connected graphs of this order.
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        builtin_n: Option<usize>,
        /// With --builtin-n, sweep every order from 1 up to it.
        #[arg(long, requires = "builtin_n")]
        up_to: bool,
        /// graph6 corpus file.
        #[arg(long, short)]
        input: Option<PathBuf>,
        #[arg(long, env = "FORESTCUT_WORKERS", default_value_t = 0)]
        workers: usize,
    },
    /// Generate a graph from a named family.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Fixture name (family fixture), or left fixture (family glue).
        #[arg(long)]
        name: Option<String>,
        /// Right fixture for family glue.
        #[arg(long)]
        other: Option<String>,
        /// Clique in the left graph for family glue, e.g. `0,1,2`.
        #[arg(long, value_delimiter = ',')]
        clique_a: Vec<usize>,
        /// Clique in the right graph for family glue.
        #[arg(long, value_delimiter = ',')]
        clique_b: Vec<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Cycle length for family band.
        #[arg(long)]
        c: Option<usize>,
        /// Extra edge probability for family random.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        format: OutputFormat,
    },
    /// Forest cut of a plane triangulation minus an edge of one of its faces.
    PlanarCut {
        /// Rotation file: `n`, then `v: w1 w2 ...` per vertex.
        #[arg(long, short)]
        input: PathBuf,
        /// The removed edge, `u,v`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        edge: Vec<usize>,
    },
    /// Check the dual certificate of the edge bound for order n.
    Lp {
        #[arg(long)]
        n: usize,
        /// Also solve the primal program exactly (n <= 64).
        #[arg(long)]
        solve: bool,
    },
    /// Evaluate the degree-profile inequalities on each input graph.
    Audit {
        #[arg(long, short, default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Graph6,
    Edges,
    /// Rotation system (family stacked only).
    Rot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Forest,
    Independent,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Conjecture1,
    Theorem2,
    Chenyu,
    Theorem1,
    Conjecture2,
}

impl From<ClaimArg> for Claim {
    fn from(c: ClaimArg) -> Claim {
        match c {
            ClaimArg::Conjecture1 => Claim::Conjecture1,
            ClaimArg::Theorem2 => Claim::Theorem2,
            ClaimArg::Chenyu => Claim::ChenYu,
            ClaimArg::Theorem1 => Claim::Theorem1,
            ClaimArg::Conjecture2 => Claim::Conjecture2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Fixture,
    /// Conjecture 2 family G_k (--k).
    Gk,
    /// K_{3,n-3} plus a cycle of length c in the large side (--n, --c).
    Band,
    /// Cycle with long diagonals plus a universal vertex (--k).
    Cdu,
    /// Two fixtures glued along cliques (--name, --other, --clique-a, --clique-b).
    Glue,
    /// Random stacked triangulation (--n, --seed).
    Stacked,
    /// Random connected graph (--n, --p, --seed).
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graphs(path: &Path, format: GraphFormat) -> Result<Vec<Graph>> {
    let text = read_text(path)?;
    match format {
        GraphFormat::Edges => Ok(vec![parse_edge_list(&text)?]),
        GraphFormat::Graph6 => {
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if !line.is_empty() {
                    out.push(parse_graph6(line).with_context(|| format!("line {}", i + 1))?);
                }
            }
            Ok(out)
        }
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.with_context(|| format!("missing --{flag}"))
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(command: Command) -> Result<ExitCode> {
    let mut out = io::stdout().lock();
    match command {
        Command::Check {
            input,
            format,
            kind,
            avoid,
            exhaustive,
        } => {
            for g in read_graphs(&input, format)? {
                if !g.is_connected() {
                    writeln!(out, "disconnected")?;
                    continue;
                }
                let kind = match kind {
                    Kind::Forest => CutKind::Forest,
                    Kind::Independent => CutKind::Independent,
                };
                if avoid.is_some() && kind == CutKind::Forest && !exhaustive {
                    bail!("--avoid needs --kind independent or --exhaustive");
                }
                let witness = match (exhaustive, kind, avoid) {
                    (true, _, _) => find_cut_exhaustive(&g, kind, avoid)?,
                    (false, CutKind::Forest, _) => find_forest_cut(&g)?,
                    (false, CutKind::Independent, None) => find_independent_cut(&g)?,
                    (false, CutKind::Independent, Some(u)) => find_independent_cut_avoiding(&g, u)?,
                };
                match witness {
                    Some(w) => writeln!(out, "cut {} separates {} {}", w.cut, w.rep_a, w.rep_b)?,
                    None => writeln!(out, "NONE")?,
                }
            }
        }
        Command::Enumerate {
            n,
            min_connectivity,
            max_edges_lt,
            all,
            workers,
        } => {
            let graphs = if all && min_connectivity == 0 {
                enumerate_graphs(n, workers)?
            } else {
                enumerate_connected_graphs(n, workers)?
            };
            let mut count = 0;
            for g in graphs {
                if max_edges_lt.as_ref().is_some_and(|t| !t.admits(g.size(), n)) {
                    continue;
                }
                if min_connectivity > 1 && !vertex_connectivity_at_least(&g, min_connectivity) {
                    continue;
                }
                writeln!(out, "{}", write_graph6(&g)?)?;
                count += 1;
            }
            eprintln!("{count} graphs");
        }
        Command::Verify {
            claim,
            builtin_n,
            up_to,
            input,
            workers,
        } => {
            let corpus = match (builtin_n, input) {
                (Some(n), _) if up_to => Corpus::builtin_up_to(n, workers)?,
                (Some(n), _) => Corpus::builtin(n, workers)?,
                (None, Some(path)) => ingest_graph6(&path)?,
                (None, None) => bail!("give --builtin-n or --input"),
            };
            for (line, err) in &corpus.malformed {
                eprintln!("malformed line {line}: {err}");
            }
            let report = check_claim(claim.into(), &corpus, workers)?;
            write!(out, "{}", report.render())?;
            eprintln!(
                "hypothesis met {}, malformed {}, elapsed {:.3?}",
                report.hypothesis_met, report.malformed, report.elapsed
            );
            if report.has_counterexamples() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gen {
            family,
            name,
            other,
            clique_a,
            clique_b,
            k,
            n,
            c,
            p,
            seed,
            format,
        } => {
            if let (Family::Stacked, OutputFormat::Rot) = (family, format) {
                let t = random_stacked_triangulation(need(n, "n")?, seed)?;
                write!(out, "{}", write_rotation(t.embedding()))?;
                return Ok(ExitCode::SUCCESS);
            }
            let g = match family {
                Family::Fixture => fixture(&need(name, "name")?)?,
                Family::Gk => conjecture2_family(need(k, "k")?)?,
                Family::Band => k3_band_cycle(need(n, "n")?, need(c, "c")?)?,
                Family::Cdu => cycle_diagonals_universal(need(k, "k")?)?,
                Family::Glue => {
                    let left = fixture(&need(name, "name")?)?;
                    let right = fixture(&need(other, "other")?)?;
                    clique_glue(&left, &right, &GlueSpec::new(clique_a, clique_b))?
                }
                Family::Stacked => random_stacked_triangulation(need(n, "n")?, seed)?.graph().clone(),
                Family::Random => random_connected(need(n, "n")?, p, seed)?,
            };
            match format {
                OutputFormat::Graph6 => writeln!(out, "{}", write_graph6(&g)?)?,
                OutputFormat::Edges => write!(out, "{}", write_edge_list(&g))?,
                OutputFormat::Rot => bail!("--format rot is only available for --family stacked"),
            }
        }
        Command::PlanarCut { input, edge } => {
            let [x, y] = edge[..] else {
                bail!("--edge takes two vertices, e.g. --edge 0,1")
            };
            let embedding = parse_rotation(&read_text(&input)?)?;
            let t = PlaneTriangulation::with_default_outer(embedding)?.rerooted_at_edge(x, y)?;
            let o = prop1_forest_cut(&t, x, y)?;
            writeln!(out, "cut {}", o.cut)?;
            writeln!(out, "apex {}", o.z)?;
            writeln!(out, "path {}", join(o.path.iter().copied()))?;
            writeln!(out, "enclosed {}", o.enclosed)?;
        }
        Command::Lp { n, solve } => {
            let point = certificate_dual_point(n)?;
            let report = build_dual(n)?.check_feasible(&point.assignment())?;
            write!(out, "{}", report.render())?;
            if !report.feasible() {
                writeln!(out, "infeasible")?;
                return Ok(ExitCode::from(1));
            }
            writeln!(out, "feasible")?;
            writeln!(out, "bound {}", weak_duality_bound(n, &point)?)?;
            if solve {
                writeln!(out, "optimum {}", solve_primal_exact(n)?)?;
            }
        }
        Command::Audit { input, format } => {
            for (i, g) in read_graphs(&input, format)?.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "graph {}", write_graph6(g).unwrap_or_else(|_| "-".into()))?;
                write!(out, "{}", audit_claim_inequalities(g).render())?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
