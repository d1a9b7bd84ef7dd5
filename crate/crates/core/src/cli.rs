use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bound::{parse_rational, RootBound, Verdict};
use crate::corpus::random_cubic;
use crate::error::{Error, Result};
use crate::expectation::{conditional_expectation, conditional_expectation_bruteforce};
use crate::family::{run_family_with, BaseSpec};
use crate::graph::{Graph, PartialSigning, Signing};
use crate::matching::{matching_counts, polynomial_from_counts};
use crate::path_tree::{build_path_tree_capped, tree_spectral_radius_with, DEFAULT_PATH_TREE_CAP};
use crate::poly::IntPoly;
use crate::search::{
    certify_signing, certify_with_bound, exhaustive_best_signing, find_good_signing_with,
    Certificate, Method, SearchConfig,
};

const EXIT_OK: i32 = 0;
const EXIT_CERT_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(name = "ramanujan", version, about = "Bipartite Ramanujan graphs by certified 2-lifts")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Isolating intervals are refined to width 2^-BITS.
    #[arg(long, global = true, value_name = "BITS", default_value_t = 32)]
    prec: u32,
    /// Largest edge count the descent accepts.
    #[arg(long, global = true, value_name = "M", default_value_t = 40)]
    budget_edges: usize,
    /// Process edges in an order shuffled by SEED.
    #[arg(long, global = true, value_name = "SEED")]
    shuffle: Option<u64>,
    /// Use enumeration instead of the matching-sum formula.
    #[arg(long, global = true)]
    oracle: bool,
}

impl Global {
    fn precision(&self) -> BigRational {
        BigRational::new(1.into(), BigInt::from(1) << self.prec)
    }

    fn search(&self) -> SearchConfig {
        SearchConfig {
            max_edges: self.budget_edges,
            shuffle: self.shuffle,
            oracle: self.oracle,
            precision: self.precision(),
            ..SearchConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a standard graph as an edge list.
    Gen(GenArgs),
    /// Matching counts and the matching polynomial.
    Matching {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Path tree of a graph from a root vertex.
    Pathtree {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Write the tree here.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the label map here.
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_PATH_TREE_CAP)]
        cap: usize,
    },
    /// Sum of characteristic polynomials over completions of a partial signing.
    Expect {
        graph: PathBuf,
        /// Partial signing ("0" marks unset edges); all unset if omitted.
        #[arg(long)]
        partial: Option<PathBuf>,
    },
    /// Find a signing by greedy descent (or exhaustively).
    Sign {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Build the 2-lift selected by a signing.
    Lift {
        graph: PathBuf,
        signing: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify a graph (or a signing of it) against its bound.
    Certify(CertifyArgs),
    /// Iterate descent and lifts from a complete bipartite base.
    Family(FamilyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// K_{P,Q}.
    #[arg(long, num_args = 2, value_names = ["P", "Q"], group = "kind")]
    bipartite: Option<Vec<usize>>,
    #[arg(long, value_name = "N", group = "kind")]
    complete: Option<usize>,
    #[arg(long, value_name = "N", group = "kind")]
    cycle: Option<usize>,
    #[arg(long, value_name = "N", group = "kind")]
    path: Option<usize>,
    #[arg(long, group = "kind")]
    petersen: bool,
    /// Random cubic graph on N vertices (pairing model).
    #[arg(long, value_name = "N", group = "kind")]
    random_cubic: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    graph: PathBuf,
    /// Certify the new eigenvalues of this signing instead of the graph.
    #[arg(long)]
    signing: Option<PathBuf>,
    /// Custom bound: polynomial file plus an isolating interval.
    #[arg(long, requires_all = ["lo", "hi"])]
    bound_poly: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    lo: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    hi: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("base").required(true)))]
struct FamilyArgs {
    #[arg(long, value_name = "D", group = "base")]
    regular: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["C", "D"], group = "base")]
    biregular: Option<Vec<usize>>,
    #[arg(long, default_value_t = 2)]
    steps: usize,
    #[arg(long)]
    out_dir: PathBuf,
}

/// Parse `argv` (program name first), run, and return the exit status:
/// 0 on success, 1 when a certificate reports `EXCEEDS`, 2 on usage errors
/// and unreadable input.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CertificationFailed(_) => EXIT_CERT_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse_edge_list(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn verdict_code(v: Verdict) -> i32 {
    if v.is_within() {
        EXIT_OK
    } else {
        EXIT_CERT_FAILED
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let g = &cli.global;
    match &cli.cmd {
        Cmd::Gen(a) => {
            let graph = generate(a)?;
            emit(a.output.as_deref(), &graph.to_edge_list())?;
            Ok(EXIT_OK)
        }
        Cmd::Matching { graph, json } => {
            let graph = read_graph(graph)?;
            let counts = matching_counts(&graph);
            let mu = polynomial_from_counts(graph.vertex_count(), &counts);
            let strings: Vec<String> = counts.counts.iter().map(ToString::to_string).collect();
            if *json {
                let v = serde_json::json!({ "counts": strings, "polynomial": mu.to_text() });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("# matching counts: {}", strings.join(" "));
                println!("{}", mu.to_text());
            }
            Ok(EXIT_OK)
        }
        Cmd::Pathtree {
            graph,
            root,
            output,
            labels,
            cap,
        } => {
            let graph = read_graph(graph)?;
            let t = build_path_tree_capped(&graph, *root, *cap)?;
            emit(output.as_deref(), &t.tree.to_edge_list())?;
            if let Some(p) = labels {
                emit(Some(p), &t.label_map())?;
            }
            let mu = polynomial_from_counts(graph.vertex_count(), &matching_counts(&graph));
            let divides = t.char_poly_mod(&mu).is_zero();
            let rho = tree_spectral_radius_with(&t, &g.precision());
            let (lo, hi) = rho.interval();
            eprintln!(
                "path tree: {} vertices; matching polynomial divides: {divides}; spectral radius in [{lo}, {hi}]",
                t.len()
            );
            Ok(if divides { EXIT_OK } else { EXIT_CERT_FAILED })
        }
        Cmd::Expect { graph, partial } => {
            let graph = read_graph(graph)?;
            let p = match partial {
                Some(path) => PartialSigning::parse_text(&read(path)?).map_err(|e| in_file(path, e))?,
                None => PartialSigning::unset(graph.edge_count()),
            };
            let f = if g.oracle {
                conditional_expectation_bruteforce(&graph, &p)?
            } else {
                conditional_expectation(&graph, &p)?
            };
            println!("{}", f.to_text());
            Ok(EXIT_OK)
        }
        Cmd::Sign {
            graph,
            output,
            certificate,
            exhaustive,
        } => {
            let graph = read_graph(graph)?;
            let (s, cert) = if *exhaustive {
                exhaustive_best_signing(&graph)?
            } else {
                find_good_signing_with(&graph, &g.search())?
            };
            emit(output.as_deref(), &s.to_text())?;
            if let Some(p) = certificate {
                emit(Some(p), &cert.to_json())?;
            }
            Ok(verdict_code(cert.headline_verdict()))
        }
        Cmd::Lift {
            graph,
            signing,
            output,
        } => {
            let graph = read_graph(graph)?;
            let s = Signing::parse_text(&read(signing)?).map_err(|e| in_file(signing, e))?;
            emit(output.as_deref(), &graph.two_lift(&s)?.to_edge_list())?;
            Ok(EXIT_OK)
        }
        Cmd::Certify(a) => {
            let cert = certify(a, g)?;
            emit(a.output.as_deref(), &format!("{}\n", cert.to_json()))?;
            eprintln!("verdict: {}", cert.headline_verdict());
            Ok(verdict_code(cert.headline_verdict()))
        }
        Cmd::Family(a) => {
            let base = match (&a.regular, &a.biregular) {
                (Some(d), _) => BaseSpec::Regular(*d),
                (None, Some(cd)) => BaseSpec::Biregular(cd[0], cd[1]),
                _ => unreachable!("clap requires one base"),
            };
            let run = run_family_with(base, a.steps, &a.out_dir, &g.search())?;
            for s in &run.artifacts {
                println!(
                    "step {}: {} vertices, {} edges, {} against {}",
                    s.index,
                    s.graph.vertex_count(),
                    s.graph.edge_count(),
                    s.certificate.verdict,
                    s.certificate.bound.kind
                );
            }
            Ok(EXIT_OK)
        }
    }
}

fn generate(a: &GenArgs) -> Result<Graph> {
    if let Some(pq) = &a.bipartite {
        return Graph::complete_bipartite(pq[0], pq[1]);
    }
    if let Some(n) = a.complete {
        return Ok(Graph::complete(n));
    }
    if let Some(n) = a.cycle {
        return Graph::cycle(n);
    }
    if let Some(n) = a.path {
        return Ok(Graph::path(n));
    }
    if a.petersen {
        return Ok(Graph::petersen());
    }
    if let Some(n) = a.random_cubic {
        if n < 4 || n % 2 == 1 {
            return Err(Error::InvalidGraph(format!("no cubic graph on {n} vertices")));
        }
        return Ok(random_cubic(n, &mut ChaCha8Rng::seed_from_u64(a.seed)));
    }
    Err(Error::InvalidGraph("choose a graph kind".into()))
}

fn certify(a: &CertifyArgs, g: &Global) -> Result<Certificate> {
    let graph = read_graph(&a.graph)?;
    let prec = g.precision();
    if let Some(path) = &a.signing {
        let s = Signing::parse_text(&read(path)?).map_err(|e| in_file(path, e))?;
        return certify_signing(&graph, &s, Method::Direct, Vec::new(), &prec);
    }
    match &a.bound_poly {
        Some(path) => {
            let poly = IntPoly::parse_text(&read(path)?).map_err(|e| in_file(path, e))?;
            let parse = |s: &Option<String>| {
                s.as_deref()
                    .and_then(parse_rational)
                    .ok_or_else(|| Error::InvalidBound(format!("bad rational {s:?}")))
            };
            let bound = RootBound::custom(poly, parse(&a.lo)?, parse(&a.hi)?)?;
            certify_with_bound(&graph, &bound, &prec)
        }
        None => crate::search::certify_ramanujan_with(&graph, &prec),
    }
}
