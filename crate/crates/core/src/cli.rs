//! The `cluster` command-line tool. [`run`] takes the full argument vector
//! and returns the process exit code: 0 on success, 1 when a domain check
//! fails, 2 for malformed input.

use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::assoc::{self, SupportFunction};
use crate::dbc::ReducedWord;
use crate::error::{Error, Result};
use crate::exchange::{ExtendedExchangeMatrix, Seed, SeedJson};
use crate::graph::{self, Bounds};
use crate::linalg::QMatrix;
use crate::polygon::{self, Triangulation};
use crate::roots::RootSystem;
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "cluster", version, about = "Cluster algebra computations")]
struct Cli {
    /// Output format; each subcommand accepts the subset that makes sense.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    rand_seed: u64,
    /// Worker threads for exploration and enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    /// H-representation of a polytope
    H,
    /// V-representation of a polytope
    V,
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long, default_value_t = 100_000)]
    max_seeds: usize,
    #[arg(long)]
    max_depth: Option<usize>,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            max_seeds: self.max_seeds,
            max_depth: self.max_depth.unwrap_or(usize::MAX),
        }
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct StartArgs {
    /// JSON seed file (`-` for stdin)
    #[arg(long)]
    seed: Option<String>,
    /// Distinguished seed of a Cartan-Killing type, e.g. `D4`
    #[arg(long = "type")]
    cartan_type: Option<String>,
    /// Rank-2 seed with `B = [[0, b], [-c, 0]]`, given as `b,c`
    #[arg(long)]
    rank2: Option<String>,
    /// Coefficient-free seed from a JSON exchange matrix
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a sequence of mutations (1-based directions) to a JSON seed.
    Mutate {
        #[arg(long)]
        seed: String,
        #[arg(long, value_delimiter = ',')]
        dirs: Vec<usize>,
    },
    /// Explore the exchange graph from a seed.
    Explore {
        #[command(flatten)]
        start: StartArgs,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Decide finite type of an exchange matrix by its mutation class.
    Classify {
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Number of clusters of a finite type.
    Count { cartan_type: String },
    /// List the clusters of a finite type as sets of almost positive roots.
    Clusters { cartan_type: String },
    /// The generalized associahedron of a finite type.
    Polytope {
        cartan_type: String,
        /// Values of the support function on the negative simple roots,
        /// comma-separated rationals
        #[arg(long, value_delimiter = ',')]
        support: Option<Vec<String>>,
    },
    /// Exchange matrix of a polygon triangulation, or the flip graph.
    Triangulate {
        /// Triangulation, e.g. `3; d1=[1,3]; d2=[3,6]; d3=[4,6]`
        triangulation: Option<String>,
        /// Diagonals to flip in order (1-based)
        #[arg(long, value_delimiter = ',')]
        flip: Vec<usize>,
        /// Print the flip graph of the `(n+3)`-gon instead
        #[arg(long, conflicts_with = "triangulation")]
        flip_graph: Option<usize>,
    },
    /// Minors, exchange matrix and frozen set of a reduced word.
    Dbc {
        /// Comma-separated word, e.g. `1,2,1,2,1,-1,-2,-1`
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Test total positivity of a unimodular matrix with the minors of a word.
    TpCheck {
        /// JSON rows of rationals, e.g. `[[1,"1/2"],[2,2]]`
        #[arg(long)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Run the acceptance checks and print a pass/fail table.
    Verify {
        /// Run only these criteria (1-based)
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

/// Runs the tool, writing to stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(format!("stdin: {e}")))
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn load_seed(path: &str) -> Result<Seed> {
    let json: SeedJson = parse_json(&read_source(path)?)?;
    Seed::from_json(&json)
}

fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>> {
    let b: Vec<Vec<i64>> = parse_json(text)?;
    let n = b.len();
    if n == 0 || b.iter().any(|r| r.len() != n) {
        return Err(Error::SizeMismatch("exchange matrix must be square and nonempty".into()));
    }
    Ok(b)
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn parse_rational_matrix(text: &str) -> Result<QMatrix> {
    let rows: Vec<Vec<Value>> = parse_json(text)?;
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|v| match v {
                    Value::Number(n) => parse_rational(&n.to_string()),
                    Value::String(s) => parse_rational(s),
                    other => Err(Error::Parse(format!("bad matrix entry {other}"))),
                })
                .collect()
        })
        .collect()
}

fn start_seed(start: &StartArgs) -> Result<Seed> {
    if let Some(path) = &start.seed {
        return load_seed(path);
    }
    if let Some(label) = &start.cartan_type {
        return Ok(RootSystem::from_label(label)?.distinguished_seed());
    }
    if let Some(bc) = &start.rank2 {
        let parts: Vec<i64> = bc
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad rank-2 pair `{bc}`"))))
            .collect::<Result<_>>()?;
        let [b, c] = parts[..] else {
            return Err(Error::Parse(format!("expected `b,c`, got `{bc}`")));
        };
        return Seed::rank2(b, c);
    }
    let text = start.matrix.as_deref().expect("clap requires one start option");
    Ok(Seed::initial(ExtendedExchangeMatrix::from_principal(parse_matrix(text)?)?))
}

fn to_pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn unsupported_format(f: Format, cmd: &str) -> Error {
    Error::Parse(format!("format {f:?} is not available for `{cmd}`"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Mutate { seed, dirs } => {
            let mut s = load_seed(seed)?;
            for &d in dirs {
                let k = d.checked_sub(1).ok_or(Error::NotExchangeable(0))?;
                s = s.mutate(*s.matrix().ex().get(k).ok_or(Error::NotExchangeable(d))?)?;
            }
            match fmt.unwrap_or(Format::Json) {
                Format::Json => to_pretty(&s.to_json()),
                Format::Text => {
                    let mut t: Vec<String> = s.variables().iter().map(|v| v.to_string()).collect();
                    t.push(serde_json::to_string(s.matrix().entries()).expect("serializable"));
                    t.join("\n")
                }
                f => return Err(unsupported_format(f, "mutate")),
            }
        }
        Command::Explore { start, bounds } => {
            let g = graph::explore_with_jobs(&start_seed(start)?, bounds.bounds(), cli.jobs)?;
            match fmt.unwrap_or(Format::Dot) {
                Format::Dot => g.to_dot().trim_end().to_string(),
                Format::Json => to_pretty(&g.to_json()),
                Format::Text => format!(
                    "seeds {}\nedges {}\ncomplete {}",
                    g.len(),
                    g.edges().len(),
                    g.is_complete()
                ),
                f => return Err(unsupported_format(f, "explore")),
            }
        }
        Command::Classify { matrix, bounds } => {
            let r = graph::classify_finite_type(&parse_matrix(matrix)?, bounds.bounds())?;
            match fmt.unwrap_or(Format::Text) {
                Format::Text => r.verdict.to_string(),
                Format::Json => to_pretty(&json!({
                    "verdict": r.verdict.to_string(),
                    "witness": r.witness,
                    "path": r.path.iter().map(|k| k + 1).collect::<Vec<_>>(),
                    "explored": r.explored,
                })),
                f => return Err(unsupported_format(f, "classify")),
            }
        }
        Command::Count { cartan_type } => RootSystem::from_label(cartan_type)?.count_clusters()?.to_string(),
        Command::Clusters { cartan_type } => {
            let rs = RootSystem::from_label(cartan_type)?;
            let clusters = rs.enumerate_clusters(cli.jobs);
            let named: Vec<Vec<String>> = clusters
                .iter()
                .map(|c| c.iter().map(|&i| rs.root(i).to_string()).collect())
                .collect();
            match fmt.unwrap_or(Format::Text) {
                Format::Text => named.iter().map(|c| c.join(" ")).collect::<Vec<_>>().join("\n"),
                Format::Json => to_pretty(&named),
                f => return Err(unsupported_format(f, "clusters")),
            }
        }
        Command::Polytope { cartan_type, support } => {
            let rs = RootSystem::from_label(cartan_type)?;
            let f = match support {
                Some(vals) => {
                    let vals: Vec<BigRational> = vals.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
                    SupportFunction::from_negative_simple(&rs, &vals)?
                }
                None => SupportFunction::half_sum_of_coroots(&rs)?,
            };
            let p = assoc::build_polytope(&rs, &f, cli.jobs)?;
            match fmt.unwrap_or(Format::H) {
                Format::H => p.h_text().trim_end().to_string(),
                Format::V => p.v_text().trim_end().to_string(),
                Format::Dot => p.to_dot().trim_end().to_string(),
                Format::Text => format!(
                    "vertices {}\nedges {}\nfacets {}",
                    p.vertices.len(),
                    p.edges.len(),
                    p.facets().len()
                ),
                Format::Json => {
                    let show = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
                    to_pretty(&json!({
                        "inequalities": p.h_rep.iter().map(|(n, b)| json!({"normal": n, "bound": b.to_string()})).collect::<Vec<_>>(),
                        "vertices": p.vertices.iter().map(|z| show(z)).collect::<Vec<_>>(),
                        "edges": p.edges,
                    }))
                }
            }
        }
        Command::Triangulate {
            triangulation,
            flip,
            flip_graph,
        } => {
            if let Some(n) = flip_graph {
                let g = polygon::flip_graph(*n)?;
                match fmt.unwrap_or(Format::Dot) {
                    Format::Dot => g.to_dot().trim_end().to_string(),
                    Format::Text => format!("triangulations {}\nflips {}", g.triangulations.len(), g.edges.len()),
                    f => return Err(unsupported_format(f, "triangulate --flip-graph")),
                }
            } else {
                let src = triangulation
                    .as_deref()
                    .ok_or_else(|| Error::Parse("give a triangulation or --flip-graph".into()))?;
                let mut t: Triangulation = src.parse()?;
                for &k in flip {
                    t = t.flip(k.checked_sub(1).ok_or(Error::NotADiagonal(0))?)?;
                }
                let b = polygon::b_from_triangulation(&t)?;
                match fmt.unwrap_or(Format::Json) {
                    Format::Json => to_pretty(&Seed::initial(b).to_json()),
                    Format::Text => format!("{t}\n{}", serde_json::to_string(b.entries()).expect("serializable")),
                    f => return Err(unsupported_format(f, "triangulate")),
                }
            }
        }
        Command::Dbc { word } => {
            let w = ReducedWord::parse(word)?;
            let minors: Vec<String> = w.minors().iter().map(|m| m.to_string()).collect();
            let frozen: Vec<String> = w.frozen_set().iter().map(|m| m.to_string()).collect();
            let b = w.b_matrix();
            match fmt.unwrap_or(Format::Text) {
                Format::Text => {
                    let mut lines: Vec<String> =
                        minors.iter().enumerate().map(|(k, m)| format!("f{} = {m}", k + 1)).collect();
                    lines.push(format!("ex = {:?}", w.ex()));
                    lines.push(format!("frozen = {}", frozen.join(", ")));
                    lines.push(format!("B = {}", serde_json::to_string(&b).expect("serializable")));
                    lines.join("\n")
                }
                Format::Json => to_pretty(&json!({
                    "minors": minors,
                    "ex": w.ex(),
                    "frozen": frozen,
                    "matrix": b,
                })),
                f => return Err(unsupported_format(f, "dbc")),
            }
        }
        Command::TpCheck { matrix, word } => {
            let w = ReducedWord::parse(word)?;
            let x = parse_rational_matrix(matrix)?;
            let positive = w.tp_test(&x)?;
            let values = w.evaluate(&x)?;
            match fmt.unwrap_or(Format::Text) {
                Format::Text => {
                    let mut lines: Vec<String> = w
                        .minors()
                        .iter()
                        .zip(&values)
                        .map(|(m, v)| format!("{m} = {v}"))
                        .collect();
                    lines.push(format!("totally positive: {positive}"));
                    lines.join("\n")
                }
                Format::Json => to_pretty(&json!({
                    "totally_positive": positive,
                    "minors": w.minors().iter().zip(&values)
                        .map(|(m, v)| json!({"minor": m.to_string(), "value": v.to_string()}))
                        .collect::<Vec<_>>(),
                })),
                f => return Err(unsupported_format(f, "tp-check")),
            }
        }
        Command::Verify { only } => {
            let opts = verify::Options {
                jobs: cli.jobs,
                rand_seed: cli.rand_seed,
            };
            let ids: Vec<usize> = if only.is_empty() {
                (1..=verify::criterion_count()).collect()
            } else {
                only.clone()
            };
            let results: Vec<verify::CriterionResult> = ids
                .iter()
                .map(|&id| verify::run_criterion(id, &opts))
                .collect::<Result<_>>()?;
            let all = results.iter().all(|r| r.passed);
            let text = match fmt.unwrap_or(Format::Text) {
                Format::Text => results.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"),
                Format::Json => to_pretty(&results),
                f => return Err(unsupported_format(f, "verify")),
            };
            writeln!(out, "{text}").map_err(|e| Error::Parse(e.to_string()))?;
            return Ok(if all { 0 } else { 1 });
        }
    };
    writeln!(out, "{text}").map_err(|e| Error::Parse(e.to_string()))?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("cluster").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_and_classify() {
        assert_eq!(run_str(&["count", "F4"]), (0, "105\n".into(), String::new()));
        let (code, out, _) = run_str(&["classify", "--matrix", "[[0,2],[-2,0]]"]);
        assert_eq!((code, out.as_str()), (0, "InfiniteType\n"));
        let (code, out, _) = run_str(&["classify", "--matrix", "[[0,1,-1],[-1,0,1],[1,-1,0]]"]);
        assert_eq!((code, out.as_str()), (0, "FiniteType A3\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["count", "Q7"]).0, 2);
        assert_eq!(run_str(&["classify", "--matrix", "[[0,1],[1,0]]"]).0, 1);
        assert_eq!(run_str(&["classify", "--matrix", "[[0,1"]).0, 2);
        assert_eq!(run_str(&["nonsense"]).0, 2);
        assert_eq!(run_str(&["dbc", "1,2,1,1"]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
        let (code, out, _) = run_str(&["explore", "--rank2", "2,2", "--max-seeds", "10", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.contains("complete false"), "{out}");
    }

    #[test]
    fn dbc_and_tp_check() {
        let (code, out, _) = run_str(&["dbc", "1,2,1,2,1,-1,-2,-1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("f1 = Δ_{1,3}\nf2 = Δ_{12,23}\n"), "{out}");
        assert!(out.contains("ex = [3, 4, 5, 6]"));
        let (code, out, _) = run_str(&["tp-check", "--matrix", "[[1,0,0],[0,1,0],[0,0,1]]", "--word", "1,2,1,2,1,-1,-2,-1"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("totally positive: false\n"));
        let (code, _, _) = run_str(&["tp-check", "--matrix", "[[2,0,0],[0,1,0],[0,0,1]]", "--word", "1,2,1,2,1,-1,-2,-1"]);
        assert_eq!(code, 1);
        let (code, _, _) = run_str(&["tp-check", "--matrix", "[[\"1/0\"]]", "--word", "1"]);
        assert_eq!(code, 2);
    }
}
