//! Command-line front end for the `fermionant` library.
//!
//! Structured results go to standard output as one JSON document; a short
//! human-readable summary goes to standard error. Exit status is 0 on
//! success, 2 for unreadable or invalid input, 3 when an instance exceeds a
//! capacity bound, and 4 when `verify` finds a violated identity.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use fermionant::graph::{read_graph, read_matrix, write_graph};
use fermionant::verify::{verify_suite, Fault, Limits};
use fermionant::{
    bicycle_dimension, circuit_partition_poly, count_hamiltonian_cycles, fermionant,
    ham_parity_via_ferm2, immanant, line_digraph, medial, tutte, tutte_subgraph_sum, BigInt,
    Digraph, Error, FermionantAlgorithm, GraphDocument, Matrix, Multigraph, Partition, PlaneGraph,
};

#[derive(Parser)]
#[command(
    name = "fermionant",
    version,
    about = "Exact fermionants, immanants and graph polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fermionant Ferm_k of a square integer matrix.
    Ferm {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: BigInt,
        #[arg(long, default_value = "dp")]
        algorithm: FermionantAlgorithm,
    },
    /// Immanant of a square integer matrix for a partition of its size.
    Imm {
        #[arg(long)]
        matrix: PathBuf,
        /// Comma-separated parts, e.g. "3,2,1".
        #[arg(long)]
        shape: Partition,
    },
    /// Tutte polynomial of a multigraph or plane graph.
    Tutte {
        #[arg(long)]
        graph: PathBuf,
        /// Evaluate at the point "X,Y" instead of printing coefficients.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// Use the spanning-subgraph sum instead of deletion-contraction.
        #[arg(long)]
        oracle: bool,
    },
    /// Circuit-partition polynomial of an Eulerian digraph.
    CircuitPoly {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Write the directed medial graph of a plane graph.
    Medial {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the line digraph of a digraph.
    LineDigraph {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Dimension of the bicycle space over GF(2).
    BicycleDim {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Number of undirected Hamiltonian cycles.
    HamCount {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Parity of the Hamiltonian cycle count, read off Ferm_2.
    HamParity {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Check the library's identities on seeded instances.
    Verify {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = Limits::default().max_n)]
        max_n: usize,
        #[arg(long, default_value_t = Limits::default().max_edges)]
        max_edges: usize,
        #[arg(long, default_value_t = Limits::default().trials)]
        trials: usize,
        /// Print the full report as JSON on standard output.
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        corrupt_medial: bool,
    },
}

/// A failed command: what to print and which status to exit with.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => 3,
            Error::Consistency(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

type Outcome = Result<(Value, String), Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<Matrix, Failure> {
    Ok(read_matrix(&read_text(path)?)?)
}

fn load_graph(path: &Path) -> Result<GraphDocument, Failure> {
    Ok(read_graph(&read_text(path)?)?)
}

fn load_undirected(path: &Path) -> Result<Multigraph, Failure> {
    let doc = load_graph(path)?;
    doc.as_multigraph().cloned().ok_or_else(|| {
        input_error(format!(
            "{}: expected a multigraph or plane graph, found a digraph",
            path.display()
        ))
    })
}

fn load_digraph(path: &Path) -> Result<Digraph, Failure> {
    match load_graph(path)? {
        GraphDocument::Digraph(g) => Ok(g),
        other => Err(input_error(format!(
            "{}: expected a digraph, found a {} document",
            path.display(),
            other.kind()
        ))),
    }
}

fn load_plane(path: &Path) -> Result<PlaneGraph, Failure> {
    match load_graph(path)? {
        GraphDocument::Plane(g) => Ok(g),
        other => Err(input_error(format!(
            "{}: expected a plane graph, found a {} document",
            path.display(),
            other.kind()
        ))),
    }
}

fn parse_point(text: &str) -> Result<(BigInt, BigInt), Failure> {
    let bad = || input_error(format!("--at expects two integers \"X,Y\", got {text:?}"));
    let (x, y) = text.split_once(',').ok_or_else(bad)?;
    let x = x.trim().parse().map_err(|_| bad())?;
    let y = y.trim().parse().map_err(|_| bad())?;
    Ok((x, y))
}

fn algorithm_name(a: FermionantAlgorithm) -> &'static str {
    match a {
        FermionantAlgorithm::Brute => "brute",
        FermionantAlgorithm::Dp => "dp",
        FermionantAlgorithm::Immanants => "immanants",
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Ferm {
            matrix,
            k,
            algorithm,
        } => {
            let a = load_matrix(&matrix)?;
            let value = fermionant(&a, &k, algorithm)?;
            let out = json!({
                "n": a.dim(),
                "k": decimal(&k),
                "algorithm": algorithm_name(algorithm),
                "value": decimal(&value),
            });
            Ok((
                out,
                format!(
                    "Ferm_{k} = {value} ({}, n = {})",
                    algorithm_name(algorithm),
                    a.dim()
                ),
            ))
        }
        Command::Imm { matrix, shape } => {
            let a = load_matrix(&matrix)?;
            let value = immanant(&a, &shape)?;
            let out = json!({"n": a.dim(), "shape": shape.to_string(), "value": decimal(&value)});
            Ok((out, format!("Imm_({shape}) = {value}")))
        }
        Command::Tutte { graph, at, oracle } => {
            let g = load_undirected(&graph)?;
            let t = if oracle {
                tutte_subgraph_sum(&g)?
            } else {
                tutte(&g)?
            };
            let method = if oracle {
                "subgraph-sum"
            } else {
                "deletion-contraction"
            };
            match at {
                Some(point) => {
                    let (x, y) = parse_point(&point)?;
                    let value = t.eval(&x, &y);
                    let out = json!({
                        "method": method,
                        "x": decimal(&x),
                        "y": decimal(&y),
                        "value": decimal(&value),
                    });
                    Ok((out, format!("T({x}, {y}) = {value}")))
                }
                None => {
                    let out = json!({"method": method, "polynomial": t.to_json()});
                    Ok((out, format!("T(x, y) = {t}")))
                }
            }
        }
        Command::CircuitPoly { graph } => {
            let g = load_digraph(&graph)?;
            let j = circuit_partition_poly(&g)?;
            Ok((json!({"coefficients": j.to_json()}), format!("j(z) = {j}")))
        }
        Command::Medial { graph, out } => {
            let g = load_plane(&graph)?;
            let m = medial(&g)?;
            write_text(&out, &write_graph(&m.clone().into()))?;
            let summary = format!(
                "medial graph with {} vertices and {} arcs written to {}",
                m.num_vertices(),
                m.num_arcs(),
                out.display()
            );
            Ok((digraph_summary(&m, &out), summary))
        }
        Command::LineDigraph { graph, out } => {
            let g = load_digraph(&graph)?;
            let l = line_digraph(&g);
            write_text(&out, &write_graph(&l.clone().into()))?;
            let summary = format!(
                "line digraph with {} vertices and {} arcs written to {}",
                l.num_vertices(),
                l.num_arcs(),
                out.display()
            );
            Ok((digraph_summary(&l, &out), summary))
        }
        Command::BicycleDim { graph } => {
            let g = load_undirected(&graph)?;
            let d = bicycle_dimension(&g);
            Ok((json!({"bicycle_dimension": d}), format!("dim B = {d}")))
        }
        Command::HamCount { graph } => {
            let g = load_undirected(&graph)?;
            let h = count_hamiltonian_cycles(&g)?;
            Ok((
                json!({"hamiltonian_cycles": decimal(&h)}),
                format!("{h} Hamiltonian cycles"),
            ))
        }
        Command::HamParity { graph } => {
            let g = load_undirected(&graph)?;
            let p = ham_parity_via_ferm2(&g)?;
            Ok((
                json!({"parity": p}),
                format!(
                    "Hamiltonian cycle count is {}",
                    if p == 0 { "even" } else { "odd" }
                ),
            ))
        }
        Command::Verify { .. } => unreachable!("verify is handled separately"),
    }
}

fn digraph_summary(g: &Digraph, out: &Path) -> Value {
    json!({
        "num_vertices": g.num_vertices(),
        "num_arcs": g.num_arcs(),
        "out": out.display().to_string(),
    })
}

fn verify(seed: u64, limits: Limits, as_json: bool) -> Result<ExitCode, Failure> {
    limits.check()?;
    let report = verify_suite(seed, &limits);
    if as_json {
        println!("{}", report.to_json());
    }
    eprint!("{}", report.summary());
    if report.ok() {
        eprintln!("all {} families passed", report.families.len());
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("identity violation found");
        Ok(ExitCode::from(4))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            seed,
            max_n,
            max_edges,
            trials,
            json,
            corrupt_medial,
        } => {
            let limits = Limits {
                max_n,
                max_edges,
                trials,
                fault: corrupt_medial.then_some(Fault::CorruptMedial),
                ..Limits::default()
            };
            verify(seed, limits, json)
        }
        command => run(command).map(|(out, summary)| {
            println!("{out}");
            eprintln!("{summary}");
            ExitCode::SUCCESS
        }),
    };
    result.unwrap_or_else(|f| {
        eprintln!("error: {}", f.message);
        ExitCode::from(f.code)
    })
}

/// Exact integers are always written as decimal strings.
fn decimal(x: &BigInt) -> Value {
    Value::String(x.to_string())
}
