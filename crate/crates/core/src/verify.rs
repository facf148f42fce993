//! Seeded verification of the identity chain connecting fermionants,
//! immanants, circuit partitions and the Tutte polynomial.
//!
//! Each family generates its instances up front from the seed, checks them
//! in parallel, and reports in generation order, so a report depends only
//! on the seed and the limits.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{character, partitions, schur_weyl_expand};
use crate::error::{check_capacity, Error, Result};
use crate::generate::{
    exhaustive_plane_graphs, generate_eulerian_digraph, generate_multigraph, generate_plane_graph,
    generate_simple_graph, instance_rng, multigraph_fixtures, random_matrix,
};
use crate::graph::{
    write_graph, write_matrix, Digraph, GraphDocument, Matrix, Multigraph, PlaneGraph,
};
use crate::graph_poly::{circuit_partition_poly, martin_rhs, tutte_diagonal};
use crate::hamiltonian::{count_hamiltonian_cycles, ham_parity_via_ferm2};
use crate::matrix_fn::{determinant, fermionant, fermionant_cycle_poly, FermionantAlgorithm};
use crate::transforms::{bicycle_dimension, ferm2_medial_closed_form, line_digraph, medial};

/// Instance sizes and counts for a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest matrix dimension, and largest vertex count for the parity
    /// family.
    pub max_n: usize,
    /// Largest edge count of random plane graphs.
    pub max_edges: usize,
    /// Largest arc count of random Eulerian digraphs.
    pub max_arcs: usize,
    /// Random instances per family (matrix families use half per size).
    pub trials: usize,
    /// Deliberate defect injected to check that the harness notices.
    #[serde(skip)]
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 9,
            max_edges: 7,
            max_arcs: 8,
            trials: 200,
            fault: None,
        }
    }
}

impl Limits {
    /// Largest accepted `max_n`: brute-force enumeration and the
    /// Hamiltonian oracle both run at this size.
    pub const MAX_N: usize = 9;
    /// Largest accepted `max_edges`: medial line digraphs then have at most
    /// 20 vertices and Tutte expansions at most 10 edges.
    pub const MAX_EDGES: usize = 10;
    /// Largest accepted `max_arcs`.
    pub const MAX_ARCS: usize = 14;

    /// Rejects limits outside the sizes the families are built for.
    pub fn check(&self) -> Result<()> {
        check_capacity("verify max_n", self.max_n, Self::MAX_N)?;
        check_capacity("verify max_edges", self.max_edges, Self::MAX_EDGES)?;
        check_capacity("verify max_arcs", self.max_arcs, Self::MAX_ARCS)?;
        if self.max_edges == 0 || self.max_arcs == 0 {
            return Err(Error::InvalidInput("verify limits must be positive".into()));
        }
        Ok(())
    }
}

#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Adds a spurious loop to every medial graph.
    CorruptMedial,
}

/// The first failing instance of a family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub instance: Value,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyReport {
    pub name: &'static str,
    pub identity: &'static str,
    pub instances: usize,
    pub passed: usize,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl FamilyReport {
    pub fn ok(&self) -> bool {
        self.counterexample.is_none() && self.passed == self.instances
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub limits: Limits,
    pub families: Vec<FamilyReport>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.families.iter().all(FamilyReport::ok)
    }

    /// The report without timings, so repeated runs are byte-identical.
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["ok"] = Value::Bool(self.ok());
        v
    }

    /// One line per family, with timings.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for f in &self.families {
            s.push_str(&format!(
                "{:<4} {:<5} {:>5}/{:<5} {:>9.3}s  {}\n",
                f.name,
                if f.ok() { "PASS" } else { "FAIL" },
                f.passed,
                f.instances,
                f.wall_time.as_secs_f64(),
                f.identity
            ));
            if let Some(c) = &f.counterexample {
                s.push_str(&format!(
                    "     instance {}: {} != {}\n     {}\n",
                    c.index, c.lhs, c.rhs, c.instance
                ));
            }
        }
        s
    }
}

/// Outcome of checking one instance: `Err((lhs, rhs))` on a mismatch.
type Check = std::result::Result<(), (String, String)>;

fn compare<T: PartialEq + std::fmt::Display>(lhs: Result<T>, rhs: Result<T>) -> Check {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) if a == b => Ok(()),
        (a, b) => Err((show(a), show(b))),
    }
}

fn show<T: std::fmt::Display>(r: Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn run_family<I: Sync>(
    name: &'static str,
    identity: &'static str,
    instances: Vec<I>,
    describe: impl Fn(&I) -> Value,
    check: impl Fn(&I) -> Check + Sync,
) -> FamilyReport {
    let start = Instant::now();
    let results: Vec<Check> = instances.par_iter().map(&check).collect();
    let passed = results.iter().filter(|r| r.is_ok()).count();
    let counterexample = results
        .into_iter()
        .enumerate()
        .find_map(|(i, r)| r.err().map(|(lhs, rhs)| (i, lhs, rhs)))
        .map(|(index, lhs, rhs)| Counterexample {
            index,
            instance: describe(&instances[index]),
            lhs,
            rhs,
        });
    FamilyReport {
        name,
        identity,
        instances: instances.len(),
        passed,
        counterexample,
        wall_time: start.elapsed(),
    }
}

fn matrix_json(m: &Matrix) -> Value {
    serde_json::from_str(&write_matrix(m)).expect("matrix json")
}

fn graph_json(doc: GraphDocument) -> Value {
    serde_json::from_str(&write_graph(&doc)).expect("graph json")
}

fn medial_for(g: &PlaneGraph, fault: Option<Fault>) -> Result<Digraph> {
    let m = medial(g)?;
    match fault {
        Some(Fault::CorruptMedial) => {
            let mut arcs = m.arcs().to_vec();
            arcs.push((0, 0));
            Digraph::new(m.num_vertices(), arcs)
        }
        None => Ok(m),
    }
}

fn pow_signed(base: i64, exp: usize) -> BigInt {
    BigInt::from(base).pow(exp as u32)
}

fn family_tag(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn random_matrices(
    seed: u64,
    name: &str,
    sizes: std::ops::RangeInclusive<usize>,
    per_size: usize,
) -> Vec<Matrix> {
    let mut out = Vec::new();
    for n in sizes {
        for t in 0..per_size {
            let mut rng = instance_rng(seed, family_tag(name), (n * 100_000 + t) as u64);
            out.push(random_matrix(&mut rng, n, -3, 3));
        }
    }
    out
}

/// I1: `Ferm_1 = det`.
pub fn determinant_family(seed: u64, limits: &Limits) -> FamilyReport {
    let mats = random_matrices(seed, "I1", 2..=limits.max_n.min(7), limits.trials / 2);
    run_family("I1", "Ferm_1 A = det A", mats, matrix_json, |a| {
        compare(
            fermionant(a, &BigInt::one(), FermionantAlgorithm::Dp),
            Ok(determinant(a)),
        )?;
        compare(
            fermionant(a, &BigInt::one(), FermionantAlgorithm::Brute),
            Ok(determinant(a)),
        )
    })
}

/// I2: enumeration, subset DP and the immanant expansion agree.
pub fn algorithm_family(seed: u64, limits: &Limits) -> FamilyReport {
    let mats = random_matrices(seed, "I2", 1..=limits.max_n.min(8), limits.trials / 2);
    run_family(
        "I2",
        "brute = dp = immanant expansion, k = 1, 2, 3",
        mats,
        matrix_json,
        |a| {
            let f = fermionant_cycle_poly(a).map_err(|e| (format!("error: {e}"), String::new()))?;
            let sign = if a.dim() % 2 == 0 { 1 } else { -1 };
            for k in 1..=3i64 {
                let kb = BigInt::from(k);
                let brute: BigInt = f.eval(&-&kb) * sign;
                compare(
                    Ok(brute.clone()),
                    fermionant(a, &kb, FermionantAlgorithm::Dp),
                )?;
                compare(
                    Ok(brute),
                    fermionant(a, &kb, FermionantAlgorithm::Immanants),
                )?;
            }
            Ok(())
        },
    )
}

/// I3: `Σ_λ d_λ χ_λ(μ) = k^{c(μ)}`.
pub fn schur_weyl_family(limits: &Limits) -> FamilyReport {
    let mut cases = Vec::new();
    for n in 1..=limits.max_n.min(8) {
        for k in 1..=4 {
            for mu in partitions(n) {
                cases.push((n, k, mu));
            }
        }
    }
    run_family(
        "I3",
        "sum_l d_l chi_l(mu) = k^depth(mu)",
        cases,
        |(n, k, mu)| json!({"n": n, "k": k, "cycle_type": mu.to_string()}),
        |(n, k, mu)| {
            let lhs = schur_weyl_expand(*n, *k)
                .into_iter()
                .map(|(l, d)| character(&l, mu).map(|c| d * c))
                .sum::<Result<BigInt>>();
            compare(lhs, Ok(pow_signed(*k as i64, mu.depth())))
        },
    )
}

fn plane_fixtures(
    seed: u64,
    tag: &str,
    exhaustive: usize,
    random: usize,
    max_edges: usize,
) -> Vec<PlaneGraph> {
    let mut out = exhaustive_plane_graphs(exhaustive);
    for t in 0..random {
        let s = instance_rng(seed, family_tag(tag), t as u64).random();
        out.push(generate_plane_graph(s, max_edges));
    }
    out
}

fn plane_json(g: &PlaneGraph) -> Value {
    graph_json(g.clone().into())
}

/// I4: `j(G_m; z) = z^{c(G)} T(G; z+1, z+1)`.
pub fn martin_family(seed: u64, limits: &Limits) -> FamilyReport {
    let graphs = plane_fixtures(
        seed,
        "I4",
        limits.max_edges.min(5),
        limits.trials,
        limits.max_edges,
    );
    let fault = limits.fault;
    run_family(
        "I4",
        "j(G_m; z) = z^c(G) T(G; z+1, z+1)",
        graphs,
        plane_json,
        move |g| {
            compare(
                medial_for(g, fault).and_then(|m| circuit_partition_poly(&m)),
                martin_rhs(g),
            )
        },
    )
}

fn signed_line_identity(h: &Digraph) -> Check {
    let a = line_digraph(h).adjacency_matrix();
    let j = circuit_partition_poly(h).map_err(|e| (format!("error: {e}"), String::new()))?;
    let sign = if h.num_arcs().is_multiple_of(2) { 1 } else { -1 };
    for k in 1..=3i64 {
        let kb = BigInt::from(k);
        compare(
            fermionant(&a, &kb, FermionantAlgorithm::Dp),
            Ok(j.eval(&-&kb) * sign),
        )?;
    }
    Ok(())
}

/// I5: `Ferm_k A_e = (−1)^{|arcs|} j(G; −k)`, with the sign `+1` on medial
/// graphs.
pub fn line_digraph_family(seed: u64, limits: &Limits) -> FamilyReport {
    enum Instance {
        Eulerian(Digraph),
        Medial(PlaneGraph),
    }
    let mut instances = Vec::new();
    for t in 0..limits.trials {
        let s = instance_rng(seed, family_tag("I5"), t as u64).random();
        instances.push(Instance::Eulerian(generate_eulerian_digraph(
            s,
            limits.max_arcs,
        )));
    }
    for t in 0..limits.trials / 4 {
        let s = instance_rng(seed, family_tag("I5m"), t as u64).random();
        instances.push(Instance::Medial(generate_plane_graph(
            s,
            limits.max_arcs / 2,
        )));
    }
    let fault = limits.fault;
    run_family(
        "I5",
        "Ferm_k A_e = (-1)^|arcs| j(G; -k), k = 1, 2, 3; sign +1 on medial graphs",
        instances,
        |i| match i {
            Instance::Eulerian(d) => graph_json(d.clone().into()),
            Instance::Medial(g) => json!({"medial_of": plane_json(g)}),
        },
        move |i| match i {
            Instance::Eulerian(d) => signed_line_identity(d),
            Instance::Medial(g) => {
                let m = medial_for(g, fault).map_err(|e| (format!("error: {e}"), String::new()))?;
                if m.num_arcs() % 2 != 0 {
                    return Err((
                        format!("{} medial arcs", m.num_arcs()),
                        "an even count".into(),
                    ));
                }
                signed_line_identity(&m)
            }
        },
    )
}

/// I6: `Ferm_k A_{m,e} = (−k)^{c(G)} T(G; 1−k, 1−k)`.
pub fn headline_family(seed: u64, limits: &Limits) -> FamilyReport {
    let max_edges = limits.max_edges.min(6);
    let graphs = plane_fixtures(seed, "I6", max_edges.min(5), limits.trials, max_edges);
    let fault = limits.fault;
    run_family(
        "I6",
        "Ferm_k A_me = (-k)^c(G) T(G; 1-k, 1-k), k = 1, 2, 3",
        graphs,
        plane_json,
        move |g| {
            let m = medial_for(g, fault).map_err(|e| (format!("error: {e}"), String::new()))?;
            let a = line_digraph(&m).adjacency_matrix();
            for k in 1..=3i64 {
                let kb = BigInt::from(k);
                let rhs = tutte_diagonal(g.graph(), &BigInt::from(1 - k))
                    .map(|t| t * pow_signed(-k, g.graph().num_components()));
                compare(fermionant(&a, &kb, FermionantAlgorithm::Dp), rhs)?;
            }
            Ok(())
        },
    )
}

/// I7: `Ferm_2 A ≡ 0 (mod 4)` and `Ferm_2 A / 4 ≡ #H (mod 2)`.
pub fn parity_family(seed: u64, limits: &Limits) -> FamilyReport {
    let top = limits.max_n.clamp(5, 9);
    let graphs: Vec<Multigraph> = (0..limits.trials)
        .map(|t| {
            let mut rng = instance_rng(seed, family_tag("I7"), t as u64);
            let n = rng.random_range(5..=top);
            let p = [0.3, 0.5, 0.8][t % 3];
            generate_simple_graph(&mut rng, n, p)
        })
        .collect();
    run_family(
        "I7",
        "Ferm_2 A / 4 = #H (mod 2)",
        graphs,
        |g| graph_json(g.clone().into()),
        |g| {
            let parity = ham_parity_via_ferm2(g).map(BigInt::from);
            let count = count_hamiltonian_cycles(g).map(|h| h % 2);
            compare(parity, count)
        },
    )
}

/// I8: `T(G; −1, −1) = (−1)^{|E|} (−2)^{dim B}`, and the closed form of
/// `Ferm_2 A_{m,e}` on plane graphs.
pub fn bicycle_family(seed: u64, limits: &Limits) -> FamilyReport {
    enum Instance {
        Multi(Multigraph),
        Plane(PlaneGraph),
    }
    let mut instances: Vec<Instance> = multigraph_fixtures()
        .into_iter()
        .map(Instance::Multi)
        .collect();
    for t in 0..limits.trials / 2 {
        let mut rng = instance_rng(seed, family_tag("I8"), t as u64);
        let edges = rng.random_range(0..=8);
        instances.push(Instance::Multi(generate_multigraph(&mut rng, edges)));
    }
    let planes = plane_fixtures(
        seed,
        "I8p",
        limits.max_edges.min(5),
        limits.trials / 4,
        limits.max_edges.min(5),
    );
    instances.extend(planes.into_iter().map(Instance::Plane));
    let fault = limits.fault;
    run_family(
        "I8",
        "T(G; -1, -1) = (-1)^|E| (-2)^dim B; Ferm_2 A_me = (-2)^c(G) (-1)^|E| (-2)^dim B",
        instances,
        |i| match i {
            Instance::Multi(g) => graph_json(g.clone().into()),
            Instance::Plane(g) => plane_json(g),
        },
        move |i| match i {
            Instance::Multi(g) => {
                let sign = if g.num_edges() % 2 == 0 { 1 } else { -1 };
                compare(
                    tutte_diagonal(g, &BigInt::from(-1)),
                    Ok(pow_signed(-2, bicycle_dimension(g)) * sign),
                )
            }
            Instance::Plane(g) => {
                let direct = medial_for(g, fault).and_then(|m| {
                    let a = line_digraph(&m).adjacency_matrix();
                    fermionant(&a, &BigInt::from(2), FermionantAlgorithm::Dp)
                });
                compare(direct, ferm2_medial_closed_form(g))
            }
        },
    )
}

/// Runs families I1–I8.
pub fn verify_suite(seed: u64, limits: &Limits) -> VerificationReport {
    let families = vec![
        determinant_family(seed, limits),
        algorithm_family(seed, limits),
        schur_weyl_family(limits),
        martin_family(seed, limits),
        line_digraph_family(seed, limits),
        headline_family(seed, limits),
        parity_family(seed, limits),
        bicycle_family(seed, limits),
    ];
    VerificationReport {
        seed,
        limits: limits.clone(),
        families,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn small() -> Limits {
        Limits {
            max_n: 6,
            max_edges: 4,
            max_arcs: 6,
            trials: 12,
            fault: None,
        }
    }

    #[test]
    fn limits_are_checked_against_capacity() {
        assert!(Limits::default().check().is_ok());
        assert!(small().check().is_ok());
        let too_big = Limits {
            max_edges: Limits::MAX_EDGES + 1,
            ..Limits::default()
        };
        assert!(matches!(too_big.check(), Err(Error::Capacity { .. })));
        let empty = Limits {
            max_arcs: 0,
            ..Limits::default()
        };
        assert!(matches!(empty.check(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn largest_limits_run_clean() {
        let limits = Limits {
            max_n: Limits::MAX_N,
            max_edges: Limits::MAX_EDGES,
            max_arcs: Limits::MAX_ARCS,
            trials: 8,
            fault: None,
        };
        let report = verify_suite(5, &limits);
        assert!(report.ok(), "{}", report.summary());
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let a = verify_suite(42, &small());
        assert_eq!(a.families.len(), 8);
        assert!(a.ok(), "{}", a.summary());
        let b = verify_suite(42, &small());
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
    }

    #[test]
    fn corrupted_medial_is_caught() {
        let limits = Limits {
            fault: Some(Fault::CorruptMedial),
            ..small()
        };
        let r = martin_family(7, &limits);
        assert!(!r.ok());
        let c = r.counterexample.expect("counterexample");
        assert_eq!(c.index, 0);
        assert!(c.instance.get("rotations").is_some());
    }

    #[test]
    fn zero_is_not_a_pass() {
        let bad: Check = compare(Ok(BigInt::zero()), Ok(BigInt::one()));
        assert_eq!(bad, Err(("0".into(), "1".into())));
    }
}
