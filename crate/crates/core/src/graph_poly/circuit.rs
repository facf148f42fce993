use num_bigint::BigInt;

use crate::error::{check_capacity, Error, Result};
use crate::graph::Digraph;
use crate::poly::UniPolynomial;

/// Limit on the number of transition systems enumerated.
pub const CIRCUIT_SYSTEMS_MAX: usize = 10_000_000;

fn permutations_of(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..d).collect();
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        heap(k - 1, a, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            heap(k - 1, a, out);
        }
    }
    heap(d, &mut current, &mut out);
    out
}

/// The circuit-partition polynomial `j(G; z) = Σ_t r_t z^t` of an Eulerian
/// digraph.
///
/// A circuit partition is a transition system: at every vertex, a bijection
/// from incoming arcs to outgoing arcs. Following the transitions splits the
/// arcs into closed walks, and `r_t` counts the systems giving exactly `t`
/// of them. The arcless digraph has `j = 1`.
pub fn circuit_partition_poly(g: &Digraph) -> Result<UniPolynomial> {
    if let Some(v) = g.unbalanced_vertex() {
        return Err(Error::NotEulerian {
            vertex: v,
            in_degree: g.in_degrees()[v],
            out_degree: g.out_degrees()[v],
        });
    }
    let n = g.num_vertices();
    let mut ins = vec![Vec::new(); n];
    let mut outs = vec![Vec::new(); n];
    for (i, &(u, v)) in g.arcs().iter().enumerate() {
        outs[u].push(i);
        ins[v].push(i);
    }

    let mut systems: usize = 1;
    for v in 0..n {
        let choices: usize = (1..=ins[v].len()).product();
        systems = systems.saturating_mul(choices);
    }
    check_capacity("transition systems", systems, CIRCUIT_SYSTEMS_MAX)?;

    // vertices with a real choice, each with its table of bijections
    let mut tables: Vec<Vec<Vec<usize>>> = Vec::new();
    let active: Vec<usize> = (0..n).filter(|&v| !ins[v].is_empty()).collect();
    for &v in &active {
        let d = ins[v].len();
        if tables.len() <= d {
            tables.resize(d + 1, Vec::new());
        }
        if tables[d].is_empty() {
            tables[d] = permutations_of(d);
        }
    }

    let m = g.num_arcs();
    let mut counts = vec![0u64; m + 1];
    let mut choice = vec![0usize; active.len()];
    let mut next = vec![0usize; m];
    let mut seen = vec![false; m];
    loop {
        for (slot, &v) in active.iter().enumerate() {
            let perm = &tables[ins[v].len()][choice[slot]];
            for (i, &arc) in ins[v].iter().enumerate() {
                next[arc] = outs[v][perm[i]];
            }
        }
        seen.iter_mut().for_each(|s| *s = false);
        let mut circuits = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            circuits += 1;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                a = next[a];
            }
        }
        counts[circuits] += 1;

        // odometer step
        let mut slot = 0;
        loop {
            if slot == active.len() {
                return Ok(UniPolynomial::new(
                    counts.into_iter().map(BigInt::from).collect(),
                ));
            }
            choice[slot] += 1;
            if choice[slot] < tables[ins[active[slot]].len()].len() {
                break;
            }
            choice[slot] = 0;
            slot += 1;
        }
    }
}
