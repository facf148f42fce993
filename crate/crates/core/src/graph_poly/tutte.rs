use num_bigint::BigInt;
use num_traits::One;

use crate::error::{check_capacity, Result};
use crate::graph::{DisjointSets, Multigraph};
use crate::poly::BivarPolynomial;

/// Default edge limit for deletion–contraction.
pub const TUTTE_MAX_EDGES: usize = 14;
/// Edge limit for the `2^|E|` spanning-subgraph enumerations.
pub const SUBGRAPH_SUM_MAX_EDGES: usize = 16;

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

/// Components `c(S)` of the spanning subgraph `(V, S)` for a subset mask.
fn subgraph_components(g: &Multigraph, mask: u32) -> usize {
    let mut ds = DisjointSets::new(g.num_vertices());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if mask & (1 << i) != 0 {
            ds.union(u, v);
        }
    }
    ds.count()
}

/// `T(G; x, y) = Σ_{S ⊆ E} (x−1)^{c(S)−c(G)} (y−1)^{c(S)+|S|−|V|}`, by
/// enumerating every spanning subgraph.
pub fn tutte_subgraph_sum(g: &Multigraph) -> Result<BivarPolynomial> {
    let m = g.num_edges();
    check_capacity(
        "spanning subgraph enumeration edges",
        m,
        SUBGRAPH_SUM_MAX_EDGES,
    )?;
    let n = g.num_vertices();
    let c_g = g.num_components();
    // counts[a][b]: subsets with rank deficiency a and nullity b
    let mut counts = vec![vec![0u64; m + 1]; n + 1];
    for mask in 0u32..(1 << m) {
        let c = subgraph_components(g, mask);
        let size = mask.count_ones() as usize;
        counts[c - c_g][c + size - n] += 1;
    }
    let mut t = BivarPolynomial::zero();
    for (a, row) in counts.iter().enumerate() {
        for (b, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            // (x-1)^a (y-1)^b
            let (ba, bb) = (binomial_row(a), binomial_row(b));
            for i in 0..=a {
                for j in 0..=b {
                    let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                    let c = BigInt::from(count) * &ba[i] * &bb[j] * sign;
                    t.add_term((i, j), c);
                }
            }
        }
    }
    Ok(t)
}

/// `T(G; x, x)` evaluated directly as `Σ_S (x−1)^{c(S)+ℓ(S)−c(G)}`, where
/// `ℓ(S) = c(S) + |S| − |V|` is the total excess of the components of `S`.
pub fn tutte_diagonal(g: &Multigraph, x: &BigInt) -> Result<BigInt> {
    let m = g.num_edges();
    check_capacity(
        "spanning subgraph enumeration edges",
        m,
        SUBGRAPH_SUM_MAX_EDGES,
    )?;
    let n = g.num_vertices();
    let c_g = g.num_components();
    let mut by_exponent = vec![0u64; 2 * n + m + 1];
    for mask in 0u32..(1 << m) {
        let c = subgraph_components(g, mask);
        let excess = c + mask.count_ones() as usize - n;
        by_exponent[c + excess - c_g] += 1;
    }
    let base = x - BigInt::one();
    Ok(by_exponent
        .iter()
        .enumerate()
        .filter(|(_, &count)| count > 0)
        .map(|(e, &count)| BigInt::from(count) * base.pow(e as u32))
        .sum())
}

/// Tutte polynomial by deletion–contraction with the default edge limit.
///
/// Loops contribute a factor `y`, bridges a factor `x`. Otherwise the
/// recursion `T(G) = T(G∖e) + T(G/e)` is applied to the highest-id edge that
/// is neither a loop nor a bridge.
pub fn tutte(g: &Multigraph) -> Result<BivarPolynomial> {
    check_capacity("deletion-contraction edges", g.num_edges(), TUTTE_MAX_EDGES)?;
    Ok(deletion_contraction(g.num_vertices(), g.edges().to_vec()))
}

fn connected_without(n: usize, edges: &[(usize, usize)], skip: usize) -> bool {
    let mut ds = DisjointSets::new(n);
    for (i, &(u, v)) in edges.iter().enumerate() {
        if i != skip {
            ds.union(u, v);
        }
    }
    let (u, v) = edges[skip];
    ds.find(u) == ds.find(v)
}

fn deletion_contraction(n: usize, mut edges: Vec<(usize, usize)>) -> BivarPolynomial {
    let before = edges.len();
    edges.retain(|&(u, v)| u != v);
    let loops = before - edges.len();

    let pivot = (0..edges.len())
        .rev()
        .find(|&i| connected_without(n, &edges, i));
    let Some(e) = pivot else {
        // only bridges remain
        return BivarPolynomial::monomial(edges.len(), loops);
    };

    let mut deleted = edges.clone();
    deleted.remove(e);
    let (keep, gone) = edges[e];
    let contracted: Vec<(usize, usize)> = deleted
        .iter()
        .map(|&(a, b)| {
            let r = |x: usize| if x == gone { keep } else { x };
            (r(a), r(b))
        })
        .collect();
    let sum = &deletion_contraction(n, deleted) + &deletion_contraction(n, contracted);
    if loops == 0 {
        sum
    } else {
        &sum * &BivarPolynomial::monomial(0, loops)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn both(g: &Multigraph) -> BivarPolynomial {
        let a = tutte(g).unwrap();
        assert_eq!(a, tutte_subgraph_sum(g).unwrap(), "routes disagree");
        a
    }

    #[test]
    fn base_cases() {
        let bridge = Multigraph::path(2);
        assert_eq!(both(&bridge), BivarPolynomial::monomial(1, 0));
        let lp = Multigraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(both(&lp), BivarPolynomial::monomial(0, 1));
        assert_eq!(both(&Multigraph::empty(3)), BivarPolynomial::one());
        assert_eq!(both(&Multigraph::empty(0)), BivarPolynomial::one());
    }

    #[test]
    fn triangle_and_digon() {
        let t = both(&Multigraph::cycle(3));
        assert_eq!(t.to_string(), "x^2 + x + y");
        let digon = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(both(&digon).to_string(), "x + y");
    }

    #[test]
    fn k4() {
        let t = both(&Multigraph::complete(4));
        assert_eq!(t.to_string(), "x^3 + y^3 + 3x^2 + 4xy + 3y^2 + 2x + 2y");
    }

    #[test]
    fn diagonal_examples() {
        let tree = Multigraph::path(5);
        assert_eq!(tutte_diagonal(&tree, &big(3)).unwrap(), big(81));
        assert_eq!(
            tutte_diagonal(&Multigraph::cycle(3), &big(-1)).unwrap(),
            big(-1)
        );
        for g in [Multigraph::complete(4), Multigraph::cycle(5), tree] {
            let expect = big(2).pow(g.num_edges() as u32);
            assert_eq!(tutte_diagonal(&g, &big(2)).unwrap(), expect);
            assert_eq!(tutte(&g).unwrap().eval(&big(2), &big(2)), expect);
        }
    }

    #[test]
    fn capacity() {
        let big_graph = Multigraph::new(2, vec![(0, 1); 17]).unwrap();
        assert!(matches!(
            tutte_subgraph_sum(&big_graph),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(tutte(&big_graph), Err(Error::Capacity { .. })));
    }
}
