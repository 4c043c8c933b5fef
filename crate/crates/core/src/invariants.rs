//! Independence number α, number of maximal independent sets i and number
//! of maximal cliques c.
//!
//! On cotrees these follow from the union/join rules
//!
//! | node  | α    | i       | c       |
//! |-------|------|---------|---------|
//! | leaf  | 1    | 1       | 1       |
//! | union | sum  | product | sum     |
//! | join  | max  | sum     | product |
//!
//! The brute-force oracles work on arbitrary graphs and carry size guards.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Cotree, Error, Graph, Result};

/// The four invariants reported for a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub alpha: usize,
    pub num_max_indep: BigUint,
    pub num_max_cliques: BigUint,
    pub max_degree: usize,
}

impl InvariantReport {
    /// Invariants of a cograph from its cotree. `g` supplies the maximum degree.
    pub fn from_cotree(t: &Cotree, g: &Graph) -> Self {
        InvariantReport {
            alpha: alpha_cotree(t),
            num_max_indep: count_max_indep_cotree(t),
            num_max_cliques: count_max_cliques_cotree(t),
            max_degree: g.max_degree(),
        }
    }

    /// Invariants of an arbitrary graph by enumeration (n <= 20).
    pub fn by_oracle(g: &Graph) -> Result<Self> {
        let indep = oracle_maximal_independent_sets(g)?;
        let cliques = oracle_maximal_independent_sets(&g.complement())?;
        Ok(InvariantReport {
            alpha: indep.iter().map(Vec::len).max().unwrap_or(0),
            num_max_indep: BigUint::from(indep.len()),
            num_max_cliques: BigUint::from(cliques.len()),
            max_degree: g.max_degree(),
        })
    }
}

pub fn alpha_cotree(t: &Cotree) -> usize {
    match t {
        Cotree::Leaf(_) => 1,
        Cotree::Union(ch) => ch.iter().map(alpha_cotree).sum(),
        Cotree::Join(ch) => ch.iter().map(alpha_cotree).max().unwrap_or(0),
    }
}

pub fn count_max_indep_cotree(t: &Cotree) -> BigUint {
    match t {
        Cotree::Leaf(_) => BigUint::one(),
        Cotree::Union(ch) => ch.iter().map(count_max_indep_cotree).product(),
        Cotree::Join(ch) => ch.iter().map(count_max_indep_cotree).sum(),
    }
}

/// Maximal cliques of `G` are maximal independent sets of the complement,
/// whose cotree is `t` with union and join swapped.
pub fn count_max_cliques_cotree(t: &Cotree) -> BigUint {
    match t {
        Cotree::Leaf(_) => BigUint::one(),
        Cotree::Union(ch) => ch.iter().map(count_max_cliques_cotree).sum(),
        Cotree::Join(ch) => ch.iter().map(count_max_cliques_cotree).product(),
    }
}

pub const MAX_INDEP_ORACLE_LIMIT: usize = 20;
pub const INDUCED_PATH_ORACLE_LIMIT: usize = 12;

fn bitmask_adjacency(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn mask_to_vec(mut m: u32) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// All maximal independent sets, each sorted; ordered by size, then lexicographically.
///
/// Bron–Kerbosch with pivoting, run on the complement adjacency.
pub fn oracle_maximal_independent_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if n > MAX_INDEP_ORACLE_LIMIT {
        return Err(Error::SizeGuard {
            operation: "maximal independent set oracle",
            limit: MAX_INDEP_ORACLE_LIMIT,
            got: n,
        });
    }
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let adj = bitmask_adjacency(g);
    // non-neighbors, excluding the vertex itself
    let co: Vec<u32> = (0..n).map(|v| full & !adj[v] & !(1 << v)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&co, 0, full, 0, &mut out);
    let mut sets: Vec<Vec<usize>> = out.into_iter().map(mask_to_vec).collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

fn bron_kerbosch(co: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut cand = p & !co[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let bit = 1u32 << v;
        cand &= !bit;
        bron_kerbosch(co, r | bit, p & co[v], x & co[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Length in edges of a longest induced path; 0 for edgeless graphs.
pub fn oracle_longest_induced_path(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > INDUCED_PATH_ORACLE_LIMIT {
        return Err(Error::SizeGuard {
            operation: "induced path oracle",
            limit: INDUCED_PATH_ORACLE_LIMIT,
            got: n,
        });
    }
    let adj = bitmask_adjacency(g);
    let mut best = 0;
    for start in 0..n {
        extend_path(&adj, 1 << start, start, 0, &mut best);
    }
    Ok(best)
}

/// `used` holds the path's vertices, `end` its last vertex; a new vertex may
/// be appended iff it is adjacent to `end` and to no other path vertex.
fn extend_path(adj: &[u32], used: u32, end: usize, len: usize, best: &mut usize) {
    *best = (*best).max(len);
    let rest = used & !(1 << end);
    let mut cand = adj[end] & !used;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if adj[w] & rest == 0 {
            extend_path(adj, used | (1 << w), w, len + 1, best);
        }
    }
}
