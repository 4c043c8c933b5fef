//! Brute-force oracles shared by the integration tests. None of these call
//! into the code paths they are used to check.
#![allow(dead_code)]

use cograph_bei_core::Graph;
use num_bigint::BigInt;

/// Pairs `(i, j)`, `i < j`, in the bit order used by [`graph_from_bits`].
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(b, _)| bits >> b & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

/// Adjacency rows as bitmasks.
pub fn rows(n: usize, bits: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for (b, (i, j)) in pairs(n).into_iter().enumerate() {
        if bits >> b & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    adj
}

/// Induced P4 by scanning every ordered quadruple of distinct vertices.
pub fn has_induced_p4_brute(adj: &[u32]) -> bool {
    let n = adj.len();
    let e = |u: usize, v: usize| adj[u] >> v & 1 == 1;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    if distinct && e(a, b) && e(b, c) && e(c, d) && !e(a, c) && !e(a, d) && !e(b, d)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Edge bitmask of the relabeled graph `v -> perm[v]`.
pub fn permute_bits(n: usize, bits: u64, perm: &[usize], index: &[Vec<usize>]) -> u64 {
    let mut out = 0u64;
    for (b, (i, j)) in pairs(n).into_iter().enumerate() {
        if bits >> b & 1 == 1 {
            out |= 1 << index[perm[i]][perm[j]];
        }
    }
    out
}

/// `index[i][j]` = bit position of pair `{i, j}`.
pub fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    for (b, (i, j)) in pairs(n).into_iter().enumerate() {
        idx[i][j] = b;
        idx[j][i] = b;
    }
    idx
}

/// Number of isomorphism classes of P4-free graphs on `n` labeled vertices:
/// filter all `2^(n choose 2)` graphs, then mark each class's whole orbit
/// under the symmetric group.
pub fn p4_free_class_count(n: usize) -> usize {
    let m = n * (n - 1) / 2;
    let total = 1u64 << m;
    let perms = permutations(n);
    let index = pair_index(n);
    let mut seen = vec![false; total as usize];
    let mut classes = 0;
    for bits in 0..total {
        if seen[bits as usize] {
            continue;
        }
        if has_induced_p4_brute(&rows(n, bits)) {
            continue;
        }
        classes += 1;
        for p in &perms {
            seen[permute_bits(n, bits, p, &index) as usize] = true;
        }
    }
    classes
}

/// Isomorphism by trying every bijection.
pub fn isomorphic_brute(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    permutations(n)
        .iter()
        .any(|p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])))
}

/// Schoolbook product of integer coefficient vectors.
pub fn schoolbook_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for i in 0..a.len() {
        for j in 0..b.len() {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

pub fn schoolbook_pow(base: &[i64], k: usize) -> Vec<BigInt> {
    let b: Vec<BigInt> = base.iter().map(|&c| BigInt::from(c)).collect();
    let mut acc = vec![BigInt::from(1)];
    for _ in 0..k {
        acc = schoolbook_mul(&acc, &b);
    }
    acc
}

/// Maximal independent sets by checking every vertex subset.
pub fn maximal_independent_subsets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let independent = vs
            .iter()
            .all(|&u| vs.iter().all(|&v| u == v || !g.has_edge(u, v)));
        if !independent {
            continue;
        }
        let maximal = (0..n)
            .filter(|&w| mask >> w & 1 == 0)
            .all(|w| vs.iter().any(|&u| g.has_edge(u, w)));
        if maximal {
            out.push(vs);
        }
    }
    out
}
