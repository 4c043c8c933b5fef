//! Exact Hilbert-series arithmetic and the glued counterexample chain.
//!
//! A [`HilbertSeries`] is `h(t) / (1 - t)^d` with integer numerator. Gluing
//! two graphs at a vertex that is simplicial (free) in both multiplies their
//! series and the factor `(1 - t)^2`, and adds their regularities. Chaining
//! copies of an 8-vertex base graph with regularity 4 and h-polynomial of
//! degree 3 therefore gives regularity `4k` against h-degree `3k`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Graph, Result};

/// Integer polynomial; `coeffs[i]` is the coefficient of `t^i`, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        poly_mul(self, other)
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Divides by `(1 - t)`, assuming the polynomial vanishes at 1.
    fn div_one_minus_t(&self) -> IntPoly {
        debug_assert!(self.eval_at_one().is_zero());
        // Synthetic division by (t - 1): q[i-1] = p[i] + q[i]; then negate.
        let m = self.coeffs.len();
        let mut q = vec![BigInt::zero(); m.saturating_sub(1)];
        let mut carry = BigInt::zero();
        for i in (1..m).rev() {
            carry += &self.coeffs[i];
            q[i - 1] = -carry.clone();
        }
        IntPoly::new(q)
    }
}

/// Convolution product.
pub fn poly_mul(p: &IntPoly, q: &IntPoly) -> IntPoly {
    if p.is_zero() || q.is_zero() {
        return IntPoly::zero();
    }
    let mut out = vec![BigInt::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        for (j, b) in q.coeffs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    IntPoly::new(out)
}

/// `numerator / (1 - t)^denom_exp`, kept in reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: IntPoly,
    denom_exp: usize,
}

impl HilbertSeries {
    /// Builds and reduces the series.
    pub fn new(numerator: IntPoly, denom_exp: usize) -> Self {
        HilbertSeries { numerator, denom_exp }.reduced()
    }

    /// Cancels common factors of `(1 - t)` between numerator and denominator.
    pub fn reduced(mut self) -> Self {
        while self.denom_exp > 0
            && !self.numerator.is_zero()
            && self.numerator.eval_at_one().is_zero()
        {
            self.numerator = self.numerator.div_one_minus_t();
            self.denom_exp -= 1;
        }
        self
    }

    /// The h-polynomial.
    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    /// Exponent of `(1 - t)`; the Krull dimension in reduced form.
    pub fn denom_exp(&self) -> usize {
        self.denom_exp
    }

    pub fn h_degree(&self) -> usize {
        self.numerator.degree().unwrap_or(0)
    }
}

/// Series of a gluing at a vertex free on both sides: `(1 - t)^2 H1 H2`.
pub fn series_glue(h1: &HilbertSeries, h2: &HilbertSeries) -> Result<HilbertSeries> {
    let d = h1.denom_exp + h2.denom_exp;
    if d < 2 {
        return Err(Error::DenominatorUnderflow(h1.denom_exp, h2.denom_exp));
    }
    Ok(HilbertSeries::new(poly_mul(&h1.numerator, &h2.numerator), d - 2))
}

/// Edges of the 8-vertex base graph, 1-based.
pub const BASE_EDGES: [(usize, usize); 11] = [
    (1, 8),
    (2, 6),
    (3, 7),
    (3, 8),
    (4, 5),
    (4, 8),
    (5, 6),
    (5, 7),
    (6, 7),
    (6, 8),
    (7, 8),
];

/// h-polynomial coefficients of the base graph.
pub const BASE_H: [i64; 4] = [1, 7, 17, 13];
pub const BASE_DENOM_EXP: usize = 9;
pub const BASE_REG: usize = 4;

/// The base graph with its Hilbert series `(1 + 7t + 17t^2 + 13t^3) / (1 - t)^9`
/// and regularity 4. Vertices 0 and 1 (1-based: 1 and 2) are simplicial.
pub fn counterexample_base() -> (Graph, HilbertSeries, usize) {
    let g = Graph::from_edges(8, BASE_EDGES.iter().map(|&(u, v)| (u - 1, v - 1)))
        .expect("static edge list");
    let h = HilbertSeries::new(IntPoly::from_i64(&BASE_H), BASE_DENOM_EXP);
    (g, h, BASE_REG)
}

/// Identifies vertex `v2` of `g2` with vertex `v1` of `g1`.
///
/// The result has `n1 + n2 - 1` vertices: those of `g1` unchanged, followed
/// by the remaining vertices of `g2` in their original order. Both gluing
/// vertices must be simplicial.
pub fn glue_graphs(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    if !g1.is_simplicial(v1)? {
        return Err(Error::NotSimplicial { side: 1, vertex: v1 });
    }
    if !g2.is_simplicial(v2)? {
        return Err(Error::NotSimplicial { side: 2, vertex: v2 });
    }
    let n1 = g1.n();
    let map = |w: usize| if w == v2 { v1 } else { glued_index(n1, v2, w) };
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(a, b)| (map(a), map(b))));
    Graph::from_edges(n1 + g2.n() - 1, edges)
}

/// Position of `g2`'s vertex `w` after [`glue_graphs`] with `g1` of size `n1`.
fn glued_index(n1: usize, v2: usize, w: usize) -> usize {
    if w < v2 {
        n1 + w
    } else {
        n1 + w - 1
    }
}

/// A chain of glued base copies with its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub k: usize,
    pub graph: Graph,
    pub series: HilbertSeries,
    pub reg: usize,
    pub h_degree: usize,
    pub gap: usize,
    pub n_vertices: usize,
}

/// Glues `k >= 1` base copies in a chain: vertex 2 of copy `i` is identified
/// with vertex 1 of copy `i + 1` (1-based labels within each copy).
///
/// Regularity is additive over free-vertex gluings and is computed from the
/// base value; the series is multiplied with [`series_glue`].
pub fn build_chain(k: usize) -> Result<ChainReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("chain length k must be >= 1"));
    }
    let (base, base_series, base_reg) = counterexample_base();
    let mut graph = base.clone();
    let mut series = base_series.clone();
    let mut reg = base_reg;
    // Vertex 2 of the most recent copy.
    let mut free_end = 1;
    for _ in 1..k {
        let n1 = graph.n();
        graph = glue_graphs(&graph, free_end, &base, 0)?;
        free_end = glued_index(n1, 0, 1);
        series = series_glue(&series, &base_series)?;
        reg += base_reg;
    }
    let h_degree = series.h_degree();
    Ok(ChainReport {
        k,
        n_vertices: graph.n(),
        graph,
        series,
        reg,
        h_degree,
        gap: reg - h_degree,
    })
}

impl HilbertSeries {
    /// `1 / (1 - t)^d`.
    pub fn free(d: usize) -> Self {
        HilbertSeries::new(IntPoly::one(), d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn multiplication() {
        assert_eq!(poly_mul(&p(&[1, 1]), &p(&[1, -1])), p(&[1, 0, -1]));
        assert_eq!(poly_mul(&p(&[3, 0, 2]), &IntPoly::one()), p(&[3, 0, 2]));
        assert_eq!(poly_mul(&p(&[3, 0, 2]), &IntPoly::zero()), IntPoly::zero());
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
    }

    #[test]
    fn reduction() {
        // (1 - t^2) / (1 - t)^3 = (1 + t) / (1 - t)^2
        let h = HilbertSeries::new(p(&[1, 0, -1]), 3);
        assert_eq!(h.numerator(), &p(&[1, 1]));
        assert_eq!(h.denom_exp(), 2);
        // (1 - t)^2 over (1 - t)^1 leaves a polynomial
        let h = HilbertSeries::new(p(&[1, -2, 1]), 1);
        assert_eq!((h.numerator(), h.denom_exp()), (&p(&[1, -1]), 0));
        assert_eq!(h.clone().reduced(), h);
    }

    #[test]
    fn gluing_series() {
        let (_, base, _) = counterexample_base();
        let two = series_glue(&base, &base).unwrap();
        assert_eq!(two.numerator(), &p(&[1, 14, 83, 264, 471, 442, 169]));
        assert_eq!(two.denom_exp(), 16);
        let same = series_glue(&base, &HilbertSeries::free(2)).unwrap();
        assert_eq!(same, base);
        assert_eq!(
            series_glue(&HilbertSeries::free(1), &HilbertSeries::free(0)),
            Err(Error::DenominatorUnderflow(1, 0))
        );
    }

    #[test]
    fn base_graph() {
        let (g, h, reg) = counterexample_base();
        assert_eq!((g.n(), g.edge_count(), reg, h.h_degree()), (8, 11, 4, 3));
        assert!(g.is_simplicial(0).unwrap());
        assert!(g.is_simplicial(1).unwrap());
        assert_eq!(g.neighbors(0).iter().copied().collect::<Vec<_>>(), vec![7]);
        assert_eq!(g.neighbors(1).iter().copied().collect::<Vec<_>>(), vec![5]);
    }

    #[test]
    fn graph_gluing() {
        let k2 = Graph::complete(2);
        let p3 = glue_graphs(&k2, 1, &k2, 0).unwrap();
        assert_eq!(p3, Graph::path(3));
        let (g, _, _) = counterexample_base();
        // vertex 8 (index 7) has a non-clique neighborhood
        assert_eq!(
            glue_graphs(&g, 7, &g, 0),
            Err(Error::NotSimplicial { side: 1, vertex: 7 })
        );
        assert_eq!(
            glue_graphs(&g, 0, &g, 4),
            Err(Error::NotSimplicial { side: 2, vertex: 4 })
        );
        assert!(glue_graphs(&g, 0, &g, 8).is_err());
    }

    #[test]
    fn chains() {
        let c1 = build_chain(1).unwrap();
        assert_eq!((c1.reg, c1.h_degree, c1.gap, c1.n_vertices), (4, 3, 1, 8));
        let c2 = build_chain(2).unwrap();
        assert_eq!((c2.reg, c2.h_degree, c2.gap, c2.n_vertices), (8, 6, 2, 15));
        assert_eq!(c2.series.denom_exp(), 16);
        assert!(build_chain(0).is_err());
    }
}
