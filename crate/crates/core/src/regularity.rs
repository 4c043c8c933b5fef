//! Regularity of `S/J_G` for cographs and the bounds that surround it.

use num_bigint::BigUint;

use crate::cotree::{build_cotree, Cotree};
use crate::invariants::{oracle_longest_induced_path, InvariantReport, INDUCED_PATH_ORACLE_LIMIT};
use crate::{Error, Graph, Result};

/// Regularity of a cograph from its cotree.
///
/// A leaf contributes 0. Regularity adds over a union. A join of leaves is a
/// complete graph of regularity 1; any other join takes the maximum of 2 and
/// its children's regularities.
pub fn reg_cograph(t: &Cotree) -> usize {
    match t {
        Cotree::Leaf(_) => 0,
        Cotree::Union(ch) => ch.iter().map(reg_cograph).sum(),
        Cotree::Join(ch) => {
            if ch.iter().all(Cotree::is_leaf) {
                1
            } else {
                ch.iter().map(reg_cograph).fold(2, usize::max)
            }
        }
    }
}

/// `n = 3k - a` with `a` in `{0, 1, 2}` and the resulting regularity bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderBound {
    pub k: usize,
    pub a: usize,
    pub bound: usize,
}

/// Bound on the regularity of cographs on `n >= 1` vertices: `2k - a`,
/// lowered by one for connected graphs when `k > 1` and `a` is 0 or 1.
pub fn order_bound(n: usize, connected: bool) -> OrderBound {
    assert!(n >= 1, "order bound needs n >= 1");
    let k = n.div_ceil(3);
    let a = 3 * k - n;
    let mut bound = 2 * k - a;
    if connected && k > 1 && a <= 1 {
        bound -= 1;
    }
    OrderBound { k, a, bound }
}

/// Regularity together with every bound that applies to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub reg: usize,
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub connected: bool,
    pub order_bound: usize,
    /// Longest induced path length ℓ, a lower bound.
    pub lower_bound_ell: usize,
    /// `n - 1`.
    pub upper_matsuda: usize,
    pub bound_i: BigUint,
    pub bound_alpha: usize,
    pub bound_c: BigUint,
    /// Maximum degree; only a bound for connected graphs.
    pub bound_maxdeg: Option<usize>,
    pub tight_order_bound: bool,
}

impl RegularityReport {
    /// True iff `ℓ <= reg <= min(all upper bounds)`.
    pub fn bounds_hold(&self) -> bool {
        let reg_big = BigUint::from(self.reg);
        self.lower_bound_ell <= self.reg
            && self.reg <= self.order_bound
            && self.reg <= self.upper_matsuda
            && self.reg <= self.bound_alpha
            && reg_big <= self.bound_i
            && reg_big <= self.bound_c
            && self.bound_maxdeg.is_none_or(|d| self.reg <= d)
    }
}

/// Longest induced path length of a cograph.
///
/// Uses the brute-force oracle within its size guard. Beyond it, P4-freeness
/// caps the length at 2, reached iff some component is not complete.
fn induced_path_length(g: &Graph) -> usize {
    if g.n() <= INDUCED_PATH_ORACLE_LIMIT {
        return oracle_longest_induced_path(g).expect("within guard");
    }
    if g.edge_count() == 0 {
        return 0;
    }
    let all_cliques = g.connected_components().iter().all(|c| {
        c.iter().all(|&v| g.degree(v) + 1 == c.len())
    });
    if all_cliques {
        1
    } else {
        2
    }
}

/// Regularity report for a cograph; fails with the P4 witness otherwise.
pub fn bounds_report(g: &Graph) -> Result<RegularityReport> {
    let t = build_cotree(g).into_result()?;
    Ok(report_for(&t, g))
}

/// Regularity report from an already known cotree of `g`.
pub fn report_for(t: &Cotree, g: &Graph) -> RegularityReport {
    let n = g.n();
    let connected = t.is_connected();
    let ob = order_bound(n, connected);
    let inv = InvariantReport::from_cotree(t, g);
    let reg = reg_cograph(t);
    RegularityReport {
        reg,
        n,
        k: ob.k,
        a: ob.a,
        connected,
        order_bound: ob.bound,
        lower_bound_ell: induced_path_length(g),
        upper_matsuda: n - 1,
        bound_i: inv.num_max_indep,
        bound_alpha: inv.alpha,
        bound_c: inv.num_max_cliques,
        bound_maxdeg: connected.then_some(inv.max_degree),
        tight_order_bound: reg == ob.bound,
    }
}

/// Whether the cograph is a disjoint union of copies of P3 together with
/// exactly `a` copies of P2, where `n = 3k - a` and `a` is 0 or 1.
pub fn is_extremal_characterized(t: &Cotree) -> Result<bool> {
    let n = t.vertex_count();
    let ob = order_bound(n, false);
    if ob.a == 2 {
        return Err(Error::CharacterizationUndefined { n });
    }
    let components = match t {
        Cotree::Union(ch) => ch.as_slice(),
        other => core::slice::from_ref(other),
    };
    let (mut p3, mut p2) = (0, 0);
    for c in components {
        match c.canonical_key().as_slice() {
            b"J(LU(LL))" => p3 += 1,
            b"J(LL)" => p2 += 1,
            _ => return Ok(false),
        }
    }
    Ok(p2 == ob.a && 3 * p3 + 2 * p2 == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::cone;

    fn cot(g: &Graph) -> Cotree {
        build_cotree(g).cotree().unwrap()
    }

    fn p3p3() -> Graph {
        Graph::path(3).disjoint_union(&Graph::path(3))
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(reg_cograph(&cot(&Graph::empty(1))), 0);
        assert_eq!(reg_cograph(&cot(&Graph::path(3))), 2);
        assert_eq!(reg_cograph(&cot(&Graph::complete(5))), 1);
        assert_eq!(reg_cograph(&cot(&p3p3())), 4);
        assert_eq!(reg_cograph(&cot(&cone(&p3p3()))), 4);
    }

    #[test]
    fn order_bounds() {
        assert_eq!(order_bound(6, false), OrderBound { k: 2, a: 0, bound: 4 });
        assert_eq!(order_bound(6, true), OrderBound { k: 2, a: 0, bound: 3 });
        assert_eq!(order_bound(7, false), OrderBound { k: 3, a: 2, bound: 4 });
        assert_eq!(order_bound(7, true), OrderBound { k: 3, a: 2, bound: 4 });
        assert_eq!(order_bound(1, false), OrderBound { k: 1, a: 2, bound: 0 });
        assert_eq!(order_bound(3, true), OrderBound { k: 1, a: 0, bound: 2 });
    }

    #[test]
    fn reports() {
        let r = bounds_report(&p3p3()).unwrap();
        assert_eq!((r.reg, r.order_bound), (4, 4));
        assert!(r.tight_order_bound && r.bounds_hold());

        let r = bounds_report(&Graph::empty(1)).unwrap();
        assert_eq!((r.reg, r.lower_bound_ell, r.upper_matsuda), (0, 0, 0));
        assert!(r.bounds_hold());

        let r = bounds_report(&cone(&p3p3())).unwrap();
        assert_eq!((r.n, r.reg, r.bound_maxdeg), (7, 4, Some(6)));
        assert!(r.connected && r.bounds_hold());

        assert!(matches!(
            bounds_report(&Graph::path(4)),
            Err(Error::NotCograph(_))
        ));
    }

    #[test]
    fn induced_path_fallback_agrees_with_oracle() {
        for g in [
            Graph::empty(4),
            Graph::complete(4).disjoint_union(&Graph::complete(3)),
            p3p3(),
            cone(&p3p3()),
        ] {
            assert_eq!(
                induced_path_length_structural(&g),
                oracle_longest_induced_path(&g).unwrap()
            );
        }
    }

    fn induced_path_length_structural(g: &Graph) -> usize {
        // Pad past the oracle guard with isolated vertices, which leave ℓ unchanged.
        induced_path_length(&g.disjoint_union(&Graph::empty(INDUCED_PATH_ORACLE_LIMIT)))
    }

    #[test]
    fn characterization() {
        assert!(is_extremal_characterized(&cot(&p3p3())).unwrap());
        let p3p2 = Graph::path(3).disjoint_union(&Graph::path(2));
        assert!(is_extremal_characterized(&cot(&p3p2)).unwrap());
        assert!(!is_extremal_characterized(&cot(&Graph::complete(6))).unwrap());
        assert!(is_extremal_characterized(&cot(&Graph::path(3))).unwrap());
        assert!(is_extremal_characterized(&cot(&Graph::path(2))).unwrap());
        assert_eq!(
            is_extremal_characterized(&cot(&Graph::complete(4))),
            Err(Error::CharacterizationUndefined { n: 4 })
        );
    }
}
