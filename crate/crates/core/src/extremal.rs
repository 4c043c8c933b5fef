//! Families of cographs attaining prescribed or maximal regularity.

use crate::regularity::order_bound;
use crate::{Error, Graph, Result};

/// Join with a single new vertex, which becomes the highest-numbered vertex.
pub fn cone(g: &Graph) -> Graph {
    g.join(&Graph::empty(1))
}

fn copies(parts: &[(usize, usize)]) -> Graph {
    let mut g = Graph::empty(0);
    for &(len, count) in parts {
        for _ in 0..count {
            g = g.disjoint_union(&Graph::path(len));
        }
    }
    g
}

/// A cograph on `n >= 2` vertices of maximal regularity `2k - a`, `n = 3k - a`.
///
/// - `a = 0`: `k` copies of P3
/// - `a = 1`: `k - 1` copies of P3 and one P2
/// - `a = 2`: `k - 2` copies of P3 and two P2
pub fn max_reg_cograph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter("maximal-regularity cograph needs n >= 2"));
    }
    let ob = order_bound(n, false);
    let (k, a) = (ob.k, ob.a);
    Ok(copies(&[(3, k - a), (2, a)]))
}

/// A connected cograph with regularity exactly `r >= 1`.
///
/// `r = 1` gives K2; otherwise the cone over `r / 2` copies of P3, plus one
/// P2 when `r` is odd.
pub fn connected_with_reg(r: usize) -> Result<Graph> {
    match r {
        0 => Err(Error::InvalidParameter("connected regularity needs r >= 1")),
        1 => Ok(Graph::complete(2)),
        _ => Ok(cone(&copies(&[(3, r / 2), (2, r % 2)]))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_cotree, reg_cograph};

    fn reg(g: &Graph) -> usize {
        reg_cograph(&build_cotree(g).cotree().unwrap())
    }

    #[test]
    fn max_reg_examples() {
        let g6 = max_reg_cograph(6).unwrap();
        assert_eq!(g6, Graph::path(3).disjoint_union(&Graph::path(3)));
        assert_eq!(reg(&g6), 4);
        let g5 = max_reg_cograph(5).unwrap();
        assert_eq!(g5, Graph::path(3).disjoint_union(&Graph::path(2)));
        assert_eq!(reg(&g5), 3);
        let g4 = max_reg_cograph(4).unwrap();
        assert_eq!(g4, Graph::path(2).disjoint_union(&Graph::path(2)));
        assert_eq!(reg(&g4), 2);
        assert!(max_reg_cograph(1).is_err());
    }

    #[test]
    fn cone_examples() {
        assert_eq!(cone(&Graph::empty(1)), Graph::complete(2));
        let c = cone(&Graph::path(3).disjoint_union(&Graph::path(3)));
        assert_eq!(c.n(), 7);
        assert!(c.is_connected() && c.has_universal_vertex());
        assert_eq!(c.degree(6), 6);
        assert_eq!(reg(&c), 4);
    }

    #[test]
    fn connected_examples() {
        assert_eq!(connected_with_reg(1).unwrap(), Graph::complete(2));
        let g4 = connected_with_reg(4).unwrap();
        assert_eq!((g4.n(), reg(&g4)), (7, 4));
        let g3 = connected_with_reg(3).unwrap();
        assert_eq!((g3.n(), reg(&g3)), (6, 3));
        assert!(connected_with_reg(0).is_err());
    }

    #[test]
    fn families_hit_their_targets() {
        for n in 2..=30 {
            let g = max_reg_cograph(n).unwrap();
            assert_eq!(g.n(), n);
            assert_eq!(reg(&g), order_bound(n, false).bound, "n = {n}");
        }
        for r in 1..=20 {
            let g = connected_with_reg(r).unwrap();
            assert!(g.is_connected());
            assert_eq!(reg(&g), r, "r = {r}");
        }
    }
}
