//! Cograph recognition and cotrees.
//!
//! A graph with at least two vertices is a cograph iff, recursively, it is
//! disconnected (a union of its components) or its complement is
//! disconnected (a join of the complements of the complement's components).
//! When neither holds the graph contains an induced P4, which is returned as
//! a certificate.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{components_within, Graph};
use crate::{Error, Result};

/// The union/join decomposition tree of a cograph.
///
/// Internal nodes have at least two children and kinds alternate along every
/// root-to-leaf path. Leaves carry the 0-based vertex they stand for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

/// Vertices `(a, b, c, d)` inducing the path `a - b - c - d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct P4Witness(pub [usize; 4]);

impl P4Witness {
    /// True iff the four vertices induce exactly the path `a - b - c - d` in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let [a, b, c, d] = self.0;
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        distinct
            && g.has_edge(a, b)
            && g.has_edge(b, c)
            && g.has_edge(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(a, d)
            && !g.has_edge(b, d)
    }
}

impl fmt::Display for P4Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a}-{b}-{c}-{d}")
    }
}

/// Outcome of [`build_cotree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Cograph(Cotree),
    NotCograph(P4Witness),
}

impl Recognition {
    pub fn cotree(self) -> Option<Cotree> {
        match self {
            Recognition::Cograph(t) => Some(t),
            Recognition::NotCograph(_) => None,
        }
    }

    /// Converts the witness branch into [`Error::NotCograph`].
    pub fn into_result(self) -> Result<Cotree> {
        match self {
            Recognition::Cograph(t) => Ok(t),
            Recognition::NotCograph(w) => Err(Error::NotCograph(w)),
        }
    }
}

/// Decides cograph membership, returning the cotree or an induced-P4 witness.
///
/// # Panics
/// If the graph has no vertices.
pub fn build_cotree(g: &Graph) -> Recognition {
    assert!(g.n() > 0, "build_cotree needs at least one vertex");
    let all: Vec<usize> = (0..g.n()).collect();
    match decompose(g, &all) {
        Some(t) => Recognition::Cograph(t),
        None => Recognition::NotCograph(
            find_induced_p4(g).expect("prime subgraph with >= 2 vertices contains an induced P4"),
        ),
    }
}

fn decompose(g: &Graph, vs: &[usize]) -> Option<Cotree> {
    if let [v] = vs {
        return Some(Cotree::Leaf(*v));
    }
    let comps = components_within(g.n(), vs, |u, w| g.has_edge(u, w));
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| decompose(g, c))
            .collect::<Option<Vec<_>>>()?;
        return Some(Cotree::Union(children));
    }
    let co_comps = components_within(g.n(), vs, |u, w| u != w && !g.has_edge(u, w));
    if co_comps.len() > 1 {
        let children = co_comps
            .iter()
            .map(|c| decompose(g, c))
            .collect::<Option<Vec<_>>>()?;
        return Some(Cotree::Join(children));
    }
    None
}

/// Lexicographically smallest induced P4 `(a, b, c, d)`, if any.
pub fn find_induced_p4(g: &Graph) -> Option<P4Witness> {
    for a in 0..g.n() {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d != b && !g.has_edge(a, d) && !g.has_edge(b, d) && d != a {
                        return Some(P4Witness([a, b, c, d]));
                    }
                }
            }
        }
    }
    None
}

/// Convenience wrapper: true iff the graph has no induced P4.
pub fn is_cograph(g: &Graph) -> bool {
    find_induced_p4(g).is_none()
}

impl Cotree {
    /// Number of leaves, i.e. vertices of the represented graph.
    pub fn vertex_count(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().map(Cotree::vertex_count).sum(),
        }
    }

    pub fn children(&self) -> &[Cotree] {
        match self {
            Cotree::Leaf(_) => &[],
            Cotree::Union(ch) | Cotree::Join(ch) => ch,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Cotree::Leaf(_))
    }

    /// Connectedness of the represented graph, read off the root kind.
    pub fn is_connected(&self) -> bool {
        !matches!(self, Cotree::Union(_))
    }

    /// Leaf labels in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// The cotree of the complement graph: union and join nodes swap.
    pub fn complement(&self) -> Cotree {
        match self {
            Cotree::Leaf(v) => Cotree::Leaf(*v),
            Cotree::Union(ch) => Cotree::Join(ch.iter().map(Cotree::complement).collect()),
            Cotree::Join(ch) => Cotree::Union(ch.iter().map(Cotree::complement).collect()),
        }
    }

    /// Relabels leaves `0, 1, 2, ...` in left-to-right order.
    pub fn relabeled(&self) -> Cotree {
        let mut next = 0;
        self.relabel_from(&mut next)
    }

    fn relabel_from(&self, next: &mut usize) -> Cotree {
        match self {
            Cotree::Leaf(_) => {
                let t = Cotree::Leaf(*next);
                *next += 1;
                t
            }
            Cotree::Union(ch) => Cotree::Union(ch.iter().map(|c| c.relabel_from(next)).collect()),
            Cotree::Join(ch) => Cotree::Join(ch.iter().map(|c| c.relabel_from(next)).collect()),
        }
    }

    /// Checks arity, alternation and that the leaves are exactly `0..n`.
    pub fn validate(&self) -> Result<()> {
        self.validate_shape(None)?;
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        if leaves.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::InvalidCotree("leaf labels must be exactly 0..n"));
        }
        Ok(())
    }

    fn validate_shape(&self, parent_is_union: Option<bool>) -> Result<()> {
        let (ch, is_union) = match self {
            Cotree::Leaf(_) => return Ok(()),
            Cotree::Union(ch) => (ch, true),
            Cotree::Join(ch) => (ch, false),
        };
        if ch.len() < 2 {
            return Err(Error::InvalidCotree("internal node with fewer than 2 children"));
        }
        if parent_is_union == Some(is_union) {
            return Err(Error::InvalidCotree("parent and child of the same kind"));
        }
        ch.iter().try_for_each(|c| c.validate_shape(Some(is_union)))
    }

    /// Evaluates the cotree to its graph, keeping leaf labels as vertices.
    pub fn to_graph(&self) -> Result<Graph> {
        self.validate()?;
        let mut g = Graph::empty(self.vertex_count());
        self.add_edges(&mut g);
        Ok(g)
    }

    fn add_edges(&self, g: &mut Graph) {
        if let Cotree::Join(ch) = self {
            let parts: Vec<Vec<usize>> = ch.iter().map(Cotree::leaves).collect();
            for (i, p) in parts.iter().enumerate() {
                for q in &parts[i + 1..] {
                    for &u in p {
                        for &v in q {
                            g.insert_edge(u, v);
                        }
                    }
                }
            }
        }
        self.children().iter().for_each(|c| c.add_edges(g));
    }

    /// Label-independent key: equal keys iff the represented cographs are isomorphic.
    ///
    /// A leaf encodes as `L`, an internal node as its kind letter followed by
    /// the lexicographically sorted keys of its children in parentheses.
    pub fn canonical_key(&self) -> Vec<u8> {
        match self {
            Cotree::Leaf(_) => alloc::vec![b'L'],
            Cotree::Union(ch) => keyed(b'U', ch),
            Cotree::Join(ch) => keyed(b'J', ch),
        }
    }

    /// Same cotree with children sorted by canonical key, recursively.
    pub fn canonicalized(&self) -> Cotree {
        match self {
            Cotree::Leaf(v) => Cotree::Leaf(*v),
            Cotree::Union(ch) => Cotree::Union(sorted_children(ch)),
            Cotree::Join(ch) => Cotree::Join(sorted_children(ch)),
        }
    }
}

fn keyed(tag: u8, ch: &[Cotree]) -> Vec<u8> {
    let mut keys: Vec<Vec<u8>> = ch.iter().map(Cotree::canonical_key).collect();
    keys.sort();
    let mut out = Vec::with_capacity(2 + keys.iter().map(Vec::len).sum::<usize>());
    out.push(tag);
    out.push(b'(');
    keys.iter().for_each(|k| out.extend_from_slice(k));
    out.push(b')');
    out
}

fn sorted_children(ch: &[Cotree]) -> Vec<Cotree> {
    let mut v: Vec<(Vec<u8>, Cotree)> = ch
        .iter()
        .map(|c| {
            let c = c.canonicalized();
            (c.canonical_key(), c)
        })
        .collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v.into_iter().map(|(_, c)| c).collect()
}
