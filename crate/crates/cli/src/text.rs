//! Plain-text renderings for `--pretty`.

use std::fmt::Write as _;

use cograph_bei_core::enumeration::{BoundTable, VerificationReport, BOUND_NAMES};
use cograph_bei_core::Cotree;

use crate::json::{AnalysisJson, ChainJson};

/// `J(1 U(2 3))`-style rendering with 1-based leaves.
pub fn cotree_inline(t: &Cotree) -> String {
    match t {
        Cotree::Leaf(v) => (v + 1).to_string(),
        Cotree::Union(ch) | Cotree::Join(ch) => {
            let tag = if matches!(t, Cotree::Union(_)) { 'U' } else { 'J' };
            let inner: Vec<String> = ch.iter().map(cotree_inline).collect();
            format!("{tag}({})", inner.join(" "))
        }
    }
}

pub fn analysis(a: &AnalysisJson, cotree: Option<&Cotree>) -> String {
    let mut s = String::new();
    writeln!(s, "vertices     {}", a.graph.n).unwrap();
    writeln!(s, "edges        {}", a.graph.edges.len()).unwrap();
    writeln!(s, "cograph      {}", a.cograph).unwrap();
    if let Some(t) = cotree {
        writeln!(s, "cotree       {}", cotree_inline(t)).unwrap();
    }
    if let Some(w) = &a.p4_witness {
        writeln!(s, "induced P4   {}-{}-{}-{}", w[0], w[1], w[2], w[3]).unwrap();
    }
    if let Some(inv) = &a.invariants {
        writeln!(s, "alpha        {}", inv.alpha).unwrap();
        writeln!(s, "i(G)         {}", inv.num_max_indep).unwrap();
        writeln!(s, "c(G)         {}", inv.num_max_cliques).unwrap();
        writeln!(s, "max degree   {}", inv.max_degree).unwrap();
    }
    if let Some(r) = &a.regularity {
        writeln!(s, "reg          {}", r.reg).unwrap();
        writeln!(s, "order bound  {} (k = {}, a = {})", r.order_bound, r.k, r.a).unwrap();
        writeln!(s, "induced path {}", r.lower_bound_ell).unwrap();
        writeln!(s, "n - 1        {}", r.upper_matsuda).unwrap();
        if let Some(d) = r.bound_maxdeg {
            writeln!(s, "degree bound {d}").unwrap();
        }
        writeln!(s, "tight        {}", r.tight_order_bound).unwrap();
    }
    s
}

pub fn verification(max_n: usize, r: &VerificationReport) -> String {
    let mut s = String::new();
    let width = r.checks.keys().map(|k| k.len()).max().unwrap_or(0);
    writeln!(s, "cographs with n <= {max_n}").unwrap();
    for (name, t) in &r.checks {
        let status = if t.failures.is_empty() { "ok" } else { "FAILED" };
        writeln!(
            s,
            "{name:<width$}  {:>6} checked  {:>4} failed  {status}",
            t.graphs_checked,
            t.failures.len()
        )
        .unwrap();
        for f in &t.failures {
            writeln!(s, "{:width$}    {f}", "").unwrap();
        }
    }
    let maxima: Vec<String> = r.max_reg.iter().map(|(n, m)| format!("{n}:{m}")).collect();
    writeln!(s, "max reg by n  {}", maxima.join(" ")).unwrap();
    writeln!(s, "{}", if r.pass() { "all checks passed" } else { "some checks failed" }).unwrap();
    s
}

pub fn table(max_n: usize, t: &BoundTable) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{} cographs with n <= {max_n} ({} connected); row strictly below column",
        t.graphs, t.connected_graphs
    )
    .unwrap();
    let w = BOUND_NAMES.iter().map(|b| b.len()).max().unwrap_or(0);
    write!(s, "{:w$}", "").unwrap();
    for b in BOUND_NAMES {
        write!(s, "  {b:>w$}").unwrap();
    }
    s.push('\n');
    for (r, name) in BOUND_NAMES.iter().enumerate() {
        write!(s, "{name:>w$}").unwrap();
        for c in 0..5 {
            write!(s, "  {:>w$}", t.strictly_better[r][c]).unwrap();
        }
        s.push('\n');
    }
    write!(s, "{:>w$}", "best").unwrap();
    for c in 0..5 {
        write!(s, "  {:>w$}", t.strict_best[c]).unwrap();
    }
    s.push('\n');
    writeln!(s, "no unique best: {}", t.ties).unwrap();
    s
}

pub fn chain(c: &ChainJson) -> String {
    let mut s = String::new();
    writeln!(s, "copies       {}", c.k).unwrap();
    writeln!(s, "vertices     {}", c.n_vertices).unwrap();
    writeln!(s, "reg          {}", c.reg).unwrap();
    writeln!(s, "deg h        {}", c.h_degree).unwrap();
    writeln!(s, "gap          {}", c.gap).unwrap();
    writeln!(s, "h            {}", c.series.numerator.join(" ")).unwrap();
    writeln!(s, "denominator  (1-t)^{}", c.series.denom_exp).unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use cograph_bei_core::{build_cotree, Graph};

    #[test]
    fn inline_cotree() {
        let t = build_cotree(&Graph::path(3)).cotree().unwrap();
        assert_eq!(cotree_inline(&t), "J(U(1 3) 2)");
    }
}
