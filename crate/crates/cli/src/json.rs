//! JSON shapes for every report. Vertices are 1-based and arbitrary
//! precision counts are decimal strings.

use std::collections::BTreeMap;

use cograph_bei_core::enumeration::{BoundTable, VerificationReport, BOUND_NAMES};
use cograph_bei_core::{
    ChainReport, Cotree, Graph, HilbertSeries, InvariantReport, P4Witness, RegularityReport,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().map(|(u, v)| [u + 1, v + 1]).collect() }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = cograph_bei_core::Error;

    fn try_from(j: &GraphJson) -> Result<Self, Self::Error> {
        let shifted = j.edges.iter().map(|&[u, v]| (u.wrapping_sub(1), v.wrapping_sub(1)));
        Graph::from_edges(j.n, shifted)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CotreeJson {
    Leaf { v: usize },
    Union { children: Vec<CotreeJson> },
    Join { children: Vec<CotreeJson> },
}

impl From<&Cotree> for CotreeJson {
    fn from(t: &Cotree) -> Self {
        let kids = |ch: &[Cotree]| ch.iter().map(CotreeJson::from).collect();
        match t {
            Cotree::Leaf(v) => CotreeJson::Leaf { v: v + 1 },
            Cotree::Union(ch) => CotreeJson::Union { children: kids(ch) },
            Cotree::Join(ch) => CotreeJson::Join { children: kids(ch) },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantJson {
    pub alpha: String,
    pub num_max_indep: String,
    pub num_max_cliques: String,
    pub max_degree: String,
}

impl From<&InvariantReport> for InvariantJson {
    fn from(r: &InvariantReport) -> Self {
        InvariantJson {
            alpha: r.alpha.to_string(),
            num_max_indep: r.num_max_indep.to_string(),
            num_max_cliques: r.num_max_cliques.to_string(),
            max_degree: r.max_degree.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularityJson {
    pub reg: usize,
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub connected: bool,
    pub order_bound: usize,
    pub lower_bound_ell: usize,
    pub upper_matsuda: usize,
    pub bound_i: String,
    pub bound_alpha: usize,
    pub bound_c: String,
    pub bound_maxdeg: Option<usize>,
    pub tight_order_bound: bool,
}

impl From<&RegularityReport> for RegularityJson {
    fn from(r: &RegularityReport) -> Self {
        RegularityJson {
            reg: r.reg,
            n: r.n,
            k: r.k,
            a: r.a,
            connected: r.connected,
            order_bound: r.order_bound,
            lower_bound_ell: r.lower_bound_ell,
            upper_matsuda: r.upper_matsuda,
            bound_i: r.bound_i.to_string(),
            bound_alpha: r.bound_alpha,
            bound_c: r.bound_c.to_string(),
            bound_maxdeg: r.bound_maxdeg,
            tight_order_bound: r.tight_order_bound,
        }
    }
}

/// Output of `analyze`. Non-cographs carry a witness and no regularity.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisJson {
    pub graph: GraphJson,
    pub cograph: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cotree: Option<CotreeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p4_witness: Option<[usize; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<RegularityJson>,
}

pub fn witness_json(w: &P4Witness) -> [usize; 4] {
    w.0.map(|v| v + 1)
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesJson {
    pub numerator: Vec<String>,
    pub denom_exp: usize,
}

impl From<&HilbertSeries> for SeriesJson {
    fn from(h: &HilbertSeries) -> Self {
        SeriesJson {
            numerator: h.numerator().coeffs().iter().map(ToString::to_string).collect(),
            denom_exp: h.denom_exp(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainJson {
    pub k: usize,
    pub graph: GraphJson,
    pub series: SeriesJson,
    pub reg: usize,
    pub h_degree: usize,
    pub gap: usize,
    pub n_vertices: usize,
}

impl From<&ChainReport> for ChainJson {
    fn from(c: &ChainReport) -> Self {
        ChainJson {
            k: c.k,
            graph: GraphJson::from(&c.graph),
            series: SeriesJson::from(&c.series),
            reg: c.reg,
            h_degree: c.h_degree,
            gap: c.gap,
            n_vertices: c.n_vertices,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub graphs_checked: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationJson {
    pub max_n: usize,
    pub pass: bool,
    pub checks: BTreeMap<String, CheckJson>,
    pub max_reg: BTreeMap<usize, usize>,
    pub max_reg_disconnected: BTreeMap<usize, usize>,
}

impl VerificationJson {
    pub fn new(max_n: usize, r: &VerificationReport) -> Self {
        VerificationJson {
            max_n,
            pass: r.pass(),
            checks: r
                .checks
                .iter()
                .map(|(name, t)| {
                    let tally = CheckJson {
                        graphs_checked: t.graphs_checked,
                        failures: t.failures.clone(),
                    };
                    (name.to_string(), tally)
                })
                .collect(),
            max_reg: r.max_reg.clone(),
            max_reg_disconnected: r.max_reg_disconnected.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub max_n: usize,
    pub bounds: Vec<String>,
    /// `strictly_better[r][c]`: graphs where bound `r` is strictly below bound `c`.
    pub strictly_better: [[u64; 5]; 5],
    pub strict_best: [u64; 5],
    pub ties: u64,
    pub graphs: u64,
    pub connected_graphs: u64,
}

impl TableJson {
    pub fn new(max_n: usize, t: &BoundTable) -> Self {
        TableJson {
            max_n,
            bounds: BOUND_NAMES.iter().map(ToString::to_string).collect(),
            strictly_better: t.strictly_better,
            strict_best: t.strict_best,
            ties: t.ties,
            graphs: t.graphs,
            connected_graphs: t.connected_graphs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cograph_bei_core::build_cotree;
    use serde_json::json;

    #[test]
    fn graph_shape() {
        let v = serde_json::to_value(GraphJson::from(&Graph::path(3))).unwrap();
        assert_eq!(v, json!({"n": 3, "edges": [[1, 2], [2, 3]]}));
    }

    #[test]
    fn cotree_shape() {
        let t = build_cotree(&Graph::complete(2)).cotree().unwrap();
        let v = serde_json::to_value(CotreeJson::from(&t)).unwrap();
        assert_eq!(
            v,
            json!({"kind": "join", "children": [{"kind": "leaf", "v": 1}, {"kind": "leaf", "v": 2}]})
        );
    }

    #[test]
    fn series_shape() {
        let (_, h, _) = cograph_bei_core::series::counterexample_base();
        let v = serde_json::to_value(SeriesJson::from(&h)).unwrap();
        assert_eq!(v, json!({"numerator": ["1", "7", "17", "13"], "denom_exp": 9}));
    }
}
