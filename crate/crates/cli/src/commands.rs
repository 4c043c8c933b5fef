//! Command bodies, separated from argument parsing so they can be tested
//! without spawning the binary.

use cograph_bei_core::extremal::{connected_with_reg, max_reg_cograph};
use cograph_bei_core::invariants::MAX_INDEP_ORACLE_LIMIT;
use cograph_bei_core::regularity::report_for;
use cograph_bei_core::series::build_chain;
use cograph_bei_core::{build_cotree, Graph, InvariantReport, Recognition};
use serde::Serialize;

use crate::formats::{parse_graph, write_graph, Format, ParseError};
use crate::json::{
    witness_json, AnalysisJson, ChainJson, CotreeJson, GraphJson, InvariantJson, RegularityJson,
    TableJson, VerificationJson,
};
use crate::parallel::{table_parallel, verify_parallel};
use crate::text;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("graph has no vertices")]
    NoVertices,
    #[error(transparent)]
    Core(#[from] cograph_bei_core::Error),
}

/// What a command prints and the process exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: EXIT_OK }
    }
}

/// Output encoding for `generate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphOutput {
    Json,
    Graph(Format),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenerateKind {
    MaxReg { n: usize },
    Cone { r: usize },
    Chain { k: usize },
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

pub fn analyze(input: &str, format: Format, pretty: bool) -> Result<Output, CliError> {
    let g = parse_graph(input, format)?;
    if g.n() == 0 {
        return Err(CliError::NoVertices);
    }
    let (report, cotree) = match build_cotree(&g) {
        Recognition::Cograph(t) => {
            let t = t.canonicalized();
            let report = AnalysisJson {
                graph: GraphJson::from(&g),
                cograph: true,
                cotree: Some(CotreeJson::from(&t)),
                p4_witness: None,
                invariants: Some(InvariantJson::from(&InvariantReport::from_cotree(&t, &g))),
                regularity: Some(RegularityJson::from(&report_for(&t, &g))),
            };
            (report, Some(t))
        }
        Recognition::NotCograph(w) => {
            let invariants = if g.n() <= MAX_INDEP_ORACLE_LIMIT {
                Some(InvariantJson::from(&InvariantReport::by_oracle(&g)?))
            } else {
                None
            };
            let report = AnalysisJson {
                graph: GraphJson::from(&g),
                cograph: false,
                cotree: None,
                p4_witness: Some(witness_json(&w)),
                invariants,
                regularity: None,
            };
            (report, None)
        }
    };
    let stdout = if pretty { text::analysis(&report, cotree.as_ref()) } else { to_json(&report) };
    Ok(Output::ok(stdout))
}

pub fn verify(max_n: usize, pretty: bool) -> Result<Output, CliError> {
    let rep = verify_parallel(max_n)?;
    let stdout = if pretty {
        text::verification(max_n, &rep)
    } else {
        to_json(&VerificationJson::new(max_n, &rep))
    };
    let code = if rep.pass() { EXIT_OK } else { EXIT_FAILED };
    Ok(Output { stdout, code })
}

pub fn table(max_n: usize, pretty: bool) -> Result<Output, CliError> {
    let tab = table_parallel(max_n)?;
    let stdout = if pretty { text::table(max_n, &tab) } else { to_json(&TableJson::new(max_n, &tab)) };
    Ok(Output::ok(stdout))
}

fn emit_graph(g: &Graph, out: GraphOutput) -> String {
    match out {
        GraphOutput::Json => to_json(&GraphJson::from(g)),
        GraphOutput::Graph(f) => {
            let mut s = write_graph(g, f);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

pub fn generate(kind: GenerateKind, out: GraphOutput, pretty: bool) -> Result<Output, CliError> {
    let stdout = match kind {
        GenerateKind::MaxReg { n } => emit_graph(&max_reg_cograph(n)?, out),
        GenerateKind::Cone { r } => emit_graph(&connected_with_reg(r)?, out),
        GenerateKind::Chain { k } => {
            let chain = build_chain(k)?;
            match out {
                GraphOutput::Json if pretty => text::chain(&ChainJson::from(&chain)),
                GraphOutput::Json => to_json(&ChainJson::from(&chain)),
                GraphOutput::Graph(_) => emit_graph(&chain.graph, out),
            }
        }
    };
    Ok(Output::ok(stdout))
}
