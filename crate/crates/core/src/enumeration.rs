//! Cographs up to isomorphism, enumerated as canonical cotrees, and the
//! exhaustive checks run over them.
//!
//! A disconnected cograph on `m` vertices is a multiset of at least two
//! connected cographs whose sizes sum to `m`; a connected one with `m >= 2`
//! vertices is the complement of a disconnected one. Enumerating multisets in
//! non-increasing order of a fixed catalog index yields each isomorphism
//! class exactly once.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::cotree::{build_cotree, Cotree};
use crate::invariants::{
    alpha_cotree, count_max_cliques_cotree, count_max_indep_cotree, oracle_longest_induced_path,
    oracle_maximal_independent_sets,
};
use crate::regularity::{is_extremal_characterized, order_bound, reg_cograph};
use crate::{Error, Result};

pub const ENUMERATION_LIMIT: usize = 12;
pub const VERIFY_LIMIT: usize = 10;
/// Largest n for which the invariant recursions are compared to the oracles.
pub const ORACLE_CHECK_LIMIT: usize = 8;

fn guard(operation: &'static str, limit: usize, n: usize) -> Result<()> {
    if n == 0 || n > limit {
        Err(Error::SizeGuard { operation, limit, got: n })
    } else {
        Ok(())
    }
}

/// Unlabeled connected cographs by size; `connected[m]` holds the trees with
/// `m` leaves whose root is a leaf or a join node.
struct Catalog {
    connected: Vec<Vec<Cotree>>,
    disconnected: Vec<Vec<Cotree>>,
}

impl Catalog {
    fn build(n: usize) -> Catalog {
        let mut cat = Catalog {
            connected: vec![Vec::new(), vec![Cotree::Leaf(0)]],
            disconnected: vec![Vec::new(), Vec::new()],
        };
        for m in 2..=n {
            let atoms: Vec<(usize, &Cotree)> = (1..m)
                .flat_map(|s| cat.connected[s].iter().map(move |t| (s, t)))
                .collect();
            let mut unions = Vec::new();
            let mut picked = Vec::new();
            multisets(&atoms, m, atoms.len(), &mut picked, &mut |parts| {
                unions.push(Cotree::Union(parts.iter().map(|&i| atoms[i].1.clone()).collect()));
            });
            let joins = unions.iter().map(Cotree::complement).collect();
            cat.disconnected.push(unions);
            cat.connected.push(joins);
        }
        cat
    }
}

/// Calls `emit` for every non-increasing index sequence below `bound` whose
/// atom sizes sum to `remaining`.
fn multisets<F: FnMut(&[usize])>(
    atoms: &[(usize, &Cotree)],
    remaining: usize,
    bound: usize,
    picked: &mut Vec<usize>,
    emit: &mut F,
) {
    if remaining == 0 {
        emit(picked);
        return;
    }
    for i in (0..bound).rev() {
        if atoms[i].0 <= remaining {
            picked.push(i);
            multisets(atoms, remaining - atoms[i].0, i + 1, picked, emit);
            picked.pop();
        }
    }
}

/// One cotree per isomorphism class of cographs on `n` vertices (`1 <= n <= 12`).
///
/// Leaves are labeled `0..n` left to right. Disconnected classes come first,
/// then connected ones; the order is deterministic.
pub fn enumerate_cotrees(n: usize) -> Result<Vec<Cotree>> {
    guard("cotree enumeration", ENUMERATION_LIMIT, n)?;
    if n == 1 {
        return Ok(vec![Cotree::Leaf(0)]);
    }
    let cat = Catalog::build(n);
    Ok(cat.disconnected[n]
        .iter()
        .chain(&cat.connected[n])
        .map(Cotree::relabeled)
        .collect())
}

/// Pass/fail tally of one check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub graphs_checked: u64,
    /// Canonical keys of the failing cographs, sorted.
    pub failures: Vec<String>,
}

impl CheckTally {
    fn record(&mut self, ok: bool, key: &str) {
        self.graphs_checked += 1;
        if !ok {
            self.failures.push(String::from(key));
        }
    }
}

pub const CHECK_ORDER_BOUND: &str = "order_bound";
pub const CHECK_EXTREMAL: &str = "extremal_characterization";
pub const CHECK_CONE: &str = "connected_maximizers_are_cones";
pub const CHECK_INDEPENDENCE: &str = "independence_bounds";
pub const CHECK_CLIQUE: &str = "clique_bound";
pub const CHECK_MAX_DEGREE: &str = "max_degree_bound";
pub const CHECK_INDUCED_PATH: &str = "induced_path_and_order_minus_one";
pub const CHECK_COMPLEMENT: &str = "complement_connectivity";
pub const CHECK_ORACLES: &str = "invariant_oracles";
pub const CHECK_RECOGNITION: &str = "recognition_roundtrip";
pub const CHECK_ATTAINED: &str = "order_bound_attained";

fn merge_max(into: &mut BTreeMap<usize, usize>, from: BTreeMap<usize, usize>) {
    for (n, r) in from {
        let e = into.entry(n).or_insert(r);
        *e = (*e).max(r);
    }
}

/// Per-check tallies from an exhaustive run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: BTreeMap<&'static str, CheckTally>,
    /// Largest regularity seen among all cographs, by vertex count.
    pub max_reg: BTreeMap<usize, usize>,
    /// Largest regularity seen among disconnected cographs, by vertex count.
    pub max_reg_disconnected: BTreeMap<usize, usize>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.values().all(|c| c.failures.is_empty())
    }

    pub fn tally(&self, check: &str) -> Option<&CheckTally> {
        self.checks.get(check)
    }

    fn record(&mut self, check: &'static str, ok: bool, key: &str) {
        self.checks.entry(check).or_default().record(ok, key);
    }

    /// Order-independent merge: counts add, failure lists are re-sorted,
    /// per-size maxima take the maximum.
    pub fn merge(&mut self, other: VerificationReport) {
        for (name, t) in other.checks {
            let mine = self.checks.entry(name).or_default();
            mine.graphs_checked += t.graphs_checked;
            mine.failures.extend(t.failures);
            mine.failures.sort();
        }
        merge_max(&mut self.max_reg, other.max_reg);
        merge_max(&mut self.max_reg_disconnected, other.max_reg_disconnected);
    }

    /// Adds the attainment check: for every `n <= n_max` the largest
    /// regularity equals the order bound `2k - a`, and for `n >= 4` a
    /// disconnected cograph attains it. (For n = 2, 3 the maximizers P2 and
    /// P3 are connected.)
    pub fn finish(&mut self, n_max: usize) {
        for n in 1..=n_max {
            let bound = Some(order_bound(n, false).bound);
            let mut ok = self.max_reg.get(&n).copied() == bound;
            if n >= 4 {
                ok &= self.max_reg_disconnected.get(&n).copied() == bound;
            }
            self.record(CHECK_ATTAINED, ok, &format!("n={n}"));
        }
    }
}

/// Runs every per-graph check, with a pluggable regularity rule so the
/// checks themselves can be exercised against a broken rule.
#[derive(Debug, Clone, Copy)]
pub struct Verifier {
    reg: fn(&Cotree) -> usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier { reg: reg_cograph }
    }
}

impl Verifier {
    pub fn with_reg_rule(reg: fn(&Cotree) -> usize) -> Self {
        Verifier { reg }
    }

    /// Checks a single enumerated cotree (leaves labeled `0..n`).
    pub fn check_cotree(&self, t: &Cotree) -> VerificationReport {
        let mut rep = VerificationReport::default();
        let key_bytes = t.canonical_key();
        let key = core::str::from_utf8(&key_bytes).expect("keys are ASCII");
        let g = t.to_graph().expect("enumerated cotrees are valid");
        let n = g.n();
        let connected = t.is_connected();
        let reg = (self.reg)(t);
        let plain = order_bound(n, false);
        let refined = order_bound(n, connected);

        rep.record(CHECK_ORDER_BOUND, reg <= refined.bound, key);

        if plain.a <= 1 {
            let characterized = is_extremal_characterized(t).expect("a <= 1");
            rep.record(CHECK_EXTREMAL, (reg == plain.bound) == characterized, key);
        }

        if connected && plain.k > 1 && plain.a != 1 {
            let target = if plain.a == 0 { 2 * plain.k - 1 } else { 2 * plain.k - 2 };
            rep.record(CHECK_CONE, reg != target || g.has_universal_vertex(), key);
        }

        let alpha = alpha_cotree(t);
        let i = count_max_indep_cotree(t);
        let c = count_max_cliques_cotree(t);
        let reg_big = BigUint::from(reg);
        rep.record(CHECK_INDEPENDENCE, reg <= alpha && reg_big <= i, key);
        rep.record(CHECK_CLIQUE, reg_big <= c, key);

        if connected {
            rep.record(CHECK_MAX_DEGREE, reg <= g.max_degree(), key);
        }

        let ell = oracle_longest_induced_path(&g).expect("n within oracle guard");
        rep.record(CHECK_INDUCED_PATH, ell <= reg && reg < n, key);

        if n >= 2 {
            let g_conn = g.is_connected();
            let co_conn = g.complement().is_connected();
            rep.record(CHECK_COMPLEMENT, g_conn != co_conn && g_conn == connected, key);
        }

        if n <= ORACLE_CHECK_LIMIT {
            let indep = oracle_maximal_independent_sets(&g).expect("within guard");
            let cliques = oracle_maximal_independent_sets(&g.complement()).expect("within guard");
            let ok = indep.iter().map(Vec::len).max() == Some(alpha)
                && BigUint::from(indep.len()) == i
                && BigUint::from(cliques.len()) == c;
            rep.record(CHECK_ORACLES, ok, key);
        }

        let rebuilt = build_cotree(&g).cotree().map(|r| r.canonical_key());
        rep.record(CHECK_RECOGNITION, rebuilt.as_deref() == Some(&key_bytes[..]), key);

        rep.max_reg.insert(n, reg);
        if !connected {
            rep.max_reg_disconnected.insert(n, reg);
        }
        rep
    }

    /// Sequential exhaustive run over every cograph with `n <= n_max`.
    pub fn run(&self, n_max: usize) -> Result<VerificationReport> {
        guard("verification", VERIFY_LIMIT, n_max)?;
        let mut rep = VerificationReport::default();
        for n in 1..=n_max {
            for t in enumerate_cotrees(n)? {
                rep.merge(self.check_cotree(&t));
            }
        }
        rep.finish(n_max);
        Ok(rep)
    }
}

/// Exhaustive verification with the regularity recursion, for `n <= n_max <= 10`.
pub fn verify_theorems(n_max: usize) -> Result<VerificationReport> {
    Verifier::default().run(n_max)
}

/// The five compared bounds, in table order.
pub const BOUND_NAMES: [&str; 5] = ["order bound", "c(G)", "i(G)", "alpha(G)", "max deg"];
const MAX_DEG: usize = 4;

/// Pairwise strict-domination counts between the five regularity bounds.
///
/// The order bound column is the plain `2k - a`, without the refinement for
/// connected graphs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundTable {
    /// `strictly_better[r][c]`: graphs where bound `r` is strictly smaller than bound `c`.
    /// Pairs involving the maximum degree only count connected graphs.
    pub strictly_better: [[u64; 5]; 5],
    /// Graphs where a bound is strictly smaller than every other applicable bound.
    pub strict_best: [u64; 5],
    /// Graphs with no strictly smallest bound.
    pub ties: u64,
    pub graphs: u64,
    pub connected_graphs: u64,
}

impl BoundTable {
    /// Contribution of a single cograph.
    pub fn for_cotree(t: &Cotree) -> BoundTable {
        let g = t.to_graph().expect("valid cotree");
        let connected = t.is_connected();
        let bounds: [Option<BigUint>; 5] = [
            Some(BigUint::from(order_bound(g.n(), false).bound)),
            Some(count_max_cliques_cotree(t)),
            Some(count_max_indep_cotree(t)),
            Some(BigUint::from(alpha_cotree(t))),
            connected.then(|| BigUint::from(g.max_degree())),
        ];
        let mut tab = BoundTable {
            graphs: 1,
            connected_graphs: connected as u64,
            ..BoundTable::default()
        };
        for r in 0..5 {
            for c in 0..5 {
                if let (Some(x), Some(y)) = (&bounds[r], &bounds[c]) {
                    tab.strictly_better[r][c] += (x < y) as u64;
                }
            }
        }
        let best = (0..5).find(|&r| {
            bounds[r].as_ref().is_some_and(|x| {
                (0..5).filter(|&c| c != r).all(|c| bounds[c].as_ref().is_none_or(|y| x < y))
            })
        });
        match best {
            Some(r) => tab.strict_best[r] += 1,
            None => tab.ties += 1,
        }
        debug_assert!(connected || tab.strictly_better[MAX_DEG] == [0; 5]);
        tab
    }

    pub fn merge(&mut self, other: &BoundTable) {
        for r in 0..5 {
            for c in 0..5 {
                self.strictly_better[r][c] += other.strictly_better[r][c];
            }
            self.strict_best[r] += other.strict_best[r];
        }
        self.ties += other.ties;
        self.graphs += other.graphs;
        self.connected_graphs += other.connected_graphs;
    }
}

/// Bound comparison over every cograph with `n <= n_max <= 10`.
pub fn bound_comparison_table(n_max: usize) -> Result<BoundTable> {
    guard("bound comparison", VERIFY_LIMIT, n_max)?;
    let mut tab = BoundTable::default();
    for n in 1..=n_max {
        for t in enumerate_cotrees(n)? {
            tab.merge(&BoundTable::for_cotree(&t));
        }
    }
    Ok(tab)
}
