//! Verification suites and the family growth sweep behind the command line.
//!
//! Every suite is a list of named checks, each reduced to pass/fail plus a
//! short detail string. Randomised checks draw from a ChaCha stream seeded by
//! the configuration, so identical configurations give identical reports.

use std::fmt::{self, Write};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bp::{
    best_order_size, bp_equivalence, is_uniform, nfbdd_compile, random_nrobp, uniformize, validate_nrobp, Nfbdd,
    NfbddNode, RandomBpShape,
};
use crate::catalog::{connected_graphs_up_to, random_bounded_degree};
use crate::cnf::{cnf_from_graph, primal_graph, satisfying_masks};
use crate::cover::{
    constants, coverlb_holds, covered_table, extract_cut_cover, min_dis_cover, path_weights, verify_certificate,
    verify_deepcover, DEFAULT_PATH_CAP,
};
use crate::error::{Error, Result};
use crate::family::{
    canonical_tree_decomposition, complete_binary_tree, cross_matching_finder, hard_family_instance, tree_product,
    validate_tree_decomposition, FamilyParams,
};
use crate::graph::{is_dis, Graph, Vertex};
use crate::io::{format_sig, write_cnf, write_graph, write_td};
use crate::width::{
    cut_distant_matching, distant_extraction_divisor, dmw_exact, mw_exact, mw_structural_lower_bound,
    PrefixPartition, DEFAULT_CROSS_EDGE_CAP,
};

pub const SUITES: &[&str] = &["graphs", "widths", "family", "weights", "uniformize", "cover", "certificate"];

/// Caps and seeds shared by the suites and the sweep.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Largest catalogue graph swept exhaustively.
    pub max_n: usize,
    /// Variable cap for truth tables and exhaustive order search.
    pub cap_vars: usize,
    /// Vertex cap for the width subset DP.
    pub cap_subset: usize,
    pub exact: bool,
    pub seed: u64,
    /// Number of variable orders per graph in the weight sweep (at most 3).
    pub orders: usize,
    /// Random programs in the uniformization suite.
    pub random_programs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 7,
            cap_vars: 20,
            cap_subset: 22,
            exact: false,
            seed: 1,
            orders: 3,
            random_programs: 500,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "suite={} check={} status={} {}", self.suite, self.check, status, self.detail)
    }
}

struct Recorder {
    suite: &'static str,
    out: Vec<CheckOutcome>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder { suite, out: Vec::new() }
    }

    /// Records a check from its failures: passes iff `failures` is empty.
    fn check(&mut self, check: &'static str, count: usize, failures: Vec<String>) {
        let detail = match failures.first() {
            None => format!("checked={count}"),
            Some(first) => format!("checked={count} failures={} first=\"{first}\"", failures.len()),
        };
        self.out.push(CheckOutcome {
            suite: self.suite,
            check,
            passed: failures.is_empty(),
            detail,
        });
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    match name {
        "graphs" => suite_graphs(cfg),
        "widths" => suite_widths(cfg),
        "family" => suite_family(cfg),
        "weights" => suite_weights(cfg),
        "uniformize" => suite_uniformize(cfg),
        "cover" => suite_cover(cfg),
        "certificate" => suite_certificate(cfg),
        other => Err(Error::Precondition(format!(
            "unknown suite `{other}`; available: {}",
            SUITES.join(", ")
        ))),
    }
}

/// Orders used for the sweeps: natural, reversed, then a seeded shuffle.
pub fn sweep_orders(n: usize, count: usize, rng: &mut impl Rng) -> Vec<Vec<Vertex>> {
    let natural: Vec<Vertex> = (0..n).collect();
    let mut shuffled = natural.clone();
    shuffled.shuffle(rng);
    let reversed = natural.iter().rev().copied().collect();
    [natural, reversed, shuffled].into_iter().take(count).collect()
}

fn compile_order(g: &Graph, order: &[Vertex]) -> Result<Nfbdd> {
    nfbdd_compile(&cnf_from_graph(g)?, order)
}

fn suite_graphs(cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut rec = Recorder::new("graphs");
    let graphs = connected_graphs_up_to(cfg.max_n);

    let fails = graphs
        .iter()
        .filter(|g| cnf_from_graph(g).map(|c| primal_graph(&c)).as_ref() != Ok(*g))
        .map(|g| format!("{g:?}"))
        .collect();
    rec.check("round-trip", graphs.len(), fails);

    let mut fails = Vec::new();
    for g in graphs.iter().filter(|g| g.n() <= cfg.cap_vars.min(12)) {
        let cnf = cnf_from_graph(g)?;
        let sat = satisfying_masks(&cnf, cfg.cap_vars)?;
        for &m in &sat {
            for v in (0..g.n()).filter(|&v| m >> v & 1 == 0) {
                if !cnf.is_satisfied_by_mask(m | 1 << v) {
                    fails.push(format!("{g:?} mask {m:#b} flip {v}"));
                }
            }
        }
    }
    rec.check("monotone", graphs.len(), fails);

    // every one-end selection from a distant matching is a DIS
    let mut fails = Vec::new();
    let mut count = 0;
    for g in &graphs {
        for mask in 1..(1u64 << g.n()) - 1 {
            let m = cut_distant_matching(g, &PrefixPartition::from_mask(g.n(), mask), DEFAULT_CROSS_EDGE_CAP)?;
            for pick in 0..1u32 << m.len() {
                let sel: Vec<Vertex> = m
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| if pick >> i & 1 == 1 { v } else { u })
                    .collect();
                count += 1;
                if !is_dis(g, &sel)? {
                    fails.push(format!("{g:?} selection {sel:?}"));
                }
            }
        }
    }
    rec.check("distant-selection", count, fails);
    Ok(rec.out)
}

fn suite_widths(cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut rec = Recorder::new("widths");
    let cap = cfg.cap_subset;
    let mut fails = Vec::new();
    for n in 4..=6 {
        let k = Graph::complete(n);
        let (mw, dmw) = (mw_exact(&k, cap)?.value, dmw_exact(&k, cap, DEFAULT_CROSS_EDGE_CAP)?.value);
        if mw != n / 2 || dmw != 1 {
            fails.push(format!("K_{n}: mw={mw} dmw={dmw}"));
        }
    }
    let c8 = Graph::cycle(8);
    let (mw, dmw) = (mw_exact(&c8, cap)?.value, dmw_exact(&c8, cap, DEFAULT_CROSS_EDGE_CAP)?.value);
    if (mw, dmw) != (2, 2) {
        fails.push(format!("C_8: mw={mw} dmw={dmw}"));
    }
    rec.check("ground-truth", 4, fails);

    let mut graphs = connected_graphs_up_to(cfg.max_n);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let g = random_bounded_degree(&mut rng, n, 5, 0.5);
        if g.isolated_vertices().next().is_none() {
            graphs.push(g);
        }
    }
    let mut fails = Vec::new();
    for g in &graphs {
        let mw = mw_exact(g, cap)?.value;
        let dmw = dmw_exact(g, cap, DEFAULT_CROSS_EDGE_CAP)?.value;
        if dmw * distant_extraction_divisor(g.max_degree()) < mw {
            fails.push(format!("{g:?}: mw={mw} dmw={dmw}"));
        }
    }
    rec.check("dmw-vs-mw", graphs.len(), fails);

    let mut fails = Vec::new();
    for r in 1..=2 {
        let g = tree_product(&complete_binary_tree(r), &Graph::complete(2))?;
        let mw = mw_exact(&g, cap)?.value as i64;
        let bound = mw_structural_lower_bound(r, 1)?;
        if num_rational::Ratio::from_integer(mw) < bound {
            fails.push(format!("T_{r}(K_2): mw={mw} < {bound}"));
        }
    }
    rec.check("structural-bound", 2, fails);
    Ok(rec.out)
}

fn suite_family(cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut rec = Recorder::new("family");
    let mut fails = Vec::new();
    let mut count = 0;
    for (k, rs) in [(6u64, 1..=3u32), (10, 1..=3), (50, 1..=2)] {
        for r in rs {
            count += 1;
            let (g, params) = hard_family_instance(k, r, true)?;
            let t = complete_binary_tree(r);
            let td = canonical_tree_decomposition(&t, &Graph::path(params.path_len as usize));
            let report = validate_tree_decomposition(&g, &td);
            if g.max_degree() > 5 {
                fails.push(format!("k={k} r={r}: max degree {}", g.max_degree()));
            }
            if !report.is_valid() || report.width > params.treewidth_bound() as isize {
                fails.push(format!("k={k} r={r}: decomposition width {} {:?}", report.width, report.violations));
            }
            if g.n() as u128 != params.n() {
                fails.push(format!("k={k} r={r}: n={} expected {}", g.n(), params.n()));
            }
        }
    }
    rec.check("structure", count, fails);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut fails = Vec::new();
    let mut count = 0;
    for (r, h, p) in [(2u32, Graph::path(4), 2usize), (3, Graph::complete(2), 1)] {
        let t = complete_binary_tree(r);
        let g = tree_product(&t, &h)?;
        while count < 500 * (r as usize - 1) {
            let member: Vec<bool> = (0..g.n()).map(|_| rng.gen_bool(0.5)).collect();
            let part = PrefixPartition::from_membership(member);
            let sizes = (part.prefix().len(), part.suffix().len());
            if sizes.0 < p * p || sizes.1 < p * p {
                continue;
            }
            count += 1;
            let m = cross_matching_finder(&t, &h, &part, p)?;
            let crossing = m.edges().iter().all(|&(u, v)| part.in_prefix(u) != part.in_prefix(v));
            if m.len() < p || m.check_in(&g).is_err() || !crossing {
                fails.push(format!("r={r} partition {:?}", part.prefix()));
            }
        }
    }
    rec.check("cross-matching", count, fails);
    Ok(rec.out)
}

fn suite_weights(cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    use num_rational::BigRational;
    use num_traits::One;

    let mut rec = Recorder::new("weights");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut diagrams = Vec::new();
    for g in connected_graphs_up_to(cfg.max_n) {
        for order in sweep_orders(g.n(), cfg.orders.clamp(1, 3), &mut rng) {
            let y = compile_order(&g, &order)?;
            diagrams.push((g.clone(), y));
        }
    }

    let mut fails = Vec::new();
    for (g, y) in &diagrams {
        let float = path_weights::<f64>(y);
        if let Some(a) = float.iter().position(|w| (w - 1.0).abs() > 1e-12) {
            fails.push(format!("{g:?} node {a}: {}", float[a]));
        }
        if cfg.exact && !path_weights::<BigRational>(y).iter().all(One::is_one) {
            fails.push(format!("{g:?}: exact weight differs from 1"));
        }
    }
    rec.check("onebound", diagrams.len(), fails);

    // the covered table obeys w((a,a') + P) = w(a,a') w(P) edge by edge
    let mut fails = Vec::new();
    for (g, y) in &diagrams {
        let s: Vec<Vertex> = (0..g.n().min(2)).collect();
        let table = covered_table::<f64>(y, &s);
        for a in 0..y.num_nodes() {
            if *y.node(a) == NfbddNode::Leaf {
                continue;
            }
            let w = if y.out_degree(a) == 2 { 0.5 } else { 1.0 };
            let mut sum = 0.0;
            for (lit, h) in y.out_edges(a) {
                let i = s.iter().position(|&v| v == lit.var);
                sum += match i {
                    Some(i) if lit.positive => w * table[h][3 & !(1 << i)],
                    Some(_) => 0.0,
                    None => w * table[h][3],
                };
            }
            if (sum - table[a][3]).abs() > 1e-12 {
                fails.push(format!("{g:?} node {a}"));
            }
        }
    }
    rec.check("pathincrease", diagrams.len(), fails);

    let mut fails = Vec::new();
    let mut checks = 0;
    for (g, y) in &diagrams {
        let report = verify_deepcover(y, g, 3, cfg.exact)?;
        checks += report.checks;
        for v in &report.violations {
            fails.push(format!("{g:?} node {} B={:?}: {} > {}", v.node, v.b, v.covered, v.bound));
        }
        fails.extend(report.side_failures.iter().map(|s| format!("{g:?}: {s}")));
    }
    rec.check("deepcover", checks, fails);
    Ok(rec.out)
}

fn suite_uniformize(cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut rec = Recorder::new("uniformize");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut fails = Vec::new();
    for i in 0..cfg.random_programs {
        let shape = RandomBpShape {
            num_vars: rng.gen_range(1..=8),
            num_nodes: rng.gen_range(2..=12),
            extra_edges: rng.gen_range(0..=8),
            label_prob: rng.gen_range(0.3..=1.0),
        };
        let z = random_nrobp(&mut rng, shape);
        let u = uniformize(&z)?;
        let n = z.num_vars();
        if !validate_nrobp(&u).is_valid() {
            fails.push(format!("program {i}: output is not a valid NROBP"));
        } else if !is_uniform(&u)? {
            fails.push(format!("program {i}: output is not uniform"));
        } else if !bp_equivalence(&z, &u, cfg.cap_vars)? {
            fails.push(format!("program {i}: function changed"));
        } else if u.size() > (2 * n + 1) * z.size() {
            fails.push(format!("program {i}: size {} exceeds (2n+1) * {}", u.size(), z.size()));
        }
    }
    rec.check("equivalence-and-size", cfg.random_programs, fails);
    Ok(rec.out)
}

fn suite_cover(cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut rec = Recorder::new("cover");
    let mut fails = Vec::new();
    let mut count = 0;
    for g in connected_graphs_up_to(cfg.max_n) {
        let x = g.max_degree();
        for t in 0..=3 {
            match min_dis_cover(&g, t) {
                Ok(c) => {
                    count += 1;
                    if !coverlb_holds(c.q, x, t) {
                        fails.push(format!("{g:?} t={t}: q={}", c.q));
                    }
                }
                Err(Error::NoDis(_) | Error::Uncoverable(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    rec.check("coverlb", count, fails);
    Ok(rec.out)
}

fn suite_certificate(cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut rec = Recorder::new("certificate");
    let mut fails = Vec::new();
    let graphs = connected_graphs_up_to(cfg.max_n);
    for g in &graphs {
        let y = compile_order(g, &(0..g.n()).collect::<Vec<_>>())?;
        match extract_cut_cover(y.as_nrobp(), g, DEFAULT_PATH_CAP) {
            Ok(cert) => {
                let report = verify_certificate(y.as_nrobp(), g, &cert, cfg.cap_vars)?;
                if !report.passed() {
                    fails.push(format!("{g:?}: {report:?}"));
                }
            }
            Err(e) => fails.push(format!("{g:?}: {e}")),
        }
    }
    rec.check("cut-cover", graphs.len(), fails);
    Ok(rec.out)
}

/// Variable order used by the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderStrategy {
    /// Copy-major vertex order `0..n`.
    Natural,
    /// Exhaustive best order when within the variable cap, natural otherwise.
    Best,
    /// Seeded random order.
    Random,
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub k: u64,
    pub r_min: u32,
    pub r_max: u32,
    pub order: OrderStrategy,
    /// Variable cap for the best-order search.
    pub cap_vars: usize,
    /// Vertex cap for the dmw subset DP.
    pub cap_subset: usize,
    /// Variable cap for the certificate (truth tables and paths).
    pub cap_certificate: usize,
    pub seed: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            k: 6,
            r_min: 1,
            r_max: 5,
            order: OrderStrategy::Natural,
            cap_vars: 12,
            cap_subset: 22,
            cap_certificate: 16,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub k: u64,
    pub r: u32,
    pub n: usize,
    pub edges: usize,
    pub nodes: usize,
    pub best_edges: Option<usize>,
    pub dmw: Option<usize>,
    pub q: Option<usize>,
    /// `2^(dmw / a_5)`.
    pub lb: Option<f64>,
}

pub const CSV_HEADER: &str = "k,r,n,edges,nodes,best_edges,dmw,q,lb";

/// Compiles each family member for `r` in range and fills every column
/// whose computation fits its cap; the rest are left empty.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    let a5 = constants(5)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rows = Vec::new();
    for r in cfg.r_min..=cfg.r_max {
        let (g, _) = hard_family_instance(cfg.k, r, true)?;
        let cnf = cnf_from_graph(&g)?;
        let n = g.n();
        let best = (n <= cfg.cap_vars).then(|| best_order_size(&cnf, cfg.cap_vars)).transpose()?;
        let order: Vec<usize> = match (cfg.order, &best) {
            (OrderStrategy::Best, Some(b)) => b.order.clone(),
            (OrderStrategy::Random, _) => {
                let mut o: Vec<usize> = (0..n).collect();
                o.shuffle(&mut rng);
                o
            }
            _ => (0..n).collect(),
        };
        let y = nfbdd_compile(&cnf, &order)?;
        let dmw = (n <= cfg.cap_subset)
            .then(|| dmw_exact(&g, cfg.cap_subset, DEFAULT_CROSS_EDGE_CAP))
            .transpose()?
            .map(|w| w.value);
        let q = if dmw.is_some() && n <= cfg.cap_certificate {
            Some(extract_cut_cover(y.as_nrobp(), &g, DEFAULT_PATH_CAP)?.q())
        } else {
            None
        };
        rows.push(ExperimentRow {
            k: cfg.k,
            r,
            n,
            edges: y.size(),
            nodes: y.num_nodes(),
            best_edges: best.map(|b| b.edges),
            dmw,
            q,
            lb: dmw.map(|d| a5.bound(d)),
        });
    }
    rows.sort_by_key(|row| (row.k, row.r));
    Ok(rows)
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn rows_to_csv(rows: &[ExperimentRow]) -> String {
    let mut s = format!("{CSV_HEADER}\n");
    for row in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            row.k,
            row.r,
            row.n,
            row.edges,
            row.nodes,
            cell(row.best_edges),
            cell(row.dmw),
            cell(row.q),
            cell(row.lb.map(|x| format_sig(x, 12)))
        );
    }
    s
}

/// Problems with a sweep: sizes shrinking as `r` grows at fixed `k`, or a
/// lower bound above the node count.
pub fn growth_problems(rows: &[ExperimentRow]) -> Vec<String> {
    let mut out = Vec::new();
    for w in rows.windows(2) {
        if w[0].k == w[1].k && (w[1].edges < w[0].edges || w[1].nodes < w[0].nodes) {
            out.push(format!("k={} size drops from r={} to r={}", w[0].k, w[0].r, w[1].r));
        }
    }
    for row in rows {
        if let Some(lb) = row.lb {
            if lb > row.nodes as f64 {
                out.push(format!("k={} r={}: lb {lb} exceeds {} nodes", row.k, row.r, row.nodes));
            }
        }
    }
    out
}

/// Text files describing one family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenBundle {
    pub params: FamilyParams,
    pub meta: String,
    /// `(graph, cnf, tree decomposition)`; absent when the instance is too large to build.
    pub files: Option<(String, String, String)>,
}

pub fn gen_bundle(k: u64, r: u32, allow_small_r: bool) -> Result<GenBundle> {
    let params = FamilyParams::new(k, r, allow_small_r)?;
    let mut meta = format!(
        "{params}\nthreshold={} meets_threshold={} treewidth_bound={}\n",
        FamilyParams::height_threshold(k),
        params.meets_height_threshold(),
        params.treewidth_bound()
    );
    let files = match hard_family_instance(k, r, allow_small_r) {
        Ok((g, _)) => {
            let td = canonical_tree_decomposition(&complete_binary_tree(r), &Graph::path(params.path_len as usize));
            let _ = writeln!(
                meta,
                "materialized=true edges={} max_degree={} td_width={}",
                g.num_edges(),
                g.max_degree(),
                td.width()
            );
            Some((write_graph(&g), write_cnf(&cnf_from_graph(&g)?), write_td(&td, g.n())))
        }
        Err(Error::CapExceeded { .. }) => {
            meta.push_str("materialized=false\n");
            None
        }
        Err(e) => return Err(e),
    };
    Ok(GenBundle { params, meta, files })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteConfig {
        SuiteConfig {
            max_n: 5,
            orders: 2,
            random_programs: 60,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn every_suite_passes_on_small_graphs() {
        for name in SUITES {
            for outcome in run_suite(name, &quick()).unwrap() {
                assert!(outcome.passed, "{outcome}");
            }
        }
    }

    #[test]
    fn unknown_suite_lists_the_suites() {
        let err = run_suite("nope", &quick()).unwrap_err().to_string();
        assert!(err.contains("graphs, widths"));
    }

    #[test]
    fn sweep_is_reproducible_and_grows() {
        let cfg = ExperimentConfig {
            r_max: 3,
            order: OrderStrategy::Random,
            ..ExperimentConfig::default()
        };
        let a = rows_to_csv(&run_experiment(&cfg).unwrap());
        let b = rows_to_csv(&run_experiment(&cfg).unwrap());
        assert_eq!(a, b);
        let natural = run_experiment(&ExperimentConfig {
            r_max: 3,
            ..ExperimentConfig::default()
        })
        .unwrap();
        assert!(growth_problems(&natural).is_empty());
        let csv = rows_to_csv(&natural);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(&first[..3], &["6", "1", "6"]);
        assert!(first[5] != "-" && first[6] != "-" && first[7] != "-");
        let third: Vec<&str> = lines.nth(1).unwrap().split(',').collect();
        assert_eq!((third[5], third[6], third[8]), ("-", "-", "-"));
    }

    #[test]
    fn bundles() {
        let b = gen_bundle(6, 2, true).unwrap();
        assert!(b.meta.starts_with("k=6 y=3 r=2 p=1 path_len=2 n=14\n"));
        let (graph, cnf, td) = b.files.unwrap();
        assert!(graph.starts_with("p edge 14 "));
        assert!(cnf.starts_with("p cnf 14 "));
        assert!(td.starts_with("s td 7 4 14\n"));

        let big = gen_bundle(50, 30, false).unwrap();
        assert!(big.files.is_none());
        assert!(big.meta.contains("materialized=false"));
        assert_eq!(big.params.n(), ((1u128 << 31) - 1) * 24);
        assert!(matches!(gen_bundle(6, 1, false), Err(Error::HeightBelowThreshold { .. })));
    }
}
