//! Weighted path counting on NFBDDs and cut-cover certificates.
//!
//! Edge weights are `1/2` on nodes with two out-edges and `1` otherwise, so
//! the paths from any node to the leaf weigh `1` in total. A set `S` of
//! vertices covers a path when every variable of `S` is read positively on
//! it. For a distant independent set `B` of unread, still-free vertices the
//! covered weight below `a` is at most `rw_a(B)`; at the root this bounds the
//! number of size-`t` DISes needed to cover all satisfying assignments.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bp::{is_uniform, root_leaf_paths, Nfbdd, NodeId, Nrobp};
use crate::cnf::{cnf_from_graph, satisfying_masks, Literal, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};
use crate::graph::{is_dis, Graph, Matching, Vertex};
use crate::width::{cut_distant_matching, distant_extraction_divisor, dmw_exact, PrefixPartition, DEFAULT_CROSS_EDGE_CAP, DEFAULT_SUBSET_CAP};

/// Default cap on `|S|` for [`covered_weight`].
pub const DEFAULT_COVER_SUBSET_CAP: usize = 10;
/// Default cap on enumerated root-leaf paths for [`extract_cut_cover`].
pub const DEFAULT_PATH_CAP: usize = 1 << 16;
/// Slack for floating-point weight comparisons.
pub const FLOAT_SLACK: f64 = 1e-9;

/// Per-node view of the graph at an NFBDD node `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeContext {
    pub node: NodeId,
    /// Vertices whose variables are not read on paths from the root to `a`.
    pub vert_a: FixedBitSet,
    /// Vertices that may still be read negatively below `a`.
    pub free_a: FixedBitSet,
    /// Number of neighbours of each vertex inside `vert_a`.
    pub ld_a: Vec<usize>,
}

fn check_universe(y: &Nfbdd, g: &Graph) -> Result<()> {
    if y.num_vars() != g.n() {
        return Err(Error::Precondition(format!(
            "diagram has {} variables but the graph has {} vertices",
            y.num_vars(),
            g.n()
        )));
    }
    Ok(())
}

/// Contexts for every node, each taken along the first root path found in
/// topological order. `Free_a` comes from the negative literals of that path:
/// unread vertices with no neighbour read negatively.
pub fn node_contexts(y: &Nfbdd, g: &Graph) -> Result<Vec<NodeContext>> {
    check_universe(y, g)?;
    let n = g.n();
    // (read vars, negatively read vars) along the chosen path
    let mut along: Vec<Option<(FixedBitSet, FixedBitSet)>> = vec![None; y.num_nodes()];
    along[y.root()] = Some((FixedBitSet::with_capacity(n), FixedBitSet::with_capacity(n)));
    for a in y.topological_order() {
        let Some((read, neg)) = along[a].clone() else {
            return Err(Error::Unreachable(a));
        };
        for (lit, h) in y.out_edges(a) {
            if along[h].is_none() {
                let (mut r, mut ng) = (read.clone(), neg.clone());
                r.insert(lit.var);
                if !lit.positive {
                    ng.insert(lit.var);
                }
                along[h] = Some((r, ng));
            }
        }
    }
    Ok(along
        .into_iter()
        .enumerate()
        .map(|(a, state)| {
            let (read, neg) = state.expect("every node was reached");
            context_from_path(g, a, &read, &neg)
        })
        .collect())
}

fn context_from_path(g: &Graph, node: NodeId, read: &FixedBitSet, neg: &FixedBitSet) -> NodeContext {
    let n = g.n();
    let mut vert_a = FixedBitSet::with_capacity(n);
    vert_a.insert_range(..);
    vert_a.difference_with(read);
    let mut free_a = vert_a.clone();
    for u in neg.ones() {
        for &w in g.neighbors(u) {
            free_a.set(w, false);
        }
    }
    let ld_a = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| vert_a.contains(w)).count())
        .collect();
    NodeContext {
        node,
        vert_a,
        free_a,
        ld_a,
    }
}

pub fn node_context(y: &Nfbdd, g: &Graph, a: NodeId) -> Result<NodeContext> {
    if a >= y.num_nodes() {
        return Err(Error::Unreachable(a));
    }
    Ok(node_contexts(y, g)?.swap_remove(a))
}

/// `Free_a` straight from its definition: vertices read negatively on some
/// path from `a` to the leaf.
pub fn free_sets_direct(y: &Nfbdd) -> Vec<FixedBitSet> {
    let mut below = vec![FixedBitSet::with_capacity(y.num_vars()); y.num_nodes()];
    for a in y.topological_order().into_iter().rev() {
        let mut s = FixedBitSet::with_capacity(y.num_vars());
        for (lit, h) in y.out_edges(a) {
            s.union_with(&below[h]);
            if !lit.positive {
                s.insert(lit.var);
            }
        }
        below[a] = s;
    }
    below
}

/// Arithmetic needed for path weights, in floating point or exactly.
pub trait Weight: Clone {
    fn nothing() -> Self;
    fn unit() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn half(&self) -> Self;
}

impl Weight for f64 {
    fn nothing() -> Self {
        0.0
    }
    fn unit() -> Self {
        1.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn half(&self) -> Self {
        self * 0.5
    }
}

impl Weight for BigRational {
    fn nothing() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn half(&self) -> Self {
        self / BigRational::from_integer(BigInt::from(2))
    }
}

fn edge_weighted<W: Weight>(y: &Nfbdd, a: NodeId, w: &W) -> W {
    if y.out_degree(a) == 2 {
        w.half()
    } else {
        w.clone()
    }
}

/// `w(P_a)` for every node `a`, accumulated backwards from the leaf.
pub fn path_weights<W: Weight>(y: &Nfbdd) -> Vec<W> {
    let mut total = vec![W::nothing(); y.num_nodes()];
    for a in y.topological_order().into_iter().rev() {
        if a == y.leaf() {
            total[a] = W::unit();
            continue;
        }
        let mut acc = W::nothing();
        for (_, h) in y.out_edges(a) {
            acc = acc.add(&edge_weighted(y, a, &total[h]));
        }
        total[a] = acc;
    }
    total
}

pub fn path_weight_total(y: &Nfbdd, a: NodeId) -> f64 {
    path_weights::<f64>(y)[a]
}

/// `w(P_a^S)` for every node `a` and every subset of `s` (bit `i` of the
/// column index stands for `s[i]`).
pub fn covered_table<W: Weight>(y: &Nfbdd, s: &[Vertex]) -> Vec<Vec<W>> {
    let width = 1usize << s.len();
    let bit_of = |var: usize| s.iter().position(|&v| v == var);
    let mut table = vec![vec![W::nothing(); width]; y.num_nodes()];
    for a in y.topological_order().into_iter().rev() {
        if a == y.leaf() {
            table[a][0] = W::unit();
            continue;
        }
        let mut row = vec![W::nothing(); width];
        for (lit, h) in y.out_edges(a) {
            let bit = bit_of(lit.var);
            for (m, slot) in row.iter_mut().enumerate() {
                let next = match bit {
                    Some(i) if lit.positive => m & !(1 << i),
                    // a negative read of a still-required vertex can never be undone
                    Some(i) if m >> i & 1 == 1 => continue,
                    _ => m,
                };
                *slot = slot.add(&edge_weighted(y, a, &table[h][next]));
            }
        }
        table[a] = row;
    }
    table
}

fn check_subset(y: &Nfbdd, s: &[Vertex], cap: usize) -> Result<()> {
    if s.len() > cap.min(20) {
        return Err(Error::CapExceeded {
            what: "covered weight (subset size)",
            needed: s.len(),
            cap: cap.min(20),
        });
    }
    for &v in s {
        if v >= y.num_vars() {
            return Err(Error::VariableOutOfRange {
                var: v,
                num_vars: y.num_vars(),
            });
        }
    }
    Ok(())
}

fn dedup(s: &[Vertex]) -> Vec<Vertex> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// `w(P_a^S)`: weight of the paths from `a` to the leaf on which every vertex of `s` is read positively.
pub fn covered_weight(y: &Nfbdd, a: NodeId, s: &[Vertex], cap: usize) -> Result<f64> {
    let s = dedup(s);
    check_subset(y, &s, cap)?;
    Ok(covered_table::<f64>(y, &s)[a][(1 << s.len()) - 1])
}

pub fn covered_weight_exact(y: &Nfbdd, a: NodeId, s: &[Vertex], cap: usize) -> Result<BigRational> {
    let s = dedup(s);
    check_subset(y, &s, cap)?;
    Ok(covered_table::<BigRational>(y, &s)[a][(1 << s.len()) - 1].clone())
}

/// `1 - 2^-(ld+1)` as a float.
fn rw_factor(ld: usize) -> f64 {
    1.0 - 0.5f64.powi(ld as i32 + 1)
}

fn rw_factor_exact(ld: usize) -> BigRational {
    let denom = BigInt::one() << (ld + 1);
    BigRational::new(&denom - BigInt::one(), denom)
}

/// `rw_a(B) = prod over v in B of (1 - 2^-(ld_a(v)+1))`.
pub fn relative_weight(ctx: &NodeContext, b: &[Vertex]) -> f64 {
    b.iter().map(|&v| rw_factor(ctx.ld_a[v])).product()
}

pub fn relative_weight_exact(ctx: &NodeContext, b: &[Vertex]) -> BigRational {
    b.iter()
        .fold(BigRational::one(), |acc, &v| acc * rw_factor_exact(ctx.ld_a[v]))
}

/// All distant independent sets of size exactly `t`, lexicographically.
pub fn distant_independent_sets(g: &Graph, t: usize) -> Vec<Vec<Vertex>> {
    fn grow(g: &Graph, t: usize, from: Vertex, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for v in from..g.n() {
            if cur.iter().all(|&u| !g.are_close(u, v)) {
                cur.push(v);
                grow(g, t, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(g, t, 0, &mut Vec::new(), &mut out);
    out
}

fn is_subset(b: &[Vertex], set: &FixedBitSet) -> bool {
    b.iter().all(|&v| set.contains(v))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeepcoverViolation {
    pub node: NodeId,
    pub b: Vec<Vertex>,
    pub covered: f64,
    pub bound: f64,
}

/// Outcome of [`verify_deepcover`]. Side checks cover the `Free_a` formula,
/// how free sets and relative weights change along an edge, and the total
/// weight at each node.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DeepcoverReport {
    pub checks: usize,
    pub violations: Vec<DeepcoverViolation>,
    pub side_failures: Vec<String>,
}

impl DeepcoverReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.side_failures.is_empty()
    }
}

/// Checks `w(P_a^B) <= rw_a(B)` for every node `a` and every DIS
/// `B ⊆ Free_a` with `|B| <= max_size`.
pub fn verify_deepcover(y: &Nfbdd, g: &Graph, max_size: usize, exact: bool) -> Result<DeepcoverReport> {
    let ctxs = node_contexts(y, g)?;
    let mut report = DeepcoverReport::default();

    let direct = free_sets_direct(y);
    for (a, ctx) in ctxs.iter().enumerate() {
        if ctx.free_a != direct[a] {
            report
                .side_failures
                .push(format!("free set at node {a} differs from its definition"));
        }
    }
    if exact {
        let w = path_weights::<BigRational>(y);
        if let Some(a) = w.iter().position(|x| !x.is_one()) {
            report.side_failures.push(format!("total path weight at node {a} is {}", w[a]));
        }
    } else {
        let w = path_weights::<f64>(y);
        if let Some(a) = w.iter().position(|x| (x - 1.0).abs() > 1e-12) {
            report.side_failures.push(format!("total path weight at node {a} is {}", w[a]));
        }
    }

    let dises: Vec<Vec<Vertex>> = (0..=max_size)
        .flat_map(|t| distant_independent_sets(g, t))
        .collect();
    for b in &dises {
        let holders: Vec<NodeId> = (0..y.num_nodes())
            .filter(|&a| is_subset(b, &ctxs[a].free_a))
            .collect();
        if holders.is_empty() {
            continue;
        }
        let full = (1usize << b.len()) - 1;
        if exact {
            let table = covered_table::<BigRational>(y, b);
            for &a in &holders {
                report.checks += 1;
                let bound = relative_weight_exact(&ctxs[a], b);
                if table[a][full] > bound {
                    report.violations.push(DeepcoverViolation {
                        node: a,
                        b: b.clone(),
                        covered: ratio_to_f64(&table[a][full]),
                        bound: ratio_to_f64(&bound),
                    });
                }
            }
        } else {
            let table = covered_table::<f64>(y, b);
            for &a in &holders {
                report.checks += 1;
                let bound = relative_weight(&ctxs[a], b);
                if table[a][full] > bound + FLOAT_SLACK {
                    report.violations.push(DeepcoverViolation {
                        node: a,
                        b: b.clone(),
                        covered: table[a][full],
                        bound,
                    });
                }
            }
        }
        for &a in &holders {
            edge_side_checks(y, g, &ctxs, a, b, &mut report.side_failures);
        }
    }
    Ok(report)
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Free-set and relative-weight transitions along each out-edge of `a`.
fn edge_side_checks(y: &Nfbdd, g: &Graph, ctxs: &[NodeContext], a: NodeId, b: &[Vertex], out: &mut Vec<String>) {
    let Some(v) = y.var(a) else { return };
    let without = |x: Vertex| -> Vec<Vertex> { b.iter().copied().filter(|&u| u != x).collect() };
    let neighbour_in_b = b.iter().copied().find(|&w| g.has_edge(v, w));
    let ctx = &ctxs[a];
    let rw = relative_weight(ctx, b);
    for (lit, h) in y.out_edges(a) {
        let next = &ctxs[h];
        let (kept, rule) = if b.contains(&v) {
            (without(v), "read vertex dropped")
        } else if let (Some(w), false) = (neighbour_in_b, lit.positive) {
            (without(w), "negated neighbour dropped")
        } else {
            (b.to_vec(), "unchanged")
        };
        if !is_subset(&kept, &next.free_a) {
            out.push(format!("free set transition ({rule}) fails on edge {a}->{h} for {b:?}"));
        }

        let close = |x: f64, y: f64| (x - y).abs() <= 1e-12 * x.abs().max(1.0);
        if b.contains(&v) {
            let expect = rw / rw_factor(ctx.ld_a[v]);
            if !close(relative_weight(next, &without(v)), expect) {
                out.push(format!("relative weight after reading {v} at node {a} for {b:?}"));
            }
        } else if let Some(w) = neighbour_in_b {
            let ld = ctx.ld_a[w];
            let drop = rw / rw_factor(ld);
            let shrink = rw * (1.0 - 0.5f64.powi(ld as i32)) / rw_factor(ld);
            if !close(relative_weight(next, &without(w)), drop) || !close(relative_weight(next, b), shrink) {
                out.push(format!("relative weight after reading neighbour {v} at node {a} for {b:?}"));
            }
        } else if !close(relative_weight(next, b), rw) {
            out.push(format!("relative weight changed on edge {a}->{h} for {b:?}"));
        }
    }
}

/// Smallest family of size-`t` DISes covering every satisfying assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisCover {
    pub q: usize,
    pub cover: Vec<Vec<Vertex>>,
}

/// Exact minimum DIS cover by branch and bound over the DIS/assignment incidence.
pub fn min_dis_cover(g: &Graph, t: usize) -> Result<DisCover> {
    let cnf = cnf_from_graph(g)?;
    let masks = satisfying_masks(&cnf, DEFAULT_ENUM_CAP)?;
    let dises = distant_independent_sets(g, t);
    if dises.is_empty() {
        return Err(Error::NoDis(t));
    }
    let sets: Vec<FixedBitSet> = dises
        .iter()
        .map(|b| {
            let need = b.iter().fold(0u64, |m, &v| m | 1 << v);
            let mut s = FixedBitSet::with_capacity(masks.len());
            for (i, &m) in masks.iter().enumerate() {
                if m & need == need {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); masks.len()];
    for (j, s) in sets.iter().enumerate() {
        for i in s.ones() {
            holders[i].push(j);
        }
    }
    if holders.iter().any(Vec::is_empty) {
        return Err(Error::Uncoverable(t));
    }
    let largest = sets.iter().map(|s| s.count_ones(..)).max().unwrap_or(1).max(1);

    let mut uncovered = FixedBitSet::with_capacity(masks.len());
    uncovered.insert_range(..);
    let mut best = greedy_cover(&sets, uncovered.clone());
    let mut chosen = Vec::new();
    branch(&sets, &holders, largest, &uncovered, &mut chosen, &mut best);
    Ok(DisCover {
        q: best.len(),
        cover: best.into_iter().map(|j| dises[j].clone()).collect(),
    })
}

fn greedy_cover(sets: &[FixedBitSet], mut uncovered: FixedBitSet) -> Vec<usize> {
    let mut picked = Vec::new();
    while !uncovered.is_clear() {
        let j = (0..sets.len())
            .max_by_key(|&j| (sets[j].intersection(&uncovered).count(), std::cmp::Reverse(j)))
            .expect("at least one set");
        uncovered.difference_with(&sets[j]);
        picked.push(j);
    }
    picked.sort_unstable();
    picked
}

fn branch(
    sets: &[FixedBitSet],
    holders: &[Vec<usize>],
    largest: usize,
    uncovered: &FixedBitSet,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    let left = uncovered.count_ones(..);
    if left == 0 {
        if chosen.len() < best.len() {
            let mut c = chosen.clone();
            c.sort_unstable();
            *best = c;
        }
        return;
    }
    if chosen.len() + left.div_ceil(largest) >= best.len() {
        return;
    }
    let pivot = uncovered
        .ones()
        .min_by_key(|&i| holders[i].len())
        .expect("nonempty");
    for &j in &holders[pivot] {
        let mut rest = uncovered.clone();
        rest.difference_with(&sets[j]);
        chosen.push(j);
        branch(sets, holders, largest, &rest, chosen, best);
        chosen.pop();
    }
}

/// Exact test of `q >= (1 / (1 - 2^-(x+1)))^t`, i.e. `q (2^(x+1) - 1)^t >= 2^((x+1) t)`.
pub fn coverlb_holds(q: usize, x: usize, t: usize) -> bool {
    let base = BigUint::one() << (x + 1);
    let lhs = BigUint::from(q) * (&base - BigUint::one()).pow(t as u32);
    let rhs = base.pow(t as u32);
    lhs >= rhs
}

/// `a_x` and `1 / (1 - 2^-(x+1)) = 2^(1/a_x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerBoundConstants {
    pub x: usize,
    pub a_x: f64,
    pub cover_base: f64,
}

impl LowerBoundConstants {
    /// `2^(t / a_x)`.
    pub fn bound(&self, t: usize) -> f64 {
        (t as f64 / self.a_x).exp2()
    }
}

pub fn constants(x: usize) -> Result<LowerBoundConstants> {
    if x == 0 {
        return Err(Error::Precondition("max degree must be at least 1".into()));
    }
    let p = 0.5f64.powi(x as i32 + 1);
    Ok(LowerBoundConstants {
        x,
        a_x: -1.0 / (-p).ln_1p() * std::f64::consts::LN_2,
        cover_base: 1.0 / (1.0 - p),
    })
}

/// Factor by which the matching width of the hard family exceeds `log(n) k`.
pub const MW_FACTOR: usize = 32;

/// Distant-matching extraction divisor at max degree 5.
pub fn degree5_distant_factor() -> usize {
    distant_extraction_divisor(5)
}

/// `c = a_5 * 32 * 61`, the exponent divisor of the size bound for the hard family.
pub fn size_exponent_divisor() -> f64 {
    constants(5).expect("x = 5").a_x * MW_FACTOR as f64 * degree5_distant_factor() as f64
}

/// A root-leaf node cut with one DIS per cut node covering every path through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCoverCertificate {
    pub dmw: usize,
    pub max_degree: usize,
    pub cut_nodes: Vec<NodeId>,
    pub dis_sets: Vec<Vec<Vertex>>,
    pub matchings: Vec<Matching>,
}

impl CutCoverCertificate {
    pub fn q(&self) -> usize {
        self.cut_nodes.len()
    }

    /// `2^(dmw / a_x)`.
    pub fn bound(&self) -> f64 {
        constants(self.max_degree.max(1))
            .expect("positive degree")
            .bound(self.dmw)
    }
}

fn path_nodes(z: &Nrobp, path: &[usize]) -> Vec<NodeId> {
    std::iter::once(z.root())
        .chain(path.iter().map(|&e| z.edge(e).head))
        .collect()
}

/// Builds a cut-cover certificate for a uniform program `z` of `phi(g)`.
///
/// On each root-leaf path the cut node is the earliest node whose
/// read/unread split carries a distant cross matching of size `dmw(g)`. For
/// each matching edge the endpoint read positively on every root-leaf path
/// through the cut node is kept, lower id first.
pub fn extract_cut_cover(z: &Nrobp, g: &Graph, path_cap: usize) -> Result<CutCoverCertificate> {
    if z.num_vars() != g.n() {
        return Err(Error::Precondition(format!(
            "program has {} variables but the graph has {} vertices",
            z.num_vars(),
            g.n()
        )));
    }
    if !is_uniform(z)? {
        return Err(Error::NotUniform);
    }
    let dmw = dmw_exact(g, DEFAULT_SUBSET_CAP, DEFAULT_CROSS_EDGE_CAP)?.value;
    let paths = root_leaf_paths(z, path_cap)?;
    let n = g.n();

    let mut cache: HashMap<FixedBitSet, Option<Matching>> = HashMap::new();
    let mut chosen: Vec<(NodeId, Matching)> = Vec::new();
    let mut is_cut = vec![false; z.num_nodes()];
    let mut on_path: Vec<Vec<usize>> = vec![Vec::new(); z.num_nodes()];
    for (pi, path) in paths.iter().enumerate() {
        let nodes = path_nodes(z, path);
        for &u in &nodes {
            on_path[u].push(pi);
        }
        let mut read = FixedBitSet::with_capacity(n);
        let mut found = None;
        for (j, &u) in nodes.iter().enumerate() {
            if j > 0 {
                if let Some(l) = z.edge(path[j - 1]).label {
                    read.insert(l.var);
                }
            }
            let m = match cache.get(&read) {
                Some(m) => m.clone(),
                None => {
                    let part = PrefixPartition::from_membership((0..n).map(|v| read.contains(v)).collect());
                    let m = cut_distant_matching(g, &part, DEFAULT_CROSS_EDGE_CAP)?;
                    let m = (m.len() >= dmw).then(|| Matching::new(m.edges()[..dmw].iter().copied()).expect("sub-matching"));
                    cache.insert(read.clone(), m.clone());
                    m
                }
            };
            if let Some(m) = m {
                found = Some((u, m));
                break;
            }
        }
        let Some((u, m)) = found else {
            return Err(Error::Certificate(format!(
                "no split of root-leaf path {pi} carries a distant matching of size {dmw}"
            )));
        };
        if !is_cut[u] {
            is_cut[u] = true;
            chosen.push((u, m));
        }
    }
    chosen.sort_by_key(|&(u, _)| u);

    let positive_on = |pi: usize, v: Vertex| {
        paths[pi]
            .iter()
            .any(|&e| z.edge(e).label == Some(Literal::pos(v)))
    };
    let mut cert = CutCoverCertificate {
        dmw,
        max_degree: g.max_degree(),
        cut_nodes: Vec::new(),
        dis_sets: Vec::new(),
        matchings: Vec::new(),
    };
    for (u, m) in chosen {
        let mut b = Vec::with_capacity(m.len());
        for &(v1, v2) in m.edges() {
            let pick = [v1.min(v2), v1.max(v2)]
                .into_iter()
                .find(|&v| on_path[u].iter().all(|&pi| positive_on(pi, v)));
            match pick {
                Some(v) => b.push(v),
                None => {
                    return Err(Error::Certificate(format!(
                        "neither end of edge {{{v1}, {v2}}} covers all paths through node {u}"
                    )))
                }
            }
        }
        b.sort_unstable();
        cert.cut_nodes.push(u);
        cert.dis_sets.push(b);
        cert.matchings.push(m);
    }
    Ok(cert)
}

/// Independent checks of a certificate against its program and graph.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub q: usize,
    pub nodes: usize,
    pub bound: f64,
    /// Removing the cut nodes disconnects the leaf from the root.
    pub is_cut: bool,
    /// Every `B_i` is a DIS of size `dmw` picking one end per edge of `M_i`.
    pub dis_ok: bool,
    /// Every satisfying assignment of `phi(g)` is covered by some `B_i`.
    pub covers_all: bool,
    /// `q >= 2^(dmw / a_x)`, compared exactly.
    pub bound_ok: bool,
    /// `nodes >= q`.
    pub size_ok: bool,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.is_cut && self.dis_ok && self.covers_all && self.bound_ok && self.size_ok
    }
}

pub fn verify_certificate(z: &Nrobp, g: &Graph, cert: &CutCoverCertificate, enum_cap: usize) -> Result<CertificateReport> {
    let blocked: Vec<bool> = (0..z.num_nodes()).map(|u| cert.cut_nodes.contains(&u)).collect();
    let mut seen = vec![false; z.num_nodes()];
    let mut stack = vec![z.root()];
    let mut leaf_reached = false;
    while let Some(u) = stack.pop() {
        if blocked[u] || std::mem::replace(&mut seen[u], true) {
            continue;
        }
        if u == z.leaf() {
            leaf_reached = true;
            break;
        }
        stack.extend(z.out_edges(u).iter().map(|&e| z.edge(e).head));
    }

    let mut dis_ok = cert.dis_sets.len() == cert.cut_nodes.len() && cert.matchings.len() == cert.cut_nodes.len();
    for (b, m) in cert.dis_sets.iter().zip(&cert.matchings) {
        dis_ok &= b.len() == cert.dmw && m.len() == cert.dmw && is_dis(g, b)?;
        dis_ok &= m.edges().iter().all(|&(u, v)| b.contains(&u) != b.contains(&v));
    }

    let masks = satisfying_masks(&cnf_from_graph(g)?, enum_cap)?;
    let needs: Vec<u64> = cert
        .dis_sets
        .iter()
        .map(|b| b.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let covers_all = masks.iter().all(|&m| needs.iter().any(|&b| m & b == b));

    let x = g.max_degree().max(1);
    Ok(CertificateReport {
        q: cert.q(),
        nodes: z.num_nodes(),
        bound: cert.bound(),
        is_cut: !leaf_reached && !blocked[z.root()] && !blocked[z.leaf()],
        dis_ok,
        covers_all,
        bound_ok: coverlb_holds(cert.q(), x, cert.dmw),
        size_ok: z.num_nodes() >= cert.q(),
    })
}

/// Root-to-leaf node sequence of each decision in `y` for tests and diagnostics.
#[cfg(test)]
fn paths_from(y: &Nfbdd, a: NodeId) -> Vec<Vec<(NodeId, Literal)>> {
    if *y.node(a) == crate::bp::NfbddNode::Leaf {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (lit, h) in y.out_edges(a) {
        for mut rest in paths_from(y, h) {
            rest.insert(0, (a, lit));
            out.push(rest);
        }
    }
    out
}
