//! Nondeterministic read-once branching programs.
//!
//! An [`Nrobp`] is a DAG with one root and one leaf whose edges may carry a
//! literal; no directed path reads a variable twice. A root-leaf path `P`
//! accepts every total assignment extending its label set `A(P)`. Size is the
//! number of edges (parallel edges allowed).

use std::collections::{BTreeSet, BinaryHeap, VecDeque};
use std::cmp::Reverse;
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::cnf::{Assignment, Literal};
use crate::error::{Error, Result};

mod compile;
mod nfbdd;
mod uniformize;

pub use compile::{best_order_size, nfbdd_compile, BestOrder, DEFAULT_ORDER_CAP};
pub use nfbdd::{Nfbdd, NfbddNode};
pub use uniformize::uniformize;

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BpEdge {
    pub tail: NodeId,
    pub head: NodeId,
    pub label: Option<Literal>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nrobp {
    num_nodes: usize,
    num_vars: usize,
    root: NodeId,
    leaf: NodeId,
    edges: Vec<BpEdge>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl Nrobp {
    /// Builds a program after range checks only; structural rules are
    /// reported by [`validate_nrobp`].
    pub fn new(num_nodes: usize, num_vars: usize, root: NodeId, leaf: NodeId, edges: Vec<BpEdge>) -> Result<Self> {
        for node in [root, leaf] {
            if node >= num_nodes {
                return Err(Error::InvalidProgram(format!("node {node} out of range")));
            }
        }
        let mut out = vec![Vec::new(); num_nodes];
        let mut inc = vec![Vec::new(); num_nodes];
        for (i, e) in edges.iter().enumerate() {
            if e.tail >= num_nodes || e.head >= num_nodes {
                return Err(Error::InvalidProgram(format!(
                    "edge {} -> {} out of range",
                    e.tail, e.head
                )));
            }
            if let Some(l) = e.label {
                if l.var >= num_vars {
                    return Err(Error::VariableOutOfRange {
                        var: l.var,
                        num_vars,
                    });
                }
            }
            out[e.tail].push(i);
            inc[e.head].push(i);
        }
        Ok(Nrobp {
            num_nodes,
            num_vars,
            root,
            leaf,
            edges,
            out,
            inc,
        })
    }

    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn leaf(&self) -> NodeId {
        self.leaf
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[BpEdge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &BpEdge {
        &self.edges[i]
    }

    /// Indices of the edges leaving `node`.
    pub fn out_edges(&self, node: NodeId) -> &[usize] {
        &self.out[node]
    }

    pub fn in_edges(&self, node: NodeId) -> &[usize] {
        &self.inc[node]
    }

    /// Kahn's algorithm taking the lowest ready node id first; `None` on a cycle.
    pub fn topological_order(&self) -> Option<Vec<NodeId>> {
        let mut indeg: Vec<usize> = self.inc.iter().map(Vec::len).collect();
        let mut ready: BinaryHeap<Reverse<NodeId>> =
            (0..self.num_nodes).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(self.num_nodes);
        while let Some(Reverse(v)) = ready.pop() {
            order.push(v);
            for &e in &self.out[v] {
                let h = self.edges[e].head;
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    ready.push(Reverse(h));
                }
            }
        }
        (order.len() == self.num_nodes).then_some(order)
    }

    /// Renumbers nodes along [`Nrobp::topological_order`] and sorts edges.
    pub fn renumbered(&self) -> Result<Nrobp> {
        let order = self
            .topological_order()
            .ok_or_else(|| Error::InvalidProgram("cycle".into()))?;
        let mut rank = vec![0; self.num_nodes];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut edges: Vec<BpEdge> = self
            .edges
            .iter()
            .map(|e| BpEdge {
                tail: rank[e.tail],
                head: rank[e.head],
                label: e.label,
            })
            .collect();
        edges.sort_by_key(|e| (e.tail, e.head, e.label.map(|l| (l.var, !l.positive))));
        Nrobp::new(self.num_nodes, self.num_vars, rank[self.root], rank[self.leaf], edges)
    }

    /// Whether the program accepts the total assignment `mask` (bit `i` = `x_i`).
    pub fn accepts_mask(&self, order: &[NodeId], mask: u64) -> bool {
        let mut reach = vec![false; self.num_nodes];
        reach[self.root] = true;
        for &v in order {
            if !reach[v] {
                continue;
            }
            for &e in &self.out[v] {
                let edge = &self.edges[e];
                let ok = edge
                    .label
                    .is_none_or(|l| (mask >> l.var & 1 == 1) == l.positive);
                if ok {
                    reach[edge.head] = true;
                }
            }
        }
        reach[self.leaf]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BpViolation {
    Cycle,
    /// Nodes without in-edges, when they are not exactly the root.
    Sources(Vec<NodeId>),
    /// Nodes without out-edges, when they are not exactly the leaf.
    Sinks(Vec<NodeId>),
    Disconnected,
    /// A path reading `var` twice; `path` lists its edge indices in order.
    ReadTwice { var: usize, path: Vec<usize> },
}

impl fmt::Display for BpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BpViolation::Cycle => write!(f, "directed cycle"),
            BpViolation::Sources(s) => write!(f, "sources {s:?} (expected only the root)"),
            BpViolation::Sinks(s) => write!(f, "sinks {s:?} (expected only the leaf)"),
            BpViolation::Disconnected => write!(f, "underlying graph is disconnected"),
            BpViolation::ReadTwice { var, path } => {
                write!(f, "variable {var} read twice along edges {path:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BpReport {
    pub violations: Vec<BpViolation>,
}

impl BpReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_nrobp(z: &Nrobp) -> BpReport {
    let mut violations = Vec::new();
    let sources: Vec<NodeId> = (0..z.num_nodes).filter(|&v| z.inc[v].is_empty()).collect();
    if sources != [z.root] {
        violations.push(BpViolation::Sources(sources));
    }
    let sinks: Vec<NodeId> = (0..z.num_nodes).filter(|&v| z.out[v].is_empty()).collect();
    if sinks != [z.leaf] {
        violations.push(BpViolation::Sinks(sinks));
    }
    if !underlying_connected(z) {
        violations.push(BpViolation::Disconnected);
    }
    match z.topological_order() {
        None => violations.push(BpViolation::Cycle),
        Some(order) => violations.extend(read_once_violations(z, &order)),
    }
    BpReport { violations }
}

fn underlying_connected(z: &Nrobp) -> bool {
    if z.num_nodes == 0 {
        return true;
    }
    let mut seen = vec![false; z.num_nodes];
    seen[z.root] = true;
    let mut q = VecDeque::from([z.root]);
    let mut count = 1;
    while let Some(v) = q.pop_front() {
        let nexts = z.out[v]
            .iter()
            .map(|&e| z.edges[e].head)
            .chain(z.inc[v].iter().map(|&e| z.edges[e].tail));
        for u in nexts {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                q.push_back(u);
            }
        }
    }
    count == z.num_nodes
}

fn read_once_violations(z: &Nrobp, order: &[NodeId]) -> Vec<BpViolation> {
    let mut before: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(z.num_vars); z.num_nodes];
    let mut reported = BTreeSet::new();
    let mut out = Vec::new();
    for &v in order {
        for &e in &z.out[v] {
            let edge = z.edges[e];
            if let Some(l) = edge.label {
                if before[v].contains(l.var) && reported.insert(l.var) {
                    out.push(BpViolation::ReadTwice {
                        var: l.var,
                        path: witness_path(z, e, l.var),
                    });
                }
            }
            let mut next = before[v].clone();
            if let Some(l) = edge.label {
                next.insert(l.var);
            }
            before[edge.head].union_with(&next);
        }
    }
    out
}

/// Edge path ending with `last` that reads `var` on an earlier edge too.
fn witness_path(z: &Nrobp, last: usize, var: usize) -> Vec<usize> {
    let start = z.edges[last].tail;
    let mut via: Vec<Option<usize>> = vec![None; z.num_nodes];
    let mut seen = vec![false; z.num_nodes];
    seen[start] = true;
    let mut q = VecDeque::from([start]);
    while let Some(w) = q.pop_front() {
        for &f in &z.inc[w] {
            let edge = z.edges[f];
            if edge.label.map(|l| l.var) == Some(var) {
                let mut path = vec![f];
                let mut node = w;
                while let Some(g) = via[node] {
                    path.push(g);
                    node = z.edges[g].head;
                }
                path.push(last);
                return path;
            }
            if !seen[edge.tail] {
                seen[edge.tail] = true;
                via[edge.tail] = Some(f);
                q.push_back(edge.tail);
            }
        }
    }
    vec![last]
}

fn require_valid(z: &Nrobp) -> Result<Vec<NodeId>> {
    let report = validate_nrobp(z);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidProgram(v.to_string()));
    }
    Ok(z.topological_order().expect("validated programs are acyclic"))
}

/// Every root-to-node path reads the same variables, and root-leaf paths read all of them.
pub fn is_uniform(z: &Nrobp) -> Result<bool> {
    let order = require_valid(z)?;
    let mut sets: Vec<Option<FixedBitSet>> = vec![None; z.num_nodes];
    sets[z.root] = Some(FixedBitSet::with_capacity(z.num_vars));
    for &v in &order {
        let base = sets[v].clone().expect("topological order visits tails first");
        for &e in &z.out[v] {
            let edge = z.edges[e];
            let mut s = base.clone();
            if let Some(l) = edge.label {
                s.insert(l.var);
            }
            match &sets[edge.head] {
                None => sets[edge.head] = Some(s),
                Some(existing) if *existing != s => return Ok(false),
                Some(_) => {}
            }
        }
    }
    let leaf = sets[z.leaf].as_ref().expect("leaf is reachable");
    Ok(leaf.count_ones(..) == z.num_vars)
}

/// Accepted total assignments as bitmasks, increasing.
pub fn bp_satisfying_masks(z: &Nrobp, cap: usize) -> Result<Vec<u64>> {
    let n = z.num_vars;
    if n > cap.min(63) {
        return Err(Error::CapExceeded {
            what: "branching program enumeration (variables)",
            needed: n,
            cap: cap.min(63),
        });
    }
    let order = z
        .topological_order()
        .ok_or_else(|| Error::InvalidProgram("cycle".into()))?;
    Ok((0..1u64 << n).filter(|&m| z.accepts_mask(&order, m)).collect())
}

pub fn bp_satisfying_set(z: &Nrobp, cap: usize) -> Result<BTreeSet<Assignment>> {
    let n = z.num_vars;
    Ok(bp_satisfying_masks(z, cap)?
        .into_iter()
        .map(|m| Assignment::from_mask(n, m))
        .collect())
}

pub fn bp_equivalence(a: &Nrobp, b: &Nrobp, cap: usize) -> Result<bool> {
    if a.num_vars != b.num_vars {
        return Err(Error::Precondition(format!(
            "variable universes differ: {} vs {}",
            a.num_vars, b.num_vars
        )));
    }
    Ok(bp_satisfying_masks(a, cap)? == bp_satisfying_masks(b, cap)?)
}

/// Root-leaf paths as edge-index lists, depth first; fails past `cap` paths.
pub fn root_leaf_paths(z: &Nrobp, cap: usize) -> Result<Vec<Vec<usize>>> {
    fn walk(z: &Nrobp, v: NodeId, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) -> bool {
        if v == z.leaf {
            if out.len() == cap {
                return false;
            }
            out.push(stack.clone());
            return true;
        }
        for &e in &z.out[v] {
            stack.push(e);
            let ok = walk(z, z.edges[e].head, stack, out, cap);
            stack.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    if !walk(z, z.root, &mut Vec::new(), &mut out, cap) {
        return Err(Error::CapExceeded {
            what: "root-leaf path enumeration",
            needed: cap + 1,
            cap,
        });
    }
    Ok(out)
}

/// Shape of a random program for [`random_nrobp`].
#[derive(Debug, Clone, Copy)]
pub struct RandomBpShape {
    pub num_vars: usize,
    pub num_nodes: usize,
    pub extra_edges: usize,
    pub label_prob: f64,
}

/// Random valid NROBP: nodes `0..m` with root `0` and leaf `m-1`, every edge
/// pointing to a higher id, labels placed only where read-onceness allows.
pub fn random_nrobp<R: Rng>(rng: &mut R, shape: RandomBpShape) -> Nrobp {
    let m = shape.num_nodes.max(2);
    let n = shape.num_vars;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for v in 1..m {
        pairs.push((rng.gen_range(0..v), v));
    }
    for v in 0..m - 1 {
        if !pairs.iter().any(|&(t, _)| t == v) {
            pairs.push((v, rng.gen_range(v + 1..m)));
        }
    }
    for _ in 0..shape.extra_edges {
        let a = rng.gen_range(0..m - 1);
        let b = rng.gen_range(a + 1..m);
        pairs.push((a, b));
    }
    let mut labels: Vec<Option<Literal>> = vec![None; pairs.len()];
    let mut idx: Vec<usize> = (0..pairs.len()).collect();
    idx.shuffle(rng);
    for i in idx {
        if n == 0 || !rng.gen_bool(shape.label_prob) {
            continue;
        }
        let (a, b) = pairs[i];
        // variables already read on some path into a or out of b
        let mut used = vec![false; n];
        let mut into = vec![false; m];
        into[a] = true;
        for v in (0..=a).rev() {
            if !into[v] {
                continue;
            }
            for (j, &(t, h)) in pairs.iter().enumerate() {
                if h == v {
                    into[t] = true;
                    if let Some(l) = labels[j] {
                        used[l.var] = true;
                    }
                }
            }
        }
        let mut from = vec![false; m];
        from[b] = true;
        for v in b..m {
            if !from[v] {
                continue;
            }
            for (j, &(t, h)) in pairs.iter().enumerate() {
                if t == v {
                    from[h] = true;
                    if let Some(l) = labels[j] {
                        used[l.var] = true;
                    }
                }
            }
        }
        let free: Vec<usize> = (0..n).filter(|&x| !used[x]).collect();
        if let Some(&x) = free.choose(rng) {
            labels[i] = Some(Literal {
                var: x,
                positive: rng.gen_bool(0.5),
            });
        }
    }
    let edges = pairs
        .iter()
        .zip(labels)
        .map(|(&(tail, head), label)| BpEdge { tail, head, label })
        .collect();
    Nrobp::new(m, n, 0, m - 1, edges).expect("generated ids are in range")
}
