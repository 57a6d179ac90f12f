//! Tree products `T(H)`, the hard family `T_r(P_m)`, and tree decompositions.
//!
//! Vertex `label` of the copy of `H` at tree node `t` is numbered
//! `t * |V(H)| + label`. Complete binary trees are numbered in depth-first
//! preorder, so the natural vertex order walks the tree copy by copy with a
//! frontier of `O(r)` copies.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching, Vertex};
use crate::width::{ceil_log2, PrefixPartition};

/// Rooted tree given by parent pointers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    parent: Vec<Option<usize>>,
    root: usize,
}

impl LabeledTree {
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let roots: Vec<usize> = (0..parent.len()).filter(|&i| parent[i].is_none()).collect();
        let [root] = roots[..] else {
            return Err(Error::Precondition(format!(
                "a tree needs exactly one root, found {}",
                roots.len()
            )));
        };
        let n = parent.len();
        if let Some(&bad) = parent.iter().flatten().find(|&&p| p >= n) {
            return Err(Error::Precondition(format!("parent {bad} out of range")));
        }
        let tree = LabeledTree { parent, root };
        // every node must reach the root
        let reached = tree.bfs_from(root).len();
        if reached != n {
            return Err(Error::Precondition("parent pointers contain a cycle".into()));
        }
        Ok(tree)
    }

    pub fn single() -> Self {
        LabeledTree {
            parent: vec![None],
            root: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn children(&self, t: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.parent[c] == Some(t)).collect()
    }

    /// Tree edges as `(parent, child)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (p, c)))
    }

    pub fn neighbors(&self, t: usize) -> Vec<usize> {
        let mut ns = self.children(t);
        ns.extend(self.parent[t]);
        ns
    }

    pub fn depth(&self, mut t: usize) -> usize {
        let mut d = 0;
        while let Some(p) = self.parent[t] {
            t = p;
            d += 1;
        }
        d
    }

    fn bfs_from(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut out = vec![start];
        seen[start] = true;
        let mut q = VecDeque::from([start]);
        while let Some(t) = q.pop_front() {
            for u in self.neighbors(t) {
                if !seen[u] {
                    seen[u] = true;
                    out.push(u);
                    q.push_back(u);
                }
            }
        }
        out
    }

    /// Nodes of the tree path from `a` to `b`, inclusive.
    pub fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let ancestors = |mut t: usize| {
            let mut v = vec![t];
            while let Some(p) = self.parent[t] {
                v.push(p);
                t = p;
            }
            v
        };
        let up_a = ancestors(a);
        let up_b = ancestors(b);
        let lca = *up_a.iter().find(|t| up_b.contains(t)).expect("same tree");
        let mut path: Vec<usize> = up_a.iter().copied().take_while(|&t| t != lca).collect();
        path.push(lca);
        let tail: Vec<usize> = up_b.iter().copied().take_while(|&t| t != lca).collect();
        path.extend(tail.into_iter().rev());
        path
    }
}

/// Complete binary tree of height `r`, nodes numbered in depth-first preorder.
pub fn complete_binary_tree(r: u32) -> LabeledTree {
    fn build(parent: &mut Vec<Option<usize>>, up: Option<usize>, height: u32) {
        let id = parent.len();
        parent.push(up);
        if height > 0 {
            build(parent, Some(id), height - 1);
            build(parent, Some(id), height - 1);
        }
    }
    let mut parent = Vec::with_capacity((1usize << (r + 1)) - 1);
    build(&mut parent, None, r);
    LabeledTree { parent, root: 0 }
}

/// Vertex id of `label` in the copy at tree node `node`.
#[inline]
pub fn product_vertex(h_size: usize, node: usize, label: usize) -> Vertex {
    node * h_size + label
}

/// `T(H)`: one copy of `h` per tree node, same-label vertices of adjacent copies joined.
pub fn tree_product(t: &LabeledTree, h: &Graph) -> Result<Graph> {
    if h.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = h.n();
    let mut g = Graph::empty(t.len() * m);
    for node in 0..t.len() {
        for (a, b) in h.edges() {
            g.add_edge(product_vertex(m, node, a), product_vertex(m, node, b))?;
        }
    }
    for (p, c) in t.edges() {
        for label in 0..m {
            g.add_edge(product_vertex(m, p, label), product_vertex(m, c, label))?;
        }
    }
    Ok(g)
}

/// Parameters of `T_r(P_m)` with `m = (k - y + 1) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub k: u64,
    pub y: u64,
    pub r: u32,
    pub p: u64,
    pub path_len: u64,
}

/// Smallest `k` covered by the lower bound for the family.
pub const FAMILY_MIN_K: u64 = 50;
/// Largest vertex count [`hard_family_instance`] will materialise.
pub const MATERIALIZE_CAP: u128 = 1 << 24;

impl FamilyParams {
    pub fn new(k: u64, r: u32, allow_small_r: bool) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidFamily(format!("k = {k} must be at least 2")));
        }
        let y = (k + 1) % 4;
        let q = k + 1 - y;
        if q < 4 {
            return Err(Error::InvalidFamily(format!(
                "k = {k} gives k - y + 1 = {q}, which leaves an empty path"
            )));
        }
        let threshold = Self::height_threshold(k);
        if !allow_small_r && r < threshold {
            return Err(Error::HeightBelowThreshold { r, k, threshold });
        }
        if r > 100 {
            return Err(Error::InvalidFamily(format!("r = {r} is too large")));
        }
        Ok(FamilyParams {
            k,
            y,
            r,
            p: q / 4,
            path_len: q / 2,
        })
    }

    /// `5 * ceil(log2 k)`.
    pub fn height_threshold(k: u64) -> u32 {
        5 * ceil_log2(k)
    }

    pub fn meets_height_threshold(&self) -> bool {
        self.r >= Self::height_threshold(self.k)
    }

    pub fn below_min_k(&self) -> bool {
        self.k < FAMILY_MIN_K
    }

    pub fn tree_nodes(&self) -> u128 {
        (1u128 << (self.r + 1)) - 1
    }

    /// `n = (2^(r+1) - 1) (k - y + 1) / 2`.
    pub fn n(&self) -> u128 {
        self.tree_nodes() * self.path_len as u128
    }

    /// Upper bound on the treewidth of the family member, `k - y`.
    pub fn treewidth_bound(&self) -> u64 {
        self.k - self.y
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} y={} r={} p={} path_len={} n={}",
            self.k,
            self.y,
            self.r,
            self.p,
            self.path_len,
            self.n()
        )
    }
}

/// The family member `T_r(P_{(k-y+1)/2})`.
pub fn hard_family_instance(k: u64, r: u32, allow_small_r: bool) -> Result<(Graph, FamilyParams)> {
    let params = FamilyParams::new(k, r, allow_small_r)?;
    if params.n() > MATERIALIZE_CAP {
        return Err(Error::CapExceeded {
            what: "family instance (vertices)",
            needed: usize::try_from(params.n()).unwrap_or(usize::MAX),
            cap: MATERIALIZE_CAP as usize,
        });
    }
    let tree = complete_binary_tree(r);
    let g = tree_product(&tree, &Graph::path(params.path_len as usize))?;
    Ok((g, params))
}

/// Tree decomposition: a rooted tree with one bag per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub tree: LabeledTree,
    pub bags: Vec<Vec<Vertex>>,
}

impl TreeDecomposition {
    /// Largest bag size minus one (`-1` for no bags or only empty bags).
    pub fn width(&self) -> isize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0) as isize - 1
    }
}

/// Root bag holds the root copy; every other bag holds its own copy and its parent's.
pub fn canonical_tree_decomposition(t: &LabeledTree, h: &Graph) -> TreeDecomposition {
    let m = h.n();
    let copy = |node: usize| (0..m).map(move |l| product_vertex(m, node, l));
    let bags = (0..t.len())
        .map(|node| {
            let mut bag: Vec<Vertex> = copy(node).collect();
            if let Some(p) = t.parent(node) {
                bag.extend(copy(p));
            }
            bag.sort_unstable();
            bag
        })
        .collect();
    TreeDecomposition {
        tree: t.clone(),
        bags,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    /// A bag names a vertex outside the graph.
    UnknownVertex { node: usize, vertex: Vertex },
    /// Union rule: the vertex is in no bag.
    MissingVertex(Vertex),
    /// Containment rule: no bag holds both ends of the edge.
    UncoveredEdge(Vertex, Vertex),
    /// Connectedness rule: the bags holding the vertex form several subtrees,
    /// rooted at the listed tree nodes.
    Disconnected { vertex: Vertex, subtree_roots: Vec<usize> },
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::UnknownVertex { node, vertex } => {
                write!(f, "bag {node} holds unknown vertex {vertex}")
            }
            TdViolation::MissingVertex(v) => write!(f, "union: vertex {v} is in no bag"),
            TdViolation::UncoveredEdge(u, v) => write!(f, "containment: edge {{{u}, {v}}} is in no bag"),
            TdViolation::Disconnected {
                vertex,
                subtree_roots,
            } => write!(f, "connectedness: vertex {vertex} spans subtrees rooted at {subtree_roots:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdReport {
    pub violations: Vec<TdViolation>,
    pub width: isize,
}

impl TdReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> TdReport {
    let n = g.n();
    let mut violations = Vec::new();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                violations.push(TdViolation::UnknownVertex { node, vertex: v });
            } else if holders[v].last() != Some(&node) {
                holders[v].push(node);
            }
        }
    }
    for (v, hs) in holders.iter().enumerate() {
        if hs.is_empty() {
            violations.push(TdViolation::MissingVertex(v));
        }
    }
    let mut in_bag = vec![Vec::new(); td.bags.len()];
    for (node, bag) in td.bags.iter().enumerate() {
        let mut b: Vec<Vertex> = bag.iter().copied().filter(|&v| v < n).collect();
        b.sort_unstable();
        b.dedup();
        in_bag[node] = b;
    }
    for (u, v) in g.edges() {
        let covered = holders[u]
            .iter()
            .any(|&node| in_bag[node].binary_search(&v).is_ok());
        if !covered {
            violations.push(TdViolation::UncoveredEdge(u, v));
        }
    }
    // a node set is a subtree iff exactly one member has its parent outside the set
    for (v, hs) in holders.iter().enumerate() {
        let roots: Vec<usize> = hs
            .iter()
            .copied()
            .filter(|&node| match td.tree.parent(node) {
                None => true,
                Some(p) => in_bag[p].binary_search(&v).is_err(),
            })
            .collect();
        if roots.len() > 1 {
            violations.push(TdViolation::Disconnected {
                vertex: v,
                subtree_roots: roots,
            });
        }
    }
    TdReport {
        violations,
        width: td.width(),
    }
}

/// Constructs a matching of size at least `p` whose edges all cross `part`,
/// in `T(H)` with `|V(T)| >= p`, `|V(H)| >= 2p`, `H` connected and both
/// sides holding at least `p^2` vertices.
///
/// When at least `p` copies of `H` meet both sides, each such copy contributes
/// one crossing edge of `H`. Otherwise some copy lies on one side only, some
/// other copy has at least `p` vertices on the other side, and walking the
/// tree path between the two copies yields, for each of `p` such labels, an
/// edge between consecutive copies where that label switches side.
pub fn cross_matching_finder(t: &LabeledTree, h: &Graph, part: &PrefixPartition, p: usize) -> Result<Matching> {
    let m = h.n();
    if t.len() < p {
        return Err(Error::Precondition(format!(
            "tree has {} nodes, fewer than p = {p}",
            t.len()
        )));
    }
    if m < 2 * p {
        return Err(Error::Precondition(format!("H has {m} vertices, fewer than 2p = {}", 2 * p)));
    }
    if !h.is_connected() || m == 0 {
        return Err(Error::Precondition("H must be connected and nonempty".into()));
    }
    if part.n() != t.len() * m {
        return Err(Error::Precondition(format!(
            "partition covers {} vertices but T(H) has {}",
            part.n(),
            t.len() * m
        )));
    }
    let prefix_size = part.prefix().len();
    let suffix_size = part.n() - prefix_size;
    if prefix_size < p * p || suffix_size < p * p {
        return Err(Error::Precondition(format!(
            "partition classes have {prefix_size} and {suffix_size} vertices, need p^2 = {} each",
            p * p
        )));
    }
    let side = |node: usize, label: usize| part.in_prefix(product_vertex(m, node, label));

    let mixed: Vec<usize> = (0..t.len())
        .filter(|&node| {
            let first = side(node, 0);
            (1..m).any(|l| side(node, l) != first)
        })
        .collect();
    if mixed.len() >= p && p > 0 {
        let edges = mixed.iter().map(|&node| {
            let (a, b) = h
                .edges()
                .find(|&(a, b)| side(node, a) != side(node, b))
                .expect("a connected copy meeting both sides has a crossing edge");
            (product_vertex(m, node, a), product_vertex(m, node, b))
        });
        return Ok(Matching::new(edges).expect("edges lie in distinct copies"));
    }
    if p == 0 {
        return Ok(Matching::default());
    }

    // some copy is monochromatic; find it and a copy heavy on the other side
    let mono = (0..t.len())
        .find(|&node| !mixed.contains(&node))
        .expect("fewer than p mixed copies among at least p");
    let mono_side = side(mono, 0);
    let heavy = (0..t.len())
        .find(|&node| (0..m).filter(|&l| side(node, l) != mono_side).count() >= p)
        .ok_or_else(|| Error::Precondition("no copy has p vertices on the opposite side".into()))?;
    let labels: Vec<usize> = (0..m).filter(|&l| side(heavy, l) != mono_side).take(p).collect();
    let path = t.path(mono, heavy);
    let edges = labels.iter().map(|&l| {
        let i = path
            .windows(2)
            .position(|w| side(w[0], l) == mono_side && side(w[1], l) != mono_side)
            .expect("the label switches side somewhere on the path");
        (product_vertex(m, path[i], l), product_vertex(m, path[i + 1], l))
    });
    Ok(Matching::new(edges).expect("edges carry distinct labels"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Matching;
    use crate::width::cut_matching_size;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn binary_tree_shapes() {
        assert_eq!(complete_binary_tree(0).len(), 1);
        assert_eq!(complete_binary_tree(3).len(), 15);
        let t2 = complete_binary_tree(2);
        let kids = t2.children(t2.root());
        assert_eq!(kids.len(), 2);
        let grandkids: Vec<usize> = kids.iter().flat_map(|&c| t2.children(c)).collect();
        assert_eq!(grandkids.len(), 4);
        assert!(grandkids.iter().all(|&g| t2.children(g).is_empty() && t2.depth(g) == 2));
        let t4 = complete_binary_tree(4);
        for v in 0..t4.len() {
            let leaf = t4.children(v).is_empty();
            assert_eq!(leaf, t4.depth(v) == 4);
        }
    }

    #[test]
    fn product_sizes() {
        let two = LabeledTree::from_parents(vec![None, Some(0)]).unwrap();
        let g = tree_product(&two, &Graph::complete(2)).unwrap();
        assert_eq!((g.n(), g.num_edges()), (4, 4));
        assert!(g.has_edge(0, 2) && g.has_edge(1, 3) && g.has_edge(0, 1) && g.has_edge(2, 3));
        let h = Graph::cycle(5);
        assert_eq!(tree_product(&LabeledTree::single(), &h).unwrap(), h);
        let disconnected = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(tree_product(&two, &disconnected), Err(Error::Disconnected));
    }

    #[test]
    fn product_degree_bound() {
        let t = complete_binary_tree(3);
        let h = Graph::path(4);
        let g = tree_product(&t, &h).unwrap();
        assert_eq!(g.n(), t.len() * h.n());
        for node in 0..t.len() {
            for l in 0..h.n() {
                let v = product_vertex(4, node, l);
                assert_eq!(g.degree(v), h.degree(l) + t.neighbors(node).len());
            }
        }
    }

    #[test]
    fn family_parameters() {
        let p = FamilyParams::new(50, 30, false).unwrap();
        assert_eq!((p.y, p.path_len, p.p), (3, 24, 12));
        assert_eq!(p.n(), ((1u128 << 31) - 1) * 24);
        assert!(matches!(
            FamilyParams::new(6, 1, false),
            Err(Error::HeightBelowThreshold { threshold: 15, .. })
        ));
        let small = FamilyParams::new(6, 2, true).unwrap();
        assert_eq!(small.n(), 7 * 4 / 2);
        assert!(FamilyParams::new(2, 1, true).is_err());
        for k in 3..80 {
            let f = FamilyParams::new(k, 1, true).unwrap();
            assert_eq!((k - f.y + 1) % 4, 0);
            assert!(f.y <= 3);
            assert_eq!(f.path_len, 2 * f.p);
        }
    }

    #[test]
    fn canonical_decomposition_examples() {
        let t1 = complete_binary_tree(1);
        let k2 = Graph::complete(2);
        let td = canonical_tree_decomposition(&t1, &k2);
        let mut sizes: Vec<usize> = td.bags.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4, 4]);
        let g = tree_product(&t1, &k2).unwrap();
        let report = validate_tree_decomposition(&g, &td);
        assert!(report.is_valid(), "{:?}", report.violations);
        assert_eq!(report.width, 3);

        let h = Graph::cycle(4);
        let single = canonical_tree_decomposition(&LabeledTree::single(), &h);
        assert_eq!(single.bags, vec![vec![0, 1, 2, 3]]);
        assert_eq!(single.width(), 3);
    }

    #[test]
    fn forced_violations() {
        let t = complete_binary_tree(1);
        let h = Graph::path(2);
        let g = tree_product(&t, &h).unwrap();
        let mut td = canonical_tree_decomposition(&t, &h);
        td.bags[1].clear();
        let report = validate_tree_decomposition(&g, &td);
        assert!(report.violations.contains(&TdViolation::MissingVertex(2)));
        assert!(report.violations.contains(&TdViolation::UncoveredEdge(2, 3)));

        // the root copy survives in both child bags, which are no longer joined
        let mut td = canonical_tree_decomposition(&t, &h);
        td.bags[0].clear();
        let report = validate_tree_decomposition(&g, &td);
        assert!(report.violations.contains(&TdViolation::Disconnected {
            vertex: 0,
            subtree_roots: vec![1, 2]
        }));

        let mut td = canonical_tree_decomposition(&t, &h);
        for bag in &mut td.bags {
            bag.retain(|&v| v != 5);
        }
        let report = validate_tree_decomposition(&g, &td);
        assert!(report.violations.contains(&TdViolation::MissingVertex(5)));

        // separate the two ends of a cross edge: drop the parent copy from one child bag
        let mut td = canonical_tree_decomposition(&t, &h);
        td.bags[1].retain(|&v| v >= 2);
        let report = validate_tree_decomposition(&g, &td);
        assert!(report.violations.contains(&TdViolation::UncoveredEdge(0, 2)));
    }

    #[test]
    fn family_instances_are_well_formed() {
        for (k, r) in [(6, 1), (6, 3), (10, 2), (13, 1)] {
            let (g, params) = hard_family_instance(k, r, true).unwrap();
            assert_eq!(g.n() as u128, params.n());
            assert!(g.max_degree() <= 5);
            let t = complete_binary_tree(r);
            let td = canonical_tree_decomposition(&t, &Graph::path(params.path_len as usize));
            let report = validate_tree_decomposition(&g, &td);
            assert!(report.is_valid());
            assert!(report.width <= params.treewidth_bound() as isize);
        }
    }

    fn check_finder(t: &LabeledTree, h: &Graph, p: usize, trials: usize, seed: u64) -> usize {
        let g = tree_product(t, h).unwrap();
        let n = g.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checked = 0;
        let mut attempts = 0;
        while checked < trials {
            attempts += 1;
            assert!(attempts < trials * 100);
            let density = rng.gen_range(0.02..0.98);
            let member: Vec<bool> = (0..n).map(|_| rng.gen_bool(density)).collect();
            let part = PrefixPartition::from_membership(member);
            let a = part.prefix().len();
            if a < p * p || n - a < p * p {
                assert!(cross_matching_finder(t, h, &part, p).is_err());
                continue;
            }
            let m = cross_matching_finder(t, h, &part, p).unwrap();
            assert!(m.len() >= p);
            m.check_in(&g).unwrap();
            for &(u, v) in m.edges() {
                assert_ne!(part.in_prefix(u), part.in_prefix(v));
            }
            assert!(cut_matching_size(&g, &part) >= m.len());
            checked += 1;
        }
        checked
    }

    #[test]
    fn finder_fuzz() {
        assert_eq!(check_finder(&complete_binary_tree(2), &Graph::path(4), 2, 1000, 3), 1000);
        assert_eq!(check_finder(&complete_binary_tree(3), &Graph::complete(2), 1, 1000, 4), 1000);
    }

    #[test]
    fn finder_walks_the_tree_path() {
        // T_2(P_4): copy 0 (root) entirely in the prefix, copy 3 entirely in the suffix,
        // every other copy in the prefix too, so only the walk can find edges.
        let t = complete_binary_tree(2);
        let h = Graph::path(4);
        let n = t.len() * 4;
        let suffix_copy = 3;
        let member: Vec<bool> = (0..n).map(|v| v / 4 != suffix_copy).collect();
        let part = PrefixPartition::from_membership(member);
        let m = cross_matching_finder(&t, &h, &part, 2).unwrap();
        assert_eq!(m.len(), 2);
        // preorder: copy 3 is a grandchild whose parent is copy 1
        assert_eq!(t.parent(3), Some(1));
        assert_eq!(t.path(0, 3), vec![0, 1, 3]);
        assert_eq!(m, Matching::new([(4, 12), (5, 13)]).unwrap());
    }

    #[test]
    fn finder_preconditions() {
        let t = complete_binary_tree(1);
        let h = Graph::path(2);
        let part = PrefixPartition::from_mask(6, 0b000001);
        let err = cross_matching_finder(&t, &h, &part, 1);
        assert!(err.is_ok());
        assert!(matches!(cross_matching_finder(&t, &h, &part, 2), Err(Error::Precondition(_))));
        let part = PrefixPartition::from_mask(6, 0);
        assert!(cross_matching_finder(&t, &h, &part, 1).is_err());
    }
}
