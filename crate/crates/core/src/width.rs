//! Matching width and distant matching width.
//!
//! The width of a vertex order only depends on the set of vertices in each
//! prefix, so the minimum over orders is computed by dynamic programming over
//! vertex subsets: `f(S) = max(cut(S), min_{v in S} f(S \ v))`.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{edges_compatible, Graph, Matching, Vertex};

/// Default cap on the vertex count for the subset DP.
pub const DEFAULT_SUBSET_CAP: usize = 22;
/// Default cap on the number of cross edges for the distant-matching search.
pub const DEFAULT_CROSS_EDGE_CAP: usize = 128;

/// A split of `V(G)` into a prefix and a suffix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixPartition {
    in_prefix: Vec<bool>,
}

impl PrefixPartition {
    pub fn from_prefix(n: usize, prefix: &[Vertex]) -> Result<Self> {
        let mut in_prefix = vec![false; n];
        for &v in prefix {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            in_prefix[v] = true;
        }
        Ok(PrefixPartition { in_prefix })
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        PrefixPartition {
            in_prefix: (0..n).map(|v| mask >> v & 1 == 1).collect(),
        }
    }

    pub fn from_membership(in_prefix: Vec<bool>) -> Self {
        PrefixPartition { in_prefix }
    }

    pub fn n(&self) -> usize {
        self.in_prefix.len()
    }

    #[inline]
    pub fn in_prefix(&self, v: Vertex) -> bool {
        self.in_prefix[v]
    }

    pub fn prefix(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.in_prefix[v]).collect()
    }

    pub fn suffix(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| !self.in_prefix[v]).collect()
    }

    /// Edges with one end on each side, as `(prefix end, suffix end)`.
    pub fn cross_edges<'g>(&'g self, g: &'g Graph) -> impl Iterator<Item = (Vertex, Vertex)> + 'g {
        g.edges().filter_map(move |(u, v)| match (self.in_prefix[u], self.in_prefix[v]) {
            (true, false) => Some((u, v)),
            (false, true) => Some((v, u)),
            _ => None,
        })
    }
}

/// Maximum matching among the cross edges of `part` (augmenting paths).
pub fn cut_matching(g: &Graph, part: &PrefixPartition) -> Matching {
    let n = g.n();
    let mut mate_of_suffix: Vec<Option<Vertex>> = vec![None; n];
    let mut visited = vec![0usize; n];
    let mut stamp = 0;

    fn augment(
        g: &Graph,
        part: &PrefixPartition,
        u: Vertex,
        stamp: usize,
        visited: &mut [usize],
        mate: &mut [Option<Vertex>],
    ) -> bool {
        for &w in g.neighbors(u) {
            if part.in_prefix(w) || visited[w] == stamp {
                continue;
            }
            visited[w] = stamp;
            let free = match mate[w] {
                None => true,
                Some(other) => augment(g, part, other, stamp, visited, mate),
            };
            if free {
                mate[w] = Some(u);
                return true;
            }
        }
        false
    }

    for u in (0..n).filter(|&u| part.in_prefix(u)) {
        stamp += 1;
        augment(g, part, u, stamp, &mut visited, &mut mate_of_suffix);
    }
    let mut edges: Vec<_> = mate_of_suffix
        .iter()
        .enumerate()
        .filter_map(|(w, m)| m.map(|u| (u, w)))
        .collect();
    edges.sort_unstable();
    Matching::new(edges).expect("augmenting paths keep endpoints disjoint")
}

pub fn cut_matching_size(g: &Graph, part: &PrefixPartition) -> usize {
    cut_matching(g, part).len()
}

/// Maximum distant matching among the cross edges of `part`.
///
/// Branch and bound over cross edges ordered by ascending endpoint-degree sum,
/// ties by the edge itself.
pub fn cut_distant_matching(g: &Graph, part: &PrefixPartition, cross_cap: usize) -> Result<Matching> {
    let mut cross: Vec<(Vertex, Vertex)> = part.cross_edges(g).collect();
    let cap = cross_cap.min(128);
    if cross.len() > cap {
        return Err(Error::CapExceeded {
            what: "distant matching search (cross edges)",
            needed: cross.len(),
            cap,
        });
    }
    cross.sort_by_key(|&(u, v)| (g.degree(u) + g.degree(v), u.min(v), u.max(v)));
    let m = cross.len();
    let conflicts: Vec<u128> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && !edges_compatible(g, cross[i], cross[j]))
                .fold(0u128, |acc, j| acc | 1 << j)
        })
        .collect();

    struct Search<'a> {
        conflicts: &'a [u128],
        best: u128,
        best_len: u32,
    }
    impl Search<'_> {
        fn run(&mut self, chosen: u128, cand: u128) {
            let len = chosen.count_ones();
            if len + cand.count_ones() <= self.best_len {
                return;
            }
            if cand == 0 {
                self.best = chosen;
                self.best_len = len;
                return;
            }
            let i = cand.trailing_zeros() as usize;
            let bit = 1u128 << i;
            self.run(chosen | bit, cand & !bit & !self.conflicts[i]);
            self.run(chosen, cand & !bit);
        }
    }

    let all = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    let mut search = Search {
        conflicts: &conflicts,
        best: 0,
        best_len: 0,
    };
    search.run(0, all);
    let chosen = (0..m).filter(|&i| search.best >> i & 1 == 1).map(|i| cross[i]);
    Ok(Matching::new(chosen).expect("compatible edges are disjoint"))
}

pub fn cut_distant_matching_size(g: &Graph, part: &PrefixPartition, cross_cap: usize) -> Result<usize> {
    Ok(cut_distant_matching(g, part, cross_cap)?.len())
}

/// An exact width together with an optimal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthResult {
    pub value: usize,
    pub witness_order: Vec<Vertex>,
    /// Cut value of each proper nonempty prefix of `witness_order`, by length `1..n`.
    pub witness_cuts: Vec<usize>,
}

fn subset_dp<F>(g: &Graph, cap: usize, mut cut: F) -> Result<WidthResult>
where
    F: FnMut(u64) -> Result<usize>,
{
    let n = g.n();
    let cap = cap.min(30);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "subset dynamic program (vertices)",
            needed: n,
            cap,
        });
    }
    let full: u64 = (1u64 << n) - 1;
    let mut cut_of = vec![0u8; 1 << n];
    let mut best = vec![0u8; 1 << n];
    for s in 1..=full {
        let c = cut(s)?;
        cut_of[s as usize] = u8::try_from(c).expect("cut values fit in u8");
        let mut inner = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            inner = inner.min(best[(s & !(1 << v)) as usize]);
        }
        best[s as usize] = inner.max(cut_of[s as usize]);
    }

    let mut order_rev = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut rest = s;
        let mut pick = None;
        let mut pick_val = u8::MAX;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let val = best[(s & !(1 << v)) as usize];
            if val < pick_val {
                pick_val = val;
                pick = Some(v);
            }
        }
        let v = pick.expect("nonempty subset");
        order_rev.push(v as Vertex);
        s &= !(1 << v);
    }
    order_rev.reverse();
    let order = order_rev;
    let mut witness_cuts = Vec::with_capacity(n.saturating_sub(1));
    let mut prefix = 0u64;
    for &v in order.iter().take(n.saturating_sub(1)) {
        prefix |= 1 << v;
        witness_cuts.push(cut_of[prefix as usize] as usize);
    }
    Ok(WidthResult {
        value: best[full as usize] as usize,
        witness_order: order,
        witness_cuts,
    })
}

/// Exact matching width `mw(G)`.
pub fn mw_exact(g: &Graph, cap: usize) -> Result<WidthResult> {
    let n = g.n();
    subset_dp(g, cap, |s| Ok(cut_matching_size(g, &PrefixPartition::from_mask(n, s))))
}

/// Exact distant matching width `dmw(G)`.
pub fn dmw_exact(g: &Graph, cap: usize, cross_cap: usize) -> Result<WidthResult> {
    let n = g.n();
    subset_dp(g, cap, |s| {
        cut_distant_matching_size(g, &PrefixPartition::from_mask(n, s), cross_cap)
    })
}

/// Width of a given order under a cut function: maximum over proper prefixes.
pub fn order_width<F>(g: &Graph, order: &[Vertex], mut cut: F) -> Result<usize>
where
    F: FnMut(&PrefixPartition) -> Result<usize>,
{
    let n = g.n();
    let mut member = vec![false; n];
    let mut width = 0;
    for &v in order.iter().take(n.saturating_sub(1)) {
        member[v] = true;
        width = width.max(cut(&PrefixPartition::from_membership(member.clone()))?);
    }
    Ok(width)
}

/// `2c^2 + 2c + 1`: at most this many matching edges are discarded per kept edge.
pub fn distant_extraction_divisor(max_degree: usize) -> usize {
    2 * max_degree * max_degree + 2 * max_degree + 1
}

/// Keeps the lowest-index surviving edge of `m` and discards every edge that
/// conflicts with it, until no edge survives. The result is a distant matching.
pub fn greedy_distant_extraction(g: &Graph, m: &Matching) -> Result<Matching> {
    m.check_in(g)?;
    let mut alive = vec![true; m.len()];
    let mut kept = Vec::new();
    let es = m.edges();
    for i in 0..es.len() {
        if !alive[i] {
            continue;
        }
        kept.push(es[i]);
        for j in i + 1..es.len() {
            if alive[j] && !edges_compatible(g, es[i], es[j]) {
                alive[j] = false;
            }
        }
    }
    Matching::new(kept)
}

/// `ceil(log2 p)` for `p >= 1`.
pub fn ceil_log2(p: u64) -> u32 {
    assert!(p >= 1);
    64 - (p - 1).leading_zeros()
}

/// `(r + 1 - ceil(log2 p)) * p / 2`, the matching-width lower bound for
/// `T_r(H)` with `|V(H)| = 2p` connected.
pub fn mw_structural_lower_bound(r: u32, p: u64) -> Result<Ratio<i64>> {
    if p == 0 {
        return Err(Error::Precondition("p must be at least 1".into()));
    }
    let threshold = ceil_log2(p);
    if r < threshold {
        return Err(Error::StructuralBoundDomain { r, p, threshold });
    }
    Ok(Ratio::new((r + 1 - threshold) as i64 * p as i64, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all subsets of cross edges.
    fn brute_cut_matching(g: &Graph, part: &PrefixPartition, distant: bool) -> usize {
        let cross: Vec<_> = part.cross_edges(g).collect();
        let mut best = 0;
        for s in 0u64..1 << cross.len() {
            let chosen: Vec<_> = (0..cross.len()).filter(|&i| s >> i & 1 == 1).map(|i| cross[i]).collect();
            let Ok(m) = Matching::new(chosen.iter().copied()) else { continue };
            if distant && !crate::graph::is_distant_matching(g, &m).unwrap() {
                continue;
            }
            best = best.max(m.len());
        }
        best
    }

    fn prefix(n: usize, vs: &[usize]) -> PrefixPartition {
        PrefixPartition::from_prefix(n, vs).unwrap()
    }

    #[test]
    fn cut_matching_examples() {
        let c6 = Graph::cycle(6);
        let p = prefix(6, &[0, 1, 2]);
        assert_eq!(brute_cut_matching(&c6, &p, false), 2);
        assert_eq!(cut_matching_size(&c6, &p), 2);
        assert_eq!(cut_matching(&c6, &p).edges(), &[(0, 5), (2, 3)]);
        assert_eq!(cut_matching_size(&c6, &prefix(6, &[])), 0);
        let k6 = Graph::complete(6);
        assert_eq!(brute_cut_matching(&k6, &prefix(6, &[0, 1, 2]), false), 3);
        assert_eq!(cut_matching_size(&k6, &prefix(6, &[0, 1, 2])), 3);
    }

    #[test]
    fn cut_distant_examples() {
        let c8 = Graph::cycle(8);
        let p = prefix(8, &[0, 1, 2, 3]);
        let expected = brute_cut_matching(&c8, &p, true);
        assert_eq!(expected, 2);
        assert_eq!(cut_distant_matching_size(&c8, &p, 128).unwrap(), expected);
        let c6 = Graph::cycle(6);
        for s in 0u64..64 {
            let p = PrefixPartition::from_mask(6, s);
            assert!(cut_distant_matching_size(&c6, &p, 128).unwrap() <= 1);
        }
        assert_eq!(cut_distant_matching_size(&c8, &prefix(8, &[]), 128).unwrap(), 0);
        assert!(cut_distant_matching_size(&c8, &p, 1).is_err());
    }

    #[test]
    fn cut_functions_match_brute_force_on_random_splits() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..=8);
            let g = crate::catalog::random_bounded_degree(&mut rng, n, 4, 0.6);
            let p = PrefixPartition::from_mask(n, rng.gen_range(0..1u64 << n));
            assert_eq!(cut_matching_size(&g, &p), brute_cut_matching(&g, &p, false));
            assert_eq!(
                cut_distant_matching_size(&g, &p, 128).unwrap(),
                brute_cut_matching(&g, &p, true)
            );
        }
    }

    #[test]
    fn width_values() {
        assert_eq!(mw_exact(&Graph::complete(6), 22).unwrap().value, 3);
        assert_eq!(mw_exact(&Graph::cycle(8), 22).unwrap().value, 2);
        assert_eq!(mw_exact(&Graph::path(4), 22).unwrap().value, 1);
        assert_eq!(dmw_exact(&Graph::complete(6), 22, 128).unwrap().value, 1);
        assert_eq!(dmw_exact(&Graph::cycle(8), 22, 128).unwrap().value, 2);
        assert_eq!(dmw_exact(&Graph::cycle(6), 22, 128).unwrap().value, 1);
    }

    #[test]
    fn witness_is_consistent() {
        let g = Graph::cycle(7);
        let r = mw_exact(&g, 22).unwrap();
        assert_eq!(r.witness_cuts.iter().copied().max().unwrap_or(0), r.value);
        let recomputed = order_width(&g, &r.witness_order, |p| Ok(cut_matching_size(&g, p))).unwrap();
        assert_eq!(recomputed, r.value);
        let mut sorted = r.witness_order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn subset_cap() {
        assert!(matches!(
            mw_exact(&Graph::path(10), 9),
            Err(Error::CapExceeded { needed: 10, cap: 9, .. })
        ));
    }

    #[test]
    fn greedy_examples() {
        let c8 = Graph::cycle(8);
        let m = Matching::new([(0, 1), (2, 3), (4, 5)]).unwrap();
        let kept = greedy_distant_extraction(&c8, &m).unwrap();
        assert_eq!(kept.edges(), &[(0, 1), (4, 5)]);
        let single = Matching::new([(6, 7)]).unwrap();
        assert_eq!(greedy_distant_extraction(&c8, &single).unwrap(), single);
        let bad = Matching::new([(0, 2)]).unwrap();
        assert_eq!(greedy_distant_extraction(&c8, &bad), Err(Error::NotAnEdge(0, 2)));
        assert_eq!(distant_extraction_divisor(5), 61);
    }

    #[test]
    fn structural_bound_arithmetic() {
        assert_eq!(mw_structural_lower_bound(2, 1).unwrap(), Ratio::new(3, 2));
        assert_eq!(mw_structural_lower_bound(4, 2).unwrap(), Ratio::from_integer(4));
        for p in 1..20u64 {
            let r = ceil_log2(p);
            assert_eq!(mw_structural_lower_bound(r, p).unwrap(), Ratio::new(p as i64, 2));
        }
        assert!(matches!(
            mw_structural_lower_bound(1, 5),
            Err(Error::StructuralBoundDomain { threshold: 3, .. })
        ));
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(50), 6);
    }
}
