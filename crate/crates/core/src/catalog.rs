//! Graph catalogues for exhaustive sweeps: all connected graphs up to
//! isomorphism on a few vertices, and seeded random bounded-degree graphs.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Largest vertex count for which [`canonical_code`] fits in a `u64`.
pub const MAX_CANON_N: usize = 11;

fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // row-major upper triangle
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Colour refinement: returns a stable colour per vertex, invariant under isomorphism.
fn refine_colours(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&u| colour[u]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let index: HashMap<&(usize, Vec<usize>), usize> =
            distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| index[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

/// Canonical adjacency code: minimum upper-triangle code over all relabelings
/// that list vertices by refined colour.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CANON_N, "canonical codes support at most {MAX_CANON_N} vertices");
    let colour = refine_colours(g);
    let mut slots: Vec<usize> = (0..n).map(|v| colour[v]).collect();
    slots.sort_unstable();
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        colour: &[usize],
        slots: &[usize],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        code: u64,
        best: &mut u64,
    ) {
        let n = g.n();
        let i = perm.len();
        if i == n {
            *best = (*best).min(code);
            return;
        }
        for v in 0..n {
            if used[v] || colour[v] != slots[i] {
                continue;
            }
            let mut c = code;
            for (j, &u) in perm.iter().enumerate() {
                if g.has_edge(u, v) {
                    c |= 1 << (63 - pair_bit(n, j, i));
                }
            }
            used[v] = true;
            perm.push(v);
            rec(g, colour, slots, perm, used, c, best);
            perm.pop();
            used[v] = false;
        }
    }
    rec(g, &colour, &slots, &mut perm, &mut used, 0, &mut best);
    best
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if code >> (63 - pair_bit(n, i, j)) & 1 == 1 {
                g.add_edge(i, j).expect("code encodes a simple graph");
            }
        }
    }
    g
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// sorted by canonical code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CANON_N);
    match n {
        0 => return vec![],
        1 => return vec![Graph::empty(1)],
        _ => {}
    }
    // every connected graph has a vertex whose removal keeps it connected
    let mut codes = BTreeSet::new();
    for base in connected_graphs(n - 1) {
        for subset in 1u32..1 << (n - 1) {
            let mut g = Graph::empty(n);
            for (u, v) in base.edges() {
                g.add_edge(u, v).unwrap();
            }
            for u in 0..n - 1 {
                if subset >> u & 1 == 1 {
                    g.add_edge(u, n - 1).unwrap();
                }
            }
            codes.insert(canonical_code(&g));
        }
    }
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

/// Connected graphs with `2..=max_n` vertices (the graphs whose 2-CNF is defined).
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(connected_graphs).collect()
}

/// Random graph on `n` vertices with maximum degree at most `max_degree`.
pub fn random_bounded_degree<R: Rng>(rng: &mut R, n: usize, max_degree: usize, density: f64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if g.degree(u) < max_degree && g.degree(v) < max_degree && rng.gen_bool(density) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Numbers of connected graphs on n unlabeled vertices (OEIS A001349).
    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn canonical_code_is_relabel_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_bounded_degree(&mut rng, 7, 4, 0.5);
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
            let h = Graph::from_edges(7, &edges).unwrap();
            assert_eq!(canonical_code(&g), canonical_code(&h));
        }
        assert_ne!(canonical_code(&Graph::path(4)), canonical_code(&Graph::cycle(4)));
    }

    #[test]
    fn random_graphs_respect_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let g = random_bounded_degree(&mut rng, 10, 5, 0.8);
            assert!(g.max_degree() <= 5);
        }
    }
}
