//! Order-based compilation of monotone 2-CNFs into NFBDDs.
//!
//! Variables are read in a fixed order. The state after reading a prefix is
//! the residual formula on the unread variables: unit clauses (variables
//! forced true by a false neighbour) and binary clauses not yet satisfied and
//! not subsumed by a unit. For monotone 2-CNFs this clause set is the unique
//! irredundant CNF of the subfunction, so equal states are exactly equal
//! subfunctions and merging on it yields the quasi-reduced ordered diagram.
//! Falsifying branches are dropped, which leaves every node on a path to the leaf.

use std::collections::HashMap;

use crate::cnf::MonotoneCnf;
use crate::error::{Error, Result};

use super::{Nfbdd, NfbddNode};

/// Default cap on variables for [`best_order_size`].
pub const DEFAULT_ORDER_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Residual {
    units: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl Residual {
    fn initial(cnf: &MonotoneCnf) -> Self {
        let mut pairs = cnf.clauses().to_vec();
        pairs.sort_unstable();
        pairs.dedup();
        Residual {
            units: Vec::new(),
            pairs,
        }
    }

    /// Residual after setting `x`; `None` when a clause is falsified.
    fn assign(&self, x: usize, value: bool) -> Option<Residual> {
        if value {
            return Some(Residual {
                units: self.units.iter().copied().filter(|&u| u != x).collect(),
                pairs: self
                    .pairs
                    .iter()
                    .copied()
                    .filter(|&(a, b)| a != x && b != x)
                    .collect(),
            });
        }
        if self.units.binary_search(&x).is_ok() {
            return None;
        }
        let mut units = self.units.clone();
        for &(a, b) in &self.pairs {
            if a == x {
                units.push(b);
            } else if b == x {
                units.push(a);
            }
        }
        units.sort_unstable();
        units.dedup();
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|&(a, b)| units.binary_search(&a).is_err() && units.binary_search(&b).is_err() && a != x && b != x)
            .collect();
        Some(Residual { units, pairs })
    }

    fn forces(&self, x: usize) -> bool {
        self.units.binary_search(&x).is_ok()
    }
}

fn check_order(cnf: &MonotoneCnf, order: &[usize]) -> Result<()> {
    let n = cnf.num_vars();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::BadOrder(n));
    }
    for &x in order {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::BadOrder(n));
        }
    }
    Ok(())
}

/// Compiles `cnf` along `order` (a permutation of all variables).
///
/// Nodes are numbered level by level, root `0`, leaf last.
pub fn nfbdd_compile(cnf: &MonotoneCnf, order: &[usize]) -> Result<Nfbdd> {
    check_order(cnf, order)?;
    // per level: states and child indices into the next level
    let mut levels: Vec<Vec<(Residual, Option<usize>, Option<usize>)>> = Vec::new();
    let mut current = vec![Residual::initial(cnf)];
    for &x in order {
        let mut index: HashMap<Residual, usize> = HashMap::new();
        let mut next: Vec<Residual> = Vec::new();
        let mut intern = |r: Residual, next: &mut Vec<Residual>| {
            *index.entry(r.clone()).or_insert_with(|| {
                next.push(r);
                next.len() - 1
            })
        };
        let mut row = Vec::with_capacity(current.len());
        for state in current {
            let pos = state.assign(x, true).map(|r| intern(r, &mut next));
            let neg = state.assign(x, false).map(|r| intern(r, &mut next));
            row.push((state, pos, neg));
        }
        levels.push(row);
        current = next;
    }
    debug_assert_eq!(current.len(), 1, "all variables read leaves the empty residual");

    let mut offsets = Vec::with_capacity(levels.len() + 1);
    let mut total = 0;
    for row in &levels {
        offsets.push(total);
        total += row.len();
    }
    offsets.push(total);
    let mut nodes = Vec::with_capacity(total + 1);
    for (i, row) in levels.iter().enumerate() {
        let base = offsets[i + 1];
        for (_, pos, neg) in row {
            nodes.push(NfbddNode::Decision {
                var: order[i],
                pos: pos.map(|j| base + j),
                neg: neg.map(|j| base + j),
            });
        }
    }
    nodes.push(NfbddNode::Leaf);
    Nfbdd::new(cnf.num_vars(), nodes, 0)
}

/// Minimum-edge compiled diagram over all variable orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestOrder {
    pub edges: usize,
    pub order: Vec<usize>,
}

/// Searches all orders by dynamic programming over read sets: the states
/// after reading a set `S` do not depend on the order inside `S`, and
/// reading `x` next adds two edges per state, one if the state forces `x`.
pub fn best_order_size(cnf: &MonotoneCnf, cap: usize) -> Result<BestOrder> {
    let n = cnf.num_vars();
    let cap = cap.min(20);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "order search (variables)",
            needed: n,
            cap,
        });
    }
    let full = (1usize << n) - 1;
    let mut states: Vec<Vec<Residual>> = vec![Vec::new(); 1 << n];
    states[0] = vec![Residual::initial(cnf)];
    for s in 1..=full {
        let x = s.trailing_zeros() as usize;
        let mut next: Vec<Residual> = states[s & !(1 << x)]
            .iter()
            .flat_map(|r| [r.assign(x, true), r.assign(x, false)])
            .flatten()
            .collect();
        next.sort_unstable();
        next.dedup();
        states[s] = next;
    }
    let edges_reading = |s: usize, x: usize| -> usize {
        states[s]
            .iter()
            .map(|r| if r.forces(x) { 1 } else { 2 })
            .sum()
    };
    let mut best = vec![usize::MAX; 1 << n];
    let mut last = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for s in 1..=full {
        for x in 0..n {
            if s >> x & 1 == 0 {
                continue;
            }
            let prev = s & !(1 << x);
            let cost = best[prev] + edges_reading(prev, x);
            if cost < best[s] {
                best[s] = cost;
                last[s] = x;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let x = last[s];
        order.push(x);
        s &= !(1 << x);
    }
    order.reverse();
    Ok(BestOrder {
        edges: best[full],
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bp::{bp_satisfying_masks, is_uniform, validate_nrobp, NfbddNode};
    use crate::cnf::{cnf_from_graph, satisfying_masks};
    use crate::family::{complete_binary_tree, tree_product};
    use crate::graph::Graph;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn k2_natural_order() {
        let cnf = cnf_from_graph(&Graph::complete(2)).unwrap();
        let y = nfbdd_compile(&cnf, &[0, 1]).unwrap();
        assert_eq!(y.var(y.root()), Some(0));
        let kids = y.out_edges(y.root());
        assert_eq!(kids.len(), 2);
        let (_, pos_child) = kids[0];
        let (_, neg_child) = kids[1];
        // after x0 the x1 test is free; after not x0 it is forced
        assert_eq!(y.out_degree(pos_child), 2);
        assert_eq!(y.out_edges(neg_child), vec![(crate::cnf::Literal::pos(1), y.leaf())]);
        assert_eq!(bp_satisfying_masks(y.as_nrobp(), 20).unwrap().len(), 3);
        assert_eq!((y.num_nodes(), y.size()), (4, 5));
    }

    #[test]
    fn compiled_function_and_shape() {
        let graphs = [Graph::cycle(3), Graph::cycle(6), Graph::path(5), Graph::complete(4)];
        for g in graphs {
            let cnf = cnf_from_graph(&g).unwrap();
            let truth = satisfying_masks(&cnf, 20).unwrap();
            for order in permutations(g.n()).into_iter().step_by(37) {
                let y = nfbdd_compile(&cnf, &order).unwrap();
                let z = y.as_nrobp();
                assert!(validate_nrobp(z).is_valid());
                assert!(is_uniform(z).unwrap());
                assert_eq!(bp_satisfying_masks(z, 20).unwrap(), truth);
                for a in 0..y.num_nodes() {
                    if let NfbddNode::Decision { pos, neg, .. } = y.node(a) {
                        // a lone out-edge is always the positive one
                        assert!(pos.is_some(), "node {a} has only a negative edge");
                        let _ = neg;
                    }
                }
            }
        }
    }

    #[test]
    fn bad_orders() {
        let cnf = cnf_from_graph(&Graph::path(3)).unwrap();
        assert_eq!(nfbdd_compile(&cnf, &[0, 1]).unwrap_err(), Error::BadOrder(3));
        assert_eq!(nfbdd_compile(&cnf, &[0, 1, 1]).unwrap_err(), Error::BadOrder(3));
    }

    #[test]
    fn best_order_matches_exhaustive_search() {
        let graphs = [Graph::complete(2), Graph::cycle(5), Graph::path(6), Graph::complete(4)];
        for g in graphs {
            let cnf = cnf_from_graph(&g).unwrap();
            let brute = permutations(g.n())
                .iter()
                .map(|o| nfbdd_compile(&cnf, o).unwrap().size())
                .min()
                .unwrap();
            let best = best_order_size(&cnf, 12).unwrap();
            assert_eq!(best.edges, brute);
            assert_eq!(nfbdd_compile(&cnf, &best.order).unwrap().size(), best.edges);
        }
    }

    #[test]
    fn best_order_examples() {
        let k2 = cnf_from_graph(&Graph::complete(2)).unwrap();
        let a = nfbdd_compile(&k2, &[0, 1]).unwrap().size();
        let b = nfbdd_compile(&k2, &[1, 0]).unwrap().size();
        assert_eq!(a, b);
        assert_eq!(best_order_size(&k2, 12).unwrap().edges, a);

        let c6 = cnf_from_graph(&Graph::cycle(6)).unwrap();
        let natural = nfbdd_compile(&c6, &[0, 1, 2, 3, 4, 5]).unwrap().size();
        assert!(best_order_size(&c6, 12).unwrap().edges <= natural);

        let g = tree_product(&complete_binary_tree(1), &Graph::complete(2)).unwrap();
        let cnf = cnf_from_graph(&g).unwrap();
        let brute = permutations(6)
            .iter()
            .map(|o| nfbdd_compile(&cnf, o).unwrap().size())
            .min()
            .unwrap();
        let best = best_order_size(&cnf, 12).unwrap();
        assert_eq!(best.edges, brute);
        assert_eq!(best.edges, T1_K2_BEST_EDGES);

        let big = cnf_from_graph(&Graph::path(13)).unwrap();
        assert!(best_order_size(&big, 12).is_err());
    }

    /// Minimum compiled size of the 2-CNF of `T_1(K_2)` over all 720 orders.
    const T1_K2_BEST_EDGES: usize = 22;

    #[test]
    fn family_sizes_grow_with_height() {
        let mut prev = 0;
        for r in 1..=5 {
            let g = tree_product(&complete_binary_tree(r), &Graph::path(2)).unwrap();
            let cnf = cnf_from_graph(&g).unwrap();
            let order: Vec<usize> = (0..g.n()).collect();
            let size = nfbdd_compile(&cnf, &order).unwrap().size();
            assert!(size >= prev);
            prev = size;
        }
    }
}
