use fixedbitset::FixedBitSet;

use crate::cnf::Literal;
use crate::error::Result;

use super::{require_valid, BpEdge, Nrobp};

/// Makes `z` uniform without changing its function.
///
/// Nodes are handled in topological order, lowest id first. For a node `a`,
/// `AllVar(a)` is the union over in-edges of the variables read on the way
/// in; each in-edge missing some of them is subdivided into a chain whose
/// first edge keeps the old label, followed by a pair of parallel `+x`/`-x`
/// edges per missing variable (ascending). The leaf is padded the same way
/// up to all variables. Original node ids are kept; chain nodes are appended.
/// Every edge grows into at most `2n+1` edges.
pub fn uniformize(z: &Nrobp) -> Result<Nrobp> {
    let order = require_valid(z)?;
    let n = z.num_vars();
    let mut num_nodes = z.num_nodes();
    let mut edges: Vec<BpEdge> = Vec::with_capacity(z.size());
    // variables read on every path into each processed node
    let mut reads: Vec<Option<FixedBitSet>> = vec![None; z.num_nodes()];
    for &a in &order {
        if a == z.root() {
            reads[a] = Some(FixedBitSet::with_capacity(n));
            continue;
        }
        let incoming: Vec<(BpEdge, FixedBitSet)> = z
            .in_edges(a)
            .iter()
            .map(|&i| {
                let e = *z.edge(i);
                let mut s = reads[e.tail].clone().expect("tails precede heads");
                if let Some(l) = e.label {
                    s.insert(l.var);
                }
                (e, s)
            })
            .collect();
        let all = if a == z.leaf() {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert_range(..);
            s
        } else {
            let mut s = FixedBitSet::with_capacity(n);
            for (_, r) in &incoming {
                s.union_with(r);
            }
            s
        };
        for (e, r) in incoming {
            let missing: Vec<usize> = all.difference(&r).collect();
            if missing.is_empty() {
                edges.push(e);
                continue;
            }
            let first = num_nodes;
            num_nodes += missing.len();
            edges.push(BpEdge {
                tail: e.tail,
                head: first,
                label: e.label,
            });
            for (j, &x) in missing.iter().enumerate() {
                let head = if j + 1 == missing.len() { a } else { first + j + 1 };
                for lit in [Literal::pos(x), Literal::neg(x)] {
                    edges.push(BpEdge {
                        tail: first + j,
                        head,
                        label: Some(lit),
                    });
                }
            }
        }
        reads[a] = Some(all);
    }
    Nrobp::new(num_nodes, n, z.root(), z.leaf(), edges)
}
