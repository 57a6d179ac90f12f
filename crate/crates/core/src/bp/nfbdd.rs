use crate::cnf::Literal;
use crate::error::{Error, Result};

use super::{validate_nrobp, BpEdge, NodeId, Nrobp};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NfbddNode {
    Leaf,
    /// Node labelled by `var` with its positive and negative out-neighbours.
    /// At least one is present; both may be the same node.
    Decision {
        var: usize,
        pos: Option<NodeId>,
        neg: Option<NodeId>,
    },
}

/// Normalized free BDD: every edge labelled, out-degree at most two, and the
/// two out-edges of a degree-2 node carry opposite literals of one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfbdd {
    num_vars: usize,
    nodes: Vec<NfbddNode>,
    root: NodeId,
    leaf: NodeId,
    program: Nrobp,
}

impl Nfbdd {
    pub fn new(num_vars: usize, nodes: Vec<NfbddNode>, root: NodeId) -> Result<Self> {
        let leaves: Vec<NodeId> = (0..nodes.len())
            .filter(|&i| nodes[i] == NfbddNode::Leaf)
            .collect();
        let [leaf] = leaves[..] else {
            return Err(Error::InvalidProgram(format!(
                "an NFBDD needs exactly one leaf, found {}",
                leaves.len()
            )));
        };
        let mut edges = Vec::new();
        for (a, node) in nodes.iter().enumerate() {
            if let NfbddNode::Decision { var, pos, neg } = *node {
                if pos.is_none() && neg.is_none() {
                    return Err(Error::InvalidProgram(format!("decision node {a} has no out-edge")));
                }
                if let Some(h) = pos {
                    edges.push(BpEdge {
                        tail: a,
                        head: h,
                        label: Some(Literal::pos(var)),
                    });
                }
                if let Some(h) = neg {
                    edges.push(BpEdge {
                        tail: a,
                        head: h,
                        label: Some(Literal::neg(var)),
                    });
                }
            }
        }
        let program = Nrobp::new(nodes.len(), num_vars, root, leaf, edges)?;
        let report = validate_nrobp(&program);
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidProgram(v.to_string()));
        }
        Ok(Nfbdd {
            num_vars,
            nodes,
            root,
            leaf,
            program,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.program.size()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn leaf(&self) -> NodeId {
        self.leaf
    }

    pub fn node(&self, a: NodeId) -> &NfbddNode {
        &self.nodes[a]
    }

    pub fn nodes(&self) -> &[NfbddNode] {
        &self.nodes
    }

    /// `Var(a)`; `None` for the leaf.
    pub fn var(&self, a: NodeId) -> Option<usize> {
        match self.nodes[a] {
            NfbddNode::Leaf => None,
            NfbddNode::Decision { var, .. } => Some(var),
        }
    }

    /// Out-edges of `a` as `(literal, head)`, positive first.
    pub fn out_edges(&self, a: NodeId) -> Vec<(Literal, NodeId)> {
        match self.nodes[a] {
            NfbddNode::Leaf => Vec::new(),
            NfbddNode::Decision { var, pos, neg } => pos
                .map(|h| (Literal::pos(var), h))
                .into_iter()
                .chain(neg.map(|h| (Literal::neg(var), h)))
                .collect(),
        }
    }

    pub fn out_degree(&self, a: NodeId) -> usize {
        self.out_edges(a).len()
    }

    /// The same diagram viewed as an NROBP (edge order: per node, positive first).
    pub fn as_nrobp(&self) -> &Nrobp {
        &self.program
    }

    /// Nodes with every node before its out-neighbours.
    pub fn topological_order(&self) -> Vec<NodeId> {
        self.program
            .topological_order()
            .expect("validated diagrams are acyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bp::is_uniform;

    #[test]
    fn type_checker_rejects_malformed_diagrams() {
        let no_leaf = vec![NfbddNode::Decision {
            var: 0,
            pos: Some(0),
            neg: None,
        }];
        assert!(Nfbdd::new(1, no_leaf, 0).is_err());
        let dead_end = vec![
            NfbddNode::Decision {
                var: 0,
                pos: None,
                neg: None,
            },
            NfbddNode::Leaf,
        ];
        assert!(Nfbdd::new(1, dead_end, 0).is_err());
        let reads_twice = vec![
            NfbddNode::Decision {
                var: 0,
                pos: Some(1),
                neg: None,
            },
            NfbddNode::Decision {
                var: 0,
                pos: Some(2),
                neg: None,
            },
            NfbddNode::Leaf,
        ];
        assert!(Nfbdd::new(1, reads_twice, 0).is_err());
    }

    #[test]
    fn coinciding_out_neighbours() {
        let nodes = vec![
            NfbddNode::Decision {
                var: 0,
                pos: Some(1),
                neg: Some(1),
            },
            NfbddNode::Leaf,
        ];
        let y = Nfbdd::new(1, nodes, 0).unwrap();
        assert_eq!(y.size(), 2);
        assert_eq!(y.out_degree(0), 2);
        assert!(is_uniform(y.as_nrobp()).unwrap());
    }
}
