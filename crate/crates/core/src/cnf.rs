//! Monotone 2-CNFs, literals and assignments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default cap on the number of variables for truth-table enumeration.
pub const DEFAULT_ENUM_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn negated(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { '+' } else { '-' };
        write!(f, "{sign}{}", self.var)
    }
}

/// A consistent set of literals: no variable occurs with both signs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Assignment {
    values: BTreeMap<usize, bool>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_literals(lits: impl IntoIterator<Item = Literal>) -> Result<Self> {
        let mut a = Assignment::new();
        for l in lits {
            a.insert(l)?;
        }
        Ok(a)
    }

    /// Full assignment to variables `0..num_vars`; bit `i` of `mask` is the value of `x_i`.
    pub fn from_mask(num_vars: usize, mask: u64) -> Self {
        Assignment {
            values: (0..num_vars).map(|i| (i, mask >> i & 1 == 1)).collect(),
        }
    }

    /// Adds a literal. Re-adding the same literal is a no-op.
    pub fn insert(&mut self, lit: Literal) -> Result<()> {
        match self.values.insert(lit.var, lit.positive) {
            Some(prev) if prev != lit.positive => {
                self.values.insert(lit.var, prev);
                Err(Error::ContradictoryLiterals(lit.var))
            }
            _ => Ok(()),
        }
    }

    pub fn value(&self, var: usize) -> Option<bool> {
        self.values.get(&var).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        self.values.iter().map(|(&var, &positive)| Literal { var, positive })
    }

    /// Variables assigned (the set `Var(S)`).
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.keys().copied()
    }

    /// Bitmask of positively assigned variables. Variables must be below 64.
    pub fn positive_mask(&self) -> u64 {
        self.values
            .iter()
            .filter(|(_, &b)| b)
            .fold(0, |m, (&v, _)| m | (1u64 << v))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.literals().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `vs` covers `s` when every variable of `vs` occurs positively in `s`.
pub fn covers(s: &Assignment, vs: &[Vertex]) -> bool {
    vs.iter().all(|&v| s.value(v) == Some(true))
}

/// CNF whose clauses are all `(x_u OR x_v)` with `u != v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneCnf {
    num_vars: usize,
    clauses: Vec<(usize, usize)>,
}

impl MonotoneCnf {
    pub fn new(num_vars: usize, clauses: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in clauses {
            for v in [a, b] {
                if v >= num_vars {
                    return Err(Error::VariableOutOfRange { var: v, num_vars });
                }
            }
            if a == b {
                return Err(Error::DegenerateClause(a, b));
            }
            out.push((a.min(b), a.max(b)));
        }
        Ok(MonotoneCnf {
            num_vars,
            clauses: out,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(usize, usize)] {
        &self.clauses
    }

    pub fn is_satisfied_by_mask(&self, mask: u64) -> bool {
        self.clauses
            .iter()
            .all(|&(a, b)| (mask >> a | mask >> b) & 1 == 1)
    }

    /// Evaluates on a total assignment. Unassigned variables count as false.
    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses
            .iter()
            .all(|&(u, v)| a.value(u) == Some(true) || a.value(v) == Some(true))
    }
}

/// The 2-CNF with one clause per edge of `g`.
pub fn cnf_from_graph(g: &Graph) -> Result<MonotoneCnf> {
    if let Some(v) = g.isolated_vertices().next() {
        return Err(Error::IsolatedVertex(v));
    }
    MonotoneCnf::new(g.n(), g.edges())
}

/// Variables become vertices; two vertices are adjacent iff some clause holds both.
pub fn primal_graph(cnf: &MonotoneCnf) -> Graph {
    let mut g = Graph::empty(cnf.num_vars());
    for &(a, b) in cnf.clauses() {
        if !g.has_edge(a, b) {
            g.add_edge(a, b).expect("clause variables are distinct and in range");
        }
    }
    g
}

/// Satisfying total assignments as bitmasks, in increasing order.
pub fn satisfying_masks(cnf: &MonotoneCnf, cap: usize) -> Result<Vec<u64>> {
    let n = cnf.num_vars();
    if n > cap.min(63) {
        return Err(Error::CapExceeded {
            what: "truth-table enumeration",
            needed: n,
            cap: cap.min(63),
        });
    }
    Ok((0..1u64 << n)
        .filter(|&m| cnf.is_satisfied_by_mask(m))
        .collect())
}

pub fn enumerate_satisfying(cnf: &MonotoneCnf, cap: usize) -> Result<BTreeSet<Assignment>> {
    let n = cnf.num_vars();
    Ok(satisfying_masks(cnf, cap)?
        .into_iter()
        .map(|m| Assignment::from_mask(n, m))
        .collect())
}
