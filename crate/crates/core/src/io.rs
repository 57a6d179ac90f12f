//! Line-oriented text formats.
//!
//! * graphs: `p edge <n> <m>` then `e <u> <v>`, 1-based;
//! * CNFs: DIMACS `p cnf <n> <m>`, clauses terminated by `0`, 1-based;
//! * branching programs: `bp <nodes> <edges> <vars> <root> <leaf>` then
//!   `<tail> <head> <label>` with label `+v`, `-v` or `.`, all 0-based;
//! * tree decompositions: PACE `s td <bags> <max bag> <n>`, `b <id> <vertices>`,
//!   then tree edges `<i> <j>`, 1-based;
//! * certificates: one `cut` line per node and a summary line.
//!
//! Lines starting with `c` are comments everywhere except in certificates.

use std::collections::VecDeque;
use std::fmt::Write;

use crate::bp::{BpEdge, Nrobp};
use crate::cnf::{Literal, MonotoneCnf};
use crate::cover::CutCoverCertificate;
use crate::error::{Error, Result};
use crate::family::{LabeledTree, TreeDecomposition};
use crate::graph::{Graph, Matching, Vertex};

/// Non-empty, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty() && t[0] != "c")
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found `{tok}`")))
}

fn one_based(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v = num(line, tok)?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("index {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.num_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `p edge` header"))?;
    let [p, kind, n, m] = header[..] else {
        return Err(Error::parse(hl, "header must be `p edge <n> <m>`"));
    };
    if p != "p" || kind != "edge" {
        return Err(Error::parse(hl, "header must be `p edge <n> <m>`"));
    }
    let (n, m) = (num(hl, n)?, num(hl, m)?);
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (ln, t) in lines {
        let [e, u, v] = t[..] else {
            return Err(Error::parse(ln, "edge line must be `e <u> <v>`"));
        };
        if e != "e" {
            return Err(Error::parse(ln, format!("unexpected line type `{e}`")));
        }
        let (u, v) = (one_based(ln, u, n)?, one_based(ln, v, n)?);
        g.add_edge(u, v).map_err(|err| Error::parse(ln, err.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(Error::parse(hl, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_cnf(cnf: &MonotoneCnf) -> String {
    let mut s = format!("p cnf {} {}\n", cnf.num_vars(), cnf.clauses().len());
    for &(a, b) in cnf.clauses() {
        let _ = writeln!(s, "{} {} 0", a + 1, b + 1);
    }
    s
}

/// Monotone 2-CNF parser: every clause must have exactly two positive literals.
pub fn parse_cnf(text: &str) -> Result<MonotoneCnf> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `p cnf` header"))?;
    let [p, kind, n, m] = header[..] else {
        return Err(Error::parse(hl, "header must be `p cnf <vars> <clauses>`"));
    };
    if p != "p" || kind != "cnf" {
        return Err(Error::parse(hl, "header must be `p cnf <vars> <clauses>`"));
    }
    let (n, m) = (num(hl, n)?, num(hl, m)?);
    let mut clauses = Vec::new();
    let mut pending: Vec<(usize, i64)> = Vec::new();
    for (ln, t) in lines {
        for tok in t {
            let lit: i64 = tok
                .parse()
                .map_err(|_| Error::parse(ln, format!("expected a literal, found `{tok}`")))?;
            if lit != 0 {
                pending.push((ln, lit));
                continue;
            }
            let [(_, a), (_, b)] = pending[..] else {
                return Err(Error::parse(ln, format!("clause has {} literals, expected 2", pending.len())));
            };
            if a < 0 || b < 0 {
                return Err(Error::parse(ln, "negative literal in a monotone formula"));
            }
            let a = one_based(ln, &a.to_string(), n)?;
            let b = one_based(ln, &b.to_string(), n)?;
            clauses.push((a, b));
            pending.clear();
        }
    }
    if let Some(&(ln, _)) = pending.first() {
        return Err(Error::parse(ln, "clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(Error::parse(hl, format!("header announces {m} clauses, found {}", clauses.len())));
    }
    MonotoneCnf::new(n, clauses).map_err(|e| Error::parse(hl, e.to_string()))
}

fn label_token(l: Option<Literal>) -> String {
    l.map_or_else(|| ".".to_string(), |l| l.to_string())
}

/// Writes `z` with nodes renumbered in topological order.
pub fn write_bp(z: &Nrobp) -> Result<String> {
    let z = z.renumbered()?;
    let mut s = format!(
        "bp {} {} {} {} {}\n",
        z.num_nodes(),
        z.size(),
        z.num_vars(),
        z.root(),
        z.leaf()
    );
    for e in z.edges() {
        let _ = writeln!(s, "{} {} {}", e.tail, e.head, label_token(e.label));
    }
    Ok(s)
}

pub fn parse_bp(text: &str) -> Result<Nrobp> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `bp` header"))?;
    let ["bp", nodes, edges, vars, root, leaf] = header[..] else {
        return Err(Error::parse(hl, "header must be `bp <nodes> <edges> <vars> <root> <leaf>`"));
    };
    let (nodes, m, vars) = (num(hl, nodes)?, num(hl, edges)?, num(hl, vars)?);
    let (root, leaf) = (num(hl, root)?, num(hl, leaf)?);
    let mut out = Vec::with_capacity(m);
    for (ln, t) in lines {
        let [tail, head, label] = t[..] else {
            return Err(Error::parse(ln, "edge line must be `<tail> <head> <label>`"));
        };
        let label = match label {
            "." => None,
            l => {
                let (sign, var) = l.split_at(1);
                let positive = match sign {
                    "+" => true,
                    "-" => false,
                    _ => return Err(Error::parse(ln, format!("label `{l}` must be `+v`, `-v` or `.`"))),
                };
                Some(Literal {
                    var: num(ln, var)?,
                    positive,
                })
            }
        };
        out.push(BpEdge {
            tail: num(ln, tail)?,
            head: num(ln, head)?,
            label,
        });
    }
    if out.len() != m {
        return Err(Error::parse(hl, format!("header announces {m} edges, found {}", out.len())));
    }
    Nrobp::new(nodes, vars, root, leaf, out).map_err(|e| Error::parse(hl, e.to_string()))
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let max_bag = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    let mut s = format!("s td {} {} {}\n", td.bags.len(), max_bag, n);
    for (i, bag) in td.bags.iter().enumerate() {
        let _ = write!(s, "b {}", i + 1);
        for v in bag {
            let _ = write!(s, " {}", v + 1);
        }
        s.push('\n');
    }
    for (p, c) in td.tree.edges() {
        let _ = writeln!(s, "{} {}", p + 1, c + 1);
    }
    s
}

/// Parses a PACE tree decomposition, rooting the tree at bag 1. Returns the
/// decomposition and the announced vertex count.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `s td` header"))?;
    let ["s", "td", bags, _, n] = header[..] else {
        return Err(Error::parse(hl, "header must be `s td <bags> <max bag> <n>`"));
    };
    let (nb, n) = (num(hl, bags)?, num(hl, n)?);
    if nb == 0 {
        return Err(Error::parse(hl, "a decomposition needs at least one bag"));
    }
    let mut bags: Vec<Option<Vec<Vertex>>> = vec![None; nb];
    let mut adj = vec![Vec::new(); nb];
    let mut edge_count = 0;
    for (ln, t) in lines {
        if t[0] == "b" {
            let id = one_based(ln, t.get(1).ok_or_else(|| Error::parse(ln, "missing bag id"))?, nb)?;
            let members = t[2..].iter().map(|tok| one_based(ln, tok, n)).collect::<Result<Vec<_>>>()?;
            if bags[id].replace(members).is_some() {
                return Err(Error::parse(ln, format!("bag {} given twice", id + 1)));
            }
        } else {
            let [i, j] = t[..] else {
                return Err(Error::parse(ln, "tree edge must be `<i> <j>`"));
            };
            let (i, j) = (one_based(ln, i, nb)?, one_based(ln, j, nb)?);
            adj[i].push(j);
            adj[j].push(i);
            edge_count += 1;
        }
    }
    if edge_count + 1 != nb {
        return Err(Error::parse(hl, format!("{nb} bags need {} tree edges, found {edge_count}", nb - 1)));
    }
    let mut parent = vec![None; nb];
    let mut seen = vec![false; nb];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !std::mem::replace(&mut seen[w], true) {
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::parse(hl, "tree edges do not connect all bags"));
    }
    let tree = LabeledTree::from_parents(parent).map_err(|e| Error::parse(hl, e.to_string()))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(hl, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok((TreeDecomposition { tree, bags }, n))
}

fn join(vs: impl IntoIterator<Item = String>, sep: &str) -> String {
    vs.into_iter().collect::<Vec<_>>().join(sep)
}

/// One line per cut node, `cut <node> B <v...> M <u>-<v> ...`, then
/// `q=<q> dmw=<d> bound=<2^(d/a_x)>`.
pub fn write_certificate(cert: &CutCoverCertificate) -> String {
    let mut s = String::new();
    for ((u, b), m) in cert.cut_nodes.iter().zip(&cert.dis_sets).zip(&cert.matchings) {
        let _ = writeln!(
            s,
            "cut {u} B {} M {}",
            join(b.iter().map(|v| v.to_string()), " "),
            join(m.edges().iter().map(|(x, y)| format!("{x}-{y}")), " ")
        );
    }
    let _ = writeln!(
        s,
        "q={} dmw={} bound={}",
        cert.q(),
        cert.dmw,
        format_sig(cert.bound(), 12)
    );
    s
}

/// Parses a certificate; `max_degree` is not stored in the file and must be supplied.
pub fn parse_certificate(text: &str, max_degree: usize) -> Result<CutCoverCertificate> {
    let mut cert = CutCoverCertificate {
        dmw: 0,
        max_degree,
        cut_nodes: Vec::new(),
        dis_sets: Vec::new(),
        matchings: Vec::new(),
    };
    let mut summary = None;
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let t: Vec<&str> = line.split_whitespace().collect();
        match t.first() {
            None => {}
            Some(&"cut") => {
                let node = num(ln, t.get(1).ok_or_else(|| Error::parse(ln, "missing cut node"))?)?;
                let bpos = t.iter().position(|&x| x == "B");
                let mpos = t.iter().position(|&x| x == "M");
                let (Some(bp), Some(mp)) = (bpos, mpos) else {
                    return Err(Error::parse(ln, "cut line needs `B` and `M` sections"));
                };
                let b = t[bp + 1..mp].iter().map(|x| num(ln, x)).collect::<Result<Vec<_>>>()?;
                let edges = t[mp + 1..]
                    .iter()
                    .map(|x| {
                        let (u, v) = x
                            .split_once('-')
                            .ok_or_else(|| Error::parse(ln, format!("edge `{x}` must be `u-v`")))?;
                        Ok((num(ln, u)?, num(ln, v)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cert.cut_nodes.push(node);
                cert.dis_sets.push(b);
                cert.matchings
                    .push(Matching::new(edges).map_err(|e| Error::parse(ln, e.to_string()))?);
            }
            Some(first) if first.starts_with("q=") => {
                let mut q = None;
                for kv in &t {
                    match kv.split_once('=') {
                        Some(("q", v)) => q = Some(num(ln, v)?),
                        Some(("dmw", v)) => cert.dmw = num(ln, v)?,
                        Some(("bound", _)) => {}
                        _ => return Err(Error::parse(ln, format!("unexpected summary field `{kv}`"))),
                    }
                }
                summary = Some((ln, q));
            }
            Some(other) => return Err(Error::parse(ln, format!("unexpected line type `{other}`"))),
        }
    }
    let Some((ln, q)) = summary else {
        return Err(Error::parse(text.lines().count().max(1), "missing summary line"));
    };
    if q != Some(cert.q()) {
        return Err(Error::parse(ln, format!("summary q does not match the {} cut lines", cert.q())));
    }
    Ok(cert)
}

/// Decimal rendering with `digits` significant digits and no exponent.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bp::{bp_equivalence, nfbdd_compile};
    use crate::cnf::cnf_from_graph;
    use crate::cover::extract_cut_cover;
    use crate::family::{canonical_tree_decomposition, complete_binary_tree, tree_product, validate_tree_decomposition};
    use proptest::prelude::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::cycle(5);
        let text = write_graph(&g);
        assert!(text.starts_with("p edge 5 5\ne 1 2\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
        let commented = format!("c a comment\n{text}\n");
        assert_eq!(parse_graph(&commented).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("p edge 2 1\ne 1 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("p edge 2 2\ne 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("p edge 2 1\ne 1 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn cnf_round_trip_and_rejections() {
        let cnf = cnf_from_graph(&Graph::complete(3)).unwrap();
        let text = write_cnf(&cnf);
        assert_eq!(parse_cnf(&text).unwrap(), cnf);
        // clauses may span lines
        assert_eq!(parse_cnf("p cnf 2 1\n1\n2 0\n").unwrap().clauses(), &[(0, 1)]);
        assert!(parse_cnf("p cnf 2 1\n1 -2 0\n").is_err());
        assert!(parse_cnf("p cnf 3 1\n1 2 3 0\n").is_err());
        assert!(parse_cnf("p cnf 2 1\n1 2\n").is_err());
    }

    #[test]
    fn bp_round_trip() {
        let g = Graph::cycle(4);
        let y = nfbdd_compile(&cnf_from_graph(&g).unwrap(), &[0, 2, 1, 3]).unwrap();
        let text = write_bp(y.as_nrobp()).unwrap();
        let z = parse_bp(&text).unwrap();
        assert!(bp_equivalence(&z, y.as_nrobp(), 20).unwrap());
        assert_eq!(write_bp(&z).unwrap(), text);
        let unlabeled = parse_bp("bp 2 1 1 0 1\n0 1 .\n").unwrap();
        assert_eq!(unlabeled.edge(0).label, None);
        assert!(parse_bp("bp 2 1 1 0 1\n0 1 *3\n").is_err());
        assert!(parse_bp("bp 2 2 1 0 1\n0 1 +0\n").is_err());
    }

    #[test]
    fn td_round_trip() {
        let t = complete_binary_tree(2);
        let h = Graph::path(2);
        let g = tree_product(&t, &h).unwrap();
        let td = canonical_tree_decomposition(&t, &h);
        let text = write_td(&td, g.n());
        assert!(text.starts_with("s td 7 4 14\n"));
        let (back, n) = parse_td(&text).unwrap();
        assert_eq!(n, 14);
        assert_eq!(back.bags, td.bags);
        assert!(validate_tree_decomposition(&g, &back).is_valid());
        assert!(parse_td("s td 2 1 2\nb 1 1\nb 2 2\n").is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let g = Graph::cycle(8);
        let y = nfbdd_compile(&cnf_from_graph(&g).unwrap(), &(0..8).collect::<Vec<_>>()).unwrap();
        let cert = extract_cut_cover(y.as_nrobp(), &g, 1 << 12).unwrap();
        let text = write_certificate(&cert);
        assert!(text.lines().last().unwrap().starts_with(&format!("q={} dmw=2 bound=", cert.q())));
        assert_eq!(parse_certificate(&text, 2).unwrap(), cert);
        assert!(parse_certificate("cut 3 B 1 M 1-2\nq=2 dmw=1\n", 2).is_err());
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(1.0, 12), "1");
        assert_eq!(format_sig(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(format_sig(1234.5678, 6), "1234.57");
        assert_eq!(format_sig(2f64.powf(2.0 / 44.0), 12), "1.03200827973");
    }

    proptest! {
        #[test]
        fn random_graphs_round_trip(edges in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
            let mut g = Graph::empty(12);
            for (u, v) in edges {
                if u != v && !g.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
            prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }
    }
}
