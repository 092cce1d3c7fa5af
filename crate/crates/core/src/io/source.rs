use std::collections::HashSet;
use std::fmt::Write;

use super::{Line, Reader};
use crate::error::Result;
use crate::reduce::{normalize_sat32, Assignment, Graph, IndependentSet, Literal, Sat32Instance};

fn counts(line: &Line<'_>, what: &str) -> Result<(usize, usize)> {
    let args = line.args();
    if args.len() != 2 {
        return Err(line.error(format!("expected `{} <n> <m>`", what)));
    }
    Ok((line.int(args[0], "a count")?, line.int(args[1], "a count")?))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut r = Reader::new(text);
    let (n, edges) = read_graph(&mut r)?;
    r.finish()?;
    Graph::new(n, edges)
}

/// Reads a `graph` record and its edges from `r`.
pub(crate) fn read_graph(r: &mut Reader<'_>) -> Result<(usize, Vec<(usize, usize)>)> {
    let head = r.expect("graph")?;
    let (n, m) = counts(&head, "graph")?;
    if n == 0 {
        return Err(head.error("a graph needs at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    for _ in 0..m {
        let line = r.expect("edge")?;
        let args = line.args();
        if args.len() != 2 {
            return Err(line.error("expected `edge <u> <v>`"));
        }
        let u: usize = line.int(args[0], "a vertex")?;
        let v: usize = line.int(args[1], "a vertex")?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(line.error(format!("vertex outside 1..={n}")));
        }
        if u == v {
            return Err(line.error("self-loop"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(line.error("duplicate edge"));
        }
        edges.push((u, v));
    }
    if let Some(line) = r.peek().filter(|l| l.keyword() == "edge") {
        return Err(line.error(format!("more than the declared {m} edges")));
    }
    Ok((n, edges))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    out
}

pub fn parse_sat(text: &str) -> Result<Sat32Instance> {
    let mut r = Reader::new(text);
    let sat = read_sat(&mut r)?;
    r.finish()?;
    Ok(sat)
}

pub(crate) fn read_sat(r: &mut Reader<'_>) -> Result<Sat32Instance> {
    let head = r.expect("sat32")?;
    let (n, m) = counts(&head, "sat32")?;
    let mut clauses = Vec::with_capacity(m);
    for _ in 0..m {
        let line = r.expect("clause")?;
        let args = line.args();
        if args.len() != 2 {
            return Err(line.error("a clause has exactly two literals"));
        }
        let a: Literal = line.locate(args[0].parse())?;
        let b: Literal = line.locate(args[1].parse())?;
        clauses.push([a, b]);
    }
    if let Some(line) = r.peek().filter(|l| l.keyword() == "clause") {
        return Err(line.error(format!("more than the declared {m} clauses")));
    }
    normalize_sat32(n, clauses)
}

pub fn serialize_sat(sat: &Sat32Instance) -> String {
    let mut out = format!("sat32 {} {}\n", sat.var_count(), sat.clause_count());
    for [a, b] in sat.clauses() {
        writeln!(out, "clause {a} {b}").unwrap();
    }
    out
}

pub fn parse_independent_set(text: &str, graph: &Graph) -> Result<IndependentSet> {
    let mut r = Reader::new(text);
    let line = r.expect("iset")?;
    let vertices = line
        .args()
        .into_iter()
        .map(|t| line.int(t, "a vertex"))
        .collect::<Result<Vec<usize>>>()?;
    r.finish()?;
    line.locate(IndependentSet::new(graph, vertices))
}

pub fn serialize_independent_set(set: &IndependentSet) -> String {
    let mut out = String::from("iset");
    for v in set.vertices() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    out
}

pub fn parse_assignment(text: &str, n: usize) -> Result<Assignment> {
    let mut r = Reader::new(text);
    let line = r.expect("assign")?;
    let lits = line
        .args()
        .into_iter()
        .map(|t| line.locate(t.parse::<Literal>()))
        .collect::<Result<Vec<_>>>()?;
    r.finish()?;
    line.locate(Assignment::from_literals(n, &lits))
}

pub fn serialize_assignment(asg: &Assignment) -> String {
    let mut out = String::from("assign");
    for lit in asg.literals() {
        write!(out, " {lit}").unwrap();
    }
    out.push('\n');
    out
}
