//! Oracles shared by the integration tests. They deliberately avoid the
//! library's solvers, metrics and enumerators.

#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use poalign::reduce::{Graph, Sat32Instance};
use poalign::{AlignmentSolution, LinearOrder, Precedence};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

/// Number of `x` immediately followed by `y` in both permutations.
pub fn adjacencies(a: &[usize], b: &[usize]) -> usize {
    let next: HashMap<usize, usize> = b.windows(2).map(|w| (w[0], w[1])).collect();
    a.windows(2)
        .filter(|w| next.get(&w[0]) == Some(&w[1]))
        .count()
}

/// Every topological order of the precedence relation, by plain recursion.
pub fn extensions<P: Precedence + ?Sized>(order: &P) -> Vec<Vec<usize>> {
    fn rec<P: Precedence + ?Sized>(
        order: &P,
        n: usize,
        placed: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if placed[x] {
                continue;
            }
            let ready = (0..n).all(|y| placed[y] || y == x || !order.precedes_idx(y, x));
            if ready {
                placed[x] = true;
                cur.push(x);
                rec(order, n, placed, cur, out);
                cur.pop();
                placed[x] = false;
            }
        }
    }
    let n = order.marker_set().len();
    let mut out = Vec::new();
    rec(order, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Best adjacency count over all pairs of extensions.
pub fn double_enumeration<P, Q>(gamma: &P, pi: &Q) -> usize
where
    P: Precedence + ?Sized,
    Q: Precedence + ?Sized,
{
    let gs = extensions(gamma);
    let ps = extensions(pi);
    let mut best = 0;
    for g in &gs {
        for p in &ps {
            best = best.max(adjacencies(g, p));
        }
    }
    best
}

/// Checks that a solution's extensions respect the orders and that its
/// counts agree with a direct recount.
pub fn check_solution<P, Q>(gamma: &P, pi: &Q, sol: &AlignmentSolution)
where
    P: Precedence + ?Sized,
    Q: Precedence + ?Sized,
{
    let n = gamma.marker_set().len();
    assert!(
        respects(gamma, &sol.gamma_ext),
        "gamma extension violates its order"
    );
    assert!(respects(pi, &sol.pi_ext), "pi extension violates its order");
    assert_eq!(
        sol.n_adj,
        adjacencies(sol.gamma_ext.perm(), sol.pi_ext.perm())
    );
    assert_eq!(sol.n_adj + sol.n_brk, n - 1);
}

pub fn respects<P: Precedence + ?Sized>(order: &P, ext: &LinearOrder) -> bool {
    let p = ext.perm();
    let mut seen = vec![false; p.len()];
    for &x in p {
        if seen[x] {
            return false;
        }
        seen[x] = true;
    }
    (0..p.len()).all(|j| (0..j).all(|i| !order.precedes_idx(p[j], p[i])))
}

/// Textbook recognition by forbidden patterns: weak iff incomparability is
/// transitive, interval iff no 2+2, semiorder iff interval and no 3+1.
pub fn brute_family<P: Precedence + ?Sized>(order: &P) -> &'static str {
    let n = order.marker_set().len();
    let lt = |a: usize, b: usize| order.precedes_idx(a, b);
    let inc = |a: usize, b: usize| a != b && !lt(a, b) && !lt(b, a);
    let all_comparable = (0..n).all(|a| (0..n).all(|b| !inc(a, b)));
    if all_comparable {
        return "linear";
    }
    let mut weak = true;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != c && inc(a, b) && inc(b, c) && !inc(a, c) {
                    weak = false;
                }
            }
        }
    }
    if weak {
        return "weak";
    }
    let mut two_two = false;
    let mut three_one = false;
    for a in 0..n {
        for b in 0..n {
            if !lt(a, b) {
                continue;
            }
            for c in 0..n {
                for d in 0..n {
                    let distinct = [a, b].iter().all(|x| *x != c && *x != d);
                    if distinct && lt(c, d) && inc(a, c) && inc(a, d) && inc(b, c) && inc(b, d) {
                        two_two = true;
                    }
                }
                if lt(b, c) {
                    for d in 0..n {
                        if [a, b, c].iter().all(|&x| inc(x, d)) {
                            three_one = true;
                        }
                    }
                }
            }
        }
    }
    match (two_two, three_one) {
        (true, _) => "partial",
        (false, true) => "interval",
        (false, false) => "semiorder",
    }
}

/// All labeled connected graphs on `n` vertices with maximum degree 3.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let mut deg = vec![0; n + 1];
        for &(a, b) in &edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().any(|&d| d > 3) {
            continue;
        }
        let mut reach = vec![false; n + 1];
        reach[1] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for &(a, b) in &edges {
                if reach[a] != reach[b] {
                    reach[a] = true;
                    reach[b] = true;
                    changed = true;
                }
            }
        }
        if reach[1..].iter().all(|&r| r) {
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

pub fn all_small_connected_graphs() -> Vec<Graph> {
    (1..=4).flat_map(connected_graphs).collect()
}

/// Largest vertex subset with no edge inside, by subset scan.
pub fn max_independent_set(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&s| {
            g.edges()
                .iter()
                .all(|&(a, b)| s >> (a - 1) & 1 == 0 || s >> (b - 1) & 1 == 0)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

/// Number of satisfied clauses under `values` (index 0 is variable 1).
pub fn satisfied(sat: &Sat32Instance, values: &[bool]) -> usize {
    sat.clauses()
        .iter()
        .filter(|c| c.iter().any(|l| values[l.var - 1] == l.positive))
        .count()
}

pub fn max_satisfied(sat: &Sat32Instance) -> usize {
    let n = sat.var_count();
    (0u32..1 << n)
        .map(|m| {
            let v: Vec<bool> = (0..n).map(|i| m >> i & 1 == 1).collect();
            satisfied(sat, &v)
        })
        .max()
        .unwrap()
}
