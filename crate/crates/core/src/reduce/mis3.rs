//! MIS on graphs of maximum degree 3 → alignment of a linear order with an
//! interval order.
//!
//! For `n` vertices and `m` edges the instance has `3n + 4m` markers: `u_i`,
//! `v_i` per vertex, `p_j`, `q_j`, `e_j` per edge and `n + m` separators
//! `z_h`. Γ is `u_1 v_1 z_1 … u_n v_n z_n p_1 e_1 q_1 z_{n+1} … p_m e_m q_m
//! z_{n+m}`. Π is the interval order read off a sequence `Z` in which every
//! edge marker occurs twice: each interval spans the two occurrence indices
//! (markers occurring once are doubled in place).

use std::ops::Range;
use std::sync::Arc;

use super::graph::{Graph, IndependentSet};
use crate::error::{Error, Result};
use crate::marker::MarkerSet;
use crate::order::{IntervalOrder, LinearOrder};
use crate::solve::{AlignmentInstance, AlignmentSolution};

/// Which copy of a doubly occurring edge marker an entry of `Z` is. The
/// direct construction deletes either all red or all blue copies of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    /// Markers that occur once in `Z` (`z_h`, `u_i`, `v_i`).
    Plain,
    Blue,
    Red,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZEntry {
    pub marker: usize,
    pub color: Color,
}

/// Everything needed to map alignment solutions back to independent sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mis3Certificate {
    graph: Graph,
    markers: Arc<MarkerSet>,
    u: Vec<usize>,
    v: Vec<usize>,
    p: Vec<usize>,
    q: Vec<usize>,
    e: Vec<usize>,
    z: Vec<usize>,
    gamma: Vec<usize>,
    z_seq: Vec<ZEntry>,
    gadgets: Vec<Range<usize>>,
    z2: Vec<usize>,
    intervals: Vec<(i64, i64)>,
}

fn marker_names(n: usize, m: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(3 * n + 4 * m);
    for i in 1..=n {
        names.extend([format!("u{i}"), format!("v{i}"), format!("z{i}")]);
    }
    for j in 1..=m {
        names.extend([
            format!("p{j}"),
            format!("e{j}"),
            format!("q{j}"),
            format!("z{}", n + j),
        ]);
    }
    names
}

impl Mis3Certificate {
    fn build(graph: &Graph) -> Result<Self> {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        let markers = MarkerSet::from_ids(marker_names(n, m))?.shared();
        let look = |name: String| markers.require(&name).expect("constructed marker");
        let u: Vec<usize> = (1..=n).map(|i| look(format!("u{i}"))).collect();
        let v: Vec<usize> = (1..=n).map(|i| look(format!("v{i}"))).collect();
        let p: Vec<usize> = (1..=m).map(|j| look(format!("p{j}"))).collect();
        let q: Vec<usize> = (1..=m).map(|j| look(format!("q{j}"))).collect();
        let e: Vec<usize> = (1..=m).map(|j| look(format!("e{j}"))).collect();
        let z: Vec<usize> = (1..=n + m).map(|h| look(format!("z{h}"))).collect();
        let gamma: Vec<usize> = (0..markers.len()).collect();

        let inc = graph.incidence();
        let single = |marker| ZEntry {
            marker,
            color: Color::Plain,
        };
        let blue = |marker| ZEntry {
            marker,
            color: Color::Blue,
        };
        let red = |marker| ZEntry {
            marker,
            color: Color::Red,
        };
        let mut z_seq: Vec<ZEntry> = z.iter().map(|&m| single(m)).collect();
        let mut gadgets = Vec::with_capacity(n);
        for i in 1..=n {
            let start = z_seq.len();
            let left = inc.left_of(i);
            let right = inc.right_of(i);
            z_seq.extend(left.iter().map(|&j| blue(q[j - 1])));
            z_seq.push(single(u[i - 1]));
            for &j in right {
                z_seq.extend([blue(p[j - 1]), blue(e[j - 1])]);
            }
            for &j in left {
                z_seq.extend([red(e[j - 1]), red(q[j - 1])]);
            }
            z_seq.push(single(v[i - 1]));
            z_seq.extend(right.iter().map(|&j| red(p[j - 1])));
            gadgets.push(start..z_seq.len());
        }

        let (z2, intervals) = double_and_measure(&z_seq, markers.len());
        Ok(Mis3Certificate {
            graph: graph.clone(),
            markers,
            u,
            v,
            p,
            q,
            e,
            z,
            gamma,
            z_seq,
            gadgets,
            z2,
            intervals,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn markers(&self) -> &Arc<MarkerSet> {
        &self.markers
    }

    pub fn u(&self, i: usize) -> usize {
        self.u[i - 1]
    }

    pub fn v(&self, i: usize) -> usize {
        self.v[i - 1]
    }

    pub fn p(&self, j: usize) -> usize {
        self.p[j - 1]
    }

    pub fn q(&self, j: usize) -> usize {
        self.q[j - 1]
    }

    pub fn e(&self, j: usize) -> usize {
        self.e[j - 1]
    }

    pub fn z(&self, h: usize) -> usize {
        self.z[h - 1]
    }

    /// The sequence `Z` as marker indices.
    pub fn z_sequence(&self) -> Vec<usize> {
        self.z_seq.iter().map(|e| e.marker).collect()
    }

    pub fn z_entries(&self) -> &[ZEntry] {
        &self.z_seq
    }

    /// The subsequence `⟨u_i v_i⟩` of `Z`.
    pub fn gadget(&self, i: usize) -> Vec<usize> {
        self.z_seq[self.gadgets[i - 1].clone()]
            .iter()
            .map(|e| e.marker)
            .collect()
    }

    /// `Z` with every single occurrence doubled; every marker occurs twice.
    pub fn z2(&self) -> &[usize] {
        &self.z2
    }

    /// Interval of each marker: its two 1-based occurrence indices in `Z₂`.
    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    pub fn gamma(&self) -> LinearOrder {
        LinearOrder::new(self.markers.clone(), self.gamma.clone()).expect("Γ is a permutation")
    }

    pub fn pi(&self) -> IntervalOrder {
        IntervalOrder::new(self.markers.clone(), self.intervals.clone())
            .expect("occurrence pairs are increasing")
    }

    pub fn instance(&self) -> AlignmentInstance {
        AlignmentInstance::new(self.gamma().into(), self.pi().into())
            .expect("both orders share the marker set")
    }
}

fn double_and_measure(z_seq: &[ZEntry], n_markers: usize) -> (Vec<usize>, Vec<(i64, i64)>) {
    let mut z2 = Vec::with_capacity(2 * n_markers);
    let mut first = vec![0i64; n_markers];
    let mut intervals = vec![(0i64, 0i64); n_markers];
    for entry in z_seq {
        let copies = if entry.color == Color::Plain { 2 } else { 1 };
        for _ in 0..copies {
            z2.push(entry.marker);
            let idx = z2.len() as i64;
            if first[entry.marker] == 0 {
                first[entry.marker] = idx;
            } else {
                intervals[entry.marker] = (first[entry.marker], idx);
            }
        }
    }
    (z2, intervals)
}

/// Builds the (linear, interval) instance for `graph`. Unless
/// `allow_any_degree` is set, vertices of degree above 3 are rejected.
pub fn reduce_mis3(
    graph: &Graph,
    allow_any_degree: bool,
) -> Result<(AlignmentInstance, Mis3Certificate)> {
    if !allow_any_degree {
        graph.check_max_degree_3()?;
    }
    let cert = Mis3Certificate::build(graph)?;
    Ok((cert.instance(), cert))
}

/// Direct map: for every edge `j` with endpoints `a < b`, drop the red copies
/// of `e_j q_j` and `p_j` if `a ∈ V′`, else the blue copies of `q_j` and
/// `p_j e_j`. What remains of `Z` is a linear extension of Π with at least
/// `m + |V′|` adjacencies with Γ.
pub fn solution_from_independent_set(
    cert: &Mis3Certificate,
    vs: &IndependentSet,
) -> Result<AlignmentSolution> {
    let g = cert.graph();
    let vs = IndependentSet::new(g, vs.vertices().iter().copied())?;
    let mut dropped = std::collections::HashSet::new();
    for (j, &(a, _)) in g.edges().iter().enumerate() {
        let j = j + 1;
        let color = if vs.contains(a) {
            Color::Red
        } else {
            Color::Blue
        };
        for marker in [cert.p(j), cert.q(j), cert.e(j)] {
            dropped.insert((marker, color));
        }
    }
    let perm: Vec<usize> = cert
        .z_entries()
        .iter()
        .filter(|e| !dropped.contains(&(e.marker, e.color)))
        .map(|e| e.marker)
        .collect();
    let pi_ext = LinearOrder::new(cert.markers.clone(), perm)?;
    AlignmentSolution::new(cert.gamma(), pi_ext)
}

/// Result of the backward map together with the repaired solution it was
/// read from.
#[derive(Debug, Clone)]
pub struct MisExtraction {
    pub set: IndependentSet,
    pub repaired: AlignmentSolution,
    pub repairs: usize,
}

fn uv_adjacent(cert: &Mis3Certificate, pos: &[usize], i: usize) -> bool {
    pos[cert.v(i)] == pos[cert.u(i)] + 1
}

/// Backward map with its repair trace.
///
/// While some edge `j = (a, b)` has both `u_a v_a` and `u_b v_b` as
/// adjacencies, `e_j q_j` is moved between `u_a` and `v_a`: this trades the
/// adjacency `u_a v_a` for `e_j q_j`. Edges are scanned in ascending id.
/// Every repair adds one `e q` adjacency and removes none, so there are at
/// most `m` of them.
pub fn extract_independent_set_with_repair(
    cert: &Mis3Certificate,
    sol: &AlignmentSolution,
) -> Result<MisExtraction> {
    cert.instance().check_feasible(sol)?;
    let g = cert.graph();
    let markers = cert.markers().clone();
    let mut perm = sol.pi_ext.perm().to_vec();
    let mut current = sol.clone();
    let mut repairs = 0;
    loop {
        let pos = current.pi_ext.positions();
        let conflict = g
            .edges()
            .iter()
            .enumerate()
            .find(|(_, &(a, b))| uv_adjacent(cert, pos, a) && uv_adjacent(cert, pos, b));
        let Some((j, &(a, _))) = conflict else { break };
        let j = j + 1;
        let (e, q) = (cert.e(j), cert.q(j));
        perm.retain(|&x| x != e && x != q);
        let at = perm
            .iter()
            .position(|&x| x == cert.u(a))
            .expect("u_a is present")
            + 1;
        perm.splice(at..at, [e, q]);
        let next = AlignmentSolution::new(
            cert.gamma(),
            LinearOrder::new(markers.clone(), perm.clone())?,
        )?;
        if next.n_adj < current.n_adj {
            return Err(Error::RepairRegression {
                before: current.n_adj,
                after: next.n_adj,
            });
        }
        current = next;
        repairs += 1;
        debug_assert!(repairs <= g.edge_count());
    }
    cert.instance().check_feasible(&current)?;
    let pos = current.pi_ext.positions();
    let vertices = (1..=g.vertex_count()).filter(|&i| uv_adjacent(cert, pos, i));
    let set = IndependentSet::new(g, vertices)?;
    Ok(MisExtraction {
        set,
        repaired: current,
        repairs,
    })
}

/// Backward map: an independent set of at least `n_adj − m` vertices.
pub fn extract_independent_set(
    cert: &Mis3Certificate,
    sol: &AlignmentSolution,
) -> Result<IndependentSet> {
    extract_independent_set_with_repair(cert, sol).map(|x| x.set)
}
