//! Seeded random graphs, SAT instances and alignment instances. The same
//! configuration always produces the same output.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::marker::MarkerSet;
use crate::order::{DagOrder, IntervalOrder, LinearOrder, Order, Representation, WeakOrder};
use crate::reduce::{normalize_sat32, Graph, Literal, Sat32Instance};
use crate::solve::AlignmentInstance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    /// Vertices, variables or markers.
    pub n: usize,
    /// Edge count for graphs; defaults to `n`, capped at what degree 3 allows.
    pub m: Option<usize>,
    pub gamma: Representation,
    pub pi: Representation,
    /// Largest bucket of generated weak orders.
    pub bucket_max: usize,
}

impl GeneratorConfig {
    pub fn new(seed: u64, n: usize) -> Self {
        GeneratorConfig {
            seed,
            n,
            m: None,
            gamma: Representation::Linear,
            pi: Representation::Weak,
            bucket_max: 3,
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

const ATTEMPTS: usize = 200;

/// A graph of maximum degree 3 with `m` edges, sampled edge by edge with
/// rejection of loops, duplicates and degree overflow.
pub fn gen_graph(cfg: &GeneratorConfig) -> Result<Graph> {
    let n = cfg.n;
    if n == 0 {
        return Err(Error::invalid("a graph needs at least one vertex"));
    }
    let limit = (3 * n / 2).min(n * (n - 1) / 2);
    let m = cfg.m.unwrap_or(n.min(limit));
    if m > limit {
        return Err(Error::invalid(format!(
            "{m} edges do not fit on {n} vertices with degree at most 3"
        )));
    }
    let mut rng = cfg.rng();
    for _ in 0..ATTEMPTS {
        let mut degree = vec![0usize; n + 1];
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
        let mut tries = 0;
        while edges.len() < m && tries < 100 * (m + 1) {
            tries += 1;
            let a = rng.random_range(1..=n);
            let b = rng.random_range(1..=n);
            let e = (a.min(b), a.max(b));
            if a == b || degree[a] == 3 || degree[b] == 3 || edges.contains(&e) {
                continue;
            }
            degree[a] += 1;
            degree[b] += 1;
            edges.push(e);
        }
        if edges.len() == m {
            return Graph::new(n, edges);
        }
    }
    Err(Error::invalid(format!(
        "could not sample {m} edges on {n} vertices"
    )))
}

/// A 3-occurrence 2SAT instance on `n` variables (`n` even, `m = 3n/2`).
/// Each variable gets a random mixed polarity pattern; the `3n` literals are
/// shuffled and paired into clauses until no clause repeats a variable.
pub fn gen_sat32(cfg: &GeneratorConfig) -> Result<Sat32Instance> {
    let n = cfg.n;
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "{n} variables cannot fill clauses of two literals with three occurrences each (need n even, n ≥ 2)"
        )));
    }
    let mut rng = cfg.rng();
    let mut lits = Vec::with_capacity(3 * n);
    for var in 1..=n {
        let two_positive = rng.random_bool(0.5);
        lits.extend([Literal::pos(var), Literal::neg(var)]);
        lits.push(Literal {
            var,
            positive: two_positive,
        });
    }
    for _ in 0..ATTEMPTS * 10 {
        lits.shuffle(&mut rng);
        if lits.chunks(2).all(|c| c[0].var != c[1].var) {
            let clauses = lits.chunks(2).map(|c| [c[0], c[1]]).collect();
            return normalize_sat32(n, clauses);
        }
    }
    Err(Error::invalid(format!(
        "could not pair the literals of {n} variables"
    )))
}

fn random_order<R: Rng>(
    repr: Representation,
    markers: &Arc<MarkerSet>,
    bucket_max: usize,
    rng: &mut R,
) -> Result<Order> {
    let n = markers.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Ok(match repr {
        Representation::Linear => LinearOrder::new(markers.clone(), perm)?.into(),
        Representation::Weak => {
            let mut buckets = Vec::new();
            let mut rest = &perm[..];
            while !rest.is_empty() {
                let k = rng.random_range(1..=bucket_max.max(1).min(rest.len()));
                buckets.push(rest[..k].to_vec());
                rest = &rest[k..];
            }
            WeakOrder::new(markers.clone(), buckets)?.into()
        }
        Representation::Interval => {
            let span = 2 * n as i64;
            let intervals = (0..n)
                .map(|_| {
                    let l = rng.random_range(0..span);
                    (l, l + rng.random_range(1..=(n as i64).max(1)))
                })
                .collect();
            IntervalOrder::new(markers.clone(), intervals)?.into()
        }
        Representation::Dag => {
            let mut rel = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(0.25) {
                        rel.push((perm[i], perm[j]));
                    }
                }
            }
            DagOrder::new(markers.clone(), rel)?.into()
        }
    })
}

/// Markers `m1 … mn` and two random orders of the configured families.
pub fn gen_instance(cfg: &GeneratorConfig) -> Result<AlignmentInstance> {
    if cfg.n == 0 {
        return Err(Error::invalid("an instance needs at least one marker"));
    }
    let markers = MarkerSet::from_ids((1..=cfg.n).map(|i| format!("m{i}")))?.shared();
    let mut rng = cfg.rng();
    let gamma = random_order(cfg.gamma, &markers, cfg.bucket_max, &mut rng)?;
    let pi = random_order(cfg.pi, &markers, cfg.bucket_max, &mut rng)?;
    AlignmentInstance::new(gamma, pi)
}
