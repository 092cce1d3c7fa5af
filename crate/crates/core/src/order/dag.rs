use std::sync::Arc;

use super::Precedence;
use crate::error::{Error, Result};
use crate::marker::MarkerSet;

/// Dense square bit matrix used for transitive closures.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    /// row[dst] |= row[src]
    fn or_row(&mut self, dst: usize, src: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.bits[src * w + k];
            self.bits[dst * w + k] |= v;
        }
    }

    fn row_count(&self, r: usize) -> usize {
        self.bits[r * self.words..(r + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }
}

/// A general partial order given by a generating relation. The transitive
/// closure is computed once at construction.
#[derive(Debug, Clone)]
pub struct DagOrder {
    markers: Arc<MarkerSet>,
    relation: Vec<(usize, usize)>,
    closure: BitMatrix,
    /// Transposed closure: `pred.get(b, a)` iff `a ≺ b`.
    pred: BitMatrix,
}

impl PartialEq for DagOrder {
    fn eq(&self, other: &Self) -> bool {
        self.markers == other.markers && self.relation == other.relation
    }
}

impl Eq for DagOrder {}

impl DagOrder {
    /// Builds the order generated by `relation`; fails on self-loops and cycles.
    pub fn new(markers: Arc<MarkerSet>, relation: Vec<(usize, usize)>) -> Result<Self> {
        let n = markers.len();
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in &relation {
            if a >= n || b >= n {
                return Err(Error::invalid(
                    "relation references an unknown marker index",
                ));
            }
            if a == b {
                return Err(Error::invalid(format!(
                    "relation is reflexive at `{}`",
                    markers.marker(a)
                )));
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut topo = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = stack.pop() {
            topo.push(v);
            for &s in &succ[v] {
                indeg[s] -= 1;
                if indeg[s] == 0 {
                    stack.push(s);
                }
            }
        }
        if topo.len() != n {
            let culprit = (0..n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(Error::invalid(format!(
                "relation contains a cycle through `{}`",
                markers.marker(culprit)
            )));
        }
        let mut closure = BitMatrix::new(n);
        for &v in topo.iter().rev() {
            for &s in &succ[v] {
                closure.set(v, s);
                closure.or_row(v, s);
            }
        }
        let mut pred = BitMatrix::new(n);
        for a in 0..n {
            for b in 0..n {
                if closure.get(a, b) {
                    pred.set(b, a);
                }
            }
        }
        Ok(DagOrder {
            markers,
            relation,
            closure,
            pred,
        })
    }

    pub fn from_ids<S: AsRef<str>>(markers: Arc<MarkerSet>, pairs: &[(S, S)]) -> Result<Self> {
        let relation = pairs
            .iter()
            .map(|(a, b)| Ok((markers.require(a.as_ref())?, markers.require(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        DagOrder::new(markers, relation)
    }

    /// The generating relation as given at construction.
    pub fn relation(&self) -> &[(usize, usize)] {
        &self.relation
    }

    pub fn len(&self) -> usize {
        self.markers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.markers.is_empty()
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.closure.get(a, b) || self.closure.get(b, a)
    }

    /// Number of strict predecessors of `x`.
    pub fn predecessor_count(&self, x: usize) -> usize {
        self.pred.row_count(x)
    }

    /// Strict predecessor set of `x` as packed bits.
    pub(crate) fn predecessor_bits(&self, x: usize) -> &[u64] {
        self.pred.row(x)
    }

    pub fn predecessors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&a| self.pred.get(x, a))
    }

    pub fn successors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&b| self.closure.get(x, b))
    }
}

impl Precedence for DagOrder {
    fn marker_set(&self) -> &Arc<MarkerSet> {
        &self.markers
    }

    fn precedes_idx(&self, a: usize, b: usize) -> bool {
        self.closure.get(a, b)
    }

    fn admits(&self, perm: &super::LinearOrder) -> bool {
        self.relation
            .iter()
            .all(|&(a, b)| perm.position(a) < perm.position(b))
    }

    fn generators(&self) -> Vec<(usize, usize)> {
        self.relation.clone()
    }

    fn to_dag(&self) -> DagOrder {
        self.clone()
    }
}
