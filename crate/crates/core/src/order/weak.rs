use std::sync::Arc;

use super::{LinearOrder, Precedence};
use crate::error::{Error, Result};
use crate::marker::MarkerSet;

/// A weak order: ordered buckets, with members of one bucket incomparable and
/// `a ≺ b` iff `a`'s bucket comes strictly before `b`'s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakOrder {
    markers: Arc<MarkerSet>,
    buckets: Vec<Vec<usize>>,
    bucket_of: Vec<usize>,
}

impl WeakOrder {
    pub fn new(markers: Arc<MarkerSet>, buckets: Vec<Vec<usize>>) -> Result<Self> {
        let n = markers.len();
        let mut bucket_of = vec![usize::MAX; n];
        for (h, bucket) in buckets.iter().enumerate() {
            if bucket.is_empty() {
                return Err(Error::invalid(format!("bucket {} is empty", h + 1)));
            }
            for &m in bucket {
                if m >= n {
                    return Err(Error::invalid(format!("marker index {m} out of range")));
                }
                if bucket_of[m] != usize::MAX {
                    return Err(Error::invalid(format!(
                        "marker `{}` appears in more than one bucket",
                        markers.marker(m)
                    )));
                }
                bucket_of[m] = h;
            }
        }
        if let Some(m) = bucket_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::invalid(format!(
                "marker `{}` is in no bucket",
                markers.marker(m)
            )));
        }
        Ok(WeakOrder {
            markers,
            buckets,
            bucket_of,
        })
    }

    pub fn from_ids<S: AsRef<str>>(markers: Arc<MarkerSet>, buckets: &[Vec<S>]) -> Result<Self> {
        let buckets = buckets
            .iter()
            .map(|b| {
                b.iter()
                    .map(|id| markers.require(id.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        WeakOrder::new(markers, buckets)
    }

    /// One singleton bucket per marker, in permutation order.
    pub fn from_linear(order: &LinearOrder) -> Self {
        let buckets = order.perm().iter().map(|&m| vec![m]).collect();
        WeakOrder::new(order.marker_set().clone(), buckets).expect("a permutation partitions")
    }

    pub fn buckets(&self) -> &[Vec<usize>] {
        &self.buckets
    }

    pub fn bucket_of(&self, idx: usize) -> usize {
        self.bucket_of[idx]
    }

    /// Product of bucket-size factorials, or `None` on overflow.
    pub fn extension_count(&self) -> Option<u128> {
        self.buckets.iter().try_fold(1u128, |acc, b| {
            (1..=b.len() as u128).try_fold(acc, |a, k| a.checked_mul(k))
        })
    }

    /// The order in which each bucket's members appear in `perm`.
    pub fn bucket_orders(&self, perm: &LinearOrder) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .buckets
            .iter()
            .map(|b| Vec::with_capacity(b.len()))
            .collect();
        for &m in perm.perm() {
            out[self.bucket_of[m]].push(m);
        }
        out
    }

    /// Concatenates per-bucket orderings into a linear extension.
    pub fn linearize(&self, bucket_orders: &[Vec<usize>]) -> Result<LinearOrder> {
        if bucket_orders.len() != self.buckets.len() {
            return Err(Error::invalid(
                "bucket ordering has the wrong number of buckets",
            ));
        }
        for (h, (given, bucket)) in bucket_orders.iter().zip(&self.buckets).enumerate() {
            let mut a = given.clone();
            let mut b = bucket.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(Error::invalid(format!(
                    "ordering of bucket {} is not a permutation of it",
                    h + 1
                )));
            }
        }
        let perm = bucket_orders.iter().flatten().copied().collect();
        LinearOrder::new(self.markers.clone(), perm)
    }
}

impl Precedence for WeakOrder {
    fn marker_set(&self) -> &Arc<MarkerSet> {
        &self.markers
    }

    fn precedes_idx(&self, a: usize, b: usize) -> bool {
        self.bucket_of[a] < self.bucket_of[b]
    }

    fn admits(&self, perm: &LinearOrder) -> bool {
        perm.perm()
            .windows(2)
            .all(|w| self.bucket_of[w[0]] <= self.bucket_of[w[1]])
    }

    fn generators(&self) -> Vec<(usize, usize)> {
        self.buckets
            .windows(2)
            .flat_map(|w| {
                let (lo, hi) = (&w[0], &w[1]);
                lo.iter()
                    .flat_map(move |&a| hi.iter().map(move |&b| (a, b)))
            })
            .collect()
    }
}
