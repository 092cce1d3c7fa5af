use std::sync::Arc;

use super::{LinearOrder, Precedence};
use crate::error::{Error, Result};
use crate::marker::MarkerSet;

/// An interval order: each marker owns an open interval `(left, right)` with
/// integer endpoints, and `a ≺ b` iff `right(a) ≤ left(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalOrder {
    markers: Arc<MarkerSet>,
    intervals: Vec<(i64, i64)>,
}

impl IntervalOrder {
    pub fn new(markers: Arc<MarkerSet>, intervals: Vec<(i64, i64)>) -> Result<Self> {
        if intervals.len() != markers.len() {
            return Err(Error::invalid(format!(
                "{} intervals for {} markers",
                intervals.len(),
                markers.len()
            )));
        }
        if let Some(i) = intervals.iter().position(|&(l, r)| l >= r) {
            let (l, r) = intervals[i];
            return Err(Error::invalid(format!(
                "interval of `{}` is ({l},{r}); left must be < right",
                markers.marker(i)
            )));
        }
        Ok(IntervalOrder { markers, intervals })
    }

    pub fn interval(&self, idx: usize) -> (i64, i64) {
        self.intervals[idx]
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }
}

impl Precedence for IntervalOrder {
    fn marker_set(&self) -> &Arc<MarkerSet> {
        &self.markers
    }

    fn precedes_idx(&self, a: usize, b: usize) -> bool {
        self.intervals[a].1 <= self.intervals[b].0
    }

    fn admits(&self, perm: &LinearOrder) -> bool {
        // Violation iff some later marker's interval ends before an earlier
        // one starts, i.e. a running max of left endpoints exceeds a right.
        let mut max_left = i64::MIN;
        for &m in perm.perm() {
            let (l, r) = self.intervals[m];
            if r <= max_left {
                return false;
            }
            max_left = max_left.max(l);
        }
        true
    }
}
