use std::sync::Arc;

use super::Precedence;
use crate::error::{Error, Result};
use crate::marker::MarkerSet;

/// A total order, stored as a permutation of marker indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    markers: Arc<MarkerSet>,
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearOrder {
    pub fn new(markers: Arc<MarkerSet>, perm: Vec<usize>) -> Result<Self> {
        let n = markers.len();
        if perm.len() != n {
            return Err(Error::invalid(format!(
                "permutation has {} entries for {} markers",
                perm.len(),
                n
            )));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &m) in perm.iter().enumerate() {
            if m >= n {
                return Err(Error::invalid(format!("marker index {m} out of range")));
            }
            if pos[m] != usize::MAX {
                return Err(Error::invalid(format!(
                    "marker `{}` appears twice in permutation",
                    markers.marker(m)
                )));
            }
            pos[m] = i;
        }
        Ok(LinearOrder { markers, perm, pos })
    }

    pub fn from_ids<S: AsRef<str>>(markers: Arc<MarkerSet>, ids: &[S]) -> Result<Self> {
        let perm = ids
            .iter()
            .map(|id| markers.require(id.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        LinearOrder::new(markers, perm)
    }

    /// The order in which markers appear in their marker set.
    pub fn identity(markers: Arc<MarkerSet>) -> Self {
        let perm = (0..markers.len()).collect();
        LinearOrder::new(markers, perm).expect("identity is a permutation")
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn position(&self, idx: usize) -> usize {
        self.pos[idx]
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// The marker immediately after `idx`, if any.
    pub fn successor(&self, idx: usize) -> Option<usize> {
        self.perm.get(self.pos[idx] + 1).copied()
    }

    pub fn ids(&self) -> Vec<&str> {
        self.markers.ids(&self.perm).collect()
    }

    pub fn into_perm(self) -> Vec<usize> {
        self.perm
    }
}

impl Precedence for LinearOrder {
    fn marker_set(&self) -> &Arc<MarkerSet> {
        &self.markers
    }

    fn precedes_idx(&self, a: usize, b: usize) -> bool {
        self.pos[a] < self.pos[b]
    }

    fn admits(&self, perm: &LinearOrder) -> bool {
        self.perm == perm.perm
    }

    fn generators(&self) -> Vec<(usize, usize)> {
        self.perm.windows(2).map(|w| (w[0], w[1])).collect()
    }
}
