use crate::error::{Error, Result};
use crate::marker::same_markers;
use crate::order::{LinearOrder, Precedence, WeakOrder};

/// A maximal run of one bucket's markers that is contiguous in Γ.
/// `start..end` is the half-open range of Γ positions it occupies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub markers: Vec<usize>,
    pub start: usize,
    pub end: usize,
}

impl Block {
    pub fn len(&self) -> usize {
        self.markers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.markers.is_empty()
    }
}

/// Per bucket, its blocks sorted by Γ start position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    buckets: Vec<Vec<Block>>,
}

impl BlockPartition {
    pub fn buckets(&self) -> &[Vec<Block>] {
        &self.buckets
    }

    pub fn bucket(&self, i: usize) -> &[Block] {
        &self.buckets[i]
    }

    /// Index of the block of bucket `i` starting at Γ position `pos`.
    pub fn block_starting_at(&self, i: usize, pos: usize) -> Option<usize> {
        self.buckets[i].binary_search_by_key(&pos, |b| b.start).ok()
    }

    /// Adjacencies inside the blocks of bucket `i`.
    pub fn internal(&self, i: usize) -> usize {
        self.buckets[i].iter().map(|b| b.len() - 1).sum()
    }
}

/// Splits every bucket of `pi` into maximal Γ-contiguous blocks.
pub fn partition_blocks(pi: &WeakOrder, gamma: &LinearOrder) -> Result<BlockPartition> {
    if !same_markers(pi.marker_set(), gamma.marker_set()) {
        return Err(Error::MarkerSetMismatch);
    }
    let buckets = pi
        .buckets()
        .iter()
        .map(|bucket| {
            let mut positions: Vec<usize> = bucket.iter().map(|&m| gamma.position(m)).collect();
            positions.sort_unstable();
            let mut blocks: Vec<Block> = Vec::new();
            for pos in positions {
                match blocks.last_mut() {
                    Some(b) if b.end == pos => {
                        b.markers.push(gamma.perm()[pos]);
                        b.end += 1;
                    }
                    _ => blocks.push(Block {
                        markers: vec![gamma.perm()[pos]],
                        start: pos,
                        end: pos + 1,
                    }),
                }
            }
            blocks
        })
        .collect();
    Ok(BlockPartition { buckets })
}
