//! Exact dynamic program for aligning a linear order Γ with a weak order Π.
//!
//! Within a bucket, blocks (maximal Γ-contiguous runs) can be kept intact and
//! no adjacency can join two blocks of the same bucket: that would make them
//! contiguous in Γ, contradicting maximality. The only remaining adjacencies
//! cross a bucket boundary, joining the last block of bucket `i − 1` to the
//! first block of bucket `i`, so at most one per boundary.
//!
//! `m_adj(i, b)` is the best count over buckets `0..=i` given that block `b`
//! closes bucket `i`:
//!
//! ```text
//! m_adj(0, b) = internal(0)
//! m_adj(i, b) = internal(i) + max_{b' ∈ B[i-1]} ( m_adj(i-1, b') + connect(b', i, b) )
//! ```
//!
//! where `connect(b', i, b) = 1` iff a block `f` of bucket `i` starts right
//! after `b'` ends in Γ, with `f ≠ b` unless `b` is the only block of the
//! bucket.

use super::blocks::{partition_blocks, BlockPartition};
use super::AlignmentSolution;
use crate::error::{Error, Result};
use crate::order::{LinearOrder, Precedence, WeakOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpEntry {
    pub value: usize,
    /// Chosen last block of the previous bucket.
    pub back: Option<usize>,
}

/// `m_adj` for every (bucket, block) pair, bucket indices from 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DpTable {
    entries: Vec<Vec<DpEntry>>,
}

impl DpTable {
    pub fn entry(&self, i: usize, b: usize) -> DpEntry {
        self.entries[i][b]
    }

    pub fn bucket(&self, i: usize) -> &[DpEntry] {
        &self.entries[i]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn connect(partition: &BlockPartition, prev: usize, b_prev: usize, i: usize, b: usize) -> bool {
    let end = partition.bucket(prev)[b_prev].end;
    match partition.block_starting_at(i, end) {
        Some(f) => partition.bucket(i).len() == 1 || f != b,
        None => false,
    }
}

fn evaluate(i: usize, b: usize, table: &DpTable, partition: &BlockPartition) -> DpEntry {
    let internal = partition.internal(i);
    if i == 0 {
        return DpEntry {
            value: internal,
            back: None,
        };
    }
    let prev = i - 1;
    let mut best: Option<(usize, usize)> = None;
    // Blocks are sorted by Γ start, so keeping the first maximum picks the
    // predecessor with the smallest start.
    for (bp, entry) in table.entries[prev].iter().enumerate() {
        let v = entry.value + connect(partition, prev, bp, i, b) as usize;
        if best.is_none_or(|(bv, _)| v > bv) {
            best = Some((v, bp));
        }
    }
    let (v, bp) = best.expect("buckets are nonempty");
    DpEntry {
        value: internal + v,
        back: Some(bp),
    }
}

/// One entry `m_adj(i, b)`; `table` must hold bucket `i − 1`.
pub fn dp_recurrence(i: usize, b: usize, table: &DpTable, partition: &BlockPartition) -> usize {
    evaluate(i, b, table, partition).value
}

pub fn fill_table(partition: &BlockPartition) -> DpTable {
    let mut table = DpTable::default();
    for i in 0..partition.buckets().len() {
        let row = (0..partition.bucket(i).len())
            .map(|b| evaluate(i, b, &table, partition))
            .collect();
        table.entries.push(row);
    }
    table
}

/// Maximum-adjacency linear extension of `pi` against the fixed order `gamma`.
pub fn dp_align_linear_weak(gamma: &LinearOrder, pi: &WeakOrder) -> Result<AlignmentSolution> {
    if gamma.is_empty() {
        return Err(Error::invalid("alignment needs at least one marker"));
    }
    let partition = partition_blocks(pi, gamma)?;
    let table = fill_table(&partition);
    let k = table.len();

    let mut last = vec![0usize; k];
    let final_row = table.bucket(k - 1);
    let mut best = 0;
    for (b, e) in final_row.iter().enumerate() {
        if e.value > final_row[best].value {
            best = b;
        }
    }
    last[k - 1] = best;
    for i in (1..k).rev() {
        last[i - 1] = table
            .entry(i, last[i])
            .back
            .expect("non-initial entry has a back-pointer");
    }

    let mut perm = Vec::with_capacity(gamma.len());
    for i in 0..k {
        let blocks = partition.bucket(i);
        let closing = last[i];
        let opening = (i > 0)
            .then(|| partition.block_starting_at(i, partition.bucket(i - 1)[last[i - 1]].end))
            .flatten()
            .filter(|&f| blocks.len() == 1 || f != closing);
        if let Some(f) = opening {
            if f != closing {
                perm.extend_from_slice(&blocks[f].markers);
            }
        }
        for (j, block) in blocks.iter().enumerate() {
            if j != closing && Some(j) != opening {
                perm.extend_from_slice(&block.markers);
            }
        }
        perm.extend_from_slice(&blocks[closing].markers);
    }

    let pi_ext = LinearOrder::new(gamma.marker_set().clone(), perm)?;
    let sol = AlignmentSolution::new(gamma.clone(), pi_ext)?;
    debug_assert_eq!(sol.n_adj, final_row[best].value);
    Ok(sol)
}
