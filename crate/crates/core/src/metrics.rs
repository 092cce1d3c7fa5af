//! Adjacency and breakpoint counts between two permutations.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::marker::same_markers;
use crate::order::{LinearOrder, Precedence};

fn check_same(p1: &LinearOrder, p2: &LinearOrder) -> Result<()> {
    if same_markers(p1.marker_set(), p2.marker_set()) {
        Ok(())
    } else {
        Err(Error::MarkerSetMismatch)
    }
}

fn adjacencies<'a>(
    p1: &'a LinearOrder,
    p2: &'a LinearOrder,
) -> impl Iterator<Item = (usize, usize)> + 'a {
    p1.perm()
        .windows(2)
        .filter(move |w| p2.position(w[1]) == p2.position(w[0]) + 1)
        .map(|w| (w[0], w[1]))
}

/// Number of ordered pairs `(a, b)` with `a` immediately before `b` in both.
pub fn count_adjacencies(p1: &LinearOrder, p2: &LinearOrder) -> Result<usize> {
    check_same(p1, p2)?;
    Ok(adjacencies(p1, p2).count())
}

/// `n − 1 − count_adjacencies`; symmetric in its arguments.
pub fn count_breakpoints(p1: &LinearOrder, p2: &LinearOrder) -> Result<usize> {
    check_same(p1, p2)?;
    if p1.is_empty() {
        return Err(Error::invalid(
            "breakpoints are undefined on an empty marker set",
        ));
    }
    Ok(p1.len() - 1 - adjacencies(p1, p2).count())
}

/// The adjacencies themselves, as marker index pairs.
pub fn adjacency_set(p1: &LinearOrder, p2: &LinearOrder) -> Result<BTreeSet<(usize, usize)>> {
    check_same(p1, p2)?;
    Ok(adjacencies(p1, p2).collect())
}
