//! Recognition of the order hierarchy by forbidden patterns, and conversion
//! of DAG orders into weak and interval representations.

use super::{DagOrder, IntervalOrder, OrderFamily, Precedence, WeakOrder};
use crate::error::{Error, Result};

fn all_comparable(d: &DagOrder) -> bool {
    let n = d.len();
    (0..n).all(|a| (a + 1..n).all(|b| d.comparable(a, b)))
}

/// Incomparability (together with equality) is an equivalence relation.
fn incomparability_transitive(d: &DagOrder) -> bool {
    let n = d.len();
    for b in 0..n {
        let incomp: Vec<usize> = (0..n).filter(|&x| x != b && !d.comparable(x, b)).collect();
        for (i, &a) in incomp.iter().enumerate() {
            for &c in &incomp[i + 1..] {
                if d.comparable(a, c) {
                    return false;
                }
            }
        }
    }
    true
}

fn related_pairs(d: &DagOrder) -> Vec<(usize, usize)> {
    let n = d.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if d.precedes_idx(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// An induced 2+2: `a ≺ b`, `c ≺ d` with no relation across the two chains.
fn has_two_plus_two(d: &DagOrder, pairs: &[(usize, usize)]) -> bool {
    for &(a, b) in pairs {
        for &(c, e) in pairs {
            if !d.precedes_idx(a, e) && !d.precedes_idx(c, b) && a != c && b != e {
                return true;
            }
        }
    }
    false
}

/// An induced 3+1: a three-chain plus an element incomparable to all of it.
fn has_three_plus_one(d: &DagOrder, pairs: &[(usize, usize)]) -> bool {
    let n = d.len();
    for &(a, b) in pairs {
        for c in d.successors(b) {
            if (0..n).any(|x| {
                x != a
                    && x != b
                    && x != c
                    && !d.comparable(x, a)
                    && !d.comparable(x, b)
                    && !d.comparable(x, c)
            }) {
                return true;
            }
        }
    }
    false
}

/// Finest family of the hierarchy containing `order`.
pub fn classify(order: &DagOrder) -> OrderFamily {
    if all_comparable(order) {
        return OrderFamily::Linear;
    }
    if incomparability_transitive(order) {
        return OrderFamily::Weak;
    }
    let pairs = related_pairs(order);
    if has_two_plus_two(order, &pairs) {
        return OrderFamily::Partial;
    }
    if has_three_plus_one(order, &pairs) {
        OrderFamily::Interval
    } else {
        OrderFamily::Semiorder
    }
}

/// Buckets of a weak (or linear) DAG order: the incomparability classes,
/// ordered by the size of their common predecessor set.
pub fn to_weak(order: &DagOrder) -> Result<WeakOrder> {
    let family = classify(order);
    if !family.is_within(OrderFamily::Weak) {
        return Err(Error::FamilyMismatch {
            expected: "linear, weak",
            found: family.name().to_owned(),
        });
    }
    let n = order.len();
    let mut keyed: Vec<(usize, usize)> = (0..n).map(|x| (order.predecessor_count(x), x)).collect();
    keyed.sort_unstable();
    let mut buckets: Vec<Vec<usize>> = Vec::new();
    let mut last_key = None;
    for (key, x) in keyed {
        if last_key == Some(key) {
            buckets.last_mut().expect("bucket open").push(x);
        } else {
            buckets.push(vec![x]);
            last_key = Some(key);
        }
    }
    WeakOrder::new(order.marker_set().clone(), buckets)
}

/// An integer open-interval realization of an interval order.
///
/// In an interval order the strict predecessor sets form a chain under
/// inclusion. With `D` the distinct predecessor sets sorted by size,
/// `left(x)` is the rank of `pred(x)` in `D` and `right(x)` is the smallest
/// rank of `pred(y)` over the successors `y` of `x` (or `|D|` if `x` is
/// maximal). Then `x ≺ y` iff `right(x) ≤ left(y)`.
pub fn to_interval_representation(order: &DagOrder) -> Result<IntervalOrder> {
    let family = classify(order);
    if !family.is_within(OrderFamily::Interval) {
        return Err(Error::FamilyMismatch {
            expected: "linear, weak, semiorder, interval",
            found: family.name().to_owned(),
        });
    }
    let n = order.len();
    let mut sets: Vec<(usize, &[u64])> = (0..n)
        .map(|x| (order.predecessor_count(x), order.predecessor_bits(x)))
        .collect();
    sets.sort();
    sets.dedup();
    // The chain property makes distinct sets have distinct sizes.
    let rank_of_size = |size: usize| -> i64 {
        sets.binary_search_by_key(&size, |&(s, _)| s)
            .expect("every predecessor set is listed") as i64
    };
    let left: Vec<i64> = (0..n)
        .map(|x| rank_of_size(order.predecessor_count(x)))
        .collect();
    let top = sets.len() as i64;
    let intervals = (0..n)
        .map(|x| {
            let right = order.successors(x).map(|y| left[y]).min().unwrap_or(top);
            (left[x], right)
        })
        .collect();
    IntervalOrder::new(order.marker_set().clone(), intervals)
}
