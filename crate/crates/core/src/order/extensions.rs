//! Linear extension enumeration (topological sorts) and random sampling.

use std::sync::Arc;

use rand::Rng;

use super::{LinearOrder, Precedence};
use crate::error::{Error, Result};
use crate::marker::MarkerSet;

/// Cursor over all linear extensions of an order.
///
/// Extensions come out in lexicographic order of marker ids: at every
/// position the available markers are tried in ascending id order.
#[derive(Debug, Clone)]
pub struct LinearExtensions {
    markers: Arc<MarkerSet>,
    succ: Vec<Vec<usize>>,
    /// Unplaced strict predecessors per marker.
    waiting: Vec<usize>,
    placed: Vec<bool>,
    by_id: Vec<usize>,
    prefix: Vec<usize>,
    /// Per depth, the next position in `by_id` to try.
    cursor: Vec<usize>,
    started: bool,
    done: bool,
}

impl LinearExtensions {
    pub fn new<P: Precedence + ?Sized>(order: &P) -> Self {
        let markers = order.marker_set().clone();
        let n = markers.len();
        let mut succ = vec![Vec::new(); n];
        let mut waiting = vec![0; n];
        for (a, b) in order.generators() {
            succ[a].push(b);
            waiting[b] += 1;
        }
        LinearExtensions {
            by_id: markers.indices_by_id(),
            markers,
            succ,
            waiting,
            placed: vec![false; n],
            prefix: Vec::with_capacity(n),
            cursor: vec![0; n + 1],
            started: false,
            done: false,
        }
    }

    fn push(&mut self, x: usize) {
        self.placed[x] = true;
        for &s in &self.succ[x] {
            self.waiting[s] -= 1;
        }
        self.prefix.push(x);
    }

    fn pop(&mut self) {
        let x = self.prefix.pop().expect("pop on empty prefix");
        self.placed[x] = false;
        for &s in &self.succ[x] {
            self.waiting[s] += 1;
        }
    }

    /// Advances to the next extension and borrows it.
    pub fn next_perm(&mut self) -> Option<&[usize]> {
        let n = self.by_id.len();
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if n == 0 {
                self.done = true;
                return Some(&self.prefix);
            }
        } else {
            self.pop();
        }
        loop {
            let d = self.prefix.len();
            let next = (self.cursor[d]..n).find(|&k| {
                let x = self.by_id[k];
                !self.placed[x] && self.waiting[x] == 0
            });
            match next {
                Some(k) => {
                    self.cursor[d] = k + 1;
                    self.push(self.by_id[k]);
                    if self.prefix.len() == n {
                        return Some(&self.prefix);
                    }
                    self.cursor[d + 1] = 0;
                }
                None => {
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pop();
                }
            }
        }
    }
}

impl Iterator for LinearExtensions {
    type Item = LinearOrder;

    fn next(&mut self) -> Option<LinearOrder> {
        let markers = self.markers.clone();
        let perm = self.next_perm()?.to_vec();
        Some(LinearOrder::new(markers, perm).expect("extension is a permutation"))
    }
}

/// All linear extensions of `order`, failing once more than `cap` exist.
pub fn enumerate_linear_extensions<P: Precedence + ?Sized>(
    order: &P,
    cap: u64,
) -> Result<Vec<LinearOrder>> {
    if cap == 0 {
        return Err(Error::invalid("cap must be at least 1"));
    }
    let mut out = Vec::new();
    for ext in LinearExtensions::new(order) {
        if out.len() as u64 == cap {
            return Err(Error::CapExceeded {
                count: cap,
                best: None,
            });
        }
        out.push(ext);
    }
    Ok(out)
}

/// A random topological sort of `order`.
///
/// With `follow = Some((reference, p))`, whenever the reference successor of
/// the last placed marker is available it is taken with probability `p`.
/// This biases samples towards many adjacencies with `reference`.
pub fn random_linear_extension<P, R>(
    order: &P,
    rng: &mut R,
    follow: Option<(&LinearOrder, f64)>,
) -> LinearOrder
where
    P: Precedence + ?Sized,
    R: Rng + ?Sized,
{
    let markers = order.marker_set().clone();
    let n = markers.len();
    let mut succ = vec![Vec::new(); n];
    let mut waiting = vec![0usize; n];
    for (a, b) in order.generators() {
        succ[a].push(b);
        waiting[b] += 1;
    }
    let mut available: Vec<usize> = markers
        .indices_by_id()
        .into_iter()
        .filter(|&x| waiting[x] == 0)
        .collect();
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    while !available.is_empty() {
        let preferred = match (follow, perm.last()) {
            (Some((reference, p)), Some(&last)) => reference
                .successor(last)
                .and_then(|s| available.iter().position(|&x| x == s))
                .filter(|_| rng.random_bool(p)),
            _ => None,
        };
        let k = preferred.unwrap_or_else(|| rng.random_range(0..available.len()));
        let x = available.swap_remove(k);
        perm.push(x);
        for &s in &succ[x] {
            waiting[s] -= 1;
            if waiting[s] == 0 {
                available.push(s);
            }
        }
    }
    LinearOrder::new(markers, perm).expect("topological sort is a permutation")
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::order::{is_linear_extension, DagOrder, WeakOrder};

    fn set(ids: &[&str]) -> Arc<MarkerSet> {
        MarkerSet::from_ids(ids.iter().copied()).unwrap().shared()
    }

    #[test]
    fn chain_has_one_extension() {
        let d = DagOrder::from_ids(set(&["a", "b", "c"]), &[("a", "b"), ("b", "c")]).unwrap();
        let exts = enumerate_linear_extensions(&d, 10).unwrap();
        assert_eq!(exts.len(), 1);
        assert_eq!(exts[0].ids(), vec!["a", "b", "c"]);
    }

    #[test]
    fn antichain_gives_all_permutations_in_lex_order() {
        let d = DagOrder::from_ids::<&str>(set(&["c", "a", "b"]), &[]).unwrap();
        let exts: Vec<String> = enumerate_linear_extensions(&d, 10)
            .unwrap()
            .iter()
            .map(|e| e.ids().concat())
            .collect();
        assert_eq!(exts.len(), 6);
        assert_eq!(exts, ["abc", "acb", "bac", "bca", "cab", "cba"]);
    }

    #[test]
    fn weak_order_extension_count() {
        let w = WeakOrder::from_ids(set(&["a", "b", "c"]), &[vec!["a", "b"], vec!["c"]]).unwrap();
        assert_eq!(enumerate_linear_extensions(&w, 10).unwrap().len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let d = DagOrder::from_ids::<&str>(set(&["a", "b", "c"]), &[]).unwrap();
        match enumerate_linear_extensions(&d, 5) {
            Err(Error::CapExceeded { count, .. }) => assert_eq!(count, 5),
            other => panic!("expected cap error, got {other:?}"),
        }
        assert!(enumerate_linear_extensions(&d, 6).is_ok());
    }

    #[test]
    fn empty_order_has_the_empty_extension() {
        let d = DagOrder::from_ids::<&str>(set(&[]), &[]).unwrap();
        assert_eq!(enumerate_linear_extensions(&d, 1).unwrap().len(), 1);
    }

    #[test]
    fn random_extensions_are_feasible() {
        let d = DagOrder::from_ids(
            set(&["a", "b", "c", "d", "e"]),
            &[("a", "c"), ("b", "c"), ("c", "e")],
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let reference = LinearOrder::identity(d.marker_set().clone());
        for _ in 0..50 {
            let e = random_linear_extension(&d, &mut rng, Some((&reference, 0.5)));
            assert!(is_linear_extension(&e, &d).unwrap());
        }
    }
}
