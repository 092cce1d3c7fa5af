//! Exact exponential-time alignment, used to validate the DP and the
//! reductions.
//!
//! Strategy, by the families of the two sides:
//! 1. linear and weak: the bucket DP.
//! 2. one side linear: branch and bound against the other side.
//! 3. one side weak: enumerate linear extensions of the other side and run
//!    the DP against the weak side for each. If both are weak the side with
//!    fewer extensions is enumerated.
//! 4. otherwise: enumerate extensions of Γ and solve
//!    each against Π by branch and bound over the adjacencies to realize.
//!
//! The work counter (enumerated extensions plus search nodes) is bounded by
//! the cap.

use super::{dp_align_linear_weak, is_weak_family, AlignmentInstance, AlignmentSolution};
use crate::error::{Error, Result};
use crate::order::{LinearExtensions, LinearOrder, Order, Precedence, WeakOrder};

pub const DEFAULT_CAP: u64 = 1_000_000;

/// Marker limit of the down-set search (one bit per marker).
const MAX_SEARCH_MARKERS: usize = 128;

struct Budget {
    cap: u64,
    used: u64,
}

impl Budget {
    fn spend(&mut self, n: u64) -> bool {
        self.used += n;
        self.used <= self.cap
    }
}

fn cap_error(count: u64, best: Option<AlignmentSolution>) -> Error {
    Error::CapExceeded {
        count,
        best: best.map(Box::new),
    }
}

fn keep_better(best: &mut Option<AlignmentSolution>, cand: AlignmentSolution) {
    match best {
        Some(b) if cand.n_adj < b.n_adj => {}
        Some(b) if cand.n_adj == b.n_adj && cand.lex_key() >= b.lex_key() => {}
        _ => *best = Some(cand),
    }
}

/// Globally optimal alignment of `instance`.
pub fn oracle_align(instance: &AlignmentInstance, cap: u64) -> Result<AlignmentSolution> {
    if cap == 0 {
        return Err(Error::invalid("cap must be at least 1"));
    }
    if instance.markers().is_empty() {
        return Err(Error::invalid("alignment needs at least one marker"));
    }
    let gamma = instance.gamma();
    let pi = instance.pi();
    let gamma_weak = is_weak_family(gamma);
    let pi_weak = is_weak_family(pi);

    if let (Some(g), true) = (gamma.as_linear(), pi_weak) {
        return dp_align_linear_weak(&g, &pi.as_weak().expect("weak family"));
    }
    if let (true, Some(p)) = (gamma_weak, pi.as_linear()) {
        return dp_align_linear_weak(&p, &gamma.as_weak().expect("weak family")).map(|s| s.swap());
    }

    if let Some(g) = gamma.as_linear() {
        return search_against(&g, pi, &mut Budget { cap, used: 0 });
    }
    if let Some(p) = pi.as_linear() {
        return search_against(&p, gamma, &mut Budget { cap, used: 0 }).map(|s| s.swap());
    }

    if gamma_weak || pi_weak {
        let enumerate_gamma = match (gamma_weak, pi_weak) {
            (true, true) => {
                let g = gamma.known_extension_count().unwrap_or(u128::MAX);
                let p = pi.known_extension_count().unwrap_or(u128::MAX);
                g <= p
            }
            (false, true) => true,
            _ => false,
        };
        return if enumerate_gamma {
            enumerate_against_weak(gamma, &pi.as_weak().expect("weak family"), cap)
        } else {
            enumerate_against_weak(pi, &gamma.as_weak().expect("weak family"), cap)
                .map(|s| s.swap())
        };
    }

    let mut budget = Budget { cap, used: 0 };
    let mut best: Option<AlignmentSolution> = None;
    let mut exts = LinearExtensions::new(gamma);
    while let Some(perm) = exts.next_perm() {
        if !budget.spend(1) {
            return Err(cap_error(budget.cap, best));
        }
        let g = LinearOrder::new(instance.markers().clone(), perm.to_vec())?;
        match search_against(&g, pi, &mut budget) {
            Ok(sol) => keep_better(&mut best, sol),
            Err(e) if e.is_cap_exceeded() => return Err(cap_error(budget.cap, best)),
            Err(e) => return Err(e),
        }
    }
    Ok(best.expect("every order has a linear extension"))
}

fn enumerate_against_weak(other: &Order, weak: &WeakOrder, cap: u64) -> Result<AlignmentSolution> {
    let mut best: Option<AlignmentSolution> = None;
    let mut count = 0u64;
    let mut exts = LinearExtensions::new(other);
    while let Some(perm) = exts.next_perm() {
        if count == cap {
            return Err(cap_error(count, best));
        }
        count += 1;
        let ext = LinearOrder::new(other.marker_set().clone(), perm.to_vec())?;
        let sol = dp_align_linear_weak(&ext, weak)?;
        if best.as_ref().is_none_or(|b| sol.n_adj > b.n_adj) {
            best = Some(sol);
        }
    }
    Ok(best.expect("every order has a linear extension"))
}

/// Maximum number of adjacencies between the fixed permutation `gamma` and
/// any linear extension of `order`, with a witness extension.
pub fn max_adjacencies_against<P: Precedence + ?Sized>(
    gamma: &LinearOrder,
    order: &P,
    cap: u64,
) -> Result<AlignmentSolution> {
    let mut budget = Budget { cap, used: 0 };
    search_against(gamma, order, &mut budget)
}

/// Branch and bound over the consecutive pairs of `gamma`.
///
/// Realizing a set of pairs splits `gamma` into blocks that must appear
/// contiguously, in `gamma` order, in the extension. Such an extension
/// exists iff no block contradicts `order` internally and the graph of
/// `order` relations between blocks is acyclic. Adding pairs never makes an
/// infeasible choice feasible, so infeasible branches are cut at once.
fn search_against<P: Precedence + ?Sized>(
    gamma: &LinearOrder,
    order: &P,
    budget: &mut Budget,
) -> Result<AlignmentSolution> {
    let set = order.marker_set().clone();
    let n = set.len();
    if n > MAX_SEARCH_MARKERS {
        return Err(Error::SizeExceeded {
            what: "markers",
            size: n,
            limit: MAX_SEARCH_MARKERS,
        });
    }
    let mut preds = vec![0u128; n];
    for (b, mask) in preds.iter_mut().enumerate() {
        for a in 0..n {
            if a != b && order.precedes_idx(a, b) {
                *mask |= 1 << a;
            }
        }
    }
    let g = gamma.perm().to_vec();
    let candidates: Vec<bool> = (0..n.saturating_sub(1))
        .map(|k| preds[g[k]] >> g[k + 1] & 1 == 0)
        .collect();
    let mut search = PairSearch {
        preds,
        gamma: g,
        merged: vec![false; n.saturating_sub(1)],
        best: None,
        best_count: 0,
        budget,
    };
    let remaining: usize = candidates.iter().filter(|&&c| c).count();
    search.run(0, 0, remaining, &candidates)?;
    let merged = search.best.take().expect("cutting every pair is feasible");
    let blocks = search.blocks(&merged);
    let by_id: Vec<usize> = (0..n).map(|x| set.id_rank(x)).collect();
    let perm = search
        .block_order(&blocks, &by_id)
        .expect("best choice is feasible");
    let pi_ext = LinearOrder::new(set, perm)?;
    AlignmentSolution::new(gamma.clone(), pi_ext)
}

struct PairSearch<'a> {
    preds: Vec<u128>,
    gamma: Vec<usize>,
    merged: Vec<bool>,
    best: Option<Vec<bool>>,
    best_count: usize,
    budget: &'a mut Budget,
}

impl PairSearch<'_> {
    fn run(&mut self, k: usize, count: usize, remaining: usize, candidates: &[bool]) -> Result<()> {
        if !self.budget.spend(1) {
            return Err(cap_error(self.budget.cap, None));
        }
        if self.best.is_some() && count + remaining <= self.best_count {
            return Ok(());
        }
        if k == self.merged.len() {
            self.best = Some(self.merged.clone());
            self.best_count = count;
            return Ok(());
        }
        if !candidates[k] {
            return self.run(k + 1, count, remaining, candidates);
        }
        self.merged[k] = true;
        if self.feasible() {
            self.run(k + 1, count + 1, remaining - 1, candidates)?;
        }
        self.merged[k] = false;
        self.run(k + 1, count, remaining - 1, candidates)
    }

    /// Blocks as ranges of `gamma` positions.
    fn blocks(&self, merged: &[bool]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for end in 1..=self.gamma.len() {
            if end == self.gamma.len() || !merged[end - 1] {
                out.push((start, end));
                start = end;
            }
        }
        out
    }

    fn feasible(&self) -> bool {
        let blocks = self.blocks(&self.merged);
        self.topological(&blocks, |_| 0).is_some()
    }

    /// Orders the blocks respecting `order`, taking the smallest key among
    /// the ready blocks first. `None` if the blocks admit no extension.
    fn topological(
        &self,
        blocks: &[(usize, usize)],
        key: impl Fn(usize) -> usize,
    ) -> Option<Vec<usize>> {
        let masks: Vec<u128> = blocks
            .iter()
            .map(|&(s, e)| self.gamma[s..e].iter().fold(0u128, |m, &x| m | 1 << x))
            .collect();
        let mut need = Vec::with_capacity(blocks.len());
        for (b, &(s, e)) in blocks.iter().enumerate() {
            let mut after = masks[b];
            let mut preds = 0u128;
            for &x in &self.gamma[s..e] {
                after &= !(1u128 << x);
                if self.preds[x] & after != 0 {
                    return None;
                }
                preds |= self.preds[x];
            }
            need.push(preds & !masks[b]);
        }
        let mut placed = 0u128;
        let mut done = vec![false; blocks.len()];
        let mut out = Vec::with_capacity(blocks.len());
        for _ in 0..blocks.len() {
            let next = (0..blocks.len())
                .filter(|&b| !done[b] && need[b] & !placed == 0)
                .min_by_key(|&b| key(self.gamma[blocks[b].0]))?;
            done[next] = true;
            placed |= masks[next];
            out.push(next);
        }
        Some(out)
    }

    fn block_order(&self, blocks: &[(usize, usize)], by_id: &[usize]) -> Option<Vec<usize>> {
        let order = self.topological(blocks, |x| by_id[x])?;
        Some(
            order
                .into_iter()
                .flat_map(|b| self.gamma[blocks[b].0..blocks[b].1].iter().copied())
                .collect(),
        )
    }
}
