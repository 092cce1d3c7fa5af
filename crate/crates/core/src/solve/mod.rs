//! Optimal alignment of two orders: the bucket dynamic program for
//! (linear, weak) pairs and an exact oracle for everything else.

mod blocks;
mod dp;
mod oracle;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use blocks::{partition_blocks, Block, BlockPartition};
pub use dp::{dp_align_linear_weak, dp_recurrence, fill_table, DpEntry, DpTable};
pub use oracle::{max_adjacencies_against, oracle_align, DEFAULT_CAP};

use crate::error::{Error, Result};
use crate::marker::{same_markers, MarkerSet};
use crate::metrics::count_adjacencies;
use crate::order::{is_linear_extension, LinearOrder, Order, OrderFamily, Precedence};

/// Two orders over one marker set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignmentInstance {
    markers: Arc<MarkerSet>,
    gamma: Order,
    pi: Order,
}

impl AlignmentInstance {
    pub fn new(gamma: Order, pi: Order) -> Result<Self> {
        if !same_markers(gamma.marker_set(), pi.marker_set()) {
            return Err(Error::MarkerSetMismatch);
        }
        Ok(AlignmentInstance {
            markers: gamma.marker_set().clone(),
            gamma,
            pi,
        })
    }

    pub fn markers(&self) -> &Arc<MarkerSet> {
        &self.markers
    }

    pub fn gamma(&self) -> &Order {
        &self.gamma
    }

    pub fn pi(&self) -> &Order {
        &self.pi
    }

    /// Checks that `sol` extends both orders of this instance.
    pub fn check_feasible(&self, sol: &AlignmentSolution) -> Result<()> {
        if !is_linear_extension(&sol.gamma_ext, &self.gamma)? {
            return Err(Error::invalid(
                "gamma side is not a linear extension of gamma",
            ));
        }
        if !is_linear_extension(&sol.pi_ext, &self.pi)? {
            return Err(Error::invalid("pi side is not a linear extension of pi"));
        }
        Ok(())
    }
}

/// A pair of linear extensions with its adjacency and breakpoint counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignmentSolution {
    pub gamma_ext: LinearOrder,
    pub pi_ext: LinearOrder,
    pub n_adj: usize,
    pub n_brk: usize,
}

impl AlignmentSolution {
    /// Scores a pair of permutations over a nonempty marker set.
    pub fn new(gamma_ext: LinearOrder, pi_ext: LinearOrder) -> Result<Self> {
        let n_adj = count_adjacencies(&gamma_ext, &pi_ext)?;
        if gamma_ext.is_empty() {
            return Err(Error::invalid("alignment needs at least one marker"));
        }
        let n_brk = gamma_ext.len() - 1 - n_adj;
        Ok(AlignmentSolution {
            gamma_ext,
            pi_ext,
            n_adj,
            n_brk,
        })
    }

    pub fn marker_count(&self) -> usize {
        self.gamma_ext.len()
    }

    pub fn swap(self) -> Self {
        AlignmentSolution {
            gamma_ext: self.pi_ext,
            pi_ext: self.gamma_ext,
            n_adj: self.n_adj,
            n_brk: self.n_brk,
        }
    }

    /// Ordering key for deterministic tie-breaks: marker id ranks of both
    /// permutations.
    pub(crate) fn lex_key(&self) -> (Vec<usize>, Vec<usize>) {
        let set = self.gamma_ext.marker_set();
        let key = |p: &LinearOrder| p.perm().iter().map(|&m| set.id_rank(m)).collect();
        (key(&self.gamma_ext), key(&self.pi_ext))
    }
}

/// Solver selection for [`solve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Dp,
    Oracle,
    #[default]
    Auto,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dp" => Ok(Method::Dp),
            "oracle" => Ok(Method::Oracle),
            "auto" => Ok(Method::Auto),
            other => Err(Error::invalid(format!("unknown method `{other}`"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Dp => "dp",
            Method::Oracle => "oracle",
            Method::Auto => "auto",
        })
    }
}

/// Runs the DP when one side is linear and the other weak (in either role),
/// returning `None` otherwise.
fn try_dp(instance: &AlignmentInstance) -> Result<Option<AlignmentSolution>> {
    if let (Some(gamma), Some(pi)) = (instance.gamma.as_linear(), instance.pi.as_weak()) {
        return dp_align_linear_weak(&gamma, &pi).map(Some);
    }
    if let (Some(gamma), Some(pi)) = (instance.gamma.as_weak(), instance.pi.as_linear()) {
        return dp_align_linear_weak(&pi, &gamma).map(|s| Some(s.swap()));
    }
    Ok(None)
}

/// Optimal alignment with the requested method.
pub fn solve(instance: &AlignmentInstance, method: Method, cap: u64) -> Result<AlignmentSolution> {
    match method {
        Method::Oracle => oracle_align(instance, cap),
        Method::Dp => try_dp(instance)?.ok_or_else(|| Error::FamilyMismatch {
            expected: "one linear side and one weak side",
            found: format!("{} and {}", instance.gamma.family(), instance.pi.family()),
        }),
        Method::Auto => match try_dp(instance)? {
            Some(sol) => Ok(sol),
            None => oracle_align(instance, cap),
        },
    }
}

pub(crate) fn is_weak_family(order: &Order) -> bool {
    match order {
        Order::Linear(_) | Order::Weak(_) => true,
        other => other.family().is_within(OrderFamily::Weak),
    }
}
