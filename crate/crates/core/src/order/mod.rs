//! The order hierarchy: linear, weak, interval and general (DAG) partial
//! orders over a shared [`MarkerSet`], plus recognition and conversion.

mod classify;
mod dag;
mod extensions;
mod interval;
mod linear;
mod weak;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use classify::{classify, to_interval_representation, to_weak};
pub use dag::DagOrder;
pub use extensions::{enumerate_linear_extensions, random_linear_extension, LinearExtensions};
pub use interval::IntervalOrder;
pub use linear::LinearOrder;
pub use weak::WeakOrder;

use crate::error::{Error, Result};
use crate::marker::{same_markers, MarkerSet};

/// Strict precedence over marker indices of a [`MarkerSet`].
pub trait Precedence {
    fn marker_set(&self) -> &Arc<MarkerSet>;

    /// `a ≺ b` for marker indices `a` and `b`.
    fn precedes_idx(&self, a: usize, b: usize) -> bool;

    fn precedes(&self, a: &str, b: &str) -> Result<bool> {
        let set = self.marker_set();
        let a = set.require(a)?;
        let b = set.require(b)?;
        Ok(self.precedes_idx(a, b))
    }

    /// Whether `perm` orders every related pair correctly. The marker sets
    /// are assumed equal.
    fn admits(&self, perm: &LinearOrder) -> bool {
        let p = perm.perm();
        for j in 0..p.len() {
            for i in 0..j {
                if self.precedes_idx(p[j], p[i]) {
                    return false;
                }
            }
        }
        true
    }

    /// A generating relation for this order.
    fn generators(&self) -> Vec<(usize, usize)> {
        let n = self.marker_set().len();
        let mut rel = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.precedes_idx(a, b) {
                    rel.push((a, b));
                }
            }
        }
        rel
    }

    fn to_dag(&self) -> DagOrder {
        DagOrder::new(self.marker_set().clone(), self.generators())
            .expect("a valid order always yields an acyclic relation")
    }
}

/// Checks that `perm` is a linear extension of `order`.
pub fn is_linear_extension<P: Precedence + ?Sized>(perm: &LinearOrder, order: &P) -> Result<bool> {
    if !same_markers(perm.marker_set(), order.marker_set()) {
        return Err(Error::MarkerSetMismatch);
    }
    Ok(order.admits(perm))
}

/// The finest class of the hierarchy
/// linear ⊆ weak ⊆ semiorder ⊆ interval ⊆ partial containing an order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrderFamily {
    Linear,
    Weak,
    Semiorder,
    Interval,
    Partial,
}

impl OrderFamily {
    pub fn name(self) -> &'static str {
        match self {
            OrderFamily::Linear => "linear",
            OrderFamily::Weak => "weak",
            OrderFamily::Semiorder => "semiorder",
            OrderFamily::Interval => "interval",
            OrderFamily::Partial => "partial",
        }
    }

    /// Whether every order of `self` also belongs to `other`.
    pub fn is_within(self, other: OrderFamily) -> bool {
        self <= other
    }
}

impl fmt::Display for OrderFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Any of the supported order representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    Linear(LinearOrder),
    Weak(WeakOrder),
    Interval(IntervalOrder),
    Dag(DagOrder),
}

/// Name of an order's representation (not its family).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    Linear,
    Weak,
    Interval,
    Dag,
}

impl Representation {
    pub fn name(self) -> &'static str {
        match self {
            Representation::Linear => "linear",
            Representation::Weak => "weak",
            Representation::Interval => "interval",
            Representation::Dag => "dag",
        }
    }
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Representation::Linear),
            "weak" => Ok(Representation::Weak),
            "interval" => Ok(Representation::Interval),
            "dag" => Ok(Representation::Dag),
            other => Err(Error::invalid(format!("unknown order family `{other}`"))),
        }
    }
}

impl Order {
    pub fn representation(&self) -> Representation {
        match self {
            Order::Linear(_) => Representation::Linear,
            Order::Weak(_) => Representation::Weak,
            Order::Interval(_) => Representation::Interval,
            Order::Dag(_) => Representation::Dag,
        }
    }

    /// The finest family containing this order. Linear and weak
    /// representations are answered without building the closure.
    pub fn family(&self) -> OrderFamily {
        match self {
            Order::Linear(_) => OrderFamily::Linear,
            Order::Weak(w) if w.buckets().iter().all(|b| b.len() == 1) => OrderFamily::Linear,
            Order::Weak(_) => OrderFamily::Weak,
            Order::Interval(iv) => classify(&iv.to_dag()),
            Order::Dag(d) => classify(d),
        }
    }

    /// The order as a weak order if it belongs to the weak family.
    pub fn as_weak(&self) -> Option<WeakOrder> {
        match self {
            Order::Weak(w) => Some(w.clone()),
            Order::Linear(l) => Some(WeakOrder::from_linear(l)),
            Order::Interval(iv) => to_weak(&iv.to_dag()).ok(),
            Order::Dag(d) => to_weak(d).ok(),
        }
    }

    /// The order as a linear order if it belongs to the linear family.
    pub fn as_linear(&self) -> Option<LinearOrder> {
        match self {
            Order::Linear(l) => Some(l.clone()),
            other if other.family() == OrderFamily::Linear => {
                let weak = other.as_weak()?;
                let perm = weak.buckets().iter().map(|b| b[0]).collect();
                LinearOrder::new(weak.marker_set().clone(), perm).ok()
            }
            _ => None,
        }
    }

    /// Number of linear extensions when it is cheap to compute.
    pub fn known_extension_count(&self) -> Option<u128> {
        match self {
            Order::Linear(_) => Some(1),
            Order::Weak(w) => w.extension_count(),
            _ => None,
        }
    }
}

impl Precedence for Order {
    fn marker_set(&self) -> &Arc<MarkerSet> {
        match self {
            Order::Linear(o) => o.marker_set(),
            Order::Weak(o) => o.marker_set(),
            Order::Interval(o) => o.marker_set(),
            Order::Dag(o) => o.marker_set(),
        }
    }

    fn precedes_idx(&self, a: usize, b: usize) -> bool {
        match self {
            Order::Linear(o) => o.precedes_idx(a, b),
            Order::Weak(o) => o.precedes_idx(a, b),
            Order::Interval(o) => o.precedes_idx(a, b),
            Order::Dag(o) => o.precedes_idx(a, b),
        }
    }

    fn admits(&self, perm: &LinearOrder) -> bool {
        match self {
            Order::Linear(o) => o.admits(perm),
            Order::Weak(o) => o.admits(perm),
            Order::Interval(o) => o.admits(perm),
            Order::Dag(o) => o.admits(perm),
        }
    }

    fn generators(&self) -> Vec<(usize, usize)> {
        match self {
            Order::Linear(o) => o.generators(),
            Order::Weak(o) => o.generators(),
            Order::Interval(o) => o.generators(),
            Order::Dag(o) => o.generators(),
        }
    }
}

impl From<LinearOrder> for Order {
    fn from(o: LinearOrder) -> Self {
        Order::Linear(o)
    }
}

impl From<WeakOrder> for Order {
    fn from(o: WeakOrder) -> Self {
        Order::Weak(o)
    }
}

impl From<IntervalOrder> for Order {
    fn from(o: IntervalOrder) -> Self {
        Order::Interval(o)
    }
}

impl From<DagOrder> for Order {
    fn from(o: DagOrder) -> Self {
        Order::Dag(o)
    }
}
