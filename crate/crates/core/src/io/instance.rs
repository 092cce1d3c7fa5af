use std::fmt::Write;
use std::sync::Arc;

use super::{header, Line, Reader};
use crate::error::{Error, Result};
use crate::marker::MarkerSet;
use crate::order::{
    DagOrder, IntervalOrder, LinearOrder, Order, Precedence, Representation, WeakOrder,
};
use crate::solve::AlignmentInstance;

/// An instance together with the names given to its two orders.
#[derive(Debug, Clone)]
pub struct InstanceDocument {
    pub gamma_name: String,
    pub pi_name: String,
    pub instance: AlignmentInstance,
}

impl InstanceDocument {
    pub fn new(instance: AlignmentInstance) -> Self {
        InstanceDocument {
            gamma_name: "gamma".into(),
            pi_name: "pi".into(),
            instance,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut r = Reader::new(text);
        header(&mut r, "poa")?;
        let line = r.expect("markers")?;
        let markers = line.locate(MarkerSet::from_ids(line.args()))?.shared();
        let (gamma_name, gamma) = parse_order(&mut r, &markers)?;
        let (pi_name, pi) = parse_order(&mut r, &markers)?;
        r.finish()?;
        Ok(InstanceDocument {
            gamma_name,
            pi_name,
            instance: AlignmentInstance::new(gamma, pi)?,
        })
    }

    pub fn serialize(&self) -> String {
        let inst = &self.instance;
        let mut out = String::from("poa 1\n");
        let ids: Vec<&str> = inst
            .markers()
            .markers()
            .iter()
            .map(|m| m.as_str())
            .collect();
        writeln!(out, "markers {}", ids.join(" ")).unwrap();
        write_order(&mut out, &self.gamma_name, inst.gamma());
        write_order(&mut out, &self.pi_name, inst.pi());
        out
    }
}

pub fn parse_instance(text: &str) -> Result<AlignmentInstance> {
    InstanceDocument::parse(text).map(|d| d.instance)
}

pub fn serialize_instance(instance: &AlignmentInstance) -> String {
    InstanceDocument::new(instance.clone()).serialize()
}

fn parse_order(r: &mut Reader<'_>, markers: &Arc<MarkerSet>) -> Result<(String, Order)> {
    let head = r.expect("order")?;
    let args = head.args();
    if args.len() != 2 {
        return Err(head.error("expected `order <name> <family>`"));
    }
    let repr: Representation = head.locate(args[1].parse())?;
    let body = r.next("an order body")?;
    let order = body.locate(parse_body(&body, repr, markers))?;
    Ok((args[0].to_string(), order))
}

fn parse_body(line: &Line<'_>, repr: Representation, markers: &Arc<MarkerSet>) -> Result<Order> {
    let want = match repr {
        Representation::Linear => "perm",
        Representation::Weak => "buckets",
        Representation::Interval => "iv",
        Representation::Dag => "rel",
    };
    if line.keyword() != want {
        return Err(line.error(format!(
            "a {} order needs a `{want}` line, found `{}`",
            repr.name(),
            line.keyword()
        )));
    }
    let args = line.args();
    Ok(match repr {
        Representation::Linear => LinearOrder::from_ids(markers.clone(), &args)?.into(),
        Representation::Weak => {
            let spaced = line.text[want.len()..]
                .replace('{', " { ")
                .replace('}', " } ");
            let mut buckets: Vec<Vec<&str>> = Vec::new();
            let mut open: Option<Vec<&str>> = None;
            for tok in spaced.split_whitespace() {
                match (tok, open.as_mut()) {
                    ("{", None) => open = Some(Vec::new()),
                    ("}", Some(_)) => {
                        let b = open.take().expect("open bucket");
                        if b.is_empty() {
                            return Err(line.error("empty bucket"));
                        }
                        buckets.push(b);
                    }
                    ("{", Some(_)) | ("}", None) => return Err(line.error("unbalanced braces")),
                    (id, Some(b)) => b.push(id),
                    (id, None) => return Err(line.error(format!("`{id}` is outside a bucket"))),
                }
            }
            if open.is_some() {
                return Err(line.error("unterminated bucket"));
            }
            WeakOrder::from_ids(markers.clone(), &buckets)?.into()
        }
        Representation::Interval => {
            let mut intervals = vec![None; markers.len()];
            for tok in args {
                let (id, rest) = tok.split_once('=').ok_or_else(|| {
                    line.error(format!("expected `<id>=(<l>,<r>)`, found `{tok}`"))
                })?;
                let inner = rest
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .and_then(|s| s.split_once(','))
                    .ok_or_else(|| line.error(format!("malformed interval `{rest}`")))?;
                let l: i64 = line.int(inner.0.trim(), "an integer")?;
                let r: i64 = line.int(inner.1.trim(), "an integer")?;
                let idx = markers.require(id)?;
                if intervals[idx].replace((l, r)).is_some() {
                    return Err(line.error(format!("marker `{id}` has two intervals")));
                }
            }
            let intervals = intervals
                .into_iter()
                .enumerate()
                .map(|(i, iv)| {
                    iv.ok_or_else(|| {
                        Error::invalid(format!("marker `{}` has no interval", markers.marker(i)))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            IntervalOrder::new(markers.clone(), intervals)?.into()
        }
        Representation::Dag => {
            let mut pairs = Vec::with_capacity(args.len());
            for tok in args {
                let (a, b) = tok
                    .split_once('<')
                    .ok_or_else(|| line.error(format!("expected `<id><<id>`, found `{tok}`")))?;
                pairs.push((markers.require(a)?, markers.require(b)?));
            }
            DagOrder::new(markers.clone(), pairs)?.into()
        }
    })
}

fn write_order(out: &mut String, name: &str, order: &Order) {
    let m = order.marker_set();
    writeln!(out, "order {name} {}", order.representation().name()).unwrap();
    match order {
        Order::Linear(l) => writeln!(out, "perm {}", l.ids().join(" ")).unwrap(),
        Order::Weak(w) => {
            out.push_str("buckets");
            for b in w.buckets() {
                write!(out, " {{ {} }}", m.ids(b).collect::<Vec<_>>().join(" ")).unwrap();
            }
            out.push('\n');
        }
        Order::Interval(iv) => {
            out.push_str("iv");
            for (i, (l, r)) in iv.intervals().iter().enumerate() {
                write!(out, " {}=({l},{r})", m.marker(i)).unwrap();
            }
            out.push('\n');
        }
        Order::Dag(d) => {
            out.push_str("rel");
            for &(a, b) in d.relation() {
                write!(out, " {}<{}", m.marker(a), m.marker(b)).unwrap();
            }
            out.push('\n');
        }
    }
}
