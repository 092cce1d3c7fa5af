//! Certificates: the source instance followed by every lookup and layout of
//! the construction, as tagged line records.
//!
//! Reading a certificate rebuilds the construction from the embedded source
//! and requires every stored record to match it exactly, so a certificate
//! can never disagree with the instance it claims to describe.

use std::fmt::Write;
use std::sync::Arc;

use super::source::{read_graph, read_sat, serialize_graph, serialize_sat};
use super::{header, Reader};
use crate::error::{Error, Result};
use crate::marker::MarkerSet;
use crate::reduce::mis3::Color;
use crate::reduce::{reduce_mis3, reduce_sat32, Graph, Mis3Certificate, Sat32Certificate};
use crate::solve::AlignmentInstance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Mis3(Mis3Certificate),
    Sat32(Sat32Certificate),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Mis3(_) => "mis3",
            Certificate::Sat32(_) => "sat32",
        }
    }

    pub fn markers(&self) -> &Arc<MarkerSet> {
        match self {
            Certificate::Mis3(c) => c.markers(),
            Certificate::Sat32(c) => c.markers(),
        }
    }

    pub fn instance(&self) -> AlignmentInstance {
        match self {
            Certificate::Mis3(c) => c.instance(),
            Certificate::Sat32(c) => c.instance(),
        }
    }
}

fn join<'a>(markers: &'a MarkerSet, idx: &'a [usize]) -> String {
    markers.ids(idx).collect::<Vec<_>>().join(" ")
}

fn buckets(markers: &MarkerSet, bs: &[Vec<usize>]) -> String {
    bs.iter()
        .map(|b| format!("{{ {} }}", join(markers, b)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn mis3_records(cert: &Mis3Certificate) -> String {
    let m = cert.markers();
    let g = cert.graph();
    let mut out = String::new();
    writeln!(
        out,
        "markers {}",
        m.markers()
            .iter()
            .map(|x| x.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    )
    .unwrap();
    for i in 1..=g.vertex_count() {
        writeln!(
            out,
            "vertex-markers {i} {} {}",
            m.marker(cert.u(i)),
            m.marker(cert.v(i))
        )
        .unwrap();
    }
    for j in 1..=g.edge_count() {
        writeln!(
            out,
            "edge-markers {j} {} {} {}",
            m.marker(cert.p(j)),
            m.marker(cert.e(j)),
            m.marker(cert.q(j))
        )
        .unwrap();
    }
    let seps: Vec<usize> = (1..=g.vertex_count() + g.edge_count())
        .map(|h| cert.z(h))
        .collect();
    writeln!(out, "separators {}", join(m, &seps)).unwrap();
    writeln!(out, "gamma {}", join(m, cert.gamma().perm())).unwrap();
    out.push('z');
    for e in cert.z_entries() {
        let tag = match e.color {
            Color::Plain => "",
            Color::Blue => ":b",
            Color::Red => ":r",
        };
        write!(out, " {}{tag}", m.marker(e.marker)).unwrap();
    }
    out.push('\n');
    for i in 1..=g.vertex_count() {
        writeln!(out, "gadget {i} {}", join(m, &cert.gadget(i))).unwrap();
    }
    writeln!(out, "z2 {}", join(m, cert.z2())).unwrap();
    out.push_str("iv");
    for (i, (l, r)) in cert.intervals().iter().enumerate() {
        write!(out, " {}=({l},{r})", m.marker(i)).unwrap();
    }
    out.push('\n');
    out
}

fn sat32_records(cert: &Sat32Certificate) -> String {
    let m = cert.markers();
    let sat = cert.sat();
    let (n, cl) = (sat.var_count(), sat.clause_count());
    let mut out = String::new();
    writeln!(
        out,
        "markers {}",
        m.markers()
            .iter()
            .map(|x| x.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    )
    .unwrap();
    for j in 1..=cl {
        let ids = [
            cert.e(j, 1),
            cert.e(j, 2),
            cert.f(j, 1),
            cert.f(j, 2),
            cert.z(j),
        ];
        writeln!(out, "clause-markers {j} {}", join(m, &ids)).unwrap();
    }
    for i in 1..=n {
        let x = cert.variable(i);
        let ids = [
            x.p, x.q, x.r, x.s, x.t, x.u, x.v, x.a_pos, x.b_pos, x.a_neg, x.b_neg, x.d,
        ];
        writeln!(out, "variable-markers {i} {}", join(m, &ids)).unwrap();
    }
    for i in 1..=n {
        for (g, occ) in sat.occurrences(i).iter().enumerate() {
            let (e, f) = cert.literal_markers(i, g + 1);
            writeln!(
                out,
                "literal {i} {} {} {} {} {}",
                g + 1,
                occ.clause,
                occ.slot,
                m.marker(e),
                m.marker(f)
            )
            .unwrap();
        }
    }
    let gb = cert.gamma_buckets();
    for j in 1..=cl {
        writeln!(
            out,
            "gamma-clause {j} {}",
            buckets(m, &gb[3 * (j - 1)..3 * j])
        )
        .unwrap();
    }
    for i in 1..=n {
        let at = 3 * cl + 8 * (i - 1);
        writeln!(out, "gamma-variable {i} {}", buckets(m, &gb[at..at + 8])).unwrap();
    }
    let pb = cert.pi_buckets();
    for i in 1..=n {
        let at = 9 * (i - 1);
        writeln!(out, "pi-variable {i} {}", buckets(m, &pb[at..at + 9])).unwrap();
    }
    writeln!(out, "pi-tail {}", buckets(m, &pb[9 * n..])).unwrap();
    out
}

pub fn serialize_certificate(cert: &Certificate) -> String {
    match cert {
        Certificate::Mis3(c) => format!(
            "poa-cert 1 mis3\n{}{}",
            serialize_graph(c.graph()),
            mis3_records(c)
        ),
        Certificate::Sat32(c) => format!(
            "poa-cert 1 sat32\n{}{}",
            serialize_sat(c.sat()),
            sat32_records(c)
        ),
    }
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut r = Reader::new(text);
    let kind = header(&mut r, "poa-cert")?;
    let (cert, expected) = match kind.first().map(String::as_str) {
        Some("mis3") => {
            let (n, edges) = read_graph(&mut r)?;
            let (_, c) = reduce_mis3(&Graph::new(n, edges)?, true)?;
            let records = mis3_records(&c);
            (Certificate::Mis3(c), records)
        }
        Some("sat32") => {
            let sat = read_sat(&mut r)?;
            let (_, c) = reduce_sat32(&sat)?;
            let records = sat32_records(&c);
            (Certificate::Sat32(c), records)
        }
        _ => {
            return Err(Error::parse(
                1,
                "expected `poa-cert 1 mis3` or `poa-cert 1 sat32`",
            ));
        }
    };
    for want in expected.lines() {
        let line = r.next(&format!("`{}`", want.split(' ').next().unwrap_or("")))?;
        let got = line.tokens().collect::<Vec<_>>().join(" ");
        if got != want {
            return Err(line.error(format!(
                "`{}` record does not match the construction for the embedded source",
                line.keyword()
            )));
        }
    }
    r.finish()?;
    Ok(cert)
}
