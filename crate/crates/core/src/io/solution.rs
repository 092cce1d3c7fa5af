use std::sync::Arc;

use super::{header, Line, Reader};
use crate::error::Result;
use crate::marker::MarkerSet;
use crate::order::LinearOrder;
use crate::solve::AlignmentSolution;

/// `poa-solution 1`, the two counts, then the two extensions.
pub fn serialize_solution(sol: &AlignmentSolution) -> String {
    format!(
        "poa-solution 1\nn_adj={}\nn_brk={}\ngamma {}\npi {}\n",
        sol.n_adj,
        sol.n_brk,
        sol.gamma_ext.ids().join(" "),
        sol.pi_ext.ids().join(" ")
    )
}

fn count(line: &Line<'_>, key: &str) -> Result<usize> {
    let value = line
        .text
        .strip_prefix(key)
        .and_then(|s| s.strip_prefix('='))
        .ok_or_else(|| line.error(format!("expected `{key}=<int>`")))?;
    line.int(value.trim(), "an integer")
}

/// Parses a solution over `markers`. The stated counts must match the
/// extensions.
pub fn parse_solution(text: &str, markers: &Arc<MarkerSet>) -> Result<AlignmentSolution> {
    let mut r = Reader::new(text);
    header(&mut r, "poa-solution")?;
    let adj_line = r.next("`n_adj=<int>`")?;
    let n_adj = count(&adj_line, "n_adj")?;
    let brk_line = r.next("`n_brk=<int>`")?;
    let n_brk = count(&brk_line, "n_brk")?;
    let g = r.expect("gamma")?;
    let gamma = g.locate(LinearOrder::from_ids(markers.clone(), &g.args()))?;
    let p = r.expect("pi")?;
    let pi = p.locate(LinearOrder::from_ids(markers.clone(), &p.args()))?;
    r.finish()?;
    let sol = p.locate(AlignmentSolution::new(gamma, pi))?;
    if sol.n_adj != n_adj {
        return Err(adj_line.error(format!(
            "stated n_adj={n_adj}, extensions have {}",
            sol.n_adj
        )));
    }
    if sol.n_brk != n_brk {
        return Err(brk_line.error(format!(
            "stated n_brk={n_brk}, extensions have {}",
            sol.n_brk
        )));
    }
    Ok(sol)
}
