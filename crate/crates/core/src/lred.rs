//! Empirical checks of the two L-reductions.
//!
//! For a source instance `x` with optimum `opt(x)` and reduced instance
//! `f(x)` the checks are
//!
//! - (1) `opt(f(x)) ≤ α · opt(x)`, evaluated once with exact oracles;
//! - (2) `|opt(x) − val(g(y))| ≤ β · |opt(f(x)) − val(y)|` for sampled
//!   feasible alignments `y`, where `g` is the backward map.
//!
//! Maximization and minimization variants share the oracles: breakpoints are
//! `|Σ| − 1 − adjacencies`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::order::{random_linear_extension, LinearOrder, Order, Precedence};
use crate::reduce::{
    extract_assignment, extract_independent_set, reduce_mis3, reduce_sat32,
    solution_from_assignment, solution_from_independent_set, Assignment, Graph, IndependentSet,
    Sat32Instance,
};
use crate::solve::{solve, AlignmentInstance, AlignmentSolution, Method};

/// Greedy independent set: take the smallest remaining vertex, delete it and
/// its neighbors, repeat.
pub fn greedy_mis(g: &Graph) -> Result<IndependentSet> {
    g.check_max_degree_3()?;
    Ok(greedy_in_order(g, 1..=g.vertex_count()))
}

fn greedy_in_order(g: &Graph, order: impl IntoIterator<Item = usize>) -> IndependentSet {
    let mut removed = vec![false; g.vertex_count() + 1];
    let mut chosen = Vec::new();
    for v in order {
        if removed[v] {
            continue;
        }
        chosen.push(v);
        removed[v] = true;
        for w in g.neighbors(v) {
            removed[w] = true;
        }
    }
    IndependentSet::new(g, chosen).expect("greedy choice is independent")
}

pub const BRUTE_MIS_LIMIT: usize = 25;
pub const BRUTE_MAXSAT_LIMIT: usize = 20;

/// Size of a maximum independent set, by branching on the smallest
/// undecided vertex.
pub fn brute_mis(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > BRUTE_MIS_LIMIT {
        return Err(Error::SizeExceeded {
            what: "vertices",
            size: n,
            limit: BRUTE_MIS_LIMIT,
        });
    }
    let closed: Vec<u32> = (1..=n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u32 << (v - 1), |acc, &w| acc | 1 << (w - 1))
        })
        .collect();
    fn go(candidates: u32, closed: &[u32]) -> usize {
        if candidates == 0 {
            return 0;
        }
        let v = candidates.trailing_zeros() as usize;
        let with = 1 + go(candidates & !closed[v], closed);
        if with > candidates.count_ones() as usize - 1 {
            return with;
        }
        with.max(go(candidates & !(1 << v), closed))
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(go(all, &closed))
}

/// Every variable true. Each clause with a positive literal is satisfied.
pub fn naive_assignment(sat: &Sat32Instance) -> Assignment {
    Assignment::all(sat.var_count(), true)
}

/// Maximum number of simultaneously satisfiable clauses.
pub fn brute_maxsat(sat: &Sat32Instance) -> Result<usize> {
    let n = sat.var_count();
    if n > BRUTE_MAXSAT_LIMIT {
        return Err(Error::SizeExceeded {
            what: "variables",
            size: n,
            limit: BRUTE_MAXSAT_LIMIT,
        });
    }
    let best = (0u32..1 << n)
        .map(|bits| {
            let asg = Assignment::new((0..n).map(|i| bits >> i & 1 == 1).collect());
            sat.satisfied_count(&asg)
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LRedKind {
    Mis3MaxAdj,
    Mis3MinBrk,
    Sat32MaxAdj,
    Sat32MinBrk,
}

impl LRedKind {
    pub const ALL: [LRedKind; 4] = [
        LRedKind::Mis3MaxAdj,
        LRedKind::Mis3MinBrk,
        LRedKind::Sat32MaxAdj,
        LRedKind::Sat32MinBrk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LRedKind::Mis3MaxAdj => "mis3-maxadj",
            LRedKind::Mis3MinBrk => "mis3-minbrk",
            LRedKind::Sat32MaxAdj => "sat32-maxadj",
            LRedKind::Sat32MinBrk => "sat32-minbrk",
        }
    }

    pub fn alpha(self) -> u64 {
        match self {
            LRedKind::Mis3MaxAdj => 7,
            LRedKind::Mis3MinBrk => 29,
            LRedKind::Sat32MaxAdj => 9,
            LRedKind::Sat32MinBrk => 30,
        }
    }

    pub fn beta(self) -> u64 {
        1
    }

    pub fn is_mis(self) -> bool {
        matches!(self, LRedKind::Mis3MaxAdj | LRedKind::Mis3MinBrk)
    }

    pub fn minimizes(self) -> bool {
        matches!(self, LRedKind::Mis3MinBrk | LRedKind::Sat32MinBrk)
    }
}

impl fmt::Display for LRedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LRedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LRedKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown reduction kind `{s}`")))
    }
}

/// Source instance of a reduction.
#[derive(Debug, Clone)]
pub enum LRedSource {
    Graph(Graph),
    Sat(Sat32Instance),
}

/// One sampled alignment `y` and the values involved in check (2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleCheck {
    pub digest: String,
    /// `val(y)` in the measure of the kind (adjacencies or breakpoints).
    pub val_y: usize,
    pub n_adj: usize,
    /// `val(g(y))`: independent set size or satisfied clauses.
    pub val_g: usize,
    pub lhs: u64,
    pub rhs: u64,
    /// `val(g(y)) ≥ n_adj − m` (MIS) or `≥ n_adj − 4n` (SAT).
    pub bound_ok: bool,
}

impl SampleCheck {
    pub fn pass(&self) -> bool {
        self.lhs <= self.rhs && self.bound_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub digest: String,
    pub check: &'static str,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone)]
pub struct LRedReport {
    pub kind: LRedKind,
    pub alpha: u64,
    pub beta: u64,
    pub opt_source: usize,
    /// Optimum of the reduced instance in the kind's measure.
    pub opt_target: usize,
    pub eq1_lhs: u64,
    pub eq1_rhs: u64,
    pub samples: Vec<SampleCheck>,
    /// The checked alignments, index-aligned with `samples`.
    pub alignments: Vec<AlignmentSolution>,
    pub violations: Vec<Violation>,
}

impl LRedReport {
    pub fn eq1_pass(&self) -> bool {
        self.eq1_lhs <= self.eq1_rhs
    }

    pub fn checked_solutions(&self) -> usize {
        self.samples.len()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

impl fmt::Display for LRedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "CHECK eq1 lhs={} rhs={} {}",
            self.eq1_lhs,
            self.eq1_rhs,
            verdict(self.eq1_pass())
        )?;
        for s in &self.samples {
            writeln!(
                f,
                "SAMPLE {} val={} g={} eq2 lhs={} rhs={} {}",
                s.digest,
                s.val_y,
                s.val_g,
                s.lhs,
                s.rhs,
                verdict(s.pass())
            )?;
        }
        Ok(())
    }
}

fn digest(sol: &AlignmentSolution) -> String {
    let markers = sol.gamma_ext.marker_set();
    let mut h = Sha256::new();
    for perm in [sol.gamma_ext.perm(), sol.pi_ext.perm()] {
        for id in markers.ids(perm) {
            h.update(id.as_bytes());
            h.update(b" ");
        }
        h.update(b"|");
    }
    h.finalize()[..8]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn random_pair<R: Rng>(
    inst: &AlignmentInstance,
    reference: Option<&AlignmentSolution>,
    p: f64,
    rng: &mut R,
) -> Result<AlignmentSolution> {
    let side = |order: &Order, r: Option<&LinearOrder>, rng: &mut R| match order {
        Order::Linear(l) => l.clone(),
        other => random_linear_extension(other, rng, r.map(|r| (r, p))),
    };
    let gamma_ext = side(inst.gamma(), reference.map(|r| &r.gamma_ext), rng);
    let pi_ext = side(inst.pi(), reference.map(|r| &r.pi_ext), rng);
    AlignmentSolution::new(gamma_ext, pi_ext)
}

type Builder = Box<dyn Fn(&mut ChaCha8Rng) -> Result<AlignmentSolution>>;
type Backward = Box<dyn Fn(&AlignmentSolution) -> Result<usize>>;

/// Runs both checks for `kind` on `source`. `samples` random feasible
/// alignments are drawn from `seed`; the optimum found by the oracle is
/// checked as well.
pub fn verify_lreduction(
    kind: LRedKind,
    source: &LRedSource,
    samples: usize,
    seed: u64,
    cap: u64,
) -> Result<LRedReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (inst, opt_source, offset): (AlignmentInstance, usize, usize);
    let builder: Builder;
    let backward: Backward;
    match (kind.is_mis(), source) {
        (true, LRedSource::Graph(g)) => {
            let (i, cert) = reduce_mis3(g, false)?;
            inst = i;
            opt_source = brute_mis(g)?;
            offset = g.edge_count();
            let g = g.clone();
            let c = cert.clone();
            builder = Box::new(move |rng| {
                let mut order: Vec<usize> = (1..=g.vertex_count()).collect();
                order.shuffle(rng);
                let keep = rng.random_range(0..=order.len());
                let set = greedy_in_order(&g, order.into_iter().take(keep));
                solution_from_independent_set(&c, &set)
            });
            backward = Box::new(move |y| extract_independent_set(&cert, y).map(|s| s.len()));
        }
        (false, LRedSource::Sat(sat)) => {
            let (i, cert) = reduce_sat32(sat)?;
            inst = i;
            opt_source = brute_maxsat(sat)?;
            offset = 4 * sat.var_count();
            let n = sat.var_count();
            let c = cert.clone();
            builder = Box::new(move |rng| {
                let asg = Assignment::new((0..n).map(|_| rng.random_bool(0.5)).collect());
                solution_from_assignment(&c, &asg)
            });
            let sat = sat.clone();
            backward =
                Box::new(move |y| extract_assignment(&cert, y).map(|a| sat.satisfied_count(&a)));
        }
        _ => {
            return Err(Error::invalid(format!(
                "{kind} expects a {} source",
                if kind.is_mis() { "graph" } else { "sat32" }
            )))
        }
    }

    let opt = solve(&inst, Method::Auto, cap)?;
    let n_markers = inst.markers().len();
    let measure = |n_adj: usize| {
        if kind.minimizes() {
            n_markers - 1 - n_adj
        } else {
            n_adj
        }
    };
    let opt_target = measure(opt.n_adj);
    let eq1_lhs = opt_target as u64;
    let eq1_rhs = kind.alpha() * opt_source as u64;

    let mut ys = vec![opt.clone()];
    for s in 0..samples {
        let p = rng.random_range(0.5..1.0);
        let y = match s % 3 {
            0 => random_pair(&inst, None, p, &mut rng)?,
            1 => random_pair(&inst, Some(&opt), p, &mut rng)?,
            _ => {
                let base = builder(&mut rng)?;
                random_pair(&inst, Some(&base), p, &mut rng)?
            }
        };
        ys.push(y);
    }

    let mut checks = Vec::with_capacity(ys.len());
    let mut violations = Vec::new();
    if eq1_lhs > eq1_rhs {
        violations.push(Violation {
            digest: digest(&opt),
            check: "eq1",
            lhs: eq1_lhs,
            rhs: eq1_rhs,
        });
    }
    for y in &ys {
        inst.check_feasible(y)?;
        let d = digest(y);
        let val_g = backward(y)?;
        let lhs = opt_source.abs_diff(val_g) as u64;
        let rhs = kind.beta() * measure(opt.n_adj).abs_diff(measure(y.n_adj)) as u64;
        let check = SampleCheck {
            digest: d.clone(),
            val_y: measure(y.n_adj),
            n_adj: y.n_adj,
            val_g,
            lhs,
            rhs,
            bound_ok: val_g + offset >= y.n_adj,
        };
        if lhs > rhs {
            violations.push(Violation {
                digest: d.clone(),
                check: "eq2",
                lhs,
                rhs,
            });
        }
        if !check.bound_ok {
            violations.push(Violation {
                digest: d.clone(),
                check: "bound",
                lhs: (val_g + offset) as u64,
                rhs: y.n_adj as u64,
            });
        }
        if y.n_adj > opt.n_adj {
            violations.push(Violation {
                digest: d.clone(),
                check: "optimum",
                lhs: y.n_adj as u64,
                rhs: opt.n_adj as u64,
            });
        }
        checks.push(check);
    }
    let mut order: Vec<usize> = (0..ys.len()).collect();
    order.sort_by(|&a, &b| checks[a].digest.cmp(&checks[b].digest));
    let alignments = order.iter().map(|&i| ys[i].clone()).collect();
    let checks = order.iter().map(|&i| checks[i].clone()).collect();
    violations.sort_by(|a, b| (&a.digest, a.check).cmp(&(&b.digest, b.check)));
    Ok(LRedReport {
        kind,
        alpha: kind.alpha(),
        beta: kind.beta(),
        opt_source,
        opt_target,
        eq1_lhs,
        eq1_rhs,
        samples: checks,
        alignments,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::{normalize_sat32, Literal};

    fn cubic6() -> Graph {
        Graph::new(
            6,
            [
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 4),
                (1, 5),
                (2, 6),
                (3, 6),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn greedy_and_brute_mis() {
        let k2 = Graph::new(2, [(1, 2)]).unwrap();
        assert_eq!(greedy_mis(&k2).unwrap().len(), 1);
        assert_eq!(brute_mis(&k2).unwrap(), 1);
        let empty = Graph::new(5, []).unwrap();
        assert_eq!(greedy_mis(&empty).unwrap().len(), 5);
        assert_eq!(brute_mis(&empty).unwrap(), 5);
        let k3 = Graph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(brute_mis(&k3).unwrap(), 1);
        assert!(greedy_mis(&cubic6()).unwrap().len() >= 2);
        assert_eq!(brute_mis(&cubic6()).unwrap(), 2);
    }

    #[test]
    fn brute_mis_matches_subset_scan() {
        let g = cubic6();
        let best = (0u32..1 << 6)
            .filter(|bits| {
                g.edges()
                    .iter()
                    .all(|&(a, b)| bits >> (a - 1) & 1 == 0 || bits >> (b - 1) & 1 == 0)
            })
            .map(u32::count_ones)
            .max()
            .unwrap();
        assert_eq!(brute_mis(&g).unwrap(), best as usize);
    }

    #[test]
    fn maxsat_on_small_instance() {
        let sat = normalize_sat32(
            2,
            vec![
                [Literal::pos(1), Literal::pos(2)],
                [Literal::pos(1), Literal::neg(2)],
                [Literal::neg(1), Literal::neg(2)],
            ],
        )
        .unwrap();
        assert_eq!(brute_maxsat(&sat).unwrap(), 3);
        assert_eq!(sat.satisfied_count(&naive_assignment(&sat)), 2);
    }

    #[test]
    fn k2_reports() {
        let k2 = LRedSource::Graph(Graph::new(2, [(1, 2)]).unwrap());
        let r = verify_lreduction(LRedKind::Mis3MaxAdj, &k2, 60, 1, 1_000_000).unwrap();
        assert_eq!((r.opt_source, r.opt_target), (1, 2));
        assert!(r.passed(), "{r}");
        let r = verify_lreduction(LRedKind::Mis3MinBrk, &k2, 60, 1, 1_000_000).unwrap();
        assert_eq!(r.opt_target, 7);
        assert!(r.passed(), "{r}");
        assert!(r.to_string().starts_with("CHECK eq1 lhs=7 rhs=29 PASS\n"));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in LRedKind::ALL {
            assert_eq!(k.name().parse::<LRedKind>().unwrap(), k);
        }
        assert!("mis3".parse::<LRedKind>().is_err());
    }
}
