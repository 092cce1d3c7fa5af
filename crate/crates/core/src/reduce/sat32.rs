//! 3-occurrence 2SAT → alignment of two weak orders.
//!
//! Each clause `c_j` owns literal markers `e_j^1, e_j^2, f_j^1, f_j^2` and a
//! separator `z_j`; each variable `x_i` owns the variable markers
//! `p_i … v_i`, the selection markers `a_i^±, b_i^±` and a dummy `d_i`, for
//! `12n + 5m` markers in total. Γ is
//! `⟨C_1⟩{z_1} … ⟨C_m⟩{z_m} ⟨X_1⟩ … ⟨X_n⟩` and Π is
//! `⟨Y_1⟩ … ⟨Y_n⟩ {z_1} … {z_m}`; every bucket holds at most two markers.

use std::sync::Arc;

use super::sat::{Assignment, Sat32Instance};
use crate::error::{Error, Result};
use crate::marker::MarkerSet;
use crate::order::WeakOrder;
use crate::solve::{AlignmentInstance, AlignmentSolution};

/// Marker indices owned by one variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariableMarkers {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub u: usize,
    pub v: usize,
    pub a_pos: usize,
    pub b_pos: usize,
    pub a_neg: usize,
    pub b_neg: usize,
    pub d: usize,
}

impl VariableMarkers {
    fn pqrstuv(&self) -> [usize; 7] {
        [self.p, self.q, self.r, self.s, self.t, self.u, self.v]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sat32Certificate {
    sat: Sat32Instance,
    markers: Arc<MarkerSet>,
    vars: Vec<VariableMarkers>,
    e: Vec<[usize; 2]>,
    f: Vec<[usize; 2]>,
    z: Vec<usize>,
    gamma_buckets: Vec<Vec<usize>>,
    pi_buckets: Vec<Vec<usize>>,
}

/// Positions of the non-variable buckets: `D_i` in ⟨X_i⟩, `A_i`, `B_i` in
/// ⟨Y_i⟩. The first seven buckets of both follow `p_i … v_i`.
const D: usize = 7;
const A: usize = 7;
const B: usize = 8;

fn marker_names(sat: &Sat32Instance) -> Vec<String> {
    let mut names = Vec::with_capacity(12 * sat.var_count() + 5 * sat.clause_count());
    for j in 1..=sat.clause_count() {
        names.extend([
            format!("e{j}^1"),
            format!("e{j}^2"),
            format!("f{j}^1"),
            format!("f{j}^2"),
            format!("z{j}"),
        ]);
    }
    for i in 1..=sat.var_count() {
        names.extend([
            format!("p{i}"),
            format!("a{i}+"),
            format!("q{i}"),
            format!("b{i}+"),
            format!("r{i}"),
            format!("s{i}"),
            format!("t{i}"),
            format!("u{i}"),
            format!("a{i}-"),
            format!("v{i}"),
            format!("b{i}-"),
            format!("d{i}"),
        ]);
    }
    names
}

impl Sat32Certificate {
    fn build(sat: &Sat32Instance) -> Result<Self> {
        let n = sat.var_count();
        let m = sat.clause_count();
        let markers = MarkerSet::from_ids(marker_names(sat))?.shared();
        let look = |name: String| markers.require(&name).expect("constructed marker");
        let e: Vec<[usize; 2]> = (1..=m)
            .map(|j| [look(format!("e{j}^1")), look(format!("e{j}^2"))])
            .collect();
        let f: Vec<[usize; 2]> = (1..=m)
            .map(|j| [look(format!("f{j}^1")), look(format!("f{j}^2"))])
            .collect();
        let z: Vec<usize> = (1..=m).map(|j| look(format!("z{j}"))).collect();
        let vars: Vec<VariableMarkers> = (1..=n)
            .map(|i| VariableMarkers {
                p: look(format!("p{i}")),
                q: look(format!("q{i}")),
                r: look(format!("r{i}")),
                s: look(format!("s{i}")),
                t: look(format!("t{i}")),
                u: look(format!("u{i}")),
                v: look(format!("v{i}")),
                a_pos: look(format!("a{i}+")),
                b_pos: look(format!("b{i}+")),
                a_neg: look(format!("a{i}-")),
                b_neg: look(format!("b{i}-")),
                d: look(format!("d{i}")),
            })
            .collect();

        let mut gamma_buckets = Vec::with_capacity(3 * m + 8 * n);
        for j in 0..m {
            gamma_buckets.extend([e[j].to_vec(), f[j].to_vec(), vec![z[j]]]);
        }
        for x in &vars {
            gamma_buckets.extend([
                vec![x.p, x.a_pos],
                vec![x.q, x.b_pos],
                vec![x.r],
                vec![x.s],
                vec![x.t],
                vec![x.u, x.a_neg],
                vec![x.v, x.b_neg],
                vec![x.d],
            ]);
        }

        let mut cert = Sat32Certificate {
            sat: sat.clone(),
            markers,
            vars,
            e,
            f,
            z,
            gamma_buckets,
            pi_buckets: Vec::new(),
        };
        let mut pi_buckets = Vec::with_capacity(9 * n + m);
        for i in 1..=n {
            let x = cert.vars[i - 1];
            let [l1, l2, l3] = [1, 2, 3].map(|g| cert.literal_markers(i, g));
            let (rr, ss, tt) = if cert.sat.occurrences(i)[1].positive {
                (l2.0, l2.1, x.d)
            } else {
                (x.d, l2.0, l2.1)
            };
            pi_buckets.extend([
                vec![x.p, l1.0],
                vec![x.q, l1.1],
                vec![x.r, rr],
                vec![x.s, ss],
                vec![x.t, tt],
                vec![x.u, l3.0],
                vec![x.v, l3.1],
                vec![x.a_pos, x.a_neg],
                vec![x.b_pos, x.b_neg],
            ]);
        }
        pi_buckets.extend(cert.z.iter().map(|&z| vec![z]));
        cert.pi_buckets = pi_buckets;
        Ok(cert)
    }

    pub fn sat(&self) -> &Sat32Instance {
        &self.sat
    }

    pub fn markers(&self) -> &Arc<MarkerSet> {
        &self.markers
    }

    pub fn variable(&self, i: usize) -> &VariableMarkers {
        &self.vars[i - 1]
    }

    pub fn e(&self, j: usize, h: usize) -> usize {
        self.e[j - 1][h - 1]
    }

    pub fn f(&self, j: usize, h: usize) -> usize {
        self.f[j - 1][h - 1]
    }

    pub fn z(&self, j: usize) -> usize {
        self.z[j - 1]
    }

    /// `(e_j^h, f_j^h)` for the literal `x_i^g = c_j^h`.
    pub fn literal_markers(&self, i: usize, g: usize) -> (usize, usize) {
        let occ = self.sat.occurrences(i)[g - 1];
        (self.e(occ.clause, occ.slot), self.f(occ.clause, occ.slot))
    }

    pub fn gamma_buckets(&self) -> &[Vec<usize>] {
        &self.gamma_buckets
    }

    pub fn pi_buckets(&self) -> &[Vec<usize>] {
        &self.pi_buckets
    }

    /// Index in Γ of bucket `k` of `⟨X_i⟩`.
    fn x_bucket(&self, i: usize, k: usize) -> usize {
        3 * self.sat.clause_count() + 8 * (i - 1) + k
    }

    /// Index in Π of bucket `k` of `⟨Y_i⟩`.
    fn y_bucket(&self, i: usize, k: usize) -> usize {
        9 * (i - 1) + k
    }

    pub fn gamma(&self) -> WeakOrder {
        WeakOrder::new(self.markers.clone(), self.gamma_buckets.clone()).expect("Γ partitions Σ")
    }

    pub fn pi(&self) -> WeakOrder {
        WeakOrder::new(self.markers.clone(), self.pi_buckets.clone()).expect("Π partitions Σ")
    }

    pub fn instance(&self) -> AlignmentInstance {
        AlignmentInstance::new(self.gamma().into(), self.pi().into())
            .expect("both orders share the marker set")
    }

    /// Orders the buckets of `⟨X_i⟩` and `⟨Y_i⟩` so that exactly the four
    /// selection and variable adjacencies of `value` hold, plus the literal
    /// adjacencies of that polarity on the Π side.
    fn apply_layout(&self, i: usize, value: bool, gamma: &mut [Vec<usize>], pi: &mut [Vec<usize>]) {
        let x = self.vars[i - 1];
        let place = |bucket: &[usize], k: usize, var_marker: usize| -> Vec<usize> {
            if bucket.len() == 1 {
                return bucket.to_vec();
            }
            let other = if bucket[0] == var_marker {
                bucket[1]
            } else {
                bucket[0]
            };
            // Buckets P, R, T, V put the variable marker first when true.
            if k.is_multiple_of(2) == value {
                vec![var_marker, other]
            } else {
                vec![other, var_marker]
            }
        };
        for (k, var_marker) in x.pqrstuv().into_iter().enumerate() {
            let gb = self.x_bucket(i, k);
            gamma[gb] = place(&self.gamma_buckets[gb], k, var_marker);
            let pb = self.y_bucket(i, k);
            pi[pb] = place(&self.pi_buckets[pb], k, var_marker);
        }
        gamma[self.x_bucket(i, D)] = vec![x.d];
        let (a, b) = if value {
            (vec![x.a_neg, x.a_pos], vec![x.b_pos, x.b_neg])
        } else {
            (vec![x.a_pos, x.a_neg], vec![x.b_neg, x.b_pos])
        };
        pi[self.y_bucket(i, A)] = a;
        pi[self.y_bucket(i, B)] = b;
    }

    fn linearize(&self, gamma: &[Vec<usize>], pi: &[Vec<usize>]) -> Result<AlignmentSolution> {
        AlignmentSolution::new(self.gamma().linearize(gamma)?, self.pi().linearize(pi)?)
    }
}

/// Builds the (weak, weak) instance for a normalized instance.
pub fn reduce_sat32(sat: &Sat32Instance) -> Result<(AlignmentInstance, Sat32Certificate)> {
    let cert = Sat32Certificate::build(sat)?;
    Ok((cert.instance(), cert))
}

/// Direct map: an alignment with at least `4n + k` adjacencies where `k` is
/// the number of clauses `asg` satisfies.
pub fn solution_from_assignment(
    cert: &Sat32Certificate,
    asg: &Assignment,
) -> Result<AlignmentSolution> {
    let sat = cert.sat();
    if asg.len() != sat.var_count() {
        return Err(Error::invalid(format!(
            "assignment has {} values for {} variables",
            asg.len(),
            sat.var_count()
        )));
    }
    let by_id = |bucket: &Vec<usize>| {
        let mut b = bucket.clone();
        b.sort_by_key(|&m| cert.markers.id_rank(m));
        b
    };
    let mut gamma: Vec<Vec<usize>> = cert.gamma_buckets.iter().map(by_id).collect();
    let mut pi: Vec<Vec<usize>> = cert.pi_buckets.iter().map(by_id).collect();
    let mut clause_done = vec![false; sat.clause_count()];
    for i in 1..=sat.var_count() {
        let value = asg.value(i);
        cert.apply_layout(i, value, &mut gamma, &mut pi);
        let occ = sat.occurrences(i);
        let own = if value { 0 } else { 2 };
        let mut literals = vec![occ[own]];
        if occ[1].positive == value {
            literals.push(occ[1]);
        }
        for o in literals {
            let j = o.clause;
            if clause_done[j - 1] {
                continue;
            }
            clause_done[j - 1] = true;
            let h = o.slot - 1;
            gamma[3 * (j - 1)] = vec![cert.e[j - 1][1 - h], cert.e[j - 1][h]];
            gamma[3 * (j - 1) + 1] = vec![cert.f[j - 1][h], cert.f[j - 1][1 - h]];
        }
    }
    cert.linearize(&gamma, &pi)
}

/// Result of the backward map together with the repaired solution.
#[derive(Debug, Clone)]
pub struct SatExtraction {
    pub assignment: Assignment,
    pub repaired: AlignmentSolution,
    /// Variables whose gadget buckets had to be reordered.
    pub repairs: usize,
}

fn adjacent(sol: &AlignmentSolution, a: usize, b: usize) -> bool {
    sol.gamma_ext.position(b) == sol.gamma_ext.position(a) + 1
        && sol.pi_ext.position(b) == sol.pi_ext.position(a) + 1
}

/// Backward map with its repair trace.
///
/// Variables are visited in ascending order. A variable whose realized
/// literals are mixed takes the polarity of `x_i^2`; otherwise it is false
/// exactly when some negative literal is realized. Its gadget buckets are
/// then laid out as in the direct map, which keeps every realized literal of
/// the chosen polarity and leaves exactly four gadget adjacencies.
pub fn extract_assignment_with_repair(
    cert: &Sat32Certificate,
    sol: &AlignmentSolution,
) -> Result<SatExtraction> {
    cert.instance().check_feasible(sol)?;
    let sat = cert.sat();
    let gamma_order = cert.gamma();
    let pi_order = cert.pi();
    let mut gamma = gamma_order.bucket_orders(&sol.gamma_ext);
    let mut pi = pi_order.bucket_orders(&sol.pi_ext);
    let mut current = sol.clone();
    let mut repairs = 0;
    for i in 1..=sat.var_count() {
        let occ = sat.occurrences(i);
        let realized: Vec<bool> = (1..=3)
            .map(|g| {
                let (e, f) = cert.literal_markers(i, g);
                adjacent(&current, e, f)
            })
            .collect();
        let pos = (0..3).any(|g| realized[g] && occ[g].positive);
        let neg = (0..3).any(|g| realized[g] && !occ[g].positive);
        let value = if pos && neg { occ[1].positive } else { !neg };
        let (old_gamma, old_pi) = (gamma.clone(), pi.clone());
        cert.apply_layout(i, value, &mut gamma, &mut pi);
        if gamma == old_gamma && pi == old_pi {
            continue;
        }
        let next = cert.linearize(&gamma, &pi)?;
        if next.n_adj < current.n_adj {
            return Err(Error::RepairRegression {
                before: current.n_adj,
                after: next.n_adj,
            });
        }
        current = next;
        repairs += 1;
    }
    let values = cert
        .vars
        .iter()
        .map(|x| adjacent(&current, x.a_pos, x.b_pos))
        .collect();
    Ok(SatExtraction {
        assignment: Assignment::new(values),
        repaired: current,
        repairs,
    })
}

/// Backward map: an assignment satisfying at least `n_adj − 4n` clauses.
pub fn extract_assignment(cert: &Sat32Certificate, sol: &AlignmentSolution) -> Result<Assignment> {
    extract_assignment_with_repair(cert, sol).map(|x| x.assignment)
}
