mod common;

use common::{adjacencies, check_solution, double_enumeration};
use poalign::io::{gen_instance, GeneratorConfig};
use poalign::order::Representation;
use poalign::solve::max_adjacencies_against;
use poalign::{
    count_adjacencies, count_breakpoints, dp_align_linear_weak, oracle_align, solve,
    AlignmentInstance, Error, LinearOrder, MarkerSet, Method, Order, WeakOrder,
};
use proptest::prelude::*;

const REPRS: [Representation; 4] = [
    Representation::Linear,
    Representation::Weak,
    Representation::Interval,
    Representation::Dag,
];

fn instance(
    seed: u64,
    n: usize,
    gamma: Representation,
    pi: Representation,
    bucket_max: usize,
) -> AlignmentInstance {
    let cfg = GeneratorConfig {
        gamma,
        pi,
        bucket_max,
        ..GeneratorConfig::new(seed, n)
    };
    gen_instance(&cfg).unwrap()
}

fn split(inst: &AlignmentInstance) -> (LinearOrder, WeakOrder) {
    match (inst.gamma(), inst.pi()) {
        (Order::Linear(g), Order::Weak(p)) => (g.clone(), p.clone()),
        _ => panic!("expected a linear and a weak order"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dp_matches_double_enumeration(seed in any::<u64>(), n in 1usize..=8, bmax in 1usize..=5) {
        let inst = instance(seed, n, Representation::Linear, Representation::Weak, bmax);
        let (g, p) = split(&inst);
        let sol = dp_align_linear_weak(&g, &p).unwrap();
        check_solution(&g, &p, &sol);
        prop_assert_eq!(sol.n_adj, double_enumeration(&g, &p));
    }

    #[test]
    fn branch_and_bound_matches_dp(seed in any::<u64>(), n in 1usize..=12, bmax in 1usize..=5) {
        let inst = instance(seed, n, Representation::Linear, Representation::Weak, bmax);
        let (g, p) = split(&inst);
        let bb = max_adjacencies_against(&g, &p, u64::MAX).unwrap();
        check_solution(&g, &p, &bb);
        prop_assert_eq!(bb.n_adj, dp_align_linear_weak(&g, &p).unwrap().n_adj);
    }

    #[test]
    fn oracle_matches_double_enumeration(
        seed in any::<u64>(),
        n in 1usize..=6,
        gi in 0usize..4,
        pj in 0usize..4,
    ) {
        let inst = instance(seed, n, REPRS[gi], REPRS[pj], 3);
        let sol = oracle_align(&inst, 1_000_000).unwrap();
        check_solution(inst.gamma(), inst.pi(), &sol);
        prop_assert_eq!(sol.n_adj, double_enumeration(inst.gamma(), inst.pi()));
        let auto = solve(&inst, Method::Auto, 1_000_000).unwrap();
        prop_assert_eq!(auto.n_adj, sol.n_adj);
    }

    #[test]
    fn metric_invariants(perm in Just((0..9usize).collect::<Vec<_>>()).prop_shuffle(),
                         other in Just((0..9usize).collect::<Vec<_>>()).prop_shuffle()) {
        let set = MarkerSet::from_ids((0..9).map(|i| format!("x{i}"))).unwrap().shared();
        let a = LinearOrder::new(set.clone(), perm.clone()).unwrap();
        let b = LinearOrder::new(set, other.clone()).unwrap();
        let adj = count_adjacencies(&a, &b).unwrap();
        prop_assert_eq!(adj, adjacencies(&perm, &other));
        prop_assert_eq!(adj, count_adjacencies(&b, &a).unwrap());
        prop_assert_eq!(adj + count_breakpoints(&a, &b).unwrap(), 8);
        prop_assert_eq!(count_adjacencies(&a, &a).unwrap(), 8);
    }
}

#[test]
fn dp_applies_in_both_roles() {
    for seed in 0..40 {
        let inst = instance(seed, 7, Representation::Weak, Representation::Linear, 4);
        let sol = solve(&inst, Method::Dp, 10).unwrap();
        check_solution(inst.gamma(), inst.pi(), &sol);
        assert_eq!(sol.n_adj, double_enumeration(inst.gamma(), inst.pi()));
    }
}

#[test]
fn dp_refuses_other_families() {
    let text = "poa 1
markers a b c d
order g interval
iv a=(0,1) b=(2,3) c=(0,3) d=(4,5)
order p linear
perm a b c d
";
    let inst = poalign::io::parse_instance(text).unwrap();
    assert!(matches!(
        solve(&inst, Method::Dp, 10),
        Err(Error::FamilyMismatch { .. })
    ));
    let sol = solve(&inst, Method::Auto, 10).unwrap();
    assert_eq!(sol.n_adj, double_enumeration(inst.gamma(), inst.pi()));
}

#[test]
fn cap_reports_best_so_far() {
    let text = "poa 1
markers a b c d e f
order g dag
rel a<b c<d
order p dag
rel f<e d<c
";
    let inst = poalign::io::parse_instance(text).unwrap();
    match oracle_align(&inst, 2) {
        Err(Error::CapExceeded { count, best }) => {
            assert_eq!(count, 2);
            if let Some(best) = best {
                check_solution(inst.gamma(), inst.pi(), &best);
            }
        }
        other => panic!("expected a cap error, got {other:?}"),
    }
    let full = oracle_align(&inst, 1_000_000).unwrap();
    assert_eq!(full.n_adj, double_enumeration(inst.gamma(), inst.pi()));
}

#[test]
fn dp_handles_large_instances() {
    let inst = instance(11, 3000, Representation::Linear, Representation::Weak, 5);
    let (g, p) = split(&inst);
    let sol = dp_align_linear_weak(&g, &p).unwrap();
    check_solution(&g, &p, &sol);
}
