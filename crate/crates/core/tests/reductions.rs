mod common;

use common::{
    all_small_connected_graphs, check_solution, double_enumeration, max_independent_set,
    max_satisfied, satisfied,
};
use poalign::io::{gen_graph, gen_sat32, parse_graph, parse_sat, GeneratorConfig};
use poalign::order::random_linear_extension;
use poalign::reduce::{
    extract_assignment_with_repair, extract_independent_set_with_repair, normalize_sat32,
    reduce_mis3, reduce_sat32, solution_from_assignment, solution_from_independent_set, Assignment,
    Graph, IndependentSet, Literal, Sat32Instance,
};
use poalign::{
    enumerate_linear_extensions, solve, AlignmentInstance, AlignmentSolution, Error, Method, Order,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn independent_sets(g: &Graph) -> Vec<IndependentSet> {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter_map(|s| IndependentSet::new(g, (1..=n).filter(|v| s >> (v - 1) & 1 == 1)).ok())
        .collect()
}

fn is_independent(g: &Graph, s: &IndependentSet) -> bool {
    g.edges()
        .iter()
        .all(|&(a, b)| !(s.contains(a) && s.contains(b)))
}

fn random_alignment(inst: &AlignmentInstance, rng: &mut ChaCha8Rng) -> AlignmentSolution {
    let side = |o: &Order, rng: &mut ChaCha8Rng| random_linear_extension(o, rng, None);
    let g = side(inst.gamma(), rng);
    let p = side(inst.pi(), rng);
    AlignmentSolution::new(g, p).unwrap()
}

fn sat2() -> Sat32Instance {
    parse_sat(&common::read_fixture("sat2.sat")).unwrap()
}

fn small_graphs() -> Vec<Graph> {
    let mut out = all_small_connected_graphs();
    for seed in 0..40 {
        for (n, m) in [(5, 4), (5, 6), (6, 5), (6, 7), (6, 9)] {
            let cfg = GeneratorConfig {
                m: Some(m),
                ..GeneratorConfig::new(seed, n)
            };
            out.push(gen_graph(&cfg).unwrap());
        }
    }
    out
}

#[test]
fn mis_forward_map_reaches_edges_plus_set() {
    for g in small_graphs() {
        let (inst, cert) = reduce_mis3(&g, false).unwrap();
        for set in independent_sets(&g) {
            let sol = solution_from_independent_set(&cert, &set).unwrap();
            check_solution(inst.gamma(), inst.pi(), &sol);
            assert!(sol.n_adj >= g.edge_count() + set.len());
            let back = extract_independent_set_with_repair(&cert, &sol).unwrap();
            assert!(is_independent(&g, &back.set));
            assert!(back.set.len() >= set.len());
        }
    }
}

#[test]
fn mis_optimum_is_edges_plus_independence_number() {
    for g in all_small_connected_graphs() {
        let (inst, _) = reduce_mis3(&g, false).unwrap();
        let opt = solve(&inst, Method::Auto, 1_000_000).unwrap();
        check_solution(inst.gamma(), inst.pi(), &opt);
        assert_eq!(opt.n_adj, g.edge_count() + max_independent_set(&g), "{g:?}");
    }
}

#[test]
fn mis_optimum_by_double_enumeration() {
    for name in ["k2.graph", "p3.graph"] {
        let g = parse_graph(&common::read_fixture(name)).unwrap();
        let (inst, _) = reduce_mis3(&g, false).unwrap();
        let want = g.edge_count() + max_independent_set(&g);
        assert_eq!(double_enumeration(inst.gamma(), inst.pi()), want, "{name}");
    }
}

#[test]
fn mis_extraction_on_every_alignment_of_small_graphs() {
    for name in ["k2.graph", "p3.graph"] {
        let g = parse_graph(&common::read_fixture(name)).unwrap();
        let (inst, cert) = reduce_mis3(&g, false).unwrap();
        let gamma = inst.gamma().as_linear().unwrap();
        for pi in enumerate_linear_extensions(inst.pi(), 1_000_000).unwrap() {
            let y = AlignmentSolution::new(gamma.clone(), pi).unwrap();
            let x = extract_independent_set_with_repair(&cert, &y).unwrap();
            assert!(is_independent(&g, &x.set));
            assert!(x.set.len() + g.edge_count() >= y.n_adj);
            assert!(x.repaired.n_adj >= y.n_adj);
        }
    }
}

#[test]
fn mis_extraction_bound_on_random_alignments() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in all_small_connected_graphs() {
        let (inst, cert) = reduce_mis3(&g, false).unwrap();
        for _ in 0..20 {
            let y = random_alignment(&inst, &mut rng);
            let x = extract_independent_set_with_repair(&cert, &y).unwrap();
            assert!(is_independent(&g, &x.set));
            assert!(x.set.len() + g.edge_count() >= y.n_adj);
            assert!(x.repaired.n_adj >= y.n_adj);
            check_solution(inst.gamma(), inst.pi(), &x.repaired);
        }
    }
}

#[test]
fn mis_rejects_high_degree_unless_allowed() {
    let star = Graph::new(5, [(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
    assert!(matches!(
        reduce_mis3(&star, false),
        Err(Error::DegreeViolation {
            vertex: 1,
            degree: 4
        })
    ));
    let (inst, cert) = reduce_mis3(&star, true).unwrap();
    let set = IndependentSet::new(&star, [2, 3, 4, 5]).unwrap();
    let sol = solution_from_independent_set(&cert, &set).unwrap();
    check_solution(inst.gamma(), inst.pi(), &sol);
}

#[test]
fn mis_forward_map_rejects_dependent_sets() {
    let g = parse_graph(&common::read_fixture("k2.graph")).unwrap();
    assert!(IndependentSet::new(&g, [1, 2]).is_err());
}

fn sat_cases() -> Vec<Sat32Instance> {
    let mut out = vec![sat2()];
    for seed in 0..6 {
        out.push(gen_sat32(&GeneratorConfig::new(seed, 2)).unwrap());
        out.push(gen_sat32(&GeneratorConfig::new(seed, 4)).unwrap());
    }
    out
}

fn all_assignments(n: usize) -> impl Iterator<Item = Assignment> {
    (0u32..1 << n).map(move |m| Assignment::new((0..n).map(|i| m >> i & 1 == 1).collect()))
}

#[test]
fn sat_forward_map_counts_four_per_variable_plus_satisfied() {
    for sat in sat_cases() {
        let (inst, cert) = reduce_sat32(&sat).unwrap();
        let n = sat.var_count();
        for asg in all_assignments(n) {
            let sol = solution_from_assignment(&cert, &asg).unwrap();
            check_solution(inst.gamma(), inst.pi(), &sol);
            let sat_count = satisfied(&sat, asg.values());
            assert_eq!(sol.n_adj, 4 * n + sat_count);
            let back = extract_assignment_with_repair(&cert, &sol).unwrap();
            assert!(satisfied(&sat, back.assignment.values()) >= sat_count);
        }
    }
}

#[test]
fn sat_optimum_is_four_per_variable_plus_max_satisfied() {
    let mut cases = vec![sat2()];
    cases.extend((0..3).map(|s| gen_sat32(&GeneratorConfig::new(s, 2)).unwrap()));
    for sat in cases {
        let (inst, _) = reduce_sat32(&sat).unwrap();
        let opt = solve(&inst, Method::Auto, 1_000_000).unwrap();
        check_solution(inst.gamma(), inst.pi(), &opt);
        assert_eq!(opt.n_adj, 4 * sat.var_count() + max_satisfied(&sat));
    }
}

#[test]
fn sat_extraction_bound_on_random_alignments() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for sat in sat_cases() {
        let (inst, cert) = reduce_sat32(&sat).unwrap();
        for _ in 0..50 {
            let y = random_alignment(&inst, &mut rng);
            let x = extract_assignment_with_repair(&cert, &y).unwrap();
            assert!(satisfied(&sat, x.assignment.values()) + 4 * sat.var_count() >= y.n_adj);
            assert!(x.repaired.n_adj >= y.n_adj);
            check_solution(inst.gamma(), inst.pi(), &x.repaired);
        }
    }
}

#[test]
fn sat_buckets_hold_at_most_two_markers() {
    for sat in sat_cases() {
        let (inst, _) = reduce_sat32(&sat).unwrap();
        for order in [inst.gamma(), inst.pi()] {
            let w = order.as_weak().unwrap();
            assert!(w.buckets().iter().all(|b| b.len() <= 2));
        }
    }
}

#[test]
fn sat_normalization_errors() {
    let uniform = normalize_sat32(
        2,
        vec![
            [Literal::pos(1), Literal::pos(2)],
            [Literal::pos(1), Literal::neg(2)],
            [Literal::pos(1), Literal::neg(2)],
        ],
    );
    assert!(matches!(uniform, Err(Error::UniformPolarity { var: 1 })));
    let short = normalize_sat32(2, vec![[Literal::pos(1), Literal::neg(2)]]);
    assert!(matches!(short, Err(Error::OccurrenceCount { .. })));
    let dup = normalize_sat32(
        2,
        vec![
            [Literal::pos(1), Literal::neg(1)],
            [Literal::pos(1), Literal::pos(2)],
            [Literal::neg(2), Literal::neg(2)],
        ],
    );
    assert!(matches!(dup, Err(Error::DuplicateVariable { .. })));
}
