mod common;

use poalign::io::{
    gen_graph, gen_instance, gen_sat32, parse_assignment, parse_certificate, parse_graph,
    parse_independent_set, parse_instance, parse_sat, parse_solution, serialize_assignment,
    serialize_certificate, serialize_graph, serialize_independent_set, serialize_instance,
    serialize_sat, serialize_solution, Certificate, GeneratorConfig,
};
use poalign::lred::greedy_mis;
use poalign::order::Representation;
use poalign::reduce::{normalize_sat32, reduce_mis3, reduce_sat32, Assignment, Literal};
use poalign::{solve, Error, Method};

const REPRS: [Representation; 4] = [
    Representation::Linear,
    Representation::Weak,
    Representation::Interval,
    Representation::Dag,
];

fn cfg(seed: u64, n: usize) -> GeneratorConfig {
    GeneratorConfig {
        gamma: REPRS[seed as usize % 4],
        pi: REPRS[(seed as usize / 4) % 4],
        ..GeneratorConfig::new(seed, n)
    }
}

fn parse_error_line(e: Error) -> usize {
    match e {
        Error::Parse { line, .. } => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn instance_round_trip() {
    for seed in 0..100 {
        let inst = gen_instance(&cfg(seed, 1 + seed as usize % 9)).unwrap();
        let text = serialize_instance(&inst);
        let back = parse_instance(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(serialize_instance(&back), text);
    }
}

#[test]
fn graph_round_trip() {
    for seed in 0..100 {
        let n = 2 + seed as usize % 9;
        let g = gen_graph(&GeneratorConfig::new(seed, n)).unwrap();
        let text = serialize_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
        let set = greedy_mis(&g).unwrap();
        let set_text = serialize_independent_set(&set);
        assert_eq!(parse_independent_set(&set_text, &g).unwrap(), set);
    }
}

#[test]
fn sat_round_trip() {
    for seed in 0..100 {
        let n = 2 * (1 + seed as usize % 4);
        let sat = gen_sat32(&GeneratorConfig::new(seed, n)).unwrap();
        let text = serialize_sat(&sat);
        assert_eq!(parse_sat(&text).unwrap(), sat);
        assert_eq!(serialize_sat(&parse_sat(&text).unwrap()), text);
        let asg = Assignment::new((0..n).map(|i| (seed >> i) & 1 == 1).collect());
        let asg_text = serialize_assignment(&asg);
        assert_eq!(parse_assignment(&asg_text, n).unwrap(), asg);
    }
}

#[test]
fn solution_round_trip() {
    for seed in 0..100 {
        let inst = gen_instance(&cfg(seed, 1 + seed as usize % 7)).unwrap();
        let sol = solve(&inst, Method::Auto, 1_000_000).unwrap();
        let text = serialize_solution(&sol);
        let back = parse_solution(&text, inst.markers()).unwrap();
        assert_eq!(back, sol);
        assert_eq!(serialize_solution(&back), text);
    }
}

#[test]
fn certificate_round_trip() {
    for seed in 0..100 {
        let cert = if seed % 2 == 0 {
            let g = gen_graph(&GeneratorConfig::new(seed, 2 + seed as usize % 7)).unwrap();
            Certificate::Mis3(reduce_mis3(&g, false).unwrap().1)
        } else {
            let sat = gen_sat32(&GeneratorConfig::new(seed, 2 * (1 + seed as usize % 3))).unwrap();
            Certificate::Sat32(reduce_sat32(&sat).unwrap().1)
        };
        let text = serialize_certificate(&cert);
        let back = parse_certificate(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(serialize_certificate(&back), text);
    }
}

#[test]
fn tampered_certificate_rejected() {
    let g = parse_graph("graph 2 1\nedge 1 2\n").unwrap();
    let text = serialize_certificate(&Certificate::Mis3(reduce_mis3(&g, false).unwrap().1));
    let (idx, line) = text
        .lines()
        .enumerate()
        .find(|(_, l)| l.starts_with("gamma"))
        .unwrap();
    let mut words: Vec<&str> = line.split(' ').collect();
    let last = words.len() - 1;
    words.swap(1, last);
    let swapped = words.join(" ");
    let tampered = text.replacen(line, &swapped, 1);
    let err = parse_certificate(&tampered).unwrap_err();
    assert_eq!(parse_error_line(err), idx + 1);
}

#[test]
fn canonical_source_documents() {
    let k2 = parse_graph("graph 2 1\nedge 1 2\n").unwrap();
    assert_eq!(serialize_graph(&k2), "graph 2 1\nedge 1 2\n");
    let sat2 = normalize_sat32(
        2,
        vec![
            [Literal::pos(1), Literal::pos(2)],
            [Literal::pos(1), Literal::neg(2)],
            [Literal::neg(1), Literal::neg(2)],
        ],
    )
    .unwrap();
    assert_eq!(
        serialize_sat(&sat2),
        "sat32 2 3\nclause +1 +2\nclause +1 -2\nclause -1 -2\n"
    );
    assert_eq!(parse_sat(&common::read_fixture("sat2.sat")).unwrap(), sat2);
}

#[test]
fn instance_examples() {
    let ok =
        "poa 1\nmarkers a b c\norder g linear\nperm a b c\norder p weak\nbuckets { a b } { c }\n";
    let inst = parse_instance(ok).unwrap();
    assert_eq!(inst.markers().len(), 3);

    let unknown =
        "poa 1\nmarkers a b c\norder g linear\nperm a b d\norder p weak\nbuckets { a b c }\n";
    assert_eq!(parse_error_line(parse_instance(unknown).unwrap_err()), 4);

    let cyclic = "poa 1\nmarkers a b\norder g dag\nrel a<b b<a\norder p linear\nperm a b\n";
    assert_eq!(parse_error_line(parse_instance(cyclic).unwrap_err()), 4);

    let family = "poa 1\nmarkers a b\norder g tree\nperm a b\norder p linear\nperm a b\n";
    assert_eq!(parse_error_line(parse_instance(family).unwrap_err()), 3);

    let dup = "poa 1\nmarkers a b a\norder g linear\nperm a b\norder p linear\nperm a b\n";
    assert_eq!(parse_error_line(parse_instance(dup).unwrap_err()), 2);

    let short = "poa 1\nmarkers a b c\norder g linear\nperm a b\norder p linear\nperm a b c\n";
    assert_eq!(parse_error_line(parse_instance(short).unwrap_err()), 4);
}

#[test]
fn source_count_mismatches() {
    assert!(parse_graph("graph 3 2\nedge 1 2\n").is_err());
    assert!(parse_graph("graph 2 1\nedge 1 3\n").is_err());
    assert!(parse_sat("sat32 2 2\nclause +1 +2\nclause -1 -2\n").is_err());
    assert!(parse_sat("sat32 2 3\nclause +1 +2 +1\nclause +1 -2\nclause -1 -2\n").is_err());
}

#[test]
fn generators_are_deterministic_and_valid() {
    for seed in 0..50 {
        let c = GeneratorConfig::new(seed, 8);
        let g = gen_graph(&c).unwrap();
        assert_eq!(g, gen_graph(&c).unwrap());
        assert!(g.max_degree() <= 3);
        let sat = gen_sat32(&c).unwrap();
        assert_eq!(sat, gen_sat32(&c).unwrap());
        let again = normalize_sat32(sat.var_count(), sat.clauses().to_vec()).unwrap();
        assert_eq!(again, sat);
        let c = cfg(seed, 9);
        assert_eq!(
            serialize_instance(&gen_instance(&c).unwrap()),
            serialize_instance(&gen_instance(&c).unwrap())
        );
    }
    let odd = GeneratorConfig::new(0, 3);
    assert!(gen_sat32(&odd).is_err());
}
