use std::ffi::{c_char, CStr, CString};
use std::ptr;

use poalign_ffi::*;

const SAT2_SAT: &str = include_str!("../../core/tests/fixtures/sat2.sat");
const K2: &str = "graph 2 1\nedge 1 2\n";

const SMALL: &str = "poa 1
markers a b c d
order g linear
perm a b c d
order p weak
buckets { b a } { d c }
";

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { poa_string_free(s) };
    out
}

fn last_error() -> String {
    let p = poa_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn parse(text: &str) -> *mut PoaInstance {
    let c = CString::new(text).unwrap();
    let mut inst = ptr::null_mut();
    assert_eq!(
        unsafe { poa_instance_parse(c.as_ptr(), &mut inst) },
        PoaStatus::Ok
    );
    inst
}

#[test]
fn solve_small_instance() {
    let inst = parse(SMALL);
    assert_eq!(unsafe { poa_instance_marker_count(inst) }, 4);
    let (mut g, mut p) = (PoaFamily::Partial, PoaFamily::Partial);
    assert_eq!(unsafe { poa_classify(inst, &mut g, &mut p) }, PoaStatus::Ok);
    assert_eq!((g, p), (PoaFamily::Linear, PoaFamily::Weak));

    let mut sol = ptr::null_mut();
    let st = unsafe { poa_solve(inst, PoaMethod::Dp as u32, 1000, &mut sol) };
    assert_eq!(st, PoaStatus::Ok);
    assert_eq!(unsafe { poa_solution_n_adj(sol) }, 3);
    assert_eq!(unsafe { poa_solution_n_brk(sol) }, 0);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { poa_solution_to_string(sol, &mut s) },
        PoaStatus::Ok
    );
    let text = take(s);
    assert!(
        text.starts_with("poa-solution 1\nn_adj=3\nn_brk=0\n"),
        "{text}"
    );

    let mut back = ptr::null_mut();
    assert_eq!(
        unsafe { poa_instance_to_string(inst, &mut back) },
        PoaStatus::Ok
    );
    assert!(take(back).starts_with("poa 1\n"));

    unsafe {
        poa_solution_free(sol);
        poa_instance_free(inst);
    }
}

#[test]
fn parse_error_reports_line() {
    let c = CString::new("poa 1\nmarkers a b\norder g linear\nperm a x\n").unwrap();
    let mut inst = ptr::null_mut();
    let st = unsafe { poa_instance_parse(c.as_ptr(), &mut inst) };
    assert_eq!(st, PoaStatus::Invalid);
    assert!(inst.is_null());
    assert!(last_error().contains("line 4"), "{}", last_error());
}

#[test]
fn null_and_bad_arguments() {
    let mut inst = ptr::null_mut();
    assert_eq!(
        unsafe { poa_instance_parse(ptr::null(), &mut inst) },
        PoaStatus::NullArgument
    );
    let bad = [0xffu8, 0xfe, 0];
    assert_eq!(
        unsafe { poa_instance_parse(bad.as_ptr() as *const c_char, &mut inst) },
        PoaStatus::InvalidUtf8
    );
    let inst = parse(SMALL);
    let mut sol = ptr::null_mut();
    assert_eq!(
        unsafe { poa_solve(inst, 9, 10, &mut sol) },
        PoaStatus::Invalid
    );
    assert_eq!(
        unsafe { poa_solve(ptr::null(), 0, 10, &mut sol) },
        PoaStatus::NullArgument
    );
    assert_eq!(unsafe { poa_solution_n_adj(ptr::null()) }, 0);
    unsafe {
        poa_instance_free(inst);
        poa_instance_free(ptr::null_mut());
        poa_string_free(ptr::null_mut());
    }
}

#[test]
fn dp_rejects_interval_and_cap_returns_best() {
    let text = "poa 1
markers a b c d e
order g interval
iv a=(0,1) b=(0,1) c=(2,3) d=(2,3) e=(4,5)
order p interval
iv e=(0,1) d=(0,1) c=(0,1) b=(2,3) a=(2,3)
";
    let inst = parse(text);
    let mut sol = ptr::null_mut();
    let st = unsafe { poa_solve(inst, PoaMethod::Dp as u32, 10, &mut sol) };
    assert_eq!(st, PoaStatus::Invalid);
    assert!(sol.is_null());

    let st = unsafe { poa_solve(inst, PoaMethod::Oracle as u32, 1, &mut sol) };
    assert_eq!(st, PoaStatus::CapExceeded);
    if !sol.is_null() {
        let n = unsafe { poa_solution_n_adj(sol) };
        assert_eq!(n + unsafe { poa_solution_n_brk(sol) }, 4);
        unsafe { poa_solution_free(sol) };
    }
    unsafe { poa_instance_free(inst) };
}

#[test]
fn reduce_build_extract_round_trip() {
    let src = CString::new(SAT2_SAT).unwrap();
    let (mut inst_text, mut cert_text) = (ptr::null_mut(), ptr::null_mut());
    let st = unsafe {
        poa_reduce(
            PoaReduction::Sat32 as u32,
            src.as_ptr(),
            false,
            &mut inst_text,
            &mut cert_text,
        )
    };
    assert_eq!(st, PoaStatus::Ok);
    let inst_text = take(inst_text);
    let cert = CString::new(take(cert_text)).unwrap();

    let inst = parse(&inst_text);
    assert_eq!(unsafe { poa_instance_marker_count(inst) }, 39);
    unsafe { poa_instance_free(inst) };

    let asg = CString::new("assign +1 -2\n").unwrap();
    let mut sol = ptr::null_mut();
    let st = unsafe { poa_build_solution(cert.as_ptr(), asg.as_ptr(), &mut sol) };
    assert_eq!(st, PoaStatus::Ok);
    let sol = take(sol);
    assert!(sol.contains("n_adj=11\n"), "{sol}");

    let sol = CString::new(sol).unwrap();
    let mut back = ptr::null_mut();
    let st = unsafe { poa_extract(cert.as_ptr(), sol.as_ptr(), &mut back) };
    assert_eq!(st, PoaStatus::Ok);
    assert_eq!(take(back), "assign +1 -2\n");
}

#[test]
fn reduce_graph_and_unknown_kind() {
    let src = CString::new(K2).unwrap();
    let (mut i, mut c) = (ptr::null_mut(), ptr::null_mut());
    let st = unsafe {
        poa_reduce(
            PoaReduction::Mis3 as u32,
            src.as_ptr(),
            false,
            &mut i,
            &mut c,
        )
    };
    assert_eq!(st, PoaStatus::Ok);
    assert!(take(c).starts_with("poa-cert 1 mis3"));
    take(i);
    let st = unsafe { poa_reduce(7, src.as_ptr(), false, &mut i, &mut c) };
    assert_eq!(st, PoaStatus::Invalid);
    assert!(i.is_null() && c.is_null());
    assert!(last_error().contains("unknown reduction"));
}
