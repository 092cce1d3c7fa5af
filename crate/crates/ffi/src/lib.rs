//! C interface to `poalign`.
//!
//! Instances and solutions are opaque heap handles owned by the caller and
//! released with the matching `_free` function. Strings returned through
//! out-parameters are NUL terminated, owned by the caller and released with
//! [`poa_string_free`]. Every function returns a [`PoaStatus`]; on failure the
//! message of the last error on the calling thread is available from
//! [`poa_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use poalign::io::{
    parse_assignment, parse_certificate, parse_graph, parse_independent_set, parse_instance,
    parse_sat, parse_solution, serialize_assignment, serialize_certificate,
    serialize_independent_set, serialize_instance, serialize_solution, Certificate,
};
use poalign::reduce::{
    extract_assignment_with_repair, extract_independent_set_with_repair, reduce_mis3, reduce_sat32,
    solution_from_assignment, solution_from_independent_set,
};
use poalign::{AlignmentInstance, AlignmentSolution, Error, Method, OrderFamily};

/// Result code of every call. The numeric values of the first four match
/// the exit codes of the `poalign` binary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoaStatus {
    Ok = 0,
    /// I/O failure or an internal invariant broke.
    Internal = 1,
    /// Malformed text or an input outside the supported domain.
    Invalid = 2,
    /// The enumeration cap was hit before the optimum was proven.
    CapExceeded = 3,
    NullArgument = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoaMethod {
    Auto = 0,
    Dp = 1,
    Oracle = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoaFamily {
    Linear = 0,
    Weak = 1,
    Semiorder = 2,
    Interval = 3,
    Partial = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoaReduction {
    Mis3 = 0,
    Sat32 = 1,
}

/// Parsed alignment instance.
pub struct PoaInstance {
    inner: AlignmentInstance,
}

/// Linearization pair with its adjacency count.
pub struct PoaSolution {
    inner: AlignmentSolution,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(PoaStatus);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::CapExceeded { .. } => PoaStatus::CapExceeded,
            Error::Io(_) | Error::RepairRegression { .. } => PoaStatus::Internal,
            _ => PoaStatus::Invalid,
        };
        set_error(e.to_string());
        Failure(status)
    }
}

fn fail(status: PoaStatus, msg: &str) -> Failure {
    set_error(msg.to_string());
    Failure(status)
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PoaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PoaStatus::Ok,
        Ok(Err(Failure(s))) => s,
        Err(_) => {
            set_error("panic inside poalign".to_string());
            PoaStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(PoaStatus::NullArgument, &format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        fail(
            PoaStatus::InvalidUtf8,
            &format!("{what} is not valid UTF-8"),
        )
    })
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(PoaStatus::NullArgument, &format!("{what} is null")))
}

fn out_ptr<T>(p: *mut T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(fail(PoaStatus::NullArgument, &format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn poa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn poa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse an instance document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn poa_instance_parse(
    text: *const c_char,
    out: *mut *mut PoaInstance,
) -> PoaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let inner = parse_instance(self::text(text, "text")?)?;
        *out = Box::into_raw(Box::new(PoaInstance { inner }));
        Ok(())
    })
}

/// # Safety
/// `inst` must be null or a handle from [`poa_instance_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn poa_instance_free(inst: *mut PoaInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Number of markers, or 0 for a null handle.
///
/// # Safety
/// `inst` must be null or a live instance handle.
#[no_mangle]
pub unsafe extern "C" fn poa_instance_marker_count(inst: *const PoaInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.inner.markers().len())
}

/// # Safety
/// `inst` must be a live instance handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn poa_instance_to_string(
    inst: *const PoaInstance,
    out: *mut *mut c_char,
) -> PoaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let inst = deref(inst, "instance")?;
        *out = c_string(serialize_instance(&inst.inner));
        Ok(())
    })
}

fn family(f: OrderFamily) -> PoaFamily {
    match f {
        OrderFamily::Linear => PoaFamily::Linear,
        OrderFamily::Weak => PoaFamily::Weak,
        OrderFamily::Semiorder => PoaFamily::Semiorder,
        OrderFamily::Interval => PoaFamily::Interval,
        OrderFamily::Partial => PoaFamily::Partial,
    }
}

/// Finest family of each order of the instance.
///
/// # Safety
/// `inst` must be a live instance handle; both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn poa_classify(
    inst: *const PoaInstance,
    gamma: *mut PoaFamily,
    pi: *mut PoaFamily,
) -> PoaStatus {
    guard(|| {
        out_ptr(gamma, "gamma")?;
        out_ptr(pi, "pi")?;
        let inst = deref(inst, "instance")?;
        *gamma = family(inst.inner.gamma().family());
        *pi = family(inst.inner.pi().family());
        Ok(())
    })
}

/// Compute an optimal alignment. `method` is a [`PoaMethod`] value.
///
/// On [`PoaStatus::CapExceeded`] `*out` holds the best alignment found before
/// the cap when there is one, and null otherwise. On every other failure it
/// is null.
///
/// # Safety
/// `inst` must be a live instance handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn poa_solve(
    inst: *const PoaInstance,
    method: u32,
    cap: u64,
    out: *mut *mut PoaSolution,
) -> PoaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let inst = deref(inst, "instance")?;
        let method = match method {
            m if m == PoaMethod::Auto as u32 => Method::Auto,
            m if m == PoaMethod::Dp as u32 => Method::Dp,
            m if m == PoaMethod::Oracle as u32 => Method::Oracle,
            m => return Err(fail(PoaStatus::Invalid, &format!("unknown method {m}"))),
        };
        match poalign::solve(&inst.inner, method, cap) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(PoaSolution { inner }));
                Ok(())
            }
            Err(Error::CapExceeded { count, best }) => {
                if let Some(best) = &best {
                    *out = Box::into_raw(Box::new(PoaSolution {
                        inner: (**best).clone(),
                    }));
                }
                Err(Error::CapExceeded { count, best }.into())
            }
            Err(e) => Err(e.into()),
        }
    })
}

/// # Safety
/// `sol` must be null or a handle from [`poa_solve`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn poa_solution_free(sol: *mut PoaSolution) {
    if !sol.is_null() {
        drop(Box::from_raw(sol));
    }
}

/// Adjacency count, or 0 for a null handle.
///
/// # Safety
/// `sol` must be null or a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn poa_solution_n_adj(sol: *const PoaSolution) -> usize {
    sol.as_ref().map_or(0, |s| s.inner.n_adj)
}

/// Breakpoint count, or 0 for a null handle.
///
/// # Safety
/// `sol` must be null or a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn poa_solution_n_brk(sol: *const PoaSolution) -> usize {
    sol.as_ref().map_or(0, |s| s.inner.n_brk)
}

/// # Safety
/// `sol` must be a live solution handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn poa_solution_to_string(
    sol: *const PoaSolution,
    out: *mut *mut c_char,
) -> PoaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let sol = deref(sol, "solution")?;
        *out = c_string(serialize_solution(&sol.inner));
        Ok(())
    })
}

/// Compile a graph or a SAT instance into an instance document and a
/// certificate document. `kind` is a [`PoaReduction`] value.
///
/// # Safety
/// `source` must be a NUL-terminated string; both out pointers must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn poa_reduce(
    kind: u32,
    source: *const c_char,
    allow_high_degree: bool,
    out_instance: *mut *mut c_char,
    out_certificate: *mut *mut c_char,
) -> PoaStatus {
    guard(|| {
        out_ptr(out_instance, "out_instance")?;
        out_ptr(out_certificate, "out_certificate")?;
        *out_instance = ptr::null_mut();
        *out_certificate = ptr::null_mut();
        let source = text(source, "source")?;
        let (inst, cert) = match kind {
            k if k == PoaReduction::Mis3 as u32 => {
                let (i, c) = reduce_mis3(&parse_graph(source)?, allow_high_degree)?;
                (i, Certificate::Mis3(c))
            }
            k if k == PoaReduction::Sat32 as u32 => {
                let (i, c) = reduce_sat32(&parse_sat(source)?)?;
                (i, Certificate::Sat32(c))
            }
            k => return Err(fail(PoaStatus::Invalid, &format!("unknown reduction {k}"))),
        };
        *out_instance = c_string(serialize_instance(&inst));
        *out_certificate = c_string(serialize_certificate(&cert));
        Ok(())
    })
}

/// Map an independent set or an assignment through a certificate to a
/// solution document.
///
/// # Safety
/// Both inputs must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn poa_build_solution(
    certificate: *const c_char,
    input: *const c_char,
    out: *mut *mut c_char,
) -> PoaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let cert = parse_certificate(text(certificate, "certificate")?)?;
        let input = text(input, "input")?;
        let sol = match &cert {
            Certificate::Mis3(c) => {
                solution_from_independent_set(c, &parse_independent_set(input, c.graph())?)?
            }
            Certificate::Sat32(c) => {
                solution_from_assignment(c, &parse_assignment(input, c.sat().var_count())?)?
            }
        };
        *out = c_string(serialize_solution(&sol));
        Ok(())
    })
}

/// Read an independent set (`iset` line) or an assignment (`assign` line)
/// back from a solution document.
///
/// # Safety
/// Both inputs must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn poa_extract(
    certificate: *const c_char,
    solution: *const c_char,
    out: *mut *mut c_char,
) -> PoaStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let cert = parse_certificate(text(certificate, "certificate")?)?;
        let sol = parse_solution(text(solution, "solution")?, cert.markers())?;
        let doc = match &cert {
            Certificate::Mis3(c) => {
                serialize_independent_set(&extract_independent_set_with_repair(c, &sol)?.set)
            }
            Certificate::Sat32(c) => {
                serialize_assignment(&extract_assignment_with_repair(c, &sol)?.assignment)
            }
        };
        *out = c_string(doc);
        Ok(())
    })
}
