//! C interface to `clique-bounds`.
//!
//! Every fallible function returns a [`CbStatus`] and writes its result
//! through an out pointer. On failure the message is kept per thread and
//! can be read with [`cb_last_error_message`]. Integers cross the boundary
//! as decimal strings, so results are exact at any size.
//!
//! Strings returned through `char **` are owned by the caller and must be
//! released with [`cb_string_free`]. Handles are released with their own
//! `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clique_bounds::bounds::{main_bound, BoundReport, Winner};
use clique_bounds::graphs::constructions::{construct, Which};
use clique_bounds::graphs::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use clique_bounds::graphs::{clique_count, Graph};
use clique_bounds::{Error, Nat};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Domain = 3,
    Inapplicable = 4,
    ResourceLimit = 5,
    Overflow = 6,
    Invariant = 7,
    Parse = 8,
    Panic = 9,
}

/// Which of the two refined bounds is larger.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbWinner {
    Lgbd = 0,
    Smbd = 1,
    Tie = 2,
}

/// Opaque graph handle.
pub struct CbGraph(Graph);

/// Opaque result of a bound computation.
pub struct CbBoundReport(BoundReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CbStatus {
    match e {
        Error::Domain(_) => CbStatus::Domain,
        Error::Inapplicable { .. } => CbStatus::Inapplicable,
        Error::ResourceLimit(_) => CbStatus::ResourceLimit,
        Error::Overflow(_) => CbStatus::Overflow,
        Error::Invariant(_) => CbStatus::Invariant,
        Error::Parse(_) => CbStatus::Parse,
    }
}

struct Fail(CbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> CbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CbStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CbStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(CbStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(CbStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_nat(p: *const c_char, what: &str) -> Result<Nat, Fail> {
    let s = read_str(p, what)?;
    s.trim()
        .parse()
        .map_err(|_| Fail(CbStatus::Parse, format!("{what} {s:?} is not a non-negative integer")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(CbStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(CbStatus::Invariant, "string holds a nul byte".into()))?;
    write(out, c.into_raw())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(CbStatus::NullPointer, "handle is null".into()))
}

/// Message of the last failure on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cb_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_from_graph6(text: *const c_char, out: *mut *mut CbGraph) -> CbStatus {
    guard(|| {
        let g = from_graph6(read_str(text, "graph6 text")?)?;
        write(out, Box::into_raw(Box::new(CbGraph(g))))
    })
}

/// Parses the edge-list format (`n <count>` then 1-based `u v` lines).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_from_edge_list(text: *const c_char, out: *mut *mut CbGraph) -> CbStatus {
    guard(|| {
        let g = from_edge_list(read_str(text, "edge list")?)?;
        write(out, Box::into_raw(Box::new(CbGraph(g))))
    })
}

/// Builds a graph attaining a bound: `which` is 1, 2 or 3.
///
/// # Safety
/// `m` must be a nul-terminated decimal string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_construct(
    m: *const c_char,
    k: u64,
    which: u8,
    out: *mut *mut CbGraph,
) -> CbStatus {
    guard(|| {
        let m = read_nat(m, "m")?;
        let c = construct(&m, k, Which::from_index(which)?)?;
        write(out, Box::into_raw(Box::new(CbGraph(c.graph))))
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_free(g: *mut CbGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_vertex_count(g: *const CbGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Number of `k`-cliques.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_clique_count(g: *const CbGraph, k: usize, out: *mut u64) -> CbStatus {
    guard(|| write(out, clique_count(&handle(g)?.0, k)))
}

/// graph6 encoding.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_to_graph6(g: *const CbGraph, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        let s = to_graph6(&handle(g)?.0)?;
        write_string(out, s)
    })
}

/// Edge-list encoding.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_to_edge_list(g: *const CbGraph, out: *mut *mut c_char) -> CbStatus {
    guard(|| write_string(out, to_edge_list(&handle(g)?.0)))
}

/// All bounds on `c_{k+1}` given `c_k = m`.
///
/// # Safety
/// `m` must be a nul-terminated decimal string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_bound_report_new(m: *const c_char, k: u64, out: *mut *mut CbBoundReport) -> CbStatus {
    guard(|| {
        let r = main_bound(&read_nat(m, "m")?, k)?;
        write(out, Box::into_raw(Box::new(CbBoundReport(r))))
    })
}

/// Releases a report. Null is ignored.
///
/// # Safety
/// `r` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cb_bound_report_free(r: *mut CbBoundReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Kruskal-Katona bound, as a decimal string.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_bound_report_oldbd(r: *const CbBoundReport, out: *mut *mut c_char) -> CbStatus {
    guard(|| write_string(out, handle(r)?.0.oldbd.to_string()))
}

/// Bound for graphs with the largest possible clique.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_bound_report_lgbd(r: *const CbBoundReport, out: *mut *mut c_char) -> CbStatus {
    guard(|| write_string(out, handle(r)?.0.lgbd.to_string()))
}

/// Bound for graphs without it. Writes null when it is undefined.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_bound_report_smbd(r: *const CbBoundReport, out: *mut *mut c_char) -> CbStatus {
    guard(|| match &handle(r)?.0.smbd {
        Some(v) => write_string(out, v.to_string()),
        None => write(out, ptr::null_mut()),
    })
}

/// The larger of the two.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_bound_report_main(r: *const CbBoundReport, out: *mut *mut c_char) -> CbStatus {
    guard(|| write_string(out, handle(r)?.0.main.to_string()))
}

/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_bound_report_winner(r: *const CbBoundReport, out: *mut CbWinner) -> CbStatus {
    guard(|| {
        let w = match handle(r)?.0.winner {
            Winner::Lgbd => CbWinner::Lgbd,
            Winner::Smbd => CbWinner::Smbd,
            Winner::Tie => CbWinner::Tie,
        };
        write(out, w)
    })
}

/// The whole report as JSON, integers as strings.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_bound_report_json(r: *const CbBoundReport, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        let s = serde_json::to_string(&handle(r)?.0).map_err(|e| Fail(CbStatus::Invariant, e.to_string()))?;
        write_string(out, s)
    })
}
