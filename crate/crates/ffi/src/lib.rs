//! C ABI over `perflab`.
//!
//! Graphs are passed as opaque `PlGraph` handles. Every fallible call returns
//! a `PlStatus` and writes its result through an out-pointer; on failure a
//! description is available from `pl_last_error_message` on the same thread.
//! Strings returned by the library are owned by the caller and released with
//! `pl_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use perflab::classes::{check_class, classify_all};
use perflab::format::{parse_graph6, write_graph6};
use perflab::invariants::{chromatic_number, clique_number};
use perflab::perfection::is_perfect;
use perflab::verifier::{run_suite_with, RunOptions, SuiteId, SuiteSpec};
use perflab::{Class, Error, Graph};

/// Opaque graph handle.
pub struct PlGraph {
    graph: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlStatus {
    Ok = 0,
    ParseError = 2,
    SizeLimit = 3,
    InvalidArgument = 4,
    Internal = 5,
    NullPointer = 6,
    InvalidUtf8 = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlClass {
    Perfect = 0,
    TwoPerfect = 1,
    PerfectlyDivisible = 2,
    Nice = 3,
    StablePerfect = 4,
    TwoDivisible = 5,
}

impl From<PlClass> for Class {
    fn from(c: PlClass) -> Class {
        match c {
            PlClass::Perfect => Class::Perfect,
            PlClass::TwoPerfect => Class::TwoPerfect,
            PlClass::PerfectlyDivisible => Class::PerfectlyDivisible,
            PlClass::Nice => Class::Nice,
            PlClass::StablePerfect => Class::StablePerfect,
            PlClass::TwoDivisible => Class::TwoDivisible,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    Utf8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn status_of(e: &Error) -> PlStatus {
    match e {
        Error::Parse { .. } | Error::InvalidEdge { .. } | Error::SelfLoop(_) => {
            PlStatus::ParseError
        }
        Error::SizeLimit { .. } | Error::TooManyVertices { .. } => PlStatus::SizeLimit,
        Error::InvalidArgument(_) | Error::Io(_) => PlStatus::InvalidArgument,
        Error::Internal(_) => PlStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PlStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("{what} is null"));
            PlStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_error("string argument is not valid UTF-8".into());
            PlStatus::InvalidUtf8
        }
        Err(_) => {
            set_error("panic inside perflab".into());
            PlStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const PlGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.graph).ok_or(Failure::Null("graph"))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or(Failure::Null(what))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure::Utf8)
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure::Lib(Error::Internal("output contains a nul byte".into())))
}

fn boxed(graph: Graph) -> *mut PlGraph {
    Box::into_raw(Box::new(PlGraph { graph }))
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn pl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a graph6 string into a new handle.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut PlGraph,
) -> PlStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let g = parse_graph6(str_arg(text, "text")?.trim())?;
        *out = boxed(g);
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (u0, v0, u1, v1, ...). `edges` may be NULL when `edge_count` is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut PlGraph,
) -> PlStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(Failure::Null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        *out = boxed(Graph::from_edge_list(n, &pairs)?);
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_free(g: *mut PlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Releases a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of vertices; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_order(g: *const PlGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.order())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_has_edge(
    g: *const PlGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> PlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out_ref(out, "out")?;
        if u >= g.order() || v >= g.order() {
            return Err(
                Error::InvalidArgument(format!("vertex out of range 0..{}", g.order())).into(),
            );
        }
        *out = g.has_edge(u, v);
        Ok(())
    })
}

/// graph6 encoding of `g`, freed with `pl_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_to_graph6(g: *const PlGraph, out: *mut *mut c_char) -> PlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out_ref(out, "out")?;
        *out = into_c_string(write_graph6(g))?;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_clique_number(g: *const PlGraph, out: *mut usize) -> PlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_ref(out, "out")? = clique_number(g, g.vertices());
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_chromatic_number(g: *const PlGraph, out: *mut usize) -> PlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_ref(out, "out")? = chromatic_number(g, g.vertices());
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_is_perfect(g: *const PlGraph, out: *mut bool) -> PlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_ref(out, "out")? = is_perfect(g).holds;
        Ok(())
    })
}

/// Membership of `g` in `class`. `certificate_json` may be NULL; otherwise it
/// receives the full verdict as JSON, freed with `pl_string_free`.
///
/// # Safety
/// `g` must be a live handle; `holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_check_class(
    g: *const PlGraph,
    class: PlClass,
    holds: *mut bool,
    certificate_json: *mut *mut c_char,
) -> PlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let holds = out_ref(holds, "holds")?;
        let verdict = check_class(g, class.into())?;
        if let Some(out) = certificate_json.as_mut() {
            *out = into_c_string(to_json(&verdict)?)?;
        }
        *holds = verdict.holds;
        Ok(())
    })
}

/// Verdicts for all six classes as one JSON object.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_classify_json(g: *const PlGraph, out: *mut *mut c_char) -> PlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out_ref(out, "out")?;
        *out = into_c_string(to_json(&classify_all(g)?)?)?;
        Ok(())
    })
}

/// Runs a verification suite (named as on the command line, e.g. "lemma6")
/// over the built-in enumeration. `n_max` 0 selects the suite default and
/// `threads` 0 uses every core. `passed` follows the suite's pass rule.
///
/// # Safety
/// `suite` must be NUL-terminated; out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_run_suite_json(
    suite: *const c_char,
    n_max: usize,
    threads: usize,
    report_json: *mut *mut c_char,
    passed: *mut bool,
) -> PlStatus {
    guard(|| {
        let id: SuiteId = str_arg(suite, "suite")?.parse()?;
        let report_json = out_ref(report_json, "report_json")?;
        let passed = out_ref(passed, "passed")?;
        let spec = SuiteSpec::new(
            id,
            if n_max == 0 {
                id.default_n_max()
            } else {
                n_max
            },
        );
        let opts = RunOptions {
            threads: (threads > 0).then_some(threads),
            keep_verdicts: false,
        };
        let result = run_suite_with(&spec, &opts)?;
        *report_json = into_c_string(to_json(&result)?)?;
        *passed = result.passed();
        Ok(())
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure::Lib(Error::Internal(e.to_string())))
}
