use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use perflab_ffi::*;

fn graph(g6: &str) -> *mut PlGraph {
    let text = CString::new(g6).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { pl_graph_from_graph6(text.as_ptr(), &mut g) },
        PlStatus::Ok
    );
    assert!(!g.is_null());
    g
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { pl_string_free(s) };
    owned
}

fn last_error() -> String {
    let p = pl_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn c5_round_trip_and_invariants() {
    let g = graph("Dhc");
    unsafe {
        assert_eq!(pl_graph_order(g), 5);
        let mut s = ptr::null_mut();
        assert_eq!(pl_graph_to_graph6(g, &mut s), PlStatus::Ok);
        assert_eq!(take_string(s), "Dhc");

        let (mut omega, mut chi) = (0, 0);
        assert_eq!(pl_clique_number(g, &mut omega), PlStatus::Ok);
        assert_eq!(pl_chromatic_number(g, &mut chi), PlStatus::Ok);
        assert_eq!((omega, chi), (2, 3));

        let mut perfect = true;
        assert_eq!(pl_is_perfect(g, &mut perfect), PlStatus::Ok);
        assert!(!perfect);

        let mut edge = false;
        assert_eq!(pl_graph_has_edge(g, 0, 1, &mut edge), PlStatus::Ok);
        assert!(edge);
        assert_eq!(
            pl_graph_has_edge(g, 0, 9, &mut edge),
            PlStatus::InvalidArgument
        );
        pl_graph_free(g);
    }
}

#[test]
fn class_checks_with_certificates() {
    let g = graph("Dhc");
    let expected = [
        (PlClass::Perfect, false),
        (PlClass::TwoPerfect, true),
        (PlClass::PerfectlyDivisible, true),
        (PlClass::Nice, true),
        (PlClass::StablePerfect, true),
        (PlClass::TwoDivisible, false),
    ];
    for (class, want) in expected {
        let mut holds = !want;
        let mut json = ptr::null_mut();
        assert_eq!(
            unsafe { pl_check_class(g, class, &mut holds, &mut json) },
            PlStatus::Ok
        );
        assert_eq!(holds, want, "{class:?}");
        let v: perflab::ClassVerdict = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v.holds, want);
        let cg = perflab::format::parse_graph6("Dhc").unwrap();
        perflab::certificate::validate(&cg, &v).unwrap();
    }
    let mut holds = false;
    assert_eq!(
        unsafe { pl_check_class(g, PlClass::Nice, &mut holds, ptr::null_mut()) },
        PlStatus::Ok
    );
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { pl_classify_json(g, &mut json) }, PlStatus::Ok);
    let c: perflab::classes::Classification = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(c.verdicts.len(), 6);
    unsafe { pl_graph_free(g) };
}

#[test]
fn edges_constructor() {
    let edges: [usize; 8] = [0, 1, 1, 2, 2, 3, 3, 0];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            pl_graph_from_edges(4, edges.as_ptr(), 4, &mut g),
            PlStatus::Ok
        );
        let mut perfect = false;
        assert_eq!(pl_is_perfect(g, &mut perfect), PlStatus::Ok);
        assert!(perfect);
        pl_graph_free(g);

        let mut h = ptr::null_mut();
        assert_eq!(pl_graph_from_edges(3, ptr::null(), 0, &mut h), PlStatus::Ok);
        assert_eq!(pl_graph_order(h), 3);
        pl_graph_free(h);

        let bad: [usize; 2] = [0, 7];
        let mut k = ptr::null_mut();
        assert_eq!(
            pl_graph_from_edges(3, bad.as_ptr(), 1, &mut k),
            PlStatus::ParseError
        );
        assert!(k.is_null());
    }
}

#[test]
fn error_codes_and_messages() {
    let mut g = ptr::null_mut();
    let bad = CString::new("D~~~~").unwrap();
    assert_eq!(
        unsafe { pl_graph_from_graph6(bad.as_ptr(), &mut g) },
        PlStatus::ParseError
    );
    assert!(!last_error().is_empty());

    assert_eq!(
        unsafe { pl_graph_from_graph6(ptr::null(), &mut g) },
        PlStatus::NullPointer
    );
    assert!(last_error().contains("null"));

    let mut n = 0;
    assert_eq!(
        unsafe { pl_clique_number(ptr::null(), &mut n) },
        PlStatus::NullPointer
    );

    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { pl_graph_from_graph6(invalid.as_ptr().cast(), &mut g) },
        PlStatus::InvalidUtf8
    );

    // 13 vertices is past the perfectly-divisible cap
    let edges: Vec<usize> = (0..13).flat_map(|i| [i, (i + 1) % 13]).collect();
    let mut big = ptr::null_mut();
    unsafe {
        assert_eq!(
            pl_graph_from_edges(13, edges.as_ptr(), 13, &mut big),
            PlStatus::Ok
        );
        let mut holds = false;
        assert_eq!(
            pl_check_class(
                big,
                PlClass::PerfectlyDivisible,
                &mut holds,
                ptr::null_mut()
            ),
            PlStatus::SizeLimit
        );
        assert!(last_error().contains("12"));
        // a successful call clears the message
        assert_eq!(pl_is_perfect(big, &mut holds), PlStatus::Ok);
        assert!(pl_last_error_message().is_null());
        pl_graph_free(big);
        pl_graph_free(ptr::null_mut());
        pl_string_free(ptr::null_mut());
    }
}

#[test]
fn suite_runner() {
    let name = CString::new("lemma6").unwrap();
    let mut json = ptr::null_mut();
    let mut passed = false;
    assert_eq!(
        unsafe { pl_run_suite_json(name.as_ptr(), 6, 1, &mut json, &mut passed) },
        PlStatus::Ok
    );
    assert!(passed);
    let r: perflab::verifier::SuiteResult = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(r.universe.n_max, 6);
    assert!(r.graphs_tested > 0);

    let unknown = CString::new("lemma99").unwrap();
    assert_eq!(
        unsafe { pl_run_suite_json(unknown.as_ptr(), 6, 1, &mut json, &mut passed) },
        PlStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { pl_run_suite_json(name.as_ptr(), 11, 1, &mut json, &mut passed) },
        PlStatus::SizeLimit
    );
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(pl_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/perflab.h")
}

#[test]
fn header_declares_every_export() {
    let text = std::fs::read_to_string(header()).unwrap();
    for name in [
        "typedef struct PlGraph PlGraph",
        "PL_STATUS_OK = 0",
        "PL_STATUS_PARSE_ERROR = 2",
        "PL_STATUS_SIZE_LIMIT = 3",
        "PL_STATUS_INVALID_ARGUMENT = 4",
        "PL_CLASS_TWO_DIVISIBLE = 5",
        "pl_graph_from_graph6",
        "pl_graph_from_edges",
        "pl_graph_free",
        "pl_graph_order",
        "pl_graph_has_edge",
        "pl_graph_to_graph6",
        "pl_string_free",
        "pl_is_perfect",
        "pl_check_class",
        "pl_classify_json",
        "pl_clique_number",
        "pl_chromatic_number",
        "pl_run_suite_json",
        "pl_last_error_message",
        "pl_version",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "perflab.h"

int main(void) {
    PlGraph *g = NULL;
    if (pl_graph_from_graph6("IheA@GUAo", &g) != PL_STATUS_OK) return 10;
    size_t chi = 0, omega = 0;
    bool perfect = true, nice = true;
    if (pl_chromatic_number(g, &chi) != PL_STATUS_OK) return 11;
    if (pl_clique_number(g, &omega) != PL_STATUS_OK) return 12;
    if (pl_is_perfect(g, &perfect) != PL_STATUS_OK) return 13;
    if (pl_check_class(g, PL_CLASS_NICE, &nice, NULL) != PL_STATUS_OK) return 14;
    char *g6 = NULL;
    if (pl_graph_to_graph6(g, &g6) != PL_STATUS_OK) return 15;
    printf("%s %zu %zu %d %d\n", g6, chi, omega, perfect, nice);
    pl_string_free(g6);
    pl_graph_free(g);
    PlGraph *bad = NULL;
    if (pl_graph_from_graph6("?~", &bad) != PL_STATUS_PARSE_ERROR) return 16;
    if (pl_last_error_message() == NULL) return 17;
    return 0;
}
"#;

// Compiles a C client against the generated header and the shared library
// cargo built next to this test binary.
#[test]
fn c_client_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().unwrap().parent().unwrap().to_path_buf();
    assert!(
        lib_dir.join("libperflab_ffi.so").exists(),
        "no shared library in {}",
        lib_dir.display()
    );
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    let bin = dir.path().join("client");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg("-L")
        .arg(&lib_dir)
        .arg(format!("-Wl,-rpath,{}", lib_dir.display()))
        .arg("-lperflab_ffi")
        .arg("-o")
        .arg(&bin)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "client exited with {:?}", out.status);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "IheA@GUAo 3 2 0 1\n"
    );
}
