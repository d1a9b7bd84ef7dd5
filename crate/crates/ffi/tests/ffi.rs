use std::ffi::{CStr, CString};
use std::path::Path;
use std::ptr;

use ramanujan::search::Certificate;
use ramanujan::Graph;
use ramanujan_ffi::*;

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    ram_string_free(s);
    out
}

unsafe fn k33() -> *mut RamGraph {
    let edges: Vec<usize> = (0..3).flat_map(|u| (3..6).flat_map(move |v| [u, v])).collect();
    let mut g = ptr::null_mut();
    assert_eq!(ram_graph_new(6, edges.as_ptr(), 9, &mut g), RamStatus::Ok);
    g
}

#[test]
fn graph_round_trip() {
    unsafe {
        let g = k33();
        assert_eq!(ram_graph_vertex_count(g), 6);
        assert_eq!(ram_graph_edge_count(g), 9);
        let mut text = ptr::null_mut();
        assert_eq!(ram_graph_to_edge_list(g, &mut text), RamStatus::Ok);
        let text = take_string(text);
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), Graph::complete_bipartite(3, 3).unwrap());

        let c = CString::new(text).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(ram_graph_parse(c.as_ptr(), &mut h), RamStatus::Ok);
        assert_eq!(ram_graph_edge_count(h), 9);
        ram_graph_free(h);
        ram_graph_free(g);
    }
}

#[test]
fn polynomials() {
    unsafe {
        let g = k33();
        let mut mu = ptr::null_mut();
        assert_eq!(ram_matching_polynomial(g, &mut mu), RamStatus::Ok);
        assert_eq!(ram_poly_degree(mu), 6);
        // x^6 - 9x^4 + 18x^2 - 6
        let want = [-6, 0, 18, 0, -9, 0, 1, 0];
        for (i, w) in want.iter().enumerate() {
            let mut c = 0;
            assert_eq!(ram_poly_coeff_i64(mu, i, &mut c), RamStatus::Ok);
            assert_eq!(c, *w, "coefficient {i}");
        }
        let mut chi = ptr::null_mut();
        assert_eq!(ram_char_poly(g, &mut chi), RamStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(ram_poly_to_text(chi, &mut text), RamStatus::Ok);
        // x^4 (x^2 - 9)
        assert_eq!(take_string(text), "0 0 0 0 -9 0 1");
        ram_poly_free(chi);
        ram_poly_free(mu);
        ram_graph_free(g);
    }
}

#[test]
fn signing_lift_certify() {
    unsafe {
        let g = k33();
        let mut signs = [0i8; 9];
        let mut json = ptr::null_mut();
        assert_eq!(ram_find_good_signing(g, signs.as_mut_ptr(), 9, &mut json), RamStatus::Ok);
        assert!(signs.iter().all(|s| s.abs() == 1));
        let cert = Certificate::from_json(&take_string(json)).unwrap();
        assert!(cert.headline_verdict().is_within());

        let mut lift = ptr::null_mut();
        assert_eq!(ram_two_lift(g, signs.as_ptr(), 9, &mut lift), RamStatus::Ok);
        assert_eq!(ram_graph_vertex_count(lift), 12);
        let mut verdict = RamVerdict::Exceeds;
        let mut json = ptr::null_mut();
        assert_eq!(ram_certify(lift, &mut json, &mut verdict), RamStatus::Ok);
        assert_eq!(verdict, RamVerdict::AllBelow);
        assert!(take_string(json).contains("\"verdict\""));
        ram_graph_free(lift);
        ram_graph_free(g);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(ram_graph_parse(ptr::null(), &mut g), RamStatus::NullPointer);
        let bad = CString::new("3 2\n0 1\n1 x\n").unwrap();
        assert_eq!(ram_graph_parse(bad.as_ptr(), &mut g), RamStatus::Parse);
        let msg = CStr::from_ptr(ram_last_error()).to_str().unwrap();
        assert!(msg.contains("line 3"), "{msg}");
        assert!(g.is_null());

        let loop_edge = [1usize, 1];
        assert_eq!(ram_graph_new(2, loop_edge.as_ptr(), 1, &mut g), RamStatus::InvalidArgument);

        // path on four vertices: bipartite but not biregular
        let p4 = [0usize, 1, 1, 2, 2, 3];
        assert_eq!(ram_graph_new(4, p4.as_ptr(), 3, &mut g), RamStatus::Ok);
        assert!(ram_last_error().is_null());
        let mut signs = [0i8; 1];
        assert_eq!(
            ram_find_good_signing(g, signs.as_mut_ptr(), 1, ptr::null_mut()),
            RamStatus::InvalidArgument
        );
        let wrong = [2i8, 1];
        let mut lift = ptr::null_mut();
        assert_eq!(ram_two_lift(g, wrong.as_ptr(), 2, &mut lift), RamStatus::InvalidArgument);
        let mut verdict = RamVerdict::AllBelow;
        assert_eq!(ram_certify(g, ptr::null_mut(), &mut verdict), RamStatus::Unsupported);
        assert_eq!(ram_certify(ptr::null(), ptr::null_mut(), &mut verdict), RamStatus::NullPointer);
        ram_graph_free(g);
        ram_graph_free(ptr::null_mut());
        ram_poly_free(ptr::null_mut());
        ram_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/ramanujan.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["ram_graph_new", "ram_certify", "ram_find_good_signing", "typedef struct RamGraph RamGraph"] {
        assert!(text.contains(f), "header lacks {f}");
    }
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let status = std::process::Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg(&header)
            .status()
            .expect("a C compiler is on PATH");
        assert!(status.success(), "{compiler} rejects the header");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let deps = std::env::current_exe().unwrap();
    let lib_dir = deps.parent().unwrap().parent().unwrap();
    let lib = lib_dir.join("libramanujan_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "ramanujan.h"
int main(void) {
    size_t edges[] = {0, 3, 0, 4, 1, 3, 1, 4, 2, 3, 2, 4};
    RamGraph *g = NULL;
    if (ram_graph_new(5, edges, 6, &g) != RAM_STATUS_OK) return 10;
    RamPoly *mu = NULL;
    if (ram_matching_polynomial(g, &mu) != RAM_STATUS_OK) return 11;
    int64_t c = 0;
    ram_poly_coeff_i64(mu, 1, &c);
    RamVerdict v;
    if (ram_certify(g, NULL, &v) != RAM_STATUS_OK) return 12;
    printf("%d %lld %d\n", (int)ram_poly_degree(mu), (long long)c, (int)v);
    ram_poly_free(mu);
    ram_graph_free(g);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("main");
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = std::process::Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = std::process::Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{:?}", out.status);
    // K_{2,3}: mu = x^5 - 6x^3 + 6x, bound 1 + sqrt 2 is met by sqrt 6
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "5 6 0");
}
