//! C interface. Graphs and polynomials are opaque handles owned by the
//! caller; every fallible call returns a [`RamStatus`] and leaves a message
//! for [`ram_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use ramanujan::search::{certify_ramanujan, find_good_signing};
use ramanujan::matching::matching_polynomial;
use ramanujan::poly::char_poly;
use ramanujan::{Error, Graph, IntPoly, Signing, Verdict};

/// Graph handle.
pub struct RamGraph(Graph);

/// Integer polynomial handle.
pub struct RamPoly(IntPoly);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RamStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    NotRealRooted = 4,
    BudgetExceeded = 5,
    Unsupported = 6,
    CertificationFailed = 7,
    Io = 8,
    Overflow = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RamVerdict {
    AllBelow = 0,
    Touches = 1,
    Exceeds = 2,
}

impl From<Verdict> for RamVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::AllBelow => RamVerdict::AllBelow,
            Verdict::Touches => RamVerdict::Touches,
            Verdict::Exceeds => RamVerdict::Exceeds,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> RamStatus {
    match e {
        Error::Parse { .. } => RamStatus::Parse,
        Error::NotRealRooted => RamStatus::NotRealRooted,
        Error::BudgetExceeded(_) => RamStatus::BudgetExceeded,
        Error::Unsupported(_) => RamStatus::Unsupported,
        Error::CertificationFailed(_) => RamStatus::CertificationFailed,
        Error::Io(_) => RamStatus::Io,
        _ => RamStatus::InvalidArgument,
    }
}

struct Fail(RamStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(RamStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, turning errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> RamStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            RamStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RamStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const RamGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message for the last failed call on this thread, or NULL after a
/// success. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ram_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ram_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Graph on `n` vertices with `m` edges, `edges` holding `2m` endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be NULL when `m = 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ram_graph_new(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut RamGraph,
) -> RamStatus {
    guard(|| {
        let flat: &[usize] = match (edges.is_null(), m) {
            (_, 0) => &[],
            (true, _) => return Err(null("edges")),
            (false, _) => std::slice::from_raw_parts(edges, 2 * m),
        };
        let g = Graph::new(n, flat.chunks(2).map(|e| (e[0], e[1])))?;
        put(out, Box::into_raw(Box::new(RamGraph(g))))
    })
}

/// Parses edge-list text (`n m` then one `u v` line per edge).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ram_graph_parse(text: *const c_char, out: *mut *mut RamGraph) -> RamStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Fail(RamStatus::InvalidArgument, e.to_string()))?;
        let g = Graph::parse_edge_list(text)?;
        put(out, Box::into_raw(Box::new(RamGraph(g))))
    })
}

/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ram_graph_free(g: *mut RamGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle or NULL (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn ram_graph_vertex_count(g: *const RamGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be a live graph handle or NULL (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn ram_graph_edge_count(g: *const RamGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Edge-list text, freed with [`ram_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ram_graph_to_edge_list(g: *const RamGraph, out: *mut *mut c_char) -> RamStatus {
    guard(|| {
        let g = graph_ref(g)?;
        put(out, to_c_string(g.to_edge_list()))
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ram_matching_polynomial(g: *const RamGraph, out: *mut *mut RamPoly) -> RamStatus {
    guard(|| {
        let mu = matching_polynomial(graph_ref(g)?);
        put(out, Box::into_raw(Box::new(RamPoly(mu))))
    })
}

/// Characteristic polynomial of the adjacency matrix.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ram_char_poly(g: *const RamGraph, out: *mut *mut RamPoly) -> RamStatus {
    guard(|| {
        let f = char_poly(&graph_ref(g)?.adjacency())?;
        put(out, Box::into_raw(Box::new(RamPoly(f))))
    })
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ram_poly_free(p: *mut RamPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree, or -1 for the zero polynomial or a NULL handle.
///
/// # Safety
/// `p` must be a live polynomial handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ram_poly_degree(p: *const RamPoly) -> isize {
    p.as_ref()
        .and_then(|p| p.0.degree())
        .map_or(-1, |d| d as isize)
}

/// Coefficient of `x^i`; zero past the degree.
///
/// # Safety
/// `p` must be a live polynomial handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ram_poly_coeff_i64(p: *const RamPoly, i: usize, out: *mut i64) -> RamStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("polynomial"))?;
        let c = match p.0.coeffs().get(i) {
            None => 0,
            Some(c) => c
                .to_i64()
                .ok_or_else(|| Fail(RamStatus::Overflow, format!("coefficient {c} does not fit in 64 bits")))?,
        };
        put(out, c)
    })
}

/// Ascending coefficients separated by spaces, freed with
/// [`ram_string_free`].
///
/// # Safety
/// `p` must be a live polynomial handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ram_poly_to_text(p: *const RamPoly, out: *mut *mut c_char) -> RamStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("polynomial"))?;
        put(out, to_c_string(p.0.to_text()))
    })
}

/// Greedy signing whose new eigenvalues stay below the largest matching
/// root. Writes one sign per edge into `signs` (capacity `len`, at least the
/// edge count) and, when `certificate` is non-NULL, the JSON certificate.
///
/// # Safety
/// `g` must be a live graph handle; `signs` must have `len` writable
/// entries; `certificate` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ram_find_good_signing(
    g: *const RamGraph,
    signs: *mut i8,
    len: usize,
    certificate: *mut *mut c_char,
) -> RamStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if signs.is_null() && g.edge_count() > 0 {
            return Err(null("signs"));
        }
        if len < g.edge_count() {
            return Err(Error::LengthMismatch {
                expected: g.edge_count(),
                actual: len,
            }
            .into());
        }
        let (s, cert) = find_good_signing(g)?;
        if g.edge_count() > 0 {
            std::slice::from_raw_parts_mut(signs, s.len()).copy_from_slice(s.signs());
        }
        if !certificate.is_null() {
            certificate.write(to_c_string(cert.to_json()));
        }
        Ok(())
    })
}

/// 2-lift of `g` by the signing `signs` (one ±1 per edge).
///
/// # Safety
/// `g` must be a live graph handle; `signs` must have `len` readable
/// entries; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ram_two_lift(
    g: *const RamGraph,
    signs: *const i8,
    len: usize,
    out: *mut *mut RamGraph,
) -> RamStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let signs = match (signs.is_null(), len) {
            (_, 0) => Vec::new(),
            (true, _) => return Err(null("signs")),
            (false, _) => std::slice::from_raw_parts(signs, len).to_vec(),
        };
        let lift = g.two_lift(&Signing::new(signs)?)?;
        put(out, Box::into_raw(Box::new(RamGraph(lift))))
    })
}

/// Certifies a regular or biregular graph against its Ramanujan bound.
/// `json` receives the certificate and `verdict` its outcome; either may be
/// NULL.
///
/// # Safety
/// `g` must be a live graph handle; the outputs must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ram_certify(
    g: *const RamGraph,
    json: *mut *mut c_char,
    verdict: *mut RamVerdict,
) -> RamStatus {
    guard(|| {
        let cert = certify_ramanujan(graph_ref(g)?)?;
        if !verdict.is_null() {
            verdict.write(cert.verdict.into());
        }
        if !json.is_null() {
            json.write(to_c_string(cert.to_json()));
        }
        Ok(())
    })
}
