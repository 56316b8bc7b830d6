//! C ABI over `hyperind`.
//!
//! Hypergraphs and certificates are opaque heap handles owned by the caller
//! and released with their `_free` function. Every fallible call returns a
//! [`HiStatus`]; on failure [`hi_last_error_message`] describes the error for
//! the calling thread. Strings returned through out-parameters are owned by
//! the caller and released with [`hi_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hyperind::algorithms::{exact_alpha, greedy_extract, ExtractOptions, ExtractionCertificate};
use hyperind::bounds::{self, rational_string};
use hyperind::properties;
use hyperind::{Error, Hypergraph};
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidVertex = 3,
    Parse = 4,
    HypothesisViolated = 5,
    NonConvergent = 6,
    InteriorPole = 7,
    Io = 8,
    Panic = 99,
}

/// Opaque hypergraph handle.
pub struct HiHypergraph {
    inner: Hypergraph,
}

/// Opaque greedy-extraction certificate.
pub struct HiCertificate {
    inner: ExtractionCertificate,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(bytes).unwrap_or_default());
}

fn status_of(e: &Error) -> HiStatus {
    match e {
        Error::InvalidVertex { .. } | Error::IsolatedVertex(_) | Error::InvalidSlot(..) => HiStatus::InvalidVertex,
        Error::Parse { .. } => HiStatus::Parse,
        Error::HypothesisViolated(_) => HiStatus::HypothesisViolated,
        Error::NonConvergent { .. } => HiStatus::NonConvergent,
        Error::InteriorPole { .. } => HiStatus::InteriorPole,
        Error::Io(_) => HiStatus::Io,
        _ => HiStatus::InvalidArgument,
    }
}

/// Runs `f`, recording errors and turning panics into [`HiStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), (HiStatus, String)>) -> HiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            HiStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            HiStatus::Panic
        }
    }
}

fn lib<T>(r: hyperind::Result<T>) -> Result<T, (HiStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (HiStatus, String) {
    (HiStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (HiStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), (HiStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hi_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a hypergraph on `n` vertices from `m` edges in compressed form:
/// edge `i` is `vertices[offsets[i] .. offsets[i + 1]]`.
///
/// # Safety
/// `offsets` must hold `m + 1` entries and `vertices` at least `offsets[m]`
/// (either may be null when `m == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hi_hypergraph_new(
    n: usize,
    offsets: *const usize,
    vertices: *const usize,
    m: usize,
    out: *mut *mut HiHypergraph,
) -> HiStatus {
    guard(|| {
        let edges = if m == 0 {
            Vec::new()
        } else {
            if offsets.is_null() || vertices.is_null() {
                return Err(null("edge array"));
            }
            let offs = std::slice::from_raw_parts(offsets, m + 1);
            if offs.windows(2).any(|w| w[0] > w[1]) {
                return Err((HiStatus::InvalidArgument, "offsets must be non-decreasing".into()));
            }
            let verts = std::slice::from_raw_parts(vertices, offs[m]);
            offs.windows(2).map(|w| verts[w[0]..w[1]].to_vec()).collect()
        };
        let h = lib(Hypergraph::new(n, edges))?;
        put(out, Box::into_raw(Box::new(HiHypergraph { inner: h })), "out")
    })
}

/// Parses `.hg` text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hi_hypergraph_parse(text: *const c_char, out: *mut *mut HiHypergraph) -> HiStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (HiStatus::Parse, "input is not UTF-8".to_string()))?;
        let h = lib(hyperind::format::parse(s))?;
        put(out, Box::into_raw(Box::new(HiHypergraph { inner: h })), "out")
    })
}

/// # Safety
/// `h` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hi_hypergraph_free(h: *mut HiHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hi_hypergraph_order(h: *const HiHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.inner.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hi_hypergraph_size(h: *const HiHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.inner.size())
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hi_hypergraph_degree(h: *const HiHypergraph, v: usize, out: *mut usize) -> HiStatus {
    guard(|| {
        let h = deref(h, "hypergraph")?;
        put(out, lib(h.inner.degree(v))?, "out")
    })
}

/// `.hg` text of `h`, to be released with [`hi_string_free`].
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hi_hypergraph_write(h: *const HiHypergraph, out: *mut *mut c_char) -> HiStatus {
    guard(|| {
        let h = deref(h, "hypergraph")?;
        put(out, c_string(hyperind::format::write(&h.inner)), "out")
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hi_is_linear(h: *const HiHypergraph, out: *mut bool) -> HiStatus {
    guard(|| put(out, properties::is_linear(&deref(h, "hypergraph")?.inner), "out"))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hi_is_triangle_free(h: *const HiHypergraph, out: *mut bool) -> HiStatus {
    guard(|| put(out, properties::is_triangle_free(&deref(h, "hypergraph")?.inner), "out"))
}

/// [`HiStatus::HypothesisViolated`] when `h` is not r-uniform, linear and
/// triangle-free; the error message names the first failed predicate.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hi_check_hypotheses(h: *const HiHypergraph, r: usize) -> HiStatus {
    guard(|| lib(properties::check_hypotheses(&deref(h, "hypergraph")?.inner, r)))
}

/// `f_r(d)` as a double; `text` (nullable) receives the exact value as `p/q`.
///
/// # Safety
/// `out` must be writable; `text` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn hi_fr(r: usize, d: usize, out: *mut f64, text: *mut *mut c_char) -> HiStatus {
    guard(|| {
        let q = lib(bounds::fr(r, d))?;
        put(out, q.to_f64().unwrap_or(f64::NAN), "out")?;
        if !text.is_null() {
            text.write(c_string(rational_string(&q)));
        }
        Ok(())
    })
}

/// # Safety
/// `value` must be writable; `error` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn hi_li_zang(r: usize, m: u32, x: f64, tol: f64, value: *mut f64, error: *mut f64) -> HiStatus {
    guard(|| {
        let e = lib(bounds::li_zang(r, m, x, tol))?;
        put(value, e.value, "value")?;
        if !error.is_null() {
            error.write(e.error);
        }
        Ok(())
    })
}

/// # Safety
/// `value` must be writable; `error` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn hi_chishti(r: usize, x: f64, tol: f64, value: *mut f64, error: *mut f64) -> HiStatus {
    guard(|| {
        let e = lib(bounds::chishti(r, x, tol))?;
        put(value, e.value, "value")?;
        if !error.is_null() {
            error.write(e.error);
        }
        Ok(())
    })
}

/// `Σ_u f_r(d(u))`; `text` (nullable) receives the exact value as `p/q`.
///
/// # Safety
/// `h` must be a live handle, `out` writable, `text` null or writable.
#[no_mangle]
pub unsafe extern "C" fn hi_theorem1_rhs(h: *const HiHypergraph, r: usize, out: *mut f64, text: *mut *mut c_char) -> HiStatus {
    guard(|| {
        let q = lib(bounds::theorem1_rhs(&deref(h, "hypergraph")?.inner, r))?;
        put(out, q.to_f64().unwrap_or(f64::NAN), "out")?;
        if !text.is_null() {
            text.write(c_string(rational_string(&q)));
        }
        Ok(())
    })
}

/// Greedy extraction. Without `allow_violations`, inputs failing the
/// hypotheses are refused with [`HiStatus::HypothesisViolated`].
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hi_greedy_extract(
    h: *const HiHypergraph,
    r: usize,
    allow_violations: bool,
    out: *mut *mut HiCertificate,
) -> HiStatus {
    guard(|| {
        let h = deref(h, "hypergraph")?;
        let opts = ExtractOptions { allow_violations, cross_check: false };
        let cert = lib(greedy_extract(&h.inner, r, opts))?;
        put(out, Box::into_raw(Box::new(HiCertificate { inner: cert })), "out")
    })
}

/// # Safety
/// `c` must be null or a certificate from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hi_certificate_free(c: *mut HiCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Size of the independent set, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live certificate.
#[no_mangle]
pub unsafe extern "C" fn hi_certificate_size(c: *const HiCertificate) -> usize {
    c.as_ref().map_or(0, |c| c.inner.size())
}

/// # Safety
/// `c` must be null or a live certificate.
#[no_mangle]
pub unsafe extern "C" fn hi_certificate_guaranteed(c: *const HiCertificate) -> bool {
    c.as_ref().is_some_and(|c| c.inner.guaranteed)
}

/// Copies up to `cap` vertices of the set into `buf` and returns the full size.
///
/// # Safety
/// `c` must be null or a live certificate; `buf` must hold `cap` entries
/// (or be null when `cap == 0`).
#[no_mangle]
pub unsafe extern "C" fn hi_certificate_vertices(c: *const HiCertificate, buf: *mut usize, cap: usize) -> usize {
    let Some(c) = c.as_ref() else {
        return 0;
    };
    let set = &c.inner.independent_set;
    if !buf.is_null() {
        let k = cap.min(set.len());
        ptr::copy_nonoverlapping(set.as_ptr(), buf, k);
    }
    set.len()
}

/// Certificate as JSON, to be released with [`hi_string_free`].
///
/// # Safety
/// `c` must be a live certificate and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hi_certificate_json(c: *const HiCertificate, out: *mut *mut c_char) -> HiStatus {
    guard(|| {
        let c = deref(c, "certificate")?;
        put(out, c_string(c.inner.to_json()), "out")
    })
}

/// Independence number by branch and bound within `budget` nodes; `exact`
/// is false when the budget ran out and `alpha` is only a lower bound.
///
/// # Safety
/// `h` must be a live handle; `alpha` and `exact` writable.
#[no_mangle]
pub unsafe extern "C" fn hi_exact_alpha(h: *const HiHypergraph, budget: u64, alpha: *mut usize, exact: *mut bool) -> HiStatus {
    guard(|| {
        let res = exact_alpha(&deref(h, "hypergraph")?.inner, budget);
        put(alpha, res.alpha, "alpha")?;
        put(exact, res.exact, "exact")
    })
}
