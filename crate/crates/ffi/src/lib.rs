//! C interface to `link_homology`.
//!
//! Handles are opaque and owned by the caller once returned; each has a
//! matching `_free`. Every fallible call returns an [`LhStatus`]; on failure
//! a message for the current thread is available from
//! [`lh_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use link_homology::catalog::{emit_report_as, parse_catalog, scan, ScanOptions};
use link_homology::oracle::compare_with_algorithm;
use link_homology::weights::{bp_exponents, fano_degree, find_chain_orderings};
use link_homology::{
    homology_summary, link_descriptor, validate_weights, Error, HomologyResult, LinkDescriptor,
    PolynomialForm,
};
use num_traits::ToPrimitive;

/// Status codes. The first five agree with the `linkhom` exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LhStatus {
    Ok = 0,
    InvalidInput = 1,
    NotFound = 2,
    ConventionViolation = 3,
    Mismatch = 4,
    NullPointer = 5,
    /// A value does not fit the output type or buffer.
    Overflow = 6,
    Panic = 7,
}

/// A validated weight vector with its degree.
pub struct LhLink {
    link: LinkDescriptor,
    chain: OnceLock<Vec<PolynomialForm>>,
}

impl LhLink {
    fn chain_forms(&self) -> &[PolynomialForm] {
        self.chain
            .get_or_init(|| find_chain_orderings(self.link.weights(), self.link.degree()))
    }
}

/// Betti number and torsion of a link.
pub struct LhHomology {
    result: HomologyResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: LhStatus, msg: impl Into<String>) -> LhStatus {
    set_error(msg);
    status
}

fn from_error(e: &Error) -> LhStatus {
    let status = if e.is_convention_violation() {
        LhStatus::ConventionViolation
    } else {
        LhStatus::InvalidInput
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> LhStatus) -> LhStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(LhStatus::Panic, "internal panic"))
}

macro_rules! nonnull {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(LhStatus::NullPointer, concat!("`", stringify!($p), "` is null"));
        })+
    };
}

unsafe fn slice<'a, T>(data: *const T, len: usize) -> &'a [T] {
    if len == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(data, len)
    }
}

/// Copies `values` into a caller buffer of `cap` elements, storing the full
/// length in `out_len` either way.
unsafe fn write_out<T: Copy>(values: &[T], out: *mut T, cap: usize, out_len: *mut usize) -> LhStatus {
    *out_len = values.len();
    if values.len() > cap {
        return fail(
            LhStatus::Overflow,
            format!("buffer holds {cap} values, need {}", values.len()),
        );
    }
    if !values.is_empty() {
        ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    }
    LhStatus::Ok
}

unsafe fn new_link(weights: *const i64, len: usize, degree: Option<u64>, out: *mut *mut LhLink) -> LhStatus {
    let result = validate_weights(slice(weights, len)).and_then(|w| {
        let d = degree.unwrap_or_else(|| fano_degree(&w));
        link_descriptor(&w, d)
    });
    match result {
        Ok(link) => {
            *out = Box::into_raw(Box::new(LhLink {
                link,
                chain: OnceLock::new(),
            }));
            LhStatus::Ok
        }
        Err(e) => from_error(&e),
    }
}

/// Builds a link from `len` weights and a degree.
///
/// # Safety
/// `weights` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_link_new(
    weights: *const i64,
    len: usize,
    degree: u64,
    out: *mut *mut LhLink,
) -> LhStatus {
    guard(|| {
        nonnull!(weights, out);
        new_link(weights, len, Some(degree), out)
    })
}

/// Builds a link with the Fano degree `Σ w_i − 1`.
///
/// # Safety
/// Same as [`lh_link_new`].
#[no_mangle]
pub unsafe extern "C" fn lh_link_new_fano(
    weights: *const i64,
    len: usize,
    out: *mut *mut LhLink,
) -> LhStatus {
    guard(|| {
        nonnull!(weights, out);
        new_link(weights, len, None, out)
    })
}

/// # Safety
/// `link` must come from `lh_link_new*` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn lh_link_free(link: *mut LhLink) {
    if !link.is_null() {
        drop(Box::from_raw(link));
    }
}

/// # Safety
/// `link` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_link_degree(link: *const LhLink) -> u64 {
    link.as_ref().map_or(0, |l| l.link.degree())
}

/// Computes the full homology summary.
///
/// # Safety
/// `link` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_link_homology(link: *const LhLink, out: *mut *mut LhHomology) -> LhStatus {
    guard(|| {
        nonnull!(link, out);
        match homology_summary(&(*link).link) {
            Ok(result) => {
                *out = Box::into_raw(Box::new(LhHomology { result }));
                LhStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Betti number as a `u64`; `LH_STATUS_OVERFLOW` when it does not fit.
///
/// # Safety
/// `link` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_link_betti(link: *const LhLink, out: *mut u64) -> LhStatus {
    guard(|| {
        nonnull!(link, out);
        match link_homology::betti(&(*link).link) {
            Ok(b) => match b.to_u64() {
                Some(v) => {
                    *out = v;
                    LhStatus::Ok
                }
                None => fail(LhStatus::Overflow, format!("Betti number {b} exceeds 64 bits")),
            },
            Err(e) => from_error(&e),
        }
    })
}

/// Brieskorn-Pham exponents `d/w_i`. `LH_STATUS_NOT_FOUND` when the weights
/// do not admit that form.
///
/// # Safety
/// `out` must have room for `cap` values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_link_bp_exponents(
    link: *const LhLink,
    out: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> LhStatus {
    guard(|| {
        nonnull!(link, out, out_len);
        let l = &(*link).link;
        match bp_exponents(l.weights(), l.degree()) {
            Some(form) => write_out(&form.exponents, out, cap, out_len),
            None => {
                *out_len = 0;
                fail(LhStatus::NotFound, "weights admit no Brieskorn-Pham form")
            }
        }
    })
}

/// Number of distinct chain orderings of the weights.
///
/// # Safety
/// `link` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_link_chain_count(link: *const LhLink, out: *mut usize) -> LhStatus {
    guard(|| {
        nonnull!(link, out);
        *out = (*link).chain_forms().len();
        LhStatus::Ok
    })
}

/// Chain ordering number `index`: original variable indices in `order` and
/// matching exponents in `exponents`, both `cap` long.
///
/// # Safety
/// Buffers must hold `cap` values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_link_chain_form(
    link: *const LhLink,
    index: usize,
    order: *mut usize,
    exponents: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> LhStatus {
    guard(|| {
        nonnull!(link, order, exponents, out_len);
        let forms = (*link).chain_forms();
        let Some(form) = forms.get(index) else {
            *out_len = 0;
            return fail(
                LhStatus::NotFound,
                format!("chain form {index} requested, {} available", forms.len()),
            );
        };
        match write_out(&form.ordering, order, cap, out_len) {
            LhStatus::Ok => write_out(&form.exponents, exponents, cap, out_len),
            other => other,
        }
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_homology_betti(h: *const LhHomology, out: *mut u64) -> LhStatus {
    guard(|| {
        nonnull!(h, out);
        let b = &(*h).result.betti;
        match b.to_u64() {
            Some(v) => {
                *out = v;
                LhStatus::Ok
            }
            None => fail(LhStatus::Overflow, format!("Betti number {b} exceeds 64 bits")),
        }
    })
}

/// Number of torsion factors. Null handles give 0.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_homology_torsion_len(h: *const LhHomology) -> usize {
    h.as_ref().map_or(0, |h| h.result.torsion.len())
}

/// Torsion factor `index`, largest first.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_homology_torsion_at(h: *const LhHomology, index: usize, out: *mut u64) -> LhStatus {
    guard(|| {
        nonnull!(h, out);
        let torsion = &(*h).result.torsion;
        let Some(d) = torsion.get(index) else {
            return fail(
                LhStatus::NotFound,
                format!("torsion index {index} out of range ({})", torsion.len()),
            );
        };
        match d.to_u64() {
            Some(v) => {
                *out = v;
                LhStatus::Ok
            }
            None => fail(LhStatus::Overflow, format!("torsion factor {d} exceeds 64 bits")),
        }
    })
}

/// Group label such as `Z^10 ⊕ Z/55 ⊕ (Z/5)^4`, UTF-8. Free with
/// [`lh_string_free`]. Null on a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_homology_label(h: *const LhHomology) -> *mut c_char {
    match h.as_ref() {
        Some(h) => CString::new(h.result.label.clone()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `h` must come from [`lh_link_homology`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lh_homology_free(h: *mut LhHomology) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Compares the matrix oracle with the subset algorithm for the
/// Brieskorn-Pham exponents `a`. `LH_STATUS_MISMATCH` on disagreement.
///
/// # Safety
/// `a` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn lh_oracle_check(a: *const u64, len: usize, cap: u64) -> LhStatus {
    guard(|| {
        nonnull!(a);
        match compare_with_algorithm(slice(a, len), cap) {
            Ok(c) if c.matches() => LhStatus::Ok,
            Ok(c) => fail(
                LhStatus::Mismatch,
                format!(
                    "oracle {} (eigen1 {}) vs algorithm {}",
                    c.oracle.label, c.eigen1, c.algorithm.label
                ),
            ),
            Err(e) => from_error(&e),
        }
    })
}

/// Scans catalog CSV text and renders the report as `table`, `json` or
/// `csv`. The returned string is freed with [`lh_string_free`].
///
/// # Safety
/// `text` and `format` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_scan_csv(
    text: *const c_char,
    format: *const c_char,
    out: *mut *mut c_char,
) -> LhStatus {
    guard(|| {
        nonnull!(text, format, out);
        let (Ok(text), Ok(format)) = (CStr::from_ptr(text).to_str(), CStr::from_ptr(format).to_str()) else {
            return fail(LhStatus::InvalidInput, "input is not UTF-8");
        };
        let rendered = parse_catalog(text).and_then(|parsed| {
            let report = scan(&parsed.entries, &ScanOptions::default()).with_rejected(&parsed.errors);
            emit_report_as(&report, format)
        });
        match rendered {
            Ok(s) => match CString::new(s) {
                Ok(c) => {
                    *out = c.into_raw();
                    LhStatus::Ok
                }
                Err(_) => fail(LhStatus::InvalidInput, "report contains NUL"),
            },
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn lh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lh_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
