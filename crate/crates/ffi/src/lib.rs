//! C interface to `hopfforge`.
//!
//! Hopf algebras cross the boundary as opaque `HfHopf` handles; everything
//! else travels as NUL-terminated UTF-8 JSON. Every fallible function returns
//! an [`HfStatus`]; on anything other than `OK` or `NEGATIVE`,
//! [`hf_last_error_message`] describes the failure on the calling thread.
//! Strings returned through out-parameters are owned by the caller and must be
//! released with [`hf_string_free`]; handles with [`hf_hopf_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hopfforge::catalog::catalog_get;
use hopfforge::degeneration::{degenerate_closed_form, degenerate_symbolic, graded_degeneration, DegenerationReport, GradingVector};
use hopfforge::hopf::map_from_json;
use hopfforge::invariants::{fingerprint, orbit_dimension};
use hopfforge::{Error, HopfData};

/// Result codes shared by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HfStatus {
    Ok = 0,
    /// The computation ran and gave a negative verdict (axiom failure, no degeneration).
    Negative = 1,
    InvalidArgument = 2,
    ParseError = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Degeneration method selector for [`hf_degenerate`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HfMode {
    ClosedForm = 0,
    Symbolic = 1,
}

/// Opaque handle to a Hopf algebra.
pub struct HfHopf(HopfData);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> HfStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => HfStatus::ParseError,
        _ => HfStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<HfStatus, (HfStatus, String)>) -> HfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            HfStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (HfStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HfStatus, String)> {
    if p.is_null() {
        return Err((HfStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (HfStatus::ParseError, format!("{what} is not UTF-8")))
}

unsafe fn hopf_arg<'a>(p: *const HfHopf) -> Result<&'a HopfData, (HfStatus, String)> {
    p.as_ref().map(|h| &h.0).ok_or((HfStatus::NullPointer, "handle is null".into()))
}

fn check_out<T>(p: *mut T) -> Result<(), (HfStatus, String)> {
    if p.is_null() {
        Err((HfStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior NUL").into_raw()
}

unsafe fn put_handle(out: *mut *mut HfHopf, h: HopfData) {
    *out = Box::into_raw(Box::new(HfHopf(h)));
}

unsafe fn put_json(out: *mut *mut c_char, v: &impl serde::Serialize) {
    if !out.is_null() {
        *out = into_c_string(serde_json::to_string(v).expect("reports serialize"));
    }
}

/// The message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread; never free it.
#[no_mangle]
pub extern "C" fn hf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a Hopf algebra from its JSON file format.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_hopf_from_json(json: *const c_char, out: *mut *mut HfHopf) -> HfStatus {
    guard(|| {
        check_out(out)?;
        let text = str_arg(json, "json")?;
        let h = HopfData::from_json_str(text).map_err(lib_err)?;
        put_handle(out, h);
        Ok(HfStatus::Ok)
    })
}

/// Builds a catalog entry by id or alias.
///
/// # Safety
/// `id` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_catalog_get(id: *const c_char, out: *mut *mut HfHopf) -> HfStatus {
    guard(|| {
        check_out(out)?;
        let h = catalog_get(str_arg(id, "id")?).map_err(lib_err)?;
        put_handle(out, h);
        Ok(HfStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hf_hopf_free(h: *mut HfHopf) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Dimension of the algebra, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_hopf_dim(h: *const HfHopf) -> usize {
    h.as_ref().map_or(0, |h| h.0.dim())
}

/// Serializes to the JSON file format.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_hopf_to_json(h: *const HfHopf, out: *mut *mut c_char) -> HfStatus {
    guard(|| {
        check_out(out)?;
        *out = into_c_string(hopf_arg(h)?.to_json_string());
        Ok(HfStatus::Ok)
    })
}

/// Checks all axioms. Returns `OK` when they hold and `NEGATIVE` otherwise;
/// the verification report is written to `report` unless it is null.
///
/// # Safety
/// `h` must be a live handle; `report` must be null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_verify(h: *const HfHopf, report: *mut *mut c_char) -> HfStatus {
    guard(|| {
        let r = hopf_arg(h)?.verify();
        put_json(report, &r);
        Ok(if r.passed() { HfStatus::Ok } else { HfStatus::Negative })
    })
}

/// The dual Hopf algebra as a new handle.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_dual(h: *const HfHopf, out: *mut *mut HfHopf) -> HfStatus {
    guard(|| {
        check_out(out)?;
        let d = hopf_arg(h)?.dual().map_err(lib_err)?;
        put_handle(out, d);
        Ok(HfStatus::Ok)
    })
}

/// Basis-independent invariants as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_fingerprint_json(h: *const HfHopf, out: *mut *mut c_char) -> HfStatus {
    guard(|| {
        check_out(out)?;
        let fp = fingerprint(hopf_arg(h)?).map_err(lib_err)?;
        put_json(out, &fp);
        Ok(HfStatus::Ok)
    })
}

/// Dimension of the orbit under change of basis.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_orbit_dimension(h: *const HfHopf, out: *mut usize) -> HfStatus {
    guard(|| {
        check_out(out)?;
        *out = orbit_dimension(hopf_arg(h)?);
        Ok(HfStatus::Ok)
    })
}

unsafe fn finish_degeneration(
    report: DegenerationReport,
    limit: *mut *mut HfHopf,
    json: *mut *mut c_char,
) -> HfStatus {
    put_json(json, &report);
    match report.limit {
        Some(l) => {
            if !limit.is_null() {
                put_handle(limit, l);
            }
            HfStatus::Ok
        }
        None => HfStatus::Negative,
    }
}

/// Degenerates along `φ + t·id`, with `φ` given in the JSON matrix format.
/// On success `OK` is returned and the limit is written to `limit` (if not
/// null); `NEGATIVE` means no degeneration exists along this family. The report
/// is written to `report` unless it is null.
///
/// # Safety
/// `h` must be a live handle, `phi_json` a valid string; `limit` and
/// `report` must be null or valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hf_degenerate(
    h: *const HfHopf,
    phi_json: *const c_char,
    mode: HfMode,
    limit: *mut *mut HfHopf,
    report: *mut *mut c_char,
) -> HfStatus {
    guard(|| {
        if !limit.is_null() {
            *limit = ptr::null_mut();
        }
        let h = hopf_arg(h)?;
        let value: serde_json::Value =
            serde_json::from_str(str_arg(phi_json, "phi_json")?).map_err(|e| (HfStatus::ParseError, e.to_string()))?;
        let phi = map_from_json(value).map_err(lib_err)?;
        let r = match mode {
            HfMode::ClosedForm => degenerate_closed_form(h, &phi),
            HfMode::Symbolic => degenerate_symbolic(h, &phi),
        }
        .map_err(lib_err)?;
        Ok(finish_degeneration(r, limit, report))
    })
}

/// Associated graded Hopf algebra for per-basis-vector degrees.
///
/// # Safety
/// `h` must be a live handle and `degrees` point to `len` values; `limit`
/// and `report` must be null or valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hf_graded(
    h: *const HfHopf,
    degrees: *const usize,
    len: usize,
    limit: *mut *mut HfHopf,
    report: *mut *mut c_char,
) -> HfStatus {
    guard(|| {
        if !limit.is_null() {
            *limit = ptr::null_mut();
        }
        let h = hopf_arg(h)?;
        if degrees.is_null() {
            return Err((HfStatus::NullPointer, "degrees is null".into()));
        }
        let d = std::slice::from_raw_parts(degrees, len).to_vec();
        let grading = GradingVector::new(d).map_err(lib_err)?;
        match graded_degeneration(h, &grading) {
            Ok(r) => Ok(finish_degeneration(r, limit, report)),
            Err(e @ Error::Grading(_)) => {
                set_error(e.to_string());
                Ok(HfStatus::Negative)
            }
            Err(e) => Err(lib_err(e)),
        }
    })
}
