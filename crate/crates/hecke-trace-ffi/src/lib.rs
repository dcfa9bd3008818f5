//! C ABI for the trace engine, so other languages can bind it.
//!
//! The surface is deliberately small: compute a trace value along one of
//! the four pipelines into an opaque [`HeckeLaurent`] handle, inspect it as
//! canonical text or JSON, compare handles, and free everything through the
//! paired `_free` functions. Every entry point returns a [`HeckeStatus`];
//! results are written through out-pointers only on `Ok`.
//!
//! The generated header lands in `include/hecke_trace.h` at build time.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hecke_trace::chambers::{classify_chamber, ChamberClassification};
use hecke_trace::kostant::trace_kostant;
use hecke_trace::product::trace_product;
use hecke_trace::residue::trace_residue;
use hecke_trace::roots::{build_type_a, WeightVector};
use hecke_trace::series::eta_series;
use hecke_trace::{Error, LaurentPoly};

/// Result of every FFI call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeStatus {
    /// Success; out-parameters are populated.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Bad rank, coordinate length, or other malformed input.
    InvalidArgument = 2,
    /// The weight is not interior to a valley chamber (residue/product).
    NotInChamberInterior = 3,
    /// The weight's total degree exceeds the requested truncation cap.
    OutOfTruncation = 4,
    /// An internal exact division left a remainder; indicates a broken
    /// identity upstream, not a caller error.
    NonDivisible = 5,
    /// The engine panicked; the out-parameters are untouched.
    InternalError = 6,
}

/// Where a weight sits relative to the valley-chamber family.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeChamberKind {
    /// Strictly decreasing-then-increasing with positive minimum; the
    /// chamber index is reported separately.
    Interior = 0,
    /// On the boundary of at least one chamber.
    Boundary = 1,
    /// Some coordinate is negative.
    OutsidePositiveCone = 2,
    /// Non-negative but not valley-shaped.
    InsideConeNoChamber = 3,
}

/// Opaque handle to an exact Laurent polynomial in `q`.
pub struct HeckeLaurent {
    inner: LaurentPoly,
}

fn status_of(e: &Error) -> HeckeStatus {
    match e {
        Error::NotInChamberInterior(_) => HeckeStatus::NotInChamberInterior,
        Error::OutOfTruncation { .. } => HeckeStatus::OutOfTruncation,
        Error::NonDivisible => HeckeStatus::NonDivisible,
        Error::DivisionByZero => HeckeStatus::InternalError,
        _ => HeckeStatus::InvalidArgument,
    }
}

/// Shared prologue for the trace entry points: validate pointers and
/// lengths, assemble the weight, shield against panics.
unsafe fn compute(
    n: u32,
    lambda: *const i64,
    len: usize,
    out: *mut *mut HeckeLaurent,
    f: impl FnOnce(usize, &WeightVector) -> Result<LaurentPoly, Error>,
) -> HeckeStatus {
    if lambda.is_null() || out.is_null() {
        return HeckeStatus::NullPointer;
    }
    let n = n as usize;
    if n < 2 || len != n - 1 {
        return HeckeStatus::InvalidArgument;
    }
    let coords = std::slice::from_raw_parts(lambda, len).to_vec();
    let weight = WeightVector::new(coords);
    match catch_unwind(AssertUnwindSafe(|| f(n, &weight))) {
        Ok(Ok(value)) => {
            *out = Box::into_raw(Box::new(HeckeLaurent { inner: value }));
            HeckeStatus::Ok
        }
        Ok(Err(e)) => status_of(&e),
        Err(_) => HeckeStatus::InternalError,
    }
}

/// Trace via the weighted sum over Kostant partitions (the reference
/// pipeline; defined for every weight).
///
/// # Safety
/// `lambda` must point to `len` readable `int64_t`s; `out` must be a valid
/// writable pointer. On `Ok` the caller owns the handle and must release it
/// with [`hecke_laurent_free`].
#[no_mangle]
pub unsafe extern "C" fn hecke_trace_kostant(
    n: u32,
    lambda: *const i64,
    len: usize,
    out: *mut *mut HeckeLaurent,
) -> HeckeStatus {
    compute(n, lambda, len, out, |n, w| {
        let sys = build_type_a(n)?;
        Ok(trace_kostant(&sys, w))
    })
}

/// Trace via the permutation-indexed residue sum. Requires a
/// chamber-interior weight.
///
/// # Safety
/// As for [`hecke_trace_kostant`].
#[no_mangle]
pub unsafe extern "C" fn hecke_trace_residue(
    n: u32,
    lambda: *const i64,
    len: usize,
    out: *mut *mut HeckeLaurent,
) -> HeckeStatus {
    compute(n, lambda, len, out, trace_residue)
}

/// Trace via the closed q-integer product. Requires a chamber-interior
/// weight.
///
/// # Safety
/// As for [`hecke_trace_kostant`].
#[no_mangle]
pub unsafe extern "C" fn hecke_trace_product(
    n: u32,
    lambda: *const i64,
    len: usize,
    out: *mut *mut HeckeLaurent,
) -> HeckeStatus {
    compute(n, lambda, len, out, trace_product)
}

/// Trace via truncated expansion of the generating function at the given
/// degree cap. Fails with `OutOfTruncation` when the weight's total degree
/// exceeds `degree`.
///
/// # Safety
/// As for [`hecke_trace_kostant`].
#[no_mangle]
pub unsafe extern "C" fn hecke_trace_series(
    n: u32,
    lambda: *const i64,
    len: usize,
    degree: u32,
    out: *mut *mut HeckeLaurent,
) -> HeckeStatus {
    compute(n, lambda, len, out, |n, w| {
        let series = eta_series(n, degree as usize)?;
        series.coefficient(w)
    })
}

/// Classifies a weight against the valley-chamber family. On `Ok`,
/// `out_kind` receives the kind and `out_m` the chamber index (for
/// `Interior`; 0 otherwise).
///
/// # Safety
/// `lambda` must point to `len` readable `int64_t`s; `out_kind` and `out_m`
/// must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn hecke_classify_chamber(
    n: u32,
    lambda: *const i64,
    len: usize,
    out_kind: *mut HeckeChamberKind,
    out_m: *mut u32,
) -> HeckeStatus {
    if lambda.is_null() || out_kind.is_null() || out_m.is_null() {
        return HeckeStatus::NullPointer;
    }
    let n = n as usize;
    if n < 2 || len != n - 1 {
        return HeckeStatus::InvalidArgument;
    }
    let coords = std::slice::from_raw_parts(lambda, len).to_vec();
    let (kind, m) = match classify_chamber(&WeightVector::new(coords)) {
        ChamberClassification::Interior { m } => (HeckeChamberKind::Interior, m as u32),
        ChamberClassification::Boundary { .. } => (HeckeChamberKind::Boundary, 0),
        ChamberClassification::OutsidePositiveCone => {
            (HeckeChamberKind::OutsidePositiveCone, 0)
        }
        ChamberClassification::InsideConeNoChamber => {
            (HeckeChamberKind::InsideConeNoChamber, 0)
        }
    };
    *out_kind = kind;
    *out_m = m;
    HeckeStatus::Ok
}

fn handle_string(h: *const HeckeLaurent, render: impl Fn(&LaurentPoly) -> String) -> *mut c_char {
    if h.is_null() {
        return std::ptr::null_mut();
    }
    let poly = unsafe { &(*h).inner };
    CString::new(render(poly)).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Canonical text rendering (terms by decreasing exponent), newly
/// allocated; free with [`hecke_string_free`]. Null on null input.
///
/// # Safety
/// `h` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn hecke_laurent_to_string(h: *const HeckeLaurent) -> *mut c_char {
    handle_string(h, |p| p.to_string())
}

/// JSON rendering `{"terms":[{"exp":E,"coeff":"C"},...]}`, newly allocated;
/// free with [`hecke_string_free`]. Null on null input.
///
/// # Safety
/// `h` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn hecke_laurent_to_json(h: *const HeckeLaurent) -> *mut c_char {
    handle_string(h, |p| serde_json::to_string(p).expect("polynomial serializes"))
}

/// Exact equality of two handles. Null compares unequal to everything,
/// including null.
///
/// # Safety
/// Non-null arguments must be live handles from this library.
#[no_mangle]
pub unsafe extern "C" fn hecke_laurent_eq(a: *const HeckeLaurent, b: *const HeckeLaurent) -> bool {
    if a.is_null() || b.is_null() {
        return false;
    }
    (*a).inner == (*b).inner
}

/// Releases a handle produced by the trace functions. Null is a no-op.
///
/// # Safety
/// `h` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hecke_laurent_free(h: *mut HeckeLaurent) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Releases a string produced by the `_to_string`/`_to_json` functions.
/// Null is a no-op.
///
/// # Safety
/// `s` must be a string from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hecke_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn hecke_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;

    unsafe fn own_string(p: *mut c_char) -> String {
        assert!(!p.is_null());
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        hecke_string_free(p);
        s
    }

    #[test]
    fn kostant_roundtrip_through_abi() {
        let lambda = [2i64, 1];
        let mut handle: *mut HeckeLaurent = std::ptr::null_mut();
        let status =
            unsafe { hecke_trace_kostant(3, lambda.as_ptr(), lambda.len(), &mut handle) };
        assert_eq!(status, HeckeStatus::Ok);
        let text = unsafe { own_string(hecke_laurent_to_string(handle)) };
        assert_eq!(text, "q^3 - 3*q^2 + 3*q - 2 + 3*q^-1 - 3*q^-2 + q^-3");
        let json = unsafe { own_string(hecke_laurent_to_json(handle)) };
        assert!(json.starts_with(r#"{"terms":[{"exp":3,"coeff":"1"}"#), "{json}");
        unsafe { hecke_laurent_free(handle) };
    }

    #[test]
    fn all_pipelines_agree_through_abi() {
        let lambda = [3i64, 1, 2];
        let mut handles = [std::ptr::null_mut::<HeckeLaurent>(); 4];
        unsafe {
            assert_eq!(
                hecke_trace_kostant(4, lambda.as_ptr(), 3, &mut handles[0]),
                HeckeStatus::Ok
            );
            assert_eq!(
                hecke_trace_residue(4, lambda.as_ptr(), 3, &mut handles[1]),
                HeckeStatus::Ok
            );
            assert_eq!(
                hecke_trace_product(4, lambda.as_ptr(), 3, &mut handles[2]),
                HeckeStatus::Ok
            );
            assert_eq!(
                hecke_trace_series(4, lambda.as_ptr(), 3, 6, &mut handles[3]),
                HeckeStatus::Ok
            );
            for pair in handles.windows(2) {
                assert!(hecke_laurent_eq(pair[0], pair[1]));
            }
            for h in handles {
                hecke_laurent_free(h);
            }
        }
    }

    #[test]
    fn error_codes() {
        let boundary = [1i64, 1];
        let mut h: *mut HeckeLaurent = std::ptr::null_mut();
        unsafe {
            assert_eq!(
                hecke_trace_product(3, boundary.as_ptr(), 2, &mut h),
                HeckeStatus::NotInChamberInterior
            );
            assert!(h.is_null());
            assert_eq!(
                hecke_trace_series(3, boundary.as_ptr(), 2, 1, &mut h),
                HeckeStatus::OutOfTruncation
            );
            assert_eq!(
                hecke_trace_kostant(3, std::ptr::null(), 2, &mut h),
                HeckeStatus::NullPointer
            );
            assert_eq!(
                hecke_trace_kostant(3, boundary.as_ptr(), 1, &mut h),
                HeckeStatus::InvalidArgument
            );
            assert_eq!(
                hecke_trace_kostant(1, boundary.as_ptr(), 0, &mut h),
                HeckeStatus::InvalidArgument
            );
        }
    }

    #[test]
    fn chamber_classification_through_abi() {
        let mut kind = HeckeChamberKind::Boundary;
        let mut m = 99u32;
        let interior = [3i64, 1, 2];
        unsafe {
            assert_eq!(
                hecke_classify_chamber(4, interior.as_ptr(), 3, &mut kind, &mut m),
                HeckeStatus::Ok
            );
        }
        assert_eq!(kind, HeckeChamberKind::Interior);
        assert_eq!(m, 2);

        let outside = [1i64, -1];
        unsafe {
            assert_eq!(
                hecke_classify_chamber(3, outside.as_ptr(), 2, &mut kind, &mut m),
                HeckeStatus::Ok
            );
        }
        assert_eq!(kind, HeckeChamberKind::OutsidePositiveCone);
        assert_eq!(m, 0);
    }

    #[test]
    fn null_safe_accessors() {
        unsafe {
            assert!(hecke_laurent_to_string(std::ptr::null()).is_null());
            assert!(!hecke_laurent_eq(std::ptr::null(), std::ptr::null()));
            hecke_laurent_free(std::ptr::null_mut());
            hecke_string_free(std::ptr::null_mut());
        }
        let v = hecke_version();
        let s = unsafe { CStr::from_ptr(v) }.to_str().unwrap();
        assert_eq!(s, env!("CARGO_PKG_VERSION"));
    }
}
