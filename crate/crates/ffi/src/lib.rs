//! C ABI over `indel-bounds`.
//!
//! Every fallible call returns an [`IbStatus`]; on failure the message is
//! kept per thread and can be read with [`ib_last_error_message`]. Results
//! are opaque handles released with the matching `_free` function. Exact
//! integers cross the boundary as NUL-terminated decimal strings owned by
//! the library and released with [`ib_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use indel_bounds::upper_bounds::bgh_zero_rate_threshold;
use indel_bounds::{
    evaluate, evaluate_rate, BoundResult, CodeParams, Direction, Error, Method, RateMethod,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParams = 2,
    Inapplicable = 3,
    Precondition = 4,
    Domain = 5,
    GuardExceeded = 6,
    SearchBudget = 7,
    UnknownMethod = 8,
    Utf8 = 9,
    Panic = 10,
}

/// Which side of `A_q(n,d)` a bound lies on.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IbDirection {
    Upper = 0,
    Lower = 1,
    Exact = 2,
}

/// Validated code parameters `(q, n, d)`.
pub struct IbParams(CodeParams);

/// One evaluated bound.
pub struct IbBound(BoundResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let msg = CString::new(msg).unwrap_or_else(|_| CString::from(c"error message contained NUL"));
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> IbStatus {
    match e {
        Error::InvalidParams { .. } => IbStatus::InvalidParams,
        Error::Inapplicable { .. } => IbStatus::Inapplicable,
        Error::Precondition(_) | Error::AlphabetMismatch(..) => IbStatus::Precondition,
        Error::Domain { .. } => IbStatus::Domain,
        Error::GuardExceeded { .. } => IbStatus::GuardExceeded,
        Error::SearchBudget { .. } => IbStatus::SearchBudget,
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guarded(f: impl FnOnce() -> Result<(), (IbStatus, String)>) -> IbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IbStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IbStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (IbStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (IbStatus, String) {
    (IbStatus::NullPointer, format!("{what} is NULL"))
}

/// # Safety
/// `s` must be NULL or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (IbStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (IbStatus::Utf8, format!("{what} is not UTF-8")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("decimal and tag strings have no NUL").into_raw()
}

/// Length in bytes of the last error message on this thread, excluding the
/// terminating NUL; 0 if there is none.
#[no_mangle]
pub extern "C" fn ib_last_error_length() -> usize {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(0, |m| m.as_bytes().len()))
}

/// Copies the last error message into `buf` (always NUL-terminated when
/// `len > 0`, truncated if needed). Returns the number of bytes written
/// excluding the NUL.
///
/// # Safety
/// `buf` must be NULL or point to at least `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn ib_last_error_message(buf: *mut c_char, len: usize) -> usize {
    if buf.is_null() || len == 0 {
        return 0;
    }
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let bytes = e.as_ref().map_or(&[][..], |m| m.as_bytes());
        let n = bytes.len().min(len - 1);
        ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
        *buf.add(n) = 0;
        n
    })
}

/// Validates `(q, n, d)` and stores a new handle in `*out`.
///
/// # Safety
/// `out` must be NULL or a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn ib_params_new(q: u32, n: u32, d: u32, out: *mut *mut IbParams) -> IbStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = CodeParams::new(q, n, d).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(IbParams(p)));
        Ok(())
    })
}

/// # Safety
/// `params` must be NULL or a handle from [`ib_params_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ib_params_free(params: *mut IbParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

/// Evaluates the method named by `method` (`thm1`, `thm2`, `lev`, `cor3`,
/// `thm4`, `exact`, `greedy`). `guard_bits` bounds the enumeration of the
/// oracle methods; pass 0 for the default.
///
/// # Safety
/// `params` must be a live handle, `method` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ib_bound_evaluate(
    params: *const IbParams,
    method: *const c_char,
    guard_bits: u32,
    out: *mut *mut IbBound,
) -> IbStatus {
    guarded(|| {
        if params.is_null() {
            return Err(null("params"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let tag = read_str(method, "method")?;
        let m = Method::from_tag(tag)
            .ok_or_else(|| (IbStatus::UnknownMethod, format!("unknown method `{tag}`")))?;
        let guard = (guard_bits != 0).then_some(guard_bits);
        let b = evaluate(m, (*params).0, guard).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(IbBound(b)));
        Ok(())
    })
}

/// Decimal value of the bound, as a new string in `*out`.
///
/// # Safety
/// `bound` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ib_bound_value(bound: *const IbBound, out: *mut *mut c_char) -> IbStatus {
    guarded(|| {
        if bound.is_null() {
            return Err(null("bound"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string((*bound).0.value.to_string());
        Ok(())
    })
}

/// Auxiliary parameters as `key=value` pairs joined by `;`, e.g. `t=5`.
///
/// # Safety
/// `bound` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ib_bound_aux(bound: *const IbBound, out: *mut *mut c_char) -> IbStatus {
    guarded(|| {
        if bound.is_null() {
            return Err(null("bound"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let aux: Vec<String> = (*bound).0.aux.iter().map(|(k, v)| format!("{k}={v}")).collect();
        *out = into_c_string(aux.join(";"));
        Ok(())
    })
}

/// # Safety
/// `bound` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ib_bound_direction(bound: *const IbBound, out: *mut IbDirection) -> IbStatus {
    guarded(|| {
        if bound.is_null() {
            return Err(null("bound"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        *out = match (*bound).0.direction {
            Direction::Upper => IbDirection::Upper,
            Direction::Lower => IbDirection::Lower,
            Direction::Exact => IbDirection::Exact,
        };
        Ok(())
    })
}

/// # Safety
/// `bound` must be NULL or a handle from [`ib_bound_evaluate`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ib_bound_free(bound: *mut IbBound) {
    if !bound.is_null() {
        drop(Box::from_raw(bound));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ib_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Asymptotic rate bound `method` (`cor1`, `cor2`, `elias`, `mrrw`, `gv_lb`)
/// at normalized distance `delta`.
///
/// # Safety
/// `method` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ib_rate(q: u32, method: *const c_char, delta: f64, out: *mut f64) -> IbStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let tag = read_str(method, "method")?;
        let m = RateMethod::from_tag(tag)
            .ok_or_else(|| (IbStatus::UnknownMethod, format!("unknown rate method `{tag}`")))?;
        *out = evaluate_rate(m, q, delta).map_err(lib_err)?.rate;
        Ok(())
    })
}

/// `1 - 2/(q + sqrt q)`; NaN for `q < 2`.
#[no_mangle]
pub extern "C" fn ib_bgh_threshold(q: u32) -> f64 {
    if q < 2 {
        return f64::NAN;
    }
    bgh_zero_rate_threshold(q)
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn ib_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
