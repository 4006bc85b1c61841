//! C ABI over the nakayama crate.
//!
//! Conventions:
//! - Algebra files travel as UTF-8 JSON strings; parsed files live behind
//!   the opaque `NkAlgebra` handle.
//! - Every fallible call returns an `NkStatus`; on failure a thread-local
//!   message is readable through `nk_last_error` until the next failing
//!   call on the same thread.
//! - Strings returned through out-parameters are owned by the caller and
//!   must be released with `nk_string_free`; handles with
//!   `nk_algebra_free`. Both accept null.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use nakayama::error::AlgebraError;
use nakayama::fileformat::{parse_algebra_file, AlgebraFile};
use nakayama::run::{dispatch, DimChoice, RunOptions};

/// Status codes mirroring the CLI exit-code classes, with two extra codes
/// for ABI misuse that has no CLI counterpart.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NkStatus {
    Ok = 0,
    ParseError = 1,
    PreconditionError = 2,
    CapacityError = 3,
    InternalError = 4,
    NullArgument = 5,
    InvalidUtf8 = 6,
}

/// Options for `nk_run`. Zero-initialize for defaults: nonpositive
/// `max_degree`, `slack`, and `gldim` mean "unset"; `dim` is 2, 3, -1 for
/// the general pipeline, or 0 to infer from the presentation shape.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct NkOptions {
    pub max_degree: i32,
    pub slack: i32,
    pub dim: i32,
    pub gldim: i32,
}

/// Parsed algebra file. Opaque to C; create with `nk_algebra_parse`.
pub struct NkAlgebra {
    file: AlgebraFile,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &AlgebraError) -> NkStatus {
    match e.exit_code() {
        1 => NkStatus::ParseError,
        2 => NkStatus::PreconditionError,
        3 => NkStatus::CapacityError,
        _ => NkStatus::InternalError,
    }
}

fn fail(e: &AlgebraError) -> NkStatus {
    set_error(&e.to_string());
    status_of(e)
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, NkStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(NkStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        NkStatus::InvalidUtf8
    })
}

fn options_from(opts: *const NkOptions) -> RunOptions {
    let raw = if opts.is_null() {
        NkOptions { max_degree: 0, slack: 0, dim: 0, gldim: 0 }
    } else {
        unsafe { *opts }
    };
    RunOptions {
        max_degree: (raw.max_degree > 0).then_some(raw.max_degree as usize),
        slack: (raw.slack > 0).then_some(raw.slack as usize),
        dim: match raw.dim {
            2 => Some(DimChoice::Two),
            3 => Some(DimChoice::Three),
            -1 => Some(DimChoice::General),
            _ => None,
        },
        gldim: (raw.gldim > 0).then_some(raw.gldim as usize),
    }
}

/// Last error message raised on this thread, or null if none was raised.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn nk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null(), |c| c.as_ptr())
    })
}

/// Parse an algebra file from JSON into a handle. On success writes the
/// handle to `out` and returns `Ok`.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_parse(
    json: *const c_char,
    out: *mut *mut NkAlgebra,
) -> NkStatus {
    if out.is_null() {
        set_error("null output pointer");
        return NkStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let text = match read_str(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_algebra_file(text) {
        Ok(file) => {
            *out = Box::into_raw(Box::new(NkAlgebra { file }));
            NkStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Release a handle created by `nk_algebra_parse`. Null is ignored.
///
/// # Safety
/// `a` must be null or a pointer previously returned by `nk_algebra_parse`
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_free(a: *mut NkAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of generators of a parsed algebra, or -1 on a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nk_generator_count(a: *const NkAlgebra) -> i32 {
    match a.as_ref() {
        Some(h) => h.file.generators.len() as i32,
        None => -1,
    }
}

/// Run a command ("dual", "pbw", "nakayama", "cy", "potential",
/// "frobenius") against a parsed algebra. On success writes a heap-owned
/// JSON report to `report_out`; release it with `nk_string_free`.
///
/// # Safety
/// `a` must be a live handle, `command` a valid NUL-terminated string,
/// `opts` null or a valid options struct, `report_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_run(
    a: *const NkAlgebra,
    command: *const c_char,
    opts: *const NkOptions,
    report_out: *mut *mut c_char,
) -> NkStatus {
    if report_out.is_null() {
        set_error("null output pointer");
        return NkStatus::NullArgument;
    }
    *report_out = ptr::null_mut();
    let handle = match a.as_ref() {
        Some(h) => h,
        None => {
            set_error("null algebra handle");
            return NkStatus::NullArgument;
        }
    };
    let cmd = match read_str(command) {
        Ok(c) => c,
        Err(s) => return s,
    };
    match dispatch(cmd, &handle.file, &options_from(opts)) {
        Ok(report) => {
            let json = report.to_json();
            match CString::new(json) {
                Ok(c) => {
                    *report_out = c.into_raw();
                    NkStatus::Ok
                }
                Err(_) => {
                    set_error("report contained an interior NUL byte");
                    NkStatus::InternalError
                }
            }
        }
        Err(e) => fail(&e),
    }
}

/// One-shot convenience: parse and run in a single call.
///
/// # Safety
/// Same contracts as `nk_algebra_parse` and `nk_run`.
#[no_mangle]
pub unsafe extern "C" fn nk_run_json(
    json: *const c_char,
    command: *const c_char,
    opts: *const NkOptions,
    report_out: *mut *mut c_char,
) -> NkStatus {
    let mut handle: *mut NkAlgebra = ptr::null_mut();
    let status = nk_algebra_parse(json, &mut handle);
    if status != NkStatus::Ok {
        return status;
    }
    let status = nk_run(handle, command, opts, report_out);
    nk_algebra_free(handle);
    status
}

/// Release a string returned through a `report_out` parameter. Null is
/// ignored.
///
/// # Safety
/// `s` must be null or a string previously written by this library that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn nk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
