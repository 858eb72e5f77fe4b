//! C ABI for the `resyn` library.
//!
//! Regexes cross the boundary as opaque `ResynRegex` handles owned by the
//! caller and released with [`resyn_regex_free`]. Strings returned by the
//! library are released with [`resyn_string_free`]. Every fallible call
//! returns a [`ResynStatus`]; on failure a description is available from
//! [`resyn_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use resyn::canon::{canonical_if_valid, canonicalize, validate, Mode, Reason};
use resyn::cost::{optimal_alignment, scs_length};
use resyn::eval::{mcc, ConfusionCounts};
use resyn::synth::{synthesize, StrategySuite, SynthesisConfig, Task};
use resyn::syntax::{matches, parse, serialize, RegexAst};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResynStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    Rejected = 4,
    SynthesisFailed = 5,
    BudgetExceeded = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResynMode {
    Preserving = 0,
    Full = 1,
}

/// Outcome of the acceptance filters.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResynReason {
    Accepted = 0,
    Unparsable = 1,
    Lookaround = 2,
    Backreference = 3,
    NonPrintable = 4,
    TooLong = 5,
    UnionTooWide = 6,
    EmptyAfterOptimize = 7,
}

/// Opaque regex handle.
pub struct ResynRegex {
    ast: RegexAst,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: ResynStatus, msg: impl Into<String>) -> ResynStatus {
    set_error(msg);
    status
}

/// Runs `f`, converting a panic into `Internal`.
fn guard(f: impl FnOnce() -> ResynStatus) -> ResynStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ResynStatus::Internal, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, ResynStatus> {
    if p.is_null() {
        return Err(fail(ResynStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(ResynStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn str_array(p: *const *const c_char, n: usize) -> Result<Vec<String>, ResynStatus> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(fail(ResynStatus::NullPointer, "null array argument"));
    }
    std::slice::from_raw_parts(p, n)
        .iter()
        .map(|&s| str_arg(s).map(str::to_string))
        .collect()
}

fn handle(ast: RegexAst) -> *mut ResynRegex {
    Box::into_raw(Box::new(ResynRegex { ast }))
}

macro_rules! out_ptr {
    ($p:expr) => {
        if $p.is_null() {
            return fail(ResynStatus::NullPointer, "null output pointer");
        }
    };
}

macro_rules! try_arg {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Parses `pattern` without canonicalizing it.
///
/// # Safety
/// `pattern` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn resyn_regex_parse(
    pattern: *const c_char,
    out: *mut *mut ResynRegex,
) -> ResynStatus {
    guard(|| {
        out_ptr!(out);
        let p = try_arg!(str_arg(pattern));
        match parse(p) {
            Ok(ast) => {
                *out = handle(ast);
                ResynStatus::Ok
            }
            Err(e) => fail(ResynStatus::ParseError, e.to_string()),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `regex` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn resyn_regex_free(regex: *mut ResynRegex) {
    if !regex.is_null() {
        drop(Box::from_raw(regex));
    }
}

/// The pattern string of a handle, or null if `regex` is null. Release with
/// [`resyn_string_free`].
///
/// # Safety
/// `regex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn resyn_regex_to_string(regex: *const ResynRegex) -> *mut c_char {
    match regex.as_ref() {
        Some(r) => CString::new(serialize(&r.ast))
            .map(CString::into_raw)
            .unwrap_or(ptr::null_mut()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn resyn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes a new canonicalized handle to `out`.
///
/// # Safety
/// `regex` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn resyn_regex_canonicalize(
    regex: *const ResynRegex,
    mode: ResynMode,
    out: *mut *mut ResynRegex,
) -> ResynStatus {
    guard(|| {
        out_ptr!(out);
        let Some(r) = regex.as_ref() else {
            return fail(ResynStatus::NullPointer, "null regex handle");
        };
        let mode = match mode {
            ResynMode::Preserving => Mode::Preserving,
            ResynMode::Full => Mode::Full,
        };
        match canonicalize(&r.ast, mode) {
            Ok(ast) => {
                *out = handle(ast);
                ResynStatus::Ok
            }
            Err(e) => fail(ResynStatus::BudgetExceeded, e.to_string()),
        }
    })
}

/// Full-string match of `input`.
///
/// # Safety
/// `regex` must be a live handle, `input` NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn resyn_regex_matches(
    regex: *const ResynRegex,
    input: *const c_char,
    out: *mut bool,
) -> ResynStatus {
    guard(|| {
        out_ptr!(out);
        let Some(r) = regex.as_ref() else {
            return fail(ResynStatus::NullPointer, "null regex handle");
        };
        let w = try_arg!(str_arg(input));
        *out = matches(&r.ast, w);
        ResynStatus::Ok
    })
}

/// Runs the acceptance filters on `pattern`.
///
/// # Safety
/// `pattern` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn resyn_validate(
    pattern: *const c_char,
    out: *mut ResynReason,
) -> ResynStatus {
    guard(|| {
        out_ptr!(out);
        let p = try_arg!(str_arg(pattern));
        *out = match validate(p).reason {
            Reason::Ok => ResynReason::Accepted,
            Reason::Unparsable => ResynReason::Unparsable,
            Reason::Lookaround => ResynReason::Lookaround,
            Reason::Backreference => ResynReason::Backreference,
            Reason::NonPrintable => ResynReason::NonPrintable,
            Reason::TooLong => ResynReason::TooLong,
            Reason::UnionTooWide => ResynReason::UnionTooWide,
            Reason::EmptyAfterOptimize => ResynReason::EmptyAfterOptimize,
        };
        ResynStatus::Ok
    })
}

/// Synthesizes a regex consistent with the examples. With a null
/// `ground_truth` the heuristic strategies are used; otherwise routing and
/// decomposition follow the given regex, which must pass the acceptance
/// filters.
///
/// # Safety
/// The arrays must hold `n_pos`/`n_neg` NUL-terminated strings,
/// `ground_truth` must be null or a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn resyn_synthesize(
    positives: *const *const c_char,
    n_pos: usize,
    negatives: *const *const c_char,
    n_neg: usize,
    ground_truth: *const ResynRegex,
    out: *mut *mut ResynRegex,
) -> ResynStatus {
    guard(|| {
        out_ptr!(out);
        let pos = try_arg!(str_array(positives, n_pos));
        let neg = try_arg!(str_array(negatives, n_neg));
        let cfg = SynthesisConfig::default();
        let mut task = Task::new(&pos, &neg);
        let suite = match ground_truth.as_ref() {
            None => StrategySuite::heuristic(&cfg),
            Some(gt) => match canonical_if_valid(&serialize(&gt.ast)) {
                Ok(ast) => {
                    task = task.with_guide(ast);
                    StrategySuite::oracle(&cfg)
                }
                Err(r) => return fail(ResynStatus::Rejected, format!("ground truth rejected: {r}")),
            },
        };
        match synthesize(&task, &suite, &cfg) {
            Ok(s) => {
                *out = handle(s.regex);
                ResynStatus::Ok
            }
            Err(e) => fail(ResynStatus::SynthesisFailed, e.to_string()),
        }
    })
}

/// Shortest common supersequence length of two strings.
///
/// # Safety
/// `a` and `b` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn resyn_scs_length(
    a: *const c_char,
    b: *const c_char,
    out: *mut usize,
) -> ResynStatus {
    guard(|| {
        out_ptr!(out);
        let a = try_arg!(str_arg(a));
        let b = try_arg!(str_arg(b));
        *out = scs_length(a, b);
        ResynStatus::Ok
    })
}

/// Optimal alignment cost of a string set.
///
/// # Safety
/// `strings` must hold `n` NUL-terminated strings and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn resyn_alignment_cost(
    strings: *const *const c_char,
    n: usize,
    out: *mut usize,
) -> ResynStatus {
    guard(|| {
        out_ptr!(out);
        let set = try_arg!(str_array(strings, n));
        match optimal_alignment(&set) {
            Ok(a) => {
                *out = a.cost();
                ResynStatus::Ok
            }
            Err(e) => fail(ResynStatus::BudgetExceeded, e.to_string()),
        }
    })
}

/// Matthews correlation coefficient; 0 when a marginal is zero.
#[no_mangle]
pub extern "C" fn resyn_mcc(tp: u64, tn: u64, fp: u64, fn_: u64) -> f64 {
    mcc(ConfusionCounts { tp, tn, fp, fn_ })
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn resyn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
