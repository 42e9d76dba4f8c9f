//! C ABI over `lexbs`.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free`. Strings returned through `char **` are
//! released with [`lexbs_string_free`]. Every call returns a [`LexbsStatus`];
//! on failure [`lexbs_last_error`] holds a message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;

use lexbs::cli::{render_betti, render_decomposition, Normalization};
use lexbs::verify::{self, Outcome};
use lexbs::{BettiDiagram, Decomposition, Error, MonomialIdeal, Rational};

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LexbsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    OutOfRange = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LexbsOutcome {
    Pass = 0,
    Fail = 1,
    Excluded = 2,
    Vacuous = 3,
}

/// Values accepted by [`lexbs_check`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LexbsCheck {
    Theorem1 = 0,
    Corollary = 1,
    Theorem2 = 2,
    Conjecture = 3,
    Bhp = 4,
    EkVsCone = 5,
    Lemmas = 6,
}

pub struct LexbsIdeal(MonomialIdeal);

pub struct LexbsBetti(BettiDiagram);

pub struct LexbsDecomposition(Decomposition);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(LexbsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } | Error::UnknownVariable { .. } => LexbsStatus::Parse,
            _ => LexbsStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(LexbsStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LexbsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            LexbsStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            LexbsStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(LexbsStatus::InvalidInput, "string contains NUL".into()))?;
    write_out(out, c.into_raw())
}

unsafe fn write_rational(q: &Rational, num: *mut i64, den: *mut i64) -> Result<(), Failure> {
    let range = || Failure(LexbsStatus::OutOfRange, format!("{q} does not fit in 64 bits"));
    let n = q.numer().to_i64().ok_or_else(range)?;
    let d = q.denom().to_i64().ok_or_else(range)?;
    write_out(num, n)?;
    write_out(den, d)
}

fn normalization(unit: bool) -> Normalization {
    if unit {
        Normalization::Unit
    } else {
        Normalization::Lcm
    }
}

/// Parses comma-separated generators in `n_vars` variables.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lexbs_ideal_parse(
    text: *const c_char,
    n_vars: usize,
    out: *mut *mut LexbsIdeal,
) -> LexbsStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| Failure(LexbsStatus::InvalidUtf8, e.to_string()))?;
        let ideal = lexbs::cli::parse_ideal(s, n_vars)?;
        write_out(out, Box::into_raw(Box::new(LexbsIdeal(ideal))))
    })
}

/// # Safety
/// `ideal` must come from [`lexbs_ideal_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lexbs_ideal_free(ideal: *mut LexbsIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// # Safety
/// Pointers must be valid; `out` receives a string for [`lexbs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lexbs_ideal_to_string(ideal: *const LexbsIdeal, out: *mut *mut c_char) -> LexbsStatus {
    guard(|| write_string(out, deref(ideal, "ideal")?.0.to_string()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lexbs_ideal_num_generators(ideal: *const LexbsIdeal, out: *mut usize) -> LexbsStatus {
    guard(|| write_out(out, deref(ideal, "ideal")?.0.generators().len()))
}

/// Writes lex-segment, stable and Artinian flags; any output may be null.
///
/// # Safety
/// `ideal` must be valid; non-null outputs must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lexbs_ideal_properties(
    ideal: *const LexbsIdeal,
    is_lex: *mut bool,
    is_stable: *mut bool,
    is_artinian: *mut bool,
) -> LexbsStatus {
    guard(|| {
        let i = &deref(ideal, "ideal")?.0;
        for (p, v) in [(is_lex, i.is_lex_segment()), (is_stable, i.is_stable()), (is_artinian, i.is_artinian())] {
            if !p.is_null() {
                p.write(v);
            }
        }
        Ok(())
    })
}

/// Betti diagram of a stable ideal, or of its quotient ring.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lexbs_betti(
    ideal: *const LexbsIdeal,
    quotient: bool,
    out: *mut *mut LexbsBetti,
) -> LexbsStatus {
    guard(|| {
        let b = lexbs::ek_betti(&deref(ideal, "ideal")?.0)?;
        let b = if quotient { lexbs::quotient_diagram(&b) } else { b };
        write_out(out, Box::into_raw(Box::new(LexbsBetti(b))))
    })
}

/// # Safety
/// `betti` must come from [`lexbs_betti`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lexbs_betti_free(betti: *mut LexbsBetti) {
    if !betti.is_null() {
        drop(Box::from_raw(betti));
    }
}

/// Entry `beta_{i,j}` as `num / den`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lexbs_betti_get(
    betti: *const LexbsBetti,
    i: usize,
    j: u32,
    num: *mut i64,
    den: *mut i64,
) -> LexbsStatus {
    guard(|| write_rational(&deref(betti, "betti")?.0.get(i, j), num, den))
}

/// # Safety
/// Pointers must be valid; `out` receives a string for [`lexbs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lexbs_betti_render(betti: *const LexbsBetti, out: *mut *mut c_char) -> LexbsStatus {
    guard(|| write_string(out, render_betti(&deref(betti, "betti")?.0)))
}

/// Greedy Boij-Söderberg decomposition.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lexbs_decompose(betti: *const LexbsBetti, out: *mut *mut LexbsDecomposition) -> LexbsStatus {
    guard(|| {
        let d = lexbs::bs_decompose(&deref(betti, "betti")?.0)?;
        write_out(out, Box::into_raw(Box::new(LexbsDecomposition(d))))
    })
}

/// # Safety
/// `d` must come from [`lexbs_decompose`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lexbs_decomposition_free(d: *mut LexbsDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lexbs_decomposition_len(d: *const LexbsDecomposition, out: *mut usize) -> LexbsStatus {
    guard(|| write_out(out, deref(d, "decomposition")?.0.len()))
}

fn summand(d: &Decomposition, index: usize) -> Result<&lexbs::Summand, Failure> {
    d.summands.get(index).ok_or_else(|| Failure(LexbsStatus::OutOfRange, format!("summand {index} of {}", d.len())))
}

/// Coefficient of summand `index`, against lcm-normalized pure diagrams
/// or, with `unit`, against `lambda = 1` ones.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lexbs_decomposition_coefficient(
    d: *const LexbsDecomposition,
    index: usize,
    unit: bool,
    num: *mut i64,
    den: *mut i64,
) -> LexbsStatus {
    guard(|| {
        let s = summand(&deref(d, "decomposition")?.0, index)?;
        let c = if unit { s.unit_coeff() } else { s.coeff.clone() };
        write_rational(&c, num, den)
    })
}

/// Degree sequence of summand `index`. `len` always receives the full
/// length; only `min(cap, len)` values are copied into `buf`.
///
/// # Safety
/// `buf` must hold `cap` values (it may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn lexbs_decomposition_sequence(
    d: *const LexbsDecomposition,
    index: usize,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> LexbsStatus {
    guard(|| {
        let degrees = summand(&deref(d, "decomposition")?.0, index)?.seq.degrees();
        write_out(len, degrees.len())?;
        let k = cap.min(degrees.len());
        if k > 0 {
            if buf.is_null() {
                return Err(null("buf"));
            }
            ptr::copy_nonoverlapping(degrees.as_ptr(), buf, k);
        }
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid; `out` receives a string for [`lexbs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lexbs_decomposition_render(
    d: *const LexbsDecomposition,
    unit: bool,
    out: *mut *mut c_char,
) -> LexbsStatus {
    guard(|| write_string(out, render_decomposition(&deref(d, "decomposition")?.0, normalization(unit), false)))
}

/// Runs one check. `which` takes a [`LexbsCheck`] value. `report` may be
/// null; otherwise it receives the printed report.
///
/// # Safety
/// `ideal` and `outcome` must be valid; `report` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lexbs_check(
    ideal: *const LexbsIdeal,
    which: i32,
    outcome: *mut LexbsOutcome,
    report: *mut *mut c_char,
) -> LexbsStatus {
    guard(|| {
        let l = &deref(ideal, "ideal")?.0;
        let r = match which {
            0 => verify::check_theorem1(l),
            1 => verify::check_corollary(l),
            2 => verify::check_theorem2(l),
            3 => verify::check_conjecture(l),
            4 => verify::check_bhp_dominance(l),
            5 => verify::ek_vs_cone(l),
            6 => verify::check_lemmas(l),
            _ => return Err(Failure(LexbsStatus::OutOfRange, format!("unknown check {which}"))),
        };
        let o = match r.outcome() {
            Outcome::Pass => LexbsOutcome::Pass,
            Outcome::Fail => LexbsOutcome::Fail,
            Outcome::Excluded => LexbsOutcome::Excluded,
            Outcome::Vacuous => LexbsOutcome::Vacuous,
        };
        write_out(outcome, o)?;
        if !report.is_null() {
            write_string(report, r.to_string())?;
        }
        Ok(())
    })
}

/// Provenance of each summand of an Artinian lex ideal in three variables.
///
/// # Safety
/// Pointers must be valid; `out` receives a string for [`lexbs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lexbs_explain(ideal: *const LexbsIdeal, out: *mut *mut c_char) -> LexbsStatus {
    guard(|| {
        let r = verify::explain_chain(&deref(ideal, "ideal")?.0)?;
        write_string(out, r.to_string())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lexbs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn lexbs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn lexbs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn last_error_is_per_call() {
        let mut out = ptr::null_mut();
        let s = unsafe { lexbs_ideal_parse(c"x^2, w".as_ptr(), 3, &mut out) };
        assert_eq!(s, LexbsStatus::Parse);
        assert!(out.is_null());
        let msg = unsafe { CStr::from_ptr(lexbs_last_error()) }.to_str().unwrap().to_string();
        assert!(!msg.is_empty());
        let s = unsafe { lexbs_ideal_parse(c"x".as_ptr(), 3, &mut out) };
        assert_eq!(s, LexbsStatus::Ok);
        assert!(unsafe { CStr::from_ptr(lexbs_last_error()) }.to_bytes().is_empty());
        unsafe { lexbs_ideal_free(out) };
    }

    #[test]
    fn version_is_terminated() {
        let v = unsafe { CStr::from_ptr(lexbs_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
