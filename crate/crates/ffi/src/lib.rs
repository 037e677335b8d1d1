//! C interface to `qplactic`.
//!
//! Objects cross the boundary as opaque handles released with their `_free`
//! function. Every fallible call returns a [`QpStatus`]; on failure the
//! message is available from [`qp_last_error`] until the next failing call on
//! the same thread. Strings returned through `char **` outputs are owned by
//! the caller and must be released with [`qp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qplactic::combinatorics::{rs, Partition, Tabloid, Word};
use qplactic::crystal::component_for_shape;
use qplactic::qmatrix::{qdet, qminor, Monomial, NCPoly};
use qplactic::straighten::{expand_in_bitableaux, q_zero_class, straighten_flag, BitabExpansion, FlagExpansion};
use qplactic::verify::{self, Config, Suite};
use qplactic::Error;

/// Largest matrix size accepted through this interface.
const MAX_N: u8 = 9;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    ResourceLimit = 5,
    Arithmetic = 6,
    TheoremViolation = 7,
    Panic = 8,
}

/// An element of the quantum matrix algebra in normal form.
pub struct QpPoly(NCPoly);

/// An expansion in bitableaux or in quantum tableaux.
pub enum QpExpansion {
    Bitableaux(BitabExpansion),
    Tableaux(FlagExpansion),
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(QpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) => QpStatus::Parse,
            Error::InvalidInput(_) | Error::LetterOutOfRange { .. } | Error::ShapeMismatch(_) => QpStatus::InvalidInput,
            Error::ResourceLimit(_) | Error::StepBudget(_) => QpStatus::ResourceLimit,
            Error::DivisionByZero | Error::PoleAtZero(_) | Error::NegativeQInt(_) | Error::Singular(_) => {
                QpStatus::Arithmetic
            }
            Error::TheoremViolation(_) => QpStatus::TheoremViolation,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(QpStatus::NullPointer, format!("{what} is null"))
}

/// Run `f`, converting errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QpStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            QpStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(QpStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn check_n(n: u8) -> Result<(), Failure> {
    if n == 0 || n > MAX_N {
        return Err(Failure(QpStatus::ResourceLimit, format!("n = {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    Ok(())
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Insertion and recording tableaux of a word, as compact labels.
///
/// # Safety
/// `word` must be a nul-terminated string; `p_out` and `q_out` must be valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_rs(word: *const c_char, p_out: *mut *mut c_char, q_out: *mut *mut c_char) -> QpStatus {
    guard(|| {
        let w = Word::parse(text(word, "word")?, u8::MAX)?;
        if q_out.is_null() {
            return Err(null("q_out"));
        }
        let pair = rs(&w);
        put_string(p_out, pair.p.label())?;
        put_string(q_out, pair.q.label())
    })
}

/// The quantum determinant of size `n`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_qdet(n: u8, out: *mut *mut QpPoly) -> QpStatus {
    guard(|| {
        check_n(n)?;
        put(out, QpPoly(qdet(n)))
    })
}

/// The quantum minor on the given row and column words, such as "12" and "23".
///
/// # Safety
/// Both strings must be nul-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_qminor(rows: *const c_char, cols: *const c_char, out: *mut *mut QpPoly) -> QpStatus {
    guard(|| {
        let r = Word::parse(text(rows, "rows")?, MAX_N)?;
        let c = Word::parse(text(cols, "cols")?, MAX_N)?;
        put(out, QpPoly(qminor(&r.0, &c.0)?))
    })
}

/// The monomial `t[w1,u1]*...*t[wk,uk]`, brought to normal form.
///
/// # Safety
/// Both strings must be nul-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_monomial(rows: *const c_char, cols: *const c_char, out: *mut *mut QpPoly) -> QpStatus {
    guard(|| {
        let r = Word::parse(text(rows, "rows")?, MAX_N)?;
        let c = Word::parse(text(cols, "cols")?, MAX_N)?;
        put(out, QpPoly(NCPoly::from_monomial(Monomial::from_words(&r, &c)?)))
    })
}

/// Parse a product such as "t[2,3]*t[1,1]" and bring it to normal form.
///
/// # Safety
/// `s` must be nul-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_poly_parse(s: *const c_char, out: *mut *mut QpPoly) -> QpStatus {
    guard(|| {
        let m: Monomial = text(s, "monomial")?.parse()?;
        put(out, QpPoly(NCPoly::from_monomial(m)))
    })
}

/// Product `a * b` in normal form.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_poly_mul(a: *const QpPoly, b: *const QpPoly, out: *mut *mut QpPoly) -> QpStatus {
    guard(|| {
        let (a, b) = (a.as_ref().ok_or_else(|| null("a"))?, b.as_ref().ok_or_else(|| null("b"))?);
        put(out, QpPoly(a.0.mul(&b.0)))
    })
}

/// Number of monomials, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qp_poly_len(p: *const QpPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Text form, e.g. "t[1,1]*t[2,2] + (-q^-1)*t[1,2]*t[2,1]".
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_poly_to_string(p: *const QpPoly, out: *mut *mut c_char) -> QpStatus {
    guard(|| put_string(out, p.as_ref().ok_or_else(|| null("poly"))?.0.to_string()))
}

/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn qp_poly_free(p: *mut QpPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Expand an element of degree at most `n` in the bitableau basis.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_expand_bitableaux(p: *const QpPoly, n: u8, out: *mut *mut QpExpansion) -> QpStatus {
    guard(|| {
        check_n(n)?;
        let p = p.as_ref().ok_or_else(|| null("poly"))?;
        put(out, QpExpansion::Bitableaux(expand_in_bitableaux(&p.0, n)?))
    })
}

/// Straighten a tabloid such as "15|236" into quantum tableaux.
///
/// # Safety
/// `tabloid` must be nul-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_straighten_flag(tabloid: *const c_char, n: u8, out: *mut *mut QpExpansion) -> QpStatus {
    guard(|| {
        check_n(n)?;
        let d = Tabloid::parse(text(tabloid, "tabloid")?, n)?;
        put(out, QpExpansion::Tableaux(straighten_flag(&d, n)?))
    })
}

/// Number of terms, or 0 for a null handle.
///
/// # Safety
/// `e` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qp_expansion_len(e: *const QpExpansion) -> usize {
    match e.as_ref() {
        Some(QpExpansion::Bitableaux(b)) => b.len(),
        Some(QpExpansion::Tableaux(t)) => t.len(),
        None => 0,
    }
}

/// The terms as a JSON array.
///
/// # Safety
/// `e` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_expansion_to_json(e: *const QpExpansion, out: *mut *mut c_char) -> QpStatus {
    guard(|| {
        let json = match e.as_ref().ok_or_else(|| null("expansion"))? {
            QpExpansion::Bitableaux(b) => b.to_json(),
            QpExpansion::Tableaux(t) => t.to_json(),
        };
        put_string(out, json.to_string())
    })
}

/// Label of the unique term surviving at `q = 0`. Writes null when every
/// coefficient vanishes there.
///
/// # Safety
/// `e` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_expansion_q0_class(e: *const QpExpansion, out: *mut *mut c_char) -> QpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let label = match e.as_ref().ok_or_else(|| null("expansion"))? {
            QpExpansion::Bitableaux(b) => q_zero_class(&b.terms)?.map(|c| c.to_string()),
            QpExpansion::Tableaux(t) => q_zero_class(&t.terms)?.map(|c| c.to_string()),
        };
        match label {
            Some(l) => put_string(out, l),
            None => {
                *out = ptr::null_mut();
                Ok(())
            }
        }
    })
}

/// # Safety
/// `e` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn qp_expansion_free(e: *mut QpExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Graphviz text for the crystal component of highest weight `shape`
/// (comma separated parts, e.g. "2,1").
///
/// # Safety
/// `shape` must be nul-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_crystal_dot(shape: *const c_char, n: u8, out: *mut *mut c_char) -> QpStatus {
    guard(|| {
        check_n(n)?;
        let parts = text(shape, "shape")?
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Failure(QpStatus::Parse, format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        put_string(out, component_for_shape(&Partition::new(parts)?, n)?.to_dot())
    })
}

/// Run a verification suite by name. `n` and `k` of 0 select the suite
/// defaults. `passed` receives 1 when every case passed, 0 otherwise; the
/// report text goes to `report` when it is not null.
///
/// # Safety
/// `suite` must be nul-terminated; `passed` must be valid for writes and
/// `report` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qp_verify(
    suite: *const c_char,
    n: u8,
    k: usize,
    seed: u64,
    samples: usize,
    passed: *mut i32,
    report: *mut *mut c_char,
) -> QpStatus {
    guard(|| {
        if passed.is_null() {
            return Err(null("passed"));
        }
        let suite: Suite = text(suite, "suite")?.parse()?;
        if n != 0 {
            check_n(n)?;
        }
        let cfg = Config { n: (n != 0).then_some(n), k: (k != 0).then_some(k), seed, samples };
        let reports = verify::run(suite, &cfg);
        *passed = i32::from(reports.iter().all(|r| r.passed()));
        if !report.is_null() {
            put_string(report, reports.iter().map(|r| format!("{r}\n")).collect())?;
        }
        Ok(())
    })
}
