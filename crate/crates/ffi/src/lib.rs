//! C interface to `hbcells`.
//!
//! Every fallible function returns an [`HbStatus`]; on failure a message is
//! available from [`hb_last_error_message`] on the same thread. Objects are
//! opaque handles released with their `_free` function, and strings returned
//! through `char **` are released with [`hb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hbcells::combinatorics::Partition;
use hbcells::decomposition::{
    cell, cellular_decomposition, fibration_check, plausibility_check, verify_conjecture, Cell,
};
use hbcells::field::PrimeField;
use hbcells::output::{strata_document, to_json, CellList, CheckDocument};
use hbcells::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidPartition = 3,
    InvalidArgument = 4,
    NotPrime = 5,
    IndexOutOfRange = 6,
    ComputationFailed = 7,
    Panic = 8,
}

impl From<&Error> for HbStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidPartition(_) | Error::Parse(_) => HbStatus::InvalidPartition,
            Error::NotPrime(_) => HbStatus::NotPrime,
            Error::EmptyInput(_)
            | Error::Inadmissible { .. }
            | Error::MissingParameter { .. }
            | Error::FieldMismatch(_)
            | Error::StratumRange { .. } => HbStatus::InvalidArgument,
            Error::ZeroPolynomial | Error::DegreeCutoff { .. } | Error::NotZeroDimensional => {
                HbStatus::ComputationFailed
            }
        }
    }
}

/// One cell with its Hilbert-Burch data.
pub struct HbCell(Cell);

/// All cells for one `n`.
pub struct HbDecomposition(CellList);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(HbStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(HbStatus::from(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HbStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HbStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(HbStatus::NullPointer, format!("{what} is null"))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null("handle"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null("string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(HbStatus::InvalidUtf8, e.to_string()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let out = out_ref(out, "output pointer")?;
    let c = CString::new(s).map_err(|e| Failure(HbStatus::ComputationFailed, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse::<Partition>()
        .map_err(|e| Failure(HbStatus::InvalidPartition, e.to_string()))
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn hb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the cell of a partition written like `"1,5,8,10"` or `"[2,4]"`.
///
/// # Safety
/// `m` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_cell_new(m: *const c_char, out: *mut *mut HbCell) -> HbStatus {
    guard(|| {
        let out = out_ref(out, "output pointer")?;
        let m = parse_partition(read_str(m)?)?;
        *out = Box::into_raw(Box::new(HbCell(cell(&m))));
        Ok(())
    })
}

/// # Safety
/// `c` must come from [`hb_cell_new`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn hb_cell_free(c: *mut HbCell) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live cell handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_cell_dim(c: *const HbCell, out: *mut usize) -> HbStatus {
    guard(|| {
        *out_ref(out, "output pointer")? = handle(c)?.0.dim;
        Ok(())
    })
}

/// # Safety
/// `c` must be a live cell handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_cell_dim_hom(c: *const HbCell, out: *mut usize) -> HbStatus {
    guard(|| {
        *out_ref(out, "output pointer")? = handle(c)?.0.dim_hom;
        Ok(())
    })
}

/// Number of columns `t` of the Hilbert-Burch matrix.
///
/// # Safety
/// `c` must be a live cell handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_cell_t(c: *const HbCell, out: *mut usize) -> HbStatus {
    guard(|| {
        *out_ref(out, "output pointer")? = handle(c)?.0.t();
        Ok(())
    })
}

/// Whether the cell is covered by the proven case.
///
/// # Safety
/// `c` must be a live cell handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_cell_proven(c: *const HbCell, out: *mut bool) -> HbStatus {
    guard(|| {
        *out_ref(out, "output pointer")? = handle(c)?.0.proven;
        Ok(())
    })
}

/// Range of minimal numbers of generators over the cell.
///
/// # Safety
/// `c` must be a live cell handle; `lo` and `hi` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_cell_mu_range(c: *const HbCell, lo: *mut usize, hi: *mut usize) -> HbStatus {
    guard(|| {
        let mu = handle(c)?.0.mu_range();
        *out_ref(lo, "lo")? = mu.lo;
        *out_ref(hi, "hi")? = mu.hi;
        Ok(())
    })
}

/// # Safety
/// `c` must be a live cell handle; `out` must be writable. Free the result
/// with [`hb_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hb_cell_to_json(c: *const HbCell, out: *mut *mut c_char) -> HbStatus {
    guard(|| write_string(out, to_json(&handle(c)?.0)))
}

/// Strata of the cell of `m` by number of generators, as JSON.
///
/// # Safety
/// `m` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_strata_to_json(m: *const c_char, out: *mut *mut c_char) -> HbStatus {
    guard(|| {
        let m = parse_partition(read_str(m)?)?;
        write_string(out, to_json(&strata_document(&m)))
    })
}

/// All cells for colength `n >= 1`, sorted by `(dim, m)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_decomposition_new(n: u32, out: *mut *mut HbDecomposition) -> HbStatus {
    guard(|| {
        let out = out_ref(out, "output pointer")?;
        if n == 0 {
            return Err(Failure(HbStatus::InvalidArgument, "n must be at least 1".into()));
        }
        let list = CellList::from(cellular_decomposition(n)?);
        *out = Box::into_raw(Box::new(HbDecomposition(list)));
        Ok(())
    })
}

/// # Safety
/// `d` must come from [`hb_decomposition_new`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn hb_decomposition_free(d: *mut HbDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_decomposition_cell_count(d: *const HbDecomposition, out: *mut usize) -> HbStatus {
    guard(|| {
        *out_ref(out, "output pointer")? = handle(d)?.0.cells.len();
        Ok(())
    })
}

/// A copy of cell `index`; free it with [`hb_cell_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_decomposition_cell(
    d: *const HbDecomposition,
    index: usize,
    out: *mut *mut HbCell,
) -> HbStatus {
    guard(|| {
        let out = out_ref(out, "output pointer")?;
        let cells = &handle(d)?.0.cells;
        let c = cells.get(index).ok_or_else(|| {
            Failure(
                HbStatus::IndexOutOfRange,
                format!("index {index} out of range for {} cells", cells.len()),
            )
        })?;
        *out = Box::into_raw(Box::new(HbCell(c.clone())));
        Ok(())
    })
}

/// Copies up to `len` Betti numbers `b_0, b_2, ...` into `buf` and stores the
/// total count in `needed`. `buf` may be NULL when `len` is 0.
///
/// # Safety
/// `d` must be a live handle; `buf` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn hb_decomposition_betti_numbers(
    d: *const HbDecomposition,
    buf: *mut u64,
    len: usize,
    needed: *mut usize,
) -> HbStatus {
    guard(|| {
        let betti = &handle(d)?.0.betti_numbers;
        *out_ref(needed, "needed")? = betti.len();
        let k = len.min(betti.len());
        if k > 0 {
            if buf.is_null() {
                return Err(null("buffer"));
            }
            std::slice::from_raw_parts_mut(buf, k).copy_from_slice(&betti[..k]);
        }
        Ok(())
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hb_decomposition_to_json(d: *const HbDecomposition, out: *mut *mut c_char) -> HbStatus {
    guard(|| write_string(out, to_json(&handle(d)?.0)))
}

/// Counting checks for colength `n`, plus randomized verification when
/// `trials > 0`. Stores the verdict in `passed`; if `json` is not NULL the
/// full report is written there.
///
/// # Safety
/// `passed` must be writable; `json` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn hb_check(
    n: u32,
    trials: usize,
    prime: u64,
    seed: u64,
    passed: *mut bool,
    json: *mut *mut c_char,
) -> HbStatus {
    guard(|| {
        let passed = out_ref(passed, "passed")?;
        if n == 0 {
            return Err(Failure(HbStatus::InvalidArgument, "n must be at least 1".into()));
        }
        let verification = if trials > 0 {
            Some(verify_conjecture(n, trials, &PrimeField::new(prime)?, seed)?)
        } else {
            None
        };
        let doc = CheckDocument::new(plausibility_check(n)?, fibration_check(n)?, verification);
        *passed = doc.passed;
        if !json.is_null() {
            write_string(json, to_json(&doc))?;
        }
        Ok(())
    })
}
