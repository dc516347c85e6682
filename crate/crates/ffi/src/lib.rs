//! C ABI over `posetkit`.
//!
//! Posets cross the boundary as opaque [`PosetkitPoset`] handles. Every
//! fallible function returns a [`PosetkitStatus`]; on failure the message is
//! available from [`posetkit_last_error`] on the same thread. Counts are
//! returned as newly allocated decimal strings that the caller releases with
//! [`posetkit_string_free`]. Element numbers are 1-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use posetkit::{BigCount, Error, Poset};

/// Result codes. The first four match the exit codes of the command-line tool.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PosetkitStatus {
    Ok = 0,
    /// Malformed input text or relation list, including cycles.
    Parse = 1,
    NotTwoDimensional = 2,
    CapExceeded = 3,
    /// A null pointer or out-of-range argument.
    InvalidArgument = 4,
    Internal = 5,
}

/// Opaque poset handle.
pub struct PosetkitPoset(Poset);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> PosetkitStatus {
    match e {
        Error::Parse { .. } | Error::CycleDetected { .. } | Error::IndexOutOfRange { .. } => PosetkitStatus::Parse,
        Error::NotTwoDimensional => PosetkitStatus::NotTwoDimensional,
        Error::CapExceeded { .. } => PosetkitStatus::CapExceeded,
        _ => PosetkitStatus::Internal,
    }
}

/// Runs `f`, recording any error or panic as the last error.
fn guard(f: impl FnOnce() -> Result<(), (PosetkitStatus, String)>) -> PosetkitStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            PosetkitStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            PosetkitStatus::Internal
        }
    }
}

fn lib(e: Error) -> (PosetkitStatus, String) {
    (status_of(&e), e.to_string())
}

fn invalid(msg: &str) -> (PosetkitStatus, String) {
    (PosetkitStatus::InvalidArgument, msg.to_string())
}

/// # Safety
/// `out` must be null or valid for one pointer write.
unsafe fn write_count(out: *mut *mut c_char, v: BigCount) -> Result<(), (PosetkitStatus, String)> {
    if out.is_null() {
        return Err(invalid("null output pointer"));
    }
    let s = CString::new(v.to_string()).expect("decimal digits contain no NUL");
    *out = s.into_raw();
    Ok(())
}

/// # Safety
/// `p` must be null or a live handle from this library.
unsafe fn poset<'a>(p: *const PosetkitPoset) -> Result<&'a Poset, (PosetkitStatus, String)> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| invalid("null poset handle"))
}

/// Parses the line-based text format into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for one
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn posetkit_poset_parse(text: *const c_char, out: *mut *mut PosetkitPoset) -> PosetkitStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(invalid("null argument"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|_| (PosetkitStatus::Parse, "input is not UTF-8".into()))?;
        let p = Poset::parse(text).map_err(lib)?;
        *out = Box::into_raw(Box::new(PosetkitPoset(p)));
        Ok(())
    })
}

/// Builds a poset on `n` elements from `count` pairs `pairs[2k] < pairs[2k+1]`
/// (1-based), closing transitively.
///
/// # Safety
/// `pairs` must point to `2 * count` readable values (may be null when
/// `count` is 0); `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn posetkit_poset_from_relations(
    n: usize,
    pairs: *const usize,
    count: usize,
    out: *mut *mut PosetkitPoset,
) -> PosetkitStatus {
    guard(|| {
        if out.is_null() || (pairs.is_null() && count > 0) {
            return Err(invalid("null argument"));
        }
        let flat = if count == 0 { &[][..] } else { std::slice::from_raw_parts(pairs, 2 * count) };
        let rel: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let p = Poset::from_one_based(n, &rel).map_err(lib)?;
        *out = Box::into_raw(Box::new(PosetkitPoset(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn posetkit_poset_free(p: *mut PosetkitPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of elements; 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn posetkit_poset_len(p: *const PosetkitPoset) -> usize {
    p.as_ref().map_or(0, |h| h.0.len())
}

/// Largest `n` accepted by [`posetkit_led_boolean`].
pub const POSETKIT_MAX_BOOLEAN_N: u32 = 10_000;

/// `led(B_n)` as a decimal string, for `n <= POSETKIT_MAX_BOOLEAN_N`.
///
/// # Safety
/// `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn posetkit_led_boolean(n: u32, out: *mut *mut c_char) -> PosetkitStatus {
    guard(|| {
        if n > POSETKIT_MAX_BOOLEAN_N {
            return Err(invalid("n is too large"));
        }
        write_count(out, posetkit::led_boolean(n))
    })
}

/// `led(D_P)` for a 2-dimensional poset.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn posetkit_led_downset(p: *const PosetkitPoset, out: *mut *mut c_char) -> PosetkitStatus {
    guard(|| {
        let b = posetkit::led_downset(poset(p)?).map_err(lib)?;
        write_count(out, b.led)
    })
}

/// Number of antichains of a 2-dimensional poset, the empty one included.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn posetkit_count_antichains(p: *const PosetkitPoset, out: *mut *mut c_char) -> PosetkitStatus {
    guard(|| {
        let p = poset(p)?;
        let sigma = posetkit::realizer(p).map_err(lib)?.sigma;
        let t = posetkit::count_antichains(p, &sigma).map_err(lib)?;
        write_count(out, t.total)
    })
}

/// `led` of the downset lattice of disjoint chains of the given lengths.
///
/// # Safety
/// `lengths` must point to `count` readable values (may be null when
/// `count` is 0); `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn posetkit_led_chain_union(
    lengths: *const usize,
    count: usize,
    out: *mut *mut c_char,
) -> PosetkitStatus {
    guard(|| {
        if lengths.is_null() && count > 0 {
            return Err(invalid("null lengths"));
        }
        let l = if count == 0 { &[][..] } else { std::slice::from_raw_parts(lengths, count) };
        write_count(out, posetkit::led_chain_union(l))
    })
}

/// Writes the two members of the realizer of a 2-dimensional poset as
/// 1-based element numbers.
///
/// # Safety
/// `p` must be a live handle; `sigma` and `sigma_bar` must each be valid for
/// `posetkit_poset_len(p)` writes.
#[no_mangle]
pub unsafe extern "C" fn posetkit_realizer(
    p: *const PosetkitPoset,
    sigma: *mut usize,
    sigma_bar: *mut usize,
) -> PosetkitStatus {
    guard(|| {
        let p = poset(p)?;
        if !p.is_empty() && (sigma.is_null() || sigma_bar.is_null()) {
            return Err(invalid("null output buffer"));
        }
        let r = posetkit::realizer(p).map_err(lib)?;
        for (buf, ext) in [(sigma, &r.sigma), (sigma_bar, &r.sigma_bar)] {
            for (i, k) in ext.to_one_based().into_iter().enumerate() {
                *buf.add(i) = k;
            }
        }
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn posetkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn posetkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn posetkit_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

