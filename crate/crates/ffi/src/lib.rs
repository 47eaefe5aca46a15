//! C ABI for `ichom`.
//!
//! Complexes and algebras live behind opaque handles created by the `*_parse`
//! functions and released with the matching `*_free`. Every fallible call
//! returns an [`IchomStatus`]; on failure a message is kept per thread and can
//! be read with [`ichom_last_error`].
//!
//! Rank tables are written into caller buffers. `*len` always receives the
//! number of entries the result needs; when `cap` is too small nothing is
//! written and `ICHOM_STATUS_BUFFER_TOO_SMALL` is returned, so a first call
//! with `cap = 0` sizes the buffer.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ichom::cli::{AlgebraFile, ComplexFile};
use ichom::cyclic::{hh_betti, mixed_from_algebra, FiniteAlgebra, Normalization};
use ichom::exactalg::Betti;
use ichom::stratified::{intersection_betti, Perversity};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IchomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    BufferTooSmall = 5,
    Internal = 6,
    Panic = 7,
}

/// Opaque simplicial complex, with its filtration when the input had one.
pub struct IchomComplex {
    file: ComplexFile,
}

/// Opaque finite-dimensional algebra.
pub struct IchomAlgebra {
    algebra: FiniteAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

struct Failure(IchomStatus, String);

fn fail<T>(status: IchomStatus, msg: impl ToString) -> Result<T, Failure> {
    Err(Failure(status, msg.to_string()))
}

/// Runs `f`, converting errors and panics into a status and the thread's last
/// error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> IchomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            IchomStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            IchomStatus::Panic
        }
    }
}

unsafe fn read_text<'a>(ptr: *const c_char) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return fail(IchomStatus::NullPointer, "text pointer is null");
    }
    CStr::from_ptr(ptr)
        .to_str()
        .or_else(|_| fail(IchomStatus::InvalidUtf8, "input is not valid UTF-8"))
}

unsafe fn handle<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Failure> {
    ptr.as_ref()
        .ok_or_else(|| Failure(IchomStatus::NullPointer, format!("{what} handle is null")))
}

/// Writes ranks in degree order.
unsafe fn write_ranks(b: &Betti, out: *mut usize, cap: usize, len: *mut usize) -> Result<(), Failure> {
    if len.is_null() {
        return fail(IchomStatus::NullPointer, "len pointer is null");
    }
    let values: Vec<usize> = b.values().copied().collect();
    *len = values.len();
    if values.len() > cap {
        return fail(
            IchomStatus::BufferTooSmall,
            format!("need room for {} ranks, got {cap}", values.len()),
        );
    }
    if values.is_empty() {
        return Ok(());
    }
    if out.is_null() {
        return fail(IchomStatus::NullPointer, "output pointer is null");
    }
    std::ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ichom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next `ichom_*` call on the same thread.
#[no_mangle]
pub extern "C" fn ichom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a complex file. On success `*out` owns a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ichom_complex_parse(text: *const c_char, out: *mut *mut IchomComplex) -> IchomStatus {
    guard(|| {
        if out.is_null() {
            return fail(IchomStatus::NullPointer, "out pointer is null");
        }
        *out = std::ptr::null_mut();
        let file = ComplexFile::parse(read_text(text)?).or_else(|e| fail(IchomStatus::Parse, e))?;
        *out = Box::into_raw(Box::new(IchomComplex { file }));
        Ok(())
    })
}

/// Releases a complex handle. Null is ignored.
///
/// # Safety
/// `complex` must come from [`ichom_complex_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ichom_complex_free(complex: *mut IchomComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// Dimension of the complex.
///
/// # Safety
/// `complex` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ichom_complex_dimension(complex: *const IchomComplex, out: *mut usize) -> IchomStatus {
    guard(|| {
        let c = handle(complex, "complex")?;
        if out.is_null() {
            return fail(IchomStatus::NullPointer, "out pointer is null");
        }
        *out = c.file.dimension;
        Ok(())
    })
}

/// Simplicial betti numbers in degrees `0..=dim`.
///
/// # Safety
/// `complex` must be a live handle; `out` must hold `cap` entries; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn ichom_complex_betti(
    complex: *const IchomComplex,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> IchomStatus {
    guard(|| {
        let c = handle(complex, "complex")?;
        let b = c.file.complex.betti().or_else(|e| fail(IchomStatus::Internal, e))?;
        write_ranks(&b, out, cap, len)
    })
}

/// Intersection betti numbers in degrees `0..=n`. `perversity` holds
/// `p_0..p_n` (`perversity_len = n + 1`); null selects the zero perversity.
///
/// # Safety
/// `complex` must be a live handle; `perversity` must hold `perversity_len`
/// values when non-null; `out` must hold `cap` entries; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn ichom_complex_intersection_betti(
    complex: *const IchomComplex,
    perversity: *const i64,
    perversity_len: usize,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> IchomStatus {
    guard(|| {
        let c = handle(complex, "complex")?;
        let f = c
            .file
            .filtration()
            .or_else(|e| fail(IchomStatus::Validation, e))?
            .ok_or_else(|| Failure(IchomStatus::Validation, "filtration required for ih".into()))?;
        let p = if perversity.is_null() {
            Perversity::zero(f.n())
        } else {
            let values = std::slice::from_raw_parts(perversity, perversity_len).to_vec();
            Perversity::new(values).or_else(|e| fail(IchomStatus::Validation, e))?
        };
        let b = intersection_betti(&f, &p).or_else(|e| fail(IchomStatus::Validation, e))?;
        write_ranks(&b, out, cap, len)
    })
}

/// Parses an algebra file. On success `*out` owns a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ichom_algebra_parse(text: *const c_char, out: *mut *mut IchomAlgebra) -> IchomStatus {
    guard(|| {
        if out.is_null() {
            return fail(IchomStatus::NullPointer, "out pointer is null");
        }
        *out = std::ptr::null_mut();
        let file = AlgebraFile::parse(read_text(text)?).or_else(|e| fail(IchomStatus::Parse, e))?;
        *out = Box::into_raw(Box::new(IchomAlgebra { algebra: file.algebra }));
        Ok(())
    })
}

/// Releases an algebra handle. Null is ignored.
///
/// # Safety
/// `algebra` must come from [`ichom_algebra_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ichom_algebra_free(algebra: *mut IchomAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// Hochschild betti numbers in degrees `0..max_degree`, all exact.
///
/// # Safety
/// `algebra` must be a live handle; `out` must hold `cap` entries; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn ichom_algebra_hh(
    algebra: *const IchomAlgebra,
    max_degree: usize,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> IchomStatus {
    guard(|| {
        let a = handle(algebra, "algebra")?;
        let b = hh_betti(&a.algebra, max_degree).or_else(|e| fail(IchomStatus::Validation, e))?;
        write_ranks(&b, out, cap, len)
    })
}

/// Cyclic betti numbers in degrees `0..max_degree`.
///
/// # Safety
/// `algebra` must be a live handle; `out` must hold `cap` entries; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn ichom_algebra_hc(
    algebra: *const IchomAlgebra,
    max_degree: usize,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> IchomStatus {
    guard(|| {
        let a = handle(algebra, "algebra")?;
        if max_degree == 0 {
            return fail(IchomStatus::Validation, "max_degree must be positive");
        }
        let m = mixed_from_algebra(&a.algebra, max_degree, Normalization::Full)
            .or_else(|e| fail(IchomStatus::Internal, e))?;
        write_ranks(&m.cyclic_betti(), out, cap, len)
    })
}
