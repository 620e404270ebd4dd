//! C bindings for the quaternary perfect-code library.
//!
//! The surface mirrors the command-line tool: build family check
//! matrices, verify perfectness, compute rank invariants, canonicalize,
//! and combine codes, all through an opaque matrix handle.  Every
//! fallible call returns a [`Z4pStatus`]; results are written through
//! out-pointers.  Strings returned by the library are heap-allocated and
//! must be released with [`z4p_string_free`], matrices with
//! [`z4p_matrix_free`].
//!
//! The enumeration cap honors the `Z4PERFECT_ENUM_CAP` environment
//! variable when it holds a decimal codeword count; otherwise the
//! default cap applies.

use std::ffi::{c_char, CStr, CString};

use z4perfect::analysis::{classify, code_rank, repetitive_dual_dimension, RankStrategy};
use z4perfect::canonical::canonicalize;
use z4perfect::codes::{CheckPolicy, QuaternaryCode};
use z4perfect::linalg::{build_check_matrix, CheckMatrix};
use z4perfect::product::product_code;
use z4perfect::{Error, Limits};

/// Result of a library call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Z4pStatus {
    /// The call succeeded.
    Ok = 0,
    /// A pointer was null, a parameter was out of range, or an input
    /// could not be parsed.
    InvalidArgument = 1,
    /// The input failed a perfectness requirement.
    VerificationFailed = 2,
    /// The computation would exceed the enumeration or column cap.
    ResourceLimit = 3,
}

/// How perfectness is checked.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Z4pPolicy {
    /// Enumerate when the code fits under the cap, otherwise fall back
    /// to the structural test.
    Auto = 0,
    /// Always enumerate; fails with a resource status above the cap.
    Exhaustive = 1,
    /// Structural test only.
    Structural = 2,
}

/// How the binary rank is computed.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Z4pRankMethod {
    /// Pick by code size.
    Auto = 0,
    /// Enumerate the code and accumulate a basis of its binary image.
    Stream = 1,
    /// Span the image from generator words and pairwise corrections.
    Shortcut = 2,
}

/// An opaque check matrix handle; the kernel of the matrix is the code
/// all other calls operate on.
pub struct Z4pMatrix {
    check: CheckMatrix,
}

fn effective_limits() -> Limits {
    Limits::from_env().unwrap_or_default()
}

fn status_for(err: &Error) -> Z4pStatus {
    match err {
        Error::NotPerfect { .. } => Z4pStatus::VerificationFailed,
        Error::EnumerationCapExceeded { .. } | Error::ColumnCapExceeded { .. } => {
            Z4pStatus::ResourceLimit
        }
        _ => Z4pStatus::InvalidArgument,
    }
}

/// Writes a freshly boxed handle through `out`; `out` must be non-null.
unsafe fn write_matrix(out: *mut *mut Z4pMatrix, check: CheckMatrix) -> Z4pStatus {
    *out = Box::into_raw(Box::new(Z4pMatrix { check }));
    Z4pStatus::Ok
}

/// Writes a heap string through `out`; `out` must be non-null.
unsafe fn write_string(out: *mut *mut c_char, text: String) -> Z4pStatus {
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            Z4pStatus::Ok
        }
        Err(_) => Z4pStatus::InvalidArgument,
    }
}

/// Builds the family check matrix with parameters `r1`, `r2` and stores
/// a handle in `out`.
///
/// # Safety
/// `out` must be a valid pointer; the handle it receives must be
/// released with `z4p_matrix_free`.
#[no_mangle]
pub unsafe extern "C" fn z4p_matrix_family(
    r1: u32,
    r2: u32,
    out: *mut *mut Z4pMatrix,
) -> Z4pStatus {
    if out.is_null() {
        return Z4pStatus::InvalidArgument;
    }
    match build_check_matrix(r1, r2, &effective_limits()) {
        Ok(check) => write_matrix(out, check),
        Err(err) => status_for(&err),
    }
}

/// Parses a check matrix from text, one row of digits `0123` per line;
/// `#` starts a comment and blank lines are skipped.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid
/// pointer; the handle must be released with `z4p_matrix_free`.
#[no_mangle]
pub unsafe extern "C" fn z4p_matrix_parse(
    text: *const c_char,
    out: *mut *mut Z4pMatrix,
) -> Z4pStatus {
    if text.is_null() || out.is_null() {
        return Z4pStatus::InvalidArgument;
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(text) => text,
        Err(_) => return Z4pStatus::InvalidArgument,
    };
    match CheckMatrix::parse_text(text) {
        Ok(check) => write_matrix(out, check),
        Err(err) => status_for(&err),
    }
}

/// Renders the matrix in the same text format `z4p_matrix_parse` reads.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer; the string
/// must be released with `z4p_string_free`.
#[no_mangle]
pub unsafe extern "C" fn z4p_matrix_to_text(
    matrix: *const Z4pMatrix,
    out: *mut *mut c_char,
) -> Z4pStatus {
    if matrix.is_null() || out.is_null() {
        return Z4pStatus::InvalidArgument;
    }
    write_string(out, (*matrix).check.to_text())
}

/// Number of rows; 0 when `matrix` is null.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn z4p_matrix_rows(matrix: *const Z4pMatrix) -> usize {
    if matrix.is_null() {
        return 0;
    }
    (*matrix).check.matrix().row_count()
}

/// Number of columns; 0 when `matrix` is null.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn z4p_matrix_cols(matrix: *const Z4pMatrix) -> usize {
    if matrix.is_null() {
        return 0;
    }
    (*matrix).check.matrix().cols()
}

/// Releases a handle returned by this library; null is ignored.
///
/// # Safety
/// `matrix` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn z4p_matrix_free(matrix: *mut Z4pMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// Checks whether the kernel of `matrix` is a perfect code and writes
/// the verdict to `out_perfect`.
///
/// # Safety
/// `matrix` must be a live handle and `out_perfect` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn z4p_is_perfect(
    matrix: *const Z4pMatrix,
    policy: Z4pPolicy,
    out_perfect: *mut bool,
) -> Z4pStatus {
    if matrix.is_null() || out_perfect.is_null() {
        return Z4pStatus::InvalidArgument;
    }
    let policy = match policy {
        Z4pPolicy::Auto => CheckPolicy::Auto,
        Z4pPolicy::Exhaustive => CheckPolicy::Exhaustive,
        Z4pPolicy::Structural => CheckPolicy::Structural,
    };
    let code = QuaternaryCode::from_check((*matrix).check.clone());
    match code.is_perfect(policy, &effective_limits()) {
        Ok(status) => {
            *out_perfect = status.perfect;
            Z4pStatus::Ok
        }
        Err(err) => status_for(&err),
    }
}

/// Computes the GF(2) rank of the kernel's binary image and the
/// dimension of the dual's repetitive subspace.
///
/// # Safety
/// `matrix` must be a live handle; `out_rank` and `out_rep_dual_dim`
/// must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn z4p_rank(
    matrix: *const Z4pMatrix,
    method: Z4pRankMethod,
    out_rank: *mut usize,
    out_rep_dual_dim: *mut usize,
) -> Z4pStatus {
    if matrix.is_null() || out_rank.is_null() || out_rep_dual_dim.is_null() {
        return Z4pStatus::InvalidArgument;
    }
    let strategy = match method {
        Z4pRankMethod::Auto => RankStrategy::Auto,
        Z4pRankMethod::Stream => RankStrategy::Stream,
        Z4pRankMethod::Shortcut => RankStrategy::Shortcut,
    };
    let limits = effective_limits();
    let code = QuaternaryCode::from_check((*matrix).check.clone());
    let rank = match code_rank(&code, strategy, &limits) {
        Ok((rank, _)) => rank,
        Err(err) => return status_for(&err),
    };
    let rep = match repetitive_dual_dimension(&code, strategy, &limits) {
        Ok(rep) => rep,
        Err(err) => return status_for(&err),
    };
    *out_rank = rank;
    *out_rep_dual_dim = rep;
    Z4pStatus::Ok
}

/// Writes the classification table for binary length `2^k` as a JSON
/// object with fields `k`, `count`, `entries`, and `method`.
///
/// # Safety
/// `out` must be a valid pointer; the string must be released with
/// `z4p_string_free`.
#[no_mangle]
pub unsafe extern "C" fn z4p_classify_json(k: u32, out: *mut *mut c_char) -> Z4pStatus {
    if out.is_null() {
        return Z4pStatus::InvalidArgument;
    }
    match classify(k, &effective_limits()) {
        Ok((report, method)) => {
            let mut value = serde_json::to_value(&report).unwrap();
            value["method"] = serde_json::Value::String(method.to_string());
            write_string(out, value.to_string())
        }
        Err(err) => status_for(&err),
    }
}

/// Canonicalizes a perfect check matrix onto the family and writes the
/// transcript as JSON: `{"r1": …, "r2": …, "signs": "+-…",
/// "permutation": […]}`.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer; the string
/// must be released with `z4p_string_free`.
#[no_mangle]
pub unsafe extern "C" fn z4p_canonicalize_json(
    matrix: *const Z4pMatrix,
    out: *mut *mut c_char,
) -> Z4pStatus {
    if matrix.is_null() || out.is_null() {
        return Z4pStatus::InvalidArgument;
    }
    match canonicalize(&(*matrix).check, &effective_limits()) {
        Ok(form) => write_string(out, serde_json::to_string(&form).unwrap()),
        Err(err) => status_for(&err),
    }
}

/// Builds the product of the kernels of `left` and `right` and stores a
/// handle to its check matrix in `out`.
///
/// # Safety
/// `left` and `right` must be live handles and `out` a valid pointer;
/// the handle must be released with `z4p_matrix_free`.
#[no_mangle]
pub unsafe extern "C" fn z4p_product(
    left: *const Z4pMatrix,
    right: *const Z4pMatrix,
    out: *mut *mut Z4pMatrix,
) -> Z4pStatus {
    if left.is_null() || right.is_null() || out.is_null() {
        return Z4pStatus::InvalidArgument;
    }
    let limits = effective_limits();
    let left = QuaternaryCode::from_check((*left).check.clone());
    let right = QuaternaryCode::from_check((*right).check.clone());
    match product_code(&left, &right, &limits) {
        Ok(product) => write_matrix(out, product.check().unwrap().clone()),
        Err(err) => status_for(&err),
    }
}

/// Writes the generator matrix of the dual code as text, one row per
/// line.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer; the string
/// must be released with `z4p_string_free`.
#[no_mangle]
pub unsafe extern "C" fn z4p_dual_generators_text(
    matrix: *const Z4pMatrix,
    out: *mut *mut c_char,
) -> Z4pStatus {
    if matrix.is_null() || out.is_null() {
        return Z4pStatus::InvalidArgument;
    }
    let code = QuaternaryCode::from_check((*matrix).check.clone());
    match code.dual_code() {
        Ok(dual) => write_string(out, dual.generator().matrix().to_text()),
        Err(err) => status_for(&err),
    }
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `text` must be null or a string not yet freed.
#[no_mangle]
pub unsafe extern "C" fn z4p_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
