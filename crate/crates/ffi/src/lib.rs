//! C interface to `shadow-census`.
//!
//! Objects cross the boundary as opaque handles created by `*_parse` or
//! `*_enumerate` style calls and released by the matching `*_free`. Every
//! call returns a [`ShcStatus`]; on failure a description is available from
//! [`shc_last_error_message`] on the same thread. Strings returned to the
//! caller are NUL-terminated and must be released with [`shc_string_free`].
//!
//! Panics never unwind into C: they are caught and reported as
//! [`ShcStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use shadow_census::cancellation::{annotate_catalog, certify_ball, Certification};
use shadow_census::census::{classify_catalog, enumerate_special, Catalog, EnumerateOptions};
use shadow_census::encoding::{acyclic_encoding_check, reconstruct_from_encoding, retraction_check, EncodingGraph};
use shadow_census::io::{parse_catalog, parse_encoding, parse_model, render_catalog, render_model};
use shadow_census::polyhedron::{homology_profile, PolyhedronModel};
use shadow_census::Error;

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    Parse = 3,
    /// Unsupported format version in a parsed document.
    Version = 4,
    Precondition = 5,
    Structural = 6,
    InvariantViolation = 7,
    Overflow = 8,
    ResourceLimit = 9,
    Internal = 10,
    /// The library panicked; the call had no effect on its outputs.
    Panic = 11,
}

/// A census catalog.
pub struct ShcCatalog(Catalog);

/// A polyhedron model.
pub struct ShcModel(PolyhedronModel);

/// A graph encoding of a simple polyhedron without true vertices.
pub struct ShcEncoding(EncodingGraph);

/// Integral homology summary; torsion coefficients are read with
/// [`shc_model_torsion`].
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ShcHomology {
    pub betti: [usize; 3],
    pub torsion_1_count: usize,
    pub torsion_2_count: usize,
    pub acyclic: bool,
}

/// Outcome of [`shc_encoding_check`].
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ShcEncodingReport {
    /// No structural violation was found.
    pub clean: bool,
    /// The reconstructed polyhedron is acyclic.
    pub acyclic: bool,
    pub violation_count: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

type Failure = (ShcStatus, String);

fn set_last_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("interior NULs removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn from_error(e: Error) -> Failure {
    let status = match &e {
        Error::Structural(_) => ShcStatus::Structural,
        Error::Precondition(_) => ShcStatus::Precondition,
        Error::InvariantViolation(_) => ShcStatus::InvariantViolation,
        Error::Internal(_) => ShcStatus::Internal,
        Error::Overflow => ShcStatus::Overflow,
        Error::ResourceLimit(_) => ShcStatus::ResourceLimit,
        Error::Parse { .. } => ShcStatus::Parse,
        Error::Version { .. } => ShcStatus::Version,
    };
    (status, e.to_string())
}

/// Runs `body`, records its error message and converts panics.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ShcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error(None);
            ShcStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_last_error(Some(message));
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| (*s).to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(Some(format!("panic: {message}")));
            ShcStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    (ShcStatus::NullPointer, format!("`{what}` is null"))
}

/// # Safety
/// `p` is null or points to a live `T`.
unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// # Safety
/// `p` is null or points to writable storage for a `T`.
unsafe fn store<T>(p: *mut T, what: &str, value: T) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

/// # Safety
/// `s` is null or a NUL-terminated string.
unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| (ShcStatus::InvalidUtf8, format!("`{what}`: {e}")))
}

fn owned_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| (ShcStatus::Internal, "output contains a NUL byte".into()))
}

/// Copies up to `capacity` values into `buf` and reports the full length.
///
/// # Safety
/// `buf` is valid for `capacity` writes, or null with `capacity == 0`.
unsafe fn fill<T: Copy>(values: &[T], buf: *mut T, capacity: usize, len_out: *mut usize) -> Result<(), Failure> {
    if buf.is_null() && capacity > 0 {
        return Err(null("buf"));
    }
    let n = values.len().min(capacity);
    if n > 0 {
        ptr::copy_nonoverlapping(values.as_ptr(), buf, n);
    }
    store(len_out, "len_out", values.len())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn shc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null after a
/// successful call. The pointer stays valid until the next call on this
/// thread.
#[no_mangle]
pub extern "C" fn shc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn shc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// Catalogs
// ---------------------------------------------------------------------------

/// Enumerates the census for `vertices` true vertices with `jobs` worker
/// threads (0 means 1) and runs the canceling-pair search on every record.
///
/// # Safety
/// `out` points to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn shc_catalog_enumerate(vertices: u32, jobs: u32, out: *mut *mut ShcCatalog) -> ShcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let options = EnumerateOptions {
            jobs: jobs.max(1) as usize,
            ..EnumerateOptions::default()
        };
        let mut catalog = enumerate_special(vertices as usize, &options).map_err(from_error)?;
        annotate_catalog(&mut catalog).map_err(from_error)?;
        store(out, "out", Box::into_raw(Box::new(ShcCatalog(catalog))))
    })
}

/// Parses a catalog document.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_catalog_parse(document: *const c_char, out: *mut *mut ShcCatalog) -> ShcStatus {
    guard(|| {
        let catalog = parse_catalog(text(document, "document")?).map_err(from_error)?;
        store(out, "out", Box::into_raw(Box::new(ShcCatalog(catalog))))
    })
}

/// Renders a catalog document into a new string.
///
/// # Safety
/// `catalog` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_catalog_render(catalog: *const ShcCatalog, out: *mut *mut c_char) -> ShcStatus {
    guard(|| {
        let c = deref(catalog, "catalog")?;
        store(out, "out", owned_string(render_catalog(&c.0))?)
    })
}

/// # Safety
/// `catalog` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_catalog_record_count(catalog: *const ShcCatalog, out: *mut usize) -> ShcStatus {
    guard(|| store(out, "out", deref(catalog, "catalog")?.0.records.len()))
}

/// Number of classes by region count; entry `i` counts classes with
/// `i + 1` regions.
///
/// # Safety
/// `catalog` is a live handle; `buf` is valid for `capacity` writes;
/// `len_out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_catalog_histogram(
    catalog: *const ShcCatalog,
    buf: *mut usize,
    capacity: usize,
    len_out: *mut usize,
) -> ShcStatus {
    guard(|| fill(&deref(catalog, "catalog")?.0.histogram, buf, capacity, len_out))
}

/// # Safety
/// `catalog` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_catalog_acyclic_count(catalog: *const ShcCatalog, out: *mut usize) -> ShcStatus {
    guard(|| {
        let report = classify_catalog(&deref(catalog, "catalog")?.0).map_err(from_error)?;
        store(out, "out", report.acyclic)
    })
}

/// The closed special polyhedron of record `index`.
///
/// # Safety
/// `catalog` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_catalog_model(
    catalog: *const ShcCatalog,
    index: usize,
    out: *mut *mut ShcModel,
) -> ShcStatus {
    guard(|| {
        let c = &deref(catalog, "catalog")?.0;
        let record = c.records.get(index).ok_or_else(|| {
            (
                ShcStatus::Precondition,
                format!("index {index} outside a catalog of {} records", c.records.len()),
            )
        })?;
        store(out, "out", Box::into_raw(Box::new(ShcModel(record.model()))))
    })
}

/// Releases a catalog. Null is ignored.
///
/// # Safety
/// `catalog` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn shc_catalog_free(catalog: *mut ShcCatalog) {
    if !catalog.is_null() {
        drop(Box::from_raw(catalog));
    }
}

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

/// Parses a model document.
///
/// # Safety
/// `document` is a NUL-terminated string; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_model_parse(document: *const c_char, out: *mut *mut ShcModel) -> ShcStatus {
    guard(|| {
        let model = parse_model(text(document, "document")?).map_err(from_error)?;
        store(out, "out", Box::into_raw(Box::new(ShcModel(model))))
    })
}

/// # Safety
/// `model` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_model_render(model: *const ShcModel, out: *mut *mut c_char) -> ShcStatus {
    guard(|| {
        let m = deref(model, "model")?;
        store(out, "out", owned_string(render_model(&m.0))?)
    })
}

/// # Safety
/// `model` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_model_homology(model: *const ShcModel, out: *mut ShcHomology) -> ShcStatus {
    guard(|| {
        let h = homology_profile(&deref(model, "model")?.0).map_err(from_error)?;
        store(
            out,
            "out",
            ShcHomology {
                betti: h.betti,
                torsion_1_count: h.torsion_1.len(),
                torsion_2_count: h.torsion_2.len(),
                acyclic: h.is_acyclic(),
            },
        )
    })
}

/// Torsion coefficients of `H_degree` for degree 1 or 2.
///
/// # Safety
/// `model` is a live handle; `buf` is valid for `capacity` writes;
/// `len_out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_model_torsion(
    model: *const ShcModel,
    degree: u32,
    buf: *mut u64,
    capacity: usize,
    len_out: *mut usize,
) -> ShcStatus {
    guard(|| {
        let h = homology_profile(&deref(model, "model")?.0).map_err(from_error)?;
        let values = match degree {
            1 => h.torsion_1,
            2 => h.torsion_2,
            _ => return Err((ShcStatus::Precondition, format!("no torsion in degree {degree}"))),
        };
        fill(&values, buf, capacity, len_out)
    })
}

/// Whether the model is certified as a shadow of the 4-ball. When it is not,
/// the reasons are available from [`shc_last_error_message`] even though the
/// status is `Ok`.
///
/// # Safety
/// `model` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_model_certify(model: *const ShcModel, out: *mut bool) -> ShcStatus {
    let mut reasons = None;
    let status = guard(|| {
        let certification = certify_ball(&deref(model, "model")?.0).map_err(from_error)?;
        let certified = match certification {
            Certification::Certified(_) => true,
            Certification::Failed(failures) => {
                reasons = Some(failures.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "));
                false
            }
        };
        store(out, "out", certified)
    });
    if status == ShcStatus::Ok && reasons.is_some() {
        set_last_error(reasons);
    }
    status
}

/// Releases a model. Null is ignored.
///
/// # Safety
/// `model` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn shc_model_free(model: *mut ShcModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

// ---------------------------------------------------------------------------
// Encodings
// ---------------------------------------------------------------------------

/// Parses an encoding document.
///
/// # Safety
/// `document` is a NUL-terminated string; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_encoding_parse(document: *const c_char, out: *mut *mut ShcEncoding) -> ShcStatus {
    guard(|| {
        let g = parse_encoding(text(document, "document")?).map_err(from_error)?;
        store(out, "out", Box::into_raw(Box::new(ShcEncoding(g))))
    })
}

/// Builds the polyhedron described by an encoding.
///
/// # Safety
/// `encoding` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_encoding_reconstruct(encoding: *const ShcEncoding, out: *mut *mut ShcModel) -> ShcStatus {
    guard(|| {
        let model = reconstruct_from_encoding(&deref(encoding, "encoding")?.0).map_err(from_error)?;
        store(out, "out", Box::into_raw(Box::new(ShcModel(model))))
    })
}

/// Whether the graph's first mod-2 homology injects into that of the
/// reconstructed polyhedron.
///
/// # Safety
/// `encoding` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_encoding_retraction_check(encoding: *const ShcEncoding, out: *mut bool) -> ShcStatus {
    guard(|| {
        let g = &deref(encoding, "encoding")?.0;
        let model = reconstruct_from_encoding(g).map_err(from_error)?;
        store(out, "out", retraction_check(g, &model).map_err(from_error)?)
    })
}

/// Structural checks for an encoding with exactly one boundary vertex.
///
/// # Safety
/// `encoding` is a live handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn shc_encoding_check(encoding: *const ShcEncoding, out: *mut ShcEncodingReport) -> ShcStatus {
    guard(|| {
        let report = acyclic_encoding_check(&deref(encoding, "encoding")?.0).map_err(from_error)?;
        store(
            out,
            "out",
            ShcEncodingReport {
                clean: report.is_clean(),
                acyclic: report.acyclic(),
                violation_count: report.violations.len(),
            },
        )
    })
}

/// Releases an encoding. Null is ignored.
///
/// # Safety
/// `encoding` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn shc_encoding_free(encoding: *mut ShcEncoding) {
    if !encoding.is_null() {
        drop(Box::from_raw(encoding));
    }
}
