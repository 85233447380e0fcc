//! C ABI over the isaonto compiler.
//!
//! Ontologies live behind an opaque `IsaOntology` handle. Every call
//! returns an `IsaStatus`; on failure a message is kept per thread and
//! read with `isa_last_error`. Strings handed out must be released with
//! `isa_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use isaonto::dlmodel::Ontology;
use isaonto::lexicon::Lexicon;
use isaonto::pipeline::{compile, parse_corpus, Options};
use isaonto::reason::Reasoner;
use isaonto::serialize::{parse_dl_text, parse_owl_functional, to_dl_text, to_owl_functional};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Io = 4,
    Inconsistent = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsaFormat {
    DlText = 0,
    OwlFunctional = 1,
}

/// Opaque ontology handle.
pub struct IsaOntology {
    inner: Ontology,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(IsaStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> IsaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IsaStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IsaStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(IsaStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(IsaStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a>(h: *const IsaOntology) -> Result<&'a IsaOntology, Failure> {
    h.as_ref().ok_or_else(|| Failure(IsaStatus::NullPointer, "ontology handle is null".into()))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(IsaStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_handle(out: *mut *mut IsaOntology, inner: Ontology) {
    *out = Box::into_raw(Box::new(IsaOntology { inner }));
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(IsaStatus::NullPointer, "output pointer is null".into()));
    }
    Ok(())
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn isa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call on the same thread.
#[no_mangle]
pub extern "C" fn isa_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Compiles corpus text (one sentence per line) with the bundled lexicon.
///
/// # Safety
/// `corpus` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isa_ontology_from_corpus(corpus: *const c_char, out: *mut *mut IsaOntology) -> IsaStatus {
    guard(|| {
        check_out(out)?;
        let lines = parse_corpus(text(corpus, "corpus")?);
        let compiled = compile(&lines, &Lexicon::bundled(), Options::default());
        put_handle(out, compiled.ontology);
        Ok(())
    })
}

/// Parses an ontology document.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isa_ontology_parse(src: *const c_char, format: IsaFormat, out: *mut *mut IsaOntology) -> IsaStatus {
    guard(|| {
        check_out(out)?;
        let src = text(src, "source")?;
        let parsed = match format {
            IsaFormat::DlText => parse_dl_text(src),
            IsaFormat::OwlFunctional => parse_owl_functional(src),
        };
        put_handle(out, parsed.map_err(|e| Failure(IsaStatus::Parse, e.to_string()))?);
        Ok(())
    })
}

/// Reads and parses an ontology file; `.ofn`/`.owl` are OWL functional
/// syntax, anything else DL text.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isa_ontology_load(path: *const c_char, out: *mut *mut IsaOntology) -> IsaStatus {
    guard(|| {
        check_out(out)?;
        let path = std::path::Path::new(text(path, "path")?);
        let src = std::fs::read_to_string(path).map_err(|e| Failure(IsaStatus::Io, format!("{}: {e}", path.display())))?;
        let onto = isaonto::serialize::parse_by_extension(path, &src).map_err(|e| Failure(IsaStatus::Parse, e.to_string()))?;
        put_handle(out, onto);
        Ok(())
    })
}

/// # Safety
/// `onto` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isa_ontology_free(onto: *mut IsaOntology) {
    if !onto.is_null() {
        drop(Box::from_raw(onto));
    }
}

/// # Safety
/// `onto` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isa_ontology_axiom_count(onto: *const IsaOntology, out: *mut usize) -> IsaStatus {
    guard(|| {
        check_out(out)?;
        *out = handle(onto)?.inner.len();
        Ok(())
    })
}

/// Serializes to the requested format.
///
/// # Safety
/// `onto` must be a live handle; `out` must be writable. The result is
/// released with `isa_string_free`.
#[no_mangle]
pub unsafe extern "C" fn isa_ontology_serialize(onto: *const IsaOntology, format: IsaFormat, out: *mut *mut c_char) -> IsaStatus {
    guard(|| {
        check_out(out)?;
        let o = &handle(onto)?.inner;
        put_string(
            out,
            match format {
                IsaFormat::DlText => to_dl_text(o),
                IsaFormat::OwlFunctional => to_owl_functional(o),
            },
        )
    })
}

fn reasoner(o: &Ontology) -> Result<Reasoner, Failure> {
    Reasoner::new(o).map_err(|e| Failure(IsaStatus::Inconsistent, e.to_string()))
}

/// Classifies and writes the taxonomy as `child<TAB>parent` lines.
///
/// # Safety
/// `onto` must be a live handle; `out` must be writable. The result is
/// released with `isa_string_free`.
#[no_mangle]
pub unsafe extern "C" fn isa_ontology_classify(onto: *const IsaOntology, out: *mut *mut c_char) -> IsaStatus {
    guard(|| {
        check_out(out)?;
        let r = reasoner(&handle(onto)?.inner)?;
        put_string(out, r.classify().to_tsv())
    })
}

/// Writes the consistency report as JSON. Returns `INCONSISTENT` (with
/// the report still written) when the ontology has a clash.
///
/// # Safety
/// `onto` must be a live handle; `out` must be writable. The result is
/// released with `isa_string_free`.
#[no_mangle]
pub unsafe extern "C" fn isa_ontology_check(onto: *const IsaOntology, out: *mut *mut c_char) -> IsaStatus {
    guard(|| {
        check_out(out)?;
        let report = isaonto::reason::check_consistency(&handle(onto)?.inner);
        let json = serde_json::to_string(&report).map_err(|e| Failure(IsaStatus::Internal, e.to_string()))?;
        put_string(out, json)?;
        if report.is_consistent() {
            Ok(())
        } else {
            Err(Failure(IsaStatus::Inconsistent, "ontology is inconsistent".into()))
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
