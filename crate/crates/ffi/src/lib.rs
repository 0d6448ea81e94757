//! C interface to the chipfire engine.
//!
//! Objects are opaque handles created by `*_new` functions and released with
//! the matching `*_free`. Every fallible function returns a [`ChipfireStatus`];
//! on failure [`chipfire_last_error`] describes the problem for the calling
//! thread. Chip counts cross the boundary as `int64_t` arrays of length 5 and
//! are limited to ±10⁹ on input.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chipfire::engine::{
    cmd_apply, cmd_canonicalize, cmd_equivalent, cmd_group, protocol, validate_config, EngineError,
};
use chipfire::linalg::{GaussInt, Int, IntMatrix};
use chipfire::matroid::RegularMatroid;
use chipfire::r10::{r10_matroid, FiringMove, MoveKind, PentagonConfig, NODES};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChipfireStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotTotallyUnimodular = 3,
    Math = 4,
    Overflow = 5,
    BufferTooSmall = 6,
    Internal = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChipfireMoveKind {
    A = 0,
    B = 1,
    NegA = 2,
    NegB = 3,
}

impl From<ChipfireMoveKind> for MoveKind {
    fn from(k: ChipfireMoveKind) -> Self {
        match k {
            ChipfireMoveKind::A => MoveKind::A,
            ChipfireMoveKind::B => MoveKind::B,
            ChipfireMoveKind::NegA => MoveKind::NegA,
            ChipfireMoveKind::NegB => MoveKind::NegB,
        }
    }
}

/// A chip configuration on the five pentagon nodes.
pub struct ChipfireConfig(PentagonConfig);

/// A regular matroid given by a totally unimodular standard representation.
pub struct ChipfireMatroid(RegularMatroid);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(ChipfireStatus, String);

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let status = match e {
            EngineError::Parse(_) | EngineError::Validation(_) | EngineError::UnknownOp(_) => {
                ChipfireStatus::InvalidArgument
            }
            EngineError::NotTotallyUnimodular(_) => ChipfireStatus::NotTotallyUnimodular,
            EngineError::Math(_) => ChipfireStatus::Math,
            EngineError::Overflow(_) => ChipfireStatus::Overflow,
            EngineError::Internal(_) => ChipfireStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(ChipfireStatus::NullPointer, format!("`{what}` is null"))
}

fn set_last_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ChipfireStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            ChipfireStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(Some(msg));
            status
        }
        Err(_) => {
            set_last_error(Some("panic inside chipfire".into()));
            ChipfireStatus::Panic
        }
    }
}

unsafe fn read5<'a>(p: *const i64, what: &str) -> Result<&'a [i64; NODES], Failure> {
    p.cast::<[i64; NODES]>().as_ref().ok_or_else(|| null(what))
}

fn narrow(x: Int) -> Result<i64, Failure> {
    i64::try_from(x).map_err(|_| Failure(ChipfireStatus::Overflow, format!("{x} does not fit in int64_t")))
}

unsafe fn write5(p: *mut i64, values: impl IntoIterator<Item = Int>) -> Result<(), Failure> {
    if p.is_null() {
        return Ok(());
    }
    let narrowed: Vec<i64> = values.into_iter().map(narrow).collect::<Result<_, _>>()?;
    ptr::copy_nonoverlapping(narrowed.as_ptr(), p, NODES);
    Ok(())
}

unsafe fn write_gauss(re: *mut i64, im: *mut i64, z: &[GaussInt; NODES]) -> Result<(), Failure> {
    write5(re, z.iter().map(|z| z.re))?;
    write5(im, z.iter().map(|z| z.im))
}

/// Message for the last failed call on this thread, or null after a
/// successful one. Valid until the next chipfire call on the same thread.
#[no_mangle]
pub extern "C" fn chipfire_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn chipfire_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates a configuration from real and imaginary chip counts (5 each).
#[no_mangle]
pub unsafe extern "C" fn chipfire_config_new(
    re: *const i64,
    im: *const i64,
    out: *mut *mut ChipfireConfig,
) -> ChipfireStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let (re, im) = (read5(re, "re")?, read5(im, "im")?);
        let c = PentagonConfig(std::array::from_fn(|k| GaussInt::new(re[k].into(), im[k].into())));
        validate_config(&c)?;
        *out = Box::into_raw(Box::new(ChipfireConfig(c)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn chipfire_config_free(config: *mut ChipfireConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

/// Copies the chip counts out; either output may be null.
#[no_mangle]
pub unsafe extern "C" fn chipfire_config_get(
    config: *const ChipfireConfig,
    re_out: *mut i64,
    im_out: *mut i64,
) -> ChipfireStatus {
    guard(|| {
        let c = config.as_ref().ok_or_else(|| null("config"))?;
        write_gauss(re_out, im_out, &c.0 .0)
    })
}

/// Fires `kind` at `node` in place.
#[no_mangle]
pub unsafe extern "C" fn chipfire_config_apply(
    config: *mut ChipfireConfig,
    node: usize,
    kind: ChipfireMoveKind,
) -> ChipfireStatus {
    guard(|| {
        let c = config.as_mut().ok_or_else(|| null("config"))?;
        let m = FiringMove::new(node, kind.into()).map_err(EngineError::from)?;
        c.0 = cmd_apply(&c.0, m)?;
        Ok(())
    })
}

/// Sum of real and imaginary chips over all nodes.
#[no_mangle]
pub unsafe extern "C" fn chipfire_config_total_chips(
    config: *const ChipfireConfig,
    out: *mut i64,
) -> ChipfireStatus {
    guard(|| {
        let c = config.as_ref().ok_or_else(|| null("config"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = narrow(c.0.total_chips())?;
        Ok(())
    })
}

/// Canonical representative (5 real counts) and, if the certificate outputs
/// are non-null, the firings taking `config` to it.
#[no_mangle]
pub unsafe extern "C" fn chipfire_canonicalize(
    config: *const ChipfireConfig,
    canonical_out: *mut i64,
    cert_re_out: *mut i64,
    cert_im_out: *mut i64,
) -> ChipfireStatus {
    guard(|| {
        let c = config.as_ref().ok_or_else(|| null("config"))?;
        if canonical_out.is_null() {
            return Err(null("canonical_out"));
        }
        let out = cmd_canonicalize(&c.0)?;
        write5(canonical_out, out.canonical.0)?;
        write_gauss(cert_re_out, cert_im_out, &out.certificate.0)
    })
}

/// Decides whether `from` and `to` are firing equivalent. When they are and
/// the certificate outputs are non-null, writes `x` with `K̄·x = to − from`.
#[no_mangle]
pub unsafe extern "C" fn chipfire_solve_firings(
    from: *const ChipfireConfig,
    to: *const ChipfireConfig,
    equivalent_out: *mut bool,
    cert_re_out: *mut i64,
    cert_im_out: *mut i64,
) -> ChipfireStatus {
    guard(|| {
        let a = from.as_ref().ok_or_else(|| null("from"))?;
        let b = to.as_ref().ok_or_else(|| null("to"))?;
        let eq = equivalent_out.as_mut().ok_or_else(|| null("equivalent_out"))?;
        let out = cmd_equivalent(&a.0, &b.0)?;
        *eq = out.equivalent;
        if let Some(x) = out.certificate {
            write_gauss(cert_re_out, cert_im_out, &x.0)?;
        }
        Ok(())
    })
}

/// Builds the matroid represented by `[I | D]` from the row-major
/// `rows × cols` matrix `D`, checking total unimodularity.
#[no_mangle]
pub unsafe extern "C" fn chipfire_matroid_new(
    rows: usize,
    cols: usize,
    d: *const i64,
    out: *mut *mut ChipfireMatroid,
) -> ChipfireStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let len = rows
            .checked_mul(cols)
            .ok_or_else(|| Failure(ChipfireStatus::InvalidArgument, "matrix too large".into()))?;
        let entries: Vec<Int> = if len == 0 {
            Vec::new()
        } else {
            if d.is_null() {
                return Err(null("d"));
            }
            std::slice::from_raw_parts(d, len).iter().map(|&x| x.into()).collect()
        };
        let m = IntMatrix::new(rows, cols, entries).map_err(EngineError::from)?;
        let m = RegularMatroid::new(m).map_err(EngineError::from)?;
        *out = Box::into_raw(Box::new(ChipfireMatroid(m)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn chipfire_matroid_new_r10(out: *mut *mut ChipfireMatroid) -> ChipfireStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = Box::into_raw(Box::new(ChipfireMatroid(r10_matroid())));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn chipfire_matroid_free(matroid: *mut ChipfireMatroid) {
    if !matroid.is_null() {
        drop(Box::from_raw(matroid));
    }
}

/// Nontrivial invariant factors of the sandpile group and its order.
/// `*len_out` always receives the number of factors; if it exceeds
/// `capacity` nothing is written to `factors_out` and the call returns
/// `BUFFER_TOO_SMALL`.
#[no_mangle]
pub unsafe extern "C" fn chipfire_sandpile_group(
    matroid: *const ChipfireMatroid,
    factors_out: *mut i64,
    capacity: usize,
    len_out: *mut usize,
    order_out: *mut i64,
) -> ChipfireStatus {
    guard(|| {
        let m = matroid.as_ref().ok_or_else(|| null("matroid"))?;
        let len = len_out.as_mut().ok_or_else(|| null("len_out"))?;
        let g = cmd_group(&m.0)?;
        *len = g.invariant_factors.len();
        if let Some(o) = order_out.as_mut() {
            *o = narrow(g.order)?;
        }
        if g.invariant_factors.len() > capacity {
            return Err(Failure(
                ChipfireStatus::BufferTooSmall,
                format!("{} invariant factors, capacity {capacity}", g.invariant_factors.len()),
            ));
        }
        if !g.invariant_factors.is_empty() {
            if factors_out.is_null() {
                return Err(null("factors_out"));
            }
            for (k, &d) in g.invariant_factors.iter().enumerate() {
                *factors_out.add(k) = narrow(d)?;
            }
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn chipfire_count_bases(
    matroid: *const ChipfireMatroid,
    out: *mut u64,
) -> ChipfireStatus {
    guard(|| {
        let m = matroid.as_ref().ok_or_else(|| null("matroid"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let bases = m.0.enumerate_bases().map_err(EngineError::from)?;
        *out = bases.len() as u64;
        Ok(())
    })
}

/// Runs one JSON protocol request and returns the JSON response line. Never
/// returns null for a non-null request; release the result with
/// [`chipfire_string_free`].
#[no_mangle]
pub unsafe extern "C" fn chipfire_engine_request(request: *const c_char) -> *mut c_char {
    let run = || -> Result<String, Failure> {
        if request.is_null() {
            return Err(null("request"));
        }
        let line = CStr::from_ptr(request)
            .to_str()
            .map_err(|e| Failure(ChipfireStatus::InvalidArgument, format!("request is not UTF-8: {e}")))?;
        serde_json::to_string(&protocol::handle_line(line))
            .map_err(|e| Failure(ChipfireStatus::Internal, e.to_string()))
    };
    let mut response = None;
    guard(|| {
        response = Some(run()?);
        Ok(())
    });
    match response.and_then(|s| CString::new(s).ok()) {
        Some(c) => c.into_raw(),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn chipfire_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
