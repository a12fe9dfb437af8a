//! C ABI over the `redei` crate.
//!
//! Every fallible call returns a [`RedeiStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`redei_last_error`] on the same thread until the next failing call.
//! Pairs are opaque heap handles released with [`redei_pair_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use redei::arith::{jacobi, legendre, log_integral, sqrt_mod, Symbol};
use redei::chebotarev::{check_bound, FieldLabel};
use redei::density::{count_pairs, count_triples};
use redei::redei::{classify_triple, redei_symbol_detailed, splitting_oracle, AdmissiblePair};
use redei::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RedeiStatus {
    Ok = 0,
    InvalidArgument = 2,
    /// Inadmissible pair or third prime, missing square root, or an
    /// oracle that cannot be applied.
    Inadmissible = 3,
    Io = 4,
    Checkpoint = 5,
    /// Internal consistency failure, including exhausted normalization.
    Consistency = 6,
    NullPointer = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RedeiFieldLabel {
    /// Degree-8 field `k1k2(i)`.
    Biquadratic = 0,
    /// Degree-16 field `k(i)`.
    Redei = 1,
}

/// Opaque admissible pair with its normalized solution.
pub struct RedeiPair(AdmissiblePair);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RedeiSolution {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RedeiTripleVerdict {
    pub congruence_ok: [bool; 3],
    pub legendre_ok: bool,
    /// -1 or +1; 0 when the symbol is not defined for the triple.
    pub redei: i32,
    pub borromean: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RedeiPairCounts {
    pub x: u64,
    pub pi_x: u64,
    pub pi_x_1mod4: u64,
    pub ordered_linked: u64,
    pub ratio: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RedeiTripleCounts {
    pub x: u64,
    pub pi_x: u64,
    pub unordered_distinct: u64,
    pub linked_unordered: u64,
    pub borromean_unordered: u64,
    pub ratio_all: f64,
    pub ratio_linked: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RedeiBoundReport {
    pub x: u64,
    pub main_term: f64,
    pub error_bound: f64,
    pub empirical: u64,
    pub within_bound: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> RedeiStatus {
    match e.exit_code() {
        2 => RedeiStatus::InvalidArgument,
        3 => RedeiStatus::Inadmissible,
        4 => RedeiStatus::Io,
        5 => RedeiStatus::Checkpoint,
        _ => RedeiStatus::Consistency,
    }
}

fn guard(f: impl FnOnce() -> Result<(), RedeiStatus>) -> RedeiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RedeiStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            RedeiStatus::Panic
        }
    }
}

fn lift<T>(r: redei::Result<T>) -> Result<T, RedeiStatus> {
    r.map_err(|e| {
        set_error(format!("{}: {e}", e.kind()));
        status_of(&e)
    })
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, RedeiStatus> {
    p.as_mut().ok_or_else(|| {
        set_error("null pointer argument".into());
        RedeiStatus::NullPointer
    })
}

unsafe fn pair_ref<'a>(p: *const RedeiPair) -> Result<&'a AdmissiblePair, RedeiStatus> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| {
        set_error("null pair handle".into());
        RedeiStatus::NullPointer
    })
}

fn label_of(label: u32) -> Result<FieldLabel, RedeiStatus> {
    match label {
        l if l == RedeiFieldLabel::Biquadratic as u32 => Ok(FieldLabel::Biquadratic),
        l if l == RedeiFieldLabel::Redei as u32 => Ok(FieldLabel::Redei),
        other => {
            set_error(format!("unknown field label {other}"));
            Err(RedeiStatus::InvalidArgument)
        }
    }
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn redei_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `out_pair` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_pair_new(
    p1: u64,
    p2: u64,
    out_pair: *mut *mut RedeiPair,
) -> RedeiStatus {
    guard(|| {
        let slot = out(out_pair)?;
        let pair = lift(AdmissiblePair::new(p1, p2))?;
        *slot = Box::into_raw(Box::new(RedeiPair(pair)));
        Ok(())
    })
}

/// # Safety
/// `pair` must be null or a handle from [`redei_pair_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn redei_pair_free(pair: *mut RedeiPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// # Safety
/// `pair` must be a live handle and `out_solution` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_pair_solution(
    pair: *const RedeiPair,
    out_solution: *mut RedeiSolution,
) -> RedeiStatus {
    guard(|| {
        let pair = pair_ref(pair)?;
        let slot = out(out_solution)?;
        let s = pair.solution();
        *slot = RedeiSolution {
            x: s.x,
            y: s.y,
            z: s.z,
        };
        Ok(())
    })
}

/// Writes -1 or +1 to `out_symbol`. `out_solution` may be null; otherwise
/// it receives the solution actually used.
///
/// # Safety
/// `pair` must be a live handle; the out-pointers valid for writes or null
/// where allowed.
#[no_mangle]
pub unsafe extern "C" fn redei_symbol(
    pair: *const RedeiPair,
    p3: u64,
    out_symbol: *mut i32,
    out_solution: *mut RedeiSolution,
) -> RedeiStatus {
    guard(|| {
        let pair = pair_ref(pair)?;
        let slot = out(out_symbol)?;
        let (value, used) = lift(redei_symbol_detailed(pair, p3))?;
        *slot = value.value() as i32;
        if let Some(sol) = out_solution.as_mut() {
            *sol = RedeiSolution {
                x: used.x,
                y: used.y,
                z: used.z,
            };
        }
        Ok(())
    })
}

/// Whether `p3` splits completely in the quartic attached to the pair's
/// solution.
///
/// # Safety
/// `pair` must be a live handle and `out_split` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_splitting_oracle(
    pair: *const RedeiPair,
    p3: u64,
    out_split: *mut bool,
) -> RedeiStatus {
    guard(|| {
        let pair = pair_ref(pair)?;
        let slot = out(out_split)?;
        *slot = lift(splitting_oracle(pair, p3))?;
        Ok(())
    })
}

/// # Safety
/// `out_verdict` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_classify_triple(
    p1: u64,
    p2: u64,
    p3: u64,
    out_verdict: *mut RedeiTripleVerdict,
) -> RedeiStatus {
    guard(|| {
        let slot = out(out_verdict)?;
        let v = lift(classify_triple(p1, p2, p3))?;
        *slot = RedeiTripleVerdict {
            congruence_ok: v.congruence_ok,
            legendre_ok: v.legendre_ok,
            redei: v.redei.map_or(0, |s| s.value() as i32),
            borromean: v.borromean,
        };
        Ok(())
    })
}

fn symbol_out(slot: &mut i32, s: Symbol) {
    *slot = s.value() as i32;
}

/// # Safety
/// `out_symbol` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_legendre(a: i64, p: u64, out_symbol: *mut i32) -> RedeiStatus {
    guard(|| {
        let slot = out(out_symbol)?;
        symbol_out(slot, lift(legendre(a, p))?);
        Ok(())
    })
}

/// # Safety
/// `out_symbol` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_jacobi(a: i64, m: u64, out_symbol: *mut i32) -> RedeiStatus {
    guard(|| {
        let slot = out(out_symbol)?;
        symbol_out(slot, lift(jacobi(a, m))?);
        Ok(())
    })
}

/// Smaller square root of `a` modulo the odd prime `p`.
///
/// # Safety
/// `out_root` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_sqrt_mod(a: i64, p: u64, out_root: *mut u64) -> RedeiStatus {
    guard(|| {
        let slot = out(out_root)?;
        *slot = lift(sqrt_mod(a, p))?;
        Ok(())
    })
}

/// `li(x)` measured from 2.
///
/// # Safety
/// `out_value` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_log_integral(x: f64, out_value: *mut f64) -> RedeiStatus {
    guard(|| {
        let slot = out(out_value)?;
        *slot = lift(log_integral(x))?;
        Ok(())
    })
}

/// # Safety
/// `out_counts` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_count_pairs(
    x: u64,
    out_counts: *mut RedeiPairCounts,
) -> RedeiStatus {
    guard(|| {
        let slot = out(out_counts)?;
        let c = count_pairs(x);
        *slot = RedeiPairCounts {
            x: c.x,
            pi_x: c.pi_x,
            pi_x_1mod4: c.pi_x_1mod4,
            ordered_linked: c.ordered_linked,
            ratio: c.ratio,
        };
        Ok(())
    })
}

/// # Safety
/// `out_counts` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_count_triples(
    x: u64,
    out_counts: *mut RedeiTripleCounts,
) -> RedeiStatus {
    guard(|| {
        let slot = out(out_counts)?;
        let c = lift(count_triples(x))?;
        *slot = RedeiTripleCounts {
            x: c.x,
            pi_x: c.pi_x,
            unordered_distinct: c.unordered_distinct,
            linked_unordered: c.linked_unordered,
            borromean_unordered: c.borromean_unordered,
            ratio_all: c.ratio_all,
            ratio_linked: c.ratio_linked,
        };
        Ok(())
    })
}

/// `label` is a [`RedeiFieldLabel`] value.
///
/// # Safety
/// `pair` must be a live handle and `out_report` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn redei_check_bound(
    pair: *const RedeiPair,
    x: u64,
    label: u32,
    out_report: *mut RedeiBoundReport,
) -> RedeiStatus {
    guard(|| {
        let pair = pair_ref(pair)?;
        let slot = out(out_report)?;
        let r = lift(check_bound(pair, x, label_of(label)?))?;
        *slot = RedeiBoundReport {
            x: r.x,
            main_term: r.main_term,
            error_bound: r.error_bound,
            empirical: r.empirical,
            within_bound: r.within_bound,
        };
        Ok(())
    })
}
