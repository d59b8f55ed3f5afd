//! C ABI for ringlogic.
//!
//! Every function returns an [`RlStatus`]. Handles are opaque and owned by
//! the caller, who frees them with the matching `*_free`. Strings passed in
//! must be NUL-terminated UTF-8. Strings handed out stay valid until the next
//! call on the same context or until the context is freed.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ringlogic::finring::make_ring;
use ringlogic::points::homs;
use ringlogic::theory::{parse_sentence, satisfies, Axiom};
use ringlogic::{Budget, Error, FiniteRing, Presentation};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    Budget = 5,
    Internal = 6,
    Panic = 7,
}

impl From<&Error> for RlStatus {
    fn from(e: &Error) -> Self {
        match e.kind() {
            "budget" => RlStatus::Budget,
            "parse" | "polynomial" => RlStatus::Parse,
            "bug" => RlStatus::Internal,
            _ => RlStatus::InvalidInput,
        }
    }
}

/// Per-thread state: the search budget, the last error message and the last
/// report produced by [`rl_run`].
pub struct RlContext {
    budget: Budget,
    error: Option<CString>,
    output: Option<CString>,
}

/// A finite ring built from a spec string such as `Z/6` or `GF(9)`.
pub struct RlRing {
    ring: FiniteRing,
}

impl RlContext {
    fn fail(&mut self, status: RlStatus, msg: impl Into<String>) -> RlStatus {
        self.error = CString::new(msg.into().replace('\0', " ")).ok();
        status
    }

    fn guard(&mut self, f: impl FnOnce(&mut RlContext) -> Result<(), (RlStatus, String)>) -> RlStatus {
        self.error = None;
        match catch_unwind(AssertUnwindSafe(|| f(self))) {
            Ok(Ok(())) => RlStatus::Ok,
            Ok(Err((s, m))) => self.fail(s, m),
            Err(_) => self.fail(RlStatus::Panic, "panic inside ringlogic"),
        }
    }
}

fn lib_err(e: Error) -> (RlStatus, String) {
    (RlStatus::from(&e), e.to_string())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (RlStatus, String)> {
    if p.is_null() {
        return Err((RlStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (RlStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

/// Creates a context with the default budget. Returns null on allocation
/// failure only.
#[no_mangle]
pub extern "C" fn rl_context_new() -> *mut RlContext {
    Box::into_raw(Box::new(RlContext { budget: Budget::default(), error: None, output: None }))
}

/// # Safety
/// `ctx` must come from [`rl_context_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rl_context_free(ctx: *mut RlContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Sets the tuple and hom-candidate limits. Zero leaves a limit unchanged.
///
/// # Safety
/// `ctx` must be a live context.
#[no_mangle]
pub unsafe extern "C" fn rl_context_set_budget(ctx: *mut RlContext, max_tuples: u64, max_hom_candidates: u64) -> RlStatus {
    let Some(ctx) = ctx.as_mut() else { return RlStatus::NullPointer };
    if max_tuples > 0 {
        ctx.budget.max_tuples = max_tuples;
    }
    if max_hom_candidates > 0 {
        ctx.budget.max_hom_candidates = max_hom_candidates;
    }
    RlStatus::Ok
}

/// The message of the last failed call, or null.
///
/// # Safety
/// `ctx` must be a live context.
#[no_mangle]
pub unsafe extern "C" fn rl_last_error(ctx: *const RlContext) -> *const c_char {
    match ctx.as_ref().and_then(|c| c.error.as_ref()) {
        Some(s) => s.as_ptr(),
        None => ptr::null(),
    }
}

/// # Safety
/// `ctx` must be a live context, `spec` a C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_new(ctx: *mut RlContext, spec: *const c_char, out: *mut *mut RlRing) -> RlStatus {
    let Some(ctx) = ctx.as_mut() else { return RlStatus::NullPointer };
    if out.is_null() {
        return ctx.fail(RlStatus::NullPointer, "null output pointer");
    }
    ctx.guard(|_| {
        let ring = make_ring(text(spec)?).map_err(|e| lib_err(e.into()))?;
        *out = Box::into_raw(Box::new(RlRing { ring }));
        Ok(())
    })
}

/// # Safety
/// `ring` must come from [`rl_ring_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_free(ring: *mut RlRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `ring` must be a live ring or null.
#[no_mangle]
pub unsafe extern "C" fn rl_ring_card(ring: *const RlRing) -> u32 {
    ring.as_ref().map_or(0, |r| r.ring.card())
}

/// Counts the points of a presentation such as `Z[x]/(x^2+1)` in `ring`.
///
/// # Safety
/// All pointers must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rl_count_points(
    ctx: *mut RlContext,
    pres: *const c_char,
    ring: *const RlRing,
    out: *mut u64,
) -> RlStatus {
    let Some(ctx) = ctx.as_mut() else { return RlStatus::NullPointer };
    let (Some(ring), false) = (ring.as_ref(), out.is_null()) else {
        return ctx.fail(RlStatus::NullPointer, "null ring or output pointer");
    };
    ctx.guard(|c| {
        let p = Presentation::parse(text(pres)?).map_err(lib_err)?;
        let set = homs(&p, &ring.ring, &c.budget).map_err(lib_err)?;
        *out = set.len() as u64;
        Ok(())
    })
}

/// Decides whether `ring` satisfies a sentence such as
/// `forall x,y (x*y=0) => (x=0) \/ (y=0)`.
///
/// # Safety
/// All pointers must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rl_satisfies(
    ctx: *mut RlContext,
    ring: *const RlRing,
    sentence: *const c_char,
    out: *mut bool,
) -> RlStatus {
    let Some(ctx) = ctx.as_mut() else { return RlStatus::NullPointer };
    let (Some(ring), false) = (ring.as_ref(), out.is_null()) else {
        return ctx.fail(RlStatus::NullPointer, "null ring or output pointer");
    };
    ctx.guard(|c| {
        let s = parse_sentence(text(sentence)?).map_err(|e| lib_err(e.into()))?;
        let ax = Axiom::from_sentence(&s, None).map_err(lib_err)?;
        *out = satisfies(&ring.ring, &ax, false, &c.budget).map_err(lib_err)?.holds;
        Ok(())
    })
}

/// Runs one command-line invocation (without the program name) and stores
/// its JSON report, readable through [`rl_output`]. `exit_code` receives the
/// command's exit status: 0 ok, 1 property violated, 2 error.
///
/// # Safety
/// `argv` must point to `argc` C strings; `exit_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rl_run(
    ctx: *mut RlContext,
    argv: *const *const c_char,
    argc: usize,
    exit_code: *mut i32,
) -> RlStatus {
    let Some(ctx) = ctx.as_mut() else { return RlStatus::NullPointer };
    if exit_code.is_null() || (argv.is_null() && argc > 0) {
        return ctx.fail(RlStatus::NullPointer, "null argv or exit code pointer");
    }
    ctx.guard(|c| {
        let mut args = Vec::with_capacity(argc);
        for i in 0..argc {
            args.push(text(*argv.add(i))?.to_string());
        }
        let (code, out) = ringlogic::cli::execute(args);
        c.output = Some(CString::new(out).map_err(|_| (RlStatus::Internal, "NUL in report".to_string()))?);
        *exit_code = code;
        Ok(())
    })
}

/// The report of the last [`rl_run`], or null.
///
/// # Safety
/// `ctx` must be a live context.
#[no_mangle]
pub unsafe extern "C" fn rl_output(ctx: *const RlContext) -> *const c_char {
    match ctx.as_ref().and_then(|c| c.output.as_ref()) {
        Some(s) => s.as_ptr(),
        None => ptr::null(),
    }
}
