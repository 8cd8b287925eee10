//! C ABI over `taxicab5`.
//!
//! Values cross the boundary as opaque heap handles (`T5GaussInt`,
//! `T5Quadruple`, `T5SearchResult`) that the caller releases with the matching
//! `*_free` function. Every fallible call returns a [`T5Status`]; on failure
//! [`t5_last_error`] describes the problem for the calling thread. Strings
//! returned through `char **` out-parameters are owned by the caller and must
//! be released with [`t5_string_free`].
//!
//! Output pointers are written only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use taxicab5::search::{run_search, SearchConfig, SolutionClass};
use taxicab5::{
    canonicalize_solution, half_companion, lemma_lhs, lemma_rhs, pell, th1_family, th2_solution,
    verify_solution, GaussInt, PythTriple, Quadruple,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T5Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    NotASolution = 5,
    Panic = 6,
}

/// Opaque Gaussian integer.
pub struct T5GaussInt(GaussInt);

/// Opaque solution candidate `(w, x, y, z)` with its exponent.
pub struct T5Quadruple(Quadruple);

/// Opaque list of search result classes.
pub struct T5SearchResult(Vec<SolutionClass>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(T5Status, String);

impl Failure {
    fn new(status: T5Status, msg: impl Into<String>) -> Self {
        Failure(status, msg.into())
    }
}

type FfiResult = Result<(), Failure>;

fn guard(f: impl FnOnce() -> FfiResult) -> T5Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => T5Status::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(format!("internal panic: {msg}"));
            T5Status::Panic
        }
    }
}

fn non_null<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    // SAFETY: callers hand us either NULL or a live handle from this library.
    unsafe { p.as_ref() }
        .ok_or_else(|| Failure::new(T5Status::NullPointer, format!("{name} is NULL")))
}

fn out_ptr<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    // SAFETY: a non-NULL out-parameter must point to writable storage.
    unsafe { p.as_mut() }
        .ok_or_else(|| Failure::new(T5Status::NullPointer, format!("{name} is NULL")))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("rendered numbers contain no NUL")
        .into_raw()
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn t5_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn t5_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `text` (`3`, `-5`, `2+3i`, `-597i`, ...).
///
/// # Safety
/// `text` must be NULL or a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_parse(
    text: *const c_char,
    out: *mut *mut T5GaussInt,
) -> T5Status {
    guard(|| {
        let out = out_ptr(out, "out")?;
        if text.is_null() {
            return Err(Failure::new(T5Status::NullPointer, "text is NULL"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure::new(T5Status::InvalidUtf8, e.to_string()))?;
        let z = text
            .parse::<GaussInt>()
            .map_err(|e| Failure::new(T5Status::ParseError, e.to_string()))?;
        *out = boxed(T5GaussInt(z));
        Ok(())
    })
}

/// `re + im·i` from machine integers.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_new(re: i64, im: i64, out: *mut *mut T5GaussInt) -> T5Status {
    guard(|| {
        *out_ptr(out, "out")? = boxed(T5GaussInt(GaussInt::new(re, im)));
        Ok(())
    })
}

/// # Safety
/// `z` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_free(z: *mut T5GaussInt) {
    if !z.is_null() {
        drop(Box::from_raw(z));
    }
}

/// Renders `z` in the same grammar `t5_gaussint_parse` accepts.
///
/// # Safety
/// `z` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_to_string(
    z: *const T5GaussInt,
    out: *mut *mut c_char,
) -> T5Status {
    guard(|| {
        let z = non_null(z, "z")?;
        *out_ptr(out, "out")? = c_string(z.0.to_string());
        Ok(())
    })
}

/// Real and imaginary parts as decimal strings.
///
/// # Safety
/// `z` must be a live handle; `re` and `im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_parts(
    z: *const T5GaussInt,
    re: *mut *mut c_char,
    im: *mut *mut c_char,
) -> T5Status {
    guard(|| {
        let z = non_null(z, "z")?;
        let re = out_ptr(re, "re")?;
        let im = out_ptr(im, "im")?;
        *re = c_string(z.0.re.to_string());
        *im = c_string(z.0.im.to_string());
        Ok(())
    })
}

unsafe fn binary_op(
    a: *const T5GaussInt,
    b: *const T5GaussInt,
    out: *mut *mut T5GaussInt,
    op: impl FnOnce(&GaussInt, &GaussInt) -> GaussInt,
) -> T5Status {
    guard(|| {
        let a = non_null(a, "a")?;
        let b = non_null(b, "b")?;
        *out_ptr(out, "out")? = boxed(T5GaussInt(op(&a.0, &b.0)));
        Ok(())
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_add(
    a: *const T5GaussInt,
    b: *const T5GaussInt,
    out: *mut *mut T5GaussInt,
) -> T5Status {
    binary_op(a, b, out, |a, b| a + b)
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_mul(
    a: *const T5GaussInt,
    b: *const T5GaussInt,
    out: *mut *mut T5GaussInt,
) -> T5Status {
    binary_op(a, b, out, |a, b| a * b)
}

/// # Safety
/// `z` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_pow(
    z: *const T5GaussInt,
    exponent: u32,
    out: *mut *mut T5GaussInt,
) -> T5Status {
    guard(|| {
        let z = non_null(z, "z")?;
        *out_ptr(out, "out")? = boxed(T5GaussInt(z.0.pow(exponent)));
        Ok(())
    })
}

/// # Safety
/// `z` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_conj(
    z: *const T5GaussInt,
    out: *mut *mut T5GaussInt,
) -> T5Status {
    guard(|| {
        let z = non_null(z, "z")?;
        *out_ptr(out, "out")? = boxed(T5GaussInt(z.0.conj()));
        Ok(())
    })
}

/// `re² + im²` as a decimal string.
///
/// # Safety
/// `z` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_norm(z: *const T5GaussInt, out: *mut *mut c_char) -> T5Status {
    guard(|| {
        let z = non_null(z, "z")?;
        *out_ptr(out, "out")? = c_string(z.0.norm().to_string());
        Ok(())
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_gaussint_equal(
    a: *const T5GaussInt,
    b: *const T5GaussInt,
    out: *mut bool,
) -> T5Status {
    guard(|| {
        let a = non_null(a, "a")?;
        let b = non_null(b, "b")?;
        *out_ptr(out, "out")? = a.0 == b.0;
        Ok(())
    })
}

/// Builds a candidate; the entries are copied, not consumed.
///
/// # Safety
/// `w`, `x`, `y`, `z` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_quadruple_new(
    w: *const T5GaussInt,
    x: *const T5GaussInt,
    y: *const T5GaussInt,
    z: *const T5GaussInt,
    exponent: u32,
    out: *mut *mut T5Quadruple,
) -> T5Status {
    guard(|| {
        let q = Quadruple::new(
            non_null(w, "w")?.0.clone(),
            non_null(x, "x")?.0.clone(),
            non_null(y, "y")?.0.clone(),
            non_null(z, "z")?.0.clone(),
            exponent,
        );
        *out_ptr(out, "out")? = boxed(T5Quadruple(q));
        Ok(())
    })
}

/// # Safety
/// `q` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn t5_quadruple_free(q: *mut T5Quadruple) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Copy of entry `index` (0 = w, 1 = x, 2 = y, 3 = z).
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_quadruple_entry(
    q: *const T5Quadruple,
    index: usize,
    out: *mut *mut T5GaussInt,
) -> T5Status {
    guard(|| {
        let q = non_null(q, "q")?;
        let out = out_ptr(out, "out")?;
        let entry =
            q.0.entries()
                .get(index)
                .map(|z| (*z).clone())
                .ok_or_else(|| {
                    Failure::new(
                        T5Status::InvalidArgument,
                        format!("entry index {index} out of range 0..4"),
                    )
                })?;
        *out = boxed(T5GaussInt(entry));
        Ok(())
    })
}

/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_quadruple_exponent(q: *const T5Quadruple, out: *mut u32) -> T5Status {
    guard(|| {
        let q = non_null(q, "q")?;
        *out_ptr(out, "out")? = q.0.exponent;
        Ok(())
    })
}

/// Exact check of `w^e + x^e = y^e + z^e`.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_quadruple_verify(q: *const T5Quadruple, out: *mut bool) -> T5Status {
    guard(|| {
        let q = non_null(q, "q")?;
        *out_ptr(out, "out")? = verify_solution(&q.0);
        Ok(())
    })
}

/// `w^e + x^e` as a new handle.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_quadruple_left_sum(
    q: *const T5Quadruple,
    out: *mut *mut T5GaussInt,
) -> T5Status {
    guard(|| {
        let q = non_null(q, "q")?;
        *out_ptr(out, "out")? = boxed(T5GaussInt(q.0.left_sum()));
        Ok(())
    })
}

/// JSON object `{"w":{"re":..,"im":..},...,"exponent":e}`.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_quadruple_to_json(
    q: *const T5Quadruple,
    out: *mut *mut c_char,
) -> T5Status {
    guard(|| {
        let q = non_null(q, "q")?;
        let json = serde_json::to_string(&q.0)
            .map_err(|e| Failure::new(T5Status::Panic, e.to_string()))?;
        *out_ptr(out, "out")? = c_string(json);
        Ok(())
    })
}

/// Minimal orbit element of a verified solution; `T5_STATUS_NOT_A_SOLUTION`
/// otherwise.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_canonicalize_solution(
    q: *const T5Quadruple,
    out: *mut *mut T5Quadruple,
) -> T5Status {
    guard(|| {
        let q = non_null(q, "q")?;
        let out = out_ptr(out, "out")?;
        let canon = canonicalize_solution(&q.0)
            .map_err(|e| Failure::new(T5Status::NotASolution, e.to_string()))?;
        *out = boxed(T5Quadruple(canon));
        Ok(())
    })
}

/// The `n`-th Pell number as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_pell(n: u64, out: *mut *mut c_char) -> T5Status {
    guard(|| {
        *out_ptr(out, "out")? = c_string(pell(n).to_string());
        Ok(())
    })
}

/// `P_{2k} + P_{2k-1}` for `k >= 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_half_companion(k: u64, out: *mut *mut c_char) -> T5Status {
    guard(|| {
        let out = out_ptr(out, "out")?;
        if k == 0 {
            return Err(Failure::new(
                T5Status::InvalidArgument,
                "k must be at least 1",
            ));
        }
        *out = c_string(half_companion(k).to_string());
        Ok(())
    })
}

/// Member `k >= 1` of the Pell solution family.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_pell_family(k: u64, out: *mut *mut T5Quadruple) -> T5Status {
    guard(|| {
        let out = out_ptr(out, "out")?;
        if k == 0 {
            return Err(Failure::new(
                T5Status::InvalidArgument,
                "k must be at least 1",
            ));
        }
        *out = boxed(T5Quadruple(th1_family(k)));
        Ok(())
    })
}

/// Solution built from the Pythagorean triple `(a, b, c)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_triple_solution(
    a: u64,
    b: u64,
    c: u64,
    out: *mut *mut T5Quadruple,
) -> T5Status {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let q = th2_solution(&PythTriple { a, b, c })
            .map_err(|e| Failure::new(T5Status::InvalidArgument, e.to_string()))?;
        *out = boxed(T5Quadruple(q));
        Ok(())
    })
}

/// Both sides of the quadruple identity at `(a, b, c)`.
///
/// # Safety
/// `lhs` and `rhs` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_lemma(
    a: i64,
    b: i64,
    c: i64,
    lhs: *mut *mut T5GaussInt,
    rhs: *mut *mut T5GaussInt,
) -> T5Status {
    guard(|| {
        let lhs = out_ptr(lhs, "lhs")?;
        let rhs = out_ptr(rhs, "rhs")?;
        *lhs = boxed(T5GaussInt(lemma_lhs(a, b, c)));
        *rhs = boxed(T5GaussInt(lemma_rhs(a, b, c)));
        Ok(())
    })
}

/// Exhaustive box search. The result is identical for every `shards` value.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_search_run(
    bound: u64,
    exponent: u32,
    shards: u32,
    include_zero: bool,
    out: *mut *mut T5SearchResult,
) -> T5Status {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let cfg = SearchConfig {
            bound,
            exponent,
            shards: shards as usize,
            include_zero,
        };
        let classes =
            run_search(&cfg).map_err(|e| Failure::new(T5Status::InvalidArgument, e.to_string()))?;
        *out = boxed(T5SearchResult(classes));
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn t5_search_result_free(r: *mut T5SearchResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_search_result_len(
    r: *const T5SearchResult,
    out: *mut usize,
) -> T5Status {
    guard(|| {
        let r = non_null(r, "r")?;
        *out_ptr(out, "out")? = r.0.len();
        Ok(())
    })
}

/// Class `index`: its representative, common sum and orbit size.
///
/// # Safety
/// `r` must be a live handle; all out-parameters must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_search_result_class(
    r: *const T5SearchResult,
    index: usize,
    representative: *mut *mut T5Quadruple,
    sum: *mut *mut T5GaussInt,
    orbit_size: *mut usize,
) -> T5Status {
    guard(|| {
        let r = non_null(r, "r")?;
        let representative = out_ptr(representative, "representative")?;
        let sum = out_ptr(sum, "sum")?;
        let orbit_size = out_ptr(orbit_size, "orbit_size")?;
        let class = r.0.get(index).ok_or_else(|| {
            Failure::new(
                T5Status::InvalidArgument,
                format!("class index {index} out of range 0..{}", r.0.len()),
            )
        })?;
        *representative = boxed(T5Quadruple(class.representative.clone()));
        *sum = boxed(T5GaussInt(class.sum.clone()));
        *orbit_size = class.orbit_size;
        Ok(())
    })
}

/// The result as JSON lines, one class per line.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn t5_search_result_to_jsonl(
    r: *const T5SearchResult,
    out: *mut *mut c_char,
) -> T5Status {
    guard(|| {
        let r = non_null(r, "r")?;
        let mut text = String::new();
        for class in &r.0 {
            text.push_str(&class.to_json_line());
            text.push('\n');
        }
        *out_ptr(out, "out")? = c_string(text);
        Ok(())
    })
}
