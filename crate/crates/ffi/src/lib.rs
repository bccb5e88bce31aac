//! C interface to `blockalg`.
//!
//! Every entry point returns a [`BlockalgStatus`] and writes results through
//! out-pointers. Elements, modules and vectors are opaque handles owned by
//! the caller and released with the matching `*_free` function. Returned
//! strings are NUL-terminated UTF-8, owned by the caller and released with
//! [`blockalg_string_free`]. After a failure, [`blockalg_last_error`]
//! describes it; the message belongs to the calling thread and stays valid
//! until that thread's next call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use blockalg::json;
use blockalg::whittaker::good_check;
use blockalg::{
    bracket, GenIndex, GeneratorCutoff, ModuleVector, Truncation, UeaElement, WhittakerModule,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockalgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Panic = 5,
}

/// `coeff * x(a, i)`, or zero when `is_zero` is set.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockalgBracket {
    pub is_zero: bool,
    pub coeff: i64,
    pub a: i64,
    pub i: i64,
}

pub struct BlockalgElement(UeaElement);
pub struct BlockalgModule(WhittakerModule);
pub struct BlockalgVector(ModuleVector);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(BlockalgStatus, String);

type Outcome = Result<(), Failure>;

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure(BlockalgStatus::Domain, e.to_string())
}

fn parse(e: impl std::fmt::Display) -> Failure {
    Failure(BlockalgStatus::Parse, e.to_string())
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Outcome) -> BlockalgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BlockalgStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            BlockalgStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(BlockalgStatus::NullArgument, format!("`{name}` is null")))
}

unsafe fn out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure(BlockalgStatus::NullArgument, format!("`{name}` is null")))
}

unsafe fn text<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(
            BlockalgStatus::NullArgument,
            format!("`{name}` is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(BlockalgStatus::InvalidUtf8, format!("`{name}`: {e}")))
}

fn document(s: &str, name: &str) -> Result<serde_json::Value, Failure> {
    json::parse_value(s, name).map_err(parse)
}

fn string_out(dst: &mut *mut c_char, value: &serde_json::Value) -> Outcome {
    let s = CString::new(json::render(value)).map_err(domain)?;
    *dst = s.into_raw();
    Ok(())
}

fn cutoff(sum_max: i64, i_max: i64) -> Result<GeneratorCutoff, Failure> {
    if sum_max < 2 || i_max < 0 {
        return Err(domain(format!(
            "need sum_max >= 2 and i_max >= 0 (got {sum_max}, {i_max})"
        )));
    }
    Ok(GeneratorCutoff::new(sum_max, i_max))
}

/// Message for the last failed call on this thread, or null.
#[no_mangle]
pub extern "C" fn blockalg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn blockalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `[x(a, i), x(b, j)]`.
///
/// # Safety
/// `result` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_bracket(
    a: i64,
    i: i64,
    b: i64,
    j: i64,
    result: *mut BlockalgBracket,
) -> BlockalgStatus {
    guard(|| {
        let result = out(result, "result")?;
        let x = GenIndex::generator(a, i).map_err(domain)?;
        let y = GenIndex::generator(b, j).map_err(domain)?;
        *result = match bracket(x, y).map_err(domain)? {
            None => BlockalgBracket {
                is_zero: true,
                coeff: 0,
                a: 0,
                i: 0,
            },
            Some(t) => BlockalgBracket {
                is_zero: false,
                coeff: i64::try_from(&t.coeff)
                    .map_err(|_| domain("coefficient does not fit in int64_t"))?,
                a: t.target.a,
                i: t.target.i,
            },
        };
        Ok(())
    })
}

/// Parses a canonical element document.
///
/// # Safety
/// `json` must be null or a NUL-terminated string; `result` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_element_from_json(
    json: *const c_char,
    result: *mut *mut BlockalgElement,
) -> BlockalgStatus {
    guard(|| {
        let result = out(result, "result")?;
        let doc = document(text(json, "json")?, "element")?;
        let u = json::element_from_value(&doc, "element").map_err(parse)?;
        *result = Box::into_raw(Box::new(BlockalgElement(u)));
        Ok(())
    })
}

/// # Safety
/// `element` must be null or a live handle; `result` must be null or valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_element_to_json(
    element: *const BlockalgElement,
    result: *mut *mut c_char,
) -> BlockalgStatus {
    guard(|| {
        let e = borrow(element, "element")?;
        string_out(out(result, "result")?, &json::element_to_value(&e.0))
    })
}

/// # Safety
/// `element` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn blockalg_element_free(element: *mut BlockalgElement) {
    if !element.is_null() {
        drop(Box::from_raw(element));
    }
}

/// Normal form of `lhs * rhs`.
///
/// # Safety
/// Handles must be null or live; `result` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_element_multiply(
    lhs: *const BlockalgElement,
    rhs: *const BlockalgElement,
    result: *mut *mut BlockalgElement,
) -> BlockalgStatus {
    guard(|| {
        let (l, r) = (borrow(lhs, "lhs")?, borrow(rhs, "rhs")?);
        let result = out(result, "result")?;
        *result = Box::into_raw(Box::new(BlockalgElement(l.0.multiply(&r.0))));
        Ok(())
    })
}

/// `lhs * rhs - rhs * lhs`.
///
/// # Safety
/// Handles must be null or live; `result` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_element_commutator(
    lhs: *const BlockalgElement,
    rhs: *const BlockalgElement,
    result: *mut *mut BlockalgElement,
) -> BlockalgStatus {
    guard(|| {
        let (l, r) = (borrow(lhs, "lhs")?, borrow(rhs, "rhs")?);
        let result = out(result, "result")?;
        *result = Box::into_raw(Box::new(BlockalgElement(l.0.lie_bracket(&r.0))));
        Ok(())
    })
}

/// Height of a nonzero element; the zero element is a domain error.
///
/// # Safety
/// `element` must be null or live; `result` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_element_height(
    element: *const BlockalgElement,
    result: *mut u64,
) -> BlockalgStatus {
    guard(|| {
        let e = borrow(element, "element")?;
        *out(result, "result")? = e.0.height().map_err(domain)? as u64;
        Ok(())
    })
}

/// Module from a character document and an ideal document.
///
/// # Safety
/// Strings must be null or NUL-terminated; `result` must be null or valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_module_new(
    character_json: *const c_char,
    ideal_json: *const c_char,
    result: *mut *mut BlockalgModule,
) -> BlockalgStatus {
    guard(|| {
        let result = out(result, "result")?;
        let c = document(text(character_json, "character_json")?, "character")?;
        let i = document(text(ideal_json, "ideal_json")?, "ideal")?;
        let c = json::character_from_value(&c, "character").map_err(parse)?;
        let i = json::ideal_from_value(&i, "ideal").map_err(parse)?;
        *result = Box::into_raw(Box::new(BlockalgModule(WhittakerModule::new(c, i))));
        Ok(())
    })
}

/// # Safety
/// `module` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn blockalg_module_free(module: *mut BlockalgModule) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}

/// Parses a vector document in `module`; coefficients are reduced modulo
/// the module's ideal.
///
/// # Safety
/// `module` must be null or live; `json` null or NUL-terminated; `result`
/// null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_vector_from_json(
    module: *const BlockalgModule,
    json: *const c_char,
    result: *mut *mut BlockalgVector,
) -> BlockalgStatus {
    guard(|| {
        let m = borrow(module, "module")?;
        let result = out(result, "result")?;
        let doc = document(text(json, "json")?, "vector")?;
        let v = json::vector_from_value(&doc, &m.0, "vector").map_err(parse)?;
        *result = Box::into_raw(Box::new(BlockalgVector(v)));
        Ok(())
    })
}

/// # Safety
/// `vector` must be null or live; `result` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_vector_to_json(
    vector: *const BlockalgVector,
    result: *mut *mut c_char,
) -> BlockalgStatus {
    guard(|| {
        let v = borrow(vector, "vector")?;
        string_out(out(result, "result")?, &json::vector_to_value(&v.0))
    })
}

/// # Safety
/// `vector` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn blockalg_vector_free(vector: *mut BlockalgVector) {
    if !vector.is_null() {
        drop(Box::from_raw(vector));
    }
}

/// `element . vector`.
///
/// # Safety
/// Handles must be null or live; `result` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_act(
    module: *const BlockalgModule,
    element: *const BlockalgElement,
    vector: *const BlockalgVector,
    result: *mut *mut BlockalgVector,
) -> BlockalgStatus {
    guard(|| {
        let m = borrow(module, "module")?;
        let e = borrow(element, "element")?;
        let v = borrow(vector, "vector")?;
        let result = out(result, "result")?;
        *result = Box::into_raw(Box::new(BlockalgVector(m.0.act_element(&e.0, &v.0))));
        Ok(())
    })
}

/// `x(a, i) v - phi(x(a, i)) v` for `a + i >= 2`.
///
/// # Safety
/// Handles must be null or live; `result` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_defect(
    module: *const BlockalgModule,
    a: i64,
    i: i64,
    vector: *const BlockalgVector,
    result: *mut *mut BlockalgVector,
) -> BlockalgStatus {
    guard(|| {
        let m = borrow(module, "module")?;
        let v = borrow(vector, "vector")?;
        let result = out(result, "result")?;
        let x = GenIndex::generator(a, i).map_err(domain)?;
        let d = m.0.defect(x, &v.0).map_err(domain)?;
        *result = Box::into_raw(Box::new(BlockalgVector(d)));
        Ok(())
    })
}

/// Whether every defect with `2 <= a + i <= sum_max`, `i <= i_max` vanishes.
///
/// # Safety
/// Handles must be null or live; `result` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_is_whittaker(
    module: *const BlockalgModule,
    vector: *const BlockalgVector,
    sum_max: i64,
    i_max: i64,
    result: *mut bool,
) -> BlockalgStatus {
    guard(|| {
        let m = borrow(module, "module")?;
        let v = borrow(vector, "vector")?;
        let result = out(result, "result")?;
        *result = m.0.is_whittaker(&v.0, cutoff(sum_max, i_max)?).passes();
        Ok(())
    })
}

/// Hankel goodness report as JSON. `m_max = 0` uses `n + 1` rows.
///
/// # Safety
/// `character_json` must be null or NUL-terminated; `result` null or valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_check_character_json(
    character_json: *const c_char,
    n_max: u32,
    s_max: u32,
    m_max: u32,
    result: *mut *mut c_char,
) -> BlockalgStatus {
    guard(|| {
        let result = out(result, "result")?;
        let c = document(text(character_json, "character_json")?, "character")?;
        let phi = json::character_from_value(&c, "character").map_err(parse)?;
        let m_max = (m_max > 0).then_some(m_max as usize);
        let report = good_check(&phi, n_max as usize, s_max as usize, m_max).map_err(domain)?;
        string_out(result, &json::goodness_to_value(&report))
    })
}

/// Solver report as JSON for the truncation and cutoff given.
///
/// # Safety
/// `module` must be null or live; `result` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn blockalg_solve_json(
    module: *const BlockalgModule,
    pi_min: i64,
    part_i_max: i64,
    len_max: u32,
    sum_max: i64,
    i_max: i64,
    result: *mut *mut c_char,
) -> BlockalgStatus {
    guard(|| {
        let m = borrow(module, "module")?;
        let result = out(result, "result")?;
        let trunc = Truncation::new(pi_min, part_i_max, len_max as usize);
        let solved =
            m.0.solve_whittaker(&trunc, cutoff(sum_max, i_max)?)
                .map_err(domain)?;
        string_out(result, &json::solve_to_value(&solved))
    })
}
