//! C interface to the `equicut` library.
//!
//! Graphs and solve results are opaque handles owned by the caller and
//! released with the matching `_free` function. Every fallible call returns
//! an [`EquicutStatus`]; on failure, [`equicut_last_error_message`] describes
//! the most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use equicut::closed_forms::known_rna;
use equicut::{
    edge_connectivity, make_circulant, make_complete, make_cycle, make_cycle_power, solve, Equicut,
    Error, Graph, GraphFamilySpec, Method, SolveResult, SolverConfig,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquicutStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    CapExceeded = 3,
    Io = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquicutMethod {
    Exhaustive = 0,
    BranchAndBound = 1,
    LocalSearch = 2,
}

impl From<EquicutMethod> for Method {
    fn from(m: EquicutMethod) -> Self {
        match m {
            EquicutMethod::Exhaustive => Method::Exhaustive,
            EquicutMethod::BranchAndBound => Method::BranchAndBound,
            EquicutMethod::LocalSearch => Method::LocalSearch,
        }
    }
}

/// Solver settings. `upper_bound` is ignored unless `has_upper_bound`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct EquicutSolverConfig {
    pub symmetry_reduction: bool,
    pub restarts: usize,
    pub rng_seed: u64,
    pub parallelism: usize,
    pub has_upper_bound: bool,
    pub upper_bound: usize,
    pub enumeration_cap: usize,
    pub first_improvement: bool,
}

impl From<&EquicutSolverConfig> for SolverConfig {
    fn from(c: &EquicutSolverConfig) -> Self {
        SolverConfig {
            symmetry_reduction: c.symmetry_reduction,
            restarts: c.restarts,
            rng_seed: c.rng_seed,
            parallelism: c.parallelism,
            initial_upper_bound: c.has_upper_bound.then_some(c.upper_bound),
            enumeration_cap: c.enumeration_cap,
            first_improvement: c.first_improvement,
        }
    }
}

/// Opaque simple undirected graph.
pub struct EquicutGraph(Graph);

/// Opaque solver output.
pub struct EquicutSolveResult(SolveResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: EquicutStatus, msg: impl Into<String>) -> EquicutStatus {
    set_error(msg.into());
    status
}

fn status_of(err: &Error) -> EquicutStatus {
    match err {
        Error::CapExceeded { .. } => EquicutStatus::CapExceeded,
        Error::Io { .. } => EquicutStatus::Io,
        _ => EquicutStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<(), EquicutStatus>) -> EquicutStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EquicutStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(EquicutStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: equicut::Result<T>) -> Result<T, EquicutStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, EquicutStatus> {
    p.as_mut()
        .ok_or_else(|| fail(EquicutStatus::NullPointer, "null output pointer"))
}

unsafe fn in_ref<'a, T>(p: *const T) -> Result<&'a T, EquicutStatus> {
    p.as_ref()
        .ok_or_else(|| fail(EquicutStatus::NullPointer, "null handle"))
}

unsafe fn in_slice<'a, T>(p: *const T, len: usize) -> Result<&'a [T], EquicutStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(EquicutStatus::NullPointer, "null array"));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn store_graph(
    out: *mut *mut EquicutGraph,
    g: equicut::Result<Graph>,
) -> Result<(), EquicutStatus> {
    let out = out_ptr(out)?;
    *out = ptr::null_mut();
    *out = Box::into_raw(Box::new(EquicutGraph(lift(g)?)));
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn equicut_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn equicut_graph_cycle(
    n: usize,
    out: *mut *mut EquicutGraph,
) -> EquicutStatus {
    guard(|| store_graph(out, make_cycle(n)))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn equicut_graph_cycle_power(
    n: usize,
    d: usize,
    out: *mut *mut EquicutGraph,
) -> EquicutStatus {
    guard(|| store_graph(out, make_cycle_power(n, d)))
}

/// # Safety
/// `jumps` must point to `len` readable values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn equicut_graph_circulant(
    n: usize,
    jumps: *const usize,
    len: usize,
    out: *mut *mut EquicutGraph,
) -> EquicutStatus {
    guard(|| {
        let jumps = in_slice(jumps, len)?;
        store_graph(out, make_circulant(n, jumps))
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn equicut_graph_complete(
    n: usize,
    out: *mut *mut EquicutGraph,
) -> EquicutStatus {
    guard(|| store_graph(out, make_complete(n)))
}

/// Builds a graph from `m` edges stored as `2m` endpoints `u0 v0 u1 v1 ...`.
///
/// # Safety
/// `endpoints` must point to `2 * m` readable values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn equicut_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut EquicutGraph,
) -> EquicutStatus {
    guard(|| {
        let len = m
            .checked_mul(2)
            .ok_or_else(|| fail(EquicutStatus::InvalidInput, "edge count overflows"))?;
        let flat = in_slice(endpoints, len)?;
        let edges = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        store_graph(out, Graph::from_edges(n, edges))
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn equicut_graph_free(g: *mut EquicutGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn equicut_graph_order(g: *const EquicutGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of edges, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn equicut_graph_edge_count(g: *const EquicutGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

#[no_mangle]
pub extern "C" fn equicut_solver_config_default() -> EquicutSolverConfig {
    let c = SolverConfig::default();
    EquicutSolverConfig {
        symmetry_reduction: c.symmetry_reduction,
        restarts: c.restarts,
        rng_seed: c.rng_seed,
        parallelism: c.parallelism,
        has_upper_bound: false,
        upper_bound: 0,
        enumeration_cap: c.enumeration_cap,
        first_improvement: c.first_improvement,
    }
}

/// Solves `g`. A NULL `config` means the defaults.
///
/// # Safety
/// `g` must be a live handle, `config` NULL or readable, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn equicut_solve(
    g: *const EquicutGraph,
    method: EquicutMethod,
    config: *const EquicutSolverConfig,
    out: *mut *mut EquicutSolveResult,
) -> EquicutStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let g = in_ref(g)?;
        let cfg = config
            .as_ref()
            .map_or_else(SolverConfig::default, SolverConfig::from);
        let r = lift(solve(&g.0, method.into(), &cfg))?;
        *out = Box::into_raw(Box::new(EquicutSolveResult(r)));
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn equicut_result_free(r: *mut EquicutSolveResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn equicut_result_value(r: *const EquicutSolveResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.value)
}

/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn equicut_result_is_exact(r: *const EquicutSolveResult) -> bool {
    r.as_ref().is_some_and(|r| r.0.exact)
}

/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn equicut_result_lower_bound(r: *const EquicutSolveResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.lower_bound)
}

/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn equicut_result_upper_bound(r: *const EquicutSolveResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.upper_bound)
}

/// Size of the certificate side, `floor(n/2)`.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn equicut_result_certificate_len(r: *const EquicutSolveResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.certificate.members().len())
}

/// Copies the sorted certificate side into `buf`.
///
/// # Safety
/// `r` must be a live handle and `buf` writable for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn equicut_result_certificate(
    r: *const EquicutSolveResult,
    buf: *mut usize,
    capacity: usize,
) -> EquicutStatus {
    guard(|| {
        let members = in_ref(r)?.0.certificate.members();
        if members.is_empty() {
            return Ok(());
        }
        if buf.is_null() {
            return Err(fail(EquicutStatus::NullPointer, "null buffer"));
        }
        if capacity < members.len() {
            return Err(fail(
                EquicutStatus::BufferTooSmall,
                format!("certificate needs {} slots, got {capacity}", members.len()),
            ));
        }
        ptr::copy_nonoverlapping(members.as_ptr(), buf, members.len());
        Ok(())
    })
}

/// Number of edges between `members` (of size `floor(n/2)`) and the rest.
///
/// # Safety
/// `g` must be a live handle, `members` readable for `len` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn equicut_equicut_size(
    g: *const EquicutGraph,
    members: *const usize,
    len: usize,
    out: *mut usize,
) -> EquicutStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let g = in_ref(g)?;
        let cut = lift(Equicut::new(g.0.order(), in_slice(members, len)?.to_vec()))?;
        *out = lift(equicut::equicut_size(&g.0, &cut))?;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn equicut_edge_connectivity(
    g: *const EquicutGraph,
    out: *mut usize,
) -> EquicutStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = edge_connectivity(&in_ref(g)?.0);
        Ok(())
    })
}

/// Closed-form minimum equicut of `C_n^d` when one is known. Sets `*known`
/// and, if true, `*value`.
///
/// # Safety
/// `known` and `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn equicut_known_rna_cycle_power(
    n: usize,
    d: usize,
    known: *mut bool,
    value: *mut usize,
) -> EquicutStatus {
    guard(|| {
        let known = out_ptr(known)?;
        let value = out_ptr(value)?;
        let spec = GraphFamilySpec::cycle_power(n, d);
        lift(spec.build())?;
        match known_rna(&spec) {
            Some(v) => {
                *known = true;
                *value = v;
            }
            None => *known = false,
        }
        Ok(())
    })
}
