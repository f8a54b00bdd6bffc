//! Data-parallel dispatch with a sequential fallback.
//!
//! The exhaustive basis-tuple checks and the bounded fixture searches are
//! embarrassingly parallel; with the `parallel` feature (on by default)
//! they run on the rayon pool, otherwise they run sequentially. Results
//! are collected in input order either way, so the outcome is identical.

#[cfg(feature = "parallel")]
use std::sync::atomic::{AtomicBool, Ordering};

#[cfg(feature = "parallel")]
static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Forces the sequential code path even when the `parallel` feature is
/// compiled in. Intended for benchmarks comparing the two paths.
pub fn force_sequential(on: bool) {
    #[cfg(feature = "parallel")]
    FORCE_SEQUENTIAL.store(on, Ordering::SeqCst);
    #[cfg(not(feature = "parallel"))]
    let _ = on;
}

/// True when work is dispatched to the rayon pool.
pub fn parallel_enabled() -> bool {
    #[cfg(feature = "parallel")]
    return !FORCE_SEQUENTIAL.load(Ordering::SeqCst);
    #[cfg(not(feature = "parallel"))]
    return false;
}

/// Maps `f` over `0..n`, preserving index order in the output.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Maps `f` over a slice, preserving order.
pub fn map_slice<'a, S, T, F>(items: &'a [S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&'a S) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}
