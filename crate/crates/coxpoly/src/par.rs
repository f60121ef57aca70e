//! Thin dispatch between the rayon-backed and sequential sweep executors.
//!
//! Results come back in input order either way, so a sweep produces
//! byte-identical output no matter how many workers run it.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every item, preserving order.
///
/// With the `parallel` feature, `workers = None` uses the global rayon
/// pool and `workers = Some(k)` a dedicated pool of `k` threads, except
/// that `Some(1)` short-circuits to the plain sequential loop. Without the
/// feature the loop is always sequential and `workers` is ignored.
#[cfg(feature = "parallel")]
pub fn map_ordered<T, R, F>(items: &[T], workers: Option<usize>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match workers {
        Some(1) => items.iter().map(f).collect(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("failed to build worker pool")
            .install(|| items.par_iter().map(&f).collect()),
        None => items.par_iter().map(&f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, R, F>(items: &[T], _workers: Option<usize>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// The always-sequential executor, kept unconditionally available so
/// benchmarks can compare it against the parallel path in one build.
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}
