//! Parallel execution helpers.
//!
//! With the `parallel` feature (on by default) the data-parallel inner loops
//! fan out through rayon; without it every helper degrades to a plain
//! sequential loop, so the crate builds and behaves identically on
//! single-threaded targets. All parallelized computations are pure maps
//! followed by order-preserving collection, so results are byte-identical
//! for any thread count.

/// Reads `GWLAB_THREADS` and caps the global rayon pool accordingly.
///
/// Call once at process start (the CLI does). Returns the cap if one was
/// applied. A second call is a no-op because the global pool can only be
/// built once.
pub fn init_thread_cap() -> Option<usize> {
    let n: usize = std::env::var("GWLAB_THREADS").ok()?.parse().ok()?;
    if n == 0 {
        return None;
    }
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Some(n)
}

/// Maps `f` over `items`, in parallel when the feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Runs `f` inside a rayon pool with exactly `n` threads. With the
/// `parallel` feature disabled the pool size is ignored and `f` runs
/// inline. Used by the benchmark suite to compare thread counts in a
/// single process.
#[cfg(feature = "parallel")]
pub fn with_threads<R: Send>(n: usize, f: impl FnOnce() -> R + Send) -> R {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .expect("failed to build thread pool");
    pool.install(f)
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<R>(_n: usize, f: impl FnOnce() -> R) -> R {
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_collect_preserves_order() {
        let out = map_collect((0..100).collect(), |i: i32| i * i);
        assert_eq!(out, (0..100).map(|i| i * i).collect::<Vec<_>>());
    }

    #[test]
    fn with_threads_runs() {
        assert_eq!(with_threads(2, || 7), 7);
    }
}
