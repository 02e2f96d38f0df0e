//! Worker-count control for the parallel sweeps and Monte Carlo runs.

/// Environment variable capping the worker count; unset or 0 means automatic.
pub const THREADS_ENV: &str = "RANKLASH_THREADS";

fn requested_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

/// Runs `op` on a pool sized by [`THREADS_ENV`] (or the global pool when automatic).
pub fn install<R, F>(op: F) -> R
where
    F: FnOnce() -> R + Send,
    R: Send,
{
    match requested_threads() {
        0 => op(),
        n => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        },
    }
}

/// Runs `op` with exactly `n` workers, regardless of the environment.
pub fn with_threads<R, F>(n: usize, op: F) -> R
where
    F: FnOnce() -> R + Send,
    R: Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build()
        .expect("thread pool");
    pool.install(op)
}
