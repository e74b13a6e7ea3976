//! Parallel Monte Carlo trials with deterministic merging.

use excitable_core::RngStream;
use rayon::prelude::*;

use crate::{CliError, CliResult};

/// Runs `trial(i, rng_i)` for `i in 0..trials` on `jobs` threads, where `rng_i`
/// is the stream `(seed, i)`. Results come back in trial order, and the error
/// reported is the one from the lowest failing index, so the outcome does not
/// depend on scheduling.
pub fn run_trials<T, F>(seed: u64, trials: u64, jobs: usize, trial: F) -> CliResult<Vec<T>>
where
    T: Send,
    F: Fn(u64, &mut RngStream) -> CliResult<T> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::config(format!("thread pool: {e}")))?;
    let results: Vec<CliResult<T>> = pool.install(|| {
        (0..trials).into_par_iter().map(|i| trial(i, &mut RngStream::new(seed, i))).collect()
    });
    results.into_iter().collect()
}
