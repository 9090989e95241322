//! Worker-pool sizing, shared by training, inference, and the bench harness.

/// Number of worker threads to use. `PFC_THREADS` caps it; the default is the
/// machine's available parallelism.
pub fn worker_count() -> usize {
    let hw = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    match std::env::var("PFC_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => n.min(hw),
            _ => hw,
        },
        Err(_) => hw,
    }
}

/// A rayon pool sized by [`worker_count`]. Pools are cheap at our scale and a
/// local pool keeps the cap per-invocation instead of process-global.
pub fn pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count())
        .build()
        .expect("thread pool construction")
}
