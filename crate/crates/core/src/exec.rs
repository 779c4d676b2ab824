//! Case execution: a sequential baseline and a rayon-backed data-parallel
//! path. Without the `parallel` feature every mode runs sequentially.
//!
//! Results always come back in input order, so callers that sort by case id
//! produce identical output for every worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    #[default]
    Sequential,
    Parallel {
        workers: usize,
    },
}

impl Exec {
    /// One worker means sequential; more means a pool of that size.
    pub fn from_workers(workers: usize) -> Self {
        if workers <= 1 {
            Exec::Sequential
        } else {
            Exec::Parallel { workers }
        }
    }

    pub fn workers(self) -> usize {
        match self {
            Exec::Sequential => 1,
            Exec::Parallel { workers } => workers,
        }
    }

    /// Applies `f` to every item, returning results in input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            // A dedicated pool also pins the inner convolution kernels to the
            // requested thread count, including the single-threaded baseline.
            match rayon::ThreadPoolBuilder::new()
                .num_threads(self.workers())
                .build()
            {
                Ok(pool) => match self {
                    Exec::Sequential => pool.install(|| items.iter().map(&f).collect()),
                    Exec::Parallel { .. } => pool.install(|| items.par_iter().map(&f).collect()),
                },
                Err(_) => items.iter().map(f).collect(),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            items.iter().map(f).collect()
        }
    }

    /// Runs a closure inside this execution context.
    pub fn install<R: Send>(self, f: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        {
            match rayon::ThreadPoolBuilder::new()
                .num_threads(self.workers())
                .build()
            {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            f()
        }
    }
}
