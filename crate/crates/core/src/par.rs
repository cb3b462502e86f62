//! Data-parallel helpers. With the `parallel` feature they run on a rayon
//! pool sized by `REPLIKA_WORKERS` (default: all cores); without it they
//! are plain sequential loops. Results keep input order either way.

#[cfg(feature = "parallel")]
mod imp {
    use std::sync::OnceLock;

    use rayon::prelude::*;
    use rayon::{ThreadPool, ThreadPoolBuilder};

    fn pool() -> &'static ThreadPool {
        static POOL: OnceLock<ThreadPool> = OnceLock::new();
        POOL.get_or_init(|| {
            let mut b = ThreadPoolBuilder::new();
            if let Some(n) = super::workers_from_env() {
                b = b.num_threads(n);
            }
            b.build().expect("thread pool")
        })
    }

    pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        pool().install(|| items.par_iter().map(f).collect())
    }

    pub fn map_range<R: Send>(n: usize, f: impl Fn(usize) -> R + Sync + Send) -> Vec<R> {
        pool().install(|| (0..n).into_par_iter().map(f).collect())
    }

    pub fn workers() -> usize {
        pool().current_num_threads()
    }
}

#[cfg(not(feature = "parallel"))]
mod imp {
    pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        items.iter().map(f).collect()
    }

    pub fn map_range<R: Send>(n: usize, f: impl Fn(usize) -> R + Sync + Send) -> Vec<R> {
        (0..n).map(f).collect()
    }

    pub fn workers() -> usize {
        1
    }
}

/// Worker count requested through `REPLIKA_WORKERS`, if set to a positive integer.
pub fn workers_from_env() -> Option<usize> {
    std::env::var("REPLIKA_WORKERS")
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

pub use imp::{map, map_range, workers};

/// Runs `f` over `0..n` sequentially regardless of the feature, for comparison.
pub fn map_range_sequential<R>(n: usize, f: impl Fn(usize) -> R) -> Vec<R> {
    (0..n).map(f).collect()
}
