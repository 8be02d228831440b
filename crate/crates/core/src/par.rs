//! Data-parallel maps over independent cases (flats, exterior degrees,
//! arrangements of a suite). With the `parallel` feature off every call runs
//! sequentially; results are always returned in input order.

#[cfg(feature = "parallel")]
use crate::limits;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

impl Parallelism {
    /// `Parallel` when the crate was built with the `parallel` feature.
    pub fn available() -> Self {
        if cfg!(feature = "parallel") {
            Parallelism::Parallel
        } else {
            Parallelism::Sequential
        }
    }
}

/// `items.map(f)`, in parallel when requested and available. The caller's
/// deadline is installed on every worker.
pub fn map<T, R, G>(par: Parallelism, items: Vec<T>, f: G) -> Vec<R>
where
    T: Send,
    R: Send,
    G: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par == Parallelism::Parallel && items.len() > 1 {
        use rayon::prelude::*;
        let deadline = limits::current_deadline();
        return items
            .into_par_iter()
            .map(|x| limits::with_deadline(deadline, || f(x)))
            .collect();
    }
    let _ = par;
    items.into_iter().map(f).collect()
}

/// Like [`map`] over fallible work, returning the first error in input order.
pub fn try_map<T, R, E, G>(par: Parallelism, items: Vec<T>, f: G) -> Result<Vec<R>, E>
where
    T: Send,
    R: Send,
    E: Send,
    G: Fn(T) -> Result<R, E> + Sync + Send,
{
    map(par, items, f).into_iter().collect()
}

/// Runs `f` on a dedicated pool of `threads` workers (or inline when the
/// `parallel` feature is off).
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if threads > 0 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            let deadline = limits::current_deadline();
            return pool.install(move || limits::with_deadline(deadline, f));
        }
    }
    let _ = threads;
    f()
}
