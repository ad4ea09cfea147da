//! Data-parallel helpers.
//!
//! With the `parallel` feature (default) these run on the rayon global pool;
//! without it they are plain sequential loops. Output order never depends on
//! scheduling, so results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Indices `i < n` for which `keep(i)` holds, in ascending order.
pub fn filter_indices<F>(n: usize, keep: F) -> Vec<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().filter(|&i| keep(i)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).filter(|&i| keep(i)).collect()
    }
}

/// `items.map(f)` preserving input order.
pub fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// True when `pred` holds for every index below `n`.
pub fn all_indices<F>(n: usize, pred: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().all(pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).all(pred)
    }
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
