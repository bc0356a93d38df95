//! Data-parallel helpers. With the `parallel` feature these fan out over the
//! rayon pool; without it they run sequentially. Results always come back in
//! input order.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_range<T, F>(range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return range.into_par_iter().map(f).collect();
    #[cfg(not(feature = "parallel"))]
    range.map(f).collect()
}

pub fn map_slice<'a, S, T, F>(items: &'a [S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&'a S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).collect();
    #[cfg(not(feature = "parallel"))]
    items.iter().map(f).collect()
}

pub fn filter_slice<S, F>(items: &[S], keep: F) -> Vec<&S>
where
    S: Sync,
    F: Fn(&S) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().filter(|s| keep(s)).collect();
    #[cfg(not(feature = "parallel"))]
    items.iter().filter(|s| keep(s)).collect()
}

pub fn count_slice<S, F>(items: &[S], keep: F) -> usize
where
    S: Sync,
    F: Fn(&S) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().filter(|s| keep(s)).count();
    #[cfg(not(feature = "parallel"))]
    items.iter().filter(|s| keep(s)).count()
}

/// `true` when the library was built with rayon.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
