//! Data-parallel primitives with a sequential fallback when the `parallel`
//! feature is off. Every helper preserves input order so results do not depend
//! on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).collect();

    #[cfg(not(feature = "parallel"))]
    return items.iter().map(f).collect();
}

pub(crate) fn map_range<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return (0..len).into_par_iter().map(f).collect();

    #[cfg(not(feature = "parallel"))]
    return (0..len).map(f).collect();
}

/// Indices in `0..len` satisfying `pred`, ascending.
pub(crate) fn filter_range<F>(len: usize, pred: F) -> Vec<u32>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return (0..len)
        .into_par_iter()
        .filter(|&i| pred(i))
        .map(|i| i as u32)
        .collect();

    #[cfg(not(feature = "parallel"))]
    return (0..len).filter(|&i| pred(i)).map(|i| i as u32).collect();
}

/// Smallest index in `0..len` satisfying `pred`.
pub(crate) fn find_first<F>(len: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return (0..len).into_par_iter().find_first(|&i| pred(i));

    #[cfg(not(feature = "parallel"))]
    return (0..len).find(|&i| pred(i));
}

pub(crate) fn sort_by<T, F>(items: &mut [T], cmp: F)
where
    T: Send,
    F: Fn(&T, &T) -> std::cmp::Ordering + Sync,
{
    #[cfg(feature = "parallel")]
    items.par_sort_unstable_by(cmp);

    #[cfg(not(feature = "parallel"))]
    items.sort_unstable_by(cmp);
}
