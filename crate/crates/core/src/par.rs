//! Data-parallel helpers.
//!
//! With the default `parallel` feature the heavy inner loops (per-degree
//! rank scans, elimination row updates, per-point analyses) run on rayon;
//! without it the same helpers degrade to plain sequential iteration. Both
//! paths produce identical results: every parallel loop here writes disjoint
//! data in a fixed index order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// True when the crate was built with rayon support.
pub fn parallelism_enabled() -> bool {
    cfg!(feature = "parallel")
}

/// Order-preserving map over owned items.
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Apply `f` to each `size`-sized row of `data`.
pub(crate) fn for_each_row_mut<T, F>(data: &mut [T], size: usize, f: F)
where
    T: Send,
    F: Fn(&mut [T]) + Sync + Send,
{
    debug_assert!(size > 0);
    #[cfg(feature = "parallel")]
    {
        data.par_chunks_mut(size).for_each(f);
    }
    #[cfg(not(feature = "parallel"))]
    {
        data.chunks_mut(size).for_each(f);
    }
}
