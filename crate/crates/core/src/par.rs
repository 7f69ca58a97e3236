//! Execution strategy for the data-parallel loops.
//!
//! Without the `parallel` feature, [`Exec::Parallel`] silently runs
//! sequentially. Every helper returns results in input order, so the choice
//! of strategy never changes an answer.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `0..len`, preserving index order.
    pub fn map_range<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }

    /// Maps `f` over a slice, preserving order.
    pub fn map_slice<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// True iff `pred` holds for every index in `0..len`.
    pub fn all_range<F>(self, len: usize, pred: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..len).into_par_iter().all(pred);
        }
        (0..len).all(pred)
    }

    /// Smallest index in `0..len` for which `f` returns `Some`.
    pub fn find_first_range<T, F>(self, len: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..len)
                .into_par_iter()
                .filter_map(|i| f(i).map(|t| (i, t)))
                .find_first(|_| true);
        }
        (0..len).find_map(|i| f(i).map(|t| (i, t)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let f = |i: usize| i * i % 7;
        assert_eq!(
            Exec::Sequential.map_range(100, f),
            Exec::Parallel.map_range(100, f)
        );
        let first = |i: usize| (i % 13 == 12).then_some(i * 2);
        assert_eq!(Exec::Sequential.find_first_range(100, first), Some((12, 24)));
        assert_eq!(Exec::Parallel.find_first_range(100, first), Some((12, 24)));
        assert!(Exec::Parallel.all_range(50, |i| i < 50));
    }
}
