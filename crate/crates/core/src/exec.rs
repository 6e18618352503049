//! Execution policy for the data-parallel loops (repetitions, oracle queries,
//! Monte-Carlo trials). Without the `parallel` feature every policy runs
//! sequentially. Results never depend on the policy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `f` over `0..len`, results in index order.
    pub fn map_indexed<T, F>(self, len: usize, f: F) -> Vec<T>
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

    /// Applies `f` to every element in place.
    pub fn for_each_mut<T, F>(self, items: &mut [T], f: F)
    where
        T: Send,
        F: Fn(&mut T) + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            items.par_iter_mut().for_each(f);
            return;
        }
        items.iter_mut().for_each(f);
    }

    /// Sums `f(item)` over a mutable slice.
    pub fn sum_mut<T, F>(self, items: &mut [T], f: F) -> usize
    where
        T: Send,
        F: Fn(&mut T) -> usize + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter_mut().map(f).sum();
        }
        items.iter_mut().map(f).sum()
    }

    /// Per-index vote counting: adds one to `counts[i]` for every `i` that
    /// `f(rep)` yields, over `0..reps`. Addition commutes, so the result is
    /// identical for both policies.
    pub fn count_votes<F, I>(self, reps: usize, slots: usize, f: F) -> Vec<u32>
    where
        F: Fn(usize) -> I + Sync + Send,
        I: IntoIterator<Item = usize>,
    {
        let tally = |mut acc: Vec<u32>, rep: usize| {
            for i in f(rep) {
                acc[i] += 1;
            }
            acc
        };
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..reps)
                .into_par_iter()
                .fold(|| vec![0u32; slots], tally)
                .reduce(
                    || vec![0u32; slots],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                );
        }
        (0..reps).fold(vec![0u32; slots], tally)
    }
}
