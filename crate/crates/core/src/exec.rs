//! Data-parallel mapping with a sequential fallback.
//!
//! With the `parallel` feature, [`Execution::Parallel`] runs on rayon; without
//! it every execution mode runs on the calling thread. Results always come
//! back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
    /// A dedicated pool of this many worker threads.
    Threads(usize),
}

impl Execution {
    /// `jobs = 1` is sequential, `0` or `None` uses the global pool.
    pub fn from_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            Some(1) => Execution::Sequential,
            Some(0) | None => Execution::Parallel,
            Some(n) => Execution::Threads(n),
        }
    }

    pub fn is_parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

pub fn map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Threads(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
            Err(_) => items.par_iter().map(f).collect(),
        },
        #[cfg(not(feature = "parallel"))]
        Execution::Parallel | Execution::Threads(_) => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let expected: Vec<u64> = items.iter().map(|x| x * x).collect();
        for exec in [Execution::Sequential, Execution::Parallel, Execution::Threads(3)] {
            assert_eq!(map_ordered(&items, exec, |x| x * x), expected);
        }
    }

    #[test]
    fn jobs_mapping() {
        assert_eq!(Execution::from_jobs(Some(1)), Execution::Sequential);
        assert_eq!(Execution::from_jobs(None), Execution::Parallel);
        assert_eq!(Execution::from_jobs(Some(4)), Execution::Threads(4));
    }
}
