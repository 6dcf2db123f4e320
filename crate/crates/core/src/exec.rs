use crate::error::Result;

/// How grid-wide work is scheduled.
///
/// `Parallel` uses the rayon pool when the `parallel` feature is enabled and
/// silently runs sequentially otherwise. Results are always returned in grid
/// order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

pub(crate) fn try_map<T, F>(exec: Execution, xs: &[f64], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(f64) -> Result<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            xs.par_iter().map(|&x| f(x)).collect()
        }
        _ => xs.iter().map(|&x| f(x)).collect(),
    }
}
