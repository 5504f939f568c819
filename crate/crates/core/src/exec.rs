//! Execution-mode switch for the data-parallel build paths.
//!
//! Tensor components are independent, so filling them is embarrassingly
//! parallel. With the `parallel` feature the work goes through rayon; a
//! runtime switch can force sequential execution (useful for benchmarking
//! the two paths against each other and for `--jobs 1`). Without the
//! feature everything is sequential.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

static MODE: AtomicU8 = AtomicU8::new(1);

pub fn set_exec_mode(mode: ExecMode) {
    MODE.store(
        match mode {
            ExecMode::Sequential => 0,
            ExecMode::Parallel => 1,
        },
        Ordering::Relaxed,
    );
}

pub fn exec_mode() -> ExecMode {
    match MODE.load(Ordering::Relaxed) {
        0 => ExecMode::Sequential,
        _ => ExecMode::Parallel,
    }
}

/// Map `f` over `0..len`, in parallel when enabled and worthwhile.
pub fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if exec_mode() == ExecMode::Parallel && len >= 64 {
            use rayon::prelude::*;
            return (0..len).into_par_iter().map(f).collect();
        }
    }
    (0..len).map(f).collect()
}
