//! Cooperative time limits for long computations.
//!
//! A deadline is installed per thread; the Gröbner engine polls it and
//! aborts with [`Error::ResourceLimit`] once it has passed. Parallel helpers
//! re-install the caller's deadline on worker threads.

use std::cell::Cell;
use std::time::Instant;

use crate::error::{Error, Result};

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Runs `f` with `deadline` installed on the current thread, restoring the
/// previous deadline afterwards.
pub fn with_deadline<R>(deadline: Option<Instant>, f: impl FnOnce() -> R) -> R {
    let prev = DEADLINE.with(|d| d.replace(deadline));
    let out = f();
    DEADLINE.with(|d| d.set(prev));
    out
}

pub fn current_deadline() -> Option<Instant> {
    DEADLINE.with(|d| d.get())
}

pub fn check() -> Result<()> {
    match current_deadline() {
        Some(t) if Instant::now() >= t => Err(Error::ResourceLimit("time limit reached".into())),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    #[test]
    fn expired_deadline_is_reported() {
        let past = Instant::now() - Duration::from_millis(1);
        assert!(with_deadline(Some(past), check).is_err());
        assert!(check().is_ok());
    }
}
