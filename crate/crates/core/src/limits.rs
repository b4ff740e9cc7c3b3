//! Process-wide size limits that a driver can tighten at startup.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{check_bound, Result};

static MATRIX_ENTRY_LIMIT: AtomicUsize = AtomicUsize::new(usize::MAX);

/// Caps the number of entries of any dense integer matrix assembled for an
/// abelianization or a chain complex.
pub fn set_matrix_entry_limit(limit: usize) {
    MATRIX_ENTRY_LIMIT.store(limit, Ordering::Relaxed);
}

pub fn matrix_entry_limit() -> usize {
    MATRIX_ENTRY_LIMIT.load(Ordering::Relaxed)
}

pub(crate) fn check_matrix(what: &str, rows: usize, cols: usize) -> Result<()> {
    check_bound(what, rows.saturating_mul(cols), matrix_entry_limit())
}
