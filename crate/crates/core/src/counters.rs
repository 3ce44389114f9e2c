//! Lightweight operation counters backing the complexity checks.
//!
//! The counters are thread-local so concurrent chains do not interfere.

use std::cell::Cell;

thread_local! {
    static WEIGHT_LOOKUPS: Cell<u64> = const { Cell::new(0) };
    static PAIR_TERMS: Cell<u64> = const { Cell::new(0) };
}

/// Reset both counters for the current thread.
pub fn reset() {
    WEIGHT_LOOKUPS.with(|c| c.set(0));
    PAIR_TERMS.with(|c| c.set(0));
}

/// Per-feature weight reads performed by from-scratch logit evaluation.
pub fn weight_lookups() -> u64 {
    WEIGHT_LOOKUPS.with(|c| c.get())
}

/// Bernoulli likelihood terms evaluated.
pub fn pair_terms() -> u64 {
    PAIR_TERMS.with(|c| c.get())
}

#[inline]
pub(crate) fn note_weight_lookup() {
    WEIGHT_LOOKUPS.with(|c| c.set(c.get() + 1));
}

#[inline]
pub(crate) fn note_pair_term() {
    PAIR_TERMS.with(|c| c.set(c.get() + 1));
}
