//! Operation counters for the h-value recurrence.
//!
//! Only compiled with the `instrument` feature; otherwise every call is a
//! no-op and [`h_values_computed`] always reports zero.

#[cfg(feature = "instrument")]
mod imp {
    use std::cell::Cell;

    thread_local! {
        static H_VALUES: Cell<u64> = const { Cell::new(0) };
    }

    #[inline]
    pub(crate) fn add_h_values(count: usize) {
        H_VALUES.with(|c| c.set(c.get() + count as u64));
    }

    pub fn h_values_computed() -> u64 {
        H_VALUES.with(Cell::get)
    }

    pub fn reset() {
        H_VALUES.with(|c| c.set(0));
    }
}

#[cfg(not(feature = "instrument"))]
mod imp {
    #[inline(always)]
    pub(crate) fn add_h_values(_count: usize) {}

    pub fn h_values_computed() -> u64 {
        0
    }

    pub fn reset() {}
}

pub(crate) use imp::add_h_values;
pub use imp::{h_values_computed, reset};

/// Whether the crate was built with counting enabled.
pub const ENABLED: bool = cfg!(feature = "instrument");
