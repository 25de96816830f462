//! Enumeration budgets.
//!
//! Every exhaustive sweep in the crate is gated by a [`Budget`]: a sweep that
//! would enumerate more than `2^bits` objects is refused with
//! [`Error::BudgetExceeded`] instead of silently running for hours. The
//! default of 24 bits can be overridden with the `TRL_BUDGET_BITS`
//! environment variable or per call site.

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET_BITS: u32 = 24;
pub const ENV_BUDGET_BITS: &str = "TRL_BUDGET_BITS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    bits: u32,
}

impl Budget {
    pub fn new(bits: u32) -> Self {
        Budget { bits }
    }

    /// Budget from `TRL_BUDGET_BITS`, falling back to the 24-bit default.
    pub fn from_env() -> Self {
        let bits = std::env::var(ENV_BUDGET_BITS)
            .ok()
            .and_then(|s| s.parse::<u32>().ok())
            .unwrap_or(DEFAULT_BUDGET_BITS);
        Budget { bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Largest admissible object count (saturating at `u128::MAX`).
    pub fn limit(&self) -> u128 {
        if self.bits >= 127 {
            u128::MAX
        } else {
            1u128 << self.bits
        }
    }

    /// Checks that a sweep of `count` objects fits.
    pub fn check_count(&self, count: u128) -> Result<()> {
        if count <= self.limit() {
            Ok(())
        } else {
            Err(Error::BudgetExceeded {
                required_bits: 128 - count.leading_zeros(),
                budget_bits: self.bits,
            })
        }
    }

    /// Checks that a sweep of `base^exp` objects fits, without materializing
    /// the count when it is astronomically large.
    pub fn check_pow(&self, base: u32, exp: u32) -> Result<()> {
        let required = (exp as f64) * (base as f64).log2();
        if required <= self.bits as f64 {
            Ok(())
        } else {
            Err(Error::BudgetExceeded {
                required_bits: required.ceil() as u32,
                budget_bits: self.bits,
            })
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET_BITS)
    }
}
