//! Size guards shared by every enumeration in the crate.
//!
//! The guards reject inputs outright; nothing is ever silently truncated.

use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::max_product`].
pub const MAX_N_ENV: &str = "PLETHYST_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by `partitions_of` and `kostka_matrix`.
    pub max_partition_size: usize,
    /// Hard cap on `m * n` for plethysm expansions.
    pub max_product: usize,
    /// Above this product a warning is logged (the run still proceeds).
    pub warn_product: usize,
    /// Largest `l(nu)` for the Jacobi-Trudi signed sum (it has `l!` terms).
    pub max_jacobi_trudi_length: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_partition_size: 30,
            max_product: 16,
            warn_product: 12,
            max_jacobi_trudi_length: 7,
        }
    }
}

impl Limits {
    /// Defaults, with `max_product` taken from `PLETHYST_MAX_N` when it is set
    /// to a valid integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_product = cap;
            limits.max_partition_size = limits.max_partition_size.max(cap);
        }
        limits
    }

    pub(crate) fn check_partition_size(&self, n: usize) -> Result<()> {
        check("partition size", n, self.max_partition_size)
    }

    pub(crate) fn check_product(&self, mn: usize) -> Result<()> {
        check("m*n", mn, self.max_product)?;
        if mn > self.warn_product {
            log::warn!(
                "m*n = {mn} is above {}; enumeration may be slow",
                self.warn_product
            );
        }
        Ok(())
    }
}

fn check(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::BoundExceeded { what, value, limit })
    } else {
        Ok(())
    }
}
