//! Process-wide numeric tolerance.
//!
//! Every identity check in the crate compares against [`default_tolerance`]
//! unless it pins its own bound. The value starts at [`DEFAULT_TOLERANCE`] and
//! may be replaced once at startup (the CLI reads `LANDE_TOLERANCE`).

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::LandeError;

/// Absolute tolerance used when nothing overrides it.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Environment variable consulted by [`init_from_env`].
pub const TOLERANCE_ENV: &str = "LANDE_TOLERANCE";

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(DEFAULT_TOLERANCE.to_bits());

pub fn default_tolerance() -> f64 {
    f64::from_bits(TOLERANCE_BITS.load(Ordering::Relaxed))
}

/// Replaces the process-wide tolerance. Rejects non-finite or negative values.
pub fn set_default_tolerance(tol: f64) -> Result<(), LandeError> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(LandeError::InvalidTolerance(tol.to_string()));
    }
    TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
    Ok(())
}

/// Parses a decimal tolerance string.
pub fn parse_tolerance(raw: &str) -> Result<f64, LandeError> {
    let tol: f64 = raw
        .trim()
        .parse()
        .map_err(|_| LandeError::InvalidTolerance(raw.to_string()))?;
    if !tol.is_finite() || tol < 0.0 {
        return Err(LandeError::InvalidTolerance(raw.to_string()));
    }
    Ok(tol)
}

/// Applies `LANDE_TOLERANCE` if set. Returns the tolerance now in effect.
pub fn init_from_env() -> Result<f64, LandeError> {
    if let Ok(raw) = std::env::var(TOLERANCE_ENV) {
        set_default_tolerance(parse_tolerance(&raw)?)?;
    }
    Ok(default_tolerance())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_tolerance("abc").is_err());
        assert!(parse_tolerance("-1e-3").is_err());
        assert!(parse_tolerance("inf").is_err());
        assert_eq!(parse_tolerance(" 1e-9 ").unwrap(), 1e-9);
    }
}
