//! Ambient-dimension cap.
//!
//! Word spaces grow as n^m; the cap keeps every computation inside a
//! predictable dense-coordinate budget. Exceeding it is a hard error, the
//! engine never switches representation silently.

use crate::error::{AlgebraError, Result};

pub const DIM_CAP: usize = 50_000;

pub fn ensure_capacity(dim: usize) -> Result<()> {
    if dim > DIM_CAP {
        Err(AlgebraError::CapacityExceeded { dim, cap: DIM_CAP })
    } else {
        Ok(())
    }
}

/// n^m with the cap enforced; errors instead of overflowing.
pub fn checked_power(n: usize, m: usize) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..m {
        acc = acc
            .checked_mul(n)
            .ok_or(AlgebraError::CapacityExceeded { dim: usize::MAX, cap: DIM_CAP })?;
        ensure_capacity(acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_is_enforced() {
        assert!(ensure_capacity(50_000).is_ok());
        assert!(matches!(
            ensure_capacity(50_001),
            Err(AlgebraError::CapacityExceeded { dim: 50_001, cap: 50_000 })
        ));
    }

    #[test]
    fn power_respects_cap() {
        assert_eq!(checked_power(3, 9).unwrap(), 19_683);
        assert!(checked_power(4, 8).is_err()); // 65536 > 50000
        assert!(checked_power(10, 30).is_err()); // would overflow without the check
    }
}
