//! Fixed and changing truth-table positions.
//!
//! Positions are 1-based: position `p` holds the output on input `p - 1`.
//! Both sets depend only on `n`.

use crate::error::{Error, Result};
use serde::Serialize;

/// Largest n for which position arithmetic fits in a `u64`.
pub const POSITION_VARS_MAX: u32 = 63;

fn check_position_vars(n: u32) -> Result<()> {
    if !(1..=POSITION_VARS_MAX).contains(&n) {
        return Err(Error::VariableCount {
            n,
            min: 1,
            max: POSITION_VARS_MAX,
        });
    }
    Ok(())
}

/// The `n + 1` invariant positions of a class, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FixedPositions {
    n: u32,
    positions: Vec<u64>,
}

impl FixedPositions {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn positions(&self) -> &[u64] {
        &self.positions
    }

    /// Zero-based inputs, ascending. Input `j` has the top `j` of its `n`
    /// bits set: `0, 2^(n-1), 2^(n-1) + 2^(n-2), ..., 2^n - 1`.
    pub fn inputs(&self) -> impl Iterator<Item = u64> + '_ {
        self.positions.iter().map(|p| p - 1)
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, position: u64) -> bool {
        self.positions.binary_search(&position).is_ok()
    }
}

/// Runs the position-array procedure: start from `2^n` and subtract
/// `2^0, 2^1, ..., 2^(n-1)` in turn, recording each value. Returned ascending.
pub fn fixed_positions(n: u32) -> Result<FixedPositions> {
    check_position_vars(n)?;
    let mut array = Vec::with_capacity(n as usize + 1);
    let mut x = 1u64 << n;
    for i in 0..=n {
        array.push(x);
        if i < n {
            x -= 1u64 << i;
        }
    }
    array.reverse();
    Ok(FixedPositions {
        n,
        positions: array,
    })
}

/// Closed form `2^0, 2^0 + 2^(n-1), 2^0 + 2^(n-1) + 2^(n-2), ..., 2^n`.
pub fn fixed_positions_closed_form(n: u32) -> Result<Vec<u64>> {
    check_position_vars(n)?;
    let mut out = vec![1u64];
    let mut acc = 1u64;
    for t in 1..=n {
        acc += 1u64 << (n - t);
        out.push(acc);
    }
    Ok(out)
}

/// Positions in `[1, 2^n]` outside the fixed set, ascending. There are
/// `2^n - (n + 1)` of them.
pub fn changed_positions(n: u32) -> Result<Vec<u64>> {
    Ok(changed_positions_iter(n)?.collect())
}

/// Lazy form of [`changed_positions`]; usable for any n up to 63.
pub fn changed_positions_iter(n: u32) -> Result<impl Iterator<Item = u64>> {
    let fixed = fixed_positions(n)?;
    Ok(fixed
        .positions
        .windows(2)
        .map(|w| (w[0] + 1)..w[1])
        .collect::<Vec<_>>()
        .into_iter()
        .flatten())
}

/// Closed form as a union of shifted ranges:
/// `[1 .. 2^(n-j) - 1] + (2^0 + 2^(n-1) + ... + 2^(n-j+1))` for `j = 1..n`.
pub fn changed_positions_closed_form(n: u32) -> Result<Vec<u64>> {
    check_position_vars(n)?;
    let mut out = Vec::new();
    let mut offset = 1u64;
    for j in 1..=n {
        let span = (1u64 << (n - j)) - 1;
        out.extend((1..=span).map(|d| d + offset));
        offset += 1u64 << (n - j);
    }
    Ok(out)
}

/// Number of changing positions, `2^n - (n + 1)`.
pub fn changed_count(n: u32) -> Result<u64> {
    check_position_vars(n)?;
    Ok((1u64 << n) - (n as u64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_examples() {
        assert_eq!(fixed_positions(1).unwrap().positions(), &[1, 2]);
        assert_eq!(fixed_positions(2).unwrap().positions(), &[1, 3, 4]);
        assert_eq!(fixed_positions(3).unwrap().positions(), &[1, 5, 7, 8]);
        // Procedure by hand for n = 4: 16, 15, 13, 9, 1.
        assert_eq!(fixed_positions(4).unwrap().positions(), &[1, 9, 13, 15, 16]);
        assert!(fixed_positions(0).is_err());
    }

    #[test]
    fn changed_examples() {
        assert!(changed_positions(1).unwrap().is_empty());
        assert_eq!(changed_positions(2).unwrap(), vec![2]);
        assert_eq!(changed_positions(3).unwrap(), vec![2, 3, 4, 6]);
        assert!(changed_positions(0).is_err());
    }

    #[test]
    fn procedure_matches_closed_form() {
        for n in 1..=POSITION_VARS_MAX {
            assert_eq!(
                fixed_positions(n).unwrap().positions(),
                fixed_positions_closed_form(n).unwrap().as_slice(),
                "n={n}"
            );
        }
    }

    #[test]
    fn changed_matches_closed_form_and_partitions_range() {
        for n in 1..=14 {
            let fixed = fixed_positions(n).unwrap();
            let changed = changed_positions(n).unwrap();
            assert_eq!(changed, changed_positions_closed_form(n).unwrap());
            assert_eq!(fixed.len(), n as usize + 1);
            assert_eq!(changed.len() as u64, changed_count(n).unwrap());
            let mut all: Vec<u64> = fixed.positions().iter().copied().chain(changed).collect();
            all.sort_unstable();
            assert_eq!(all, (1..=(1u64 << n)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn inputs_have_top_bits_set() {
        let f = fixed_positions(5).unwrap();
        assert_eq!(f.inputs().collect::<Vec<_>>(), vec![0, 16, 24, 28, 30, 31]);
    }
}
