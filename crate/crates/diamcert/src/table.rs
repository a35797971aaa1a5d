#![doc = include_str!("../../../book/src/recursion-table.md")]

use std::collections::HashMap;
use std::io::{self, Write};

use num_bigint::BigUint;

use crate::Error;

/// Exact table of the recursive upper bound.
///
/// Entries are indexed by `(d, i)` with `i = n - d`:
///
/// * `entry(3, i) = i` (Hirsch bound at dimension 3),
/// * `entry(d, i) = entry(d-1, i)` for `i < d` (diagonal reduction), and
/// * `entry(d, i) = entry(d-1, i) + 2 * entry(d, (d+i)/2 - d) + 2` otherwise.
///
/// Two storage modes: `FullMemo` keeps every dimension's row and grows them
/// lazily; `Rolling` keeps a fixed-capacity window advanced one dimension at
/// a time, for sweeps where only the current dimension is read.
#[derive(Debug, Clone)]
pub struct DiameterTable {
    mode: Mode,
}

#[derive(Debug, Clone)]
enum Mode {
    /// `rows[k]` is the row for dimension `3 + k`.
    FullMemo { rows: Vec<Vec<BigUint>> },
    /// Single vector holding row `current_dim`. Indexes `i < current_dim`
    /// are frozen diagonal values (equal across all dimensions `>= i`), so a
    /// row advance only rewrites indexes `i >= current_dim`.
    Rolling {
        row: Vec<BigUint>,
        current_dim: u64,
        capacity: usize,
    },
}

impl DiameterTable {
    /// A lazily grown table keeping all dimensions from 3 upward.
    pub fn new_full_memo() -> Self {
        DiameterTable {
            mode: Mode::FullMemo {
                rows: vec![Vec::new()],
            },
        }
    }

    /// A fixed-capacity rolling table initialized at dimension 3.
    pub fn new_rolling(capacity: usize) -> Self {
        let row = (0..capacity).map(BigUint::from).collect();
        DiameterTable {
            mode: Mode::Rolling {
                row,
                current_dim: 3,
                capacity,
            },
        }
    }

    /// Dimension of the most recent row in rolling mode.
    pub fn current_dim(&self) -> Option<u64> {
        match &self.mode {
            Mode::Rolling { current_dim, .. } => Some(*current_dim),
            Mode::FullMemo { .. } => None,
        }
    }

    /// Exact value of the recursion at `(d, n)`.
    ///
    /// Full-memo mode extends rows as needed. Rolling mode serves only the
    /// current dimension (any stored index) and the previous dimension on
    /// its intact diagonal prefix; anything else is a planning bug surfaced
    /// as [`Error::OutOfRange`].
    pub fn tilde_delta(&mut self, d: u64, n: u64) -> Result<BigUint, Error> {
        if d < 3 || n < d {
            return Err(Error::OutOfRange {
                what: "table requires n >= d >= 3",
            });
        }
        let i = (n - d) as usize;
        match &mut self.mode {
            Mode::FullMemo { rows } => {
                Self::extend_full(rows, d, i);
                Ok(rows[(d - 3) as usize][i].clone())
            }
            Mode::Rolling {
                row,
                current_dim,
                capacity,
            } => {
                if i >= *capacity {
                    return Err(Error::OutOfRange {
                        what: "rolling row capacity exceeded",
                    });
                }
                let ok = d == *current_dim || (d + 1 == *current_dim && (i as u64) < d + 1);
                if !ok {
                    return Err(Error::OutOfRange {
                        what: "rolling mode serves only the current dimension window",
                    });
                }
                Ok(row[i].clone())
            }
        }
    }

    /// Advances the rolling window by one dimension, recomputing exactly the
    /// indexes `i >= new_dim` (everything below is a frozen diagonal value).
    pub fn advance_dimension(&mut self) -> Result<(), Error> {
        match &mut self.mode {
            Mode::FullMemo { .. } => Err(Error::OutOfRange {
                what: "advance_dimension applies to rolling mode only",
            }),
            Mode::Rolling {
                row,
                current_dim,
                capacity,
            } => {
                let d = *current_dim + 1;
                let start = usize::try_from(d).unwrap_or(*capacity).min(*capacity);
                for i in start..*capacity {
                    // n = d + i >= 2d here; the half index is strictly below i.
                    let j = ((d as usize + i) / 2) - d as usize;
                    let (left, right) = row.split_at_mut(i);
                    right[0] += (&left[j] << 1u32) + 2u32;
                }
                *current_dim = d;
                Ok(())
            }
        }
    }

    /// Rough heap footprint of the stored rows, in bytes.
    pub fn memory_estimate(&self) -> usize {
        let count_row = |row: &Vec<BigUint>| -> usize {
            row.iter()
                .map(|v| std::mem::size_of::<BigUint>() + 8 * ((v.bits() as usize + 63) / 64))
                .sum()
        };
        match &self.mode {
            Mode::FullMemo { rows } => rows.iter().map(count_row).sum(),
            Mode::Rolling { row, .. } => count_row(row),
        }
    }

    /// Writes `d,n,value` lines for `n` in `[n_lo, n_hi]` (full-memo mode).
    pub fn dump_csv<W: Write>(&mut self, d: u64, n_lo: u64, n_hi: u64, out: &mut W) -> io::Result<()> {
        writeln!(out, "d,n,tilde_delta")?;
        for n in n_lo..=n_hi {
            let v = self
                .tilde_delta(d, n)
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e.to_string()))?;
            writeln!(out, "{d},{n},{v}")?;
        }
        Ok(())
    }

    fn extend_full(rows: &mut Vec<Vec<BigUint>>, d: u64, i: usize) {
        let d_idx = (d - 3) as usize;
        while rows.len() <= d_idx {
            rows.push(Vec::new());
        }
        // Row 3 is the Hirsch bound; each later row needs its predecessor at
        // the same index and itself at the half index, so fill dimension by
        // dimension, left to right.
        let row3 = &mut rows[0];
        while row3.len() <= i {
            row3.push(BigUint::from(row3.len()));
        }
        for k in 1..=d_idx {
            let dd = k + 3;
            let (before, after) = rows.split_at_mut(k);
            let prev = &before[k - 1];
            let row = &mut after[0];
            while row.len() <= i {
                let idx = row.len();
                let v = if idx < dd {
                    prev[idx].clone()
                } else {
                    &prev[idx] + (&row[(dd + idx) / 2 - dd] << 1u32) + 2u32
                };
                row.push(v);
            }
        }
    }
}

/// Independent naive oracle: the recursion evaluated top-down with
/// memoization, sharing no code with [`DiameterTable`].
pub fn oracle_tilde(d: u64, n: u64) -> BigUint {
    assert!(d >= 3 && n >= d, "oracle requires n >= d >= 3");
    fn go(d: u64, n: u64, memo: &mut HashMap<(u64, u64), BigUint>) -> BigUint {
        if d == 3 {
            return BigUint::from(n - 3);
        }
        if let Some(v) = memo.get(&(d, n)) {
            return v.clone();
        }
        let v = if n < 2 * d {
            go(d - 1, n - 1, memo)
        } else {
            go(d - 1, n - 1, memo) + (go(d, n / 2, memo) << 1u32) + 2u32
        };
        memo.insert((d, n), v.clone());
        v
    }
    go(d, n, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full(d: u64, n: u64) -> BigUint {
        DiameterTable::new_full_memo().tilde_delta(d, n).unwrap()
    }

    #[test]
    fn worked_values() {
        assert_eq!(full(5, 13), BigUint::from(18u32));
        assert_eq!(full(3, 11), BigUint::from(8u32));
        assert_eq!(full(4, 8), BigUint::from(6u32));
        assert_eq!(full(6, 24), BigUint::from(98u32));
        assert_eq!(full(5, 10), BigUint::from(9u32));
    }

    #[test]
    fn diagonal_is_zero() {
        for d in 3..40 {
            assert_eq!(full(d, d), BigUint::from(0u32), "d = {d}");
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_tilde(5, 13), BigUint::from(18u32));
        assert_eq!(oracle_tilde(3, 3), BigUint::from(0u32));
        assert_eq!(oracle_tilde(5, 10), BigUint::from(9u32));
    }

    #[test]
    fn rolling_matches_worked_example() {
        let mut t = DiameterTable::new_rolling(11);
        t.advance_dimension().unwrap();
        t.advance_dimension().unwrap();
        assert_eq!(t.current_dim(), Some(5));
        assert_eq!(t.tilde_delta(5, 13).unwrap(), BigUint::from(18u32));
    }

    #[test]
    fn rolling_capacity_one() {
        let mut t = DiameterTable::new_rolling(1);
        for d in 4..20 {
            t.advance_dimension().unwrap();
            assert_eq!(t.tilde_delta(d, d).unwrap(), BigUint::from(0u32));
        }
    }

    #[test]
    fn rolling_out_of_range_reads() {
        let mut t = DiameterTable::new_rolling(8);
        t.advance_dimension().unwrap(); // at d = 4
        assert!(t.tilde_delta(4, 20).is_err()); // beyond capacity
        assert!(t.tilde_delta(6, 8).is_err()); // not materialized yet
        // previous row readable only on its diagonal prefix
        assert!(t.tilde_delta(3, 6).is_ok()); // i = 3 < 4
        assert!(t.tilde_delta(3, 8).is_err()); // i = 5 >= 4, overwritten
    }

    #[test]
    fn rolling_agrees_with_full_memo() {
        let mut rolling = DiameterTable::new_rolling(80);
        let mut fullt = DiameterTable::new_full_memo();
        for d in 3..=12u64 {
            if d > 3 {
                rolling.advance_dimension().unwrap();
            }
            for n in d..=(d + 79) {
                assert_eq!(
                    rolling.tilde_delta(d, n).unwrap(),
                    fullt.tilde_delta(d, n).unwrap(),
                    "mismatch at ({d},{n})"
                );
            }
        }
    }

    #[test]
    fn monotone_in_n_sampled() {
        // Tested property, never assumed by the checker.
        let mut t = DiameterTable::new_full_memo();
        for d in 3..=12u64 {
            let mut prev = t.tilde_delta(d, d).unwrap();
            for n in (d + 1)..=200 {
                let cur = t.tilde_delta(d, n).unwrap();
                assert!(cur >= prev, "monotonicity broken at ({d},{n})");
                prev = cur;
            }
        }
    }

    #[test]
    fn diagonal_reduction() {
        let mut t = DiameterTable::new_full_memo();
        for d in 4..=12u64 {
            for n in d..(2 * d) {
                assert_eq!(
                    t.tilde_delta(d, n).unwrap(),
                    t.tilde_delta(d - 1, n - 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn csv_dump() {
        let mut t = DiameterTable::new_full_memo();
        let mut buf = Vec::new();
        t.dump_csv(5, 5, 13, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("d,n,tilde_delta\n"));
        assert!(text.contains("5,13,18"));
    }
}
