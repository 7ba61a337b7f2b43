//! Exact counts of equilateral triangles in the grid.

use crate::error::{Error, Result};
use crate::lattice::GridSpec;

/// `C(n, k)` by the multiplicative formula. Each partial product
/// `C(n − k + i, i)` is an integer, so the division is exact at every step.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        let factor = (n - k) as u128 + i;
        acc = acc.checked_mul(factor).ok_or(Error::Overflow("binomial"))? / i;
    }
    Ok(acc)
}

/// `C(n + 2, 4)`.
pub fn count_closed_form(grid: &GridSpec) -> Result<u128> {
    binomial(grid.n() + 2, 4)
}

/// Sum over the side `s` of the circumscribing upward triangle: `s` tilts
/// times `C(N − s + 2, 2)` placements.
pub fn count_decomposition(grid: &GridSpec) -> Result<u128> {
    let side = grid.side() as u128;
    let mut total: u128 = 0;
    for s in 1..=side {
        let room = side - s;
        let placements = (room + 1) * (room + 2) / 2;
        let term = s
            .checked_mul(placements)
            .ok_or(Error::Overflow("count_decomposition"))?;
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("count_decomposition"))?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: u64) -> GridSpec {
        GridSpec::new(n).unwrap()
    }

    /// Pascal's rule, independent of the multiplicative formula.
    fn pascal(rows: usize) -> Vec<Vec<u128>> {
        let mut table = vec![vec![1u128]];
        for r in 1..=rows {
            let prev = &table[r - 1];
            let mut row = vec![1u128; r + 1];
            for k in 1..r {
                row[k] = prev[k - 1] + prev[k];
            }
            table.push(row);
        }
        table
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 4).unwrap(), 1);
        assert_eq!(binomial(5, 4).unwrap(), 5);
        assert_eq!(binomial(12, 4).unwrap(), 495);
        assert_eq!(binomial(3, 4).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
    }

    #[test]
    fn binomial_matches_pascal() {
        let table = pascal(120);
        for (n, row) in table.iter().enumerate() {
            for (k, &expected) in row.iter().enumerate() {
                assert_eq!(
                    binomial(n as u64, k as u64).unwrap(),
                    expected,
                    "C({n},{k})"
                );
            }
        }
    }

    #[test]
    fn binomial_overflow_is_reported() {
        assert_eq!(binomial(300, 150), Err(Error::Overflow("binomial")));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(count_closed_form(&grid(1)).unwrap(), 0);
        assert_eq!(count_closed_form(&grid(2)).unwrap(), 1);
        assert_eq!(count_closed_form(&grid(10)).unwrap(), 495);
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(count_decomposition(&grid(1)).unwrap(), 0);
        assert_eq!(count_decomposition(&grid(2)).unwrap(), 1);
        assert_eq!(count_decomposition(&grid(3)).unwrap(), 5);
        // 45+72+84+84+75+60+42+24+9
        assert_eq!(count_decomposition(&grid(10)).unwrap(), 495);
    }

    #[test]
    fn large_n_counts() {
        let g = grid(100_000);
        let c = count_closed_form(&g).unwrap();
        assert!(c < u64::MAX as u128);
        assert_eq!(c, 100_002u128 * 100_001 * 100_000 * 99_999 / 24);
        assert_eq!(count_decomposition(&g).unwrap(), c);
        let widest = grid(GridSpec::MAX_N);
        assert!(count_closed_form(&widest).is_ok());
    }

    #[test]
    fn strictly_increasing_from_two() {
        let mut last = count_closed_form(&grid(2)).unwrap();
        for n in 3..=200 {
            let next = count_closed_form(&grid(n)).unwrap();
            assert!(next > last);
            last = next;
        }
    }
}
