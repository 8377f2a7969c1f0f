use std::collections::HashMap;

use num_bigint::BigInt;

use super::{LinalgError, Matrix, Rational};

/// Largest size accepted by [`permanent`].
pub const PERMANENT_MAX_N: usize = 24;

/// Exact permanent by Ryser's inclusion–exclusion formula, walking the
/// column subsets in Gray-code order so each step updates the row sums by a
/// single column.
pub fn permanent(m: &Matrix) -> Result<Rational, LinalgError> {
    permanent_with_limit(m, PERMANENT_MAX_N)
}

pub fn permanent_with_limit(m: &Matrix, limit: usize) -> Result<Rational, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let limit = limit.min(PERMANENT_MAX_N);
    if n > limit {
        return Err(LinalgError::SizeGuard { n, limit });
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    if let Some(v) = small_integer_ryser(m) {
        return Ok(Rational::from(BigInt::from(v)));
    }

    let mut row_sums = vec![Rational::zero(); n];
    let mut in_set = vec![false; n];
    let mut total = Rational::zero();
    let mut size = 0usize;
    for k in 1u64..(1u64 << n) {
        // Gray code g(k) = k ^ (k >> 1) differs from g(k-1) in bit tz(k).
        let col = k.trailing_zeros() as usize;
        if in_set[col] {
            in_set[col] = false;
            size -= 1;
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s -= &m[(i, col)];
            }
        } else {
            in_set[col] = true;
            size += 1;
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s += &m[(i, col)];
            }
        }
        if row_sums.iter().any(Rational::is_zero) {
            continue;
        }
        let prod: Rational = row_sums.iter().cloned().product();
        if (n - size).is_multiple_of(2) {
            total += prod;
        } else {
            total -= &prod;
        }
    }
    Ok(total)
}

/// Ryser over `i128`; `None` when an entry is not a small integer or an
/// intermediate value overflows.
fn small_integer_ryser(m: &Matrix) -> Option<i128> {
    let n = m.rows();
    let ints = m.to_int_rows()?;
    let mut row_sums = vec![0i128; n];
    let mut in_set = vec![false; n];
    let mut total = 0i128;
    let mut size = 0usize;
    for k in 1u64..(1u64 << n) {
        let col = k.trailing_zeros() as usize;
        let sign = if in_set[col] { -1 } else { 1 };
        in_set[col] = !in_set[col];
        size = if sign > 0 { size + 1 } else { size - 1 };
        for (i, s) in row_sums.iter_mut().enumerate() {
            *s += sign * ints[i][col] as i128;
        }
        let mut prod = 1i128;
        for &s in &row_sums {
            prod = prod.checked_mul(s)?;
            if prod == 0 {
                break;
            }
        }
        total = if (n - size).is_multiple_of(2) {
            total.checked_add(prod)?
        } else {
            total.checked_sub(prod)?
        };
    }
    Some(total)
}

/// Exact permanent of a sparse integer matrix by dynamic programming over
/// the sets of columns used by the first rows. No size guard beyond 64
/// columns; fails with `SizeGuard` once more than `max_states` partial
/// column sets are live.
pub fn permanent_sparse(m: &Matrix, max_states: usize) -> Result<Rational, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n > 64 {
        return Err(LinalgError::SizeGuard { n, limit: 64 });
    }
    let mut states: HashMap<u64, Rational> = HashMap::from([(0u64, Rational::one())]);
    // Rows with few nonzeros first keep the frontier small.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| m.row(i).iter().filter(|e| !e.is_zero()).count());
    for i in order {
        let support: Vec<usize> = (0..n).filter(|&j| !m[(i, j)].is_zero()).collect();
        let mut next: HashMap<u64, Rational> = HashMap::new();
        for (mask, value) in &states {
            for &j in &support {
                if mask >> j & 1 == 0 {
                    *next.entry(mask | 1 << j).or_insert_with(Rational::zero) += &(value * &m[(i, j)]);
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        if next.len() > max_states {
            return Err(LinalgError::SizeGuard {
                n: next.len(),
                limit: max_states,
            });
        }
        states = next;
    }
    Ok(states.into_values().next().unwrap_or_else(Rational::zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(permanent(&Matrix::identity(5)).unwrap(), Rational::one());
        let ones = Matrix::from_int_rows(&[[1, 1], [1, 1]]);
        assert_eq!(permanent(&ones).unwrap(), Rational::from(2));
        let all3 = Matrix::from_int_rows(&[[1, 1, 1], [1, 1, 1], [1, 1, 1]]);
        assert_eq!(permanent(&all3).unwrap(), Rational::from(6));
        let m = Matrix::from_int_rows(&[[1, 2], [3, 4]]);
        assert_eq!(permanent(&m).unwrap(), Rational::from(10));
    }

    #[test]
    fn size_guard() {
        let m = Matrix::identity(25);
        assert_eq!(
            permanent(&m),
            Err(LinalgError::SizeGuard { n: 25, limit: 24 })
        );
        assert_eq!(
            permanent_with_limit(&Matrix::identity(5), 4),
            Err(LinalgError::SizeGuard { n: 5, limit: 4 })
        );
    }

    #[test]
    fn sparse_agrees_with_ryser() {
        let m = Matrix::from_int_rows(&[
            [0, 0, 0, -1],
            [0, 0, 1, -1],
            [0, 1, 0, -1],
            [-1, 1, 1, -1],
        ]);
        assert_eq!(permanent_sparse(&m, 100).unwrap(), permanent(&m).unwrap());
        let half = Matrix::from_fn(3, 3, |i, j| Rational::new((i + 1) as i64, (j + 2) as i64));
        assert_eq!(permanent_sparse(&half, 100).unwrap(), permanent(&half).unwrap());
        assert!(matches!(
            permanent_sparse(&Matrix::from_fn(6, 6, |_, _| Rational::one()), 3),
            Err(LinalgError::SizeGuard { .. })
        ));
    }

    #[test]
    fn overflow_falls_back_to_exact_arithmetic() {
        let big = Matrix::from_fn(3, 3, |_, _| Rational::from(i64::MAX));
        let expect = Rational::from(6) * Rational::from(i64::MAX) * Rational::from(i64::MAX) * Rational::from(i64::MAX);
        assert_eq!(permanent(&big).unwrap(), expect);
    }
}
