//! Exact linear algebra: rank by elimination, and a Bland-rule simplex used
//! as a feasibility oracle for non-negative combinations.

#![allow(clippy::needless_range_loop)]

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    row_reduce(&mut m)
}

/// Reduces `m` in place to row echelon form and returns its rank.
pub fn row_reduce(m: &mut [Vec<Rational>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for j in c..cols {
                let d = &f * &m[r][j];
                m[i][j] -= d;
            }
        }
        r += 1;
    }
    r
}

/// Rank of a small integer matrix by fraction-free (Bareiss) elimination.
///
/// Falls back to rational elimination if an intermediate minor overflows.
pub fn integer_rank(rows: &[&[i64]]) -> usize {
    integer_rank_i128(rows).unwrap_or_else(|| {
        let q: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
            .collect();
        rank(&q)
    })
}

fn integer_rank_i128(rows: &[&[i64]]) -> Option<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c];
        for i in r + 1..m.len() {
            let lead = m[i][c];
            for j in c..cols {
                let a = m[i][j].checked_mul(pivot)?;
                let b = lead.checked_mul(m[r][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Inverse of a square rational matrix, `None` when singular.
pub fn inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for v in &mut m[c] {
            *v /= &pivot;
        }
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in 0..2 * n {
                let d = &f * &m[c][j];
                m[i][j] -= d;
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Finds `λ ≥ 0` with `Σ_j λ_j · columns[j] = target`, or `None` if infeasible.
///
/// Phase-one simplex with Bland's rule over exact rationals, so it terminates
/// and never misjudges feasibility.
pub fn nonnegative_combination(
    columns: &[Vec<Rational>],
    target: &[Rational],
) -> Option<Vec<Rational>> {
    let m = target.len();
    let k = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == m));
    // Tableau over variables λ_0..λ_{k-1}, artificials s_0..s_{m-1}, and rhs.
    let width = k + m + 1;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let flip = target[i].is_negative();
            let mut row = vec![Rational::zero(); width];
            for (j, col) in columns.iter().enumerate() {
                row[j] = if flip {
                    -col[i].clone()
                } else {
                    col[i].clone()
                };
            }
            row[k + i] = Rational::one();
            row[width - 1] = target[i].abs();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    // Objective: minimise the sum of artificials; reduced costs kept in `cost`.
    let mut cost = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..width {
            cost[j] -= &row[j];
        }
    }
    for i in 0..m {
        cost[k + i] = Rational::zero();
    }
    while let Some(enter) = (0..width - 1).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            // Phase-one objective is bounded below by zero.
            unreachable!("phase-one simplex cannot be unbounded");
        };
        let pivot = t[row][enter].clone();
        for v in &mut t[row] {
            *v /= &pivot;
        }
        for i in 0..m {
            if i != row && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let d = &f * &t[row][j];
                    t[i][j] -= d;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..width {
                let d = &f * &t[row][j];
                cost[j] -= d;
            }
        }
        basis[row] = enter;
    }
    let residual: Rational = (0..m)
        .filter(|&i| basis[i] >= k)
        .map(|i| t[i][width - 1].clone())
        .sum();
    if !residual.is_zero() {
        return None;
    }
    let mut lambda = vec![Rational::zero(); k];
    for i in 0..m {
        if basis[i] < k {
            lambda[basis[i]] = t[i][width - 1].clone();
        }
    }
    Some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn ranks_agree() {
        let rows: &[&[i64]] = &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1], &[0, 2, 2]];
        assert_eq!(rank(&q(rows)), 2);
        assert_eq!(integer_rank(rows), 2);
        assert_eq!(integer_rank(&[]), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = q(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, q(&[&[1, -1], &[-1, 2]]));
        assert!(inverse(&q(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn simplex_feasibility() {
        let cols = q(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let target = vec![int(-2), int(3)];
        let lambda = nonnegative_combination(&cols, &target).unwrap();
        let mut sum = vec![int(0), int(0)];
        for (j, c) in cols.iter().enumerate() {
            assert!(!lambda[j].is_negative());
            for i in 0..2 {
                sum[i] += &lambda[j] * &c[i];
            }
        }
        assert_eq!(sum, target);
        let cone = q(&[&[1, 0], &[1, 1]]);
        assert!(nonnegative_combination(&cone, &[int(-1), int(0)]).is_none());
        assert!(nonnegative_combination(&cone, &[int(0), int(1)]).is_none());
        assert!(nonnegative_combination(&cone, &[int(0), int(0)]).is_some());
    }
}
