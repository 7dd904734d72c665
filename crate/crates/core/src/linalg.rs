//! Gauss-Jordan elimination over the rationals.

use num_traits::Zero;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Solution {
    Unique(Vec<Rational>),
    /// Rank-deficient but consistent; free variables are set to zero.
    Basic(Vec<Rational>),
    Inconsistent,
}

/// Solves `a x = b` for a dense `rows x cols` system.
pub(crate) fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>, cols: usize) -> Solution {
    let rows = a.len();
    let mut pivots = Vec::with_capacity(cols);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        b[r] = &b[r] * &inv;
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            for j in 0..cols {
                let delta = &factor * &a[r][j];
                a[i][j] -= delta;
            }
            let delta = &factor * &b[r];
            b[i] -= delta;
        }
        pivots.push(c);
        r += 1;
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = b[row].clone();
    }
    if pivots.len() == cols {
        Solution::Unique(x)
    } else {
        Solution::Basic(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn unique_solution() {
        let s = solve(m(&[&[2, 1], &[1, 3]]), vec![int(3), int(5)], 2);
        assert_eq!(s, Solution::Unique(vec![ratio(4, 5), ratio(7, 5)]));
    }

    #[test]
    fn singular_consistent_gives_basic() {
        let s = solve(m(&[&[1, 1], &[2, 2]]), vec![int(1), int(2)], 2);
        assert_eq!(s, Solution::Basic(vec![int(1), int(0)]));
    }

    #[test]
    fn inconsistent() {
        let s = solve(m(&[&[1, 1], &[1, 1]]), vec![int(1), int(2)], 2);
        assert_eq!(s, Solution::Inconsistent);
    }
}
