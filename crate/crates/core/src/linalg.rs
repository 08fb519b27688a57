//! Dense exact Gaussian elimination, for the finite-dimensional solves
//! (inverse of a module map, convolution inverse).

use crate::scalar::{Field, Scalar};

/// Row-reduces `[a | b]` and returns one solution `x` of `a·x = b` (free
/// variables set to zero), or `None` if the system is inconsistent.
/// `a` is given as rows; `b` has one entry per row.
pub fn solve(field: Field, a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = reduce(&mut m, cols);
    if m.iter().skip(pivots.len()).any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(field: Field, a: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = a.len();
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| field.int((i == j) as i64)));
            r
        })
        .collect();
    let pivots = reduce(&mut m, n);
    if pivots.len() < n {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn rank(a: &[Vec<Scalar>]) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.to_vec();
    reduce(&mut m, cols).len()
}

/// Reduced row echelon form on the first `cols` columns; returns pivot columns.
fn reduce(m: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][c].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[c].is_zero() {
                continue;
            }
            let f = other[c].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| Field::Rational.int(x)).collect()).collect()
    }

    #[test]
    fn inverse_of_two_by_two() {
        let f = Field::Rational;
        let inv = inverse(f, &q(&[&[2, 1], &[1, 1]])).unwrap();
        assert_eq!(inv, q(&[&[1, -1], &[-1, 2]]));
        assert!(inverse(f, &q(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let f = Field::Rational;
        let a = q(&[&[1, 1], &[2, 2]]);
        assert!(solve(f, &a, &[f.int(1), f.int(3)]).is_none());
        assert_eq!(solve(f, &a, &[f.int(1), f.int(2)]).unwrap(), vec![f.int(1), f.int(0)]);
        assert_eq!(rank(&a), 1);
    }
}
