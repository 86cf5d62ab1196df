//! Small exact linear solves over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

/// Solves `A y = b` for an integer matrix `A` (rows × cols), returning an
/// integral `y` and the smallest `D > 0` with `A y = D b` among solutions
/// whose free variables vanish.  `None` when the system is inconsistent.
pub fn solve_scaled(a: &[Vec<i64>], b: &[i64]) -> Option<(Vec<BigInt>, BigInt)> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            row.iter().map(|&x| BigRational::from_integer(x.into())).chain([BigRational::from_integer(bi.into())]).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        // prefer a unit pivot to keep denominators small
        let choice = (r..rows)
            .filter(|&k| !m[k][c].is_zero())
            .min_by_key(|&k| if m[k][c].abs().is_one() { 0 } else { 1 });
        let Some(p) = choice else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for k in 0..rows {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                for j in c..=cols {
                    let t = &m[r][j] * &f;
                    m[k][j] = &m[k][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut y = vec![BigRational::zero(); cols];
    for (k, &c) in pivots.iter().enumerate() {
        y[c] = m[k][cols].clone();
    }
    let d = y.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let yi = y.iter().map(|q| (q * BigRational::from_integer(d.clone())).to_integer()).collect();
    Some((yi, d))
}

/// Inverse of a small invertible integer matrix over `Q`.
pub fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from(x)).collect();
            r.extend((0..n).map(|j| Rational64::from(i64::from(i == j))));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&k| !a[k][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        for k in 0..n {
            if k != c && !a[k][c].is_zero() {
                let f = a[k][c];
                for j in 0..2 * n {
                    let t = a[c][j] * f;
                    a[k][j] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_solution() {
        let a = vec![vec![1, 1], vec![0, 1]];
        let (y, d) = solve_scaled(&a, &[1, 0]).unwrap();
        assert_eq!(d, BigInt::one());
        assert_eq!(y, vec![BigInt::from(1), BigInt::from(0)]);
    }

    #[test]
    fn needs_denominator() {
        let a = vec![vec![2]];
        let (y, d) = solve_scaled(&a, &[1]).unwrap();
        assert_eq!((y[0].clone(), d), (BigInt::one(), BigInt::from(2)));
        assert!(solve_scaled(&[vec![0]], &[1]).is_none());
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let inv = rational_inverse(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(inv[0][0], Rational64::new(2, 3));
        assert_eq!(inv[0][1], Rational64::new(1, 3));
        assert!(rational_inverse(&[vec![1, 1], vec![1, 1]]).is_none());
    }
}
