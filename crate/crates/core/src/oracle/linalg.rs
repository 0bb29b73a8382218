//! Exact ranks of small integer matrices.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};

/// Coefficient field for rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    /// Characteristic zero, via fraction-free elimination over the integers.
    #[default]
    Rational,
    /// `GF(p)` for a prime `p < 2^31`.
    Prime(u64),
}

impl Field {
    pub fn label(self) -> String {
        match self {
            Field::Rational => "QQ".to_string(),
            Field::Prime(p) => format!("GF({p})"),
        }
    }

    pub fn rank(self, rows: &[Vec<i64>]) -> Result<usize> {
        match self {
            Field::Rational => rank_rational(rows),
            Field::Prime(p) => Ok(rank_mod_p(rows, p)),
        }
    }
}

/// Rank over the rationals by Bareiss elimination; every intermediate entry
/// is a minor of the input, so division is exact.
pub fn rank_rational(rows: &[Vec<i64>]) -> Result<usize> {
    let overflow = || Error::InconsistentHomology("integer overflow during elimination".into());
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][col];
        for r in rank + 1..nrows {
            let f = m[r][col];
            for c in col..ncols {
                let a = p.checked_mul(m[r][c]).ok_or_else(overflow)?;
                let b = f.checked_mul(m[rank][c]).ok_or_else(overflow)?;
                m[r][c] = a.checked_sub(b).ok_or_else(overflow)? / prev;
            }
        }
        prev = p;
        rank += 1;
    }
    Ok(rank)
}

pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as i64;
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for c in col..ncols {
            m[rank][c] = m[rank][c] * inv % p;
        }
        for r in 0..nrows {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..ncols {
                    m[r][c] = (m[r][c] - f * m[rank][c]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: i64, mut exp: i64, p: i64) -> i64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_rational(&[]).unwrap(), 0);
        assert_eq!(rank_rational(&[vec![0, 0], vec![0, 0]]).unwrap(), 0);
        assert_eq!(rank_rational(&[vec![1, 2], vec![2, 4]]).unwrap(), 1);
        assert_eq!(rank_rational(&[vec![2, 1], vec![1, 3]]).unwrap(), 2);
        let m = vec![vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]];
        assert_eq!(rank_rational(&m).unwrap(), 2);
        assert_eq!(rank_mod_p(&m, 32003), 2);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2: full rank over QQ, rank 1 over GF(2)
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank_rational(&m).unwrap(), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
    }
}
