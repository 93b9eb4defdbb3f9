//! Exact dense linear solving for the certificate searches.
//!
//! Over a prime field this is plain Gaussian elimination on residues; over
//! the rationals rows are cleared to integers and eliminated fraction-free
//! (Bareiss one-step), with the solution recovered by rational back
//! substitution. Pivots are always the first nonzero entry in canonical
//! row/column order, so the computation is deterministic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalars::{FieldCtx, Scalar};

/// Solves the augmented system `rows` (each row: coefficients then the
/// right-hand side). Returns a particular solution with free variables set
/// to zero, or `None` when the system is inconsistent.
pub(crate) fn solve(ctx: &FieldCtx, rows: Vec<Vec<Scalar>>) -> Option<Vec<Scalar>> {
    match ctx {
        FieldCtx::PrimeField(p) => {
            let rows: Vec<Vec<u64>> = rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|s| match s {
                            Scalar::Mod(v) => v,
                            Scalar::Rat(_) => unreachable!("rational entry in mod-p system"),
                        })
                        .collect()
                })
                .collect();
            solve_mod(*p, rows).map(|xs| xs.into_iter().map(Scalar::Mod).collect())
        }
        FieldCtx::Rationals => {
            let rows: Vec<Vec<BigRational>> = rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|s| match s {
                            Scalar::Rat(q) => q,
                            Scalar::Mod(_) => unreachable!("residue entry in rational system"),
                        })
                        .collect()
                })
                .collect();
            solve_rat(rows).map(|xs| xs.into_iter().map(Scalar::Rat).collect())
        }
    }
}

fn solve_mod(p: u64, mut rows: Vec<Vec<u64>>) -> Option<Vec<u64>> {
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let width = rows[0].len();
    let ncols = width - 1;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = inv_mod(rows[rank][col], p);
        for r in rank + 1..rows.len() {
            if rows[r][col] == 0 {
                continue;
            }
            let factor = rows[r][col] * inv % p;
            for c in col..width {
                let sub = factor * rows[rank][c] % p;
                rows[r][c] = (rows[r][c] + p - sub) % p;
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    for r in rank..rows.len() {
        if rows[r][..ncols].iter().all(|&v| v == 0) && rows[r][ncols] != 0 {
            return None;
        }
    }
    let mut x = vec![0u64; ncols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = rows[r][ncols];
        for j in c + 1..ncols {
            if rows[r][j] != 0 && x[j] != 0 {
                acc = (acc + p - rows[r][j] * x[j] % p) % p;
            }
        }
        x[c] = acc * inv_mod(rows[r][c], p) % p;
    }
    Some(x)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i64) as u64
}

fn solve_rat(rows: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let width = rows[0].len();
    let ncols = width - 1;
    // clear denominators row by row
    let mut m: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for e in &row {
                lcm = num_integer::lcm(lcm, e.denom().clone());
            }
            row.into_iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect()
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let piv = m[rank][col].clone();
        for r in rank + 1..m.len() {
            let lead = m[r][col].clone();
            for c in col..width {
                let num = &piv * &m[r][c] - &lead * &m[rank][c];
                // entries stay minors of the input, so the previous pivot
                // divides exactly
                debug_assert!((&num % &prev).is_zero());
                m[r][c] = num / &prev;
            }
        }
        prev = piv;
        pivots.push((rank, col));
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    for r in rank..m.len() {
        if m[r][..ncols].iter().all(Zero::is_zero) && !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); ncols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = BigRational::from_integer(m[r][ncols].clone());
        for j in c + 1..ncols {
            if !m[r][j].is_zero() && !x[j].is_zero() {
                acc -= BigRational::from_integer(m[r][j].clone()) * &x[j];
            }
        }
        x[c] = acc / BigRational::from_integer(m[r][c].clone());
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn rational_unique_solution() {
        // x + 2y = 5, 3x - y = 1  =>  x = 1, y = 2
        let ctx = FieldCtx::Rationals;
        let rows = vec![
            vec![q(1, 1), q(2, 1), q(5, 1)],
            vec![q(3, 1), q(-1, 1), q(1, 1)],
        ];
        let x = solve(&ctx, rows).unwrap();
        assert_eq!(x, vec![q(1, 1), q(2, 1)]);
    }

    #[test]
    fn rational_fractions() {
        // (1/2) x = 3 => x = 6
        let ctx = FieldCtx::Rationals;
        let x = solve(&ctx, vec![vec![q(1, 2), q(3, 1)]]).unwrap();
        assert_eq!(x, vec![q(6, 1)]);
    }

    #[test]
    fn underdetermined_sets_free_vars_to_zero() {
        let ctx = FieldCtx::Rationals;
        // x + y = 1 with free y  =>  x = 1, y = 0
        let x = solve(&ctx, vec![vec![q(1, 1), q(1, 1), q(1, 1)]]).unwrap();
        assert_eq!(x, vec![q(1, 1), q(0, 1)]);
    }

    #[test]
    fn inconsistent_system() {
        let ctx = FieldCtx::Rationals;
        let rows = vec![
            vec![q(1, 1), q(1, 1), q(1, 1)],
            vec![q(2, 1), q(2, 1), q(3, 1)],
        ];
        assert!(solve(&ctx, rows).is_none());
    }

    #[test]
    fn mod_p_solution() {
        let ctx = FieldCtx::prime_field(7).unwrap();
        // 3x = 1 mod 7 => x = 5
        let x = solve(&ctx, vec![vec![Scalar::Mod(3), Scalar::Mod(1)]]).unwrap();
        assert_eq!(x, vec![Scalar::Mod(5)]);
        // inconsistent: 0x = 2
        assert!(solve(&ctx, vec![vec![Scalar::Mod(0), Scalar::Mod(2)]]).is_none());
    }

    #[test]
    fn tall_system() {
        // overdetermined but consistent
        let ctx = FieldCtx::prime_field(5).unwrap();
        let rows = vec![
            vec![Scalar::Mod(1), Scalar::Mod(0), Scalar::Mod(2)],
            vec![Scalar::Mod(0), Scalar::Mod(1), Scalar::Mod(3)],
            vec![Scalar::Mod(1), Scalar::Mod(1), Scalar::Mod(0)],
        ];
        let x = solve(&ctx, rows).unwrap();
        assert_eq!(x, vec![Scalar::Mod(2), Scalar::Mod(3)]);
    }
}
