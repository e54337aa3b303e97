//! Exact scalar and small-matrix helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational.
pub type Q = BigRational;
/// Small rational used for root-system bookkeeping.
pub type Q64 = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divide by the gcd of the entries. The zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = gcd_slice(v);
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub fn primitive_i128(v: &[i128]) -> Vec<i128> {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_i128(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Scale a rational vector to the primitive integer vector on the same ray.
pub fn rational_to_primitive_big(v: &[Q]) -> Vec<BigInt> {
    let den = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// [`rational_to_primitive_big`] for vectors known to fit in `i64`.
pub fn rational_to_primitive(v: &[Q]) -> Vec<i64> {
    rational_to_primitive_big(v)
        .iter()
        .map(|y| y.to_i64().expect("primitive vector entry exceeds i64"))
        .collect()
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_q(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    rank_q(&m)
}

/// Basis of the right kernel `{x : M x = 0}` over the rationals, each vector
/// scaled to a primitive integer vector.
pub fn kernel_i64(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[ri][f].clone();
            }
            rational_to_primitive(&v)
        })
        .collect()
}

/// Inverse of a square integer matrix over the rationals.
pub fn inverse_q(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Q> = r.iter().map(|&x| q(x)).collect();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det_i64(m: &[Vec<i64>]) -> BigInt {
    bareiss_det(m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

/// Fraction-free determinant.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

const MOD_P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

fn reduce_mod(x: &BigInt) -> u64 {
    let m = BigInt::from(MOD_P);
    let r = x.mod_floor(&m);
    r.to_u64().unwrap()
}

fn rank_mod_p(rows: &[Vec<u64>]) -> usize {
    let mut m = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = powmod(m[r][c], MOD_P - 2);
        for i in r + 1..nrows {
            if m[i][c] != 0 {
                let f = mulmod(m[i][c], inv);
                for j in c..ncols {
                    let t = mulmod(m[r][j], f);
                    m[i][j] = (m[i][j] + MOD_P - t) % MOD_P;
                }
            }
        }
        r += 1;
    }
    r
}

/// Whether the given rational vectors are linearly independent.
///
/// Rows are cleared of denominators and tested modulo a large prime first;
/// a full rank modulo p certifies full rank over the rationals. Only when the
/// modular test is inconclusive is the exact rational elimination run.
pub fn independent_q(rows: &[Vec<Q>]) -> bool {
    if rows.is_empty() {
        return true;
    }
    if rows.len() > rows[0].len() {
        return false;
    }
    let modular: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let den = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter()
                .map(|x| reduce_mod(&(x * &den).to_integer()))
                .collect()
        })
        .collect();
    if rank_mod_p(&modular) == rows.len() {
        return true;
    }
    rank_q(rows) == rows.len()
}

pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Q::from_integer(n))
    }
}

/// Row Hermite normal form of the lattice spanned by `rows`; zero rows dropped.
///
/// Pivots are positive, entries above a pivot are reduced into `[0, pivot)`.
pub fn hnf_rows(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        while let Some(p) = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].abs())
        {
            m.swap(r, p);
            let mut done = true;
            for i in r + 1..m.len() {
                if !m[i][c].is_zero() {
                    let f = m[i][c].div_floor(&m[r][c]);
                    for j in c..ncols {
                        let t = &m[r][j] * &f;
                        m[i][j] -= t;
                    }
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < m.len() && !m[r][c].is_zero() {
            if m[r][c].is_negative() {
                for x in m[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            for i in 0..r {
                let f = m[i][c].div_floor(&m[r][c]);
                if !f.is_zero() {
                    for j in c..ncols {
                        let t = &m[r][j] * &f;
                        m[i][j] -= t;
                    }
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m.into_iter()
        .map(|row| row.into_iter().map(|x| x.to_i64().expect("HNF entry exceeds i64")).collect())
        .collect()
}

/// Whether `v` lies in the lattice with row-HNF basis `hnf`.
pub fn in_hnf_lattice(hnf: &[Vec<i64>], v: &[i64]) -> bool {
    let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    for row in hnf {
        let Some(c) = row.iter().position(|&x| x != 0) else {
            continue;
        };
        let p = row[c] as i128;
        if w[c] % p != 0 {
            return false;
        }
        let f = w[c] / p;
        for (x, &y) in w.iter_mut().zip(row) {
            *x -= f * y as i128;
        }
    }
    w.iter().all(|&x| x == 0)
}

pub fn abs_i64(x: &BigInt) -> Option<i64> {
    x.abs().to_i64()
}
