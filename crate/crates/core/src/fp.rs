//! Arithmetic and exact linear algebra over a prime field F_p.
//!
//! Residues are stored as `u32` values in `0..p`. All products are taken in
//! `u64`, so any prime below 2^32 is supported.

use crate::error::{Error, Result};

/// Returns true when `n` is prime.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    /// Builds F_p, rejecting non-prime moduli.
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Fp { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer into `0..p`.
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a as u64 % self.p as u64;
        let mut acc = 1u64 % self.p as u64;
        let m = self.p as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        acc as u32
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    /// Euler's criterion. Zero counts as a square.
    pub fn is_square(&self, a: u32) -> bool {
        let a = a % self.p;
        if a == 0 || self.p == 2 {
            return true;
        }
        self.pow(a, (self.p as u64 - 1) / 2) == 1
    }

    /// Whether a nonzero `a` is a square in F_p*; zero is an error.
    pub fn is_quadratic_residue(&self, a: u32) -> Result<bool> {
        if a % self.p == 0 {
            return Err(Error::Parameter("quadratic character of zero".into()));
        }
        Ok(self.is_square(a))
    }

    /// The least positive quadratic non-residue. Undefined for p = 2.
    pub fn smallest_nonresidue(&self) -> Result<u32> {
        if self.p == 2 {
            return Err(Error::NoNonresidue);
        }
        (2..self.p)
            .find(|&a| !self.is_square(a))
            .ok_or(Error::NoNonresidue)
    }

    /// A square root of `a`, if one exists (Tonelli-Shanks).
    pub fn sqrt(&self, a: u32) -> Option<u32> {
        let a = a % self.p;
        if a == 0 || self.p == 2 {
            return Some(a);
        }
        if !self.is_square(a) {
            return None;
        }
        let p = self.p as u64;
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = self.smallest_nonresidue().ok()?;
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    /// All roots of `a x^2 + b x + c` in F_p, sorted ascending.
    ///
    /// A zero leading coefficient falls back to the linear equation; the
    /// all-zero polynomial is rejected since every element is a root.
    pub fn solve_quadratic(&self, a: u32, b: u32, c: u32) -> Result<Vec<u32>> {
        let (a, b, c) = (a % self.p, b % self.p, c % self.p);
        if a == 0 {
            if b == 0 {
                return if c == 0 {
                    Err(Error::DegenerateQuadratic)
                } else {
                    Ok(Vec::new())
                };
            }
            return Ok(vec![self.mul(self.neg(c), self.inv(b)?)]);
        }
        if self.p == 2 {
            return Ok((0..2)
                .filter(|&x| {
                    self.add(self.add(self.mul(a, self.mul(x, x)), self.mul(b, x)), c) == 0
                })
                .collect());
        }
        let disc = self.sub(self.mul(b, b), self.mul(4 % self.p, self.mul(a, c)));
        let Some(root) = self.sqrt(disc) else {
            return Ok(Vec::new());
        };
        let two_a_inv = self.inv(self.mul(2, a))?;
        let x1 = self.mul(self.sub(root, b), two_a_inv);
        let x2 = self.mul(self.sub(self.neg(root), b), two_a_inv);
        let mut out = vec![x1, x2];
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The reduced row echelon form; zero rows are kept at the bottom.
    pub matrix: Vec<Vec<u32>>,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

impl Fp {
    /// Reduced row echelon form of a rectangular matrix.
    pub fn rref(&self, rows: &[Vec<u32>]) -> Rref {
        let mut m: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x % self.p).collect())
            .collect();
        let ncols = m.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..ncols {
            if row == m.len() {
                break;
            }
            let Some(sel) = (row..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, sel);
            let inv = self.inv(m[row][col]).expect("pivot is nonzero");
            for x in m[row].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..m.len() {
                if r != row && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in 0..ncols {
                        let sub = self.mul(f, m[row][c]);
                        m[r][c] = self.sub(m[r][c], sub);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            rank: row,
            pivots,
        }
    }

    pub fn rank(&self, rows: &[Vec<u32>]) -> usize {
        self.rref(rows).rank
    }

    /// Reduces `v` against the nonzero rows of an echelon form, in place.
    ///
    /// The result is zero exactly when `v` lies in the row space.
    pub fn reduce_against(&self, rref: &Rref, v: &mut [u32]) {
        for (r, &col) in rref.pivots.iter().enumerate() {
            let f = v[col];
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(&rref.matrix[r]) {
                    *x = self.sub(*x, self.mul(f, y));
                }
            }
        }
    }
}

/// Number of elements of GL(n, p), saturating at `u128::MAX`.
pub fn gl_order(n: usize, p: u32) -> u128 {
    let q = p as u128;
    let qn = q.checked_pow(n as u32).unwrap_or(u128::MAX);
    let mut acc: u128 = 1;
    let mut qi: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(qn.saturating_sub(qi));
        qi = qi.saturating_mul(q);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonresidues_small_primes() {
        assert_eq!(Fp::new(3).unwrap().smallest_nonresidue().unwrap(), 2);
        assert_eq!(Fp::new(5).unwrap().smallest_nonresidue().unwrap(), 2);
        assert_eq!(Fp::new(7).unwrap().smallest_nonresidue().unwrap(), 3);
        assert!(Fp::new(2).unwrap().smallest_nonresidue().is_err());
    }

    #[test]
    fn rejects_composite() {
        assert!(matches!(Fp::new(9), Err(Error::NotPrime(9))));
        assert!(Fp::new(1).is_err());
    }

    #[test]
    fn quadratic_edge_cases() {
        let f = Fp::new(5).unwrap();
        assert_eq!(f.solve_quadratic(1, 0, 1).unwrap(), vec![2, 3]);
        assert_eq!(f.solve_quadratic(0, 2, 1).unwrap(), vec![2]);
        assert!(f.solve_quadratic(0, 0, 0).is_err());
        assert!(f.solve_quadratic(1, 0, 2).unwrap().is_empty());
        assert_eq!(f.solve_quadratic(1, 2, 1).unwrap(), vec![4]);
    }

    #[test]
    fn rref_basic() {
        let f = Fp::new(3).unwrap();
        let r = f.rref(&[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]]);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.matrix[0], vec![1, 2, 0]);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(5, 2), 9_999_360);
        assert_eq!(gl_order(4, 3), 24_261_120);
    }
}
