//! Square matrices over a prime field `F_p`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on `p^(n²)` for [`Matrix::enumerate`].
pub const DEFAULT_ENUM_BOUND: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("matrix dimension must be at least 1")]
    EmptyDimension,
    #[error("expected a {0}×{0} array of entries")]
    Shape(usize),
    #[error("cannot multiply M_{0}(F_{1}) by M_{2}(F_{3})")]
    Mismatch(usize, u32, usize, u32),
    #[error("enumerating M_{n}(F_{p}) needs {p}^{} matrices, above the bound {bound}", n * n)]
    BoundExceeded { n: usize, p: u32, bound: u64 },
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// An `n×n` matrix over `F_p`, entries reduced into `0..p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct Matrix {
    n: usize,
    p: u32,
    entries: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    p: u32,
    entries: Vec<Vec<i64>>,
}

impl TryFrom<MatrixRepr> for Matrix {
    type Error = MatrixError;

    fn try_from(r: MatrixRepr) -> Result<Self, MatrixError> {
        if r.entries.len() != r.n || r.entries.iter().any(|row| row.len() != r.n) {
            return Err(MatrixError::Shape(r.n));
        }
        Matrix::new(r.n, r.p, r.entries.concat())
    }
}

impl From<Matrix> for MatrixRepr {
    fn from(m: Matrix) -> Self {
        MatrixRepr {
            n: m.n,
            p: m.p,
            entries: m.entries.chunks(m.n).map(|r| r.iter().map(|&x| x as i64).collect()).collect(),
        }
    }
}

impl Matrix {
    /// Builds a matrix from row-major entries, reducing them mod `p`.
    pub fn new(n: usize, p: u32, entries: Vec<i64>) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::EmptyDimension);
        }
        if !is_prime(p) {
            return Err(MatrixError::NotPrime(p));
        }
        if entries.len() != n * n {
            return Err(MatrixError::Shape(n));
        }
        Ok(Matrix {
            n,
            p,
            entries: entries.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect(),
        })
    }

    pub fn identity(n: usize, p: u32) -> Result<Self, MatrixError> {
        let entries = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
        Matrix::new(n, p, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.n != other.n || self.p != other.p {
            return Err(MatrixError::Mismatch(self.n, self.p, other.n, other.p));
        }
        Ok(self.mul(other))
    }

    /// Product mod `p`; panics if shapes or fields differ.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert!(self.n == other.n && self.p == other.p, "matrix mismatch");
        let (n, p) = (self.n, self.p as u64);
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let s: u64 = (0..n).map(|k| self.get(i, k) as u64 * other.get(k, j) as u64).sum();
                entries[i * n + j] = (s % p) as u32;
            }
        }
        Matrix { n, p: self.p, entries }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        Matrix {
            n,
            p: self.p,
            entries: (0..n * n).map(|k| self.get(k % n, k / n)).collect(),
        }
    }

    /// Rank by Gaussian elimination over `F_p`, pivoting on the first
    /// nonzero entry of each column.
    pub fn rank(&self) -> usize {
        let (n, p) = (self.n, self.p as u64);
        let mut rows: Vec<Vec<u64>> = self.entries.chunks(n).map(|r| r.iter().map(|&x| x as u64).collect()).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = mod_pow(rows[rank][col], p - 2, p);
            for r in 0..n {
                if r != rank && rows[r][col] != 0 {
                    let factor = rows[r][col] * inv % p;
                    for c in col..n {
                        rows[r][c] = (rows[r][c] + p * p - factor * rows[rank][c]) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// All matrices of `M_n(F_p)` in lexicographic order of row-major entries.
    pub fn enumerate(n: usize, p: u32) -> Result<Vec<Matrix>, MatrixError> {
        Self::enumerate_with_bound(n, p, DEFAULT_ENUM_BOUND)
    }

    pub fn enumerate_with_bound(n: usize, p: u32, bound: u64) -> Result<Vec<Matrix>, MatrixError> {
        if n == 0 {
            return Err(MatrixError::EmptyDimension);
        }
        if !is_prime(p) {
            return Err(MatrixError::NotPrime(p));
        }
        let count = (p as u64).checked_pow((n * n) as u32).filter(|&c| c <= bound);
        let Some(count) = count else {
            return Err(MatrixError::BoundExceeded { n, p, bound });
        };
        let mut out = Vec::with_capacity(count as usize);
        let mut entries = vec![0u32; n * n];
        for _ in 0..count {
            out.push(Matrix {
                n,
                p,
                entries: entries.clone(),
            });
            for e in entries.iter_mut().rev() {
                *e += 1;
                if *e < p {
                    break;
                }
                *e = 0;
            }
        }
        Ok(out)
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.n)
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}{self}", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[i64]]) -> Matrix {
        Matrix::new(rows.len(), p, rows.concat()).unwrap()
    }

    #[test]
    fn products() {
        let a = m(2, &[&[1, 1], &[0, 0]]);
        let b = m(2, &[&[1, 0], &[1, 0]]);
        assert_eq!(a.mul(&b), m(2, &[&[0, 0], &[0, 0]]));
        let id = Matrix::identity(2, 2).unwrap();
        assert_eq!(id.mul(&a), a);
        let jordan = m(3, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(jordan.mul(&jordan).mul(&jordan).rank(), 0);
        assert!(a.try_mul(&Matrix::identity(2, 3).unwrap()).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::identity(3, 5).unwrap().rank(), 3);
        assert_eq!(m(2, &[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(2, &[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(m(3, &[&[1, 2], &[2, 1]]).rank(), 1);
        assert_eq!(m(5, &[&[1, 2], &[2, 1]]).rank(), 2);
    }

    /// Rank as the size of the row space, counted by brute force.
    fn rank_by_span(a: &Matrix) -> usize {
        let (n, p) = (a.n(), a.p() as usize);
        let mut span = std::collections::HashSet::new();
        for coeffs in 0..p.pow(n as u32) {
            let mut c = coeffs;
            let mut v = vec![0usize; n];
            for i in 0..n {
                let k = c % p;
                c /= p;
                for j in 0..n {
                    v[j] = (v[j] + k * a.get(i, j) as usize) % p;
                }
            }
            span.insert(v);
        }
        let mut r = 0;
        while p.pow(r as u32) < span.len() {
            r += 1;
        }
        r
    }

    #[test]
    fn rank_matches_span_and_transpose() {
        for (n, p) in [(2, 2), (2, 3), (3, 2)] {
            for a in Matrix::enumerate(n, p).unwrap() {
                assert_eq!(a.rank(), rank_by_span(&a), "{a:?}");
                assert_eq!(a.rank(), a.transpose().rank());
            }
        }
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(Matrix::enumerate(2, 2).unwrap().len(), 16);
        assert_eq!(Matrix::enumerate(3, 2).unwrap().len(), 512);
        assert_eq!(Matrix::enumerate(2, 5).unwrap().len(), 625);
        assert!(matches!(Matrix::enumerate(3, 5), Err(MatrixError::BoundExceeded { .. })));
        assert_eq!(Matrix::new(2, 4, vec![0; 4]), Err(MatrixError::NotPrime(4)));
    }

    #[test]
    fn sylvester_inequality() {
        for (n, p) in [(2, 2), (2, 3)] {
            let all = Matrix::enumerate(n, p).unwrap();
            for a in &all {
                for b in &all {
                    assert!(a.rank() + b.rank() <= a.mul(b).rank() + n);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let a = m(2, &[&[1, 0], &[1, 1]]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"n":2,"p":2,"entries":[[1,0],[1,1]]}"#);
        assert_eq!(serde_json::from_str::<Matrix>(&json).unwrap(), a);
    }
}
