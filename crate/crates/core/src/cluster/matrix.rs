use std::fmt;

use crate::error::{Error, Result};

/// Skew-symmetric integer exchange matrix; `b[i][j] > 0` counts arrows `i -> j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeMatrix {
    b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!("row {} has length {}", i + 1, row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != -rows[j][i] {
                    return Err(Error::InvalidMatrix(format!(
                        "b[{}][{}] = {v} but b[{}][{}] = {}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1,
                        rows[j][i]
                    )));
                }
            }
        }
        Ok(Self { b: rows })
    }

    /// Builds a quiver from arrows `(from, to)` (0-based); repeated arrows add up.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Self {
        let mut b = vec![vec![0; n]; n];
        for &(i, j) in arrows {
            b[i][j] += 1;
            b[j][i] -= 1;
        }
        Self { b }
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: k,
                len: self.n(),
            })
        }
    }

    /// Matrix mutation at vertex `k` (0-based).
    pub fn mutate(&self, k: usize) -> Result<Self> {
        self.check_index(k)?;
        let n = self.n();
        let b = &self.b;
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = if i == k || j == k {
                    -b[i][j]
                } else {
                    b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                };
            }
        }
        Ok(Self { b: out })
    }

    /// Relabels vertices `i` and `j`.
    pub fn permute(&self, i: usize, j: usize) -> Result<Self> {
        self.check_index(i)?;
        self.check_index(j)?;
        let mut p: Vec<usize> = (0..self.n()).collect();
        p.swap(i, j);
        Ok(self.relabel(&p))
    }

    /// `out[a][b] = self[p[a]][p[b]]`.
    pub fn relabel(&self, p: &[usize]) -> Self {
        let n = self.n();
        let mut out = vec![vec![0; n]; n];
        for a in 0..n {
            for c in 0..n {
                out[a][c] = self.b[p[a]][p[c]];
            }
        }
        Self { b: out }
    }

    pub fn negate(&self) -> Self {
        Self {
            b: self.b.iter().map(|r| r.iter().map(|v| -v).collect()).collect(),
        }
    }

    /// Submatrix on the given vertices, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        Self {
            b: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.b[i][j]).collect())
                .collect(),
        }
    }

    /// Pairing `uᵀ B v` of two integer exponent vectors.
    pub fn pair(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, ui) in u.iter().enumerate() {
            if *ui == 0 {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                s += ui * self.b[i][j] * vj;
            }
        }
        s
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.b.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            write!(f, "[{}]", cells.join(""))?;
            if i + 1 < self.b.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn markoff() -> ExchangeMatrix {
        ExchangeMatrix::new(vec![vec![0, -2, 2], vec![2, 0, -2], vec![-2, 2, 0]]).unwrap()
    }

    #[test]
    fn markoff_mutation_negates() {
        let b = markoff();
        assert_eq!(b.mutate(0).unwrap(), b.negate());
        assert_eq!(b.mutate(0).unwrap().mutate(0).unwrap(), b);
    }

    #[test]
    fn rejects_non_skew() {
        assert!(ExchangeMatrix::new(vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(ExchangeMatrix::new(vec![vec![0, 1]]).is_err());
        assert!(markoff().mutate(3).is_err());
    }

    #[test]
    fn arrows_and_permutations() {
        let b = ExchangeMatrix::from_arrows(3, &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(b.get(0, 1), 2);
        assert_eq!(b.get(2, 1), -1);
        let p = b.permute(0, 2).unwrap();
        assert_eq!(p.get(2, 1), 2);
        assert_eq!(p.permute(0, 2).unwrap(), b);
        assert_eq!(b.pair(&[1, 0, 0], &[0, 1, 1]), 2);
    }
}
