use serde::Serialize;

use crate::crystal::Tableau;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A Gelfand-Tsetlin pattern: `rows[i-1]` holds `a_{i1}, …, a_{ii}` and the
/// bottom row is the shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl GtPattern {
    /// Checks the triangular shape only; use [`GtPattern::check`] for interlacing.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::InvalidGtPattern(format!("row {} has length {}", i + 1, row.len())));
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `a_{ij}` with 1-based indices.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    /// `NE_{ij} = a_{ij} - a_{i-1,j}` for `i > j`.
    pub fn ne(&self, i: usize, j: usize) -> i64 {
        self.a(i, j) - self.a(i - 1, j)
    }

    /// `SE_{ij} = a_{i-1,j} - a_{i,j+1}` for `i > j`.
    pub fn se(&self, i: usize, j: usize) -> i64 {
        self.a(i - 1, j) - self.a(i, j + 1)
    }

    /// Interlacing inequalities and a nonnegative bottom row.
    pub fn check(&self) -> Result<()> {
        let n = self.n();
        for i in 2..=n {
            for j in 1..i {
                if self.ne(i, j) < 0 || self.se(i, j) < 0 {
                    return Err(Error::InvalidGtPattern(format!("interlacing fails at ({i},{j})")));
                }
            }
        }
        if n > 0 && self.a(n, n) < 0 {
            return Err(Error::InvalidGtPattern("negative entry".into()));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    pub fn shape(&self) -> Result<Partition> {
        let bottom = self.rows.last().cloned().unwrap_or_default();
        if bottom.iter().any(|&a| a < 0) {
            return Err(Error::InvalidGtPattern("negative bottom row".into()));
        }
        Partition::new(bottom.iter().map(|&a| a as u32).collect())
    }

    /// Row sums differences: entry `i` is the number of letters `i`.
    pub fn weight(&self) -> Vec<i64> {
        let sums: Vec<i64> = self.rows.iter().map(|r| r.iter().sum()).collect();
        (0..self.n()).map(|i| sums[i] - if i > 0 { sums[i - 1] } else { 0 }).collect()
    }

    /// The bijection to tableaux: row `j` holds `a_{ij} - a_{i-1,j}` letters `i`.
    pub fn to_tableau(&self) -> Result<Tableau> {
        self.check()?;
        let n = self.n();
        let mut rows = Vec::new();
        for j in 1..=n {
            let mut row = Vec::new();
            for i in j..=n {
                let prev = if i > j { self.a(i - 1, j) } else { 0 };
                let count = self.a(i, j) - prev;
                row.extend(std::iter::repeat_n(i as u8, count as usize));
            }
            rows.push(row);
        }
        Tableau::new(n, rows)
    }

    /// Inverse of [`GtPattern::to_tableau`]: `a_{ij}` counts entries `≤ i` in row `j`.
    pub fn from_tableau(t: &Tableau) -> Self {
        let n = t.n();
        let rows = (1..=n)
            .map(|i| {
                (1..=i).map(|j| t.rows().get(j - 1).map_or(0, |row| row.iter().filter(|&&x| x as usize <= i).count() as i64)).collect()
            })
            .collect();
        GtPattern { rows }
    }
}
