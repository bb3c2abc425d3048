//! Hives, Gelfand-Tsetlin patterns and Kogan faces.
//!
//! A hive of size `n` is stored as rows `h[0..=n]`, row `r` holding
//! `h[r][0..=r]` from left to right. The left edge carries the partial sums
//! of `λ`, the right edge those of `ν`, and the bottom edge `|λ|` plus the
//! partial sums of `μ`.

mod enumerate;
mod gt;
mod increase;
mod kogan;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use enumerate::{enumerate_face_union, enumerate_kogan_hives, refined_lr_hive, refined_lr_hive_all};
pub use gt::GtPattern;
pub use increase::{increasable_subsets, Increasable};
pub use kogan::{f_w_for_312, reduced_faces_for, FaceOrder, FaceWord, KoganFace};

/// A vertex `(r, k)` of the triangular grid.
pub type Vertex = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Hive {
    labels: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RhombusKind {
    /// Vertices `(r,k), (r,k+1), (r+1,k), (r+1,k+1)`.
    NeSlanted,
    /// Vertices `(r,k), (r,k+1), (r+1,k+1), (r+1,k+2)`.
    SeSlanted,
    /// Vertices `(r,k), (r+1,k), (r+1,k+1), (r+2,k+1)`.
    Vertical,
}

/// A unit rhombus anchored at `(r, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rhombus {
    pub kind: RhombusKind,
    pub r: usize,
    pub k: usize,
}

impl Rhombus {
    /// The Kogan rhombus `R_{ij}`, `n ≥ i > j ≥ 1`.
    pub fn kogan(i: usize, j: usize) -> Self {
        Rhombus { kind: RhombusKind::NeSlanted, r: i - 1, k: j - 1 }
    }

    /// `([obtuse; 2], [acute; 2])`.
    pub fn vertices(&self) -> ([Vertex; 2], [Vertex; 2]) {
        let (r, k) = (self.r, self.k);
        match self.kind {
            RhombusKind::NeSlanted => ([(r, k), (r + 1, k + 1)], [(r, k + 1), (r + 1, k)]),
            RhombusKind::SeSlanted => ([(r, k + 1), (r + 1, k + 1)], [(r, k), (r + 1, k + 2)]),
            RhombusKind::Vertical => ([(r + 1, k), (r + 1, k + 1)], [(r, k), (r + 2, k + 1)]),
        }
    }

    /// Sum of obtuse labels minus sum of acute labels.
    pub fn content(&self, h: &Hive) -> i64 {
        let (obtuse, acute) = self.vertices();
        obtuse.iter().map(|&v| h.at(v)).sum::<i64>() - acute.iter().map(|&v| h.at(v)).sum::<i64>()
    }
}

impl fmt::Display for Rhombus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            RhombusKind::NeSlanted => "NE",
            RhombusKind::SeSlanted => "SE",
            RhombusKind::Vertical => "V",
        };
        write!(f, "{kind}@({},{})", self.r, self.k)
    }
}

/// All `3n(n-1)/2` rhombi of a size-`n` hive.
pub fn all_rhombi(n: usize) -> Vec<Rhombus> {
    let mut out = Vec::with_capacity(3 * n * n.saturating_sub(1) / 2);
    for r in 1..n {
        for k in 0..r {
            out.push(Rhombus { kind: RhombusKind::NeSlanted, r, k });
            out.push(Rhombus { kind: RhombusKind::SeSlanted, r, k });
        }
    }
    for r in 0..n.saturating_sub(1) {
        for k in 0..=r {
            out.push(Rhombus { kind: RhombusKind::Vertical, r, k });
        }
    }
    out
}

/// Interior vertices `(r, k)` with `2 ≤ r ≤ n-1`, `1 ≤ k ≤ r-1`.
pub fn interior_vertices(n: usize) -> Vec<Vertex> {
    (2..n).flat_map(|r| (1..r).map(move |k| (r, k))).collect()
}

/// Outcome of [`Hive::validate`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HiveCheck {
    pub border_errors: Vec<Vertex>,
    pub negative: Vec<(Rhombus, i64)>,
}

impl HiveCheck {
    pub fn is_valid(&self) -> bool {
        self.border_errors.is_empty() && self.negative.is_empty()
    }
}

impl Hive {
    pub fn new(labels: Vec<Vec<i64>>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidHive("no rows".into()));
        }
        for (r, row) in labels.iter().enumerate() {
            if row.len() != r + 1 {
                return Err(Error::InvalidHive(format!("row {r} has length {}", row.len())));
            }
        }
        Ok(Hive { labels })
    }

    /// The array with prescribed borders and zero interior.
    pub fn with_borders(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Self> {
        let n = lambda.n();
        for p in [mu, nu] {
            if p.n() != n {
                return Err(Error::SizeMismatch { expected: n, actual: p.n() });
            }
        }
        if lambda.size() + mu.size() != nu.size() {
            return Err(Error::InvalidHive(format!("|λ|+|μ| = {} but |ν| = {}", lambda.size() + mu.size(), nu.size())));
        }
        let (pl, pm, pn) = (lambda.partial_sums(), mu.partial_sums(), nu.partial_sums());
        let mut labels: Vec<Vec<i64>> = (0..=n).map(|r| vec![0; r + 1]).collect();
        for r in 0..=n {
            labels[r][0] = pl[r];
            labels[r][r] = pn[r];
        }
        for k in 0..=n {
            labels[n][k] = pl[n] + pm[k];
        }
        Ok(Hive { labels })
    }

    pub fn n(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn labels(&self) -> &[Vec<i64>] {
        &self.labels
    }

    pub fn at(&self, (r, k): Vertex) -> i64 {
        self.labels[r][k]
    }

    pub fn set(&mut self, (r, k): Vertex, value: i64) {
        self.labels[r][k] = value;
    }

    /// Every label multiplied by `p`.
    pub fn scale(&self, p: i64) -> Hive {
        Hive { labels: self.labels.iter().map(|row| row.iter().map(|x| x * p).collect()).collect() }
    }

    /// Border partitions `(λ, μ, ν)` read off the edges, if they are partitions.
    pub fn borders(&self) -> Result<(Partition, Partition, Partition)> {
        let n = self.n();
        let diff = |seq: Vec<i64>| -> Result<Partition> {
            let parts: Vec<i64> = seq.windows(2).map(|w| w[1] - w[0]).collect();
            if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NotPartition { n, parts });
            }
            Partition::new(parts.iter().map(|&p| p as u32).collect())
        };
        let left = diff((0..=n).map(|r| self.labels[r][0]).collect())?;
        let right = diff((0..=n).map(|r| self.labels[r][r]).collect())?;
        let bottom = diff(self.labels[n].clone())?;
        Ok((left, bottom, right))
    }

    /// Border mismatches against `(λ, μ, ν)` and every rhombus of negative content.
    pub fn validate(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<HiveCheck> {
        let expect = Hive::with_borders(lambda, mu, nu)?;
        if expect.n() != self.n() {
            return Err(Error::SizeMismatch { expected: expect.n(), actual: self.n() });
        }
        let n = self.n();
        let mut check = HiveCheck::default();
        let mut border: Vec<Vertex> = (0..=n).flat_map(|r| [(r, 0), (r, r)]).chain((0..=n).map(|k| (n, k))).collect();
        border.sort();
        border.dedup();
        for v in border {
            if self.at(v) != expect.at(v) {
                check.border_errors.push(v);
            }
        }
        for rh in all_rhombi(n) {
            let c = rh.content(self);
            if c < 0 {
                check.negative.push((rh, c));
            }
        }
        Ok(check)
    }

    pub fn is_hive(&self) -> bool {
        self.borders().and_then(|(l, m, nu)| self.validate(&l, &m, &nu)).is_ok_and(|c| c.is_valid())
    }

    /// Row differences `a_{ij} = h[i][j] - h[i][j-1]`: a pattern of shape `μ`.
    pub fn delta(&self) -> GtPattern {
        let rows = (1..=self.n()).map(|i| (1..=i).map(|j| self.labels[i][j] - self.labels[i][j - 1]).collect()).collect();
        GtPattern::new(rows).expect("triangular by construction")
    }

    /// Differences along the lines of constant `k`: a pattern of shape `λ`.
    ///
    /// The row of length `m` holds `h(r+1, n-m) - h(r, n-m)` for `r = n-m, …, n-1`.
    pub fn delta_ne(&self) -> GtPattern {
        let n = self.n();
        let rows = (1..=n)
            .map(|m| {
                let k = n - m;
                (k..n).map(|r| self.labels[r + 1][k] - self.labels[r][k]).collect()
            })
            .collect();
        GtPattern::new(rows).expect("triangular by construction")
    }

    /// Inverse of [`Hive::delta`] given the left border `λ`.
    pub fn delta_inverse(a: &GtPattern, lambda: &Partition) -> Result<Hive> {
        let n = a.n();
        if lambda.n() != n {
            return Err(Error::SizeMismatch { expected: n, actual: lambda.n() });
        }
        let pl = lambda.partial_sums();
        let mut labels: Vec<Vec<i64>> = (0..=n).map(|r| vec![0; r + 1]).collect();
        for i in 0..=n {
            labels[i][0] = pl[i];
            for j in 1..=i {
                labels[i][j] = labels[i][j - 1] + a.a(i, j);
            }
        }
        Ok(Hive { labels })
    }

    /// Inverse of [`Hive::delta_ne`] given the right border `ν`.
    pub fn delta_ne_inverse(a: &GtPattern, nu: &Partition) -> Result<Hive> {
        let n = a.n();
        if nu.n() != n {
            return Err(Error::SizeMismatch { expected: n, actual: nu.n() });
        }
        let pn = nu.partial_sums();
        let mut labels: Vec<Vec<i64>> = (0..=n).map(|r| vec![0; r + 1]).collect();
        for k in 0..=n {
            labels[k][k] = pn[k];
            let m = n - k;
            for r in k..n {
                labels[r + 1][k] = labels[r][k] + a.a(m, r - k + 1);
            }
        }
        Ok(Hive { labels })
    }
}

impl fmt::Display for Hive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.labels.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        f.write_str(&rows.join(" / "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sample_hive() -> Hive {
        Hive::new(vec![vec![0], vec![7, 9], vec![12, 16, 18], vec![15, 21, 24, 24], vec![15, 22, 27, 28, 28], vec![15, 22, 27, 29, 29, 29]])
            .unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rhombus_count() {
        for n in 1..7 {
            assert_eq!(all_rhombi(n).len(), 3 * n * (n - 1) / 2);
        }
        assert_eq!(interior_vertices(5).len(), 6);
    }

    #[test]
    fn sample_hive_borders_and_validity() {
        let h = sample_hive();
        let (l, m, nu) = h.borders().unwrap();
        assert_eq!(l, p(&[7, 5, 3, 0, 0]));
        assert_eq!(m, p(&[7, 5, 2, 0, 0]));
        assert_eq!(nu, p(&[9, 9, 6, 4, 1]));
        assert!(h.validate(&l, &m, &nu).unwrap().is_valid());
        assert!(h.is_hive());
    }

    #[test]
    fn perturbed_label_reports_rhombi() {
        let mut h = sample_hive();
        h.set((3, 1), 22);
        let (l, m, nu) = sample_hive().borders().unwrap();
        let check = h.validate(&l, &m, &nu).unwrap();
        assert!(check.border_errors.is_empty());
        // Raising (3,1) by one only hurts rhombi where it is acute and content was 0.
        let bad: Vec<Rhombus> = check.negative.iter().map(|(r, _)| *r).collect();
        for rh in &bad {
            let (_, acute) = rh.vertices();
            assert!(acute.contains(&(3, 1)));
            assert_eq!(rh.content(&sample_hive()), 0);
        }
        assert!(!bad.is_empty());
    }

    #[test]
    fn sample_delta_and_inverse() {
        let h = sample_hive();
        let a = h.delta();
        let expect = GtPattern::new(vec![vec![2], vec![4, 2], vec![6, 3, 0], vec![7, 5, 1, 0], vec![7, 5, 2, 0, 0]]).unwrap();
        assert_eq!(a, expect);
        assert_eq!(Hive::delta_inverse(&a, &p(&[7, 5, 3, 0, 0])).unwrap(), h);
    }

    #[test]
    fn sample_delta_ne_and_inverse() {
        let h = sample_hive();
        let b = h.delta_ne();
        let expect = GtPattern::new(vec![vec![1], vec![4, 1], vec![6, 3, 0], vec![7, 5, 1, 0], vec![7, 5, 3, 0, 0]]).unwrap();
        assert_eq!(b, expect);
        assert!(b.is_valid());
        assert_eq!(Hive::delta_ne_inverse(&b, &p(&[9, 9, 6, 4, 1])).unwrap(), h);
    }

    #[test]
    fn delta_ne_is_delta_of_reflection() {
        // h'(r,k) = |ν| - h(n-k, n-r) swaps the left and bottom edges; it is
        // not a hive, and ∂ of it is ∂^NE of h with every row reversed.
        let h = sample_hive();
        let n = h.n();
        let total = h.at((n, n));
        let labels = (0..=n).map(|r| (0..=r).map(|k| total - h.at((n - k, n - r))).collect()).collect();
        let reflected = Hive { labels };
        assert!(!reflected.is_hive());
        let mut rows: Vec<Vec<i64>> = h.delta_ne().rows().to_vec();
        rows.iter_mut().for_each(|r| r.reverse());
        assert_eq!(reflected.delta().rows(), &rows[..]);
    }

    #[test]
    fn zero_borders() {
        let z = p(&[0, 0, 0]);
        let h = Hive::with_borders(&z, &z, &z).unwrap();
        assert!(h.delta().rows().iter().flatten().all(|&x| x == 0));
        assert!(h.delta_ne().rows().iter().flatten().all(|&x| x == 0));
        assert!(h.is_hive());
        let one = Hive::new(vec![vec![0], vec![0, 2]]).unwrap();
        assert!(one.is_hive());
    }

    #[test]
    fn gt_conditions_are_rhombus_contents() {
        // NE conditions of ∂h are the Kogan rhombi; SE conditions the SE-slanted ones.
        let h = sample_hive();
        let a = h.delta();
        for i in 2..=5 {
            for j in 1..i {
                assert_eq!(a.ne(i, j), Rhombus::kogan(i, j).content(&h));
                let se = Rhombus { kind: RhombusKind::SeSlanted, r: i - 1, k: j - 1 };
                assert_eq!(a.se(i, j), se.content(&h));
            }
        }
    }
}
