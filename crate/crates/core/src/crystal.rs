//! Type A crystals on words and semistandard tableaux.
//!
//! Operators act on words; a tableau is identified with its reverse row word
//! (rows read right to left, top row first) together with its shape. Under
//! this reading the bracketing rule cancels a letter `i` standing to the left
//! of a letter `i+1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::poly::IntPolynomial;

/// A word over the alphabet `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of occurrences of each letter `1..=n`.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let mut wt = vec![0; n];
        for &a in &self.0 {
            wt[a as usize - 1] += 1;
        }
        wt
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Digit string for `n ≤ 9`, comma-separated otherwise.
    pub fn display(&self, n: usize) -> String {
        if n <= 9 {
            self.0.iter().map(|a| a.to_string()).collect()
        } else {
            self.0.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.iter().copied().max().unwrap_or(0) as usize;
        f.write_str(&self.display(n))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A semistandard Young tableau with entries in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Tableau {
    #[serde(skip)]
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(n: usize, mut rows: Vec<Vec<u8>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() > n {
            return Err(Error::InvalidTableau(format!("{} rows exceed n = {n}", rows.len())));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {} is empty", r + 1)));
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(Error::InvalidTableau("row lengths are not a partition".into()));
            }
            if row.iter().any(|&a| a == 0 || a as usize > n) {
                return Err(Error::InvalidTableau(format!("entry out of 1..={n}")));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {} decreases", r + 1)));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(b, a)| b <= a) {
                return Err(Error::InvalidTableau(format!("column strictness fails in row {}", r + 1)));
            }
        }
        Ok(Tableau { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        let lens: Vec<u32> = self.rows.iter().map(|r| r.len() as u32).collect();
        Partition::padded(&lens, self.n).expect("tableau rows form a partition")
    }

    pub fn weight(&self) -> Vec<u32> {
        reverse_row_word(self).weight(self.n)
    }

    /// Rebuilds a tableau of the given shape from its reverse row word.
    pub fn from_reverse_row_word(n: usize, shape: &Partition, word: &Word) -> Result<Self> {
        if shape.size() as usize != word.len() {
            return Err(Error::InvalidTableau("word length differs from shape size".into()));
        }
        let mut rows = Vec::new();
        let mut pos = 0;
        for &len in shape.parts() {
            let len = len as usize;
            let mut row = word.0[pos..pos + len].to_vec();
            row.reverse();
            rows.push(row);
            pos += len;
        }
        Tableau::new(n, rows)
    }
}

/// Rows read right to left, top row first.
pub fn reverse_row_word(t: &Tableau) -> Word {
    Word(t.rows.iter().flat_map(|row| row.iter().rev().copied()).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `e_i`
    Raise,
    /// `f_i`
    Lower,
}

/// `e_i u` or `f_i u` by the bracketing rule; `None` when the operator kills `u`.
pub fn crystal_step(direction: Direction, i: usize, u: &Word) -> Option<Word> {
    let (lo, hi) = (i as u8, i as u8 + 1);
    let mut open: Vec<usize> = Vec::new();
    let mut unmatched_hi: Vec<usize> = Vec::new();
    for (p, &a) in u.0.iter().enumerate() {
        if a == lo {
            open.push(p);
        } else if a == hi && open.pop().is_none() {
            unmatched_hi.push(p);
        }
    }
    let mut v = u.0.clone();
    match direction {
        Direction::Lower => {
            let &p = open.first()?;
            v[p] = hi;
        }
        Direction::Raise => {
            let &p = unmatched_hi.last()?;
            v[p] = lo;
        }
    }
    Some(Word(v))
}

/// Applies `crystal_step` to a tableau through its reverse row word.
pub fn tableau_step(direction: Direction, i: usize, t: &Tableau) -> Option<Tableau> {
    let word = crystal_step(direction, i, &reverse_row_word(t))?;
    Some(Tableau::from_reverse_row_word(t.n, &t.shape(), &word).expect("crystal operators preserve tableaux"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Highest,
    Lowest,
}

/// `T_μ` (row `j` filled with `j`) or `T_μ*`, the unique tableau killed by every `f_i`.
pub fn extreme_tableau(mu: &Partition, which: Extreme) -> Tableau {
    let n = mu.n();
    let highest_rows: Vec<Vec<u8>> = mu.parts().iter().enumerate().map(|(j, &len)| vec![j as u8 + 1; len as usize]).collect();
    let mut t = Tableau::new(n, highest_rows).expect("highest tableau is semistandard");
    if which == Extreme::Lowest {
        // The crystal of Tab(μ) is connected, so lowering to exhaustion ends at T_μ*.
        while let Some(next) = (1..n).find_map(|i| tableau_step(Direction::Lower, i, &t)) {
            t = next;
        }
    }
    t
}

/// Ballot condition: every prefix has at least as many `i` as `i+1`.
pub fn is_dominant(u: &Word) -> bool {
    let n = u.0.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; n + 1];
    for &a in &u.0 {
        let a = a as usize;
        counts[a] += 1;
        if a >= 2 && counts[a] > counts[a - 1] {
            return false;
        }
    }
    true
}

/// Weight of `word(T_λ) * u` if that concatenation is dominant.
///
/// The prefix `word(T_λ)` is itself dominant with weight `λ`, so only the
/// letters of `u` need checking.
pub fn lr_weight(lambda: &Partition, u: &Word) -> Option<Vec<u32>> {
    let mut counts: Vec<u32> = lambda.parts().to_vec();
    for &a in &u.0 {
        let a = a as usize - 1;
        counts[a] += 1;
        if a >= 1 && counts[a] > counts[a - 1] {
            return None;
        }
    }
    Some(counts)
}

/// Every semistandard tableau of shape `μ` with entries in `1..=n`, sorted.
pub fn all_tableaux(mu: &Partition) -> Vec<Tableau> {
    let n = mu.n();
    let shape: Vec<usize> = mu.parts().iter().map(|&p| p as usize).filter(|&p| p > 0).collect();
    let col_height = |c: usize| shape.iter().filter(|&&len| len > c).count();
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u8>>,
        n: usize,
        col_height: &dyn Fn(usize) -> usize,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            out.push(Tableau { n, rows: rows.clone() });
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        let lo = left.max(above);
        // Room for the strictly increasing entries still needed below in this column.
        let hi = (n - (col_height(c) - 1 - r)) as u8;
        for v in lo..=hi {
            rows[r].push(v);
            fill(idx + 1, cells, rows, n, col_height, out);
            rows[r].pop();
        }
    }

    let mut rows = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fill(0, &cells, &mut rows, n, &col_height, &mut out);
    out.sort();
    out
}

/// Staged closure: starting from `seed`, apply all powers of the operators of
/// `word`, rightmost first.
pub fn demazure_closure(seed: &Word, word: &[usize], direction: Direction) -> BTreeSet<Word> {
    let mut current: BTreeSet<Word> = BTreeSet::from([seed.clone()]);
    for &i in word.iter().rev() {
        let mut next = current.clone();
        for x in &current {
            let mut y = x.clone();
            while let Some(z) = crystal_step(direction, i, &y) {
                next.insert(z.clone());
                y = z;
            }
        }
        current = next;
    }
    current
}

/// A Demazure crystal `B(μ, w)` or an opposite one `B(μ, w)^op`, stored as
/// reverse row words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemazureCrystal {
    pub shape: Partition,
    pub w: Permutation,
    pub opposite: bool,
    pub elements: BTreeSet<Word>,
}

impl DemazureCrystal {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        self.elements.contains(&reverse_row_word(t))
    }

    pub fn tableaux(&self) -> Vec<Tableau> {
        self.elements
            .iter()
            .map(|u| Tableau::from_reverse_row_word(self.w.n(), &self.shape, u).expect("crystal elements are tableaux"))
            .collect()
    }

    /// `Σ x^{wt(T)}` over the crystal.
    pub fn character(&self) -> IntPolynomial {
        let n = self.w.n();
        IntPolynomial::from_terms(n, self.elements.iter().map(|u| (u.weight(n), 1)))
    }
}

/// `{f_{i₁}^{m₁} ⋯ f_{i_k}^{m_k} T_μ}` for a reduced word of `w`; with
/// `opposite`, `{e_{i₁}^{m₁} ⋯ e_{i_k}^{m_k} T_μ*}` instead.
pub fn demazure_crystal(mu: &Partition, w: &Permutation, opposite: bool) -> Result<DemazureCrystal> {
    if mu.n() != w.n() {
        return Err(Error::SizeMismatch { expected: w.n(), actual: mu.n() });
    }
    let (seed, dir) = if opposite {
        (extreme_tableau(mu, Extreme::Lowest), Direction::Raise)
    } else {
        (extreme_tableau(mu, Extreme::Highest), Direction::Lower)
    };
    let elements = demazure_closure(&reverse_row_word(&seed), &w.reduced_word(), dir);
    Ok(DemazureCrystal { shape: mu.clone(), w: w.clone(), opposite, elements })
}

/// Tallies `weight(word(T_λ) * u)` over the dominant concatenations.
pub fn lr_tally<'a>(lambda: &Partition, words: impl IntoIterator<Item = &'a Word>) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for u in words {
        if let Some(wt) = lr_weight(lambda, u) {
            let nu = Partition::new(wt).expect("dominant weights are partitions");
            *out.entry(nu).or_insert(0) += 1;
        }
    }
    out
}

/// `c_{λμ}^ν(w)` for every `ν` at once, by counting in `B(μ, w)`.
pub fn refined_lr_crystal_all(lambda: &Partition, mu: &Partition, w: &Permutation) -> Result<BTreeMap<Partition, u64>> {
    if lambda.n() != w.n() {
        return Err(Error::SizeMismatch { expected: w.n(), actual: lambda.n() });
    }
    let crystal = demazure_crystal(mu, w, false)?;
    Ok(lr_tally(lambda, &crystal.elements))
}

/// `#{T ∈ B(μ, w) : word(T_λ) * b_T is dominant of weight ν}`.
pub fn refined_lr_crystal(lambda: &Partition, mu: &Partition, nu: &Partition, w: &Permutation) -> Result<u64> {
    if nu.n() != w.n() {
        return Err(Error::SizeMismatch { expected: w.n(), actual: nu.n() });
    }
    Ok(refined_lr_crystal_all(lambda, mu, w)?.get(nu).copied().unwrap_or(0))
}

/// The same count with the Demazure crystal grown from an arbitrary dominant
/// seed word of weight `μ` instead of `word(T_μ)`.
pub fn refined_lr_crystal_seeded(lambda: &Partition, nu: &Partition, seed: &Word, w: &Permutation) -> Result<u64> {
    if !is_dominant(seed) {
        return Err(Error::InvalidTableau(format!("seed {seed} is not dominant")));
    }
    let words = demazure_closure(seed, &w.reduced_word(), Direction::Lower);
    Ok(lr_tally(lambda, &words).get(nu).copied().unwrap_or(0))
}

/// Schützenberger evacuation: repeatedly remove the corner entry `x`, slide
/// the hole out by jeu de taquin and record `n+1-x` where the hole exits.
pub fn evacuation(t: &Tableau) -> Tableau {
    let n = t.n as u8;
    let mut rows = t.rows.clone();
    let mut out: Vec<Vec<u8>> = rows.iter().map(|r| vec![0; r.len()]).collect();
    while !rows.is_empty() {
        let x = rows[0][0];
        let (mut r, mut c) = (0, 0);
        loop {
            let right = rows[r].get(c + 1).copied();
            let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
            match (right, below) {
                // Ties slide up from below to keep columns strict.
                (Some(a), Some(b)) if b <= a => {
                    rows[r][c] = b;
                    r += 1;
                }
                (Some(a), _) => {
                    rows[r][c] = a;
                    c += 1;
                }
                (None, Some(b)) => {
                    rows[r][c] = b;
                    r += 1;
                }
                (None, None) => break,
            }
        }
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        out[r][c] = n + 1 - x;
    }
    Tableau::new(t.n, out).expect("evacuation yields a semistandard tableau")
}
