//! Symmetric-group arithmetic in one-line notation.
//!
//! Composition follows `(u∘v)(i) = u(v(i))` everywhere in the crate. A word
//! `[i₁, …, i_k]` stands for the product `s_{i₁}∘…∘s_{i_k}`, so the rightmost
//! letter acts first.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 1-based images: images[i] = w(i + 1).
    images: Vec<usize>,
}

/// The avoidance patterns used to classify permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    P312,
    P231,
}

impl Pattern {
    pub fn from_code(code: u32) -> Result<Self> {
        match code {
            312 => Ok(Pattern::P312),
            231 => Ok(Pattern::P231),
            other => Err(Error::UnsupportedPattern(other)),
        }
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The longest element `w₀ = n n-1 … 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    /// The simple transposition `s_i = (i, i+1)`, 1-based.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidIndex { index: i, n });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation { n, images });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Product `s_{i₁}∘…∘s_{i_k}` of a word of simple reflections.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Permutation::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::InvalidIndex { index: i, n });
            }
            w = w.rmul_simple(i);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn compose(&self, v: &Permutation) -> Result<Permutation> {
        if self.n() != v.n() {
            return Err(Error::SizeMismatch { expected: self.n(), actual: v.n() });
        }
        Ok(Permutation { images: v.images.iter().map(|&j| self.images[j - 1]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `s_i ∘ w`: swaps the values `i` and `i+1`.
    pub fn lmul_simple(&self, i: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { images }
    }

    /// `w ∘ s_i`: swaps the positions `i` and `i+1`.
    pub fn rmul_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `i+1` appears before `i` in one-line notation.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x == v).unwrap();
        pos(i + 1) < pos(i)
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// The lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        // Peeling off the smallest left descent at each step yields the
        // lex-smallest word, since every reduced word of the remainder exists.
        while let Some(i) = (1..w.n()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.lmul_simple(i);
        }
        word
    }

    pub fn length_and_reduced_word(&self) -> (usize, Vec<usize>) {
        let word = self.reduced_word();
        (word.len(), word)
    }

    /// Every reduced word, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        fn rec(w: &Permutation, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if w.is_identity() {
                out.push(prefix.clone());
                return;
            }
            for i in 1..w.n() {
                if w.has_left_descent(i) {
                    prefix.push(i);
                    rec(&w.lmul_simple(i), prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn avoids(&self, pattern: Pattern) -> bool {
        let w = &self.images;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let hit = match pattern {
                        Pattern::P312 => w[j] < w[k] && w[k] < w[i],
                        Pattern::P231 => w[k] < w[i] && w[i] < w[j],
                    };
                    if hit {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[cfg(test)]
    pub(crate) fn avoids_132(&self) -> bool {
        let w = &self.images;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if w[i] < w[k] && w[k] < w[j] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Bruhat order via the subword property on the lex-smallest reduced
    /// word of `v`: the products of all subwords are exactly `[e, v]`.
    pub fn bruhat_leq(&self, v: &Permutation) -> Result<bool> {
        if self.n() != v.n() {
            return Err(Error::SizeMismatch { expected: v.n(), actual: self.n() });
        }
        if self.length() > v.length() {
            return Ok(false);
        }
        let mut below: BTreeSet<Permutation> = BTreeSet::new();
        below.insert(Permutation::identity(v.n()));
        for i in v.reduced_word() {
            let extended: Vec<Permutation> = below.iter().map(|x| x.rmul_simple(i)).collect();
            below.extend(extended);
        }
        Ok(below.contains(self))
    }

    /// All `v > w` with `ℓ(v) = ℓ(w) + 1`, sorted.
    pub fn bruhat_covers(&self) -> Vec<Permutation> {
        let w = &self.images;
        let n = w.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                // w·(a b) covers w iff w(a) < w(b) with no intermediate value between them.
                if w[a] < w[b] && !(a + 1..b).any(|c| w[a] < w[c] && w[c] < w[b]) {
                    let mut images = w.clone();
                    images.swap(a, b);
                    out.push(Permutation { images });
                }
            }
        }
        out.sort();
        out
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        // Standard next-permutation iteration.
        while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation { images: cur.clone() });
        }
        out
    }

    /// The finest block structure whose Young subgroup contains `w`.
    pub fn finest_blocks(&self) -> BlockStructure {
        let mut blocks = Vec::new();
        let mut start = 0;
        let mut max_seen = 0;
        for (i, &v) in self.images.iter().enumerate() {
            max_seen = max_seen.max(v);
            if max_seen == i + 1 {
                blocks.push(i + 1 - start);
                start = i + 1;
            }
        }
        BlockStructure { blocks }
    }

    /// Whether `w` is a commuting product of 312- or 231-avoiding factors
    /// over some Young subgroup.
    pub fn is_theorem_covered(&self) -> bool {
        let blocks = self.finest_blocks();
        let factors = block_factor(self, &blocks).expect("finest blocks always factor");
        factors.iter().all(|f| f.avoids(Pattern::P312) || f.avoids(Pattern::P231))
    }

    /// Comma-free for `n ≤ 9`, comma-separated otherwise.
    pub fn one_line(&self) -> String {
        if self.n() <= 9 {
            self.images.iter().map(|v| v.to_string()).collect()
        } else {
            self.images.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    /// Parses `"2413"` or `"2,4,1,3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::NotPermutation { n: 0, images: vec![] };
        let images: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        Permutation::from_one_line(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.one_line())
    }
}

/// Minimal-length element of `W_λ w W_μ`, by sweeping the whole double coset.
///
/// `W_λ` is generated by the `s_i` with `λ_i = λ_{i+1}` acting on the left,
/// `W_μ` likewise on the right.
pub fn double_coset_rep(lambda: &Partition, w: &Permutation, mu: &Partition) -> Result<Permutation> {
    double_coset(lambda, w, mu).map(|coset| coset.into_iter().min_by_key(|x| (x.length(), x.clone())).expect("coset is nonempty"))
}

/// Every element of `W_λ w W_μ`.
pub fn double_coset(lambda: &Partition, w: &Permutation, mu: &Partition) -> Result<BTreeSet<Permutation>> {
    let n = w.n();
    for p in [lambda, mu] {
        if p.n() != n {
            return Err(Error::SizeMismatch { expected: n, actual: p.n() });
        }
    }
    let left: Vec<usize> = (1..n).filter(|&i| lambda.is_fixed_by(i)).collect();
    let right: Vec<usize> = (1..n).filter(|&i| mu.is_fixed_by(i)).collect();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        let nexts = left.iter().map(|&i| x.lmul_simple(i)).chain(right.iter().map(|&i| x.rmul_simple(i)));
        for y in nexts {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Ordered block sizes `(n₁, …, n_p)` of a Young subgroup `S_{n₁} × … × S_{n_p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    blocks: Vec<usize>,
}

impl BlockStructure {
    pub fn new(blocks: Vec<usize>, n: usize) -> Result<Self> {
        if blocks.contains(&0) || blocks.iter().sum::<usize>() != n {
            return Err(Error::BadBlocks { blocks, n });
        }
        Ok(BlockStructure { blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// `(start, len)` for each block, 0-based starts.
    pub fn intervals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks.iter().scan(0, |start, &len| {
            let s = *start;
            *start += len;
            Some((s, len))
        })
    }
}

/// Splits `w` into its block factors, or `None` if some value crosses a block.
pub fn block_factor(w: &Permutation, blocks: &BlockStructure) -> Option<Vec<Permutation>> {
    if blocks.n() != w.n() {
        return None;
    }
    let mut factors = Vec::with_capacity(blocks.blocks.len());
    for (start, len) in blocks.intervals() {
        let mut images = Vec::with_capacity(len);
        for &v in &w.images[start..start + len] {
            if v <= start || v > start + len {
                return None;
            }
            images.push(v - start);
        }
        factors.push(Permutation { images });
    }
    Some(factors)
}
