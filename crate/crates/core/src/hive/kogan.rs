use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{GtPattern, Hive, Rhombus};
use crate::error::{Error, Result};
use crate::perm::{Pattern, Permutation};

/// Reading order for the letters of a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceOrder {
    /// `i` ascending, then `j` ascending (dual faces: `j` descending).
    Lex,
    /// `j` ascending, then `i` ascending. Primal faces only.
    Column,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWord {
    pub word: Vec<usize>,
    pub product: Permutation,
    pub reduced: bool,
}

/// A set of flat positions.
///
/// Primal faces hold pairs `n ≥ i > j ≥ 1` standing for `NE_{ij} = 0`
/// (the hive rhombus `R_{ij}` is flat) with letter `s_{i-j}`. Dual faces hold
/// pairs `n ≥ i ≥ j ≥ 2` standing for `a_{i-1,j-1} = a_{ij}` with letter
/// `s_{j-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct KoganFace {
    pub n: usize,
    pub flats: BTreeSet<(usize, usize)>,
    pub dual: bool,
}

fn in_range(n: usize, dual: bool, (i, j): (usize, usize)) -> bool {
    if dual {
        i <= n && i >= j && j >= 2
    } else {
        i <= n && i > j && j >= 1
    }
}

fn letter(dual: bool, (i, j): (usize, usize)) -> usize {
    if dual {
        j - 1
    } else {
        i - j
    }
}

/// All admissible pairs in the reading order of `σ` (or `σ̄`).
fn ordered_pairs(n: usize, dual: bool, order: FaceOrder) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).filter(|&p| in_range(n, dual, p)).collect();
    match (dual, order) {
        (false, FaceOrder::Lex) => pairs.sort(),
        (false, FaceOrder::Column) => pairs.sort_by_key(|&(i, j)| (j, i)),
        (true, _) => pairs.sort_by_key(|&(i, j)| (i, std::cmp::Reverse(j))),
    }
    pairs
}

impl KoganFace {
    pub fn new(n: usize, flats: impl IntoIterator<Item = (usize, usize)>, dual: bool) -> Result<Self> {
        let flats: BTreeSet<(usize, usize)> = flats.into_iter().collect();
        if let Some(&(i, j)) = flats.iter().find(|&&p| !in_range(n, dual, p)) {
            return Err(Error::InvalidIndex { index: if i > n { i } else { j }, n });
        }
        Ok(KoganFace { n, flats, dual })
    }

    pub fn empty(n: usize, dual: bool) -> Self {
        KoganFace { n, flats: BTreeSet::new(), dual }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// The word `σ(F)` (`σ'(F)` for [`FaceOrder::Column`], `σ̄(F)` for dual faces).
    pub fn face_word(&self, order: FaceOrder) -> Result<FaceWord> {
        if self.dual && order == FaceOrder::Column {
            return Err(Error::InvalidGtPattern("column order is defined for primal faces only".into()));
        }
        let word: Vec<usize> =
            ordered_pairs(self.n, self.dual, order).into_iter().filter(|p| self.flats.contains(p)).map(|p| letter(self.dual, p)).collect();
        let product = Permutation::from_word(self.n, &word)?;
        let reduced = product.length() == word.len();
        Ok(FaceWord { word, product, reduced })
    }

    pub fn is_reduced(&self) -> bool {
        self.face_word(FaceOrder::Lex).is_ok_and(|fw| fw.reduced)
    }

    /// `w₀ σ(F) w₀` (or `w₀ σ̄(F) w₀`), defined for reduced faces.
    pub fn varpi(&self) -> Option<Permutation> {
        let fw = self.face_word(FaceOrder::Lex).ok()?;
        if !fw.reduced {
            return None;
        }
        Some(conjugate_by_w0(&fw.product))
    }

    /// Primal faces: the hive rhombi `R_{ij}` required to be flat.
    pub fn rhombi(&self) -> Vec<Rhombus> {
        assert!(!self.dual, "dual faces are not hive rhombi");
        self.flats.iter().map(|&(i, j)| Rhombus::kogan(i, j)).collect()
    }

    pub fn contains_gt(&self, a: &GtPattern) -> bool {
        self.flats.iter().all(|&(i, j)| if self.dual { a.se(i, j - 1) == 0 } else { a.ne(i, j) == 0 })
    }

    pub fn contains_hive(&self, h: &Hive) -> bool {
        if self.dual {
            self.contains_gt(&h.delta_ne())
        } else {
            self.rhombi().iter().all(|r| r.content(h) == 0)
        }
    }

    /// Whether the flats are `{(i,j) : p ≤ i ≤ n, 1 ≤ j ≤ m_i}` with
    /// `m_p ≤ … ≤ m_n`.
    pub fn is_left_bottom_justified(&self) -> bool {
        if self.dual {
            return false;
        }
        let mut prev = 0;
        for i in 1..=self.n {
            let row: Vec<usize> = self.flats.iter().filter(|&&(a, _)| a == i).map(|&(_, j)| j).collect();
            let m = row.len();
            if row != (1..=m).collect::<Vec<_>>() || m < prev {
                return false;
            }
            prev = m;
        }
        true
    }

    /// The dual face flattened by `∂^NE` when this primal face is flat: `R_{ij}`
    /// becomes the dual pair `(n-j+1, i-j+1)`.
    pub fn to_dual(&self) -> KoganFace {
        assert!(!self.dual);
        let flats = self.flats.iter().map(|&(i, j)| (self.n - j + 1, i - j + 1)).collect();
        KoganFace { n: self.n, flats, dual: true }
    }
}

impl fmt::Display for KoganFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.flats.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "{}{{{}}}", if self.dual { "dual" } else { "" }, items.join(","))
    }
}

fn conjugate_by_w0(p: &Permutation) -> Permutation {
    let w0 = Permutation::longest(p.n());
    w0.compose(p).and_then(|x| x.compose(&w0)).expect("same size")
}

/// Every reduced face `F` with `ϖ(F) = u` (or `ϖ̄(F) = u`), by include/exclude
/// search over the reading order with length pruning.
pub fn reduced_faces_for(u: &Permutation, dual: bool) -> Vec<KoganFace> {
    let n = u.n();
    let target = conjugate_by_w0(u);
    let target_len = target.length();
    let pairs = ordered_pairs(n, dual, FaceOrder::Lex);

    struct Search<'a> {
        pairs: &'a [(usize, usize)],
        dual: bool,
        target: &'a Permutation,
        target_len: usize,
        chosen: Vec<(usize, usize)>,
        out: Vec<BTreeSet<(usize, usize)>>,
    }

    impl Search<'_> {
        fn go(&mut self, idx: usize, prod: &Permutation) {
            let len = self.chosen.len();
            if len == self.target_len {
                if prod == self.target {
                    self.out.push(self.chosen.iter().copied().collect());
                }
                return;
            }
            if idx == self.pairs.len() || self.pairs.len() - idx < self.target_len - len {
                return;
            }
            let pair = self.pairs[idx];
            let next = prod.rmul_simple(letter(self.dual, pair));
            // Keep only prefixes of reduced words of the target.
            if next.length() == len + 1 {
                let rest = next.inverse().compose(self.target).expect("same size");
                if rest.length() == self.target_len - len - 1 {
                    self.chosen.push(pair);
                    self.go(idx + 1, &next);
                    self.chosen.pop();
                }
            }
            self.go(idx + 1, prod);
        }
    }

    let mut search = Search { pairs: &pairs, dual, target: &target, target_len, chosen: Vec::new(), out: Vec::new() };
    search.go(0, &Permutation::identity(n));
    let mut out: Vec<KoganFace> = search.out.into_iter().map(|flats| KoganFace { n, flats, dual }).collect();
    out.sort();
    out
}

/// The unique reduced face with `ϖ(F) = w₀w` for a 312-avoiding `w`.
pub fn f_w_for_312(w: &Permutation) -> Result<KoganFace> {
    if !w.avoids(Pattern::P312) {
        return Err(Error::Not312Avoiding(w.one_line()));
    }
    let w0w = Permutation::longest(w.n()).compose(w)?;
    let mut faces = reduced_faces_for(&w0w, false);
    if faces.len() != 1 || !faces[0].is_left_bottom_justified() {
        return Err(Error::InvalidHive(format!("{} reduced faces for {}, expected one justified face", faces.len(), w0w)));
    }
    Ok(faces.remove(0))
}
