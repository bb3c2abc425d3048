use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use reflr::crystal::{
    all_tableaux, demazure_closure, demazure_crystal, evacuation, extreme_tableau, lr_weight, reverse_row_word, Direction, Extreme, Tableau,
};
use reflr::hive::{enumerate_kogan_hives, f_w_for_312, increasable_subsets, reduced_faces_for, GtPattern, Hive, KoganFace};
use reflr::perm::Pattern;
use reflr::poly::{demazure_char, schur_poly, IntPolynomial};
use reflr::refined::{block_product_check, symmetry_inverse, symmetry_map};
use reflr::{Partition, Permutation};

fn poly_strategy(n: usize) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, n), -5i64..=5), 0..6).prop_map(move |terms| IntPolynomial::from_terms(n, terms))
}

/// `w·f`, substituting `x_i ↦ x_{w(i)}`.
fn act(w: &Permutation, f: &IntPolynomial) -> IntPolynomial {
    let n = f.n();
    IntPolynomial::from_terms(
        n,
        f.terms().map(|(a, c)| {
            let mut b = vec![0; n];
            for i in 0..n {
                b[w.at(i + 1) - 1] = a[i];
            }
            (b, c.clone())
        }),
    )
}

fn vandermonde(n: usize) -> IntPolynomial {
    let mut out = IntPolynomial::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut ei = vec![0; n];
            ei[i] = 1;
            let mut ej = vec![0; n];
            ej[j] = 1;
            let diff = IntPolynomial::from_terms(n, [(ei, BigInt::from(1)), (ej, BigInt::from(-1))]);
            out = &out * &diff;
        }
    }
    out
}

proptest! {
    #[test]
    fn demazure_is_idempotent(f in poly_strategy(3), i in 1usize..3) {
        let once = f.demazure(i).unwrap();
        prop_assert_eq!(once.demazure(i).unwrap(), once);
    }

    #[test]
    fn demazure_braid_relations(f in poly_strategy(4)) {
        for i in 1..3 {
            let a = f.demazure_word(&[i, i + 1, i]).unwrap();
            let b = f.demazure_word(&[i + 1, i, i + 1]).unwrap();
            prop_assert_eq!(a, b);
        }
        prop_assert_eq!(f.demazure_word(&[1, 3]).unwrap(), f.demazure_word(&[3, 1]).unwrap());
    }

    #[test]
    fn pi_w0_matches_alternant(f in poly_strategy(3)) {
        let n = 3;
        let rho = Partition::staircase(n);
        let shifted = &IntPolynomial::x_pow(rho.parts()) * &f;
        let mut alt = IntPolynomial::zero(n);
        for w in Permutation::all(n) {
            let term = act(&w, &shifted);
            alt = if w.length() % 2 == 0 { &alt + &term } else { &alt - &term };
        }
        prop_assert_eq!(&f.pi_w0().unwrap() * &vandermonde(n), alt);
    }

    #[test]
    fn pi_w0_output_is_symmetric(f in poly_strategy(4)) {
        prop_assert!(f.pi_w0().unwrap().is_symmetric());
    }
}

#[test]
fn demazure_char_independent_of_reduced_word() {
    for n in 2..=4 {
        for mu in Partition::all_bounded(n, 2) {
            for w in Permutation::all(n) {
                let expect = demazure_char(&w, &mu).unwrap();
                for word in w.reduced_words() {
                    assert_eq!(IntPolynomial::x_pow(mu.parts()).demazure_word(&word).unwrap(), expect, "w={w} word={word:?}");
                }
            }
        }
    }
}

/// All GT patterns with the given top row, built row by row downward.
fn gt_patterns(top: &[i64]) -> Vec<Vec<Vec<i64>>> {
    if top.len() == 1 {
        return vec![vec![top.to_vec()]];
    }
    let mut rows: Vec<Vec<i64>> = vec![vec![]];
    for k in 0..top.len() - 1 {
        rows = rows.into_iter().flat_map(|r| (top[k + 1]..=top[k]).map(move |x| [r.clone(), vec![x]].concat())).collect();
    }
    rows.into_iter()
        .flat_map(|r| {
            gt_patterns(&r).into_iter().map(move |mut below| {
                below.push(top.to_vec());
                below
            })
        })
        .collect()
}

#[test]
fn schur_poly_is_gt_sum() {
    for n in 1..=4 {
        for nu in Partition::all_bounded(n, 3) {
            let top: Vec<i64> = nu.parts().iter().map(|&p| p as i64).collect();
            let mut sum = IntPolynomial::zero(n);
            for pattern in gt_patterns(&top) {
                let sizes: Vec<i64> = pattern.iter().map(|r| r.iter().sum()).collect();
                let exps: Vec<u32> = (0..n).map(|k| (sizes[k] - if k == 0 { 0 } else { sizes[k - 1] }) as u32).collect();
                sum = &sum + &IntPolynomial::x_pow(&exps);
            }
            assert_eq!(schur_poly(&nu), sum, "ν={nu}");
        }
    }
}

fn highest_word(mu: &Partition) -> reflr::crystal::Word {
    reverse_row_word(&extreme_tableau(mu, Extreme::Highest))
}

fn lowest_word(mu: &Partition) -> reflr::crystal::Word {
    reverse_row_word(&extreme_tableau(mu, Extreme::Lowest))
}

#[test]
fn full_crystal_character_is_schur() {
    for n in 2..=4 {
        for mu in Partition::all_bounded(n, 2) {
            let b = demazure_crystal(&mu, &Permutation::longest(n), false).unwrap();
            assert_eq!(b.len(), all_tableaux(&mu).len());
            assert_eq!(b.character(), schur_poly(&mu));
            let op = demazure_crystal(&mu, &Permutation::longest(n), true).unwrap();
            assert_eq!(op.elements, b.elements);
        }
    }
}

#[test]
fn demazure_crystal_independent_of_reduced_word() {
    for n in 2..=4 {
        for mu in Partition::all_bounded(n, 2) {
            for w in Permutation::all(n) {
                let b = demazure_crystal(&mu, &w, false).unwrap();
                let op = demazure_crystal(&mu, &w, true).unwrap();
                for word in w.reduced_words() {
                    assert_eq!(demazure_closure(&highest_word(&mu), &word, Direction::Lower), b.elements);
                    assert_eq!(demazure_closure(&lowest_word(&mu), &word, Direction::Raise), op.elements);
                }
            }
        }
    }
}

#[test]
fn demazure_crystals_grow_along_bruhat_order() {
    for n in 2..=4 {
        for mu in Partition::all_bounded(n, 2) {
            for u in Permutation::all(n) {
                let bu = demazure_crystal(&mu, &u, false).unwrap();
                for v in u.bruhat_covers() {
                    let bv = demazure_crystal(&mu, &v, false).unwrap();
                    assert!(bu.elements.is_subset(&bv.elements), "μ={mu} {u} ⋖ {v}");
                }
            }
        }
    }
}

#[test]
fn evacuation_exchanges_demazure_and_opposite() {
    for n in 2..=4 {
        let w0 = Permutation::longest(n);
        for mu in Partition::all_bounded(n, 2) {
            for w in Permutation::all(n) {
                let conj = w0.compose(&w).unwrap().compose(&w0).unwrap();
                let b: BTreeSet<Tableau> = demazure_crystal(&mu, &w, false).unwrap().tableaux().iter().map(evacuation).collect();
                let op: BTreeSet<Tableau> = demazure_crystal(&mu, &conj, true).unwrap().tableaux().into_iter().collect();
                assert_eq!(b, op, "μ={mu} w={w}");
            }
        }
    }
}

fn all_hives(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<Hive> {
    enumerate_kogan_hives(lambda, mu, nu, &KoganFace::empty(lambda.n(), false)).unwrap()
}

fn triples(n: usize, max_part: u32) -> Vec<(Partition, Partition, Partition)> {
    let shapes = Partition::all_bounded(n, max_part);
    let mut out = Vec::new();
    for l in &shapes {
        for m in &shapes {
            for nu in Partition::all_of_size(n, l.size() + m.size()) {
                out.push((l.clone(), m.clone(), nu));
            }
        }
    }
    out
}

#[test]
fn bg_of_delta_is_lr_bijection() {
    for n in 1..=3 {
        for (l, m, nu) in triples(n, 3) {
            let images: BTreeSet<Tableau> = all_hives(&l, &m, &nu).iter().map(|h| h.delta().to_tableau().unwrap()).collect();
            let target: Vec<u32> = nu.parts().to_vec();
            let expect: BTreeSet<Tableau> =
                all_tableaux(&m).into_iter().filter(|t| lr_weight(&l, &reverse_row_word(t)).as_ref() == Some(&target)).collect();
            assert_eq!(images.len(), all_hives(&l, &m, &nu).len(), "injective");
            assert_eq!(images, expect, "λ={l} μ={m} ν={nu}");
        }
    }
}

#[test]
fn round_trips() {
    for (l, m, nu) in triples(3, 3) {
        for h in all_hives(&l, &m, &nu) {
            assert_eq!(Hive::delta_inverse(&h.delta(), &l).unwrap(), h);
            assert_eq!(Hive::delta_ne_inverse(&h.delta_ne(), &nu).unwrap(), h);
            assert_eq!(h.borders().unwrap(), (l.clone(), m.clone(), nu.clone()));
            let t = h.delta().to_tableau().unwrap();
            assert_eq!(GtPattern::from_tableau(&t), h.delta());
            assert_eq!(Tableau::from_reverse_row_word(3, &m, &reverse_row_word(&t)).unwrap(), t);
            assert_eq!(symmetry_inverse(&symmetry_map(&h).unwrap()).unwrap(), h);
        }
    }
}

proptest! {
    #[test]
    fn evacuation_is_involution(parts in prop::collection::vec(0u32..4, 4), pick in any::<prop::sample::Index>()) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mu = Partition::new(parts).unwrap();
        let tabs = all_tableaux(&mu);
        let t = &tabs[pick.index(tabs.len())];
        prop_assert_eq!(&evacuation(&evacuation(t)), t);
    }
}

#[test]
fn dual_faces_of_hives() {
    let n = 4;
    let w0 = Permutation::longest(n);
    for w in Permutation::all(n) {
        let faces = reduced_faces_for(&w0.compose(&w).unwrap(), false);
        let target = w.inverse().compose(&w0).unwrap();
        for f in &faces {
            let dual = f.to_dual();
            assert_eq!(dual.varpi(), Some(target.clone()), "w={w} F={f}");
            for (l, m, nu) in triples(n, 1) {
                for h in enumerate_kogan_hives(&l, &m, &nu, f).unwrap() {
                    assert!(dual.contains_hive(&h), "w={w} F={f} h={h}");
                }
            }
        }
        let mut duals: Vec<KoganFace> = faces.iter().map(KoganFace::to_dual).collect();
        duals.sort();
        assert_eq!(duals, reduced_faces_for(&target, true), "w={w}");
    }
}

#[test]
fn scaling_preserves_faces() {
    for n in 2..=3 {
        for w in Permutation::all(n).into_iter().filter(|w| w.avoids(Pattern::P312)) {
            let face = f_w_for_312(&w).unwrap();
            for (l, m, nu) in triples(n, 2) {
                let scaled = enumerate_kogan_hives(&l.scale(3), &m.scale(3), &nu.scale(3), &face).unwrap();
                for h in enumerate_kogan_hives(&l, &m, &nu, &face).unwrap() {
                    let p = h.scale(3);
                    assert!(p.is_hive() && face.contains_hive(&p));
                    assert!(scaled.binary_search(&p).is_ok());
                }
                assert!(scaled.len() >= enumerate_kogan_hives(&l, &m, &nu, &face).unwrap().len());
            }
        }
    }
}

#[test]
fn block_products_in_young_subgroups() {
    let n = 4;
    let shapes = Partition::all_bounded(n, 2);
    for w in Permutation::all(n) {
        let blocks = w.finest_blocks();
        if blocks.blocks().len() < 2 {
            continue;
        }
        for l in &shapes {
            for m in &shapes {
                for nu in Partition::all_of_size(n, l.size() + m.size()) {
                    let r = block_product_check(l, m, &nu, &blocks, &w).unwrap();
                    assert!(r.holds, "w={w} λ={l} μ={m} ν={nu}: {r:?}");
                }
            }
        }
    }
}

/// Searches the small grid for a hive on `face` with an increasable subset
/// that breaks one of the face's flat rhombi.
fn increase_breaks_face(face: &KoganFace, max_part: u32) -> Option<Hive> {
    let flats = face.rhombi();
    for (l, m, nu) in triples(face.n, max_part) {
        for h in enumerate_kogan_hives(&l, &m, &nu, face).unwrap() {
            for inc in increasable_subsets(&h) {
                let mut moved = h.clone();
                for &v in &inc.subset {
                    moved.set(v, h.at(v) + 1);
                }
                if flats.iter().any(|r| r.content(&moved) != 0) {
                    return Some(h);
                }
            }
        }
    }
    None
}

/// Every reduced face in S₄ other than the justified `F_w` admits, already on
/// a small grid, an increase that leaves the face; the `F_w` never do.
#[test]
fn only_justified_faces_stay_flat() {
    let n = 4;
    let w0 = Permutation::longest(n);
    for w in Permutation::all(n) {
        for f in reduced_faces_for(&w0.compose(&w).unwrap(), false) {
            let witness = increase_breaks_face(&f, 2);
            assert_eq!(witness.is_none(), f.is_left_bottom_justified(), "w={w} F={f} witness={witness:?}");
        }
    }
}
