use std::collections::{BTreeMap, BTreeSet};

use super::{all_rhombi, interior_vertices, Hive, KoganFace, Rhombus, Vertex};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

/// A rhombus inequality that becomes unary once `vertex` is the last of its
/// vertices to be filled: `sign * h(vertex) + Σ coeff * h(other) ≥ 0`, or `= 0`
/// when the rhombus is required flat.
struct Constraint {
    sign: i64,
    others: Vec<(i64, Vertex)>,
    flat: bool,
}

fn signed_vertices(rh: &Rhombus) -> [(i64, Vertex); 4] {
    let (obtuse, acute) = rh.vertices();
    [(1, obtuse[0]), (1, obtuse[1]), (-1, acute[0]), (-1, acute[1])]
}

/// All integer hives with the given borders on which every rhombus of `face`
/// is flat, in row-major label order.
///
/// Interior labels are filled from row `n-1` up to row `2`, left to right,
/// each within bounds forced by the rhombi it completes.
pub fn enumerate_kogan_hives(lambda: &Partition, mu: &Partition, nu: &Partition, face: &KoganFace) -> Result<Vec<Hive>> {
    let n = lambda.n();
    if face.dual || face.n != n {
        return Err(Error::SizeMismatch { expected: n, actual: face.n });
    }
    if lambda.size() + mu.size() != nu.size() {
        return Ok(Vec::new());
    }
    let start = Hive::with_borders(lambda, mu, nu)?;
    let mut order: Vec<Vertex> = interior_vertices(n);
    order.sort_by_key(|&(r, k)| (std::cmp::Reverse(r), k));
    let position: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(p, &v)| (v, p)).collect();

    let flats: BTreeSet<Rhombus> = face.rhombi().into_iter().collect();
    let mut constraints: Vec<Vec<Constraint>> = (0..order.len()).map(|_| Vec::new()).collect();
    for rh in all_rhombi(n) {
        let flat = flats.contains(&rh);
        let verts = signed_vertices(&rh);
        let last = verts.iter().filter_map(|(_, v)| position.get(v).map(|&p| (p, *v))).max();
        match last {
            None => {
                let c = rh.content(&start);
                if c < 0 || (flat && c != 0) {
                    return Ok(Vec::new());
                }
            }
            Some((p, v)) => {
                let sign = verts.iter().find(|(_, u)| *u == v).map(|(s, _)| *s).expect("vertex of rhombus");
                let others = verts.iter().filter(|(_, u)| *u != v).copied().collect();
                constraints[p].push(Constraint { sign, others, flat });
            }
        }
    }

    fn fill(p: usize, h: &mut Hive, order: &[Vertex], constraints: &[Vec<Constraint>], out: &mut Vec<Hive>) {
        if p == order.len() {
            out.push(h.clone());
            return;
        }
        let (mut lo, mut hi) = (i64::MIN, i64::MAX);
        for c in &constraints[p] {
            let rest: i64 = c.others.iter().map(|&(s, u)| s * h.at(u)).sum();
            // sign * x + rest ≥ 0 (or = 0)
            let bound = -rest * c.sign;
            if c.flat {
                lo = lo.max(bound);
                hi = hi.min(bound);
            } else if c.sign > 0 {
                lo = lo.max(bound);
            } else {
                hi = hi.min(bound);
            }
        }
        assert!(lo > i64::MIN && hi < i64::MAX, "every interior label is bounded on both sides");
        for x in lo..=hi {
            h.set(order[p], x);
            fill(p + 1, h, order, constraints, out);
        }
    }

    let mut out = Vec::new();
    let mut h = start;
    fill(0, &mut h, &order, &constraints, &mut out);
    out.sort();
    Ok(out)
}

/// The union of the integer points over several faces, deduplicated.
pub fn enumerate_face_union(lambda: &Partition, mu: &Partition, nu: &Partition, faces: &[KoganFace]) -> Result<BTreeSet<Hive>> {
    let mut out = BTreeSet::new();
    for f in faces {
        out.extend(enumerate_kogan_hives(lambda, mu, nu, f)?);
    }
    Ok(out)
}

fn check_sizes(n: usize, parts: &[&Partition]) -> Result<()> {
    for p in parts {
        if p.n() != n {
            return Err(Error::SizeMismatch { expected: n, actual: p.n() });
        }
    }
    Ok(())
}

/// `#` integer hives on the union of reduced faces `F` with `ϖ(F) = w₀w`.
pub fn refined_lr_hive(lambda: &Partition, mu: &Partition, nu: &Partition, w: &Permutation) -> Result<u64> {
    check_sizes(w.n(), &[lambda, mu, nu])?;
    if lambda.size() + mu.size() != nu.size() {
        return Ok(0);
    }
    let w0w = Permutation::longest(w.n()).compose(w)?;
    let faces = super::reduced_faces_for(&w0w, false);
    Ok(enumerate_face_union(lambda, mu, nu, &faces)?.len() as u64)
}

/// The hive engine for every `ν` of the right size.
pub fn refined_lr_hive_all(lambda: &Partition, mu: &Partition, w: &Permutation) -> Result<BTreeMap<Partition, u64>> {
    check_sizes(w.n(), &[lambda, mu])?;
    let w0w = Permutation::longest(w.n()).compose(w)?;
    let faces = super::reduced_faces_for(&w0w, false);
    let mut out = BTreeMap::new();
    for nu in Partition::all_of_size(w.n(), lambda.size() + mu.size()) {
        let c = enumerate_face_union(lambda, mu, &nu, &faces)?.len() as u64;
        if c > 0 {
            out.insert(nu, c);
        }
    }
    Ok(out)
}
