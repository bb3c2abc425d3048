use num_rational::Ratio;
use serde::Serialize;

use super::{all_rhombi, interior_vertices, Hive, Rhombus, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Increasable {
    pub subset: Vec<Vertex>,
    /// Largest `ε` keeping `h + ε·I_S` a hive.
    #[serde(serialize_with = "ratio_string")]
    pub epsilon: Ratio<i64>,
}

fn ratio_string<S: serde::Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Change in `content(rh)` per unit increase of the labels in `subset`.
pub fn content_slope(rh: &Rhombus, subset: &[Vertex]) -> i64 {
    let (obtuse, acute) = rh.vertices();
    let count = |vs: [Vertex; 2]| vs.iter().filter(|v| subset.contains(v)).count() as i64;
    count(obtuse) - count(acute)
}

/// Every nonempty set `S` of interior vertices for which `h + ε·I_S` stays a
/// hive for some `ε > 0`, with the largest such `ε`.
pub fn increasable_subsets(h: &Hive) -> Vec<Increasable> {
    let n = h.n();
    let interior = interior_vertices(n);
    let rhombi = all_rhombi(n);
    let contents: Vec<i64> = rhombi.iter().map(|r| r.content(h)).collect();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << interior.len()) {
        let subset: Vec<Vertex> = interior.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
        let mut epsilon: Option<Ratio<i64>> = None;
        let mut feasible = true;
        for (rh, &c) in rhombi.iter().zip(&contents) {
            let slope = content_slope(rh, &subset);
            if slope >= 0 {
                continue;
            }
            if c == 0 {
                feasible = false;
                break;
            }
            let e = Ratio::new(c, -slope);
            epsilon = Some(epsilon.map_or(e, |cur| cur.min(e)));
        }
        if feasible {
            // The hive polytope is bounded, so some rhombus always limits ε.
            let epsilon = epsilon.expect("increase is bounded by a border rhombus");
            out.push(Increasable { subset, epsilon });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn no_interior_no_subsets() {
        let l = Partition::new(vec![1, 0]).unwrap();
        let h = Hive::with_borders(&l, &l, &Partition::new(vec![1, 1]).unwrap()).unwrap();
        assert!(increasable_subsets(&h).is_empty());
    }

    #[test]
    fn singleton_increase_in_small_polytope() {
        let l = Partition::new(vec![2, 1, 0]).unwrap();
        let nu = Partition::new(vec![3, 2, 1]).unwrap();
        let hives = crate::hive::enumerate_kogan_hives(&l, &l, &nu, &crate::hive::KoganFace::empty(3, false)).unwrap();
        assert_eq!(hives.len(), 2);
        let h = &hives[0];
        let inc = increasable_subsets(h);
        assert_eq!(inc.len(), 1);
        assert_eq!(inc[0].subset, vec![(2, 1)]);
        assert_eq!(inc[0].epsilon, Ratio::from_integer(1));
        let mut up = h.clone();
        up.set((2, 1), h.at((2, 1)) + 1);
        assert_eq!(&up, &hives[1]);
    }
}
