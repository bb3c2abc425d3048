//! Browser bindings: each export takes plain strings and returns JSON.

use std::collections::BTreeMap;

use reflr::hive::{all_rhombi, enumerate_face_union, reduced_faces_for, Rhombus};
use reflr::partition::parse_partition;
use reflr::poly::DEMAZURE_MAX_N;
use reflr::refined::{bruhat_value_table, refined_lr, Engine};
use reflr::{Partition, Permutation};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest `n` the page accepts; tables beyond it are too slow for a browser.
pub const MAX_N: usize = 5;

/// At most this many hives are shipped to the page.
pub const HIVE_LIMIT: usize = 500;

type Out = Result<String, String>;

fn size(n: u32) -> Result<usize, String> {
    let n = n as usize;
    if n == 0 || n > MAX_N {
        return Err(format!("n must be between 1 and {MAX_N}"));
    }
    Ok(n)
}

fn part(s: &str, n: usize, name: &str) -> Result<Partition, String> {
    parse_partition(s, n).map_err(|e| format!("{name}: {e}"))
}

fn perm(s: &str, n: usize) -> Result<Permutation, String> {
    let w = Permutation::parse(s).map_err(|e| format!("w: {e}"))?;
    if w.n() != n {
        return Err(format!("w must permute 1..{n}"));
    }
    Ok(w)
}

fn to_json(v: &impl Serialize) -> Out {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// `c_{λμ}^ν(w)` from every engine that fits, as an engine report.
#[wasm_bindgen]
pub fn compute(n: u32, lambda: &str, mu: &str, nu: &str, w: &str) -> Out {
    let n = size(n)?;
    let (l, m, v, w) = (part(lambda, n, "λ")?, part(mu, n, "μ")?, part(nu, n, "ν")?, perm(w, n)?);
    let engines: Vec<Engine> = Engine::ALL.into_iter().filter(|&e| e != Engine::Demazure || n <= DEMAZURE_MAX_N).collect();
    to_json(&refined_lr(&l, &m, &v, &w, &engines).map_err(|e| e.to_string())?)
}

#[derive(Serialize)]
struct Node {
    w: Permutation,
    c: u64,
    length: usize,
    /// Position within the layer, in `(0, 1)`.
    x: f64,
}

#[derive(Serialize)]
struct Graph {
    n: usize,
    layers: usize,
    nodes: Vec<Node>,
    edges: Vec<(Permutation, Permutation)>,
    violations: usize,
}

/// The Bruhat order of `S_n` with `c_{λμ}^ν(w)` at each node, laid out in
/// layers by length.
#[wasm_bindgen]
pub fn bruhat_graph(n: u32, lambda: &str, mu: &str, nu: &str) -> Out {
    let n = size(n)?;
    let (l, m, v) = (part(lambda, n, "λ")?, part(mu, n, "μ")?, part(nu, n, "ν")?);
    let table = bruhat_value_table(&l, &m, &v, Engine::Crystal).map_err(|e| e.to_string())?;
    let mut layers: BTreeMap<usize, Vec<(Permutation, u64)>> = BTreeMap::new();
    for e in &table.values {
        layers.entry(e.w.length()).or_default().push((e.w.clone(), e.c));
    }
    let mut nodes = Vec::new();
    for (&length, layer) in &layers {
        let k = layer.len() as f64;
        for (i, (w, c)) in layer.iter().enumerate() {
            nodes.push(Node { w: w.clone(), c: *c, length, x: (i as f64 + 0.5) / k });
        }
    }
    to_json(&Graph { n, layers: layers.len(), nodes, edges: table.covers.clone(), violations: table.violations.len() })
}

#[derive(Serialize)]
struct RhombusView {
    kind: String,
    /// Obtuse vertices then acute ones, as `(row, column)`.
    vertices: [(usize, usize); 4],
    /// The rhombi that the face requires to be flat.
    forced: bool,
}

#[derive(Serialize)]
struct HiveView {
    n: usize,
    count: usize,
    truncated: bool,
    faces: Vec<String>,
    rhombi: Vec<RhombusView>,
    /// `contents[h][r]` is the content of `rhombi[r]` in hive `h`.
    contents: Vec<Vec<i64>>,
    hives: Vec<Vec<Vec<i64>>>,
}

fn rhombus_view(rh: &Rhombus, forced: bool) -> RhombusView {
    let (obtuse, acute) = rh.vertices();
    RhombusView { kind: format!("{:?}", rh.kind), vertices: [obtuse[0], obtuse[1], acute[0], acute[1]], forced }
}

/// The integer hives counted by the hive engine for `c_{λμ}^ν(w)`.
#[wasm_bindgen]
pub fn hive_points(n: u32, lambda: &str, mu: &str, nu: &str, w: &str) -> Out {
    let n = size(n)?;
    let (l, m, v, w) = (part(lambda, n, "λ")?, part(mu, n, "μ")?, part(nu, n, "ν")?, perm(w, n)?);
    let w0w = Permutation::longest(n).compose(&w).map_err(|e| e.to_string())?;
    let faces = reduced_faces_for(&w0w, false);
    let points = enumerate_face_union(&l, &m, &v, &faces).map_err(|e| e.to_string())?;
    // A rhombus is drawn as forced only when every face flattens it.
    let forced: Vec<Rhombus> = match faces.split_first() {
        Some((first, rest)) => first.rhombi().into_iter().filter(|r| rest.iter().all(|f| f.rhombi().contains(r))).collect(),
        None => Vec::new(),
    };
    let rhombi = all_rhombi(n);
    let shown: Vec<_> = points.iter().take(HIVE_LIMIT).collect();
    to_json(&HiveView {
        n,
        count: points.len(),
        truncated: points.len() > HIVE_LIMIT,
        faces: faces.iter().map(|f| f.to_string()).collect(),
        rhombi: rhombi.iter().map(|r| rhombus_view(r, forced.contains(r))).collect(),
        contents: shown.iter().map(|h| rhombi.iter().map(|r| r.content(h)).collect()).collect(),
        hives: shown.iter().map(|h| h.labels().to_vec()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: Out) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn compute_example() {
        let v = parse(compute(3, "2,1", "2,1", "3,2,1", "321"));
        assert_eq!(v["value"], 2);
        assert_eq!(v["agreement"], true);
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(compute(3, "1,2", "1", "2,1", "123").is_err());
        assert!(compute(9, "1", "1", "2", "123456789").is_err());
        assert!(hive_points(3, "1", "1", "2", "12").is_err());
    }

    #[test]
    fn bruhat_graph_layers() {
        let v = parse(bruhat_graph(3, "2,1", "2,1", "3,2,1"));
        assert_eq!(v["layers"], 4);
        assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
        assert_eq!(v["edges"].as_array().unwrap().len(), 8);
        assert_eq!(v["violations"], 0);
        let top = v["nodes"].as_array().unwrap().iter().find(|n| n["w"] == "321").unwrap();
        assert_eq!(top["c"], 2);
        assert_eq!(top["length"], 3);
    }

    #[test]
    fn hive_points_example() {
        let v = parse(hive_points(3, "2,1", "2,1", "3,2,1", "321"));
        assert_eq!(v["count"], 2);
        assert_eq!(v["hives"].as_array().unwrap().len(), 2);
        assert_eq!(v["faces"], serde_json::json!(["{}"]));
        let rhombi = v["rhombi"].as_array().unwrap().len();
        assert!(v["contents"].as_array().unwrap().iter().all(|c| c.as_array().unwrap().len() == rhombi));

        let v = parse(hive_points(3, "2,1", "2,1", "4,2", "123"));
        assert_eq!(v["count"], 1);
        assert!(v["rhombi"].as_array().unwrap().iter().any(|r| r["forced"] == true));
    }
}
