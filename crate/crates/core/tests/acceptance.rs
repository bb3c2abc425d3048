//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_rational::Ratio;
use reflr::crystal::Tableau;
use reflr::crystal::{demazure_crystal, reverse_row_word};
use reflr::hive::{all_rhombi, enumerate_kogan_hives, f_w_for_312, increasable_subsets, reduced_faces_for, GtPattern, Hive};
use reflr::perm::{double_coset, Pattern};
use reflr::poly::demazure_char;
use reflr::refined::{
    bruhat_value_table, classical_lr_oracle, refined_lr_all, saturation_scan, symmetry_check, Engine, ScanClass, ScanParams,
};
use reflr::{Partition, Permutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn perm(s: &str) -> Permutation {
    Permutation::parse(s).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn get(m: &BTreeMap<Partition, u64>, nu: &Partition) -> u64 {
    m.get(nu).copied().unwrap_or(0)
}

fn sample_hive() -> Hive {
    Hive::new(vec![vec![0], vec![7, 9], vec![12, 16, 18], vec![15, 21, 24, 24], vec![15, 22, 27, 28, 28], vec![15, 22, 27, 29, 29, 29]])
        .unwrap()
}

fn c1_golden_hive() -> Outcome {
    let h = sample_hive();
    let expect = GtPattern::new(vec![vec![2], vec![4, 2], vec![6, 3, 0], vec![7, 5, 1, 0], vec![7, 5, 2, 0, 0]]).unwrap();
    let lambda = p(&[7, 5, 3, 0, 0]);
    let start = Instant::now();
    let a = h.delta();
    let back = Hive::delta_inverse(&a, &lambda).unwrap();
    let elapsed = start.elapsed();
    ensure(a == expect, || format!("∂ gave {:?}", a.rows()))?;
    ensure(back == h, || format!("round trip gave {back}"))?;
    ensure(elapsed.as_micros() < 1000, || format!("took {elapsed:?}"))?;
    Ok(format!("∂ and its inverse match exactly in {elapsed:?}"))
}

fn c2_reverse_row_word() -> Outcome {
    let t = Tableau::new(3, vec![vec![1, 2, 3], vec![2, 3]]).unwrap();
    let word = reverse_row_word(&t).display(3);
    ensure(word == "32132", || format!("got {word}"))?;
    Ok("b_T = 32132".into())
}

/// `(λ, μ)` over partitions of length 3 with parts at most 3.
fn grid3() -> Vec<(Partition, Partition)> {
    let shapes = Partition::all_bounded(3, 3);
    shapes.iter().flat_map(|l| shapes.iter().map(move |m| (l.clone(), m.clone()))).collect()
}

fn c3_engine_equality() -> Outcome {
    let mut instances = 0u64;
    let mut nonzero = 0u64;
    for (l, m) in grid3() {
        for w in Permutation::all(3) {
            let d = refined_lr_all(&l, &m, &w, Engine::Demazure).unwrap();
            let c = refined_lr_all(&l, &m, &w, Engine::Crystal).unwrap();
            let h = refined_lr_all(&l, &m, &w, Engine::Hive).unwrap();
            for nu in Partition::all_of_size(3, l.size() + m.size()) {
                let (a, b, e) = (get(&d, &nu), get(&c, &nu), get(&h, &nu));
                ensure(a == b && b == e, || format!("λ={l} μ={m} ν={nu} w={w}: demazure={a} crystal={b} hive={e}"))?;
                instances += 1;
                nonzero += u64::from(a > 0);
            }
        }
    }
    Ok(format!("{instances} instances agree ({nonzero} nonzero)"))
}

fn c4_endpoints() -> Outcome {
    let w0 = Permutation::longest(3);
    let e = Permutation::identity(3);
    let mut checked = 0;
    for (l, m) in grid3() {
        let top = refined_lr_all(&l, &m, &w0, Engine::Crystal).unwrap();
        let bottom = refined_lr_all(&l, &m, &e, Engine::Crystal).unwrap();
        let sum = l.add(&m).unwrap();
        for nu in Partition::all_of_size(3, l.size() + m.size()) {
            let oracle = classical_lr_oracle(&l, &m, &nu).unwrap();
            ensure(get(&top, &nu) == oracle, || format!("c(w₀) λ={l} μ={m} ν={nu}: {} vs oracle {oracle}", get(&top, &nu)))?;
            ensure(get(&bottom, &nu) == u64::from(nu == sum), || format!("c(id) λ={l} μ={m} ν={nu}"))?;
            checked += 1;
        }
    }
    let l = p(&[2, 1, 0]);
    let v = get(&refined_lr_all(&l, &l, &w0, Engine::Crystal).unwrap(), &p(&[3, 2, 1]));
    ensure(v == 2, || format!("c_(210),(210)^(321)(w₀) = {v}"))?;
    Ok(format!("{checked} triples match the tableau oracle and δ; c_(210)(210)^(321)(w₀) = 2"))
}

fn c5_bruhat_suite() -> Outcome {
    let perms = Permutation::all(3);
    let mut checks = 0u64;
    for (l, m) in grid3() {
        let vals: BTreeMap<Permutation, BTreeMap<Partition, u64>> =
            perms.iter().map(|w| (w.clone(), refined_lr_all(&l, &m, w, Engine::Crystal).unwrap())).collect();
        let swapped: BTreeMap<Permutation, BTreeMap<Partition, u64>> =
            perms.iter().map(|w| (w.clone(), refined_lr_all(&m, &l, w, Engine::Crystal).unwrap())).collect();
        for nu in Partition::all_of_size(3, l.size() + m.size()) {
            for u in &perms {
                let cu = get(&vals[u], &nu);
                for v in u.bruhat_covers() {
                    ensure(cu <= get(&vals[&v], &nu), || format!("monotonicity {u}⋖{v} λ={l} μ={m} ν={nu}"))?;
                }
                for v in double_coset(&l, u, &m).unwrap() {
                    ensure(cu == get(&vals[&v], &nu), || format!("coset {u}~{v} λ={l} μ={m} ν={nu}"))?;
                }
                ensure(cu == get(&swapped[&u.inverse()], &nu), || format!("symmetry w={u} λ={l} μ={m} ν={nu}"))?;
                checks += 1;
            }
        }
    }

    let (l, m, nu) = (p(&[13, 7, 4, 0]), p(&[13, 7, 2, 0]), p(&[21, 12, 9, 4]));
    let table = bruhat_value_table(&l, &m, &nu, Engine::Crystal).unwrap();
    let hive_table = bruhat_value_table(&l, &m, &nu, Engine::Hive).unwrap();
    let swapped = bruhat_value_table(&m, &l, &nu, Engine::Crystal).unwrap();
    ensure(table.values.len() == 24, || "table size".into())?;
    ensure(table.violations.is_empty(), || format!("{:?}", table.violations))?;
    ensure(table.values == hive_table.values, || "crystal and hive tables differ".into())?;
    for e in &table.values {
        ensure(swapped.value(&e.w.inverse()) == Some(e.c), || format!("symmetry at {}", e.w))?;
    }
    let top = table.value(&Permutation::longest(4)).unwrap();
    let oracle = classical_lr_oracle(&l, &m, &nu).unwrap();
    ensure(top == oracle, || format!("c(w₀) = {top}, oracle {oracle}"))?;
    ensure(table.value(&Permutation::identity(4)) == Some(0), || "c(id) should be 0 since ν ≠ λ+μ".into())?;
    let listing: Vec<String> = table.values.iter().map(|e| format!("{}:{}", e.w, e.c)).collect();
    println!("    n = 4 value table: {}", listing.join(" "));
    Ok(format!("{checks} grid checks; 24-entry table monotone, coset-constant, symmetric, c(w₀) = {oracle}"))
}

fn c6_kogan_faces() -> Outcome {
    for n in [4, 5] {
        let w0 = Permutation::longest(n);
        for w in Permutation::all(n).into_iter().filter(|w| w.avoids(Pattern::P312)) {
            let faces = reduced_faces_for(&w0.compose(&w).unwrap(), false);
            ensure(faces.len() == 1 && faces[0].is_left_bottom_justified(), || format!("w={w}: {} faces", faces.len()))?;
            ensure(f_w_for_312(&w).is_ok(), || format!("F_w missing for {w}"))?;
        }
    }
    let w0 = Permutation::longest(4);
    let faces = |w: &str| reduced_faces_for(&w0.compose(&perm(w)).unwrap(), false);
    let mut problems = Vec::new();
    let f3142 = faces("3142");
    if f3142.len() != 1 {
        problems.push(format!("w=3142 (ϖ=2413): {} reduced faces, expected a unique one", f3142.len()));
    }
    if f3142.iter().any(|f| f.is_left_bottom_justified()) {
        problems.push("w=3142: a justified face exists".into());
    }
    for w in ["3412", "2413", "4231"] {
        let f = faces(w);
        if f.len() != 2 {
            let list: Vec<String> = f.iter().map(|x| x.to_string()).collect();
            problems.push(format!("w={w}: {} reduced faces {}, expected two", f.len(), list.join(" ")));
        }
    }
    if problems.is_empty() {
        Ok("312-avoiding faces unique and justified in S4, S5; excluded counts as stated".into())
    } else {
        Err(format!("312-avoiding part holds in S4, S5; excluded-permutation counts differ: {}", problems.join("; ")))
    }
}

fn c7_saturation() -> Outcome {
    let runs = [
        ("(a) S3 all, parts ≤ 2, k ≤ 3", ScanParams { n: 3, max_part: 2, kmax: 3, class: ScanClass::All }),
        ("(b) S4 covered, parts ≤ 3, k ≤ 2", ScanParams { n: 4, max_part: 3, kmax: 2, class: ScanClass::Covered }),
        ("(c) S4 excluded, parts ≤ 3, k ≤ 2", ScanParams { n: 4, max_part: 3, kmax: 2, class: ScanClass::Excluded }),
    ];
    let mut summary = Vec::new();
    for (name, params) in runs {
        let start = Instant::now();
        let report = saturation_scan(params, None).map_err(|e| format!("{name}: {e}"))?;
        let elapsed = start.elapsed();
        ensure(report.violations.is_empty(), || format!("{name}: {:?}", report.violations))?;
        ensure(report.triples_examined > 0, || format!("{name}: nothing scanned"))?;
        ensure(elapsed.as_secs() < 1800, || format!("{name}: {elapsed:?}"))?;
        summary.push(format!(
            "{name}: {} w, {} triples, 0 violations, {:.1?}",
            report.permutations.len(),
            report.triples_examined,
            elapsed
        ));
    }
    Ok(summary.join("; "))
}

fn c8_symmetry() -> Outcome {
    let mut count = 0;
    let mut points = 0;
    for (l, m) in grid3() {
        for w in Permutation::all(3) {
            let here = refined_lr_all(&l, &m, &w, Engine::Crystal).unwrap();
            let there = refined_lr_all(&m, &l, &w.inverse(), Engine::Crystal).unwrap();
            for nu in Partition::all_of_size(3, l.size() + m.size()) {
                let r = symmetry_check(&l, &m, &nu, &w).map_err(|e| format!("λ={l} μ={m} ν={nu} w={w}: {e}"))?;
                ensure(r.bijective && r.inverse_ok, || format!("λ={l} μ={m} ν={nu} w={w}: {r:?}"))?;
                ensure(r.domain as u64 == get(&here, &nu) && r.codomain as u64 == get(&there, &nu), || {
                    format!(
                        "λ={l} μ={m} ν={nu} w={w}: sizes {} {} vs engines {} {}",
                        r.domain,
                        r.codomain,
                        get(&here, &nu),
                        get(&there, &nu)
                    )
                })?;
                count += 1;
                points += r.domain;
            }
        }
    }
    Ok(format!("Ψ bijective on {count} instances ({points} hives)"))
}

fn c9_increasable() -> Outcome {
    let mut hives = 0;
    let mut subsets = 0;
    for (n, max_part) in [(2, 3), (3, 3), (4, 2)] {
        let shapes = Partition::all_bounded(n, max_part);
        for w in Permutation::all(n).into_iter().filter(|w| w.avoids(Pattern::P312)) {
            let face = f_w_for_312(&w).unwrap();
            let flats = face.rhombi();
            for l in &shapes {
                for m in &shapes {
                    for nu in Partition::all_of_size(n, l.size() + m.size()) {
                        for h in enumerate_kogan_hives(l, m, &nu, &face).unwrap() {
                            hives += 1;
                            for inc in increasable_subsets(&h) {
                                subsets += 1;
                                for rh in all_rhombi(n) {
                                    let (obtuse, acute) = rh.vertices();
                                    let slope = obtuse.iter().filter(|v| inc.subset.contains(v)).count() as i64
                                        - acute.iter().filter(|v| inc.subset.contains(v)).count() as i64;
                                    let moved = Ratio::from_integer(rh.content(&h)) + inc.epsilon * slope;
                                    ensure(moved >= Ratio::from_integer(0), || format!("{h}: ε move leaves the hive at {rh}"))?;
                                    if flats.contains(&rh) {
                                        ensure(slope == 0, || format!("w={w} h={h} S={:?} unflattens {rh}", inc.subset))?;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{hives} hives, {subsets} increasable subsets, all keep F_w flat"))
}

fn c10_characters() -> Outcome {
    let mut count = 0;
    for mu in Partition::all_bounded(3, 3) {
        for w in Permutation::all(3) {
            let ch = demazure_crystal(&mu, &w, false).unwrap().character();
            let key = demazure_char(&w, &mu).unwrap();
            ensure(ch == key, || format!("μ={mu} w={w}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} crystal characters equal their key polynomials"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("golden hive", c1_golden_hive),
        ("reverse row word", c2_reverse_row_word),
        ("engine equality", c3_engine_equality),
        ("classical endpoints", c4_endpoints),
        ("Bruhat/coset/symmetry suite", c5_bruhat_suite),
        ("Kogan face structure", c6_kogan_faces),
        ("saturation scans", c7_saturation),
        ("symmetry bijection", c8_symmetry),
        ("increasable subsets on F_w", c9_increasable),
        ("character consistency", c10_characters),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS [{name}] {msg} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{name}] {msg} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
