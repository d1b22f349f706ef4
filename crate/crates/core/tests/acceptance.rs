//! Acceptance suite: one PASS/FAIL line per criterion with elapsed time and
//! limit. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use reslat::algebra::laws::{check_all, generation_bound, subsets_up_to};
use reslat::algebra::{
    check_homomorphism, congruences, find_embeddings, generated_subalgebra, monoidal_preorder, properties,
    skeleton, validate, CheckReport,
};
use reslat::chains::{
    check_laced_compatible, compile, enumerate_codes, recover_code, validate_code_semantics,
};
use reslat::constructions::{
    abs_chain, amalgamate_cic, c4, catalan_decompose, catalan_sum, check_partial_preservation,
    enumerate_catalan, fep_closure, sugihara_from_involution, tensor, SkeletonDecomposition, Span,
};
use reslat::counting::{catalan_count, count_ic_closed, count_ic_formula, count_ic_recurrence};
use reslat::oracle::{brute_force, canonical, is_isomorphic, CanonicalForm, ConstraintSet};
use reslat::FinAlgebra;

type Outcome = Result<String, String>;

/// Id, title, time limit in seconds, check.
type Criterion = (&'static str, &'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_ok(what: &str, r: &CheckReport) -> Result<(), String> {
    ensure(r.ok(), || format!("{what}: {}", r.to_string().trim_end().replace('\n', "; ")))
}

fn cs(s: &str) -> ConstraintSet {
    s.parse().expect("constraint list")
}

fn all_chains(n: usize, commutative: bool) -> Vec<FinAlgebra> {
    enumerate_codes(n, commutative).unwrap().map(|c| compile(&c).algebra).collect()
}

fn forms(models: &[FinAlgebra]) -> BTreeSet<CanonicalForm> {
    models.iter().map(canonical).collect()
}

fn cli_json(args: &[&str]) -> (i32, serde_json::Value) {
    let argv = std::iter::once("reslat").chain(args.iter().copied()).map(String::from);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = reslat::cli::run(argv, &mut out, &mut err);
    let value = serde_json::from_slice(&out).unwrap_or(serde_json::Value::Null);
    (code, value)
}

fn c1_commutative_census() -> Outcome {
    let expected: Vec<u64> = vec![1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024];
    let mut got = Vec::new();
    for n in 2..=12usize {
        let size = n.to_string();
        let (code, v) = cli_json(&["--json", "enumerate", "--class", "cic", "--size", &size]);
        ensure(code == 0, || format!("enumerate exited {code} at n={n}"))?;
        got.push(v["count"].as_u64().unwrap_or(u64::MAX));
    }
    ensure(got == expected, || format!("counts {got:?}"))?;
    Ok(format!("n=2..12 -> {got:?}"))
}

fn c2_idempotent_chain_census() -> Outcome {
    let expected: [u32; 11] = [1, 2, 6, 16, 44, 120, 328, 896, 2448, 6688, 18272];
    for (n, &e) in (2..=12usize).zip(&expected) {
        let e = BigUint::from(e);
        let values = [
            ("formula", count_ic_formula(n).unwrap()),
            ("recurrence", count_ic_recurrence(n).unwrap()),
            ("closed", count_ic_closed(n).unwrap()),
            ("enumerate", BigUint::from(enumerate_codes(n, false).unwrap().count())),
        ];
        for (name, v) in values {
            ensure(v == e, || format!("{name} gives {v} at n={n}, expected {e}"))?;
        }
    }
    Ok("four methods agree on 1..18272".into())
}

fn c3_oracle_cross_check() -> Outcome {
    let mut counts = Vec::new();
    for (commutative, constraints, expected) in [
        (false, "idempotent,chain", [1usize, 2, 6, 16, 44]),
        (true, "idempotent,chain,commutative", [1, 2, 4, 8, 16]),
    ] {
        for (n, &e) in (2..=6).zip(&expected) {
            let brute = brute_force(n, &cs(constraints)).unwrap();
            let structural = all_chains(n, commutative);
            ensure(brute.len() == e && structural.len() == e, || {
                format!("{constraints} n={n}: brute {} structural {}", brute.len(), structural.len())
            })?;
            ensure(forms(&brute) == forms(&structural), || {
                format!("{constraints} n={n}: isomorphism classes differ")
            })?;
            counts.push(e);
        }
    }
    Ok(format!("table-for-table {counts:?}"))
}

fn c4_catalan_census() -> Outcome {
    let expected = [1usize, 1, 2, 5, 14, 42];
    for (n, &e) in (1..=6).zip(&expected) {
        let brute = brute_force(n, &cs("conservative,commutative")).unwrap();
        ensure(brute.len() == e, || format!("brute force gives {} at n={n}", brute.len()))?;
        let structural = enumerate_catalan(n).unwrap();
        ensure(forms(&brute) == forms(&structural), || format!("classes differ at n={n}"))?;
    }
    let mut last = 0;
    for n in 1..=11 {
        let k = enumerate_catalan(n).unwrap().len();
        let c = catalan_count(n).unwrap();
        ensure(BigUint::from(k) == c, || format!("enumerate {k} vs formula {c} at n={n}"))?;
        last = k;
    }
    ensure(last == 16796, || format!("n=11 gives {last}"))?;
    Ok("brute 1,1,2,5,14,42; structural = formula up to 16796".into())
}

fn c5_roundtrips() -> Outcome {
    let mut checked = 0;
    for n in 2..=8 {
        for code in enumerate_codes(n, false).unwrap() {
            let back = recover_code(&compile(&code).algebra).map_err(|e| format!("{code}: {e}"))?;
            ensure(back == code, || format!("{code} recovered as {back}"))?;
            checked += 1;
        }
    }
    for n in 2..=7 {
        for a in all_chains(n, true) {
            let s = skeleton(&a).map_err(|e| e.to_string())?;
            let b = tensor(&SkeletonDecomposition::from_skeleton(&s)).map_err(|e| e.to_string())?;
            ensure(b.prod_table() == a.prod_table() && b.unit() == a.unit(), || {
                format!("tensor(skeleton) differs on {}", recover_code(&a).unwrap())
            })?;
            checked += 1;
        }
    }
    for k in [1usize, 3, 5, 7] {
        let s = sugihara_from_involution(k).unwrap();
        for fibers in compositions_bounded(k, 7) {
            let a = tensor(&SkeletonDecomposition::new(s.clone(), fibers.clone())).unwrap();
            let sk = skeleton(&a).map_err(|e| e.to_string())?;
            let sizes: Vec<usize> = sk.fibers.iter().map(Vec::len).collect();
            ensure(sizes == fibers && is_isomorphic(&sk.algebra, &s).is_some(), || {
                format!("skeleton(tensor) differs for S{k} with {fibers:?}")
            })?;
            checked += 1;
        }
    }
    for n in 2..=5 {
        for c in enumerate_catalan(n).unwrap() {
            let (a, b) = catalan_decompose(&c).map_err(|e| e.to_string())?;
            let back = catalan_sum(&a, &b).map_err(|e| e.to_string())?;
            ensure(canonical(&back) == canonical(&c), || format!("sum(decompose) differs at n={n}"))?;
            checked += 1;
        }
    }
    for na in 1..=4 {
        for nb in 1..=5 - na {
            for a in enumerate_catalan(na).unwrap() {
                for b in enumerate_catalan(nb).unwrap() {
                    let (x, y) = catalan_decompose(&catalan_sum(&a, &b).unwrap()).unwrap();
                    ensure(canonical(&x) == canonical(&a) && canonical(&y) == canonical(&b), || {
                        format!("decompose(sum) differs for sizes {na}+{nb}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} roundtrips"))
}

/// Sequences of positive sizes of length `k` with sum at most `max`.
fn compositions_bounded(k: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let used: usize = p.iter().sum();
                (1..=max.saturating_sub(used + k - p.len() - 1)).map(move |s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .collect();
    }
    out
}

fn property_suites(a: &FinAlgebra, what: &str) -> Result<(), String> {
    report_ok(&format!("{what} validate"), &validate(a))?;
    report_ok(&format!("{what} laws"), &check_all(a))?;
    let f = properties(a);
    if f.idempotent && f.totally_ordered {
        let p = monoidal_preorder(a).map_err(|e| e.to_string())?;
        report_ok(&format!("{what} laced"), &check_laced_compatible(a, &p))?;
    }
    Ok(())
}

fn c6_property_suites() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        for code in enumerate_codes(n, false).unwrap() {
            report_ok(&format!("code {code}"), &validate_code_semantics(&code))?;
            property_suites(&compile(&code).algebra, &format!("code {code}"))?;
            checked += 1;
        }
    }
    for n in 1..=6 {
        for (i, a) in enumerate_catalan(n).unwrap().iter().enumerate() {
            property_suites(a, &format!("catalan n={n} #{i}"))?;
            checked += 1;
        }
    }
    for constraints in ["", "idempotent", "conservative", "idempotent,chain", "conservative,commutative"] {
        for n in 1..=6 {
            for (i, a) in brute_force(n, &cs(constraints)).unwrap().iter().enumerate() {
                property_suites(a, &format!("brute [{constraints}] n={n} #{i}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} algebras, zero violations"))
}

fn c7_fep() -> Outcome {
    let mut hosts: Vec<(String, FinAlgebra)> =
        (1..=4).map(|k| (format!("abs_chain({k})"), abs_chain(k).unwrap())).collect();
    for n in 2..=6 {
        for code in enumerate_codes(n, false).unwrap() {
            hosts.push((format!("code {code:?}", code = code.to_string()), compile(&code).algebra));
        }
    }
    let mut checked = 0;
    for (name, a) in &hosts {
        let fa = properties(a);
        for seed in subsets_up_to(a.n(), 4) {
            let b: BTreeSet<usize> = seed.iter().copied().collect();
            let what = format!("{name} B={seed:?}");
            let cl = fep_closure(a, &b).map_err(|e| format!("{what}: {e}"))?;
            report_ok(&what, &validate(&cl.algebra))?;
            report_ok(&what, &check_partial_preservation(a, &cl).map_err(|e| e.to_string())?)?;
            let fc = properties(&cl.algebra);
            ensure(
                fc.idempotent
                    && fc.conservative
                    && fc.totally_ordered == fa.totally_ordered
                    && (!fa.commutative || fc.commutative),
                || format!("{what}: closure left the class ({:?})", fc.names()),
            )?;
            let e = &cl.elements;
            for i in 0..e.len() {
                for j in 0..e.len() {
                    let mul_ok = e[cl.algebra.mul(i, j)] == a.mul(e[i], e[j]);
                    let join_ok = e[cl.algebra.join(i, j)] == a.join(e[i], e[j]);
                    ensure(mul_ok && join_ok, || format!("{what}: not a {{∨,·,1}}-subalgebra at ({i},{j})"))?;
                }
            }
            ensure(e[cl.algebra.unit()] == a.unit(), || format!("{what}: unit moved"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} closures"))
}

fn c8_amalgamation() -> Outcome {
    let small: Vec<FinAlgebra> = (2..=3).flat_map(|n| all_chains(n, true)).collect();
    let tops: Vec<FinAlgebra> = (2..=4).flat_map(|n| all_chains(n, true)).collect();
    let mut spans = 0;
    for a in std::iter::once(FinAlgebra::trivial().with_residuals().unwrap()).chain(small) {
        for b in &tops {
            let e1 = find_embeddings(&a, b).map_err(|e| e.to_string())?;
            if e1.is_empty() {
                continue;
            }
            for c in &tops {
                for i2 in find_embeddings(&a, c).map_err(|e| e.to_string())? {
                    for i1 in &e1 {
                        let s = Span::new(a.clone(), b.clone(), c.clone(), i1.clone(), i2.clone());
                        let what = format!(
                            "span |A|={} B={} C={} i1={i1:?} i2={i2:?}",
                            a.n(),
                            recover_code(b).unwrap(),
                            recover_code(c).unwrap()
                        );
                        let m = amalgamate_cic(&s).map_err(|e| format!("{what}: {e}"))?;
                        report_ok(&what, &validate(&m.d))?;
                        let f = properties(&m.d);
                        ensure(f.commutative && f.idempotent && f.totally_ordered, || {
                            format!("{what}: amalgam is not a commutative idempotent chain")
                        })?;
                        report_ok(&what, &check_homomorphism(&m.j1(&s)).unwrap())?;
                        report_ok(&what, &check_homomorphism(&m.j2(&s)).unwrap())?;
                        ensure(m.commutes(&s), || format!("{what}: square does not commute"))?;
                        spans += 1;
                    }
                }
            }
        }
    }
    ensure(spans > 0, || "no spans formed".into())?;
    Ok(format!("{spans} spans"))
}

fn c9_c4() -> Outcome {
    let a = c4();
    let f = properties(&a);
    ensure(!f.commutative && f.conservative, || format!("flags {:?}", f.names()))?;
    let cons = congruences(&a).map_err(|e| e.to_string())?;
    ensure(cons.len() == 2, || format!("{} congruences", cons.len()))?;
    let mut proper = Vec::new();
    for s in subsets_up_to(a.n(), a.n() - 1) {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        if set.contains(&a.unit()) && generated_subalgebra(&a, &set).unwrap() == set {
            proper.push(s);
        }
    }
    ensure(proper == vec![vec![a.unit()]], || format!("proper subalgebras {proper:?}"))?;
    ensure(is_isomorphic(&a, &a.opposite()).is_none(), || "isomorphic to its opposite".into())?;
    Ok("noncommutative, conservative, 2 congruences, only {1}, not self-opposite".into())
}

fn c10a_abs_generation() -> Outcome {
    for k in 1..=5 {
        let a = abs_chain(k).unwrap();
        // carrier -(k+1)..=k, so -1 sits at index k
        let g = generated_subalgebra(&a, &BTreeSet::from([k])).unwrap();
        ensure(g.len() == a.n(), || format!("k={k}: {{-1}} generates {} of {}", g.len(), a.n()))?;
    }
    Ok("{-1} generates abs_chain(k) for k=1..5".into())
}

fn c10b_generation_bound() -> Outcome {
    let mut checked = 0;
    for n in 2..=7 {
        for code in enumerate_codes(n, true).unwrap() {
            let a = compile(&code).algebra;
            let r = generation_bound(&a, 3, |m| (2 * m + 1) * m);
            if let Some(v) = r.violations.first() {
                let (seed, size) = v.witness.split_at(v.witness.len() - 1);
                return Err(format!(
                    "code {code:?}: seed {seed:?} generates {} elements > (2m+1)m = {}",
                    size[0],
                    (2 * seed.len() + 1) * seed.len(),
                    code = code.to_string()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} chains"))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1", "commutative idempotent chain census", 10, c1_commutative_census),
        ("2", "idempotent chain census, four methods", 30, c2_idempotent_chain_census),
        ("3", "oracle cross-check against structural enumeration", 120, c3_oracle_cross_check),
        ("4", "commutative conservative census", 120, c4_catalan_census),
        ("5", "representation roundtrips", 120, c5_roundtrips),
        ("6", "property suites up to size 6", 120, c6_property_suites),
        ("7", "finite embeddability closures", 60, c7_fep),
        ("8", "amalgamation of commutative idempotent chains", 120, c8_amalgamation),
        ("9", "four-element noncommutative chain", 10, c9_c4),
        ("10a", "{-1} generates abs_chain(k)", 10, c10a_abs_generation),
        ("10b", "generated subalgebra size bound (2m+1)m", 60, c10b_generation_bound),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > Duration::from_secs(limit) => Err(format!("{d}, but over time limit")),
            o => o,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => ("FAIL", d.clone()),
        };
        println!("{status} {id:>3} {name} [{:.2}s / limit {limit}s] {detail}", elapsed.as_secs_f64());
        if outcome.is_err() {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
