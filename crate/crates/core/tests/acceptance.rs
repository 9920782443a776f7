//! One test per acceptance criterion. Each prints a single pass/fail line
//! and fails if the check fails or overruns its time budget.

use std::time::{Duration, Instant};

use serde_json::Value;

use queer_howe::coord_alg::{coord_report, zero_weight_iso};
use queer_howe::duality::{
    census_report, classical_crosscheck, fixture_module, fixture_report, howe_verify, sergeev_verify,
};
use queer_howe::hecke_clifford::{hc_check, hc_tensor_action, zero_weight_hc};
use queer_howe::report::VerifyReport;
use queer_howe::scalars::{EqualityMode, RatFunc};
use queer_howe::superlinalg::{index_set, SparseVec};
use queer_howe::uq_queer::{chevalley_ops, check_defining_relations, tensor_rep, vector_rep, Param};

fn criterion(num: u32, name: &str, budget_s: u64, f: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = f();
    let took = start.elapsed();
    let within = took <= Duration::from_secs(budget_s);
    let status = match (&outcome, within) {
        (Ok(()), true) => "PASS".to_string(),
        (Ok(()), false) => "FAIL (over budget)".to_string(),
        (Err(e), _) => format!("FAIL ({e})"),
    };
    println!("criterion {num:>2} {name}: {status} in {:.2}s (budget {budget_s}s)", took.as_secs_f64());
    assert!(outcome.is_ok() && within, "criterion {num} {name}: {status}");
}

fn passed(r: &VerifyReport) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{}: {} {:?}", r.suite, c.name, c.witness)),
    }
}

fn expectations() -> serde_json::Map<String, Value> {
    let text = include_str!("expectations.json");
    let doc: Value = serde_json::from_str(text).expect("expectations file");
    doc["values"].as_object().expect("values").clone()
}

fn frozen(r: &VerifyReport, prefix: &str) -> Result<(), String> {
    let exp = expectations();
    for (k, v) in &r.derived_values {
        let key = format!("{prefix}: {k}");
        match exp.get(&key) {
            Some(e) if e == v => {}
            Some(e) => return Err(format!("{key}: got {v}, frozen {e}")),
            None => return Err(format!("{key} missing from expectations")),
        }
    }
    Ok(())
}

#[test]
fn criterion_01_relation_soundness() {
    let sizes = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)];
    criterion(1, "relations (exact)", 120, || {
        for (n, m) in sizes {
            passed(&check_defining_relations(&tensor_rep(&vector_rep(n, Param::Q), m), EqualityMode::Exact))?;
        }
        Ok(())
    });
    let reps: Vec<_> = sizes.iter().map(|&(n, m)| tensor_rep(&vector_rep(n, Param::Q), m)).collect();
    criterion(1, "relations (probabilistic, 5 trials)", 10, || {
        for rep in &reps {
            passed(&check_defining_relations(rep, EqualityMode::Probabilistic { trials: 5, seed: 11 }))?;
        }
        Ok(())
    });
}

// expected images of basis vectors under the Chevalley operators on V
fn table(name: &str, i: i32, v: i32) -> Option<i32> {
    let (j, neg) = (v.abs(), v < 0);
    match name {
        "kbar" => (j == i).then_some(-v),
        "e" => (j == i + 1).then_some(if neg { -i } else { i }),
        "f" => (j == i).then_some(if neg { -(i + 1) } else { i + 1 }),
        "ebar" => (j == i + 1).then_some(if neg { i } else { -i }),
        "fbar" => (j == i).then_some(if neg { i + 1 } else { -(i + 1) }),
        _ => None,
    }
}

#[test]
fn criterion_02_chevalley_table() {
    criterion(2, "Chevalley operators on V", 1, || {
        for n in 1..=3usize {
            let rep = vector_rep(n, Param::Q);
            let ops = chevalley_ops(&rep);
            let sp = rep.space();
            let pos = |v: i32| sp.word_position(&[v]).unwrap();
            for i in 1..=n as i32 {
                let a = i as usize - 1;
                for &v in &index_set(n) {
                    let k = RatFunc::q_pow((v.abs() == i) as i64);
                    if ops.k[a].col(pos(v)) != &SparseVec::unit(pos(v)).scale(&k) {
                        return Err(format!("k{i} v{v}"));
                    }
                    let mut named = vec![("kbar", &ops.kbar[a])];
                    if (i as usize) < n {
                        named.extend([("e", &ops.e[a]), ("f", &ops.f[a]), ("ebar", &ops.ebar[a]), ("fbar", &ops.fbar[a])]);
                    }
                    for (name, op) in named {
                        let want = table(name, i, v).map_or_else(SparseVec::zero, |w| SparseVec::unit(pos(w)));
                        if op.col(pos(v)) != &want {
                            return Err(format!("{name}{i} v{v} (n={n})"));
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_03_hc_presentation() {
    criterion(3, "hc_check on the tensor action", 60, || {
        for n in 1..=2 {
            for m in 1..=4 {
                passed(&hc_check(&hc_tensor_action(n, m, Param::Q)))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_supercommutation() {
    criterion(4, "queer Chevalley vs HC generators", 60, || {
        for n in 1..=2 {
            for m in 1..=3 {
                let rep = tensor_rep(&vector_rep(n, Param::Q), m);
                let ops = chevalley_ops(&rep);
                let hc = hc_tensor_action(n, m, Param::Q);
                for (a, x) in ops.named() {
                    for (b, y) in hc.generators() {
                        if !x.supercommutator(y).is_zero() {
                            return Err(format!("[{a}, {b}] on V^{m}, n={n}"));
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_05_mutual_centralizer() {
    criterion(5, "HC span = graded commutant of the queer image", 120, || {
        for (n, m) in [(1, 1), (1, 2), (2, 2)] {
            let r = sergeev_verify(n, m, Param::Q, EqualityMode::Exact, true).map_err(|e| e.to_string())?;
            passed(&r)?;
            frozen(&r, &format!("sergeev[n={n},m={m}]"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_06_census() {
    criterion(6, "highest weights = strict partitions, census closes", 60, || {
        for n in 1..=2 {
            for m in 1..=3 {
                let r = census_report(n, m, Param::Q).map_err(|e| e.to_string())?;
                passed(&r)?;
                frozen(&r, &format!("census[n={n},m={m}]"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_07_fixture() {
    criterion(7, "fixture embeds into V^2 with the braid eigenvalues", 60, || {
        let r = fixture_report().map_err(|e| e.to_string())?;
        passed(&r)?;
        for name in ["T_1 u1", "T_1 ub1", "T_1 w ", "T_1 wb"] {
            if !r.checks.iter().any(|c| c.name.starts_with(name)) {
                return Err(format!("no eigenvalue check for {name}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_08_zero_weight_hc() {
    criterion(8, "zero weight HC relations with q^-1", 60, || {
        let fx = fixture_module().map_err(|e| e.to_string())?;
        let v2 = tensor_rep(&vector_rep(2, Param::Q), 2);
        for rep in [&fx.rep, &v2] {
            let zw = zero_weight_hc(rep).map_err(|e| e.to_string())?;
            if zw.spec.param != Param::QInv || zw.q != RatFunc::q_pow(-1) {
                return Err("zero weight action not taken with q^-1".into());
            }
            passed(&hc_check(&zw))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_09_coordinate_relations() {
    criterion(9, "(QCA1) and (QCA2) at n = m = 2", 120, || passed(&coord_report(2, 2, 2, Param::Q).map_err(|e| e.to_string())?));
}

#[test]
fn criterion_10_zero_weight_isomorphism() {
    criterion(10, "rank (2n)^m and equivariance, n = m = 2", 120, || {
        passed(&zero_weight_iso(2, 2, Param::Q).map_err(|e| e.to_string())?)
    });
}

#[test]
fn criterion_11_howe_census() {
    criterion(11, "graded dims match the Howe prediction (l <= 2)", 120, || {
        for (n, m) in [(1, 1), (2, 2)] {
            let r = howe_verify(n, m, 2, Param::Q).map_err(|e| e.to_string())?;
            passed(&r)?;
            frozen(&r, &format!("howe[n={n},m={m},l<=2]"))?;
        }
        Ok(())
    });
    criterion(11, "graded dims match the Howe prediction (n = m = 2, l = 3)", 600, || {
        passed(&howe_verify(2, 2, 3, Param::Q).map_err(|e| e.to_string())?)
    });
}

#[test]
fn criterion_12_classical_limit() {
    criterion(12, "q = 1 specialization", 60, || {
        for (n, m) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
            passed(&classical_crosscheck(n, m).map_err(|e| e.to_string())?)?;
        }
        Ok(())
    });
}
