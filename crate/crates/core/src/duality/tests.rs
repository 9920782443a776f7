use super::*;
use proptest::prelude::*;

// brute force: every decreasing sequence of distinct parts, then filter
fn strict_oracle(size: usize, max_len: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << size) {
        let parts: Vec<i64> = (1..=size as i64).rev().filter(|p| mask & (1 << (p - 1)) != 0).collect();
        if parts.iter().sum::<i64>() == size as i64 && parts.len() <= max_len {
            out.push(parts);
        }
    }
    out.sort();
    out
}

#[test]
fn strict_partition_examples() {
    let p = |v: &[i64]| StrictPartition(v.to_vec());
    assert_eq!(enumerate_strict_partitions(3, 2), vec![p(&[2, 1]), p(&[3])]);
    assert_eq!(enumerate_strict_partitions(2, 2), vec![p(&[2])]);
    assert_eq!(enumerate_strict_partitions(4, 1), vec![p(&[4])]);
    assert_eq!(enumerate_strict_partitions(0, 3), vec![p(&[])]);
    assert!(p(&[2, 1]).weight(3) == Weight(vec![2, 1, 0]));
    assert!(p(&[3]).type_q() && !p(&[2, 1]).type_q());
}

proptest! {
    #[test]
    fn strict_partitions_match_brute_force(size in 0usize..12, max_len in 0usize..5) {
        let got: Vec<Vec<i64>> = enumerate_strict_partitions(size, max_len).into_iter().map(|p| p.0).collect();
        prop_assert_eq!(got, strict_oracle(size, max_len));
    }
}

#[test]
fn census_small_cases() {
    let c = isotypic_census(2, 2, Param::Q).unwrap();
    assert_eq!(c.entries.len(), 1);
    let e = &c.entries[0];
    assert_eq!(e.lambda, StrictPartition(vec![2]));
    assert_eq!((e.submodule_dim, e.irreducible_dim, e.copies), (8, 8, 2));
    assert!(c.closes());

    // rank one, m = 2: the generated module is 2-dimensional with two copies
    let c = isotypic_census(1, 2, Param::Q).unwrap();
    let e = &c.entries[0];
    assert_eq!((e.hwv_dim, e.submodule_dim, e.copies), (4, 2, 2));
    assert!(c.closes());

    let c = isotypic_census(2, 3, Param::Q).unwrap();
    let ws: Vec<Weight> = c.hwv_weights.clone();
    assert_eq!(ws, vec![Weight(vec![2, 1]), Weight(vec![3, 0])]);
    let e = c.entry(&StrictPartition(vec![2, 1])).unwrap();
    // generated from one vector the type M module shows up twice (L and ΠL)
    assert_eq!((e.submodule_dim, e.split, e.irreducible_dim, e.detected), (8, 2, 4, Some(ModuleType::M)));
    let e = c.entry(&StrictPartition(vec![3])).unwrap();
    assert_eq!((e.irreducible_dim, e.copies, e.detected), (12, 4, Some(ModuleType::Q)));
    assert!(c.closes());
}

#[test]
fn census_types_follow_length_parity() {
    for (n, m) in [(1, 1), (1, 3), (2, 1), (2, 3)] {
        let c = isotypic_census(n, m, Param::Q).unwrap();
        for e in &c.entries {
            assert_eq!(e.detected, Some(e.predicted()), "{n} {m} {}", e.lambda);
        }
    }
}

#[test]
fn census_report_passes() {
    for (n, m) in [(1, 2), (2, 2), (2, 3)] {
        let r = census_report(n, m, Param::Q).unwrap();
        assert!(r.passed(), "{}", r.canonical_json());
    }
}

#[test]
fn sergeev_micro_example() {
    let r = sergeev_verify(1, 1, Param::Q, EqualityMode::Exact, true).unwrap();
    assert!(r.passed(), "{}", r.canonical_json());
    assert_eq!(r.derived_values["hc_image_dim"], 2);
    assert_eq!(r.derived_values["queer_image_dim"], 2);
}

#[test]
fn sergeev_rank_two() {
    let r = sergeev_verify(2, 2, Param::Q, EqualityMode::Exact, true).unwrap();
    assert!(r.passed(), "{}", r.canonical_json());
    assert_eq!(r.derived_values["hc_image_dim"], 8);
    assert_eq!(r.derived_values["commutant_of_hc_dim"], 32);
    let p = sergeev_verify(2, 2, Param::Q, EqualityMode::Probabilistic { trials: 2, seed: 3 }, true).unwrap();
    assert!(p.passed(), "{}", p.canonical_json());
}

#[test]
fn sergeev_detects_an_undeformed_swap() {
    // the q = 1 swap does not commute with the deformed coproduct
    let rep = tensor_rep(&vector_rep(2, Param::Q), 2);
    let mut hc = hc_tensor_action(2, 2, Param::Q);
    hc.t[0] = graded_swap(rep.space(), 0);
    let out = centralizers(rep.space(), &named_queer(rep.gens()), &named_hc(&hc), false);
    assert!(out.supercommute.is_some());
}

#[test]
fn howe_examples() {
    let r = howe_verify(1, 1, 1, Param::Q).unwrap();
    assert!(r.passed(), "{}", r.canonical_json());
    assert_eq!(r.derived_values["dim.l1"], 2);
    assert_eq!(howe_prediction(1, 1, 1, Param::Q).unwrap(), 2);
    for (n, m) in [(1, 2), (3, 1)] {
        assert_eq!(howe_prediction(n, m, 0, Param::Q).unwrap(), 1);
    }
    // (2): 8·8/2
    assert_eq!(howe_prediction(2, 2, 2, Param::Q).unwrap(), 32);
}

#[test]
fn classical_swap_examples() {
    let one = BigRational::from_integer(1.into());
    let hc = hc_tensor_action(2, 2, Param::Q).specialize(&one).unwrap();
    let sp = &hc.space;
    let at = |w: &[i32]| SparseVec::<BigRational>::unit(sp.word_position(w).unwrap());
    assert_eq!(hc.t[0].apply(&at(&[1, 2])), at(&[2, 1]));
    assert_eq!(hc.t[0].apply(&at(&[-1, -1])), at(&[-1, -1]).neg());
    let id = SOp::identity(sp.clone());
    let t = &hc.t[0];
    assert!(t.sub(&id).compose(&t.add(&id)).is_zero());
}

#[test]
fn classical_crosscheck_passes() {
    for (n, m) in [(1, 2), (2, 2), (2, 3)] {
        let r = classical_crosscheck(n, m).unwrap();
        assert!(r.passed(), "{}", r.canonical_json());
    }
}

#[test]
fn fixture_values() {
    let fx = fixture_module().unwrap();
    let at = |s: &str| SparseVec::unit(fx.index(s));
    let q = RatFunc::q();
    let p = q.add(&q.inv());
    // ebar.w = 2/(q + q^-1) ub0
    assert_eq!(fx.table.ebar[0].apply(&at("w")), at("ub0").scale(&RatFunc::from_int(2).div(&p)));
    // kbar.u1 = 1/(q + q^-1) ub1 - q^2 wb
    assert_eq!(
        fx.table.kbar[0].apply(&at("u1")),
        at("ub1").scale(&p.inv()).sub(&at("wb").scale(&q.pow(2)))
    );
    assert_eq!(fx.printed.fbar[0].entry(fx.index("wb"), fx.index("u0")), q.pow(2).neg());
    assert_eq!(fx.table.fbar[0].entry(fx.index("wb"), fx.index("u0")), RatFunc::one());
    let zw = crate::hecke_clifford::zero_weight_block(&fx.rep).unwrap();
    let names: Vec<&str> = zw.iter().map(|&i| fixture::NAMES[i]).collect();
    assert_eq!(names, ["u1", "w", "ub1", "wb"]);
}

#[test]
fn fixture_report_passes() {
    let r = fixture_report().unwrap();
    assert!(r.passed(), "{}", r.canonical_json());
    assert_eq!(r.derived_values["transported_operators"], 20);
    assert_eq!(r.derived_values["printed_table_satisfies_relations"], false);
}
