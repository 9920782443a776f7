use super::*;
use crate::scalars::EqualityMode;
use crate::superlinalg::{Label, SparseVec, Weight};

fn at(space: &SuperSpace, w: &[i32]) -> usize {
    space.word_position(w).unwrap()
}

/// The action table on `V`, written out letter by letter.
fn table_image(name: &str, i: i32, v: i32) -> Option<i32> {
    let (j, neg) = (v.abs(), v < 0);
    let s = |x: i32| if neg { -x } else { x };
    match name {
        "kbar" => (j == i).then(|| -v),
        "e" => (j == i + 1).then(|| s(i)),
        "f" => (j == i).then(|| s(i + 1)),
        "ebar" => (j == i + 1).then(|| if neg { i } else { -i }),
        "fbar" => (j == i).then(|| if neg { i + 1 } else { -(i + 1) }),
        _ => unreachable!(),
    }
}

#[test]
fn chevalley_operators_match_vector_table() {
    for n in 1..=3usize {
        let rep = vector_rep(n, Param::Q);
        let ops = chevalley_ops(&rep);
        let sp = rep.space().clone();
        for i in 1..=n as i32 {
            for &v in &index_set(n) {
                let col = at(&sp, &[v]);
                let k = ops.k[i as usize - 1].col(col).clone();
                let expect = RatFunc::q_pow((v.abs() == i) as i64);
                assert_eq!(k, SparseVec::unit(col).scale(&expect));
                let mut groups = vec![("kbar", &ops.kbar[i as usize - 1])];
                if (i as usize) < n {
                    let k = i as usize - 1;
                    groups.extend([("e", &ops.e[k]), ("f", &ops.f[k]), ("ebar", &ops.ebar[k]), ("fbar", &ops.fbar[k])]);
                }
                for (name, op) in groups {
                    let expect = match table_image(name, i, v) {
                        Some(w) => SparseVec::unit(at(&sp, &[w])),
                        None => SparseVec::zero(),
                    };
                    assert_eq!(op.col(col), &expect, "{name}{i} v{v} n={n}");
                }
            }
        }
    }
}

#[test]
fn s_matrix_off_diagonal_slot() {
    let s = s_matrix(2, Param::Q);
    let sp = s.domain().clone();
    let xi = Param::Q.xi();
    assert_eq!(s.entry(at(&sp, &[2, 1]), at(&sp, &[1, 2])), xi);
    assert_eq!(s.entry(at(&sp, &[-2, 1]), at(&sp, &[-1, 2])), xi);
    let sinv = s_matrix(1, Param::QInv);
    let p = at(sinv.domain(), &[1, 1]);
    assert_eq!(sinv.entry(p, p), RatFunc::q_pow(-1));
}

#[test]
fn built_reps_satisfy_relations() {
    for n in 1..=2 {
        for p in [Param::Q, Param::QInv] {
            let v = vector_rep(n, p);
            assert!(check_defining_relations(&v, EqualityMode::Exact).passed());
            assert!(check_defining_relations(&tensor_rep(&v, 2), EqualityMode::Exact).passed());
        }
    }
}

#[test]
fn planted_unit_defect_is_reported() {
    let v = vector_rep(1, Param::Q);
    let bad = v.gen(1, 1).scale(&RatFunc::q());
    let rep = v.clone().with_gen(1, 1, bad);
    let r = check_defining_relations(&rep, EqualityMode::Exact);
    let unit = r.checks.iter().find(|c| c.name.starts_with("unit")).unwrap();
    assert!(!unit.passed());
    assert!(unit.witness.as_deref().unwrap_or("").contains("v1"), "{:?}", unit.witness);
}

#[test]
fn tensor_power_one_is_identity() {
    let v = vector_rep(2, Param::Q);
    let t = tensor_rep(&v, 1);
    for (k, op) in v.gens() {
        assert_eq!(op, t.gen(k.0, k.1));
    }
}

#[test]
fn kbar_coproduct_on_square() {
    let v = vector_rep(1, Param::Q);
    let vv = tensor_rep(&v, 2);
    let c1 = chevalley_ops(&v);
    let c2 = chevalley_ops(&vv);
    let sp = vv.space().clone();
    let expect = c1.k_inv[0]
        .graded_tensor_into(&c1.kbar[0], sp.clone(), sp.clone())
        .add(&c1.kbar[0].graded_tensor_into(&c1.k[0], sp.clone(), sp));
    assert_eq!(c2.kbar[0], expect);
}

#[test]
fn tensor_cube_is_coassociative() {
    let v = vector_rep(2, Param::Q);
    let left = tensor_product(&tensor_product(&v, &v), &v);
    let right = tensor_product(&v, &tensor_product(&v, &v));
    assert_eq!(left.space().labels(), right.space().labels());
    for (k, op) in left.gens() {
        assert_eq!(op.triples(), right.gen(k.0, k.1).triples(), "L[{},{}]", k.0, k.1);
    }
}

#[test]
fn antipode_on_vector() {
    let v = vector_rep(2, Param::Q);
    let s = antipode_images(&v).unwrap();
    assert_eq!(s[&(1, 1)], *v.gen(-1, -1));
    let gens = AlgebraSpec::new(2, Param::Q).generators();
    for &(i, j) in &gens {
        let mut acc = SOp::zero(v.space().clone(), v.space().clone(), gen_parity(i, j));
        for &(a, b) in gens.iter().filter(|&&(a, b)| a == i && b <= j && b >= i) {
            acc = acc.add(&s[&(a, b)].compose(v.gen(b, j)));
        }
        let want = if i == j { SOp::identity(v.space().clone()) } else { SOp::zero(v.space().clone(), v.space().clone(), gen_parity(i, j)) };
        assert_eq!(acc, want, "({i},{j})");
    }
}

#[test]
fn dual_of_vector() {
    let v = vector_rep(2, Param::Q);
    let d = dual_rep(&v).unwrap();
    assert!(check_defining_relations(&d, EqualityMode::Exact).passed());
    let p = d.space().labels().iter().position(|l| l.to_string().contains('1') && !l.to_string().contains('-')).unwrap();
    assert_eq!(d.gen(1, 1).entry(p, p), RatFunc::q_pow(-1));
    let dd = dual_rep(&d).unwrap();
    assert!(find_isomorphism(&v, &dd).is_some());
}

#[test]
fn sigma_twist_examples() {
    for n in 1..=2 {
        let v = vector_rep(n, Param::Q);
        let t = sigma_twist(&v).unwrap();
        assert_eq!(t.param(), Param::QInv);
        assert!(check_defining_relations(&t, EqualityMode::Exact).passed());
        assert_eq!(t.gen(1, 1), v.gen(1, 1));
        let tt = sigma_twist(&t).unwrap();
        assert_eq!(tt.param(), Param::Q);
        assert!(find_isomorphism(&v, &tt).is_some());
    }
}

#[test]
fn vector_weights() {
    let v = vector_rep(2, Param::Q);
    let ws = weight_spaces(&v).unwrap();
    let sp = v.space();
    assert_eq!(ws[&Weight(vec![1, 0])], vec![at(sp, &[-1]), at(sp, &[1])]);
    let vv = tensor_rep(&v, 2);
    let ws = weight_spaces(&vv).unwrap();
    assert_eq!(ws[&Weight(vec![1, 1])].len(), 8);
    assert_eq!(ws[&Weight(vec![2, 0])].len(), 4);
}

#[test]
fn raising_shifts_weight() {
    let vv = tensor_rep(&vector_rep(2, Param::Q), 2);
    let ws = weight_spaces(&vv).unwrap();
    let wt = |p: usize| ws.iter().find(|(_, v)| v.contains(&p)).unwrap().0.clone();
    let ops = chevalley_ops(&vv);
    for op in [&ops.e[0], &ops.ebar[0]] {
        for (r, c, _) in op.triples() {
            let (a, b) = (wt(r), wt(c));
            assert_eq!((a.0[0] - b.0[0], a.0[1] - b.0[1]), (1, -1));
        }
    }
}

fn strict(w: &Weight) -> bool {
    w.0.windows(2).all(|p| p[0] > p[1] || (p[0] == 0 && p[1] == 0)) && w.0.iter().all(|&x| x >= 0)
}

#[test]
fn highest_weight_vectors_are_strict() {
    let v = vector_rep(2, Param::Q);
    let vv = tensor_rep(&v, 2);
    let sp = vv.space().clone();
    let top = highest_weight_vectors(&vv, &Weight(vec![2, 0])).unwrap();
    let e11 = SparseVec::unit(at(&sp, &[1, 1]));
    let mut ech = crate::superlinalg::Echelon::new(vv.dim());
    for x in &top {
        ech.insert(x);
    }
    assert!(ech.contains(&e11));
    assert!(highest_weight_vectors(&vv, &Weight(vec![1, 1])).unwrap().is_empty());
    for m in 1..=3 {
        let t = tensor_rep(&v, m);
        let mut found = Vec::new();
        for w in weight_spaces(&t).unwrap().keys() {
            if !highest_weight_vectors(&t, w).unwrap().is_empty() {
                assert!(strict(w), "{w} in V^{m}");
                found.push(w.0.clone());
            }
        }
        if m == 3 {
            assert_eq!(found, vec![vec![2, 1], vec![3, 0]]);
        }
    }
}

#[test]
fn submodule_generation() {
    let vv = tensor_rep(&vector_rep(2, Param::Q), 2);
    let sp = vv.space().clone();
    let s = generate_submodule(&vv, &[SparseVec::unit(at(&sp, &[1, 1]))]);
    assert_eq!(s.dim(), 8);
    let sub = s.rep(&vv).unwrap();
    assert!(check_defining_relations(&sub, EqualityMode::Exact).passed());
    assert_eq!(generate_submodule(&vv, &[SparseVec::zero()]).dim(), 0);
    let all: Vec<_> = (0..vv.dim()).map(SparseVec::unit).collect();
    assert_eq!(generate_submodule(&vv, &all).dim(), vv.dim());
}

#[test]
fn omega_examples() {
    let w = omega_map(2);
    let sp = w.domain().clone();
    assert_eq!(w.col(at(&sp, &[2])), &SparseVec::unit(at(&sp, &[-2])));
    assert_eq!(w.col(at(&sp, &[-2])), &SparseVec::unit(at(&sp, &[2])).neg());
    let v = vector_rep(2, Param::Q);
    for (name, x) in chevalley_ops(&v).named() {
        let lhs = w.compose(x);
        let rhs = x.compose(&w);
        let rhs = if x.parity().is_odd() { rhs.neg() } else { rhs };
        assert_eq!(lhs, rhs, "{name}");
    }
}

#[test]
fn classical_limit_of_vector() {
    let v = vector_rep(2, Param::Q);
    let c = classical_limit(&v).unwrap();
    let sp = v.space().clone();
    let one = num_rational::BigRational::from_integer(1.into());
    assert_eq!(c.h[0].entry(at(&sp, &[1]), at(&sp, &[1])), one);
    assert_eq!(c.h[0].entry(at(&sp, &[2]), at(&sp, &[2])), num_rational::BigRational::from_integer(0.into()));
    let kb = &c.kbar[0];
    assert_eq!(kb.triples().len(), 2);
    assert_eq!(kb.entry(at(&sp, &[-1]), at(&sp, &[1])), one);
    assert_eq!(kb.entry(at(&sp, &[1]), at(&sp, &[-1])), one);
    let _ = Label::Atom(1);
}
