use super::*;
use crate::hecke_clifford::zero_weight_block;
use crate::superlinalg::{span_dim, span_dim_ops};
use crate::uq_queer::{check_defining_relations, omega_map, s_matrix};
use crate::scalars::EqualityMode;
use proptest::prelude::*;

fn q() -> RatFunc {
    RatFunc::q_pow(1)
}

fn t(a: i32, b: i32) -> CoordFunctional {
    CoordFunctional::t(a, b)
}

#[test]
fn monomial_parse_roundtrip() {
    let m: CoordMonomial = "t[1,-1]t[-2,2]".parse().unwrap();
    assert_eq!(m.rows, vec![1, -2]);
    assert_eq!(m.cols, vec![-1, 2]);
    assert_eq!(m.to_string(), "t[1,-1]t[-2,2]");
    assert_eq!("1".parse::<CoordMonomial>().unwrap(), CoordMonomial::one());
    assert!("t[1,".parse::<CoordMonomial>().is_err());
}

#[test]
fn normalized_columns_are_positive() {
    let m = CoordMonomial::from_pairs(&[(1, -2), (-1, 1)]).normalized();
    assert_eq!(m.cols, vec![2, 1]);
    assert_eq!(m.rows, vec![-1, -1]);
}

#[test]
fn image_dimensions() {
    assert_eq!(operator_image_basis(1, 1, Param::Q).dim(), 2);
    // the queer matrices [[A, B], [B, A]]
    assert_eq!(operator_image_basis(2, 1, Param::Q).dim(), 8);
    assert_eq!(operator_image_basis(2, 1, Param::QInv).dim(), 8);
}

#[test]
fn image_is_closed_under_generators() {
    let b = operator_image_basis(2, 2, Param::Q);
    let mut ech = span_dim_ops(b.basis());
    for g in b.rep().gens().values() {
        for x in b.basis() {
            assert!(ech.insert(&g.compose(x).flatten()).is_none());
        }
    }
}

#[test]
fn restricted_block_matches_full_image() {
    let full = operator_image_basis(2, 2, Param::Q);
    let rows = restricted_image_basis(2, 2, Param::Q, Restriction::Rows(1));
    let monos = spanning_monomials(1, 2, 2);
    let eval = |img: &OperatorImageBasis| {
        let vs: Vec<_> = monos.iter().map(|m| img.eval_vector(&CoordFunctional::monomial(m.clone()))).collect();
        span_dim(img.dim(), &vs).rank()
    };
    assert!(rows.dim() < full.dim());
    assert_eq!(eval(&rows), eval(&full));
    let swapped: Vec<_> = spanning_monomials(2, 1, 2);
    let cols = restricted_image_basis(2, 2, Param::Q, Restriction::Cols(1));
    let vs: Vec<_> = swapped.iter().map(|m| cols.eval_vector(&CoordFunctional::monomial(m.clone()))).collect();
    let vf: Vec<_> = swapped.iter().map(|m| full.eval_vector(&CoordFunctional::monomial(m.clone()))).collect();
    assert_eq!(span_dim(cols.dim(), &vs).rank(), span_dim(full.dim(), &vf).rank());
}

#[test]
fn evaluation_examples() {
    for n in 1..=2 {
        assert_eq!(eval_functional(&t(1, 1), &GenWord::gen(1, 1), n, Param::Q), q());
        assert!(eval_functional(&t(1, -1), &GenWord::gen(1, 1), n, Param::Q).is_zero());
    }
    assert!(eval_functional(&t(1, 2), &GenWord::gen(1, 1), 2, Param::Q).is_zero());
    for &a in &index_set(2) {
        for &b in &index_set(2) {
            let v = eval_functional(&t(a, b), &GenWord::one(), 2, Param::Q);
            assert_eq!(v, RatFunc::from_int((a == b) as i64));
        }
    }
}

#[test]
fn product_examples() {
    let f = t(1, -1).add(&t(-1, 2).scale(&q()));
    assert_eq!(CoordFunctional::one().product(&f), f);
    let sq = t(1, 1).product(&t(1, 1));
    assert_eq!(eval_functional(&sq, &GenWord::gen(1, 1), 2, Param::Q), q().mul(&q()));
    let m = t(1, -1).product(&t(-1, 1));
    assert_eq!(m.parity(), Some(Parity::Even));
    assert_eq!(t(1, -1).parity(), Some(Parity::Odd));
}

#[test]
fn equality_examples() {
    let b = operator_image_basis(2, 1, Param::Q);
    for &a in &index_set(2) {
        for &c in &index_set(2) {
            assert!(functional_equal(&t(a, c), &t(-a, -c), &b).unwrap());
        }
    }
    assert!(!functional_equal(&t(1, 1), &t(1, 2), &b).unwrap());
    let err = functional_equal(&t(1, 1), &t(1, 1).product(&t(1, 1)), &b);
    assert!(matches!(err, Err(CoordError::DegreeMismatch { .. })));
}

#[test]
fn rtt_relation_entries() {
    let b = operator_image_basis(2, 2, Param::Q);
    let s = s_matrix(2, Param::Q);
    let idx = index_set(2);
    for &a1 in &idx {
        for &a2 in &idx {
            for &b1 in &idx {
                for &b2 in &idx {
                    let (l, r) = qca2_entry(2, &s, (a1, a2), (b1, b2));
                    assert!(functional_equal(&l, &r, &b).unwrap(), "({a1},{a2}),({b1},{b2})");
                }
            }
        }
    }
}

#[test]
fn omega_twist_on_matrix_coefficients() {
    // tau_{u*, v}(x) = (-1)^{|x||v|} <u*, x v> on V; in terms of t,
    // tau_{v_a*, v_b} = (-1)^{(|a|+|b|)|b|} t_ab.
    let n = 2;
    let b = operator_image_basis(n, 1, Param::Q);
    let w = omega_map(n);
    let space = w.domain().clone();
    let p = |a: i32| parity_of(a).bit() as i64;
    let sgn = |k: i64| RatFunc::from_int(if k % 2 == 0 { 1 } else { -1 });
    let tau = |a: i32, c: i32| t(a, c).scale(&sgn((p(a) + p(c)) * p(c)));
    for &a in &index_set(n) {
        for &c in &index_set(n) {
            // <ω~(v_a*), v_d> = (-1)^{|a|} <v_a*, ω v_d>
            let mut lhs = CoordFunctional::zero(1);
            for &d in &index_set(n) {
                let coeff = w.entry(space.word_position(&[a]).unwrap(), space.word_position(&[d]).unwrap());
                if coeff.is_zero() {
                    continue;
                }
                let wu = coeff.mul(&sgn(p(a)));
                for (e, x) in w.col(space.word_position(&[c]).unwrap()).iter() {
                    let Label::Atom(e) = space.label(e) else { unreachable!() };
                    lhs = lhs.add(&tau(d, *e).scale(&wu.mul(x)));
                }
            }
            let rhs = tau(a, c).scale(&sgn(p(a) + 1));
            assert!(functional_equal(&lhs, &rhs, &b).unwrap(), "a={a} c={c}");
        }
    }
}

#[test]
fn column_weights_under_phi() {
    let b = operator_image_basis(2, 1, Param::Q);
    for &a in &index_set(2) {
        for &c in &index_set(2) {
            for j in 1..=2 {
                let g = b.act_gen(Action::Phi, j, j, &t(a, c));
                let e = crate::uq_queer::phi(c, j);
                assert!(functional_equal(&g, &t(a, c).scale(&RatFunc::q_pow(e)), &b).unwrap());
            }
        }
    }
}

#[test]
fn twisted_row_weight_depends_on_row() {
    let b = operator_image_basis(2, 1, Param::Q);
    for &a in &index_set(2) {
        let mut eig = None;
        for &c in &index_set(2) {
            let g = b.act_gen(Action::PsiTilde, 1, 1, &t(a, c));
            let ratio = g.terms().get(&CoordMonomial::from_pairs(&[(a, c)])).cloned();
            let ratio = ratio.expect("diagonal");
            assert!(functional_equal(&g, &t(a, c).scale(&ratio), &b).unwrap());
            match &eig {
                None => eig = Some(ratio),
                Some(e) => assert_eq!(e, &ratio),
            }
        }
    }
}

#[test]
fn phi_supercommutes_with_displayed_twisted_action() {
    let b = operator_image_basis(2, 1, Param::Q);
    let f = t(1, 1);
    let gens = AlgebraSpec::new(2, Param::Q).generators();
    for &(i, j) in &gens {
        for &(k, l) in &gens {
            let xy = b.act_gen(Action::Phi, i, j, &b.act_gen(Action::PsiTildeDisplay, k, l, &f));
            let yx = b.act_gen(Action::PsiTildeDisplay, k, l, &b.act_gen(Action::Phi, i, j, &f));
            let s = gen_parity(i, j).koszul(gen_parity(k, l));
            let d = xy.sub(&yx.scale(&RatFunc::from_int(s)));
            assert!(functional_equal(&d, &CoordFunctional::zero(1), &b).unwrap());
        }
    }
}

#[test]
fn component_actions_are_representations() {
    let g = graded_component(2, 2, 2, Param::Q);
    for which in [Action::Phi, Action::Psi, Action::PsiTilde] {
        let rep = g.action_rep(which).unwrap();
        assert!(check_defining_relations(&rep, EqualityMode::Exact).passed(), "{}", which.name());
    }
    let display = g.action_rep(Action::PsiTildeDisplay).unwrap();
    assert!(!check_defining_relations(&display, EqualityMode::Exact).passed());
}

#[test]
fn left_and_right_actions_supercommute() {
    let g = graded_component(1, 2, 2, Param::Q);
    let phi = g.action_rep(Action::Phi).unwrap();
    let psi = g.action_rep(Action::Psi).unwrap();
    let tw = g.action_rep(Action::PsiTilde).unwrap();
    for x in phi.gens().values() {
        for y in psi.gens().values() {
            assert!(x.supercommutator(y).is_zero());
        }
        for y in tw.gens().values() {
            assert_eq!(x.compose(y), y.compose(x));
        }
    }
}

#[test]
fn graded_dimensions() {
    assert_eq!(graded_component(2, 3, 0, Param::Q).dim(), 1);
    assert_eq!(graded_component(1, 1, 1, Param::Q).dim(), 2);
    assert_eq!(graded_component(1, 1, 2, Param::Q).dim(), 2);
    assert_eq!(graded_component(2, 2, 1, Param::Q).dim(), 8);
    assert_eq!(graded_component(1, 2, 2, Param::Q).dim(), 8);
    assert_eq!(graded_component(2, 1, 2, Param::Q).dim(), 8);
}

#[test]
fn dimensions_grow_with_rank() {
    for l in 1..=2 {
        let d11 = graded_component(1, 1, l, Param::Q).dim();
        let d12 = graded_component(1, 2, l, Param::Q).dim();
        let d22 = graded_component(2, 2, l, Param::Q).dim();
        assert!(d11 <= d12 && d12 <= d22);
    }
}

#[test]
fn zero_weight_monomials() {
    let yes = CoordMonomial::from_pairs(&[(1, 1), (-2, 2)]);
    let swapped = CoordMonomial::from_pairs(&[(1, 2), (-2, -1)]);
    let no = CoordMonomial::from_pairs(&[(1, 1), (1, 1)]);
    assert!(is_zero_weight_monomial(&yes, 2));
    assert!(is_zero_weight_monomial(&swapped, 2));
    assert!(!is_zero_weight_monomial(&no, 2));
    assert!(!is_zero_weight_monomial(&yes, 3));
    // matches the Φ weight decomposition at n = m = 2
    let g = graded_component(2, 2, 2, Param::Q);
    let phi = g.action_rep(Action::Phi).unwrap();
    let block = zero_weight_block(&phi).unwrap();
    for (k, mono) in g.monomials.iter().enumerate() {
        if is_zero_weight_monomial(mono, 2) {
            assert!(block.contains(&k), "{mono}");
        }
    }
}

#[test]
fn degree_one_zero_weight_map() {
    let z = zw_map(2, 1, Param::Q);
    assert_eq!(span_dim(z.component.dim(), z.matrix.cols()).rank(), 4);
}

#[test]
fn zero_weight_iso_n2_m2() {
    let r = zero_weight_iso(2, 2, Param::Q).unwrap();
    assert!(r.passed(), "{}", r.canonical_json());
    assert_eq!(r.derived_values["zw_rank"], 16);
}

fn word_strategy(n: i32) -> impl Strategy<Value = Vec<(i32, i32)>> {
    let idx: Vec<i32> = (-n..=n).filter(|&a| a != 0).collect();
    let pairs: Vec<(i32, i32)> = idx
        .iter()
        .flat_map(|&i| idx.iter().filter(move |&&j| i <= j).map(move |&j| (i, j)))
        .collect();
    prop::collection::vec(prop::sample::select(pairs), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coproduct_dual_consistency(w1 in word_strategy(2), w2 in word_strategy(2), a in prop::sample::select(vec![-2, -1, 1, 2]), b in prop::sample::select(vec![-2, -1, 1, 2])) {
        let (x, y) = (GenWord::word(&w1), GenWord::word(&w2));
        let whole = eval_functional(&t(a, b), &x.mul(&y), 2, Param::Q);
        let mut split = RatFunc::zero();
        for &c in &index_set(2) {
            let l = eval_functional(&t(a, c), &x, 2, Param::Q);
            let r = eval_functional(&t(c, b), &y, 2, Param::Q);
            split = split.add(&l.mul(&r));
        }
        prop_assert_eq!(whole, split);
    }
}
