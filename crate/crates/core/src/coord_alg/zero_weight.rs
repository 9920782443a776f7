use std::sync::Arc;

use std::time::Instant;

use super::{graded_component, Action, CoordError, CoordFunctional, CoordMonomial, GradedComponent};
use crate::hecke_clifford::{hc_tensor_action, zero_weight_block, zero_weight_hc};
use crate::report::VerifyReport;
use crate::scalars::RatFunc;
use crate::superlinalg::{span_dim, tensor_space, Label, Parity, SOp, SuperSpace};
use crate::uq_queer::{gen_name, parity_operator, tensor_rep, vector_rep, Param};

/// A degree-`m` monomial is `Φ`-zero-weight (every `k_j` of the rank-`m`
/// algebra acting by `q`) iff its normalized columns are `1, 2, ..., m`.
pub fn is_zero_weight_monomial(mono: &CoordMonomial, m: usize) -> bool {
    let norm = mono.normalized();
    let mut cols = norm.cols.clone();
    cols.sort_unstable();
    mono.degree() == m && cols.iter().enumerate().all(|(k, &b)| b == k as i32 + 1)
}

/// `v_{a1} ⊗ ... ⊗ v_{am} ↦ t_{a1,1} ... t_{am,m}` into the degree-`m` component.
#[derive(Debug)]
pub struct ZeroWeightMap {
    pub n: usize,
    pub m: usize,
    pub component: GradedComponent,
    pub source: Arc<SuperSpace>,
    pub matrix: SOp<RatFunc>,
}

pub fn zw_map(n: usize, m: usize, param: Param) -> ZeroWeightMap {
    let component = graded_component(n, m, m, param);
    let source = tensor_space(&SuperSpace::vector(n), m);
    let target = component.space();
    let cols = source
        .labels()
        .iter()
        .map(|l| {
            let word = match l {
                Label::Word(w) => w.clone(),
                Label::Atom(a) => vec![*a],
                other => panic!("unexpected label {other}"),
            };
            let pairs: Vec<(i32, i32)> =
                word.iter().enumerate().map(|(k, &a)| (a, k as i32 + 1)).collect();
            component
                .coordinates(&CoordFunctional::monomial(CoordMonomial::from_pairs(&pairs)))
                .expect("zero weight monomials lie in the component")
        })
        .collect();
    let matrix = SOp::from_columns(source.clone(), target, Parity::Even, cols);
    ZeroWeightMap {
        n,
        m,
        component,
        source,
        matrix,
    }
}


fn word_of(l: &Label) -> Vec<i32> {
    match l {
        Label::Word(w) => w.clone(),
        Label::Atom(a) => vec![*a],
        other => panic!("unexpected label {other}"),
    }
}

fn diagonal(space: &Arc<SuperSpace>, sign: impl Fn(&[i32]) -> bool) -> SOp<RatFunc> {
    let entries = space.labels().iter().enumerate().map(|(i, l)| {
        let s = if sign(&word_of(l)) { -1 } else { 1 };
        (i, i, RatFunc::from_int(s))
    });
    SOp::from_entries(space.clone(), space.clone(), Parity::Even, entries).expect("diagonal")
}

/// Graded reversal of tensor factors, `v_{a1} ⊗ ... ⊗ v_{am} ↦ ± v_{am} ⊗ ... ⊗ v_{a1}`.
/// Conjugating a tensor action by it yields the action through the opposite
/// coproduct.
pub fn reversal_operator(space: &Arc<SuperSpace>) -> SOp<RatFunc> {
    let entries = space.labels().iter().enumerate().map(|(i, l)| {
        let w = word_of(l);
        let odd = w.iter().filter(|&&a| a < 0).count();
        let sign = if (odd * odd.saturating_sub(1) / 2) % 2 == 1 { -1 } else { 1 };
        let rev: Vec<i32> = w.iter().rev().copied().collect();
        (space.word_position(&rev).expect("reversed word"), i, RatFunc::from_int(sign))
    });
    SOp::from_entries(space.clone(), space.clone(), Parity::Even, entries).expect("reversal")
}

/// Zero-weight isomorphism check. `Z` is normalized by the evaluation sign
/// `ε(a) = (-1)^{C(#odd letters, 2)}`, i.e. `v_a` goes to the functional
/// `x ↦ ρ_m(x)_{a,(1..m)}`. Then
///
/// * the zero-weight `T_a` is `-T_a` of the tensor action,
/// * the zero-weight `C_b` is `J C_b = -C_b J` (`J` the parity operator),
/// * the twisted row action `Ψ̃` is the opposite-coproduct tensor action of
///   `U_{q^{-1}}` on `V^{⊗m}`.
pub fn zero_weight_iso(n: usize, m: usize, param: Param) -> Result<VerifyReport, CoordError> {
    let start = Instant::now();
    let mut report = VerifyReport::new("zero_weight_iso");
    report.param("n", n).param("m", m).param("param", param.name());
    let z = zw_map(n, m, param);
    let g = &z.component;
    let rank = span_dim(g.dim(), z.matrix.cols()).rank();
    let expected = (2 * n).pow(m as u32);
    report.check(format!("rank of Z is (2n)^m = {expected}"), rank == expected).value(rank);
    report.derive("component_dim", g.dim()).derive("zw_rank", rank);

    let phi = g.action_rep(Action::Phi)?;
    let block = zero_weight_block(&phi)?;
    let outside = z.matrix.cols().iter().any(|c| c.iter().any(|(r, _)| !block.contains(&r)));
    report.check("image of Z is the zero-weight block", !outside && rank == block.len());
    report.derive("zero_weight_dim", block.len());
    if outside || rank != block.len() {
        report.finish(start);
        return Ok(report);
    }

    let hz = zero_weight_hc(&phi)?;
    let src = z.source.clone();
    let cols: Vec<_> = z
        .matrix
        .cols()
        .iter()
        .map(|c| c.reindex(|r| block.iter().position(|&x| x == r)))
        .collect();
    let sign = diagonal(&src, |w| {
        let odd = w.iter().filter(|&&a| a < 0).count();
        (odd * odd.saturating_sub(1) / 2) % 2 == 1
    });
    let zop = SOp::from_columns(src.clone(), hz.space.clone(), Parity::Even, cols).compose(&sign);
    let Some(zinv) = zop.inverse() else {
        report.check("Z is invertible onto the block", false);
        report.finish(start);
        return Ok(report);
    };
    let pull = |op: &SOp<RatFunc>| zinv.compose(op).compose(&zop);
    let j = parity_operator(&src);

    let tensor = hc_tensor_action(n, m, param);
    let bad_t = (0..m.saturating_sub(1))
        .find(|&a| pull(&hz.t[a]) != tensor.t[a].with_spaces(src.clone(), src.clone()).neg())
        .map(|a| format!("a={}", a + 1));
    report.check_with("zero-weight T_a = -T_a on V^m", bad_t);
    let bad_c = (0..m)
        .find(|&b| pull(&hz.c[b]) != tensor.c[b].with_spaces(src.clone(), src.clone()).compose(&j).neg())
        .map(|b| format!("b={}", b + 1));
    report.check_with("zero-weight C_b = -C_b J on V^m", bad_c);

    let psi = g.action_rep(Action::PsiTilde)?;
    let rho = tensor_rep(&vector_rep(n, param.opposite()), m);
    let rev = reversal_operator(&src);
    let bad_row = rho.gens().iter().find_map(|(&(a, b), x)| {
        let y = psi.gen(a, b).restrict(&block, &block).with_spaces(hz.space.clone(), hz.space.clone());
        let x = rev.compose(&x.with_spaces(src.clone(), src.clone())).compose(&rev);
        (pull(&y) != x).then(|| format!("{}", gen_name(a, b)))
    });
    report.check_with("twisted row action = opposite-coproduct action on V^m", bad_row);
    report.finish(start);
    Ok(report)
}
