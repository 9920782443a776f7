use std::collections::BTreeMap;
use std::sync::Arc;

use super::relations::vector_gen_generic;
use super::{gen_parity, AlgebraSpec, Param, QueerRep};
use crate::scalars::RatFunc;
use crate::superlinalg::{index_set, tensor_pair, Label, Parity, SOp, SuperSpace};

/// `φ(i, j) = (-1)^{|j|} (δ_{i,j} + δ_{i,-j})`
pub fn phi(i: i32, j: i32) -> i64 {
    let d = i64::from(i == j) + i64::from(i == -j);
    if j > 0 {
        d
    } else {
        -d
    }
}

fn pos(v: &SuperSpace, a: i32) -> usize {
    v.position(&Label::Atom(a)).expect("index in range")
}

/// Matrix unit `E_ab` on the vector space.
pub(crate) fn matrix_unit(v: &Arc<SuperSpace>, a: i32, b: i32, c: RatFunc) -> SOp<RatFunc> {
    SOp::from_entries(
        v.clone(),
        v.clone(),
        gen_parity(a, b),
        [(pos(v, a), pos(v, b), c)],
    )
    .expect("matrix unit is homogeneous")
}

/// Action of `L_ij` on the vector module, read off the `E_ij` slot of `S`.
fn vector_gen(v: &Arc<SuperSpace>, param: Param, i: i32, j: i32) -> SOp<RatFunc> {
    vector_gen_generic(v, &param.q(), i, j)
}

/// The vector representation on `C^{n|n}`.
pub fn vector_rep(n: usize, param: Param) -> QueerRep {
    let spec = AlgebraSpec::new(n, param);
    let v = SuperSpace::vector(n);
    let gens: BTreeMap<_, _> = spec
        .generators()
        .into_iter()
        .map(|(i, j)| ((i, j), vector_gen(&v, param, i, j)))
        .collect();
    QueerRep::new(spec, v, gens).expect("vector representation is well formed")
}

/// `S = Σ q^{φ(i,j)} E_ii⊗E_jj + ξ Σ_{i<j} (-1)^{|i|} (E_ji + E_{-j,-i}) ⊗ E_ij`
/// as an operator on `V ⊗ V`.
pub fn s_matrix(n: usize, param: Param) -> SOp<RatFunc> {
    let v = SuperSpace::vector(n);
    let vv = tensor_pair(&v, &v);
    let idx = index_set(n);
    let mut acc = SOp::zero(vv.clone(), vv.clone(), Parity::Even);
    for &j in &idx {
        for &i in &idx {
            if i > j {
                continue;
            }
            // slot E_ij holds ρ(L_ij)
            let left = vector_gen(&v, param, i, j);
            let right = matrix_unit(&v, i, j, RatFunc::one());
            acc = acc.add(&left.graded_tensor_into(&right, vv.clone(), vv.clone()));
        }
    }
    acc
}

/// `ω(v_a) = (-1)^{|a|} v_{-a}`
pub fn omega_map(n: usize) -> SOp<RatFunc> {
    let v = SuperSpace::vector(n);
    let entries: Vec<_> = index_set(n)
        .into_iter()
        .map(|a| {
            let c = if a < 0 { RatFunc::from_int(-1) } else { RatFunc::one() };
            (pos(&v, -a), pos(&v, a), c)
        })
        .collect();
    SOp::from_entries(v.clone(), v, Parity::Odd, entries).expect("ω is odd")
}

fn product(a: &QueerRep, b: &QueerRep, with_sign: bool) -> QueerRep {
    assert_eq!(a.spec(), b.spec(), "tensor factors must share the algebra");
    let spec = a.spec();
    let idx = index_set(spec.n);
    let space = tensor_pair(a.space(), b.space());
    let mut gens = BTreeMap::new();
    for (i, j) in spec.generators() {
        let mut acc = SOp::zero(space.clone(), space.clone(), gen_parity(i, j));
        for &k in idx.iter().filter(|&&k| i <= k && k <= j) {
            let mut t = a
                .gen(i, k)
                .graded_tensor_into(b.gen(k, j), space.clone(), space.clone());
            if with_sign && gen_parity(i, k).koszul(gen_parity(k, j)) < 0 {
                t = t.neg();
            }
            acc = acc.add(&t);
        }
        gens.insert((i, j), acc);
    }
    QueerRep::new(spec, space, gens).expect("tensor product is well formed")
}

/// `ρ(L_ij) = Σ_{i≤k≤j} ρ_a(L_ik) ⊗ ρ_b(L_kj)`.
pub fn tensor_product(a: &QueerRep, b: &QueerRep) -> QueerRep {
    product(a, b, false)
}

/// Whether the coproduct with the sign `(-1)^{(|i|+|k|)(|k|+|j|)}` gives the
/// same operators as without it, on `a ⊗ b`.
pub fn coproduct_sign_collapses(a: &QueerRep, b: &QueerRep) -> bool {
    let plain = product(a, b, false);
    let signed = product(a, b, true);
    plain.gens() == signed.gens()
}

/// `rep^{⊗m}`, built as `((rep ⊗ rep) ⊗ ...) ⊗ rep`.
pub fn tensor_rep(rep: &QueerRep, m: usize) -> QueerRep {
    assert!(m >= 1, "tensor power needs m >= 1");
    let mut acc = rep.clone();
    for _ in 1..m {
        acc = tensor_product(&acc, rep);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinalg::SparseVec;

    #[test]
    fn s_matrix_diagonal_entries() {
        let s = s_matrix(1, Param::Q);
        let vv = s.domain().clone();
        let p11 = vv.word_position(&[1, 1]).unwrap();
        let pmm = vv.word_position(&[-1, -1]).unwrap();
        assert_eq!(s.entry(p11, p11), RatFunc::q());
        assert_eq!(
            s.apply(&SparseVec::unit(pmm)),
            SparseVec::unit(pmm).scale(&RatFunc::q_pow(-1))
        );
    }

    #[test]
    fn omega_squares_to_minus_one() {
        let w = omega_map(2);
        let sq = w.compose(&w);
        assert_eq!(sq, SOp::scalar(w.domain().clone(), RatFunc::from_int(-1)));
    }

    #[test]
    fn k1_on_second_tensor_power_of_rank_one() {
        let v2 = tensor_rep(&vector_rep(1, Param::Q), 2);
        assert_eq!(*v2.gen(1, 1), SOp::scalar(v2.space().clone(), RatFunc::q_pow(2)));
    }
}
