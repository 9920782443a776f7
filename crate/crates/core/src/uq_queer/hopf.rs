use std::collections::BTreeMap;

use super::{gen_name, gen_parity, AlgebraSpec, QueerRep, UqError};
use crate::scalars::RatFunc;
use crate::superlinalg::{index_set, SOp};

type Gens = BTreeMap<(i32, i32), SOp<RatFunc>>;

fn diag_inverses(rep: &QueerRep) -> Result<BTreeMap<i32, SOp<RatFunc>>, UqError> {
    index_set(rep.rank())
        .into_iter()
        .map(|i| {
            rep.gen(i, i)
                .inverse()
                .map(|x| (i, x))
                .ok_or_else(|| UqError::NonInvertibleDiagonal(gen_name(i, i)))
        })
        .collect()
}

/// Operators `ρ(S(L_ij))`: the inverse of the triangular generator matrix,
/// `S_ii = L_ii^{-1}`, `S_ij = -(Σ_{i≤k<j} S_ik L_kj) L_jj^{-1}`.
pub fn antipode_images(rep: &QueerRep) -> Result<Gens, UqError> {
    let inv = diag_inverses(rep)?;
    let idx = index_set(rep.rank());
    let space = rep.space().clone();
    let mut s: Gens = BTreeMap::new();
    for (jp, &j) in idx.iter().enumerate() {
        for &i in idx[..=jp].iter().rev() {
            if i == j {
                s.insert((i, i), inv[&i].clone());
                continue;
            }
            let mut acc = SOp::zero(space.clone(), space.clone(), gen_parity(i, j));
            for &k in idx.iter().filter(|&&k| i <= k && k < j) {
                acc = acc.add(&s[&(i, k)].compose(rep.gen(k, j)));
            }
            s.insert((i, j), acc.compose(&inv[&j]).neg());
        }
    }
    Ok(s)
}

/// Operators `ρ(S^{-1}(L_ij))`: `R_ii = L_ii^{-1}`,
/// `R_ij = -(Σ_{i<k≤j} R_kj L_ik) L_ii^{-1}`.
pub fn inverse_antipode_images(rep: &QueerRep) -> Result<Gens, UqError> {
    let inv = diag_inverses(rep)?;
    let idx = index_set(rep.rank());
    let space = rep.space().clone();
    let mut r: Gens = BTreeMap::new();
    for (ip, &i) in idx.iter().enumerate().rev() {
        for &j in &idx[ip..] {
            if i == j {
                r.insert((i, i), inv[&i].clone());
                continue;
            }
            let mut acc = SOp::zero(space.clone(), space.clone(), gen_parity(i, j));
            for &k in idx.iter().filter(|&&k| i < k && k <= j) {
                acc = acc.add(&r[&(k, j)].compose(rep.gen(i, k)));
            }
            r.insert((i, j), acc.compose(&inv[&i]).neg());
        }
    }
    Ok(r)
}

/// Dual module: `<x.f, v> = (-1)^{|x||f|} <f, S(x).v>`, i.e. the matrix of `x`
/// on the dual basis is `D(x)_{a,b} = (-1)^{|x||b|} ρ(S x)_{b,a}`.
pub fn dual_rep(rep: &QueerRep) -> Result<QueerRep, UqError> {
    let s = antipode_images(rep)?;
    let dual = rep.space().dual();
    let gens = s
        .into_iter()
        .map(|((i, j), op)| {
            let t = op.transpose();
            let p = gen_parity(i, j);
            let cols = t
                .cols()
                .iter()
                .enumerate()
                .map(|(b, col)| {
                    if p.is_odd() && dual.parity(b).is_odd() {
                        col.neg()
                    } else {
                        col.clone()
                    }
                })
                .collect();
            ((i, j), SOp::from_columns(dual.clone(), dual.clone(), p, cols))
        })
        .collect();
    QueerRep::new(rep.spec(), dual, gens)
}

/// Parity involution `J v = (-1)^{|v|} v`.
pub fn parity_operator(space: &std::sync::Arc<crate::superlinalg::SuperSpace>) -> SOp<RatFunc> {
    SOp::from_entries(
        space.clone(),
        space.clone(),
        crate::superlinalg::Parity::Even,
        (0..space.dim()).map(|c| {
            let x = if space.parity(c).is_odd() { -1 } else { 1 };
            (c, c, RatFunc::from_int(x))
        }),
    )
    .expect("diagonal is even")
}

/// The module `M^σ` over the opposite parameter, with
/// `σ(L_ij) = (-1)^{|i||j| + |j|} L_{-j,-i}` and `x` acting as
/// `S^{-1}(σ(x)) J^{|x|}`.
///
/// `σ` extends to products without a Koszul sign while `S^{-1}` carries one,
/// so `S^{-1}∘σ` alone is multiplicative only up to `(-1)^{|x||y|}`; the
/// parity involution `J` absorbs that sign.
pub fn sigma_twist(rep: &QueerRep) -> Result<QueerRep, UqError> {
    let r = inverse_antipode_images(rep)?;
    let spec = AlgebraSpec::new(rep.rank(), rep.param().opposite());
    let j_op = parity_operator(rep.space());
    let gens = spec
        .generators()
        .into_iter()
        .map(|(i, j)| {
            let negative = (i < 0 && j < 0) ^ (j < 0);
            let mut op = r[&(-j, -i)].clone();
            if negative {
                op = op.neg();
            }
            if gen_parity(i, j).is_odd() {
                op = op.compose(&j_op);
            }
            ((i, j), op)
        })
        .collect();
    QueerRep::new(spec, rep.space().clone(), gens)
}
