//! Z/2-graded linear algebra: labeled homogeneous bases, sparse homogeneous
//! operators with the Koszul tensor rule, echelon forms, kernels and graded
//! commutants.

mod echelon;
mod op;
mod space;
mod sparse;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use echelon::Echelon;
pub use op::{SOp, SOpRecord};
pub use space::{index_set, parity_of, tensor_pair, tensor_space, Label, Parity, SIndex, SuperSpace};
pub use sparse::SparseVec;

use crate::scalars::Field;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("entry ({row}, {col}) violates operator parity {parity}")]
    ParityViolation {
        row: String,
        col: String,
        parity: Parity,
    },
    #[error("unknown basis label {0}")]
    UnknownLabel(String),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// Integer weight `(μ_1, ..., μ_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `ε_i`, 1-based.
    pub fn epsilon(n: usize, i: usize) -> Self {
        let mut w = vec![0; n];
        w[i - 1] = 1;
        Weight(w)
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// Weakly decreasing, and equal neighbours are both zero.
    pub fn is_strict(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| w[0] >= w[1] && (w[0] != w[1] || w[0] == 0))
    }

    /// Strict with nonnegative entries.
    pub fn is_strict_polynomial(&self) -> bool {
        self.is_strict() && self.0.iter().all(|&x| x >= 0)
    }

    /// Number of nonzero components.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Basis of the common kernel of operators sharing a domain.
pub fn joint_kernel<F: Field>(ops: &[SOp<F>]) -> Vec<SparseVec<F>> {
    let Some(first) = ops.first() else {
        return Vec::new();
    };
    let d = first.domain().dim();
    let mut ech = Echelon::new(d);
    for op in ops {
        assert_eq!(op.domain().dim(), d, "joint_kernel: domains differ");
        for row in op.transpose().cols() {
            if !row.is_zero() {
                ech.insert(row);
                if ech.rank() == d {
                    return Vec::new();
                }
            }
        }
    }
    ech.nullspace()
}

/// Kernel of operators restricted to the span of `basis` (vectors of the
/// domain). Returned vectors live in the domain.
pub fn joint_kernel_on<F: Field>(ops: &[SOp<F>], basis: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    if basis.is_empty() {
        return Vec::new();
    }
    // images of basis vectors, concatenated, as columns of an
    // (sum of codims) x |basis| matrix; kernel in basis coordinates
    let mut offset = 0;
    let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); basis.len()];
    for op in ops {
        for (j, b) in basis.iter().enumerate() {
            for (r, x) in op.apply(b).iter() {
                cols[j].push((offset + r, x.clone()));
            }
        }
        offset += op.codomain().dim();
    }
    let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); offset];
    for (j, c) in cols.into_iter().enumerate() {
        for (r, x) in c {
            rows[r].push((j, x));
        }
    }
    let mut ech = Echelon::new(basis.len());
    for r in rows {
        if !r.is_empty() {
            ech.insert(&SparseVec::from_entries(r));
        }
    }
    ech.nullspace()
        .into_iter()
        .map(|coef| {
            coef.iter().fold(SparseVec::zero(), |acc, (j, c)| acc.axpy(c, &basis[j]))
        })
        .collect()
}

/// Rank and echelon form of a family of vectors.
pub fn span_dim<F: Field>(ncols: usize, vectors: &[SparseVec<F>]) -> Echelon<F> {
    let mut ech = Echelon::new(ncols);
    for v in vectors {
        ech.insert(v);
    }
    ech
}

/// Rank and echelon form of a family of operators (flattened).
pub fn span_dim_ops<F: Field>(ops: &[SOp<F>]) -> Echelon<F> {
    let n = ops
        .first()
        .map_or(0, |o| o.domain().dim() * o.codomain().dim());
    span_dim(n, &ops.iter().map(SOp::flatten).collect::<Vec<_>>())
}

/// Basis of the graded commutant `{X : X a = (-1)^{|X||a|} a X}` of
/// homogeneous endomorphisms of `space`; even elements first, then odd.
pub fn graded_commutant<F: Field>(space: &Arc<SuperSpace>, ops: &[SOp<F>]) -> Vec<SOp<F>> {
    let mut out = graded_commutant_part(space, ops, Parity::Even);
    out.extend(graded_commutant_part(space, ops, Parity::Odd));
    out
}

/// Homogeneous part of [`graded_commutant`] of the given parity.
pub fn graded_commutant_part<F: Field>(
    space: &Arc<SuperSpace>,
    ops: &[SOp<F>],
    parity: Parity,
) -> Vec<SOp<F>> {
    let pairs: Vec<(SOp<F>, SOp<F>)> = ops.iter().map(|a| (a.clone(), a.clone())).collect();
    graded_intertwiners(space, space, &pairs, parity)
}

/// Basis of the maps `X: dom -> cod` of the given parity with
/// `X a = (-1)^{|X||a|} b X` for every pair `(a, b)` (`a` on `dom`, `b` on
/// `cod`, same parity).
pub fn graded_intertwiners<F: Field>(
    dom: &Arc<SuperSpace>,
    cod: &Arc<SuperSpace>,
    pairs: &[(SOp<F>, SOp<F>)],
    parity: Parity,
) -> Vec<SOp<F>> {
    // unknowns X[r][c] with |r| + |c| = parity
    let mut vars = Vec::new();
    for r in 0..cod.dim() {
        for c in 0..dom.dim() {
            if cod.parity(r) + dom.parity(c) == parity {
                vars.push((r, c));
            }
        }
    }
    let mut ech = Echelon::new(vars.len());
    for (a, b) in pairs {
        assert_eq!(a.domain().dim(), dom.dim());
        assert_eq!(b.domain().dim(), cod.dim());
        let sign = F::from_i64(parity.koszul(a.parity()));
        let at = a.transpose();
        // equation (r, c): sum_k X[r,k] a[k,c] - sign * sum_k b[r,k] X[k,c]
        let mut eqs: std::collections::BTreeMap<(usize, usize), Vec<(usize, F)>> =
            Default::default();
        for (vi, &(r, k)) in vars.iter().enumerate() {
            for (c, x) in at.col(k).iter() {
                eqs.entry((r, c)).or_default().push((vi, x.clone()));
            }
            for (rr, x) in b.col(r).iter() {
                eqs.entry((rr, k))
                    .or_default()
                    .push((vi, sign.mul(x).neg()));
            }
        }
        for (_, e) in eqs {
            let row = SparseVec::from_entries(e);
            if !row.is_zero() {
                ech.insert(&row);
                if ech.rank() == vars.len() {
                    return Vec::new();
                }
            }
        }
    }
    ech.nullspace()
        .into_iter()
        .map(|sol| {
            SOp::from_entries(
                dom.clone(),
                cod.clone(),
                parity,
                sol.iter().map(|(vi, x)| (vars[vi].0, vars[vi].1, x.clone())),
            )
            .expect("solution is homogeneous")
        })
        .collect()
}

/// An invertible even intertwiner, if one exists among small integer
/// combinations of the solution basis.
pub fn even_isomorphism<F: Field>(
    dom: &Arc<SuperSpace>,
    cod: &Arc<SuperSpace>,
    pairs: &[(SOp<F>, SOp<F>)],
) -> Option<SOp<F>> {
    if dom.dim() != cod.dim() {
        return None;
    }
    let sols = graded_intertwiners(dom, cod, pairs, Parity::Even);
    if sols.is_empty() {
        return None;
    }
    for attempt in 0..8i64 {
        let mut x = SOp::zero(dom.clone(), cod.clone(), Parity::Even);
        for (k, s) in sols.iter().enumerate() {
            let c = F::from_i64(1 + ((k as i64 + 1) * (attempt + 1)) % 7);
            x = x.axpy(&c, s);
        }
        if x.inverse().is_some() {
            return Some(x);
        }
    }
    None
}
