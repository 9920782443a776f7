use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;

use super::{AlgebraSpec, QueerRep, UqError};
use crate::scalars::{Field, RatFunc};
use crate::superlinalg::{SOp, SuperSpace};

/// Chevalley operators of a representation. Vectors are indexed from zero:
/// `k[0]` is `k_1`, `e[0]` is `e_1`.
#[derive(Debug, Clone)]
pub struct ChevalleyOps<F> {
    pub k: Vec<SOp<F>>,
    pub k_inv: Vec<SOp<F>>,
    pub kbar: Vec<SOp<F>>,
    pub e: Vec<SOp<F>>,
    pub f: Vec<SOp<F>>,
    pub ebar: Vec<SOp<F>>,
    pub fbar: Vec<SOp<F>>,
}

impl<F: Field> ChevalleyOps<F> {
    /// All operators with printable names (`k1`, `k1^-1`, `kbar1`, `e1`, ...).
    pub fn named(&self) -> Vec<(String, &SOp<F>)> {
        let groups = [
            ("k", "", &self.k),
            ("k", "^-1", &self.k_inv),
            ("kbar", "", &self.kbar),
            ("e", "", &self.e),
            ("f", "", &self.f),
            ("ebar", "", &self.ebar),
            ("fbar", "", &self.fbar),
        ];
        let mut out = Vec::new();
        for (prefix, suffix, ops) in groups {
            for (i, op) in ops.iter().enumerate() {
                out.push((format!("{prefix}{}{suffix}", i + 1), op));
            }
        }
        out
    }

    /// Raising operators `e_i`, `ebar_i`.
    pub fn raising(&self) -> Vec<SOp<F>> {
        self.e.iter().chain(&self.ebar).cloned().collect()
    }
}

/// `k_i = L_ii`, `k_i^{-1} = L_{-i,-i}`, `kbar_i = -ξ^{-1} L_{-i,i}`,
/// `e_j = -ξ^{-1} L_{j+1,j+1} L_{-j-1,-j}`, `f_j = ξ^{-1} L_{j,j+1} L_{-j-1,-j-1}`,
/// `ebar_j = -ξ^{-1} L_{j+1,j+1} L_{-j-1,j}`, `fbar_j = -ξ^{-1} L_{-j,j+1} L_{-j-1,-j-1}`.
///
/// `ξ` is taken for the representation's parameter.
pub fn chevalley_ops(rep: &QueerRep) -> ChevalleyOps<RatFunc> {
    let n = rep.rank() as i32;
    let xi_inv = rep.param().xi().inv();
    let m_xi_inv = xi_inv.neg();
    let l = |i: i32, j: i32| rep.gen(i, j);
    let mut ops = ChevalleyOps {
        k: Vec::new(),
        k_inv: Vec::new(),
        kbar: Vec::new(),
        e: Vec::new(),
        f: Vec::new(),
        ebar: Vec::new(),
        fbar: Vec::new(),
    };
    for i in 1..=n {
        ops.k.push(l(i, i).clone());
        ops.k_inv.push(l(-i, -i).clone());
        ops.kbar.push(l(-i, i).scale(&m_xi_inv));
    }
    for j in 1..n {
        ops.e
            .push(l(j + 1, j + 1).compose(l(-j - 1, -j)).scale(&m_xi_inv));
        ops.f.push(l(j, j + 1).compose(l(-j - 1, -j - 1)).scale(&xi_inv));
        ops.ebar
            .push(l(j + 1, j + 1).compose(l(-j - 1, j)).scale(&m_xi_inv));
        ops.fbar
            .push(l(-j, j + 1).compose(l(-j - 1, -j - 1)).scale(&m_xi_inv));
    }
    ops
}

/// Inverts the Chevalley dictionary for rank at most two.
pub fn rep_from_chevalley(
    spec: AlgebraSpec,
    space: Arc<SuperSpace>,
    ops: &ChevalleyOps<RatFunc>,
) -> Result<QueerRep, UqError> {
    if spec.n > 2 {
        return Err(UqError::InvalidRep(
            "Chevalley reconstruction is implemented for rank <= 2".into(),
        ));
    }
    let xi = spec.param.xi();
    let mut gens = BTreeMap::new();
    for i in 1..=spec.n as i32 {
        let a = (i - 1) as usize;
        gens.insert((i, i), ops.k[a].clone());
        gens.insert((-i, -i), ops.k_inv[a].clone());
        gens.insert((-i, i), ops.kbar[a].scale(&xi.neg()));
    }
    if spec.n == 2 {
        let k2 = &ops.k[1];
        let k2_inv = &ops.k_inv[1];
        gens.insert((-2, -1), k2_inv.compose(&ops.e[0]).scale(&xi.neg()));
        gens.insert((-2, 1), k2_inv.compose(&ops.ebar[0]).scale(&xi.neg()));
        gens.insert((1, 2), ops.f[0].compose(k2).scale(&xi));
        gens.insert((-1, 2), ops.fbar[0].compose(k2).scale(&xi.neg()));
    }
    QueerRep::new(spec, space, gens)
}

/// Chevalley operators specialized at `q = 1`, with `k_i^{±1}` replaced by
/// `(k_i^{±1} - 1)/(q - 1)` (`q` the algebra parameter).
#[derive(Debug, Clone)]
pub struct ClassicalOps {
    pub h: Vec<SOp<BigRational>>,
    pub h_inv: Vec<SOp<BigRational>>,
    pub kbar: Vec<SOp<BigRational>>,
    pub e: Vec<SOp<BigRational>>,
    pub f: Vec<SOp<BigRational>>,
    pub ebar: Vec<SOp<BigRational>>,
    pub fbar: Vec<SOp<BigRational>>,
}

impl ClassicalOps {
    pub fn named(&self) -> Vec<(String, &SOp<BigRational>)> {
        let mut out = Vec::new();
        for (prefix, ops) in [
            ("h", &self.h),
            ("hinv", &self.h_inv),
            ("kbar", &self.kbar),
            ("e", &self.e),
            ("f", &self.f),
            ("ebar", &self.ebar),
            ("fbar", &self.fbar),
        ] {
            for (i, op) in ops.iter().enumerate() {
                out.push((format!("{prefix}{}", i + 1), op));
            }
        }
        out
    }
}

pub fn classical_limit(rep: &QueerRep) -> Result<ClassicalOps, UqError> {
    let ops = chevalley_ops(rep);
    let one = BigRational::from_integer(1.into());
    let spec_at = |name: String, op: &SOp<RatFunc>| {
        op.try_map(|x| x.specialize(&one))
            .map_err(|source| UqError::PoleAtPoint {
                generator: name,
                source,
            })
    };
    let denom = rep.param().q().sub(&RatFunc::one()).inv();
    let shifted = |name: &str, ks: &[SOp<RatFunc>]| {
        ks.iter()
            .enumerate()
            .map(|(i, k)| {
                let h = k.sub(&SOp::identity(rep.space().clone())).scale(&denom);
                spec_at(format!("{name}{}", i + 1), &h)
            })
            .collect::<Result<Vec<_>, _>>()
    };
    let plain = |name: &str, xs: &[SOp<RatFunc>]| {
        xs.iter()
            .enumerate()
            .map(|(i, x)| spec_at(format!("{name}{}", i + 1), x))
            .collect::<Result<Vec<_>, _>>()
    };
    Ok(ClassicalOps {
        h: shifted("k", &ops.k)?,
        h_inv: shifted("kinv", &ops.k_inv)?,
        kbar: plain("kbar", &ops.kbar)?,
        e: plain("e", &ops.e)?,
        f: plain("f", &ops.f)?,
        ebar: plain("ebar", &ops.ebar)?,
        fbar: plain("fbar", &ops.fbar)?,
    })
}
