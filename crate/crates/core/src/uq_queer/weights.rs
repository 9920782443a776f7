use std::collections::{BTreeMap, VecDeque};

use super::{chevalley_ops, QueerRep, UqError};
use crate::scalars::RatFunc;
use crate::superlinalg::{joint_kernel_on, Echelon, Label, Parity, SOp, SparseVec, SuperSpace, Weight};

fn exponent(rep: &QueerRep, i: usize, c: &RatFunc) -> Result<i64, UqError> {
    let non_monomial = || UqError::NonMonomialEigenvalue {
        index: i,
        value: c.to_string(),
    };
    let (num, den) = (c.numerator(), c.denominator());
    if !num.is_monomial() || !den.is_monomial() || num.leading() != den.leading() {
        return Err(non_monomial());
    }
    let k = num.degree() as i64 - den.degree() as i64;
    Ok(match rep.param() {
        super::Param::Q => k,
        super::Param::QInv => -k,
    })
}

/// Basis positions grouped by the weight `μ` with `k_i = q^{μ_i}`.
pub fn weight_spaces(rep: &QueerRep) -> Result<BTreeMap<Weight, Vec<usize>>, UqError> {
    let n = rep.rank();
    let mut weights = vec![vec![0i64; n]; rep.dim()];
    for i in 1..=n {
        let k = rep.gen(i as i32, i as i32);
        for (c, col) in k.cols().iter().enumerate() {
            let entries = col.entries();
            if entries.len() != 1 || entries[0].0 != c {
                return Err(UqError::NonDiagonalCartan(i));
            }
            weights[c][i - 1] = exponent(rep, i, &entries[0].1)?;
        }
    }
    let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (c, w) in weights.into_iter().enumerate() {
        out.entry(Weight(w)).or_default().push(c);
    }
    Ok(out)
}

/// Weight of a weight vector, if it is one.
pub fn weight_of_vector(
    spaces: &BTreeMap<Weight, Vec<usize>>,
    v: &SparseVec<RatFunc>,
) -> Option<Weight> {
    let mut found = None;
    for (c, _) in v.iter() {
        let w = spaces.iter().find(|(_, cs)| cs.contains(&c))?.0;
        match &found {
            None => found = Some(w.clone()),
            Some(x) if x != w => return None,
            _ => {}
        }
    }
    found
}

/// Vectors of weight `λ` killed by every `e_i` and `ebar_i`.
pub fn highest_weight_vectors(
    rep: &QueerRep,
    lambda: &Weight,
) -> Result<Vec<SparseVec<RatFunc>>, UqError> {
    let spaces = weight_spaces(rep)?;
    let Some(block) = spaces.get(lambda) else {
        return Ok(Vec::new());
    };
    let basis: Vec<SparseVec<RatFunc>> = block.iter().map(|&c| SparseVec::unit(c)).collect();
    let raising = chevalley_ops(rep).raising();
    if raising.is_empty() {
        return Ok(basis);
    }
    Ok(joint_kernel_on(&raising, &basis))
}

/// A submodule given by an independent family of module vectors.
#[derive(Debug, Clone)]
pub struct Submodule {
    pub vectors: Vec<SparseVec<RatFunc>>,
    pub echelon: Echelon<RatFunc>,
}

impl Submodule {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// The submodule as a representation on the basis `vectors` (labels
    /// `s0, s1, ...`). Fails unless every basis vector is homogeneous.
    pub fn rep(&self, ambient: &QueerRep) -> Result<QueerRep, UqError> {
        let parities = self
            .vectors
            .iter()
            .map(|v| {
                let mut ps = v.iter().map(|(c, _)| ambient.space().parity(c));
                let p = ps.next().ok_or_else(|| UqError::InvalidRep("zero vector".into()))?;
                if ps.any(|x| x != p) {
                    return Err(UqError::InvalidRep("inhomogeneous submodule vector".into()));
                }
                Ok(p)
            })
            .collect::<Result<Vec<Parity>, UqError>>()?;
        let labels = (0..self.dim()).map(|k| Label::Named(format!("s{k}"))).collect();
        let space = SuperSpace::new(labels, parities);
        let mut ech = Echelon::with_tracking(ambient.dim());
        for v in &self.vectors {
            ech.insert(v);
        }
        let mut gens = BTreeMap::new();
        for (&key, op) in ambient.gens() {
            let cols = self
                .vectors
                .iter()
                .map(|v| {
                    ech.express(&op.apply(v))
                        .ok_or_else(|| UqError::InvalidRep("span is not invariant".into()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            gens.insert(key, SOp::from_columns(space.clone(), space.clone(), op.parity(), cols));
        }
        QueerRep::new(ambient.spec(), space, gens)
    }
}

/// Closure of `seeds` under every generator action.
pub fn generate_submodule(rep: &QueerRep, seeds: &[SparseVec<RatFunc>]) -> Submodule {
    let mut ech = Echelon::new(rep.dim());
    let mut vectors = Vec::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if ech.insert(s).is_some() {
            vectors.push(s.clone());
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if ech.rank() == rep.dim() {
            break;
        }
        for op in rep.gens().values() {
            let w = op.apply(&v);
            if !w.is_zero() && ech.insert(&w).is_some() {
                vectors.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    Submodule {
        vectors,
        echelon: ech,
    }
}
