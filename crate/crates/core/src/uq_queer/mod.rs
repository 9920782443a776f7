//! The quantum queer superalgebra in its FRT presentation: the S-matrix,
//! generator actions on the vector module and its tensor powers, Chevalley
//! operators, Hopf-level constructions, weights and submodules.

mod chevalley;
mod hopf;
mod relations;
mod vector;
mod weights;
mod word;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{Field, RatFunc, ScalarError};
use crate::superlinalg::{index_set, parity_of, Parity, SOp, SuperSpace};

pub use chevalley::{chevalley_ops, classical_limit, rep_from_chevalley, ChevalleyOps, ClassicalOps};
pub use hopf::{antipode_images, dual_rep, inverse_antipode_images, parity_operator, sigma_twist};
pub use relations::{check_defining_relations, relation_failures, RelationOutcome};
pub use vector::phi;
pub use vector::{
    coproduct_sign_collapses, omega_map, s_matrix, tensor_product, tensor_rep, vector_rep,
};
pub use weights::{generate_submodule, highest_weight_vectors, weight_of_vector, weight_spaces, Submodule};
pub use word::GenWord;

/// Selects `U_q` or `U_{q^{-1}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Param {
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "qinv")]
    QInv,
}

impl Param {
    pub fn opposite(self) -> Param {
        match self {
            Param::Q => Param::QInv,
            Param::QInv => Param::Q,
        }
    }

    /// The algebra's deformation parameter as a function of `q`.
    pub fn q(self) -> RatFunc {
        self.q_pow(1)
    }

    pub fn q_pow(self, k: i64) -> RatFunc {
        match self {
            Param::Q => RatFunc::q_pow(k),
            Param::QInv => RatFunc::q_pow(-k),
        }
    }

    /// `ξ = q - q^{-1}` for this parameter.
    pub fn xi(self) -> RatFunc {
        self.q_pow(1).sub(&self.q_pow(-1))
    }

    /// Parameter value at the specialization `q = c`.
    pub fn at(self, c: &BigRational) -> BigRational {
        match self {
            Param::Q => c.clone(),
            Param::QInv => Field::inv(c),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::QInv => "qinv",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Param {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "q" => Ok(Param::Q),
            "qinv" => Ok(Param::QInv),
            _ => Err(format!("unknown parameter {s:?} (expected q or qinv)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub n: usize,
    pub param: Param,
}

impl AlgebraSpec {
    pub fn new(n: usize, param: Param) -> Self {
        assert!(n >= 1, "rank must be positive");
        AlgebraSpec { n, param }
    }

    /// All generator index pairs `(i, j)`, `i <= j`, in lexicographic order.
    pub fn generators(&self) -> Vec<(i32, i32)> {
        let idx = index_set(self.n);
        let mut out = Vec::new();
        for &i in &idx {
            for &j in &idx {
                if i <= j {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Parity `|i| + |j|` of the generator `L_ij`.
pub fn gen_parity(i: i32, j: i32) -> Parity {
    parity_of(i) + parity_of(j)
}

pub fn gen_name(i: i32, j: i32) -> String {
    format!("L[{i},{j}]")
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UqError {
    #[error("generator {0} acts non-invertibly")]
    NonInvertibleDiagonal(String),
    #[error("k_{0} is not diagonal on the chosen basis")]
    NonDiagonalCartan(usize),
    #[error("k_{index} eigenvalue {value} is not a power of the parameter")]
    NonMonomialEigenvalue { index: usize, value: String },
    #[error("{generator}: {source}")]
    PoleAtPoint {
        generator: String,
        #[source]
        source: ScalarError,
    },
    #[error("invalid representation: {0}")]
    InvalidRep(String),
}

/// An even invertible `X` with `X ρ_a(L_ij) = ρ_b(L_ij) X` for all generators.
pub fn find_isomorphism(a: &QueerRep, b: &QueerRep) -> Option<SOp<RatFunc>> {
    if a.spec() != b.spec() {
        return None;
    }
    crate::superlinalg::even_isomorphism(a.space(), b.space(), &a.paired_with(b))
}

/// A representation: an operator for every generator `L_ij`, `i <= j`.
#[derive(Debug, Clone)]
pub struct QueerRep {
    spec: AlgebraSpec,
    space: Arc<SuperSpace>,
    gens: BTreeMap<(i32, i32), SOp<RatFunc>>,
}

impl QueerRep {
    /// Checks that every generator is present, endomorphic and of the right parity.
    pub fn new(
        spec: AlgebraSpec,
        space: Arc<SuperSpace>,
        gens: BTreeMap<(i32, i32), SOp<RatFunc>>,
    ) -> Result<Self, UqError> {
        for (i, j) in spec.generators() {
            let op = gens
                .get(&(i, j))
                .ok_or_else(|| UqError::InvalidRep(format!("missing {}", gen_name(i, j))))?;
            if op.domain().dim() != space.dim() || op.codomain().dim() != space.dim() {
                return Err(UqError::InvalidRep(format!("{} has wrong shape", gen_name(i, j))));
            }
            if op.parity() != gen_parity(i, j) && !op.is_zero() {
                return Err(UqError::InvalidRep(format!("{} has wrong parity", gen_name(i, j))));
            }
        }
        if gens.len() != spec.generators().len() {
            return Err(UqError::InvalidRep("unexpected generator keys".into()));
        }
        let gens = gens
            .into_iter()
            .map(|(k, op)| {
                let op = if op.is_zero() {
                    SOp::zero(space.clone(), space.clone(), gen_parity(k.0, k.1))
                } else {
                    op.with_spaces(space.clone(), space.clone())
                };
                (k, op)
            })
            .collect();
        Ok(QueerRep { spec, space, gens })
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.n
    }

    pub fn param(&self) -> Param {
        self.spec.param
    }

    pub fn space(&self) -> &Arc<SuperSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `ρ(L_ij)`; panics on an invalid pair.
    pub fn gen(&self, i: i32, j: i32) -> &SOp<RatFunc> {
        self.gens
            .get(&(i, j))
            .unwrap_or_else(|| panic!("no generator {}", gen_name(i, j)))
    }

    pub fn gens(&self) -> &BTreeMap<(i32, i32), SOp<RatFunc>> {
        &self.gens
    }

    /// Replace one generator matrix (used to plant defects in tests).
    pub fn with_gen(mut self, i: i32, j: i32, op: SOp<RatFunc>) -> Self {
        self.gens.insert((i, j), op);
        self
    }

    /// Generator matrices paired with another representation's, for
    /// intertwiner solves.
    pub fn paired_with(&self, other: &QueerRep) -> Vec<(SOp<RatFunc>, SOp<RatFunc>)> {
        self.gens
            .iter()
            .map(|(k, op)| (op.clone(), other.gen(k.0, k.1).clone()))
            .collect()
    }

    /// Entrywise specialization `q = c`.
    pub fn specialize(
        &self,
        c: &BigRational,
    ) -> Result<BTreeMap<(i32, i32), SOp<BigRational>>, UqError> {
        self.gens
            .iter()
            .map(|(&(i, j), op)| {
                op.try_map(|x| x.specialize(c))
                    .map(|o| ((i, j), o))
                    .map_err(|source| UqError::PoleAtPoint {
                        generator: gen_name(i, j),
                        source,
                    })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests;
