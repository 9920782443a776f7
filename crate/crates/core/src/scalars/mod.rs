//! Scalar field: exact rational functions of `q` with rational coefficients,
//! q-combinatorics, specialization and randomized identity testing.

mod poly;
mod ratfunc;

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use poly::{Poly, PolyParseError};
pub use ratfunc::{
    probably_equal, probably_equal_report, q_number, sample_points, specialize, ProbCheck, RatFunc,
    ScalarError,
};

/// How scalar identities are decided: exactly, or by evaluation at
/// `trials` seed-deterministic random rational points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityMode {
    Exact,
    Probabilistic { trials: usize, seed: u64 },
}

impl EqualityMode {
    pub fn name(&self) -> &'static str {
        match self {
            EqualityMode::Exact => "exact",
            EqualityMode::Probabilistic { .. } => "prob",
        }
    }
}

/// Field operations needed by the graded linear algebra. Implemented by
/// [`RatFunc`] (exact mode) and [`BigRational`] (specialized values, used
/// for the classical limit and probabilistic mode).
pub trait Field: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// # Panics
    /// On zero.
    fn inv(&self) -> Self;
    fn from_i64(c: i64) -> Self;
    /// Size heuristic for pivot selection; smaller is preferred.
    fn weight(&self) -> usize;
    fn render(&self) -> String;
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Self {
        RatFunc::inv(self)
    }
    fn from_i64(c: i64) -> Self {
        RatFunc::from_int(c)
    }
    fn weight(&self) -> usize {
        RatFunc::weight(self)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    // integer fast paths skip the gcd in `Ratio::reduce`
    fn add(&self, o: &Self) -> Self {
        if self.is_integer() && o.is_integer() {
            return BigRational::from_integer(self.numer() + o.numer());
        }
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        if self.is_integer() && o.is_integer() {
            return BigRational::from_integer(self.numer() - o.numer());
        }
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_integer() && o.is_integer() {
            return BigRational::from_integer(self.numer() * o.numer());
        }
        if One::is_one(self) {
            return o.clone();
        }
        if One::is_one(o) {
            return self.clone();
        }
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_i64(c: i64) -> Self {
        BigRational::from_integer(c.into())
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|cs| Poly::from_i64s(&cs))
    }

    fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
        (arb_poly(), arb_poly(), -2i64..=2).prop_filter_map("nonzero denominator", |(n, d, s)| {
            if d.is_zero() {
                None
            } else {
                Some(RatFunc::new(n, d).mul(&RatFunc::q_pow(s)))
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn distributive(f in arb_ratfunc(), g in arb_ratfunc(), h in arb_ratfunc()) {
            prop_assert_eq!((&f + &g) * h.clone(), &f * &h + &g * &h);
        }

        #[test]
        fn inverse(f in arb_ratfunc()) {
            prop_assume!(!f.is_zero());
            prop_assert!(f.mul(&f.inv()).is_one());
        }

        #[test]
        fn reduction_is_idempotent(f in arb_ratfunc()) {
            let again = RatFunc::new(f.numerator().clone(), f.denominator().clone());
            prop_assert_eq!(&again, &f);
            prop_assert_eq!(f.to_string().parse::<RatFunc>().unwrap(), f);
        }

        #[test]
        fn equality_matches_cross_multiplication(f in arb_ratfunc(), g in arb_ratfunc()) {
            let cross = f.numerator().mul(g.denominator()) == g.numerator().mul(f.denominator());
            prop_assert_eq!(cross, f == g);
        }

        #[test]
        fn probabilistic_mode_is_deterministic(f in arb_ratfunc(), g in arb_ratfunc(), seed in 0u64..1000) {
            prop_assert_eq!(probably_equal(&f, &g, 3, seed), probably_equal(&f, &g, 3, seed));
            if f == g {
                prop_assert!(probably_equal(&f, &g, 3, seed));
            }
        }
    }
}
