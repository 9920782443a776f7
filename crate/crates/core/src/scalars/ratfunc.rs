//! Exact rational functions of `q` over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("pole at q = {point}: `{value}` is not regular there")]
    PoleAtPoint { point: String, value: String },
    #[error("cannot parse rational function `{0}`")]
    Parse(String),
}

/// `numerator / denominator` in reduced form: the two polynomials are coprime
/// over Q[q], their integer contents are coprime and the denominator has a
/// positive leading coefficient. Zero is `0/1`. Structural equality is
/// therefore equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc {
            num: Poly::constant(BigInt::from(c)),
            den: Poly::one(),
        }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_rational(c: &BigRational) -> Self {
        RatFunc::new(Poly::constant(c.numer().clone()), Poly::constant(c.denom().clone()))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc::new(p, Poly::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        RatFunc::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = Poly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RatFunc {
                num: m,
                den: Poly::one(),
            }
        } else {
            RatFunc {
                num: Poly::one(),
                den: m,
            }
        }
    }

    /// `xi = q - q^{-1}`.
    pub fn xi() -> Self {
        RatFunc::q().sub(&RatFunc::q_pow(-1))
    }

    /// Builds and reduces `num / den`.
    ///
    /// # Panics
    /// When `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let v = num.valuation().min(den.valuation());
        let (mut num, mut den) = (num.shift_down(v), den.shift_down(v));
        if !(den.is_monomial() || num.is_monomial()) {
            let g = num.gcd_primitive(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        RatFunc { num, den }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not involve `q`.
    pub fn is_constant(&self) -> bool {
        self.num.degree() == 0 && self.den.degree() == 0
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        let n = self.num.coeffs().first().cloned().unwrap_or_default();
        Some(BigRational::new(n, self.den.coeffs()[0].clone()))
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// On zero.
    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        RatFunc::new(base.num.pow(e), base.den.pow(e))
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn invert_q(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let (dn, dd) = (self.num.degree(), self.den.degree());
        let num = self.num.reversed();
        let den = self.den.reversed();
        if dd >= dn {
            RatFunc::new(num.shift_up(dd - dn), den)
        } else {
            RatFunc::new(num, den.shift_up(dn - dd))
        }
    }

    /// Exact value at the rational point `c`.
    pub fn specialize(&self, c: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(c);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint {
                point: c.to_string(),
                value: self.to_string(),
            });
        }
        Ok(self.num.eval(c) / d)
    }

    /// Total degree used as a pivot-size heuristic in elimination.
    pub fn weight(&self) -> usize {
        self.num.degree() + self.den.degree() + (self.num.height_bits() + self.den.height_bits()) as usize / 32
    }

    /// Upper bound on the degree of `num(f) * den(g) - num(g) * den(f)`.
    pub fn cross_degree(&self, o: &RatFunc) -> usize {
        (self.num.degree() + o.den.degree()).max(o.num.degree() + self.den.degree())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl fmt::Display for RatFunc {
    /// `(<numerator>)/(<denominator>)`, e.g. `(q^2 - 1)/(q)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RatFunc {
    type Err = ScalarError;

    /// Accepts the canonical `(num)/(den)` form, a bare polynomial, and a
    /// leading minus sign on either.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarError::Parse(s.to_string());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('-').filter(|r| r.trim_start().starts_with('(')) {
            return rest.parse::<RatFunc>().map(|x| x.neg());
        }
        let Some(inner) = t.strip_prefix('(') else {
            let p: Poly = t.parse().map_err(|_| err())?;
            return Ok(RatFunc::from_poly(p));
        };
        let (num, rest) = inner.split_once(")/(").ok_or_else(err)?;
        let den = rest.strip_suffix(')').ok_or_else(err)?;
        let num: Poly = num.parse().map_err(|_| err())?;
        let den: Poly = den.parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(RatFunc::new(num, den))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$method(self, rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$method(&self, &rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$method(&self, rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

/// `[j] = (q^j - q^{-j}) / (q - q^{-1})`, or `[j]! = [1][2]...[j]` when
/// `factorial` is set. `[0] = 0` and `[0]! = 1`.
pub fn q_number(j: u32, factorial: bool) -> RatFunc {
    if factorial {
        return (1..=j).fold(RatFunc::one(), |acc, i| acc.mul(&q_number(i, false)));
    }
    if j == 0 {
        return RatFunc::zero();
    }
    // q^{j-1} + q^{j-3} + ... + q^{1-j} = (q^{2j-2} + ... + 1) / q^{j-1}
    let mut coeffs = vec![BigInt::zero(); 2 * j as usize - 1];
    for k in (0..coeffs.len()).step_by(2) {
        coeffs[k] = BigInt::one();
    }
    RatFunc::new(
        Poly::from_coeffs(coeffs),
        Poly::monomial(BigInt::one(), j as usize - 1),
    )
}

/// Outcome of a randomized identity test.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbCheck {
    pub equal: bool,
    pub trials: usize,
    /// Degree bound of the cross-multiplied difference polynomial.
    pub degree_bound: usize,
    /// Size of the sample set each evaluation point is drawn from.
    pub sample_size: u64,
    /// Upper bound on the probability that unequal inputs were reported equal.
    pub false_positive_bound: f64,
}

const SAMPLE_RANGE: i64 = 1 << 20;

/// Deterministic pseudo-random rational points `a/b` with
/// `|a| <= 2^20` and `1 <= b <= 2^20`.
pub fn sample_points(seed: u64, count: usize) -> impl Iterator<Item = BigRational> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(move |_| {
        let a: i64 = rng.random_range(-SAMPLE_RANGE..=SAMPLE_RANGE);
        let b: i64 = rng.random_range(1..=SAMPLE_RANGE);
        BigRational::new(BigInt::from(a), BigInt::from(b))
    })
}

/// Randomized equality test at `trials` seed-deterministic rational points.
/// Points where either side has a pole are resampled.
pub fn probably_equal_report(f: &RatFunc, g: &RatFunc, trials: usize, seed: u64) -> ProbCheck {
    assert!(trials >= 1, "probably_equal needs at least one trial");
    let degree_bound = f.cross_degree(g);
    let mut points = sample_points(seed, usize::MAX);
    let mut done = 0;
    let mut equal = true;
    while done < trials {
        let c = points.next().unwrap();
        let (Ok(a), Ok(b)) = (f.specialize(&c), g.specialize(&c)) else {
            continue;
        };
        done += 1;
        if a != b {
            equal = false;
            break;
        }
    }
    // |{a/b}| is at least the number of integers in range.
    let sample_size = (2 * SAMPLE_RANGE + 1) as u64;
    let per_trial = (degree_bound as f64 / sample_size as f64).min(1.0);
    ProbCheck {
        equal,
        trials,
        degree_bound,
        sample_size,
        false_positive_bound: per_trial.powi(trials as i32),
    }
}

pub fn probably_equal(f: &RatFunc, g: &RatFunc, trials: usize, seed: u64) -> bool {
    probably_equal_report(f, g, trials, seed).equal
}

/// Exact value of `f` at `c`.
pub fn specialize(f: &RatFunc, c: &BigRational) -> Result<BigRational, ScalarError> {
    f.specialize(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    #[test]
    fn q_numbers() {
        assert!(q_number(0, false).is_zero());
        assert_eq!(q_number(0, true), RatFunc::one());
        assert_eq!(q_number(2, false).to_string(), "(q^2 + 1)/(q)");
        assert_eq!(q_number(2, false), q() + RatFunc::q_pow(-1));
        let three = q_number(3, true);
        let expect = (q() + RatFunc::q_pow(-1)) * (q().pow(2) + RatFunc::one() + RatFunc::q_pow(-2));
        assert_eq!(three, expect);
    }

    #[test]
    fn specialization() {
        let one = BigRational::one();
        assert!(RatFunc::xi().specialize(&one).unwrap().is_zero());
        assert_eq!(q_number(2, false).specialize(&one).unwrap(), BigRational::from_integer(2.into()));
        let pole = RatFunc::one().div(&(q() - RatFunc::one()));
        assert!(matches!(pole.specialize(&one), Err(ScalarError::PoleAtPoint { .. })));
    }

    #[test]
    fn probabilistic_equality() {
        let lhs = (q().pow(2) - RatFunc::one()).div(&(q() - RatFunc::one()));
        assert!(probably_equal(&lhs, &(q() + RatFunc::one()), 5, 7));
        assert!(!probably_equal(&q(), &RatFunc::q_pow(-1), 1, 3));
        let a = RatFunc::xi() * q_number(2, false);
        let b = q().pow(2) - RatFunc::q_pow(-2);
        assert!(probably_equal(&a, &b, 5, 11));
        assert_eq!(probably_equal_report(&a, &b, 5, 11), probably_equal_report(&a, &b, 5, 11));
    }

    #[test]
    fn serialization_round_trip() {
        let f = (q().pow(2) - RatFunc::one()).div(&q());
        assert_eq!(f.to_string(), "(q^2 - 1)/(q)");
        assert_eq!(f.to_string().parse::<RatFunc>().unwrap(), f);
        let g = RatFunc::from_int(-3).div(&(q().pow(2) * RatFunc::from_int(2) + RatFunc::one()));
        assert_eq!(g.to_string().parse::<RatFunc>().unwrap(), g);
        assert_eq!(RatFunc::zero().to_string(), "(0)/(1)");
    }

    #[test]
    fn reduced_form_is_canonical() {
        let a = RatFunc::new(Poly::from_i64s(&[-2, 0, 2]), Poly::from_i64s(&[2, -2]));
        assert_eq!(a.to_string(), "(-q - 1)/(1)");
        assert_eq!(RatFunc::new(a.numerator().clone(), a.denominator().clone()), a);
    }

    #[test]
    fn invert_q() {
        let f = (q().pow(3) + RatFunc::from_int(2)).div(&(q() - RatFunc::from_int(5)));
        let g = f.invert_q();
        let expect = (RatFunc::q_pow(-3) + RatFunc::from_int(2)).div(&(RatFunc::q_pow(-1) - RatFunc::from_int(5)));
        assert_eq!(g, expect);
        assert_eq!(g.invert_q(), f);
    }
}
