use std::fmt;

use super::{gen_parity, QueerRep};
use crate::scalars::RatFunc;
use crate::superlinalg::{Parity, SOp};

/// Formal linear combination of words in the generators `L_ij`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GenWord {
    terms: Vec<(RatFunc, Vec<(i32, i32)>)>,
}

impl GenWord {
    pub fn one() -> Self {
        GenWord {
            terms: vec![(RatFunc::one(), Vec::new())],
        }
    }

    /// # Panics
    /// When `i > j`.
    pub fn gen(i: i32, j: i32) -> Self {
        assert!(i <= j, "L_ij needs i <= j");
        GenWord {
            terms: vec![(RatFunc::one(), vec![(i, j)])],
        }
    }

    pub fn word(letters: &[(i32, i32)]) -> Self {
        assert!(letters.iter().all(|(i, j)| i <= j), "L_ij needs i <= j");
        GenWord {
            terms: vec![(RatFunc::one(), letters.to_vec())],
        }
    }

    pub fn terms(&self) -> &[(RatFunc, Vec<(i32, i32)>)] {
        &self.terms
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        GenWord {
            terms: self
                .terms
                .iter()
                .map(|(a, w)| (a.mul(c), w.clone()))
                .filter(|(a, _)| !a.is_zero())
                .collect(),
        }
    }

    pub fn add(&self, o: &GenWord) -> Self {
        let mut terms = self.terms.clone();
        for (c, w) in &o.terms {
            match terms.iter_mut().find(|(_, v)| v == w) {
                Some((a, _)) => *a = a.add(c),
                None => terms.push((c.clone(), w.clone())),
            }
        }
        terms.retain(|(a, _)| !a.is_zero());
        GenWord { terms }
    }

    pub fn mul(&self, o: &GenWord) -> Self {
        let mut out = GenWord::default();
        for (a, u) in &self.terms {
            for (b, w) in &o.terms {
                let mut uw = u.clone();
                uw.extend_from_slice(w);
                out = out.add(&GenWord {
                    terms: vec![(a.mul(b), uw)],
                });
            }
        }
        out
    }

    /// Parity when homogeneous; `Even` for zero.
    pub fn parity(&self) -> Option<Parity> {
        let mut p = None;
        for (_, w) in &self.terms {
            let q = w
                .iter()
                .fold(Parity::Even, |acc, &(i, j)| acc + gen_parity(i, j));
            match p {
                None => p = Some(q),
                Some(x) if x != q => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(Parity::Even))
    }

    /// Operator of the element on the representation space.
    ///
    /// # Panics
    /// When the element is not homogeneous.
    pub fn evaluate(&self, rep: &QueerRep) -> SOp<RatFunc> {
        let parity = self.parity().expect("evaluate needs a homogeneous element");
        let space = rep.space().clone();
        let mut acc = SOp::zero(space.clone(), space.clone(), parity);
        for (c, w) in &self.terms {
            let mut op = SOp::identity(space.clone());
            for &(i, j) in w {
                op = op.compose(rep.gen(i, j));
            }
            acc = acc.axpy(c, &op);
        }
        acc
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, w)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, j) in w {
                write!(f, "*L[{i},{j}]")?;
            }
        }
        Ok(())
    }
}
