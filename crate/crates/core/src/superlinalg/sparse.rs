use crate::scalars::Field;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        SparseVec::zero()
    }
}

impl<F: Field> SparseVec<F> {
    pub fn zero() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, F::one())],
        }
    }

    /// Sums duplicate indices and drops zeros.
    pub fn from_entries(mut entries: Vec<(usize, F)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, F)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, w)) if *j == i => *w = w.add(&v),
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    /// Caller guarantees sorted, unique, nonzero entries.
    pub(crate) fn from_sorted(entries: Vec<(usize, F)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[F]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, F)> {
        self.entries
    }

    pub fn get(&self, i: usize) -> Option<&F> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return SparseVec::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.neg())).collect(),
        }
    }

    /// `self + c * other`
    pub fn axpy(&self, c: &F, other: &SparseVec<F>) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.mul(c)));
                        b.next();
                    } else {
                        let s = x.add(&y.mul(c));
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.mul(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec<F>) -> Self {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &SparseVec<F>) -> Self {
        self.axpy(&F::one().neg(), other)
    }

    pub fn dot(&self, other: &SparseVec<F>) -> F {
        let mut acc = F::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc = acc.add(&x.mul(y));
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Re-indexes through `f`, dropping entries mapped to `None`.
    pub fn reindex(&self, f: impl Fn(usize) -> Option<usize>) -> Self {
        SparseVec::from_entries(
            self.entries
                .iter()
                .filter_map(|(i, v)| f(*i).map(|j| (j, v.clone())))
                .collect(),
        )
    }

    pub fn map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<SparseVec<G>, E> {
        let mut out = Vec::with_capacity(self.entries.len());
        for (i, v) in &self.entries {
            let w = f(v)?;
            if !w.is_zero() {
                out.push((*i, w));
            }
        }
        Ok(SparseVec { entries: out })
    }

    pub fn to_dense(&self, n: usize) -> Vec<F> {
        let mut d = vec![F::zero(); n];
        for (i, v) in &self.entries {
            d[*i] = v.clone();
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFunc;

    #[test]
    fn axpy_cancels() {
        let a = SparseVec::from_entries(vec![(0, RatFunc::q()), (3, RatFunc::one())]);
        let b = SparseVec::from_entries(vec![(0, RatFunc::one()), (2, RatFunc::one())]);
        let c = a.axpy(&RatFunc::q().neg(), &b);
        assert_eq!(c.get(0), None);
        assert_eq!(c.get(2), Some(&RatFunc::q().neg()));
        assert_eq!(c.nnz(), 2);
    }
}
