use std::collections::{BTreeMap, HashMap};

use super::sparse::SparseVec;
use crate::scalars::Field;

/// Incremental reduced row echelon form over a [`Field`].
///
/// Every stored row has a pivot entry equal to one and zeros in all other
/// pivot columns. Pivots are chosen by smallest scalar weight, then smallest
/// column, so the result is a deterministic function of the insertion order.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
    pivot_row: HashMap<usize, usize>,
    combos: Option<Vec<SparseVec<F>>>,
    inserted: usize,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: HashMap::new(),
            combos: None,
            inserted: 0,
        }
    }

    /// Also records each row as a combination of the inserted vectors.
    pub fn with_tracking(ncols: usize) -> Self {
        Echelon {
            combos: Some(Vec::new()),
            ..Echelon::new(ncols)
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Rows ordered by pivot column.
    pub fn basis(&self) -> Vec<SparseVec<F>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&k| self.pivots[k]);
        idx.into_iter().map(|k| self.rows[k].clone()).collect()
    }

    fn pivot_coeffs(&self, v: &SparseVec<F>) -> Vec<(usize, F)> {
        v.iter()
            .filter_map(|(c, x)| self.pivot_row.get(&c).map(|&k| (k, x.clone())))
            .collect()
    }

    fn combine(base: &SparseVec<F>, terms: &[(usize, F)], src: &[SparseVec<F>]) -> SparseVec<F> {
        if terms.len() <= 2 {
            let mut r = base.clone();
            for (k, c) in terms {
                r = r.axpy(&c.neg(), &src[*k]);
            }
            return r;
        }
        let mut acc: BTreeMap<usize, F> = base.iter().map(|(i, x)| (i, x.clone())).collect();
        for (k, c) in terms {
            for (i, y) in src[*k].iter() {
                let t = c.mul(y);
                acc.entry(i)
                    .and_modify(|x| *x = x.sub(&t))
                    .or_insert_with(|| t.neg());
            }
        }
        SparseVec::from_sorted(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect())
    }

    /// Remainder of `v` modulo the row space.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let terms = self.pivot_coeffs(v);
        Self::combine(v, &terms, &self.rows)
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coefficients of `v` on the stored rows (by row index), or `None` if `v`
    /// is outside the row space.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Option<Vec<(usize, F)>> {
        let terms = self.pivot_coeffs(v);
        Self::combine(v, &terms, &self.rows)
            .is_zero()
            .then_some(terms)
    }

    /// `v` as a combination of the inserted vectors (requires tracking).
    pub fn express(&self, v: &SparseVec<F>) -> Option<SparseVec<F>> {
        let combos = self.combos.as_ref().expect("echelon built without tracking");
        let terms = self.coordinates(v)?;
        let neg: Vec<(usize, F)> = terms.into_iter().map(|(k, c)| (k, c.neg())).collect();
        Some(Self::combine(&SparseVec::zero(), &neg, combos))
    }

    /// Inserts `v`; returns the new row index when `v` was independent.
    pub fn insert(&mut self, v: &SparseVec<F>) -> Option<usize> {
        let input = self.inserted;
        self.inserted += 1;
        let terms = self.pivot_coeffs(v);
        let r = Self::combine(v, &terms, &self.rows);
        if r.is_zero() {
            return None;
        }
        let (p, pv) = r
            .iter()
            .min_by_key(|(c, x)| (x.weight(), *c))
            .map(|(c, x)| (c, x.clone()))
            .expect("nonzero remainder");
        let inv = pv.inv();
        let r = r.scale(&inv);
        let combo = self.combos.as_ref().map(|combos| {
            Self::combine(&SparseVec::unit(input), &terms, combos).scale(&inv)
        });
        for k in 0..self.rows.len() {
            if let Some(c) = self.rows[k].get(p).cloned() {
                self.rows[k] = self.rows[k].axpy(&c.neg(), &r);
                if let (Some(combos), Some(cb)) = (self.combos.as_mut(), combo.as_ref()) {
                    combos[k] = combos[k].axpy(&c.neg(), cb);
                }
            }
        }
        let k = self.rows.len();
        self.rows.push(r);
        self.pivots.push(p);
        self.pivot_row.insert(p, k);
        if let (Some(combos), Some(cb)) = (self.combos.as_mut(), combo) {
            combos.push(cb);
        }
        Some(k)
    }

    /// Basis of `{x : row · x = 0 for every row}`, one vector per free column
    /// in increasing column order.
    pub fn nullspace(&self) -> Vec<SparseVec<F>> {
        let mut buckets: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.ncols];
        for (k, row) in self.rows.iter().enumerate() {
            let p = self.pivots[k];
            for (c, x) in row.iter() {
                if c != p {
                    buckets[c].push((p, x.neg()));
                }
            }
        }
        (0..self.ncols)
            .filter(|c| !self.pivot_row.contains_key(c))
            .map(|c| {
                let mut e = std::mem::take(&mut buckets[c]);
                e.push((c, F::one()));
                SparseVec::from_entries(e)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFunc;

    fn v(e: &[(usize, i64)]) -> SparseVec<RatFunc> {
        SparseVec::from_entries(e.iter().map(|&(i, x)| (i, RatFunc::from_int(x))).collect())
    }

    #[test]
    fn rank_and_membership() {
        let mut ech = Echelon::with_tracking(3);
        assert!(ech.insert(&v(&[(0, 1), (1, 2)])).is_some());
        assert!(ech.insert(&v(&[(0, 2), (1, 4)])).is_none());
        assert!(ech.insert(&v(&[(1, 1), (2, 1)])).is_some());
        assert_eq!(ech.rank(), 2);
        let w = v(&[(0, 1), (1, 3), (2, 1)]);
        assert!(ech.contains(&w));
        let combo = ech.express(&w).unwrap();
        assert_eq!(combo, v(&[(0, 1), (2, 1)]));
        let ns = ech.nullspace();
        assert_eq!(ns.len(), 1);
        for r in ech.rows() {
            assert!(r.dot(&ns[0]).is_zero());
        }
    }
}
