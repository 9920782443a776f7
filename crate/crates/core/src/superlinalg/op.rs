use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::space::{tensor_pair, Label, Parity, SuperSpace};
use super::sparse::SparseVec;
use super::LinalgError;
use crate::scalars::{Field, RatFunc};

/// Parity-homogeneous sparse linear map between superspaces, stored by columns.
#[derive(Debug, Clone)]
pub struct SOp<F> {
    domain: Arc<SuperSpace>,
    codomain: Arc<SuperSpace>,
    parity: Parity,
    cols: Vec<SparseVec<F>>,
}

impl<F: Field> PartialEq for SOp<F> {
    fn eq(&self, o: &Self) -> bool {
        self.parity == o.parity
            && self.cols == o.cols
            && *self.domain == *o.domain
            && *self.codomain == *o.codomain
    }
}

impl<F: Field> SOp<F> {
    pub fn zero(domain: Arc<SuperSpace>, codomain: Arc<SuperSpace>, parity: Parity) -> Self {
        let cols = vec![SparseVec::zero(); domain.dim()];
        SOp {
            domain,
            codomain,
            parity,
            cols,
        }
    }

    pub fn identity(space: Arc<SuperSpace>) -> Self {
        Self::scalar(space, F::one())
    }

    pub fn scalar(space: Arc<SuperSpace>, c: F) -> Self {
        let cols = (0..space.dim())
            .map(|i| SparseVec::from_entries(vec![(i, c.clone())]))
            .collect();
        SOp {
            domain: space.clone(),
            codomain: space,
            parity: Parity::Even,
            cols,
        }
    }

    /// Builds from `(row, col, value)` triples, summing duplicates.
    pub fn from_entries(
        domain: Arc<SuperSpace>,
        codomain: Arc<SuperSpace>,
        parity: Parity,
        entries: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Result<Self, LinalgError> {
        let mut buckets: Vec<Vec<(usize, F)>> = vec![Vec::new(); domain.dim()];
        for (r, c, v) in entries {
            if r >= codomain.dim() || c >= domain.dim() {
                return Err(LinalgError::ShapeMismatch(format!(
                    "entry ({r},{c}) outside {}x{}",
                    codomain.dim(),
                    domain.dim()
                )));
            }
            buckets[c].push((r, v));
        }
        let cols: Vec<SparseVec<F>> = buckets.into_iter().map(SparseVec::from_entries).collect();
        for (c, col) in cols.iter().enumerate() {
            for (r, _) in col.iter() {
                if codomain.parity(r) + domain.parity(c) != parity {
                    return Err(LinalgError::ParityViolation {
                        row: codomain.label(r).to_string(),
                        col: domain.label(c).to_string(),
                        parity,
                    });
                }
            }
        }
        Ok(SOp {
            domain,
            codomain,
            parity,
            cols,
        })
    }

    /// Column-wise constructor; the caller guarantees parity consistency.
    pub fn from_columns(
        domain: Arc<SuperSpace>,
        codomain: Arc<SuperSpace>,
        parity: Parity,
        cols: Vec<SparseVec<F>>,
    ) -> Self {
        assert_eq!(cols.len(), domain.dim());
        let op = SOp {
            domain,
            codomain,
            parity,
            cols,
        };
        debug_assert!(op.parity_violation().is_none());
        op
    }

    /// First entry violating the parity bookkeeping, if any.
    pub fn parity_violation(&self) -> Option<(usize, usize)> {
        for (c, col) in self.cols.iter().enumerate() {
            for (r, _) in col.iter() {
                if self.codomain.parity(r) + self.domain.parity(c) != self.parity {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn domain(&self) -> &Arc<SuperSpace> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<SuperSpace> {
        &self.codomain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn col(&self, c: usize) -> &SparseVec<F> {
        &self.cols[c]
    }

    pub fn cols(&self) -> &[SparseVec<F>] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> F {
        self.cols[c].get(r).cloned().unwrap_or_else(F::zero)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// Nonzero entries as `(row, col, value)`, sorted by (row, col).
    pub fn triples(&self) -> Vec<(usize, usize, F)> {
        let mut t: Vec<(usize, usize, F)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (r, c, v.clone())))
            .collect();
        t.sort_by_key(|(r, c, _)| (*r, *c));
        t
    }

    pub fn is_square(&self) -> bool {
        *self.domain == *self.codomain
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut acc: Vec<(usize, F)> = Vec::new();
        for (c, x) in v.iter() {
            for (r, a) in self.cols[c].iter() {
                acc.push((r, a.mul(x)));
            }
        }
        SparseVec::from_entries(acc)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SOp<F>) -> SOp<F> {
        assert_eq!(
            other.codomain.dim(),
            self.domain.dim(),
            "composition shape mismatch"
        );
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        SOp {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            parity: self.parity + other.parity,
            cols,
        }
    }

    fn check_same_shape(&self, o: &SOp<F>) {
        assert_eq!(self.domain.dim(), o.domain.dim(), "domain mismatch");
        assert_eq!(self.codomain.dim(), o.codomain.dim(), "codomain mismatch");
    }

    /// Sum of operators. A zero summand adopts the other's parity.
    pub fn add(&self, o: &SOp<F>) -> SOp<F> {
        self.axpy(&F::one(), o)
    }

    pub fn sub(&self, o: &SOp<F>) -> SOp<F> {
        self.axpy(&F::one().neg(), o)
    }

    /// `self + c * o`
    pub fn axpy(&self, c: &F, o: &SOp<F>) -> SOp<F> {
        self.check_same_shape(o);
        let parity = if o.is_zero() || c.is_zero() {
            self.parity
        } else if self.is_zero() {
            o.parity
        } else {
            assert_eq!(self.parity, o.parity, "adding operators of different parity");
            self.parity
        };
        let cols = self
            .cols
            .iter()
            .zip(&o.cols)
            .map(|(a, b)| a.axpy(c, b))
            .collect();
        SOp {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            parity,
            cols,
        }
    }

    pub fn scale(&self, c: &F) -> SOp<F> {
        SOp {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            parity: self.parity,
            cols: self.cols.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> SOp<F> {
        self.scale(&F::one().neg())
    }

    /// Graded commutator `[a, b] = ab - (-1)^{|a||b|} ba`.
    pub fn supercommutator(&self, o: &SOp<F>) -> SOp<F> {
        let ab = self.compose(o);
        let ba = o.compose(self);
        if self.parity.koszul(o.parity) < 0 {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    /// Koszul tensor product: `(A⊗B)(u⊗w) = (-1)^{|B||u|} Au ⊗ Bw`.
    pub fn graded_tensor(&self, b: &SOp<F>) -> SOp<F> {
        let domain = tensor_pair(&self.domain, &b.domain);
        let codomain = tensor_pair(&self.codomain, &b.codomain);
        self.graded_tensor_into(b, domain, codomain)
    }

    /// As [`SOp::graded_tensor`] but reusing precomputed product spaces.
    pub fn graded_tensor_into(
        &self,
        b: &SOp<F>,
        domain: Arc<SuperSpace>,
        codomain: Arc<SuperSpace>,
    ) -> SOp<F> {
        let (dd, bd, bc) = (self.domain.dim(), b.domain.dim(), b.codomain.dim());
        assert_eq!(domain.dim(), dd * bd);
        assert_eq!(codomain.dim(), self.codomain.dim() * bc);
        let mut cols = Vec::with_capacity(dd * bd);
        for u in 0..dd {
            let sign_odd = b.parity.is_odd() && self.domain.parity(u).is_odd();
            let acol = &self.cols[u];
            for w in 0..bd {
                let bcol = &b.cols[w];
                let mut e = Vec::with_capacity(acol.nnz() * bcol.nnz());
                for (r1, x) in acol.iter() {
                    for (r2, y) in bcol.iter() {
                        let v = x.mul(y);
                        e.push((r1 * bc + r2, if sign_odd { v.neg() } else { v }));
                    }
                }
                // rows r1*bc + r2 are already increasing
                cols.push(SparseVec::from_sorted(e));
            }
        }
        SOp {
            domain,
            codomain,
            parity: self.parity + b.parity,
            cols,
        }
    }

    /// Inverse of a square operator, or `None` when singular.
    pub fn inverse(&self) -> Option<SOp<F>> {
        let n = self.domain.dim();
        if self.codomain.dim() != n {
            return None;
        }
        // Gauss-Jordan on rows of [A | I]
        let mut rows: Vec<Vec<F>> = (0..n).map(|_| vec![F::zero(); 2 * n]).collect();
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col.iter() {
                rows[r][c] = v.clone();
            }
        }
        for (i, row) in rows.iter_mut().enumerate() {
            row[n + i] = F::one();
        }
        for c in 0..n {
            let p = (c..n)
                .filter(|&r| !rows[r][c].is_zero())
                .min_by_key(|&r| rows[r][c].weight())?;
            rows.swap(c, p);
            let inv = rows[c][c].inv();
            for x in rows[c].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
            let pivot = rows[c].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == c || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        let mut entries = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            for c in 0..n {
                if !row[n + c].is_zero() {
                    entries.push((r, c, row[n + c].clone()));
                }
            }
        }
        Some(
            SOp::from_entries(
                self.codomain.clone(),
                self.domain.clone(),
                self.parity,
                entries,
            )
            .expect("inverse of a homogeneous operator is homogeneous"),
        )
    }

    /// Restriction to a subspace spanned by basis positions `dom` (domain) and
    /// compression onto positions `cod` (codomain).
    pub fn restrict(&self, dom: &[usize], cod: &[usize]) -> SOp<F> {
        let sub = |s: &SuperSpace, idx: &[usize]| {
            SuperSpace::new(
                idx.iter().map(|&i| s.label(i).clone()).collect(),
                idx.iter().map(|&i| s.parity(i)).collect(),
            )
        };
        let mut back = vec![usize::MAX; self.codomain.dim()];
        for (k, &i) in cod.iter().enumerate() {
            back[i] = k;
        }
        let cols = dom
            .iter()
            .map(|&c| {
                self.cols[c].reindex(|r| (back[r] != usize::MAX).then_some(back[r]))
            })
            .collect();
        SOp {
            domain: sub(&self.domain, dom),
            codomain: sub(&self.codomain, cod),
            parity: self.parity,
            cols,
        }
    }

    /// Matrix written into the flat vector `row * dim(domain) + col`.
    pub fn flatten(&self) -> SparseVec<F> {
        let d = self.domain.dim();
        SparseVec::from_entries(
            self.cols
                .iter()
                .enumerate()
                .flat_map(|(c, col)| col.iter().map(move |(r, v)| (r * d + c, v.clone())))
                .collect(),
        )
    }

    pub fn unflatten(
        v: &SparseVec<F>,
        domain: Arc<SuperSpace>,
        codomain: Arc<SuperSpace>,
        parity: Parity,
    ) -> Result<SOp<F>, LinalgError> {
        let d = domain.dim();
        SOp::from_entries(
            domain,
            codomain,
            parity,
            v.iter().map(|(i, x)| (i / d, i % d, x.clone())),
        )
    }

    /// Entrywise scalar map (e.g. specialization), which may fail.
    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<SOp<G>, E> {
        let cols = self
            .cols
            .iter()
            .map(|c| c.map(&f))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(SOp {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            parity: self.parity,
            cols,
        })
    }

    /// Same matrix, relabeled spaces of equal dimension and parities.
    pub fn with_spaces(&self, domain: Arc<SuperSpace>, codomain: Arc<SuperSpace>) -> SOp<F> {
        assert_eq!(domain.parities(), self.domain.parities());
        assert_eq!(codomain.parities(), self.codomain.parities());
        SOp {
            domain,
            codomain,
            parity: self.parity,
            cols: self.cols.clone(),
        }
    }

    /// Transpose, as a map between the dual spaces (no signs).
    pub fn transpose(&self) -> SOp<F> {
        let mut buckets: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.codomain.dim()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col.iter() {
                buckets[r].push((c, v.clone()));
            }
        }
        SOp {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            parity: self.parity,
            cols: buckets.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    /// First basis column on which `self` and `o` differ.
    pub fn first_difference(&self, o: &SOp<F>) -> Option<usize> {
        self.check_same_shape(o);
        self.cols.iter().zip(&o.cols).position(|(a, b)| a != b)
    }
}

/// On-disk form of an operator. Entries are sorted by (row label, column label).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SOpRecord {
    pub domain: Vec<Label>,
    pub domain_parities: Vec<Parity>,
    pub codomain: Vec<Label>,
    pub codomain_parities: Vec<Parity>,
    pub parity: Parity,
    pub entries: Vec<(Label, Label, String)>,
}

impl SOp<RatFunc> {
    pub fn to_record(&self) -> SOpRecord {
        let mut entries: Vec<(Label, Label, String)> = self
            .triples()
            .into_iter()
            .map(|(r, c, v)| {
                (
                    self.codomain.label(r).clone(),
                    self.domain.label(c).clone(),
                    v.to_string(),
                )
            })
            .collect();
        entries.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        SOpRecord {
            domain: self.domain.labels().to_vec(),
            domain_parities: self.domain.parities().to_vec(),
            codomain: self.codomain.labels().to_vec(),
            codomain_parities: self.codomain.parities().to_vec(),
            parity: self.parity,
            entries,
        }
    }

    pub fn from_record(rec: &SOpRecord) -> Result<Self, LinalgError> {
        let domain = SuperSpace::new(rec.domain.clone(), rec.domain_parities.clone());
        let codomain = SuperSpace::new(rec.codomain.clone(), rec.codomain_parities.clone());
        let mut triples = Vec::with_capacity(rec.entries.len());
        for (r, c, v) in &rec.entries {
            let ri = codomain
                .position(r)
                .ok_or_else(|| LinalgError::UnknownLabel(r.to_string()))?;
            let ci = domain
                .position(c)
                .ok_or_else(|| LinalgError::UnknownLabel(c.to_string()))?;
            let x: RatFunc = v
                .parse()
                .map_err(|e: crate::scalars::ScalarError| LinalgError::Parse(e.to_string()))?;
            triples.push((ri, ci, x));
        }
        SOp::from_entries(domain, codomain, rec.parity, triples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinalg::space::SuperSpace;

    fn e(space: &Arc<SuperSpace>, r: i32, c: i32) -> SOp<RatFunc> {
        let ri = space.position(&Label::Atom(r)).unwrap();
        let ci = space.position(&Label::Atom(c)).unwrap();
        let p = space.parity(ri) + space.parity(ci);
        SOp::from_entries(space.clone(), space.clone(), p, [(ri, ci, RatFunc::one())]).unwrap()
    }

    #[test]
    fn odd_tensor_odd_sign() {
        let v = SuperSpace::vector(1);
        let a = e(&v, 1, -1);
        let b = e(&v, -1, 1);
        let t = a.graded_tensor(&b);
        let vv = tensor_pair(&v, &v);
        let col = vv.word_position(&[-1, 1]).unwrap();
        let row = vv.word_position(&[1, -1]).unwrap();
        assert_eq!(t.entry(row, col), RatFunc::from_int(-1));
        assert_eq!(t.nnz(), 1);
    }

    #[test]
    fn identity_tensor_identity() {
        let v = SuperSpace::vector(2);
        let id = SOp::<RatFunc>::identity(v.clone());
        let t = id.graded_tensor(&id);
        assert_eq!(t, SOp::identity(tensor_pair(&v, &v)));
    }

    #[test]
    fn parity_is_enforced() {
        let v = SuperSpace::vector(1);
        let bad = SOp::from_entries(v.clone(), v.clone(), Parity::Even, [(0, 1, RatFunc::one())]);
        assert!(matches!(bad, Err(LinalgError::ParityViolation { .. })));
    }

    #[test]
    fn inverse_roundtrip() {
        let v = SuperSpace::vector(2);
        let a = SOp::identity(v.clone())
            .add(&e(&v, 1, 2).scale(&RatFunc::q()))
            .add(&e(&v, -2, -2).scale(&RatFunc::xi()));
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv), SOp::identity(v.clone()));
        assert!(SOp::<RatFunc>::zero(v.clone(), v, Parity::Even).inverse().is_none());
    }

    #[test]
    fn record_roundtrip() {
        let v = SuperSpace::vector(2);
        let a = e(&v, -1, 2).scale(&RatFunc::xi());
        let rec = a.to_record();
        let json = serde_json::to_string(&rec).unwrap();
        let back: SOpRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(SOp::from_record(&back).unwrap(), a);
    }
}
