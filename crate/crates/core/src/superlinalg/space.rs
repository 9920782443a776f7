use std::collections::HashMap;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// Z/2 degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Self {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Koszul sign `(-1)^{|self| |other|}` as +1 / -1.
    pub fn koszul(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ o.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// An element of `I_{n|n} = {-n, ..., -1, 1, ..., n}`; negative indices are odd.
/// The derived order is the total order `-n < ... < -1 < 1 < ... < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SIndex(i32);

impl SIndex {
    /// # Panics
    /// On zero.
    pub fn new(v: i32) -> Self {
        assert!(v != 0, "0 is not in I_{{n|n}}");
        SIndex(v)
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn parity(self) -> Parity {
        parity_of(self.0)
    }

    pub fn neg(self) -> Self {
        SIndex(-self.0)
    }

    pub fn abs(self) -> usize {
        self.0.unsigned_abs() as usize
    }
}

/// Parity of an index of `I_{n|n}`.
pub fn parity_of(i: i32) -> Parity {
    if i > 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// The index set `I_{n|n}` in increasing order.
pub fn index_set(n: usize) -> Vec<i32> {
    let n = n as i32;
    (-n..=-1).chain(1..=n).collect()
}

/// Basis label of a [`SuperSpace`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    Atom(i32),
    Word(Vec<i32>),
    Named(String),
    Dual(Box<Label>),
}

impl Label {
    fn letters(&self) -> Option<Vec<i32>> {
        match self {
            Label::Atom(a) => Some(vec![*a]),
            Label::Word(w) => Some(w.clone()),
            _ => None,
        }
    }

    /// Label of a tensor product basis vector.
    pub fn tensor(&self, other: &Label) -> Label {
        match (self.letters(), other.letters()) {
            (Some(mut a), Some(b)) => {
                a.extend(b);
                Label::Word(a)
            }
            _ => Label::Named(format!("{self}*{other}")),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(a) => write!(f, "{a}"),
            Label::Word(w) => {
                write!(f, "(")?;
                for (i, a) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            Label::Named(s) => f.write_str(s),
            Label::Dual(l) => write!(f, "{l}^*"),
        }
    }
}

/// A finite-dimensional superspace with an ordered, labeled, homogeneous basis.
#[derive(Debug, Clone)]
pub struct SuperSpace {
    labels: Vec<Label>,
    parities: Vec<Parity>,
    index: HashMap<Label, usize>,
}

impl PartialEq for SuperSpace {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.parities == other.parities
    }
}

impl SuperSpace {
    /// # Panics
    /// On duplicate labels or mismatched lengths.
    pub fn new(labels: Vec<Label>, parities: Vec<Parity>) -> Arc<Self> {
        assert_eq!(labels.len(), parities.len());
        let index: HashMap<Label, usize> =
            labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        assert_eq!(index.len(), labels.len(), "duplicate basis labels");
        Arc::new(SuperSpace {
            labels,
            parities,
            index,
        })
    }

    /// The vector superspace `C^{n|n}` with basis `v_i`, `i` in `I_{n|n}`.
    pub fn vector(n: usize) -> Arc<Self> {
        let idx = index_set(n);
        SuperSpace::new(
            idx.iter().map(|&i| Label::Atom(i)).collect(),
            idx.iter().map(|&i| parity_of(i)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// (even dimension, odd dimension)
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        (self.dim() - odd, odd)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn position(&self, l: &Label) -> Option<usize> {
        self.index.get(l).copied()
    }

    /// Position of the word label `w` (or atom when `w` has one letter).
    pub fn word_position(&self, w: &[i32]) -> Option<usize> {
        if w.len() == 1 {
            if let Some(p) = self.position(&Label::Atom(w[0])) {
                return Some(p);
            }
        }
        self.position(&Label::Word(w.to_vec()))
    }

    /// Dual superspace with labels `l^*` and the same parities.
    pub fn dual(&self) -> Arc<Self> {
        SuperSpace::new(
            self.labels.iter().map(|l| Label::Dual(Box::new(l.clone()))).collect(),
            self.parities.clone(),
        )
    }
}

/// `V ⊗ W` with basis ordered lexicographically by (position in V, position in W).
pub fn tensor_pair(v: &SuperSpace, w: &SuperSpace) -> Arc<SuperSpace> {
    let mut labels = Vec::with_capacity(v.dim() * w.dim());
    let mut parities = Vec::with_capacity(v.dim() * w.dim());
    for i in 0..v.dim() {
        for j in 0..w.dim() {
            labels.push(v.label(i).tensor(w.label(j)));
            parities.push(v.parity(i) + w.parity(j));
        }
    }
    SuperSpace::new(labels, parities)
}

/// `V^{⊗m}` with word labels; parity is additive.
///
/// # Panics
/// When `m == 0`.
pub fn tensor_space(v: &Arc<SuperSpace>, m: usize) -> Arc<SuperSpace> {
    assert!(m >= 1, "tensor power needs m >= 1");
    let mut acc = v.clone();
    for _ in 1..m {
        acc = tensor_pair(&acc, v);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_powers() {
        let v = SuperSpace::vector(2);
        assert_eq!(tensor_space(&v, 1).dim(), 4);
        let v2 = tensor_space(&v, 2);
        assert_eq!(v2.dim(), 16);
        let p = v2.word_position(&[1, -1]).unwrap();
        assert_eq!(v2.parity(p), Parity::Odd);
        assert_eq!(tensor_space(&SuperSpace::vector(3), 3).dim(), 216);
        assert_eq!(v2.sdim(), (8, 8));
    }

    #[test]
    fn index_order_and_parity() {
        assert_eq!(index_set(2), vec![-2, -1, 1, 2]);
        assert!(SIndex::new(-2) < SIndex::new(-1) && SIndex::new(-1) < SIndex::new(1));
        assert_eq!(SIndex::new(-1).parity(), Parity::Odd);
        assert_eq!(SIndex::new(1).neg().parity(), Parity::Odd);
    }
}
