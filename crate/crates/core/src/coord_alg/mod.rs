//! The quantum coordinate superalgebra as matrix-coefficient functionals on
//! tensor powers of the vector module: products, exact equality through the
//! operator image, the three regular actions, graded components and the
//! zero weight map.

mod zero_weight;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use thiserror::Error;

use crate::report::VerifyReport;
use crate::scalars::{EqualityMode, RatFunc};
use crate::superlinalg::{index_set, parity_of, Echelon, Label, Parity, SOp, SparseVec, SuperSpace};
use crate::uq_queer::{
    antipode_images, check_defining_relations, gen_parity, s_matrix, tensor_rep, vector_rep, AlgebraSpec, GenWord, Param, QueerRep,
    UqError,
};

pub use zero_weight::{is_zero_weight_monomial, reversal_operator, zero_weight_iso, zw_map, ZeroWeightMap};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoordError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("cannot parse monomial {0:?}")]
    Parse(String),
    #[error("index {index} outside rank {rank}")]
    OutOfRange { index: i32, rank: usize },
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error(transparent)]
    Hc(#[from] crate::hecke_clifford::HcError),
}

/// `t[a1,b1]t[a2,b2]...`; the empty monomial is the counit `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordMonomial {
    pub rows: Vec<i32>,
    pub cols: Vec<i32>,
}

impl CoordMonomial {
    pub fn one() -> Self {
        CoordMonomial {
            rows: Vec::new(),
            cols: Vec::new(),
        }
    }

    pub fn t(a: i32, b: i32) -> Self {
        CoordMonomial {
            rows: vec![a],
            cols: vec![b],
        }
    }

    pub fn from_pairs(pairs: &[(i32, i32)]) -> Self {
        CoordMonomial {
            rows: pairs.iter().map(|p| p.0).collect(),
            cols: pairs.iter().map(|p| p.1).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    pub fn parity(&self) -> Parity {
        self.rows
            .iter()
            .chain(&self.cols)
            .fold(Parity::Even, |p, &i| p + parity_of(i))
    }

    /// Each factor rewritten with a positive column index via `t_ab = t_{-a,-b}`.
    pub fn normalized(&self) -> Self {
        let (rows, cols) = self
            .rows
            .iter()
            .zip(&self.cols)
            .map(|(&a, &b)| if b < 0 { (-a, -b) } else { (a, b) })
            .unzip();
        CoordMonomial { rows, cols }
    }

    pub fn concat(&self, o: &CoordMonomial) -> Self {
        let mut out = self.clone();
        out.rows.extend_from_slice(&o.rows);
        out.cols.extend_from_slice(&o.cols);
        out
    }

    /// Sign relating the monomial to the matrix coefficient of `V^{⊗l}`:
    /// `<t_{a1 b1}...t_{al bl}, x> = (-1)^{Σ_{i<j} |a_i|(|a_j|+|b_j|)} ρ(x)_{a,b}`.
    pub fn eval_sign_negative(&self) -> bool {
        let mut acc = 0u8;
        let mut tail = 0u8;
        for k in (0..self.degree()).rev() {
            acc ^= parity_of(self.rows[k]).bit() & tail;
            tail ^= parity_of(self.rows[k]).bit() ^ parity_of(self.cols[k]).bit();
        }
        acc == 1
    }
}

impl fmt::Display for CoordMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("1");
        }
        for (a, b) in self.rows.iter().zip(&self.cols) {
            write!(f, "t[{a},{b}]")?;
        }
        Ok(())
    }
}

impl FromStr for CoordMonomial {
    type Err = CoordError;
    fn from_str(s: &str) -> Result<Self, CoordError> {
        let bad = || CoordError::Parse(s.to_string());
        let s = s.trim();
        if s == "1" {
            return Ok(CoordMonomial::one());
        }
        let mut pairs = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest.strip_prefix("t[").ok_or_else(bad)?;
            let end = body.find(']').ok_or_else(bad)?;
            let (a, b) = body[..end].split_once(',').ok_or_else(bad)?;
            let a: i32 = a.trim().parse().map_err(|_| bad())?;
            let b: i32 = b.trim().parse().map_err(|_| bad())?;
            if a == 0 || b == 0 {
                return Err(bad());
            }
            pairs.push((a, b));
            rest = &body[end + 1..];
        }
        if pairs.is_empty() {
            return Err(bad());
        }
        Ok(CoordMonomial::from_pairs(&pairs))
    }
}

/// A linear combination of monomials of one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordFunctional {
    degree: usize,
    terms: BTreeMap<CoordMonomial, RatFunc>,
}

impl CoordFunctional {
    pub fn zero(degree: usize) -> Self {
        CoordFunctional {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The counit.
    pub fn one() -> Self {
        CoordFunctional::monomial(CoordMonomial::one())
    }

    pub fn monomial(m: CoordMonomial) -> Self {
        let degree = m.degree();
        CoordFunctional {
            degree,
            terms: BTreeMap::from([(m, RatFunc::one())]),
        }
    }

    pub fn t(a: i32, b: i32) -> Self {
        CoordFunctional::monomial(CoordMonomial::t(a, b))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<CoordMonomial, RatFunc> {
        &self.terms
    }

    /// Parity of a homogeneous functional (`Even` for zero).
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.terms.keys().map(CoordMonomial::parity);
        let first = ps.next().unwrap_or(Parity::Even);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn add_term(&mut self, m: CoordMonomial, c: &RatFunc) {
        assert_eq!(m.degree(), self.degree, "monomial degree");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(RatFunc::zero);
        *e = e.add(c);
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &CoordFunctional) -> Self {
        assert_eq!(self.degree, o.degree, "functional degrees");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = CoordFunctional::zero(self.degree);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &x.mul(c));
        }
        out
    }

    pub fn sub(&self, o: &CoordFunctional) -> Self {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    /// Product in the dual algebra. All Koszul signs of the convolution are
    /// carried by [`CoordMonomial::eval_sign_negative`], so on monomials the
    /// product is concatenation.
    pub fn product(&self, o: &CoordFunctional) -> Self {
        let mut out = CoordFunctional::zero(self.degree + o.degree);
        for (m, x) in &self.terms {
            for (n, y) in &o.terms {
                out.add_term(m.concat(n), &x.mul(y));
            }
        }
        out
    }

    /// Value on an operator of `V^{⊗l}` (`l` the degree).
    pub fn eval_on(&self, op: &SOp<RatFunc>) -> RatFunc {
        let space = op.domain();
        let mut acc = RatFunc::zero();
        for (m, c) in &self.terms {
            let r = space.word_position(&m.rows).expect("row word in basis");
            let col = space.word_position(&m.cols).expect("column word in basis");
            let x = op.entry(r, col);
            if x.is_zero() {
                continue;
            }
            let v = c.mul(&x);
            acc = if m.eval_sign_negative() { acc.sub(&v) } else { acc.add(&v) };
        }
        acc
    }
}

impl fmt::Display for CoordFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{m}")?;
        }
        Ok(())
    }
}

fn counit(w: &GenWord) -> RatFunc {
    w.terms()
        .iter()
        .filter(|(_, letters)| letters.iter().all(|(i, j)| i == j))
        .fold(RatFunc::zero(), |acc, (c, _)| acc.add(c))
}

/// Value of `f` on the algebra element `w`, through `V^{⊗l}` of rank `n`.
pub fn eval_functional(f: &CoordFunctional, w: &GenWord, n: usize, param: Param) -> RatFunc {
    if f.degree() == 0 {
        return f
            .terms()
            .values()
            .fold(RatFunc::zero(), |acc, c| acc.add(c))
            .mul(&counit(w));
    }
    let rep = tensor_rep(&vector_rep(n, param), f.degree());
    f.eval_on(&w.evaluate(&rep))
}

/// Which regular action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    /// Right multiplication, `<Φ_x f, y> = (-1)^{(|f|+|y|)|x|} <f, y x>`.
    Phi,
    /// Left multiplication through the antipode,
    /// `<Ψ_x f, y> = (-1)^{|f||x|} <f, S(x) y>`.
    Psi,
    /// Left multiplication through `σ` for `x` in the algebra with the
    /// opposite parameter, `<Ψ~_x f, y> = (-1)^{|x||f|} <f, σ(x) J^{|x|} y>`
    /// with `J` the parity involution (so the sign is `(-1)^{|x|}`).
    ///
    /// `σ` reverses products without a Koszul sign, so the unmodified sign
    /// `(-1)^{|x||f|}` (see [`Action::PsiTildeDisplay`]) is not a module
    /// action; the `J` factor repairs it, as in `sigma_twist`.
    PsiTilde,
    /// `<f, σ(x) y>` with the sign `(-1)^{|x||f|}` and no `J`: supercommutes
    /// with `Φ` but fails the relations on odd products.
    PsiTildeDisplay,
}

impl Action {
    pub fn name(self) -> &'static str {
        match self {
            Action::Phi => "Phi",
            Action::Psi => "Psi",
            Action::PsiTilde => "PsiTilde",
            Action::PsiTildeDisplay => "PsiTildeDisplay",
        }
    }
}

/// Span of the images of all generator words on `V^{⊗l}` (rank `n`), with
/// the data needed to evaluate and act on degree-`l` functionals.
#[derive(Debug)]
pub struct OperatorImageBasis {
    pub n: usize,
    pub l: usize,
    pub param: Param,
    pub restriction: Restriction,
    rep: QueerRep,
    basis: Vec<SOp<RatFunc>>,
    // (row, col) -> [(basis index, entry)]
    entries: HashMap<(usize, usize), Vec<(usize, RatFunc)>>,
    antipode: OnceLock<BTreeMap<(i32, i32), SOp<RatFunc>>>,
}

/// Which block of `End(V^{⊗l})` an image basis keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    Full,
    /// Rows indexed by words in `I_{k|k}`; closed under right multiplication.
    Rows(usize),
    /// Columns indexed by words in `I_{k|k}`; closed under left multiplication.
    Cols(usize),
}

/// Fixpoint of left multiplication by generators, starting from the
/// identity; deterministic order.
pub fn operator_image_basis(n: usize, l: usize, param: Param) -> OperatorImageBasis {
    restricted_image_basis(n, l, param, Restriction::Full)
}

/// Image basis cut down to a row or column block. Entries outside the block
/// are dropped, so only functionals supported on the block can be evaluated.
pub fn restricted_image_basis(
    n: usize,
    l: usize,
    param: Param,
    restriction: Restriction,
) -> OperatorImageBasis {
    assert!(l >= 1, "operator images need degree >= 1");
    let rep = tensor_rep(&vector_rep(n, param), l);
    let gens: Vec<&SOp<RatFunc>> = rep.gens().values().collect();
    let d = rep.dim();
    let space = rep.space().clone();
    let seed = match restriction {
        Restriction::Full => SOp::identity(space.clone()),
        Restriction::Rows(k) | Restriction::Cols(k) => {
            let keep = (0..d).filter(|&p| word_in_rank(space.label(p), k));
            let entries = keep.map(|p| (p, p, RatFunc::one()));
            SOp::from_entries(space.clone(), space.clone(), Parity::Even, entries)
                .expect("projection")
        }
    };
    let mut ech = Echelon::new(d * d);
    let mut basis = Vec::new();
    let mut queue = VecDeque::new();
    ech.insert(&seed.flatten());
    basis.push(seed.clone());
    queue.push_back(seed);
    while let Some(b) = queue.pop_front() {
        for g in &gens {
            let x = match restriction {
                Restriction::Rows(_) => b.compose(g),
                _ => g.compose(&b),
            };
            if !x.is_zero() && ech.insert(&x.flatten()).is_some() {
                basis.push(x.clone());
                queue.push_back(x);
            }
        }
    }
    let mut entries: HashMap<(usize, usize), Vec<(usize, RatFunc)>> = HashMap::new();
    for (k, op) in basis.iter().enumerate() {
        for (r, c, x) in op.triples() {
            entries.entry((r, c)).or_default().push((k, x));
        }
    }
    OperatorImageBasis {
        n,
        l,
        param,
        restriction,
        rep,
        basis,
        entries,
        antipode: OnceLock::new(),
    }
}

fn word_in_rank(label: &Label, k: usize) -> bool {
    match label {
        Label::Word(w) => w.iter().all(|a| a.unsigned_abs() as usize <= k),
        Label::Atom(a) => a.unsigned_abs() as usize <= k,
        _ => false,
    }
}

impl OperatorImageBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SOp<RatFunc>] {
        &self.basis
    }

    /// The module `V^{⊗l}` the functionals are evaluated on.
    pub fn rep(&self) -> &QueerRep {
        &self.rep
    }

    fn space(&self) -> &Arc<SuperSpace> {
        self.rep.space()
    }

    /// Values of `f` on the basis.
    pub fn eval_vector(&self, f: &CoordFunctional) -> SparseVec<RatFunc> {
        assert_eq!(f.degree(), self.l, "functional degree");
        let mut acc: BTreeMap<usize, RatFunc> = BTreeMap::new();
        for (m, c) in f.terms() {
            match self.restriction {
                Restriction::Full => {}
                Restriction::Rows(k) => assert!(
                    m.rows.iter().all(|a| a.unsigned_abs() as usize <= k),
                    "{m} outside the row block"
                ),
                Restriction::Cols(k) => assert!(
                    m.cols.iter().all(|a| a.unsigned_abs() as usize <= k),
                    "{m} outside the column block"
                ),
            }
            let r = self.pos(&m.rows);
            let col = self.pos(&m.cols);
            let Some(list) = self.entries.get(&(r, col)) else {
                continue;
            };
            let c = if m.eval_sign_negative() { c.neg() } else { c.clone() };
            for (k, x) in list {
                let e = acc.entry(*k).or_insert_with(RatFunc::zero);
                *e = e.add(&c.mul(x));
            }
        }
        SparseVec::from_entries(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect())
    }

    fn pos(&self, w: &[i32]) -> usize {
        self.space()
            .word_position(w)
            .unwrap_or_else(|| panic!("word {w:?} outside rank {}", self.n))
    }

    fn word(&self, p: usize) -> Vec<i32> {
        match self.space().label(p) {
            Label::Word(w) => w.clone(),
            Label::Atom(a) => vec![*a],
            other => panic!("unexpected label {other}"),
        }
    }

    fn antipode(&self) -> &BTreeMap<(i32, i32), SOp<RatFunc>> {
        self.antipode
            .get_or_init(|| antipode_images(&self.rep).expect("tensor powers are invertible"))
    }

    /// Generator action on a functional.
    ///
    /// # Panics
    /// When `i > j`, an index exceeds the rank, or the degrees differ.
    pub fn act_gen(&self, which: Action, i: i32, j: i32, f: &CoordFunctional) -> CoordFunctional {
        assert_eq!(f.degree(), self.l, "functional degree");
        let xp = gen_parity(i, j);
        let mut out = CoordFunctional::zero(self.l);
        match which {
            Action::Phi => {
                // <f, y x>: column word b goes to every c with x_{c b} != 0
                let x = self.rep.gen(i, j);
                for (m, c) in f.terms() {
                    let s = m.eval_sign_negative() ^ xp.is_odd();
                    for (r, v) in x.col(self.pos(&m.cols)).iter() {
                        let nm = CoordMonomial {
                            rows: m.rows.clone(),
                            cols: self.word(r),
                        };
                        let neg = s ^ nm.eval_sign_negative();
                        let v = c.mul(v);
                        out.add_term(nm, &if neg { v.neg() } else { v });
                    }
                }
            }
            Action::Psi | Action::PsiTilde | Action::PsiTildeDisplay => {
                // <f, A y>: row word a goes to every c with A_{a c} != 0
                let (a_op, sign_neg) = match which {
                    Action::Psi => (self.antipode()[&(i, j)].clone(), false),
                    _ => {
                        let neg = (i < 0 && j < 0) ^ (j < 0);
                        (self.rep.gen(-j, -i).clone(), neg)
                    }
                };
                let at = a_op.transpose();
                for (m, c) in f.terms() {
                    let koszul = match which {
                        Action::PsiTilde => xp.is_odd(),
                        _ => xp.is_odd() && m.parity().is_odd(),
                    };
                    let s = m.eval_sign_negative() ^ sign_neg ^ koszul;
                    for (col, v) in at.col(self.pos(&m.rows)).iter() {
                        let nm = CoordMonomial {
                            rows: self.word(col),
                            cols: m.cols.clone(),
                        };
                        let neg = s ^ nm.eval_sign_negative();
                        let v = c.mul(v);
                        out.add_term(nm, &if neg { v.neg() } else { v });
                    }
                }
            }
        }
        out
    }
}

/// `x` acting on `f`; words act letter by letter (rightmost first).
pub fn act(
    which: Action,
    x: &GenWord,
    f: &CoordFunctional,
    ctx: &OperatorImageBasis,
) -> CoordFunctional {
    let mut out = CoordFunctional::zero(f.degree());
    for (c, letters) in x.terms() {
        let mut g = f.clone();
        for &(i, j) in letters.iter().rev() {
            g = ctx.act_gen(which, i, j, &g);
        }
        out = out.add(&g.scale(c));
    }
    out
}

/// Exact equality in the coordinate algebra: `f - g` vanishes on the image.
pub fn functional_equal(
    f: &CoordFunctional,
    g: &CoordFunctional,
    basis: &OperatorImageBasis,
) -> Result<bool, CoordError> {
    if f.degree() != g.degree() {
        return Err(CoordError::DegreeMismatch {
            left: f.degree(),
            right: g.degree(),
        });
    }
    if f.degree() == 0 {
        return Ok(f == g);
    }
    if f.degree() != basis.l {
        return Err(CoordError::DegreeMismatch {
            left: f.degree(),
            right: basis.l,
        });
    }
    Ok(basis.eval_vector(&f.sub(g)).is_zero())
}

/// Degree-`l` piece of the coordinate algebra for the pair of ranks `(n, m)`.
#[derive(Debug)]
pub struct GradedComponent {
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub param: Param,
    /// Independent normalized monomials, a basis of the component.
    pub monomials: Vec<CoordMonomial>,
    image: Option<OperatorImageBasis>,
    echelon: Echelon<RatFunc>,
}

/// Normalized spanning monomials: rows in `I_{n|n}`, columns
/// `1 <= b_1 <= ... <= b_l <= m`.
pub fn spanning_monomials(n: usize, m: usize, l: usize) -> Vec<CoordMonomial> {
    let idx = index_set(n);
    let mut cols: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..l {
        cols = cols
            .into_iter()
            .flat_map(|c| {
                let lo = c.last().copied().unwrap_or(1);
                (lo..=m as i32).map(move |b| {
                    let mut c = c.clone();
                    c.push(b);
                    c
                })
            })
            .collect();
    }
    let mut rows: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..l {
        rows = rows
            .into_iter()
            .flat_map(|r| {
                idx.iter().map(move |&a| {
                    let mut r = r.clone();
                    r.push(a);
                    r
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for c in &cols {
        for r in &rows {
            out.push(CoordMonomial {
                rows: r.clone(),
                cols: c.clone(),
            });
        }
    }
    out
}

/// Rank of the spanning monomials against the operator image of the rank
/// `max(n, m)` algebra, restricted to the block they can see.
pub fn graded_component(n: usize, m: usize, l: usize, param: Param) -> GradedComponent {
    if l == 0 {
        return GradedComponent {
            n,
            m,
            l,
            param,
            monomials: vec![CoordMonomial::one()],
            image: None,
            echelon: Echelon::with_tracking(0),
        };
    }
    let restriction = match n.cmp(&m) {
        std::cmp::Ordering::Less => Restriction::Rows(n),
        std::cmp::Ordering::Greater => Restriction::Cols(m),
        std::cmp::Ordering::Equal => Restriction::Full,
    };
    let image = restricted_image_basis(n.max(m), l, param, restriction);
    let mut echelon = Echelon::with_tracking(image.dim());
    let mut monomials = Vec::new();
    for mono in spanning_monomials(n, m, l) {
        let v = image.eval_vector(&CoordFunctional::monomial(mono.clone()));
        if echelon.contains(&v) {
            continue;
        }
        echelon.insert(&v);
        monomials.push(mono);
    }
    GradedComponent {
        n,
        m,
        l,
        param,
        monomials,
        image: Some(image),
        echelon,
    }
}

impl GradedComponent {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn image(&self) -> Option<&OperatorImageBasis> {
        self.image.as_ref()
    }

    /// Coordinates of `f` on [`GradedComponent::monomials`], if `f` lies in
    /// the component.
    pub fn coordinates(&self, f: &CoordFunctional) -> Option<SparseVec<RatFunc>> {
        match &self.image {
            None => {
                let c = f.terms().get(&CoordMonomial::one()).cloned().unwrap_or_else(RatFunc::zero);
                Some(SparseVec::from_entries(vec![(0, c)]))
            }
            Some(img) => self.echelon.express(&img.eval_vector(f)),
        }
    }

    pub fn space(&self) -> Arc<SuperSpace> {
        SuperSpace::new(
            self.monomials
                .iter()
                .map(|m| Label::Named(m.to_string()))
                .collect(),
            self.monomials.iter().map(CoordMonomial::parity).collect(),
        )
    }

    /// The action as a representation on the component: `Φ` of the rank-`m`
    /// algebra, `Ψ` of the rank-`n` algebra, `Ψ~` of the rank-`n` algebra
    /// with the opposite parameter.
    pub fn action_rep(&self, which: Action) -> Result<QueerRep, CoordError> {
        let img = self
            .image
            .as_ref()
            .ok_or(CoordError::DegreeMismatch { left: 0, right: 1 })?;
        let spec = match which {
            Action::Phi => AlgebraSpec::new(self.m, self.param),
            Action::Psi => AlgebraSpec::new(self.n, self.param),
            Action::PsiTilde | Action::PsiTildeDisplay => {
                AlgebraSpec::new(self.n, self.param.opposite())
            }
        };
        let space = self.space();
        let mut gens = BTreeMap::new();
        for (i, j) in spec.generators() {
            let cols = self
                .monomials
                .iter()
                .map(|mono| {
                    let g = img.act_gen(which, i, j, &CoordFunctional::monomial(mono.clone()));
                    self.coordinates(&g).ok_or_else(|| {
                        UqError::InvalidRep(format!(
                            "{}(L[{i},{j}]) leaves the component at {mono}",
                            which.name()
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            gens.insert((i, j), SOp::from_columns(space.clone(), space.clone(), gen_parity(i, j), cols));
        }
        Ok(QueerRep::new(spec, space, gens)?)
    }
}

/// Entry functionals of both sides of `S^{12} T^{13} T^{23} = T^{23} T^{13} S^{12}`
/// at row pair `(a1, a2)` and column pair `(b1, b2)`.
pub fn qca2_entry(
    n: usize,
    s: &SOp<RatFunc>,
    a: (i32, i32),
    b: (i32, i32),
) -> (CoordFunctional, CoordFunctional) {
    let space = s.domain();
    let idx = index_set(n);
    let pos = |x: i32, y: i32| space.word_position(&[x, y]).expect("pair in basis");
    let p = |i: i32| parity_of(i).bit();
    // (T13 T23)_{(c1 c2),(d1 d2)} = (-1)^{|c1|(|c2|+|d2|)} t_{c1 d1} t_{c2 d2}
    let t13t23 = |c: (i32, i32), d: (i32, i32)| {
        let f = CoordFunctional::monomial(CoordMonomial::from_pairs(&[(c.0, d.0), (c.1, d.1)]));
        if p(c.0) & (p(c.1) ^ p(d.1)) == 1 { f.scale(&RatFunc::from_int(-1)) } else { f }
    };
    // (T23 T13)_{(c1 c2),(d1 d2)} = (-1)^{(|c2|+|d2|)|d1|} t_{c2 d2} t_{c1 d1}
    let t23t13 = |c: (i32, i32), d: (i32, i32)| {
        let f = CoordFunctional::monomial(CoordMonomial::from_pairs(&[(c.1, d.1), (c.0, d.0)]));
        if (p(c.1) ^ p(d.1)) & p(d.0) == 1 { f.scale(&RatFunc::from_int(-1)) } else { f }
    };
    let mut lhs = CoordFunctional::zero(2);
    let mut rhs = CoordFunctional::zero(2);
    for &c1 in &idx {
        for &c2 in &idx {
            let sl = s.entry(pos(a.0, a.1), pos(c1, c2));
            if !sl.is_zero() {
                lhs = lhs.add(&t13t23((c1, c2), b).scale(&sl));
            }
            let sr = s.entry(pos(c1, c2), pos(b.0, b.1));
            if !sr.is_zero() {
                rhs = rhs.add(&t23t13(a, (c1, c2)).scale(&sr));
            }
        }
    }
    (lhs, rhs)
}

/// Coordinate-algebra suite: (QCA1) on degree one, every (QCA2) entry on
/// degree two, graded dimensions up to `degree`, the regular actions on
/// degree one, and the zero weight map when `n = m`.
pub fn coord_report(n: usize, m: usize, degree: usize, param: Param) -> Result<VerifyReport, CoordError> {
    let start = Instant::now();
    let mut report = VerifyReport::new("coord");
    report
        .param("n", n)
        .param("m", m)
        .param("degree", degree)
        .param("param", param.name());
    let big = n.max(m);
    let idx = index_set(big);
    let b1 = operator_image_basis(big, 1, param);
    let mut bad = None;
    'qca1: for &a in &idx {
        for &c in &idx {
            if !functional_equal(&CoordFunctional::t(a, c), &CoordFunctional::t(-a, -c), &b1)? {
                bad = Some(format!("t[{a},{c}]"));
                break 'qca1;
            }
        }
    }
    report.check_with("(QCA1) t_ac = t_{-a,-c}", bad);
    let b2 = operator_image_basis(big, 2, param);
    let s = s_matrix(big, param);
    let mut bad = None;
    let mut count = 0;
    for &a1 in &idx {
        for &a2 in &idx {
            for &c1 in &idx {
                for &c2 in &idx {
                    let (l, r) = qca2_entry(big, &s, (a1, a2), (c1, c2));
                    count += 1;
                    if bad.is_none() && !functional_equal(&l, &r, &b2)? {
                        bad = Some(format!("rows ({a1},{a2}) cols ({c1},{c2})"));
                    }
                }
            }
        }
    }
    report.check_with("(QCA2) all entries", bad).value(count);
    for l in 0..=degree {
        let g = graded_component(n, m, l, param);
        report.derive(format!("dim.l{l}"), g.dim());
        report.derive(
            format!("monomials.l{l}"),
            g.monomials.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        );
        if l == 1 {
            for which in [Action::Phi, Action::Psi, Action::PsiTilde] {
                let rep = g.action_rep(which)?;
                let r = check_defining_relations(&rep, EqualityMode::Exact);
                report.check_with(
                    format!("{} on degree 1 is a representation", which.name()),
                    r.failures().next().map(|c| c.name.clone()),
                );
            }
        }
    }
    if n == m {
        report.absorb("zero weight: ", zero_weight_iso(n, m, param)?);
    }
    report.finish(start);
    Ok(report)
}

#[cfg(test)]
mod tests;
