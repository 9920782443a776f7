//! The Hecke–Clifford superalgebra: its action on tensor powers of the vector
//! module, braid operators on weight modules, and the action on zero weight
//! spaces.

use std::sync::Arc;
use std::time::Instant;

use num_rational::BigRational;
use thiserror::Error;

use crate::report::VerifyReport;
use crate::scalars::{q_number, Field, RatFunc, ScalarError};
use crate::superlinalg::{parity_of, tensor_space, Label, Parity, SOp, SuperSpace, Weight};
use crate::uq_queer::{chevalley_ops, phi, weight_spaces, Param, QueerRep, UqError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HcError {
    #[error("zero weight space (1,...,1) is empty")]
    EmptyZeroWeight,
    #[error("braid operator index {a} out of range for rank {rank}")]
    BadIndex { a: usize, rank: usize },
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error("{0}: {1}")]
    Pole(String, ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HcSpec {
    pub m: usize,
    pub param: Param,
}

/// Operators `T_1..T_{m-1}` (even) and `C_1..C_m` (odd) on a space.
///
/// `q` is the value of the Hecke parameter and `clifford_square` the scalar
/// `C_b^2` is expected to equal.
#[derive(Debug, Clone)]
pub struct HcAction<F: Field = RatFunc> {
    pub spec: HcSpec,
    pub space: Arc<SuperSpace>,
    pub t: Vec<SOp<F>>,
    pub c: Vec<SOp<F>>,
    pub q: F,
    pub clifford_square: i64,
}

impl<F: Field> HcAction<F> {
    /// All generators, `T`s first.
    pub fn generators(&self) -> Vec<(String, &SOp<F>)> {
        let ts = self.t.iter().enumerate().map(|(a, op)| (format!("T{}", a + 1), op));
        let cs = self.c.iter().enumerate().map(|(b, op)| (format!("C{}", b + 1), op));
        ts.chain(cs).collect()
    }

    /// Same operators with the parameter taken as `q` (used to test which
    /// parameter a family satisfies).
    pub fn with_q(&self, q: F, param: Param) -> Self {
        let mut out = self.clone();
        out.q = q;
        out.spec.param = param;
        out
    }
}

impl HcAction<RatFunc> {
    pub fn specialize(&self, c: &BigRational) -> Result<HcAction<BigRational>, HcError> {
        let spec_ops = |name: &str, ops: &[SOp<RatFunc>]| {
            ops.iter()
                .enumerate()
                .map(|(k, op)| {
                    op.try_map(|x| x.specialize(c))
                        .map_err(|e| HcError::Pole(format!("{name}{}", k + 1), e))
                })
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(HcAction {
            spec: self.spec,
            space: self.space.clone(),
            t: spec_ops("T", &self.t)?,
            c: spec_ops("C", &self.c)?,
            q: self
                .q
                .specialize(c)
                .map_err(|e| HcError::Pole("q".into(), e))?,
            clifford_square: self.clifford_square,
        })
    }
}

fn sign<F: Field>(negative: bool) -> F {
    if negative {
        F::one().neg()
    } else {
        F::one()
    }
}

fn odd(i: i32) -> bool {
    parity_of(i).is_odd()
}

/// `T_a` and `C_b` on `V^{⊗m}` (rank `n`), transcribed from the defining
/// action on basis words. `C_b^2 = -1` for this action.
pub fn hc_tensor_action(n: usize, m: usize, param: Param) -> HcAction {
    let space = tensor_space(&SuperSpace::vector(n), m);
    let q = param.q();
    let xi = param.xi();
    let words: Vec<Vec<i32>> = space
        .labels()
        .iter()
        .map(|l| match l {
            Label::Word(w) => w.clone(),
            Label::Atom(a) => vec![*a],
            other => panic!("unexpected label {other}"),
        })
        .collect();
    let pos = |w: &[i32]| space.word_position(w).expect("word in basis");
    let mut t = Vec::new();
    for a in 0..m.saturating_sub(1) {
        let mut entries = Vec::new();
        for (c, w) in words.iter().enumerate() {
            let (x, y) = (w[a], w[a + 1]);
            let mut sw = w.clone();
            sw.swap(a, a + 1);
            let coef = q
                .pow(phi(x, y))
                .mul(&sign(odd(x) && odd(y)));
            entries.push((pos(&sw), c, coef));
            if x < y {
                entries.push((c, c, xi.clone()));
            }
            if -x < y {
                let mut fl = w.clone();
                fl[a] = -x;
                fl[a + 1] = -y;
                entries.push((pos(&fl), c, xi.mul(&sign(odd(y)))));
            }
        }
        t.push(SOp::from_entries(space.clone(), space.clone(), Parity::Even, entries)
            .expect("T_a is even"));
    }
    let mut cl = Vec::new();
    for b in 0..m {
        let entries = words.iter().enumerate().map(|(c, w)| {
            let negative = w[..=b].iter().filter(|&&i| odd(i)).count() % 2 == 1;
            let mut fl = w.clone();
            fl[b] = -fl[b];
            (pos(&fl), c, sign(negative))
        });
        cl.push(SOp::from_entries(space.clone(), space.clone(), Parity::Odd, entries)
            .expect("C_b is odd"));
    }
    HcAction {
        spec: HcSpec { m, param },
        space,
        t,
        c: cl,
        q,
        clifford_square: -1,
    }
}

/// Divided powers `x^{(j)} = x^j / [j]!` until they vanish.
fn divided_powers(x: &SOp<RatFunc>) -> Vec<SOp<RatFunc>> {
    let mut out = vec![SOp::identity(x.domain().clone())];
    let mut pow = SOp::identity(x.domain().clone());
    for j in 1.. {
        pow = x.compose(&pow);
        if pow.is_zero() {
            break;
        }
        // [j] is symmetric under q <-> q^{-1}, so either parameter gives the same
        out.push(pow.scale(&q_number(j, true).inv()));
    }
    out
}

/// Braid operator
/// `T_a = Σ_{i,j,k≥0} (-1)^j q^{k(k-j) - i(i-j+k) + j - 1} e_a^{(i)} f_a^{(j)} e_a^{(k)} k_a^{k-i} k_{a+1}^{i-k}`
/// (1-based `a`), with `q` the algebra parameter of `rep`.
pub fn braid_operator(rep: &QueerRep, a: usize) -> Result<SOp<RatFunc>, HcError> {
    let rank = rep.rank();
    if a == 0 || a >= rank {
        return Err(HcError::BadIndex { a, rank });
    }
    let ops = chevalley_ops(rep);
    let param = rep.param();
    let e = divided_powers(&ops.e[a - 1]);
    let f = divided_powers(&ops.f[a - 1]);
    let (ka, ka_inv) = (&ops.k[a - 1], &ops.k_inv[a - 1]);
    let (kb, kb_inv) = (&ops.k[a], &ops.k_inv[a]);
    let kpow = |k: &SOp<RatFunc>, kinv: &SOp<RatFunc>, p: i64| {
        let base = if p < 0 { kinv } else { k };
        (0..p.unsigned_abs()).fold(SOp::identity(rep.space().clone()), |acc, _| acc.compose(base))
    };
    let mut total = SOp::zero(rep.space().clone(), rep.space().clone(), Parity::Even);
    for (i, ei) in e.iter().enumerate() {
        for (j, fj) in f.iter().enumerate() {
            let left = ei.compose(fj);
            if left.is_zero() {
                continue;
            }
            for (k, ek) in e.iter().enumerate() {
                let (i, j, k) = (i as i64, j as i64, k as i64);
                let middle = left.compose(ek);
                if middle.is_zero() {
                    continue;
                }
                let cartan = kpow(ka, ka_inv, k - i).compose(&kpow(kb, kb_inv, i - k));
                let exp = k * (k - j) - i * (i - j + k) + j - 1;
                let coef = param.q_pow(exp).mul(&sign(j % 2 == 1));
                total = total.add(&middle.compose(&cartan).scale(&coef));
            }
        }
    }
    Ok(total)
}

/// Basis positions of the zero weight space `(1, ..., 1)`.
pub fn zero_weight_block(rep: &QueerRep) -> Result<Vec<usize>, HcError> {
    let spaces = weight_spaces(rep)?;
    spaces
        .get(&Weight(vec![1; rep.rank()]))
        .cloned()
        .ok_or(HcError::EmptyZeroWeight)
}

/// Braid operators and `C_b = kbar_b` restricted to the zero weight space,
/// as an action of the Hecke–Clifford algebra with the opposite parameter.
pub fn zero_weight_hc(rep: &QueerRep) -> Result<HcAction, HcError> {
    let block = zero_weight_block(rep)?;
    let sub = SuperSpace::new(
        block.iter().map(|&c| rep.space().label(c).clone()).collect(),
        block.iter().map(|&c| rep.space().parity(c)).collect(),
    );
    let restrict = |op: &SOp<RatFunc>| {
        op.restrict(&block, &block).with_spaces(sub.clone(), sub.clone())
    };
    let m = rep.rank();
    let t = (1..m)
        .map(|a| braid_operator(rep, a).map(|op| restrict(&op)))
        .collect::<Result<Vec<_>, _>>()?;
    let c = chevalley_ops(rep).kbar.iter().map(restrict).collect();
    let param = rep.param().opposite();
    Ok(HcAction {
        spec: HcSpec { m, param },
        space: sub,
        t,
        c,
        q: param.q(),
        clifford_square: 1,
    })
}

fn witness<F: Field>(lhs: &SOp<F>, rhs: &SOp<F>, what: String) -> Option<String> {
    lhs.first_difference(rhs)
        .map(|c| format!("{what} at v{}", lhs.domain().label(c)))
}

fn first(list: Vec<String>) -> Option<String> {
    match list.len() {
        0 => None,
        1 => Some(list[0].clone()),
        k => Some(format!("{} (+{} more)", list[0], k - 1)),
    }
}

/// Checks the seven relation families on `action`:
/// HC1 `(T_a - q)(T_a + q^{-1}) = 0`, HC2 braid, HC3 far commutation,
/// HC4 `C_a^2 = clifford_square`, HC5 `C_a C_b = -C_b C_a`,
/// HC6 `T_a C_a = C_{a+1} T_a`, HC7 `T_a C_b = C_b T_a` for `b ≠ a, a+1`.
pub fn hc_check<F: Field>(action: &HcAction<F>) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("hc");
    report
        .param("m", action.spec.m)
        .param("param", action.spec.param.name())
        .param("dim", action.space.dim())
        .param("clifford_square", action.clifford_square);
    let id = SOp::<F>::identity(action.space.clone());
    let zero = SOp::<F>::zero(action.space.clone(), action.space.clone(), Parity::Even);
    let q = &action.q;
    let (t, c) = (&action.t, &action.c);
    let mut hc = vec![Vec::new(); 7];
    for (a, ta) in t.iter().enumerate() {
        let lhs = ta.sub(&id.scale(q)).compose(&ta.add(&id.scale(&q.inv())));
        hc[0].extend(witness(&lhs, &zero, format!("a={}", a + 1)));
        if a + 1 < t.len() {
            let tb = &t[a + 1];
            hc[1].extend(witness(
                &ta.compose(tb).compose(ta),
                &tb.compose(ta).compose(tb),
                format!("a={}", a + 1),
            ));
        }
        for (b, tb) in t.iter().enumerate() {
            if b > a + 1 {
                hc[2].extend(witness(
                    &ta.compose(tb),
                    &tb.compose(ta),
                    format!("a={},b={}", a + 1, b + 1),
                ));
            }
        }
        hc[5].extend(witness(
            &ta.compose(&c[a]),
            &c[a + 1].compose(ta),
            format!("a={}", a + 1),
        ));
        for (b, cb) in c.iter().enumerate() {
            if b != a && b != a + 1 {
                hc[6].extend(witness(
                    &ta.compose(cb),
                    &cb.compose(ta),
                    format!("a={},b={}", a + 1, b + 1),
                ));
            }
        }
    }
    let sq = id.scale(&F::from_i64(action.clifford_square));
    for (a, ca) in c.iter().enumerate() {
        hc[3].extend(witness(&ca.compose(ca), &sq, format!("a={}", a + 1)));
        for (b, cb) in c.iter().enumerate() {
            if a < b {
                hc[4].extend(witness(
                    &ca.compose(cb),
                    &cb.compose(ca).neg(),
                    format!("a={},b={}", a + 1, b + 1),
                ));
            }
        }
    }
    let names = [
        "HC1 (T_a - q)(T_a + q^-1) = 0",
        "HC2 T_a T_a+1 T_a = T_a+1 T_a T_a+1",
        "HC3 T_a T_b = T_b T_a (|a-b| > 1)",
        "HC4 C_a^2 = clifford_square",
        "HC5 C_a C_b = -C_b C_a",
        "HC6 T_a C_a = C_a+1 T_a",
        "HC7 T_a C_b = C_b T_a (b != a, a+1)",
    ];
    for (name, fails) in names.iter().zip(hc) {
        report.check_with(*name, first(fails));
    }
    report.finish(start);
    report
}
