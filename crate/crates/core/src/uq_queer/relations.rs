use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use num_rational::BigRational;

use super::{gen_name, gen_parity, QueerRep};
use crate::report::VerifyReport;
use crate::scalars::{sample_points, EqualityMode, Field};
use crate::superlinalg::{index_set, parity_of, tensor_pair, Label, Parity, SOp, SuperSpace};

type Gens<F> = BTreeMap<(i32, i32), SOp<F>>;

pub(crate) fn fpow<F: Field>(q: &F, k: i64) -> F {
    let base = if k < 0 { q.inv() } else { q.clone() };
    (0..k.unsigned_abs()).fold(F::one(), |acc, _| acc.mul(&base))
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

/// `θ(i,j,k) = (-1)^{|i||j| + |j||k| + |k||i|}`
fn theta_negative(i: i32, j: i32, k: i32) -> bool {
    ((odd(i) && odd(j)) ^ (odd(j) && odd(k))) ^ (odd(k) && odd(i))
}

/// Generator matrix `ρ(L_ij)` of the vector module, for any field and
/// parameter value `q`.
pub(crate) fn vector_gen_generic<F: Field>(v: &Arc<SuperSpace>, q: &F, i: i32, j: i32) -> SOp<F> {
    let pos = |a: i32| v.position(&Label::Atom(a)).expect("index in range");
    if i == j {
        let entries = index_set(v.dim() / 2)
            .into_iter()
            .map(|a| (pos(a), pos(a), fpow(q, super::vector::phi(a, j))));
        return SOp::from_entries(v.clone(), v.clone(), Parity::Even, entries)
            .expect("diagonal is even");
    }
    let xi = q.sub(&q.inv());
    let c = if odd(i) { xi.neg() } else { xi };
    let entries = [(pos(j), pos(i), c.clone()), (pos(-j), pos(-i), c)];
    SOp::from_entries(v.clone(), v.clone(), gen_parity(i, j), entries)
        .expect("S-slot is homogeneous")
}

/// Failing relation instances, each with a witness basis label.
#[derive(Debug, Clone, Default)]
pub struct RelationOutcome {
    pub unit_instances: usize,
    pub unit_failures: Vec<String>,
    pub quadratic_instances: usize,
    pub quadratic_failures: Vec<String>,
    pub matrix_failure: Option<String>,
}

fn witness<F: Field>(a: &SOp<F>, b: &SOp<F>) -> Option<String> {
    a.first_difference(b)
        .map(|c| format!("v{}", a.domain().label(c)))
}

/// Up to four differing basis vectors, for the small unit checks.
fn witnesses<F: Field>(a: &SOp<F>, b: &SOp<F>) -> Option<String> {
    let bad: Vec<String> = (0..a.domain().dim())
        .filter(|&c| a.col(c) != b.col(c))
        .map(|c| format!("v{}", a.domain().label(c)))
        .collect();
    match bad.len() {
        0 => None,
        k if k <= 4 => Some(bad.join(", ")),
        k => Some(format!("{} and {} more", bad[..4].join(", "), k - 4)),
    }
}

/// Checks the unit relations, every instance of the expanded quadratic
/// relation, and the matrix form `L12 L13 S23 = S23 L13 L12` on `M ⊗ V ⊗ V`.
pub fn relation_failures<F: Field>(n: usize, q: &F, gens: &Gens<F>) -> RelationOutcome {
    let mut out = RelationOutcome::default();
    let l = |i: i32, j: i32| &gens[&(i, j)];
    let space = l(1, 1).domain().clone();
    let id = SOp::identity(space.clone());
    for i in 1..=n as i32 {
        for (a, b) in [(i, -i), (-i, i)] {
            out.unit_instances += 1;
            let prod = l(a, a).compose(l(b, b));
            if let Some(w) = witnesses(&prod, &id) {
                out.unit_failures
                    .push(format!("{}{} != 1 at {w}", gen_name(a, a), gen_name(b, b)));
            }
        }
    }
    let xi = q.sub(&q.inv());
    let keys: Vec<(i32, i32)> = gens.keys().copied().collect();
    for &(i, j) in &keys {
        for &(k, ll) in &keys {
            out.quadratic_instances += 1;
            let p = gen_parity(i, j).koszul(gen_parity(k, ll)) < 0;
            let c1 = fpow(q, super::vector::phi(j, ll)).mul(&sign::<F>(p));
            let mut lhs = l(i, j).compose(l(k, ll)).scale(&c1);
            let mut rhs = l(k, ll).compose(l(i, j)).scale(&fpow(q, super::vector::phi(i, k)));
            let t1 = xi.mul(&sign::<F>(theta_negative(i, j, k)));
            let t2 = xi.mul(&sign::<F>(theta_negative(-i, -j, k)));
            if k <= j && j < ll {
                lhs = lhs.add(&l(i, ll).compose(l(k, j)).scale(&t1));
            }
            if i <= -ll && -ll < j && j <= -k {
                lhs = lhs.add(&l(i, -ll).compose(l(k, -j)).scale(&t2));
            }
            if k < i && i <= ll {
                rhs = rhs.add(&l(i, ll).compose(l(k, j)).scale(&t1));
            }
            if -j <= k && k < -i && -i <= ll {
                rhs = rhs.add(&l(-i, ll).compose(l(-k, j)).scale(&t2));
            }
            if let Some(w) = witness(&lhs, &rhs) {
                out.quadratic_failures
                    .push(format!("(i,j,k,l)=({i},{j},{k},{ll}) at {w}"));
            }
        }
    }
    out.matrix_failure = matrix_form_failure(n, q, gens, &space);
    out
}

fn matrix_form_failure<F: Field>(
    n: usize,
    q: &F,
    gens: &Gens<F>,
    space: &Arc<SuperSpace>,
) -> Option<String> {
    let v = SuperSpace::vector(n);
    let mv = tensor_pair(space, &v);
    let mvv = tensor_pair(&mv, &v);
    let vv = tensor_pair(&v, &v);
    let pos = |a: i32| v.position(&Label::Atom(a)).expect("index in range");
    let unit = |a: i32, b: i32| {
        SOp::from_entries(v.clone(), v.clone(), gen_parity(a, b), [(pos(a), pos(b), F::one())])
            .expect("matrix unit")
    };
    let id_v = SOp::<F>::identity(v.clone());
    let mut l12 = SOp::zero(mvv.clone(), mvv.clone(), Parity::Even);
    let mut l13 = SOp::zero(mvv.clone(), mvv.clone(), Parity::Even);
    let mut s = SOp::zero(vv.clone(), vv.clone(), Parity::Even);
    for (&(i, j), op) in gens {
        let e = unit(i, j);
        let a = op
            .graded_tensor_into(&e, mv.clone(), mv.clone())
            .graded_tensor_into(&id_v, mvv.clone(), mvv.clone());
        let b = op
            .graded_tensor_into(&id_v, mv.clone(), mv.clone())
            .graded_tensor_into(&e, mvv.clone(), mvv.clone());
        l12 = l12.add(&a);
        l13 = l13.add(&b);
        s = s.add(&vector_gen_generic(&v, q, i, j).graded_tensor_into(&e, vv.clone(), vv.clone()));
    }
    let s23 = SOp::identity(space.clone()).graded_tensor_into(
        &s,
        mvv.clone(),
        mvv.clone(),
    );
    // (M ⊗ (V ⊗ V)) and ((M ⊗ V) ⊗ V) share the basis order; relabel
    let s23 = s23.with_spaces(mvv.clone(), mvv.clone());
    let lhs = l12.compose(&l13).compose(&s23);
    let rhs = s23.compose(&l13).compose(&l12);
    witness(&lhs, &rhs)
}

fn summarize(list: &[String]) -> Option<String> {
    if list.is_empty() {
        return None;
    }
    let shown: Vec<&str> = list.iter().take(5).map(String::as_str).collect();
    let more = if list.len() > 5 {
        format!(" (+{} more)", list.len() - 5)
    } else {
        String::new()
    };
    Some(format!("{}{more}", shown.join("; ")))
}

/// Verifies the defining relations of `rep` as operator identities.
pub fn check_defining_relations(rep: &QueerRep, mode: EqualityMode) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("relations");
    report
        .param("n", rep.rank())
        .param("dim", rep.dim())
        .param("param", rep.param().name())
        .param("mode", mode.name());
    let outcomes: Vec<RelationOutcome> = match mode {
        EqualityMode::Exact => vec![relation_failures(rep.rank(), &rep.param().q(), rep.gens())],
        EqualityMode::Probabilistic { trials, seed } => {
            report.param("trials", trials).param("seed", seed);
            let mut outs = Vec::new();
            let mut points = sample_points(seed, usize::MAX);
            while outs.len() < trials {
                let c = points.next().expect("infinite sampler");
                let one = BigRational::from_integer(1.into());
                if c == BigRational::from_integer(0.into()) || c == one || c == -one.clone() {
                    continue;
                }
                let Ok(gens) = rep.specialize(&c) else {
                    continue;
                };
                outs.push(relation_failures(rep.rank(), &rep.param().at(&c), &gens));
            }
            outs
        }
    };
    let merge = |f: fn(&RelationOutcome) -> &Vec<String>| {
        let mut all: Vec<String> = outcomes.iter().flat_map(|o| f(o).clone()).collect();
        all.dedup();
        all
    };
    let units = merge(|o| &o.unit_failures);
    let quads = merge(|o| &o.quadratic_failures);
    let matrix: Vec<String> = outcomes
        .iter()
        .filter_map(|o| o.matrix_failure.clone())
        .collect();
    report
        .check_with("unit relations", summarize(&units))
        .value(outcomes[0].unit_instances);
    report
        .check_with("quadratic relations (expanded)", summarize(&quads))
        .value(outcomes[0].quadratic_instances);
    report.check_with("matrix relation L12 L13 S23 = S23 L13 L12", summarize(&matrix));
    report.finish(start);
    report
}
