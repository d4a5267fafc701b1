//! Compositional pipelines for operators that contain rational functions of
//! the scaling operator, such as `1/(1 + T_{q^2})`.
//!
//! The monomial basis diagonalizes every function of `T_q`: on `x^m` the
//! operator `R(T_q)` is multiplication by `R(q^m)`. A pipeline is evaluated
//! by pushing `x^m` through its stages right to left at a fixed rational
//! `q`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{rational_powi, QLaurent};
use crate::operator::algebra::{MonomialKey, Operator};
use crate::operator::bracket::OpAlgebra;
use crate::ring::{Field, Rational, Ring};
use crate::scalar::ExactScalar;
use crate::series::Series;

/// Sparse polynomial in `x` with exact coefficients.
pub type SparsePoly = BTreeMap<usize, ExactScalar>;

/// Laurent polynomial in an auxiliary variable `t` (standing for `T_q`)
/// with `q`-dependent coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct TPoly {
    pub terms: BTreeMap<i64, QLaurent>,
}

impl TPoly {
    pub fn from_terms<I: IntoIterator<Item = (i64, QLaurent)>>(it: I) -> Self {
        let mut terms: BTreeMap<i64, QLaurent> = BTreeMap::new();
        for (k, c) in it {
            let e = terms.entry(k).or_default();
            *e = &*e + &c;
        }
        terms.retain(|_, c| !c.is_zero());
        TPoly { terms }
    }

    pub fn constant(c: QLaurent) -> Self {
        TPoly::from_terms([(0, c)])
    }

    /// Value at `q = q0`, `t = q0^m`.
    fn eval(&self, q0: &Rational, m: usize) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for (k, c) in &self.terms {
            let t = rational_powi(q0, k * m as i64);
            acc = &acc + &c.eval_unchecked(q0).scale(&t);
        }
        acc
    }
}

/// Diagonal operator `R(T_q)` with `R = num/den`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagRational {
    pub num: TPoly,
    pub den: TPoly,
}

impl DiagRational {
    pub fn new(num: TPoly, den: TPoly) -> Self {
        DiagRational { num, den }
    }

    /// `1/(1 + T_{q^k})`, where `T_{q^k} = T_q^k`.
    pub fn one_over_one_plus_t(k: i64) -> Self {
        DiagRational::new(
            TPoly::constant(QLaurent::one()),
            TPoly::from_terms([(0, QLaurent::one()), (k, QLaurent::one())]),
        )
    }

    /// `1/(T_q + T_{q^{-1}})`.
    pub fn one_over_t_plus_tinv() -> Self {
        DiagRational::new(
            TPoly::constant(QLaurent::one()),
            TPoly::from_terms([(1, QLaurent::one()), (-1, QLaurent::one())]),
        )
    }

    /// A `q`-dependent scalar `1/den(q)`.
    pub fn reciprocal_scalar(den: QLaurent) -> Self {
        DiagRational::new(TPoly::constant(QLaurent::one()), TPoly::constant(den))
    }

    /// Eigenvalue on `x^m`.
    pub fn eigenvalue(&self, q0: &Rational, m: usize) -> Result<ExactScalar> {
        let d = self.den.eval(q0, m);
        let n = self.num.eval(q0, m);
        n.div(&d).ok_or_else(|| Error::Pole {
            m,
            q: q0.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Stage {
    Op(Operator),
    Diag(DiagRational),
}

/// `prefactor * stage_0 ∘ stage_1 ∘ ... ∘ stage_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tier2Pipeline {
    pub prefactor: ExactScalar,
    pub stages: Vec<Stage>,
}

impl Tier2Pipeline {
    pub fn new(prefactor: ExactScalar, stages: Vec<Stage>) -> Self {
        Tier2Pipeline { prefactor, stages }
    }

    fn min_degree_shift(&self) -> i64 {
        self.stages
            .iter()
            .map(|s| match s {
                Stage::Op(op) => op.min_degree_shift().unwrap_or(0),
                Stage::Diag(_) => 0,
            })
            .sum()
    }
}

fn accumulate(p: &mut SparsePoly, deg: usize, v: &ExactScalar) {
    if v.is_zero() {
        return;
    }
    let e = p.entry(deg).or_default();
    *e = &*e + v;
    if e.is_zero() {
        p.remove(&deg);
    }
}

/// A finite sum of pipelines.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Tier2Operator {
    pub pipelines: Vec<Tier2Pipeline>,
}

impl Tier2Operator {
    pub fn diag(r: DiagRational) -> Self {
        Tier2Operator {
            pipelines: vec![Tier2Pipeline::new(ExactScalar::one(), vec![Stage::Diag(r)])],
        }
    }

    pub fn scale_exact(&self, c: &ExactScalar) -> Self {
        Tier2Operator {
            pipelines: self
                .pipelines
                .iter()
                .map(|p| Tier2Pipeline::new(&p.prefactor * c, p.stages.clone()))
                .collect(),
        }
    }

    /// Substitutes `q = q0` in every tier-1 stage, then simplifies: scalar
    /// stages move into the prefactor, adjacent tier-1 stages are composed,
    /// and pipelines with identical stages are merged. The result acts the
    /// same as `self` at `q0` only.
    pub fn specialize(&self, q0: &Rational) -> Self {
        let scalar_key = MonomialKey::new(0, 0, 0);
        let mut merged: Vec<Tier2Pipeline> = Vec::new();
        'pipes: for p in &self.pipelines {
            let mut prefactor = p.prefactor.clone();
            let mut stages: Vec<Stage> = Vec::with_capacity(p.stages.len());
            for s in &p.stages {
                match s {
                    Stage::Op(op) => {
                        let op = op.at_q(q0);
                        if op.is_zero() {
                            continue 'pipes;
                        }
                        if op.terms().all(|(k, _)| *k == scalar_key) {
                            if let Some(c) = op.coeff(scalar_key).as_constant() {
                                prefactor = &prefactor * &c;
                                continue;
                            }
                        }
                        match stages.last_mut() {
                            Some(Stage::Op(prev)) => *prev = prev.compose(&op),
                            _ => stages.push(Stage::Op(op)),
                        }
                    }
                    Stage::Diag(r) => stages.push(Stage::Diag(r.clone())),
                }
            }
            if prefactor.is_zero() {
                continue;
            }
            match merged.iter_mut().find(|m| m.stages == stages) {
                Some(m) => m.prefactor = &m.prefactor + &prefactor,
                None => merged.push(Tier2Pipeline::new(prefactor, stages)),
            }
        }
        merged.retain(|p| !p.prefactor.is_zero());
        Tier2Operator { pipelines: merged }
    }

    /// Evaluation plan at `q = q0`. Pipelines that end in the same stages
    /// share that work.
    pub fn compile(&self, q0: &Rational) -> Compiled {
        let spec = self.specialize(q0);
        let mut plan = Compiled {
            q0: q0.clone(),
            stages: Vec::new(),
            nodes: Vec::new(),
            outputs: Vec::new(),
        };
        for p in &spec.pipelines {
            let mut node = None;
            for s in p.stages.iter().rev() {
                let sid = match plan.stages.iter().position(|x| x == s) {
                    Some(i) => i,
                    None => {
                        plan.stages.push(s.clone());
                        plan.stages.len() - 1
                    }
                };
                node = Some(match plan.nodes.iter().position(|&n| n == (node, sid)) {
                    Some(i) => i,
                    None => {
                        plan.nodes.push((node, sid));
                        plan.nodes.len() - 1
                    }
                });
            }
            plan.outputs.push((node, p.prefactor.clone()));
        }
        plan
    }

    /// Action on `x^m` at `q = q0`, exact.
    pub fn act_on_monomial_at(&self, m: usize, q0: &Rational) -> Result<SparsePoly> {
        self.compile(q0).act_on_monomial(m)
    }

    /// Exact application to a series at `q = q0`.
    pub fn apply_at(&self, s: &Series<ExactScalar>, q0: &Rational) -> Result<Series<ExactScalar>> {
        let shift = self
            .pipelines
            .iter()
            .map(Tier2Pipeline::min_degree_shift)
            .min()
            .unwrap_or(0)
            .min(0);
        let order = s.order() + shift;
        let len = (order + 1).max(0) as usize;
        let mut out = vec![ExactScalar::zero(); len];
        let plan = self.compile(q0);
        for (m, c) in s.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (deg, v) in plan.act_on_monomial(m)? {
                if deg < len {
                    out[deg] = &out[deg] + &(&v * c);
                }
            }
        }
        Ok(Series::new(out, order))
    }
}

/// A [`Tier2Operator`] specialized at one `q`, stored as a suffix tree of
/// stages: node `(parent, stage)` is `stage` applied to the parent's output.
#[derive(Clone, Debug)]
pub struct Compiled {
    q0: Rational,
    stages: Vec<Stage>,
    /// Parents precede children.
    nodes: Vec<(Option<usize>, usize)>,
    outputs: Vec<(Option<usize>, ExactScalar)>,
}

impl Compiled {
    pub fn act_on_monomial(&self, m: usize) -> Result<SparsePoly> {
        let mut input = SparsePoly::new();
        input.insert(m, ExactScalar::one());
        let mut eigen: BTreeMap<(usize, usize), ExactScalar> = BTreeMap::new();
        let mut values: Vec<SparsePoly> = Vec::with_capacity(self.nodes.len());
        for &(parent, sid) in &self.nodes {
            let src = parent.map_or(&input, |i| &values[i]);
            let mut next = SparsePoly::new();
            for (k, c) in src {
                match &self.stages[sid] {
                    Stage::Op(op) => {
                        for (deg, v) in op.act_on_monomial_at(*k, &self.q0) {
                            accumulate(&mut next, deg, &(&v * c));
                        }
                    }
                    Stage::Diag(r) => {
                        let ev = match eigen.entry((sid, *k)) {
                            Entry::Occupied(e) => e.into_mut(),
                            Entry::Vacant(e) => e.insert(r.eigenvalue(&self.q0, *k)?),
                        };
                        accumulate(&mut next, *k, &(&*ev * c));
                    }
                }
            }
            values.push(next);
        }
        let mut out = SparsePoly::new();
        for (node, pre) in &self.outputs {
            let src = node.map_or(&input, |i| &values[i]);
            for (deg, v) in src {
                accumulate(&mut out, *deg, &(v * pre));
            }
        }
        Ok(out)
    }
}

impl From<Operator> for Tier2Operator {
    fn from(op: Operator) -> Self {
        Tier2Operator {
            pipelines: vec![Tier2Pipeline::new(ExactScalar::one(), vec![Stage::Op(op)])],
        }
    }
}

impl From<&Operator> for Tier2Operator {
    fn from(op: &Operator) -> Self {
        op.clone().into()
    }
}

impl OpAlgebra for Tier2Operator {
    fn zero() -> Self {
        Tier2Operator::default()
    }
    fn one() -> Self {
        Operator::identity().into()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut pipelines = self.pipelines.clone();
        pipelines.extend(o.pipelines.iter().cloned());
        Tier2Operator { pipelines }
    }
    fn compose(&self, o: &Self) -> Self {
        let mut pipelines = Vec::with_capacity(self.pipelines.len() * o.pipelines.len());
        for a in &self.pipelines {
            for b in &o.pipelines {
                let mut stages = a.stages.clone();
                stages.extend(b.stages.iter().cloned());
                pipelines.push(Tier2Pipeline::new(&a.prefactor * &b.prefactor, stages));
            }
        }
        Tier2Operator { pipelines }
    }
    fn scale(&self, c: &QLaurent) -> Self {
        if let Some(k) = c.as_constant() {
            return self.scale_exact(&k);
        }
        Tier2Operator::from(Operator::scalar(c.clone())).compose(self)
    }
}

/// Rejects `q0 <= 0` for every pipeline evaluation entry point.
pub fn check_q(q0: &Rational) -> Result<()> {
    if q0.is_zero() || q0 < &Rational::zero() {
        Err(Error::NonPositiveQ(q0.to_string()))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn diag_one_over_one_plus_t_squared() {
        // On x^2 at q = 1/2: 1/(1 + (1/2)^4) = 16/17.
        let op = Tier2Operator::diag(DiagRational::one_over_one_plus_t(2));
        let out = op.act_on_monomial_at(2, &rat(1, 2)).unwrap();
        assert_eq!(out[&2], ExactScalar::frac(16, 17));
    }

    #[test]
    fn pole_is_reported() {
        // 1/(1 - T) has a pole on x^0 for every q.
        let r = DiagRational::new(
            TPoly::constant(QLaurent::one()),
            TPoly::from_terms([(0, QLaurent::one()), (1, QLaurent::from(-1))]),
        );
        let err = Tier2Operator::diag(r)
            .act_on_monomial_at(0, &rat(3, 5))
            .unwrap_err();
        assert_eq!(
            err,
            Error::Pole {
                m: 0,
                q: "3/5".into()
            }
        );
    }

    #[test]
    fn embedding_is_lossless() {
        let op = Operator::d().compose(&Operator::t(1)).add(&Operator::x());
        let t2 = Tier2Operator::from(&op);
        let q0 = rat(5, 3);
        for m in 0..8 {
            assert_eq!(
                t2.act_on_monomial_at(m, &q0).unwrap(),
                op.act_on_monomial_at(m, &q0)
            );
        }
    }

    #[test]
    fn diag_inverts_its_denominator() {
        let q0 = rat(2, 1);
        let inv = Tier2Operator::diag(DiagRational::one_over_t_plus_tinv());
        let den = Tier2Operator::from(Operator::t(1).add(&Operator::t(-1)));
        let prod = den.compose(&inv);
        for m in 0..10 {
            let out = prod.act_on_monomial_at(m, &q0).unwrap();
            assert_eq!(out.len(), 1);
            assert_eq!(out[&m], ExactScalar::one());
        }
    }

    #[test]
    fn specialize_folds_only_true_scalars() {
        let q0 = rat(3, 2);
        let op = Tier2Operator::from(Operator::t(1))
            .compose(&Tier2Operator::from(Operator::scalar(QLaurent::q())))
            .compose(&Tier2Operator::diag(DiagRational::one_over_t_plus_tinv()))
            .compose(&Tier2Operator::from(Operator::x()));
        let spec = op.specialize(&q0);
        assert_eq!(spec.pipelines.len(), 1);
        assert_eq!(spec.pipelines[0].prefactor, ExactScalar::frac(3, 2));
        for m in 0..6 {
            assert_eq!(
                spec.compile(&q0).act_on_monomial(m).unwrap(),
                op.act_on_monomial_at(m, &q0).unwrap()
            );
            let direct = Operator::t(1).act_on_monomial_at(m + 1, &q0)[&(m + 1)].clone();
            let ev = DiagRational::one_over_t_plus_tinv()
                .eigenvalue(&q0, m + 1)
                .unwrap();
            let want = &(&direct * &ev) * &ExactScalar::frac(3, 2);
            assert_eq!(op.act_on_monomial_at(m, &q0).unwrap()[&(m + 1)], want);
        }
    }

    #[test]
    fn cancelling_pipelines_merge_to_zero() {
        let a = Tier2Operator::diag(DiagRational::one_over_one_plus_t(2))
            .compose(&Tier2Operator::from(Operator::d()));
        let z = a.minus(&a).specialize(&rat(2, 1));
        assert!(z.pipelines.is_empty());
    }
}
