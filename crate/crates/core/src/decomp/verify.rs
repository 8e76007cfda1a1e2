use serde::{Deserialize, Serialize};

use super::{fmt_weight, ComponentBasis, DecompositionReport};
use crate::exactnum::{rat, ComplexField, Field, GaussRat, QuadExt};
use crate::liealg::{find_root, sl2_triple, LieAlgebra, RootData};
use crate::linalg::{dot, Mat, Subspace};
use crate::rep::{invariant_span_of, Representation};
use crate::{Error, Result};

/// Outcome of re-checking a report against its representation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub invariance: bool,
    pub completeness: bool,
    pub hw_lines: bool,
    pub spanning: bool,
    /// `None` when some weight was not dominant.
    pub weyl_dimension: Option<bool>,
    pub failures: Vec<String>,
}

impl CheckSummary {
    pub fn all_passed(&self) -> bool {
        self.invariance
            && self.completeness
            && self.hw_lines
            && self.spanning
            && self.weyl_dimension != Some(false)
    }
}

fn lift<F: ComplexField>(m: &Mat<GaussRat>) -> Mat<F> {
    m.map(|z| F::from_gauss(z))
}

/// Invariance, direct-sum completeness, highest weight line counts, lowering
/// spanning and Weyl dimensions. Failures are collected, never raised.
pub fn verify_decomposition(
    report: &DecompositionReport,
    rep: &Representation,
    g: &LieAlgebra,
    rd: &RootData,
) -> CheckSummary {
    let any_surd = report
        .components
        .iter()
        .any(|c| matches!(c.basis, ComponentBasis::Surd(_)));
    let mut s = if any_surd {
        let bases: Vec<Subspace<QuadExt>> = report.components.iter().map(|c| c.basis.as_quad()).collect();
        structural_checks(report, rep, rd, &bases)
    } else {
        let bases: Vec<Subspace<GaussRat>> = report
            .components
            .iter()
            .map(|c| match &c.basis {
                ComponentBasis::Rational(b) => b.map(|x| GaussRat::real(x.clone())),
                ComponentBasis::Surd(_) => unreachable!(),
            })
            .collect();
        structural_checks(report, rep, rd, &bases)
    };
    let mut weyl_ok = Some(true);
    for (k, c) in report.components.iter().enumerate() {
        match weyl_dimension(&c.weights[0], g, rd) {
            Ok(w) => {
                let expect = w * c.case_tag.hw_lines();
                if expect != c.dim {
                    weyl_ok = Some(false);
                    s.failures.push(format!(
                        "component {k}: Weyl dimension predicts {expect}, found {}",
                        c.dim
                    ));
                }
            }
            Err(e) => {
                if weyl_ok == Some(true) {
                    weyl_ok = None;
                }
                s.failures.push(format!("component {k}: {e}"));
            }
        }
    }
    s.weyl_dimension = weyl_ok;
    s
}

fn structural_checks<F: ComplexField>(
    report: &DecompositionReport,
    rep: &Representation,
    rd: &RootData,
    bases: &[Subspace<F>],
) -> CheckSummary {
    let n = rep.dim();
    let gens: Vec<Mat<F>> = rep.generators();
    let raising: Vec<Mat<F>> = rd.simple_triples.iter().map(|t| lift(&rep.image(&t.x))).collect();
    let lowering: Vec<Mat<F>> = rd.simple_triples.iter().map(|t| lift(&rep.image(&t.y))).collect();
    let mut s = CheckSummary {
        invariance: true,
        completeness: true,
        hw_lines: true,
        spanning: true,
        ..CheckSummary::default()
    };

    for (k, b) in bases.iter().enumerate() {
        if b.ambient_dim() != n || !gens.iter().all(|m| b.is_invariant(m)) {
            s.invariance = false;
            s.failures.push(format!("component {k} is not invariant"));
        }
    }

    let total: usize = bases.iter().map(Subspace::dim).sum();
    let mut sum = Subspace::zero(n);
    for b in bases {
        sum = sum.sum(b).unwrap_or_else(|_| Subspace::zero(n));
    }
    if total != n || sum.dim() != n {
        s.completeness = false;
        s.failures.push(format!(
            "dimensions add to {total} and span {} of {n}",
            sum.dim()
        ));
    }

    for (k, (b, c)) in bases.iter().zip(&report.components).enumerate() {
        let hw = highest_in(b, &raising);
        if hw.dim() != c.case_tag.hw_lines() {
            s.hw_lines = false;
            s.failures.push(format!(
                "component {k}: {} highest weight lines, expected {}",
                hw.dim(),
                c.case_tag.hw_lines()
            ));
        }
        if b.dim() > 0 && invariant_span_of(&lowering, &hw.vectors(), n) != *b {
            s.spanning = false;
            s.failures.push(format!("component {k} is not spanned by lowering its highest weight vectors"));
        }
    }
    s
}

/// Vectors of `w` killed by every raising operator.
fn highest_in<F: Field>(w: &Subspace<F>, raising: &[Mat<F>]) -> Subspace<F> {
    let vs = w.vectors();
    let k = vs.len();
    let n = w.ambient_dim();
    if raising.is_empty() {
        return w.clone();
    }
    // rows: for each raising operator and output coordinate, the coefficients
    // of the basis vectors
    let mut rows = Vec::new();
    for x in raising {
        let images: Vec<Vec<F>> = vs.iter().map(|v| x.mul_vec(v)).collect();
        for i in 0..n {
            rows.push(images.iter().map(|im| im[i].clone()).collect());
        }
    }
    let coeffs = Mat::from_rows(k, rows).expect("rectangular").nullspace();
    let out: Vec<Vec<F>> = coeffs.vectors().iter().map(|c| w.combine(c)).collect();
    Subspace::span(n, &out)
}

/// Weyl's dimension formula `Π (λ+δ)(H_α) / δ(H_α)` over positive roots.
pub fn weyl_dimension(lambda: &[GaussRat], g: &LieAlgebra, rd: &RootData) -> Result<usize> {
    for t in &rd.simple_triples {
        let p = t.pairing(lambda);
        let ok = p.to_rat().is_some_and(|r| r.is_integer() && r >= rat(0));
        if !ok {
            return Err(Error::NotDominant(fmt_weight(lambda)));
        }
    }
    let half = GaussRat::real(crate::exactnum::ratio(1, 2));
    let mut delta = rd.zero_weight();
    for r in &rd.positives {
        for (d, x) in delta.iter_mut().zip(&r.values) {
            *d = d.clone() + &(x.clone() * &half);
        }
    }
    let mut num = GaussRat::one();
    let mut den = GaussRat::one();
    for r in &rd.positives {
        let idx = find_root(&rd.roots, &r.values).expect("positive root");
        let t = sl2_triple(g, &rd.cartan, &rd.roots, idx)?;
        let dh = dot(&t.h_cartan, &delta);
        num = num * &(t.pairing(lambda) + &dh);
        den = den * &dh;
    }
    let q = num.div(&den).to_rat().ok_or_else(|| Error::NotDominant(fmt_weight(lambda)))?;
    if !q.is_integer() {
        return Err(Error::NotDominant(fmt_weight(lambda)));
    }
    use num_traits::ToPrimitive;
    q.to_integer().to_usize().ok_or_else(|| Error::NotDominant(fmt_weight(lambda)))
}
