//! Decomposition of a real representation into real irreducibles.
//!
//! Highest weights are grouped into orbits of `Θ`. A pair `λ ≠ Θ(λ)` gives
//! one real summand per highest weight vector; a self-conjugate `λ` is split
//! by a greedy search for vectors `v` with either `Tv ∥ v` or `v, Tv`
//! independent of everything used so far, where `T(v) = ω_ρ⁻¹ v̄`.

mod verify;

pub use verify::{verify_decomposition, weyl_dimension, CheckSummary};

use serde::{Deserialize, Serialize};

use crate::exactnum::{rational_with_norm, Field, GaussRat, QuadExt, Rat};
use crate::liealg::{CartanSubalgebra, LieAlgebra, RootData, WeylWord};
use crate::linalg::{im_vec, is_zero_vec, re_vec, scale_vec, sub_vec, add_vec, Mat, Subspace};
use crate::rep::{highest_weights, invariant_span, omega_rho, twist, IsotypicalComponent, Representation, WeightVector};
use crate::{Error, Result, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "A_selfconj")]
    ASelfConj,
    #[serde(rename = "B_distinct_pair")]
    BDistinctPair,
    #[serde(rename = "C_split_positive_d")]
    CSplitPositiveD,
    #[serde(rename = "C_irreducible_negative_d")]
    CIrreducibleNegativeD,
}

impl CaseTag {
    /// Number of highest weight lines in the complexified component.
    pub fn hw_lines(self) -> usize {
        match self {
            CaseTag::ASelfConj | CaseTag::CSplitPositiveD => 1,
            CaseTag::BDistinctPair | CaseTag::CIrreducibleNegativeD => 2,
        }
    }
}

/// Real basis of a component: rational, or over `ℚ(√d)` when `√d` could not
/// be cleared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "field", content = "subspace", rename_all = "lowercase")]
pub enum ComponentBasis {
    Rational(Subspace<Rat>),
    Surd(Subspace<QuadExt>),
}

impl ComponentBasis {
    pub fn dim(&self) -> usize {
        match self {
            ComponentBasis::Rational(s) => s.dim(),
            ComponentBasis::Surd(s) => s.dim(),
        }
    }

    pub fn as_rational(&self) -> Option<&Subspace<Rat>> {
        match self {
            ComponentBasis::Rational(s) => Some(s),
            ComponentBasis::Surd(_) => None,
        }
    }

    /// The basis lifted to `ℚ(√d)(i)`, for checks that treat both kinds alike.
    pub fn as_quad(&self) -> Subspace<QuadExt> {
        match self {
            ComponentBasis::Rational(s) => s.map(|x| QuadExt::from_gauss_rat(GaussRat::real(x.clone()))),
            ComponentBasis::Surd(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealComponent {
    pub basis: ComponentBasis,
    pub dim: usize,
    pub case_tag: CaseTag,
    pub weights: Vec<Vec<GaussRat>>,
    pub seed_vectors: Vec<Vec<GaussRat>>,
    /// Schur scalar for case c components.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schur_d: Option<GaussRat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A `Θ`-orbit of highest weights with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightOrbit {
    pub weights: Vec<Vec<GaussRat>>,
    pub multiplicity: usize,
}

impl WeightOrbit {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn representative(&self) -> &[GaussRat] {
        &self.weights[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub space_dim: usize,
    pub components: Vec<RealComponent>,
    pub weight_orbit_table: Vec<WeightOrbit>,
    pub omega_word: WeylWord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<CheckSummary>,
}

/// Processing order of orbit representatives.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SeedOrder {
    /// Conjugate pairs first, then self-conjugate weights.
    #[default]
    Default,
    /// All representatives by weight, lexicographically.
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    pub verify: bool,
    pub seed_order: SeedOrder,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            verify: true,
            seed_order: SeedOrder::Default,
        }
    }
}

fn cmp_weight(a: &[GaussRat], b: &[GaussRat]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp_lex(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// `Θ`-orbits of the highest weights, each led by its lexicographically
/// smallest weight. Orbits of length 2 come first.
pub fn classify_orbits(comps: &[IsotypicalComponent], rd: &RootData) -> Result<Vec<WeightOrbit>> {
    let mut seen = vec![false; comps.len()];
    let mut orbits = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        let t = rd.theta(&c.weight);
        if t == c.weight {
            orbits.push(WeightOrbit {
                weights: vec![c.weight.clone()],
                multiplicity: c.multiplicity(),
            });
            continue;
        }
        let j = comps
            .iter()
            .position(|o| o.weight == t)
            .ok_or_else(|| Error::NotCartan(format!("Theta image of {} is not a highest weight", fmt_weight(&c.weight))))?;
        seen[j] = true;
        let mut ws = vec![c.weight.clone(), t];
        ws.sort_by(|a, b| cmp_weight(a, b));
        orbits.push(WeightOrbit {
            weights: ws,
            multiplicity: c.multiplicity(),
        });
    }
    orbits.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| cmp_weight(a.representative(), b.representative()))
    });
    Ok(orbits)
}

pub fn fmt_weight(w: &[GaussRat]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn real_component(space: &Subspace<GaussRat>) -> Result<Subspace<Rat>> {
    Ok(space.real_points()?.to_rat().expect("real points are rational"))
}

/// Real summand `⟨G(v + v̄)⟩` for a highest weight vector whose weight is not
/// fixed by `Θ`. Built from `Re v` and checked against `Im v` and the real
/// points of `M ⊕ M̄`.
pub fn case_b_extract(rep: &Representation, v: &WeightVector, rd: &RootData) -> Result<RealComponent> {
    if rd.theta(&v.weight) == v.weight {
        return Err(Error::WeightNotInOrbit2(fmt_weight(&v.weight)));
    }
    let m = invariant_span(rep, &v.vec);
    let both = m.sum(&m.conj())?;
    let expected = real_component(&both)?;
    let re = invariant_span(rep, &re_vec(&v.vec)).to_rat().expect("real seed");
    let im = invariant_span(rep, &im_vec(&v.vec)).to_rat().expect("real seed");
    if re != expected || im != expected {
        return Err(Error::NotSelfConjugate);
    }
    Ok(RealComponent {
        dim: expected.dim(),
        basis: ComponentBasis::Rational(expected),
        case_tag: CaseTag::BDistinctPair,
        weights: vec![v.weight.clone(), rd.theta(&v.weight)],
        seed_vectors: vec![v.vec.clone()],
        schur_d: None,
        note: None,
    })
}

/// The scalar `d` with `T(T v) = d·v`.
pub fn schur_scalar_d(v: &[GaussRat], omega_inv: &Mat<GaussRat>) -> Result<Rat> {
    let tt = twist(omega_inv, &twist(omega_inv, v));
    let k = v.iter().position(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    let d = tt[k].div(&v[k]);
    if scale_vec(v, &d) != tt {
        return Err(Error::NotScalar);
    }
    let d = d.to_rat().ok_or(Error::NotScalar)?;
    if Field::is_zero(&d) {
        return Err(Error::ZeroD);
    }
    Ok(d)
}

/// `M = ⟨G v⟩` with `Tv ∥ v`: the real points of `M`.
pub fn case_a_extract(rep: &Representation, v: &WeightVector) -> Result<RealComponent> {
    let m = invariant_span(rep, &v.vec);
    let real = real_component(&m)?;
    Ok(RealComponent {
        dim: real.dim(),
        basis: ComponentBasis::Rational(real),
        case_tag: CaseTag::ASelfConj,
        weights: vec![v.weight.clone()],
        seed_vectors: vec![v.vec.clone()],
        schur_d: None,
        note: None,
    })
}

fn real_closure_rat(rep: &Representation, seed: &[Rat]) -> Option<ComponentBasis> {
    if is_zero_vec(seed) {
        return None;
    }
    Some(ComponentBasis::Rational(invariant_span(rep, seed)))
}

fn real_closure_quad(rep: &Representation, seed: &[QuadExt]) -> Option<ComponentBasis> {
    if is_zero_vec(seed) {
        return None;
    }
    let s = invariant_span(rep, seed);
    Some(match s.to_rat() {
        Some(r) => ComponentBasis::Rational(r),
        None => ComponentBasis::Surd(s),
    })
}

/// Closure of the preferred seed and of its fallback.
type SeedPair = (Option<ComponentBasis>, Option<ComponentBasis>);

/// `v` and `Tv` independent with self-conjugate weight. For `d > 0` the
/// summands are the closures of `Re(v + μTv)` and `Im(v - μTv)` with
/// `|μ|² d = 1`; for `d < 0` the real points of `M ⊕ M̄` are irreducible.
pub fn case_c_split(
    rep: &Representation,
    v: &WeightVector,
    omega_inv: &Mat<GaussRat>,
    d: &Rat,
) -> Result<Vec<RealComponent>> {
    if Field::is_zero(d) {
        return Err(Error::ZeroD);
    }
    let tv = twist(omega_inv, &v.vec);
    let base = |basis: ComponentBasis, tag, note| RealComponent {
        dim: basis.dim(),
        basis,
        case_tag: tag,
        weights: vec![v.weight.clone()],
        seed_vectors: vec![v.vec.clone(), tv.clone()],
        schur_d: Some(GaussRat::real(d.clone())),
        note,
    };
    if *d < <Rat as Field>::zero() {
        let m = invariant_span(rep, &v.vec);
        let both = real_component(&m.sum(&m.conj())?)?;
        return Ok(vec![base(ComponentBasis::Rational(both), CaseTag::CIrreducibleNegativeD, None)]);
    }
    let inv_d = <Rat as Field>::one() / d;
    // seeds (Re v1, Im v1) and (Im v2, Re v2), preferred part first
    let (first, second): (SeedPair, SeedPair) =
        match rational_with_norm(&inv_d) {
            Some(mu) => {
                let mtv = scale_vec(&tv, &mu);
                let v1 = add_vec(&v.vec, &mtv);
                let v2 = sub_vec(&v.vec, &mtv);
                let r = |x: &[GaussRat]| x.iter().map(|z| z.re.clone()).collect::<Vec<Rat>>();
                let i = |x: &[GaussRat]| x.iter().map(|z| z.im.clone()).collect::<Vec<Rat>>();
                (
                    (real_closure_rat(rep, &r(&v1)), real_closure_rat(rep, &i(&v1))),
                    (real_closure_rat(rep, &i(&v2)), real_closure_rat(rep, &r(&v2))),
                )
            }
            None => {
                let mu = QuadExt::sqrt(d)?.inv().expect("nonzero");
                let lift = |x: &[GaussRat]| x.iter().map(|z| QuadExt::from_gauss_rat(z.clone())).collect::<Vec<_>>();
                let (vq, tq) = (lift(&v.vec), lift(&tv));
                let mtv = scale_vec(&tq, &mu);
                let v1 = add_vec(&vq, &mtv);
                let v2 = sub_vec(&vq, &mtv);
                (
                    (real_closure_quad(rep, &re_vec(&v1)), real_closure_quad(rep, &im_vec(&v1))),
                    (real_closure_quad(rep, &im_vec(&v2)), real_closure_quad(rep, &re_vec(&v2))),
                )
            }
        };
    let pick = |(pref, alt): SeedPair, what: &str| match (pref, alt) {
        (Some(b), _) => Ok((b, None)),
        (None, Some(b)) => Ok((b, Some(format!("{what} vanished, used the other part")))),
        (None, None) => Err(Error::ZeroVector),
    };
    let (b1, n1) = pick(first, "real part of v1")?;
    let (b2, n2) = pick(second, "imaginary part of v2")?;
    Ok(vec![
        base(b1, CaseTag::CSplitPositiveD, n1),
        base(b2, CaseTag::CSplitPositiveD, n2),
    ])
}

/// Splits the isotypical component of a self-conjugate weight.
pub fn isotypical_refine(
    rep: &Representation,
    comp: &IsotypicalComponent,
    omega_inv: &Mat<GaussRat>,
) -> Result<Vec<RealComponent>> {
    let hs: Vec<Vec<GaussRat>> = comp.hw_basis.iter().map(|w| w.vec.clone()).collect();
    let mut candidates: Vec<Vec<GaussRat>> = hs.clone();
    for h in &hs {
        let th = twist(omega_inv, h);
        candidates.push(add_vec(h, &th));
        candidates.push(scale_vec(&sub_vec(h, &th), &GaussRat::i()));
    }
    let n = comp.hw_space.ambient_dim();
    let mut consumed: Subspace<GaussRat> = Subspace::zero(n);
    let mut out = Vec::new();
    while consumed.dim() < comp.hw_space.dim() {
        let mut progressed = false;
        for cand in &candidates {
            if consumed.contains_vec(cand) {
                continue;
            }
            let tv = twist(omega_inv, cand);
            let wv = WeightVector {
                weight: comp.weight.clone(),
                vec: cand.clone(),
            };
            if Subspace::span(n, std::slice::from_ref(cand)).contains_vec(&tv) {
                out.push(case_a_extract(rep, &wv)?);
                consumed.insert(cand);
                progressed = true;
                break;
            }
            let mut trial = consumed.clone();
            if trial.insert(cand) && trial.insert(&tv) {
                let d = schur_scalar_d(cand, omega_inv)?;
                out.extend(case_c_split(rep, &wv, omega_inv, &d)?);
                consumed = trial;
                progressed = true;
                break;
            }
        }
        if !progressed {
            return Err(Error::ExhaustionFailure(fmt_weight(&comp.weight)));
        }
    }
    Ok(out)
}

/// Runs the whole procedure with default options.
pub fn decompose(rep: &Representation, g: &LieAlgebra, cartan: &CartanSubalgebra) -> Result<DecompositionReport> {
    decompose_with(rep, g, cartan, &DecomposeOptions::default())
}

pub fn decompose_with(
    rep: &Representation,
    g: &LieAlgebra,
    cartan: &CartanSubalgebra,
    opts: &DecomposeOptions,
) -> Result<DecompositionReport> {
    let rd = RootData::new(g, cartan).map_err(|e| e.at(Step::RootData))?;
    decompose_in(rep, g, &rd, opts)
}

/// As [`decompose_with`], reusing computed root data.
pub fn decompose_in(
    rep: &Representation,
    g: &LieAlgebra,
    rd: &RootData,
    opts: &DecomposeOptions,
) -> Result<DecompositionReport> {
    let comps = highest_weights(rep, rd).map_err(|e| e.at(Step::HighestWeights))?;
    let omega = omega_rho(rep, rd).map_err(|e| e.at(Step::OmegaRho))?;
    let omega_inv = omega
        .inverse()
        .ok_or(Error::NotInvariant)
        .map_err(|e| e.at(Step::OmegaRho))?;
    let mut orbits = classify_orbits(&comps, rd).map_err(|e| e.at(Step::Orbits))?;
    if opts.seed_order == SeedOrder::Lex {
        orbits.sort_by(|a, b| cmp_weight(a.representative(), b.representative()));
    }
    let mut components = Vec::new();
    for orbit in &orbits {
        let comp = comps
            .iter()
            .find(|c| c.weight == orbit.representative())
            .ok_or_else(|| Error::NotCartan("orbit representative lost".into()))
            .map_err(|e| e.at(Step::Representatives))?;
        if orbit.len() == 2 {
            for v in &comp.hw_basis {
                components.push(case_b_extract(rep, v, rd).map_err(|e| e.at(Step::PairedWeights))?);
            }
        } else {
            components.extend(
                isotypical_refine(rep, comp, &omega_inv).map_err(|e| e.at(Step::SelfConjugateWeights))?,
            );
        }
    }
    let mut report = DecompositionReport {
        space_dim: rep.dim(),
        components,
        weight_orbit_table: orbits,
        omega_word: rd.word.clone(),
        checks: None,
    };
    if opts.verify {
        report.checks = Some(verify_decomposition(&report, rep, g, rd));
    }
    Ok(report)
}
