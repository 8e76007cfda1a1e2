#![allow(dead_code)]

use std::collections::BTreeMap;

use realrep::decomp::DecompositionReport;
use realrep::exactnum::{rat, GaussRat, Rat};
use realrep::liealg::{CartanSubalgebra, LieAlgebra};
use realrep::linalg::{simultaneous_eigenspaces, to_gauss_vec, Mat, Subspace};
use realrep::rep::Representation;
use realrep::repzoo::MonomialBasis;

/// Integer polynomial as exponent vector → coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub n: usize,
    pub terms: BTreeMap<Vec<usize>, i64>,
}

impl Poly {
    pub fn var(n: usize, i: usize) -> Poly {
        let mut e = vec![0; n];
        e[i] = 1;
        Poly {
            n,
            terms: BTreeMap::from([(e, 1)]),
        }
    }

    pub fn constant(n: usize, c: i64) -> Poly {
        Poly {
            n,
            terms: BTreeMap::from([(vec![0; n], c)]),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut t = self.terms.clone();
        for (e, c) in &o.terms {
            *t.entry(e.clone()).or_insert(0) += c;
        }
        t.retain(|_, c| *c != 0);
        Poly { n: self.n, terms: t }
    }

    pub fn scale(&self, k: i64) -> Poly {
        let mut t = self.terms.clone();
        for c in t.values_mut() {
            *c *= k;
        }
        t.retain(|_, c| *c != 0);
        Poly { n: self.n, terms: t }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(-1))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut t: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<usize> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *t.entry(e).or_insert(0) += c1 * c2;
            }
        }
        t.retain(|_, c| *c != 0);
        Poly { n: self.n, terms: t }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.n, 1), |acc, _| acc.mul(self))
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn coords(&self) -> Vec<Rat> {
        let mb = MonomialBasis::new(self.n, self.degree());
        let terms: Vec<(i64, Vec<usize>)> = self.terms.iter().map(|(e, c)| (*c, e.clone())).collect();
        mb.vector(&terms)
    }
}

/// Variables `x, y, z, w` (or fewer).
pub fn vars(n: usize) -> Vec<Poly> {
    (0..n).map(|i| Poly::var(n, i)).collect()
}

/// Breadth-first closure of a seed under real operators, written without the
/// library's representation module.
pub fn closure<F: realrep::exactnum::Field>(ops: &[Mat<F>], seed: &[F]) -> Subspace<F> {
    let n = seed.len();
    let mut found: Vec<Vec<F>> = Vec::new();
    let mut span = Subspace::zero(n);
    if span.insert(seed) {
        found.push(seed.to_vec());
    }
    let mut k = 0;
    while k < found.len() {
        let v = found[k].clone();
        for op in ops {
            let w = op.mul_vec(&v);
            if span.insert(&w) {
                found.push(w);
            }
        }
        k += 1;
    }
    span
}

pub fn rat_images(rep: &Representation) -> Vec<Mat<Rat>> {
    rep.images().to_vec()
}

pub fn report_bases(report: &DecompositionReport) -> Vec<Subspace<Rat>> {
    report
        .components
        .iter()
        .map(|c| c.basis.as_rational().expect("rational component").clone())
        .collect()
}

/// Same subspaces, ignoring order.
pub fn same_set(a: &[Subspace<Rat>], b: &[Subspace<Rat>]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.contains(x)) && b.iter().all(|x| a.contains(x))
}

fn re(v: &[GaussRat]) -> Vec<Rat> {
    v.iter().map(|z| z.re.clone()).collect()
}

fn im(v: &[GaussRat]) -> Vec<Rat> {
    v.iter().map(|z| z.im.clone()).collect()
}

fn is_zero(v: &[Rat]) -> bool {
    v.iter().all(|x| *x == rat(0))
}

/// Weight vectors of `V^C` inside `within`: eigenspace bases plus all sums
/// `b_k + b_l` and `b_k + i·b_l` inside each weight space.
pub fn weight_vectors(cartan_ops: &[Mat<GaussRat>], within: &Subspace<GaussRat>) -> Vec<Vec<GaussRat>> {
    let mut out = Vec::new();
    for (_, space) in simultaneous_eigenspaces(cartan_ops, within).expect("diagonalizable") {
        let b = space.vectors();
        for (k, u) in b.iter().enumerate() {
            out.push(u.clone());
            for w in &b[k + 1..] {
                out.push(u.iter().zip(w).map(|(a, c)| a.clone() + c.clone()).collect());
                out.push(u.iter().zip(w).map(|(a, c)| a.clone() + c.clone() * GaussRat::i()).collect());
            }
        }
    }
    out
}

/// Every distinct real closure of `Re w` and `Im w` over the weight vectors
/// `w` of `within`.
pub fn real_closures(ops: &[Mat<Rat>], cartan_ops: &[Mat<GaussRat>], within: &Subspace<GaussRat>) -> Vec<Subspace<Rat>> {
    let mut out: Vec<Subspace<Rat>> = Vec::new();
    for w in weight_vectors(cartan_ops, within) {
        for part in [re(&w), im(&w)] {
            if is_zero(&part) {
                continue;
            }
            let c = closure(ops, &part);
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

pub fn minimal(spaces: &[Subspace<Rat>]) -> Vec<Subspace<Rat>> {
    spaces
        .iter()
        .filter(|s| {
            !spaces
                .iter()
                .any(|t| t.dim() < s.dim() && s.contains(t).unwrap_or(false))
        })
        .cloned()
        .collect()
}

pub fn cartan_images(rep: &Representation, c: &CartanSubalgebra) -> Vec<Mat<GaussRat>> {
    c.elements().iter().map(|h| rep.raw_image(&to_gauss_vec(h))).collect()
}

/// Brute-force comparison of a report with the invariant subspaces reached
/// from weight vectors. Returns a description of the first disagreement.
pub fn oracle_check(
    rep: &Representation,
    g: &LieAlgebra,
    c: &CartanSubalgebra,
    report: &DecompositionReport,
) -> Result<(), String> {
    let _ = g;
    let ops = rat_images(rep);
    let cops = cartan_images(rep, c);
    let n = rep.dim();
    let comps = report_bases(report);

    // each component is invariant and every weight vector inside it generates it
    for (k, w) in comps.iter().enumerate() {
        if !ops.iter().all(|m| w.is_invariant(m)) {
            return Err(format!("component {k} not invariant"));
        }
        let wc = w.map(|x| GaussRat::real(x.clone()));
        for sub in real_closures(&ops, &cops, &wc) {
            if sub != *w {
                return Err(format!("component {k} contains a smaller invariant subspace of dim {}", sub.dim()));
            }
        }
    }
    // direct sum
    let mut sum = Subspace::zero(n);
    for w in &comps {
        sum = sum.sum(w).unwrap();
    }
    if sum.dim() != n || comps.iter().map(Subspace::dim).sum::<usize>() != n {
        return Err("components do not form a direct sum of V".into());
    }
    // minimal invariant subspaces reached from weight vectors of V
    let all = real_closures(&ops, &cops, &Subspace::full(n));
    let mins = minimal(&all);
    let mut comp_dims: Vec<usize> = comps.iter().map(Subspace::dim).collect();
    comp_dims.sort();
    comp_dims.dedup();
    for m in &mins {
        if !comp_dims.contains(&m.dim()) {
            return Err(format!("oracle found a minimal subspace of dim {} not in the report", m.dim()));
        }
    }
    if mins.len() == comps.len() && !same_set(&mins, &comps) {
        return Err("oracle minimal subspaces differ from the components".into());
    }
    Ok(())
}
