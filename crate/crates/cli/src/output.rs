use std::fmt::Write;

use realrep::decomp::{classify_orbits, fmt_weight, CheckSummary, ComponentBasis, DecompositionReport};
use realrep::exactnum::{Field, GaussRat};
use realrep::liealg::RootData;
use realrep::linalg::Mat;
use realrep::rep::{highest_weights, Representation};
use serde::Serialize;
use serde_json::json;

use crate::job::Job;

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn fmt_row<F: Field>(row: &[F]) -> String {
    let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_mat(out: &mut String, m: &Mat<GaussRat>, indent: &str) {
    for r in m.row_vecs() {
        let _ = writeln!(out, "{indent}{}", fmt_row(&r));
    }
}

pub fn info(job: &Job, json: bool) -> String {
    let g = &job.algebra;
    let rep = job.rep.as_ref().map(|r| json!({ "dim": r.dim(), "anti": r.is_anti() }));
    if json {
        return to_json(&json!({
            "matrix_size": g.n(),
            "dim": g.dim(),
            "semisimple": g.is_semisimple(),
            "rank": job.cartan.rank(),
            "cartan": job.cartan.elements().iter().map(|h| h.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "rep": rep,
        }));
    }
    let mut s = String::new();
    let _ = writeln!(s, "algebra: dimension {} in {}x{} matrices", g.dim(), g.n(), g.n());
    let _ = writeln!(s, "semisimple: {}", if g.is_semisimple() { "yes" } else { "no" });
    let _ = writeln!(s, "cartan: rank {}", job.cartan.rank());
    for h in job.cartan.elements() {
        let _ = writeln!(s, "  {}", fmt_row(h));
    }
    if let Some(r) = &job.rep {
        let anti = if r.is_anti() { " (anti-homomorphism)" } else { "" };
        let _ = writeln!(s, "representation: dimension {}{anti}", r.dim());
    }
    s
}

pub fn roots(rd: &RootData, json: bool) -> String {
    let rows: Vec<_> = rd
        .roots
        .iter()
        .map(|r| {
            let simple = rd.simples.iter().any(|s| s.values == r.values);
            (r, simple)
        })
        .collect();
    if json {
        let v: Vec<_> = rows
            .iter()
            .map(|(r, simple)| json!({ "values": r.values, "positive": r.positive, "simple": simple }))
            .collect();
        return to_json(&v);
    }
    let mut s = String::new();
    for (r, simple) in rows {
        let sign = if r.positive { "+" } else { "-" };
        let tag = if simple { "  simple" } else { "" };
        let _ = writeln!(s, "{sign} {}{tag}", fmt_weight(&r.values));
    }
    s
}

pub fn omega(rd: &RootData, json: bool) -> String {
    let w = &rd.word;
    if json {
        let letters: Vec<_> = w.letters.iter().map(|&l| &rd.simples[l].values).collect();
        return to_json(&json!({
            "letters": w.letters,
            "simple_roots": letters,
            "omega_defining": w.omega_defining,
            "omega_adjoint": w.omega_adjoint,
        }));
    }
    let mut s = String::new();
    let names: Vec<String> = w.letters.iter().map(|&l| fmt_weight(&rd.simples[l].values)).collect();
    let _ = writeln!(s, "word: [{}]", names.join(", "));
    let _ = writeln!(s, "omega (defining):");
    fmt_mat(&mut s, &w.omega_defining, "  ");
    let _ = writeln!(s, "omega (adjoint):");
    fmt_mat(&mut s, &w.omega_adjoint, "  ");
    s
}

pub fn weights(rep: &Representation, rd: &RootData, json: bool) -> realrep::Result<String> {
    let comps = highest_weights(rep, rd)?;
    let orbits = classify_orbits(&comps, rd)?;
    if json {
        let v: Vec<_> = comps
            .iter()
            .map(|c| {
                json!({
                    "weight": c.weight,
                    "theta": rd.theta(&c.weight),
                    "multiplicity": c.multiplicity(),
                    "hw_vectors": c.hw_basis.iter().map(|w| &w.vec).collect::<Vec<_>>(),
                })
            })
            .collect();
        return Ok(to_json(&json!({ "highest_weights": v, "orbits": orbits })));
    }
    let mut s = String::new();
    for c in &comps {
        let _ = writeln!(
            s,
            "{}  multiplicity {}  theta {}",
            fmt_weight(&c.weight),
            c.multiplicity(),
            fmt_weight(&rd.theta(&c.weight))
        );
        for w in &c.hw_basis {
            let _ = writeln!(s, "  {}", fmt_row(&w.vec));
        }
    }
    let _ = writeln!(s, "orbits:");
    for o in &orbits {
        let ws: Vec<String> = o.weights.iter().map(|w| fmt_weight(w)).collect();
        let _ = writeln!(s, "  {{{}}}  multiplicity {}", ws.join(", "), o.multiplicity);
    }
    Ok(s)
}

pub fn report(r: &DecompositionReport, json: bool) -> String {
    if json {
        return to_json(r);
    }
    let mut s = String::new();
    let _ = writeln!(s, "space dimension {}, {} components", r.space_dim, r.components.len());
    let _ = writeln!(s, "omega word: {:?}", r.omega_word.letters);
    for (k, c) in r.components.iter().enumerate() {
        let ws: Vec<String> = c.weights.iter().map(|w| fmt_weight(w)).collect();
        let tag = serde_json::to_value(c.case_tag).expect("tag");
        let _ = writeln!(
            s,
            "component {k}: dim {}  {}  weights {}",
            c.dim,
            tag.as_str().unwrap_or_default(),
            ws.join(" ")
        );
        if let Some(d) = &c.schur_d {
            let _ = writeln!(s, "  schur d = {d}");
        }
        if let Some(n) = &c.note {
            let _ = writeln!(s, "  note: {n}");
        }
        match &c.basis {
            ComponentBasis::Rational(b) => {
                for v in b.vectors() {
                    let _ = writeln!(s, "  {}", fmt_row(&v));
                }
            }
            ComponentBasis::Surd(b) => {
                for v in b.vectors() {
                    let _ = writeln!(s, "  {}", fmt_row(&v));
                }
            }
        }
    }
    if let Some(c) = &r.checks {
        s.push_str(&checks(c, false));
    }
    s
}

pub fn checks(c: &CheckSummary, json: bool) -> String {
    if json {
        return to_json(c);
    }
    let yn = |b: bool| if b { "ok" } else { "FAILED" };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "checks: invariance {}, completeness {}, highest weight lines {}, spanning {}, Weyl dimension {}",
        yn(c.invariance),
        yn(c.completeness),
        yn(c.hw_lines),
        yn(c.spanning),
        match c.weyl_dimension {
            Some(b) => yn(b),
            None => "skipped",
        }
    );
    for f in &c.failures {
        let _ = writeln!(s, "  {f}");
    }
    s
}
