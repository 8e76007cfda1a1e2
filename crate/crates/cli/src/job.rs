//! Turning command-line flags and JSON job files into an algebra, a Cartan
//! subalgebra and (optionally) a representation.

use std::fs;
use std::path::Path;

use realrep::exactnum::{parse_rat, Rat};
use realrep::liealg::{CartanSubalgebra, LieAlgebra};
use realrep::linalg::Mat;
use realrep::rep::Representation;
use realrep::repzoo;
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

/// Contents of a `--in` file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub n: usize,
    pub generators: Vec<Mat<Rat>>,
    #[serde(default)]
    pub cartan: Option<Value>,
    /// Either a builder kind or `{"images": [...], "anti": bool}`.
    #[serde(default)]
    pub rep: Option<RepSpec>,
    /// Anti-homomorphism flag for inline images given without a wrapper.
    #[serde(default)]
    pub anti: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum RepSpec {
    Kind(String),
    Inline {
        images: Vec<Mat<Rat>>,
        #[serde(default)]
        anti: bool,
    },
}

pub struct Job {
    pub algebra: LieAlgebra,
    pub cartan: CartanSubalgebra,
    pub rep: Option<Representation>,
}

pub struct Inputs<'a> {
    pub algebra: Option<&'a str>,
    pub cartan: Option<&'a str>,
    pub rep: Option<&'a str>,
    pub file: Option<&'a Path>,
}

pub fn load(inp: &Inputs) -> Result<Job, CliError> {
    let (algebra, default_cartan, file_cartan, file_rep) = match (inp.algebra, inp.file) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --algebra or --in, not both".into())),
        (None, None) => return Err(CliError::Usage("one of --algebra or --in is required".into())),
        (Some(name), None) => {
            let (g, c) = repzoo::named_algebra(name)?;
            (g, Some(c), None, None)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let job: JobFile = serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
            if job.generators.iter().any(|m| m.rows() != job.n || m.cols() != job.n) {
                return Err(CliError::Usage(format!("generators must be {0}x{0}", job.n)));
            }
            let g = LieAlgebra::new(job.generators)?;
            let rep = match (job.rep, job.anti) {
                (Some(RepSpec::Inline { images, anti }), extra) => Some(RepSpec::Inline {
                    images,
                    anti: anti || extra.unwrap_or(false),
                }),
                (r, _) => r,
            };
            (g, None, job.cartan, rep)
        }
    };

    let cartan = match (inp.cartan, file_cartan, default_cartan) {
        (Some(text), _, _) => parse_cartan_text(&algebra, text)?,
        (None, Some(v), _) => parse_cartan_json(&algebra, &v)?,
        (None, None, Some(c)) => c,
        (None, None, None) => return Err(CliError::Usage("a Cartan subalgebra is required (--cartan)".into())),
    };

    let rep = match (inp.rep, file_rep) {
        (Some(kind), _) => Some(repzoo::named_rep(&algebra, kind)?),
        (None, Some(RepSpec::Kind(kind))) => Some(repzoo::named_rep(&algebra, &kind)?),
        (None, Some(RepSpec::Inline { images, anti })) => Some(Representation::new(&algebra, images, anti)?),
        (None, None) => None,
    };

    Ok(Job {
        algebra,
        cartan,
        rep,
    })
}

/// `e1,e6`, `1,6`, or a JSON list as accepted by [`parse_cartan_json`].
pub fn parse_cartan_text(g: &LieAlgebra, text: &str) -> Result<CartanSubalgebra, CliError> {
    let t = text.trim();
    if t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(|e| CliError::Parse(e.to_string()))?;
        return parse_cartan_json(g, &v);
    }
    let idx = t
        .split(',')
        .map(|p| basis_index(g, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(repzoo::cartan_from_indices(g, &idx)?)
}

/// A list whose entries are one-based generator indices (`3` or `"e3"`) or
/// coefficient vectors over the generators.
pub fn parse_cartan_json(g: &LieAlgebra, v: &Value) -> Result<CartanSubalgebra, CliError> {
    let entries = v
        .as_array()
        .ok_or_else(|| CliError::Parse("cartan must be a JSON list".into()))?;
    let mut elems = Vec::new();
    for e in entries {
        let coeffs = match e {
            Value::Array(xs) => {
                if xs.len() != g.dim() {
                    return Err(CliError::Usage(format!(
                        "Cartan coefficient vector has length {}, algebra has dimension {}",
                        xs.len(),
                        g.dim()
                    )));
                }
                xs.iter().map(scalar).collect::<Result<Vec<_>, _>>()?
            }
            Value::Number(_) | Value::String(_) => {
                let i = basis_index(g, &scalar_text(e))?;
                let mut c = vec![Rat::from_integer(0.into()); g.dim()];
                c[i] = Rat::from_integer(1.into());
                c
            }
            _ => return Err(CliError::Parse(format!("bad Cartan entry {e}"))),
        };
        elems.push(coeffs);
    }
    Ok(CartanSubalgebra::new(g, elems)?)
}

fn basis_index(g: &LieAlgebra, p: &str) -> Result<usize, CliError> {
    let p = p.trim();
    let digits = p.strip_prefix('e').unwrap_or(p);
    let k: usize = digits
        .parse()
        .map_err(|_| CliError::Parse(format!("bad generator index {p:?}")))?;
    if k == 0 || k > g.dim() {
        return Err(CliError::Usage(format!("generator index {p} out of range 1..={}", g.dim())));
    }
    Ok(k - 1)
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn scalar(v: &Value) -> Result<Rat, CliError> {
    let t = scalar_text(v);
    parse_rat(&t).ok_or_else(|| CliError::Parse(format!("malformed scalar {t:?}")))
}
