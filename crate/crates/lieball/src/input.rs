//! The analysis input file: a JSON document declaring the scalar field, the
//! ambient dimension, an optional signature, and generator matrices whose
//! entries use the exact scalar grammar (`-1/2`, `1+1/2*sqrt`, `(re,im)`).

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::liealg::SignatureForm;
use crate::matrix::Matrix;
use crate::scalar::{parse_scalar, Field};

#[derive(Debug, Deserialize)]
struct AlgebraFile {
    #[serde(rename = "D", default)]
    d: Option<u32>,
    field: String,
    ambient_dim: usize,
    #[serde(default)]
    signature: Option<[usize; 2]>,
    generators: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    name: Option<String>,
}

/// Parsed and validated analysis input.
#[derive(Debug, Clone)]
pub struct AlgebraInput {
    pub name: Option<String>,
    pub field: Field,
    pub ambient_dim: usize,
    pub signature: Option<SignatureForm>,
    pub generators: Vec<Matrix>,
}

pub fn field_from_name(name: &str, d: u32) -> Result<Field> {
    match name {
        "rat" => Ok(Field::Rat),
        "quad" => Ok(Field::Quad(d)),
        "gauss_rat" => Ok(Field::GaussRat),
        "gauss_quad" => Ok(Field::GaussQuad(d)),
        other => Err(Error::BadParams(format!(
            "unknown field '{other}' (expected rat, quad, gauss_rat, gauss_quad)"
        ))),
    }
}

/// Parse the JSON document. Positions in parse errors refer to the entry
/// string being read at the time.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraInput> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        position: e.column(),
        message: format!("invalid JSON at line {}: {}", e.line(), e),
    })?;
    let d = file.d.unwrap_or(3);
    if d < 2 || !is_squarefree(d) {
        return Err(Error::BadParams(format!(
            "D = {d} must be a square-free integer >= 2"
        )));
    }
    let field = field_from_name(&file.field, d)?;
    if file.ambient_dim == 0 {
        return Err(Error::BadParams("ambient_dim must be positive".into()));
    }
    if file.generators.is_empty() {
        return Err(Error::BadParams("at least one generator is required".into()));
    }
    let mut generators = Vec::with_capacity(file.generators.len());
    for (g, rows) in file.generators.iter().enumerate() {
        if rows.len() != file.ambient_dim || rows.iter().any(|r| r.len() != file.ambient_dim) {
            return Err(Error::BadParams(format!(
                "generator {g} is not {0}x{0}",
                file.ambient_dim
            )));
        }
        let mut entries = Vec::with_capacity(file.ambient_dim * file.ambient_dim);
        for row in rows {
            for entry in row {
                let value = parse_scalar(entry, d)?;
                if !value.field().embeds_in(field) {
                    return Err(Error::FieldMismatch(value.field(), field));
                }
                entries.push(value);
            }
        }
        generators.push(Matrix::new(
            file.ambient_dim,
            file.ambient_dim,
            entries,
            field,
        )?);
    }
    let signature = match file.signature {
        Some([p, q]) => {
            if p + q != file.ambient_dim {
                return Err(Error::BadParams(format!(
                    "signature ({p},{q}) does not match ambient_dim {}",
                    file.ambient_dim
                )));
            }
            Some(SignatureForm::new(p, q))
        }
        None => None,
    };
    Ok(AlgebraInput {
        name: file.name,
        field,
        ambient_dim: file.ambient_dim,
        signature,
        generators,
    })
}

fn is_squarefree(d: u32) -> bool {
    let mut n = d;
    let mut p = 2u32;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        while n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

/// Builtin sources accepted on the command line.
pub fn parse_builtin(name: &str) -> Result<crate::builtins::Builtin> {
    use crate::builtins::Builtin;
    let lower = name.trim().to_ascii_lowercase();
    let parse_pair = |body: &str| -> Result<(usize, usize)> {
        let inner = body
            .strip_suffix(')')
            .ok_or_else(|| Error::BadParams(format!("expected '(p,q)' in '{name}'")))?;
        let mut parts = inner.split(',');
        let p = parts
            .next()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::BadParams(format!("bad parameters in '{name}'")))?;
        let q = parts
            .next()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::BadParams(format!("bad parameters in '{name}'")))?;
        if parts.next().is_some() {
            return Err(Error::BadParams(format!("too many parameters in '{name}'")));
        }
        Ok((p, q))
    };
    if let Some(rest) = lower.strip_prefix("so(") {
        let (p, q) = parse_pair(rest)?;
        return Ok(Builtin::So { p, q });
    }
    if let Some(rest) = lower.strip_prefix("u_real(") {
        let (p, q) = parse_pair(rest)?;
        return Ok(Builtin::URealified { p, q });
    }
    if let Some(rest) = lower.strip_prefix("su_real(") {
        let (p, q) = parse_pair(rest)?;
        return Ok(Builtin::SuRealified { p, q });
    }
    if let Some(rest) = lower.strip_prefix("s1_so_real(") {
        let (p, q) = parse_pair(rest)?;
        return Ok(Builtin::CircleSoRealified { p, q });
    }
    if let Some(rest) = lower.strip_prefix("so21_block(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::BadParams(format!("expected '(n)' in '{name}'")))?;
        let n = inner
            .trim()
            .parse()
            .map_err(|_| Error::BadParams(format!("bad parameter in '{name}'")))?;
        return Ok(Builtin::So21Block { n });
    }
    match lower.as_str() {
        "appendix_so12" => Ok(Builtin::AppendixSo12),
        "appendix_so3" => Ok(Builtin::AppendixSo3),
        "sl2_sl2_on_r22" => Ok(Builtin::Sl2Sl2OnR22),
        "sl2" => Ok(Builtin::Sl2Std),
        other => Err(Error::BadParams(format!("unknown builtin '{other}'"))),
    }
}
