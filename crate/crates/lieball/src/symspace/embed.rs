//! The totally geodesic embeddings into the Lie ball, in the interleaved
//! coordinate convention of the base point [1 : i : 0 : ... : 0].

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symspace::lieball::ProjectivePoint;

/// The embedding families and their parameters.
///
/// I1 embeds complex hyperbolic space CH^k (irreducible image exactly for
/// k = n/2); I2 its real form RH^k; G1 a lower-dimensional Lie ball; G2 a
/// product of two real hyperbolic spaces; P1 the Lorentzian-model RH^k with
/// a fixed timelike direction; P2 is G1 with k = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingSpec {
    I1 { k: usize, n: usize },
    I2 { k: usize, n: usize },
    G1 { k: usize, n: usize },
    G2 { k1: usize, k2: usize, n: usize },
    P1 { k: usize, n: usize },
    P2 { n: usize },
}

/// Input coordinates: a single tuple, or the pair of factors for G2.
#[derive(Clone, Debug)]
pub enum EmbedInput {
    Single(Vec<Scalar>),
    Pair(Vec<Scalar>, Vec<Scalar>),
}

impl EmbeddingSpec {
    pub fn ambient(&self) -> usize {
        match *self {
            EmbeddingSpec::I1 { n, .. }
            | EmbeddingSpec::I2 { n, .. }
            | EmbeddingSpec::G1 { n, .. }
            | EmbeddingSpec::G2 { n, .. }
            | EmbeddingSpec::P1 { n, .. }
            | EmbeddingSpec::P2 { n } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            EmbeddingSpec::I1 { k, n } | EmbeddingSpec::I2 { k, n } => k >= 1 && 2 * k <= n,
            EmbeddingSpec::G1 { k, n } => k >= 1 && k <= n.saturating_sub(1),
            EmbeddingSpec::G2 { k1, k2, n } => k1 >= 1 && k2 >= 1 && k1 + k2 <= n,
            EmbeddingSpec::P1 { k, n } => k >= 1 && k <= n,
            EmbeddingSpec::P2 { n } => n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadParams(format!("{self:?} out of range")))
        }
    }
}

fn real_only(xs: &[Scalar]) -> Result<()> {
    if xs.iter().any(|x| !x.is_real()) {
        return Err(Error::DomainViolation("coordinates must be real".into()));
    }
    Ok(())
}

/// -x0^2 + sum x_i^2 for a hyperbolic tuple.
fn hyper_q(xs: &[Scalar]) -> Result<Scalar> {
    let mut acc = xs[0].mul(&xs[0])?.neg();
    for x in &xs[1..] {
        acc = acc.add(&x.mul(x)?)?;
    }
    Ok(acc)
}

/// -|z0|^2 + sum |z_i|^2 for a complex hyperbolic tuple.
fn hyper_q_hermitian(zs: &[Scalar]) -> Result<Scalar> {
    let mut acc = zs[0].norm_sqr().neg();
    for z in &zs[1..] {
        acc = acc.add(&z.norm_sqr())?;
    }
    Ok(acc)
}

/// Evaluate the embedding at a point, checking the domain condition
/// exactly. The output always satisfies the quadric equation and the
/// negativity condition with zero residual.
pub fn embed(spec: &EmbeddingSpec, input: &EmbedInput) -> Result<ProjectivePoint> {
    spec.validate()?;
    let n = spec.ambient();
    let mut coords = vec![Scalar::zero(); n + 2];
    match (*spec, input) {
        (EmbeddingSpec::I1 { k, .. }, EmbedInput::Single(z)) => {
            if z.len() != k + 1 {
                return Err(Error::BadParams("I1 expects k + 1 coordinates".into()));
            }
            if !hyper_q_hermitian(z)?.is_negative() {
                return Err(Error::DomainViolation(
                    "I1 input is outside complex hyperbolic space".into(),
                ));
            }
            for (j, zj) in z.iter().enumerate() {
                coords[2 * j] = zj.clone();
                coords[2 * j + 1] = zj.mul(&Scalar::i())?;
            }
        }
        (EmbeddingSpec::I2 { k, .. }, EmbedInput::Single(x)) => {
            if x.len() != k + 1 {
                return Err(Error::BadParams("I2 expects k + 1 coordinates".into()));
            }
            real_only(x)?;
            if !hyper_q(x)?.is_negative() {
                return Err(Error::DomainViolation(
                    "I2 input is outside real hyperbolic space".into(),
                ));
            }
            for (j, xj) in x.iter().enumerate() {
                coords[2 * j] = xj.clone();
                coords[2 * j + 1] = xj.mul(&Scalar::i())?;
            }
        }
        (EmbeddingSpec::G1 { .. }, EmbedInput::Single(z))
        | (EmbeddingSpec::P2 { .. }, EmbedInput::Single(z)) => {
            let k = if let EmbeddingSpec::G1 { k, .. } = *spec { k } else { 1 };
            if z.len() != k + 2 {
                return Err(Error::BadParams("G1 expects k + 2 homogeneous coordinates".into()));
            }
            let sub = ProjectivePoint::new(z.clone())?;
            if !sub.on_quadric() || !sub.in_lieball() {
                return Err(Error::DomainViolation(
                    "G1 input is not a point of the lower Lie ball".into(),
                ));
            }
            for (j, zj) in z.iter().enumerate() {
                coords[j] = zj.clone();
            }
        }
        (EmbeddingSpec::G2 { k1, k2, .. }, EmbedInput::Pair(x, y)) => {
            if x.len() != k1 + 1 || y.len() != k2 + 1 {
                return Err(Error::BadParams("G2 expects factors of lengths k1+1, k2+1".into()));
            }
            real_only(x)?;
            real_only(y)?;
            let qx = hyper_q(x)?;
            let qy = hyper_q(y)?;
            if !qx.is_negative() || !qy.is_negative() {
                return Err(Error::DomainViolation(
                    "G2 factors must lie in their real hyperbolic spaces".into(),
                ));
            }
            if qx != qy {
                return Err(Error::DomainViolation(
                    "G2 factors must be scaled to equal hyperbolic norms".into(),
                ));
            }
            coords[0] = x[0].clone();
            coords[1] = y[0].mul(&Scalar::i())?;
            for (j, xj) in x.iter().enumerate().skip(1) {
                coords[1 + j] = xj.clone();
            }
            for (j, yj) in y.iter().enumerate().skip(1) {
                coords[1 + k1 + j] = yj.mul(&Scalar::i())?;
            }
        }
        (EmbeddingSpec::P1 { k, .. }, EmbedInput::Single(x)) => {
            if x.len() != k + 1 {
                return Err(Error::BadParams("P1 expects k + 1 coordinates".into()));
            }
            real_only(x)?;
            let q = hyper_q(x)?;
            if q != Scalar::from_int(-1) {
                return Err(Error::DomainViolation(
                    "P1 input must lie on the Lorentzian unit hyperboloid q(x,x) = -1".into(),
                ));
            }
            coords[0] = Scalar::i();
            for (j, xj) in x.iter().enumerate() {
                coords[1 + j] = xj.clone();
            }
        }
        _ => {
            return Err(Error::BadParams("input shape does not match the embedding type".into()))
        }
    }
    let point = ProjectivePoint::new(coords)?;
    debug_assert!(point.on_quadric());
    debug_assert!(point.in_lieball());
    Ok(point)
}
