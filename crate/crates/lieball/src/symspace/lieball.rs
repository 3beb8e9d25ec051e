//! The projective model: homogeneous coordinates on the complex quadric,
//! the negativity condition cutting out the Lie ball, and the exact
//! correspondence between negative 2-planes and quadric points.

use crate::error::{Error, Result};
use crate::liealg::SignatureForm;
use crate::matrix::{dot, vec_is_zero};
use crate::scalar::{Field, Scalar};

/// A point of CP^{n+1} in homogeneous coordinates over a Gaussian field.
/// The canonical representative scales the first nonzero coordinate to 1.
#[derive(Clone, Debug)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() < 3 {
            return Err(Error::BadParams("need at least 3 homogeneous coordinates".into()));
        }
        if vec_is_zero(&coords) {
            return Err(Error::BadParams("homogeneous coordinates cannot all vanish".into()));
        }
        let mut field = Field::GaussRat;
        for c in &coords {
            field = field.join(c.field())?;
        }
        let coords = coords
            .into_iter()
            .map(|c| c.promote(field))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProjectivePoint { coords })
    }

    /// Ambient n, with coordinates z_0..z_{n+1}.
    pub fn n(&self) -> usize {
        self.coords.len() - 2
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Scale so the first nonzero coordinate is 1.
    pub fn canonical(&self) -> ProjectivePoint {
        let pivot = self
            .coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero invariant");
        let inv = pivot.inv().expect("nonzero");
        ProjectivePoint {
            coords: self
                .coords
                .iter()
                .map(|c| c.mul(&inv).expect("same field"))
                .collect(),
        }
    }

    pub fn projectively_equal(&self, other: &ProjectivePoint) -> bool {
        self.coords.len() == other.coords.len()
            && self.canonical().coords == other.canonical().coords
    }

    /// The holomorphic quadric equation -z0^2 - z1^2 + sum_{j>=2} z_j^2 = 0,
    /// evaluated exactly (no conjugation).
    pub fn quadric_residual(&self) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (j, z) in self.coords.iter().enumerate() {
            let sq = z.mul(z)?;
            acc = if j < 2 { acc.sub(&sq)? } else { acc.add(&sq)? };
        }
        Ok(acc)
    }

    pub fn on_quadric(&self) -> bool {
        self.quadric_residual().map(|r| r.is_zero()).unwrap_or(false)
    }

    /// The hermitian negativity q(Z, Z) = -|z0|^2 - |z1|^2 + sum |z_j|^2 < 0.
    pub fn hermitian_value(&self) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (j, z) in self.coords.iter().enumerate() {
            let sq = z.norm_sqr();
            acc = if j < 2 { acc.sub(&sq)? } else { acc.add(&sq)? };
        }
        Ok(acc)
    }

    pub fn in_lieball(&self) -> bool {
        self.hermitian_value().map(|v| v.is_negative()).unwrap_or(false)
    }

    /// Orientation of the plane relative to the base plane: the sign of
    /// det [[Re z0, Im z0], [Re z1, Im z1]], invariant under complex
    /// scaling for points with q(Z,Z) < 0. Positive means the connected
    /// component of the base point.
    pub fn orientation_sign(&self) -> Result<i8> {
        let d = self.coords[0]
            .re()
            .mul(&self.coords[1].im())?
            .sub(&self.coords[0].im().mul(&self.coords[1].re())?)?;
        d.sign()
    }
}

/// The base point [1 : i : 0 : ... : 0].
pub fn base_point(n: usize) -> ProjectivePoint {
    let mut coords = vec![Scalar::zero(); n + 2];
    coords[0] = Scalar::one();
    coords[1] = Scalar::i();
    ProjectivePoint::new(coords).expect("valid base point")
}

/// An oriented negative-definite 2-plane span{A, B} of R^{2,n} with
/// orthogonal equal-length spanning vectors.
#[derive(Clone, Debug)]
pub struct NegativePlane {
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
}

impl NegativePlane {
    pub fn new(a: Vec<Scalar>, b: Vec<Scalar>) -> Result<Self> {
        if a.len() != b.len() || a.len() < 3 {
            return Err(Error::DimensionMismatch("plane vectors".into()));
        }
        if a.iter().chain(&b).any(|x| !x.is_real()) {
            return Err(Error::NotNegativePlane);
        }
        let eta = SignatureForm::new(2, a.len() - 2);
        let qa = eta.apply(&a, &a)?;
        let qb = eta.apply(&b, &b)?;
        let ab = eta.apply(&a, &b)?;
        if !ab.is_zero() || qa != qb || !qa.is_negative() {
            return Err(Error::NotNegativePlane);
        }
        Ok(NegativePlane { a, b })
    }

    pub fn ambient_dim(&self) -> usize {
        self.a.len()
    }

    /// The corresponding quadric point Z = A + iB.
    pub fn to_point(&self) -> Result<ProjectivePoint> {
        let coords = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(x, y)| Scalar::complex(x.clone(), y.clone()))
            .collect::<Result<Vec<_>>>()?;
        ProjectivePoint::new(coords)
    }

    /// Whether a vector lies in the plane.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        let span = crate::matrix::Subspace::span(
            self.a.len(),
            vec![self.a.clone(), self.b.clone()],
            Field::Rat,
        );
        span.contains(v)
    }

    pub fn base(n: usize) -> NegativePlane {
        let mut a = vec![Scalar::zero(); n + 2];
        let mut b = vec![Scalar::zero(); n + 2];
        a[0] = Scalar::one();
        b[1] = Scalar::one();
        NegativePlane { a, b }
    }
}

/// Real and imaginary parts of any representative of a quadric point with
/// q(Z,Z) < 0 span a negative plane; the quadric equation forces
/// orthogonality and equal lengths.
pub fn point_to_plane(z: &ProjectivePoint) -> Result<NegativePlane> {
    if !z.on_quadric() || !z.in_lieball() {
        return Err(Error::NotInLieball);
    }
    let a: Vec<Scalar> = z.coords().iter().map(|c| c.re()).collect();
    let b: Vec<Scalar> = z.coords().iter().map(|c| c.im()).collect();
    NegativePlane::new(a, b)
}

/// Check that two planes span the same 2-subspace.
pub fn same_plane(p: &NegativePlane, q: &NegativePlane) -> bool {
    p.contains(&q.a) && p.contains(&q.b) && q.contains(&p.a) && q.contains(&p.b)
}

pub fn dot_real(u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    dot(u, v)
}
