//! Cartan decompositions of so(2,n) and so(n+2), compact/non-compact
//! duality, Lie triple verification, the projective model of the Lie ball,
//! totally geodesic embeddings, invariant hulls, fixer algebras, and the
//! parabolic transitivity test.

pub mod embed;
pub mod lieball;
pub mod stab;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::matrix::{Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// Which of the dual pair so(n+2) (compact) / so(2,n) (non-compact) the
/// decomposition lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanVariant {
    Compact,
    Noncompact,
}

/// g = k + m with [k,k] in k, [k,m] in m, [m,m] in k, in the block
/// conventions of the quadric picture: k = so(2) + so(n) block diagonal,
/// m the off-diagonal blocks (skew pairing for so(n+2), symmetric pairing
/// for so(2,n)).
#[derive(Clone, Debug)]
pub struct CartanDecomposition {
    pub n: usize,
    pub variant: CartanVariant,
    pub k_basis: Vec<Matrix>,
    pub m_basis: Vec<Matrix>,
}

/// The m-part element with vector data (u, v): rows 2.. carry the columns
/// u and v; the upper blocks are -u^t, -v^t in the compact case and
/// +u^t, +v^t in the non-compact one.
pub fn m_element(u: &[Scalar], v: &[Scalar], variant: CartanVariant) -> Result<Matrix> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch("u and v must have equal length".into()));
    }
    let n = u.len();
    let mut field = Field::Rat;
    for x in u.iter().chain(v) {
        field = field.join(x.field())?;
    }
    let mut m = Matrix::zero(n + 2, n + 2, field);
    for i in 0..n {
        let (top_u, top_v) = match variant {
            CartanVariant::Compact => (u[i].neg(), v[i].neg()),
            CartanVariant::Noncompact => (u[i].clone(), v[i].clone()),
        };
        *m.at_mut(0, 2 + i) = top_u.promote(field)?;
        *m.at_mut(1, 2 + i) = top_v.promote(field)?;
        *m.at_mut(2 + i, 0) = u[i].promote(field)?;
        *m.at_mut(2 + i, 1) = v[i].promote(field)?;
    }
    Ok(m)
}

/// The Cartan decomposition for the quadric (compact) or the Lie ball
/// (non-compact); all three bracket inclusions are verified exactly.
pub fn cartan(n: usize, variant: CartanVariant) -> Result<CartanDecomposition> {
    if n < 1 {
        return Err(Error::BadParams("need n >= 1".into()));
    }
    let amb = n + 2;
    let field = Field::Rat;
    let mut k_basis = Vec::new();
    // so(2) block
    let mut so2 = Matrix::zero(amb, amb, field);
    *so2.at_mut(0, 1) = Scalar::from_int(-1);
    *so2.at_mut(1, 0) = Scalar::one();
    k_basis.push(so2);
    // so(n) block
    for i in 0..n {
        for j in i + 1..n {
            let mut b = Matrix::zero(amb, amb, field);
            *b.at_mut(2 + i, 2 + j) = Scalar::from_int(-1);
            *b.at_mut(2 + j, 2 + i) = Scalar::one();
            k_basis.push(b);
        }
    }
    let mut m_basis = Vec::new();
    let zero = vec![Scalar::zero(); n];
    let id = Matrix::identity(n, field);
    for i in 0..n {
        m_basis.push(m_element(id.row(i), &zero, variant)?);
    }
    for i in 0..n {
        m_basis.push(m_element(&zero, id.row(i), variant)?);
    }
    let dec = CartanDecomposition { n, variant, k_basis, m_basis };
    dec.verify()?;
    Ok(dec)
}

impl CartanDecomposition {
    pub fn ambient_dim(&self) -> usize {
        self.n + 2
    }

    pub fn k_span(&self) -> Subspace {
        let amb = self.ambient_dim();
        Subspace::span(
            amb * amb,
            self.k_basis.iter().map(|m| m.flatten()).collect(),
            Field::Rat,
        )
    }

    pub fn m_span(&self) -> Subspace {
        let amb = self.ambient_dim();
        Subspace::span(
            amb * amb,
            self.m_basis.iter().map(|m| m.flatten()).collect(),
            Field::Rat,
        )
    }

    fn verify(&self) -> Result<()> {
        let k = self.k_span();
        let m = self.m_span();
        for (left, right, target, label) in [
            (&self.k_basis, &self.k_basis, &k, "[k,k] in k"),
            (&self.k_basis, &self.m_basis, &m, "[k,m] in m"),
            (&self.m_basis, &self.m_basis, &k, "[m,m] in k"),
        ] {
            for a in left.iter() {
                for b in right.iter() {
                    if !target.contains(&a.bracket(b)?.flatten()) {
                        return Err(Error::BadStructure(format!(
                            "Cartan inclusion {label} fails"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Extract the (u, v) data of an element of this decomposition's m-part.
    pub fn m_data(&self, x: &Matrix) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
        let amb = self.ambient_dim();
        if x.rows() != amb || x.cols() != amb {
            return Err(Error::DimensionMismatch("wrong ambient dimension".into()));
        }
        if !self.m_span().contains(&x.flatten()) {
            return Err(Error::NotInM);
        }
        let u = (0..self.n).map(|i| x.at(2 + i, 0).clone()).collect();
        let v = (0..self.n).map(|i| x.at(2 + i, 1).clone()).collect();
        Ok((u, v))
    }
}

/// Duality: the sign flip of the upper off-diagonal block carries the
/// compact m to the non-compact m* and reverses the k-valued bracket,
/// [X*, Y*] = -[X, Y].
pub fn dualize(x: &Matrix, compact: &CartanDecomposition) -> Result<Matrix> {
    if compact.variant != CartanVariant::Compact {
        return Err(Error::BadParams("dualize expects the compact decomposition".into()));
    }
    let (u, v) = compact.m_data(x)?;
    m_element(&u, &v, CartanVariant::Noncompact)
}

/// [[m', m'], m'] inside m', the defining condition for a totally geodesic
/// submanifold through the base point.
pub fn is_lie_triple(m_prime: &[Matrix], dec: &CartanDecomposition) -> Result<bool> {
    let amb = dec.ambient_dim();
    let m = dec.m_span();
    for x in m_prime {
        if x.rows() != amb || x.cols() != amb || !m.contains(&x.flatten()) {
            return Err(Error::NotInM);
        }
    }
    let mut span = Subspace::empty(amb * amb, Field::Rat);
    for x in m_prime {
        span.insert(&x.flatten())?;
    }
    for a in m_prime {
        for b in m_prime {
            let ab = a.bracket(b)?;
            for c in m_prime {
                if !span.contains(&ab.bracket(c)?.flatten()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The appendix type-(A) Lie triple span{U*, V*} and its compact partner
/// span{U, V}.
pub fn appendix_lie_triple(variant: CartanVariant) -> Vec<Matrix> {
    match variant {
        CartanVariant::Compact => {
            vec![crate::builtins::appendix_u(), crate::builtins::appendix_v()]
        }
        CartanVariant::Noncompact => {
            vec![crate::builtins::appendix_u_star(), crate::builtins::appendix_v_star()]
        }
    }
}

/// Something that is not a Lie triple: span{M((1,0,0), 0), M((0,1,0),(1,0,0))}
/// in m* of so(2,3).
pub fn crafted_non_triple() -> Result<Vec<Matrix>> {
    let e1 = [Scalar::one(), Scalar::zero(), Scalar::zero()];
    let e2 = [Scalar::zero(), Scalar::one(), Scalar::zero()];
    let zero = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
    Ok(vec![
        m_element(&e1, &zero, CartanVariant::Noncompact)?,
        m_element(&e2, &e1, CartanVariant::Noncompact)?,
    ])
}

/// Re-export of the ambient algebra dimension used by the decomposition.
pub fn ambient_so(n: usize, variant: CartanVariant) -> Result<LieAlgebra> {
    match variant {
        CartanVariant::Compact => crate::builtins::so_pq(0, n + 2),
        CartanVariant::Noncompact => crate::builtins::so_pq(2, n),
    }
}

#[cfg(test)]
mod tests;
