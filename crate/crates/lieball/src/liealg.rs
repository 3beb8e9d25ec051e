//! Lie algebras as bracket-closed matrix spaces: closure from generators,
//! structural checks, centers, and the interleaved realification that turns
//! complex matrix algebras into real ones.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// The diagonal form eta = diag(-1 x p, +1 x q), minus signs first: the
/// form on R^{2,n} is -x0 y0 - x1 y1 + sum x_j y_j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignatureForm {
    pub neg: usize,
    pub pos: usize,
}

impl SignatureForm {
    pub fn new(neg: usize, pos: usize) -> Self {
        SignatureForm { neg, pos }
    }

    pub fn dim(&self) -> usize {
        self.neg + self.pos
    }

    pub fn matrix(&self, field: Field) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            let v = if i < self.neg { Scalar::from_int(-1) } else { Scalar::one() };
            *m.at_mut(i, i) = v.promote(field).unwrap();
        }
        m
    }

    /// Sign of the i-th diagonal entry.
    pub fn sign_at(&self, i: usize) -> i8 {
        if i < self.neg {
            -1
        } else {
            1
        }
    }

    /// q(u, v) = sum eta_ii u_i v_i, bilinear (no conjugation).
    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
        if u.len() != self.dim() || v.len() != self.dim() {
            return Err(Error::DimensionMismatch("form applied to wrong length".into()));
        }
        let mut acc = Scalar::zero();
        for i in 0..self.dim() {
            let term = u[i].mul(&v[i])?;
            acc = if self.sign_at(i) < 0 { acc.sub(&term)? } else { acc.add(&term)? };
        }
        Ok(acc)
    }
}

/// A bracket-closed space of square matrices with a canonical basis.
///
/// The basis is stored in the subspace normal form of the flattened
/// matrices, so equal algebras have byte-equal bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: Option<String>,
    ambient_dim: usize,
    field: Field,
    basis: Vec<Matrix>,
}

impl LieAlgebra {
    /// Build from a spanning set; verifies bracket closure exactly.
    pub fn new(name: Option<String>, matrices: Vec<Matrix>) -> Result<Self> {
        let alg = Self::span_unchecked(name, matrices)?;
        for (i, a) in alg.basis.iter().enumerate() {
            for b in &alg.basis[i + 1..] {
                let br = a.bracket(b)?;
                if !alg.contains(&br) {
                    return Err(Error::BadStructure(
                        "matrix span is not closed under the bracket".into(),
                    ));
                }
            }
        }
        Ok(alg)
    }

    /// Canonicalize a spanning set without checking closure.
    fn span_unchecked(name: Option<String>, matrices: Vec<Matrix>) -> Result<Self> {
        let first = matrices
            .first()
            .ok_or_else(|| Error::BadParams("empty generating set".into()))?;
        let n = first.rows();
        let mut field = first.field();
        for m in &matrices {
            if !m.is_square() || m.rows() != n {
                return Err(Error::DimensionMismatch(
                    "generators must be square of equal size".into(),
                ));
            }
            field = field.join(m.field())?;
        }
        let mut span = Subspace::empty(n * n, field);
        for m in &matrices {
            span.insert(&m.flatten())?;
        }
        let basis = span
            .basis()
            .iter()
            .map(|v| Matrix::from_flat(n, n, v.clone(), span.field()))
            .collect::<Result<Vec<_>>>()?;
        Ok(LieAlgebra { name, ambient_dim: n, field: span.field(), basis })
    }

    /// Smallest bracket-closed subspace containing the generators.
    /// Fails once the dimension would exceed `max_dim`.
    pub fn bracket_closure(
        name: Option<String>,
        generators: Vec<Matrix>,
        max_dim: usize,
    ) -> Result<Self> {
        let seed = Self::span_unchecked(None, generators)?;
        let n = seed.ambient_dim;
        let mut span = seed.to_subspace();
        let mut mats: Vec<Matrix> = seed.basis.clone();
        if mats.len() > max_dim {
            return Err(Error::ClosureBudgetExceeded { max_dim, reached: mats.len() });
        }
        loop {
            let upto = mats.len();
            let mut grew = false;
            for i in 0..upto {
                for j in i + 1..upto {
                    let br = mats[i].bracket(&mats[j])?;
                    if br.is_zero() {
                        continue;
                    }
                    if span.insert(&br.flatten())? {
                        mats.push(br);
                        grew = true;
                        if mats.len() > max_dim {
                            return Err(Error::ClosureBudgetExceeded {
                                max_dim,
                                reached: mats.len(),
                            });
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let basis = span
            .basis()
            .iter()
            .map(|v| Matrix::from_flat(n, n, v.clone(), span.field()))
            .collect::<Result<Vec<_>>>()?;
        Ok(LieAlgebra { name, ambient_dim: n, field: span.field(), basis })
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::span(
            self.ambient_dim * self.ambient_dim,
            self.basis.iter().map(|m| m.flatten()).collect(),
            self.field,
        )
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.rows() == self.ambient_dim
            && m.cols() == self.ambient_dim
            && self.to_subspace().contains(&m.flatten())
    }

    /// True iff A^t eta + eta A = 0 for every basis element.
    pub fn check_orthogonality(&self, eta: &SignatureForm) -> Result<bool> {
        if eta.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "form dimension {} vs ambient {}",
                eta.dim(),
                self.ambient_dim
            )));
        }
        let eta_m = eta.matrix(self.field);
        for a in &self.basis {
            let lhs = a.transpose().matmul(&eta_m)?.add(&eta_m.matmul(a)?)?;
            if !lhs.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// {Z in g : [Z, X] = 0 for all X in g}, as a subspace of the flattened
    /// matrix space.
    pub fn center(&self) -> Result<Subspace> {
        let n = self.ambient_dim;
        let k = self.dim();
        if k == 0 {
            return Ok(Subspace::empty(n * n, self.field));
        }
        // unknowns: coefficients c_i of Z = sum c_i B_i
        let mut system = Matrix::zero(k * n * n, k, self.field);
        for (j, bj) in self.basis.iter().enumerate() {
            for (i, bi) in self.basis.iter().enumerate() {
                let br = bi.bracket(bj)?;
                let flat = br.flatten();
                for (r, v) in flat.into_iter().enumerate() {
                    *system.at_mut(j * n * n + r, i) = v;
                }
            }
        }
        let coeff_kernel = system.kernel();
        let mut out = Subspace::empty(n * n, self.field);
        for coeffs in coeff_kernel.basis() {
            let mut z = Matrix::zero(n, n, self.field);
            for (i, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                z = z.add(&self.basis[i].scale(c)?)?;
            }
            out.insert(&z.flatten())?;
        }
        Ok(out)
    }

    /// Exact Jacobi identity over all basis triples.
    pub fn jacobi_holds(&self) -> Result<bool> {
        for a in &self.basis {
            for b in &self.basis {
                for c in &self.basis {
                    let s = a
                        .bracket(&b.bracket(c)?)?
                        .add(&b.bracket(&c.bracket(a)?)?)?
                        .add(&c.bracket(&a.bracket(b)?)?)?;
                    if !s.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// The standard interleaved complex structure on R^{2m}: block diagonal
/// copies of [[0,-1],[1,0]].
pub fn standard_j(m: usize, field: Field) -> Matrix {
    let mut j = Matrix::zero(2 * m, 2 * m, field);
    for k in 0..m {
        *j.at_mut(2 * k, 2 * k + 1) = Scalar::from_int(-1).promote(field).unwrap();
        *j.at_mut(2 * k + 1, 2 * k) = Scalar::one().promote(field).unwrap();
    }
    j
}

/// Interleaved realification: complex coordinate k maps to real coordinates
/// (2k, 2k+1), so an entry x + iy becomes the block [[x, -y], [y, x]] and a
/// hermitian form of signature (p, q) realifies to eta(2p, 2q).
pub fn realify_matrix(m: &Matrix) -> Result<Matrix> {
    if !m.field().is_gaussian() {
        return Err(Error::FieldMismatch(m.field(), m.field().gaussian()));
    }
    let real_field = m.field().real_subfield();
    let mut out = Matrix::zero(2 * m.rows(), 2 * m.cols(), real_field);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let z = m.at(i, j);
            if z.is_zero() {
                continue;
            }
            let x = z.re();
            let y = z.im();
            *out.at_mut(2 * i, 2 * j) = x.clone().promote(real_field)?;
            *out.at_mut(2 * i, 2 * j + 1) = y.neg().promote(real_field)?;
            *out.at_mut(2 * i + 1, 2 * j) = y.promote(real_field)?;
            *out.at_mut(2 * i + 1, 2 * j + 1) = x.promote(real_field)?;
        }
    }
    Ok(out)
}

pub fn realify_all(mats: &[Matrix]) -> Result<Vec<Matrix>> {
    mats.iter().map(realify_matrix).collect()
}

/// Interleaved realification of a complex vector.
pub fn realify_vector(v: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut out = Vec::with_capacity(2 * v.len());
    for z in v {
        let field = z.field().real_subfield();
        out.push(z.re().promote(field)?);
        out.push(z.im().promote(field)?);
    }
    Ok(out)
}

/// Inverse of [`realify_matrix`] for matrices in interleaved block form;
/// errors when the matrix is not complex-linear in the standard structure.
pub fn derealify_matrix(m: &Matrix) -> Result<Matrix> {
    if !m.rows().is_multiple_of(2) || !m.cols().is_multiple_of(2) {
        return Err(Error::BadStructure("odd real dimension".into()));
    }
    let rows = m.rows() / 2;
    let cols = m.cols() / 2;
    let field = m.field().gaussian();
    let mut out = Matrix::zero(rows, cols, field);
    for i in 0..rows {
        for j in 0..cols {
            let x = m.at(2 * i, 2 * j);
            let y = m.at(2 * i + 1, 2 * j);
            if m.at(2 * i + 1, 2 * j + 1) != x || *m.at(2 * i, 2 * j + 1) != y.neg() {
                return Err(Error::BadStructure(
                    "matrix does not commute with the standard complex structure".into(),
                ));
            }
            *out.at_mut(i, j) = Scalar::complex(x.clone(), y.clone())?;
        }
    }
    Ok(out)
}

/// Complexification: the same matrices over the Gaussian extension.
pub fn complexify_matrix(m: &Matrix) -> Result<Matrix> {
    m.promote(m.field().gaussian())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::*;

    #[test]
    fn closure_of_appendix_generators() {
        let g = LieAlgebra::bracket_closure(
            None,
            vec![appendix_u(), appendix_v()],
            10,
        )
        .unwrap();
        assert_eq!(g.dim(), 3);
        assert!(g.contains(&appendix_w()));
        let g_star = LieAlgebra::bracket_closure(
            None,
            vec![appendix_u_star(), appendix_v_star()],
            10,
        )
        .unwrap();
        assert_eq!(g_star.dim(), 3);
        assert!(g_star.contains(&appendix_w()));
        // [V*, W] = U*
        assert_eq!(
            appendix_v_star().bracket(&appendix_w()).unwrap(),
            appendix_u_star()
        );
        // [W, U*] = V*
        assert_eq!(
            appendix_w().bracket(&appendix_u_star()).unwrap(),
            appendix_v_star()
        );
    }

    #[test]
    fn closure_of_single_matrix_is_a_line() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let g = LieAlgebra::bracket_closure(None, vec![a], 4).unwrap();
        assert_eq!(g.dim(), 1);
    }

    #[test]
    fn builtin_dimensions() {
        assert_eq!(so_pq(2, 3).unwrap().dim(), 10);
        assert_eq!(u_pq_realified(1, 1).unwrap().dim(), 4);
        assert_eq!(su_pq_realified(1, 2).unwrap().dim(), 8);
        assert_eq!(circle_so_realified(1, 2).unwrap().dim(), 4);
        assert_eq!(appendix_so12().unwrap().dim(), 3);
        assert_eq!(appendix_so3().unwrap().dim(), 3);
        assert_eq!(sl2_sl2_on_r22().unwrap().dim(), 6);
    }

    #[test]
    fn orthogonality_checks() {
        let eta23 = SignatureForm::new(2, 3);
        assert!(so_pq(2, 3).unwrap().check_orthogonality(&eta23).unwrap());
        assert!(appendix_so12().unwrap().check_orthogonality(&eta23).unwrap());
        assert!(appendix_so3()
            .unwrap()
            .check_orthogonality(&SignatureForm::new(0, 5))
            .unwrap());
        // realified u(1,1) preserves eta(2,2)
        assert!(u_pq_realified(1, 1)
            .unwrap()
            .check_orthogonality(&SignatureForm::new(2, 2))
            .unwrap());
        // and the same for every realified unitary family
        assert!(u_pq_realified(1, 2)
            .unwrap()
            .check_orthogonality(&SignatureForm::new(2, 4))
            .unwrap());
        assert!(su_pq_realified(1, 2)
            .unwrap()
            .check_orthogonality(&SignatureForm::new(2, 4))
            .unwrap());
        assert!(circle_so_realified(1, 2)
            .unwrap()
            .check_orthogonality(&SignatureForm::new(2, 4))
            .unwrap());
        // a non-example: sl(2,R) does not preserve any eta
        assert!(!sl2_std()
            .unwrap()
            .check_orthogonality(&SignatureForm::new(1, 1))
            .unwrap());
    }

    #[test]
    fn center_dimensions() {
        // u(1,p) realified has a one-dimensional center spanned by J
        let u11 = u_pq_realified(1, 1).unwrap();
        let c = u11.center().unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&standard_j(2, Field::Rat).flatten()));
        assert_eq!(appendix_so12().unwrap().center().unwrap().dim(), 0);
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let line = LieAlgebra::new(None, vec![a]).unwrap();
        assert_eq!(line.center().unwrap().dim(), 1);
    }

    #[test]
    fn realify_basics() {
        let i_mat = Matrix::new(1, 1, vec![Scalar::i()], Field::GaussRat).unwrap();
        assert_eq!(
            realify_matrix(&i_mat).unwrap(),
            Matrix::from_i64(&[&[0, -1], &[1, 0]])
        );
        let one = Matrix::identity(1, Field::GaussRat);
        assert_eq!(realify_matrix(&one).unwrap(), Matrix::identity(2, Field::Rat));
        let rt = derealify_matrix(&realify_matrix(&i_mat).unwrap()).unwrap();
        assert_eq!(rt, i_mat);
    }

    #[test]
    fn jacobi_identity_for_builtins() {
        for g in [
            so_pq(1, 2).unwrap(),
            u_pq_realified(1, 1).unwrap(),
            appendix_so12().unwrap(),
            sl2_sl2_on_r22().unwrap(),
        ] {
            assert!(g.jacobi_holds().unwrap());
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let g = appendix_so12().unwrap();
        let again =
            LieAlgebra::bracket_closure(None, g.basis().to_vec(), 10).unwrap();
        assert_eq!(g.to_subspace(), again.to_subspace());
        assert_eq!(g.basis(), again.basis());
    }
}
