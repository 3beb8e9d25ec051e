//! Invariant bilinear and hermitian forms with exact signatures, and the
//! hermitian-form constructions attached to quaternionic structures.
//!
//! Conventions: bilinear forms are x^t S y; hermitian forms are linear in
//! the first argument, x^t H conj(y), with hermitian symmetry H = conj(H)^t.
//! Signatures are reported as (neg, pos, null), minus signs first.

use crate::error::{Error, Result};
use crate::matrix::{common_kernel, Matrix, Subspace};
use crate::repcheck::Representation;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormSymmetry {
    Symmetric,
    Antisymmetric,
    Hermitian,
}

/// Exact solution space of the invariance equations intersected with a
/// symmetry class, with signatures for the definite-testable members.
#[derive(Clone, Debug)]
pub struct FormSpace {
    pub symmetry: FormSymmetry,
    pub basis: Vec<Matrix>,
    /// Signature (neg, pos, null) per basis member, for symmetric and
    /// hermitian spaces.
    pub signatures: Vec<(usize, usize, usize)>,
}

impl FormSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// A^t S + S A = 0 for every generator A, intersected with the requested
/// symmetry class. For the hermitian class the invariance condition reads
/// A^t H + H conj(A) = 0.
pub fn invariant_forms(rep: &Representation, symmetry: FormSymmetry) -> Result<FormSpace> {
    let n = rep.ambient_dim();
    let field = rep.field();
    match symmetry {
        FormSymmetry::Symmetric | FormSymmetry::Antisymmetric => {
            let id = Matrix::identity(n, field);
            let mut blocks = Vec::new();
            for a in rep.matrices() {
                // vec(A^t S + S A) = (A^t (x) I + I (x) A^t) vec(S)
                blocks.push(a.transpose().kron(&id)?.add(&id.kron(&a.transpose())?)?);
            }
            blocks.push(symmetry_block(n, field, symmetry == FormSymmetry::Symmetric)?);
            let sol = common_kernel(n * n, field, blocks)?;
            let mut basis = Vec::new();
            let mut signatures = Vec::new();
            for v in sol.basis() {
                let mut s = Matrix::from_flat(n, n, v.clone(), sol.field())?;
                if symmetry == FormSymmetry::Symmetric && field.is_real() {
                    // canonical representative: no more minuses than pluses
                    let (neg, pos, null) = signature(&s)?;
                    if neg > pos {
                        s = s.neg();
                        signatures.push((pos, neg, null));
                    } else {
                        signatures.push((neg, pos, null));
                    }
                }
                basis.push(s);
            }
            Ok(FormSpace { symmetry, basis, signatures })
        }
        FormSymmetry::Hermitian => {
            if !field.is_gaussian() {
                return Err(Error::FieldMismatch(field, field.gaussian()));
            }
            let id = Matrix::identity(n, field);
            let mut blocks = Vec::new();
            for a in rep.matrices() {
                // vec(A^t H + H conj(A)) = (A^t (x) I + I (x) conj(A)^t) vec(H)
                blocks.push(a.transpose().kron(&id)?.add(&id.kron(&a.conj().transpose())?)?);
            }
            let sol = common_kernel(n * n, field, blocks)?;
            // The solution space is stable under H -> conj(H)^t; its
            // hermitian fixed points span it over the real subfield.
            let real = field.real_subfield();
            let mut seen = Subspace::empty(2 * n * n, real);
            let mut basis = Vec::new();
            let mut signatures = Vec::new();
            for v in sol.basis() {
                let s = Matrix::from_flat(n, n, v.clone(), field)?;
                let star = s.conj().transpose();
                let h1 = s.add(&star)?;
                let h2 = s.sub(&star)?.scale(&Scalar::i())?;
                for h in [h1, h2] {
                    if h.is_zero() {
                        continue;
                    }
                    if seen.insert(&split_re_im(&h)?)? {
                        signatures.push(hermitian_signature(&h)?);
                        basis.push(h);
                    }
                }
            }
            Ok(FormSpace { symmetry, basis, signatures })
        }
    }
}

/// Real coordinates (re, im interleaved) of a Gaussian matrix, for spanning
/// arguments over the real subfield.
fn split_re_im(m: &Matrix) -> Result<Vec<Scalar>> {
    let real = m.field().real_subfield();
    let mut out = Vec::with_capacity(2 * m.rows() * m.cols());
    for v in m.flatten() {
        out.push(v.re().promote(real)?);
        out.push(v.im().promote(real)?);
    }
    Ok(out)
}

fn symmetry_block(n: usize, field: Field, symmetric: bool) -> Result<Matrix> {
    let mut block = Matrix::zero(n * n, n * n, field);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            let one = Scalar::one().promote(field)?;
            let other = if symmetric { one.neg() } else { one.clone() };
            *block.at_mut(row, i * n + j) = one;
            let cur = block.at(row, j * n + i).add(&other)?;
            *block.at_mut(row, j * n + i) = cur;
        }
    }
    Ok(block)
}

/// Exact Sylvester signature (neg, pos, null) of a real symmetric matrix by
/// congruence diagonalization.
pub fn signature(s: &Matrix) -> Result<(usize, usize, usize)> {
    if !s.is_square() || !s.field().is_real() {
        return Err(Error::NotSymmetric);
    }
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    congruence_counts(s, false)
}

/// Exact signature of a hermitian matrix (convention: linear in the first
/// argument, H = conj(H)^t).
pub fn hermitian_signature(h: &Matrix) -> Result<(usize, usize, usize)> {
    if !h.is_square() {
        return Err(Error::NotSymmetric);
    }
    if *h != h.conj().transpose() {
        return Err(Error::NotSymmetric);
    }
    congruence_counts(h, true)
}

fn congruence_counts(s: &Matrix, hermitian: bool) -> Result<(usize, usize, usize)> {
    let n = s.rows();
    let mut m = s.clone();
    let mut active: Vec<bool> = vec![true; n];
    let mut neg = 0usize;
    let mut pos = 0usize;
    loop {
        let Some(k) = (0..n).find(|&k| active[k] && !m.at(k, k).is_zero()) else {
            // all active diagonal entries vanish; create one from an
            // off-diagonal entry or stop
            let mut pair = None;
            'outer: for i in 0..n {
                if !active[i] {
                    continue;
                }
                for j in 0..n {
                    if active[j] && i != j && !m.at(i, j).is_zero() {
                        pair = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let Some((i, j)) = pair else {
                break;
            };
            for t in [Scalar::one(), Scalar::i().neg()] {
                if !hermitian && t == Scalar::i().neg() {
                    break;
                }
                let tc = t.conj();
                // b_i := b_i + t b_j, first argument scales rows by t
                let mut trial = m.clone();
                for c in 0..n {
                    let v = trial.at(i, c).add(&trial.at(j, c).mul(&t)?)?;
                    *trial.at_mut(i, c) = v;
                }
                for r in 0..n {
                    let v = trial.at(r, i).add(&trial.at(r, j).mul(&tc)?)?;
                    *trial.at_mut(r, i) = v;
                }
                if !trial.at(i, i).is_zero() {
                    m = trial;
                    break;
                }
            }
            if m.at(i, i).is_zero() {
                // symmetric case always succeeds with t = 1: 2 S_ij != 0
                return Err(Error::BadStructure("congruence pivot construction failed".into()));
            }
            continue;
        };
        let pivot = m.at(k, k).clone();
        match pivot.sign()? {
            1 => pos += 1,
            -1 => neg += 1,
            _ => unreachable!("pivot is nonzero"),
        }
        for i in 0..n {
            if i == k || !active[i] || m.at(i, k).is_zero() {
                continue;
            }
            let f = m.at(i, k).div(&pivot)?;
            let fc = if hermitian { f.conj() } else { f.clone() };
            for c in 0..n {
                let v = m.at(i, c).sub(&m.at(k, c).mul(&f)?)?;
                *m.at_mut(i, c) = v;
            }
            for r in 0..n {
                let v = m.at(r, i).sub(&m.at(r, k).mul(&fc)?)?;
                *m.at_mut(r, i) = v;
            }
        }
        active[k] = false;
    }
    Ok((neg, pos, n - neg - pos))
}

/// An antilinear map v -> carrier * conj(v) on a complex module.
#[derive(Clone, Debug)]
pub struct AntilinearMap {
    pub carrier: Matrix,
}

impl AntilinearMap {
    pub fn new(carrier: Matrix) -> Self {
        AntilinearMap { carrier }
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let conj: Vec<Scalar> = v.iter().map(|x| x.conj()).collect();
        self.carrier.mul_vec(&conj)
    }

    /// J^2 = -Id.
    pub fn squares_to_minus_id(&self) -> Result<bool> {
        let m = self.carrier.rows();
        Ok(self.carrier.matmul(&self.carrier.conj())?
            == Matrix::identity(m, self.carrier.field()).neg())
    }

    /// Commutes with every operator: carrier * conj(A) = A * carrier.
    pub fn intertwines(&self, rep: &Representation) -> Result<bool> {
        for a in rep.matrices() {
            if self.carrier.matmul(&a.conj())? != a.matmul(&self.carrier)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A constructed hermitian form together with the exact rescaling that was
/// applied to the input form to reach the compatible normalization.
#[derive(Clone, Debug)]
pub struct HermitianForm {
    pub matrix: Matrix,
    pub scaling: Scalar,
    pub signature: (usize, usize, usize),
}

fn validate_invariant_bilinear(
    rep: &Representation,
    form: &Matrix,
    antisymmetric: bool,
) -> Result<()> {
    let n = rep.ambient_dim();
    if form.rows() != n || form.cols() != n {
        return Err(Error::DimensionMismatch("form size".into()));
    }
    let t = form.transpose();
    let ok = if antisymmetric { t == form.neg() } else { t == *form };
    if !ok {
        return Err(Error::BadStructure("form has the wrong symmetry".into()));
    }
    if form.rank() != n {
        return Err(Error::BadStructure("form is degenerate".into()));
    }
    for a in rep.matrices() {
        if !a.transpose().matmul(form)?.add(&form.matmul(a)?)?.is_zero() {
            return Err(Error::BadStructure("form is not invariant".into()));
        }
    }
    Ok(())
}

fn validate_quaternionic_structure(rep: &Representation, j: &AntilinearMap) -> Result<()> {
    if !j.squares_to_minus_id()? {
        return Err(Error::BadStructure("J^2 is not -Id".into()));
    }
    if !j.intertwines(rep)? {
        return Err(Error::BadStructure("J is not invariant".into()));
    }
    Ok(())
}

/// Schur scaling: find lambda with conj(M^t F M) = lambda F, verify it
/// exactly, and return mu with mu^2 = lambda so that mu F is compatible
/// with J.
fn compatibility_scaling(form: &Matrix, carrier: &Matrix) -> Result<Scalar> {
    let twisted = carrier.transpose().matmul(form)?.matmul(carrier)?.conj();
    // lambda from the first nonzero entry of form
    let n = form.rows();
    let mut lambda = None;
    'outer: for i in 0..n {
        for j in 0..n {
            if !form.at(i, j).is_zero() {
                lambda = Some(twisted.at(i, j).div(form.at(i, j))?);
                break 'outer;
            }
        }
    }
    let lambda = lambda.ok_or_else(|| Error::BadStructure("zero form".into()))?;
    if twisted != form.scale(&lambda)? {
        return Err(Error::BadStructure(
            "twisted form is not proportional to the form".into(),
        ));
    }
    if !lambda.mul(&lambda.conj())?.is_one() {
        return Err(Error::BadStructure("Schur factor is not unitary".into()));
    }
    lambda
        .sqrt_in(form.field())
        .ok_or_else(|| Error::BadStructure("compatibility scaling has no square root in the field".into()))
}

/// From an invariant symplectic form omega and a quaternionic structure J,
/// build the invariant hermitian form <x,y> = omega(x, Jy) after rescaling
/// omega so that omega(Jx, Jy) = conj(omega(x, y)).
pub fn hermitian_from_symplectic(
    j: &AntilinearMap,
    omega: &Matrix,
    rep: &Representation,
) -> Result<HermitianForm> {
    if !rep.field().is_gaussian() {
        return Err(Error::FieldMismatch(rep.field(), rep.field().gaussian()));
    }
    validate_quaternionic_structure(rep, j)?;
    validate_invariant_bilinear(rep, omega, true)?;
    let mu = compatibility_scaling(omega, &j.carrier)?;
    let scaled = omega.scale(&mu)?;
    let h = scaled.matmul(&j.carrier)?;
    check_hermitian_invariant(rep, &h)?;
    // J-compatibility: <Jx, Jy> = conj <x, y>
    let twisted = j.carrier.transpose().matmul(&h)?.matmul(&j.carrier.conj())?;
    if twisted != h.conj() {
        return Err(Error::BadStructure("constructed form is not J-compatible".into()));
    }
    let signature = hermitian_signature(&h)?;
    Ok(HermitianForm { matrix: h, scaling: mu, signature })
}

/// From an invariant symmetric form sigma and a quaternionic structure J,
/// build <x,y> = i * sigma(x, Jy); the result is hermitian, invariant,
/// J-anti-compatible, and of neutral signature (m, m).
pub fn hermitian_from_symmetric(
    j: &AntilinearMap,
    sigma: &Matrix,
    rep: &Representation,
) -> Result<HermitianForm> {
    if !rep.field().is_gaussian() {
        return Err(Error::FieldMismatch(rep.field(), rep.field().gaussian()));
    }
    validate_quaternionic_structure(rep, j)?;
    validate_invariant_bilinear(rep, sigma, false)?;
    let mu = compatibility_scaling(sigma, &j.carrier)?;
    let scaled = sigma.scale(&mu)?;
    let h = scaled.matmul(&j.carrier)?.scale(&Scalar::i())?;
    check_hermitian_invariant(rep, &h)?;
    // J-anti-compatibility: <Jx, Jy> = -conj <x, y>
    let twisted = j.carrier.transpose().matmul(&h)?.matmul(&j.carrier.conj())?;
    if twisted != h.conj().neg() {
        return Err(Error::BadStructure("constructed form is not J-anti-compatible".into()));
    }
    let signature = hermitian_signature(&h)?;
    let n = h.rows();
    if signature != (n / 2, n / 2, 0) {
        return Err(Error::BadStructure(format!(
            "expected neutral signature, found {signature:?}"
        )));
    }
    Ok(HermitianForm { matrix: h, scaling: mu, signature })
}

fn check_hermitian_invariant(rep: &Representation, h: &Matrix) -> Result<()> {
    if *h != h.conj().transpose() {
        return Err(Error::BadStructure("constructed form is not hermitian".into()));
    }
    for a in rep.matrices() {
        if !a.transpose().matmul(h)?.add(&h.matmul(&a.conj())?)?.is_zero() {
            return Err(Error::BadStructure("constructed form is not invariant".into()));
        }
    }
    Ok(())
}

/// Gram-Schmidt basis orthonormal for a complex bilinear symmetric form,
/// when the needed square roots exist in the field.
pub fn sigma_orthonormal_basis(sigma: &Matrix) -> Result<Vec<Vec<Scalar>>> {
    let n = sigma.rows();
    let field = sigma.field();
    let value = |u: &[Scalar], v: &[Scalar]| -> Result<Scalar> {
        crate::matrix::dot(&sigma.mul_vec(v)?, u)
    };
    let id = Matrix::identity(n, field);
    let mut out: Vec<Vec<Scalar>> = Vec::new();
    let mut pool: Vec<Vec<Scalar>> = (0..n).map(|i| id.row(i).to_vec()).collect();
    while out.len() < n {
        // reduce pool against the orthonormal vectors found so far
        let mut reduced: Vec<Vec<Scalar>> = Vec::new();
        for v in &pool {
            let mut w = v.clone();
            for u in &out {
                let c = value(&w, u)?;
                if !c.is_zero() {
                    w = crate::matrix::vec_sub(&w, &crate::matrix::vec_scale(u, &c)?)?;
                }
            }
            if !crate::matrix::vec_is_zero(&w) {
                reduced.push(w);
            }
        }
        // pick a non-isotropic vector, combining two if necessary
        let mut candidate: Option<Vec<Scalar>> = None;
        'search: for (i, v) in reduced.iter().enumerate() {
            if !value(v, v)?.is_zero() {
                candidate = Some(v.clone());
                break;
            }
            for w in reduced.iter().skip(i + 1) {
                for t in [Scalar::one(), Scalar::i()] {
                    let cand = crate::matrix::vec_add(v, &crate::matrix::vec_scale(w, &t)?)?;
                    if !value(&cand, &cand)?.is_zero() {
                        candidate = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let Some(v) = candidate else {
            return Err(Error::BadStructure("form is degenerate on the remaining space".into()));
        };
        let norm = value(&v, &v)?;
        let root = norm
            .sqrt_in(field)
            .ok_or_else(|| Error::BadStructure("orthonormalization needs a square root outside the field".into()))?;
        out.push(crate::matrix::vec_scale(&v, &root.inv()?)?);
        pool = reduced;
    }
    Ok(out)
}
