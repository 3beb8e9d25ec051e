//! Real / complex / quaternionic classification of irreducible
//! representations, invariant conjugations, and the exact rewrite of a real
//! module with invariant complex structure as a complex module.

use crate::error::{Error, Result};
use crate::liealg::derealify_matrix;
use crate::matrix::{common_kernel, Matrix, Subspace};
use crate::poly;
use crate::repcheck::meataxe::{decide_irreducibility, is_scalar_matrix, normalize_conjugation};
use crate::repcheck::{commutant_matrices, Representation};
use crate::scalar::{Field, Scalar};

/// Result of the self-conjugacy analysis of a complex representation.
/// An antilinear invariant map C(v) = N * conj(v) squares to a real scalar;
/// its sign distinguishes real from quaternionic type.
#[derive(Clone, Debug)]
pub enum ConjugationOutcome {
    NotSelfConjugate,
    /// C^2 = +Id (after scaling): the module has an invariant real form.
    RealConj { witness: Matrix },
    /// C^2 = -Id (after scaling): C is a second complex structure.
    QuaternionicConj { witness: Matrix },
}

/// The trichotomy for irreducible real representations, by commutant
/// dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeKind {
    Real,
    Complex,
    Quaternionic,
}

impl std::fmt::Display for TypeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeKind::Real => write!(f, "REAL"),
            TypeKind::Complex => write!(f, "COMPLEX"),
            TypeKind::Quaternionic => write!(f, "QUATERNIONIC"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TypeVerdict {
    pub kind: TypeKind,
    pub commutant_dim: usize,
    pub commutant: Vec<Matrix>,
}

/// Classify an irreducible real representation by its commutant dimension,
/// cross-checked by deciding irreducibility of the complexified module over
/// the Gaussian extension (real type iff it stays irreducible).
pub fn classify_type(rep: &Representation, seed: u64, budget: usize) -> Result<TypeVerdict> {
    if !decide_irreducibility(rep, seed, budget)?.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let commutant = commutant_matrices(rep)?;
    let kind = match commutant.len() {
        1 => TypeKind::Real,
        2 => TypeKind::Complex,
        4 => TypeKind::Quaternionic,
        d => {
            return Err(Error::BadStructure(format!(
                "commutant dimension {d} is outside the division-algebra trichotomy"
            )))
        }
    };
    let complexified = rep.complexify()?;
    let cx_irreducible = decide_irreducibility(&complexified, seed, budget)?.is_irreducible();
    if cx_irreducible != (kind == TypeKind::Real) {
        return Err(Error::BadStructure(
            "complexification cross-check disagrees with the commutant dimension".into(),
        ));
    }
    Ok(TypeVerdict { kind, commutant_dim: commutant.len(), commutant })
}

/// Solution space of the antilinear intertwiner equation
/// N * conj(A_i) = A_i * N, as a subspace of flattened matrices over the
/// representation's Gaussian field.
pub fn antilinear_intertwiners(rep: &Representation) -> Result<Subspace> {
    if !rep.field().is_gaussian() {
        return Err(Error::FieldMismatch(rep.field(), rep.field().gaussian()));
    }
    let m = rep.ambient_dim();
    let id = Matrix::identity(m, rep.field());
    let blocks = rep
        .matrices()
        .iter()
        .map(|a| {
            // vec(N conj(A) - A N) = (I (x) conj(A)^t - A (x) I) vec(N)
            id.kron(&a.conj().transpose())?.sub(&a.kron(&id)?)
        })
        .collect::<Result<Vec<_>>>()?;
    common_kernel(m * m, rep.field(), blocks)
}

/// For C(v) = N * conj(v), C^2 = N * conj(N); returns the scalar lambda with
/// N * conj(N) = lambda * Id, erroring when the square is not scalar or not
/// real.
pub fn antilinear_conjugation_square(carrier: &Matrix) -> Result<Scalar> {
    let sq = carrier.matmul(&carrier.conj())?;
    if !is_scalar_matrix(&sq)? {
        return Err(Error::BadStructure(
            "antilinear intertwiner square is not scalar".into(),
        ));
    }
    let lambda = sq.at(0, 0).clone();
    if !lambda.is_real() {
        return Err(Error::BadStructure(
            "antilinear intertwiner square is not real".into(),
        ));
    }
    Ok(lambda.re())
}

/// Full self-conjugacy analysis of a complex irreducible representation.
pub fn conjugation_analysis(
    rep: &Representation,
    seed: u64,
    budget: usize,
) -> Result<ConjugationOutcome> {
    if !decide_irreducibility(rep, seed, budget)?.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let space = antilinear_intertwiners(rep)?;
    match space.dim() {
        0 => Ok(ConjugationOutcome::NotSelfConjugate),
        1 => {
            let m = rep.ambient_dim();
            let carrier = Matrix::from_flat(m, m, space.basis()[0].clone(), rep.field())?;
            let lambda = antilinear_conjugation_square(&carrier)?;
            let witness = normalize_conjugation(&carrier, &lambda)?;
            match lambda.sign()? {
                1 => Ok(ConjugationOutcome::RealConj { witness }),
                -1 => Ok(ConjugationOutcome::QuaternionicConj { witness }),
                _ => Err(Error::BadStructure("conjugation squares to zero".into())),
            }
        }
        d => Err(Error::BadStructure(format!(
            "antilinear intertwiner space has dimension {d} for an irreducible module"
        ))),
    }
}

/// Search the commutant for an exact complex structure J with J^2 = -Id.
/// Candidates are completed squares of commutant elements with quadratic
/// minimal polynomial; the needed square root must exist in the field.
pub fn find_complex_structure(comm: &[Matrix], field: Field) -> Result<Option<Matrix>> {
    let mut candidates: Vec<Matrix> = comm.to_vec();
    for i in 0..comm.len() {
        for j in i + 1..comm.len() {
            candidates.push(comm[i].add(&comm[j])?);
            candidates.push(comm[i].sub(&comm[j])?);
        }
    }
    for c in &candidates {
        if is_scalar_matrix(c)? {
            continue;
        }
        let mu = poly::minimal_poly(c)?;
        if poly::degree(&mu) != 2 {
            continue;
        }
        // x0 = c + (b/2) I has x0^2 = (b^2/4 - a) I
        let a = &mu[0];
        let b = &mu[1];
        let half_b = b.div(&Scalar::from_int(2))?;
        let n = c.rows();
        let x0 = c.add(&Matrix::identity(n, c.field()).scale(&half_b)?)?;
        let delta = half_b.mul(&half_b)?.sub(a)?;
        let sq = x0.matmul(&x0)?;
        if sq != Matrix::identity(n, c.field()).scale(&delta)? {
            continue;
        }
        if delta.sign()? < 0 {
            if let Some(t) = delta.neg().sqrt_in(field) {
                let j = x0.scale(&t.inv()?)?;
                debug_assert!(j.matmul(&j)? == Matrix::identity(n, c.field()).neg());
                return Ok(Some(j));
            }
        }
    }
    Ok(None)
}

/// Rewrite a real module with invariant complex structure J as a complex
/// module: returns the complex representation, the basis-change matrix P
/// whose columns are (u_1, J u_1, u_2, J u_2, ...), its inverse, and the
/// chosen vectors u_k.
pub fn derealify_rep(
    rep: &Representation,
    j: &Matrix,
) -> Result<(Representation, Matrix, Matrix, Vec<Vec<Scalar>>)> {
    let n = rep.ambient_dim();
    if !n.is_multiple_of(2) {
        return Err(Error::BadStructure("odd dimension has no complex structure".into()));
    }
    let field = rep.field();
    let id = Matrix::identity(n, field);
    let mut span = Subspace::empty(n, field);
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        let e = id.row(i).to_vec();
        if span.contains(&e) {
            continue;
        }
        let je = j.mul_vec(&e)?;
        span.insert(&e)?;
        span.insert(&je)?;
        chosen.push(e);
        if chosen.len() == n / 2 {
            break;
        }
    }
    if chosen.len() != n / 2 {
        return Err(Error::BadStructure("complex basis construction failed".into()));
    }
    let mut p = Matrix::zero(n, n, field);
    for (k, u) in chosen.iter().enumerate() {
        let ju = j.mul_vec(u)?;
        for r in 0..n {
            *p.at_mut(r, 2 * k) = u[r].clone();
            *p.at_mut(r, 2 * k + 1) = ju[r].clone();
        }
    }
    let p_inv = p
        .inverse()?
        .ok_or_else(|| Error::BadStructure("complex basis is singular".into()))?;
    let mut cmats = Vec::new();
    for a in rep.matrices() {
        let a2 = p_inv.matmul(a)?.matmul(&p)?;
        cmats.push(derealify_matrix(&a2)?);
    }
    let name = rep.name().map(|s| format!("{s}_complexform"));
    let crep = Representation::new(name, n / 2, cmats)?;
    Ok((crep, p, p_inv, chosen))
}

/// Basis (over the real subfield) of the fixed space {v : N conj(v) = v} of
/// a conjugation with N conj(N) = Id, returned as complex vectors.
pub fn real_form_basis(carrier: &Matrix, lambda: &Scalar) -> Result<Vec<Vec<Scalar>>> {
    if !lambda.is_one() {
        return Err(Error::BadStructure(
            "real form extraction needs a conjugation squaring to the identity".into(),
        ));
    }
    let m = carrier.rows();
    let real = carrier.field().real_subfield();
    let mut n_re = Matrix::zero(m, m, real);
    let mut n_im = Matrix::zero(m, m, real);
    for i in 0..m {
        for j in 0..m {
            *n_re.at_mut(i, j) = carrier.at(i, j).re().promote(real)?;
            *n_im.at_mut(i, j) = carrier.at(i, j).im().promote(real)?;
        }
    }
    // v = a + ib fixed: (N_re - I) a + N_im b = 0 and N_im a - (N_re + I) b = 0
    let id = Matrix::identity(m, real);
    let mut system = Matrix::zero(2 * m, 2 * m, real);
    let top_left = n_re.sub(&id)?;
    let bottom_right = n_re.add(&id)?.neg();
    for i in 0..m {
        for j in 0..m {
            *system.at_mut(i, j) = top_left.at(i, j).clone();
            *system.at_mut(i, m + j) = n_im.at(i, j).clone();
            *system.at_mut(m + i, j) = n_im.at(i, j).clone();
            *system.at_mut(m + i, m + j) = bottom_right.at(i, j).clone();
        }
    }
    let kernel = system.kernel();
    let mut out = Vec::new();
    for ab in kernel.basis() {
        let mut v = Vec::with_capacity(m);
        for k in 0..m {
            v.push(Scalar::complex(ab[k].clone(), ab[m + k].clone())?);
        }
        out.push(v);
    }
    Ok(out)
}
