//! Representation analysis: commutants, certified irreducibility, type
//! classification, invariant forms, tensor products, and the hermitian-form
//! constructions for quaternionic representations.

pub mod forms;
pub mod meataxe;
pub mod typeclass;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::matrix::{common_kernel, Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// A list of operators acting on a common ambient space. Unlike
/// [`LieAlgebra`] this does not require bracket closure; invariant-subspace
/// questions only depend on the spanned associative action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    name: Option<String>,
    ambient_dim: usize,
    field: Field,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn new(name: Option<String>, ambient_dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        let mut field = Field::Rat;
        for m in &matrices {
            if !m.is_square() || m.rows() != ambient_dim {
                return Err(Error::DimensionMismatch(
                    "operators must be square of the ambient dimension".into(),
                ));
            }
            field = field.join(m.field())?;
        }
        let matrices = matrices
            .into_iter()
            .map(|m| m.promote(field))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { name, ambient_dim, field, matrices })
    }

    pub fn from_algebra(algebra: &LieAlgebra) -> Self {
        Representation {
            name: algebra.name().map(str::to_owned),
            ambient_dim: algebra.ambient_dim(),
            field: algebra.field(),
            matrices: algebra.basis().to_vec(),
        }
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

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// The same operators over the Gaussian extension of the base field.
    pub fn complexify(&self) -> Result<Representation> {
        let field = self.field.gaussian();
        Ok(Representation {
            name: self.name.clone(),
            ambient_dim: self.ambient_dim,
            field,
            matrices: self
                .matrices
                .iter()
                .map(|m| m.promote(field))
                .collect::<Result<Vec<_>>>()?,
        })
    }

    /// Conjugate every operator by P: A -> P^-1 A P.
    pub fn conjugate_by(&self, p: &Matrix, p_inv: &Matrix) -> Result<Representation> {
        let matrices = self
            .matrices
            .iter()
            .map(|a| p_inv.matmul(a)?.matmul(p))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.name.clone(), self.ambient_dim, matrices)
    }
}

/// Exact solution space of {X : X A_i = A_i X for all i}, as a subspace of
/// the flattened n x n matrix space.
pub fn commutant(rep: &Representation) -> Result<Subspace> {
    let n = rep.ambient_dim();
    let field = rep.field();
    let id = Matrix::identity(n, field);
    let blocks = rep
        .matrices()
        .iter()
        .map(|a| {
            // vec(XA - AX) = (I (x) A^t - A (x) I) vec(X), row-major
            id.kron(&a.transpose())?.sub(&a.kron(&id)?)
        })
        .collect::<Result<Vec<_>>>()?;
    common_kernel(n * n, field, blocks)
}

pub fn commutant_matrices(rep: &Representation) -> Result<Vec<Matrix>> {
    let n = rep.ambient_dim();
    Ok(commutant(rep)?
        .basis()
        .iter()
        .map(|v| Matrix::from_flat(n, n, v.clone(), rep.field()).expect("square"))
        .collect())
}

/// The tensor-product action {A (x) 1 + 1 (x) B} on the tensor space.
pub fn tensor_rep(r1: &Representation, r2: &Representation) -> Result<Representation> {
    let field = r1.field().join(r2.field())?;
    let id1 = Matrix::identity(r1.ambient_dim(), field);
    let id2 = Matrix::identity(r2.ambient_dim(), field);
    let mut mats = Vec::new();
    for a in r1.matrices() {
        mats.push(a.kron(&id2)?);
    }
    for b in r2.matrices() {
        mats.push(id1.kron(b)?);
    }
    let name = match (r1.name(), r2.name()) {
        (Some(a), Some(b)) => Some(format!("{a}(x){b}")),
        _ => None,
    };
    Representation::new(name, r1.ambient_dim() * r2.ambient_dim(), mats)
}

/// A product of representation operators, by index; the empty word is the
/// identity.
pub type Word = Vec<usize>;

/// Basis of the unital associative algebra generated by the operators, with
/// each basis element tracked as a word in the generators so certificates
/// can name algebra elements independently of this computation.
#[derive(Clone, Debug)]
pub struct EnvelopingAlgebra {
    pub span: Subspace,
    pub basis: Vec<Matrix>,
    pub words: Vec<Word>,
}

impl EnvelopingAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// BFS closure of {I, B_i} under right multiplication by generators.
pub fn enveloping_algebra(rep: &Representation) -> Result<EnvelopingAlgebra> {
    let n = rep.ambient_dim();
    let field = rep.field();
    let mut span = Subspace::empty(n * n, field);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut words: Vec<Word> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    let id = Matrix::identity(n, field);
    if span.insert(&id.flatten())? {
        basis.push(id);
        words.push(vec![]);
        queue.push(0);
    }
    let mut head = 0;
    while head < queue.len() {
        let idx = queue[head];
        head += 1;
        let current = basis[idx].clone();
        let current_word = words[idx].clone();
        for (g, b) in rep.matrices().iter().enumerate() {
            let prod = current.matmul(b)?;
            if span.insert(&prod.flatten())? {
                let mut w = current_word.clone();
                w.push(g);
                basis.push(prod);
                words.push(w);
                queue.push(basis.len() - 1);
            }
        }
    }
    Ok(EnvelopingAlgebra { span, basis, words })
}

/// Evaluate a word in the representation's operators.
pub fn evaluate_word(rep: &Representation, word: &[usize]) -> Result<Matrix> {
    let n = rep.ambient_dim();
    let mut acc = Matrix::identity(n, rep.field());
    for &g in word {
        let b = rep
            .matrices()
            .get(g)
            .ok_or_else(|| Error::BadParams(format!("word references operator {g}")))?;
        acc = acc.matmul(b)?;
    }
    Ok(acc)
}

/// Evaluate a linear combination of words.
pub fn evaluate_combination(rep: &Representation, comb: &[(Scalar, Word)]) -> Result<Matrix> {
    let n = rep.ambient_dim();
    let mut acc = Matrix::zero(n, n, rep.field());
    for (c, w) in comb {
        acc = acc.add(&evaluate_word(rep, w)?.scale(c)?)?;
    }
    Ok(acc)
}

/// Smallest subspace containing the seeds and stable under every operator
/// (or every transpose when `transpose` is set).
pub fn spin(rep: &Representation, seeds: &[Vec<Scalar>], transpose: bool) -> Result<Subspace> {
    let n = rep.ambient_dim();
    let field = rep.field();
    let mut span = Subspace::empty(n, field);
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for s in seeds {
        if span.insert(s)? {
            queue.push(s.clone());
        }
    }
    let mats: Vec<Matrix> = if transpose {
        rep.matrices().iter().map(|m| m.transpose()).collect()
    } else {
        rep.matrices().to_vec()
    };
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head].clone();
        head += 1;
        for a in &mats {
            let w = a.mul_vec(&v)?;
            if span.insert(&w)? {
                queue.push(w);
            }
        }
    }
    Ok(span)
}

#[cfg(test)]
mod tests;
