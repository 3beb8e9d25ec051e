//! Irreducibility decisions with re-checkable certificates.
//!
//! The method is a characteristic-zero adaptation of the MeatAxe: search the
//! unital enveloping algebra for a singular element with one-dimensional
//! kernel, spin its kernel vector under the algebra and its cokernel vector
//! under the transposes. With nullity one, the two spins decide the question
//! completely. When no such element exists over the base field (the
//! commutant contains a complex structure, so every algebra element has even
//! nullity), the representation is rewritten as a complex one and decided
//! over the Gaussian extension together with an exact self-conjugacy
//! analysis. A verdict is never guessed: if the budget runs out the error is
//! `AnalysisBudgetExceeded`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Subspace};
use crate::poly;
use crate::repcheck::typeclass::{
    antilinear_conjugation_square, antilinear_intertwiners, derealify_rep,
    find_complex_structure, real_form_basis, ConjugationOutcome,
};
use crate::repcheck::{
    commutant_matrices, enveloping_algebra, evaluate_combination, spin, Representation, Word,
};
use crate::scalar::Scalar;

/// Outcome of an irreducibility decision; both variants carry witnesses that
/// [`verify_verdict`] re-checks from stored data alone.
#[derive(Clone, Debug)]
pub enum IrreducibilityVerdict {
    Irreducible(IrreducibilityCertificate),
    Reducible(ReducibleWitness),
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible(_))
    }
}

/// A proper nonzero invariant subspace, exactly invariant under every
/// operator.
#[derive(Clone, Debug)]
pub struct ReducibleWitness {
    pub subspace: Subspace,
}

#[derive(Clone, Debug)]
pub enum IrreducibilityCertificate {
    /// Nullity-one singular element over the representation's own field.
    Norton(NortonCertificate),
    /// The representation is complex-linear for an invariant complex
    /// structure; irreducibility is certified over the Gaussian extension
    /// plus the absence of a real-type conjugation.
    ComplexSplit(Box<ComplexSplitCertificate>),
}

/// Data of the Norton criterion: an explicit singular element z of the
/// unital enveloping algebra (as a combination of words in the generators)
/// with one-dimensional kernel, a kernel vector, and a cokernel vector.
/// Irreducibility holds iff the kernel vector spins to the full space and
/// the cokernel vector spins to the full space under the transposes.
#[derive(Clone, Debug)]
pub struct NortonCertificate {
    pub element: Vec<(Scalar, Word)>,
    pub kernel_vector: Vec<Scalar>,
    pub cokernel_vector: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct ComplexSplitCertificate {
    /// Invariant complex structure J on the real module, J^2 = -Id.
    pub complex_structure: Matrix,
    /// Real vectors u_1..u_m such that (u_1, J u_1, ..., u_m, J u_m) is a
    /// basis; the complex form of the operators is taken in that basis.
    pub complex_basis: Vec<Vec<Scalar>>,
    /// Norton certificate for the complexified (de-realified) module.
    pub inner: NortonCertificate,
    /// Exact self-conjugacy analysis of the complex module: either not
    /// self-conjugate or quaternionic. (A real-type conjugation would make
    /// the real module reducible.)
    pub conjugation: ConjugationOutcome,
}

/// Decide irreducibility. Deterministic given `seed`; `budget` bounds the
/// number of singular-element attempts before the verdict is withheld.
pub fn decide_irreducibility(
    rep: &Representation,
    seed: u64,
    budget: usize,
) -> Result<IrreducibilityVerdict> {
    let n = rep.ambient_dim();
    let field = rep.field();
    let mut attempts = 0usize;

    // Fast deterministic probes: spins of the standard basis vectors.
    let id = Matrix::identity(n, field);
    for i in 0..n {
        let s = spin(rep, &[id.row(i).to_vec()], false)?;
        if s.dim() < n {
            return Ok(IrreducibilityVerdict::Reducible(ReducibleWitness { subspace: s }));
        }
    }

    // The unital enveloping algebra. If it is everything, the module is
    // absolutely irreducible and any rank n-1 element certifies it.
    let env = enveloping_algebra(rep)?;
    if env.dim() == n * n {
        let mut target = Matrix::identity(n, field);
        *target.at_mut(0, 0) = Scalar::zero().promote(field)?;
        // coordinates of the target in the word-tracked basis
        let mut cols = Matrix::zero(n * n, env.dim(), field);
        for (j, b) in env.basis.iter().enumerate() {
            for (i, v) in b.flatten().into_iter().enumerate() {
                *cols.at_mut(i, j) = v;
            }
        }
        let coords = cols
            .solve(&target.flatten())?
            .expect("full algebra contains every matrix");
        let comb: Vec<(Scalar, Word)> = coords
            .into_iter()
            .zip(env.words.iter().cloned())
            .filter(|(c, _)| !c.is_zero())
            .collect();
        attempts += 1;
        if let Some(v) = norton_attempt(rep, comb, &target)? {
            return Ok(v);
        }
    }

    // Dickson probe: the trace-form radical of the enveloping algebra is its
    // Jacobson radical in characteristic zero; if nonzero, rad * V is a
    // proper invariant subspace.
    let k = env.dim();
    let mut gram = Matrix::zero(k, k, field);
    for i in 0..k {
        for j in 0..k {
            *gram.at_mut(i, j) = env.basis[i].matmul(&env.basis[j])?.trace()?;
        }
    }
    let rad = gram.kernel();
    if !rad.is_zero() {
        let mut w = Subspace::empty(n, field);
        for coeffs in rad.basis() {
            let mut x = Matrix::zero(n, n, field);
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    x = x.add(&env.basis[i].scale(c)?)?;
                }
            }
            for col in 0..n {
                w.insert(&x.mul_vec(id.row(col))?)?;
            }
        }
        if !w.is_zero() && w.dim() < n {
            return Ok(IrreducibilityVerdict::Reducible(ReducibleWitness { subspace: w }));
        }
    }

    // Commutant-driven routes: exact eigen-splits of commuting elements, and
    // the complex rewrite when an invariant complex structure exists.
    let comm = commutant_matrices(rep)?;
    if comm.len() > 1 {
        if let Some(w) = commutant_split(n, &comm, field)? {
            return Ok(IrreducibilityVerdict::Reducible(ReducibleWitness { subspace: w }));
        }
        if field.is_real() {
            if let Some(j) = find_complex_structure(&comm, field)? {
                attempts += 1;
                if let Some(v) = complex_split_attempt(rep, &j, seed, budget)? {
                    return Ok(v);
                }
            }
        }
    }

    // Random enveloping-algebra elements with characteristic-polynomial
    // derived singular candidates.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = rep.matrices().len();
    while attempts < budget {
        attempts += 1;
        let mut comb: Vec<(Scalar, Word)> = Vec::new();
        for g in 0..gens {
            let c = rng.gen_range(-2i64..=2);
            if c != 0 {
                comb.push((Scalar::from_int(c), vec![g]));
            }
        }
        if gens > 0 {
            for _ in 0..attempts.min(3) {
                let a = rng.gen_range(0..gens);
                let b = rng.gen_range(0..gens);
                let c = rng.gen_range(-1i64..=1);
                if c != 0 {
                    comb.push((Scalar::from_int(c), vec![a, b]));
                }
            }
        }
        if comb.is_empty() {
            continue;
        }
        let y = evaluate_combination(rep, &comb)?;
        let chi = y.charpoly()?;
        let sf = poly::squarefree_part(&chi)?;
        let mut candidates: Vec<(Vec<(Scalar, Word)>, Matrix)> = Vec::new();
        for root in poly::roots_in_field(&sf, field)? {
            let mut shifted = comb.clone();
            shifted.push((root.neg(), vec![]));
            let z = y.sub(&Matrix::identity(n, field).scale(&root)?)?;
            candidates.push((shifted, z));
        }
        if chi[0].is_zero() {
            candidates.push((comb.clone(), y.clone()));
        }
        for (recipe, z) in candidates {
            let nullity = n - z.rank();
            if nullity == 0 {
                continue;
            }
            if nullity == 1 {
                if let Some(v) = norton_attempt(rep, recipe, &z)? {
                    return Ok(v);
                }
            } else {
                // Even without nullity one, kernel vectors and the cokernel
                // side can still expose an invariant subspace.
                for v in z.kernel().basis() {
                    let s = spin(rep, std::slice::from_ref(v), false)?;
                    if s.dim() < n {
                        return Ok(IrreducibilityVerdict::Reducible(ReducibleWitness {
                            subspace: s,
                        }));
                    }
                }
                for w in z.transpose().kernel().basis() {
                    let s = spin(rep, std::slice::from_ref(w), true)?;
                    if s.dim() < n {
                        return Ok(IrreducibilityVerdict::Reducible(ReducibleWitness {
                            subspace: s.perp(),
                        }));
                    }
                }
            }
        }
    }

    Err(Error::AnalysisBudgetExceeded { attempts })
}

/// Run the Norton criterion for a singular element with nullity one.
/// Returns a complete verdict either way, or None if the element does not
/// actually have nullity one.
fn norton_attempt(
    rep: &Representation,
    recipe: Vec<(Scalar, Word)>,
    z: &Matrix,
) -> Result<Option<IrreducibilityVerdict>> {
    let n = rep.ambient_dim();
    let kernel = z.kernel();
    if kernel.dim() != 1 {
        return Ok(None);
    }
    let v = kernel.basis()[0].clone();
    let cokernel = z.transpose().kernel();
    debug_assert_eq!(cokernel.dim(), 1);
    let w = cokernel.basis()[0].clone();
    let forward = spin(rep, std::slice::from_ref(&v), false)?;
    if forward.dim() < n {
        return Ok(Some(IrreducibilityVerdict::Reducible(ReducibleWitness {
            subspace: forward,
        })));
    }
    let backward = spin(rep, std::slice::from_ref(&w), true)?;
    if backward.dim() < n {
        return Ok(Some(IrreducibilityVerdict::Reducible(ReducibleWitness {
            subspace: backward.perp(),
        })));
    }
    Ok(Some(IrreducibilityVerdict::Irreducible(
        IrreducibilityCertificate::Norton(NortonCertificate {
            element: recipe,
            kernel_vector: v,
            cokernel_vector: w,
        }),
    )))
}

/// Exact eigen-splitting of commutant elements: a non-scalar commuting
/// operator with an eigenvalue in the field yields an invariant kernel.
fn commutant_split(
    n: usize,
    comm: &[Matrix],
    field: crate::scalar::Field,
) -> Result<Option<Subspace>> {
    let mut candidates: Vec<Matrix> = comm.to_vec();
    for i in 0..comm.len() {
        for j in i + 1..comm.len() {
            candidates.push(comm[i].add(&comm[j])?);
            candidates.push(comm[i].sub(&comm[j])?);
            candidates.push(comm[i].matmul(&comm[j])?);
        }
    }
    for c in &candidates {
        if is_scalar_matrix(c)? {
            continue;
        }
        let mu = poly::minimal_poly(c)?;
        for r in poly::roots_in_field(&mu, field)? {
            let shifted = c.sub(&Matrix::identity(n, field).scale(&r)?)?;
            let ker = shifted.kernel();
            if ker.dim() > 0 && ker.dim() < n {
                return Ok(Some(ker));
            }
        }
    }
    Ok(None)
}

pub(crate) fn is_scalar_matrix(m: &Matrix) -> Result<bool> {
    let n = m.rows();
    let c = m.at(0, 0).clone();
    let id = Matrix::identity(n, m.field());
    Ok(*m == id.scale(&c)?)
}

/// Decide over the Gaussian extension through an invariant complex
/// structure, then transfer the verdict back to the real module.
fn complex_split_attempt(
    rep: &Representation,
    j: &Matrix,
    seed: u64,
    budget: usize,
) -> Result<Option<IrreducibilityVerdict>> {
    let n = rep.ambient_dim();
    let (crep, p, _p_inv, complex_basis) = derealify_rep(rep, j)?;
    let inner = match decide_irreducibility(&crep, seed.wrapping_add(1), budget) {
        Ok(v) => v,
        Err(Error::AnalysisBudgetExceeded { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    match inner {
        IrreducibilityVerdict::Reducible(witness) => {
            // A complex invariant subspace realifies to a real one.
            let mut real = Subspace::empty(n, rep.field());
            for v in witness.subspace.basis() {
                for vec in [v.clone(), crate::matrix::vec_scale(v, &Scalar::i())?] {
                    let coords = crate::liealg::realify_vector(&vec)?;
                    real.insert(&p.mul_vec(&coords)?)?;
                }
            }
            debug_assert!(real.dim() > 0 && real.dim() < n);
            Ok(Some(IrreducibilityVerdict::Reducible(ReducibleWitness { subspace: real })))
        }
        IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::Norton(inner_cert)) => {
            let conj_space = antilinear_intertwiners(&crep)?;
            match conj_space.dim() {
                0 => Ok(Some(IrreducibilityVerdict::Irreducible(
                    IrreducibilityCertificate::ComplexSplit(Box::new(ComplexSplitCertificate {
                        complex_structure: j.clone(),
                        complex_basis,
                        inner: inner_cert,
                        conjugation: ConjugationOutcome::NotSelfConjugate,
                    })),
                ))),
                1 => {
                    let m = crep.ambient_dim();
                    let carrier =
                        Matrix::from_flat(m, m, conj_space.basis()[0].clone(), crep.field())?;
                    let lambda = antilinear_conjugation_square(&carrier)?;
                    let sign = lambda.sign()?;
                    if sign < 0 {
                        let normalized = normalize_conjugation(&carrier, &lambda)?;
                        Ok(Some(IrreducibilityVerdict::Irreducible(
                            IrreducibilityCertificate::ComplexSplit(Box::new(
                                ComplexSplitCertificate {
                                    complex_structure: j.clone(),
                                    complex_basis,
                                    inner: inner_cert,
                                    conjugation: ConjugationOutcome::QuaternionicConj {
                                        witness: normalized,
                                    },
                                },
                            )),
                        )))
                    } else {
                        // Real type: the fixed real form is a proper
                        // invariant subspace of the real module.
                        let fixed = real_form_basis(&carrier, &lambda)?;
                        let mut real = Subspace::empty(n, rep.field());
                        for v in fixed {
                            let coords = crate::liealg::realify_vector(&v)?;
                            real.insert(&p.mul_vec(&coords)?)?;
                        }
                        debug_assert!(real.dim() > 0 && real.dim() < n);
                        Ok(Some(IrreducibilityVerdict::Reducible(ReducibleWitness {
                            subspace: real,
                        })))
                    }
                }
                _ => Ok(None),
            }
        }
        IrreducibilityVerdict::Irreducible(_) => Ok(None),
    }
}

/// Scale an antilinear intertwiner so that C^2 = sign(lambda) * Id when the
/// needed square root exists in the field; otherwise return it unscaled
/// (the sign of lambda is scaling-invariant either way).
pub(crate) fn normalize_conjugation(carrier: &Matrix, lambda: &Scalar) -> Result<Matrix> {
    let abs = if lambda.is_negative() { lambda.neg() } else { lambda.clone() };
    if let Some(root) = abs.sqrt_in(carrier.field().real_subfield()) {
        if !root.is_zero() {
            return carrier.scale(&root.inv()?);
        }
    }
    Ok(carrier.clone())
}

/// Re-check a verdict from its stored data only. Returns false on any
/// failure; never panics on malformed certificates.
pub fn verify_verdict(rep: &Representation, verdict: &IrreducibilityVerdict) -> bool {
    verify_verdict_inner(rep, verdict).unwrap_or_default()
}

fn verify_verdict_inner(rep: &Representation, verdict: &IrreducibilityVerdict) -> Result<bool> {
    let n = rep.ambient_dim();
    match verdict {
        IrreducibilityVerdict::Reducible(w) => {
            if w.subspace.ambient_dim() != n || w.subspace.dim() == 0 || w.subspace.dim() >= n {
                return Ok(false);
            }
            for a in rep.matrices() {
                for b in w.subspace.basis() {
                    if !w.subspace.contains(&a.mul_vec(b)?) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::Norton(cert)) => {
            verify_norton(rep, cert)
        }
        IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::ComplexSplit(cs)) => {
            verify_complex_split(rep, cs)
        }
    }
}

fn verify_norton(rep: &Representation, cert: &NortonCertificate) -> Result<bool> {
    let n = rep.ambient_dim();
    let z = match evaluate_combination(rep, &cert.element) {
        Ok(z) => z,
        Err(_) => return Ok(false),
    };
    if z.rank() != n - 1 {
        return Ok(false);
    }
    let v = &cert.kernel_vector;
    let w = &cert.cokernel_vector;
    if v.len() != n || w.len() != n {
        return Ok(false);
    }
    if crate::matrix::vec_is_zero(v) || crate::matrix::vec_is_zero(w) {
        return Ok(false);
    }
    if !crate::matrix::vec_is_zero(&z.mul_vec(v)?) {
        return Ok(false);
    }
    if !crate::matrix::vec_is_zero(&z.transpose().mul_vec(w)?) {
        return Ok(false);
    }
    if !spin(rep, std::slice::from_ref(v), false)?.is_full() {
        return Ok(false);
    }
    if !spin(rep, std::slice::from_ref(w), true)?.is_full() {
        return Ok(false);
    }
    Ok(true)
}

fn verify_complex_split(rep: &Representation, cs: &ComplexSplitCertificate) -> Result<bool> {
    let n = rep.ambient_dim();
    let j = &cs.complex_structure;
    if j.rows() != n || j.cols() != n {
        return Ok(false);
    }
    let id = Matrix::identity(n, rep.field());
    if j.matmul(j)? != id.neg() {
        return Ok(false);
    }
    for a in rep.matrices() {
        if j.matmul(a)? != a.matmul(j)? {
            return Ok(false);
        }
    }
    // Rebuild the complex form in the certified basis.
    if cs.complex_basis.len() * 2 != n {
        return Ok(false);
    }
    let mut p = Matrix::zero(n, n, rep.field());
    for (k, u) in cs.complex_basis.iter().enumerate() {
        if u.len() != n {
            return Ok(false);
        }
        let ju = j.mul_vec(u)?;
        for r in 0..n {
            *p.at_mut(r, 2 * k) = u[r].clone();
            *p.at_mut(r, 2 * k + 1) = ju[r].clone();
        }
    }
    let Some(p_inv) = p.inverse()? else {
        return Ok(false);
    };
    let mut cmats = Vec::new();
    for a in rep.matrices() {
        let a2 = p_inv.matmul(a)?.matmul(&p)?;
        match crate::liealg::derealify_matrix(&a2) {
            Ok(c) => cmats.push(c),
            Err(_) => return Ok(false),
        }
    }
    let crep = Representation::new(None, n / 2, cmats)?;
    if !verify_norton(&crep, &cs.inner)? {
        return Ok(false);
    }
    let conj_space = antilinear_intertwiners(&crep)?;
    match &cs.conjugation {
        ConjugationOutcome::NotSelfConjugate => Ok(conj_space.dim() == 0),
        ConjugationOutcome::QuaternionicConj { witness } => {
            if conj_space.dim() != 1 {
                return Ok(false);
            }
            if witness.rows() != n / 2 || witness.cols() != n / 2 || witness.is_zero() {
                return Ok(false);
            }
            for a in crep.matrices() {
                if witness.matmul(&a.conj())? != a.matmul(witness)? {
                    return Ok(false);
                }
            }
            let lambda = match antilinear_conjugation_square(witness) {
                Ok(l) => l,
                Err(_) => return Ok(false),
            };
            Ok(lambda.sign().map(|s| s < 0).unwrap_or(false))
        }
        ConjugationOutcome::RealConj { .. } => Ok(false),
    }
}
