//! Complete invariant-subspace search by structure theory, independent of
//! the certificate-producing search in `repcheck::meataxe`.
//!
//! The route: Burnside dimension count of the enveloping algebra, the
//! trace-form radical (Dickson), exact eigen- and factor-kernel splits of
//! commutant elements, and division-algebra certification of the commutant
//! when nothing splits. Every reducibility answer carries the invariant
//! subspace it found; `Undecided` is returned rather than ever guessing.

use crate::error::Result;
use crate::matrix::{Matrix, Subspace};
use crate::poly;
use crate::repcheck::{commutant_matrices, enveloping_algebra, Representation};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug)]
pub enum ExhaustiveOutcome {
    Reducible(Subspace),
    Irreducible,
    /// The search could not certify either answer over this field.
    Undecided(String),
}

impl ExhaustiveOutcome {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, ExhaustiveOutcome::Irreducible)
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, ExhaustiveOutcome::Reducible(_))
    }
}

/// Decide existence of a proper nonzero invariant subspace over the
/// representation's field.
pub fn search_invariant_subspaces(rep: &Representation) -> Result<ExhaustiveOutcome> {
    let n = rep.ambient_dim();
    let field = rep.field();
    if n == 1 {
        return Ok(ExhaustiveOutcome::Irreducible);
    }

    // Burnside: a subalgebra of M_n of full dimension is all of M_n, which
    // leaves no invariant subspace.
    let env = enveloping_algebra(rep)?;
    if env.dim() == n * n {
        return Ok(ExhaustiveOutcome::Irreducible);
    }

    // Dickson: over characteristic zero the radical of the trace form is
    // the Jacobson radical; rad * V is then a proper invariant subspace.
    let k = env.dim();
    let mut gram = Matrix::zero(k, k, field);
    for i in 0..k {
        for j in 0..k {
            *gram.at_mut(i, j) = env.basis[i].matmul(&env.basis[j])?.trace()?;
        }
    }
    let rad = gram.kernel();
    if !rad.is_zero() {
        let id = Matrix::identity(n, field);
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
        debug_assert!(!w.is_zero() && w.dim() < n);
        return Ok(ExhaustiveOutcome::Reducible(w));
    }

    // The module is now semisimple; it is simple iff the commutant is a
    // division algebra. Kernels of factor evaluations of commuting elements
    // detect every failure of that.
    let comm = commutant_matrices(rep)?;
    let candidates = commutant_candidates(&comm)?;
    for c in &candidates {
        if crate::repcheck::meataxe::is_scalar_matrix(c)? {
            continue;
        }
        let mu = poly::minimal_poly(c)?;
        if let Some(w) = factor_kernel_split(c, &mu, field)? {
            debug_assert!(w.dim() > 0 && w.dim() < n);
            return Ok(ExhaustiveOutcome::Reducible(w));
        }
    }

    // Nothing splits: certify that the commutant is a division algebra.
    if comm.len() == 1 {
        // semisimple with scalar commutant: a single simple summand
        return Ok(ExhaustiveOutcome::Irreducible);
    }
    if is_commutative(&comm)? {
        // a commutative division algebra is a field: look for a primitive
        // element with irreducible minimal polynomial of full degree
        for c in &candidates {
            let mu = poly::minimal_poly(c)?;
            if poly::degree(&mu) == comm.len() {
                match certify_irreducible_poly(&mu, field)? {
                    Some(true) => return Ok(ExhaustiveOutcome::Irreducible),
                    Some(false) => {
                        // reducible mu must have split above
                        return Ok(ExhaustiveOutcome::Undecided(
                            "commutant factorization found no kernel".into(),
                        ));
                    }
                    None => {}
                }
            }
        }
        return Ok(ExhaustiveOutcome::Undecided(
            "no certified primitive element for the commutant field".into(),
        ));
    }
    if comm.len() == 4 {
        // quaternion candidate: over a formally real base field a definite
        // norm form certifies a division algebra
        if let Some(definite) = quaternion_norm_definite(&comm, field)? {
            if definite {
                return Ok(ExhaustiveOutcome::Irreducible);
            }
        }
        return Ok(ExhaustiveOutcome::Undecided(
            "indefinite quaternion norm form: division not certified".into(),
        ));
    }
    Ok(ExhaustiveOutcome::Undecided(format!(
        "commutant of dimension {} not classified",
        comm.len()
    )))
}

/// Basis elements, pairwise combinations, and a few deterministic generic
/// combinations of the commutant.
fn commutant_candidates(comm: &[Matrix]) -> Result<Vec<Matrix>> {
    let mut out = comm.to_vec();
    for i in 0..comm.len() {
        for j in i + 1..comm.len() {
            out.push(comm[i].add(&comm[j])?);
            out.push(comm[i].sub(&comm[j])?);
            out.push(comm[i].matmul(&comm[j])?);
        }
    }
    for pattern in 1..=3i64 {
        let mut acc = Matrix::zero(comm[0].rows(), comm[0].cols(), comm[0].field());
        let mut weight = 1i64;
        for c in comm {
            acc = acc.add(&c.scale(&Scalar::from_int(weight))?)?;
            weight = weight.wrapping_mul(pattern + 1).wrapping_add(pattern);
        }
        out.push(acc);
    }
    Ok(out)
}

/// Kernels of p(c) for proper factors p of the minimal polynomial; these
/// are invariant because c commutes with the action.
fn factor_kernel_split(c: &Matrix, mu: &poly::Poly, field: Field) -> Result<Option<Subspace>> {
    let n = c.rows();
    // in-field roots give linear factors over any of our fields
    for r in poly::roots_in_field(mu, field)? {
        let shifted = c.sub(&Matrix::identity(n, field).scale(&r)?)?;
        let ker = shifted.kernel();
        if ker.dim() > 0 && ker.dim() < n {
            return Ok(Some(ker));
        }
    }
    // over Q, use the certified factorization for higher-degree factors
    if field == Field::Rat && poly::degree(mu) >= 4 {
        if let Some(factors) = poly::factor_rational_poly(mu)? {
            if factors.len() > 1 {
                for f in &factors {
                    let val = poly::eval_matrix(f, c)?;
                    let ker = val.kernel();
                    if ker.dim() > 0 && ker.dim() < n {
                        return Ok(Some(ker));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn is_commutative(comm: &[Matrix]) -> Result<bool> {
    for i in 0..comm.len() {
        for j in i + 1..comm.len() {
            if !comm[i].bracket(&comm[j])?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For degree <= 3 over Q and degree <= 2 elsewhere, decide irreducibility
/// of a monic polynomial exactly; None when out of certified range.
fn certify_irreducible_poly(mu: &poly::Poly, field: Field) -> Result<Option<bool>> {
    let d = poly::degree(mu);
    match d {
        0 | 1 => Ok(Some(d == 1)),
        2 => Ok(Some(poly::roots_in_field(mu, field)?.is_empty())),
        3 if field == Field::Rat => Ok(Some(poly::rational_roots(mu)?.is_empty())),
        _ if field == Field::Rat => {
            Ok(poly::factor_rational_poly(mu)?.map(|fs| fs.len() == 1))
        }
        _ => Ok(None),
    }
}

/// Signature test of the norm form x -> constant term of the quadratic
/// minimal polynomial: definite means the four-dimensional commutant is a
/// division quaternion algebra over the (formally real) base field.
fn quaternion_norm_definite(comm: &[Matrix], field: Field) -> Result<Option<bool>> {
    if !field.is_real() {
        return Ok(None);
    }
    let k = comm.len();
    let norm_of = |x: &Matrix| -> Result<Option<Scalar>> {
        if x.is_zero() {
            return Ok(Some(Scalar::zero()));
        }
        let mu = poly::minimal_poly(x)?;
        match poly::degree(&mu) {
            1 => {
                // x = c Id, norm c^2
                let c = mu[0].neg();
                Ok(Some(c.mul(&c)?))
            }
            2 => Ok(Some(mu[0].clone())),
            _ => Ok(None),
        }
    };
    // polarize: B(x, y) = (N(x+y) - N(x) - N(y)) / 2
    let mut gram = Matrix::zero(k, k, field);
    let mut norms = Vec::with_capacity(k);
    for c in comm {
        match norm_of(c)? {
            Some(v) => norms.push(v),
            None => return Ok(None),
        }
    }
    for i in 0..k {
        for j in i..k {
            let b = if i == j {
                norms[i].clone()
            } else {
                let sum = comm[i].add(&comm[j])?;
                let Some(nsum) = norm_of(&sum)? else {
                    return Ok(None);
                };
                nsum.sub(&norms[i])?
                    .sub(&norms[j])?
                    .div(&Scalar::from_int(2))?
            };
            *gram.at_mut(i, j) = b.clone();
            *gram.at_mut(j, i) = b;
        }
    }
    let (neg, pos, null) = crate::repcheck::forms::signature(&gram)?;
    Ok(Some(null == 0 && (neg == 0 || pos == 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::*;
    use crate::liealg::realify_all;

    fn rep_of(alg: crate::liealg::LieAlgebra) -> Representation {
        Representation::from_algebra(&alg)
    }

    #[test]
    fn oracle_matches_known_structure() {
        // irreducible families
        for rep in [
            rep_of(so_pq(2, 2).unwrap()),
            rep_of(so_pq(2, 3).unwrap()),
            rep_of(appendix_so12().unwrap()),
            rep_of(appendix_so3().unwrap()),
            rep_of(u_pq_realified(1, 1).unwrap()),
            rep_of(su_pq_realified(1, 2).unwrap()),
            rep_of(circle_so_realified(1, 2).unwrap()),
            rep_of(sl2_sl2_on_r22().unwrap()),
            rep_of(sl2_std().unwrap()),
        ] {
            assert!(
                search_invariant_subspaces(&rep).unwrap().is_irreducible(),
                "{:?}",
                rep.name()
            );
        }
        // reducible families
        for rep in [
            rep_of(so21_block(2).unwrap()),
            rep_of(so1k_in_su1p_realified(1, 1).unwrap()),
            rep_of(so1k_in_su1p_realified(2, 2).unwrap()),
            rep_of(so1k1_so1k2_block(1, 1, 2).unwrap()),
            rep_of(su_pq_realified(1, 1).unwrap()),
        ] {
            let ExhaustiveOutcome::Reducible(w) = search_invariant_subspaces(&rep).unwrap()
            else {
                panic!("{:?} should be reducible", rep.name());
            };
            // the found subspace is exactly invariant
            for a in rep.matrices() {
                for b in w.basis() {
                    assert!(w.contains(&a.mul_vec(b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn oracle_detects_quaternionic_division() {
        // realified su(2) on R^4: commutant is a definite quaternion algebra
        let su2 = [
            Matrix::from_rows(
                vec![
                    vec![Scalar::i(), Scalar::zero()],
                    vec![Scalar::zero(), Scalar::i().neg()],
                ],
                crate::scalar::Field::GaussRat,
            )
            .unwrap(),
            Matrix::from_i64(&[&[0, 1], &[-1, 0]])
                .promote(crate::scalar::Field::GaussRat)
                .unwrap(),
            Matrix::from_rows(
                vec![
                    vec![Scalar::zero(), Scalar::i()],
                    vec![Scalar::i(), Scalar::zero()],
                ],
                crate::scalar::Field::GaussRat,
            )
            .unwrap(),
        ];
        let rep =
            Representation::new(Some("su2_real".into()), 4, realify_all(&su2).unwrap()).unwrap();
        assert!(search_invariant_subspaces(&rep).unwrap().is_irreducible());
    }

    #[test]
    fn oracle_handles_nilpotent_action() {
        // strictly upper triangular: radical route
        let n1 = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let rep = Representation::new(None, 3, vec![n1]).unwrap();
        assert!(search_invariant_subspaces(&rep).unwrap().is_reducible());
    }
}
