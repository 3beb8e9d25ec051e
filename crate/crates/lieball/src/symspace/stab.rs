//! Invariant hulls (spins), fullness, fixer algebras of base planes, the
//! parabolic stabilizer of a light-like line, and local transitivity.

use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, SignatureForm};
use crate::matrix::{Matrix, Subspace};
use crate::repcheck::{spin, Representation};
use crate::scalar::Scalar;
use crate::symspace::lieball::NegativePlane;

/// Smallest g-invariant subspace containing the seed vectors.
pub fn invariant_hull(g: &LieAlgebra, seeds: &[Vec<Scalar>]) -> Result<Subspace> {
    let rep = Representation::from_algebra(g);
    spin(&rep, seeds, false)
}

pub fn is_full(hull: &Subspace) -> bool {
    hull.is_full()
}

/// The largest ad(g)-invariant subspace of the plane stabilizer
/// {A in g : A.P <= P}: iterate N_{k+1} = {A in N_k : [g, A] <= N_k} to
/// stabilization. This is the Lie algebra of the pointwise fixer of the
/// orbit through the plane.
pub fn fixer_algebra(g: &LieAlgebra, plane: &NegativePlane) -> Result<Subspace> {
    if plane.ambient_dim() != g.ambient_dim() {
        return Err(Error::DimensionMismatch("plane vs algebra ambient".into()));
    }
    let n = g.ambient_dim();
    let field = g.field();
    // annihilator of the plane: rows that vanish on it
    let plane_span = Subspace::span(n, vec![plane.a.clone(), plane.b.clone()], field);
    let ann = plane_span.perp();
    // stabilizer: coefficients alpha with ann . ((sum alpha_i B_i) p) = 0
    let k = g.dim();
    let mut rows = Vec::new();
    for p in [&plane.a, &plane.b] {
        for f in ann.basis() {
            let mut row = Vec::with_capacity(k);
            for b in g.basis() {
                row.push(crate::matrix::dot(f, &b.mul_vec(p)?)?);
            }
            rows.push(row);
        }
    }
    let system = Matrix::from_rows(rows, field)?;
    let coeff_kernel = system.kernel();
    let mut current: Vec<Matrix> = Vec::new();
    for coeffs in coeff_kernel.basis() {
        let mut a = Matrix::zero(n, n, field);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                a = a.add(&g.basis()[i].scale(c)?)?;
            }
        }
        current.push(a);
    }
    // shrink to the largest ad(g)-invariant subspace
    loop {
        if current.is_empty() {
            return Ok(Subspace::empty(n * n, field));
        }
        let span = Subspace::span(n * n, current.iter().map(|m| m.flatten()).collect(), field);
        let ann = span.perp();
        let mut rows = Vec::new();
        for b in g.basis() {
            for f in ann.basis() {
                let mut row = Vec::with_capacity(current.len());
                for s in &current {
                    row.push(crate::matrix::dot(f, &b.bracket(s)?.flatten())?);
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return Ok(span);
        }
        let system = Matrix::from_rows(rows, field)?;
        let kernel = system.kernel();
        if kernel.dim() == current.len() {
            return Ok(span);
        }
        let mut next = Vec::new();
        for coeffs in kernel.basis() {
            let mut a = Matrix::zero(n, n, field);
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    a = a.add(&current[i].scale(c)?)?;
                }
            }
            next.push(a);
        }
        current = next;
    }
}

/// The stabilizer {A in so(p+1, q+1) : A v in span{v}} of a light-like
/// line; its dimension is 1 + dim so(p,q) + (p+q).
pub fn parabolic_algebra(p: usize, q: usize, v: &[Scalar]) -> Result<LieAlgebra> {
    let amb = p + q + 2;
    if v.len() != amb {
        return Err(Error::DimensionMismatch("light-like vector length".into()));
    }
    let eta = SignatureForm::new(p + 1, q + 1);
    if crate::matrix::vec_is_zero(v) || !eta.apply(v, v)?.is_zero() {
        return Err(Error::NotLightlike);
    }
    let so = crate::builtins::so_pq(p + 1, q + 1)?;
    let field = so
        .field()
        .join(v.iter().try_fold(crate::scalar::Field::Rat, |acc, x| acc.join(x.field()))?)?;
    // A v proportional to v: all 2x2 minors of [Av | v] vanish
    let k = so.dim();
    let mut rows = Vec::new();
    for i in 0..amb {
        for j in i + 1..amb {
            let mut row = Vec::with_capacity(k);
            for b in so.basis() {
                let bv = b.mul_vec(v)?;
                row.push(bv[i].mul(&v[j])?.sub(&bv[j].mul(&v[i])?)?);
            }
            rows.push(row);
        }
    }
    let system = Matrix::from_rows(rows, field)?;
    let kernel = system.kernel();
    let mut basis = Vec::new();
    for coeffs in kernel.basis() {
        let mut a = Matrix::zero(amb, amb, field);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                a = a.add(&so.basis()[i].scale(c)?)?;
            }
        }
        basis.push(a);
    }
    LieAlgebra::new(Some(format!("parabolic_so({},{})", p + 1, q + 1)), basis)
}

/// dim(g + p) = dim ambient, by exact sums of flattened spans.
pub fn local_transitivity(g: &LieAlgebra, p: &LieAlgebra, ambient: &LieAlgebra) -> Result<bool> {
    if g.ambient_dim() != ambient.ambient_dim() || p.ambient_dim() != ambient.ambient_dim() {
        return Err(Error::DimensionMismatch(
            "algebras act on different ambient spaces".into(),
        ));
    }
    let amb_span = ambient.to_subspace();
    for m in g.basis().iter().chain(p.basis()) {
        if !amb_span.contains(&m.flatten()) {
            return Err(Error::DimensionMismatch(
                "subalgebra is not contained in the ambient algebra".into(),
            ));
        }
    }
    let sum = g.to_subspace().sum(&p.to_subspace())?;
    Ok(sum.dim() == ambient.dim())
}
