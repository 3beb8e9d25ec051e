//! Constructors for every algebra the analyses need: so(p,q), realified
//! unitary families, the two explicit 5x5 families with sqrt(3) entries, the
//! tensor action of sl2+sl2 on R^{2,2}, and the reducible block embeddings.

use crate::error::{Error, Result};
use crate::liealg::{realify_all, standard_j, LieAlgebra, SignatureForm};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// Named algebra families. `So` and the realified unitary families accept
/// general (p, q); the classification cases use p = 2 or p = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// so(p, q) with eta = diag(-1 x p, +1 x q).
    So { p: usize, q: usize },
    /// u(p, q) acting on C^{p,q}, realified (interleaved) to R^{2p,2q}.
    URealified { p: usize, q: usize },
    /// su(p, q), realified.
    SuRealified { p: usize, q: usize },
    /// i*R + so(p, q) acting C-linearly on C^{p+q}, realified: the Lie
    /// algebra of S^1 * SO_0(p, q) inside SO(2p, 2q).
    CircleSoRealified { p: usize, q: usize },
    /// span{U*, V*, W}: so(1,2) acting irreducibly inside so(2,3).
    AppendixSo12,
    /// span{U, V, W}: so(3) acting irreducibly inside so(5).
    AppendixSo3,
    /// sl(2,R) + sl(2,R) acting on R^2 (x) R^2 = R^{2,2}.
    Sl2Sl2OnR22,
    /// so(2,1) in the top-left 3x3 block of so(2,n), fixing e_3..e_{n+1}.
    So21Block { n: usize },
    /// Standard sl(2,R) on R^2.
    Sl2Std,
}

impl Builtin {
    pub fn build(&self) -> Result<LieAlgebra> {
        match *self {
            Builtin::So { p, q } => so_pq(p, q),
            Builtin::URealified { p, q } => u_pq_realified(p, q),
            Builtin::SuRealified { p, q } => su_pq_realified(p, q),
            Builtin::CircleSoRealified { p, q } => circle_so_realified(p, q),
            Builtin::AppendixSo12 => appendix_so12(),
            Builtin::AppendixSo3 => appendix_so3(),
            Builtin::Sl2Sl2OnR22 => sl2_sl2_on_r22(),
            Builtin::So21Block { n } => so21_block(n),
            Builtin::Sl2Std => sl2_std(),
        }
    }
}

/// Basis eta_ii E_ij - eta_jj E_ji for i < j; dimension (p+q)(p+q-1)/2.
pub fn so_pq(p: usize, q: usize) -> Result<LieAlgebra> {
    let n = p + q;
    if n < 1 {
        return Err(Error::BadParams("so(p,q) needs p + q >= 1".into()));
    }
    let eta = SignatureForm::new(p, q);
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Matrix::zero(n, n, Field::Rat);
            *m.at_mut(i, j) = Scalar::from_int(eta.sign_at(i) as i64);
            *m.at_mut(j, i) = Scalar::from_int(-(eta.sign_at(j) as i64));
            basis.push(m);
        }
    }
    if basis.is_empty() {
        // so(1) is the zero algebra on R^1
        basis.push(Matrix::zero(1, 1, Field::Rat));
    }
    LieAlgebra::new(Some(format!("so({p},{q})")), basis)
}

/// Complex basis of u(p,q): H*B for B anti-hermitian, H = diag(eta).
fn u_pq_complex_basis(p: usize, q: usize) -> Result<Vec<Matrix>> {
    let n = p + q;
    if n < 1 {
        return Err(Error::BadParams("u(p,q) needs p + q >= 1".into()));
    }
    let mut basis = Vec::new();
    // diagonal: i E_kk
    for k in 0..n {
        let mut m = Matrix::zero(n, n, Field::GaussRat);
        *m.at_mut(k, k) = Scalar::i();
        basis.push(m);
    }
    append_u_offdiag(&mut basis, p, q)?;
    Ok(basis)
}

fn append_u_offdiag(basis: &mut Vec<Matrix>, p: usize, q: usize) -> Result<()> {
    let n = p + q;
    let eta = SignatureForm::new(p, q);
    for i in 0..n {
        for j in i + 1..n {
            // H (E_ij - E_ji) and H i(E_ij + E_ji)
            let si = Scalar::from_int(eta.sign_at(i) as i64);
            let sj = Scalar::from_int(eta.sign_at(j) as i64);
            let mut m1 = Matrix::zero(n, n, Field::GaussRat);
            *m1.at_mut(i, j) = si.clone();
            *m1.at_mut(j, i) = sj.neg();
            basis.push(m1);
            let mut m2 = Matrix::zero(n, n, Field::GaussRat);
            *m2.at_mut(i, j) = si.mul(&Scalar::i())?;
            *m2.at_mut(j, i) = sj.mul(&Scalar::i())?;
            basis.push(m2);
        }
    }
    Ok(())
}

fn su_pq_complex_basis(p: usize, q: usize) -> Result<Vec<Matrix>> {
    let n = p + q;
    if n < 2 {
        return Err(Error::BadParams("su(p,q) needs p + q >= 2".into()));
    }
    let mut basis = Vec::new();
    // traceless diagonal: i(E_kk - E_{k+1,k+1})
    for k in 0..n - 1 {
        let mut m = Matrix::zero(n, n, Field::GaussRat);
        *m.at_mut(k, k) = Scalar::i();
        *m.at_mut(k + 1, k + 1) = Scalar::i().neg();
        basis.push(m);
    }
    append_u_offdiag(&mut basis, p, q)?;
    Ok(basis)
}

pub fn u_pq_realified(p: usize, q: usize) -> Result<LieAlgebra> {
    let mats = realify_all(&u_pq_complex_basis(p, q)?)?;
    LieAlgebra::new(Some(format!("u({p},{q})_real")), mats)
}

pub fn su_pq_realified(p: usize, q: usize) -> Result<LieAlgebra> {
    let mats = realify_all(&su_pq_complex_basis(p, q)?)?;
    LieAlgebra::new(Some(format!("su({p},{q})_real")), mats)
}

/// i*R adjoined to so(p,q) acting C-linearly: realified, this is
/// span{J} + {A (x) 1}.
pub fn circle_so_realified(p: usize, q: usize) -> Result<LieAlgebra> {
    let so = so_pq(p, q)?;
    let n = p + q;
    let mut mats = vec![standard_j(n, Field::Rat)];
    for a in so.basis() {
        let complex = a.promote(Field::GaussRat)?;
        mats.push(crate::liealg::realify_matrix(&complex)?);
    }
    LieAlgebra::new(Some(format!("s1_so({p},{q})_real")), mats)
}

fn sqrt3() -> Scalar {
    Scalar::sqrt_d(3)
}

/// The skew 5x5 matrix U acting on the symmetric-traceless model of R^5.
pub fn appendix_u() -> Matrix {
    let mut m = Matrix::zero(5, 5, Field::Quad(3));
    m.set(0, 2, Scalar::from_int(-2)).unwrap();
    m.set(1, 3, Scalar::from_int(-1)).unwrap();
    m.set(2, 0, Scalar::from_int(2)).unwrap();
    m.set(3, 1, Scalar::from_int(1)).unwrap();
    m
}

pub fn appendix_v() -> Matrix {
    let mut m = Matrix::zero(5, 5, Field::Quad(3));
    m.set(0, 3, Scalar::from_int(-1)).unwrap();
    m.set(1, 2, Scalar::from_int(-1)).unwrap();
    m.set(1, 4, sqrt3().neg()).unwrap();
    m.set(2, 1, Scalar::from_int(1)).unwrap();
    m.set(3, 0, Scalar::from_int(1)).unwrap();
    m.set(4, 1, sqrt3()).unwrap();
    m
}

/// W = [U, V]; block diagonal, shared by the compact and non-compact
/// families.
pub fn appendix_w() -> Matrix {
    let mut m = Matrix::zero(5, 5, Field::Quad(3));
    m.set(0, 1, Scalar::from_int(-1)).unwrap();
    m.set(1, 0, Scalar::from_int(1)).unwrap();
    m.set(2, 3, Scalar::from_int(-1)).unwrap();
    m.set(3, 2, Scalar::from_int(1)).unwrap();
    m.set(3, 4, sqrt3().neg()).unwrap();
    m.set(4, 3, sqrt3()).unwrap();
    m
}

/// U*: as U but symmetric instead of skew (upper off-diagonal block with
/// flipped sign).
pub fn appendix_u_star() -> Matrix {
    let mut m = Matrix::zero(5, 5, Field::Quad(3));
    m.set(0, 2, Scalar::from_int(2)).unwrap();
    m.set(1, 3, Scalar::from_int(1)).unwrap();
    m.set(2, 0, Scalar::from_int(2)).unwrap();
    m.set(3, 1, Scalar::from_int(1)).unwrap();
    m
}

pub fn appendix_v_star() -> Matrix {
    let mut m = Matrix::zero(5, 5, Field::Quad(3));
    m.set(0, 3, Scalar::from_int(1)).unwrap();
    m.set(1, 2, Scalar::from_int(1)).unwrap();
    m.set(1, 4, sqrt3()).unwrap();
    m.set(2, 1, Scalar::from_int(1)).unwrap();
    m.set(3, 0, Scalar::from_int(1)).unwrap();
    m.set(4, 1, sqrt3()).unwrap();
    m
}

/// span{U*, V*, W}: so(1,2) irreducible in so(2,3).
pub fn appendix_so12() -> Result<LieAlgebra> {
    LieAlgebra::new(
        Some("appendix_so12".into()),
        vec![appendix_u_star(), appendix_v_star(), appendix_w()],
    )
}

/// span{U, V, W}: so(3) irreducible in so(5).
pub fn appendix_so3() -> Result<LieAlgebra> {
    LieAlgebra::new(
        Some("appendix_so3".into()),
        vec![appendix_u(), appendix_v(), appendix_w()],
    )
}

/// The appendix so(1,2) padded into so(2,n) for n >= 3, acting on the first
/// five coordinates and fixing the rest.
pub fn appendix_so12_padded(n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::BadParams("padding needs n >= 3".into()));
    }
    let pad = |m: &Matrix| embed_block(m, &(0..5).collect::<Vec<_>>(), n + 2);
    LieAlgebra::new(
        Some(format!("appendix_so12_in_so(2,{n})")),
        vec![
            pad(&appendix_u_star())?,
            pad(&appendix_v_star())?,
            pad(&appendix_w())?,
        ],
    )
}

pub fn sl2_std() -> Result<LieAlgebra> {
    let h = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
    let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
    LieAlgebra::new(Some("sl(2,R)".into()), vec![h, e, f])
}

/// {A (x) 1 + 1 (x) B}: the tensor action of sl2 + sl2 on R^4 = R^2 (x) R^2.
pub fn sl2_sl2_on_r22() -> Result<LieAlgebra> {
    let sl2 = sl2_std()?;
    let id = Matrix::identity(2, Field::Rat);
    let mut mats = Vec::new();
    for a in sl2.basis() {
        mats.push(a.kron(&id)?);
    }
    for b in sl2.basis() {
        mats.push(id.kron(b)?);
    }
    LieAlgebra::new(Some("sl2+sl2_on_R22".into()), mats)
}

/// so(2,1) in the top-left block of so(2,n).
pub fn so21_block(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::BadParams("block embedding needs n >= 2".into()));
    }
    let so21 = so_pq(2, 1)?;
    let mats = so21
        .basis()
        .iter()
        .map(|m| embed_block(m, &[0, 1, 2], n + 2))
        .collect::<Result<Vec<_>>>()?;
    LieAlgebra::new(Some(format!("so(2,1)_block_in_so(2,{n})")), mats)
}

/// so(1,k) of real matrices, extended C-linearly into su(1,p) on C^{1,p} and
/// realified: the type (I2) subalgebra, reducible on R^{2,2p}.
pub fn so1k_in_su1p_realified(k: usize, p: usize) -> Result<LieAlgebra> {
    if k < 1 || k > p {
        return Err(Error::BadParams("need 1 <= k <= p".into()));
    }
    let so1k = so_pq(1, k)?;
    let indices: Vec<usize> = (0..=k).collect();
    let mut mats = Vec::new();
    for a in so1k.basis() {
        let padded = embed_block(a, &indices, 1 + p)?;
        let complex = padded.promote(Field::GaussRat)?;
        mats.push(crate::liealg::realify_matrix(&complex)?);
    }
    LieAlgebra::new(Some(format!("so(1,{k})_in_su(1,{p})_real")), mats)
}

/// so(1,k1) + so(1,k2) in so(2, k1+k2+...): first factor on coordinates
/// {0, 2..k1+1}, second on {1, k1+2..k1+k2+1}, the type (G2) block pair.
pub fn so1k1_so1k2_block(k1: usize, k2: usize, n: usize) -> Result<LieAlgebra> {
    if k1 < 1 || k2 < 1 || k1 + k2 > n {
        return Err(Error::BadParams("need k1, k2 >= 1 and k1 + k2 <= n".into()));
    }
    let mut mats = Vec::new();
    let idx1: Vec<usize> = std::iter::once(0).chain(2..k1 + 2).collect();
    for a in so_pq(1, k1)?.basis() {
        mats.push(embed_block(a, &idx1, n + 2)?);
    }
    let idx2: Vec<usize> = std::iter::once(1).chain(k1 + 2..k1 + k2 + 2).collect();
    for a in so_pq(1, k2)?.basis() {
        mats.push(embed_block(a, &idx2, n + 2)?);
    }
    LieAlgebra::new(Some(format!("so(1,{k1})+so(1,{k2})_in_so(2,{n})")), mats)
}

/// Copy `m` into an `amb x amb` zero matrix along the given coordinate
/// indices.
pub fn embed_block(m: &Matrix, indices: &[usize], amb: usize) -> Result<Matrix> {
    if m.rows() != indices.len() || m.cols() != indices.len() {
        return Err(Error::DimensionMismatch("index list must match block size".into()));
    }
    if indices.iter().any(|&i| i >= amb) {
        return Err(Error::BadParams("embedding index out of range".into()));
    }
    let mut out = Matrix::zero(amb, amb, m.field());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            *out.at_mut(indices[i], indices[j]) = m.at(i, j).clone();
        }
    }
    Ok(out)
}
