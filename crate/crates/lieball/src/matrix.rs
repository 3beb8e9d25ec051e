//! Dense exact linear algebra over [`Scalar`]: products, brackets, reduction,
//! kernels, rank, linear solves, characteristic polynomial.
//!
//! Rank and kernel over Q run fraction-free (Bareiss); the extension fields
//! use ordinary exact elimination with normalization. Both paths produce the
//! same reduced echelon forms, so subspace normal forms are canonical.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational, Scalar};

#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

/// Mathematical equality, independent of the representation level of the
/// entries.
impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for Matrix {}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>, field: Field) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        let entries = entries
            .into_iter()
            .map(|e| e.promote(field))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn from_rows(rows_data: Vec<Vec<Scalar>>, field: Field) -> Result<Self> {
        let rows = rows_data.len();
        let cols = rows_data.first().map(|r| r.len()).unwrap_or(0);
        if rows_data.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(rows, cols, rows_data.into_iter().flatten().collect(), field)
    }

    /// Convenience constructor for small integer matrices over Q.
    pub fn from_i64(rows_data: &[&[i64]]) -> Self {
        let rows = rows_data.len();
        let cols = rows_data[0].len();
        let entries = rows_data
            .iter()
            .flat_map(|r| r.iter().map(|&x| Scalar::from_int(x)))
            .collect();
        Matrix::new(rows, cols, entries, Field::Rat).expect("consistent literal")
    }

    pub fn zero(rows: usize, cols: usize, field: Field) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero().promote(field).unwrap(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one().promote(field).unwrap();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) -> Result<()> {
        self.entries[i * self.cols + j] = v.promote(self.field)?;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn promote(&self, field: Field) -> Result<Matrix> {
        Matrix::new(self.rows, self.cols, self.entries.clone(), field)
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<Field> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        self.field.join(other.field)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        let field = self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, entries, field)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Matrix> {
        let field = self.field.join(c.field())?;
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(c))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, entries, field)
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let field = self.field.join(other.field)?;
        let mut out = Matrix::zero(self.rows, other.cols, field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = aik.mul(b)?;
                    let cur = out.at(i, j).add(&prod)?;
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        Ok(out)
    }

    /// Commutator AB - BA.
    pub fn bracket(&self, other: &Matrix) -> Result<Matrix> {
        self.matmul(other)?.sub(&other.matmul(self)?)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    /// Entrywise complex conjugation.
    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| e.conj()).collect(),
        }
    }

    pub fn conj_transpose(&self) -> Matrix {
        self.conj().transpose()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix {}x{} applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = Scalar::zero().promote(self.field)?;
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(&v[j])?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("trace of non-square matrix".into()));
        }
        let mut acc = Scalar::zero().promote(self.field)?;
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i))?;
        }
        Ok(acc)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        let field = self.field.join(other.field)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zero(rows, cols, field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        *out.at_mut(i * other.rows + k, j * other.cols + l) = a.mul(b)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row-major flattening, for treating matrices as vectors.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, flat: Vec<Scalar>, field: Field) -> Result<Matrix> {
        Matrix::new(rows, cols, flat, field)
    }

    /// Reduced row echelon form together with pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        if self.field == Field::Rat {
            self.rref_bareiss()
        } else {
            self.rref_generic()
        }
    }

    fn rref_generic(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.at(r, c).inv().expect("pivot nonzero");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let factor = m.at(i, c).clone();
                    m.sub_scaled_row(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Fraction-free (Bareiss) forward elimination on an integer copy,
    /// followed by pivot normalization. Controls coefficient growth over Q.
    fn rref_bareiss(&self) -> (Matrix, Vec<usize>) {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let lcm = (0..self.cols).fold(BigInt::one(), |acc, j| {
                    let Scalar::Rat(r) = self.at(i, j) else { unreachable!() };
                    num::integer::lcm(acc, r.denom().clone())
                });
                (0..self.cols)
                    .map(|j| {
                        let Scalar::Rat(r) = self.at(i, j) else { unreachable!() };
                        r.numer() * (&lcm / r.denom())
                    })
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pr);
            let pivot = m[r][c].clone();
            for i in r + 1..self.rows {
                let factor = m[i][c].clone();
                for j in 0..self.cols {
                    let v = &pivot * &m[i][j] - &factor * &m[r][j];
                    debug_assert!((&v % &prev).is_zero());
                    m[i][j] = v / &prev;
                }
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        // Normalize the integer echelon form to the canonical RREF over Q.
        let mut out = Matrix::zero(self.rows, self.cols, Field::Rat);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = Scalar::Rat(Rational::from(m[i][j].clone()));
            }
        }
        for (i, &c) in pivots.iter().enumerate().rev() {
            let inv = out.at(i, c).inv().expect("pivot nonzero");
            out.scale_row(i, &inv);
            for k in 0..i {
                if !out.at(k, c).is_zero() {
                    let factor = out.at(k, c).clone();
                    out.sub_scaled_row(k, i, &factor);
                }
            }
        }
        (out, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.at(i, j).mul(c).expect("same field");
            *self.at_mut(i, j) = v;
        }
    }

    fn sub_scaled_row(&mut self, i: usize, src: usize, c: &Scalar) {
        for j in 0..self.cols {
            let delta = self.at(src, j).mul(c).expect("same field");
            let v = self.at(i, j).sub(&delta).expect("same field");
            *self.at_mut(i, j) = v;
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact kernel {x : Ax = 0} in subspace normal form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(row, &col)| (col, row)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains_key(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero().promote(self.field).unwrap(); self.cols];
            v[free] = Scalar::one().promote(self.field).unwrap();
            for (&pc, &pr) in &pivot_set {
                v[pc] = r.at(pr, free).neg();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis, self.field)
    }

    /// Any exact solution of Ax = b, or None when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let field = b
            .iter()
            .try_fold(self.field, |acc, x| acc.join(x.field()))?;
        let mut aug = Matrix::zero(self.rows, self.cols + 1, field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).promote(field)?;
            }
            *aug.at_mut(i, self.cols) = b[i].promote(field)?;
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero().promote(field)?; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Exact inverse, when the matrix is square and nonsingular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n, self.field);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = Scalar::one().promote(self.field)?;
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let mut inv = Matrix::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = r.at(i, n + j).clone();
            }
        }
        Ok(Some(inv))
    }

    /// Monic characteristic polynomial, ascending coefficients
    /// (coeffs[k] multiplies lambda^k), by the Faddeev-LeVerrier recurrence.
    pub fn charpoly(&self) -> Result<Vec<Scalar>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("charpoly of non-square matrix".into()));
        }
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero().promote(self.field)?; n + 1];
        coeffs[n] = Scalar::one().promote(self.field)?;
        let mut m = Matrix::zero(n, n, self.field);
        let mut c_prev = Scalar::one().promote(self.field)?;
        for k in 1..=n {
            // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
            let mut shifted = m.clone();
            for i in 0..n {
                let v = shifted.at(i, i).add(&c_prev)?;
                *shifted.at_mut(i, i) = v;
            }
            m = self.matmul(&shifted)?;
            let c = m.trace()?.neg().div(&Scalar::from_int(k as i64))?;
            coeffs[n - k] = c.clone();
            c_prev = c;
        }
        Ok(coeffs)
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A linear subspace of K^n in reduced echelon normal form.
///
/// The stored basis is the unique RREF basis of the row space of any
/// spanning set, so two subspaces are equal iff their representations are.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    field: Field,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.pivots == other.pivots
            && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Scalar>>, field: Field) -> Subspace {
        let mut s = Subspace { ambient_dim, field, basis: Vec::new(), pivots: Vec::new() };
        for v in vectors {
            s.insert(&v).expect("consistent vector length");
        }
        s
    }

    pub fn empty(ambient_dim: usize, field: Field) -> Subspace {
        Subspace { ambient_dim, field, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize, field: Field) -> Subspace {
        let id = Matrix::identity(ambient_dim, field);
        Subspace::span(
            ambient_dim,
            (0..ambient_dim).map(|i| id.row(i).to_vec()).collect(),
            field,
        )
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

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Reduce `v` against the basis; the remainder is zero iff `v` lies in
    /// the subspace.
    fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let field = v
            .iter()
            .try_fold(self.field, |acc, x| acc.join(x.field()))?;
        let mut w: Vec<Scalar> =
            v.iter().map(|x| x.promote(field)).collect::<Result<_>>()?;
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for j in 0..self.ambient_dim {
                if row[j].is_zero() {
                    continue;
                }
                let delta = row[j].mul(&factor)?;
                w[j] = w[j].sub(&delta)?;
            }
        }
        Ok(w)
    }

    /// Insert a vector, maintaining the reduced echelon normal form.
    /// Returns true when the vector enlarged the subspace.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} in ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        let joined = v
            .iter()
            .try_fold(self.field, |acc, x| acc.join(x.field()))?;
        if joined != self.field {
            self.field = joined;
            for row in self.basis.iter_mut() {
                for x in row.iter_mut() {
                    *x = x.promote(joined)?;
                }
            }
        }
        let mut w = self.reduce(v)?;
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = w[p].inv()?;
        for x in w.iter_mut() {
            *x = x.mul(&inv)?;
        }
        // Eliminate the new pivot from the existing rows, then keep rows
        // ordered by pivot column.
        for (row, _) in self.basis.iter_mut().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for j in 0..self.ambient_dim {
                if w[j].is_zero() {
                    continue;
                }
                let delta = w[j].mul(&factor)?;
                row[j] = row[j].sub(&delta)?;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.basis.insert(at, w);
        self.pivots.insert(at, p);
        Ok(true)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        match self.reduce(v) {
            Ok(w) => w.iter().all(|x| x.is_zero()),
            Err(_) => false,
        }
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        let field = self.field.join(other.field)?;
        let mut s = Subspace::empty(self.ambient_dim, field);
        for v in self.basis.iter().chain(&other.basis) {
            s.insert(v)?;
        }
        Ok(s)
    }

    /// Intersection via the kernel of [U^T | -V^T] acting on coefficients.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch("ambient dimensions differ".into()));
        }
        let field = self.field.join(other.field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::empty(self.ambient_dim, field));
        }
        let k = self.dim() + other.dim();
        let mut m = Matrix::zero(self.ambient_dim, k, field);
        for (j, v) in self.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                *m.at_mut(i, j) = v[i].promote(field)?;
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                *m.at_mut(i, self.dim() + j) = v[i].neg().promote(field)?;
            }
        }
        let ker = m.kernel();
        let mut out = Subspace::empty(self.ambient_dim, field);
        for coeffs in ker.basis() {
            let mut v = vec![Scalar::zero().promote(field)?; self.ambient_dim];
            for (j, b) in self.basis.iter().enumerate() {
                if coeffs[j].is_zero() {
                    continue;
                }
                for i in 0..self.ambient_dim {
                    v[i] = v[i].add(&b[i].mul(&coeffs[j])?)?;
                }
            }
            out.insert(&v)?;
        }
        Ok(out)
    }

    /// Orthogonal complement with respect to the standard bilinear dot
    /// product (no conjugation).
    pub fn perp(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim, self.field);
        }
        let m = Matrix::from_rows(self.basis.clone(), self.field).expect("canonical basis");
        m.kernel()
    }

    /// The coordinates of `v` in the stored basis, when `v` lies in the
    /// subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut w: Vec<Scalar> = v.to_vec();
        let mut coords = vec![Scalar::zero(); self.dim()];
        for (idx, (row, &p)) in self.basis.iter().zip(&self.pivots).enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            coords[idx] = factor.clone();
            for j in 0..self.ambient_dim {
                if row[j].is_zero() {
                    continue;
                }
                let delta = row[j].mul(&factor).ok()?;
                w[j] = w[j].sub(&delta).ok()?;
            }
        }
        if w.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }
}

/// Common kernel of a sequence of constraint blocks, all acting on the same
/// unknown vector. The solution space is refined one block at a time, which
/// keeps every elimination at the size of the surviving space.
pub fn common_kernel<I>(unknowns: usize, field: Field, blocks: I) -> Result<Subspace>
where
    I: IntoIterator<Item = Matrix>,
{
    let mut current: Option<Vec<Vec<Scalar>>> = None;
    let mut current_field = field;
    for block in blocks {
        if block.cols() != unknowns {
            return Err(Error::DimensionMismatch(
                "constraint block width does not match unknown count".into(),
            ));
        }
        current_field = current_field.join(block.field())?;
        match current {
            None => {
                let ker = block.kernel();
                if ker.is_zero() {
                    return Ok(Subspace::empty(unknowns, current_field));
                }
                current = Some(ker.basis().to_vec());
            }
            Some(basis) => {
                // restrict the block to the surviving space
                let mut restricted = Matrix::zero(block.rows(), basis.len(), current_field);
                for (j, v) in basis.iter().enumerate() {
                    let img = block.mul_vec(v)?;
                    for i in 0..block.rows() {
                        *restricted.at_mut(i, j) = img[i].clone();
                    }
                }
                let coeff_kernel = restricted.kernel();
                if coeff_kernel.is_zero() {
                    return Ok(Subspace::empty(unknowns, current_field));
                }
                let mut next = Vec::with_capacity(coeff_kernel.dim());
                for coeffs in coeff_kernel.basis() {
                    let mut v = vec![Scalar::zero().promote(current_field)?; unknowns];
                    for (j, b) in basis.iter().enumerate() {
                        if coeffs[j].is_zero() {
                            continue;
                        }
                        for i in 0..unknowns {
                            v[i] = v[i].add(&b[i].mul(&coeffs[j])?)?;
                        }
                    }
                    next.push(v);
                }
                current = Some(next);
            }
        }
    }
    Ok(match current {
        None => Subspace::full(unknowns, current_field),
        Some(basis) => Subspace::span(unknowns, basis, current_field),
    })
}

/// Bilinear dot product of two vectors (no conjugation).
pub fn dot(u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch("dot of different lengths".into()));
    }
    let mut acc = Scalar::zero();
    for (a, b) in u.iter().zip(v) {
        acc = acc.add(&a.mul(b)?)?;
    }
    Ok(acc)
}

pub fn vec_add(u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
    u.iter().zip(v).map(|(a, b)| a.add(b)).collect()
}

pub fn vec_sub(u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
    u.iter().zip(v).map(|(a, b)| a.sub(b)).collect()
}

pub fn vec_scale(u: &[Scalar], c: &Scalar) -> Result<Vec<Scalar>> {
    u.iter().map(|a| a.mul(c)).collect()
}

pub fn vec_is_zero(u: &[Scalar]) -> bool {
    u.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{appendix_u_star, appendix_v, appendix_w};

    #[test]
    fn bracket_antisymmetry_and_appendix_relation() {
        let v = appendix_v();
        let w = appendix_w();
        assert!(v.bracket(&v).unwrap().is_zero());
        // [V, W] = U
        let u = crate::builtins::appendix_u();
        assert_eq!(v.bracket(&w).unwrap(), u);
        // [U*, V*] = -W
        let us = appendix_u_star();
        let vs = crate::builtins::appendix_v_star();
        assert_eq!(us.bracket(&vs).unwrap(), w.neg());
    }

    #[test]
    fn kernel_and_rank_basics() {
        let a = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let k = a.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[Scalar::from_int(1), Scalar::from_int(-1)]));
        assert_eq!(Matrix::identity(4, Field::Rat).rank(), 4);
        // A * kernel basis = 0 exactly
        for v in k.basis() {
            assert!(vec_is_zero(&a.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn appendix_u_star_fixes_null_line() {
        // U* (e0 + e2) is proportional to e0 + e2
        let us = appendix_u_star();
        let mut v = vec![Scalar::zero(); 5];
        v[0] = Scalar::one();
        v[2] = Scalar::one();
        let img = us.mul_vec(&v).unwrap();
        let span = Subspace::span(5, vec![v.clone()], Field::Quad(3));
        assert!(span.contains(&img));
        assert!(!vec_is_zero(&img));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let sol = a
            .solve(&[Scalar::from_int(3), Scalar::from_int(6)])
            .unwrap()
            .unwrap();
        let img = a.mul_vec(&sol).unwrap();
        assert_eq!(img, vec![Scalar::from_int(3), Scalar::from_int(6)]);
        assert!(a
            .solve(&[Scalar::from_int(3), Scalar::from_int(7)])
            .unwrap()
            .is_none());
    }

    #[test]
    fn charpoly_examples() {
        let d = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        // lambda^2 - 5 lambda + 6
        assert_eq!(
            d.charpoly().unwrap(),
            vec![Scalar::from_int(6), Scalar::from_int(-5), Scalar::from_int(1)]
        );
        let z = Matrix::zero(3, 3, Field::Rat);
        assert_eq!(
            z.charpoly().unwrap(),
            vec![
                Scalar::zero(),
                Scalar::zero(),
                Scalar::zero(),
                Scalar::from_int(1)
            ]
        );
        // W is skew of odd size: constant term vanishes
        let w = appendix_w().charpoly().unwrap();
        assert!(w[0].is_zero());
    }

    #[test]
    fn cayley_hamilton_on_seeded_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..4 {
            let entries: Vec<Scalar> = (0..16)
                .map(|_| Scalar::from_int(rng.gen_range(-3..=3)))
                .collect();
            let a = Matrix::new(4, 4, entries, Field::Rat).unwrap();
            let p = a.charpoly().unwrap();
            let res = crate::poly::eval_matrix(&p, &a).unwrap();
            assert!(res.is_zero());
            assert_eq!(a.rank(), a.transpose().rank());
        }
    }

    #[test]
    fn subspace_normal_form_is_canonical() {
        let u = vec![Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(0)];
        let v = vec![Scalar::from_int(0), Scalar::from_int(1), Scalar::from_int(1)];
        let sum = vec_add(&u, &v).unwrap();
        let s1 = Subspace::span(3, vec![u.clone(), v.clone()], Field::Rat);
        let s2 = Subspace::span(3, vec![sum, vec_scale(&v, &Scalar::from_int(-2)).unwrap()], Field::Rat);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        let inter = s1.intersect(&s2).unwrap();
        assert_eq!(inter, s1);
    }
}
