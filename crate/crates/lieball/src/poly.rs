//! Exact univariate polynomial helpers over [`Scalar`] coefficients,
//! ascending order. Used for characteristic/minimal polynomial work in the
//! irreducibility search.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Subspace};
use crate::scalar::{Field, Rational, Scalar};

pub type Poly = Vec<Scalar>;

pub fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

pub fn degree(p: &Poly) -> usize {
    let mut d = p.len();
    while d > 1 && p[d - 1].is_zero() {
        d -= 1;
    }
    d - 1
}

pub fn is_zero_poly(p: &Poly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn eval_scalar(p: &Poly, x: &Scalar) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for c in p.iter().rev() {
        acc = acc.mul(x)?.add(c)?;
    }
    Ok(acc)
}

/// Horner evaluation of p at a square matrix.
pub fn eval_matrix(p: &Poly, a: &Matrix) -> Result<Matrix> {
    let n = a.rows();
    let field = a.field();
    let mut acc = Matrix::zero(n, n, field);
    for c in p.iter().rev() {
        acc = a.matmul(&acc)?;
        for i in 0..n {
            let v = acc.at(i, i).add(c)?;
            *acc.at_mut(i, i) = v;
        }
    }
    Ok(acc)
}

pub fn derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return vec![Scalar::zero()];
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    for (k, c) in p.iter().enumerate().skip(1) {
        out.push(c.mul(&Scalar::from_int(k as i64)).expect("same field"));
    }
    trim(&mut out);
    out
}

pub fn monic(p: &Poly) -> Result<Poly> {
    let d = degree(p);
    let lead = &p[d];
    if lead.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let inv = lead.inv()?;
    let mut out: Poly = p[..=d].iter().map(|c| c.mul(&inv)).collect::<Result<_>>()?;
    trim(&mut out);
    Ok(out)
}

/// Euclidean division: p = q*d + r with deg r < deg d.
pub fn divmod(p: &Poly, d: &Poly) -> Result<(Poly, Poly)> {
    let dd = degree(d);
    if is_zero_poly(d) {
        return Err(Error::DivisionByZero);
    }
    let mut r = p.clone();
    trim(&mut r);
    let mut q = vec![Scalar::zero(); p.len()];
    let lead_inv = d[dd].inv()?;
    while !is_zero_poly(&r) && degree(&r) >= dd {
        let dr = degree(&r);
        let coeff = r[dr].mul(&lead_inv)?;
        let shift = dr - dd;
        q[shift] = q[shift].add(&coeff)?;
        for k in 0..=dd {
            let delta = d[k].mul(&coeff)?;
            r[k + shift] = r[k + shift].sub(&delta)?;
        }
        trim(&mut r);
    }
    trim(&mut q);
    Ok((q, r))
}

/// Monic polynomial gcd by the Euclidean algorithm.
pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !is_zero_poly(&y) {
        let (_, r) = divmod(&x, &y)?;
        x = y;
        y = r;
    }
    if is_zero_poly(&x) {
        Ok(x)
    } else {
        monic(&x)
    }
}

/// p / gcd(p, p'), the product of the distinct irreducible factors.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    let g = gcd(p, &derivative(p))?;
    if degree(&g) == 0 {
        return monic(p);
    }
    let (q, _) = divmod(p, &g)?;
    monic(&q)
}

/// Minimal polynomial of a square matrix: the first linear dependence among
/// I, A, A^2, ...
pub fn minimal_poly(a: &Matrix) -> Result<Poly> {
    let n = a.rows();
    let field = a.field();
    let mut powers: Vec<Matrix> = vec![Matrix::identity(n, field)];
    let mut span = Subspace::empty(n * n, field);
    span.insert(&powers[0].flatten())?;
    loop {
        let next = a.matmul(powers.last().unwrap())?;
        let flat = next.flatten();
        if !span.insert(&flat)? {
            // next = sum c_k A^k: solve for the coefficients
            let k = powers.len();
            let mut m = Matrix::zero(n * n, k, field);
            for (j, p) in powers.iter().enumerate() {
                let f = p.flatten();
                for i in 0..n * n {
                    *m.at_mut(i, j) = f[i].clone();
                }
            }
            let c = m.solve(&flat)?.expect("dependence certified by span");
            let mut poly: Poly = c.into_iter().map(|x| x.neg()).collect();
            poly.push(Scalar::one().promote(field)?);
            return Ok(poly);
        }
        powers.push(next);
    }
}

/// All divisors of |n|, or None when n does not factor within the trial
/// division budget.
fn divisors_budgeted(n: &BigInt, max_divisors: usize) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    let bound = BigInt::from(100_000u32);
    while &p * &p <= n && p <= bound {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1u32;
    }
    if n > BigInt::one() {
        if n <= &bound * &bound {
            // leftover is prime (no factor below its square root)
            primes.push((n, 1));
        } else {
            return None;
        }
    }
    let mut divisors = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divisors {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                if next.len() > max_divisors {
                    return None;
                }
                pk *= &p;
            }
        }
        divisors = next;
    }
    Some(divisors)
}

/// Rational roots of a polynomial with rational coefficients, by the
/// rational root theorem with a budgeted divisor enumeration.
pub fn rational_roots(p: &Poly) -> Result<Vec<Rational>> {
    let mut q = p.clone();
    trim(&mut q);
    let mut roots = Vec::new();
    // strip powers of x; x = 0 is a root once
    if q.len() > 1 && q[0].is_zero() {
        roots.push(Rational::zero());
        while q.len() > 1 && q[0].is_zero() {
            q.remove(0);
        }
    }
    if degree(&q) == 0 {
        return Ok(roots);
    }
    // clear denominators to an integer polynomial
    let mut lcm = BigInt::one();
    for c in &q {
        let Scalar::Rat(r) = c.promote(Field::Rat)? else { unreachable!() };
        lcm = num::integer::lcm(lcm, r.denom().clone());
    }
    let ints: Vec<BigInt> = q
        .iter()
        .map(|c| {
            let Scalar::Rat(r) = c.promote(Field::Rat).unwrap() else { unreachable!() };
            r.numer() * (&lcm / r.denom())
        })
        .collect();
    let a0 = &ints[0];
    let an = ints.last().unwrap();
    let (num_divs, den_divs) = match (divisors_budgeted(a0, 256), divisors_budgeted(an, 64)) {
        (Some(a), Some(b)) => (a, b),
        // budget exceeded: probe a small fixed candidate set
        _ => (
            (1..=6u32).map(BigInt::from).collect(),
            (1..=3u32).map(BigInt::from).collect(),
        ),
    };
    for nd in &num_divs {
        for dd in &den_divs {
            for sgn in [1i32, -1] {
                let cand = Rational::new(nd * BigInt::from(sgn), dd.clone());
                let v = eval_scalar(&q, &Scalar::Rat(cand.clone()))?;
                if v.is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Ok(roots)
}

/// Certified factorization over Q into irreducible monic factors, or None
/// when the (budgeted) search cannot certify. Complete for degree <= 3 via
/// rational roots, and for higher degree via Kronecker interpolation when
/// the divisor enumeration stays within budget.
pub fn factor_rational_poly(p: &Poly) -> Result<Option<Vec<Poly>>> {
    let mut q = monic(p)?;
    if q.iter().any(|c| c.field() != Field::Rat) {
        return Ok(None);
    }
    let mut factors: Vec<Poly> = Vec::new();
    // strip roots first
    loop {
        if degree(&q) <= 1 {
            if degree(&q) == 1 {
                factors.push(q.clone());
            }
            return Ok(Some(factors));
        }
        let roots = rational_roots(&q)?;
        if roots.is_empty() {
            break;
        }
        let r = Scalar::Rat(roots[0].clone());
        let lin = vec![r.neg(), Scalar::one()];
        let (quo, rem) = divmod(&q, &lin)?;
        debug_assert!(is_zero_poly(&rem));
        factors.push(lin);
        q = monic(&quo)?;
    }
    match degree(&q) {
        2 => {
            // no rational roots: irreducible over Q
            factors.push(q);
            Ok(Some(factors))
        }
        3 => {
            // a reducible cubic over Q has a rational root
            factors.push(q);
            Ok(Some(factors))
        }
        _ => match kronecker_split(&q)? {
            KroneckerOutcome::Irreducible => {
                factors.push(q);
                Ok(Some(factors))
            }
            KroneckerOutcome::Split(g, h) => {
                let (Some(fg), Some(fh)) =
                    (factor_rational_poly(&g)?, factor_rational_poly(&h)?)
                else {
                    return Ok(None);
                };
                factors.extend(fg);
                factors.extend(fh);
                Ok(Some(factors))
            }
            KroneckerOutcome::BudgetExceeded => Ok(None),
        },
    }
}

enum KroneckerOutcome {
    Irreducible,
    Split(Poly, Poly),
    BudgetExceeded,
}

/// Kronecker's interpolation method: a degree-k factor is determined by its
/// values at k+1 integer points, which must divide the values of the target.
fn kronecker_split(q: &Poly) -> Result<KroneckerOutcome> {
    let deg = degree(q);
    // integer model with cleared denominators
    let mut lcm = BigInt::one();
    for c in q {
        let Scalar::Rat(r) = c.promote(Field::Rat)? else { unreachable!() };
        lcm = num::integer::lcm(lcm, r.denom().clone());
    }
    let f: Vec<Scalar> = q
        .iter()
        .map(|c| c.mul(&Scalar::Rat(Rational::from(lcm.clone()))).unwrap())
        .collect();
    let points: Vec<i64> = vec![0, 1, -1, 2, -2, 3, -3];
    for k in 2..=deg / 2 {
        let xs = &points[..=k];
        let mut divisor_sets: Vec<Vec<Rational>> = Vec::new();
        for &x in xs {
            let v = eval_scalar(&f, &Scalar::from_int(x))?;
            let Scalar::Rat(r) = v.promote(Field::Rat)? else { unreachable!() };
            debug_assert!(!r.is_zero(), "no integer roots remain");
            let Some(divs) = divisors_budgeted(r.numer(), 48) else {
                return Ok(KroneckerOutcome::BudgetExceeded);
            };
            let mut with_signs: Vec<Rational> = Vec::new();
            for d in divs {
                with_signs.push(Rational::from(d.clone()));
                with_signs.push(Rational::from(-d));
            }
            divisor_sets.push(with_signs);
        }
        let total: usize = divisor_sets.iter().map(|s| s.len()).product();
        if total > 200_000 {
            return Ok(KroneckerOutcome::BudgetExceeded);
        }
        let mut index = vec![0usize; k + 1];
        loop {
            let values: Vec<Rational> = index
                .iter()
                .zip(&divisor_sets)
                .map(|(&i, s)| s[i].clone())
                .collect();
            if let Some(g) = interpolate(xs, &values)? {
                if degree(&g) == k {
                    let gm = monic(&g)?;
                    let (quo, rem) = divmod(q, &gm)?;
                    if is_zero_poly(&rem) {
                        return Ok(KroneckerOutcome::Split(gm, monic(&quo)?));
                    }
                }
            }
            // advance the odometer
            let mut pos = 0;
            loop {
                if pos > k {
                    break;
                }
                index[pos] += 1;
                if index[pos] < divisor_sets[pos].len() {
                    break;
                }
                index[pos] = 0;
                pos += 1;
            }
            if pos > k {
                break;
            }
        }
    }
    Ok(KroneckerOutcome::Irreducible)
}

/// Lagrange interpolation through integer points; None when the polynomial
/// is zero.
fn interpolate(xs: &[i64], values: &[Rational]) -> Result<Option<Poly>> {
    let k = xs.len();
    let mut acc: Poly = vec![Scalar::zero()];
    for i in 0..k {
        let mut term: Poly = vec![Scalar::Rat(values[i].clone())];
        for j in 0..k {
            if i == j {
                continue;
            }
            let denom = Scalar::from_int(xs[i] - xs[j]);
            // term *= (x - xs[j]) / (xs[i] - xs[j])
            let mut next: Poly = vec![Scalar::zero(); term.len() + 1];
            for (d, c) in term.iter().enumerate() {
                let scaled = c.div(&denom)?;
                next[d] = next[d].sub(&scaled.mul(&Scalar::from_int(xs[j]))?)?;
                next[d + 1] = next[d + 1].add(&scaled)?;
            }
            term = next;
        }
        while acc.len() < term.len() {
            acc.push(Scalar::zero());
        }
        for (d, c) in term.iter().enumerate() {
            acc[d] = acc[d].add(c)?;
        }
    }
    trim(&mut acc);
    if is_zero_poly(&acc) {
        Ok(None)
    } else {
        Ok(Some(acc))
    }
}

/// Roots of p lying in `field`. Complete for degree <= 2 (quadratic formula
/// with an exact in-field square root test); for higher degree, rational
/// roots and zero are still found.
pub fn roots_in_field(p: &Poly, field: Field) -> Result<Vec<Scalar>> {
    let mut q = p.clone();
    trim(&mut q);
    let mut roots: Vec<Scalar> = Vec::new();
    let mut push = |r: Scalar, q: &Poly| -> Result<()> {
        if eval_scalar(q, &r)?.is_zero() && !roots.contains(&r) {
            roots.push(r);
        }
        Ok(())
    };
    let d = degree(&q);
    if d == 0 {
        return Ok(vec![]);
    }
    if d == 1 {
        push(q[0].neg().div(&q[1])?, &q)?;
        return Ok(roots);
    }
    if d == 2 {
        // (-b +- sqrt(b^2 - 4ac)) / 2a
        let a = &q[2];
        let b = &q[1];
        let c = &q[0];
        let disc = b.mul(b)?.sub(&Scalar::from_int(4).mul(a)?.mul(c)?)?;
        if let Some(s) = disc.sqrt_in(field) {
            let two_a = Scalar::from_int(2).mul(a)?;
            push(b.neg().add(&s)?.div(&two_a)?, &q)?;
            push(b.neg().sub(&s)?.div(&two_a)?, &q)?;
        }
        return Ok(roots);
    }
    if q[0].is_zero() {
        push(Scalar::zero(), &q)?;
    }
    let coeffs_rational = q.iter().all(|cf| cf.field() == Field::Rat);
    if coeffs_rational {
        for r in rational_roots(&q)? {
            push(Scalar::Rat(r), &q)?;
        }
    }
    Ok(roots)
}
