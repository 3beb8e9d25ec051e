//! Exact scalars: rationals, the real quadratic extension Q(sqrt(D)), and
//! their Gaussian (i-adjoined) extensions.
//!
//! All arithmetic is exact; there is no floating point anywhere in this
//! module. A value carries the smallest field it lives in, and binary
//! operations promote to the join of the operand fields. Mixing two
//! different radicands D is an error, never an implicit tower.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always normalized
/// (gcd(|num|, den) = 1, den > 0).
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Element a + b*sqrt(d) of a real quadratic extension.
///
/// `d` is a square-free integer >= 2, or 0 when `b == 0` (a plain rational
/// embedded into the extension). Keeping the radicand inside the value makes
/// accidental mixing of different extensions detectable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub d: u32,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u32) -> Self {
        let d = if b.is_zero() { 0 } else { d };
        debug_assert!(b.is_zero() || d >= 2, "nonzero sqrt part needs a radicand >= 2");
        QuadExt { a, b, d }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt { a, b: Rational::zero(), d: 0 }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn join_d(&self, other: &Self) -> Result<u32> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d1, d2) if d1 == d2 => Ok(d1),
            (d1, d2) => Err(Error::FieldMismatch(Field::Quad(d1), Field::Quad(d2))),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let d = self.join_d(other)?;
        Ok(QuadExt::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let d = self.join_d(other)?;
        Ok(QuadExt::new(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn neg(&self) -> Self {
        QuadExt { a: -&self.a, b: -&self.b, d: self.d }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.join_d(other)?;
        let rad = rat_int(d as i64);
        Ok(QuadExt::new(
            &self.a * &other.a + &rad * &self.b * &other.b,
            &self.a * &other.b + &self.b * &other.a,
            d,
        ))
    }

    /// Multiplicative inverse via the conjugate: the norm a^2 - d*b^2
    /// vanishes only at zero because d is square-free.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let rad = rat_int(self.d as i64);
        let norm = &self.a * &self.a - &rad * &self.b * &self.b;
        debug_assert!(!norm.is_zero());
        Ok(QuadExt::new(&self.a / &norm, -&self.b / &norm, self.d))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// Exact sign of the real number a + b*sqrt(d), by case analysis on the
    /// signs of a and b and comparison of a^2 against d*b^2.
    pub fn sign(&self) -> i8 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: the larger of a^2 and d*b^2 wins.
        let a2 = &self.a * &self.a;
        let db2 = rat_int(self.d as i64) * &self.b * &self.b;
        match a2.cmp(&db2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            // a^2 = d*b^2 with a, b nonzero is impossible for square-free d >= 2
            std::cmp::Ordering::Equal => unreachable!("sqrt(d) is irrational"),
        }
    }
}

fn rational_sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// One of the four supported scalar fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals Q.
    Rat,
    /// Q(sqrt(d)).
    Quad(u32),
    /// The Gaussian rationals Q(i).
    GaussRat,
    /// Q(sqrt(d), i).
    GaussQuad(u32),
}

impl Field {
    pub fn is_real(self) -> bool {
        matches!(self, Field::Rat | Field::Quad(_))
    }

    pub fn is_gaussian(self) -> bool {
        !self.is_real()
    }

    /// The Gaussian extension of this field.
    pub fn gaussian(self) -> Field {
        match self {
            Field::Rat => Field::GaussRat,
            Field::Quad(d) => Field::GaussQuad(d),
            g => g,
        }
    }

    /// The real subfield.
    pub fn real_subfield(self) -> Field {
        match self {
            Field::GaussRat => Field::Rat,
            Field::GaussQuad(d) => Field::Quad(d),
            r => r,
        }
    }

    pub fn radicand(self) -> Option<u32> {
        match self {
            Field::Quad(d) | Field::GaussQuad(d) => Some(d),
            _ => None,
        }
    }

    /// Smallest field containing both operands; errors when the radicands
    /// disagree.
    pub fn join(self, other: Field) -> Result<Field> {
        let norm = |r: Option<u32>| r.filter(|&d| d != 0);
        let d = match (norm(self.radicand()), norm(other.radicand())) {
            (None, x) | (x, None) => x,
            (Some(d1), Some(d2)) if d1 == d2 => Some(d1),
            (Some(_), Some(_)) => return Err(Error::FieldMismatch(self, other)),
        };
        let gaussian = self.is_gaussian() || other.is_gaussian();
        Ok(match (d, gaussian) {
            (None, false) => Field::Rat,
            (None, true) => Field::GaussRat,
            (Some(0), false) => Field::Rat,
            (Some(0), true) => Field::GaussRat,
            (Some(d), false) => Field::Quad(d),
            (Some(d), true) => Field::GaussQuad(d),
        })
    }

    /// Whether a value of field `self` can be used where `other` is expected.
    pub fn embeds_in(self, other: Field) -> bool {
        match self.join(other) {
            Ok(j) => j == other,
            Err(_) => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rat => write!(f, "rat"),
            Field::Quad(d) => write!(f, "quad(sqrt {d})"),
            Field::GaussRat => write!(f, "gauss_rat"),
            Field::GaussQuad(d) => write!(f, "gauss_quad(sqrt {d})"),
        }
    }
}

/// Exact element of Q, Q(sqrt d), Q(i) or Q(sqrt d, i).
///
/// The variant records the level the value was constructed at; binary
/// operations promote to the join of the levels and never demote, so all
/// entries of a matrix stay at the matrix's declared field.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Rational),
    Quad(QuadExt),
    GaussRat { re: Rational, im: Rational },
    GaussQuad { re: QuadExt, im: QuadExt },
}

/// Mathematical equality: values at different levels compare equal when they
/// agree after promotion to the common field.
impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match self.promote_pair(other) {
            Ok((x, y)) => match (x, y) {
                (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
                (Scalar::Quad(a), Scalar::Quad(b)) => a == b,
                (
                    Scalar::GaussRat { re: r1, im: i1 },
                    Scalar::GaussRat { re: r2, im: i2 },
                ) => r1 == r2 && i1 == i2,
                (
                    Scalar::GaussQuad { re: r1, im: i1 },
                    Scalar::GaussQuad { re: r2, im: i2 },
                ) => r1 == r2 && i1 == i2,
                _ => unreachable!(),
            },
            Err(_) => false,
        }
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(rat_int(n))
    }

    pub fn from_rat(n: i64, d: i64) -> Self {
        Scalar::Rat(rat(n, d))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::Rat(r)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::GaussRat { re: Rational::zero(), im: Rational::one() }
    }

    /// sqrt(d) as an element of Q(sqrt d).
    pub fn sqrt_d(d: u32) -> Self {
        Scalar::Quad(QuadExt::new(Rational::zero(), Rational::one(), d))
    }

    pub fn quad(a: Rational, b: Rational, d: u32) -> Self {
        Scalar::Quad(QuadExt::new(a, b, d))
    }

    pub fn complex(re: Scalar, im: Scalar) -> Result<Self> {
        let field = re.field().join(im.field())?;
        if field.is_gaussian() {
            return Err(Error::BadParams("complex parts must be real".into()));
        }
        let re = re.promote(field)?;
        let im = im.promote(field)?;
        Ok(match (re, im) {
            (Scalar::Rat(re), Scalar::Rat(im)) => Scalar::GaussRat { re, im },
            (Scalar::Quad(re), Scalar::Quad(im)) => Scalar::GaussQuad { re, im },
            _ => unreachable!(),
        })
    }

    /// The smallest field this value lives in.
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rat,
            Scalar::Quad(q) => {
                if q.b.is_zero() {
                    Field::Rat
                } else {
                    Field::Quad(q.d)
                }
            }
            Scalar::GaussRat { im, .. } => {
                if im.is_zero() {
                    Field::Rat
                } else {
                    Field::GaussRat
                }
            }
            Scalar::GaussQuad { re, im } => {
                let quad = !re.b.is_zero() || !im.b.is_zero();
                let gauss = !im.is_zero();
                let d = if !re.b.is_zero() { re.d } else { im.d };
                match (quad, gauss) {
                    (false, false) => Field::Rat,
                    (true, false) => Field::Quad(d),
                    (false, true) => Field::GaussRat,
                    (true, true) => Field::GaussQuad(d),
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Quad(q) => q.is_zero(),
            Scalar::GaussRat { re, im } => re.is_zero() && im.is_zero(),
            Scalar::GaussQuad { re, im } => re.is_zero() && im.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.sub(&Scalar::one()).map(|x| x.is_zero()).unwrap_or(false)
    }

    pub fn is_real(&self) -> bool {
        match self {
            Scalar::Rat(_) | Scalar::Quad(_) => true,
            Scalar::GaussRat { im, .. } => im.is_zero(),
            Scalar::GaussQuad { im, .. } => im.is_zero(),
        }
    }

    /// The four coordinates over Q: value = a + b*sqrt(D) + i*(c + e*sqrt(D)).
    fn coords(&self) -> (Rational, Rational, Rational, Rational) {
        match self {
            Scalar::Rat(r) => {
                (r.clone(), Rational::zero(), Rational::zero(), Rational::zero())
            }
            Scalar::Quad(q) => (q.a.clone(), q.b.clone(), Rational::zero(), Rational::zero()),
            Scalar::GaussRat { re, im } => {
                (re.clone(), Rational::zero(), im.clone(), Rational::zero())
            }
            Scalar::GaussQuad { re, im } => {
                (re.a.clone(), re.b.clone(), im.a.clone(), im.b.clone())
            }
        }
    }

    /// Re-represent at exactly the `target` level. Errors if the value does
    /// not lie in the target field; demotes representations whose higher
    /// coordinates vanish.
    pub fn promote(&self, target: Field) -> Result<Scalar> {
        if !self.field().embeds_in(target) {
            return Err(Error::FieldMismatch(self.field(), target));
        }
        let (a, b, c, e) = self.coords();
        let d = target.radicand().unwrap_or(0);
        Ok(match target {
            Field::Rat => {
                debug_assert!(b.is_zero() && c.is_zero() && e.is_zero());
                Scalar::Rat(a)
            }
            Field::Quad(_) => {
                debug_assert!(c.is_zero() && e.is_zero());
                Scalar::Quad(QuadExt::new(a, b, d))
            }
            Field::GaussRat => {
                debug_assert!(b.is_zero() && e.is_zero());
                Scalar::GaussRat { re: a, im: c }
            }
            Field::GaussQuad(_) => Scalar::GaussQuad {
                re: QuadExt::new(a, b, d),
                im: QuadExt::new(c, e, d),
            },
        })
    }

    fn promote_pair(&self, other: &Scalar) -> Result<(Scalar, Scalar)> {
        let target = self.field().join(other.field())?;
        Ok((self.promote(target)?, other.promote(target)?))
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        let (x, y) = self.promote_pair(other)?;
        Ok(match (x, y) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Quad(a), Scalar::Quad(b)) => Scalar::Quad(a.add(&b)?),
            (Scalar::GaussRat { re: r1, im: i1 }, Scalar::GaussRat { re: r2, im: i2 }) => {
                Scalar::GaussRat { re: r1 + r2, im: i1 + i2 }
            }
            (Scalar::GaussQuad { re: r1, im: i1 }, Scalar::GaussQuad { re: r2, im: i2 }) => {
                Scalar::GaussQuad { re: r1.add(&r2)?, im: i1.add(&i2)? }
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Quad(q) => Scalar::Quad(q.neg()),
            Scalar::GaussRat { re, im } => Scalar::GaussRat { re: -re, im: -im },
            Scalar::GaussQuad { re, im } => {
                Scalar::GaussQuad { re: re.neg(), im: im.neg() }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        let (x, y) = self.promote_pair(other)?;
        Ok(match (x, y) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Quad(a), Scalar::Quad(b)) => Scalar::Quad(a.mul(&b)?),
            (Scalar::GaussRat { re: r1, im: i1 }, Scalar::GaussRat { re: r2, im: i2 }) => {
                Scalar::GaussRat {
                    re: &r1 * &r2 - &i1 * &i2,
                    im: &r1 * &i2 + &i1 * &r2,
                }
            }
            (Scalar::GaussQuad { re: r1, im: i1 }, Scalar::GaussQuad { re: r2, im: i2 }) => {
                Scalar::GaussQuad {
                    re: r1.mul(&r2)?.sub(&i1.mul(&i2)?)?,
                    im: r1.mul(&i2)?.add(&i1.mul(&r2)?)?,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Quad(q) => Scalar::Quad(q.inv()?),
            Scalar::GaussRat { re, im } => {
                let norm = re * re + im * im;
                Scalar::GaussRat { re: re / &norm, im: -im / &norm }
            }
            Scalar::GaussQuad { re, im } => {
                let norm = re.mul(re)?.add(&im.mul(im)?)?;
                let ninv = norm.inv()?;
                Scalar::GaussQuad {
                    re: re.mul(&ninv)?,
                    im: im.neg().mul(&ninv)?,
                }
            }
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inv()?)
    }

    /// Complex conjugation; identity on the real levels.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Rat(_) | Scalar::Quad(_) => self.clone(),
            Scalar::GaussRat { re, im } => Scalar::GaussRat { re: re.clone(), im: -im },
            Scalar::GaussQuad { re, im } => {
                Scalar::GaussQuad { re: re.clone(), im: im.neg() }
            }
        }
    }

    /// Real part, as a value of the real subfield.
    pub fn re(&self) -> Scalar {
        match self {
            Scalar::Rat(_) | Scalar::Quad(_) => self.clone(),
            Scalar::GaussRat { re, .. } => Scalar::Rat(re.clone()),
            Scalar::GaussQuad { re, .. } => Scalar::Quad(re.clone()),
        }
    }

    /// Imaginary part, as a value of the real subfield.
    pub fn im(&self) -> Scalar {
        match self {
            Scalar::Rat(_) | Scalar::Quad(_) => Scalar::zero(),
            Scalar::GaussRat { im, .. } => Scalar::Rat(im.clone()),
            Scalar::GaussQuad { im, .. } => Scalar::Quad(im.clone()),
        }
    }

    /// x * conj(x), a real scalar.
    pub fn norm_sqr(&self) -> Scalar {
        self.mul(&self.conj()).expect("same field").re()
    }

    /// Exact sign of a real scalar; only the real levels are ordered.
    pub fn sign(&self) -> Result<i8> {
        match self {
            Scalar::Rat(r) => Ok(rational_sign(r)),
            Scalar::Quad(q) => Ok(q.sign()),
            _ if self.is_real() => self.re().sign(),
            _ => Err(Error::NotReal),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign().map(|s| s > 0).unwrap_or(false)
    }

    pub fn is_negative(&self) -> bool {
        self.sign().map(|s| s < 0).unwrap_or(false)
    }

    /// Exact square root inside the given field, when one exists there.
    pub fn sqrt_in(&self, field: Field) -> Option<Scalar> {
        if !self.field().embeds_in(field) {
            return None;
        }
        let d = field.radicand().unwrap_or(0);
        if field.is_real() {
            let (a, b, _, _) = self.coords();
            return quad_sqrt(&a, &b, d).map(|(p, q)| Scalar::quad(p, q, d));
        }
        // (x + iy)^2 = re + i*im with x, y in the real subfield:
        // x^2 = (re +- |z|)/2, y = im / 2x; |z| must itself be a square.
        let real = field.real_subfield();
        let re = self.re();
        let im = self.im();
        let norm = re.mul(&re).ok()?.add(&im.mul(&im).ok()?).ok()?;
        let modulus = norm.sqrt_in(real)?;
        for branch in [&modulus, &modulus.neg()] {
            let x2 = re.add(branch).ok()?.div(&Scalar::from_int(2)).ok()?;
            if let Some(x) = x2.sqrt_in(real) {
                if !x.is_zero() {
                    let y = im.div(&x.mul(&Scalar::from_int(2)).ok()?).ok()?;
                    let cand = Scalar::complex(x, y).ok()?;
                    if cand.mul(&cand).ok()? == *self {
                        return Some(cand);
                    }
                }
            }
        }
        if im.is_zero() {
            if re.is_zero() {
                return Some(Scalar::zero());
            }
            // purely imaginary root: x = 0, y^2 = -re
            if let Some(y) = re.neg().sqrt_in(real) {
                return Scalar::complex(Scalar::zero(), y).ok();
            }
        }
        None
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// Square root of a + b*sqrt(d) inside Q(sqrt d), as a coordinate pair.
fn quad_sqrt(a: &Rational, b: &Rational, d: u32) -> Option<(Rational, Rational)> {
    if b.is_zero() {
        if let Some(p) = rational_sqrt(a) {
            return Some((p, Rational::zero()));
        }
        if d != 0 {
            // a = d * t^2 gives sqrt = t*sqrt(d)
            let t2 = a / rat_int(d as i64);
            if let Some(t) = rational_sqrt(&t2) {
                return Some((Rational::zero(), t));
            }
        }
        return None;
    }
    if d == 0 || QuadExt::new(a.clone(), b.clone(), d).sign() < 0 {
        return None;
    }
    // (p + q*sqrt d)^2 = a + b sqrt d: p^2 = (a +- sqrt(a^2 - d b^2))/2
    let rad = rat_int(d as i64);
    let delta = a * a - &rad * b * b;
    let delta_sqrt = rational_sqrt(&delta)?;
    for root in [&delta_sqrt, &(-&delta_sqrt)] {
        let p2 = (a + root) / rat_int(2);
        if let Some(p) = rational_sqrt(&p2) {
            if !p.is_zero() {
                let q = b / (rat_int(2) * &p);
                let target = QuadExt::new(a.clone(), b.clone(), d);
                for cand in [QuadExt::new(p.clone(), q.clone(), d), QuadExt::new(-&p, -&q, d)] {
                    if cand.sign() >= 0 && cand.mul(&cand).ok()? == target {
                        return Some((cand.a, cand.b));
                    }
                }
            }
        }
    }
    None
}

/// The four arithmetic operations, as a checked entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => x.add(y),
        ArithOp::Sub => x.sub(y),
        ArithOp::Mul => x.mul(y),
        ArithOp::Div => x.div(y),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_scalar(self))
    }
}

/// Canonical text form, matching the entry grammar of the analysis file
/// format: `n`, `n/d`, `a+b*sqrt`, or `(re,im)`.
pub fn format_scalar(x: &Scalar) -> String {
    fn fmt_rat(r: &Rational) -> String {
        if r.denom() == &BigInt::from(1) {
            format!("{}", r.numer())
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }
    fn fmt_quad(q: &QuadExt) -> String {
        format!("{}+{}*sqrt", fmt_rat(&q.a), fmt_rat(&q.b))
    }
    match x {
        Scalar::Rat(r) => fmt_rat(r),
        Scalar::Quad(q) => fmt_quad(q),
        Scalar::GaussRat { re, im } => format!("({},{})", fmt_rat(re), fmt_rat(im)),
        Scalar::GaussQuad { re, im } => format!("({},{})", fmt_quad(re), fmt_quad(im)),
    }
}

/// Parse a scalar in the entry grammar.
///
/// entry := rat | [rat "+"] rat "*sqrt" | "(" part "," part ")"
/// rat   := ["-"] digits ["/" digits]
///
/// `d` is the session radicand used for any `*sqrt` part.
pub fn parse_scalar(text: &str, d: u32) -> Result<Scalar> {
    let mut p = Parser { text: text.as_bytes(), pos: 0, d };
    let value = p.parse_entry()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    d: u32,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn parse_entry(&mut self) -> Result<Scalar> {
        self.skip_ws();
        if self.eat(b'(') {
            let re = self.parse_real_part()?;
            self.skip_ws();
            self.expect(b',')?;
            let im = self.parse_real_part()?;
            self.skip_ws();
            self.expect(b')')?;
            return Scalar::complex(re, im);
        }
        self.parse_real_part()
    }

    fn parse_real_part(&mut self) -> Result<Scalar> {
        self.skip_ws();
        let first = self.parse_rat()?;
        self.skip_ws();
        if self.eat(b'*') {
            self.parse_sqrt_kw()?;
            return Ok(Scalar::quad(Rational::zero(), first, self.d));
        }
        if self.eat(b'+') {
            let second = self.parse_rat()?;
            self.skip_ws();
            self.expect(b'*')?;
            self.parse_sqrt_kw()?;
            return Ok(Scalar::quad(first, second, self.d));
        }
        Ok(Scalar::Rat(first))
    }

    fn parse_sqrt_kw(&mut self) -> Result<()> {
        for c in b"sqrt" {
            if !self.eat(*c) {
                return Err(self.error("expected 'sqrt'"));
            }
        }
        Ok(())
    }

    fn parse_rat(&mut self) -> Result<Rational> {
        self.skip_ws();
        let negative = self.eat(b'-');
        let num = self.parse_digits()?;
        let den = if self.eat(b'/') { self.parse_digits()? } else { BigInt::from(1) };
        if den.is_zero() {
            return Err(self.error("zero denominator"));
        }
        let mut value = Rational::new(num, den);
        if negative {
            value = -value;
        }
        Ok(value)
    }

    fn parse_digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> Scalar {
        Scalar::quad(rat(a.0, a.1), rat(b.0, b.1), 3)
    }

    #[test]
    fn difference_of_squares_in_quad_field() {
        // (1/2 + (1/2) sqrt3)(1/2 - (1/2) sqrt3) = 1/4 - 3/4 = -1/2
        let x = q((1, 2), (1, 2));
        let y = q((1, 2), (-1, 2));
        assert_eq!(x.mul(&y).unwrap(), Scalar::from_rat(-1, 2));
    }

    #[test]
    fn identity_and_self_division() {
        let x = q((2, 1), (1, 1));
        assert_eq!(x.mul(&Scalar::one()).unwrap(), x);
        assert_eq!(x.div(&x).unwrap(), Scalar::one());
        assert!(Scalar::one().div(&Scalar::zero()).is_err());
    }

    #[test]
    fn sign_cases() {
        assert_eq!(q((0, 1), (0, 1)).sign().unwrap(), 0);
        // 1 - (3/5) sqrt3: compare 1 against 27/25
        assert_eq!(q((1, 1), (-3, 5)).sign().unwrap(), -1);
        // -2 + 2 sqrt3: compare 4 against 12
        assert_eq!(q((-2, 1), (2, 1)).sign().unwrap(), 1);
        assert!(Scalar::i().sign().is_err());
    }

    #[test]
    fn sign_is_multiplicative() {
        let samples = [
            q((1, 2), (0, 1)),
            q((-1, 3), (2, 5)),
            q((7, 2), (-2, 1)),
            q((0, 1), (-1, 4)),
            q((5, 1), (-3, 1)),
        ];
        for x in &samples {
            for y in &samples {
                let p = x.mul(y).unwrap();
                assert_eq!(p.sign().unwrap(), x.sign().unwrap() * y.sign().unwrap());
            }
            let sq = x.mul(x).unwrap();
            assert!(sq.sign().unwrap() >= 0);
            assert_eq!(sq.sign().unwrap() == 0, x.is_zero());
        }
    }

    #[test]
    fn parse_grammar_cases() {
        assert_eq!(parse_scalar("-1/2", 3).unwrap(), Scalar::from_rat(-1, 2));
        assert_eq!(parse_scalar("1/3*sqrt", 3).unwrap(), q((0, 1), (1, 3)));
        assert_eq!(parse_scalar("2+0/1*sqrt", 3).unwrap(), q((2, 1), (0, 1)));
        assert_eq!(
            parse_scalar("(1/2,-3)", 3).unwrap(),
            Scalar::complex(Scalar::from_rat(1, 2), Scalar::from_int(-3)).unwrap()
        );
        assert_eq!(
            parse_scalar("(1+1/2*sqrt,0+1*sqrt)", 3).unwrap(),
            Scalar::complex(q((1, 1), (1, 2)), q((0, 1), (1, 1))).unwrap()
        );
        let err = parse_scalar("1/2junk", 3).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn sqrt_in_field_cases() {
        assert_eq!(
            Scalar::from_rat(9, 4).sqrt_in(Field::Rat),
            Some(Scalar::from_rat(3, 2))
        );
        assert_eq!(Scalar::from_int(2).sqrt_in(Field::Rat), None);
        assert_eq!(
            Scalar::from_int(3).sqrt_in(Field::Quad(3)),
            Some(Scalar::sqrt_d(3))
        );
        // 4 + 2 sqrt3 = (1 + sqrt3)^2
        let x = q((4, 1), (2, 1));
        let r = x.sqrt_in(Field::Quad(3)).unwrap();
        assert_eq!(r.mul(&r).unwrap(), x);
        // sqrt(-1) = i in the Gaussian field
        let i = Scalar::from_int(-1).sqrt_in(Field::GaussRat).unwrap();
        assert_eq!(i.mul(&i).unwrap(), Scalar::from_int(-1));
        // no sqrt of 2 in Q(i) or Q(sqrt 3, i)
        assert_eq!(Scalar::from_int(2).sqrt_in(Field::GaussRat), None);
        assert_eq!(Scalar::from_int(2).sqrt_in(Field::GaussQuad(3)), None);
        // sqrt(2) does live in Q(sqrt 2, i)
        let r = Scalar::from_int(2).sqrt_in(Field::GaussQuad(2)).unwrap();
        assert_eq!(r.mul(&r).unwrap(), Scalar::from_int(2));
    }

    #[test]
    fn checked_arith_entry_point() {
        let x = q((1, 2), (1, 2));
        let y = q((1, 2), (-1, 2));
        assert_eq!(arith(&x, &y, ArithOp::Mul).unwrap(), Scalar::from_rat(-1, 2));
        assert_eq!(arith(&x, &y, ArithOp::Add).unwrap(), Scalar::one());
        assert_eq!(
            arith(&x, &x, ArithOp::Sub).unwrap(),
            Scalar::zero()
        );
        assert!(matches!(
            arith(&x, &Scalar::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        ));
        let other_d = Scalar::quad(rat(0, 1), rat(1, 1), 5);
        assert!(matches!(
            arith(&x, &other_d, ArithOp::Mul),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn promotion_and_field_join() {
        assert_eq!(Field::Rat.join(Field::Quad(3)).unwrap(), Field::Quad(3));
        assert_eq!(
            Field::Quad(3).join(Field::GaussRat).unwrap(),
            Field::GaussQuad(3)
        );
        assert!(Field::Quad(3).join(Field::Quad(5)).is_err());
        let x = q((1, 1), (2, 1));
        let y = Scalar::quad(rat(1, 1), rat(1, 1), 5);
        assert!(x.add(&y).is_err());
    }
}
