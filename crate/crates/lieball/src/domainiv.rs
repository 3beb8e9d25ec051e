//! The explicit biholomorphism f between the bounded domain of type IV in
//! C^n and the Lie ball: f(z) = [i(L-1) : L+1 : 2z_1 : ... : 2z_n] with
//! L = z_1^2 + ... + z_n^2. Every check is exact; the image satisfies the
//! quadric equation identically and lies in the Lie ball exactly when the
//! domain inequality holds.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::symspace::lieball::ProjectivePoint;

/// A point of C^n with Gaussian-rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainPoint {
    z: Vec<Scalar>,
}

impl DomainPoint {
    pub fn new(z: Vec<Scalar>) -> Result<Self> {
        if z.is_empty() {
            return Err(Error::BadParams("need at least one coordinate".into()));
        }
        let z = z
            .into_iter()
            .map(|c| {
                if c.field().embeds_in(Field::GaussRat) {
                    c.promote(Field::GaussRat)
                } else {
                    Err(Error::FieldMismatch(c.field(), Field::GaussRat))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DomainPoint { z })
    }

    pub fn origin(n: usize) -> Self {
        DomainPoint { z: vec![Scalar::zero().promote(Field::GaussRat).unwrap(); n] }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.z
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    /// L = z_1^2 + ... + z_n^2 (complex bilinear).
    pub fn lambda(&self) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for z in &self.z {
            acc = acc.add(&z.mul(z)?)?;
        }
        Ok(acc)
    }

    /// |z_1|^2 + ... + |z_n|^2, a rational number.
    pub fn norm_sum(&self) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for z in &self.z {
            acc = acc.add(&z.norm_sqr())?;
        }
        Ok(acc)
    }
}

/// f(z) = [i(L - 1) : L + 1 : 2 z_1 : ... : 2 z_n]. The quadric residual of
/// the image is identically zero.
pub fn cartan_iv_map(z: &DomainPoint) -> Result<ProjectivePoint> {
    let lambda = z.lambda()?;
    let mut coords = Vec::with_capacity(z.n() + 2);
    coords.push(lambda.sub(&Scalar::one())?.mul(&Scalar::i())?);
    coords.push(lambda.add(&Scalar::one())?);
    for c in z.coords() {
        coords.push(c.mul(&Scalar::from_int(2))?);
    }
    let point = ProjectivePoint::new(coords)?;
    debug_assert!(point.on_quadric());
    Ok(point)
}

/// The left-hand side of the domain inequality,
/// 2 (|z_1|^2 + ... + |z_n|^2) - |z_1^2 + ... + z_n^2|^2 - 1.
pub fn domain_inequality_value(z: &DomainPoint) -> Result<Scalar> {
    let s = z.norm_sum()?;
    let l = z.lambda()?.norm_sqr();
    s.mul(&Scalar::from_int(2))?.sub(&l)?.sub(&Scalar::one())
}

/// Membership in the bounded domain of type IV: |z| < 1 together with the
/// inequality above, both evaluated exactly.
pub fn in_domain_iv(z: &DomainPoint) -> Result<bool> {
    let s = z.norm_sum()?;
    if !s.sub(&Scalar::one())?.is_negative() {
        return Ok(false);
    }
    Ok(domain_inequality_value(z)?.is_negative())
}

/// The chained inequality 2 sum |z_i|^2 - 1 < (sum |z_i|^2)^2 that forces
/// accepted points into the unit ball.
pub fn chained_inequality_holds(z: &DomainPoint) -> Result<bool> {
    let s = z.norm_sum()?;
    let lhs = s.mul(&Scalar::from_int(2))?.sub(&Scalar::one())?;
    Ok(lhs.sub(&s.mul(&s)?)?.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symspace::lieball::base_point;

    fn pt(re_im: &[(i64, i64, i64)]) -> DomainPoint {
        // (re_num, im_num, den)
        DomainPoint::new(
            re_im
                .iter()
                .map(|&(r, i, d)| {
                    Scalar::complex(Scalar::from_rat(r, d), Scalar::from_rat(i, d)).unwrap()
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn origin_maps_to_base_point() {
        let z = DomainPoint::origin(3);
        let img = cartan_iv_map(&z).unwrap();
        // [-i : 1 : 0 : 0 : 0] = [1 : i : 0 : 0 : 0]
        assert!(img.projectively_equal(&base_point(3)));
        assert!(img.on_quadric());
        assert!(img.in_lieball());
        assert!(in_domain_iv(&z).unwrap());
    }

    #[test]
    fn boundary_point_is_rejected_exactly() {
        let z = pt(&[(1, 0, 1), (0, 0, 1)]);
        assert_eq!(domain_inequality_value(&z).unwrap(), Scalar::zero());
        assert!(!in_domain_iv(&z).unwrap());
        let img = cartan_iv_map(&z).unwrap();
        assert!(img.on_quadric());
        assert!(!img.in_lieball());
        // [0 : 2 : 2 : 0]
        assert!(img.coords()[0].is_zero());
        assert_eq!(img.coords()[1], Scalar::from_int(2));
    }

    #[test]
    fn interior_point_example() {
        // z = (1/2, 0): image [-(3/4) i : 5/4 : 1 : 0]
        let z = pt(&[(1, 0, 2), (0, 0, 1)]);
        let img = cartan_iv_map(&z).unwrap();
        assert_eq!(
            img.coords()[0],
            Scalar::complex(Scalar::zero(), Scalar::from_rat(-3, 4)).unwrap()
        );
        assert_eq!(img.coords()[1], Scalar::from_rat(5, 4));
        assert_eq!(img.coords()[2], Scalar::one());
        assert!(img.in_lieball());
        // 2 * 1/4 - 1/16 - 1 = -9/16
        assert_eq!(
            domain_inequality_value(&z).unwrap(),
            Scalar::from_rat(-9, 16)
        );
        assert!(in_domain_iv(&z).unwrap());
    }

    #[test]
    fn membership_agreement_with_lie_ball() {
        // in the unit ball but outside the domain: z = (3/5, i*3/5)
        let z = pt(&[(3, 0, 5), (0, 3, 5)]);
        assert!(z.norm_sum().unwrap().sub(&Scalar::one()).unwrap().is_negative());
        assert!(!in_domain_iv(&z).unwrap());
        let img = cartan_iv_map(&z).unwrap();
        assert!(img.on_quadric());
        assert!(!img.in_lieball());
        // and the lie-ball membership agrees with the second inequality in
        // both directions
        for sample in [
            pt(&[(1, 1, 4), (0, 0, 1)]),
            pt(&[(1, 0, 3), (1, 0, 3)]),
            pt(&[(0, 1, 2), (1, 0, 5)]),
        ] {
            let inside = domain_inequality_value(&sample).unwrap().is_negative();
            assert_eq!(cartan_iv_map(&sample).unwrap().in_lieball(), inside);
            if in_domain_iv(&sample).unwrap() {
                assert!(chained_inequality_holds(&sample).unwrap());
            }
        }
    }
}
