//! The bounded domain of type IV and its explicit map onto the Lie ball:
//! the quadric residual vanishes identically and membership matches the
//! domain inequality exactly.

use lieball::domainiv::{cartan_iv_map, domain_inequality_value, in_domain_iv, DomainPoint};
use lieball::scalar::{format_scalar, Scalar};

fn main() -> lieball::Result<()> {
    let origin = DomainPoint::origin(2);
    let image = cartan_iv_map(&origin)?;
    println!(
        "f(0) = {:?} (the base plane)",
        image.canonical().coords().iter().map(format_scalar).collect::<Vec<_>>()
    );

    for coords in [
        vec![Scalar::from_rat(1, 2), Scalar::zero()],
        vec![Scalar::from_rat(1, 2), Scalar::complex(Scalar::zero(), Scalar::from_rat(1, 3))?],
        vec![Scalar::one(), Scalar::zero()],
        vec![
            Scalar::complex(Scalar::from_rat(3, 5), Scalar::zero())?,
            Scalar::complex(Scalar::zero(), Scalar::from_rat(3, 5))?,
        ],
    ] {
        let z = DomainPoint::new(coords)?;
        let image = cartan_iv_map(&z)?;
        println!(
            "z = {:?}: inequality value {}, in domain: {}, image on quadric: {}, in Lie ball: {}",
            z.coords().iter().map(format_scalar).collect::<Vec<_>>(),
            format_scalar(&domain_inequality_value(&z)?),
            in_domain_iv(&z)?,
            image.on_quadric(),
            image.in_lieball(),
        );
    }
    Ok(())
}
