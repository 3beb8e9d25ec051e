//! The parabolic stabilizer of a light-like line, the local transitivity
//! test on the pseudo-sphere, fixer algebras of base planes, and invariant
//! hulls.

use lieball::builtins::{appendix_so12, so_pq, u_pq_realified};
use lieball::scalar::Scalar;
use lieball::symspace::lieball::NegativePlane;
use lieball::symspace::stab::{
    fixer_algebra, invariant_hull, is_full, local_transitivity, parabolic_algebra,
};

fn main() -> lieball::Result<()> {
    // the parabolic of so(2,3) at the light-like vector e0 + e2
    let mut v = vec![Scalar::zero(); 5];
    v[0] = Scalar::one();
    v[2] = Scalar::one();
    let p = parabolic_algebra(1, 2, &v)?;
    println!("parabolic of so(2,3) at e0+e2: dimension {}", p.dim());

    let so23 = so_pq(2, 3)?;
    let g = appendix_so12()?;
    println!(
        "so(1,2) locally transitive on the pseudo-sphere: {}",
        local_transitivity(&g, &p, &so23)?
    );
    println!(
        "so(2,3) locally transitive on the pseudo-sphere: {}",
        local_transitivity(&so23, &p, &so23)?
    );

    // fixer algebras of the base plane
    let u12 = u_pq_realified(1, 2)?;
    let fixer = fixer_algebra(&u12, &NegativePlane::base(4))?;
    println!("fixer of the base plane in realified u(1,2): dimension {}", fixer.dim());
    let fixer = fixer_algebra(&g, &NegativePlane::base(3))?;
    println!("fixer of the base plane in the appendix so(1,2): dimension {}", fixer.dim());

    // invariant hulls detect fullness
    let plane = NegativePlane::base(3);
    let hull = invariant_hull(&g, &[plane.a.clone(), plane.b.clone()])?;
    println!("hull of the base plane under so(1,2) is full: {}", is_full(&hull));
    Ok(())
}
