//! The two explicit 5x5 families with sqrt(3) entries: so(3) inside so(5)
//! and so(1,2) inside so(2,3), their commutator relations, and the bracket
//! closures of the generator pairs.

use lieball::builtins::{appendix_u, appendix_u_star, appendix_v, appendix_v_star, appendix_w};
use lieball::liealg::{LieAlgebra, SignatureForm};

fn main() -> lieball::Result<()> {
    let (u, v, w) = (appendix_u(), appendix_v(), appendix_w());
    println!("U =\n{u}");
    println!("V =\n{v}");
    println!("W = [U,V] =\n{}", u.bracket(&v)?);
    assert_eq!(u.bracket(&v)?, w);
    assert_eq!(v.bracket(&w)?, u);
    assert_eq!(w.bracket(&u)?, v);
    println!("so(3) relations [V,W] = U and [W,U] = V hold exactly.\n");

    let (us, vs) = (appendix_u_star(), appendix_v_star());
    assert_eq!(us.bracket(&vs)?, w.neg());
    assert_eq!(vs.bracket(&w)?, us);
    assert_eq!(w.bracket(&us)?, vs);
    println!("Starred family: [U*,V*] = -W, [V*,W] = U*, [W,U*] = V*.");

    let compact = LieAlgebra::bracket_closure(None, vec![u, v], 10)?;
    let noncompact = LieAlgebra::bracket_closure(None, vec![us, vs], 10)?;
    println!(
        "closure{{U,V}} has dimension {}, orthogonal for eta(0,5): {}",
        compact.dim(),
        compact.check_orthogonality(&SignatureForm::new(0, 5))?
    );
    println!(
        "closure{{U*,V*}} has dimension {}, orthogonal for eta(2,3): {}",
        noncompact.dim(),
        noncompact.check_orthogonality(&SignatureForm::new(2, 3))?
    );
    Ok(())
}
