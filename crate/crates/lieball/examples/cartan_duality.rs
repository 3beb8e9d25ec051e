//! Cartan decompositions of so(n+2) and so(2,n), the duality sign flip on
//! the m-part, and Lie triple verification.

use lieball::symspace::{
    appendix_lie_triple, cartan, crafted_non_triple, dualize, is_lie_triple, CartanVariant,
};

fn main() -> lieball::Result<()> {
    let compact = cartan(3, CartanVariant::Compact)?;
    let noncompact = cartan(3, CartanVariant::Noncompact)?;
    println!(
        "so(5) = k + m with dim k = {}, dim m = {}",
        compact.k_basis.len(),
        compact.m_basis.len()
    );
    println!(
        "so(2,3) = k + m* with dim k = {}, dim m* = {}",
        noncompact.k_basis.len(),
        noncompact.m_basis.len()
    );

    // duality reverses the m-part bracket
    let x = &compact.m_basis[0];
    let y = &compact.m_basis[4];
    let dx = dualize(x, &compact)?;
    let dy = dualize(y, &compact)?;
    assert_eq!(dx.bracket(&dy)?, x.bracket(y)?.neg());
    println!("[X*, Y*] = -[X, Y] verified on the m-basis.");

    let triple = appendix_lie_triple(CartanVariant::Noncompact);
    println!(
        "span{{U*, V*}} is a Lie triple: {}",
        is_lie_triple(&triple, &noncompact)?
    );
    println!(
        "the crafted 2-plane is a Lie triple: {}",
        is_lie_triple(&crafted_non_triple()?, &noncompact)?
    );
    Ok(())
}
