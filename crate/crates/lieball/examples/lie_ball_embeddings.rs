//! Totally geodesic embeddings into the Lie ball: every image satisfies the
//! quadric equation with zero residual and the exact negativity condition.

use lieball::scalar::Scalar;
use lieball::symspace::embed::{embed, EmbedInput, EmbeddingSpec};
use lieball::symspace::lieball::{base_point, point_to_plane};

fn main() -> lieball::Result<()> {
    // complex hyperbolic line into the n = 2 Lie ball, base point
    let i1 = EmbeddingSpec::I1 { k: 1, n: 2 };
    let img = embed(&i1, &EmbedInput::Single(vec![Scalar::one(), Scalar::zero()]))?;
    println!("I1(1,0) = {:?}", render(&img));
    assert!(img.projectively_equal(&base_point(2)));

    // its real form at x = (1, 1/2)
    let i2 = EmbeddingSpec::I2 { k: 1, n: 2 };
    let img = embed(
        &i2,
        &EmbedInput::Single(vec![Scalar::one(), Scalar::from_rat(1, 2)]),
    )?;
    println!(
        "I2(1,1/2) = {:?}, q(Z,Z) = {}",
        render(&img),
        lieball::scalar::format_scalar(&img.hermitian_value()?)
    );

    // a product of hyperbolic lines with matched norms
    let g2 = EmbeddingSpec::G2 { k1: 1, k2: 1, n: 3 };
    let img = embed(
        &g2,
        &EmbedInput::Pair(
            vec![Scalar::from_int(2), Scalar::one()],
            vec![Scalar::from_int(2), Scalar::one()],
        ),
    )?;
    println!("G2((2,1),(2,1)) = {:?}", render(&img));
    assert!(img.on_quadric() && img.in_lieball());

    // Lorentzian-model real hyperbolic plane
    let p1 = EmbeddingSpec::P1 { k: 2, n: 3 };
    let img = embed(
        &p1,
        &EmbedInput::Single(vec![
            Scalar::from_rat(5, 4),
            Scalar::from_rat(3, 4),
            Scalar::zero(),
        ]),
    )?;
    println!("P1(5/4, 3/4, 0) = {:?}", render(&img));

    // back to plane data
    let plane = point_to_plane(&img)?;
    println!(
        "spanning plane vectors A = {:?}, B = {:?}",
        plane.a.iter().map(lieball::scalar::format_scalar).collect::<Vec<_>>(),
        plane.b.iter().map(lieball::scalar::format_scalar).collect::<Vec<_>>()
    );
    Ok(())
}

fn render(p: &lieball::symspace::lieball::ProjectivePoint) -> Vec<String> {
    p.canonical()
        .coords()
        .iter()
        .map(lieball::scalar::format_scalar)
        .collect()
}
