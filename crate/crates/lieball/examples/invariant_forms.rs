//! Invariant form spaces with exact signatures, and the hermitian forms a
//! quaternionic structure induces from symplectic and symmetric ones.

use lieball::builtins::{appendix_so12, sl2_std, so_pq};
use lieball::matrix::Matrix;
use lieball::repcheck::forms::{
    hermitian_from_symmetric, hermitian_from_symplectic, invariant_forms, AntilinearMap,
    FormSymmetry,
};
use lieball::repcheck::{tensor_rep, Representation};
use lieball::scalar::{Field, Scalar};

fn main() -> lieball::Result<()> {
    for alg in [so_pq(2, 3)?, appendix_so12()?] {
        let rep = Representation::from_algebra(&alg);
        let fs = invariant_forms(&rep, FormSymmetry::Symmetric)?;
        println!(
            "{}: symmetric form space of dimension {}, signatures {:?}",
            rep.name().unwrap_or("unnamed"),
            fs.dim(),
            fs.signatures
        );
    }
    let sl2 = Representation::from_algebra(&sl2_std()?);
    let area = invariant_forms(&sl2, FormSymmetry::Antisymmetric)?;
    println!("sl(2,R) on R^2: antisymmetric form space of dimension {}", area.dim());

    // sl2 (x) sl2 preserves a split form of signature (2,2)
    let tensor = tensor_rep(&sl2, &sl2)?;
    let fs = invariant_forms(&tensor, FormSymmetry::Symmetric)?;
    println!("sl2 (x) sl2 on R^4: symmetric form with signature {:?}", fs.signatures[0]);

    // quaternionic constructions on su(2)/C^2
    let su2 = Representation::new(
        Some("su(2)".into()),
        2,
        vec![
            Matrix::from_rows(
                vec![
                    vec![Scalar::i(), Scalar::zero()],
                    vec![Scalar::zero(), Scalar::i().neg()],
                ],
                Field::GaussRat,
            )?,
            Matrix::from_i64(&[&[0, 1], &[-1, 0]]).promote(Field::GaussRat)?,
            Matrix::from_rows(
                vec![
                    vec![Scalar::zero(), Scalar::i()],
                    vec![Scalar::i(), Scalar::zero()],
                ],
                Field::GaussRat,
            )?,
        ],
    )?;
    let j = AntilinearMap::new(Matrix::from_i64(&[&[0, -1], &[1, 0]]).promote(Field::GaussRat)?);
    let omega = Matrix::from_i64(&[&[0, 1], &[-1, 0]]).promote(Field::GaussRat)?;
    let h = hermitian_from_symplectic(&j, &omega, &su2)?;
    println!("su(2) symplectic lemma: hermitian form with signature {:?}", h.signature);

    // the m = 1 orthogonal case: neutral signature (1,1)
    let line = Representation::new(
        Some("so*(2)".into()),
        2,
        vec![Matrix::from_i64(&[&[0, 1], &[-1, 0]]).promote(Field::GaussRat)?],
    )?;
    let sigma = Matrix::identity(2, Field::GaussRat);
    let h = hermitian_from_symmetric(&j, &sigma, &line)?;
    println!("so*(2) symmetric lemma: hermitian form with signature {:?}", h.signature);
    Ok(())
}
