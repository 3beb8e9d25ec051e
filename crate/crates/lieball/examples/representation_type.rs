//! The real / complex / quaternionic trichotomy by commutant dimension,
//! cross-checked over the Gaussian extension, plus the self-conjugacy
//! analysis of complex representations.

use lieball::builtins::{so_pq, su_pq_realified, u_pq_realified};
use lieball::matrix::Matrix;
use lieball::repcheck::typeclass::{classify_type, conjugation_analysis, ConjugationOutcome};
use lieball::repcheck::Representation;
use lieball::scalar::{Field, Scalar};

fn main() -> lieball::Result<()> {
    for alg in [so_pq(2, 3)?, u_pq_realified(1, 2)?, su_pq_realified(0, 2)?] {
        let rep = Representation::from_algebra(&alg);
        let verdict = classify_type(&rep, 0, 64)?;
        println!(
            "{}: {} (commutant dimension {})",
            rep.name().unwrap_or("unnamed"),
            verdict.kind,
            verdict.commutant_dim
        );
    }

    // conjugations of complex modules
    let so3_complexified = Representation::from_algebra(&so_pq(0, 3)?).complexify()?;
    let su2 = Representation::new(
        Some("su(2) on C^2".into()),
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
    let weight_one = Representation::new(
        Some("u(1) weight 1".into()),
        1,
        vec![Matrix::new(1, 1, vec![Scalar::i()], Field::GaussRat)?],
    )?;
    for rep in [so3_complexified, su2, weight_one] {
        let outcome = conjugation_analysis(&rep, 0, 64)?;
        let label = match outcome {
            ConjugationOutcome::NotSelfConjugate => "not self-conjugate (complex type)".into(),
            ConjugationOutcome::RealConj { .. } => "self-conjugate with C^2 = +Id (real type)".into(),
            ConjugationOutcome::QuaternionicConj { .. } => {
                "self-conjugate with C^2 = -Id (quaternionic type)".to_string()
            }
        };
        println!("{}: {label}", rep.name().unwrap_or("unnamed"));
    }
    Ok(())
}
