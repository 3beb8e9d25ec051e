//! Certified irreducibility decisions: irreducible actions come with a
//! Norton certificate (or its complex-split extension), reducible ones with
//! an exactly invariant subspace, and both re-verify from stored data.

use lieball::builtins::{appendix_so12, so21_block, so_pq, su_pq_realified, u_pq_realified};
use lieball::repcheck::meataxe::{
    decide_irreducibility, verify_verdict, IrreducibilityCertificate, IrreducibilityVerdict,
};
use lieball::repcheck::Representation;

fn main() -> lieball::Result<()> {
    let cases = vec![
        Representation::from_algebra(&so_pq(2, 3)?),
        Representation::from_algebra(&appendix_so12()?),
        Representation::from_algebra(&u_pq_realified(1, 2)?),
        Representation::from_algebra(&su_pq_realified(1, 1)?),
        Representation::from_algebra(&so21_block(3)?),
    ];
    for rep in cases {
        let name = rep.name().unwrap_or("unnamed").to_string();
        let verdict = decide_irreducibility(&rep, 0, 64)?;
        let verified = verify_verdict(&rep, &verdict);
        match &verdict {
            IrreducibilityVerdict::Irreducible(cert) => {
                let kind = match cert {
                    IrreducibilityCertificate::Norton(c) => {
                        format!("Norton element with {} terms", c.element.len())
                    }
                    IrreducibilityCertificate::ComplexSplit(cs) => {
                        use lieball::repcheck::typeclass::ConjugationOutcome;
                        let conj = match cs.conjugation {
                            ConjugationOutcome::NotSelfConjugate => "not self-conjugate",
                            ConjugationOutcome::QuaternionicConj { .. } => "quaternionic",
                            ConjugationOutcome::RealConj { .. } => "real",
                        };
                        format!(
                            "complex split, inner Norton with {} terms, {conj}",
                            cs.inner.element.len()
                        )
                    }
                };
                println!("{name}: IRREDUCIBLE ({kind}), re-verified: {verified}");
            }
            IrreducibilityVerdict::Reducible(w) => {
                println!(
                    "{name}: REDUCIBLE, invariant subspace of dimension {} in R^{}, re-verified: {verified}",
                    w.subspace.dim(),
                    rep.ambient_dim()
                );
            }
        }
        assert!(verified);
    }
    Ok(())
}
