//! Fixed verification batteries over the constructions in this crate, used
//! by both the command-line `verify` subcommand and the acceptance suite.
//! Each item evaluates one exact claim and reports pass/fail; nothing is
//! sampled with floating point and no tolerance is anywhere nonzero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builtins::*;
use crate::domainiv::{cartan_iv_map, domain_inequality_value, in_domain_iv, DomainPoint};
use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, SignatureForm};
use crate::matrix::Matrix;
use crate::repcheck::meataxe::{decide_irreducibility, verify_verdict, IrreducibilityVerdict};
use crate::repcheck::typeclass::{classify_type, TypeKind};
use crate::repcheck::Representation;
use crate::scalar::{rat, Field, Rational, Scalar};
use crate::symspace::embed::{embed, EmbedInput, EmbeddingSpec};
use crate::symspace::lieball::{base_point, NegativePlane};
use crate::symspace::stab::{fixer_algebra, local_transitivity, parabolic_algebra};
use crate::symspace::{
    appendix_lie_triple, cartan, crafted_non_triple, is_lie_triple, CartanVariant,
};

/// One verified claim.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, pass: bool, details: impl Into<String>) -> Self {
        CheckResult { name: name.into(), pass, details: details.into() }
    }
}

pub fn all_pass(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.pass)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Battery {
    Theorem1,
    AppendixA,
    AppendixB,
    Embeddings,
    LemmaForms,
}

impl Battery {
    pub fn parse(name: &str) -> Option<Battery> {
        match name.to_ascii_uppercase().as_str() {
            "THEOREM1" => Some(Battery::Theorem1),
            "APPENDIX_A" => Some(Battery::AppendixA),
            "APPENDIX_B" => Some(Battery::AppendixB),
            "EMBEDDINGS" => Some(Battery::Embeddings),
            "LEMMA_FORMS" => Some(Battery::LemmaForms),
            _ => None,
        }
    }

    pub fn run(&self, n_values: &[usize], seed: u64, budget: usize) -> Result<Vec<CheckResult>> {
        match self {
            Battery::Theorem1 => theorem1_battery(n_values, seed, budget),
            Battery::AppendixA => appendix_a_battery(),
            Battery::AppendixB => appendix_b_battery(seed),
            Battery::Embeddings => embeddings_battery(n_values, seed),
            Battery::LemmaForms => lemma_forms_battery(),
        }
    }
}

fn expect_irreducible(
    out: &mut Vec<CheckResult>,
    name: String,
    alg: LieAlgebra,
    seed: u64,
    budget: usize,
) {
    let rep = Representation::from_algebra(&alg);
    match decide_irreducibility(&rep, seed, budget) {
        Ok(verdict) => {
            let ok = verdict.is_irreducible() && verify_verdict(&rep, &verdict);
            let details = if verdict.is_irreducible() {
                format!("certificate re-verified: {}", verify_verdict(&rep, &verdict))
            } else {
                "verdict REDUCIBLE".to_string()
            };
            out.push(CheckResult::new(name, ok, details));
        }
        Err(e) => out.push(CheckResult::new(name, false, format!("error: {e}"))),
    }
}

fn expect_reducible(
    out: &mut Vec<CheckResult>,
    name: String,
    alg: LieAlgebra,
    seed: u64,
    budget: usize,
) {
    let rep = Representation::from_algebra(&alg);
    match decide_irreducibility(&rep, seed, budget) {
        Ok(verdict) => {
            let is_red = matches!(verdict, IrreducibilityVerdict::Reducible(_));
            let ok = is_red && verify_verdict(&rep, &verdict);
            let details = if let IrreducibilityVerdict::Reducible(w) = &verdict {
                format!(
                    "invariant subspace of dimension {} re-verified: {}",
                    w.subspace.dim(),
                    verify_verdict(&rep, &verdict)
                )
            } else {
                "verdict IRREDUCIBLE".to_string()
            };
            out.push(CheckResult::new(name, ok, details));
        }
        Err(e) => out.push(CheckResult::new(name, false, format!("error: {e}"))),
    }
}

/// Membership battery: everything the classification lists acts
/// irreducibly, with re-verifiable certificates.
pub fn theorem1_battery(n_values: &[usize], seed: u64, budget: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for &n in n_values {
        expect_irreducible(&mut out, format!("so(2,{n}) irreducible"), so_pq(2, n)?, seed, budget);
        if n % 2 == 0 {
            let p = n / 2;
            expect_irreducible(
                &mut out,
                format!("u(1,{p}) realified irreducible on R^(2,{n})"),
                u_pq_realified(1, p)?,
                seed,
                budget,
            );
            expect_irreducible(
                &mut out,
                format!("su(1,{p}) realified irreducible on R^(2,{n})"),
                su_pq_realified(1, p)?,
                seed,
                budget,
            );
            if p > 1 {
                expect_irreducible(
                    &mut out,
                    format!("s1*so(1,{p}) realified irreducible on R^(2,{n})"),
                    circle_so_realified(1, p)?,
                    seed,
                    budget,
                );
            }
        }
        if n == 3 {
            expect_irreducible(
                &mut out,
                "appendix so(1,2) irreducible on R^(2,3)".into(),
                appendix_so12()?,
                seed,
                budget,
            );
        }
    }
    Ok(out)
}

/// Non-membership battery: the reducible embeddings produce exactly
/// invariant witness subspaces.
pub fn non_membership_battery(
    n_values: &[usize],
    seed: u64,
    budget: usize,
) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for &n in n_values {
        if n % 2 == 0 {
            let p = n / 2;
            for k in 1..=p {
                expect_reducible(
                    &mut out,
                    format!("so(1,{k}) inside realified su(1,{p}) reducible"),
                    so1k_in_su1p_realified(k, p)?,
                    seed,
                    budget,
                );
            }
        }
        for k1 in 1..n.min(3) {
            let k2 = n - k1;
            if k2 >= 1 && k1 <= k2 {
                expect_reducible(
                    &mut out,
                    format!("so(1,{k1})+so(1,{k2}) block reducible in so(2,{n})"),
                    so1k1_so1k2_block(k1, k2, n)?,
                    seed,
                    budget,
                );
            }
        }
        if n >= 2 {
            expect_reducible(
                &mut out,
                format!("so(2,1) block reducible in so(2,{n})"),
                so21_block(n)?,
                seed,
                budget,
            );
        }
        if n == 4 {
            expect_reducible(
                &mut out,
                "appendix so(1,2) padded into so(2,4) reducible".into(),
                appendix_so12_padded(4)?,
                seed,
                budget,
            );
        }
    }
    Ok(out)
}

/// Appendix identities: the commutator relations, closure dimensions,
/// orthogonality, and the parabolic transitivity facts.
pub fn appendix_a_battery() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let (u, v, w) = (appendix_u(), appendix_v(), appendix_w());
    let (us, vs) = (appendix_u_star(), appendix_v_star());
    let rel = |name: &str, lhs: Matrix, rhs: Matrix, out: &mut Vec<CheckResult>| {
        let residual = lhs.sub(&rhs).expect("same shape");
        out.push(CheckResult::new(
            name.to_string(),
            residual.is_zero(),
            "zero residual".to_string(),
        ));
    };
    rel("[V,W] = U", v.bracket(&w)?, u.clone(), &mut out);
    rel("[W,U] = V", w.bracket(&u)?, v.clone(), &mut out);
    rel("W = [U,V]", u.bracket(&v)?, w.clone(), &mut out);
    rel("[U*,V*] = -W", us.bracket(&vs)?, w.neg(), &mut out);
    rel("[V*,W] = U*", vs.bracket(&w)?, us.clone(), &mut out);
    rel("[W,U*] = V*", w.bracket(&us)?, vs.clone(), &mut out);
    let closure_uv = LieAlgebra::bracket_closure(None, vec![u, v], 10)?;
    out.push(CheckResult::new(
        "closure{U,V} has dimension 3",
        closure_uv.dim() == 3,
        format!("dim = {}", closure_uv.dim()),
    ));
    let closure_star = LieAlgebra::bracket_closure(None, vec![us, vs], 10)?;
    out.push(CheckResult::new(
        "closure{U*,V*} has dimension 3",
        closure_star.dim() == 3,
        format!("dim = {}", closure_star.dim()),
    ));
    out.push(CheckResult::new(
        "closure{U,V} orthogonal for eta(0,5)",
        closure_uv.check_orthogonality(&SignatureForm::new(0, 5))?,
        "A^t eta + eta A = 0",
    ));
    out.push(CheckResult::new(
        "closure{U*,V*} orthogonal for eta(2,3)",
        closure_star.check_orthogonality(&SignatureForm::new(2, 3))?,
        "A^t eta + eta A = 0",
    ));
    // transitivity facts
    let mut vlight = vec![Scalar::zero(); 5];
    vlight[0] = Scalar::one();
    vlight[2] = Scalar::one();
    let p = parabolic_algebra(1, 2, &vlight)?;
    out.push(CheckResult::new(
        "parabolic of so(2,3) at e0+e2 is 7-dimensional",
        p.dim() == 7,
        format!("dim = {}", p.dim()),
    ));
    let us = appendix_u_star();
    let img = us.mul_vec(&vlight)?;
    let line = crate::matrix::Subspace::span(5, vec![vlight.clone()], Field::Quad(3));
    out.push(CheckResult::new(
        "U* stabilizes the light-like line span{e0+e2}",
        line.contains(&img),
        "U*(e0+e2) proportional to e0+e2",
    ));
    let so23 = so_pq(2, 3)?;
    let g = appendix_so12()?;
    out.push(CheckResult::new(
        "so(1,2) + parabolic does not span so(2,3)",
        !local_transitivity(&g, &p, &so23)?,
        "local transitivity fails",
    ));
    out.push(CheckResult::new(
        "so(2,3) + parabolic spans so(2,3)",
        local_transitivity(&so23, &p, &so23)?,
        "local transitivity holds",
    ));
    Ok(out)
}

/// Random Gaussian-rational coordinates with small numerators.
fn random_gauss(rng: &mut ChaCha8Rng, denom: i64) -> Scalar {
    let re = rat(rng.gen_range(-2..=2), denom);
    let im = rat(rng.gen_range(-2..=2), denom);
    Scalar::complex(Scalar::Rat(re), Scalar::Rat(im)).expect("real parts")
}

fn random_rat(rng: &mut ChaCha8Rng, denom: i64) -> Rational {
    rat(rng.gen_range(-2..=2), denom)
}

/// Appendix B battery: the quadric residual vanishes identically, the
/// boundary case evaluates to exactly zero, and membership in the Lie ball
/// agrees with the domain inequality pointwise.
pub fn appendix_b_battery(seed: u64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let origin = DomainPoint::origin(3);
    let f0 = cartan_iv_map(&origin)?;
    out.push(CheckResult::new(
        "f(0) equals the base point projectively",
        f0.projectively_equal(&base_point(3)),
        "[-i : 1 : 0 : 0 : 0] = [1 : i : 0 : 0 : 0]",
    ));
    let mut inside = 0usize;
    let mut residuals_zero = true;
    let mut agreement = true;
    let mut chained = true;
    let mut samples = 0usize;
    while samples < 100 {
        let n = 1 + (samples % 3);
        let z = DomainPoint::new((0..n).map(|_| random_gauss(&mut rng, 4)).collect())?;
        samples += 1;
        let img = cartan_iv_map(&z)?;
        residuals_zero &= img.quadric_residual()?.is_zero();
        let in_dom = in_domain_iv(&z)?;
        let in_ball = img.in_lieball();
        agreement &= in_ball == domain_inequality_value(&z)?.is_negative();
        if in_dom {
            inside += 1;
            chained &= crate::domainiv::chained_inequality_holds(&z)?;
            if !in_ball {
                agreement = false;
            }
        }
    }
    out.push(CheckResult::new(
        "quadric residual exactly zero at 100 seeded points",
        residuals_zero,
        format!("{inside} of 100 samples lie in the domain"),
    ));
    out.push(CheckResult::new(
        "Lie ball membership of the image agrees with the domain inequality",
        agreement && inside > 10,
        "pointwise agreement at every sample",
    ));
    out.push(CheckResult::new(
        "chained inequality holds at every accepted point",
        chained,
        "2 sum |z|^2 - 1 < (sum |z|^2)^2",
    ));
    // boundary case z = (1, 0, ..., 0)
    let boundary = DomainPoint::new(vec![
        Scalar::one().promote(Field::GaussRat)?,
        Scalar::zero().promote(Field::GaussRat)?,
        Scalar::zero().promote(Field::GaussRat)?,
    ])?;
    let value = domain_inequality_value(&boundary)?;
    out.push(CheckResult::new(
        "boundary point z = (1,0,0) evaluates to exactly zero and is rejected",
        value.is_zero() && !in_domain_iv(&boundary)?,
        format!("inequality value = {value}"),
    ));
    // points inside the unit ball but outside the domain map outside the ball
    let mut checked = 0usize;
    let mut outside_ok = true;
    let mut attempts = 0usize;
    while checked < 100 && attempts < 4000 {
        attempts += 1;
        let a = rat(rng.gen_range(50..=70), 100);
        let b = rat(rng.gen_range(-10..=10), 100);
        let z = DomainPoint::new(vec![
            Scalar::complex(Scalar::Rat(a.clone()), Scalar::Rat(b.clone()))?,
            Scalar::complex(Scalar::Rat(-b), Scalar::Rat(a))?,
        ])?;
        let in_unit_ball = z.norm_sum()?.sub(&Scalar::one())?.is_negative();
        let second_fails = !domain_inequality_value(&z)?.is_negative();
        if in_unit_ball && second_fails {
            checked += 1;
            outside_ok &= !cartan_iv_map(&z)?.in_lieball();
        }
    }
    out.push(CheckResult::new(
        "unit-ball points failing the second inequality map outside the Lie ball",
        outside_ok && checked == 100,
        format!("{checked} samples"),
    ));
    Ok(out)
}

/// A random point of the real hyperbolic space of dimension k with
/// hyperbolic norm -s^2 for a rational s, by the split-difference
/// parametrization (x0 - s)(x0 + s) = sum x_i^2.
fn random_hyperbolic(rng: &mut ChaCha8Rng, k: usize) -> (Vec<Scalar>, Rational) {
    use num::Zero;
    loop {
        let tail: Vec<Rational> = (0..k).map(|_| random_rat(rng, 3)).collect();
        let mut sum_sq = Rational::zero();
        for x in &tail {
            sum_sq += x * x;
        }
        // (x0 - s)(x0 + s) = sum x_i^2 with x0 - s = t free
        let t = rat(rng.gen_range(1..=4), 1);
        let x0 = (&t + &sum_sq / &t) / rat(2, 1);
        let s = (&sum_sq / &t - &t) / rat(-2, 1);
        if !s.is_zero() {
            debug_assert_eq!(&s * &s, &x0 * &x0 - &sum_sq);
            let mut v = vec![Scalar::Rat(x0)];
            v.extend(tail.into_iter().map(Scalar::Rat));
            return (v, s);
        }
    }
}

/// Embedding battery: for each type and ambient n, seeded random in-domain
/// points map onto the quadric and into the Lie ball with zero residual,
/// and out-of-domain points are rejected.
pub fn embeddings_battery(n_values: &[usize], seed: u64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &n in n_values {
        let mut specs: Vec<EmbeddingSpec> = Vec::new();
        if n >= 2 {
            specs.push(EmbeddingSpec::I1 { k: n / 2, n });
            specs.push(EmbeddingSpec::I2 { k: n / 2, n });
            specs.push(EmbeddingSpec::G1 { k: n - 1, n });
            specs.push(EmbeddingSpec::P1 { k: n, n });
            specs.push(EmbeddingSpec::P2 { n });
        }
        if n >= 2 {
            specs.push(EmbeddingSpec::G2 { k1: 1, k2: n - 1, n });
        }
        for spec in specs {
            let mut pass = true;
            let mut rejected = true;
            for _ in 0..100 {
                let input = random_in_domain(&mut rng, &spec)?;
                match embed(&spec, &input) {
                    Ok(pt) => {
                        pass &= pt.quadric_residual()?.is_zero();
                        pass &= pt.in_lieball();
                    }
                    Err(_) => pass = false,
                }
                if let Some(bad) = random_out_of_domain(&mut rng, &spec)? {
                    rejected &= matches!(embed(&spec, &bad), Err(Error::DomainViolation(_)));
                }
            }
            out.push(CheckResult::new(
                format!("{spec:?}: 100 in-domain points on the quadric and in the ball"),
                pass,
                "zero residual, exact membership",
            ));
            out.push(CheckResult::new(
                format!("{spec:?}: out-of-domain points rejected"),
                rejected,
                "DomainViolation raised",
            ));
        }
    }
    // the two base-point reproductions
    let img = embed(
        &EmbeddingSpec::I1 { k: 1, n: 2 },
        &EmbedInput::Single(vec![Scalar::one(), Scalar::zero()]),
    )?;
    out.push(CheckResult::new(
        "I1 at z = (1,0) reproduces the base point",
        img.projectively_equal(&base_point(2)),
        "exact equality",
    ));
    let img = embed(
        &EmbeddingSpec::G2 { k1: 1, k2: 1, n: 3 },
        &EmbedInput::Pair(
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::one(), Scalar::zero()],
        ),
    )?;
    out.push(CheckResult::new(
        "G2 at ([1:0],[1:0]) reproduces the base point",
        img.projectively_equal(&base_point(3)),
        "exact equality",
    ));
    Ok(out)
}

fn random_in_domain(rng: &mut ChaCha8Rng, spec: &EmbeddingSpec) -> Result<EmbedInput> {
    match *spec {
        EmbeddingSpec::I1 { k, .. } => loop {
            let mut z = vec![Scalar::complex(
                Scalar::Rat(rat(rng.gen_range(3..=5), 1)),
                Scalar::Rat(random_rat(rng, 2)),
            )?];
            for _ in 0..k {
                z.push(random_gauss(rng, 2));
            }
            let q: Scalar = {
                let mut acc = z[0].norm_sqr().neg();
                for c in &z[1..] {
                    acc = acc.add(&c.norm_sqr())?;
                }
                acc
            };
            if q.is_negative() {
                return Ok(EmbedInput::Single(z));
            }
        },
        EmbeddingSpec::I2 { k, .. } => {
            let (v, _) = random_hyperbolic(rng, k);
            Ok(EmbedInput::Single(v))
        }
        EmbeddingSpec::G1 { .. } | EmbeddingSpec::P2 { .. } => {
            let k = if let EmbeddingSpec::G1 { k, .. } = *spec { k } else { 1 };
            // rational points of the lower Lie ball via the type IV map
            loop {
                let z = DomainPoint::new((0..k).map(|_| random_gauss(rng, 4)).collect())?;
                if in_domain_iv(&z)? {
                    return Ok(EmbedInput::Single(cartan_iv_map(&z)?.coords().to_vec()));
                }
            }
        }
        EmbeddingSpec::G2 { k1, k2, .. } => {
            let (x, sx) = random_hyperbolic(rng, k1);
            let (y, sy) = random_hyperbolic(rng, k2);
            // rescale the second factor to match hyperbolic norms
            let factor = Scalar::Rat(&sx / &sy);
            let y = crate::matrix::vec_scale(&y, &factor)?;
            Ok(EmbedInput::Pair(x, y))
        }
        EmbeddingSpec::P1 { k, .. } => {
            let (x, s) = random_hyperbolic(rng, k);
            let inv = Scalar::Rat(s).inv()?;
            Ok(EmbedInput::Single(crate::matrix::vec_scale(&x, &inv)?))
        }
    }
}

fn random_out_of_domain(
    rng: &mut ChaCha8Rng,
    spec: &EmbeddingSpec,
) -> Result<Option<EmbedInput>> {
    Ok(match *spec {
        EmbeddingSpec::I1 { k, .. } => {
            // space part dominates: outside complex hyperbolic space
            let mut z = vec![Scalar::complex(
                Scalar::Rat(random_rat(rng, 3)),
                Scalar::Rat(random_rat(rng, 3)),
            )?];
            z.push(Scalar::complex(
                Scalar::Rat(rat(rng.gen_range(3..=5), 1)),
                Scalar::zero(),
            )?);
            for _ in 1..k {
                z.push(random_gauss(rng, 2));
            }
            Some(EmbedInput::Single(z))
        }
        EmbeddingSpec::I2 { k, .. } => {
            let mut v = vec![Scalar::Rat(random_rat(rng, 3))];
            v.push(Scalar::from_int(rng.gen_range(3..=5)));
            for _ in 1..k {
                v.push(Scalar::Rat(random_rat(rng, 2)));
            }
            Some(EmbedInput::Single(v))
        }
        EmbeddingSpec::G1 { k, .. } => {
            // [1 : 0 : ... : 1] is on the lower quadric but on the boundary
            // of the ball, so it is rejected
            let mut z = vec![Scalar::zero(); k + 2];
            z[0] = Scalar::one();
            z[k + 1] = Scalar::one();
            let _ = rng;
            Some(EmbedInput::Single(z))
        }
        EmbeddingSpec::P2 { .. } => {
            let z = vec![Scalar::one(), Scalar::zero(), Scalar::one()];
            Some(EmbedInput::Single(z))
        }
        EmbeddingSpec::G2 { k1, k2, .. } => {
            // mismatched norms
            let (x, sx) = random_hyperbolic(rng, k1);
            let (y, sy) = random_hyperbolic(rng, k2);
            let scale = if &sx * &sx == rat(9, 1) * &sy * &sy {
                Scalar::from_int(5)
            } else {
                Scalar::from_int(3)
            };
            let y = crate::matrix::vec_scale(&y, &scale)?;
            Some(EmbedInput::Pair(x, y))
        }
        EmbeddingSpec::P1 { k, .. } => {
            // not normalized to the unit hyperboloid
            let (x, s) = random_hyperbolic(rng, k);
            let scale = if &s * &s == rat(1, 4) {
                Scalar::from_int(3)
            } else {
                Scalar::from_int(2)
            };
            Some(EmbedInput::Single(crate::matrix::vec_scale(&x, &scale)?))
        }
    })
}

/// Type classification and the hermitian-form lemma constructions.
pub fn lemma_forms_battery() -> Result<Vec<CheckResult>> {
    use crate::repcheck::forms::{
        hermitian_from_symmetric, hermitian_from_symplectic, sigma_orthonormal_basis,
        AntilinearMap,
    };
    let mut out = Vec::new();
    // trichotomy
    for (name, alg, expected) in [
        ("so(2,3) standard", so_pq(2, 3)?, TypeKind::Real),
        ("so(0,3) standard", so_pq(0, 3)?, TypeKind::Real),
        ("u(1,1) realified", u_pq_realified(1, 1)?, TypeKind::Complex),
        ("u(1,2) realified", u_pq_realified(1, 2)?, TypeKind::Complex),
        ("su(2) realified", su_pq_realified(0, 2)?, TypeKind::Quaternionic),
    ] {
        let rep = Representation::from_algebra(&alg);
        match classify_type(&rep, 0, 64) {
            Ok(v) => out.push(CheckResult::new(
                format!("{name} has type {expected}"),
                v.kind == expected,
                format!("commutant dimension {}", v.commutant_dim),
            )),
            Err(e) => out.push(CheckResult::new(
                format!("{name} has type {expected}"),
                false,
                format!("error: {e}"),
            )),
        }
    }
    // symplectic lemma instance: su(2) on C^2
    let su2 = {
        let mats = vec![
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
        ];
        Representation::new(Some("su(2)_C2".into()), 2, mats)?
    };
    let j = AntilinearMap::new(Matrix::from_i64(&[&[0, -1], &[1, 0]]).promote(Field::GaussRat)?);
    let omega = Matrix::from_i64(&[&[0, 1], &[-1, 0]]).promote(Field::GaussRat)?;
    match hermitian_from_symplectic(&j, &omega, &su2) {
        Ok(h) => {
            let definite = h.signature == (0, 2, 0) || h.signature == (2, 0, 0);
            out.push(CheckResult::new(
                "symplectic lemma on su(2)/C^2 yields a definite hermitian form",
                definite,
                format!("signature {:?}", h.signature),
            ));
        }
        Err(e) => out.push(CheckResult::new(
            "symplectic lemma on su(2)/C^2 yields a definite hermitian form",
            false,
            format!("error: {e}"),
        )),
    }
    // symmetric lemma, m = 1 and m = 2
    for (name, rep, j, sigma, m) in [
        (
            "symmetric lemma at m = 1",
            Representation::new(
                Some("so*(2)".into()),
                2,
                vec![Matrix::from_i64(&[&[0, 1], &[-1, 0]]).promote(Field::GaussRat)?],
            )?,
            AntilinearMap::new(Matrix::from_i64(&[&[0, -1], &[1, 0]]).promote(Field::GaussRat)?),
            Matrix::identity(2, Field::GaussRat),
            1usize,
        ),
        ("symmetric lemma at m = 2", {
            let id2 = Matrix::identity(2, Field::GaussRat);
            let mats = su2
                .matrices()
                .iter()
                .map(|a| a.kron(&id2))
                .collect::<Result<Vec<_>>>()?;
            Representation::new(Some("su(2)x1".into()), 4, mats)?
        }, {
            let m = Matrix::from_i64(&[&[0, -1], &[1, 0]]).promote(Field::GaussRat)?;
            AntilinearMap::new(m.kron(&Matrix::identity(2, Field::GaussRat))?)
        }, {
            let w = Matrix::from_i64(&[&[0, 1], &[-1, 0]]).promote(Field::GaussRat)?;
            w.kron(&w)?.scale(&Scalar::from_rat(1, 2))?
        }, 2usize),
    ] {
        match hermitian_from_symmetric(&j, &sigma, &rep) {
            Ok(h) => {
                let neutral = h.signature == (m, m, 0);
                let mut lightlike = true;
                match sigma_orthonormal_basis(&sigma) {
                    Ok(basis) => {
                        for b in &basis {
                            let conj_b: Vec<Scalar> = b.iter().map(|x| x.conj()).collect();
                            let hb = h.matrix.mul_vec(&conj_b)?;
                            lightlike &= crate::matrix::dot(b, &hb)?.is_zero();
                        }
                    }
                    Err(_) => lightlike = false,
                }
                out.push(CheckResult::new(
                    format!("{name}: neutral signature ({m},{m})"),
                    neutral,
                    format!("signature {:?}", h.signature),
                ));
                out.push(CheckResult::new(
                    format!("{name}: sigma-orthonormal basis is light-like"),
                    lightlike,
                    "diagonal values vanish exactly",
                ));
            }
            Err(e) => out.push(CheckResult::new(name.to_string(), false, format!("error: {e}"))),
        }
    }
    Ok(out)
}

/// Lie-triple and fixer batteries used by the acceptance suite.
pub fn lie_triple_battery() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let noncompact = cartan(3, CartanVariant::Noncompact)?;
    out.push(CheckResult::new(
        "span{U*,V*} is a Lie triple in m* of so(2,3)",
        is_lie_triple(&appendix_lie_triple(CartanVariant::Noncompact), &noncompact)?,
        "[[m',m'],m'] inside m'",
    ));
    out.push(CheckResult::new(
        "the crafted 2-plane fails the Lie-triple test",
        !is_lie_triple(&crafted_non_triple()?, &noncompact)?,
        "double bracket escapes the span",
    ));
    let mut singles = true;
    for x in &noncompact.m_basis {
        singles &= is_lie_triple(std::slice::from_ref(x), &noncompact)?;
    }
    // a few random lines too
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let u: Vec<Scalar> = (0..3).map(|_| Scalar::Rat(random_rat(&mut rng, 2))).collect();
        let v: Vec<Scalar> = (0..3).map(|_| Scalar::Rat(random_rat(&mut rng, 2))).collect();
        let x = crate::symspace::m_element(&u, &v, CartanVariant::Noncompact)?;
        if !x.is_zero() {
            singles &= is_lie_triple(std::slice::from_ref(&x), &noncompact)?;
        }
    }
    out.push(CheckResult::new(
        "every 1-dimensional subspace of m* is a Lie triple",
        singles,
        "[[X,X],X] = 0",
    ));
    Ok(out)
}

pub fn fixer_battery() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for k in [1usize, 2, 3] {
        let g = u_pq_realified(1, k)?;
        let fixer = fixer_algebra(&g, &NegativePlane::base(2 * k))?;
        out.push(CheckResult::new(
            format!("fixer of the base plane in realified u(1,{k}) has dimension 1"),
            fixer.dim() == 1,
            format!("dim = {}", fixer.dim()),
        ));
    }
    let g = appendix_so12()?;
    let fixer = fixer_algebra(&g, &NegativePlane::base(3))?;
    out.push(CheckResult::new(
        "fixer of the base plane in the appendix so(1,2) is trivial",
        fixer.dim() == 0,
        format!("dim = {}", fixer.dim()),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn appendix_a_battery_all_pass() {
        let results = appendix_a_battery().unwrap();
        assert!(results.iter().all(|r| r.pass), "{results:#?}");
        assert_eq!(results.len(), 14);
    }

    #[test]
    fn appendix_b_battery_all_pass() {
        let results = appendix_b_battery(0).unwrap();
        assert!(results.iter().all(|r| r.pass), "{results:#?}");
    }

    #[test]
    fn embeddings_battery_all_pass() {
        let results = embeddings_battery(&[2, 3], 0).unwrap();
        assert!(results.iter().all(|r| r.pass), "{results:#?}");
    }

    #[test]
    fn lemma_and_fixer_batteries_pass() {
        assert!(all_pass(&lemma_forms_battery().unwrap()));
        assert!(all_pass(&lie_triple_battery().unwrap()));
        assert!(all_pass(&fixer_battery().unwrap()));
    }

    #[test]
    fn theorem1_battery_n3() {
        let results = theorem1_battery(&[3], 0, 64).unwrap();
        assert!(all_pass(&results), "{results:#?}");
        let non = non_membership_battery(&[3, 4], 0, 64).unwrap();
        assert!(all_pass(&non), "{non:#?}");
    }
}
