use super::forms::*;
use super::meataxe::*;
use super::typeclass::*;
use super::*;
use crate::builtins::*;
use crate::liealg::standard_j;
use crate::scalar::Field;

fn rep_of(alg: crate::liealg::LieAlgebra) -> Representation {
    Representation::from_algebra(&alg)
}

fn su2_complex() -> Representation {
    // su(2) on C^2: i*sz, e01 - e10, i*sx
    let mats = vec![
        Matrix::from_rows(
            vec![
                vec![Scalar::i(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::i().neg()],
            ],
            Field::GaussRat,
        )
        .unwrap(),
        Matrix::from_rows(
            vec![
                vec![Scalar::zero(), Scalar::one()],
                vec![Scalar::from_int(-1), Scalar::zero()],
            ],
            Field::GaussRat,
        )
        .unwrap(),
        Matrix::from_rows(
            vec![
                vec![Scalar::zero(), Scalar::i()],
                vec![Scalar::i(), Scalar::zero()],
            ],
            Field::GaussRat,
        )
        .unwrap(),
    ];
    Representation::new(Some("su(2)_C2".into()), 2, mats).unwrap()
}

fn su2_realified() -> Representation {
    let mats = crate::liealg::realify_all(su2_complex().matrices()).unwrap();
    Representation::new(Some("su(2)_real".into()), 4, mats).unwrap()
}

#[test]
fn commutant_dimensions() {
    // standard so(3) on R^3: scalars only
    assert_eq!(commutant(&rep_of(so_pq(0, 3).unwrap())).unwrap().dim(), 1);
    // realified u(1,1) on R^4: Id and J
    let u11 = rep_of(u_pq_realified(1, 1).unwrap());
    let c = commutant(&u11).unwrap();
    assert_eq!(c.dim(), 2);
    assert!(c.contains(&standard_j(2, Field::Rat).flatten()));
    // realified su(2) on R^4: the quaternions
    assert_eq!(commutant(&su2_realified()).unwrap().dim(), 4);
}

#[test]
fn meataxe_appendix_so12_irreducible() {
    let rep = rep_of(appendix_so12().unwrap());
    let verdict = decide_irreducibility(&rep, 0, 64).unwrap();
    assert!(verdict.is_irreducible());
    assert!(verify_verdict(&rep, &verdict));
}

#[test]
fn meataxe_so21_block_reducible() {
    let rep = rep_of(so21_block(4).unwrap());
    let verdict = decide_irreducibility(&rep, 0, 64).unwrap();
    let IrreducibilityVerdict::Reducible(w) = &verdict else {
        panic!("expected reducible");
    };
    assert!(verify_verdict(&rep, &verdict));
    // the invariant subspace avoids the acting block
    assert!(w.subspace.dim() < 6);
}

#[test]
fn meataxe_circle_so_irreducible() {
    // S^1 * SO_0(1,2) realified on R^6
    let rep = rep_of(circle_so_realified(1, 2).unwrap());
    let verdict = decide_irreducibility(&rep, 0, 64).unwrap();
    assert!(verdict.is_irreducible());
    assert!(verify_verdict(&rep, &verdict));
}

#[test]
fn meataxe_standard_so_families() {
    for (p, q) in [(2, 2), (2, 3), (2, 4)] {
        let rep = rep_of(so_pq(p, q).unwrap());
        let verdict = decide_irreducibility(&rep, 0, 64).unwrap();
        assert!(verdict.is_irreducible(), "so({p},{q}) standard");
        assert!(verify_verdict(&rep, &verdict));
    }
}

#[test]
fn meataxe_unitary_families() {
    for (name, rep, expect_irr) in [
        ("u(1,1)", rep_of(u_pq_realified(1, 1).unwrap()), true),
        ("u(1,2)", rep_of(u_pq_realified(1, 2).unwrap()), true),
        ("su(1,2)", rep_of(su_pq_realified(1, 2).unwrap()), true),
        // su(1,1) ~ sl(2,R) has an invariant real form: reducible
        ("su(1,1)", rep_of(su_pq_realified(1, 1).unwrap()), false),
    ] {
        let verdict = decide_irreducibility(&rep, 0, 64).unwrap();
        assert_eq!(verdict.is_irreducible(), expect_irr, "{name}");
        assert!(verify_verdict(&rep, &verdict), "{name} verification");
    }
}

#[test]
fn tampered_witness_fails_verification() {
    let rep = rep_of(so1k_in_su1p_realified(1, 1).unwrap());
    let verdict = decide_irreducibility(&rep, 0, 64).unwrap();
    let IrreducibilityVerdict::Reducible(w) = &verdict else {
        panic!("expected reducible");
    };
    assert!(verify_verdict(&rep, &verdict));
    // push one witness vector out of the subspace
    let n = rep.ambient_dim();
    let id = Matrix::identity(n, rep.field());
    let outside = (0..n)
        .map(|k| id.row(k).to_vec())
        .find(|e| !w.subspace.contains(e))
        .expect("witness is proper");
    let mut basis = w.subspace.basis().to_vec();
    basis[0] = crate::matrix::vec_add(&basis[0], &outside).unwrap();
    let tampered = IrreducibilityVerdict::Reducible(ReducibleWitness {
        subspace: Subspace::span(n, basis, rep.field()),
    });
    assert!(!verify_verdict(&rep, &tampered));
}

#[test]
fn classify_type_trichotomy() {
    let so3 = rep_of(so_pq(0, 3).unwrap());
    let v = classify_type(&so3, 0, 64).unwrap();
    assert_eq!(v.kind, TypeKind::Real);
    assert_eq!(v.commutant_dim, 1);

    let so12 = rep_of(so_pq(1, 2).unwrap());
    assert_eq!(classify_type(&so12, 0, 64).unwrap().kind, TypeKind::Real);

    let u11 = rep_of(u_pq_realified(1, 1).unwrap());
    let v = classify_type(&u11, 0, 64).unwrap();
    assert_eq!(v.kind, TypeKind::Complex);
    assert_eq!(v.commutant_dim, 2);

    let su2 = su2_realified();
    let v = classify_type(&su2, 0, 64).unwrap();
    assert_eq!(v.kind, TypeKind::Quaternionic);
    assert_eq!(v.commutant_dim, 4);

    // reducible input is rejected
    assert!(matches!(
        classify_type(&rep_of(so21_block(2).unwrap()), 0, 64),
        Err(crate::error::Error::NotIrreducible)
    ));
}

#[test]
fn conjugation_analysis_cases() {
    // complexified standard so(3): real type, C = plain conjugation
    let so3c = rep_of(so_pq(0, 3).unwrap()).complexify().unwrap();
    match conjugation_analysis(&so3c, 0, 64).unwrap() {
        ConjugationOutcome::RealConj { witness } => {
            let lambda = antilinear_conjugation_square(&witness).unwrap();
            assert_eq!(lambda, Scalar::one());
        }
        other => panic!("expected real conjugation, got {other:?}"),
    }
    // su(2) on C^2: quaternionic
    match conjugation_analysis(&su2_complex(), 0, 64).unwrap() {
        ConjugationOutcome::QuaternionicConj { witness } => {
            let lambda = antilinear_conjugation_square(&witness).unwrap();
            assert_eq!(lambda, Scalar::from_int(-1));
        }
        other => panic!("expected quaternionic conjugation, got {other:?}"),
    }
    // u(1) weight 1 on C^1: not self-conjugate
    let u1 = Representation::new(
        Some("u(1)_wt1".into()),
        1,
        vec![Matrix::new(1, 1, vec![Scalar::i()], Field::GaussRat).unwrap()],
    )
    .unwrap();
    assert!(matches!(
        conjugation_analysis(&u1, 0, 64).unwrap(),
        ConjugationOutcome::NotSelfConjugate
    ));
}

#[test]
fn invariant_forms_basics() {
    // so(2,3): one symmetric form of signature (2,3)
    let rep = rep_of(so_pq(2, 3).unwrap());
    let fs = invariant_forms(&rep, FormSymmetry::Symmetric).unwrap();
    assert_eq!(fs.dim(), 1);
    assert_eq!(fs.signatures[0], (2, 3, 0));
    // sl(2,R) on R^2: one antisymmetric form (the area form)
    let sl2 = rep_of(sl2_std().unwrap());
    let fa = invariant_forms(&sl2, FormSymmetry::Antisymmetric).unwrap();
    assert_eq!(fa.dim(), 1);
    // and no symmetric one
    assert_eq!(invariant_forms(&sl2, FormSymmetry::Symmetric).unwrap().dim(), 0);
    // appendix so(1,2) on R^5: symmetric form of signature (2,3)
    let app = rep_of(appendix_so12().unwrap());
    let fs = invariant_forms(&app, FormSymmetry::Symmetric).unwrap();
    assert_eq!(fs.dim(), 1);
    assert_eq!(fs.signatures[0], (2, 3, 0));
    // every member re-verifies invariance exactly
    for s in &fs.basis {
        for a in app.matrices() {
            assert!(a.transpose().matmul(s).unwrap().add(&s.matmul(a).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn signature_examples() {
    let eta = crate::liealg::SignatureForm::new(2, 3).matrix(Field::Rat);
    assert_eq!(signature(&eta).unwrap(), (2, 3, 0));
    assert_eq!(signature(&Matrix::zero(2, 2, Field::Rat)).unwrap(), (0, 0, 2));
    let asym = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
    assert!(signature(&asym).is_err());
    // off-diagonal pivot case
    let hyp = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    assert_eq!(signature(&hyp).unwrap(), (1, 1, 0));
}

#[test]
fn tensor_product_of_sl2s() {
    let sl2 = rep_of(sl2_std().unwrap());
    let t = tensor_rep(&sl2, &sl2).unwrap();
    assert_eq!(t.ambient_dim(), 4);
    // preserves a signature-(2,2) symmetric form
    let fs = invariant_forms(&t, FormSymmetry::Symmetric).unwrap();
    assert_eq!(fs.dim(), 1);
    assert_eq!(fs.signatures[0], (2, 2, 0));
    // and acts irreducibly
    let verdict = decide_irreducibility(&t, 0, 64).unwrap();
    assert!(verdict.is_irreducible());
    assert!(verify_verdict(&t, &verdict));
}

#[test]
fn tensor_with_trivial_factor() {
    let sl2 = rep_of(sl2_std().unwrap());
    let trivial = Representation::new(
        Some("trivial".into()),
        1,
        vec![Matrix::zero(1, 1, Field::Rat)],
    )
    .unwrap();
    let t = tensor_rep(&sl2, &trivial).unwrap();
    assert_eq!(t.ambient_dim(), 2);
    for (a, b) in t.matrices()[..3].iter().zip(sl2.matrices()) {
        assert_eq!(a, b);
    }
}

#[test]
fn self_duality_tensor_property() {
    // over pairs from {sl2 std, so(3) std, u(1) weight 1} (complexified):
    // the tensor has a nonzero invariant bilinear form iff both factors do
    let sl2 = rep_of(sl2_std().unwrap()).complexify().unwrap();
    let so3 = rep_of(so_pq(0, 3).unwrap()).complexify().unwrap();
    let u1 = Representation::new(
        None,
        1,
        vec![Matrix::new(1, 1, vec![Scalar::i()], Field::GaussRat).unwrap()],
    )
    .unwrap();
    let has_form = |r: &Representation| -> bool {
        invariant_forms(r, FormSymmetry::Symmetric).unwrap().dim() > 0
            || invariant_forms(r, FormSymmetry::Antisymmetric).unwrap().dim() > 0
    };
    let factors = [("sl2", sl2), ("so3", so3), ("u1", u1)];
    for (n1, f1) in &factors {
        for (n2, f2) in &factors {
            let t = tensor_rep(f1, f2).unwrap();
            assert_eq!(
                has_form(&t),
                has_form(f1) && has_form(f2),
                "self-duality of {n1} (x) {n2}"
            );
        }
    }
}

#[test]
fn forms_bounded_by_commutant() {
    for rep in [
        rep_of(so_pq(2, 2).unwrap()),
        rep_of(u_pq_realified(1, 1).unwrap()),
        su2_realified(),
        rep_of(appendix_so12().unwrap()),
    ] {
        let c = commutant(&rep).unwrap().dim();
        let s = invariant_forms(&rep, FormSymmetry::Symmetric).unwrap().dim();
        let a = invariant_forms(&rep, FormSymmetry::Antisymmetric).unwrap().dim();
        assert!(s + a <= c, "forms {s}+{a} vs commutant {c}");
    }
}

fn quaternionic_j_su2() -> AntilinearMap {
    AntilinearMap::new(Matrix::from_i64(&[&[0, -1], &[1, 0]]).promote(Field::GaussRat).unwrap())
}

#[test]
fn hermitian_from_symplectic_su2() {
    let rep = su2_complex();
    let j = quaternionic_j_su2();
    let omega = Matrix::from_i64(&[&[0, 1], &[-1, 0]]).promote(Field::GaussRat).unwrap();
    let h = hermitian_from_symplectic(&j, &omega, &rep).unwrap();
    // definite, (0,2) or (2,0)
    assert!(h.signature == (0, 2, 0) || h.signature == (2, 0, 0));
    // scaling omega by a positive rational leaves the signature unchanged
    let scaled = omega.scale(&Scalar::from_int(4)).unwrap();
    let h2 = hermitian_from_symplectic(&j, &scaled, &rep).unwrap();
    assert_eq!(h2.signature, h.signature);
    // hermitian symmetry on random vectors is structural: H = conj(H)^t
    assert_eq!(h.matrix, h.matrix.conj().transpose());
}

#[test]
fn hermitian_from_symplectic_rejects_bad_structure() {
    let rep = su2_complex();
    let j = quaternionic_j_su2();
    // a non-invariant "form"
    let bad = Matrix::from_i64(&[&[0, 1], &[1, 0]]).promote(Field::GaussRat).unwrap();
    assert!(hermitian_from_symplectic(&j, &bad, &rep).is_err());
}

/// g = span{[[0,1],[-1,0]]} acting on C^2 with sigma = Id and the
/// quaternionic J of su(2): the m = 1 instance.
#[test]
fn hermitian_from_symmetric_m1() {
    let x = Matrix::from_i64(&[&[0, 1], &[-1, 0]]).promote(Field::GaussRat).unwrap();
    let rep = Representation::new(Some("so*(2)".into()), 2, vec![x]).unwrap();
    let j = quaternionic_j_su2();
    let sigma = Matrix::identity(2, Field::GaussRat);
    let h = hermitian_from_symmetric(&j, &sigma, &rep).unwrap();
    assert_eq!(h.signature, (1, 1, 0));
    // sigma-orthonormal basis is light-like for h
    let basis = sigma_orthonormal_basis(&sigma).unwrap();
    for b in &basis {
        let hb = h.matrix.mul_vec(&b.iter().map(|x| x.conj()).collect::<Vec<_>>()).unwrap();
        assert!(crate::matrix::dot(b, &hb).unwrap().is_zero());
    }
}

/// su(2) acting on the left factor of C^2 (x) C^2 with J = M (x) conj and
/// sigma = (omega (x) omega)/2: the m = 2 instance with neutral signature.
#[test]
fn hermitian_from_symmetric_m2() {
    let su2 = su2_complex();
    let id2 = Matrix::identity(2, Field::GaussRat);
    let mats = su2
        .matrices()
        .iter()
        .map(|a| a.kron(&id2).unwrap())
        .collect::<Vec<_>>();
    let rep = Representation::new(Some("su(2)x1".into()), 4, mats).unwrap();
    let m = Matrix::from_i64(&[&[0, -1], &[1, 0]]).promote(Field::GaussRat).unwrap();
    let j = AntilinearMap::new(m.kron(&id2).unwrap());
    let omega = Matrix::from_i64(&[&[0, 1], &[-1, 0]]).promote(Field::GaussRat).unwrap();
    let sigma = omega
        .kron(&omega)
        .unwrap()
        .scale(&Scalar::from_rat(1, 2))
        .unwrap();
    let h = hermitian_from_symmetric(&j, &sigma, &rep).unwrap();
    assert_eq!(h.signature, (2, 2, 0));
    let basis = sigma_orthonormal_basis(&sigma).unwrap();
    assert_eq!(basis.len(), 4);
    for b in &basis {
        // orthonormality check
        let sb = sigma.mul_vec(b).unwrap();
        assert!(crate::matrix::dot(b, &sb).unwrap().is_one());
        // light-like for h
        let hb = h.matrix.mul_vec(&b.iter().map(|x| x.conj()).collect::<Vec<_>>()).unwrap();
        assert!(crate::matrix::dot(b, &hb).unwrap().is_zero());
    }
}

#[test]
fn enveloping_algebra_of_absolutely_irreducible_rep_is_full() {
    let rep = rep_of(so_pq(2, 3).unwrap());
    assert_eq!(enveloping_algebra(&rep).unwrap().dim(), 25);
    let rep = rep_of(appendix_so3().unwrap());
    assert_eq!(enveloping_algebra(&rep).unwrap().dim(), 25);
}

#[test]
fn determinism_of_verdicts() {
    let rep = rep_of(u_pq_realified(1, 2).unwrap());
    let v1 = decide_irreducibility(&rep, 7, 64).unwrap();
    let v2 = decide_irreducibility(&rep, 7, 64).unwrap();
    match (&v1, &v2) {
        (
            IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::ComplexSplit(a)),
            IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::ComplexSplit(b)),
        ) => {
            assert_eq!(a.complex_structure, b.complex_structure);
            assert_eq!(a.inner.element, b.inner.element);
        }
        (IrreducibilityVerdict::Irreducible(_), IrreducibilityVerdict::Irreducible(_)) => {}
        _ => panic!("verdicts differ across runs"),
    }
}

/// The adjoining-i*R property: a real-type irreducible orthogonal action
/// stays irreducible after adjoining the global complex structure, and for
/// the circle extensions the commutant is exactly {Id, J}.
#[test]
fn adjoining_circle_property() {
    for p in [2usize, 3] {
        let so1p = rep_of(so_pq(1, p).unwrap());
        assert_eq!(
            classify_type(&so1p, 0, 64).unwrap().kind,
            TypeKind::Real,
            "so(1,{p})"
        );
        let circle = rep_of(circle_so_realified(1, p).unwrap());
        let verdict = decide_irreducibility(&circle, 0, 64).unwrap();
        assert!(verdict.is_irreducible(), "s1*so(1,{p})");
        assert!(verify_verdict(&circle, &verdict));
        assert_eq!(commutant(&circle).unwrap().dim(), 2);
    }
    // adjoining i*R to the non-real-type su(1,1) gives u(1,1), whose
    // commutant still has dimension >= 2
    let u11 = rep_of(u_pq_realified(1, 1).unwrap());
    assert!(commutant(&u11).unwrap().dim() >= 2);
}

/// A Q-irreducible action whose splitting field is quadratic: no verdict
/// can be certified over Q, and the analysis honestly withholds it.
#[test]
fn verdict_withheld_when_uncertifiable() {
    let x = Matrix::from_i64(&[&[0, -3], &[1, 0]]);
    let rep = Representation::new(Some("rot_sqrt3".into()), 2, vec![x]).unwrap();
    match decide_irreducibility(&rep, 0, 12) {
        Err(crate::error::Error::AnalysisBudgetExceeded { .. }) => {}
        other => panic!("expected withheld verdict, got {other:?}"),
    }
}

#[test]
fn center_elements_commute_with_basis() {
    let u12 = u_pq_realified(1, 2).unwrap();
    let center = u12.center().unwrap();
    assert_eq!(center.dim(), 1);
    let n = u12.ambient_dim();
    for z in center.basis() {
        let zm = Matrix::from_flat(n, n, z.clone(), u12.field()).unwrap();
        for b in u12.basis() {
            assert!(zm.bracket(b).unwrap().is_zero());
        }
    }
}
