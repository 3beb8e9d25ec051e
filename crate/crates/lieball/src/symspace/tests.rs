use super::embed::*;
use super::lieball::*;
use super::stab::*;
use super::*;
use crate::builtins::*;
use crate::liealg::standard_j;
use crate::repcheck::Representation;

#[test]
fn cartan_dimensions_and_inclusions() {
    // constructor verifies [k,k] in k, [k,m] in m, [m,m] in k exactly
    let dec = cartan(3, CartanVariant::Noncompact).unwrap();
    assert_eq!(dec.k_basis.len(), 4);
    assert_eq!(dec.m_basis.len(), 6);
    let compact = cartan(3, CartanVariant::Compact).unwrap();
    assert_eq!(compact.k_basis.len() + compact.m_basis.len(), 10);
    // appendix U, V lie in the compact m; W lies in k
    assert!(compact.m_span().contains(&appendix_u().flatten()));
    assert!(compact.m_span().contains(&appendix_v().flatten()));
    assert!(compact.k_span().contains(&appendix_w().flatten()));
}

#[test]
fn dualize_matches_appendix_and_reverses_brackets() {
    let compact = cartan(3, CartanVariant::Compact).unwrap();
    assert_eq!(dualize(&appendix_u(), &compact).unwrap(), appendix_u_star());
    assert_eq!(dualize(&appendix_v(), &compact).unwrap(), appendix_v_star());
    let zero = Matrix::zero(5, 5, Field::Quad(3));
    assert_eq!(dualize(&zero, &compact).unwrap(), zero);
    // bracket(dualize X, dualize Y) + bracket(X, Y) = 0 on all basis pairs
    for x in &compact.m_basis {
        for y in &compact.m_basis {
            let dx = dualize(x, &compact).unwrap();
            let dy = dualize(y, &compact).unwrap();
            let s = dx.bracket(&dy).unwrap().add(&x.bracket(y).unwrap()).unwrap();
            assert!(s.is_zero());
        }
    }
    // elements outside m are rejected
    assert!(matches!(
        dualize(&appendix_w(), &compact),
        Err(crate::error::Error::NotInM)
    ));
}

#[test]
fn lie_triple_checks() {
    let noncompact = cartan(3, CartanVariant::Noncompact).unwrap();
    assert!(is_lie_triple(&appendix_lie_triple(CartanVariant::Noncompact), &noncompact).unwrap());
    assert!(!is_lie_triple(&crafted_non_triple().unwrap(), &noncompact).unwrap());
    // every single m*-basis element is a Lie triple: [[X,X],X] = 0
    for x in &noncompact.m_basis {
        assert!(is_lie_triple(std::slice::from_ref(x), &noncompact).unwrap());
    }
    let compact = cartan(3, CartanVariant::Compact).unwrap();
    assert!(is_lie_triple(&appendix_lie_triple(CartanVariant::Compact), &compact).unwrap());
}

#[test]
fn quadric_and_ball_membership() {
    let pi0 = base_point(2);
    assert!(pi0.on_quadric());
    assert!(pi0.in_lieball());
    assert_eq!(pi0.orientation_sign().unwrap(), 1);
    // boundary case [1 : 0 : 1 : 0]
    let z = ProjectivePoint::new(vec![
        Scalar::one(),
        Scalar::zero(),
        Scalar::one(),
        Scalar::zero(),
    ])
    .unwrap();
    assert!(z.on_quadric());
    assert!(!z.in_lieball());
    // positive point [0 : 0 : 1 : i]
    let z = ProjectivePoint::new(vec![
        Scalar::zero(),
        Scalar::zero(),
        Scalar::one(),
        Scalar::i(),
    ])
    .unwrap();
    assert!(z.on_quadric());
    assert!(!z.in_lieball());
}

#[test]
fn plane_point_round_trip() {
    let plane = NegativePlane::base(3);
    let pt = plane.to_point().unwrap();
    assert!(pt.projectively_equal(&base_point(3)));
    let back = point_to_plane(&pt).unwrap();
    assert!(same_plane(&plane, &back));
    // scaling the plane leaves the projective point unchanged
    let scaled = NegativePlane::new(
        crate::matrix::vec_scale(&plane.a, &Scalar::from_int(2)).unwrap(),
        crate::matrix::vec_scale(&plane.b, &Scalar::from_int(2)).unwrap(),
    )
    .unwrap();
    assert!(scaled.to_point().unwrap().projectively_equal(&pt));
    // degenerate data is rejected
    assert!(NegativePlane::new(plane.a.clone(), plane.a.clone()).is_err());
    let e2 = Matrix::identity(5, Field::Rat).row(2).to_vec();
    assert!(NegativePlane::new(plane.a.clone(), e2).is_err());
}

#[test]
fn embedding_base_cases() {
    // I1 at k = 1, n = 2, z = (1, 0): the base point
    let spec = EmbeddingSpec::I1 { k: 1, n: 2 };
    let img = embed(
        &spec,
        &EmbedInput::Single(vec![Scalar::one(), Scalar::zero()]),
    )
    .unwrap();
    assert!(img.projectively_equal(&base_point(2)));
    // G2 with k1 = k2 = 1 at ([1,0],[1,0]): the base point of n = 3
    let spec = EmbeddingSpec::G2 { k1: 1, k2: 1, n: 3 };
    let img = embed(
        &spec,
        &EmbedInput::Pair(
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::one(), Scalar::zero()],
        ),
    )
    .unwrap();
    assert!(img.projectively_equal(&base_point(3)));
    // I2 at x = (1, 1/2): [1 : i : 1/2 : i/2], hermitian value -3/2
    let spec = EmbeddingSpec::I2 { k: 1, n: 2 };
    let img = embed(
        &spec,
        &EmbedInput::Single(vec![Scalar::one(), Scalar::from_rat(1, 2)]),
    )
    .unwrap();
    assert!(img.on_quadric());
    assert_eq!(img.hermitian_value().unwrap(), Scalar::from_rat(-3, 2));
    assert_eq!(img.coords()[3], Scalar::i().mul(&Scalar::from_rat(1, 2)).unwrap());
}

#[test]
fn embedding_domain_violations() {
    let spec = EmbeddingSpec::I1 { k: 1, n: 2 };
    // |z1| >= |z0|: outside complex hyperbolic space
    assert!(matches!(
        embed(&spec, &EmbedInput::Single(vec![Scalar::one(), Scalar::one()])),
        Err(crate::error::Error::DomainViolation(_))
    ));
    let spec = EmbeddingSpec::P1 { k: 2, n: 3 };
    // not on the unit hyperboloid
    assert!(matches!(
        embed(
            &spec,
            &EmbedInput::Single(vec![Scalar::from_int(2), Scalar::zero(), Scalar::zero()])
        ),
        Err(crate::error::Error::DomainViolation(_))
    ));
    // P1 on the hyperboloid works and lands on the quadric
    let img = embed(
        &spec,
        &EmbedInput::Single(vec![Scalar::one(), Scalar::zero(), Scalar::zero()]),
    )
    .unwrap();
    assert!(img.on_quadric() && img.in_lieball());
    // G2 with mismatched factor norms is rejected
    let spec = EmbeddingSpec::G2 { k1: 1, k2: 1, n: 2 };
    assert!(matches!(
        embed(
            &spec,
            &EmbedInput::Pair(
                vec![Scalar::one(), Scalar::zero()],
                vec![Scalar::from_int(2), Scalar::zero()]
            )
        ),
        Err(crate::error::Error::DomainViolation(_))
    ));
}

#[test]
fn invariant_hull_cases() {
    // realified su(1,1) with the base plane as seed: full in R^4
    let su11 = su_pq_realified(1, 1).unwrap();
    let plane = NegativePlane::base(2);
    let hull = invariant_hull(&su11, &[plane.a.clone(), plane.b.clone()]).unwrap();
    assert!(is_full(&hull));
    // the P2 block with seed e0 spans only the acting block
    let block = so21_block(3).unwrap();
    let e0 = Matrix::identity(5, Field::Rat).row(0).to_vec();
    let hull = invariant_hull(&block, &[e0]).unwrap();
    assert_eq!(hull.dim(), 3);
    // zero algebra: the hull of v is the line through v
    let zero = crate::liealg::LieAlgebra::new(None, vec![Matrix::zero(3, 3, Field::Rat)]).unwrap();
    let v = vec![Scalar::one(), Scalar::from_int(2), Scalar::zero()];
    let hull = invariant_hull(&zero, &[v.clone()]).unwrap();
    assert_eq!(hull.dim(), 1);
    assert!(hull.contains(&v));
}

#[test]
fn fullness_follows_irreducibility() {
    // for every algebra with an irreducible verdict, any nonzero seed has a
    // full hull
    for alg in [
        so_pq(2, 2).unwrap(),
        u_pq_realified(1, 1).unwrap(),
        appendix_so12().unwrap(),
    ] {
        let rep = Representation::from_algebra(&alg);
        let verdict = crate::repcheck::meataxe::decide_irreducibility(&rep, 0, 64).unwrap();
        assert!(verdict.is_irreducible());
        let n = alg.ambient_dim();
        let id = Matrix::identity(n, alg.field());
        for i in 0..n {
            let hull = invariant_hull(&alg, &[id.row(i).to_vec()]).unwrap();
            assert!(is_full(&hull), "{:?} seed {i}", alg.name());
        }
    }
}

#[test]
fn fixer_algebra_cases() {
    // realified u(1,k) at the base plane: the diagonal so(2), dimension 1
    for k in [1usize, 2] {
        let g = u_pq_realified(1, k).unwrap();
        let fixer = fixer_algebra(&g, &NegativePlane::base(2 * k)).unwrap();
        assert_eq!(fixer.dim(), 1, "u(1,{k})");
        assert!(fixer.contains(&standard_j(1 + k, Field::Rat).flatten()));
        // the fixer is an ideal: [g, fixer] stays inside
        let n = g.ambient_dim();
        for b in g.basis() {
            for f in fixer.basis() {
                let fm = Matrix::from_flat(n, n, f.clone(), g.field()).unwrap();
                assert!(fixer.contains(&b.bracket(&fm).unwrap().flatten()));
            }
        }
    }
    // the appendix so(1,2) is simple: trivial fixer
    let g = appendix_so12().unwrap();
    let fixer = fixer_algebra(&g, &NegativePlane::base(3)).unwrap();
    assert_eq!(fixer.dim(), 0);
    // an abelian line spanned by J stabilizes the base plane entirely
    let j = standard_j(2, Field::Rat);
    let line = crate::liealg::LieAlgebra::new(None, vec![j]).unwrap();
    let fixer = fixer_algebra(&line, &NegativePlane::base(2)).unwrap();
    assert_eq!(fixer.dim(), 1);
}

#[test]
fn parabolic_dimension_and_transitivity() {
    // so(2,3), v = e0 + e2: dim p = 7
    let mut v = vec![Scalar::zero(); 5];
    v[0] = Scalar::one();
    v[2] = Scalar::one();
    let p = parabolic_algebra(1, 2, &v).unwrap();
    assert_eq!(p.dim(), 7);
    // U* stabilizes span{e0 + e2}: it lies in g intersect p
    let p_span = p.to_subspace();
    assert!(p_span.contains(&appendix_u_star().flatten()));
    let so23 = so_pq(2, 3).unwrap();
    let g = appendix_so12().unwrap();
    assert!(!local_transitivity(&g, &p, &so23).unwrap());
    assert!(local_transitivity(&so23, &p, &so23).unwrap());
    // so(1,1): the parabolic is the whole 1-dimensional algebra
    let mut w = vec![Scalar::zero(); 2];
    w[0] = Scalar::one();
    w[1] = Scalar::one();
    let p11 = parabolic_algebra(0, 0, &w).unwrap();
    assert_eq!(p11.dim(), 1);
    // non-light-like vectors are rejected
    let e0 = Matrix::identity(5, Field::Rat).row(0).to_vec();
    assert!(matches!(
        parabolic_algebra(1, 2, &e0),
        Err(crate::error::Error::NotLightlike)
    ));
}

#[test]
fn type_a_consistency_chain() {
    // closure of {U*, V*} is 3-dimensional, orthogonal for eta(2,3),
    // a Lie triple at the m*-level, and acts irreducibly
    let closure = crate::liealg::LieAlgebra::bracket_closure(
        None,
        appendix_lie_triple(CartanVariant::Noncompact),
        10,
    )
    .unwrap();
    assert_eq!(closure.dim(), 3);
    assert!(closure
        .check_orthogonality(&crate::liealg::SignatureForm::new(2, 3))
        .unwrap());
    let noncompact = cartan(3, CartanVariant::Noncompact).unwrap();
    assert!(is_lie_triple(&appendix_lie_triple(CartanVariant::Noncompact), &noncompact).unwrap());
    let rep = Representation::from_algebra(&closure);
    assert!(crate::repcheck::meataxe::decide_irreducibility(&rep, 0, 64)
        .unwrap()
        .is_irreducible());
}
