mod common;

use std::sync::Arc;

use loopforge::exactq::{q, zero, Matrix, MultilinearMap, Rational};
use loopforge::gbv::{clause, random_instance, Convention, DeltaKind, GbvError, GradedOperatorAlgebra, DELTA};
use loopforge::io::StructureConstants;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn load(name: &str) -> GradedOperatorAlgebra {
    let sc = StructureConstants::parse(&common::fixture(name)).unwrap();
    GradedOperatorAlgebra::from_constants(&sc).unwrap()
}

fn linear(a: &GradedOperatorAlgebra, degree: i64, images: &[(usize, usize, i64)]) -> MultilinearMap {
    let d = a.space().dim();
    let mut m = Matrix::zeros(d, d);
    for &(col, row, c) in images {
        m.set(row, col, q(c));
    }
    MultilinearMap::from_linear(a.space().clone(), a.space().clone(), degree, &m).unwrap()
}

/// Monomials `u^a ξ^b` in ℚ[u]/(u³) ⊗ Λ(ξ), |ξ| = −1, with Δ = u∂_u ∂_ξ.
mod weighted {
    pub type Mono = (usize, usize);
    pub type Poly = Vec<(Mono, i64)>;

    pub const BASIS: [Mono; 6] = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)];

    pub fn degree(m: Mono) -> i64 {
        -(m.1 as i64)
    }

    pub fn mul(x: &Poly, y: &Poly) -> Poly {
        let mut out = Vec::new();
        for &((a, b), c) in x {
            for &((e, f), g) in y {
                if a + e < 3 && b + f < 2 {
                    out.push(((a + e, b + f), c * g));
                }
            }
        }
        out
    }

    pub fn delta(x: &Poly) -> Poly {
        x.iter()
            .filter(|((_, b), _)| *b == 1)
            .map(|&((a, _), c)| ((a, 0), c * a as i64))
            .collect()
    }

    pub fn scale(x: &Poly, s: i64) -> Poly {
        x.iter().map(|&(m, c)| (m, c * s)).collect()
    }

    pub fn coefficients(x: &Poly) -> Vec<i64> {
        BASIS
            .iter()
            .map(|m| x.iter().filter(|(n, _)| n == m).map(|(_, c)| c).sum())
            .collect()
    }

    /// (−1)^{|x|}(Δ(xy) − Δ(x)y) − xΔ(y) on monomials.
    pub fn bracket(x: Mono, y: Mono) -> Vec<i64> {
        let (px, py) = (vec![(x, 1)], vec![(y, 1)]);
        let s = if degree(x) % 2 == 0 { 1 } else { -1 };
        let mut terms = scale(&delta(&mul(&px, &py)), s);
        terms.extend(scale(&mul(&delta(&px), &py), -s));
        terms.extend(scale(&mul(&px, &delta(&py)), -1));
        coefficients(&terms)
    }
}

#[test]
fn derived_bracket_matches_a_monomial_computation() {
    let a = load("bv_weighted.json");
    let b = a.derive_bracket(DELTA).unwrap();
    assert_eq!(b.degree(), 1);
    for (i, &x) in weighted::BASIS.iter().enumerate() {
        for (j, &y) in weighted::BASIS.iter().enumerate() {
            let expected: Vec<Rational> = weighted::bracket(x, y).into_iter().map(q).collect();
            assert_eq!(b.eval_basis(&[i, j]), expected, "{{{x:?}, {y:?}}}");
        }
    }
    let (u, xi) = (1, 3);
    assert_eq!(b.eval_basis(&[u, xi]), vec![zero(), q(1), zero(), zero(), zero(), zero()]);
    assert_eq!(b.eval_basis(&[xi, u]), vec![zero(), q(-1), zero(), zero(), zero(), zero()]);
}

#[test]
fn conventions_differ_by_a_global_sign() {
    let a = load("bv_weighted.json");
    let gbv = a.seven_term_bracket(DELTA, Convention::Gbv).unwrap();
    let sw = a.seven_term_bracket(DELTA, Convention::Sw).unwrap();
    assert!(!sw.is_zero());
    assert_eq!(gbv, sw.scale(&q(-1)));
    for c in Convention::ALL {
        let r = a.check_bv(DELTA, c).unwrap();
        assert!(r.passed(), "{c:?}: {:?}", r.failures());
        let g = a.check_gerstenhaber(&a.seven_term_bracket(DELTA, c).unwrap(), 1).unwrap();
        assert!(g.passed(), "{:?}", g.failures());
    }
    assert_eq!("sw".parse::<Convention>(), Ok(Convention::Sw));
    assert!("bv".parse::<Convention>().is_err());
}

#[test]
fn a_given_bracket_in_the_wrong_convention_fails_the_seven_term_relation() {
    let a = load("bv_weighted.json");
    let sw = a.seven_term_bracket(DELTA, Convention::Sw).unwrap();
    let a = a.with_bracket(sw);
    assert!(a.check_bv_nplus1(1, Convention::Sw).unwrap().passed());
    let r = a.check_bv_nplus1(1, Convention::Gbv).unwrap();
    assert_eq!(r.failures(), vec![clause::SEVEN_TERM]);
}

#[test]
fn exterior_algebra_on_one_odd_generator() {
    let a = load("bv_exterior.json");
    let b = a.derive_bracket(DELTA).unwrap();
    assert!(b.is_zero());
    let r = a.check_bv(DELTA, Convention::Gbv).unwrap();
    assert!(r.passed(), "{:?}", r.failures());

    let zero_delta = a.clone().with_operator(DELTA, linear(&a, 1, &[]));
    assert!(zero_delta.derive_bracket(DELTA).unwrap().is_zero());
    assert!(zero_delta.check_bv(DELTA, Convention::Sw).unwrap().passed());
}

#[test]
fn square_nonzero_fails_only_there() {
    let a = load("bv_square_nonzero.json");
    for c in Convention::ALL {
        let r = a.check_bv(DELTA, c).unwrap();
        assert_eq!(r.failures(), vec![clause::DELTA_SQUARED]);
        assert_eq!(r.clause(clause::DELTA_SQUARED).unwrap().witness, Some(vec!["x".to_string()]));
        assert!(r.clause(clause::AGREE).unwrap().passed);
    }
}

#[test]
fn multiplication_by_an_odd_element_is_not_normalized() {
    let a = load("bv_square_nonzero.json");
    let z = a.space().index_of("z").unwrap();
    let mut e = vec![zero(); a.space().dim()];
    e[z] = q(1);
    let c = MultilinearMap::constant(a.space().clone(), 1, &e).unwrap();
    let lz = a.product().compose(1, &c).unwrap();
    let a = a.with_operator(DELTA, lz);
    let r = a.check_bv(DELTA, Convention::Gbv).unwrap();
    assert_eq!(r.first_failure().unwrap().name, clause::DELTA_UNIT);
    assert!(r.clause(clause::DELTA_SQUARED).unwrap().passed);
    assert!(r.clause(clause::SECOND_ORDER).unwrap().passed);
    assert!(!r.clause(clause::LEIBNIZ).unwrap().passed);
    assert!(r.clause(clause::AGREE).unwrap().passed);
}

#[test]
fn third_order_operator_fails_second_order() {
    let a = load("bv_weighted.json");
    // (u∂_u)² ∂_ξ
    let op = linear(&a, 1, &[(4, 1, 1), (5, 2, 4)]);
    let a = a.with_operator(DELTA, op);
    let r = a.check_bv(DELTA, Convention::Gbv).unwrap();
    assert_eq!(r.first_failure().unwrap().name, clause::SECOND_ORDER);
    assert!(r.clause(clause::AGREE).unwrap().passed);
}

#[test]
fn corrupted_bracket_fails_skew_symmetry() {
    let a = load("bv_weighted.json");
    let b = a.derive_bracket(DELTA).unwrap();
    let s = a.space().clone();
    let (u, xi, u2) = (1, 3, 2);
    let bump = MultilinearMap::new(vec![s.clone(), s.clone()], s, 1, vec![(vec![u, xi], u2, q(1))]).unwrap();
    let r = a.check_gerstenhaber(&b.add(&bump).unwrap(), 1).unwrap();
    let first = r.first_failure().unwrap();
    assert_eq!(first.name, clause::SKEW);
    assert_eq!(first.witness, Some(vec!["u".to_string(), "ξ".to_string()]));

    assert!(matches!(
        a.check_gerstenhaber(&b, 0),
        Err(GbvError::Degree { found: 1, .. })
    ));
}

#[test]
fn poisson_bracket_of_degree_zero() {
    let a = load("poisson_square_zero.json");
    let r = a.check_gerstenhaber(a.bracket().unwrap(), 0).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
}

#[test]
fn bv2_operator_that_is_not_a_derivation() {
    let a = load("bv2_not_derivation.json");
    let r = a.check_bv_nplus1(2, Convention::Gbv).unwrap();
    assert_eq!(r.failures(), vec!["B1 derives the product"]);
    assert_eq!(
        r.first_failure().unwrap().witness,
        Some(vec!["ξ1".to_string(), "ξ2".to_string()])
    );
    assert!(matches!(a.check_bv_nplus1(4, Convention::Gbv), Err(GbvError::Missing(_))));
    assert!(matches!(a.check_bv_nplus1(3, Convention::Gbv), Err(GbvError::Missing(_))));
}

#[test]
fn even_degree_delta_is_rejected() {
    let a = load("bv_weighted.json");
    let d = a.clone().with_operator(DELTA, linear(&a, 0, &[(1, 1, 1)]));
    assert!(matches!(d.derive_bracket(DELTA), Err(GbvError::Degree { found: 0, .. })));
    assert!(matches!(a.derive_bracket("B1"), Err(GbvError::Missing(_))));
}

#[test]
fn characterizations_agree_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let (mut pass, mut fail) = (0, 0);
    for _ in 0..100 {
        let (a, kind) = random_instance(&mut rng, 6);
        assert!(a.space().dim() <= 6);
        for c in Convention::ALL {
            let r = a.check_bv(DELTA, c).unwrap();
            assert!(r.clause(clause::AGREE).unwrap().passed, "{kind:?} {:?}", r.failures());
            let grothendieck = [clause::DELTA_SQUARED, clause::DELTA_UNIT, clause::SECOND_ORDER]
                .iter()
                .all(|n| r.clause(n).unwrap().passed);
            if kind == DeltaKind::SecondOrder {
                assert!(r.passed(), "{:?}", r.failures());
            }
            if grothendieck {
                let b = a.seven_term_bracket(DELTA, c).unwrap();
                assert!(a.check_gerstenhaber(&b, 1).unwrap().passed());
            }
            let n1 = a.check_bv_nplus1(1, c).unwrap();
            assert_eq!(n1.passed(), r.passed());
            if c == Convention::Gbv {
                if r.passed() {
                    pass += 1;
                } else {
                    fail += 1;
                }
            }
        }
    }
    assert!(pass >= 10 && fail >= 10, "pass {pass}, fail {fail}");
}

#[test]
fn random_instances_are_graded_commutative_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let (a, _) = random_instance(&mut rng, 6);
        let rebuilt = GradedOperatorAlgebra::new(
            Arc::clone(a.space()),
            a.product().clone(),
            a.unit().to_vec(),
            a.operators().clone(),
            None,
        );
        assert!(rebuilt.is_ok());
        assert_eq!(a.operators()[DELTA].degree(), 1);
    }
}

#[test]
fn corruption_respecting_skew_symmetry_fails_on_a_triple() {
    let a = load("bv_weighted.json");
    let b = a.derive_bracket(DELTA).unwrap();
    let s = a.space().clone();
    let (u, xi) = (1, 3);
    let bump = MultilinearMap::new(
        vec![s.clone(), s.clone()],
        s,
        1,
        vec![(vec![u, xi], u, q(1)), (vec![xi, u], u, q(-1))],
    )
    .unwrap();
    let r = a.check_gerstenhaber(&b.add(&bump).unwrap(), 1).unwrap();
    assert!(r.clause(clause::SKEW).unwrap().passed);
    let first = r.first_failure().unwrap();
    assert_eq!(first.witness.as_ref().unwrap().len(), 3, "{first:?}");
}

#[test]
fn zero_operators_pass_bv_nplus1() {
    let a = load("bv2_not_derivation.json");
    let a = a.clone().with_operator("B1", linear(&a, 3, &[]));
    assert!(a.check_bv_nplus1(2, Convention::Gbv).unwrap().passed());
    let e = load("bv_exterior.json");
    let e = e.clone().with_operator(DELTA, linear(&e, 1, &[]));
    for c in Convention::ALL {
        assert!(e.check_bv_nplus1(1, c).unwrap().passed());
    }
    let e = load("bv_exterior.json");
    for c in Convention::ALL {
        assert_eq!(e.check_bv_nplus1(1, c).unwrap().passed(), e.check_bv(DELTA, c).unwrap().passed());
    }
}
