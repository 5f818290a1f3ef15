mod common;

use common::*;
use jacres_core::closure::*;
use jacres_core::field::Field;
use jacres_core::poly::{compose_arc, hessian_det, jacobian_data, Arc as Curve, Polynomial, UniPoly};
use jacres_core::{Error, Limits};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;

fn lim() -> Limits {
    Limits::default()
}

fn q(p: i64, d: i64) -> Extended {
    Extended::Finite(BigRational::new(p.into(), d.into()))
}

/// Independent `ord_I(x^a)` for a monomial ideal: the largest `k` such that
/// `a` dominates a sum of `k` generator exponents.
fn brute_ord(exps: &[Vec<u32>], a: &[u32]) -> u32 {
    fn go(exps: &[Vec<u32>], a: &[u32], start: usize) -> u32 {
        let mut best = 0;
        for (i, e) in exps.iter().enumerate().skip(start) {
            if e.iter().zip(a).all(|(x, y)| x <= y) {
                let rest: Vec<u32> = a.iter().zip(e).map(|(y, x)| y - x).collect();
                best = best.max(1 + go(exps, &rest, i));
            }
        }
        best
    }
    go(exps, a, 0)
}

fn brute_samuel_lower(exps: &[Vec<u32>], a: &[u32], mcap: u32) -> BigRational {
    (1..=mcap)
        .map(|m| {
            let am: Vec<u32> = a.iter().map(|x| x * m).collect();
            BigRational::new(brute_ord(exps, &am).into(), m.into())
        })
        .max()
        .unwrap()
}

fn monomial_arc(weights: &[u32]) -> Curve {
    let f = Field::Rationals;
    Curve::new(
        weights
            .iter()
            .map(|&w| if w == 0 { UniPoly::zero(&f) } else { UniPoly::monomial(&f, w as usize, f.one()) })
            .collect(),
    )
    .unwrap()
}

#[test]
fn samuel_monomial_examples() {
    let r = ring(&["x", "y"]);
    let v = samuel_monomial(&gens(&r, &["x^2", "y^2"]), &p(&r, "4*x*y")).unwrap();
    assert_eq!(v, q(1, 1));
    let v = samuel_monomial(&gens(&r, &["x^3", "y^3"]), &p(&r, "x^2*y^2")).unwrap();
    assert_eq!(v, q(4, 3));
    assert_eq!(brute_samuel_lower(&[vec![3, 0], vec![0, 3]], &[2, 2], 3), BigRational::new(4.into(), 3.into()));
    let v = samuel_monomial(&gens(&r, &["x^2", "y^3"]), &p(&r, "x*y^2")).unwrap();
    assert_eq!(v, q(7, 6));
    assert_eq!(brute_samuel_lower(&[vec![2, 0], vec![0, 3]], &[1, 2], 6), BigRational::new(7.into(), 6.into()));
    let err = samuel_monomial(&gens(&r, &["x^2 + y", "y^2"]), &p(&r, "x")).unwrap_err();
    assert!(matches!(err, Error::NonMonomial(_)));
    assert_eq!(samuel_monomial(&gens(&r, &["x", "y"]), &Polynomial::zero(&r)).unwrap(), Extended::Infinite);
}

#[test]
fn facets_of_examples() {
    let r = ring(&["x", "y"]);
    let np = NewtonPolyhedron::from_generators(&gens(&r, &["x^3", "y^3"])).unwrap();
    let vars = r.vars();
    let shown: Vec<String> = np.facets().iter().map(|f| f.display_with(vars)).collect();
    assert_eq!(shown, vec!["x + y >= 3"]);
    let np = NewtonPolyhedron::from_generators(&gens(&r, &["x^2", "y^3"])).unwrap();
    assert_eq!(np.facets()[0].display_with(vars), "3*x + 2*y >= 6");
}

#[test]
fn remark_example_squares() {
    let r = ring(&["x", "y"]);
    let f = gens(&r, &["x^2", "y^2"]);
    let np = NewtonPolyhedron::from_generators(&f).unwrap();
    assert_eq!(np.closure_generators(), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    let j = jacobian_data(&f).unwrap().det;
    assert_eq!(j, p(&r, "4*x*y"));
    assert_eq!(samuel_monomial(&f, &j).unwrap(), q(1, 1));
    let b = samuel_bounds(&f, &j, &[arc("t, t")], 2, &lim()).unwrap();
    assert_eq!(b.upper, q(1, 1));
    assert_eq!(b.lower, q(1, 1));
    assert_eq!(b.lower_power, Some(2));
}

#[test]
fn arc_report_examples() {
    let r = ring(&["x", "y"]);
    let f = gens(&r, &["x^2", "y^3"]);
    let rep = arc_report(&f, &arc("t^2, t^3"), None).unwrap();
    assert_eq!(rep.orders, vec![Some(4), Some(9)]);
    assert_eq!(rep.min_order, Some(4));
    assert_eq!(rep.jacobian_order, Some(8));
    assert_eq!(rep.cramer_ok, Some(true));

    let j = jacobian_data(&f).unwrap().det;
    let rep = arc_report(&f, &arc("t^3, t^2"), Some(&j)).unwrap();
    assert_eq!(rep.min_order, Some(6));
    let t = rep.target.unwrap();
    assert_eq!(t.order, Some(7));
    assert_eq!(t.ratio, Some(q(7, 6)));
    assert_eq!(samuel_monomial(&f, &j).unwrap(), q(7, 6));

    let f = gens(&r, &["x", "y"]);
    let rep = arc_report(&f, &arc("t, t^2"), Some(&p(&r, "1"))).unwrap();
    assert_eq!(rep.target.unwrap().ratio, Some(q(0, 1)));

    let f = gens(&r, &["x - y", "(x - y)^2"]);
    let rep = arc_report(&f, &arc("t, t"), Some(&p(&r, "x"))).unwrap();
    assert_eq!(rep.min_order, None);
    assert_eq!(rep.target.unwrap().ratio, None);
}

#[test]
fn samuel_bounds_examples() {
    let r = ring(&["x", "y"]);
    let f = gens(&r, &["x^3", "y^3"]);
    let u = p(&r, "9*x^2*y^2");
    let b = samuel_bounds(&f, &u, &[arc("t, t"), arc("t, t^2")], 3, &lim()).unwrap();
    assert_eq!(b.lower, q(4, 3));
    assert_eq!(b.lower_power, Some(3));
    assert_eq!(b.upper, q(4, 3));
    assert_eq!(b.upper_arc, Some(0));
    assert!(b.is_exact());

    let b = samuel_bounds(&f, &p(&r, "x^3 + x*y^3"), &[], 1, &lim()).unwrap();
    assert!(b.lower >= q(1, 1));
    assert_eq!(b.upper, Extended::Infinite);
}

#[test]
fn loja_examples() {
    let r = ring(&["x", "y"]);
    let c = loja_certificate(&gens(&r, &["x^3", "y^3"]), &[arc("t, t")], 3, &lim()).unwrap();
    assert_eq!(c.case, LojaCase::Two);
    assert!(c.strict);
    assert_eq!(c.s, Some(5));
    assert_eq!(c.theta_lb, Some(BigRational::new(6.into(), 5.into())));
    assert_eq!(c.exact, Some(q(4, 3)));
    let b = c.bounds.unwrap();
    assert_eq!((b.lower, b.upper), (q(4, 3), q(4, 3)));
    assert_eq!(c.jacobian_in_closure, Some(true));

    let c = loja_certificate(&gens(&r, &["x^2", "y^2"]), &[arc("t, t")], 2, &lim()).unwrap();
    assert_eq!(c.theta_lb, Some(BigRational::new(1.into(), 1.into())));
    assert!(!c.strict);
    assert_eq!(c.bounds.unwrap().upper, q(1, 1));

    let r3 = ring(&["x", "y", "z"]);
    let c = loja_certificate(&gens(&r3, &["x^2", "y^2", "z^2"]), &[arc("t, t, t")], 2, &lim()).unwrap();
    assert_eq!(c.case, LojaCase::AtLeastThree);
    assert_eq!(c.s, Some(4));
    assert_eq!(c.theta_lb, Some(BigRational::new(5.into(), 4.into())));
    assert_eq!(c.exact, Some(q(3, 2)));
    assert_eq!(c.bounds.unwrap().lower, q(3, 2));

    let c = loja_certificate(&gens(&r, &["x", "y^2"]), &[], 2, &lim()).unwrap();
    assert_eq!(c.rank0, 1);
    assert_eq!(c.case, LojaCase::AtMostOne);
    assert_eq!(c.theta_lb, None);
}

#[test]
fn loja_reduces_coordinate_generators() {
    let r = ring(&["x", "y", "z"]);
    let c = loja_certificate(&gens(&r, &["x", "y^2", "z^3"]), &[arc("t, t, t")], 2, &lim()).unwrap();
    assert_eq!(c.eliminated, vec![0]);
    assert_eq!(c.case, LojaCase::Two);
    assert_eq!(c.s, Some(4));
    let err = loja_certificate(&gens(&r, &["x + y^2", "y^2", "z^3"]), &[], 2, &lim()).unwrap_err();
    assert!(matches!(err, Error::ReductionRequired(_)));
}

#[test]
fn cramer_identity_on_random_arcs() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for (r, f) in mprimary_corpus() {
        for _ in 0..25 {
            let a = random_arc(&mut rng, r.n());
            assert_eq!(arc_report(&f, &a, None).unwrap().cramer_ok, Some(true), "{a}");
        }
    }
}

#[test]
fn lower_bound_holds_along_random_arcs() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(12);
    for (r, f) in mprimary_corpus() {
        let jd = jacobian_data(&f).unwrap();
        if jd.rank0 != 0 {
            continue;
        }
        let arcs: Vec<Curve> = (0..25).map(|_| random_arc(&mut rng, r.n())).collect();
        let c = loja_certificate(&f, &arcs, 2, &lim()).unwrap();
        let theta = c.theta_lb.unwrap();
        for a in &arcs {
            let (_, oj) = compose_arc(&jd.det, a).unwrap();
            let d = f.iter().filter_map(|g| compose_arc(g, a).unwrap().1).min();
            if let (Some(oj), Some(d)) = (oj, d) {
                assert!(BigRational::from_integer(oj.into()) >= &theta * BigRational::from_integer(d.into()));
            }
        }
    }
}

#[test]
fn hessian_examples() {
    let r = ring(&["x", "y", "z"]);
    for k in 2..=5 {
        let f = p(&r, &format!("x^2 + y^2 + z^{k}"));
        let v = hessian_criterion(&f, &lim()).unwrap();
        assert!(v.isolated);
        assert!(!v.hessian_in_jacobian_ideal);
        assert_eq!(v.jacobian_ideal_closed, ClosureCheck::Closed(true));
        assert_eq!(v.milnor, Some(k as usize - 1));
    }
    assert_eq!(hessian_det(&p(&r, "x^2 + y^2 + z^3")), p(&r, "24*z"));

    let r2 = ring(&["x", "y"]);
    let v = hessian_criterion(&p(&r2, "(x + y)^2"), &lim()).unwrap();
    assert!(!v.isolated);
    assert!(v.hessian_in_jacobian_ideal);
    assert!(v.hessian.is_zero());
    assert_eq!(v.jacobian_ideal_closed, ClosureCheck::NotComputed);

    let v = hessian_criterion(&p(&r2, "x^2 + y^2"), &lim()).unwrap();
    assert!(v.isolated);
    assert_eq!(v.hessian, p(&r2, "4"));
    assert!(!v.hessian_in_jacobian_ideal);

    let v = hessian_criterion(&p(&r2, "x^3 + x*y^3"), &lim()).unwrap();
    assert!(v.isolated);
    assert_eq!(v.jacobian_ideal_closed, ClosureCheck::NotComputed);
}

fn exps_strategy() -> impl Strategy<Value = Vec<Vec<u32>>> {
    (1u32..6, 1u32..6, prop::collection::vec((0u32..5, 0u32..5), 0..3)).prop_map(|(a, b, mixed)| {
        let mut e = vec![vec![a, 0], vec![0, b]];
        e.extend(mixed.into_iter().filter(|(x, y)| x + y > 0).map(|(x, y)| vec![x, y]));
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn newton_polyhedron_soundness(exps in exps_strategy(), a in (0u32..7, 0u32..7)) {
        let np = NewtonPolyhedron::new(2, exps.clone()).unwrap();
        let one = BigRational::from_integer(1.into());
        for e in &exps {
            prop_assert!(np.samuel(e) >= one);
        }
        for f in np.facets() {
            prop_assert!(np.exponents().iter().any(|e| f.value(e) == f.rhs));
        }
        let a = [a.0, a.1];
        let exact = np.samuel(&a);
        prop_assert!(brute_samuel_lower(&exps, &a, 4) <= exact);
        // monomial arcs along facet normals realize the minimum
        let r = ring(&["x", "y"]);
        let f: Vec<Polynomial> = exps
            .iter()
            .map(|e| p(&r, &format!("x^{}*y^{}", e[0], e[1])))
            .collect();
        let u = p(&r, &format!("x^{}*y^{}", a[0], a[1]));
        let arcs: Vec<Curve> = np
            .facets()
            .iter()
            .map(|fc| monomial_arc(&fc.normal.iter().map(|l| u32::try_from(l).unwrap()).collect::<Vec<_>>()))
            .collect();
        let b = samuel_bounds(&f, &u, &arcs, 2, &lim()).unwrap();
        prop_assert_eq!(b.upper, Extended::Finite(exact.clone()));
        prop_assert!(b.lower <= Extended::Finite(exact));
    }
}
