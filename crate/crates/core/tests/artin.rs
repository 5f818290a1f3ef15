mod common;

use common::*;
use jacres_core::artin::*;
use jacres_core::field::Field;
use jacres_core::linalg::Matrix;
use jacres_core::local::macaulay_dimension;
use jacres_core::poly::Polynomial;
use jacres_core::{Error, Limits};
use num_traits::Zero;
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn quotient_examples() {
    let r = ring(&["x", "y"]);
    let a = build_quotient(&gens(&r, &["x^2", "y^3"]), &lim()).unwrap();
    let shown: Vec<String> = a.basis().iter().map(|m| r.fmt_monomial(m)).collect();
    assert_eq!(shown, ["1", "x", "y", "x*y", "y^2", "x*y^2"]);
    assert_eq!(build_quotient(&gens(&r, &["x", "y"]), &lim()).unwrap().dim(), 1);
    assert!(matches!(
        build_quotient(&gens(&r, &["x", "x*y"]), &lim()),
        Err(Error::InfiniteQuotient(v)) if v == "y"
    ));
}

#[test]
fn mult_matrix_examples() {
    let r = ring(&["x", "y"]);
    let a = build_quotient(&gens(&r, &["x^2", "y^3"]), &lim()).unwrap();
    let op = a.mult_matrix(&p(&r, "x")).unwrap();
    // basis order 1, x, y, xy, y^2, xy^2
    let f = Field::Rationals;
    let mut expect = Matrix::zeros(&f, 6, 6);
    expect.set(1, 0, f.one());
    expect.set(3, 2, f.one());
    expect.set(5, 4, f.one());
    assert_eq!(op.matrix, expect);
    assert!(op.is_nilpotent());
    assert!(a.mult_matrix(&p(&r, "1")).unwrap().matrix.is_identity());
    assert!(a.mult_matrix(&p(&r, "y^3")).unwrap().matrix.is_zero());
    assert!(!a.mult_matrix(&p(&r, "1 + x")).unwrap().is_nilpotent());
}

#[test]
fn trace_examples() {
    let r = ring(&["x", "y"]);
    let a = build_quotient(&gens(&r, &["x^2", "y^3"]), &lim()).unwrap();
    assert_eq!(a.trace_residue(&p(&r, "1")).unwrap(), Field::Rationals.from_int(6));
    assert!(a.trace_residue(&p(&r, "x")).unwrap().is_zero());
    let b = build_quotient(&gens(&r, &["x^4", "y^3"]), &lim()).unwrap();
    assert_eq!(b.trace_residue(&p(&r, "1")).unwrap(), Field::Rationals.from_int(12));
}

#[test]
fn socle_examples() {
    let r = ring(&["x", "y"]);
    let a = build_quotient(&gens(&r, &["x^2", "y^3"]), &lim()).unwrap();
    let s = a.socle().unwrap();
    assert!(s.is_simple);
    assert_eq!(a.from_coords(&s.basis[0]), p(&r, "x*y^2"));
    let b = build_quotient(&gens(&r, &["x", "y"]), &lim()).unwrap();
    assert_eq!(b.from_coords(&b.socle().unwrap().basis[0]), p(&r, "1"));
    let c = build_quotient(&gens(&r, &["x^2", "x*y", "y^2"]), &lim()).unwrap();
    let s = c.socle().unwrap();
    assert!(!s.is_simple);
    assert_eq!(s.basis.len(), 2);
    assert!(c.in_socle(&p(&r, "x")).unwrap() && c.in_socle(&p(&r, "y")).unwrap());
}

#[test]
fn jacobian_test_examples() {
    let r = ring(&["x", "y"]);
    let v = jacobian_test(&gens(&r, &["x^2", "y^3"]), &lim()).unwrap();
    assert!(!v.dim_positive() && !v.jacobian_in_ideal);
    assert_eq!(v.socle_generated, Some(true));
    assert_eq!(v.jacobian, p(&r, "6*x*y^2"));

    let f = gens(&r, &["x", "x*y"]);
    let v = jacobian_test(&f, &lim()).unwrap();
    assert!(v.dim_positive() && v.jacobian_in_ideal);
    assert!(v.certificate.unwrap().verify(&p(&r, "x"), &f));

    let (_, f2) = system("ring: F2[x,y]\nf: x^2 + y\nf: y^2");
    let v = jacobian_test(&f2, &lim()).unwrap();
    assert_eq!(v.dim, Some(4));
    assert!(v.jacobian.is_zero() && v.jacobian_in_ideal);
    assert!(v.char_caveat.is_some() && !v.asserted);

    assert_eq!(jacobian_test(&gens(&r, &["x + 1", "y"]), &lim()).unwrap_err(), Error::UnitIdeal);
}

#[test]
fn corpus_invariants() {
    for (r, f) in mprimary_corpus() {
        let a = build_quotient(&f, &lim()).unwrap();
        assert_eq!(a.dim(), macaulay_dimension(&f, &lim()).unwrap());
        let tr = a.trace_residue(&Polynomial::one(&r)).unwrap();
        assert_eq!(tr, a.field().from_usize(a.dim()));
        let v = jacobian_test(&f, &lim()).unwrap();
        assert!(v.asserted && !v.jacobian_in_ideal);
        assert_eq!(v.socle_generated, Some(true));
        let xs: Vec<_> = (0..r.n()).map(|i| a.mult_matrix(&Polynomial::var(&r, i)).unwrap().matrix).collect();
        for i in 0..xs.len() {
            for j in 0..xs.len() {
                assert_eq!(xs[i].mul(&xs[j]), xs[j].mul(&xs[i]));
            }
        }
    }
}

#[test]
fn trace_is_independent_of_variable_order() {
    let r = ring(&["x", "y"]);
    let swapped = ring(&["y", "x"]);
    let f = gens(&r, &["x^2 - y^3", "x*y"]);
    let g: Vec<Polynomial> = f.iter().map(|p| p.rename(&swapped, &[1, 0])).collect();
    let a = build_quotient(&f, &lim()).unwrap();
    let b = build_quotient(&g, &lim()).unwrap();
    for probe in ["1", "x", "y^2", "3 + x*y + y^3", "x^2"] {
        let h = p(&r, probe);
        assert_eq!(a.trace_residue(&h).unwrap(), b.trace_residue(&h.rename(&swapped, &[1, 0])).unwrap());
    }
}

fn poly2(r: &std::sync::Arc<jacres_core::poly::Ring>, terms: &[(u32, u32, i64)]) -> Polynomial {
    let f = Field::Rationals;
    Polynomial::from_terms(r, terms.iter().map(|&(a, b, c)| (jacres_core::poly::Monomial::new(vec![a, b]), f.from_int(c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn trace_linear_and_nilpotent_traces_vanish(
        which in 0usize..9,
        g in prop::collection::vec((0u32..4, 0u32..4, -3i64..4), 0..4),
        h in prop::collection::vec((0u32..4, 0u32..4, -3i64..4), 0..4),
        c in -3i64..4,
    ) {
        let (r, f) = mprimary_corpus().swap_remove(which);
        let a = build_quotient(&f, &lim()).unwrap();
        let (g, h) = (poly2(&r, &g), poly2(&r, &h));
        let fld = a.field().clone();
        let cc = fld.from_int(c);
        let lhs = a.trace_residue(&g.scale(&cc).add(&h)).unwrap();
        let rhs = fld.add(&fld.mul(&cc, &a.trace_residue(&g).unwrap()), &a.trace_residue(&h).unwrap());
        prop_assert_eq!(lhs, rhs);
        let g0 = g.sub(&Polynomial::constant(&r, g.constant_term()));
        prop_assert!(a.trace_residue(&g0.mul(&h)).unwrap().is_zero());
    }
}
