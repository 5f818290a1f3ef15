mod common;

use common::*;
use jacres_core::artin::build_quotient;
use jacres_core::local::Macaulay;
use jacres_core::poly::{parse_system, Polynomial, System};
use jacres_core::relative::*;
use jacres_core::{Error, Limits};

fn lim() -> Limits {
    Limits::default()
}

fn load(text: &str) -> (System, CoeffRingSpec) {
    let s = parse_system(text).unwrap();
    let a = CoeffRingSpec::from_system(&s, &lim()).unwrap();
    (s, a)
}

fn q(s: &System, text: &str) -> Polynomial {
    p(&s.ring, text)
}

/// `g ∉ I + m^N` implies `g ∉ I`.
fn outside_by_macaulay(g: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    !Macaulay::build(gens, bound, &lim()).contains(g)
}

#[test]
fn coefficient_kinds() {
    let (_, a) = load("ring: Q[x]\ncoeff: Q[u]\nf: x^2 - u");
    assert_eq!(a.kind(), CoeffKind::DomainPolynomial);
    let (_, a) = load("ring: Q[x]\ncoeff: Q[u]/(u^2)\nf: x^2");
    assert_eq!(a.kind(), CoeffKind::ArtinianQuotient);
    let (_, a) = load("ring: Q[x, y]\nf: x^2\nf: y^2");
    assert_eq!(a.kind(), CoeffKind::Field);
    let s = parse_system("ring: Q[x]\ncoeff: Q[u, v]/(u^2)\nf: x").unwrap();
    assert!(matches!(CoeffRingSpec::from_system(&s, &lim()), Err(Error::InvalidInput(_))));
}

#[test]
fn relative_member_examples() {
    let (s, a) = load("ring: Q[x]\ncoeff: Q[u]\nf: x^2 - u");
    let (inside, cert) = relative_member(&q(&s, "2*x*(x^2 - u)"), &s.generators, &a, &lim()).unwrap();
    assert!(inside);
    assert!(cert.verify(&q(&s, "2*x*(x^2 - u)"), &a.flattened(&s.generators)));

    let (s, a) = load("ring: Q[x]\ncoeff: Q[u]/(u^2)\nf: x^2");
    let g = q(&s, "2*x*u");
    assert!(!relative_member(&g, &s.generators, &a, &lim()).unwrap().0);
    assert!(outside_by_macaulay(&g, &a.flattened(&s.generators), 4));

    let (s, a) = load("ring: Q[x1, x2]\ncoeff: Q[u]/(u^2)\nf: x1\nf: u*x2");
    assert!(relative_member(&q(&s, "x1"), &s.generators, &a, &lim()).unwrap().0);
}

#[test]
fn trace_examples() {
    let (s, a) = load("ring: Q[x]\ncoeff: Q[u]\nf: x^2 - u");
    assert_eq!(trace_over_a(&s.generators, &a, &q(&s, "1"), &lim()).unwrap(), q(&s, "2"));
    assert_eq!(trace_over_a(&s.generators, &a, &q(&s, "x^2"), &lim()).unwrap(), q(&s, "2*u"));
    assert_eq!(trace_over_a(&s.generators, &a, &q(&s, "x"), &lim()).unwrap(), q(&s, "0"));
    let rq = RelativeQuotient::new(&s.generators, &a, &lim()).unwrap();
    let m = rq.matrix_over_a(&q(&s, "x^2")).unwrap();
    assert_eq!(m, vec![vec![q(&s, "u"), q(&s, "0")], vec![q(&s, "0"), q(&s, "u")]]);

    let (s, a) = load("ring: Q[x]\ncoeff: Q[u]/(u^2)\nf: x^2");
    assert_eq!(trace_over_a(&s.generators, &a, &q(&s, "u"), &lim()).unwrap(), q(&s, "2*u"));

    let (s, a) = load("ring: Q[x1, x2]\ncoeff: Q[u]/(u^2)\nf: x1\nf: u*x2");
    assert!(matches!(RelativeQuotient::new(&s.generators, &a, &lim()), Err(Error::NotFree(_))));
}

#[test]
fn freeness_dimension_count() {
    for text in [
        "ring: Q[x]\ncoeff: Q[u]/(u^2)\nf: x^2",
        "ring: Q[x]\ncoeff: Q[u]/(u^3)\nf: x^2 - u",
        "ring: Q[x1, x2]\ncoeff: Q[u]/(u^2)\nf: x1\nf: x2^2",
        "ring: Q[x, y]\ncoeff: Q[u]/(u^2)\nf: x^2 + u*y\nf: y^3 - u*x",
        "ring: Q[x]\ncoeff: Q[u]\nf: x^3 - u*x",
    ] {
        let (s, a) = load(text);
        let rq = RelativeQuotient::new(&s.generators, &a, &lim()).unwrap();
        assert_eq!(rq.dim(), rq.rank() * rq.a_dim(), "{text}");
    }
}

#[test]
fn trace_specializes_to_residue_field() {
    let cases = [
        ("ring: Q[x]\ncoeff: Q[u]/(u^2)\nf: x^2", vec!["1", "x", "u", "x + u*x", "1 + u"]),
        ("ring: Q[x]\ncoeff: Q[u]/(u^3)\nf: x^2 - u", vec!["1", "x^2", "x^3 + 2", "u*x"]),
        ("ring: Q[x, y]\ncoeff: Q[u]/(u^2)\nf: x^2 + u*y\nf: y^3 - u*x", vec!["1", "x*y^2", "x + y", "3 - u*y"]),
        ("ring: Q[x]\ncoeff: Q[u]\nf: x^2 - u", vec!["1", "x^2", "x + 1"]),
    ];
    for (text, gs) in cases {
        let (s, a) = load(text);
        let n = s.main_vars;
        let base = ring(&s.ring.vars()[..n].iter().map(String::as_str).collect::<Vec<_>>());
        let values: Vec<Polynomial> = (0..s.ring.n())
            .map(|i| if i < n { Polynomial::var(&base, i) } else { Polynomial::zero(&base) })
            .collect();
        let special: Vec<Polynomial> = s.generators.iter().map(|f| f.substitute(&base, &values)).collect();
        let alg = build_quotient(&special, &lim()).unwrap();
        for g in gs {
            let g = q(&s, g);
            let tr = trace_over_a(&s.generators, &a, &g, &lim()).unwrap();
            let tr0 = tr.substitute(&base, &values);
            let want = alg.trace_residue(&g.substitute(&base, &values)).unwrap();
            assert_eq!(tr0.constant_term(), want, "{text} {g}");
            assert!(tr0.is_constant() || tr0.is_zero());
        }
    }
}

#[test]
fn theorem31_domain_branch() {
    let (s, a) = load("ring: Q[x, y]\nf: x^2\nf: y^2");
    let r = theorem31_check(&s.generators, &a, &[q(&s, "x"), q(&s, "y")], &lim()).unwrap();
    assert!(r.asserted);
    assert_eq!(r.status, ProbeStatus::Observed);
    assert_eq!(r.jacobian, q(&s, "4*x*y"));
    assert!(r.witnesses.iter().all(|w| w.jacobian_times_witness_in_ideal));
    assert!(!r.jacobian_in_ideal);

    let (s, a) = load("ring: Q[x]\ncoeff: Q[u]\nf: x^2 - u");
    let r = theorem31_check(&s.generators, &a, &[q(&s, "x^2 - u")], &lim()).unwrap();
    assert!(r.asserted);
    assert_eq!(r.rank, Some(2));
    assert_eq!(r.status, ProbeStatus::Observed);
    assert_eq!(r.jacobian, q(&s, "2*x"));
    assert!(outside_by_macaulay(&r.jacobian, &a.flattened(&s.generators), 4));

    let bad = theorem31_check(&s.generators, &a, &[q(&s, "x")], &lim()).unwrap_err();
    assert!(matches!(bad, Error::InvalidInput(_)));
}

#[test]
fn theorem31_artinian_branch_reports() {
    let (s, a) = load("ring: Q[x1, x2]\ncoeff: Q[u]/(u^2)\nf: x1\nf: x2^2");
    let r = theorem31_check(&s.generators, &a, &[q(&s, "u")], &lim()).unwrap();
    assert!(!r.asserted);
    assert!(r.free);
    assert_eq!(r.status, ProbeStatus::NotObserved);
    assert_eq!(r.witnesses[0].power, 2);
    assert!(!r.witnesses[0].jacobian_times_witness_in_ideal);
    assert!(outside_by_macaulay(&q(&s, "2*x2*u"), &a.flattened(&s.generators), 5));
    // Trace of the nilpotent u is nonzero over A.
    assert_eq!(trace_over_a(&s.generators, &a, &q(&s, "u"), &lim()).unwrap(), q(&s, "2*u"));

    let r = theorem31_check(&s.generators, &a, &[], &lim()).unwrap();
    assert_eq!(r.witnesses.len(), 3);
    assert_eq!(r.status, ProbeStatus::NotObserved);
}

#[test]
fn theorem33_probes() {
    let (s, a) = load("ring: Q[x1, x2]\ncoeff: Q[u]/(u^2)\nf: x1\nf: x1*x2");
    let r = theorem33_probe(&s.generators, &a, &lim()).unwrap();
    assert!(!r.artinian && r.gorenstein);
    assert_eq!(r.jacobian, q(&s, "x1"));
    assert_eq!(r.status, ProbeStatus::Observed);

    let (s, a) = load("ring: Q[x, y]\nf: x\nf: x*y");
    let r = theorem33_probe(&s.generators, &a, &lim()).unwrap();
    assert_eq!(r.status, ProbeStatus::Observed);

    let (s, a) = load("ring: Q[x1, x2]\ncoeff: Q[u]/(u^2)\nf: x1\nf: u*x2");
    let r = theorem33_probe(&s.generators, &a, &lim()).unwrap();
    assert!(!r.artinian);
    assert_eq!(r.jacobian, q(&s, "u"));
    assert_eq!(r.status, ProbeStatus::NotObserved);
    assert!(outside_by_macaulay(&r.jacobian, &a.flattened(&s.generators), 4));

    let (s, a) = load("ring: Q[x1, x2]\ncoeff: Q[u]/(u^2)\nf: x1\nf: x2^2");
    assert_eq!(theorem33_probe(&s.generators, &a, &lim()).unwrap().status, ProbeStatus::NotApplicable);

    let (s, a) = load("ring: Q[x]\ncoeff: Q[u]\nf: x^2 - u");
    assert!(matches!(theorem33_probe(&s.generators, &a, &lim()), Err(Error::InvalidInput(_))));
}

#[test]
fn domain_corpus_satisfies_theorem31() {
    for text in [
        "ring: Q[x]\ncoeff: Q[u]\nf: x^2 - u",
        "ring: Q[x]\ncoeff: Q[u]\nf: x^3 - u*x",
        "ring: Q[x, y]\ncoeff: Q[u]\nf: x^2 - u*y\nf: y^2",
        "ring: Q[x, y]\nf: x^2 + y^2\nf: x*y",
        "ring: Q[x, y]\nf: x^3\nf: y^3",
    ] {
        let (s, a) = load(text);
        let r = theorem31_check(&s.generators, &a, &[], &lim()).unwrap();
        assert!(r.asserted, "{text}");
        assert_eq!(r.status, ProbeStatus::Observed, "{text}");
        assert!(!r.jacobian.is_zero());
    }
}
