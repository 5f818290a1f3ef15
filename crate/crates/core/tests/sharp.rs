mod common;

use common::*;
use jacres_core::artin::build_quotient;
use jacres_core::field::Field;
use jacres_core::local::StandardBasis;
use jacres_core::poly::{jacobian_data, Polynomial};
use jacres_core::sharp::*;
use jacres_core::Limits;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn lim() -> Limits {
    Limits::default()
}

fn q(v: i64) -> jacres_core::Coeff {
    Field::Rationals.from_int(v)
}

#[test]
fn fadic_examples() {
    let r = ring(&["x"]);
    let f = gens(&r, &["x^2"]);
    let a = build_quotient(&f, &lim()).unwrap();
    let e = f_adic_expand(&a, &p(&r, "x^3"), &[2]).unwrap();
    assert!(e.coefficient(&[0]).unwrap().is_zero());
    assert_eq!(e.coefficient(&[1]).unwrap(), &p(&r, "x"));
    assert!(e.coefficient(&[2]).unwrap().is_zero());
    assert!(e.verify(&f, &lim()).unwrap());

    let f = gens(&r, &["x"]);
    let a = build_quotient(&f, &lim()).unwrap();
    for k in 0..4u32 {
        let e = f_adic_expand(&a, &p(&r, &format!("x^{k}")), &[4]).unwrap();
        for al in 0..=4u32 {
            let want = if al == k { p(&r, "1") } else { Polynomial::zero(&r) };
            assert_eq!(e.coefficient(&[al]).unwrap(), &want);
        }
    }

    let r2 = ring(&["x", "y"]);
    let f2 = gens(&r2, &["x^2 + y^3", "x*y"]);
    let a2 = build_quotient(&f2, &lim()).unwrap();
    let e = f_adic_expand(&a2, &p(&r2, "1"), &[1, 1]).unwrap();
    assert_eq!(e.coefficient(&[0, 0]).unwrap(), &p(&r2, "1"));
    assert!(e.coefficients.iter().filter(|(k, _)| k.iter().any(|&x| x > 0)).all(|(_, c)| c.is_zero()));
}

#[test]
fn fadic_tail_and_generator_order() {
    let r = ring(&["x", "y"]);
    let f = gens(&r, &["x^2 - y^3", "x*y + y^4"]);
    let swapped = vec![f[1].clone(), f[0].clone()];
    let a = build_quotient(&f, &lim()).unwrap();
    let b = build_quotient(&swapped, &lim()).unwrap();
    let g = p(&r, "1 + x + y^2 + 3*x^3*y + x^2*y^2 - 2*y^6");
    let e = f_adic_expand(&a, &g, &[2, 1]).unwrap();
    let e2 = f_adic_expand(&b, &g, &[1, 2]).unwrap();
    assert!(e.verify(&f, &lim()).unwrap());
    assert!(e2.verify(&swapped, &lim()).unwrap());
    for (al, c) in &e.coefficients {
        assert_eq!(e2.coefficient(&[al[1], al[0]]).unwrap(), c, "alpha {al:?}");
    }
}

#[test]
fn residue_power_examples() {
    let r = ring(&["x", "y"]);
    let f = gens(&r, &["x^2", "y^3"]);
    let a = build_quotient(&f, &lim()).unwrap();
    assert_eq!(residue_power(&a, &p(&r, "1"), &[1, 1]).unwrap(), q(6));
    assert_eq!(residue_power(&a, &p(&r, "x^2"), &[2, 1]).unwrap(), q(6));
    // independent side: trace over R/(x^4, y^3)
    let b = build_quotient(&gens(&r, &["x^4", "y^3"]), &lim()).unwrap();
    assert_eq!(b.trace_residue(&p(&r, "1")).unwrap(), q(12));
}

#[test]
fn univariate_classical_residues() {
    let r = ring(&["x"]);
    let a = build_quotient(&gens(&r, &["x"]), &lim()).unwrap();
    for m in 1..=5u32 {
        for e in 0..=6u32 {
            let got = residue_power(&a, &p(&r, &format!("x^{e}")), &[m]).unwrap();
            assert_eq!(got, q(i64::from(e + 1 == m)), "a={e} m={m}");
        }
    }
}

#[test]
fn inv_b_on_corpus() {
    for (r, f) in mprimary_corpus().into_iter().take(8) {
        let a = build_quotient(&f, &lim()).unwrap();
        for m in [vec![2u32, 1], vec![1, 2], vec![2, 2]] {
            let pw: Vec<Polynomial> = f.iter().zip(&m).map(|(fi, &e)| fi.pow(e)).collect();
            let big = build_quotient(&pw, &lim()).unwrap();
            for probe in ["1", "x", "1 + y", "x*y + 2*y^2"] {
                let g = p(&r, probe);
                let mut lifted = g.clone();
                for (fi, &e) in f.iter().zip(&m) {
                    lifted = lifted.mul(&fi.pow(e - 1));
                }
                let rp = residue_power(&a, &lifted, &m).unwrap();
                let prod: i64 = m.iter().map(|&e| e as i64).product();
                assert_eq!(
                    a.field().mul(&q(prod), &rp),
                    big.trace_residue(&g).unwrap(),
                    "{f:?} m={m:?} g={probe}"
                );
            }
        }
    }
}

#[test]
fn bezoutian_examples() {
    let r = ring(&["x", "y"]);
    let a = build_quotient(&gens(&r, &["x^2", "y^3"]), &lim()).unwrap();
    let rf = residue_functional(&a).unwrap();
    for (b, v) in a.basis_polynomials().iter().zip(&rf.values) {
        let want = if *b == p(&r, "x*y^2") { 1 } else { 0 };
        assert_eq!(v, &q(want));
    }
    assert_eq!(rf.eval(&p(&r, "6*x*y^2")).unwrap(), q(6));

    let u = ring(&["x"]);
    for d in 1..=5u32 {
        let a = build_quotient(&gens(&u, &[&format!("x^{d}")]), &lim()).unwrap();
        let rf = residue_functional(&a).unwrap();
        for e in 0..d {
            assert_eq!(rf.eval(&p(&u, &format!("x^{e}"))).unwrap(), q(i64::from(e + 1 == d)));
        }
    }
    let a = build_quotient(&gens(&r, &["x", "y"]), &lim()).unwrap();
    assert_eq!(residue_functional(&a).unwrap().values, vec![q(1)]);
}

#[test]
fn nondegeneracy_examples() {
    let r = ring(&["x", "y"]);
    let a = build_quotient(&gens(&r, &["x^2", "y^3"]), &lim()).unwrap();
    let rf = residue_functional(&a).unwrap();
    let rep = nondegeneracy_check(&rf, &[p(&r, "x"), p(&r, "y^3 + x^2")]).unwrap();
    assert!(rep.pairing_invertible);
    assert_eq!(rep.probes, vec![(false, false), (true, true)]);
    assert_eq!(rf.eval(&p(&r, "x*y^2")).unwrap(), q(1));

    let a = build_quotient(&gens(&r, &["x^2", "y^2"]), &lim()).unwrap();
    let rf = residue_functional(&a).unwrap();
    assert_eq!(rf.pairing.rows(), 4);
    // basis 1, x, y, xy: pairs (1,xy) and (x,y) give 1
    let t = &rf.pairing;
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(t.get(i, j), &q(i64::from(i + j == 3)));
        }
    }
    assert!(t.inverse().is_some());
}

#[test]
fn bezoutian_structure_on_corpus() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for (r, f) in mprimary_corpus() {
        let a = build_quotient(&f, &lim()).unwrap();
        let n = r.n();
        let rf = residue_functional(&a).unwrap();
        assert!(rf.bezoutian.is_symmetric());
        // T is the inverse of the Bezoutian matrix
        assert!(rf.pairing.mul(&rf.bezoutian).is_identity());
        let rev: Vec<usize> = (0..n).rev().collect();
        let rf2 = jacres_core::sharp::ResidueFunctional::with_order(&a, &rev).unwrap();
        assert_eq!(rf.values, rf2.values);
        let j = jacobian_data(&f).unwrap().det;
        let sb = StandardBasis::new(&f, &lim()).unwrap();
        let mut probes = Vec::new();
        for _ in 0..20 {
            let g = random_poly(&mut rng, &r, 4, 3);
            assert!(rf.satisfies_identity(&g).unwrap());
            assert_eq!(rf.eval(&j.mul(&g)).unwrap(), a.trace_residue(&g).unwrap());
            probes.push(g.clone());
            // products with generators are in I
            probes.push(g.mul(&f[0]));
        }
        let rep = nondegeneracy_check(&rf, &probes).unwrap();
        assert!(rep.probes.iter().all(|(k, m)| k == m));
        assert!(rep.probes.iter().any(|(_, m)| *m));
        let _ = sb;
    }
}

pub fn random_poly(rng: &mut impl Rng, r: &std::sync::Arc<jacres_core::poly::Ring>, terms: usize, maxdeg: u32) -> Polynomial {
    let f = r.field().clone();
    let mut out = Polynomial::zero(r);
    for _ in 0..terms {
        let e: Vec<u32> = (0..r.n()).map(|_| rng.gen_range(0..=maxdeg)).collect();
        out.add_term(jacres_core::poly::Monomial::new(e), &f.from_int(rng.gen_range(-4..=4)));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inv_a_power_one_equals_trace(which in 0usize..11, seed in 0u64..1000) {
        let (r, f) = mprimary_corpus().swap_remove(which);
        let a = build_quotient(&f, &lim()).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let g = random_poly(&mut rng, &r, 4, 3);
        let ones = vec![1u32; f.len()];
        prop_assert_eq!(residue_power(&a, &g, &ones).unwrap(), a.trace_residue(&g).unwrap());
    }
}
