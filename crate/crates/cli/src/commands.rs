use std::path::Path;

use jacres_core::artin::{build_quotient, jacobian_test, ArtinAlgebra};
use jacres_core::closure::{
    arc_report, hessian_criterion, loja_certificate, samuel_bounds, samuel_monomial, NewtonPolyhedron,
};
use jacres_core::local::{containment_index, ideal_member, quotient_dimension, QuotientDim};
use jacres_core::poly::{jacobian_data, parse_arcs, parse_poly, parse_system, Arc, Polynomial, System, UniPoly};
use jacres_core::relative::{
    relative_member, theorem31_check, theorem33_probe, CoeffKind, CoeffRingSpec, RelativeQuotient,
};
use jacres_core::sharp::{nondegeneracy_check, residue_power, ResidueFunctional};
use jacres_core::{Error, Limits, Result};

use crate::report::{Item, Report};
use crate::{Common, Output};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<System> {
    parse_system(&read(path)?)
}

/// Loads a system that has no coefficient clause.
fn load_plain(path: &Path) -> Result<System> {
    let s = load(path)?;
    if s.coeff.is_some() {
        return Err(Error::InvalidInput(
            "system has a `coeff:` clause; use the `relative` subcommand".into(),
        ));
    }
    Ok(s)
}

fn load_arcs(path: &Path, s: &System) -> Result<Vec<Arc>> {
    parse_arcs(&read(path)?, s.ring.field())
}

/// `(t, t, ..., t)`.
fn diagonal(s: &System) -> Result<Arc> {
    let field = s.ring.field();
    let t = UniPoly::monomial(field, 1, field.one());
    Arc::new(vec![t; s.ring.n()])
}

fn finish(r: Report) -> Output {
    Output {
        text: r.to_text(),
        json: r.to_json(),
    }
}

/// Text output is a single headline value, JSON the full report.
fn headline(value: String, r: Report) -> Output {
    Output {
        text: value,
        json: r.to_json(),
    }
}

fn file_name(co: &Common) -> String {
    co.file.display().to_string()
}

pub fn dim(co: &Common, l: &Limits) -> Result<Output> {
    let s = load_plain(&co.file)?;
    let mut r = Report::new();
    r.put("file", file_name(co));
    match quotient_dimension(&s.generators, l)? {
        QuotientDim::Finite {
            dim,
            standard_monomials,
        } => {
            r.put("dim_finite", true).put("dim", dim);
            r.put("containment_index", containment_index(&s.generators, l)?);
            let basis: Vec<String> = standard_monomials.iter().map(|m| s.ring.fmt_monomial(m)).collect();
            r.put("standard_monomials", basis);
        }
        QuotientDim::Infinite { witness } => {
            r.put("dim_finite", false).put("dim", None::<usize>);
            r.put("free_variable", s.ring.vars()[witness].as_str());
        }
    }
    Ok(finish(r))
}

pub fn member(co: &Common, poly: &str, l: &Limits) -> Result<Output> {
    let s = load_plain(&co.file)?;
    let g = parse_poly(poly, &s.ring)?;
    let (inside, cert) = ideal_member(&g, &s.generators, l)?;
    if inside && !cert.verify(&g, &s.generators) {
        return Err(Error::Violation("membership certificate does not re-multiply".into()));
    }
    let mut r = Report::new();
    r.put("file", file_name(co)).put("poly", &g).put("member", inside);
    if inside {
        let mut c = Report::new();
        c.put("unit", &cert.unit);
        c.put("cofactors", cert.cofactors.iter().collect::<Vec<_>>());
        r.put("certificate", c);
    } else {
        r.put("certificate", None::<Report>);
    }
    Ok(headline(inside.to_string(), r))
}

pub fn jactest(co: &Common, l: &Limits) -> Result<Output> {
    let s = load_plain(&co.file)?;
    let v = jacobian_test(&s.generators, l)?;
    let mut json = Report::new();
    json.put("dim_finite", v.dim.is_some())
        .put("dim", v.dim)
        .put("jacobian_in_ideal", v.jacobian_in_ideal)
        .put("socle_generated", v.socle_generated);
    let mut text = Report::new();
    text.put("file", file_name(co))
        .put("dim", v.dim.map_or_else(|| "positive".to_string(), |d| d.to_string()))
        .put("jacobian", &v.jacobian)
        .put("jacobian_in_ideal", v.jacobian_in_ideal);
    if let Some(cert) = &v.certificate {
        text.put("unit", &cert.unit);
        text.put("cofactors", cert.cofactors.iter().collect::<Vec<_>>());
    }
    text.put("annihilates_maximal_ideal", v.annihilates_maximal_ideal)
        .put("socle_dim", v.socle_dim)
        .put("socle_generated", v.socle_generated)
        .put("asserted", v.asserted);
    if let Some(c) = &v.char_caveat {
        text.put("caveat", c.as_str());
    }
    Ok(Output {
        text: text.to_text(),
        json: json.to_json(),
    })
}

fn algebra(co: &Common, l: &Limits) -> Result<(System, ArtinAlgebra)> {
    let s = load_plain(&co.file)?;
    let a = build_quotient(&s.generators, l)?;
    Ok((s, a))
}

pub fn socle(co: &Common, l: &Limits) -> Result<Output> {
    let (_, a) = algebra(co, l)?;
    let soc = a.socle()?;
    let basis: Vec<Polynomial> = soc.basis.iter().map(|v| a.from_coords(v)).collect();
    let mut r = Report::new();
    r.put("file", file_name(co))
        .put("dim", a.dim())
        .put("socle_dim", basis.len())
        .put("simple", soc.is_simple)
        .put("socle_basis", basis.iter().collect::<Vec<_>>());
    Ok(finish(r))
}

pub fn residue(co: &Common, poly: Option<&str>, powers: Option<&[u32]>, l: &Limits) -> Result<Output> {
    let (s, a) = algebra(co, l)?;
    let g = match poly {
        Some(p) => parse_poly(p, &s.ring)?,
        None => Polynomial::one(&s.ring),
    };
    let value = match powers {
        Some(m) => {
            if m.len() != s.generators.len() {
                return Err(Error::Arity {
                    expected: s.generators.len(),
                    found: m.len(),
                });
            }
            residue_power(&a, &g, m)?
        }
        None => a.trace_residue(&g)?,
    };
    let mut r = Report::new();
    r.put("file", file_name(co)).put("poly", &g);
    r.put("powers", powers.map(|m| m.to_vec()));
    r.put("residue", &value);
    Ok(headline(jacres_core::field::fmt_rational(&value), r))
}

pub fn pairing(co: &Common, l: &Limits) -> Result<Output> {
    let (s, a) = algebra(co, l)?;
    let rf = ResidueFunctional::new(&a)?;
    let basis = a.basis_polynomials();
    let mut probes = basis.clone();
    for f in &s.generators {
        probes.extend(basis.iter().map(|b| f.mul(b)));
    }
    let rep = nondegeneracy_check(&rf, &probes)?;
    let matrix: Vec<Item> = (0..rf.pairing.rows())
        .map(|i| Item::from(rf.pairing.row(i).iter().collect::<Vec<_>>()))
        .collect();
    let agree = rep.probes.iter().filter(|(k, m)| k == m).count();
    let mut r = Report::new();
    r.put("file", file_name(co))
        .put("basis", basis.iter().collect::<Vec<_>>())
        .put("values", rf.values.iter().collect::<Vec<_>>())
        .put("pairing", Item::List(matrix))
        .put("pairing_invertible", rep.pairing_invertible)
        .put("probes", rep.probes.len())
        .put("kernel_equals_ideal", agree)
        .put("asserted", rep.asserted);
    Ok(finish(r))
}

fn jacobian_or(s: &System, poly: Option<&str>) -> Result<Polynomial> {
    match poly {
        Some(p) => parse_poly(p, &s.ring),
        None => Ok(jacobian_data(&s.generators)?.det),
    }
}

/// Arcs from `--arcs`, or the diagonal arc when none are given.
fn arcs_or_diagonal(s: &System, path: Option<&Path>) -> Result<Vec<Arc>> {
    match path {
        Some(p) => load_arcs(p, s),
        None => Ok(vec![diagonal(s)?]),
    }
}

fn monomial_exact(gens: &[Polynomial], u: &Polynomial) -> Result<Option<jacres_core::closure::Extended>> {
    match samuel_monomial(gens, u) {
        Ok(v) => Ok(Some(v)),
        Err(Error::NonMonomial(_) | Error::Inconclusive(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn samuel(co: &Common, poly: Option<&str>, arcs: Option<&Path>, mcap: u32, l: &Limits) -> Result<Output> {
    let s = load_plain(&co.file)?;
    let u = jacobian_or(&s, poly)?;
    let arcs = arcs_or_diagonal(&s, arcs)?;
    let exact = monomial_exact(&s.generators, &u)?;
    let b = samuel_bounds(&s.generators, &u, &arcs, mcap, l)?;
    if let Some(v) = &exact {
        if *v < b.lower || *v > b.upper {
            return Err(Error::Violation(format!(
                "exact value {v} lies outside the bounds [{}, {}]",
                b.lower, b.upper
            )));
        }
    }
    let value = match &exact {
        Some(v) => v.to_string(),
        None if b.is_exact() => b.lower.to_string(),
        None => format!("[{}, {}]", b.lower, b.upper),
    };
    let mut r = Report::new();
    r.put("file", file_name(co))
        .put("poly", &u)
        .put("exact", exact.as_ref())
        .put("lower", &b.lower)
        .put("lower_power", b.lower_power)
        .put("upper", &b.upper)
        .put("upper_arc", b.upper_arc.map(|k| arcs[k].to_string()));
    Ok(headline(value, r))
}

pub fn arcs(co: &Common, path: &Path, poly: Option<&str>, l: &Limits) -> Result<Output> {
    let s = load_plain(&co.file)?;
    let u = poly.map(|p| parse_poly(p, &s.ring)).transpose()?;
    let arcs = load_arcs(path, &s)?;
    let reports = jacres_core::par::try_map(l.exec, &arcs, |a| arc_report(&s.generators, a, u.as_ref()))?;
    let asserted = s.ring.field().characteristic() == 0;
    let mut items = Vec::with_capacity(arcs.len());
    for (a, rep) in arcs.iter().zip(&reports) {
        if asserted && rep.cramer_ok == Some(false) {
            return Err(Error::Violation(format!("Cramer identity fails along {a}")));
        }
        let mut r = Report::new();
        r.put("arc", a.to_string())
            .put("orders", rep.orders.iter().map(|o| ord(*o)).collect::<Vec<_>>())
            .put("min_order", ord(rep.min_order))
            .put("jacobian_order", rep.jacobian_order.map(|o| ord(Some(o))))
            .put("cramer_ok", rep.cramer_ok);
        if let Some(t) = &rep.target {
            r.put("target_order", ord(t.order)).put("ratio", t.ratio.as_ref());
        }
        items.push(Item::Nested(r));
    }
    let mut r = Report::new();
    r.put("file", file_name(co)).put("poly", u.as_ref()).put("arcs", Item::List(items));
    Ok(finish(r))
}

/// An order along an arc; `+∞` when the composition vanishes.
fn ord(o: Option<usize>) -> Item {
    match o {
        Some(k) => k.into(),
        None => "inf".into(),
    }
}

pub fn loja(co: &Common, arcs: Option<&Path>, mcap: u32, l: &Limits) -> Result<Output> {
    let s = load_plain(&co.file)?;
    let arcs = arcs_or_diagonal(&s, arcs)?;
    let c = loja_certificate(&s.generators, &arcs, mcap, l)?;
    let vars = c.reduced.first().map(|f| f.ring().vars().to_vec()).unwrap_or_default();
    let mut r = Report::new();
    r.put("file", file_name(co))
        .put("n", c.n)
        .put("rank0", c.rank0)
        .put("case", c.case.to_string())
        .put(
            "eliminated",
            c.eliminated.iter().map(|&i| s.ring.vars()[i].as_str()).collect::<Vec<_>>(),
        )
        .put("jacobian", &c.jacobian)
        .put("s", c.s)
        .put("min_order", c.min_order)
        .put("strict", c.strict)
        .put("theta_lb", c.theta_lb.as_ref())
        .put("exact", c.exact.as_ref());
    match &c.bounds {
        Some(b) => {
            r.put("lower", &b.lower).put("upper", &b.upper);
        }
        None => {
            r.put("lower", None::<String>).put("upper", None::<String>);
        }
    }
    r.put("jacobian_in_closure", c.jacobian_in_closure);
    if c.exact.is_some() {
        let np = NewtonPolyhedron::from_generators(&c.reduced)?;
        r.put("facets", np.facets().iter().map(|f| f.display_with(&vars)).collect::<Vec<_>>());
    }
    Ok(finish(r))
}

pub fn hessian(co: &Common, l: &Limits) -> Result<Output> {
    let s = load_plain(&co.file)?;
    let [f] = s.generators.as_slice() else {
        return Err(Error::InvalidInput(format!(
            "hessian expects a single `f:` line, found {}",
            s.generators.len()
        )));
    };
    let v = hessian_criterion(f, l)?;
    let mut r = Report::new();
    r.put("file", file_name(co))
        .put("f", f)
        .put("isolated", v.isolated)
        .put("milnor", v.milnor)
        .put("hessian", &v.hessian)
        .put("hessian_in_jacobian_ideal", v.hessian_in_jacobian_ideal)
        .put("jacobian_ideal_closed", v.jacobian_ideal_closed.to_string())
        .put("asserted", v.asserted);
    Ok(finish(r))
}

pub fn relative(
    co: &Common,
    poly: Option<&str>,
    witnesses: &[String],
    precision: Option<u32>,
    l: &Limits,
) -> Result<Output> {
    let s = load(&co.file)?;
    let mut spec = CoeffRingSpec::from_system(&s, l)?;
    if let Some(n) = precision {
        if n == 0 {
            return Err(Error::InvalidInput("precision must be positive".into()));
        }
        spec = spec.with_precision(n);
    }
    let witnesses: Vec<Polynomial> = witnesses.iter().map(|w| parse_poly(w, &s.ring)).collect::<Result<_>>()?;
    let mut r = Report::new();
    r.put("file", file_name(co)).put("kind", spec.kind().to_string());
    if spec.kind() == CoeffKind::DomainPolynomial {
        r.put("precision", spec.precision());
    }
    match RelativeQuotient::new(&s.generators, &spec, l) {
        Ok(q) => {
            r.put("free", true)
                .put("rank", q.rank())
                .put("trace_of_one", &q.trace(&Polynomial::one(&s.ring))?);
        }
        Err(Error::NotFree(why)) => {
            r.put("free", false)
                .put("rank", None::<usize>)
                .put("trace_of_one", None::<String>)
                .put("not_free", why);
        }
        Err(e) => return Err(e),
    }
    let t31 = theorem31_check(&s.generators, &spec, &witnesses, l)?;
    let mut a = Report::new();
    a.put("jacobian", &t31.jacobian)
        .put("jacobian_in_ideal", t31.jacobian_in_ideal)
        .put(
            "witnesses",
            t31.witnesses
                .iter()
                .map(|w| {
                    let mut x = Report::new();
                    x.put("witness", &w.witness)
                        .put("power", w.power)
                        .put("jacobian_times_witness_in_ideal", w.jacobian_times_witness_in_ideal);
                    x
                })
                .collect::<Vec<_>>(),
        )
        .put("status", t31.status.to_string())
        .put("asserted", t31.asserted);
    r.put("theorem31", a);
    if spec.kind() == CoeffKind::DomainPolynomial {
        r.put("theorem33", None::<Report>);
    } else {
        let t33 = theorem33_probe(&s.generators, &spec, l)?;
        let mut b = Report::new();
        b.put("artinian", t33.artinian)
            .put("gorenstein", t33.gorenstein)
            .put("jacobian", &t33.jacobian)
            .put("jacobian_in_ideal", t33.jacobian_in_ideal)
            .put("status", t33.status.to_string());
        r.put("theorem33", b);
    }
    if let Some(p) = poly {
        let g = parse_poly(p, &s.ring)?;
        let (inside, _) = relative_member(&g, &s.generators, &spec, l)?;
        r.put("poly", &g).put("member", inside);
    }
    Ok(finish(r))
}
