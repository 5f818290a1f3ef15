#![allow(dead_code)]

use std::sync::Arc;

use jacres_core::field::Field;
use jacres_core::poly::{parse_arcs, parse_poly, parse_system, Arc as Curve, Polynomial, Ring, UniPoly};
use rand::Rng;

pub fn ring(vars: &[&str]) -> Arc<Ring> {
    Ring::new(vars.iter().map(|v| v.to_string()).collect(), Field::Rationals).unwrap()
}

pub fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
    parse_poly(s, r).unwrap()
}

pub fn gens(r: &Arc<Ring>, fs: &[&str]) -> Vec<Polynomial> {
    fs.iter().map(|s| p(r, s)).collect()
}

/// Ring and generators from a system text.
pub fn system(text: &str) -> (Arc<Ring>, Vec<Polynomial>) {
    let s = parse_system(text).unwrap();
    (s.ring, s.generators)
}

/// Small m-primary systems in two and three variables.
pub fn mprimary_corpus() -> Vec<(Arc<Ring>, Vec<Polynomial>)> {
    let xy = ring(&["x", "y"]);
    let xyz = ring(&["x", "y", "z"]);
    vec![
        (xy.clone(), gens(&xy, &["x^2", "y^3"])),
        (xy.clone(), gens(&xy, &["x^2", "y^2"])),
        (xy.clone(), gens(&xy, &["x^3", "y^3"])),
        (xy.clone(), gens(&xy, &["x^4", "y^3"])),
        (xy.clone(), gens(&xy, &["x + y", "x - y"])),
        (xy.clone(), gens(&xy, &["x^2 + y^2", "x*y"])),
        (xy.clone(), gens(&xy, &["x^2 - y^3", "x*y"])),
        (xy.clone(), gens(&xy, &["x - x^2", "y - y^2"])),
        (xy.clone(), gens(&xy, &["x", "y^2"])),
        (xyz.clone(), gens(&xyz, &["x^2", "y^2", "z^2"])),
        (xyz.clone(), gens(&xyz, &["x + 2*y + z", "y - z", "z"])),
    ]
}

/// An arc from its components, e.g. `arc("t^2, t^3")`.
pub fn arc(components: &str) -> Curve {
    parse_arcs(&format!("arc: {components}"), &Field::Rationals).unwrap().remove(0)
}

/// A random polynomial arc with small integer coefficients, degree <= 3.
pub fn random_arc<R: Rng>(rng: &mut R, n: usize) -> Curve {
    let f = Field::Rationals;
    loop {
        let comps: Vec<UniPoly> = (0..n)
            .map(|_| {
                let mut c = vec![f.zero()];
                for _ in 0..3 {
                    c.push(f.from_int(rng.gen_range(-3..=3)));
                }
                UniPoly::new(&f, c)
            })
            .collect();
        if let Ok(a) = Curve::new(comps) {
            return a;
        }
    }
}
