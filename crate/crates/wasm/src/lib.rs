//! Browser bindings. Every export returns a JSON string; the `*_json`
//! functions are the plain Rust versions used by the exports and the tests.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use fwe_core::matgroup::{molien_series, NamedGroup, RationalFunction};
use fwe_core::zeta::{rh_check_with, zeta_polynomial, RhOptions};
use fwe_core::{Family, FamilySpec};

/// Largest degree accepted from the page.
pub const MAX_DEGREE: usize = 120;

fn family_spec(family: &str, n: usize) -> Result<FamilySpec, String> {
    if n > MAX_DEGREE {
        return Err(format!("degree {n} is above the limit of {MAX_DEGREE}"));
    }
    family.parse::<Family>().map(Family::spec).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ExtremalOut {
    family: String,
    n: usize,
    d: usize,
    bound_proven: bool,
    text: String,
    latex: String,
    coeffs: Vec<String>,
}

pub fn extremal_json(family: &str, n: usize) -> Result<String, String> {
    let spec = family_spec(family, n)?;
    let e = spec.extremal(n).map_err(|e| e.to_string())?;
    let out = ExtremalOut {
        family: spec.family.cli_name().into(),
        n,
        d: e.d(),
        bound_proven: e.bound.status == fwe_core::families::BoundStatus::Proven,
        text: e.poly.to_string(),
        latex: e.poly.to_latex(),
        coeffs: e.poly.coeffs().iter().map(ToString::to_string).collect(),
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

#[derive(Serialize)]
struct RootsOut {
    family: String,
    n: usize,
    q: String,
    radius: f64,
    zeta: String,
    genus: String,
    functional_equation: Option<i32>,
    roots: Vec<[f64; 2]>,
    max_deviation: f64,
    pass: bool,
}

pub fn zeta_roots_json(family: &str, n: usize) -> Result<String, String> {
    let spec = family_spec(family, n)?;
    let e = spec.extremal(n).map_err(|e| e.to_string())?;
    let z = zeta_polynomial(&e.poly, &spec.q).map_err(|e| e.to_string())?;
    let radius = 1.0 / fwe_core::scalar::rational_to_f64(&spec.q).sqrt();
    let (roots, max_deviation, pass) = if z.degree() == 0 {
        (Vec::new(), 0.0, true)
    } else {
        let r = rh_check_with(&z.poly, &spec.q, &RhOptions::default()).map_err(|e| e.to_string())?;
        (
            r.points.iter().map(|p| [p.re, p.im]).collect(),
            r.max_abs_deviation,
            r.pass,
        )
    };
    let out = RootsOut {
        family: spec.family.cli_name().into(),
        n,
        q: spec.q.to_string(),
        radius,
        zeta: z.to_string(),
        genus: z.genus.to_string(),
        functional_equation: z.sign,
        roots,
        max_deviation,
        pass,
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

#[derive(Serialize)]
struct MolienOut {
    group: String,
    order: usize,
    series: String,
    closed_form: String,
    agrees: bool,
    coefficients: Vec<String>,
}

pub fn molien_json(group: &str, terms: usize) -> Result<String, String> {
    let g = NamedGroup::from_name(group).map_err(|e| e.to_string())?;
    let grp = g.closure().map_err(|e| e.to_string())?;
    let m = molien_series(&grp).map_err(|e| e.to_string())?;
    let (a, b) = g.molien_degrees();
    let out = MolienOut {
        group: g.name().into(),
        order: grp.order(),
        series: m.to_string(),
        closed_form: format!("1/((1 - λ^{a})(1 - λ^{b}))"),
        agrees: m.same_as(&RationalFunction::inverse_product(&[a, b])),
        coefficients: m.series(terms.min(200)).iter().map(ToString::to_string).collect(),
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Extremal enumerator of a family (`type1`, `type4`, `q43`, `q43-odd`, `ozeki`).
#[wasm_bindgen]
pub fn extremal(family: &str, n: usize) -> Result<String, JsError> {
    js(extremal_json(family, n))
}

/// Roots of the zeta polynomial of the extremal enumerator.
#[wasm_bindgen]
pub fn zeta_roots(family: &str, n: usize) -> Result<String, JsError> {
    js(zeta_roots_json(family, n))
}

/// Molien series of `g1-`, `g4-`, `g43-` or `g43`.
#[wasm_bindgen]
pub fn molien(group: &str, terms: usize) -> Result<String, JsError> {
    js(molien_json(group, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn extremal_degree_12() {
        let v = parse(extremal_json("type1", 12).unwrap());
        assert_eq!(v["text"], "x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12");
        assert_eq!(v["d"], 4);
    }

    #[test]
    fn roots_lie_on_the_circle() {
        let v = parse(zeta_roots_json("q43", 12).unwrap());
        assert_eq!(v["pass"], true);
        let r = v["radius"].as_f64().unwrap();
        assert!((r - 0.75f64.sqrt()).abs() < 1e-15);
        for z in v["roots"].as_array().unwrap() {
            let (x, y) = (z[0].as_f64().unwrap(), z[1].as_f64().unwrap());
            assert!((x.hypot(y) - r).abs() < 1e-12);
        }
        assert_eq!(v["roots"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn molien_g4() {
        let v = parse(molien_json("g4-", 7).unwrap());
        assert_eq!(v["order"], 6);
        assert_eq!(v["agrees"], true);
        let c: Vec<&str> = v["coefficients"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap())
            .collect();
        assert_eq!(c, ["1", "0", "1", "1", "1", "1", "2"]);
    }

    #[test]
    fn bad_input() {
        assert!(extremal_json("type2", 12).is_err());
        assert!(extremal_json("type1", 7).is_err());
        assert!(zeta_roots_json("type1", 1000).is_err());
        assert!(molien_json("g5", 3).is_err());
    }
}
