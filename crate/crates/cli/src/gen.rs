use anyhow::{bail, Context};
use serde::Serialize;

use fwe_core::families::{BasisElem, BoundStatus, Generator};
use fwe_core::homopoly::{parse_hompoly, HomPolyJson};
use fwe_core::{Family, HomPoly, Rational};

use crate::output::{generator_labels, json, latex_labels, parse_family, parse_q, Format, Outcome};

#[derive(clap::Args)]
pub struct Args {
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    #[arg(short)]
    n: Option<usize>,
    /// The extremal enumerator of degree n (default when a family is given).
    #[arg(long, conflicts_with_all = ["basis", "expand"])]
    extremal: bool,
    /// All generator products of degree n with the family parity.
    #[arg(long, conflicts_with = "expand")]
    basis: bool,
    /// Coordinates of a polynomial over the family basis.
    #[arg(long, value_name = "POLY")]
    expand: Option<String>,
    /// A named generator: phi4, phi3, phi6, w2, wh8, w12, w12p.
    #[arg(long, conflicts_with = "family")]
    name: Option<String>,
    /// Parameter of the w2 generator.
    #[arg(short, value_parser = parse_q)]
    q: Option<Rational>,
}

fn label(l: usize, m: usize, (even, odd): (&str, &str), sep: &str) -> String {
    let part = |g: &str, e: usize| match e {
        0 => None,
        1 => Some(g.to_string()),
        _ => Some(format!("{g}^{e}")),
    };
    let parts: Vec<_> = [part(even, l), part(odd, m)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(sep)
    }
}

#[derive(Serialize)]
struct ProductJson {
    l: usize,
    m: usize,
    label: String,
    poly: HomPolyJson,
}

fn products_json(f: Family, basis: &[BasisElem]) -> Vec<ProductJson> {
    basis
        .iter()
        .map(|b| ProductJson {
            l: b.l,
            m: b.m,
            label: label(b.l, b.m, generator_labels(f), " * "),
            poly: HomPolyJson::from(&b.poly),
        })
        .collect()
}

fn poly_outcome(p: &HomPoly, format: Format) -> Outcome {
    Outcome::pass(match format {
        Format::Text => p.to_string(),
        Format::Json => json(&HomPolyJson::from(p)),
        Format::Latex => p.to_latex(),
    })
}

pub fn run(a: &Args, format: Format) -> anyhow::Result<Outcome> {
    if let Some(name) = &a.name {
        let g = Generator::from_name(name, a.q.as_ref())?;
        return Ok(poly_outcome(&g.poly(), format));
    }
    let Some(family) = a.family else {
        bail!("give --family with -n, or --name")
    };
    let spec = family.spec();
    if let Some(text) = &a.expand {
        let f = parse_hompoly(text).context("parsing --expand")?;
        let coords = spec.expand(&f)?;
        let basis = spec.basis(f.degree());
        return Ok(Outcome::pass(expansion(family, &coords, &basis, format)));
    }
    let Some(n) = a.n else {
        bail!("-n is required with --family")
    };
    if a.basis {
        let basis = spec.basis(n);
        if basis.is_empty() {
            return Err(fwe_core::Error::EmptyBasis {
                family: family.to_string(),
                degree: n,
            }
            .into());
        }
        let body = match format {
            Format::Text => basis
                .iter()
                .map(|b| format!("{}: {}", label(b.l, b.m, generator_labels(family), " * "), b.poly))
                .collect::<Vec<_>>()
                .join("\n"),
            Format::Json => json(&products_json(family, &basis)),
            Format::Latex => basis
                .iter()
                .map(|b| format!("{} = {}", label(b.l, b.m, latex_labels(family), " "), b.poly.to_latex()))
                .collect::<Vec<_>>()
                .join(" \\\\\n"),
        };
        return Ok(Outcome::pass(body));
    }
    let e = spec.extremal(n)?;
    if format != Format::Json {
        return Ok(poly_outcome(&e.poly, format));
    }
    #[derive(Serialize)]
    struct ExtremalJson {
        family: String,
        n: usize,
        d: usize,
        bound_proven: bool,
        coords: Vec<String>,
        basis: Vec<ProductJson>,
        poly: HomPolyJson,
    }
    Ok(Outcome::pass(json(&ExtremalJson {
        family: family.cli_name().into(),
        n,
        d: e.d(),
        bound_proven: e.bound.status == BoundStatus::Proven,
        coords: e.coords.iter().map(ToString::to_string).collect(),
        basis: products_json(family, &e.basis),
        poly: HomPolyJson::from(&e.poly),
    })))
}

fn expansion(family: Family, coords: &[Rational], basis: &[BasisElem], format: Format) -> String {
    match format {
        Format::Text => coords
            .iter()
            .zip(basis)
            .map(|(c, b)| format!("{c}\t{}", label(b.l, b.m, generator_labels(family), " * ")))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            #[derive(Serialize)]
            struct Coord {
                coeff: String,
                l: usize,
                m: usize,
                label: String,
            }
            let v: Vec<_> = coords
                .iter()
                .zip(basis)
                .map(|(c, b)| Coord {
                    coeff: c.to_string(),
                    l: b.l,
                    m: b.m,
                    label: label(b.l, b.m, generator_labels(family), " * "),
                })
                .collect();
            json(&v)
        }
        Format::Latex => {
            let terms: Vec<String> = coords
                .iter()
                .zip(basis)
                .filter(|(c, _)| c.numer().bits() > 0)
                .map(|(c, b)| format!("{} {}", latex_rational(c), label(b.l, b.m, latex_labels(family), " ")))
                .collect();
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        let sign = if c < &Rational::from_integer(0.into()) { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", c.numer().magnitude(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(label(4, 1, ("W", "phi4"), " * "), "W^4 * phi4");
        assert_eq!(label(0, 3, ("W", "phi4"), " * "), "phi4^3");
        assert_eq!(label(0, 0, ("W", "phi4"), " * "), "1");
    }

    #[test]
    fn latex_fractions() {
        assert_eq!(latex_rational(&fwe_core::scalar::rat(-1, 8)), "-\\frac{1}{8}");
        assert_eq!(latex_rational(&fwe_core::scalar::int(3)), "3");
    }
}
