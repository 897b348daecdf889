use anyhow::{bail, Context};
use serde::Serialize;

use fwe_core::homopoly::{parse_hompoly, weight_profile};
use fwe_core::zeta::{rh_check_with, zeta_polynomial, RhOptions, RhReport, ZetaPolyJson, DEFAULT_TOLERANCE};
use fwe_core::{Family, Rational, ZetaPoly};

use crate::output::{json, parse_family, parse_q, sign_text, Format, Outcome, Status};

#[derive(clap::Args)]
pub struct Args {
    /// Enumerator in text form, e.g. "x^2 + 1/3*y^2".
    #[arg(long, conflicts_with = "family")]
    poly: Option<String>,
    #[arg(short, value_parser = parse_q)]
    q: Option<Rational>,
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    /// Use the extremal enumerator of degree n (the only family input).
    #[arg(long)]
    extremal: bool,
    #[arg(short)]
    n: Option<usize>,
    /// Locate the roots and compare their moduli with 1/sqrt(q).
    #[arg(long)]
    rh: bool,
    #[command(flatten)]
    rh_opts: RhArgs,
}

#[derive(clap::Args, Clone, Copy)]
pub struct RhArgs {
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Starting working precision of the root finder, in bits.
    #[arg(long, env = "FWE_PRECISION", default_value_t = 128)]
    pub precision: u32,
}

impl RhArgs {
    pub fn options(&self) -> RhOptions {
        RhOptions {
            tolerance: self.tolerance,
            precision_bits: self.precision,
            ..RhOptions::default()
        }
    }
}

/// Root check of `z`, treating a constant polynomial as a vacuous pass.
pub fn rh_of(z: &ZetaPoly, opts: &RhOptions) -> fwe_core::Result<Option<RhReport>> {
    if z.degree() == 0 {
        return Ok(None);
    }
    rh_check_with(&z.poly, &z.q, opts).map(Some)
}

#[derive(Serialize)]
struct ZetaJson {
    zeta: ZetaPolyJson,
    d_perp: Option<usize>,
    rh: Option<RhReport>,
}

pub fn run(a: &Args, format: Format) -> anyhow::Result<Outcome> {
    let (w, q, conjecture) = match (&a.poly, a.family) {
        (Some(text), _) => {
            let Some(q) = a.q.clone() else { bail!("--poly needs -q") };
            (parse_hompoly(text).context("parsing --poly")?, q, false)
        }
        (None, Some(f)) => {
            let Some(n) = a.n else { bail!("--family needs -n") };
            let spec = f.spec();
            if a.q.as_ref().is_some_and(|q| q != &spec.q) {
                bail!(
                    "-q {} does not match family {} (q = {})",
                    a.q.as_ref().unwrap(),
                    f,
                    spec.q
                );
            }
            (spec.extremal(n)?.poly, spec.q, true)
        }
        (None, None) => bail!("give --poly with -q, or --family with -n"),
    };
    let z = zeta_polynomial(&w, &q)?;
    let d_perp = weight_profile(&w, &q)?.d_perp;
    let rh = if a.rh { rh_of(&z, &a.rh_opts.options())? } else { None };
    let rh_failed = a.rh && rh.as_ref().is_some_and(|r| !r.pass);
    let status = match (rh_failed, conjecture) {
        (false, _) => Status::Pass,
        (true, true) => Status::ConjectureFailed,
        (true, false) => Status::InvariantFailed,
    };
    let body = match format {
        Format::Json => json(&ZetaJson {
            zeta: z.to_json_value(),
            d_perp,
            rh,
        }),
        Format::Latex => format!("P(T) = {}", z.to_latex()),
        Format::Text => {
            let mut s = format!("P(T) = {z}\n");
            s += &format!(
                "q = {}, n = {}, d = {}, d_perp = {}, genus = {}, degree = {}, functional equation sign = {}",
                z.q,
                z.n,
                z.d,
                d_perp.map_or("none".into(), |d| d.to_string()),
                z.genus,
                z.degree(),
                sign_text(z.sign)
            );
            if a.rh {
                s += "\n";
                s += &match &rh {
                    None => "RH: pass (constant polynomial)".to_string(),
                    Some(r) => rh_text(r),
                };
            }
            s
        }
    };
    Ok(Outcome { body, status })
}

pub fn rh_text(r: &RhReport) -> String {
    let mut s = format!(
        "RH: {} (|T| = {:.15}, max deviation {:.3e}, max residual {:.3e}, {} bits)",
        if r.pass { "pass" } else { "FAIL" },
        r.target_modulus,
        r.max_abs_deviation,
        r.max_residual,
        r.precision_bits
    );
    for root in &r.roots {
        s += &format!("\n  {} {}", root.re, root.im);
    }
    s
}
