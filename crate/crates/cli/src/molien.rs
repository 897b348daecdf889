use serde::Serialize;

use fwe_core::homopoly::latex_univariate;
use fwe_core::matgroup::{molien_series, NamedGroup, RationalFunction};

use crate::output::{json, Format, Outcome, Status};

#[derive(clap::Args)]
pub struct Args {
    /// g1-, g4-, g43- or g43.
    #[arg(long)]
    group: String,
    /// Number of series coefficients to list.
    #[arg(long, default_value_t = 25)]
    terms: usize,
}

#[derive(Serialize)]
struct MolienJson {
    group: String,
    order: usize,
    expected_order: usize,
    series: String,
    closed_form: String,
    agrees: bool,
    coefficients: Vec<String>,
}

fn closed_form_text(a: usize, b: usize) -> String {
    format!("1/((1 - λ^{a})(1 - λ^{b}))")
}

pub fn run(a: &Args, format: Format) -> anyhow::Result<Outcome> {
    let g = NamedGroup::from_name(&a.group)?;
    let group = g.closure()?;
    let m = molien_series(&group)?;
    let (da, db) = g.molien_degrees();
    let agrees = m.same_as(&RationalFunction::inverse_product(&[da, db]));
    let ok = agrees && group.order() == g.expected_order();
    let coefficients: Vec<String> = m.series(a.terms).iter().map(ToString::to_string).collect();
    let body = match format {
        Format::Json => json(&MolienJson {
            group: g.name().into(),
            order: group.order(),
            expected_order: g.expected_order(),
            series: m.to_string(),
            closed_form: closed_form_text(da, db),
            agrees,
            coefficients,
        }),
        Format::Text => format!(
            "group {}: order {}\nMolien series: {}\nclosed form {}: {}\ncoefficients: {}",
            g.name(),
            group.order(),
            m,
            closed_form_text(da, db),
            if agrees { "agrees" } else { "DIFFERS" },
            coefficients.join(", ")
        ),
        Format::Latex => format!(
            "\\frac{{{}}}{{{}}} = \\frac{{1}}{{(1-\\lambda^{{{da}}})(1-\\lambda^{{{db}}})}}",
            latex_univariate(m.num.coeffs(), "\\lambda"),
            latex_univariate(m.den.coeffs(), "\\lambda")
        ),
    };
    Ok(Outcome {
        body,
        status: if ok { Status::Pass } else { Status::InvariantFailed },
    })
}
