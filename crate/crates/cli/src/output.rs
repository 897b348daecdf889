use std::io::Write;
use std::path::Path;

use anyhow::Context;
use clap::ValueEnum;
use serde::Serialize;

use fwe_core::scalar::parse_rational;
use fwe_core::{Family, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// Severity of the worst failure in a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    ConjectureFailed,
    InvariantFailed,
}

pub struct Outcome {
    pub body: String,
    pub status: Status,
}

impl Outcome {
    pub fn pass(body: String) -> Self {
        Outcome {
            body,
            status: Status::Pass,
        }
    }
}

pub fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn emit(body: &str, path: Option<&Path>) -> anyhow::Result<()> {
    let mut text = body.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.cli_name()).collect();
        format!("unknown family `{s}` (expected one of {})", names.join(", "))
    })
}

pub fn parse_q(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// `a..b`, `a..=b` or a single degree.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad degree `{t}`"));
    let (a, b) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?, num(b)?)
    } else {
        let n = num(s)?;
        (n, n)
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

/// Generator labels `(even, odd)` used when listing basis products.
pub fn generator_labels(f: Family) -> (&'static str, &'static str) {
    match f {
        Family::TypeI => ("W_{2,2}", "phi4"),
        Family::TypeIV => ("W_{2,4}", "phi3"),
        Family::Q43Even | Family::Q43Odd => ("W_{2,4/3}", "phi6"),
        Family::Ozeki => ("W_H8", "W12"),
    }
}

pub fn latex_labels(f: Family) -> (&'static str, &'static str) {
    match f {
        Family::TypeI => ("W_{2,2}", "\\varphi_4"),
        Family::TypeIV => ("W_{2,4}", "\\varphi_3"),
        Family::Q43Even | Family::Q43Odd => ("W_{2,4/3}", "\\varphi_6"),
        Family::Ozeki => ("W_{\\mathcal{H}_8}", "W_{12}"),
    }
}

pub fn sign_text(s: Option<i32>) -> String {
    match s {
        Some(1) => "+1".into(),
        Some(-1) => "-1".into(),
        _ => "none".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("8..60"), Ok((8, 60)));
        assert_eq!(parse_range("8..=60"), Ok((8, 60)));
        assert_eq!(parse_range("12"), Ok((12, 12)));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn families() {
        assert_eq!(parse_family("q43-odd"), Ok(Family::Q43Odd));
        assert!(parse_family("type2").unwrap_err().contains("type1"));
    }
}
