//! Text, LaTeX and JSON forms of [`HomPoly`].
//!
//! Text grammar: a signed sum of terms `c*x^a*y^b`. The coefficient is a
//! rational `num/den`; a unit coefficient, the `*` separators and exponents
//! 0 and 1 may be left out. Example: `x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::HomPoly;
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Rational, Scalar};

/// Joins `(coefficient, monomial)` pairs into `a*m1 - b*m2 + ...`.
/// An empty list prints as `0`.
pub fn format_terms<S: Scalar>(terms: &[(S, String)]) -> String {
    let mut out = String::new();
    for (k, (c, mono)) in terms.iter().enumerate() {
        let neg = c.signum() < 0;
        let abs = if neg { -c.clone() } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn monomial_text(xe: usize, ye: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    [part("x", xe), part("y", ye)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl<S: Scalar> HomPoly<S> {
    fn terms(&self) -> Vec<(S, String)> {
        let n = self.degree();
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), monomial_text(n - i, i)))
            .collect()
    }
}

impl<S: Scalar> fmt::Display for HomPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(&self.terms()))
    }
}

fn latex_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_join(terms: &[(Rational, String)]) -> String {
    let mut out = String::new();
    for (k, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&latex_coeff(&abs));
        } else if abs.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&latex_coeff(&abs));
            out.push_str(mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// LaTeX for a list of rational coefficients of `var^k`, highest power first.
pub fn latex_univariate(coeffs: &[Rational], var: &str) -> String {
    let terms: Vec<(Rational, String)> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let m = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{{{k}}}"),
            };
            (c.clone(), m)
        })
        .collect();
    latex_join(&terms)
}

impl HomPoly<Rational> {
    pub fn to_latex(&self) -> String {
        let n = self.degree();
        let pow = |v: &str, e: usize| match e {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{{{e}}}"),
        };
        let terms: Vec<(Rational, String)> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), format!("{}{}", pow("x", n - i), pow("y", i))))
            .collect();
        latex_join(&terms)
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }
}

/// Parses the text grammar. All terms must share one total degree.
pub fn parse_hompoly(input: &str) -> Result<HomPoly<Rational>> {
    let mut lx = Lexer {
        s: input.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(Rational, usize, usize)> = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match lx.peek() {
            None if !first => break,
            None => return Err(Error::Parse("empty polynomial".into())),
            Some(b'+') => {
                lx.pos += 1;
            }
            Some(b'-') => {
                lx.pos += 1;
                negative = true;
            }
            Some(_) if first => {}
            Some(_) => return Err(lx.err("expected `+` or `-`")),
        }
        first = false;

        let mut coeff = Rational::one();
        let mut had_coeff = false;
        if let Some(num) = lx.digits() {
            let mut text = num.to_string();
            if lx.eat(b'/') {
                let den = lx.digits().ok_or_else(|| lx.err("expected denominator"))?;
                text = format!("{num}/{den}");
            }
            coeff = parse_rational(&text)?;
            had_coeff = true;
        }
        let (mut xe, mut ye) = (0usize, 0usize);
        let mut had_var = false;
        loop {
            let save = lx.pos;
            let star = lx.eat(b'*');
            match lx.peek() {
                Some(v @ (b'x' | b'y')) => {
                    lx.pos += 1;
                    let e = if lx.eat(b'^') {
                        lx.digits()
                            .ok_or_else(|| lx.err("expected exponent"))?
                            .parse::<usize>()
                            .map_err(|_| lx.err("exponent too large"))?
                    } else {
                        1
                    };
                    if v == b'x' {
                        xe += e;
                    } else {
                        ye += e;
                    }
                    had_var = true;
                }
                _ => {
                    if star {
                        return Err(lx.err("expected `x` or `y` after `*`"));
                    }
                    lx.pos = save;
                    break;
                }
            }
        }
        if !had_coeff && !had_var {
            return Err(lx.err("expected a term"));
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, xe, ye));
    }
    let degree = terms[0].1 + terms[0].2;
    if let Some(t) = terms.iter().find(|t| t.1 + t.2 != degree) {
        return Err(Error::Parse(format!(
            "not homogeneous: term of degree {} in a degree-{degree} polynomial",
            t.1 + t.2
        )));
    }
    let mut p = HomPoly::<Rational>::zero(degree);
    for (c, _, ye) in terms {
        let cur = p.coeff(ye).clone();
        p.set_coeff(ye, cur + c);
    }
    Ok(p)
}

impl std::str::FromStr for HomPoly<Rational> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_hompoly(s)
    }
}

/// `{"degree": n, "coeffs": ["num/den", ...]}`, indexed by `y`-exponent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomPolyJson {
    pub degree: usize,
    pub coeffs: Vec<String>,
}

impl From<&HomPoly<Rational>> for HomPolyJson {
    fn from(p: &HomPoly<Rational>) -> Self {
        HomPolyJson {
            degree: p.degree(),
            coeffs: p.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<&HomPolyJson> for HomPoly<Rational> {
    type Error = Error;
    fn try_from(j: &HomPolyJson) -> Result<Self> {
        if j.coeffs.len() != j.degree + 1 {
            return Err(Error::Parse(format!(
                "degree {} needs {} coefficients, got {}",
                j.degree,
                j.degree + 1,
                j.coeffs.len()
            )));
        }
        let coeffs = j.coeffs.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
        Ok(HomPoly::new(j.degree, coeffs))
    }
}

impl HomPoly<Rational> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&HomPolyJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: HomPolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        HomPoly::try_from(&j)
    }
}
