//! Univariate polynomials and truncated power series over an exact field.
//!
//! Used for zeta polynomials `P(T)`, Molien series in `λ`, and the
//! Taylor expansions behind the coefficient formulas of the `q = 4/3` bounds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::{Rational, Scalar};

/// Dense coefficients, `coeffs[i]` multiplies `t^i`. Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct UPoly<S = Rational> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: S, k: usize) -> Self {
        let mut v = vec![S::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn eval(&self, t: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(S::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::from_i64(i as i64))
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![S::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = r[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => a.scale(&l.inv().unwrap()),
            None => a,
        }
    }

    /// Product truncated to terms of degree `< n`.
    pub fn mul_trunc(&self, other: &Self, n: usize) -> Self {
        let mut out = vec![S::zero(); n.min(self.coeffs.len() + other.coeffs.len())];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// First `n` Taylor coefficients of `1/self` at 0. Requires a nonzero
    /// constant term.
    pub fn series_inverse(&self, n: usize) -> Option<Self> {
        let c0inv = self.coeff(0).inv()?;
        let mut out: Vec<S> = Vec::with_capacity(n);
        for k in 0..n {
            let mut s = if k == 0 { S::one() } else { S::zero() };
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                s = s - self.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(s * c0inv.clone());
        }
        Some(Self::new(out))
    }

    /// Text form in the variable `var`, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        let terms: Vec<(S, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                };
                (c.clone(), mono)
            })
            .collect();
        crate::homopoly::format_terms(&terms)
    }
}

impl<S: Scalar> Add for &UPoly<S> {
    type Output = UPoly<S>;
    fn add(self, rhs: Self) -> UPoly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Sub for &UPoly<S> {
    type Output = UPoly<S>;
    fn sub(self, rhs: Self) -> UPoly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Mul for &UPoly<S> {
    type Output = UPoly<S>;
    fn mul(self, rhs: Self) -> UPoly<S> {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        self.mul_trunc(rhs, n)
    }
}

impl<S: Scalar> Neg for &UPoly<S> {
    type Output = UPoly<S>;
    fn neg(self) -> UPoly<S> {
        UPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<S: Scalar> One for UPoly<S> {
    fn one() -> Self {
        Self::constant(S::one())
    }
}

impl<S: Scalar> Mul for UPoly<S> {
    type Output = UPoly<S>;
    fn mul(self, rhs: Self) -> UPoly<S> {
        &self * &rhs
    }
}

impl<S: Scalar> fmt::Display for UPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("T"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    type P = UPoly<Rational>;

    #[test]
    fn division_and_gcd() {
        let a = P::from_i64(&[-1, 0, 1]); // t² − 1
        let b = P::from_i64(&[1, 1]); // t + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, P::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        let c = P::from_i64(&[1, 2, 1]);
        assert_eq!(a.gcd(&c), b);
    }

    #[test]
    fn geometric_series_inverse() {
        let s = P::from_i64(&[1, -1]).series_inverse(6).unwrap();
        assert_eq!(s, P::from_i64(&[1, 1, 1, 1, 1, 1]));
        let s = P::new(vec![int(1), rat(-1, 9)]).series_inverse(3).unwrap();
        assert_eq!(s.coeff(2), rat(1, 81));
    }

    #[test]
    fn display() {
        let p = P::new(vec![int(3), int(-6), int(4)]);
        assert_eq!(p.to_string(), "4*T^2 - 6*T + 3");
        assert_eq!(P::zero().to_string(), "0");
    }
}
