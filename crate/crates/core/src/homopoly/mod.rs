//! Homogeneous bivariate polynomials.
//!
//! A [`HomPoly`] of degree `n` stores `n + 1` coefficients; `coeffs[i]`
//! multiplies `x^(n-i) y^i`, so the index is the weight. The zero polynomial
//! keeps its degree, which keeps degree bookkeeping of differential
//! operators total.

mod matrix;
mod text;

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use matrix::{act_matrix, macwilliams, macwilliams_rational, transform_sign, Mat2};
pub use text::{format_terms, latex_univariate, parse_hompoly, HomPolyJson};

use crate::error::{Error, Result};
use crate::scalar::{int, QuadElem, Rational, Scalar};
use crate::upoly::UPoly;

#[derive(Clone, PartialEq, Debug)]
pub struct HomPoly<S = Rational> {
    degree: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> HomPoly<S> {
    /// Panics unless `coeffs.len() == degree + 1`.
    pub fn new(degree: usize, coeffs: Vec<S>) -> Self {
        assert_eq!(
            coeffs.len(),
            degree + 1,
            "a degree-{degree} form needs {} coefficients",
            degree + 1
        );
        HomPoly { degree, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        HomPoly {
            degree,
            coeffs: vec![S::zero(); degree + 1],
        }
    }

    pub fn one() -> Self {
        HomPoly {
            degree: 0,
            coeffs: vec![S::one()],
        }
    }

    /// `c · x^(degree-ydeg) · y^ydeg`.
    pub fn monomial(c: S, degree: usize, ydeg: usize) -> Self {
        assert!(ydeg <= degree);
        let mut p = Self::zero(degree);
        p.coeffs[ydeg] = c;
        p
    }

    pub fn x() -> Self {
        Self::monomial(S::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(S::one(), 1, 1)
    }

    /// `a·x + b·y`.
    pub fn linear(a: S, b: S) -> Self {
        Self::new(1, vec![a, b])
    }

    pub fn from_i64(degree: usize, coeffs: &[i64]) -> Self {
        Self::new(degree, coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `x^(n-i) y^i`.
    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, c: S) {
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(y, x)`.
    pub fn swap_xy(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        HomPoly {
            degree: self.degree,
            coeffs: c,
        }
    }

    /// Indices `i` with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }

    /// `f(1, t)` as a univariate polynomial.
    pub fn dehomogenize(&self) -> UPoly<S> {
        UPoly::new(self.coeffs.clone())
    }

    /// Largest radicand among the coefficients (1 when all are rational).
    pub fn radicand(&self) -> u64 {
        self.coeffs.iter().map(Scalar::radicand).max().unwrap_or(1)
    }

    pub fn to_quad(&self) -> HomPoly<QuadElem> {
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(Scalar::to_quad).collect(),
        }
    }

    /// Exact conversion to rational coefficients; fails on any surd.
    pub fn to_rational(&self) -> Result<HomPoly<Rational>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.to_rational().ok_or_else(|| Error::Irrational(c.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(HomPoly {
            degree: self.degree,
            coeffs,
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.degree != rhs.degree {
            return Err(Error::Degree(format!(
                "cannot add degree {} and {}",
                self.degree, rhs.degree
            )));
        }
        Ok(self + rhs)
    }
}

fn check_same_degree<S>(a: &HomPoly<S>, b: &HomPoly<S>) {
    assert_eq!(a.degree, b.degree, "adding forms of different degree");
}

impl<S: Scalar> Add for &HomPoly<S> {
    type Output = HomPoly<S>;
    fn add(self, rhs: Self) -> HomPoly<S> {
        check_same_degree(self, rhs);
        HomPoly {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<S: Scalar> Sub for &HomPoly<S> {
    type Output = HomPoly<S>;
    fn sub(self, rhs: Self) -> HomPoly<S> {
        check_same_degree(self, rhs);
        HomPoly {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<S: Scalar> Mul for &HomPoly<S> {
    type Output = HomPoly<S>;
    fn mul(self, rhs: Self) -> HomPoly<S> {
        let mut out = HomPoly::<S>::zero(self.degree + rhs.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &HomPoly<S> {
    type Output = HomPoly<S>;
    fn neg(self) -> HomPoly<S> {
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<S: Scalar> Add for HomPoly<S> {
    type Output = HomPoly<S>;
    fn add(self, rhs: Self) -> HomPoly<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for HomPoly<S> {
    type Output = HomPoly<S>;
    fn sub(self, rhs: Self) -> HomPoly<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for HomPoly<S> {
    type Output = HomPoly<S>;
    fn mul(self, rhs: Self) -> HomPoly<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for HomPoly<S> {
    type Output = HomPoly<S>;
    fn neg(self) -> HomPoly<S> {
        -&self
    }
}

/// Product of a range of consecutive integers, `n (n-1) ⋯ (n-k+1)`.
fn falling(n: usize, k: usize) -> BigInt {
    ((n + 1 - k)..=n).fold(BigInt::one(), |acc, v| acc * v)
}

/// `p(∂/∂x, ∂/∂y) f`: the constant-coefficient differential operator obtained
/// from `p`, applied to `f`.
pub fn diff_op<S: Scalar>(p: &HomPoly<S>, f: &HomPoly<S>) -> Result<HomPoly<S>> {
    let m = p.degree;
    let n = f.degree;
    if m > n {
        return Err(Error::Degree(format!(
            "operator degree {m} exceeds polynomial degree {n}"
        )));
    }
    let mut out = HomPoly::<S>::zero(n - m);
    for (j, pc) in p.coeffs.iter().enumerate() {
        if pc.is_zero() {
            continue;
        }
        // ∂x^(m-j) ∂y^j applied to x^(n-i) y^i
        for (i, fc) in f.coeffs.iter().enumerate() {
            if fc.is_zero() || i < j || n - i < m - j {
                continue;
            }
            let k = falling(n - i, m - j) * falling(i, j);
            let c = pc.clone() * fc.clone() * S::from_rational(Rational::from_integer(k));
            out.coeffs[i - j] = out.coeffs[i - j].clone() + c;
        }
    }
    Ok(out)
}

/// Splits off the `x`- and `y`-power factors: returns `(xpow, ypow, core)`
/// with `f = x^xpow y^ypow core(x, y)` and `core(1, t)` having a nonzero
/// constant term and full degree.
fn strip_monomial<S: Scalar>(f: &HomPoly<S>) -> Option<(usize, usize, UPoly<S>)> {
    let lo = f.support().next()?;
    let hi = f.support().last()?;
    Some((f.degree - hi, lo, UPoly::new(f.coeffs[lo..=hi].to_vec())))
}

/// Exact division `f / a`.
///
/// Returns `Ok(Some(g))` with `a·g = f`, `Ok(None)` when `a` does not divide
/// `f`, and an error when `a` is the zero polynomial.
pub fn divide_exact<S: Scalar>(a: &HomPoly<S>, f: &HomPoly<S>) -> Result<Option<HomPoly<S>>> {
    let (ax, ay, acore) = strip_monomial(a).ok_or(Error::ZeroDivisor)?;
    if a.degree > f.degree {
        return Err(Error::Degree(format!(
            "divisor degree {} exceeds {}",
            a.degree, f.degree
        )));
    }
    let deg = f.degree - a.degree;
    let Some((fx, fy, fcore)) = strip_monomial(f) else {
        return Ok(Some(HomPoly::zero(deg)));
    };
    if fx < ax || fy < ay {
        return Ok(None);
    }
    let (q, r) = fcore.div_rem(&acore);
    if !r.is_zero() {
        return Ok(None);
    }
    let mut g = HomPoly::zero(deg);
    for (k, c) in q.coeffs().iter().enumerate() {
        g.coeffs[fy - ay + k] = c.clone();
    }
    debug_assert!(&(a * &g) == f);
    Ok(Some(g))
}

/// Remainder of `f(1, t)` modulo `a(1, t)`. Zero iff `a | f`, provided
/// neither `x` nor `y` divides `a`.
pub fn dehomogenized_rem<S: Scalar>(a: &HomPoly<S>, f: &HomPoly<S>) -> Result<UPoly<S>> {
    if a.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let (_, r) = f.dehomogenize().div_rem(&a.dehomogenize());
    Ok(r)
}

/// Minimum weights and divisibility of an enumerator-shaped polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    /// Smallest `i ≥ 1` with `A_i ≠ 0`.
    pub d: usize,
    /// Same for the MacWilliams transform; `None` when the transform is a
    /// multiple of `x^n`.
    pub d_perp: Option<usize>,
    /// Largest `c` dividing every `i ≥ 1` with `A_i ≠ 0`.
    pub divisibility: usize,
}

/// Checks that `f = x^n + Σ_{i≥1} A_i x^(n-i) y^i` with some `A_i ≠ 0`.
pub fn check_enumerator_form(f: &HomPoly<Rational>) -> Result<()> {
    if f.is_zero() {
        return Err(Error::NotWeightEnumerator("zero polynomial".into()));
    }
    if !f.coeff(0).is_one() {
        return Err(Error::NotWeightEnumerator(format!(
            "x^{} coefficient is {}",
            f.degree,
            f.coeff(0)
        )));
    }
    if f.support().nth(1).is_none() {
        return Err(Error::NotWeightEnumerator("no nonzero A_i with i >= 1".into()));
    }
    Ok(())
}

pub fn weight_profile(f: &HomPoly<Rational>, q: &Rational) -> Result<WeightProfile> {
    check_enumerator_form(f)?;
    let d = f.support().find(|&i| i > 0).expect("checked above");
    let divisibility = f.support().filter(|&i| i > 0).fold(0usize, |g, i| g.gcd(&i));
    let t = macwilliams(f, q)?;
    let d_perp = t.support().find(|&i| i > 0);
    Ok(WeightProfile {
        d,
        d_perp,
        divisibility,
    })
}

/// Rising factorial `(a)_n = a (a+1) ⋯ (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, k| acc * (a + int(k as i64)))
}

#[cfg(test)]
mod tests;
