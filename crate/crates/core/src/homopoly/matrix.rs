use std::ops::Mul;

use num_traits::{One, Zero};

use super::HomPoly;
use crate::error::{Error, Result};
use crate::scalar::{half_power, sqrt_rational, QuadElem, Rational, Scalar};

/// A 2×2 matrix `[[a, b], [c, d]]` acting by `f^σ(x, y) = f(ax + by, cx + dy)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2<S = QuadElem> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(S::one(), S::zero(), S::zero(), S::one())
    }

    /// `diag(1, -1)`.
    pub fn tau() -> Self {
        Mat2::new(S::one(), S::zero(), S::zero(), -S::one())
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(S::from_i64(a), S::from_i64(b), S::from_i64(c), S::from_i64(d))
    }

    pub fn det(&self) -> S {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> S {
        self.a.clone() + self.d.clone()
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Mat2::new(
            self.a.clone() * k.clone(),
            self.b.clone() * k.clone(),
            self.c.clone() * k.clone(),
            self.d.clone() * k.clone(),
        )
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv = self.det().inv()?;
        Some(Mat2::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone()).scale(&inv))
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn entries(&self) -> [&S; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn radicand(&self) -> u64 {
        self.entries().iter().map(|e| e.radicand()).max().unwrap_or(1)
    }

    pub fn to_quad(&self) -> Mat2<QuadElem> {
        Mat2::new(self.a.to_quad(), self.b.to_quad(), self.c.to_quad(), self.d.to_quad())
    }
}

impl Mat2<QuadElem> {
    /// The MacWilliams matrix `(1/√q) [[1, q-1], [1, -1]]`.
    pub fn macwilliams(q: &Rational) -> Result<Self> {
        let (r, _) = sqrt_rational(q)?;
        let s = r.inv().expect("q > 0");
        let m = Mat2::new(
            QuadElem::one(),
            QuadElem::rational(q - Rational::one()),
            QuadElem::one(),
            -QuadElem::one(),
        );
        Ok(m.scale(&s))
    }
}

impl<S: Scalar> Mul for &Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, r: Self) -> Mat2<S> {
        Mat2::new(
            self.a.clone() * r.a.clone() + self.b.clone() * r.c.clone(),
            self.a.clone() * r.b.clone() + self.b.clone() * r.d.clone(),
            self.c.clone() * r.a.clone() + self.d.clone() * r.c.clone(),
            self.c.clone() * r.b.clone() + self.d.clone() * r.d.clone(),
        )
    }
}

impl<S: Scalar> Mul for Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, r: Self) -> Mat2<S> {
        &self * &r
    }
}

fn compatible(a: u64, b: u64) -> Result<()> {
    if a == 1 || b == 1 || a == b {
        Ok(())
    } else {
        Err(Error::MixedRadicands(a, b))
    }
}

/// `f(ax + by, cx + dy)`, expanded and collected.
pub fn act_matrix<S: Scalar>(f: &HomPoly<S>, m: &Mat2<S>) -> Result<HomPoly<S>> {
    compatible(f.radicand(), m.radicand())?;
    let n = f.degree();
    let u = HomPoly::linear(m.a.clone(), m.b.clone());
    let v = HomPoly::linear(m.c.clone(), m.d.clone());
    let mut vpow = vec![HomPoly::one()];
    for k in 1..=n {
        vpow.push(&vpow[k - 1] * &v);
    }
    // Σ c_i u^(n-i) v^i, accumulated as P_k = P_(k-1) u + c_k v^k
    let mut out = HomPoly::one().scale(&f.coeffs()[0]);
    for (k, c) in f.coeffs().iter().enumerate().skip(1) {
        out = &out * &u;
        if !c.is_zero() {
            out = &out + &vpow[k].scale(c);
        }
    }
    Ok(out)
}

/// The MacWilliams transform `f^{σ_q} = q^(-n/2) f(x + (q-1)y, x - y)`.
///
/// Coefficients are rational whenever `q^(n/2)` is; otherwise they live in
/// `Q(√q)`.
pub fn macwilliams<S: Scalar>(f: &HomPoly<S>, q: &Rational) -> Result<HomPoly<QuadElem>> {
    if q <= &Rational::zero() || q.is_one() {
        return Err(Error::Domain(format!(
            "MacWilliams transform needs q > 0, q != 1 (got {q})"
        )));
    }
    let f = f.to_quad();
    let g = match f.to_rational() {
        Ok(fr) => {
            let inner = Mat2::new(Rational::one(), q - Rational::one(), Rational::one(), -Rational::one());
            act_matrix(&fr, &inner)?.to_quad()
        }
        Err(_) => {
            let inner = Mat2::new(
                QuadElem::one(),
                QuadElem::rational(q - Rational::one()),
                QuadElem::one(),
                -QuadElem::one(),
            );
            act_matrix(&f, &inner)?
        }
    };
    let k = half_power(q, -(f.degree() as i64))?;
    compatible(g.radicand(), k.radicand())?;
    Ok(g.scale(&k))
}

/// Rational-coefficient transform; fails with [`Error::Irrational`] when
/// the result has a surd.
pub fn macwilliams_rational(f: &HomPoly<Rational>, q: &Rational) -> Result<HomPoly<Rational>> {
    macwilliams(f, q)?.to_rational()
}

/// `Some(±1)` when `f^{σ_q} = ±f`, otherwise `None`.
pub fn transform_sign<S: Scalar>(f: &HomPoly<S>, q: &Rational) -> Result<Option<i32>> {
    let t = macwilliams(f, q)?;
    let fq = f.to_quad();
    if t == fq {
        Ok(Some(1))
    } else if t == -&fq {
        Ok(Some(-1))
    } else {
        Ok(None)
    }
}
