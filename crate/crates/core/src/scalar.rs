//! Exact scalars: arbitrary-precision rationals and elements of a real
//! quadratic field `Q(√D)`.
//!
//! Rationals are `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. [`QuadElem`] adds a single
//! square root on top. Mixing two different radicands in one operation is an
//! error, never a silent embedding into a larger field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for building small rational constants.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `num/den` or a bare integer. Whitespace around the parts is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Integer power with a signed exponent.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

/// Coefficient domain of the polynomial types.
///
/// Implemented by [`Rational`] and [`QuadElem`]. Both are fields, so `inv`
/// only fails on zero.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(r: Rational) -> Self;
    fn inv(&self) -> Option<Self>;
    /// `Some` only when the value lies in `Q`.
    fn to_rational(&self) -> Option<Rational>;
    /// Radicand of the quadratic field the value lives in; 1 for rationals.
    fn radicand(&self) -> u64 {
        1
    }
    /// Approximate value, used for display and for seeding numerics only.
    fn to_f64(&self) -> f64;
    fn to_quad(&self) -> QuadElem;
    /// Exact sign of the real value.
    fn signum(&self) -> i32;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
    fn to_quad(&self) -> QuadElem {
        QuadElem::rational(self.clone())
    }
    fn signum(&self) -> i32 {
        sign_of(self)
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // Scale so that very large numerators/denominators do not overflow.
    let n = r.numer();
    let d = r.denom();
    let shift = (n.bits() as i64).max(d.bits() as i64) - 60;
    if shift <= 0 {
        return n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN);
    }
    let s = shift as usize;
    let nf = (n >> s).to_f64().unwrap_or(0.0);
    let df = (d >> s).to_f64().unwrap_or(0.0);
    if df == 0.0 {
        let nb = n.bits() as i64 - d.bits() as i64;
        return n.signum().to_f64().unwrap() * 2f64.powi(nb as i32);
    }
    nf / df
}

/// `a + b·√D` with `D` squarefree.
///
/// Normal form: when `b = 0` the radicand is reset to 1, so a rational value
/// has exactly one representation and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadElem {
    /// Builds `a + b√d`. Panics if `d` is not squarefree; `d = 1` folds `b` into `a`.
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        assert!(d >= 1 && is_squarefree(d), "radicand {d} is not squarefree");
        if d == 1 {
            return Self::rational(a + b);
        }
        if b.is_zero() {
            return Self::rational(a);
        }
        QuadElem { a, b, d }
    }

    pub fn rational(a: Rational) -> Self {
        QuadElem {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadElem {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// `a² − D b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(self.d)) * &self.b * &self.b
    }

    /// Common radicand of two operands, or an error when both are irrational
    /// over different fields.
    pub fn common_radicand(x: &Self, y: &Self) -> Result<u64> {
        match (x.is_rational(), y.is_rational()) {
            (true, _) => Ok(y.d),
            (_, true) => Ok(x.d),
            _ if x.d == y.d => Ok(x.d),
            _ => Err(Error::MixedRadicands(x.d, y.d)),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let d = Self::common_radicand(self, rhs)?;
        Ok(Self::new(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let d = Self::common_radicand(self, rhs)?;
        let dd = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &rhs.a + dd * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self::new(a, b, d))
    }

    /// Exact conversion; fails unless the irrational part vanishes.
    pub fn try_into_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.a.clone())
        } else {
            Err(Error::Irrational(self.to_string()))
        }
    }

    /// Sign of the real number represented. Exact.
    pub fn signum(&self) -> i32 {
        // a + b√D > 0  iff  one of the cases below, comparing a² with D b².
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let db2 = Rational::from_integer(BigInt::from(self.d)) * &self.b * &self.b;
        if a2 > db2 {
            sa
        } else {
            sb
        }
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl From<Rational> for QuadElem {
    fn from(r: Rational) -> Self {
        QuadElem::rational(r)
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "({} + {}*sqrt({}))", self.a, self.b, self.d)
        }
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("quadratic field mismatch")
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: Self) -> Self {
        self.try_add(&-rhs).expect("quadratic field mismatch")
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("quadratic field mismatch")
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> Self {
        QuadElem {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Zero for QuadElem {
    fn zero() -> Self {
        QuadElem::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadElem {
    fn one() -> Self {
        QuadElem::rational(Rational::one())
    }
}

impl Scalar for QuadElem {
    fn from_rational(r: Rational) -> Self {
        QuadElem::rational(r)
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(a + b√D) = (a − b√D) / (a² − D b²); the norm is nonzero since √D ∉ Q.
        let n = self.norm().recip();
        Some(QuadElem::new(&self.a * &n, -(&self.b * &n), self.d))
    }
    fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }
    fn radicand(&self) -> u64 {
        self.d
    }
    fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * (self.d as f64).sqrt()
    }
    fn to_quad(&self) -> QuadElem {
        self.clone()
    }
    fn signum(&self) -> i32 {
        QuadElem::signum(self)
    }
}

pub fn is_squarefree(d: u64) -> bool {
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Splits a positive integer as `s² · D` with `D` squarefree.
fn square_part(mut m: BigUint) -> (BigUint, u64) {
    let mut s = BigUint::one();
    let mut core = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            s *= num_traits::pow(p.clone(), (e / 2) as usize);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        p += 1u32;
    }
    // What remains is 1 or a prime.
    if m > BigUint::one() {
        let r = m.sqrt();
        if &r * &r == m {
            s *= r;
        } else {
            core *= m;
        }
    }
    (s, core.to_u64().expect("squarefree kernel exceeds u64"))
}

/// The positive square root of `q > 0`, as `r√D` with `D` squarefree.
/// `D = 1` exactly when `q` is a rational square.
pub fn sqrt_rational(q: &Rational) -> Result<(QuadElem, u64)> {
    if !q.is_positive() {
        return Err(Error::Domain(format!("square root of non-positive {q}")));
    }
    // √(n/m) = √(n·m)/m
    let n = q.numer().to_biguint().unwrap();
    let m = q.denom().to_biguint().unwrap();
    let (s, d) = square_part(&n * &m);
    let coeff = Rational::new(BigInt::from(s), BigInt::from(m));
    if d == 1 {
        Ok((QuadElem::rational(coeff), 1))
    } else {
        Ok((QuadElem::new(Rational::zero(), coeff, d), d))
    }
}

/// Exact `q^(k/2)` for an integer `k`.
pub fn half_power(q: &Rational, k: i64) -> Result<QuadElem> {
    let whole = rat_pow(q, k.div_euclid(2));
    if k.is_even() {
        Ok(QuadElem::rational(whole))
    } else {
        let (r, _) = sqrt_rational(q)?;
        Ok(QuadElem::rational(whole) * r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqrt_of_perfect_square() {
        let (r, d) = sqrt_rational(&int(4)).unwrap();
        assert_eq!(d, 1);
        assert_eq!(r, QuadElem::rational(int(2)));
    }

    #[test]
    fn sqrt_of_four_thirds() {
        let (r, d) = sqrt_rational(&rat(4, 3)).unwrap();
        assert_eq!(d, 3);
        assert_eq!(r, QuadElem::new(int(0), rat(2, 3), 3));
        // (2/3)² · 3 = 4/3
        assert_eq!(r.clone() * r, QuadElem::rational(rat(4, 3)));
    }

    #[test]
    fn sqrt_of_two() {
        let (r, d) = sqrt_rational(&int(2)).unwrap();
        assert_eq!(d, 2);
        assert_eq!(r, QuadElem::new(int(0), int(1), 2));
    }

    #[test]
    fn sqrt_rejects_nonpositive() {
        assert!(sqrt_rational(&int(0)).is_err());
        assert!(sqrt_rational(&int(-3)).is_err());
    }

    #[test]
    fn mixed_radicands_rejected() {
        let s2 = QuadElem::new(int(0), int(1), 2);
        let s3 = QuadElem::new(int(0), int(1), 3);
        assert!(matches!(s2.try_mul(&s3), Err(Error::MixedRadicands(2, 3))));
        // rationals combine with anything
        assert!(s2.try_add(&QuadElem::rational(int(5))).is_ok());
    }

    #[test]
    fn conversion_requires_vanishing_surd() {
        let s2 = QuadElem::new(int(1), int(1), 2);
        assert!(s2.try_into_rational().is_err());
        let x = s2.clone() * s2.conj();
        assert_eq!(x.try_into_rational().unwrap(), int(-1));
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(rat(-6, 4).to_string(), "-3/2");
        assert_eq!(int(7).to_string(), "7");
        assert_eq!(parse_rational(" -3/2 ").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn signum_of_surds() {
        assert_eq!(QuadElem::new(int(-1), int(1), 2).signum(), 1);
        assert_eq!(QuadElem::new(int(-2), int(1), 2).signum(), -1);
        assert_eq!(QuadElem::new(int(3), int(-2), 2).signum(), 1);
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_pos_rat() -> impl Strategy<Value = Rational> {
        (1i64..5000, 1i64..500).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_quad() -> impl Strategy<Value = QuadElem> {
        (arb_rat(), arb_rat()).prop_map(|(a, b)| QuadElem::new(a, b, 5))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * a.inv().unwrap(), Rational::one());
            }
        }

        #[test]
        fn quad_ring_laws(x in arb_quad(), y in arb_quad(), z in arb_quad()) {
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
            prop_assert_eq!((x.clone() + y.clone()).conj(), x.conj() + y.conj());
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inv().unwrap(), QuadElem::one());
            }
        }

    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn sqrt_squares_back(q in arb_pos_rat()) {
            let (r, d) = sqrt_rational(&q).unwrap();
            prop_assert!(is_squarefree(d));
            prop_assert_eq!(r.clone() * r.clone(), QuadElem::rational(q));
            prop_assert_eq!(r.signum(), 1);
        }
    }
}
