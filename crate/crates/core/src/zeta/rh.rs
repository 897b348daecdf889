//! Numerical check that every zero of a zeta polynomial lies on the circle
//! `|T| = 1/√q`.
//!
//! Roots are found by Aberth iteration in binary fixed-point arithmetic on
//! big integers (a value `v` is stored as `round(v · 2^prec)`), so the
//! result is reproducible on every platform including wasm. The precision is
//! doubled until two successive root sets agree to a tenth of the tolerance.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ZetaPoly;
use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::upoly::UPoly;

pub const DEFAULT_PRECISION_BITS: u32 = 128;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RhOptions {
    /// Pass iff every root satisfies `| |z| - 1/√q | < tolerance`.
    pub tolerance: f64,
    pub precision_bits: u32,
    pub max_precision_bits: u32,
    /// Digits after the point in the decimal root strings.
    pub digits: usize,
}

impl Default for RhOptions {
    fn default() -> Self {
        RhOptions {
            tolerance: DEFAULT_TOLERANCE,
            precision_bits: DEFAULT_PRECISION_BITS,
            max_precision_bits: 8192,
            digits: 30,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootText {
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhReport {
    pub degree: usize,
    pub roots: Vec<RootText>,
    #[serde(skip)]
    pub points: Vec<Complex>,
    pub target_modulus: f64,
    pub max_abs_deviation: f64,
    /// Largest `|P(z)| / Σ |p_i| |z|^i` over the roots.
    pub max_residual: f64,
    pub tolerance: f64,
    pub precision_bits: u32,
    /// Sign of the functional equation, checked exactly beforehand.
    pub functional_equation: Option<i32>,
    pub pass: bool,
}

impl RhReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Runs the check on a zeta polynomial with default options except the
/// tolerance.
pub fn rh_check(z: &ZetaPoly, tolerance: f64) -> Result<RhReport> {
    let opts = RhOptions {
        tolerance,
        ..RhOptions::default()
    };
    let mut report = rh_check_with(&z.poly, &z.q, &opts)?;
    report.functional_equation = z.sign;
    Ok(report)
}

/// Runs the check on an arbitrary polynomial with rational coefficients.
pub fn rh_check_with(p: &UPoly, q: &Rational, opts: &RhOptions) -> Result<RhReport> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Err(Error::Range("root check needs a polynomial of degree >= 1".into()));
    }
    if !q.is_positive() {
        return Err(Error::Domain(format!("q = {q}")));
    }
    let mut prec = opts.precision_bits.max(64);
    let target = (q.denom().to_f64().unwrap() / q.numer().to_f64().unwrap()).sqrt();
    let mut seeds = circle_seeds(deg, target);
    let mut previous: Option<Vec<Complex>> = None;
    loop {
        let ctx = Ctx { prec };
        let start: Vec<Cx> = seeds.iter().map(|c| ctx.fixed_complex(c)).collect();
        let attempt = ctx.aberth(p, start);
        if let Ok(roots) = attempt {
            let approx: Vec<Complex> = roots.iter().map(|z| ctx.to_complex(z)).collect();
            if let Some(prev) = &previous {
                if max_matching_distance(prev, &approx) < opts.tolerance / 10.0 {
                    return Ok(ctx.report(p, q, &roots, opts));
                }
            }
            seeds = approx.clone();
            previous = Some(approx);
        }
        prec *= 2;
        if prec > opts.max_precision_bits {
            return Err(Error::NoConvergence(format!(
                "root set not stable below {} bits for degree {deg}",
                opts.max_precision_bits
            )));
        }
    }
}

fn circle_seeds(deg: usize, r: f64) -> Vec<Complex> {
    let offset = std::f64::consts::SQRT_2 - 1.0;
    (0..deg)
        .map(|k| {
            let a = std::f64::consts::TAU * k as f64 / deg as f64 + offset;
            Complex {
                re: r * a.cos(),
                im: r * a.sin(),
            }
        })
        .collect()
}

fn max_matching_distance(a: &[Complex], b: &[Complex]) -> f64 {
    a.iter()
        .map(|x| {
            b.iter()
                .map(|y| {
                    Complex {
                        re: x.re - y.re,
                        im: x.im - y.im,
                    }
                    .abs()
                })
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug)]
struct Cx {
    re: BigInt,
    im: BigInt,
}

struct Ctx {
    prec: u32,
}

impl Ctx {
    fn one(&self) -> BigInt {
        BigInt::from(1) << self.prec
    }

    fn zero(&self) -> Cx {
        Cx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn fixed_rational(&self, r: &Rational) -> BigInt {
        (r.numer() << self.prec) / r.denom()
    }

    fn fixed_f64(&self, v: f64) -> BigInt {
        let m = BigInt::from_f64(v * (1u64 << 52) as f64).expect("finite seed");
        if self.prec >= 52 {
            m << (self.prec - 52)
        } else {
            m >> (52 - self.prec)
        }
    }

    fn fixed_complex(&self, c: &Complex) -> Cx {
        Cx {
            re: self.fixed_f64(c.re),
            im: self.fixed_f64(c.im),
        }
    }

    fn to_f64(&self, v: &BigInt) -> f64 {
        if self.prec > 64 {
            let s: BigInt = v >> (self.prec - 64);
            s.to_f64().unwrap() / 2f64.powi(64)
        } else {
            v.to_f64().unwrap() / 2f64.powi(self.prec as i32)
        }
    }

    fn to_complex(&self, z: &Cx) -> Complex {
        Complex {
            re: self.to_f64(&z.re),
            im: self.to_f64(&z.im),
        }
    }

    fn add(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    fn sub(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }

    fn mul(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: (&a.re * &b.re - &a.im * &b.im) >> self.prec,
            im: (&a.re * &b.im + &a.im * &b.re) >> self.prec,
        }
    }

    fn div(&self, a: &Cx, b: &Cx) -> Option<Cx> {
        let den = &b.re * &b.re + &b.im * &b.im;
        if den.is_zero() {
            return None;
        }
        let re = &a.re * &b.re + &a.im * &b.im;
        let im = &a.im * &b.re - &a.re * &b.im;
        Some(Cx {
            re: (re << self.prec) / &den,
            im: (im << self.prec) / &den,
        })
    }

    fn abs(&self, z: &Cx) -> BigInt {
        let sq: BigUint = (&z.re * &z.re + &z.im * &z.im).magnitude().clone();
        BigInt::from_biguint(Sign::Plus, sq.sqrt())
    }

    /// `p(z)` and `p'(z)` by Horner's scheme.
    fn eval(&self, coeffs: &[BigInt], z: &Cx) -> (Cx, Cx) {
        let mut val = self.zero();
        let mut der = self.zero();
        for c in coeffs.iter().rev() {
            der = self.add(&self.mul(&der, z), &val);
            val = self.mul(&val, z);
            val.re += c;
        }
        (val, der)
    }

    fn aberth(&self, p: &UPoly, mut z: Vec<Cx>) -> Result<Vec<Cx>> {
        let coeffs: Vec<BigInt> = p.coeffs().iter().map(|c| self.fixed_rational(c)).collect();
        let n = z.len();
        let stop = BigInt::from(1) << (self.prec / 2);
        let max_iter = 200 + 20 * n;
        for _ in 0..max_iter {
            let mut worst = BigInt::zero();
            for k in 0..n {
                let (v, dv) = self.eval(&coeffs, &z[k]);
                if v.re.is_zero() && v.im.is_zero() {
                    continue;
                }
                let Some(ratio) = self.div(&v, &dv) else {
                    // nudge off a critical point
                    z[k].re += &stop;
                    worst = self.one();
                    continue;
                };
                let mut sum = self.zero();
                for j in 0..n {
                    if j != k {
                        if let Some(inv) = self.div(
                            &Cx {
                                re: self.one(),
                                im: BigInt::zero(),
                            },
                            &self.sub(&z[k], &z[j]),
                        ) {
                            sum = self.add(&sum, &inv);
                        }
                    }
                }
                let denom = self.sub(
                    &Cx {
                        re: self.one(),
                        im: BigInt::zero(),
                    },
                    &self.mul(&ratio, &sum),
                );
                let w = self.div(&ratio, &denom).unwrap_or(ratio);
                let size = self.abs(&w);
                if size > worst {
                    worst = size;
                }
                z[k] = self.sub(&z[k], &w);
            }
            if worst <= stop {
                return Ok(z);
            }
        }
        Err(Error::NoConvergence(format!("Aberth iteration at {} bits", self.prec)))
    }

    fn decimal(&self, v: &BigInt, digits: usize) -> String {
        let ten = BigInt::from(10).pow(digits as u32);
        let half = BigInt::from(1) << (self.prec - 1);
        let total: BigInt = (v.abs() * &ten + half) >> self.prec;
        let sign = if v.is_negative() && !total.is_zero() { "-" } else { "" };
        let (int_part, frac) = (&total / &ten, &total % &ten);
        format!("{sign}{int_part}.{:0>width$}", frac.to_string(), width = digits)
    }

    fn report(&self, p: &UPoly, q: &Rational, roots: &[Cx], opts: &RhOptions) -> RhReport {
        let target_fx = {
            let num = q.numer().magnitude().clone();
            let den = q.denom().magnitude().clone();
            BigInt::from_biguint(Sign::Plus, ((den << (2 * self.prec)) / num).sqrt())
        };
        let coeffs: Vec<BigInt> = p.coeffs().iter().map(|c| self.fixed_rational(c)).collect();
        let mut max_dev = 0.0f64;
        let mut max_res = 0.0f64;
        for z in roots {
            let dev = (self.abs(z) - &target_fx).abs();
            max_dev = max_dev.max(self.to_f64(&dev));
            let (v, _) = self.eval(&coeffs, z);
            let r = self.abs(z);
            let mut scale = BigInt::zero();
            let mut rp = self.one();
            for c in &coeffs {
                scale += (c.abs() * &rp) >> self.prec;
                rp = (&rp * &r) >> self.prec;
            }
            let res = self.to_f64(&self.abs(&v)) / self.to_f64(&scale);
            max_res = max_res.max(res);
        }
        let mut points: Vec<Complex> = roots.iter().map(|z| self.to_complex(z)).collect();
        let mut text: Vec<RootText> = roots
            .iter()
            .map(|z| RootText {
                re: self.decimal(&z.re, opts.digits),
                im: self.decimal(&z.im, opts.digits),
            })
            .collect();
        // sort by argument for stable output
        let mut order: Vec<usize> = (0..roots.len()).collect();
        order.sort_by(|&a, &b| {
            let ka = points[a].im.atan2(points[a].re);
            let kb = points[b].im.atan2(points[b].re);
            ka.total_cmp(&kb)
        });
        points = order.iter().map(|&i| points[i]).collect();
        text = order.iter().map(|&i| text[i].clone()).collect();
        RhReport {
            degree: roots.len(),
            roots: text,
            points,
            target_modulus: self.to_f64(&target_fx),
            max_abs_deviation: max_dev,
            max_residual: max_res,
            tolerance: opts.tolerance,
            precision_bits: self.prec,
            functional_equation: None,
            pass: max_dev < opts.tolerance,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn quadratic_examples() {
        let r = rh_check_with(&UPoly::from_i64(&[1, -2, 2]), &int(2), &RhOptions::default()).unwrap();
        assert!(r.pass);
        assert!(r.max_abs_deviation < 1e-14);
        assert_eq!(
            r.roots[0],
            RootText {
                re: "0.500000000000000000000000000000".into(),
                im: "-0.500000000000000000000000000000".into()
            }
        );
        let r = rh_check_with(&UPoly::from_i64(&[3, -6, 4]), &rat(4, 3), &RhOptions::default()).unwrap();
        assert!(r.pass && r.max_abs_deviation < 1e-14);
        assert!((r.target_modulus - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn known_roots_off_and_on_circle() {
        // (1 - 2T)(1 + 2T) has roots ±1/2, off the circle of radius 1/√2
        let r = rh_check_with(&UPoly::from_i64(&[1, 0, -4]), &int(2), &RhOptions::default()).unwrap();
        assert!(!r.pass);
        assert!((r.max_abs_deviation - (0.5f64.sqrt() - 0.5)).abs() < 1e-14);
        // 1 + 2T^2 repeated structure: roots ±i/√2
        let p = &UPoly::from_i64(&[1, 0, 2]) * &UPoly::from_i64(&[1, -2, 2]);
        let r = rh_check_with(&p, &int(2), &RhOptions::default()).unwrap();
        assert!(r.pass && r.max_abs_deviation < 1e-14 && r.max_residual < 1e-20);
        assert!(rh_check_with(&UPoly::from_i64(&[5]), &int(2), &RhOptions::default()).is_err());
    }
}
