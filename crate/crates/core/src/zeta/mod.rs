//! Zeta polynomials of enumerator-shaped polynomials.
//!
//! For `W = x^n + Σ A_i x^(n-i) y^i` with minimum weight `d`, the zeta
//! polynomial `P(T)` of degree at most `n - d` is characterised by
//!
//! ```text
//! P(T) / ((1-T)(1-qT)) · (y(1-T) + xT)^n = ... + (W - x^n)/(q-1) · T^(n-d) + ...
//! ```
//!
//! Two independent routes are implemented: solving that identity directly
//! ([`zeta_from_genfunc`]) and expanding `W` over MDS enumerators
//! ([`zeta_from_mds`]).

mod rh;
mod star;
pub mod verify;

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homopoly::{weight_profile, HomPoly};
use crate::linalg::{solve, Solution};
use crate::scalar::{half_power, parse_rational, rat, rat_pow, QuadElem, Rational};
use crate::upoly::UPoly;

pub use rh::{rh_check, rh_check_with, Complex, RhOptions, RhReport, DEFAULT_PRECISION_BITS, DEFAULT_TOLERANCE};
pub use star::{odd_star_scan, star_factor, star_operator, star_relation, OddStarScan, StarRelation};

#[derive(Clone, Debug, PartialEq)]
pub struct ZetaPoly {
    pub poly: UPoly,
    pub q: Rational,
    pub n: usize,
    pub d: usize,
    /// `n/2 + 1 - d`.
    pub genus: Rational,
    /// Sign for which `P(T) = ±P(1/(qT)) q^g T^(2g)` holds, if any.
    pub sign: Option<i32>,
}

impl ZetaPoly {
    pub fn new(poly: UPoly, q: Rational, n: usize, d: usize) -> Self {
        let genus = rat(n as i64, 2) + Rational::one() - Rational::from_integer(BigInt::from(d));
        let mut z = ZetaPoly {
            poly,
            q,
            n,
            d,
            genus,
            sign: None,
        };
        z.sign = functional_equation_check(&z);
        z
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.poly.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn to_json_value(&self) -> ZetaPolyJson {
        ZetaPolyJson {
            q: self.q.to_string(),
            n: self.n,
            d: self.d,
            genus: self.genus.to_string(),
            sign: self.sign,
            coeffs: self.coeffs().iter().map(ToString::to_string).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: ZetaPolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let coeffs = j.coeffs.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
        Ok(ZetaPoly::new(UPoly::new(coeffs), parse_rational(&j.q)?, j.n, j.d))
    }

    pub fn to_latex(&self) -> String {
        crate::homopoly::latex_univariate(self.coeffs(), "T")
    }
}

impl fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// `{"q":"num/den","n":…,"d":…,"genus":"num/den","sign":±1,"coeffs":[…]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZetaPolyJson {
    pub q: String,
    pub n: usize,
    pub d: usize,
    pub genus: String,
    pub sign: Option<i32>,
    pub coeffs: Vec<String>,
}

/// Returns the minimum weight after checking `d, d⊥ ≥ 2`.
fn zeta_domain(w: &HomPoly, q: &Rational) -> Result<usize> {
    if q <= &Rational::zero() || q.is_one() {
        return Err(Error::ZetaUndefined(format!("q = {q}")));
    }
    let prof = weight_profile(w, q)?;
    if prof.d < 2 {
        return Err(Error::ZetaUndefined(format!("minimum weight {} < 2", prof.d)));
    }
    match prof.d_perp {
        Some(dp) if dp >= 2 => Ok(prof.d),
        Some(dp) => Err(Error::ZetaUndefined(format!("dual minimum weight {dp} < 2"))),
        None => Err(Error::ZetaUndefined("transform has no weight beyond 0".into())),
    }
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Solves the defining identity for `p_0 … p_(n-d)` using all `n + 1`
/// coefficient equations; the surplus equations must be consistent.
pub fn zeta_from_genfunc(w: &HomPoly, q: &Rational) -> Result<ZetaPoly> {
    let d = zeta_domain(w, q)?;
    let n = w.degree();
    let k = n - d;
    let one = Rational::one();
    // 1/((1-T)(1-qT)) = Σ s_j T^j
    let s: Vec<Rational> = (0..=k)
        .map(|j| (rat_pow(q, j as i64 + 1) - &one) / (q - &one))
        .collect();
    // (y + (x-y)T)^n = Σ B_t T^t
    let xmy = HomPoly::linear(one.clone(), -one.clone());
    let mut b = Vec::with_capacity(k + 1);
    let mut xmy_pow = HomPoly::one();
    for t in 0..=k {
        let ypow = HomPoly::monomial(binom(n, t), n - t, n - t);
        b.push(&xmy_pow * &ypow);
        xmy_pow = &xmy_pow * &xmy;
    }
    // column for p_i is C_(k-i) with C_j = Σ_{t≤j} s_(j-t) B_t
    let cols: Vec<HomPoly> = (0..=k)
        .map(|j| (0..=j).fold(HomPoly::zero(n), |acc, t| &acc + &b[t].scale(&s[j - t])))
        .collect();
    let mut target = w.clone();
    target.set_coeff(0, w.coeff(0) - &one);
    let target = target.scale(&(&one / (q - &one)));
    let rows: Vec<Vec<Rational>> = (0..=n)
        .map(|e| (0..=k).map(|i| cols[k - i].coeff(e).clone()).collect())
        .collect();
    match solve(&rows, target.coeffs()) {
        Solution::Unique(p) => Ok(ZetaPoly::new(UPoly::new(p), q.clone(), n, d)),
        Solution::Inconsistent => Err(Error::Inconsistent(format!("zeta identity for degree {n}, d = {d}"))),
        Solution::Underdetermined { nullity, .. } => Err(Error::Inconsistent(format!(
            "zeta identity leaves {nullity} free parameters"
        ))),
    }
}

/// The MDS enumerator `M_{n,d}` with
/// `A_w = C(n,w) Σ_{j=0}^{w-d} (-1)^j C(w,j) (q^(w-d+1-j) - 1)`.
pub fn mds_enumerator(n: usize, d: usize, q: &Rational) -> Result<HomPoly> {
    if d < 2 || d > n {
        return Err(Error::Range(format!(
            "MDS enumerator needs 2 <= d <= n, got n = {n}, d = {d}"
        )));
    }
    if q <= &Rational::zero() || q.is_one() {
        return Err(Error::Domain(format!("q = {q}")));
    }
    let mut m = HomPoly::zero(n);
    m.set_coeff(0, Rational::one());
    for w in d..=n {
        let mut sum = Rational::zero();
        for j in 0..=(w - d) {
            let term = binom(w, j) * (rat_pow(q, (w - d + 1 - j) as i64) - Rational::one());
            if j % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        m.set_coeff(w, binom(n, w) * sum);
    }
    Ok(m)
}

/// Expands `W = Σ a_i M_{n,d+i}` (a triangular system) and returns
/// `P(T) = Σ a_i T^i`.
pub fn zeta_from_mds(w: &HomPoly, q: &Rational) -> Result<ZetaPoly> {
    let d = zeta_domain(w, q)?;
    let n = w.degree();
    let mut rest = w.clone();
    let mut a = Vec::with_capacity(n - d + 1);
    for i in d..=n {
        let m = mds_enumerator(n, i, q)?;
        let c = rest.coeff(i) / m.coeff(i);
        rest = &rest - &m.scale(&c);
        a.push(c);
    }
    if !rest.is_zero() {
        return Err(Error::Inconsistent("MDS expansion leaves a remainder".into()));
    }
    Ok(ZetaPoly::new(UPoly::new(a), q.clone(), n, d))
}

/// Zeta polynomial by both methods; they must agree.
pub fn zeta_polynomial(w: &HomPoly, q: &Rational) -> Result<ZetaPoly> {
    let a = zeta_from_genfunc(w, q)?;
    let b = zeta_from_mds(w, q)?;
    if a.poly != b.poly {
        return Err(Error::ZetaMismatch(format!("degree {}, d = {}", a.n, a.d)));
    }
    Ok(a)
}

/// The sign `±1` with `p_(2g-i) = ±p_i q^(g-i)` for all `i`, or `None`
/// when neither holds (including non-integral `2g` and `deg P > 2g`).
pub fn functional_equation_check(z: &ZetaPoly) -> Option<i32> {
    let two_g = &z.genus * Rational::from_integer(2.into());
    if !two_g.is_integer() || two_g < Rational::zero() {
        return None;
    }
    let two_g: usize = two_g.to_integer().try_into().ok()?;
    if z.degree() > two_g || z.poly.is_zero() {
        return None;
    }
    [1, -1].into_iter().find(|&sign| {
        (0..=two_g).all(|i| {
            let scale = half_power(&z.q, two_g as i64 - 2 * i as i64).expect("q > 0");
            let rhs = scale * QuadElem::rational(z.poly.coeff(i) * Rational::from_integer(sign.into()));
            rhs == QuadElem::rational(z.poly.coeff(two_g - i))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{Family, Generator};
    use crate::homopoly::diff_op;
    use crate::scalar::int;

    fn poly(s: &str) -> HomPoly {
        s.parse().unwrap()
    }

    fn p12e() -> UPoly {
        UPoly::from_i64(&[189, 504, 846, 1092, 1128, 896, 448]).scale(&rat(1, 5103))
    }

    #[test]
    fn q43_degree_12() {
        let w = Family::Q43Even.spec().extremal(12).unwrap().poly;
        let z = zeta_from_genfunc(&w, &rat(4, 3)).unwrap();
        assert_eq!(z.poly, p12e());
        assert_eq!(zeta_from_mds(&w, &rat(4, 3)).unwrap().poly, p12e());
        assert_eq!(z.genus, int(3));
        assert_eq!(z.sign, Some(1));
        let w10 = Generator::W2(rat(4, 3)).poly().pow(5);
        let z10 = zeta_polynomial(&w10, &rat(4, 3)).unwrap();
        assert_eq!(z10.poly, &UPoly::from_i64(&[3, -6, 4]) * &p12e());
    }

    #[test]
    fn trivial_zetas() {
        for q in [int(2), int(4), rat(4, 3), int(5)] {
            let z = zeta_polynomial(&Generator::W2(q.clone()).poly(), &q).unwrap();
            assert_eq!(z.poly, UPoly::one());
            assert_eq!(z.sign, Some(1));
        }
        let m = mds_enumerator(10, 4, &int(2)).unwrap();
        assert_eq!(zeta_from_genfunc(&m, &int(2)).unwrap().poly, UPoly::one());
        assert_eq!(mds_enumerator(2, 2, &rat(4, 3)).unwrap(), poly("x^2 + 1/3*y^2"));
        assert_eq!(mds_enumerator(5, 5, &int(3)).unwrap(), poly("x^5 + 2*y^5"));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            zeta_from_genfunc(&poly("x^4 + x^3*y"), &int(2)),
            Err(Error::ZetaUndefined(_))
        ));
        assert!(zeta_from_genfunc(&poly("x^2 + y^2"), &int(1)).is_err());
        assert!(mds_enumerator(4, 1, &int(2)).is_err());
        assert!(mds_enumerator(4, 5, &int(2)).is_err());
    }

    #[test]
    fn mds_minimum_weight_and_zeta() {
        for q in [int(2), int(4), rat(4, 3)] {
            for n in 2..=14 {
                for d in 2..=n {
                    let m = mds_enumerator(n, d, &q).unwrap();
                    assert_eq!(m.support().nth(1), Some(d));
                    assert_eq!(zeta_from_mds(&m, &q).unwrap().poly, UPoly::one());
                }
            }
        }
    }

    #[test]
    fn puncture_and_shorten() {
        let q = int(2);
        let x = HomPoly::x();
        let y = HomPoly::y();
        for n in 3..=16 {
            for i in 2..n {
                let m = mds_enumerator(n, i, &q).unwrap();
                let nn = Rational::from_integer(n.into());
                let m1 = mds_enumerator(n - 1, i, &q).unwrap();
                assert_eq!(diff_op(&x, &m).unwrap(), m1.scale(&nn));
                if i > 2 {
                    let m0 = mds_enumerator(n - 1, i - 1, &q).unwrap();
                    assert_eq!(diff_op(&y, &m).unwrap(), (&m0 - &m1).scale(&nn));
                }
            }
        }
    }

    #[test]
    fn functional_equation_signs() {
        let t1 = Family::TypeI.spec();
        let z = zeta_polynomial(&t1.extremal(12).unwrap().poly, &int(2)).unwrap();
        assert_eq!(z.degree(), 6);
        assert_eq!(z.sign, Some(-1));
        let w11 = Family::TypeIV.spec().extremal(11).unwrap().poly;
        let z = zeta_polynomial(&w11, &int(4)).unwrap();
        assert_eq!(z.genus, rat(5, 2));
        assert_eq!(z.degree(), 5);
        assert_eq!(z.sign, Some(-1));
        // not self-reciprocal
        let z = ZetaPoly::new(UPoly::from_i64(&[1, 1, 1]), int(2), 4, 2);
        assert_eq!(z.sign, None);
    }

    #[test]
    fn json_round_trip() {
        let w = Family::Q43Even.spec().extremal(12).unwrap().poly;
        let z = zeta_polynomial(&w, &rat(4, 3)).unwrap();
        let j = z.to_json();
        assert!(j.starts_with(r#"{"q":"4/3","n":12,"d":4,"genus":"3","sign":1,"coeffs":["1/27","#));
        assert_eq!(ZetaPoly::from_json(&j).unwrap(), z);
    }
}
