//! The enumerator families, their graded bases and extremal members.
//!
//! Every family is a polynomial ring in two generators: an invariant one
//! (`σ_q`-fixed) and an anti-invariant one (`σ_q` flips its sign). Members of
//! a family are products `even^l · odd^m` with `m` of a fixed parity, and
//! their linear combinations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homopoly::{check_enumerator_form, parse_hompoly, transform_sign, weight_profile, HomPoly, WeightProfile};
use crate::linalg::{solve, Solution};
use crate::scalar::{int, rat, rat_pow, Rational};
use crate::upoly::UPoly;

/// Named generators appearing in the families.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    /// `x^4 - 6x^2y^2 + y^4`
    Phi4,
    /// `x^3 - 9xy^2`
    Phi3,
    /// `x^6 - 5x^4y^2 + (5/3)x^2y^4 - (1/27)y^6`
    Phi6,
    /// `x^2 + (q-1)y^2`
    W2(Rational),
    /// Extended Hamming code enumerator.
    WH8,
    /// `x^12 - 33x^8y^4 - 33x^4y^8 + y^12`
    W12,
    /// `x^2y^2(x^2 - y^2)^2(9x^2 - y^2)^2 / 81`, equal to `(W_{2,4/3}^6 - φ6^2) / 12`
    W12Prime,
}

impl Generator {
    /// Accepts `phi4`, `phi3`, `phi6`, `w2` (with `q`), `wh8`, `w12`, `w12p`.
    pub fn from_name(name: &str, q: Option<&Rational>) -> Result<Self> {
        Ok(match name.to_ascii_lowercase().as_str() {
            "phi4" => Generator::Phi4,
            "phi3" => Generator::Phi3,
            "phi6" => Generator::Phi6,
            "w2" | "w2q" => Generator::W2(
                q.cloned()
                    .ok_or_else(|| Error::UnknownName("w2 needs a value of q".into()))?,
            ),
            "wh8" | "h8" => Generator::WH8,
            "w12" => Generator::W12,
            "w12p" | "w12prime" | "w12'" => Generator::W12Prime,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }

    pub fn poly(&self) -> HomPoly {
        let p = |s: &str| parse_hompoly(s).expect("generator literal");
        match self {
            Generator::Phi4 => p("x^4 - 6*x^2*y^2 + y^4"),
            Generator::Phi3 => p("x^3 - 9*x*y^2"),
            Generator::Phi6 => p("x^6 - 5*x^4*y^2 + 5/3*x^2*y^4 - 1/27*y^6"),
            Generator::W2(q) => HomPoly::new(2, vec![Rational::one(), Rational::zero(), q - Rational::one()]),
            Generator::WH8 => p("x^8 + 14*x^4*y^4 + y^8"),
            Generator::W12 => p("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12"),
            Generator::W12Prime => {
                let f = &(&p("x^2*y^2") * &p("x^2 - y^2").pow(2)) * &p("9*x^2 - y^2").pow(2);
                f.scale(&rat(1, 81))
            }
        }
    }
}

pub fn generator(g: Generator) -> HomPoly {
    g.poly()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    TypeI,
    TypeIV,
    Q43Even,
    Q43Odd,
    Ozeki,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::TypeI,
        Family::TypeIV,
        Family::Q43Even,
        Family::Q43Odd,
        Family::Ozeki,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            Family::TypeI => "type1",
            Family::TypeIV => "type4",
            Family::Q43Even => "q43",
            Family::Q43Odd => "q43-odd",
            Family::Ozeki => "ozeki",
        }
    }

    pub fn spec(self) -> FamilySpec {
        FamilySpec::new(self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.cli_name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn admits(self, m: usize) -> bool {
        match self {
            Parity::Odd => m % 2 == 1,
            Parity::Even => m.is_multiple_of(2),
        }
    }
}

/// A family of enumerators `even^l · odd^m`, `m` of fixed parity.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub q: Rational,
    /// Every member has `A_i ≠ 0 ⇒ c | i`.
    pub c: usize,
    pub even_gen: HomPoly,
    pub odd_gen: HomPoly,
    pub parity: Parity,
}

impl FamilySpec {
    /// Builds the family and checks the generator transform signs.
    pub fn new(family: Family) -> Self {
        use Generator::*;
        let (q, c, even, odd, parity) = match family {
            Family::TypeI => (int(2), 2, W2(int(2)), Phi4, Parity::Odd),
            Family::TypeIV => (int(4), 2, W2(int(4)), Phi3, Parity::Odd),
            Family::Q43Odd => (rat(4, 3), 2, W2(rat(4, 3)), Phi6, Parity::Odd),
            Family::Q43Even => (rat(4, 3), 2, W2(rat(4, 3)), Phi6, Parity::Even),
            Family::Ozeki => (int(2), 4, WH8, W12, Parity::Odd),
        };
        let spec = FamilySpec {
            family,
            q,
            c,
            even_gen: even.poly(),
            odd_gen: odd.poly(),
            parity,
        };
        assert_eq!(
            transform_sign(&spec.even_gen, &spec.q).unwrap(),
            Some(1),
            "{family}: even generator"
        );
        assert_eq!(
            transform_sign(&spec.odd_gen, &spec.q).unwrap(),
            Some(-1),
            "{family}: odd generator"
        );
        spec
    }

    /// Transform sign shared by every member: `-1` for the formal weight
    /// enumerator families, `+1` for the invariant family.
    pub fn member_sign(&self) -> i32 {
        match self.parity {
            Parity::Odd => -1,
            Parity::Even => 1,
        }
    }

    /// Exponent pairs `(l, m)` with `deg = l·deg(even) + m·deg(odd)`,
    /// optionally restricted to the family parity, ordered by `m`.
    fn exponent_pairs(&self, n: usize, with_parity: bool) -> Vec<(usize, usize)> {
        let de = self.even_gen.degree();
        let dodd = self.odd_gen.degree();
        (0..=n / dodd)
            .filter(|&m| !with_parity || self.parity.admits(m))
            .filter(|&m| (n - m * dodd).is_multiple_of(de))
            .map(|m| ((n - m * dodd) / de, m))
            .filter(|&(l, m)| !(with_parity && self.parity == Parity::Even && l == 0 && m == 0))
            .collect()
    }

    fn products(&self, pairs: &[(usize, usize)]) -> Vec<BasisElem> {
        let max_l = pairs.iter().map(|p| p.0).max().unwrap_or(0);
        let max_m = pairs.iter().map(|p| p.1).max().unwrap_or(0);
        let epow = powers(&self.even_gen, max_l);
        let opow = powers(&self.odd_gen, max_m);
        pairs
            .iter()
            .map(|&(l, m)| BasisElem {
                l,
                m,
                poly: &epow[l] * &opow[m],
            })
            .collect()
    }

    /// Products of the family parity in degree `n`; empty when none exist.
    pub fn basis(&self, n: usize) -> Vec<BasisElem> {
        self.products(&self.exponent_pairs(n, true))
    }

    /// All products `even^l · odd^m` of degree `n` in the ambient invariant
    /// ring, regardless of parity (for `Q43Even` the ring is generated by
    /// `odd^2`, so only even `m` count).
    pub fn ring_basis(&self, n: usize) -> Vec<BasisElem> {
        let pairs: Vec<_> = match self.parity {
            Parity::Odd => self.exponent_pairs(n, false),
            Parity::Even => self
                .exponent_pairs(n, false)
                .into_iter()
                .filter(|p| p.1 % 2 == 0)
                .collect(),
        };
        self.products(&pairs)
    }

    /// Number of products counted by [`FamilySpec::ring_basis`].
    pub fn ring_dimension(&self, n: usize) -> usize {
        let pairs = self.exponent_pairs(n, false);
        match self.parity {
            Parity::Odd => pairs.len(),
            Parity::Even => pairs.iter().filter(|p| p.1 % 2 == 0).count(),
        }
    }

    /// Degrees `≤ max` whose basis is nonempty.
    pub fn admissible_degrees(&self, max: usize) -> Vec<usize> {
        (1..=max)
            .filter(|&n| !self.exponent_pairs(n, true).is_empty())
            .collect()
    }

    /// Coordinates of `f` over [`FamilySpec::basis`].
    pub fn expand(&self, f: &HomPoly) -> Result<Vec<Rational>> {
        let n = f.degree();
        let basis = self.basis(n);
        if basis.is_empty() {
            return Err(self.empty(n));
        }
        let rows: Vec<Vec<Rational>> = (0..=n)
            .map(|i| basis.iter().map(|b| b.poly.coeff(i).clone()).collect())
            .collect();
        match solve(&rows, f.coeffs()) {
            Solution::Unique(x) => Ok(x),
            Solution::Inconsistent => Err(Error::NotInRing {
                family: self.family.to_string(),
                degree: n,
            }),
            Solution::Underdetermined { .. } => unreachable!("products of algebraically independent generators"),
        }
    }

    /// Largest minimum weight a member of degree `n` can have.
    pub fn bound(&self, n: usize) -> Result<Bound> {
        if self.exponent_pairs(n, true).is_empty() {
            return Err(self.empty(n));
        }
        let n = n as i64;
        let (value, status) = match self.family {
            Family::TypeI => (2 * (n - 4).div_euclid(8) + 2, BoundStatus::Proven),
            Family::TypeIV => (2 * (n - 3).div_euclid(6) + 2, BoundStatus::Proven),
            Family::Q43Even => (2 * n.div_euclid(12) + 2, BoundStatus::Proven),
            Family::Q43Odd => {
                let status = if n % 12 == 6 {
                    BoundStatus::Proven
                } else {
                    BoundStatus::ConjecturalOnly
                };
                (2 * (n - 6).div_euclid(12) + 2, status)
            }
            Family::Ozeki => (4 * (n - 12).div_euclid(24) + 4, BoundStatus::Proven),
        };
        Ok(Bound {
            d_max: value as usize,
            status,
        })
    }

    /// The unique monic member of degree `n` with `A_i = 0` for
    /// `1 ≤ i < bound`. Fails loudly if the solution is not unique or the
    /// coefficient at the bound vanishes.
    pub fn extremal(&self, n: usize) -> Result<Extremal> {
        let basis = self.basis(n);
        if basis.is_empty() {
            return Err(self.empty(n));
        }
        let bound = self.bound(n)?;
        let dmax = bound.d_max;
        if dmax > n {
            return Err(Error::Extremal(format!("bound {dmax} exceeds degree {n}")));
        }
        // Row 0: x^n coefficient equals 1. Rows 1..dmax: A_i vanishes.
        let rows: Vec<Vec<Rational>> = (0..dmax)
            .map(|i| basis.iter().map(|b| b.poly.coeff(i).clone()).collect())
            .collect();
        let mut rhs = vec![Rational::zero(); dmax];
        rhs[0] = Rational::one();
        let coords = match solve(&rows, &rhs) {
            Solution::Unique(x) => x,
            Solution::Inconsistent => {
                return Err(Error::Extremal(format!(
                    "{} degree {n}: no monic member with d >= {dmax}",
                    self.family
                )))
            }
            Solution::Underdetermined { nullity, .. } => {
                return Err(Error::Extremal(format!(
                    "{} degree {n}: solution space has dimension {} instead of 1",
                    self.family,
                    nullity + 1
                )))
            }
        };
        let mut poly = HomPoly::zero(n);
        for (c, b) in coords.iter().zip(&basis) {
            poly = &poly + &b.poly.scale(c);
        }
        if poly.coeff(dmax).is_zero() {
            return Err(Error::Extremal(format!(
                "{} degree {n}: A_{dmax} vanishes",
                self.family
            )));
        }
        Ok(Extremal {
            poly,
            coords,
            basis,
            bound,
        })
    }

    fn empty(&self, n: usize) -> Error {
        Error::EmptyBasis {
            family: self.family.to_string(),
            degree: n,
        }
    }
}

fn powers(g: &HomPoly, k: usize) -> Vec<HomPoly> {
    let mut out = vec![HomPoly::one()];
    for i in 1..=k {
        out.push(&out[i - 1] * g);
    }
    out
}

#[derive(Clone, Debug)]
pub struct BasisElem {
    pub l: usize,
    pub m: usize,
    pub poly: HomPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundStatus {
    Proven,
    /// The formula is only conjectured at this degree.
    ConjecturalOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub d_max: usize,
    pub status: BoundStatus,
}

/// Classical bound for Type I codes, `2⌊n/8⌋ + 2`.
pub fn mallows_sloane_type1(n: usize) -> usize {
    2 * (n / 8) + 2
}

/// Classical bound for Type IV codes, `2⌊n/6⌋ + 2`.
pub fn mallows_sloane_type4(n: usize) -> usize {
    2 * (n / 6) + 2
}

#[derive(Clone, Debug)]
pub struct Extremal {
    pub poly: HomPoly,
    /// Coordinates over `basis`.
    pub coords: Vec<Rational>,
    pub basis: Vec<BasisElem>,
    pub bound: Bound,
}

impl Extremal {
    pub fn d(&self) -> usize {
        self.bound.d_max
    }
}

/// Result of testing the formal-weight-enumerator conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct FweCheck {
    pub is_fwe: bool,
    /// `Some(±1)` when `W^{σ_q} = ±W`.
    pub sign: Option<i32>,
    pub divisible: bool,
    /// `d ≤ n/2 + 1`.
    pub genus_nonnegative: bool,
    pub profile: WeightProfile,
}

/// Checks `W^{σ_q} = -W` and divisibility by `c`, and reports the weights.
pub fn is_fwe(f: &HomPoly, q: &Rational, c: usize) -> Result<FweCheck> {
    check_enumerator_form(f)?;
    let profile = weight_profile(f, q)?;
    let sign = transform_sign(f, q)?;
    let divisible = f.support().filter(|&i| i > 0).all(|i| i % c == 0);
    let genus_nonnegative = 2 * profile.d <= f.degree() + 2;
    Ok(FweCheck {
        is_fwe: sign == Some(-1) && divisible,
        sign,
        divisible,
        genus_nonnegative,
        profile,
    })
}

// ---- coefficient formulas for the q = 4/3 bounds ----

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// Taylor coefficients up to `x^order` of `((x-1)(x-9))^(-k)` at 0.
fn inverse_power_series(k: usize, order: usize) -> UPoly {
    let base = UPoly::from_i64(&[9, -10, 1]).pow(k);
    base.series_inverse(order + 1).expect("nonzero constant term")
}

/// `A_{2μ+2}` from the closed-form Taylor expression of the `q = 4/3`
/// bound arguments. For `Q43Even`, degree `n = 2(6μ + ν)`; for `Q43Odd`,
/// `n = 12μ + 6` and `ν` is ignored.
pub fn burmann_coefficient(family: Family, mu: usize, nu: usize) -> Result<Rational> {
    let k = 2 * mu + 2;
    let series = inverse_power_series(k, mu);
    let nine_pow = rat_pow(&int(9), k as i64);
    let mu_fact = Rational::from_integer(factorial(mu));
    match family {
        Family::Q43Even => {
            if nu > 5 || (mu == 0 && nu == 0) {
                return Err(Error::Range(format!(
                    "need 0 <= nu <= 5 and (mu, nu) != (0, 0), got ({mu}, {nu})"
                )));
            }
            let numer = UPoly::new(vec![Rational::one(), rat(1, 3)]).pow(5 - nu);
            let taylor = numer.mul_trunc(&series, mu + 1).coeff(mu);
            let pre = nine_pow * int((6 * mu + nu) as i64) / (int(3) * Rational::from_integer(factorial(mu + 1)));
            Ok(pre * mu_fact * taylor)
        }
        Family::Q43Odd => {
            if mu < 2 {
                return Err(Error::Range(format!("odd-family formula needs mu >= 2, got {mu}")));
            }
            let numer = UPoly::new(vec![int(-5), rat(10, 3), rat(-1, 9)]);
            let taylor = numer.mul_trunc(&series, mu + 1).coeff(mu);
            let pre = nine_pow * int((2 * mu + 1) as i64) / Rational::from_integer(factorial(mu + 1));
            Ok(pre * mu_fact * taylor)
        }
        other => Err(Error::Range(format!("no coefficient formula for family {other}"))),
    }
}
