//! Checkers for the differential-operator identities satisfied by extremal
//! enumerators, and for the general invariance statements behind them.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::zeta_polynomial;
use crate::error::{Error, Result};
use crate::families::{Family, Generator};
use crate::homopoly::{
    act_matrix, dehomogenized_rem, diff_op, divide_exact, parse_hompoly, pochhammer, weight_profile, HomPoly, Mat2,
};
use crate::linalg::nullspace;
use crate::scalar::{int, rat, QuadElem, Rational, Scalar};
use crate::upoly::UPoly;

fn poly(s: &str) -> HomPoly {
    parse_hompoly(s).expect("literal")
}

fn ri(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

struct Shape {
    n: usize,
    d: usize,
    v: usize,
    a_d: Rational,
}

/// Reads off `n`, `d`, `A_d` and `v` with `n = 4(d-1) + 2v` (Type I) or
/// `n = 3(d-1) + 2v` (Type IV).
fn shape(w: &HomPoly, family: Family) -> Result<Shape> {
    let step = match family {
        Family::TypeI => 4,
        Family::TypeIV => 3,
        other => {
            return Err(Error::Range(format!(
                "identity is stated for type1 and type4, not {other}"
            )))
        }
    };
    let q = family.spec().q;
    let d = weight_profile(w, &q)?.d;
    let n = w.degree();
    if d < 4 {
        return Err(Error::Range(format!("needs d >= 4, got {d}")));
    }
    let base = step * (d - 1);
    if n < base || (n - base) % 2 != 0 {
        return Err(Error::Range(format!("degree {n} is not {step}(d-1) + 2v for d = {d}")));
    }
    Ok(Shape {
        n,
        d,
        v: (n - base) / 2,
        a_d: w.coeff(d).clone(),
    })
}

/// Type I: `(xy³ - x³y)(D)W = (d-2)₃(n-d)A_d (x³y - xy³)^(d-3) (x²+y²)^v φ₄`.
/// Type IV: `(y³ - 9x²y)(D)W = (d-2)₃A_d (x²y - y³)^(d-3) (x²+3y²)^v φ₃`.
pub fn verify_extremal_diff_identity(w: &HomPoly, family: Family) -> Result<bool> {
    let s = shape(w, family)?;
    let pre = pochhammer(&ri(s.d - 2), 3) * &s.a_d;
    let (lhs, rhs) = match family {
        Family::TypeI => {
            let lhs = diff_op(&poly("x*y^3 - x^3*y"), w)?;
            let rhs = &(&poly("x^3*y - x*y^3").pow(s.d - 3) * &poly("x^2 + y^2").pow(s.v)) * &Generator::Phi4.poly();
            (lhs, rhs.scale(&(pre * ri(s.n - s.d))))
        }
        _ => {
            let lhs = diff_op(&poly("y^3 - 9*x^2*y"), w)?;
            let rhs = &(&poly("x^2*y - y^3").pow(s.d - 3) * &poly("x^2 + 3*y^2").pow(s.v)) * &Generator::Phi3.poly();
            (lhs, rhs.scale(&pre))
        }
    };
    Ok(lhs == rhs)
}

/// The binomial-sum form of the same identity in terms of the zeta
/// coefficients, with `m = d - 2`. For Type IV the sum runs over the
/// coefficients of `P(T)(1 + 2T)`.
pub fn verify_zeta_binomial_identity(w: &HomPoly, family: Family) -> Result<bool> {
    let s = shape(w, family)?;
    let m = s.d - 2;
    if m % 2 != 0 {
        return Err(Error::Range(format!("needs m = d - 2 even, got {m}")));
    }
    let q = family.spec().q;
    let p = zeta_polynomial(w, &q)?.poly;
    let xmy = poly("x - y");
    let y = HomPoly::y();
    let pre = pochhammer(&ri(s.d - 2), 3) * &s.a_d;
    let (coeffs, top, total, span) = match family {
        Family::TypeI => (p, 2 * m + 2 * s.v + 2, 4 * m + 2 * s.v, 3 * m + 2 * s.v + 1),
        _ => (
            &p * &UPoly::from_i64(&[1, 2]),
            m + 2 * s.v + 2,
            3 * m + 2 * s.v,
            2 * m + 2 * s.v + 1,
        ),
    };
    let mut lhs = HomPoly::zero(total);
    for i in 0..=top {
        let c = coeffs.coeff(i);
        if c.is_zero() {
            continue;
        }
        let b = Rational::from_integer(num_integer::binomial(
            num_bigint::BigInt::from(total),
            (m - 1 + i).into(),
        ));
        let term = &xmy.pow(span - i) * &y.pow(m - 1 + i);
        lhs = &lhs + &term.scale(&(c * b));
    }
    let rhs = match family {
        Family::TypeI => {
            let k = pre * ri(s.n - s.d) / pochhammer(&ri(s.n - 3), 4);
            let f = &(&poly("x*y").pow(m - 1) * &poly("x^2 - y^2").pow(m - 1)) * &poly("x^2 + y^2").pow(s.v);
            (&f * &Generator::Phi4.poly()).scale(&k)
        }
        _ => {
            let k = pre / (int(3) * pochhammer(&ri(s.n - 2), 3));
            let f = &(&y.pow(m - 1) * &poly("x^2 - y^2").pow(m - 1)) * &poly("x^2 + 3*y^2").pow(s.v);
            (&f * &Generator::Phi3.poly()).scale(&k)
        }
    };
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DivisibilityReport {
    /// `a = {xy(x²-y²)}^(d-3)` (Type I) or `{y(x²-y²)}^(d-3)` (Type IV)
    /// divides `p(D)W`.
    pub holds: bool,
    /// `p(D)W / a`.
    pub cofactor: Option<HomPoly>,
    /// `φ₄` (resp. `φ₃`) divides the cofactor.
    pub generator_divides: bool,
    /// Cofactor divided by `φ₄` (resp. `φ₃`).
    pub reduced: Option<HomPoly>,
}

/// Divisibility of `p(D)W` with `p = xy³ - x³y` (Type I) or
/// `p = y³ - 9x²y` (Type IV).
pub fn verify_divisibility_prop(w: &HomPoly, family: Family) -> Result<DivisibilityReport> {
    let s = shape(w, family)?;
    let (p, base, gen) = match family {
        Family::TypeI => (poly("x*y^3 - x^3*y"), poly("x^3*y - x*y^3"), Generator::Phi4.poly()),
        _ => (poly("y^3 - 9*x^2*y"), poly("x^2*y - y^3"), Generator::Phi3.poly()),
    };
    let a = base.pow(s.d - 3);
    let pw = diff_op(&p, w)?;
    let cofactor = divide_exact(&a, &pw)?;
    let reduced = match &cofactor {
        Some(c) => divide_exact(&gen, c)?,
        None => None,
    };
    Ok(DivisibilityReport {
        holds: cofactor.is_some(),
        generator_divides: reduced.is_some(),
        cofactor,
        reduced,
    })
}

/// Outcome of the invariance statements for `p^{ᵗσ} = c₁p`, `A^σ = c₂A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuursmaOkuda {
    /// `{p(D)A}^σ = (c₂/c₁) p(D)A`.
    pub part_i: bool,
    /// `a^σ | p(D)A`; `None` when `a` was not given or does not divide.
    pub part_ii: Option<bool>,
    /// `a·a^σ | p(D)A` when `a` and `a^σ` are coprime.
    pub part_ii_coprime: Option<bool>,
    /// `ã^σ = (c₂/(c₁c₃)) ã` for `p(D)A = a·ã`, when `a^σ = c₃a`.
    pub part_iii: Option<bool>,
}

impl DuursmaOkuda {
    pub fn all_hold(&self) -> bool {
        self.part_i
            && self.part_ii != Some(false)
            && self.part_ii_coprime != Some(false)
            && self.part_iii != Some(false)
    }
}

type Q = QuadElem;

fn coprime(a: &HomPoly<Q>, b: &HomPoly<Q>) -> bool {
    let x_divides = |f: &HomPoly<Q>| f.coeff(f.degree()).is_zero();
    if x_divides(a) && x_divides(b) {
        return false;
    }
    a.dehomogenize().gcd(&b.dehomogenize()).degree() == Some(0)
}

/// Checks the hypotheses exactly, then each applicable conclusion.
/// Hypothesis failures are reported as [`Error::Precondition`].
pub fn verify_duursma_okuda(
    p: &HomPoly<Q>,
    big_a: &HomPoly<Q>,
    a: Option<&HomPoly<Q>>,
    sigma: &Mat2,
    c1: &Q,
    c2: &Q,
    c3: Option<&Q>,
) -> Result<DuursmaOkuda> {
    if c1.is_zero() || c2.is_zero() || c3.is_some_and(Zero::is_zero) {
        return Err(Error::Precondition("constants must be nonzero".into()));
    }
    if act_matrix(p, &sigma.transpose())? != p.scale(c1) {
        return Err(Error::Precondition("p^(tσ) != c1 p".into()));
    }
    if act_matrix(big_a, sigma)? != big_a.scale(c2) {
        return Err(Error::Precondition("A^σ != c2 A".into()));
    }
    if let Some(a) = a {
        if a.degree() + p.degree() > big_a.degree() {
            return Err(Error::Precondition("deg a > deg A - deg p".into()));
        }
        if let Some(c3) = c3 {
            if act_matrix(a, sigma)? != a.scale(c3) {
                return Err(Error::Precondition("a^σ != c3 a".into()));
            }
        }
    } else if c3.is_some() {
        return Err(Error::Precondition("c3 given without a".into()));
    }
    let pa = diff_op(p, big_a)?;
    let ratio = c2.clone() * c1.inv().unwrap();
    let part_i = act_matrix(&pa, sigma)? == pa.scale(&ratio);
    let mut out = DuursmaOkuda {
        part_i,
        part_ii: None,
        part_ii_coprime: None,
        part_iii: None,
    };
    let Some(a) = a else { return Ok(out) };
    let Some(cofactor) = divide_exact(a, &pa)? else {
        return Ok(out);
    };
    let a_sigma = act_matrix(a, sigma)?;
    out.part_ii = Some(divide_exact(&a_sigma, &pa)?.is_some());
    if coprime(a, &a_sigma) {
        out.part_ii_coprime = Some(divide_exact(&(a * &a_sigma), &pa)?.is_some());
    }
    if let Some(c3) = c3 {
        let k = ratio * c3.inv().unwrap();
        out.part_iii = Some(act_matrix(&cofactor, sigma)? == cofactor.scale(&k));
    }
    Ok(out)
}

/// `[p^{ᵗσ}(D)A]^σ = p(D)A^σ`.
pub fn lemma_holds(p: &HomPoly<Q>, big_a: &HomPoly<Q>, sigma: &Mat2) -> Result<bool> {
    let lhs = act_matrix(&diff_op(&act_matrix(p, &sigma.transpose())?, big_a)?, sigma)?;
    let rhs = diff_op(p, &act_matrix(big_a, sigma)?)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoPart {
    I,
    II,
    III,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomSummary {
    pub trials: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl RandomSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

/// Involutions used as `σ`: reflections with rational entries and the
/// MacWilliams matrices for several `q`.
pub fn involutions() -> Vec<(String, Mat2)> {
    let r = |a: i64, b: i64, c: i64, d: i64, den: i64| {
        let s = QuadElem::rational(rat(1, den));
        Mat2::<QuadElem>::from_i64(a, b, c, d).scale(&s)
    };
    let mut v = vec![
        ("tau".to_string(), Mat2::tau()),
        ("swap".to_string(), r(0, 1, 1, 0, 1)),
        ("reflect(3/5,4/5)".to_string(), r(3, 4, 4, -3, 5)),
        ("[[2,-3],[1,-2]]".to_string(), r(2, -3, 1, -2, 1)),
    ];
    for q in [int(2), int(3), int(4), int(5), rat(4, 3)] {
        v.push((format!("sigma_{q}"), Mat2::macwilliams(&q).expect("q > 0")));
    }
    v
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> HomPoly<Q> {
    loop {
        let coeffs: Vec<Q> = (0..=degree)
            .map(|_| QuadElem::from_i64(rng.gen_range(-5..=5)))
            .collect();
        let f = HomPoly::new(degree, coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_sign(rng: &mut ChaCha8Rng) -> Q {
    if rng.gen_bool(0.5) {
        QuadElem::one()
    } else {
        -QuadElem::one()
    }
}

/// `f + c f^σ`, an eigenvector of the involution `σ` with eigenvalue `c`.
fn eigen_part(f: &HomPoly<Q>, sigma: &Mat2, c: &Q) -> Result<HomPoly<Q>> {
    Ok(f + &act_matrix(f, sigma)?.scale(c))
}

/// Linear conditions on `f` equivalent to `m^k | f` for a linear form `m`.
fn divisibility_conditions(m: &HomPoly<Q>, k: usize, f: &HomPoly<Q>) -> Result<Vec<Q>> {
    let n = f.degree();
    if m.coeff(0).is_zero() {
        // m ∝ y
        return Ok(f.coeffs()[..k].to_vec());
    }
    if m.coeff(1).is_zero() {
        // m ∝ x
        return Ok(f.coeffs()[n + 1 - k..].to_vec());
    }
    let rem = dehomogenized_rem(&m.pow(k), f)?;
    Ok((0..k).map(|i| rem.coeff(i)).collect())
}

/// Random `A` in the `c2`-eigenspace of `σ` with `m^k | p(D)A` and
/// `p(D)A ≠ 0`, if one turns up.
fn constrained_a(
    rng: &mut ChaCha8Rng,
    p: &HomPoly<Q>,
    sigma: &Mat2,
    c2: &Q,
    m: &HomPoly<Q>,
    k: usize,
    degree: usize,
) -> Result<Option<HomPoly<Q>>> {
    let spanning: Vec<HomPoly<Q>> = (0..=degree)
        .map(|j| eigen_part(&HomPoly::monomial(QuadElem::one(), degree, j), sigma, c2))
        .collect::<Result<_>>()?;
    let cols: Vec<Vec<Q>> = spanning
        .iter()
        .map(|s| divisibility_conditions(m, k, &diff_op(p, s)?))
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<Q>> = (0..k).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let kernel = nullspace(rows, spanning.len());
    if kernel.is_empty() {
        return Ok(None);
    }
    for _ in 0..8 {
        let mut a = HomPoly::<Q>::zero(degree);
        for v in &kernel {
            let w = QuadElem::from_i64(rng.gen_range(-3..=3));
            for (coef, s) in v.iter().zip(&spanning) {
                a = &a + &s.scale(&(coef.clone() * w.clone()));
            }
        }
        if !a.is_zero() && !diff_op(p, &a)?.is_zero() {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

fn random_linear(rng: &mut ChaCha8Rng) -> HomPoly<Q> {
    let mut nz = || loop {
        let v: i64 = rng.gen_range(-4..=4);
        if v != 0 {
            return QuadElem::from_i64(v);
        }
    };
    HomPoly::linear(nz(), nz())
}

/// One randomized instance of the requested part; `Ok(None)` when the
/// sampled setup is degenerate and must be redrawn.
fn random_instance(rng: &mut ChaCha8Rng, part: DoPart, sigmas: &[(String, Mat2)]) -> Result<Option<(String, bool)>> {
    let (name, sigma) = sigmas.choose(rng).unwrap().clone();
    let c1 = random_sign(rng);
    let c2 = random_sign(rng);
    let dp = rng.gen_range(1..=3);
    let p = eigen_part(&random_poly(rng, dp), &sigma.transpose(), &c1)?;
    if p.is_zero() {
        return Ok(None);
    }
    let label = |extra: &str| format!("σ = {name}, c1 = {c1}, c2 = {c2}, p = {p}{extra}");
    match part {
        DoPart::I => {
            let deg = rng.gen_range(dp..=dp + 8);
            let big_a = eigen_part(&random_poly(rng, deg), &sigma, &c2)?;
            if big_a.is_zero() {
                return Ok(None);
            }
            let r = verify_duursma_okuda(&p, &big_a, None, &sigma, &c1, &c2, None)?;
            Ok(Some((label(""), r.part_i)))
        }
        DoPart::II => {
            let l = random_linear(rng);
            let l_sigma = act_matrix(&l, &sigma)?;
            if !coprime(&l, &l_sigma) {
                return Ok(None);
            }
            let k = rng.gen_range(1..=3);
            let degree = dp + 2 * k + rng.gen_range(2..=5);
            let Some(big_a) = constrained_a(rng, &p, &sigma, &c2, &l, k, degree)? else {
                return Ok(None);
            };
            let a = l.pow(k);
            let r = verify_duursma_okuda(&p, &big_a, Some(&a), &sigma, &c1, &c2, None)?;
            let ok = r.part_i && r.part_ii == Some(true) && r.part_ii_coprime == Some(true);
            Ok(Some((label(&format!(", a = ({l})^{k}")), ok)))
        }
        DoPart::III => {
            let eps = random_sign(rng);
            let l = random_linear(rng);
            let m = eigen_part(&l, &sigma, &eps)?;
            if m.is_zero() {
                return Ok(None);
            }
            let k = rng.gen_range(1..=3);
            let c3 = if k % 2 == 0 { QuadElem::one() } else { eps.clone() };
            let degree = dp + k + rng.gen_range(2..=6);
            let Some(big_a) = constrained_a(rng, &p, &sigma, &c2, &m, k, degree)? else {
                return Ok(None);
            };
            let a = m.pow(k);
            let r = verify_duursma_okuda(&p, &big_a, Some(&a), &sigma, &c1, &c2, Some(&c3))?;
            let ok = r.part_i && r.part_ii == Some(true) && r.part_iii == Some(true);
            Ok(Some((label(&format!(", a = ({m})^{k}")), ok)))
        }
    }
}

/// Runs `trials` randomized instances of one part with a seeded generator.
pub fn randomized_duursma_okuda(part: DoPart, trials: usize, seed: u64) -> Result<RandomSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigmas = involutions();
    let mut summary = RandomSummary {
        trials,
        passed: 0,
        failures: Vec::new(),
    };
    let mut done = 0;
    let mut draws = 0;
    while done < trials {
        draws += 1;
        if draws > 50 * trials.max(1) {
            return Err(Error::Range("too many degenerate random setups".into()));
        }
        let Some((label, ok)) = random_instance(&mut rng, part, &sigmas)? else {
            continue;
        };
        done += 1;
        if ok {
            summary.passed += 1;
        } else {
            summary.failures.push(label);
        }
    }
    Ok(summary)
}

/// Randomized chain-rule identity with arbitrary invertible `σ`.
pub fn randomized_lemma(trials: usize, seed: u64) -> Result<RandomSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigmas = involutions();
    let mut summary = RandomSummary {
        trials,
        passed: 0,
        failures: Vec::new(),
    };
    let mut done = 0;
    while done < trials {
        let mut m = Mat2::<QuadElem>::from_i64(
            rng.gen_range(-3..=3),
            rng.gen_range(-3..=3),
            rng.gen_range(-3..=3),
            rng.gen_range(-3..=3),
        );
        if rng.gen_bool(0.5) {
            let (_, s) = sigmas.choose(&mut rng).unwrap();
            m = &m * s;
        }
        if m.det().is_zero() {
            continue;
        }
        let dp = rng.gen_range(1..=4);
        let p = random_poly(&mut rng, dp);
        let deg = rng.gen_range(dp..=dp + 8);
        let big_a = random_poly(&mut rng, deg);
        done += 1;
        if lemma_holds(&p, &big_a, &m)? {
            summary.passed += 1;
        } else {
            summary.failures.push(format!("σ = {m:?}, p = {p}, A = {big_a}"));
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn ext(f: Family, n: usize) -> HomPoly {
        f.spec().extremal(n).unwrap().poly
    }

    #[test]
    fn diff_identities_small_degrees() {
        for n in [12, 14, 18, 20] {
            assert!(
                verify_extremal_diff_identity(&ext(Family::TypeI, n), Family::TypeI).unwrap(),
                "n={n}"
            );
        }
        for n in [9, 11, 13] {
            assert!(
                verify_extremal_diff_identity(&ext(Family::TypeIV, n), Family::TypeIV).unwrap(),
                "n={n}"
            );
        }
        assert!(verify_extremal_diff_identity(&ext(Family::TypeI, 8), Family::TypeI).is_err());
    }

    #[test]
    fn binomial_identities_small_degrees() {
        assert!(verify_zeta_binomial_identity(&ext(Family::TypeI, 12), Family::TypeI).unwrap());
        assert!(verify_zeta_binomial_identity(&ext(Family::TypeI, 18), Family::TypeI).unwrap());
        assert!(verify_zeta_binomial_identity(&ext(Family::TypeIV, 11), Family::TypeIV).unwrap());
    }

    #[test]
    fn divisibility_examples() {
        let a = |k: usize| poly("x^3*y - x*y^3").pow(k);
        let r = verify_divisibility_prop(&ext(Family::TypeI, 12), Family::TypeI).unwrap();
        assert_eq!(r.cofactor.unwrap(), Generator::Phi4.poly().scale(&int(-6336)));
        let r = verify_divisibility_prop(&ext(Family::TypeI, 20), Family::TypeI).unwrap();
        assert_eq!(
            &a(3) * &r.cofactor.unwrap(),
            (&a(3) * &Generator::Phi4.poly()).scale(&int(-319200))
        );
        let r = verify_divisibility_prop(&ext(Family::TypeI, 14), Family::TypeI).unwrap();
        let w22 = Generator::W2(int(2)).poly();
        assert_eq!(r.cofactor.unwrap(), (&Generator::Phi4.poly() * &w22).scale(&int(-6240)));
        let r = verify_divisibility_prop(&ext(Family::TypeIV, 11), Family::TypeIV).unwrap();
        let w24 = Generator::W2(int(4)).poly();
        assert_eq!(r.cofactor.unwrap(), (&Generator::Phi3.poly() * &w24).scale(&int(-720)));
    }

    #[test]
    fn non_extremal_degree_20() {
        let w = Generator::W2(int(2)).poly();
        let phi = Generator::Phi4.poly();
        let f = (&w.pow(8) * &phi).scale(&int(15)) + phi.pow(5);
        let f = f.scale(&rat(1, 16));
        let r = verify_divisibility_prop(&f, Family::TypeI).unwrap();
        assert!(r.holds && r.generator_divides);
        let octic = poly("x^8 - 238*x^6*y^2 + 490*x^4*y^4 - 238*x^2*y^6 + y^8");
        assert_eq!(r.reduced.unwrap(), octic.scale(&int(1920)));
        assert_eq!(
            octic,
            (phi.pow(2).scale(&int(121)) - w.pow(4).scale(&int(113))).scale(&rat(1, 8))
        );
    }

    #[test]
    fn duursma_okuda_examples() {
        let q = |f: &HomPoly| f.to_quad();
        let one = QuadElem::one();
        let s2 = Mat2::macwilliams(&int(2)).unwrap();
        let p = q(&poly("x^3*y - x*y^3"));
        let w12 = q(&ext(Family::TypeI, 12));
        let r = verify_duursma_okuda(&p, &w12, None, &s2, &one, &-one.clone(), None).unwrap();
        assert!(r.part_i);
        // identity σ
        let id = Mat2::identity();
        let a = q(&poly("x*y"));
        let big = q(&poly("x^3*y^3"));
        let r = verify_duursma_okuda(&q(&poly("x^2")), &big, Some(&a), &id, &one, &one, Some(&one)).unwrap();
        assert!(r.all_hold());
        // τ with A = W11 and a = y(x²-y²); the cofactor is τ-invariant
        let p = q(&poly("y^3 - 9*x^2*y"));
        let w11 = q(&ext(Family::TypeIV, 11));
        let a = q(&poly("x^2*y - y^3"));
        let r = verify_duursma_okuda(
            &p,
            &w11,
            Some(&a),
            &Mat2::tau(),
            &-one.clone(),
            &one,
            Some(&-one.clone()),
        )
        .unwrap();
        assert_eq!(r.part_iii, Some(true));
        // wrong constants are a precondition failure, not a conclusion failure
        let e = verify_duursma_okuda(&p, &w11, None, &Mat2::tau(), &one, &one, None).unwrap_err();
        assert!(matches!(e, Error::Precondition(_)));
    }

    #[test]
    fn randomized_runs() {
        for part in [DoPart::I, DoPart::II, DoPart::III] {
            let s = randomized_duursma_okuda(part, 10, 7).unwrap();
            assert!(s.all_passed(), "{part:?}: {:?}", s.failures);
        }
        assert!(randomized_lemma(10, 7).unwrap().all_passed());
    }
}
