//! Finite 2×2 matrix groups and their Molien series.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::homopoly::Mat2;
use crate::scalar::{rat, QuadElem, Rational, Scalar};
use crate::upoly::UPoly;

pub const DEFAULT_CLOSURE_CAP: usize = 1024;

#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub generators: Vec<Mat2>,
    /// Breadth-first order, identity first.
    pub elements: Vec<Mat2>,
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        self.elements.contains(m)
    }

    /// Checks closure under products and inverses.
    pub fn satisfies_axioms(&self) -> bool {
        let set: HashSet<&Mat2> = self.elements.iter().collect();
        set.contains(&Mat2::identity())
            && self
                .elements
                .iter()
                .all(|a| a.inverse().is_some_and(|i| set.contains(&i)))
            && self
                .elements
                .iter()
                .all(|a| self.elements.iter().all(|b| set.contains(&(a * b))))
    }
}

/// Closure of `generators` under multiplication. Fails once more than
/// `cap` elements have been found.
pub fn group_closure(generators: &[Mat2], cap: usize) -> Result<MatrixGroup> {
    for g in generators {
        if g.det().is_zero() {
            return Err(Error::Domain("group generators must be invertible".into()));
        }
    }
    let id = Mat2::identity();
    let mut seen: HashSet<Mat2> = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut next = 0;
    while next < elements.len() {
        let cur = elements[next].clone();
        next += 1;
        for g in generators {
            let p = &cur * g;
            if seen.insert(p.clone()) {
                elements.push(p);
                if elements.len() > cap {
                    return Err(Error::ClosureCap(cap));
                }
            }
        }
    }
    Ok(MatrixGroup {
        generators: generators.to_vec(),
        elements,
    })
}

/// The groups whose invariant rings carry the enumerator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGroup {
    /// `⟨σ_2 τ σ_2, τ⟩`, order 8.
    TypeIMinus,
    /// `⟨σ_4 τ σ_4, τ⟩`, order 6.
    TypeIVMinus,
    /// `⟨η, τ⟩` with `η = (1/2)[[1, 1], [-3, 1]]`, order 12.
    Q43Minus,
    /// `⟨σ_{4/3}, τ⟩`, order 24.
    Q43,
}

impl NamedGroup {
    pub const ALL: [NamedGroup; 4] = [
        NamedGroup::TypeIMinus,
        NamedGroup::TypeIVMinus,
        NamedGroup::Q43Minus,
        NamedGroup::Q43,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGroup::TypeIMinus => "g1-",
            NamedGroup::TypeIVMinus => "g4-",
            NamedGroup::Q43Minus => "g43-",
            NamedGroup::Q43 => "g43",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }

    /// The group whose Molien series counts the ring spanned by `family`'s
    /// generator products.
    pub fn for_family(family: Family) -> Option<Self> {
        match family {
            Family::TypeI => Some(NamedGroup::TypeIMinus),
            Family::TypeIV => Some(NamedGroup::TypeIVMinus),
            Family::Q43Odd => Some(NamedGroup::Q43Minus),
            Family::Q43Even => Some(NamedGroup::Q43),
            Family::Ozeki => None,
        }
    }

    pub fn generators(self) -> Vec<Mat2> {
        let tau = Mat2::tau();
        let sigma = |q: Rational| Mat2::macwilliams(&q).expect("positive q");
        match self {
            NamedGroup::TypeIMinus => {
                let s = sigma(Rational::from_integer(2.into()));
                vec![&(&s * &tau) * &s, tau]
            }
            NamedGroup::TypeIVMinus => {
                let s = sigma(Rational::from_integer(4.into()));
                vec![&(&s * &tau) * &s, tau]
            }
            NamedGroup::Q43Minus => {
                let h = QuadElem::rational(rat(1, 2));
                let eta = Mat2::<QuadElem>::from_i64(1, 1, -3, 1).scale(&h);
                vec![eta, tau]
            }
            NamedGroup::Q43 => vec![sigma(rat(4, 3)), tau],
        }
    }

    /// Order stated for the group.
    pub fn expected_order(self) -> usize {
        match self {
            NamedGroup::TypeIMinus => 8,
            NamedGroup::TypeIVMinus => 6,
            NamedGroup::Q43Minus => 12,
            NamedGroup::Q43 => 24,
        }
    }

    /// Degrees `(a, b)` of the closed form `1/((1-λ^a)(1-λ^b))`.
    pub fn molien_degrees(self) -> (usize, usize) {
        match self {
            NamedGroup::TypeIMinus => (2, 4),
            NamedGroup::TypeIVMinus => (2, 3),
            NamedGroup::Q43Minus => (2, 6),
            NamedGroup::Q43 => (2, 12),
        }
    }

    pub fn closure(self) -> Result<MatrixGroup> {
        group_closure(&self.generators(), DEFAULT_CLOSURE_CAP)
    }
}

/// `num(λ)/den(λ)` with `den(0) = 1`, in lowest terms.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: UPoly,
    pub den: UPoly,
}

impl RationalFunction {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let c = den.coeff(0);
        if c.is_zero() {
            return Err(Error::Domain("rational function has a pole at 0".into()));
        }
        let ci = c.inv().unwrap();
        num = num.scale(&ci);
        den = den.scale(&ci);
        Ok(RationalFunction { num, den })
    }

    /// `1 / Π (1 - λ^k)`.
    pub fn inverse_product(degrees: &[usize]) -> Self {
        let den = degrees.iter().fold(UPoly::one(), |acc, &k| {
            let mut f = UPoly::monomial(-Rational::one(), k);
            f = &f + &UPoly::one();
            &acc * &f
        });
        RationalFunction::new(UPoly::one(), den).unwrap()
    }

    /// Taylor coefficients of `λ^0 .. λ^(terms-1)`.
    pub fn series(&self, terms: usize) -> Vec<Rational> {
        let inv = self.den.series_inverse(terms).expect("den(0) = 1");
        let s = self.num.mul_trunc(&inv, terms);
        (0..terms).map(|k| s.coeff(k)).collect()
    }

    pub fn coefficient(&self, n: usize) -> Rational {
        self.series(n + 1).pop().unwrap()
    }

    /// Equality as functions, by cross-multiplication.
    pub fn same_as(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num.display_with("λ"), self.den.display_with("λ"))
    }
}

/// `(1/|G|) Σ_A 1/det(I - λA)` as an exact rational function.
pub fn molien_series(g: &MatrixGroup) -> Result<RationalFunction> {
    // det(I - λA) = 1 - tr(A)λ + det(A)λ², grouped by (trace, det).
    let mut classes: Vec<(QuadElem, QuadElem, usize)> = Vec::new();
    for a in &g.elements {
        let (t, d) = (a.trace(), a.det());
        match classes.iter_mut().find(|c| c.0 == t && c.1 == d) {
            Some(c) => c.2 += 1,
            None => classes.push((t, d, 1)),
        }
    }
    let dens: Vec<UPoly<QuadElem>> = classes
        .iter()
        .map(|(t, d, _)| UPoly::new(vec![QuadElem::one(), -t.clone(), d.clone()]))
        .collect();
    let mut num = UPoly::<QuadElem>::zero();
    for (k, (_, _, mult)) in classes.iter().enumerate() {
        let others = dens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .fold(UPoly::one(), |acc, (_, d)| &acc * d);
        num = &num + &others.scale(&QuadElem::from_i64(*mult as i64));
    }
    let mut den = dens.iter().fold(UPoly::one(), |acc, d| &acc * d);
    den = den.scale(&QuadElem::from_i64(g.order() as i64));
    // Multiply through by the conjugate denominator so the denominator is rational.
    let conj = UPoly::new(den.coeffs().iter().map(QuadElem::conj).collect());
    let num = &num * &conj;
    let den = &den * &conj;
    let to_rat = |p: &UPoly<QuadElem>| -> Result<UPoly> {
        p.coeffs()
            .iter()
            .map(|c| {
                c.try_into_rational()
                    .map_err(|_| Error::IrrationalResidue(c.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(UPoly::new)
    };
    RationalFunction::new(to_rat(&num)?, to_rat(&den)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_group_orders() {
        for g in NamedGroup::ALL {
            let grp = g.closure().unwrap();
            assert_eq!(grp.order(), g.expected_order(), "{}", g.name());
            assert!(grp.satisfies_axioms());
        }
        let tau = group_closure(&[Mat2::tau()], 16).unwrap();
        assert_eq!(tau.order(), 2);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let shear = Mat2::<QuadElem>::from_i64(1, 1, 0, 1);
        assert_eq!(group_closure(&[shear], 50).unwrap_err(), Error::ClosureCap(50));
        let singular = Mat2::<QuadElem>::from_i64(1, 1, 1, 1);
        assert!(group_closure(&[singular], 50).is_err());
    }

    #[test]
    fn molien_closed_forms() {
        for g in NamedGroup::ALL {
            let m = molien_series(&g.closure().unwrap()).unwrap();
            let (a, b) = g.molien_degrees();
            assert!(
                m.same_as(&RationalFunction::inverse_product(&[a, b])),
                "{}: {m}",
                g.name()
            );
        }
        let trivial = group_closure(&[], 4).unwrap();
        let m = molien_series(&trivial).unwrap();
        assert!(m.same_as(&RationalFunction::inverse_product(&[1, 1])));
        assert_eq!(
            m.series(5),
            (1..=5).map(|k| Rational::from_integer(k.into())).collect::<Vec<_>>()
        );
    }

    #[test]
    fn molien_counts_family_products() {
        for fam in Family::ALL {
            let Some(g) = NamedGroup::for_family(fam) else { continue };
            let m = molien_series(&g.closure().unwrap()).unwrap();
            let spec = fam.spec();
            for (n, c) in m.series(41).into_iter().enumerate().skip(1) {
                assert_eq!(c, Rational::from_integer(spec.ring_dimension(n).into()), "{fam} n={n}");
            }
        }
    }

    #[test]
    fn sigma_squared_is_identity() {
        for q in [rat(2, 1), rat(4, 1), rat(4, 3)] {
            let s = Mat2::macwilliams(&q).unwrap();
            assert!((&s * &s).is_identity());
        }
    }
}
