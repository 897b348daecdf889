//! The degree-lowering operator `W* = (1/(n(n-1))) p(D) W` on extremal
//! enumerators, and the matching factor of the zeta polynomial.

use super::{zeta_polynomial, ZetaPoly};
use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::homopoly::{diff_op, parse_hompoly, HomPoly};
use crate::scalar::{rat, Rational};
use crate::upoly::UPoly;

fn operator(family: Family) -> Option<HomPoly> {
    let s = match family {
        Family::TypeI => "x^2 + y^2",
        Family::TypeIV => "x^2 + 1/3*y^2",
        Family::Q43Even | Family::Q43Odd => "x^2 + 3*y^2",
        Family::Ozeki => return None,
    };
    Some(parse_hompoly(s).unwrap())
}

/// `φ(T)` with `zeta(W*) = φ(T) · zeta(W)`.
pub fn star_factor(family: Family) -> Option<UPoly> {
    match family {
        Family::TypeI => Some(UPoly::from_i64(&[1, -2, 2])),
        Family::TypeIV => Some(UPoly::from_i64(&[1, -2, 4]).scale(&rat(1, 3))),
        Family::Q43Even | Family::Q43Odd => Some(UPoly::from_i64(&[3, -6, 4])),
        Family::Ozeki => None,
    }
}

fn admissible(family: Family, n: usize) -> bool {
    match family {
        Family::TypeI => n % 8 == 4 && n >= 12,
        Family::TypeIV => n % 6 == 3 && n >= 9,
        Family::Q43Even => n.is_multiple_of(12) && n >= 12,
        Family::Q43Odd => n % 12 == 6 && n >= 18,
        Family::Ozeki => false,
    }
}

/// `W* = (1/(n(n-1))) p(D) W` with `p = x² + y²`, `x² + y²/3` or `x² + 3y²`.
pub fn star_operator(w: &HomPoly, family: &FamilySpec) -> Result<HomPoly> {
    let n = w.degree();
    if !admissible(family.family, n) {
        return Err(Error::Range(format!(
            "degree {n} is not a star-operator degree for {}",
            family.family
        )));
    }
    let p = operator(family.family).expect("admissible family");
    let k = Rational::from_integer((n * (n - 1)).into());
    Ok(diff_op(&p, w)?.scale(&(Rational::from_integer(1.into()) / k)))
}

#[derive(Clone, Debug)]
pub struct StarRelation {
    pub n: usize,
    /// `W*` equals the extremal enumerator of degree `n - 2`.
    pub star_is_extremal: bool,
    /// `zeta(W*) = φ(T) · zeta(W)`.
    pub zeta_relation: bool,
    pub zeta: ZetaPoly,
    pub zeta_star: ZetaPoly,
}

impl StarRelation {
    pub fn holds(&self) -> bool {
        self.star_is_extremal && self.zeta_relation
    }
}

/// Builds the extremal enumerator of degree `n`, applies the operator and
/// compares with the extremal enumerator of degree `n - 2`.
pub fn star_relation(family: &FamilySpec, n: usize) -> Result<StarRelation> {
    let w = family.extremal(n)?.poly;
    let star = star_operator(&w, family)?;
    let lower = family.extremal(n - 2)?.poly;
    let zeta = zeta_polynomial(&w, &family.q)?;
    let zeta_star = zeta_polynomial(&star, &family.q)?;
    let phi = star_factor(family.family).expect("admissible family");
    let zeta_relation = zeta_star.poly == &phi * &zeta.poly;
    Ok(StarRelation {
        n,
        star_is_extremal: star == lower,
        zeta_relation,
        zeta,
        zeta_star,
    })
}

/// Outcome of comparing degrees `12k+6` and `12k+4` in the odd `q = 4/3`
/// family, where the relation is only conjectured.
#[derive(Clone, Debug)]
pub struct OddStarScan {
    pub n: usize,
    /// `P_{n-2} = (4T² - 6T + 3) P_n` for the extremal members.
    pub zeta_relation: bool,
    /// `(1/(n(n-1)))(x² + 3y²)(D) W_n` equals the lower extremal member.
    pub operator_matches: bool,
}

pub fn odd_star_scan(k: usize) -> Result<OddStarScan> {
    let spec = Family::Q43Odd.spec();
    let n = 12 * k + 6;
    let rel = star_relation(&spec, n)?;
    Ok(OddStarScan {
        n,
        zeta_relation: rel.zeta_relation,
        operator_matches: rel.star_is_extremal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Generator;

    #[test]
    fn degree_12_invariant_example() {
        let spec = Family::Q43Even.spec();
        let w = spec.extremal(12).unwrap().poly;
        let star = star_operator(&w, &spec).unwrap();
        assert_eq!(star, Generator::W2(rat(4, 3)).poly().pow(5));
        assert!(star_relation(&spec, 12).unwrap().holds());
    }

    #[test]
    fn small_relations() {
        let t1 = Family::TypeI.spec();
        assert!(star_relation(&t1, 12).unwrap().holds());
        let t4 = Family::TypeIV.spec();
        assert!(star_relation(&t4, 9).unwrap().holds());
        assert!(star_operator(&t1.extremal(14).unwrap().poly, &t1).is_err());
        assert!(star_operator(&HomPoly::zero(12), &Family::Ozeki.spec()).is_err());
    }

    #[test]
    fn degree_30_odd_relation() {
        let r = odd_star_scan(2).unwrap();
        assert!(r.zeta_relation);
        assert_eq!(r.n, 30);
    }
}
