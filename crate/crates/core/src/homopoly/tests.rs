use proptest::prelude::*;

use super::*;
use crate::scalar::{rat, sqrt_rational};

fn poly(s: &str) -> HomPoly {
    s.parse().unwrap()
}

fn phi4() -> HomPoly {
    poly("x^4 - 6*x^2*y^2 + y^4")
}

fn w12() -> HomPoly {
    poly("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12")
}

fn w11() -> HomPoly {
    poly("x^11 - 30*x^7*y^4 - 336*x^5*y^6 - 1035*x^3*y^8 - 648*x*y^10")
}

fn sigma(q: &Rational) -> Mat2 {
    Mat2::macwilliams(q).unwrap()
}

#[test]
fn phi4_is_anti_invariant_under_sigma2() {
    let got = act_matrix(&phi4().to_quad(), &sigma(&int(2))).unwrap();
    assert_eq!(got, -&phi4().to_quad());
}

#[test]
fn identity_action() {
    let f = poly("3*x^5 - 1/2*x^2*y^3 + 7*y^5");
    assert_eq!(act_matrix(&f, &Mat2::identity()).unwrap(), f);
}

#[test]
fn hamming_enumerator_is_invariant() {
    let h8 = poly("x^8 + 14*x^4*y^4 + y^8");
    assert_eq!(act_matrix(&h8.to_quad(), &sigma(&int(2))).unwrap(), h8.to_quad());
}

#[test]
fn mixed_radicands_in_action_are_rejected() {
    let f = poly("x^2 + y^2").to_quad();
    let f = f.scale(&QuadElem::new(int(0), int(1), 5));
    assert!(matches!(
        act_matrix(&f, &sigma(&int(2))),
        Err(Error::MixedRadicands(..))
    ));
}

#[test]
fn macwilliams_examples() {
    let phi3 = poly("x^3 - 9*x*y^2");
    assert_eq!(macwilliams_rational(&phi3, &int(4)).unwrap(), -&phi3);
    for q in [int(2), int(4), rat(4, 3), rat(7, 5)] {
        let w2 = HomPoly::new(2, vec![int(1), int(0), &q - int(1)]);
        assert_eq!(macwilliams_rational(&w2, &q).unwrap(), w2);
    }
    let phi6 = poly("x^6 - 5*x^4*y^2 + 5/3*x^2*y^4 - 1/27*y^6");
    assert_eq!(macwilliams_rational(&phi6, &rat(4, 3)).unwrap(), -&phi6);
    assert_eq!(transform_sign(&phi6, &rat(4, 3)).unwrap(), Some(-1));
}

#[test]
fn odd_degree_transform_is_irrational_for_nonsquare_q() {
    let f = poly("x^3 + y^3");
    let t = macwilliams(&f, &int(2)).unwrap();
    assert_eq!(t.radicand(), 2);
    assert!(matches!(macwilliams_rational(&f, &int(2)), Err(Error::Irrational(_))));
    assert!(macwilliams(&f, &int(1)).is_err());
}

#[test]
fn diff_op_examples() {
    // Literal operator xy(x^2 - y^2): the scalar comes out positive.
    let a = poly("x^3*y - x*y^3");
    let r = diff_op(&a, &w12()).unwrap();
    assert_eq!(r, (&a * &phi4()).scale(&int(6336)));
    // The operator xy^3 - x^3y gives the printed -6336.
    let r = diff_op(&-&a, &w12()).unwrap();
    assert_eq!(r, (&a * &phi4()).scale(&int(-6336)));

    let n = 9;
    let xn = HomPoly::<Rational>::monomial(int(1), n, 0);
    let got = diff_op(&HomPoly::x(), &xn).unwrap();
    assert_eq!(got, HomPoly::monomial(int(n as i64), n - 1, 0));

    let p = poly("y^3 - 9*x^2*y");
    let rhs = &(&poly("x^2*y - y^3") * &poly("x^3 - 9*x*y^2")) * &poly("x^2 + 3*y^2");
    assert_eq!(diff_op(&p, &w11()).unwrap(), rhs.scale(&int(-720)));

    assert!(diff_op(&w12(), &phi4()).is_err());
}

#[test]
fn diff_op_may_vanish() {
    let r = diff_op(&poly("y^2"), &poly("x^3")).unwrap();
    assert_eq!(r.degree(), 1);
    assert!(r.is_zero());
}

#[test]
fn divide_exact_examples() {
    let g = divide_exact(&poly("x*y"), &poly("x^3*y + x*y^3")).unwrap().unwrap();
    assert_eq!(g, poly("x^2 + y^2"));
    assert_eq!(divide_exact(&poly("x^2"), &poly("x^2 + y^2")).unwrap(), None);
    assert!(matches!(
        divide_exact(&HomPoly::zero(2), &poly("x^2 + y^2")),
        Err(Error::ZeroDivisor)
    ));
    assert_eq!(divide_exact(&poly("x - y"), &poly("x^2 + y^2")).unwrap(), None);
    assert!(!dehomogenized_rem(&poly("x - y"), &poly("x^2 + y^2")).unwrap().is_zero());
}

#[test]
fn weight_profiles() {
    let wp = weight_profile(&w12(), &int(2)).unwrap();
    assert_eq!((wp.d, wp.d_perp, wp.divisibility), (4, Some(4), 4));
    let wp = weight_profile(&w11(), &int(4)).unwrap();
    assert_eq!((wp.d, wp.divisibility), (4, 2));
    let wp = weight_profile(&poly("x^7 + y^7"), &int(2)).unwrap();
    assert_eq!((wp.d, wp.divisibility), (7, 7));
    assert!(weight_profile(&HomPoly::zero(3), &int(2)).is_err());
    assert!(weight_profile(&poly("2*x^2 + y^2"), &int(2)).is_err());
}

#[test]
fn pochhammer_values() {
    assert_eq!(pochhammer(&rat(5, 7), 0), int(1));
    assert_eq!(pochhammer(&int(2), 3), int(24));
    let d = 4;
    assert_eq!(pochhammer(&int(d - 2), 3), int(24));
}

#[test]
fn text_round_trip_and_errors() {
    for s in [
        "x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12",
        "x^2 + 1/3*y^2",
        "-x*y^3 + 5/2*x^4",
        "7",
    ] {
        let p = poly(s);
        assert_eq!(poly(&p.to_string()), p);
    }
    assert_eq!(poly("x^2+1/3*y^2").to_string(), "x^2 + 1/3*y^2");
    assert_eq!(poly("y*x").to_string(), "x*y");
    assert!(parse_hompoly("x^2 + y").is_err());
    assert!(parse_hompoly("").is_err());
    assert!(parse_hompoly("x^2 +").is_err());
    assert!(parse_hompoly("x^2 * 3").is_err());
}

#[test]
fn json_form() {
    let p = poly("x^2 + 1/3*y^2");
    assert_eq!(p.to_json(), r#"{"degree":2,"coeffs":["1","0","1/3"]}"#);
    assert_eq!(HomPoly::from_json(&p.to_json()).unwrap(), p);
    assert!(HomPoly::from_json(r#"{"degree":2,"coeffs":["1"]}"#).is_err());
}

#[test]
fn latex_form() {
    let p = poly("x^12 + 55/9*x^8*y^4 - 176/81*x^6*y^6");
    assert_eq!(
        p.to_latex(),
        "x^{12} + \\frac{55}{9}x^{8}y^{4} - \\frac{176}{81}x^{6}y^{6}"
    );
}

// ---- properties ----

fn arb_poly(deg: usize) -> impl Strategy<Value = HomPoly> {
    prop::collection::vec((-20i64..20, 1i64..6), deg + 1)
        .prop_map(move |v| HomPoly::new(deg, v.into_iter().map(|(a, b)| rat(a, b)).collect()))
}

fn arb_mat() -> impl Strategy<Value = Mat2<Rational>> {
    prop::array::uniform4((-5i64..6, 1i64..4)).prop_map(|e| {
        Mat2::new(
            rat(e[0].0, e[0].1),
            rat(e[1].0, e[1].1),
            rat(e[2].0, e[2].1),
            rat(e[3].0, e[3].1),
        )
    })
}

fn arb_q() -> impl Strategy<Value = Rational> {
    prop_oneof![
        Just(int(2)),
        Just(int(4)),
        Just(rat(4, 3)),
        Just(rat(2, 5)),
        Just(int(3))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_composes(f in arb_poly(5), s in arb_mat(), r in arb_mat()) {
        let lhs = act_matrix(&act_matrix(&f, &s).unwrap(), &r).unwrap();
        prop_assert_eq!(lhs, act_matrix(&f, &(&s * &r)).unwrap());
    }

    #[test]
    fn action_is_linear(f in arb_poly(4), g in arb_poly(4), s in arb_mat()) {
        let lhs = act_matrix(&(&f + &g), &s).unwrap();
        prop_assert_eq!(lhs, &act_matrix(&f, &s).unwrap() + &act_matrix(&g, &s).unwrap());
    }

    #[test]
    fn macwilliams_is_an_involution(f in (1usize..8).prop_flat_map(arb_poly), q in arb_q()) {
        let once = macwilliams(&f, &q).unwrap();
        prop_assert_eq!(macwilliams(&once, &q).unwrap(), f.to_quad());
    }

    #[test]
    fn operators_compose(p in arb_poly(2), r in arb_poly(3), f in arb_poly(9)) {
        let lhs = diff_op(&(&p * &r), &f).unwrap();
        prop_assert_eq!(lhs, diff_op(&p, &diff_op(&r, &f).unwrap()).unwrap());
    }

    #[test]
    fn diff_op_is_linear(p in arb_poly(3), f in arb_poly(7), g in arb_poly(7)) {
        let lhs = diff_op(&p, &(&f + &g)).unwrap();
        prop_assert_eq!(lhs, &diff_op(&p, &f).unwrap() + &diff_op(&p, &g).unwrap());
    }

    #[test]
    fn exact_division_recovers_factor(a in arb_poly(3), g in arb_poly(4), h in arb_poly(7)) {
        prop_assume!(!a.is_zero());
        let f = &a * &g;
        let got = divide_exact(&a, &f).unwrap().expect("constructed product");
        prop_assert_eq!(&(&a * &got), &f);
        match divide_exact(&a, &h).unwrap() {
            Some(c) => prop_assert_eq!(&(&a * &c), &h),
            None => {
                // a nonzero remainder must exist after stripping monomial factors
                let strip = |p: &HomPoly| {
                    let lo = p.support().next().unwrap_or(0);
                    let hi = p.support().last().unwrap_or(0);
                    (p.degree() - hi, lo, UPoly::new(p.coeffs()[lo..=hi].to_vec()))
                };
                let (ax, ay, ac) = strip(&a);
                let (hx, hy, hc) = strip(&h);
                prop_assert!(hx < ax || hy < ay || !hc.div_rem(&ac).1.is_zero());
            }
        }
    }

    /// [p^{tσ}(D) A]^σ = p(D) A^σ: the chain-rule lemma, over Q(√2).
    #[test]
    fn chain_rule_lemma(p in arb_poly(3), a in arb_poly(8), m in arb_mat()) {
        let s2 = sqrt_rational(&int(2)).unwrap().0;
        let m = m.to_quad();
        let m = Mat2::new(m.a.clone() * s2.clone(), m.b.clone(), m.c.clone(), m.d.clone());
        let p = p.to_quad();
        let a = a.to_quad();
        let lhs = act_matrix(&diff_op(&act_matrix(&p, &m.transpose()).unwrap(), &a).unwrap(), &m).unwrap();
        let rhs = diff_op(&p, &act_matrix(&a, &m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
