use fwe_core::families::{is_fwe, BoundStatus, Family};
use fwe_core::homopoly::macwilliams_rational;
use fwe_core::zeta::{odd_star_scan, zeta_polynomial};

#[test]
fn basis_members_have_the_family_sign_and_divisibility() {
    for fam in Family::ALL {
        let spec = fam.spec();
        for n in 1..=60 {
            for b in spec.basis(n) {
                let t = macwilliams_rational(&b.poly, &spec.q).unwrap();
                assert_eq!(
                    t,
                    b.poly.scale(&fwe_core::scalar::int(spec.member_sign().into())),
                    "{fam} ({}, {})",
                    b.l,
                    b.m
                );
                assert!(b.poly.support().all(|i| i % spec.c == 0), "{fam} ({}, {})", b.l, b.m);
            }
        }
    }
}

#[test]
fn extremal_members_are_formal_weight_enumerators() {
    for fam in Family::ALL.into_iter().filter(|&f| f != Family::Q43Even) {
        let spec = fam.spec();
        for n in spec.admissible_degrees(60) {
            let Ok(e) = spec.extremal(n) else {
                assert_eq!(
                    spec.bound(n).unwrap().status,
                    BoundStatus::ConjecturalOnly,
                    "{fam} n={n}"
                );
                continue;
            };
            let check = is_fwe(&e.poly, &spec.q, spec.c).unwrap();
            assert!(check.is_fwe && check.genus_nonnegative, "{fam} n={n}");
            assert_eq!(check.profile.d, e.d());
        }
    }
}

#[test]
fn invariant_family_has_sign_plus_one() {
    let spec = Family::Q43Even.spec();
    for n in spec.admissible_degrees(48) {
        let e = spec.extremal(n).unwrap();
        let check = is_fwe(&e.poly, &spec.q, 2).unwrap();
        assert_eq!(check.sign, Some(1));
        assert!(!check.is_fwe && check.divisible);
    }
}

#[test]
fn classical_bounds_dominate() {
    use fwe_core::families::{mallows_sloane_type1, mallows_sloane_type4};
    for n in (4..=100).step_by(2) {
        if let Ok(b) = Family::TypeI.spec().bound(n) {
            assert!(b.d_max <= mallows_sloane_type1(n));
        }
    }
    for n in (3..=99).step_by(2) {
        if let Ok(b) = Family::TypeIV.spec().bound(n) {
            assert!(b.d_max <= mallows_sloane_type4(n));
        }
    }
}

#[test]
fn odd_family_zeta_relation_scan() {
    for k in 2..=4 {
        let r = odd_star_scan(k).unwrap();
        assert!(r.zeta_relation, "n = {}", r.n);
    }
}

#[test]
fn ozeki_zeta_polynomials_have_sign_minus_one() {
    let spec = Family::Ozeki.spec();
    for n in spec.admissible_degrees(60) {
        let e = spec.extremal(n).unwrap();
        let z = zeta_polynomial(&e.poly, &spec.q).unwrap();
        assert_eq!(z.sign, Some(-1), "n={n}");
    }
}
