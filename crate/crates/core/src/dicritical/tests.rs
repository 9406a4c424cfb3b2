use super::*;
use crate::catalog::{self, cusp_radial, cusp_zeta, zeta1, zeta2, zeta3, zeta_equality};
use crate::error::Error;
use crate::kernel::{int, ratio, RatFunc, Rational, UPoly};
use crate::oneform::{nu, pullback_form};

/// `Σ c u^d / u^e`.
fn rf(num: &[(usize, i64, i64)], den_deg: usize) -> RatFunc {
    RatFunc::new(UPoly::from_terms(num.iter().map(|&(d, p, q)| (d, ratio(p, q)))), UPoly::monomial(int(1), den_deg))
}

#[test]
fn criterion_on_golden_problems() {
    let cases = [(zeta1(), 24, Some(30), true), (zeta2(), 37, Some(45), true), (zeta3(), 37, Some(40), true)];
    for (p, lhs, rhs, verdict) in cases {
        let v = dicritical_test(&p).unwrap();
        assert_eq!((v.lhs(), v.i_h2, v.dicritical), (lhs, rhs, verdict));
    }
    let v = dicritical_test(&zeta_equality()).unwrap();
    assert_eq!((v.i_h1, v.vij, v.i_h2, v.dicritical), (9, 15, Some(24), false));
}

#[test]
fn solver_refuses_non_dicritical_input() {
    assert!(matches!(solve_separatrix_family(&zeta_equality(), 10), Err(Error::PreconditionFailed(_))));
}

#[test]
fn zeta1_family() {
    assert_eq!(solver_shift(&zeta1()).unwrap(), 4);
    let f = solve_separatrix_family(&zeta1(), 10).unwrap();
    assert_eq!(f.x_exp(), 2);
    assert_eq!(f.valid_below(), 10);
    assert_eq!(f.gamma1j(), 1);
    assert_eq!(f.coeff(3), RatFunc::u());
    assert_eq!(f.coeff(5), rf(&[(0, 5, 6)], 1));
    assert_eq!(f.coeff(7), rf(&[(0, -25, 72)], 3));
    assert_eq!(f.coeff(9), rf(&[(0, 125, 432)], 5));
    assert_eq!(f.param().y().len(), 4);
}

#[test]
fn zeta2_family() {
    let f = solve_separatrix_family(&zeta2(), 25).unwrap();
    assert_eq!(f.gamma1j(), 0);
    let expected = [
        (9, rf(&[(0, 1, 1)], 0)),
        (12, rf(&[(0, 1, 1)], 0)),
        (13, RatFunc::u()),
        (17, rf(&[(2, -1, 2)], 0)),
        (21, rf(&[(0, -15, 32), (3, 1, 2)], 0)),
        (24, rf(&[(0, -1, 44)], 0)),
    ];
    assert_eq!(f.param().y().len(), expected.len());
    for (l, c) in expected {
        assert_eq!(f.coeff(l), c, "t^{l}");
    }
}

#[test]
fn zeta3_family_under_sign_change() {
    let f = solve_separatrix_family(&zeta3(), 21).unwrap().negate_parameter();
    let expected = [
        (9, rf(&[(0, 1, 1)], 0)),
        (12, rf(&[(0, 1, 1)], 0)),
        (13, rf(&[(1, -1, 1)], 0)),
        (17, rf(&[(2, 35, 18)], 0)),
        (19, rf(&[(1, 473, 180)], 0)),
        (20, rf(&[(2, -748, 189)], 0)),
    ];
    assert_eq!(f.param().y().len(), expected.len());
    for (l, c) in expected {
        assert_eq!(f.coeff(l), c, "t^{l}");
    }
}

#[test]
fn families_annihilate_the_form() {
    for (_, p, k, _) in catalog::golden_problems() {
        let f = solve_separatrix_family(&p, k).unwrap();
        let form = p.form();
        for u0 in catalog::sample_parameters() {
            let psi = specialize_family(&f, &u0).unwrap();
            let ord = pullback_form(&form, &psi).ord();
            assert!(!matches!(ord, crate::kernel::Order::Finite(e) if e < k), "u = {u0}: {ord:?}");
        }
    }
}

#[test]
fn extra_separatrices_at_zero() {
    let f2 = solve_separatrix_family(&zeta2(), 25).unwrap();
    let psi0 = specialize_family(&f2, &int(0)).unwrap();
    assert_eq!(psi0.coeff(21), ratio(-15, 32));
    assert_eq!(psi0.coeff(24), ratio(-1, 44));
    let reduced = psi0.reduce_ramification();
    assert_eq!(reduced.n(), 2);
    assert_eq!(reduced.coeff(7), ratio(-15, 32));
    assert_eq!(reduced.coeff(8), ratio(-1, 44));

    let f3 = solve_separatrix_family(&zeta3(), 21).unwrap();
    let psi0 = specialize_family(&f3, &int(0)).unwrap().reduce_ramification();
    assert_eq!(psi0.n(), 2);
    assert_eq!(psi0.y().terms().map(|(k, c)| (k, c.clone())).collect::<Vec<_>>(), vec![(3, int(1)), (4, int(1))]);

    let f1 = solve_separatrix_family(&zeta1(), 10).unwrap();
    assert_eq!(specialize_family(&f1, &int(0)), Err(Error::PoleAtPoint("0".into())));
}

#[test]
fn special_members_and_contacts() {
    let expected: [(usize, Rational, Rational); 3] =
        [(5, ratio(5, 6), int(2)), (17, int(-2), ratio(17, 6)), (17, ratio(70, 9), ratio(17, 6))];
    for ((_, p, k, _), (l, coeff, c)) in catalog::golden_problems().into_iter().zip(expected) {
        let f = solve_separatrix_family(&p, k).unwrap();
        let star = special_separatrix(&p, &f).unwrap();
        assert_eq!(star.coeff(l), coeff);
        let nu_w = nu(&p.form(), p.system().source()).unwrap();
        assert_eq!(contact(p.system().source(), &star), ContactValue::Exact(c.clone()));
        assert_eq!(contact_value_formula(&p, nu_w).unwrap(), c);
    }
}

#[test]
fn merle_and_special_intersection_agree() {
    for ((_, p, k, _), expected) in catalog::golden_problems().into_iter().zip([21, 70, 70]) {
        let s = p.system();
        let f = solve_separatrix_family(&p, k).unwrap();
        let nu_w = nu(&p.form(), s.source()).unwrap();
        let c = contact_value_formula(&p, nu_w).unwrap();
        let merle = merle_intersection(s.ladder(), s.semigroup(), &c, f.x_exp()).unwrap();
        assert_eq!(merle, expected);
        assert_eq!(special_intersection(&p, nu_w).unwrap(), expected as i64);
    }
}

#[test]
fn merle_cases() {
    let s = catalog::system(&catalog::sextic());
    let (l, sg) = (s.ladder(), s.semigroup());
    // Generic members of the F₂- and F₃-level families.
    assert_eq!(merle_intersection(l, sg, &ratio(9, 6), 2).unwrap(), 18);
    assert_eq!(merle_intersection(l, sg, &ratio(13, 6), 6).unwrap(), 66);
    assert_eq!(merle_intersection(l, sg, &int(1), 1).unwrap(), 6);
    assert!(matches!(merle_intersection(l, sg, &ratio(7, 4), 1), Err(Error::NonIntegralResult(_))));
}

#[test]
fn contact_markers() {
    let p = catalog::sextic();
    assert_eq!(contact(&p, &p), ContactValue::Infinite);
    let t = p.with_valid_below(20);
    assert_eq!(contact(&t, &t), ContactValue::AtLeast(ratio(20, 6)));
}

#[test]
fn genus_one_identity() {
    for p in [cusp_radial(), cusp_zeta()] {
        let f = solve_separatrix_family(&p, 12).unwrap();
        let id = lambda_g1_identity_check(&p, &f).unwrap();
        assert!(id.holds(), "{id:?}");
    }
    let id = lambda_g1_identity_check(&cusp_radial(), &solve_separatrix_family(&cusp_radial(), 12).unwrap()).unwrap();
    assert_eq!((id.nu, id.i_h1_fstar), (8, 9));
    let f = solve_separatrix_family(&zeta1(), 10).unwrap();
    assert!(matches!(lambda_g1_identity_check(&zeta1(), &f), Err(Error::PreconditionFailed(_))));
}

#[test]
fn d1_examples() {
    use crate::curvering::WPoly;
    use crate::oneform::{omega_ij, OneForm};
    let cusp = catalog::system(&catalog::cusp());
    let w01 = omega_ij(&cusp, 0, 1).unwrap();
    assert!(d1_membership(&cusp, &w01).unwrap().member());
    let plus_x2 = w01.add(&OneForm::new(WPoly::from_ints(&[(2, 0, 1)]), WPoly::zero()));
    assert!(d1_membership(&cusp, &plus_x2).unwrap().member());
    let plus_y = w01.add(&OneForm::new(WPoly::y(), WPoly::zero()));
    assert!(!d1_membership(&cusp, &plus_y).unwrap().member());

    let s = catalog::system(&catalog::sextic_normal());
    let w = omega_ij(&s, 0, 1).unwrap();
    assert_eq!(d1_zariski_bound_check(&s, &w).unwrap(), (true, 13, Some(13)));
    assert_eq!(d1_search_equality(&s, 2).unwrap(), Some(w));
}
