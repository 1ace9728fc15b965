use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::exact::{q, Field, ProjPoint, Q};
use crate::lagrangian::{bun, bun_inverse, eta_check, omega_anti_invariant};
use crate::parabolic::{is_undecomposable, SpectralData};
use crate::testkit;

fn pt(v: &[Q]) -> ProjPoint<Q> {
    ProjPoint::new(v.to_vec()).unwrap()
}

fn t23() -> [Q; 2] {
    [Q::from(2), Q::from(3)]
}

fn distinct_q(t: &[Q; 2]) -> impl Strategy<Value = [Q; 2]> {
    let t = t.clone();
    (testkit::rational(), testkit::rational())
        .prop_map(|(a, b)| [a, b])
        .prop_filter("distinct apparent points off the poles", move |q| {
            q[0] != q[1] && q.iter().all(|x| !x.is_zero() && *x != Q::one() && !t.contains(x))
        })
}

#[test]
fn closed_forms_anchor() {
    let t = t23();
    let u = [Q::zero(), Q::zero()];
    assert_eq!(pt(&bun_n5(&t, &u)), pt(&[Q::one(), Q::one(), Q::one()]));
    let r = closed_forms_n5(&t, &Q::one(), &[Q::from(3), q(4, 3)], &u).unwrap();
    assert_eq!(r.c_general, [Q::one(), Q::zero()]);
    assert_eq!(r.p_closed, [q(-1, 2), Q::from(-3)]);
    assert_eq!(r.b_from_pq, pt(&[Q::one(), Q::one(), Q::one()]));
    assert!(r.agrees(&u));
}

#[test]
fn bun_inverse_closed_form_at_anchor() {
    let u = bun_inverse_n5(&t23(), &[Q::one(), Q::one(), Q::one()]).unwrap();
    assert_eq!(u, [Q::zero(), Q::zero()]);
}

#[test]
fn catalog_examples() {
    let cat = sixteen_curves(&t23()).unwrap();
    assert_eq!(cat.d_point(0), pt(&[Q::one(), Q::from(2), Q::from(4)]));
    assert_eq!(cat.equation(CurveTag::Line(0, 1)), CurveEquation::Line([Q::from(6), Q::from(-5), Q::one()]));
    assert!(cat.contains(CurveTag::Line(0, 1), &cat.d_point(0)));
    // Poles 0, 1, ∞ give (1:0:0), (1:1:1), (0:0:1).
    assert_eq!(cat.d_point(2), pt(&[Q::one(), Q::zero(), Q::zero()]));
    assert_eq!(cat.d_point(4), pt(&[Q::zero(), Q::zero(), Q::one()]));
    for i in 0..5 {
        assert!(cat.conic_contains(&cat.d_point(i)));
        for j in 0..5 {
            if i != j {
                assert!(cat.contains(CurveTag::line(i, j), &cat.d_point(i)));
            }
        }
    }
    // Lines through ∞: t₁·b₀ − b₁ = 0 for (t₁, ∞).
    assert_eq!(cat.equation(CurveTag::Line(0, 4)), CurveEquation::Line([Q::from(2), Q::from(-1), Q::zero()]));
    let tags = CurveTag::all();
    assert_eq!(tags.len(), 16);
    assert!(tags.iter().enumerate().all(|(k, t)| t.index() == k));
}

#[test]
fn incidence_on_blow_up() {
    let cat = sixteen_curves(&t23()).unwrap();
    let g = cat.incidence().unwrap();
    assert!(g.is_regular(5));
    assert_eq!(g.neighbours(CurveTag::Conic), (0..5).map(CurveTag::Exceptional).collect::<Vec<_>>());
    assert_eq!(
        g.neighbours(CurveTag::Line(0, 1)),
        vec![
            CurveTag::Exceptional(0),
            CurveTag::Exceptional(1),
            CurveTag::Line(2, 3),
            CurveTag::Line(2, 4),
            CurveTag::Line(3, 4)
        ]
    );
    let p = cat.line_intersection((0, 1), (2, 3)).unwrap();
    assert!((0..5).all(|r| cat.d_point(r) != p));
    // Π meets Πᵢ over the parameter value of the i-th pole.
    assert_eq!(cat.conic_point(cat.pole(1)), cat.d_point(1));
}

#[test]
fn sigma_curves() {
    let cat = sixteen_curves(&t23()).unwrap();
    let s = sigma_lift(&cat);
    for c in SigmaCurve::all() {
        assert!(s.lies_in_sigma(c), "{c}");
    }
    let g1 = s.intersections(SigmaCurve::Gamma, SigmaCurve::GammaI(0)).unwrap();
    assert_eq!(g1, vec![(s.c_point(0), cat.d_point(0))]);
    assert_eq!(s.c_point(0), pt(&[Q::from(4), Q::from(-4), Q::one()]));
    let g12 = s.intersections(SigmaCurve::GammaI(0), SigmaCurve::GammaIJ(0, 1)).unwrap();
    assert_eq!(g12, vec![(s.p_point(0, 1), cat.d_point(0))]);
    assert_eq!(s.p_point(0, 1), pt(&[Q::from(6), Q::from(-5), Q::one()]));
    assert!(s.transversality_check(SigmaCurve::Gamma, SigmaCurve::GammaI(0), &g1[0]).unwrap());
    assert!(s.transversality_check(SigmaCurve::GammaI(0), SigmaCurve::GammaIJ(0, 1), &g12[0]).unwrap());
    assert!(s.transversality_check(SigmaCurve::Gamma, SigmaCurve::Gamma, &g1[0]).is_err());
    assert!(s.transversality_check(SigmaCurve::Gamma, SigmaCurve::GammaIJ(0, 1), &g1[0]).is_err());
    assert!(s.intersections(SigmaCurve::GammaIJ(0, 1), SigmaCurve::GammaIJ(2, 3)).unwrap().is_empty());
}

#[test]
fn sigma_incidence_pattern() {
    let cat = sixteen_curves(&t23()).unwrap();
    let s = sigma_lift(&cat);
    let inc = s.incidence().unwrap();
    // Γ–Γᵢ five times, Γᵢ–Γᵢⱼ twice per pair.
    assert_eq!(inc.len(), 25);
    for (c1, c2, p) in &inc {
        assert!(s.transversality_check(*c1, *c2, p).unwrap(), "{c1} {c2}");
    }
}

#[test]
fn representatives_classify() {
    let cat = sixteen_curves(&t23()).unwrap();
    for tag in CurveTag::all() {
        let b = curve_representative(&cat, tag, 1).unwrap();
        assert_eq!(classify(&cat, &b).unwrap(), BundleClass::Curve(tag));
    }
    let d = point_representative(&cat, SpecialPoint::D, 1).unwrap();
    assert!(is_undecomposable(&d, cat.config()).unwrap());
    assert_eq!(classify(&cat, &generic_representative(&cat, 1).unwrap()).unwrap(), BundleClass::Generic);
}

#[test]
fn chart_atlas() {
    let cat = sixteen_curves(&t23()).unwrap();
    let table = chart_membership_table(&cat).unwrap();
    assert_eq!(table.failed_statements(), Vec::<usize>::new());
    use SpecialObject::{Curve, Point};
    assert!(!table.contains(Chart::V, Point(SpecialPoint::D)));
    for i in 0..5 {
        assert!(!table.contains(Chart::VHat, Point(SpecialPoint::DI(i))));
        assert!(!table.contains(Chart::VI(i), Curve(CurveTag::Conic)));
        assert!(!table.contains(Chart::V, Curve(CurveTag::Exceptional(i))));
        for j in i + 1..5 {
            assert!(!table.contains(Chart::V, Point(SpecialPoint::DIJ(i, j))));
        }
    }
}

#[test]
fn elm_pair_sends_conic_to_line() {
    let cat = sixteen_curves(&t23()).unwrap();
    let act = elm_pair_action(&cat, 0, 1).unwrap();
    assert_eq!(act.permutation[CurveTag::Conic.index()], CurveTag::Line(0, 1));
    // The b-space map is a quadratic transformation, not a collineation.
    assert_eq!(act.map.degree, 2);
    // Conic points off the base locus land on the line Π₁₂.
    for z in [q(5, 7), q(-3, 2), Q::from(9)] {
        let img = act.map.apply(&cat.conic_point(&[z, Q::one()])).unwrap();
        assert!(cat.contains(CurveTag::Line(0, 1), &img));
    }
}

#[test]
fn four_fold_composite_reaches_exceptional_curves() {
    let cat = sixteen_curves(&t23()).unwrap();
    let first = elm_pair_action(&cat, 1, 2).unwrap();
    let second = elm_pair_action(&cat, 3, 4).unwrap();
    let after = first.permutation[CurveTag::Conic.index()];
    assert_eq!(second.permutation[after.index()], CurveTag::Exceptional(0));
}

#[test]
fn elm_pair_group_order_16() {
    let cat = sixteen_curves(&t23()).unwrap();
    let g = elm_pair_group(&cat).unwrap();
    assert_eq!(g.order, 16);
    assert!(g.transitive);
}

fn sd5(plus: [Q; 4], minus: [Q; 5]) -> SpectralData<Q> {
    let mut p = plus.to_vec();
    let total = p.iter().chain(minus.iter()).fold(Q::zero(), |a, x| a + x.clone());
    p.push(Q::one() - total);
    SpectralData::new(p, minus.to_vec(), -1).unwrap()
}

#[test]
fn degeneration_example() {
    let sd = sd5(
        [q(1, 3), q(2, 5), q(1, 7), q(3, 4)],
        [q(1, 2), q(-1, 3), q(1, 5), q(2, 7), q(-1, 9)],
    );
    let r = degeneration_limit(&t23(), &sd, &[q(3, 2), q(-2, 5)], &q(7, 3)).unwrap();
    let chart = deformation_chart(&t23(), &sd, &[q(3, 2), q(-2, 5)], &q(7, 3)).unwrap();
    assert!(crate::chart::verify_spectral(&chart).is_ok());
    assert!(r.a_matches(), "{:?} vs {:?}", r.a_limit, r.a_expected);
    assert!(r.apparent_at_t1.is_zero());
    assert!(r.b_on_first_special_line(), "{:?}", r.b_limit);
    assert!(!r.b_matches_literal());
    assert!(r.uvw_matches(), "{:?} vs {:?}", r.uvw_limit, r.uvw_expected);
    assert!(r.second_blowup_residual.is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_forms_agree_with_general(t in testkit::poles(2), rho in testkit::rational(), u in prop::collection::vec(testkit::rational(), 2), seed in any::<u64>()) {
        let t = [t[0].clone(), t[1].clone()];
        let u = [u[0].clone(), u[1].clone()];
        prop_assume!(!rho.is_zero());
        let mut s = SampleStream::new(seed);
        let q = [s.next_q(), s.next_q()];
        prop_assume!(q[0] != q[1] && q.iter().all(|x| !x.is_zero() && *x != Q::one() && !t.contains(x)));
        let Ok(r) = closed_forms_n5(&t, &rho, &q, &u) else { return Ok(()) };
        prop_assert!(r.agrees(&u), "{:?}", r);
    }

    #[test]
    fn bun_closed_form_equals_kernel(t in testkit::poles(2), u in prop::collection::vec(testkit::rational(), 2)) {
        let ta = [t[0].clone(), t[1].clone()];
        let ua = [u[0].clone(), u[1].clone()];
        let kernel = bun(&t, &u);
        match ProjPoint::new(bun_n5(&ta, &ua).to_vec()) {
            Some(closed) => {
                prop_assert_eq!(Some(&closed), kernel.as_ref().ok());
                if let Ok(back) = bun_inverse(&t, &closed) {
                    prop_assert_eq!(bun_inverse_n5(&ta, &bun_n5(&ta, &ua)).unwrap().to_vec(), back);
                }
            }
            None => prop_assert!(kernel.is_err()),
        }
    }

    #[test]
    fn eta_and_anti_invariance(t in testkit::poles(2), rho in testkit::rational(), q in distinct_q(&t23()), u in prop::collection::vec(testkit::rational(), 2)) {
        prop_assume!(q.iter().all(|x| !t.contains(x)));
        if let Ok(ok) = eta_check(&t, &rho, &q, &u) {
            prop_assert!(ok);
        }
        if let Ok(ok) = omega_anti_invariant(&t, &rho, &q, &u) {
            prop_assert!(ok);
        }
    }

    #[test]
    fn incidence_regular_for_random_poles(t in testkit::poles(2)) {
        let cat = sixteen_curves(&[t[0].clone(), t[1].clone()]).unwrap();
        prop_assert!(cat.incidence().unwrap().is_regular(5));
        let s = sigma_lift(&cat);
        for c in SigmaCurve::all() {
            prop_assert!(s.lies_in_sigma(c));
        }
    }

    #[test]
    fn parameterizations_satisfy_equations(t in testkit::poles(2), z in testkit::rational(), w in testkit::rational()) {
        let cat = sixteen_curves(&[t[0].clone(), t[1].clone()]).unwrap();
        prop_assert!(cat.conic_contains(&cat.conic_point(&[z.clone(), Q::one()])));
        let s = sigma_lift(&cat);
        prop_assume!(!(z.is_zero() && w.is_zero()));
        for c in SigmaCurve::all() {
            let (a, b) = s.point_at::<Q>(c, &z, &w);
            if let (Some(a), Some(b)) = (ProjPoint::new(a.to_vec()), ProjPoint::new(b.to_vec())) {
                let p = (a, b);
                prop_assert!(s.contains(c, &p));
                let param = s.parameter_of(c, &p).unwrap();
                prop_assert_eq!(param, ProjPoint::new(vec![z.clone(), w.clone()]).unwrap());
            }
        }
    }
}

#[test]
fn degeneration_random_samples() {
    let mut s = SampleStream::new(17);
    let mut checked = 0;
    for _ in 0..40 {
        let t = [s.next_q(), s.next_q()];
        if t[0] == t[1] || t.iter().any(|x| x.is_zero() || *x == Q::one()) {
            continue;
        }
        let plus = [s.next_q(), s.next_q(), s.next_q(), s.next_q()];
        let minus = [s.next_q(), s.next_q(), s.next_q(), s.next_q(), s.next_q()];
        let sd = sd5(plus, minus);
        let (c, u2) = ([s.next_q(), s.next_q()], s.next_q());
        let Ok(r) = degeneration_limit(&t, &sd, &c, &u2) else { continue };
        if sd.kappa(0).is_zero() {
            continue;
        }
        assert!(r.a_matches() && r.b_on_first_special_line() && r.uvw_matches(), "{r:?}");
        assert!(r.second_blowup_residual.is_zero());
        checked += 1;
    }
    assert!(checked >= 10, "{checked}");
}
