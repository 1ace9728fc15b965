use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::chart::{lower_left, ConnectionChart, Frame};
use crate::exact::{q, Field, Poly, ProjPoint, RatFun, Q, QT};
use crate::parabolic::SpectralData;
use crate::testkit;

fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from(x)).collect()
}

fn pt(v: &[i64]) -> ProjPoint<Q> {
    ProjPoint::new(qs(v)).unwrap()
}

/// Five poles with ρ = Σν⁻ = `rho`.
fn nu5(rho: Q) -> SpectralData<Q> {
    let minus = vec![rho, Q::zero(), Q::zero(), Q::zero(), Q::zero()];
    let mut plus = vec![q(1, 3), q(1, 5), q(1, 7), q(2, 9), Q::zero()];
    let total = plus.iter().chain(minus.iter()).fold(Q::zero(), |a, x| a + x.clone());
    plus[4] = Q::one() - total;
    SpectralData::new(plus, minus, -1).unwrap()
}

fn chart5(rho: Q, u: &[i64], lambda: i64, c: &[i64]) -> ConnectionChart<Q> {
    ConnectionChart::new(qs(&[2, 3]), nu5(rho), qs(u), Q::from(lambda), qs(c), Frame::DegreeMinus1).unwrap()
}

#[test]
fn app_examples() {
    let ch = chart5(Q::one(), &[0, 0], 1, &[1, 0]);
    assert_eq!(apparent_polynomial(&ch), Poly::new(qs(&[-12, 13, -3])));
    assert_eq!(app(&ch).unwrap(), pt(&[12, -13, 3]));
    let higgs = chart5(Q::one(), &[0, 0], 0, &[1, 0]);
    assert_eq!(apparent_polynomial(&higgs), Poly::new(qs(&[-6, 8, -2])));
    let plain = chart5(q(3, 2), &[4, 7], 1, &[0, 0]);
    assert_eq!(app(&plain).unwrap(), ProjPoint::new(Poly::from_roots(&qs(&[2, 3])).coeffs().to_vec()).unwrap());
    assert!(app(&chart5(Q::zero(), &[4, 7], 1, &[0, 0])).is_err());
}

#[test]
fn bun_examples() {
    let t = qs(&[2, 3]);
    assert_eq!(bundle_polynomial(&t, &qs(&[0, 0]), 0).coeffs(), &qs(&[-6, 8, -2])[..]);
    assert_eq!(bundle_polynomial(&t, &qs(&[0, 0]), 1).coeffs(), &qs(&[-6, 9, -3])[..]);
    assert_eq!(bun(&t, &qs(&[0, 0])).unwrap(), pt(&[1, 1, 1]));
    assert_eq!(bun_inverse(&t, &pt(&[1, 1, 1])).unwrap(), qs(&[0, 0]));
    // n = 4: b₁/b₀ = μ = t(1 − u)/(t − u).
    let b = bun(&qs(&[2]), &qs(&[3])).unwrap();
    assert_eq!(b.coords()[1].div(&b.coords()[0]).unwrap(), n4_mu(&Q::from(2), &Q::from(3)).unwrap());
    assert_eq!(mu_map(&Q::from(2), &Q::from(3)).unwrap(), Q::from(4));
    assert_eq!(mu_map(&Q::from(2), &Q::from(4)).unwrap(), Q::from(3));
}

#[test]
fn pairing_and_solve_examples() {
    let t = qs(&[2, 3]);
    let b = pt(&[1, 1, 1]);
    assert_eq!(incidence_pairing(&ProjPoint::new(qs(&[-6, 8, -2])).unwrap(), &b).unwrap(), Q::zero());
    assert_eq!(dot_raw(&qs(&[-12, 13, -3]), b.coords()), Q::from(-2));
    let sol = solve_connection(&t, &Q::one(), &pt(&[12, -13, 3]), &b).unwrap();
    assert_eq!(sol.u, qs(&[0, 0]));
    assert_eq!(sol.lambda_c, pt(&[1, 1, 0]));
    let higgs = solve_connection(&t, &Q::one(), &pt(&[-6, 8, -2]), &b).unwrap();
    assert!(higgs.is_higgs());
    assert_eq!(higgs.c(), &qs(&[1, 0])[..]);
    assert!(solve_connection(&t, &Q::zero(), &pt(&[12, -13, 3]), &b).is_err());
}

fn dot_raw(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

#[test]
fn darboux_examples() {
    let t = qs(&[2, 3]);
    let (u, c) = (qs(&[0, 0]), qs(&[1, 0]));
    assert_eq!(darboux_p(&t, &Q::one(), &u, &c, &q(4, 3)).unwrap(), Q::from(-3));
    assert_eq!(darboux_p(&t, &Q::one(), &u, &c, &Q::from(3)).unwrap(), q(-1, 2));
    assert_eq!(c_from_qu(&t, &Q::one(), &[Q::from(3), q(4, 3)], &u).unwrap(), c);
    assert_eq!(c_from_qu(&t, &Q::one(), &t, &qs(&[5, -1])).unwrap(), qs(&[0, 0]));
    assert!(darboux_p(&t, &Q::one(), &u, &c, &Q::one()).is_err());
}

#[test]
fn n4_examples() {
    let (two, one) = (Q::from(2), Q::one());
    assert_eq!(n4_forward(&two, &one, &Q::zero(), &one).unwrap(), (Q::from(-3), q(4, 3)));
    assert_eq!(n4_inverse(&two, &one, &Q::from(-3), &q(4, 3)).unwrap(), (Q::zero(), one.clone()));
    assert_eq!(q(4, 3) + one.div(&Q::from(-3)).unwrap(), Q::one());
    assert_eq!(n4_mu(&two, &Q::zero()).unwrap(), Q::one());
    assert_eq!(okamoto_swap(&q(4, 3), &one), (one, q(4, 3)));
}

#[test]
fn rho0_examples() {
    let ch = chart5(Q::zero(), &[4, 7], 5, &[1, -2]);
    assert!(degenerate_rho0_check(&ch).unwrap());
    assert!(degenerate_rho0_check(&chart5(Q::zero(), &[4, 7], 5, &[0, 0])).is_err());
    assert!(degenerate_rho0_check(&chart5(Q::one(), &[4, 7], 5, &[1, 0])).is_err());
}

#[test]
fn lambda_vanishes_simply_along_a_pencil() {
    // a(s) = a₀ + s·a₁ over ℚ(s) against b = (1:1:1): ⟨a(s), b⟩ = 1 − 2s.
    let t: Vec<QT> = qs(&[2, 3]).iter().map(QT::from_q).collect();
    let s = QT::var();
    let b = ProjPoint::new(vec![QT::one(); 3]).unwrap();
    let a: Vec<QT> = [(1, -1), (0, 0), (0, -1)]
        .iter()
        .map(|&(c0, c1)| QT::from_i64(c0) + s.clone() * QT::from_i64(c1))
        .collect();
    let lambda = lambda_for(&t, &QT::one(), &b, &a).unwrap();
    let roots = lambda.num().rational_roots().unwrap();
    assert_eq!(roots.roots, vec![q(1, 2)]);
    assert_eq!(lambda.den().rational_roots().unwrap().roots, Vec::<Q>::new());
    assert!(lambda_residue_identity(&t, &QT::one(), &b, &a).unwrap());
}

fn main_chart_sample(n: usize) -> impl Strategy<Value = (Vec<Q>, Vec<Q>)> {
    (testkit::poles(n - 3), prop::collection::vec(testkit::rational(), n - 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn apparent_polynomial_matches_matrix(ch in (4usize..=6).prop_flat_map(testkit::chart)) {
        let mut poles = ch.t().to_vec();
        poles.push(Q::zero());
        poles.push(Q::one());
        let cleared = lower_left(&ch) * RatFun::from_poly(Poly::from_roots(&poles));
        prop_assert_eq!(cleared, RatFun::from_poly(apparent_polynomial(&ch)));
    }

    #[test]
    fn bun_roundtrip((t, u) in (4usize..=6).prop_flat_map(main_chart_sample)) {
        if let Ok(b) = bun(&t, &u) {
            if let Ok(back) = bun_inverse(&t, &b) {
                prop_assert_eq!(back, u);
            }
        }
    }

    #[test]
    fn mu_map_is_an_involution(t in testkit::rational(), x in testkit::rational()) {
        prop_assume!(t != Q::zero() && t != Q::one() && x != t);
        let y = mu_map(&t, &x).unwrap();
        prop_assert_eq!(mu_map(&t, &y).unwrap(), x);
    }

    #[test]
    fn solve_inverts_app_and_bun(ch in (4usize..=6).prop_flat_map(testkit::chart)) {
        prop_assume!(!ch.rho().is_zero());
        let Ok(a) = app(&ch) else { return Ok(()) };
        let Ok(b) = bun(ch.t(), ch.u()) else { return Ok(()) };
        let Ok(sol) = solve_connection(ch.t(), &ch.rho(), &a, &b) else { return Ok(()) };
        prop_assert_eq!(&sol.u, &ch.u().to_vec());
        let mut expect = vec![ch.lambda().clone()];
        expect.extend_from_slice(ch.c());
        prop_assert_eq!(sol.lambda_c, ProjPoint::new(expect).unwrap());
        prop_assert_eq!(ch.lambda().is_zero(), incidence_pairing(&a, &b).unwrap().is_zero());
        prop_assert!(lambda_residue_identity(ch.t(), &ch.rho(), &b, a.coords()).unwrap());
    }

    #[test]
    fn darboux_p_matches_matrix(ch in testkit::chart(5)) {
        prop_assume!(!ch.rho().is_zero());
        let ch = ch.with_lambda_c(Q::one(), ch.c().to_vec()).unwrap();
        let Ok(roots) = apparent_polynomial(&ch).rational_roots() else { return Ok(()) };
        for qk in roots.roots {
            let direct = darboux_p(ch.t(), &ch.rho(), ch.u(), ch.c(), &qk);
            if let (Ok(p), Ok(m)) = (direct, darboux_p_from_matrix(&ch, &qk)) {
                prop_assert_eq!(p, m);
            }
        }
    }

    #[test]
    fn c_from_qu_places_the_apparent_points((t, u) in main_chart_sample(5), qv in prop::collection::vec(testkit::rational(), 2), rho in testkit::rational()) {
        let Ok(c) = c_from_qu(&t, &rho, &qv, &u) else { return Ok(()) };
        let ch = ConnectionChart::new(t, nu5(rho), u, Q::one(), c, Frame::DegreeMinus1).unwrap();
        let p = apparent_polynomial(&ch);
        for qk in &qv {
            prop_assert!(p.eval(qk).is_zero());
        }
    }

    #[test]
    fn n4_closed_forms_agree((t, u) in main_chart_sample(4), rho in testkit::rational(), c in testkit::rational()) {
        let (t, u) = (&t[0], &u[0]);
        prop_assume!(u != t);
        let Ok((p, qq)) = n4_forward(t, &rho, u, &c) else { return Ok(()) };
        prop_assume!(qq != *t && !qq.is_zero() && qq != Q::one());
        prop_assert_eq!(n4_inverse(t, &rho, &p, &qq).unwrap(), (u.clone(), c.clone()));
        // q is the apparent point and p the dual variable of the general formulas.
        let ch = ConnectionChart::new(vec![t.clone()], nu5_like4(rho.clone()), vec![u.clone()], Q::one(), vec![c.clone()], Frame::DegreeMinus1).unwrap();
        prop_assert!(apparent_polynomial(&ch).eval(&qq).is_zero());
        if let Ok(pg) = darboux_p(core::slice::from_ref(t), &rho, core::slice::from_ref(u), core::slice::from_ref(&c), &qq) {
            prop_assert_eq!(&pg, &p);
        }
        if !p.is_zero() {
            prop_assert_eq!(qq + rho.div(&p).unwrap(), n4_mu(t, u).unwrap());
        }
    }

    #[test]
    fn symplectic_identities_n5((t, u) in main_chart_sample(5), qv in prop::collection::vec(testkit::rational(), 2), rho in testkit::rational()) {
        let Ok(rep) = symplectic_check(&t, &rho, &qv, &u) else { return Ok(()) };
        prop_assert!(rep.liouville_holds());
        prop_assert!(rep.duality_holds());
        prop_assert!(eta_check(&t, &rho, &qv, &u).unwrap());
    }

    #[test]
    fn symplectic_identities_n4((t, u) in main_chart_sample(4), qv in testkit::rational(), rho in testkit::rational()) {
        let Ok(rep) = symplectic_check(&t, &rho, &[qv], &u) else { return Ok(()) };
        prop_assert!(rep.liouville_holds());
        prop_assert!(rep.duality_holds());
    }
}

fn nu5_like4(rho: Q) -> SpectralData<Q> {
    let minus = vec![rho, Q::zero(), Q::zero(), Q::zero()];
    let mut plus = vec![q(1, 3), q(1, 5), q(1, 7), Q::zero()];
    let total = plus.iter().chain(minus.iter()).fold(Q::zero(), |a, x| a + x.clone());
    plus[3] = Q::one() - total;
    SpectralData::new(plus, minus, -1).unwrap()
}
