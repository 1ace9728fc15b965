use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::chart::ParConnection;
use crate::exact::{q, Field, Q};
use crate::parabolic::{ElmSign, ParabolicBundle, PointConfig, SpectralData, Weights};
use crate::testkit;

fn sd4() -> SpectralData<Q> {
    let minus = vec![q(1, 2), q(1, 4), q(1, 6), q(1, 8)];
    let mut plus = vec![q(1, 3), q(1, 5), q(1, 7), Q::zero()];
    let total = plus.iter().chain(minus.iter()).fold(Q::zero(), |a, x| a + x.clone());
    plus[3] = Q::one() - total;
    SpectralData::new(plus, minus, -1).unwrap()
}

#[test]
fn twist_examples() {
    let sd = sd4();
    let zero = RankOneTwist::from_exponents(vec![Q::zero(); 4]).unwrap();
    assert_eq!(twist(&sd, &zero).unwrap(), sd);
    let tw = RankOneTwist::from_exponents(vec![Q::one(), Q::zero(), Q::zero(), Q::zero()]).unwrap();
    let out = twist(&sd, &tw).unwrap();
    assert_eq!(out.pair(0), (sd.plus(0).clone() + Q::one(), sd.minus(0).clone() + Q::one()));
    assert_eq!(out.degree(), sd.degree() - 2);
    assert_eq!(twist(&out, &tw.inverse()).unwrap(), sd);
    assert!(RankOneTwist::from_exponents(vec![q(1, 2), Q::zero(), Q::zero(), Q::zero()]).is_err());
    assert!(RankOneTwist::new(vec![Q::one(), Q::zero()], 0).is_err());
}

#[test]
fn elm_spectral_examples() {
    let sd = sd4();
    let m = elm_spectral(&sd, 2, ElmSign::Minus).unwrap();
    assert_eq!(m.pair(2), (sd.minus(2).clone() + Q::one(), sd.plus(2).clone()));
    assert_eq!(m.degree(), -2);
    let mm = elm_spectral(&m, 2, ElmSign::Minus).unwrap();
    assert_eq!(mm, twist(&sd, &RankOneTwist::point(4, 2)).unwrap());
    assert_eq!(elm_spectral(&m, 2, ElmSign::Plus).unwrap(), sd);
    assert!(elm_spectral(&sd, 4, ElmSign::Minus).is_err());
}

#[test]
fn elm_chart_map_examples() {
    let cfg = PointConfig::chart(&[q(2, 1)]).unwrap();
    let img = elm_chart_map_n(&cfg, &[Q::zero()]).unwrap();
    assert_eq!(img.v, vec![Q::zero(), Q::zero(), Q::one(), Q::zero()]);
    assert_eq!(img.point.coords(), &[Q::zero(), Q::one()]);
    let cfg5 = PointConfig::chart(&[q(2, 1), q(-1, 3)]).unwrap();
    let u = [q(5, 2), q(-7, 1)];
    let img = elm_chart_map_n(&cfg5, &u).unwrap();
    assert_eq!(img.v, vec![u[0].clone(), u[1].clone(), Q::zero(), Q::one(), Q::zero()]);
    // Elm⁺ at ∞ of the main chart returns the trivial chart verbatim.
    let back = elm_plus(&ParabolicBundle::main_chart(&u), &cfg5, 4).unwrap();
    assert_eq!(back, ParabolicBundle::trivial_chart(&u));
}

#[test]
fn isomorphism_detects_different_connections() {
    let sd = sd4();
    let a = crate::chart::ConnectionChart::new(vec![q(2, 1)], sd.clone(), vec![q(3, 1)], Q::one(), vec![q(1, 2)], crate::chart::Frame::DegreeMinus1)
        .unwrap();
    let b = a.with_lambda_c(Q::one(), vec![q(2, 3)]).unwrap();
    assert!(connections_isomorphic(&a.to_connection(), &a.to_connection()).unwrap());
    assert!(!connections_isomorphic(&a.to_connection(), &b.to_connection()).unwrap());
}

fn conn_and_pole() -> impl Strategy<Value = (ParConnection<Q>, usize)> {
    (4usize..=5).prop_flat_map(|n| (testkit::chart(n).prop_map(|c| c.to_connection()), 0..n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn elm_keeps_connections_consistent((conn, i) in conn_and_pole(), plus in any::<bool>()) {
        let sign = if plus { ElmSign::Plus } else { ElmSign::Minus };
        let e = elm_connection(&conn, i, sign).unwrap();
        prop_assert_eq!(e.verify(), Ok(()));
        prop_assert_eq!(e.degree(), conn.degree() + if plus { 1 } else { -1 });
    }

    #[test]
    fn elm_plus_inverts_elm_minus((conn, i) in conn_and_pole()) {
        let back = elm_connection(&elm_connection(&conn, i, ElmSign::Minus).unwrap(), i, ElmSign::Plus).unwrap();
        prop_assert!(connections_isomorphic(&back, &conn).unwrap());
    }

    #[test]
    fn elm_squared_is_a_twist((conn, i) in conn_and_pole()) {
        let n = conn.poles().len();
        let twice = elm_connection(&elm_connection(&conn, i, ElmSign::Minus).unwrap(), i, ElmSign::Minus).unwrap();
        let tw = twist_connection(&conn, &RankOneTwist::point(n, i)).unwrap();
        prop_assert_eq!(tw.verify(), Ok(()));
        prop_assert!(connections_isomorphic(&twice, &tw).unwrap());
    }

    #[test]
    fn spectral_elm_identities(sd in testkit::spectral(5), i in 0usize..5) {
        let m = elm_spectral(&sd, i, ElmSign::Minus).unwrap();
        prop_assert_eq!(elm_spectral(&m, i, ElmSign::Plus).unwrap(), sd.clone());
        prop_assert_eq!(elm_spectral(&m, i, ElmSign::Minus).unwrap(), twist(&sd, &RankOneTwist::point(5, i)).unwrap());
    }

    #[test]
    fn weight_elm_is_an_involution(w in prop::collection::vec(0i64..=10, 5), i in 0usize..5) {
        let w = Weights::new(w.into_iter().map(|x| q(x, 10)).collect::<Vec<Q>>()).unwrap();
        prop_assert_eq!(elm_weights(&elm_weights(&w, i).unwrap(), i).unwrap(), w);
    }

    #[test]
    fn twist_roundtrip(sd in testkit::spectral(5), mu in prop::collection::vec(-3i64..=3, 5), k in 1i64..4) {
        let mut mu: Vec<Q> = mu.into_iter().map(|x| q(x, k)).collect();
        let s = mu.iter().fold(Q::zero(), |a, x| a + x.clone());
        mu[0] = mu[0].clone() - s + Q::from(2);
        let tw = RankOneTwist::from_exponents(mu).unwrap();
        prop_assert_eq!(tw.degree(), -2);
        prop_assert_eq!(twist(&twist(&sd, &tw).unwrap(), &tw.inverse()).unwrap(), sd);
    }
}
