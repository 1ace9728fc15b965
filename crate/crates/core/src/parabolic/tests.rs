//! Cross-module checks for bundles, stability and walls.

use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::exact::{q, Field, Q};

fn dir(x0: i64, x1: i64) -> crate::exact::ProjPoint<Q> {
    direction(Q::from(x0), Q::from(x1))
}

fn chart5() -> PointConfig {
    PointConfig::chart(&[q(2, 1), q(3, 1)]).unwrap()
}

/// Directions drawn from a small palette so that coincidences are common.
fn palette(code: u8) -> crate::exact::ProjPoint<Q> {
    match code % 8 {
        0 => dir(1, 0),
        1 => dir(0, 1),
        2 => dir(1, 1),
        3 => dir(-1, 1),
        4 => dir(2, 1),
        5 => direction(q(1, 2), Q::one()),
        6 => dir(3, 1),
        _ => dir(-2, 1),
    }
}

fn config_n(n: usize) -> PointConfig {
    let t: Vec<Q> = (0..n - 3).map(|i| Q::from(i as i64 + 2)).collect();
    PointConfig::chart(&t).unwrap()
}

fn random_bundle() -> impl Strategy<Value = (ParabolicBundle, PointConfig)> {
    (3usize..=6)
        .prop_flat_map(|n| (Just(n), 0..n as i64, -2i64..=1, prop::collection::vec(any::<u8>(), n)))
        .prop_map(|(n, gap, e2, codes)| {
            let dirs = codes.into_iter().map(palette).collect();
            (ParabolicBundle::new(e2 + gap, e2, dirs).unwrap(), config_n(n))
        })
}

fn random_weights(n: usize) -> impl Strategy<Value = Weights> {
    prop::collection::vec(0i64..=12, n).prop_map(|v| Weights::new(v.into_iter().map(|x| q(x, 12)).collect()).unwrap())
}

#[test]
fn stability_index_examples() {
    let subset = [0, 1, 2, 3];
    assert_eq!(stability_index(-1, &Weights::democratic(5, q(1, 4)).unwrap(), -1, &subset), q(1, 4));
    assert_eq!(stability_index(-1, &Weights::democratic(5, q(2, 5)).unwrap(), -1, &subset), q(-1, 5));
    assert_eq!(stability_index(2, &Weights::democratic(3, Q::zero()).unwrap(), 1, &[]), Q::zero());
}

#[test]
fn subbundle_examples() {
    let cfg = config_n(4);
    let triv = ParabolicBundle::trivial_chart(&[q(5, 1)]);
    for i in 0..4 {
        assert!(triv.subbundle_exists(&cfg, 0, &[i]).unwrap());
    }
    let b = ParabolicBundle::main_chart(&[q(5, 1)]);
    assert!(b.subbundle_exists(&cfg, 0, &[]).unwrap());
    let w = b.subbundle_through(&cfg, 0, &[]).unwrap().unwrap();
    assert!(w.g.is_zero() && w.f.degree() == Some(0));

    let generic = ParabolicBundle::main_chart(&[q(-1, 1), q(7, 1)]);
    let cfg5 = chart5();
    assert!(!generic.subbundle_exists(&cfg5, -1, &[0, 1, 2, 3, 4]).unwrap());
    // The family (f linear, g constant) is 3-dimensional: two parabolics impose
    // two conditions, a third one generically kills it.
    assert!(generic.subbundle_exists(&cfg5, -1, &[0, 1]).unwrap());
    assert!(!generic.subbundle_exists(&cfg5, -1, &[0, 1, 2]).unwrap());
}

#[test]
fn witness_through_infinity() {
    // O ⊕ O(−1): the O(−1) through ε₂ at ∞ and ê₂ at 0 is (b·z, 1) with b = 0.
    let cfg = config_n(4);
    let b = ParabolicBundle::main_chart(&[q(5, 1)]);
    let s = b.subbundle_through(&cfg, -1, &[1, 3]).unwrap().unwrap();
    assert!(s.is_saturated(b.splitting()));
    for i in [1, 3] {
        let v = s.value_at(b.splitting(), cfg.point(i));
        assert_eq!(direction(v[0].clone(), v[1].clone()), b.direction(i).clone());
    }
}

#[test]
fn non_saturated_interpolants_are_rejected() {
    // O(1) ⊕ O(−1) over four poles with every parabolic on the O(1) factor:
    // degree-0 maps (f quadratic, g = 0) through all four vanish somewhere.
    let cfg = config_n(4);
    let b = ParabolicBundle::new(1, -1, vec![dir(1, 0); 4]).unwrap();
    assert!(!b.sections_through(&cfg, 0, &[0, 1, 2, 3]).unwrap().is_empty());
    assert!(!b.subbundle_exists(&cfg, 0, &[0, 1, 2, 3]).unwrap());
    assert!(b.subbundle_exists(&cfg, 1, &[0, 1, 2, 3]).unwrap());
}

#[test]
fn stability_examples() {
    let cfg = chart5();
    let w14 = Weights::democratic(5, q(1, 4)).unwrap();
    let w25 = Weights::democratic(5, q(2, 5)).unwrap();
    let b = ParabolicBundle::main_chart(&[q(-1, 1), q(7, 1)]);
    assert!(main_chart_membership(&b, &cfg).unwrap());
    assert!(is_stable(&b, &cfg, &w14).unwrap());

    // l₁…l₄ on the O(−1) spanned by (z, 1) through ê₂ at 0: directions (tᵢ:1),
    // with ∞ sitting on ε₁ + ε₂ and l₅ = l_∞ moved off it.
    let d5 = ParabolicBundle::new(0, -1, vec![dir(2, 1), dir(3, 1), dir(0, 1), dir(1, 1), dir(0, 1)]).unwrap();
    assert!(d5.subbundle_exists(&cfg, -1, &[0, 1, 2, 3]).unwrap());
    assert!(is_stable(&d5, &cfg, &w14).unwrap());
    assert!(!is_stable(&d5, &cfg, &w25).unwrap());
    assert_eq!(destabilizing_subbundle(&d5, &cfg, &w25).unwrap(), Some((-1, vec![0, 1, 2, 3])));

    let split = ParabolicBundle::new(0, 0, vec![dir(1, 0), dir(1, 0), dir(0, 1), dir(0, 1), dir(1, 0)]).unwrap();
    assert!(!is_undecomposable(&split, &cfg).unwrap());
    for w in [&w14, &w25] {
        assert!(!is_stable(&split, &cfg, w).unwrap());
    }
}

#[test]
fn undecomposable_examples() {
    let cfg4 = config_n(4);
    let b = ParabolicBundle::new(0, 0, vec![dir(0, 1), dir(1, 1), dir(1, 0), dir(5, 1)]).unwrap();
    assert!(is_undecomposable(&b, &cfg4).unwrap());
    assert!(is_simple(&b, &cfg4).unwrap());

    let cfg2 = PointConfig::new(vec![Point::Finite(Q::zero()), Point::Infinity]).unwrap();
    for l in [[dir(1, 0), dir(0, 1)], [dir(1, 1), dir(1, 1)]] {
        let b = ParabolicBundle::new(0, 0, l.to_vec()).unwrap();
        assert!(!is_undecomposable(&b, &cfg2).unwrap());
    }

    // Gap n − 1: every parabolic structure splits.
    for codes in [[2u8, 3, 4, 5], [0, 1, 2, 3], [6, 6, 7, 2]] {
        let b = ParabolicBundle::new(1, -2, codes.iter().map(|&c| palette(c)).collect()).unwrap();
        assert!(!is_undecomposable(&b, &cfg4).unwrap());
    }
    // Gap n − 2 with three parabolics on one O(−1) and one off both factors.
    let b = ParabolicBundle::new(1, -1, vec![dir(0, 1), dir(0, 1), dir(0, 1), dir(1, 1)]).unwrap();
    assert!(is_undecomposable(&b, &cfg4).unwrap());
}

#[test]
fn stabilizing_weight_examples() {
    let cfg4 = config_n(4);
    let b = ParabolicBundle::new(0, 0, vec![dir(0, 1), dir(1, 1), dir(1, 0), dir(5, 1)]).unwrap();
    let w = exists_stabilizing_weight(&b, &cfg4).unwrap().unwrap();
    assert_eq!(w.as_slice(), &[q(1, 2), q(1, 2), q(1, 2), Q::zero()]);
    assert!(is_stable(&b, &cfg4, &w).unwrap());

    let split = ParabolicBundle::new(0, 0, vec![dir(1, 0), dir(1, 0), dir(0, 1), dir(0, 1)]).unwrap();
    assert_eq!(exists_stabilizing_weight(&split, &cfg4).unwrap(), None);

    let cfg = chart5();
    let d5 = ParabolicBundle::new(0, -1, vec![dir(2, 1), dir(3, 1), dir(0, 1), dir(1, 1), dir(0, 1)]).unwrap();
    let w = exists_stabilizing_weight(&d5, &cfg).unwrap().unwrap();
    assert!(is_stable(&d5, &cfg, &w).unwrap());
    // The democratic chamber 1/5 < w < 1/3 stabilizes it as well.
    for x in [q(1, 4), q(3, 10), q(21, 100)] {
        assert!(is_stable(&d5, &cfg, &Weights::democratic(5, x).unwrap()).unwrap());
    }
}

#[test]
fn generic_bundles() {
    let cfg = chart5();
    assert!(is_generic(&ParabolicBundle::main_chart(&[q(-1, 1), q(7, 1)]), &cfg).unwrap());
    let d5 = ParabolicBundle::new(0, -1, vec![dir(2, 1), dir(3, 1), dir(0, 1), dir(1, 1), dir(0, 1)]).unwrap();
    assert!(!is_generic(&d5, &cfg).unwrap());
    let on_o = ParabolicBundle::new(0, -1, vec![dir(1, 0), dir(3, 1), dir(0, 1), dir(1, 1), dir(0, 1)]).unwrap();
    assert!(!is_generic(&on_o, &cfg).unwrap());
}

#[test]
fn main_chart_examples() {
    let cfg = chart5();
    let on_o = ParabolicBundle::new(0, -1, vec![dir(1, 0), dir(3, 1), dir(0, 1), dir(1, 1), dir(0, 1)]).unwrap();
    assert!(!main_chart_membership(&on_o, &cfg).unwrap());
    let d5 = ParabolicBundle::new(0, -1, vec![dir(2, 1), dir(3, 1), dir(0, 1), dir(1, 1), dir(1, 1)]).unwrap();
    // (z, 1) passes through all five: ε-value at ∞ is (1:1).
    assert!(!main_chart_membership(&d5, &cfg).unwrap());
    assert!(main_chart_membership(&ParabolicBundle::new(0, 0, vec![dir(1, 1); 5]).unwrap(), &cfg).is_err());
}

#[test]
fn main_chart_coordinates_roundtrip() {
    let cfg = chart5();
    let u = vec![q(-1, 3), q(7, 2)];
    let b = ParabolicBundle::main_chart(&u);
    assert_eq!(b.main_chart_coordinates(&cfg).unwrap(), u);
    // Move by an automorphism [[2, 1 − z], [0, 1]] and normalize back.
    let moved: Vec<_> = (0..5)
        .map(|i| {
            let v = b.direction(i).coords()[0].clone() * b.direction(i).coords()[1].inv().unwrap();
            let shift = match cfg.point(i) {
                Point::Finite(t) => Q::one() - t.clone(),
                Point::Infinity => -Q::one(),
            };
            direction(Q::from(2) * v + shift, Q::one())
        })
        .collect();
    let moved = ParabolicBundle::new(0, -1, moved).unwrap();
    assert!(moved.is_isomorphic(&b, &cfg).unwrap());
    assert_eq!(moved.main_chart_coordinates(&cfg).unwrap(), u);
}

#[test]
fn elm_examples() {
    let cfg = config_n(4);
    let triv = ParabolicBundle::trivial_chart(&[q(5, 1)]);
    // Elm⁻ at ∞ of the trivial chart lands on the main chart.
    let e = triv.elm_minus(&cfg, 3).unwrap();
    assert_eq!(e, ParabolicBundle::main_chart(&[q(5, 1)]));
    for i in 0..4 {
        let back = triv.elm_minus(&cfg, i).unwrap().elm_plus(&cfg, i).unwrap();
        assert!(back.is_isomorphic(&triv, &cfg).unwrap(), "pole {i}");
        assert_eq!(triv.elm_minus(&cfg, i).unwrap().degree(), -1);
        assert_eq!(triv.elm_plus(&cfg, i).unwrap().degree(), 1);
    }
}

#[test]
fn wall_examples() {
    let walls = wall_list(4, 0);
    assert_eq!(walls.len(), 12);
    for wall in &walls {
        let i1 = wall.subset().len();
        let c = wall.constant();
        // Σw = 2, wᵢ+wⱼ+w_k−w_l ∈ {0, 2}, wᵢ+wⱼ−w_k−w_l = 0, up to the overall sign.
        let family = match (i1, c) {
            (0, -2) | (4, 2) => 0,
            (1, 0) | (3, 0) | (1, -2) | (3, 2) => 1,
            (2, 0) => 2,
            _ => panic!("unexpected wall {wall:?}"),
        };
        assert!(family <= 2);
    }
    let n3 = wall_list(3, 0);
    assert_eq!(n3.len(), 4);
    assert!(n3.iter().all(|w| matches!((w.subset().len(), w.constant()), (0, -2) | (1, 0) | (2, 0))));
    for n in 3..7 {
        assert!(wall_list(n, 0).iter().any(|w| w.subset().is_empty() && w.constant() == -2));
    }
    // For two poles w₁ + w₂ = 2 only touches the corner of the cube.
    assert!(!wall_list(2, 0).iter().any(|w| w.subset().is_empty() && w.constant() == -2));
}

#[test]
fn census_n4() {
    let report = chamber_census_n4();
    assert_eq!(report.region.len(), 8);
    assert_eq!(report.cutting.len(), 4);
    assert_eq!(report.chambers.len(), 16);
    for c in &report.chambers {
        let w = Weights::new(c.sample.clone()).unwrap();
        assert!(is_admissible(&w, 0).unwrap());
        assert!(matches!(report.locate(&w), Location::Chamber(_)));
    }
    let bad = Weights::new(vec![q(1, 10), q(1, 10), q(1, 10), q(9, 10)]).unwrap();
    assert_eq!(report.locate(&bad), Location::Empty);
    let rep = Weights::new(vec![q(1, 2), q(1, 2), q(1, 2), Q::zero()]).unwrap();
    let Location::Chamber(i) = report.locate(&rep) else { panic!("representative on a wall") };
    let total = report.cutting.iter().position(|w| w.subset().is_empty()).unwrap();
    // value of Σw = 2 wall is d − 2k + Σw = Σw − 2 < 0
    assert_eq!(report.chambers[i].signs[total], -1);
}

#[test]
fn admissibility_examples() {
    assert!(is_admissible(&Weights::democratic(5, q(1, 4)).unwrap(), -1).unwrap());
    let w = Weights::new(vec![q(1, 10), q(1, 10), q(1, 10), q(9, 10)]).unwrap();
    assert!(!is_admissible(&w, 0).unwrap());
    assert!(!is_admissible(&Weights::democratic(5, Q::zero()).unwrap(), -1).unwrap());
    assert!(!is_admissible(&Weights::democratic(5, q(1, 6)).unwrap(), -1).unwrap());
    assert!(is_admissible(&Weights::democratic(4, q(1, 4)).unwrap(), 0).is_err());
}

#[test]
fn wall_crossing_examples() {
    let cfg = config_n(4);
    let u = vec![Q::zero(), Q::zero(), q(3, 1), q(-2, 1)];
    let v = vec![q(5, 1), q(-1, 2), Q::zero(), Q::zero()];
    let i1 = [0, 1];
    let l1 = wall_crossing_family(&Q::zero(), &i1, &u, &v).unwrap();
    assert_eq!(l1.direction(0), &dir(1, 0));
    assert_eq!(l1.direction(1), &dir(1, 0));
    assert_eq!(l1.direction(2), &dir(0, 1));

    let wall = Wall::new(4, 0, 0, &i1).unwrap();
    let side = |s: i64| Weights::new(vec![q(30 + s, 100), q(1, 2), q(2, 5), q(2, 5)]).unwrap();
    let (wa, wb) = (side(1), side(-1));
    assert!(wall.value(&wa).is_negative() != wall.value(&wb).is_negative());
    let eps = wall_crossing_family(&q(1, 1000), &i1, &u, &v).unwrap();
    assert!(is_stable(&eps, &cfg, &wa).unwrap() && is_stable(&eps, &cfg, &wb).unwrap());
    // The special structure l¹ ((1:0) on I₁, (uᵢ:1) on I₂) is the ε = 1, v = 0
    // member; l^ε ≅ ((1 : ε²vᵢ), (uᵢ : 1)) by diag(1/ε, 1), so it degenerates to l¹.
    let special = wall_crossing_family(&Q::one(), &i1, &u, &vec![Q::zero(); 4]).unwrap();
    assert!(is_stable(&special, &cfg, &wa).unwrap() != is_stable(&special, &cfg, &wb).unwrap());
    let e = q(1, 1000);
    let v2: Vec<Q> = v.iter().map(|x| x.clone() * e.clone() * e.clone()).collect();
    let rescaled = wall_crossing_family(&Q::one(), &i1, &u, &v2).unwrap();
    assert!(rescaled.is_isomorphic(&eps, &cfg).unwrap());

    let zero = vec![Q::zero(); 4];
    let split = wall_crossing_family(&Q::one(), &i1, &zero, &zero).unwrap();
    assert!(!is_undecomposable(&split, &cfg).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn index_monotone_in_subset(w in random_weights(5), k in -2i64..2, mask in 0u32..32, extra in 0usize..5) {
        let subset: Vec<usize> = (0..5).filter(|i| mask >> i & 1 == 1).collect();
        let mut bigger = subset.clone();
        if !bigger.contains(&extra) { bigger.push(extra); }
        prop_assert!(stability_index(-1, &w, k, &bigger) <= stability_index(-1, &w, k, &subset));
    }

    #[test]
    fn subbundle_monotone((b, cfg) in random_bundle(), mask in any::<u8>(), extra in 0usize..6, dk in 0i64..3) {
        let n = b.len();
        let k = b.splitting().0 - dk;
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let mut bigger = subset.clone();
        if extra < n && !bigger.contains(&extra) { bigger.push(extra); }
        if b.subbundle_exists(&cfg, k, &bigger).unwrap() {
            prop_assert!(b.subbundle_exists(&cfg, k, &subset).unwrap());
        }
    }

    #[test]
    fn stable_implies_semistable((b, cfg) in random_bundle(), seed in prop::collection::vec(0i64..=12, 6)) {
        let n = b.len();
        let w = Weights::new(seed[..n].iter().map(|&x| q(x, 12)).collect()).unwrap();
        let st = is_stable(&b, &cfg, &w).unwrap();
        let ss = is_semistable(&b, &cfg, &w).unwrap();
        prop_assert!(!st || ss);
        let on_wall = wall_list(n, b.degree()).iter().any(|x| x.value(&w).is_zero());
        if !on_wall { prop_assert_eq!(st, ss); }
    }

    #[test]
    fn stabilizing_weight_iff_undecomposable((b, cfg) in random_bundle()) {
        let und = is_undecomposable(&b, &cfg).unwrap();
        let w = exists_stabilizing_weight(&b, &cfg).unwrap();
        prop_assert_eq!(und, w.is_some());
        if let Some(w) = w {
            prop_assert!(is_stable(&b, &cfg, &w).unwrap());
        } else {
            // A decomposable bundle has two summands of opposite indices.
            for x in [q(1, 5), q(1, 2), q(2, 3)] {
                prop_assert!(!is_stable(&b, &cfg, &Weights::democratic(b.len(), x).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn stabilizing_chamber_matches_constructive_weight((b, cfg) in random_bundle()) {
        let chamber = stabilizing_chamber(&b, &cfg).unwrap();
        prop_assert_eq!(chamber.is_some(), exists_stabilizing_weight(&b, &cfg).unwrap().is_some());
        if let Some(ch) = &chamber {
            prop_assert!(is_stable(&b, &cfg, &ch.sample).unwrap());
            for w in &ch.walls {
                prop_assert!(w.value(&ch.sample).cmp_zero() == core::cmp::Ordering::Greater);
            }
        }
        // Any stable grid point refutes an empty chamber.
        if b.len() <= 4 && chamber.is_none() {
            let n = b.len();
            for code in 0..5usize.pow(n as u32) {
                let w: Vec<Q> = (0..n).map(|i| q((code / 5usize.pow(i as u32) % 5) as i64 * 2 + 1, 11)).collect();
                prop_assert!(!is_stable(&b, &cfg, &Weights::new(w).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn simple_iff_undecomposable((b, cfg) in random_bundle()) {
        prop_assert_eq!(is_simple(&b, &cfg).unwrap(), is_undecomposable(&b, &cfg).unwrap());
    }

    #[test]
    fn elm_preserves_stability((b, cfg) in random_bundle(), i in 0usize..6, seed in prop::collection::vec(0i64..=12, 6)) {
        let n = b.len();
        let i = i % n;
        let w = Weights::new(seed[..n].iter().map(|&x| q(x, 12)).collect()).unwrap();
        for e in [b.elm_minus(&cfg, i).unwrap(), b.elm_plus(&cfg, i).unwrap()] {
            prop_assert_eq!(is_stable(&b, &cfg, &w).unwrap(), is_stable(&e, &cfg, &w.flip(i)).unwrap());
            prop_assert_eq!(is_undecomposable(&b, &cfg).unwrap(), is_undecomposable(&e, &cfg).unwrap());
        }
        let back = b.elm_minus(&cfg, i).unwrap().elm_plus(&cfg, i).unwrap();
        prop_assert!(back.is_isomorphic(&b, &cfg).unwrap());
    }

    #[test]
    fn generic_bundles_follow_admissibility((b, cfg) in random_bundle(), seed in prop::collection::vec(1i64..12, 6)) {
        let n = b.len();
        let w = Weights::new(seed[..n].iter().map(|&x| q(x, 12)).collect()).unwrap();
        if is_generic(&b, &cfg).unwrap() {
            if let Ok(adm) = is_admissible(&w, b.degree()) {
                prop_assert_eq!(is_stable(&b, &cfg, &w).unwrap(), adm);
            }
        }
    }
}
