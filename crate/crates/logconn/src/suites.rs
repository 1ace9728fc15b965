//! Seeded verification suites. Each draws in-domain samples until `samples`
//! have been checked, records every failing input for replay, and fails when
//! the domain filter rejects too many draws to reach the quota.

use logconn_core::chart::{verify_spectral, ConnectionChart, Frame};
use logconn_core::delpezzo::{
    chart_membership_table, closed_forms_n5, degeneration_limit, elm_pair_group, sigma_lift, sixteen_curves, CurveTag,
    SigmaCurve,
};
use logconn_core::exact::{q, wedge_sum, Field, Jet, ProjPoint, Q};
use logconn_core::lagrangian::{
    app, bun, degenerate_rho0_check, eta_check, incidence_pairing, n4_forward, n4_inverse, n4_mu, solve_connection,
    symplectic_check,
};
use logconn_core::parabolic::{
    chamber_census_n4, exists_stabilizing_weight, is_stable, is_undecomposable, stabilizing_chamber, wall_list,
    ElmSign, Location, SpectralData,
};
use logconn_core::transforms::{
    connections_isomorphic, elm_connection, elm_spectral, elm_weights, twist, twist_connection, RankOneTwist,
};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::encode;
use crate::sample::Sampler;

pub const SUITES: &[&str] = &[
    "n4",
    "n5",
    "duality",
    "walls",
    "delpezzo",
    "degeneration",
    "symplectic",
    "transforms",
    "spectral",
    "rho0",
    "stability",
];

/// Draws allowed per requested sample before the suite gives up.
const ATTEMPTS_PER_SAMPLE: usize = 50;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub checked: usize,
    pub skipped: usize,
    pub failures: usize,
    pub pass: bool,
    /// Suite-specific counters, sorted by key.
    pub details: Map<String, Value>,
    pub counterexamples: Vec<Value>,
}

impl SuiteReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }

    /// One summary line.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} checked, {} skipped, {} failures)",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" },
            self.checked,
            self.skipped,
            self.failures
        )
    }
}

enum Step {
    /// Outside the domain of the identities under test; redrawn.
    Skip,
    Pass,
    Fail(Value),
}

struct Tally {
    name: String,
    seed: u64,
    samples: usize,
    checked: usize,
    skipped: usize,
    short: bool,
    details: Map<String, Value>,
    counterexamples: Vec<Value>,
}

impl Tally {
    fn new(name: &str, seed: u64, samples: usize) -> Self {
        Tally {
            name: name.into(),
            seed,
            samples,
            checked: 0,
            skipped: 0,
            short: false,
            details: Map::new(),
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, step: Step) {
        match step {
            Step::Skip => self.skipped += 1,
            Step::Pass => self.checked += 1,
            Step::Fail(v) => {
                self.checked += 1;
                self.counterexamples.push(v);
            }
        }
    }

    /// A fixed input outside the random quota.
    fn anchor(&mut self, label: &str, ok: bool, input: Value) {
        self.bump(if ok { "anchors_passed" } else { "anchors_failed" });
        if !ok {
            self.counterexamples.push(json!({ "anchor": label, "input": input }));
        }
    }

    fn bump(&mut self, key: &str) {
        let v = self.details.get(key).and_then(Value::as_u64).unwrap_or(0);
        self.details.insert(key.into(), json!(v + 1));
    }

    /// Draw until `quota` samples are checked.
    fn run(&mut self, quota: usize, mut draw: impl FnMut(&mut Tally) -> Step) {
        let target = self.checked + quota;
        let mut attempts = 0;
        while self.checked < target {
            if attempts == quota * ATTEMPTS_PER_SAMPLE {
                self.short = true;
                self.details.insert(format!("quota_missed_{}", self.details.len()), json!(target - self.checked));
                return;
            }
            attempts += 1;
            let step = draw(self);
            self.record(step);
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.short |= other.failures > other.counterexamples.len();
        for (k, v) in other.details {
            self.details.insert(format!("{}.{}", other.suite, k), v);
        }
        self.counterexamples.extend(other.counterexamples);
    }

    fn finish(self) -> SuiteReport {
        let failures = self.counterexamples.len() + usize::from(self.short);
        SuiteReport {
            suite: self.name,
            seed: self.seed,
            samples: self.samples,
            checked: self.checked,
            skipped: self.skipped,
            failures,
            pass: failures == 0,
            details: self.details,
            counterexamples: self.counterexamples,
        }
    }
}

pub fn run_suite(name: &str, seed: u64, samples: usize) -> Option<SuiteReport> {
    Some(match name {
        "n4" => n4(seed, samples),
        "n5" => n5(seed, samples),
        "duality" => duality(seed, samples),
        "walls" => walls(seed, samples),
        "delpezzo" => delpezzo(seed, samples),
        "degeneration" => degeneration(seed, samples),
        "symplectic" => symplectic(seed, samples),
        "transforms" => transforms(seed, samples),
        "spectral" => spectral(seed, samples),
        "rho0" => rho0(seed, samples),
        "stability" => stability(seed, samples),
        _ => return None,
    })
}

fn fail(reason: &str, input: Value) -> Step {
    Step::Fail(json!({ "reason": reason, "input": input }))
}

/// Four poles: (p, q) closed forms invert exactly, q + ρ/p = μ = t(1 − u)/(t − u),
/// and dp∧dq = dc∧du with (u, c) as jet variables.
pub fn n4(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("n4", seed, samples);
    let (two, one) = (Q::from(2), Q::one());
    let anchor = n4_forward(&two, &one, &Q::zero(), &one);
    tally.anchor(
        "t=2, rho=1, u=0, c=1 gives (p, q) = (-3, 4/3)",
        anchor == Ok((Q::from(-3), q(4, 3))),
        json!({"t": "2", "rho": "1", "u": "0", "c": "1"}),
    );
    let mut s = Sampler::new(seed);
    tally.run(samples, |_| {
        let t = s.poles(1).remove(0);
        let (rho, u, c) = (s.rational(), s.rational(), s.rational());
        if u == t {
            return Step::Skip;
        }
        let input = json!({"t": encode::q(&t), "rho": encode::q(&rho), "u": encode::q(&u), "c": encode::q(&c)});
        let Ok((p, qq)) = n4_forward(&t, &rho, &u, &c) else { return Step::Skip };
        match n4_inverse(&t, &rho, &p, &qq) {
            Ok(back) if back == (u.clone(), c.clone()) => {}
            _ => return fail("inverse does not return (u, c)", input),
        }
        let mu_direct = (t.clone() * (Q::one() - u.clone())).div(&(t.clone() - u.clone())).expect("u differs from t");
        let Some(ratio) = rho.div(&p) else { return fail("p vanished on the chart", input) };
        if qq + ratio != mu_direct || n4_mu(&t, &u).as_ref() != Ok(&mu_direct) {
            return fail("q + rho/p differs from t(1-u)/(t-u)", input);
        }
        let vars = Jet::variables(&[u.clone(), c.clone()]);
        let (tj, rj) = (Jet::constant(t.clone()), Jet::constant(rho.clone()));
        let Ok((pj, qj)) = n4_forward(&tj, &rj, &vars[0], &vars[1]) else {
            return fail("jet evaluation failed where the scalar one succeeded", input);
        };
        if wedge_sum(&[pj], &[qj], 2) != wedge_sum(&[vars[1].clone()], &[vars[0].clone()], 2) {
            return fail("dp^dq differs from dc^du", input);
        }
        Step::Pass
    });
    tally.finish()
}

/// Five poles: closed forms for b, u, c, a and p against the general algorithms.
pub fn n5(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("n5", seed, samples);
    let t = [Q::from(2), Q::from(3)];
    let u = [Q::zero(), Q::zero()];
    let ones = ProjPoint::new(vec![Q::one(); 3]).expect("nonzero");
    let anchor = closed_forms_n5(&t, &Q::one(), &[Q::from(3), q(4, 3)], &u);
    let ok = anchor.as_ref().is_ok_and(|r| {
        r.agrees(&u)
            && r.b_kernel == ones
            && r.c_general == [Q::one(), Q::zero()]
            && r.p_general == [q(-1, 2), Q::from(-3)]
            && r.b_from_pq == ones
    });
    tally.anchor(
        "t=(2,3), u=(0,0), q=(3,4/3), rho=1 gives b=(1:1:1), c=(1,0), p=(-1/2,-3)",
        ok,
        json!({"t": ["2", "3"], "u": ["0", "0"], "q": ["3", "4/3"], "rho": "1"}),
    );
    let mut s = Sampler::new(seed);
    tally.run(samples, |_| {
        let tv = s.poles(2);
        let t = [tv[0].clone(), tv[1].clone()];
        let rho = s.nonzero();
        let qv = s.distinct(2, &[Q::zero(), Q::one(), t[0].clone(), t[1].clone()]);
        let qa = [qv[0].clone(), qv[1].clone()];
        let uv = s.rationals(2);
        let u = [uv[0].clone(), uv[1].clone()];
        let input = json!({"t": encode::qs(&t), "rho": encode::q(&rho), "q": encode::qs(&qa), "u": encode::qs(&u)});
        match closed_forms_n5(&t, &rho, &qa, &u) {
            Err(_) => Step::Skip,
            Ok(r) if r.agrees(&u) => Step::Pass,
            Ok(r) => fail(&format!("closed forms disagree: {r:?}"), input),
        }
    });
    tally.finish()
}

/// (a, b) ↦ connection: λ = 0 exactly on ⟨a, b⟩ = 0, App and Bun reproduce
/// (a, b), and charts with λρ ≠ 0 never land on the incidence variety.
pub fn duality(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("duality", seed, samples);
    let mut s = Sampler::new(seed);
    for n in 4..=7 {
        let m = n - 3;
        tally.run(samples, |tally| {
            let t = s.poles(m);
            let rho = s.nonzero();
            let Some(b) = ProjPoint::new(s.rationals(m + 1)) else { return Step::Skip };
            let mut a_raw = s.rationals(m + 1);
            if s.coin() {
                // Move a onto the hyperplane ⟨·, b⟩ = 0.
                let k = b.coords().iter().position(|x| !x.is_zero()).expect("nonzero point");
                let rest = (0..=m).filter(|&j| j != k).fold(Q::zero(), |acc, j| acc + a_raw[j].clone() * b.coords()[j].clone());
                a_raw[k] = (-rest).div(&b.coords()[k]).expect("nonzero coordinate");
            }
            let Some(a) = ProjPoint::new(a_raw) else { return Step::Skip };
            let input = json!({"n": n, "t": encode::qs(&t), "rho": encode::q(&rho), "a": encode::proj(&a), "b": encode::proj(&b)});
            let Ok(sol) = solve_connection(&t, &rho, &a, &b) else { return Step::Skip };
            let on_sigma = incidence_pairing(&a, &b).expect("same length").is_zero();
            tally.bump(if on_sigma { "on_incidence" } else { "off_incidence" });
            if sol.is_higgs() != on_sigma {
                return fail("lambda = 0 does not match the incidence condition", input);
            }
            let nu = s.spectral(n, &rho);
            let chart = ConnectionChart::new(t.clone(), nu, sol.u.clone(), sol.lambda().clone(), sol.c().to_vec(), Frame::DegreeMinus1)
                .expect("distinct poles");
            if app(&chart).as_ref() != Ok(&a) {
                return fail("App of the solved connection differs from a", input);
            }
            if bun(&t, &sol.u).as_ref() != Ok(&b) {
                return fail("Bun of the solved connection differs from b", input);
            }
            Step::Pass
        });
        tally.run(samples, |tally| {
            let rho = s.nonzero();
            let lambda = s.nonzero();
            let chart = s.chart(n, &rho, lambda, Frame::DegreeMinus1);
            let (Ok(a), Ok(b)) = (app(&chart), bun(chart.t(), chart.u())) else { return Step::Skip };
            tally.bump("forward");
            if incidence_pairing(&a, &b).expect("same length").is_zero() {
                return fail("a connection with lambda*rho != 0 maps onto the incidence variety", chart_json(&chart));
            }
            Step::Pass
        });
    }
    tally.finish()
}

fn chart_json(c: &ConnectionChart<Q>) -> Value {
    json!({
        "t": encode::qs(c.t()),
        "nu": encode::spectral(c.nu()),
        "u": encode::qs(c.u()),
        "lambda": encode::q(c.lambda()),
        "c": encode::qs(c.c()),
        "frame": if c.frame() == Frame::Degree0 { 0 } else { -1 },
    })
}

/// Σdp∧dq = Σdc∧du and ω = ρ·d(Σa db/Σab) on (q, u) jets, n = 4 and 5; for n = 5
/// also the 1-form identity behind ω.
pub fn symplectic(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("symplectic", seed, samples);
    let mut s = Sampler::new(seed);
    for n in [4usize, 5] {
        let m = n - 3;
        tally.run(samples, |_| {
            let t = s.poles(m);
            let rho = s.nonzero();
            let mut avoid = t.clone();
            avoid.extend([Q::zero(), Q::one()]);
            let qv = s.distinct(m, &avoid);
            let u = s.rationals(m);
            let input = json!({"t": encode::qs(&t), "rho": encode::q(&rho), "q": encode::qs(&qv), "u": encode::qs(&u)});
            let Ok(rep) = symplectic_check(&t, &rho, &qv, &u) else { return Step::Skip };
            if !rep.liouville_holds() {
                return fail("dp^dq differs from dc^du", input);
            }
            if !rep.duality_holds() {
                return fail("dp^dq differs from rho d(a db / ab)", input);
            }
            if n == 5 && eta_check(&t, &rho, &qv, &u) != Ok(true) {
                return fail("1-form identity fails", input);
            }
            Step::Pass
        });
    }
    tally.finish()
}

/// Elm⁻∘Elm⁻ = twist and Elm⁺∘Elm⁻ = id on exponents, weights and matrices, and
/// stability preserved under Elm with w ↦ 1 − w at the pole.
pub fn transforms(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("transforms", seed, samples);
    let mut s = Sampler::new(seed);
    tally.run(samples, |_| {
        let n = s.int(4, 5) as usize;
        let (rho, lambda, frame) = (s.rational(), s.rational(), s.frame());
        let chart = s.chart(n, &rho, lambda, frame);
        let i = s.index(n);
        let input = json!({"chart": chart_json(&chart), "at": i + 1});
        let sd = chart.nu();
        let minus = elm_spectral(sd, i, ElmSign::Minus).expect("index in range");
        if elm_spectral(&minus, i, ElmSign::Minus) != twist(sd, &RankOneTwist::point(n, i)) {
            return fail("Elm- twice differs from the twist on exponents", input);
        }
        if elm_spectral(&minus, i, ElmSign::Plus).as_ref() != Ok(sd) {
            return fail("Elm+ does not invert Elm- on exponents", input);
        }
        let w = s.weights(n);
        let flipped = elm_weights(&w, i).expect("index in range");
        let rule = (0..n).all(|j| *flipped.get(j) == if j == i { Q::one() - w.get(j).clone() } else { w.get(j).clone() });
        if !rule || elm_weights(&flipped, i).as_ref() != Ok(&w) {
            return fail("weight rule w -> 1 - w fails", json!({"weights": encode::weights(&w), "at": i + 1}));
        }
        let conn = chart.to_connection();
        let matrices = (|| -> logconn_core::Result<bool> {
            let once = elm_connection(&conn, i, ElmSign::Minus)?;
            if once.verify().is_err() {
                return Ok(false);
            }
            let twice = elm_connection(&once, i, ElmSign::Minus)?;
            let tw = twist_connection(&conn, &RankOneTwist::point(n, i))?;
            let back = elm_connection(&once, i, ElmSign::Plus)?;
            Ok(connections_isomorphic(&twice, &tw)? && connections_isomorphic(&back, &conn)?)
        })();
        if matrices != Ok(true) {
            return fail(&format!("matrix identities fail: {matrices:?}"), input);
        }
        let (b, cfg) = s.bundle();
        let j = s.index(b.len());
        let w = s.weights(b.len());
        let bin = json!({"bundle": encode::bundle(&b, &cfg.chart_poles().unwrap_or_default()), "weights": encode::weights(&w), "at": j + 1});
        let before = is_stable(&b, &cfg, &w).expect("sizes match");
        let wj = elm_weights(&w, j).expect("index in range");
        for e in [b.elm_minus(&cfg, j), b.elm_plus(&cfg, j)] {
            let e = e.expect("index in range");
            if is_stable(&e, &cfg, &wj).expect("sizes match") != before {
                return fail("stability changes across Elm", bin);
            }
        }
        Step::Pass
    });
    tally.finish()
}

/// Residue eigenvalues {λν⁻, λν⁺}, parabolics as ν⁺-eigenlines, Fuchs.
pub fn spectral(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("spectral", seed, samples);
    let mut s = Sampler::new(seed);
    tally.run(samples, |_| {
        let n = s.int(4, 6) as usize;
        let (rho, lambda, frame) = (s.rational(), s.rational(), s.frame());
        let chart = s.chart(n, &rho, lambda, frame);
        match verify_spectral(&chart) {
            Ok(()) => Step::Pass,
            Err(m) => fail(&format!("residue check failed: {m}"), chart_json(&chart)),
        }
    });
    tally.finish()
}

/// ρ = 0: App(λ∇₀ + Θ) is independent of λ and pairs to zero with Bun.
pub fn rho0(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("rho0", seed, samples);
    let mut s = Sampler::new(seed);
    tally.run(samples, |_| {
        let n = s.int(4, 6) as usize;
        let lambda = s.rational();
        let chart = s.chart(n, &Q::zero(), lambda, Frame::DegreeMinus1);
        if chart.c().iter().all(Q::is_zero) {
            return Step::Skip;
        }
        let input = chart_json(&chart);
        let Ok(higgs) = app(&chart.with_lambda_c(Q::zero(), chart.c().to_vec()).expect("same shape")) else {
            return Step::Skip;
        };
        match degenerate_rho0_check(&chart) {
            Ok(true) => {}
            Ok(false) => return fail("App depends on lambda or pairs nontrivially", input),
            Err(_) => return Step::Skip,
        }
        for _ in 0..3 {
            let l = s.rational();
            let other = app(&chart.with_lambda_c(l, chart.c().to_vec()).expect("same shape"));
            if other.as_ref() != Ok(&higgs) {
                return fail("App depends on lambda", input);
            }
        }
        Step::Pass
    });
    tally.finish()
}

/// Four poles in degree 0: 12 walls and 16 chambers, each sample located in its
/// own chamber.
pub fn census(seed: u64) -> SuiteReport {
    let mut tally = Tally::new("census", seed, 1);
    let walls = wall_list(4, 0);
    let report = chamber_census_n4();
    tally.details.insert("walls".into(), json!(walls.len()));
    tally.details.insert("chambers".into(), json!(report.chambers.len()));
    let located = report.chambers.iter().enumerate().all(|(i, ch)| {
        let w = logconn_core::parabolic::Weights::new(ch.sample.clone()).expect("inside the cube");
        report.locate(&w) == Location::Chamber(i)
    });
    let ok = walls.len() == 12 && report.chambers.len() == 16 && located;
    tally.record(if ok { Step::Pass } else { fail("census differs from 12 walls and 16 chambers", json!({"n": 4, "d": 0})) });
    tally.finish()
}

/// Undecomposable ⇔ the stable chamber is nonempty, decided exactly over all
/// saturated subbundles, compared with the constructive stabilizing weight.
pub fn stability(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("stability", seed, samples);
    let mut s = Sampler::new(seed);
    tally.run(samples, |tally| {
        let (b, cfg) = s.bundle();
        let input = encode::bundle(&b, &cfg.chart_poles().unwrap_or_default());
        let und = is_undecomposable(&b, &cfg).expect("small n");
        tally.bump(if und { "undecomposable" } else { "decomposable" });
        let chamber = stabilizing_chamber(&b, &cfg).expect("small n");
        if chamber.is_some() != und {
            return fail("chamber search disagrees with undecomposability", input);
        }
        if let Some(ch) = &chamber {
            if !is_stable(&b, &cfg, &ch.sample).expect("sizes match") {
                return fail("chamber representative is not stable", input);
            }
        }
        match exists_stabilizing_weight(&b, &cfg).expect("small n") {
            Some(w) if !und || !is_stable(&b, &cfg, &w).expect("sizes match") => {
                fail("constructive weight is wrong", input)
            }
            None if und => fail("no constructive weight for an undecomposable bundle", input),
            _ => Step::Pass,
        }
    });
    tally.finish()
}

/// Census plus the stability search.
pub fn walls(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("walls", seed, samples);
    tally.absorb(census(seed));
    tally.absorb(stability(seed, samples));
    tally.finish()
}

/// Sixteen curves with 5-regular incidence, the Elm-pair group, the chart
/// table and the Γ-curves in Σ, for t = (2, 3) and `samples − 1` random pole
/// pairs.
pub fn delpezzo(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("delpezzo", seed, samples);
    let mut s = Sampler::new(seed);
    let mut first = true;
    tally.run(samples.max(1), |tally| {
        let t = if first { vec![Q::from(2), Q::from(3)] } else { s.poles(2) };
        first = false;
        let input = json!({"t": encode::qs(&t)});
        let Ok(cat) = sixteen_curves(&[t[0].clone(), t[1].clone()]) else { return Step::Skip };
        let mut check = || -> logconn_core::Result<Option<&'static str>> {
            if CurveTag::all().len() != 16 || !cat.incidence()?.is_regular(5) {
                return Ok(Some("incidence is not 5-regular on sixteen curves"));
            }
            let group = elm_pair_group(&cat)?;
            if group.order != 16 || !group.transitive {
                return Ok(Some("Elm-pair group is not a transitive group of order 16"));
            }
            if !chart_membership_table(&cat)?.failed_statements().is_empty() {
                return Ok(Some("chart membership table contradicts a statement"));
            }
            let lift = sigma_lift(&cat);
            if !SigmaCurve::all().into_iter().all(|c| lift.lies_in_sigma(c)) {
                return Ok(Some("a Gamma-curve leaves the incidence variety"));
            }
            let pairs = lift.incidence()?;
            if pairs.len() != 25 {
                return Ok(Some("Gamma-curves do not meet in 25 pairs"));
            }
            for (c1, c2, p) in &pairs {
                let expected = match (c1, c2) {
                    (SigmaCurve::Gamma, SigmaCurve::GammaI(i)) => Some((lift.c_point(*i), cat.d_point(*i))),
                    (SigmaCurve::GammaI(k), SigmaCurve::GammaIJ(i, j)) if k == i || k == j => {
                        Some((lift.p_point(*i, *j), cat.d_point(*k)))
                    }
                    _ => None,
                };
                if expected.as_ref() != Some(p) {
                    return Ok(Some("unexpected Gamma-curve intersection"));
                }
                if !lift.transversality_check(*c1, *c2, p)? {
                    return Ok(Some("Gamma-curves meet non-transversally"));
                }
            }
            tally.bump("configurations");
            Ok(None)
        };
        match check() {
            Ok(None) => Step::Pass,
            Ok(Some(reason)) => fail(reason, input),
            Err(e) => fail(&format!("computation failed: {e}"), input),
        }
    });
    tally.finish()
}

fn sd5(plus: [Q; 4], minus: [Q; 5]) -> SpectralData<Q> {
    let mut p = plus.to_vec();
    let total = p.iter().chain(minus.iter()).fold(Q::zero(), |a, x| a + x.clone());
    p.push(Q::one() - total);
    SpectralData::new(p, minus.to_vec(), -1).expect("Fuchs holds by construction")
}

/// Limits along u₁ = 1/s, c₁ = −sκ + s²c₁ as s → 0: a(0), the apparent point at
/// t₁, the (u : v : w) blow-up limit, the second blow-up relation, and b(0)
/// against the literal (b₂ : b₁ : b₀) = (t₁² : t₁ : 0).
pub fn degeneration(seed: u64, samples: usize) -> SuiteReport {
    let mut tally = Tally::new("degeneration", seed, samples);
    let mut s = Sampler::new(seed);
    let fixed = sd5([q(1, 3), q(2, 5), q(1, 7), q(3, 4)], [q(1, 2), q(-1, 3), q(1, 5), q(2, 7), q(-1, 9)]);
    let mut first = true;
    tally.run(samples.max(1), |tally| {
        let (t, sd, c, u2) = if first {
            (vec![Q::from(2), Q::from(3)], fixed.clone(), vec![q(3, 2), q(-2, 5)], q(7, 3))
        } else {
            let rho = s.rational();
            (s.poles(2), s.spectral(5, &rho), s.rationals(2), s.rational())
        };
        first = false;
        let input = json!({"t": encode::qs(&t), "nu": encode::spectral(&sd), "c": encode::qs(&c), "u2": encode::q(&u2)});
        let Ok(r) = degeneration_limit(&[t[0].clone(), t[1].clone()], &sd, &[c[0].clone(), c[1].clone()], &u2) else {
            return Step::Skip;
        };
        if r.b_on_first_special_line() {
            tally.bump("b_limit_is_pole_point");
        }
        let mut reasons = Vec::new();
        if !r.a_matches() {
            reasons.push("a(0) differs from (z - t1)(z - q)");
        }
        if !r.apparent_at_t1.is_zero() {
            reasons.push("apparent point does not tend to t1");
        }
        if !r.uvw_matches() {
            reasons.push("(u:v:w) limit differs");
        }
        if !r.second_blowup_residual.is_zero() {
            reasons.push("second blow-up relation fails");
        }
        if !r.b_matches_literal() {
            tally.bump("b_literal_mismatch");
            reasons.push("b(0) differs from (b2:b1:b0) = (t1^2:t1:0)");
        }
        if reasons.is_empty() {
            return Step::Pass;
        }
        Step::Fail(json!({
            "reason": reasons.join("; "),
            "input": input,
            "b_limit": encode::proj(&r.b_limit),
            "b_expected": encode::proj(&r.b_expected_literal),
        }))
    });
    tally.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_deterministic() {
        let a = n4(3, 10).to_json();
        let b = n4(3, 10).to_json();
        assert_eq!(a, b);
        assert!(run_suite("nope", 1, 1).is_none());
    }

    #[test]
    fn small_suites_pass() {
        for name in ["n4", "n5", "spectral", "rho0", "stability"] {
            let r = run_suite(name, 5, 8).unwrap();
            assert!(r.pass, "{}", r.to_json());
            assert_eq!(r.checked, 8);
        }
    }
}
