//! One function per CLI verb: typed inputs in, JSON out.

use logconn_core::chart::{ConnectionChart, Frame};
use logconn_core::delpezzo::{
    chart_membership_table, elm_pair_group, sigma_lift, sixteen_curves, Chart, CurveTag, SpecialObject,
};
use logconn_core::exact::{Field, ProjPoint, Q};
use logconn_core::lagrangian::{
    app, apparent_polynomial, bun, c_from_qu, darboux_p, incidence_pairing, solve_connection,
};
use logconn_core::parabolic::{
    chamber_census, destabilizing_subbundle, exists_stabilizing_weight, is_admissible, is_generic, is_semistable,
    is_stable, is_undecomposable, stabilizing_chamber, wall_list, ElmSign, ParabolicBundle, PointConfig,
    SpectralData, Weights,
};
use logconn_core::transforms::{elm_connection, elm_spectral, elm_weights, twist, twist_connection, RankOneTwist};
use serde_json::{json, Map, Value};

use crate::encode::{self, parse_list, parse_pairs, usage, value_i64, value_q, value_qs, value_spectral};
use crate::suites::{run_suite, SuiteReport, SUITES};
use crate::{CliError, Outcome};

type Res<T> = Result<T, CliError>;

/// Poles t₁, …, t_{n−3}, checked against an explicit n when one is given.
pub fn poles(t: &str, n: Option<usize>) -> Res<Vec<Q>> {
    let t = parse_list(t)?;
    if let Some(n) = n {
        if n != t.len() + 3 {
            return Err(usage(format!("--n {n} needs {} finite poles besides 0 and 1, got {}", n.saturating_sub(3), t.len())));
        }
    }
    Ok(t)
}

/// Exponent pairs `plus:minus`, degree −1 labels.
pub fn exponents(nu: &str) -> Res<SpectralData<Q>> {
    let (plus, minus): (Vec<Q>, Vec<Q>) = parse_pairs(nu)?.into_iter().unzip();
    Ok(SpectralData::new(plus, minus, -1)?)
}

pub fn frame(d: i64) -> Res<Frame> {
    match d {
        0 => Ok(Frame::Degree0),
        -1 => Ok(Frame::DegreeMinus1),
        _ => Err(usage(format!("chart degree must be 0 or -1, got {d}"))),
    }
}

pub fn chart(t: Vec<Q>, nu: &str, u: &str, lambda: &str, c: &str, d: i64) -> Res<ConnectionChart<Q>> {
    let nu = exponents(nu)?;
    Ok(ConnectionChart::new(t, nu, parse_list(u)?, encode::parse_q(lambda)?, parse_list(c)?, frame(d)?)?)
}

/// ρ from an explicit value or as Σν⁻ of the exponents.
pub fn rho(rho: Option<&str>, nu: Option<&str>) -> Res<Q> {
    match (rho, nu) {
        (Some(r), _) => encode::parse_q(r),
        (None, Some(nu)) => Ok(exponents(nu)?.rho()),
        (None, None) => Err(usage("give --rho or --nu")),
    }
}

fn point(v: Vec<Q>, what: &str) -> Res<ProjPoint<Q>> {
    ProjPoint::new(v).ok_or_else(|| usage(format!("{what} must be a nonzero vector")))
}

pub fn app_cmd(ch: &ConnectionChart<Q>) -> Res<Value> {
    Ok(json!({
        "a": encode::proj(&app(ch)?),
        "polynomial": encode::poly(&apparent_polynomial(ch)),
        "rho": encode::q(&ch.rho()),
    }))
}

pub fn bun_cmd(t: &[Q], u: &str) -> Res<Value> {
    Ok(json!({ "b": encode::proj(&bun(t, &parse_list(u)?)?) }))
}

pub fn invert_cmd(t: &[Q], rho: &Q, a: &str, b: &str) -> Res<Value> {
    let a = point(parse_list(a)?, "a")?;
    let b = point(parse_list(b)?, "b")?;
    let sol = solve_connection(t, rho, &a, &b)?;
    Ok(json!({
        "u": encode::qs(&sol.u),
        "lambda_c": encode::proj(&sol.lambda_c),
        "higgs": sol.is_higgs(),
        "on_incidence": incidence_pairing(&a, &b)?.is_zero(),
    }))
}

/// Darboux coordinates: from apparent points q (then c is solved for), or from
/// c (then q are the rational roots of the apparent polynomial at λ = 1).
pub fn darboux_cmd(t: &[Q], nu: &str, u: &str, c: Option<&str>, q: Option<&str>) -> Res<Value> {
    let u = parse_list(u)?;
    let sd = exponents(nu)?;
    let rho = sd.rho();
    let (c, qs) = match (c, q) {
        (_, Some(q)) => {
            let qs = parse_list(q)?;
            (c_from_qu(t, &rho, &qs, &u)?, qs)
        }
        (Some(c), None) => {
            let c = parse_list(c)?;
            let ch = ConnectionChart::new(t.to_vec(), sd, u.clone(), Q::one(), c.clone(), Frame::DegreeMinus1)?;
            let split = apparent_polynomial(&ch).rational_roots()?;
            if split.roots.len() != t.len() {
                return Err(CliError::Domain(logconn_core::Error::OutOfChart(
                    "apparent points are not all rational".into(),
                )));
            }
            (c, split.roots)
        }
        (None, None) => return Err(usage("give --c or --q")),
    };
    let p = qs.iter().map(|qk| darboux_p(t, &rho, &u, &c, qk)).collect::<logconn_core::Result<Vec<_>>>()?;
    Ok(json!({
        "rho": encode::q(&rho),
        "u": encode::qs(&u),
        "c": encode::qs(&c),
        "q": encode::qs(&qs),
        "p": encode::qs(&p),
    }))
}

pub fn sign(s: &str) -> Res<ElmSign> {
    match s {
        "+" | "plus" => Ok(ElmSign::Plus),
        "-" | "minus" => Ok(ElmSign::Minus),
        _ => Err(usage(format!("sign must be + or -, got {s:?}"))),
    }
}

/// 1-based pole index to 0-based, bounded by n.
pub fn pole_index(at: usize, n: usize) -> Res<usize> {
    if at == 0 || at > n {
        return Err(usage(format!("pole index {at} outside 1..={n}")));
    }
    Ok(at - 1)
}

fn bundle_from(v: &Value) -> Res<(ParabolicBundle, PointConfig, Vec<Q>)> {
    let obj = v.as_object().ok_or_else(|| usage("bundle must be an object"))?;
    let t = value_qs(encode::field(obj, "t")?)?;
    let split = encode::field(obj, "splitting")?.as_array().ok_or_else(|| usage("splitting must be [e1, e2]"))?;
    if split.len() != 2 {
        return Err(usage("splitting must be [e1, e2]"));
    }
    let dirs = encode::field(obj, "directions")?
        .as_array()
        .ok_or_else(|| usage("directions must be an array"))?
        .iter()
        .map(|d| point(value_qs(d)?, "direction"))
        .collect::<Res<Vec<_>>>()?;
    let b = ParabolicBundle::new(value_i64(&split[0])?, value_i64(&split[1])?, dirs)?;
    let cfg = PointConfig::chart(&t)?;
    if cfg.len() != b.len() {
        return Err(usage("direction count differs from pole count"));
    }
    Ok((b, cfg, t))
}

fn chart_from(v: &Value) -> Res<ConnectionChart<Q>> {
    let obj = v.as_object().ok_or_else(|| usage("chart must be an object"))?;
    let d = obj.get("degree").map(value_i64).transpose()?.unwrap_or(-1);
    let lambda = obj.get("lambda").map(value_q).transpose()?.unwrap_or_else(Q::one);
    Ok(ConnectionChart::new(
        value_qs(encode::field(obj, "t")?)?,
        value_spectral(encode::field(obj, "nu")?)?,
        value_qs(encode::field(obj, "u")?)?,
        lambda,
        value_qs(encode::field(obj, "c")?)?,
        frame(d)?,
    )?)
}

fn input_object(input: &Value) -> Res<&Map<String, Value>> {
    let obj = input.as_object().ok_or_else(|| usage("input must be a JSON object"))?;
    if !["weights", "nu", "bundle", "chart"].iter().any(|k| obj.contains_key(*k)) {
        return Err(usage("input needs at least one of weights, nu, bundle, chart"));
    }
    Ok(obj)
}

/// Elm at one pole of every object present in the input.
pub fn elm_cmd(input: &Value, s: ElmSign, at: usize) -> Res<Value> {
    let obj = input_object(input)?;
    let mut out = Map::new();
    if let Some(w) = obj.get("weights") {
        let w = Weights::new(value_qs(w)?)?;
        out.insert("weights".into(), encode::weights(&elm_weights(&w, pole_index(at, w.len())?)?));
    }
    if let Some(nu) = obj.get("nu") {
        let sd = value_spectral(nu)?;
        out.insert("nu".into(), encode::spectral(&elm_spectral(&sd, pole_index(at, sd.len())?, s)?));
    }
    if let Some(b) = obj.get("bundle") {
        let (b, cfg, t) = bundle_from(b)?;
        let e = b.elm(&cfg, pole_index(at, b.len())?, s)?;
        out.insert("bundle".into(), encode::bundle(&e, &t));
    }
    if let Some(c) = obj.get("chart") {
        let conn = chart_from(c)?.to_connection();
        let i = pole_index(at, conn.poles().len())?;
        out.insert("connection".into(), encode::connection(&elm_connection(&conn, i, s)?));
    }
    Ok(Value::Object(out))
}

/// Twist by a rank-one connection: O(−tᵢ) with exponent 1 at one pole, or the
/// given exponent list.
pub fn twist_cmd(input: &Value, at: Option<usize>, mu: Option<&str>) -> Res<Value> {
    let obj = input_object(input)?;
    let n = if let Some(nu) = obj.get("nu") {
        value_spectral(nu)?.len()
    } else if let Some(c) = obj.get("chart") {
        chart_from(c)?.n()
    } else {
        return Err(usage("twist needs nu or chart in the input"));
    };
    let tw = match (at, mu) {
        (Some(at), None) => RankOneTwist::point(n, pole_index(at, n)?),
        (None, Some(mu)) => RankOneTwist::from_exponents(parse_list(mu)?)?,
        _ => return Err(usage("give exactly one of --at and --mu")),
    };
    let mut out = Map::new();
    out.insert("twist".into(), json!({ "mu": encode::qs(tw.mu()), "degree": tw.degree() }));
    if let Some(nu) = obj.get("nu") {
        out.insert("nu".into(), encode::spectral(&twist(&value_spectral(nu)?, &tw)?));
    }
    if let Some(c) = obj.get("chart") {
        let conn = chart_from(c)?.to_connection();
        out.insert("connection".into(), encode::connection(&twist_connection(&conn, &tw)?));
    }
    Ok(Value::Object(out))
}

pub fn stability_cmd(t: Vec<Q>, split: (i64, i64), dirs: &str, w: Option<&str>) -> Res<Value> {
    let dirs = parse_pairs(dirs)?
        .into_iter()
        .map(|(x, y)| point(vec![x, y], "direction"))
        .collect::<Res<Vec<_>>>()?;
    let b = ParabolicBundle::new(split.0, split.1, dirs)?;
    let cfg = PointConfig::chart(&t)?;
    if cfg.len() != b.len() {
        return Err(usage(format!("{} poles but {} directions", cfg.len(), b.len())));
    }
    let chamber = stabilizing_chamber(&b, &cfg)?;
    let mut out = Map::new();
    out.insert("n".into(), json!(b.len()));
    out.insert("degree".into(), json!(b.degree()));
    out.insert("undecomposable".into(), json!(is_undecomposable(&b, &cfg)?));
    out.insert("generic".into(), json!(is_generic(&b, &cfg)?));
    out.insert(
        "stabilizing_weight".into(),
        exists_stabilizing_weight(&b, &cfg)?.map_or(Value::Null, |w| encode::weights(&w)),
    );
    out.insert(
        "stable_chamber".into(),
        chamber.map_or(Value::Null, |ch| {
            json!({
                "sample": encode::weights(&ch.sample),
                "walls": Value::Array(ch.walls.iter().map(encode::wall).collect()),
            })
        }),
    );
    if let Some(w) = w {
        let w = Weights::new(parse_list(w)?)?;
        out.insert("weights".into(), encode::weights(&w));
        out.insert("stable".into(), json!(is_stable(&b, &cfg, &w)?));
        out.insert("semistable".into(), json!(is_semistable(&b, &cfg, &w)?));
        out.insert(
            "destabilizer".into(),
            destabilizing_subbundle(&b, &cfg, &w)?
                .map_or(Value::Null, |(k, s)| json!({ "k": k, "subset": encode::subset(&s) })),
        );
        out.insert(
            "admissible".into(),
            match is_admissible(&w, b.degree()) {
                Ok(a) => json!(a),
                Err(_) => json!("on a wall"),
            },
        );
    }
    Ok(Value::Object(out))
}

pub fn walls_cmd(n: usize, d: i64) -> Res<Value> {
    if !(3..=16).contains(&n) {
        return Err(usage("--n must lie in 3..=16"));
    }
    let walls = wall_list(n, d);
    Ok(json!({
        "n": n,
        "degree": d,
        "count": walls.len(),
        "walls": Value::Array(walls.iter().map(encode::wall).collect()),
    }))
}

pub fn chambers_cmd(n: usize, d: i64) -> Res<Value> {
    if !(3..=16).contains(&n) {
        return Err(usage("--n must lie in 3..=16"));
    }
    let r = chamber_census(n, d)?;
    Ok(json!({
        "n": n,
        "degree": d,
        "walls": r.region.len() + r.cutting.len(),
        "region": Value::Array(r.region.iter().map(encode::wall).collect()),
        "cutting": Value::Array(r.cutting.iter().map(encode::wall).collect()),
        "count": r.chambers.len(),
        "chambers": Value::Array(
            r.chambers.iter().map(|c| json!({ "signs": c.signs, "sample": encode::qs(&c.sample) })).collect()
        ),
    }))
}

pub const REPORTS: &[&str] = &["curves", "incidence", "atlas", "group"];

pub fn delpezzo_cmd(t: &[Q], report: &str) -> Res<Value> {
    if t.len() != 2 {
        return Err(usage("the Del Pezzo reports need n = 5, i.e. two finite poles in --t"));
    }
    let cat = sixteen_curves(&[t[0].clone(), t[1].clone()])?;
    let name = |c: CurveTag| json!(c.to_string());
    let body = match report {
        "curves" => json!({
            "curves": Value::Array(CurveTag::all().into_iter().map(|c| json!({
                "name": c.to_string(),
                "equation": cat.describe(c),
            })).collect()),
            "points": Value::Array((0..5).map(|i| json!({
                "name": format!("D_{}", i + 1),
                "b": encode::proj(&cat.d_point(i)),
            })).collect()),
        }),
        "incidence" => {
            let inc = cat.incidence()?;
            let lift = sigma_lift(&cat);
            let pairs = lift
                .incidence()?
                .into_iter()
                .map(|(c1, c2, p)| {
                    Ok(json!({
                        "curves": [c1.to_string(), c2.to_string()],
                        "a": encode::proj(&p.0),
                        "b": encode::proj(&p.1),
                        "transversal": lift.transversality_check(c1, c2, &p)?,
                    }))
                })
                .collect::<Res<Vec<_>>>()?;
            json!({
                "curves": Value::Array(inc.tags.iter().map(|c| name(*c)).collect()),
                "adjacency": inc.adjacent.iter().map(|r| r.iter().map(|&x| u8::from(x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "degrees": inc.degrees(),
                "regular": inc.is_regular(5),
                "sigma_pairs": Value::Array(pairs),
            })
        }
        "atlas" => {
            let table = chart_membership_table(&cat)?;
            json!({
                "charts": Value::Array(table.charts.iter().map(|c: &Chart| json!({
                    "name": c.to_string(),
                    "weights": encode::weights(&c.weights()),
                })).collect()),
                "rows": Value::Array(table.rows.iter().map(|(o, m): &(SpecialObject, Vec<bool>)| json!({
                    "object": o.to_string(),
                    "member": m,
                })).collect()),
                "failed_statements": table.failed_statements(),
            })
        }
        "group" => {
            let g = elm_pair_group(&cat)?;
            json!({
                "order": g.order,
                "transitive": g.transitive,
                "conic_orbit": Value::Array(g.conic_orbit.iter().map(|c| name(*c)).collect()),
                "generators": Value::Array(g.generators.iter().map(|a| json!({
                    "minus": a.minus + 1,
                    "plus": a.plus + 1,
                    "degree": a.map.degree,
                    "permutation": Value::Array(a.permutation.iter().map(|c| name(*c)).collect()),
                })).collect()),
            })
        }
        _ => return Err(usage(format!("report must be one of {}", REPORTS.join(", ")))),
    };
    let mut out = json!({ "t": encode::qs(t), "report": report });
    out.as_object_mut().expect("object").extend(body.as_object().expect("object").clone());
    Ok(out)
}

fn suite_outcome(r: SuiteReport) -> Outcome {
    Outcome { failed: !r.pass, value: r.to_json() }
}

pub fn verify_cmd(suite: &str, seed: u64, samples: usize) -> Res<Outcome> {
    run_suite(suite, seed, samples)
        .map(suite_outcome)
        .ok_or_else(|| usage(format!("suite must be one of {}", SUITES.join(", "))))
}

pub fn symplectic_cmd(seed: u64, samples: usize) -> Outcome {
    suite_outcome(crate::suites::symplectic(seed, samples))
}
