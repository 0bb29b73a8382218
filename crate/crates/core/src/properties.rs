//! Runs the algebraic properties over fuzzed samples and reports pass/fail
//! counts with the first counterexample of each.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::borel::{
    is_borel_type, is_stable, is_strongly_stable_colon, satiety_bg_shortcut, satiety_quotient,
    sequential_chain,
};
use crate::compare::{compare_routes_lenient, corrupted_decomposition};
use crate::decomposition::{decompose, is_irredundant};
use crate::degree::{ExtendedDegree, Finite, MinusInfinity};
use crate::error::Result;
use crate::fuzz::{
    fuzz_borel, fuzz_borel_pairs, fuzz_general, fuzz_strongly_stable, FuzzConfig, Op,
};
use crate::ideal::MonomialIdeal;
use crate::invariants::{a_vector_decomposition, report, strongly_stable_fast, Route};
use crate::parse::{ideal_to_json, parse_ideal};

/// Monomial ideals that are not of Borel type: each has an associated prime
/// other than `(x_1, ..., x_j)`.
pub const NON_BOREL_CURATED: [&str; 20] = [
    "vars x,y; y",
    "vars x,y; y^2",
    "vars x,y; x*y",
    "vars x,y; x*y^2",
    "vars x,y; x^2*y",
    "vars x,y; x*y, y^2",
    "vars x,y,z; z",
    "vars x,y,z; y",
    "vars x,y,z; x*z, y",
    "vars x,y,z; y*z",
    "vars x,y,z; x*z",
    "vars x,y,z; x, z",
    "vars x,y,z; y, z",
    "vars x,y,z; x^2, z^2",
    "vars x,y,z; y^2, z",
    "vars x,y,z; x*y, z",
    "vars x,y,z; x*z, y*z",
    "vars x,y,z; x^2, x*z",
    "vars x,y,z; x*y*z",
    "vars w,x,y,z; x, z^2",
];

/// Truncation degrees probed for a non-Borel ideal: `0..=2·deg(I) + n`.
pub fn non_borel_horizon(ideal: &MonomialIdeal) -> u64 {
    2 * ideal.max_gen_degree().unwrap_or(0) + ideal.n() as u64
}

/// Deliberate faults for negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fault {
    /// Route agreement reads a decomposition with one exponent bumped.
    CorruptDecomposition,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ratio {
    pub hits: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertiesReport {
    pub config: FuzzConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
    pub samples: usize,
    pub pairs: usize,
    pub discarded: usize,
    /// Samples whose route comparison left out the oracle.
    pub oracle_skipped: usize,
    pub non_borel_horizon: &'static str,
    /// How often `a*_t(S/(K+L)) = max{a*_{t+1}(S/K), a*_{t+1}(S/L)}` held
    /// with equality, over all pairs and `t`.
    pub sum_astar_equality: Ratio,
    pub warnings: Vec<String>,
    pub properties: Vec<PropertyResult>,
    pub all_pass: bool,
}

type Outcome = (&'static str, Option<Value>);

fn check(name: &'static str, ok: Result<bool>, witness: impl FnOnce() -> Value) -> Outcome {
    match ok {
        Ok(true) => (name, None),
        Ok(false) => (name, Some(witness())),
        Err(e) => (
            name,
            Some(json!({ "error": e.to_string(), "witness": witness() })),
        ),
    }
}

fn max2(a: ExtendedDegree, b: ExtendedDegree) -> ExtendedDegree {
    a.max(b)
}

fn single_checks(i: &MonomialIdeal, fault: Option<Fault>) -> (Vec<Outcome>, bool) {
    let w = || json!({ "ideal": ideal_to_json(i) });
    let mut out = Vec::new();

    out.push(check(
        "decomposition_recomposes",
        decompose(i).map(|d| {
            let exps = i.max_exponents();
            let from_gens = d.components().iter().all(|q| {
                q.b().iter().enumerate().all(|(v, &e)| {
                    e == 0 || i.gens().iter().any(|g| g.exps()[v] == e) && e <= exps[v]
                })
            });
            d.recompose() == *i && is_irredundant(d.components(), i) && from_gens
        }),
        w,
    ));

    let verdict = match fault {
        None => decompose(i),
        Some(Fault::CorruptDecomposition) => corrupted_decomposition(i),
    }
    .and_then(|d| compare_routes_lenient(i, &d));
    let skipped = matches!(&verdict, Ok(v) if v.oracle_skipped);
    out.push(match verdict {
        Ok(v) if v.agree => ("route_agreement", None),
        Ok(v) => ("route_agreement", Some(v.to_json())),
        Err(e) => (
            "route_agreement",
            Some(json!({ "error": e.to_string(), "ideal": ideal_to_json(i) })),
        ),
    });

    out.push(check(
        "chain_indices_match_a_vector",
        sequential_chain(i).and_then(|c| {
            let a = a_vector_decomposition(i)?;
            let n = i.n();
            let mut from_a: Vec<usize> = (0..=n)
                .filter(|&k| a[k].is_finite())
                .map(|k| n - k)
                .collect();
            from_a.sort_unstable_by(|x, y| y.cmp(x));
            Ok(from_a == c.indices)
        }),
        w,
    ));

    out.push(check(
        "satiety_is_max_over_components",
        decompose(i).and_then(|d| {
            let parts = d
                .components()
                .iter()
                .map(|q| satiety_quotient(&q.ideal()))
                .collect::<Result<Vec<_>>>()?;
            Ok(satiety_quotient(i)? == ExtendedDegree::max_of(parts))
        }),
        w,
    ));

    out.push(check(
        "a_vector_is_componentwise_max",
        decompose(i).and_then(|d| {
            let mut acc = vec![MinusInfinity; i.n() + 1];
            for q in d.components() {
                for (x, y) in acc.iter_mut().zip(a_vector_decomposition(&q.ideal())?) {
                    *x = max2(*x, y);
                }
            }
            Ok(acc == a_vector_decomposition(i)?)
        }),
        w,
    ));

    out.push(check(
        "truncation_at_reg_is_stable",
        report(i, Route::Decomposition).and_then(|r| {
            let e = r.reg_ideal.finite().expect("proper nonzero ideal") as u64;
            for k in 0..3 {
                if !is_stable(&i.truncate(e + k))? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        w,
    ));

    out.push(check(
        "monotone_tails",
        report(i, Route::Decomposition).map(|r| {
            let mono = |v: &[ExtendedDegree]| v.windows(2).all(|p| p[0] <= p[1]);
            mono(&r.reg_t_module)
                && mono(&r.astar_t_module)
                && r.reg_t_module[r.n] == r.reg_module
                && r.astar_t_module[r.n] == r.astar_module
        }),
        w,
    ));
    (out, skipped)
}

fn pair_checks(k: &MonomialIdeal, l: &MonomialIdeal) -> (Vec<Outcome>, Ratio) {
    let w = || json!({ "k": ideal_to_json(k), "l": ideal_to_json(l) });
    let mut out = Vec::new();
    let mut ratio = Ratio { hits: 0, total: 0 };

    out.push(check(
        "closure_under_operations",
        (|| {
            Ok(is_borel_type(&k.intersect(l)?)?
                && is_borel_type(&k.sum(l)?)?
                && is_borel_type(&k.product(l)?)?)
        })(),
        w,
    ));

    let reports = (|| -> Result<_> {
        let rk = report(k, Route::Decomposition)?;
        let rl = report(l, Route::Decomposition)?;
        let ri = report(&k.intersect(l)?, Route::Decomposition)?;
        let rj = report(&k.sum(l)?, Route::Decomposition)?;
        Ok((rk, rl, ri, rj))
    })();
    let (rk, rl, ri, rj) = match reports {
        Ok(r) => r,
        Err(e) => {
            let fail = Some(json!({ "error": e.to_string(), "witness": w() }));
            for name in ["intersection_bound", "sum_astar_bound", "sum_reg_bound"] {
                out.push((name, fail.clone()));
            }
            return (out, ratio);
        }
    };
    let n = rk.n;
    let ak = rk.a_module.as_ref().unwrap();
    let al = rl.a_module.as_ref().unwrap();
    let ai = ri.a_module.as_ref().unwrap();
    let bound_ok = (0..=n).all(|t| ai[t] <= max2(ak[t], al[t]))
        && (0..=n).all(|t| ri.reg_t_module[t] <= max2(rk.reg_t_module[t], rl.reg_t_module[t]))
        && (0..=n)
            .all(|t| ri.astar_t_module[t] <= max2(rk.astar_t_module[t], rl.astar_t_module[t]));
    out.push(check("intersection_bound", Ok(bound_ok), w));

    // index t + 1 past n reads the last entry
    let next = |v: &[ExtendedDegree], t: usize| v[(t + 1).min(n)];
    let mut astar_ok = true;
    let mut reg_ok = true;
    for t in 0..=n {
        let rhs = max2(next(&rk.astar_t_module, t), next(&rl.astar_t_module, t));
        astar_ok &= rj.astar_t_module[t] <= rhs;
        ratio.total += 1;
        ratio.hits += usize::from(rj.astar_t_module[t] == rhs);
        let reg_rhs = ExtendedDegree::max_of([
            rk.reg_t_module[t],
            rl.reg_t_module[t],
            next(&rk.reg_t_module, t) - 1,
            next(&rl.reg_t_module, t) - 1,
        ]);
        reg_ok &= rj.reg_t_module[t] <= reg_rhs;
    }
    out.push(check("sum_astar_bound", Ok(astar_ok), w));
    out.push(check("sum_reg_bound", Ok(reg_ok), w));
    (out, ratio)
}

fn general_checks(i: &MonomialIdeal) -> Vec<Outcome> {
    let w = || json!({ "ideal": ideal_to_json(i) });
    let mut out = Vec::new();
    out.push(check(
        "strongly_stable_implies_borel",
        (|| Ok(!is_strongly_stable_colon(i)? || is_borel_type(i)?))(),
        w,
    ));
    out.push(check(
        "prefix_saturation_matches_iteration",
        (1..=i.n()).try_fold(true, |acc, k| {
            Ok(acc && i.colon_prefix_saturate(k)? == i.colon_prefix_saturate_iterated(k)?)
        }),
        w,
    ));
    out.push(check(
        "satiety_matches_hilbert_scan",
        (|| {
            let sat = i.saturation()?;
            let top: u64 = i.max_exponents().iter().map(|&e| e as u64).sum::<u64>() + 1;
            let scan = ExtendedDegree::max_of(
                (0..=top)
                    .filter(|&d| sat.hilbert_count(d) > i.hilbert_count(d))
                    .map(|d| Finite(d as i64)),
            );
            Ok(scan == satiety_quotient(i)?)
        })(),
        w,
    ));
    out.push(check(
        "truncation_contract",
        (|| {
            let deg = i.max_gen_degree().unwrap_or(0);
            for e in [0, 1, deg, deg + 2] {
                let t = i.truncate(e);
                if t.gens().iter().any(|g| g.degree() < e) {
                    return Ok(false);
                }
                if (e..e + 3).any(|d| t.hilbert_count(d) != i.hilbert_count(d)) {
                    return Ok(false);
                }
            }
            Ok(true)
        })(),
        w,
    ));
    out
}

fn strongly_stable_checks(i: &MonomialIdeal) -> Vec<Outcome> {
    let w = || json!({ "ideal": ideal_to_json(i) });
    vec![
        check(
            "strongly_stable_fast_path",
            (|| {
                let (reg, astar) = strongly_stable_fast(i)?;
                let r = report(i, Route::Decomposition)?;
                Ok(reg == r.reg_t_ideal && astar == r.astar_t_ideal)
            })(),
            w,
        ),
        check(
            "bg_shortcut_calibrated",
            (|| Ok(satiety_bg_shortcut(i)? == satiety_quotient(i)?))(),
            w,
        ),
    ]
}

fn fixed_checks() -> Vec<Outcome> {
    let mut out = Vec::new();
    for text in NON_BOREL_CURATED {
        let i = parse_ideal(text).expect("curated ideal parses");
        let w = || json!({ "ideal": text });
        out.push(check(
            "non_borel_truncations_unstable",
            (|| {
                if is_borel_type(&i)? {
                    return Ok(false);
                }
                for e in 0..=non_borel_horizon(&i) {
                    if is_stable(&i.truncate(e))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })(),
            w,
        ));
    }
    let k = MonomialIdeal::pure_powers(&[2, 2, 10]);
    let l = MonomialIdeal::pure_powers(&[4, 4, 0]);
    out.push(check(
        "intersection_strict_witness",
        (|| {
            let ak = a_vector_decomposition(&k)?;
            let ai = a_vector_decomposition(&k.intersect(&l)?)?;
            Ok(ak[0] == Finite(11) && ai[0] == MinusInfinity)
        })(),
        || json!({ "k": ideal_to_json(&k), "l": ideal_to_json(&l) }),
    ));
    out
}

#[derive(Default)]
struct Tally {
    results: Vec<PropertyResult>,
}

impl Tally {
    fn record(&mut self, outcomes: impl IntoIterator<Item = Outcome>) {
        for (name, fail) in outcomes {
            let pos = match self.results.iter().position(|r| r.name == name) {
                Some(p) => p,
                None => {
                    self.results.push(PropertyResult {
                        name,
                        passed: 0,
                        failed: 0,
                        counterexample: None,
                    });
                    self.results.len() - 1
                }
            };
            let r = &mut self.results[pos];
            match fail {
                None => r.passed += 1,
                Some(c) => {
                    r.failed += 1;
                    r.counterexample.get_or_insert(c);
                }
            }
        }
    }
}

/// Evaluates every property on `cfg.count` Borel samples, `cfg.count` pairs,
/// `cfg.count` general and `cfg.count` strongly stable ideals, plus fixed
/// fixtures. Results are ordered by sample index regardless of scheduling.
pub fn run_properties(cfg: &FuzzConfig, fault: Option<Fault>) -> Result<PropertiesReport> {
    let singles = fuzz_borel(cfg)?;
    let pairs = fuzz_borel_pairs(cfg)?;
    let general = fuzz_general(cfg)?;
    let stable = fuzz_strongly_stable(cfg)?;

    let mut tally = Tally::default();
    let mut ratio = Ratio { hits: 0, total: 0 };

    let single_out: Vec<(Vec<Outcome>, bool)> = singles
        .samples
        .par_iter()
        .map(|i| single_checks(i, fault))
        .collect();
    let mut oracle_skipped = 0;
    for (o, skipped) in single_out {
        tally.record(o);
        oracle_skipped += usize::from(skipped);
    }

    let pair_out: Vec<(Vec<Outcome>, Ratio)> = pairs
        .samples
        .par_iter()
        .map(|(k, l)| pair_checks(k, l))
        .collect();
    for (o, r) in pair_out {
        tally.record(o);
        ratio.hits += r.hits;
        ratio.total += r.total;
    }

    let general_out: Vec<Vec<Outcome>> = general.samples.par_iter().map(general_checks).collect();
    general_out.into_iter().for_each(|o| tally.record(o));
    let stable_out: Vec<Vec<Outcome>> = stable
        .samples
        .par_iter()
        .map(strongly_stable_checks)
        .collect();
    stable_out.into_iter().for_each(|o| tally.record(o));
    tally.record(fixed_checks());

    let discarded = singles.discarded + pairs.discarded;
    let mut warnings = Vec::new();
    if cfg.count == 0 {
        warnings.push("count is 0: fuzzed properties pass vacuously".to_string());
    }
    if discarded > 0 {
        let closed = cfg
            .ops
            .iter()
            .all(|op| matches!(op, Op::Intersect | Op::Sum));
        warnings.push(if closed {
            format!("{discarded} samples built from intersections and sums failed the Borel-type check: suspected bug")
        } else {
            format!("{discarded} samples failed the Borel-type check")
        });
    }

    if oracle_skipped > 0 {
        warnings.push(format!(
            "{oracle_skipped} samples exceeded the oracle scale guard and were compared without the oracle"
        ));
    }

    let all_pass = tally.results.iter().all(|r| r.failed == 0);
    Ok(PropertiesReport {
        config: cfg.clone(),
        fault,
        samples: singles.samples.len(),
        pairs: pairs.samples.len(),
        discarded,
        oracle_skipped,
        non_borel_horizon: "e = 0 ..= 2*deg(I) + n",
        sum_astar_equality: ratio,
        warnings,
        properties: tally.results,
        all_pass,
    })
}
