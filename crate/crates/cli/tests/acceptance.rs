//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::process::Command;
use std::time::{Duration, Instant};

use borel_core::fuzz::{fuzz_borel, FuzzConfig};
use borel_core::properties::{
    non_borel_horizon, run_properties, PropertiesReport, NON_BOREL_CURATED,
};
use borel_core::{
    a0_direct, a_vector_chain, a_vector_decomposition, betti_table, decompose, is_borel_type,
    is_stable, parse_ideal, reg_via_stable_truncation, report, satiety_quotient, trung_invariants,
    ExtendedDegree, Finite, MinusInfinity, MonomialIdeal, Route,
};

const EX: &str = "vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3";

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: borel_core::Error) -> String {
    e.to_string()
}

fn suite() -> Vec<MonomialIdeal> {
    let cfg = FuzzConfig {
        seed: 1,
        count: 500,
        ..FuzzConfig::default()
    };
    let out = fuzz_borel(&cfg).expect("default config is valid");
    assert_eq!(out.discarded, 0);
    out.samples
}

fn example_exact() -> Outcome {
    let start = Instant::now();
    let i = parse_ideal(EX).map_err(err)?;
    let d = decompose(&i).map_err(err)?;
    let comps: Vec<Vec<u32>> = d.components().iter().map(|q| q.b().to_vec()).collect();
    ensure(comps == vec![vec![2, 3, 0], vec![4, 4, 3]], || {
        format!("components {comps:?}")
    })?;
    let expected = vec![Finite(8), Finite(2), MinusInfinity, MinusInfinity];
    for route in [Route::Decomposition, Route::Chain] {
        let r = report(&i, route).map_err(err)?;
        ensure(r.a_module.as_ref() == Some(&expected), || {
            format!("{route}: a = {:?}", r.a_module)
        })?;
        ensure(
            r.reg_module == Finite(8) && r.astar_module == Finite(8),
            || format!("{route}: reg {} a* {}", r.reg_module, r.astar_module),
        )?;
    }
    let o = report(&i, Route::Oracle).map_err(err)?;
    ensure(
        o.reg_module == Finite(8) && o.astar_module == Finite(8),
        || "oracle reg/a*".into(),
    )?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "components, a-vector, reg = a* = 8 exact in {elapsed:.2?}"
    ))
}

fn irreducible_satiety_sweep() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=5usize {
        let mut b = vec![1u32; n];
        loop {
            let q = MonomialIdeal::pure_powers(&b);
            let want = Finite(b.iter().map(|&e| e as i64).sum::<i64>() - n as i64);
            let got = satiety_quotient(&q).map_err(err)?;
            ensure(got == want, || format!("b = {b:?}: got {got}, want {want}"))?;
            checked += 1;
            // odometer over [1, 6]^n
            let Some(k) = b.iter().position(|&e| e < 6) else {
                break;
            };
            b[k] += 1;
            b[..k].iter_mut().for_each(|e| *e = 1);
        }
    }
    Ok(format!("{checked} irreducible ideals, satiety = |b| - n"))
}

fn route_agreement(samples: &[MonomialIdeal]) -> Outcome {
    let start = Instant::now();
    for (k, i) in samples.iter().enumerate() {
        let ctx = || format!("sample {k}: {i}");
        let a_dec = a_vector_decomposition(i).map_err(err)?;
        let a_chain = a_vector_chain(i).map_err(err)?;
        ensure(a_dec == a_chain, || format!("{}: a-vectors differ", ctx()))?;
        let (reg_t, astar_t) = trung_invariants(&betti_table(i).map_err(err)?);
        for route in [Route::Decomposition, Route::Chain] {
            let r = report(i, route).map_err(err)?;
            ensure(r.reg_t_module == reg_t, || {
                format!("{}: {route} reg_t", ctx())
            })?;
            ensure(r.astar_t_module == astar_t, || {
                format!("{}: {route} a*_t", ctx())
            })?;
        }
        ensure(a0_direct(i).map_err(err)? == a_dec[0], || {
            format!("{}: a_0", ctx())
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} fuzzed ideals (seed 1), all routes equal, {elapsed:.2?}",
        samples.len()
    ))
}

fn truncation_regularity(samples: &[MonomialIdeal]) -> Outcome {
    for (k, i) in samples.iter().enumerate() {
        let via_trunc = reg_via_stable_truncation(i).map_err(err)?;
        let r = report(i, Route::Decomposition).map_err(err)?;
        ensure(
            via_trunc == r.reg_ideal && r.reg_ideal == r.reg_module + 1,
            || format!("sample {k}: truncation {via_trunc}, report {}", r.reg_ideal),
        )?;
    }
    let i = parse_ideal(EX).map_err(err)?;
    let reg = reg_via_stable_truncation(&i).map_err(err)?;
    ensure(reg == Finite(9), || format!("example: {reg}"))?;
    let deg = i.max_gen_degree().unwrap();
    for e in deg..9 {
        ensure(!is_stable(&i.truncate(e)).map_err(err)?, || {
            format!("example: I_>={e} stable")
        })?;
    }
    ensure(is_stable(&i.truncate(9)).map_err(err)?, || {
        "example: I_>=9 unstable".into()
    })?;
    Ok(format!(
        "{} fuzzed ideals plus example (reg(I) = 9)",
        samples.len()
    ))
}

fn failed(rep: &PropertiesReport, names: &[&str]) -> Result<usize, String> {
    let mut total = 0;
    for name in names {
        let p = rep
            .properties
            .iter()
            .find(|p| p.name == *name)
            .ok_or_else(|| format!("missing property {name}"))?;
        ensure(p.failed == 0, || {
            format!(
                "{name}: {} failures, first {:?}",
                p.failed, p.counterexample
            )
        })?;
        total += p.passed;
    }
    Ok(total)
}

fn operation_bounds(rep: &PropertiesReport) -> Outcome {
    ensure(rep.pairs >= 200, || format!("only {} pairs", rep.pairs))?;
    failed(
        rep,
        &[
            "a_vector_is_componentwise_max",
            "intersection_bound",
            "sum_astar_bound",
            "sum_reg_bound",
            "closure_under_operations",
            "intersection_strict_witness",
        ],
    )?;
    let a0 = |s: &str| -> Result<ExtendedDegree, String> {
        Ok(a_vector_decomposition(&parse_ideal(s).map_err(err)?).map_err(err)?[0])
    };
    let l = a0("vars x,y,z; x^2, y^2, z^10")?;
    let k = parse_ideal("vars x,y,z; x^4, y^4").map_err(err)?;
    let kl = k
        .intersect(&parse_ideal("vars x,y,z; x^2, y^2, z^10").map_err(err)?)
        .map_err(err)?;
    let both = a_vector_decomposition(&kl).map_err(err)?[0];
    ensure(l == Finite(11) && both == MinusInfinity, || {
        format!("witness: {l}, {both}")
    })?;
    Ok(format!(
        "{} samples, {} pairs, zero violations; witness a_0 = 11 vs -inf; sum a* equality {}/{}",
        rep.samples, rep.pairs, rep.sum_astar_equality.hits, rep.sum_astar_equality.total
    ))
}

fn stability_probe(samples: &[MonomialIdeal]) -> Outcome {
    for (k, i) in samples.iter().enumerate() {
        let reg = report(i, Route::Decomposition).map_err(err)?.reg_ideal;
        let e = reg.finite().ok_or("reg(I) = -inf")? as u64;
        for d in e..=e + 2 {
            ensure(is_stable(&i.truncate(d)).map_err(err)?, || {
                format!("sample {k}: I_>={d} unstable")
            })?;
        }
    }
    let mut probes = 0;
    for s in NON_BOREL_CURATED {
        let i = parse_ideal(s).map_err(err)?;
        ensure(!is_borel_type(&i).map_err(err)?, || {
            format!("{s} is of Borel type")
        })?;
        for e in 0..=non_borel_horizon(&i) {
            ensure(!is_stable(&i.truncate(e)).map_err(err)?, || {
                format!("{s}: I_>={e} stable")
            })?;
            probes += 1;
        }
    }
    Ok(format!(
        "{} Borel samples stable at reg..reg+2; {} non-Borel ideals unstable for e <= 2*deg + n ({probes} truncations)",
        samples.len(),
        NON_BOREL_CURATED.len()
    ))
}

fn borel(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_borel"))
        .args(args)
        .output()
        .expect("spawn borel");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn negative_controls() -> Outcome {
    let (code, _) = borel(&["verify", EX, "--inject-fault", "corrupt-decomposition"]);
    ensure(code == 2, || format!("verify with fault exited {code}"))?;
    let (code, out) = borel(&[
        "properties",
        "--count",
        "50",
        "--inject-fault",
        "corrupt-decomposition",
    ]);
    ensure(code == 2, || format!("properties with fault exited {code}"))?;
    let j: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let agreement = j["properties"]
        .as_array()
        .and_then(|ps| ps.iter().find(|p| p["name"] == "route_agreement"))
        .ok_or("no route_agreement entry")?;
    ensure(
        agreement["failed"] == 50 && agreement["counterexample"].is_object(),
        || format!("fault caught on {} of 50", agreement["failed"]),
    )?;
    let (c1, a) = borel(&["properties", "--seed", "1"]);
    let (c2, b) = borel(&["properties", "--seed", "1"]);
    ensure(c1 == 0 && c2 == 0, || {
        format!("default properties exited {c1}, {c2}")
    })?;
    ensure(a == b, || "properties reports differ between runs".into())?;
    let (_, f1) = borel(&["fuzz", "--seed", "99"]);
    let (_, f2) = borel(&["fuzz", "--seed", "99"]);
    ensure(f1 == f2, || "fuzz streams differ between runs".into())?;
    Ok(format!(
        "fault exits 2 and is caught on 50/50; reruns byte-identical ({} bytes)",
        a.len()
    ))
}

fn main() {
    let samples = suite();
    let props = run_properties(&FuzzConfig::default(), None).expect("default config is valid");
    let results: Vec<(&str, Outcome)> = vec![
        ("1 example reproduction", example_exact()),
        ("2 irreducible satiety sweep", irreducible_satiety_sweep()),
        ("3 route agreement", route_agreement(&samples)),
        ("4 truncation regularity", truncation_regularity(&samples)),
        ("5 operation bounds", operation_bounds(&props)),
        ("6 stability probe", stability_probe(&samples)),
        ("7 negative controls and determinism", negative_controls()),
    ];
    let mut all = true;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                all = false;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!(
        "{}/{} criteria pass",
        results.iter().filter(|(_, r)| r.is_ok()).count(),
        results.len()
    );
    if !all {
        std::process::exit(1);
    }
}
