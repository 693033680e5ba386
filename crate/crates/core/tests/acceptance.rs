//! Acceptance suite: prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::ops::RangeInclusive;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{assert_euler, random_ideal, taylor_table, vars};
use eil::betti::BettiEngine;
use eil::campaign::{run_campaign, CampaignConfig, Span};
use eil::repro::repro;
use eil::{
    canonical_json, intersect, multiply_external, polarize, random_instance, split_report, ClassTag, InstanceParams,
    Monomial, MonomialIdeal, Variable,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&BettiEngine) -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_with_euler(engine: &BettiEngine, i: &MonomialIdeal) -> Result<eil::BettiTable, String> {
    let t = engine.betti_table(i).map_err(|e| format!("{i}: {e}"))?;
    assert_euler(i, &t);
    Ok(t)
}

fn ideal_in(rng: &mut ChaCha8Rng, n: RangeInclusive<usize>, prefix: &str, gens: usize, exp: u32) -> MonomialIdeal {
    let ambient = vars(rng.gen_range(n), prefix);
    random_ideal(rng, &ambient, gens, exp)
}

fn polarization_golden(engine: &BettiEngine) -> Outcome {
    let start = Instant::now();
    let r = repro("2.9", engine).map_err(|e| e.to_string())?;
    let ms = start.elapsed().as_millis();
    ensure(r.pass, || format!("checks failed: {:?}", r.checks.iter().filter(|c| !c.ok).collect::<Vec<_>>()))?;
    ensure(ms < 1000, || format!("took {ms} ms"))?;
    Ok(format!("4 generators, degrees 4/3/5/6, {ms} ms"))
}

fn counterexamples(engine: &BettiEngine) -> Outcome {
    let mut parts = Vec::new();
    for (id, computed, formula) in [
        ("3.4", "(8, 6)", "(7, 7)"),
        ("3.6", "(9, 3)", "(8, 4)"),
        ("3.7", "(11, 6)", "(10, 7)"),
    ] {
        let start = Instant::now();
        let r = repro(id, engine).map_err(|e| e.to_string())?;
        let secs = start.elapsed().as_secs_f64();
        ensure(r.pass, || format!("{id}: {:?}", r.checks))?;
        ensure(r.checks[0].actual == computed, || format!("{id}: computed {}", r.checks[0].actual))?;
        ensure(r.checks[1].actual == formula, || format!("{id}: formula {}", r.checks[1].actual))?;
        ensure(secs < 60.0, || format!("{id}: {secs:.1} s"))?;
        parts.push(format!("{id} {computed} vs {formula}"));
    }
    Ok(parts.join("; "))
}

fn campaigns(_: &BettiEngine) -> Outcome {
    let start = Instant::now();
    let mut attached = CampaignConfig::new(ClassTag::UnicyclicAttached, 50, 42);
    attached.cycle = Span::new(3, 5);
    attached.extra = Span::new(0, 3);
    attached.weights = Span::new(2, 4);
    let mut forest = CampaignConfig::new(ClassTag::RootedForest, 50, 7);
    forest.weights = Span::new(2, 4);
    let mut cycle = CampaignConfig::new(ClassTag::OrientedCycle, 20, 1);
    cycle.cycle = Span::new(3, 6);
    cycle.weights = Span::new(2, 3);

    let mut parts = Vec::new();
    for cfg in [attached, forest, cycle] {
        let r = run_campaign(&cfg, false).map_err(|e| e.to_string())?;
        ensure(r.pass_count == cfg.count, || {
            format!(
                "{}: pass {} fail {} inapplicable {}",
                cfg.class, r.pass_count, r.fail_count, r.inapplicable_count
            )
        })?;
        for o in &r.instances {
            let table = o.report.betti.as_ref().ok_or("engine skipped an instance")?;
            assert_euler(&o.report.graph.edge_ideal(), table);
        }
        parts.push(format!("{} {}/{}", cfg.class, r.pass_count, cfg.count));
    }
    Ok(format!("{} in {:.1} s", parts.join(", "), start.elapsed().as_secs_f64()))
}

fn polarization_invariance(engine: &BettiEngine) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(410);
    for round in 0..50 {
        let ambient = vars(rng.gen_range(2..=4), "x");
        let i = random_ideal(&mut rng, &ambient, 6, 4);
        let p = polarize(&i).map_err(|e| e.to_string())?;
        let (ti, tp) = (table_with_euler(engine, &i)?, table_with_euler(engine, &p)?);
        ensure(ti == tp, || format!("round {round}: {i} vs {p}"))?;
    }
    Ok("50/50 tables identical".into())
}

fn additivity(engine: &BettiEngine) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(506);
    for round in 0..25 {
        let i = ideal_in(&mut rng, 2..=3, "x", 4, 3);
        let j = ideal_in(&mut rng, 2..=3, "y", 4, 3);
        let sum = i.sum(&j).map_err(|e| e.to_string())?;
        let (a, b, s) = (
            table_with_euler(engine, &i)?,
            table_with_euler(engine, &j)?,
            table_with_euler(engine, &sum)?,
        );
        let (ra, rb, rs) = (a.reg().unwrap(), b.reg().unwrap(), s.reg().unwrap());
        let (pa, pb, ps) = (a.pd().unwrap(), b.pd().unwrap(), s.pd().unwrap());
        ensure(rs == ra + rb - 1 && ps == pa + pb + 1, || {
            format!("round {round}: {i} + {j}: reg {rs} vs {ra}+{rb}-1, pd {ps} vs {pa}+{pb}+1")
        })?;
    }
    for round in 0..25 {
        let i = ideal_in(&mut rng, 2..=4, "x", 5, 3);
        let zs: Vec<(Variable, u32)> = (1..=rng.gen_range(1..=2))
            .map(|k| (Variable::new(format!("z{k}")), rng.gen_range(1..=3)))
            .collect();
        let u = Monomial::from_pairs(zs).unwrap();
        let ui = multiply_external(&u, &i).map_err(|e| e.to_string())?;
        let (t, tu) = (table_with_euler(engine, &i)?, table_with_euler(engine, &ui)?);
        let deg = u.degree() as i64;
        ensure(
            tu.reg().unwrap() == t.reg().unwrap() + deg && tu.pd() == t.pd(),
            || format!("round {round}: {u} * {i}"),
        )?;
    }
    Ok("25 disjoint sums, 25 external products".into())
}

fn splitting(engine: &BettiEngine) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(601);
    let mut entries = 0;
    let mut meets = 0;
    for round in 0..20 {
        let tag = if round % 2 == 0 {
            ClassTag::OrientedCycle
        } else {
            ClassTag::UnicyclicAttached
        };
        let params = InstanceParams {
            cycle_len: rng.gen_range(3..=4),
            extra_vertices: rng.gen_range(0..=2),
            weight_range: 2..=3,
            seed: rng.gen(),
        };
        let d = random_instance(tag, &params).map_err(|e| e.to_string())?;
        let r = split_report(engine, &d, None).map_err(|e| e.to_string())?;
        let v = &r.verdict;
        ensure(v.identity_holds && v.reg_check.holds && v.pd_check.holds, || {
            format!("round {round}: {}", d.to_json())
        })?;
        let polar = polarize(&d.edge_ideal()).map_err(|e| e.to_string())?;
        let pair = eil::build_split(&d, None).map_err(|e| e.to_string())?;
        let meet = intersect(&pair.j, &pair.k).map_err(|e| e.to_string())?;
        for ideal in [&polar, &pair.j, &pair.k, &meet] {
            table_with_euler(engine, ideal)?;
        }
        if let Some(c) = &r.intersection {
            ensure(c.holds, || format!("round {round}: J∩K {:?}", c))?;
            meets += 1;
        }
        entries += v.entries.len();
    }
    Ok(format!(
        "20/20 instances, {entries} (i, j) entries checked, J∩K invariants confirmed on {meets}"
    ))
}

fn dual_engine(engine: &BettiEngine) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(713);
    for round in 0..30 {
        let ambient = vars(rng.gen_range(2..=5), "x");
        let i = random_ideal(&mut rng, &ambient, 7, 3);
        let t = table_with_euler(engine, &i)?;
        let oracle = taylor_table(&i);
        assert_euler(&i, &oracle);
        ensure(t == oracle, || format!("round {round}: {i}"))?;
    }
    Ok("30/30 tables agree with the Taylor oracle; Euler checks hold".into())
}

fn determinism(_: &BettiEngine) -> Outcome {
    let cfg = CampaignConfig::new(ClassTag::UnicyclicAttached, 10, 8);
    let a = canonical_json(&run_campaign(&cfg, false).map_err(|e| e.to_string())?);
    let b = canonical_json(&run_campaign(&cfg, false).map_err(|e| e.to_string())?);
    ensure(a == b, || "library reports differ".into())?;

    let run = || {
        Command::new(env!("CARGO_BIN_EXE_eil"))
            .args(["verify", "--class", "RootedForest", "--count", "8", "--seed", "3"])
            .args(["--format", "json", "--no-timing"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (x, y) = (run()?, run()?);
    ensure(x.status.success(), || String::from_utf8_lossy(&x.stderr).into_owned())?;
    ensure(x.stdout == y.stdout && !x.stdout.is_empty(), || "CLI outputs differ".into())?;
    Ok(format!("library and CLI JSON byte-identical ({} bytes)", x.stdout.len()))
}

fn main() -> ExitCode {
    let engine = BettiEngine::default();
    let criteria: [Criterion; 8] = [
        ("polarization golden", polarization_golden),
        ("counterexample reproduction", counterexamples),
        ("formula campaigns", campaigns),
        ("polarization invariance", polarization_invariance),
        ("additivity", additivity),
        ("splitting identity", splitting),
        ("dual-engine agreement", dual_engine),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check(&engine) {
            Ok(detail) => println!("criterion {} ({name}): PASS - {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {why}", n + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
