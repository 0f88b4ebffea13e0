//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use common::{brute_weakly_round, max_line_minor, subsets, Columns};
use dense_matroids::analysis::{dense_round_restriction, line_minor, round_restriction_bound, weakly_round};
use dense_matroids::geometry::ProjectiveGeometry;
use dense_matroids::harness::{corpus, growth_table, run_suite, Report, Status, SuiteConfig, SUITES};
use dense_matroids::{ElemSet, FieldSpec, Matroid, VerdictKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 7;

type Check = Result<String, String>;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn pg_count(q: i128, n: u32) -> i128 {
    (q.pow(n) - 1) / (q - 1)
}

fn suite_ok(r: &Report) -> Check {
    let s = r.summary;
    if s.fail > 0 {
        let first = r.instances.iter().find(|i| i.status == Status::Fail).unwrap();
        return Err(format!("{}: {} failures, first `{}`: {}", r.suite, s.fail, first.label, first.detail));
    }
    Ok(format!("{} {}/{} pass", r.suite, s.pass, r.instances.len()))
}

fn pg_density(r: &Report) -> Check {
    let start = Instant::now();
    let mut shapes: Vec<(u32, u32)> = [2, 3, 4, 5].iter().flat_map(|&q| (2..=4).map(move |n| (q, n))).collect();
    shapes.extend([(2, 5), (2, 6)]);
    for &(q, n) in &shapes {
        let g = ProjectiveGeometry::new(n as usize, &FieldSpec::of_order(q).unwrap()).map_err(|e| e.to_string())?;
        let want = pg_count(q as i128, n);
        if g.matroid().epsilon() as i128 != want {
            return Err(format!("PG({}, {q}) has {} points, expected {want}", n - 1, g.matroid().epsilon()));
        }
    }
    let ms = start.elapsed().as_millis() + r.wall_ms;
    if ms >= 10_000 {
        return Err(format!("took {ms} ms"));
    }
    Ok(format!("{} shapes exact, {} in {ms} ms", shapes.len(), suite_ok(r)?))
}

fn truncation(r: &Report) -> Check {
    let summary = suite_ok(r)?;
    for q in [2u32, 3] {
        for k in 0..=2usize {
            let want_gap = q as i128 * pg_count(q as i128 * q as i128, k as u32);
            for row in growth_table(q, k, 5 - k) {
                if row.gap != want_gap {
                    return Err(format!("q = {q}, k = {k}, n = {}: gap {} != {want_gap}", row.n, row.gap));
                }
                if row.n >= 2 && row.measured.map(|m| m as i128) != Some(pg_count(q as i128, (row.n + k) as u32)) {
                    return Err(format!("q = {q}, k = {k}, n = {}: measured {:?}", row.n, row.measured));
                }
            }
        }
    }
    Ok(format!("{summary}, growth gaps exact"))
}

fn quantization(r: &Report) -> Check {
    let summary = suite_ok(r)?;
    if r.summary.pass < 200 {
        return Err(format!("only {} projections", r.summary.pass));
    }
    if r.wall_ms >= 180_000 {
        return Err(format!("took {} ms", r.wall_ms));
    }
    Ok(format!("{summary} in {} ms", r.wall_ms))
}

fn exhaustive(r: &Report) -> Check {
    let summary = suite_ok(r)?;
    if r.summary.skip > 0 {
        return Err(format!("{} instances skipped", r.summary.skip));
    }
    Ok(summary)
}

fn kung(r: &Report) -> Check {
    let summary = suite_ok(r)?;
    let (tight, members): (Vec<_>, Vec<_>) = r
        .instances
        .iter()
        .filter(|i| i.status == Status::Pass)
        .partition(|i| i.label.ends_with("tightness"));
    if members.len() < 100 {
        return Err(format!("only {} members", members.len()));
    }
    if tight.len() != 9 || tight.iter().any(|i| !i.detail.ends_with("(tight)")) {
        return Err("PG(n-1, ℓ) does not meet the bound".into());
    }
    Ok(format!("{summary}, {} members, {} tight geometries", members.len(), tight.len()))
}

fn corpus_matroids(seed: u64, count: usize) -> Vec<(String, Matroid)> {
    corpus(seed, count)
        .unwrap()
        .into_iter()
        .map(|(label, doc)| (label, doc.replay().unwrap().matroid))
        .collect()
}

fn roundness(dense: &Report, connected: &Report) -> Check {
    let suites = format!("{}; {}", suite_ok(dense)?, suite_ok(connected)?);
    let all = corpus_matroids(SEED, 200);
    let (mut small, mut round, mut not_round) = (0, 0, 0);
    for (label, m) in all.iter().filter(|(_, m)| m.len() <= 10) {
        let fast = weakly_round(m).map_err(|e| e.to_string())?.holds();
        if fast != brute_weakly_round(m) {
            return Err(format!("{label}: weakly_round says {fast}"));
        }
        small += 1;
        if fast {
            round += 1;
        } else {
            not_round += 1;
        }
    }
    let mut contractions = 0;
    for (label, m) in &all {
        let n = dense_round_restriction(m).map_err(|e| e.to_string())?;
        if !round_restriction_bound(m, &n) {
            return Err(format!("{label}: restriction too sparse"));
        }
        if m.len() <= 40 && weakly_round(m).map_err(|e| e.to_string())?.holds() {
            for e in m.ground().iter() {
                let c = m.contract(&ElemSet::singleton(e)).map_err(|e| e.to_string())?;
                if !weakly_round(&c).map_err(|e| e.to_string())?.holds() {
                    return Err(format!("{label}: contracting {e} breaks weak roundness"));
                }
                contractions += 1;
            }
        }
    }
    Ok(format!(
        "oracle agrees on {small} small matroids ({round} round, {not_round} not), φ bound on {}, {contractions} contractions round; {suites}",
        all.len()
    ))
}

fn unstable(r: &Report) -> Check {
    let summary = exhaustive(r)?;
    let on = |k: &str| r.instances.iter().filter(|i| i.label.starts_with("PG(4, 2)") && i.label.contains(k)).count();
    let (one, two) = (on("+ 1 placement"), on("GF(4) placements"));
    if one == 0 || two == 0 {
        return Err(format!("PG(4, 2) instances: {one} with k = 1, {two} with k = 2"));
    }
    Ok(format!("{summary}; PG(4, 2) with k = 1: {one}, k = 2: {two}"))
}

fn oracles() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut sets = 0usize;
    for _ in 0..150 {
        let p = [2, 3, 5][rng.gen_range(0..3)];
        let c = Columns::random(p, rng.gen_range(2..=4), rng.gen_range(1..=10), &mut rng);
        let m = c.matroid();
        for x in subsets(m.ground()) {
            let lib = m.rank_of(&x).map_err(|e| e.to_string())?;
            if lib != c.gauss_rank(x) || lib != c.span_rank(x) {
                return Err(format!("rank of {x} in {c:?}"));
            }
            sets += 1;
        }
    }
    let mut lines = 0;
    for _ in 0..60 {
        let p = [2, 3, 5][rng.gen_range(0..3)];
        let c = Columns::random(p, rng.gen_range(2..=4), rng.gen_range(3..=12), &mut rng);
        let m = c.matroid();
        let best = max_line_minor(c.cols.len(), |x| c.gauss_rank(x));
        for points in 2..=8 {
            let found = line_minor(&m, points).map_err(|e| e.to_string())?.kind == VerdictKind::MinorFound;
            if found != (best >= points) {
                return Err(format!("U_(2,{points}) in {c:?}: brute force max {best}"));
            }
            lines += 1;
        }
    }
    Ok(format!("{sets} subset ranks, {lines} line-minor queries agree"))
}

fn main() -> ExitCode {
    let config = SuiteConfig::new(SEED);
    let mut first: BTreeMap<&str, Report> = BTreeMap::new();
    let mut errors: BTreeMap<&str, String> = BTreeMap::new();
    for (name, _) in SUITES {
        match run_suite(name, &config) {
            Ok(r) => {
                first.insert(name, r);
            }
            Err(e) => {
                errors.insert(name, e.to_string());
            }
        }
    }
    let get = |name: &str| -> Result<&Report, String> {
        first.get(name).ok_or_else(|| format!("{name}: {}", errors.get(name).cloned().unwrap_or_default()))
    };

    let determinism = || -> Check {
        let mut compared = 0;
        for (name, a) in &first {
            let b = run_suite(name, &config).map_err(|e| e.to_string())?;
            if a.to_json(false) != b.to_json(false) || a.to_table(false) != b.to_table(false) {
                return Err(format!("{name} differs between runs"));
            }
            compared += 1;
        }
        if compared != SUITES.len() {
            return Err(format!("only {compared} of {} suites ran", SUITES.len()));
        }
        Ok(format!("{compared} suites byte-identical on rerun"))
    };

    let criteria: Vec<Criterion> = vec![
        ("PG density", Box::new(|| pg_density(get("pg-density")?))),
        ("truncation spectrum", Box::new(|| truncation(get("truncation-spectrum")?))),
        ("projection quantization", Box::new(|| quantization(get("projection-quantization")?))),
        ("single placements", Box::new(|| exhaustive(get("pgframe")?))),
        ("line placements", Box::new(|| exhaustive(get("singleproj")?))),
        ("Kung bound", Box::new(|| kung(get("kung")?))),
        ("weak roundness", Box::new(|| roundness(get("getdenserestriction")?, get("roundconnectivity")?))),
        ("unstable-set contraction", Box::new(|| unstable(get("contractunstable")?))),
        ("oracle equivalence", Box::new(oracles)),
        ("determinism", Box::new(determinism)),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {:>2} {name}: {detail} [{} ms]", i + 1, start.elapsed().as_millis());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
