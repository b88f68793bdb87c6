//! One check per acceptance criterion. Each prints a single
//! `[PASS]`/`[FAIL]` line; the test fails if any criterion fails.
//!
//! Run with `cargo test -p sombor-cli --test acceptance -- --nocapture`.

use std::collections::HashMap;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use sombor_core::enumeration::reference::free_trees_by_prufer;
use sombor_core::enumeration::{enumerate_family, enumerate_free_trees, TreeFamilyQuery};
use sombor_core::extremal::{
    arm_trim_inequality, center_absorb_inequality, classify, construct_t_star, endpoint_gain,
    feasible_alpha, partner_gap, t1_family, ExtremalParams, TreeClass,
};
use sombor_core::invariants::{
    independence_number, independence_number_oracle, pendant_inclusive_mis, sombor_index,
};
use sombor_core::transforms::{
    absorb_leaf_pendants, apply_pair_step, trim_arm, trim_to_fixed_point,
};
use sombor_core::verify::{verify, VerifyOptions, TOLERANCE};
use sombor_core::Tree;

const EXHAUSTIVE_MAX: usize = 12;
const EXHAUSTIVE_BUDGET: Duration = Duration::from_secs(10);
const EXTENDED_MAX: usize = 16;
const EXTENDED_BUDGET: Duration = Duration::from_secs(60);
const MIN_GAIN: f64 = 1e-6;
const TRANSFORM_MAX: usize = 11;
const SAMPLES: usize = 1000;
const GRID: u64 = 200;
const FREE_TREE_COUNTS: [usize; 13] = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn report(id: &str, title: &str, out: &Outcome) -> bool {
    let tag = if out.pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {title}: {}", out.detail);
    out.pass
}

fn exhaustive_extremal(n_max: usize, budget: Duration) -> Outcome {
    let start = Instant::now();
    let report = match verify(
        2,
        n_max,
        VerifyOptions {
            jobs: Some(1),
            cap: n_max,
        },
    ) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let elapsed = start.elapsed();
    let failed: Vec<_> = report
        .records
        .iter()
        .filter(|r| !r.passes())
        .map(|r| format!("({}, {})", r.order, r.alpha))
        .collect();
    let in_time = elapsed <= budget;
    outcome(
        failed.is_empty() && in_time,
        format!(
            "{} cells, {} trees, failures {:?}, {:.2}s single-threaded (budget {}s)",
            report.records.len(),
            report.records.iter().map(|r| r.family_size).sum::<usize>(),
            failed,
            elapsed.as_secs_f64(),
            budget.as_secs()
        ),
    )
}

fn star_case() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=EXHAUSTIVE_MAX {
        let family: Vec<_> = enumerate_family(TreeFamilyQuery::with_alpha(n, n - 1))
            .unwrap()
            .collect();
        let m = (n - 1) as f64;
        let expected = m * (m * m + 1.0).sqrt();
        let ok = family.len() == 1
            && family[0].canonical_code() == Tree::star(n).canonical_code()
            && (sombor_index(&family[0]) - expected).abs() <= TOLERANCE;
        if !ok {
            bad.push(n);
        }
    }
    outcome(bad.is_empty(), format!("n = 2..=12, failures at {bad:?}"))
}

fn pendant_set_suite() -> Outcome {
    let mut trees = 0;
    let mut failures = 0;
    for n in 1..=EXHAUSTIVE_MAX {
        for t in enumerate_free_trees(n).unwrap() {
            trees += 1;
            let set = pendant_inclusive_mis(&t);
            let alpha = independence_number(&t);
            let independent = t
                .edges()
                .all(|(u, v)| !(set.contains(u) && set.contains(v)));
            let pendants = t.pendant_vertices();
            // A single edge has two pendants but only one fits in an
            // independent set.
            let covers = if n == 2 {
                pendants.iter().filter(|&&p| set.contains(p)).count() == 1
            } else {
                pendants.iter().all(|&p| set.contains(p))
            };
            let oracle = independence_number_oracle(&t).unwrap();
            if !(independent && covers && set.len() == alpha && alpha == oracle) {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!("{trees} trees (n = 1..=12), {failures} failures"),
    )
}

fn scalar_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x0dd5_ca1a);
    let mut violations = 0;
    for i in 0..SAMPLES {
        let delta = [0.5, 1.0, 2.0][i % 3];
        let x = rng.random_range(1.0..100.0);
        let d = rng.random_range(1..50u32);
        let c = rng.random_range(d + 1..=50);
        if endpoint_gain(x + delta, c, d) <= endpoint_gain(x, c, d) {
            violations += 1;
        }
        if partner_gap(x + delta, c, d).unwrap() >= partner_gap(x, c, d).unwrap() {
            violations += 1;
        }
    }
    let mut grid = 0;
    for k in 1..=GRID {
        for r in 2..=GRID {
            grid += 1;
            if !center_absorb_inequality(r, k) {
                violations += 1;
            }
        }
        for l in 1..=GRID {
            grid += 1;
            if !arm_trim_inequality(l, k) {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{SAMPLES} random pairs, {grid} grid points, {violations} violations"),
    )
}

fn transform_suite() -> Outcome {
    let mut applied: HashMap<String, usize> = HashMap::new();
    let mut failures = Vec::new();
    let mut check = |t: &Tree, after: Result<Tree, String>, what: String| match after {
        Ok(after) => {
            let gain = sombor_index(&after) - sombor_index(t);
            if independence_number(&after) != independence_number(t) || gain <= MIN_GAIN {
                failures.push(format!("{what} on {:?}", t.edges().collect::<Vec<_>>()));
            }
            *applied.entry(what).or_default() += 1;
        }
        Err(e) => failures.push(format!("{what}: {e}")),
    };
    for n in 3..=TRANSFORM_MAX {
        for t in enumerate_free_trees(n).unwrap() {
            match classify(&t) {
                TreeClass::Other => match apply_pair_step(&t) {
                    Ok((case, after)) => check(&t, Ok(after), format!("pair/{case}")),
                    Err(e) => check(&t, Err(e.to_string()), "pair".into()),
                },
                TreeClass::T2 => {
                    let after = absorb_leaf_pendants(&t).map_err(|e| e.to_string());
                    check(&t, after, "absorb".into());
                }
                TreeClass::T1 => {
                    let after = match trim_arm(&t) {
                        Ok(Some(a)) => Ok(a),
                        Ok(None) => Err("no step on a T1 tree".into()),
                        Err(e) => Err(e.to_string()),
                    };
                    check(&t, after, "trim".into());
                }
                TreeClass::TStar | TreeClass::Star => {}
            }
        }
    }
    let mut chains = 0;
    for n in 3..=TRANSFORM_MAX {
        for alpha in feasible_alpha(n) {
            let params = ExtremalParams::new(n, alpha).unwrap();
            let target = construct_t_star(&params).canonical_code();
            for t in t1_family(&params) {
                chains += 1;
                match trim_to_fixed_point(&t) {
                    Ok((end, steps)) if end.canonical_code() == target && steps <= n => {}
                    _ => failures.push(format!("trim chain n={n} alpha={alpha}")),
                }
            }
        }
    }
    let mut kinds: Vec<_> = applied.into_iter().collect();
    kinds.sort();
    outcome(
        failures.is_empty(),
        format!(
            "steps {kinds:?}, {chains} trim chains, {} failures {:?}",
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn enumeration_suite() -> Outcome {
    let mut bad = Vec::new();
    for (n, &expected) in FREE_TREE_COUNTS.iter().enumerate().skip(1) {
        let mut codes: Vec<_> = enumerate_free_trees(n)
            .unwrap()
            .map(|t| t.canonical_code())
            .collect();
        let count = codes.len();
        codes.sort();
        codes.dedup();
        if count != expected || codes.len() != count {
            bad.push(format!("count n={n}: {count}"));
        }
        if n <= 9 {
            let reference: Vec<_> = free_trees_by_prufer(n)
                .iter()
                .map(|t| t.canonical_code())
                .collect();
            if reference != codes {
                bad.push(format!("reference n={n}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("counts n = 1..=12, reference n <= 9, mismatches {bad:?}"),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| -> Result<Vec<u8>, String> {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_sombor"))
            .args(["table", "--n-max", "10", "--output"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("exit {status}"));
        }
        std::fs::read(&path).map_err(|e| e.to_string())
    };
    match (run("first.csv"), run("second.csv")) {
        (Ok(a), Ok(b)) => outcome(
            a == b && !a.is_empty(),
            format!("{} bytes, identical: {}", a.len(), a == b),
        ),
        (Err(e), _) | (_, Err(e)) => outcome(false, e),
    }
}

#[test]
fn acceptance() {
    let results = [
        report(
            "1",
            "extremal value and unique maximizer, n <= 12",
            &exhaustive_extremal(EXHAUSTIVE_MAX, EXHAUSTIVE_BUDGET),
        ),
        report(
            "1x",
            "extended run, n <= 16",
            &exhaustive_extremal(EXTENDED_MAX, EXTENDED_BUDGET),
        ),
        report("2", "star family", &star_case()),
        report(
            "3",
            "pendant-inclusive independent set",
            &pendant_set_suite(),
        ),
        report(
            "4",
            "scalar monotonicity and shift inequalities",
            &scalar_suite(),
        ),
        report("5", "rewiring steps", &transform_suite()),
        report("6", "free-tree enumeration", &enumeration_suite()),
        report("7", "byte-identical table output", &determinism()),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    assert_eq!(passed, results.len());
}
