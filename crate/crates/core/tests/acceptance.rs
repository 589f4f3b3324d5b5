//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs as a plain binary so the lines are always printed.

use std::sync::Arc;
use std::time::{Duration, Instant};

use wps_core::codes::{self, DminSource};
use wps_core::search::SEARCH_BUDGET;
use wps_core::suites::{self, SuiteConfig, SuiteReport};
use wps_core::FieldCtx;

const GOLDEN_F19: &str = include_str!("golden/f19_table.csv");

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_report(rep: SuiteReport) -> Outcome {
    let mut detail = format!("{} checks, {} skipped", rep.checks, rep.skipped);
    if !rep.failures.is_empty() {
        detail.push_str(&format!(
            ", {} failures, first: {}",
            rep.failure_count, rep.failures[0]
        ));
    }
    Outcome {
        ok: rep.passed(),
        detail,
    }
}

fn cfg(qs: &[u64], max_weight: u32, max_m: usize, samples: usize) -> SuiteConfig {
    SuiteConfig {
        qs: qs.to_vec(),
        max_weight,
        max_m,
        samples,
        seed: 20240601,
        budget: SEARCH_BUDGET,
    }
}

fn point_counts() -> Outcome {
    from_report(suites::point_count_suite(&cfg(&[2, 3, 4, 5, 7, 8, 9], 6, 3, 0)).unwrap())
}

fn family_counts() -> Outcome {
    // 240 random specs plus the two fixed P(2,3,5) members at q = 5 and 7
    let rep = suites::family_suite(&cfg(&[3, 4, 5, 7], 4, 3, 240)).unwrap();
    let enough = rep.checks >= 200 + 4;
    let mut out = from_report(rep);
    out.ok &= enough;
    out
}

fn torus_counts() -> Outcome {
    from_report(suites::torus_suite(&cfg(&[2, 3, 4, 5, 7], 5, 0, 0)).unwrap())
}

fn extremal_values() -> Outcome {
    let rep = suites::extremal_suite(&cfg(&[2, 3], 4, 2, 0)).unwrap();
    let skipped = rep.skipped;
    let mut out = from_report(rep);
    out.ok &= skipped == 0;
    out
}

fn f19_table() -> Outcome {
    let f = Arc::new(FieldCtx::with_order(19).unwrap());
    let rows = codes::comparison_table(&f, 16, &codes::f19_weights(), SEARCH_BUDGET).unwrap();
    let csv = codes::table_csv(&rows);
    let mut problems = Vec::new();
    if csv != GOLDEN_F19 {
        problems.push(format!("csv differs from golden:\n{csv}"));
    }
    for r in &rows {
        let p = &r.params;
        if p.d_min_source != DminSource::Formula || !p.exact {
            problems.push(format!("{}: d_min not from formula", r.code));
        }
        if p.witness_weight != Some(p.d_min) {
            problems.push(format!(
                "{}: witness weight {:?} != d_min {}",
                r.code, p.witness_weight, p.d_min
            ));
        }
    }
    Outcome {
        ok: problems.is_empty() && rows.len() == 7,
        detail: if problems.is_empty() {
            format!("{} rows byte-exact, witnesses certify d_min", rows.len())
        } else {
            problems.join("; ")
        },
    }
}

fn small_codes() -> Outcome {
    let rep = suites::codes_suite(&cfg(&[2, 3], 3, 2, 0)).unwrap();
    let skipped = rep.skipped;
    let mut out = from_report(rep);
    out.ok &= skipped == 0;
    out
}

fn delorme_invariance() -> Outcome {
    from_report(suites::delorme_suite(&cfg(&[2, 3], 4, 2, 0)).unwrap())
}

fn bound_suites() -> Outcome {
    from_report(suites::bounds_suite(&cfg(&[2, 3, 4, 5], 4, 3, 10_000)).unwrap())
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 point counts",
            point_counts,
            Some(Duration::from_secs(30)),
        ),
        (
            "2 family closed form",
            family_counts,
            Some(Duration::from_secs(120)),
        ),
        (
            "3 torus counts",
            torus_counts,
            Some(Duration::from_secs(60)),
        ),
        (
            "4 extremal zero counts",
            extremal_values,
            Some(Duration::from_secs(600)),
        ),
        ("5 F_19 table", f19_table, Some(Duration::from_secs(60))),
        (
            "6 small-code exhaustive",
            small_codes,
            Some(Duration::from_secs(300)),
        ),
        ("7 reduction invariance", delorme_invariance, None),
        ("8 bound suites", bound_suites, None),
    ];
    let mut all = true;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut out = run();
        let took = start.elapsed();
        if let Some(l) = limit {
            if took > l {
                out.ok = false;
                out.detail.push_str(&format!(", over time limit {l:?}"));
            }
        }
        all &= out.ok;
        println!(
            "{} criterion {name}: {} ({:.1}s)",
            if out.ok { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64()
        );
    }
    if !all {
        std::process::exit(1);
    }
}
