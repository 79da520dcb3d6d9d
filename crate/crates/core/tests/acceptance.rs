//! Acceptance suite: eight end-to-end criteria, one PASS/FAIL line each.
//! Exits non-zero if any criterion fails.

use std::process::ExitCode;

use moorops::moorecalc::StemTable;
use moorops::verify::{run_suite, CheckResult, SuiteConfig};

/// Extra conditions on top of a check's own verdict: runtime limits and the
/// minimum size of each sweep.
fn gate(r: &CheckResult) -> Option<String> {
    let (max_seconds, min_cases) = match r.id {
        // >= 1000 pairs, 4 functors each.
        1 => (Some(60.0), 4000),
        2 => (Some(30.0), 200),
        // 2 <= m, n <= 25 gives 24^2 table entries.
        4 => (None, 576),
        8 => (None, 162),
        _ => (None, 1),
    };
    if let Some(limit) = max_seconds {
        if r.seconds >= limit {
            return Some(format!("took {:.2}s, limit {limit}s", r.seconds));
        }
    }
    (r.cases < min_cases).then(|| format!("only {} cases, need {min_cases}", r.cases))
}

fn main() -> ExitCode {
    let results = run_suite(&SuiteConfig::default(), &StemTable::builtin());
    let mut failed = 0;
    for r in &results {
        for i in &r.identities {
            println!(
                "    {:<4} {} ({} cases, {} failures){}",
                if i.pass { "ok" } else { "FAIL" },
                i.name,
                i.cases,
                i.failures,
                i.first_failure
                    .as_ref()
                    .map(|f| format!("; e.g. {f}"))
                    .unwrap_or_default()
            );
        }
        let gate_failure = gate(r);
        let pass = r.pass && gate_failure.is_none();
        let mut detail = format!(
            "{}, {} cases, {} failures, {:.2}s",
            r.detail, r.cases, r.failures, r.seconds
        );
        if let Some(g) = &gate_failure {
            detail.push_str(&format!("; {g}"));
        }
        if let (false, Some(f)) = (r.pass, &r.first_failure) {
            detail.push_str(&format!("; first failure: {f}"));
        }
        println!(
            "[criterion {}] {}: {} ({detail})",
            r.id,
            r.name,
            if pass { "PASS" } else { "FAIL" }
        );
        failed += usize::from(!pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
