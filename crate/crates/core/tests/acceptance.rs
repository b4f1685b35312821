//! Acceptance suite: one pass/fail line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use duflo_core::suite::{run_criterion, CRITERIA};

fn main() -> ExitCode {
    let verbose = std::env::args().any(|a| a == "--verbose" || a == "-v");
    let mut failed = 0;
    for (id, title) in CRITERIA {
        let start = Instant::now();
        let results = run_criterion(id);
        let bad: Vec<_> = results.iter().filter(|r| !r.passed).collect();
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {id} {title}: {status} ({} checks, {:.1}s)", results.len(), start.elapsed().as_secs_f64());
        for r in &results {
            if verbose || !r.passed {
                let size = r.n.map(|n| format!(" n={n}")).unwrap_or_default();
                let mark = if r.passed { "ok" } else { "FAILED" };
                println!("    {mark} {}{size}: {} [{} ms]", r.name, r.detail, r.millis);
            }
        }
        if !bad.is_empty() {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
