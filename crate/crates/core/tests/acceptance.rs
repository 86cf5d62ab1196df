//! One PASS/FAIL line per acceptance criterion.

use std::time::Instant;

use schubert_core::verify::{registry, SuiteConfig};

fn main() {
    let only: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let cfg = SuiteConfig::default();
    let mut failed = 0;
    for suite in registry() {
        if !only.is_empty() && !only.iter().any(|o| o == suite.name()) {
            continue;
        }
        let start = Instant::now();
        let out = suite.run(&cfg);
        let status = if out.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2} [{}] {} checks in {:.1}s: {}",
            out.criterion,
            out.suite,
            out.checks,
            start.elapsed().as_secs_f64(),
            suite.summary()
        );
        for f in out.failures.iter().take(5) {
            println!("     {f}");
        }
        if !out.passed() {
            failed += 1;
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
