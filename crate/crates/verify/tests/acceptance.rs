use std::io::Write;

use farey_verify::run_all;

#[test]
fn acceptance_criteria_1_to_10() {
    let report = run_all();
    // Written to the raw handle so the lines survive the harness's capture.
    let mut out = std::io::stdout().lock();
    for r in &report.results {
        writeln!(
            out,
            "criterion {:>2}: {} - {} ({:.2} s) {}",
            r.id,
            if r.passed { "pass" } else { "fail" },
            r.title,
            r.seconds,
            r.detail
        )
        .expect("stdout is writable");
    }
    drop(out);
    let failed: Vec<usize> = report
        .results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.id)
        .collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
