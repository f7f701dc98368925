use optocog::golden::run_all;
use serde_json::json;

use super::Report;
use crate::table::{Cell, Table};

pub fn run() -> Report {
    let results = run_all();
    let mut report = Report::new();
    // ids and tolerances are text, so the table indexes checks in note order
    let mut t = Table::new("paper_check", &["check", "expected", "computed", "passed"]);
    for (i, r) in results.iter().enumerate() {
        t.push(vec![Cell::Int(i as u64 + 1), Cell::real(r.expected), Cell::opt(r.computed), Cell::Flag(r.passed)]);
        let computed = r.computed.map_or("-".to_owned(), |x| format!("{x:.4e}"));
        let unit = if r.unit.is_empty() { String::new() } else { format!(" {}", r.unit) };
        let mut line = format!(
            "{:>2} {} {:<26} computed {computed:>11}{unit}, expected {:.4e} {}",
            i + 1,
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.expected,
            r.tolerance
        );
        if let Some(e) = &r.error {
            line.push_str(&format!(" ({e})"));
        }
        report.notes.push(line);
    }
    let passed = results.iter().filter(|r| r.passed).count();
    report.notes.push(format!("{passed} of {} checks passed", results.len()));
    report.passed = passed == results.len();
    report.json.push((
        "paper_check".into(),
        json!({ "passed": report.passed, "checks": results }),
    ));
    report.tables.push(t);
    report
}
