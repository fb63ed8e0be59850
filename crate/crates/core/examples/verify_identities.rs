//! Replays every exact identity the classification rests on.

use realforms::verify::verify_all;

fn main() {
    let filter = std::env::args().nth(1);
    let report = verify_all(filter.as_deref());
    for case in report.cases.iter().filter(|c| !c.passed) {
        println!("FAIL {}: {:?}", case.id, case.detail);
    }
    let mut groups: Vec<&str> = report.cases.iter().map(|c| c.id.split('/').next().unwrap_or("")).collect();
    groups.dedup();
    for g in groups {
        let n = report.cases.iter().filter(|c| c.id.starts_with(g)).count();
        println!("{g:<10} {n:>4} cases");
    }
    println!("{} passed, {} failed", report.passed(), report.failed());
    if !report.all_passed() {
        std::process::exit(1);
    }
}
