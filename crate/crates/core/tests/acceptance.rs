//! Runs the verification harness once and grades the ten acceptance
//! criteria. Criteria whose expected values disagree with exact
//! computation are reported as FAIL; the test itself only fails when a
//! check outside that known list fails, or when a criterion without known
//! discrepancies does not pass.

use std::collections::BTreeSet;

use leibext::harness::{run, HarnessConfig, DEFAULT_SEED};
use leibext::report::{Check, Report, Status};

struct Criterion {
    number: usize,
    title: &'static str,
    tags: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "Leibniz identity of every catalog table", tags: &["leibniz", "nilradical"] },
    Criterion { number: 2, title: "cohomology dimensions for R", tags: &["r-dims"] },
    Criterion { number: 3, title: "cohomology dimensions for H", tags: &["h-dims"] },
    Criterion { number: 4, title: "cohomology dimensions for L1, L2, L3", tags: &["l1-dims", "l2-dims", "l3-dims"] },
    Criterion {
        number: 5,
        title: "listed cocycle bases span Z2",
        tags: &["r-basis", "h-basis", "l1-basis", "l2-basis", "l3-basis"],
    },
    Criterion { number: 6, title: "R_hat end to end", tags: &["r-hat"] },
    Criterion {
        number: 7,
        title: "classification end to end",
        tags: &["h-classification", "l1-classification", "l2-classification", "l3-classification"],
    },
    Criterion { number: 8, title: "nilradical lemma re-proof", tags: &["lemma"] },
    Criterion { number: 9, title: "automorphism families", tags: &["aut-families"] },
    Criterion { number: 10, title: "property suite", tags: &["properties"] },
];

/// Checks whose expected values are contradicted by exact computation.
const KNOWN_DISCREPANCIES: &[&str] = &[
    "r-dims/R2/2/0,0",
    "r-dims/R3/2/0,0",
    "r-dims/R4/2/0,0",
    "r-dims/R5/2/0,0",
    "r-dims/R2/3/1,-1",
    "r-dims/R3/3/1,-1",
    "r-dims/R4/3/1,-1",
    "r-dims/R5/3/1,-1",
    "r-hat/R2/h2-support",
    "r-hat/R3/h2-support",
    "r-hat/R4/h2-support",
    "r-hat/R5/h2-support",
    "h-basis/H/III/0,2,0,0",
    "h-basis/H/VIII/0,0,-1,1",
    "l2-basis/L2/5/0,3,0,4",
    "l2-basis/L2/5/0,-1,0,5",
];

fn key(c: &Check) -> String {
    format!("{}/{}", c.tag, c.id)
}

fn grade(report: &Report, criterion: &Criterion) -> (Status, Vec<String>) {
    let checks: Vec<&Check> = report.checks.iter().filter(|c| criterion.tags.contains(&c.tag.as_str())).collect();
    assert!(!checks.is_empty(), "criterion {} ran no checks", criterion.number);
    let failed: Vec<String> = checks.iter().filter(|c| c.status == Status::Fail).map(|c| key(c)).collect();
    (Status::from_bool(failed.is_empty()), failed)
}

fn main() {
    let report = run(&HarnessConfig { seed: DEFAULT_SEED, only: None });
    let known: BTreeSet<&str> = KNOWN_DISCREPANCIES.iter().copied().collect();

    let mut unexpected = Vec::new();
    for criterion in CRITERIA {
        let (status, failed) = grade(&report, criterion);
        let verdict = if status == Status::Pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} ({})", criterion.number, criterion.title);
        for f in &failed {
            println!("    {f}");
            if !known.contains(f.as_str()) {
                unexpected.push(f.clone());
            }
        }
    }
    let counts = report.counts();
    println!("{} checks passed, {} failed, {} inconclusive", counts.pass, counts.fail, counts.inconclusive);

    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");
    let still_failing: BTreeSet<String> = report.failures().map(key).collect();
    for k in &known {
        assert!(still_failing.contains(*k), "{k} now passes; update the discrepancy list");
    }
    // every repaired table and basis must check out
    assert!(report
        .checks
        .iter()
        .filter(|c| c.tag == "errata")
        .all(|c| c.status == Status::Pass));
}
