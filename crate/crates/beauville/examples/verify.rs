// Run a few of the reproduction checks and print their tables.

use beauville::verify::{format_table, run_criterion};
use beauville::{Caps, Result};

pub fn run_example() -> Result<()> {
    let caps = Caps::default();
    let outcomes: Vec<_> = [5, 7, 8].into_iter().map(|id| run_criterion(id, &caps)).collect();
    print!("{}", format_table(&outcomes));
    assert!(outcomes.iter().all(|o| o.passed));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
