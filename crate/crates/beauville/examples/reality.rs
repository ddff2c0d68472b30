// A structure on A40 that is biholomorphic to its conjugate but not real.

use beauville::gallery::an_intro3;
use beauville::reality::reality_unmixed;
use beauville::{Caps, Result};

pub fn run_example() -> Result<()> {
    let caps = Caps::default();
    let (g, v) = an_intro3(13, &caps)?;
    let r = reality_unmixed(&g, &v.quadruple(), &caps)?;
    println!("biholomorphic to conjugate: {:?}, real: {:?}", r.biholo_conjugate, r.real);
    for (k, table) in r.cases.iter().enumerate() {
        let solvable: Vec<_> = table.iter().map(|c| c.solvable).collect();
        println!("pair {}: {solvable:?}", k + 1);
    }
    assert_eq!((r.biholo_conjugate, r.real), (Some(true), Some(false)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
