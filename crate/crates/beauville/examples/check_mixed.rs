// A mixed structure on H_[4] for H = SL(2,11), checked by the structural certificate.

use beauville::beauville::{check_mixed_h4, G0Spec, Verdict};
use beauville::gallery::mixed_intro2;
use beauville::{Caps, Result};

pub fn run_example() -> Result<()> {
    let caps = Caps::default();
    let m = mixed_intro2(11, &caps)?;
    println!("orders of a, c, a⁻¹c⁻¹: {:?}", m.orders);
    let r = check_mixed_h4(&m.group, G0Spec::H2, &m.a, &m.c, &m.g, true, &caps)?;
    for c in &r.conditions {
        println!("  {} {:?}", c.id, c.ok);
    }
    assert_eq!(r.verdict, Verdict::Pass);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
