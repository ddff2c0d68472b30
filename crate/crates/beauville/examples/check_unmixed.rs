// Check an unmixed structure on S8 and one that fails.

use beauville::beauville::{check_unmixed, Verdict};
use beauville::gallery::sn_thm_sym;
use beauville::structure::Structure;
use beauville::{Caps, Result};

pub fn run_example() -> Result<()> {
    let caps = Caps::default();
    let (g, v) = sn_thm_sym(8, &caps)?;
    let r = check_unmixed(&g, &v.first.a, &v.first.c, &v.second.a, &v.second.c, &caps)?;
    println!("S8: {:?}, types {} and {}", r.verdict, v.first.ty, v.second.ty);
    assert_eq!(r.verdict, Verdict::Pass);

    let bad = r#"{"kind":"unmixed","group":"ab2:5","a1":"(1,0)","c1":"(0,1)","a2":"(1,0)","c2":"(0,1)"}"#;
    let r = Structure::from_json(bad)?.check(&caps)?;
    println!("repeated pair: {:?}, witness {:?}", r.verdict, r.witness);
    assert_eq!(r.exit_code(), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
