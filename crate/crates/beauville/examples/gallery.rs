// Build gallery entries by name and print them as structure files.

use beauville::gallery::{build, Params, ENTRIES};
use beauville::structure::Structure;
use beauville::{Caps, Result};

pub fn run_example() -> Result<()> {
    let caps = Caps::default();
    println!("{} entries", ENTRIES.len());
    let s = build("sl2-bs-nonsplit", &Params { p: Some(13), q: Some(7), ..Default::default() }, &caps)?;
    let json = s.to_json();
    println!("{json}");
    assert_eq!(Structure::from_json(&json)?, s);
    let pair = build("alt-2-3-84", &Params { n: Some(16), ..Default::default() }, &caps)?;
    println!("{}", pair.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
