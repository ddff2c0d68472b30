// Exhaustive and orbit-reduced search, the abelian count and a wallpaper scan.

use beauville::search::{count_abelian, search, wallpaper_scan, SearchMode, UnmixedOptions};
use beauville::{Caps, Result};

pub fn run_example() -> Result<()> {
    let caps = Caps::default();
    let mode = SearchMode::Unmixed(UnmixedOptions { up_to_orbit: true, ..Default::default() });
    let rep = search(&"psl2:7".parse()?, &mode, 0, 0, &caps)?;
    println!("psl2:7: {} orbit representatives, stats {:?}", rep.found.len(), rep.stats);

    let ab = count_abelian(7, &caps)?;
    println!("(Z/7)^2: count {}, orbits {:?}", ab.count, ab.orbits);

    let w = wallpaper_scan(6, 3, &caps)?;
    println!("wallpaper 6,3: minimum intersection {}", w.min_intersection);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
