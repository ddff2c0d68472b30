// The derived families: wallpaper quotients, H_[4] and catalogue groups.

use beauville::constructions::{build_catalogue_group, catalogue_entries, wallpaper_quotient, H4};
use beauville::matrix::Psl2;
use beauville::{FiniteGroup, Result};

pub fn run_example() -> Result<()> {
    let w = wallpaper_quotient(4, 3)?;
    println!("{} has order {}", w.descriptor(), w.order());

    let h = H4::new(Psl2::new(5)?);
    let g = h.coset_rep();
    println!("H_[4] over PSL(2,5): order {}, coset representative {}", h.order(), h.format_elem(&g));

    let entries = catalogue_entries(32);
    println!("{} catalogue groups of order ≤ 32", entries.len());
    let d5 = build_catalogue_group("D5", 100)?;
    assert_eq!(d5.size(), 10);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
