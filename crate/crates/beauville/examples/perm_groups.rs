// Permutation literals, stabilizer-chain orders and conjugator search.

use beauville::perm::{bsgs_order, conjugator_search, parse_cycles, Ambient, ConjugatorSearch};
use beauville::Result;

pub fn run_example() -> Result<()> {
    let a = parse_cycles("(1,2,3,4,5,6,7,8,9)", 9)?;
    let c = parse_cycles("(1,2,3)", 9)?;
    let order = bsgs_order(&[a.clone(), c.clone()])?;
    println!("|<{a:?}, (1,2,3)>| = {order}");
    assert_eq!(order.to_string(), "181440");

    // every γ with γaγ⁻¹ = a⁻¹ and γcγ⁻¹ = c⁻¹
    let r = conjugator_search(&a, &a.inverse(), &c, &c.inverse(), Ambient::Sym, 1_000_000)?;
    if let ConjugatorSearch::Solutions(v) = r {
        println!("{} inverting conjugators in S9", v.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
