// SL(2,p) arithmetic and simultaneous conjugation in the two cosets of SL(2,p) in SL±(2,p).

use beauville::gallery::sl2_qqq_split_lambda;
use beauville::matrix::{e_invariant, is_square, parse_mat, solve_conjugation_sl2, Coset, Sl2};
use beauville::{Caps, FiniteGroup, Result};

pub fn run_example() -> Result<()> {
    let p = 11;
    let g = Sl2::new(p)?;
    let b = parse_mat("[[0,1],[10,0]]", p)?;
    println!("{} has order {}", g.format_elem(&b), g.elem_order(&b));

    for lam in [3, 5] {
        let (g, pr) = sl2_qqq_split_lambda(p, lam, &Caps::default())?;
        let (ai, ci) = (g.inv(&pr.a), g.inv(&pr.c));
        let sl = solve_conjugation_sl2(p, &pr.a, &ai, &pr.c, &ci, Coset::Sl)?;
        let w = solve_conjugation_sl2(p, &pr.a, &ai, &pr.c, &ci, Coset::Slw)?;
        let e = e_invariant(p, lam)?;
        println!("λ = {lam}: e = {e}, square: {}, SL: {:?}, SL·W: {:?}", is_square(p, e), sl.is_some(), w.is_some());
        assert!(sl.is_some() != w.is_some());
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
