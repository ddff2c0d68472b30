// Drive the command line in process: build a gallery structure and check it.

use beauville::cli::run_with;
use beauville::Result;

pub fn run_example() -> Result<()> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(["bv", "gallery", "sl2-bs", "--p", "7"], &mut std::io::empty(), &mut out, &mut err);
    assert_eq!(code, 0);
    let structure = String::from_utf8_lossy(&out).to_string();
    println!("{structure}");

    let mut out = Vec::new();
    let code = run_with(
        ["bv", "check-unmixed", "--group", "ab2:7", "--a1", "(1,0)", "--c1", "(0,1)", "--a2", "(1,2)", "--c2", "(3,4)"],
        &mut std::io::empty(),
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit {code}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
