//! The `bv` command line. [`run`] parses arguments, writes to the given streams and returns the
//! process exit status: 0 pass, 1 checked and false, 2 undecided, 64 usage error.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::beauville::{CheckReport, G0Spec, Verdict};
use crate::caps::Caps;
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::gallery::{self, Params, Torus};
use crate::matrix::Coset;
use crate::search::{self, RealityWant, SearchMode, UnmixedOptions};
use crate::structure::{RealityOutput, Structure};
use crate::verify;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "bv", version, about = "Check, build and search for Beauville structures on finite groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check an unmixed structure (a1, c1; a2, c2).
    CheckUnmixed(UnmixedArgs),
    /// Check a mixed structure (G⁰; a, c; g).
    CheckMixed(MixedArgs),
    /// Print a gallery structure as a structure file.
    Gallery(GalleryArgs),
    /// Search one group, or the catalogue, for structures.
    Search(SearchArgs),
    /// Count unmixed structures on (Z/n)² with the first pair fixed.
    CountAbelian {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Reality analysis of a structure or a single pair, or a hunt for structures by reality.
    Reality(RealityArgs),
    /// Minimum Σ-intersection over all pairs of generating pairs of a wallpaper quotient.
    WallpaperScan {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run the reproduction suite.
    VerifyPaper {
        /// Run only these check numbers (comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Default)]
struct Source {
    /// Read a structure file.
    #[arg(long, conflicts_with = "stdin")]
    file: Option<std::path::PathBuf>,
    /// Read a structure file from standard input.
    #[arg(long)]
    stdin: bool,
    /// Group descriptor, e.g. `sym:8`, `sl2:13`, `h4:sl2:11`.
    #[arg(long)]
    group: Option<GroupDescriptor>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct UnmixedArgs {
    #[command(flatten)]
    src: Source,
    #[arg(long, allow_hyphen_values = true)]
    a1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
}

#[derive(Args, Debug)]
struct MixedArgs {
    #[command(flatten)]
    src: Source,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// `generated` (G⁰ = ⟨a, c⟩) or `h2` (the index-2 subgroup of an h4 group).
    #[arg(long, default_value = "generated")]
    g0: String,
    #[arg(long)]
    perfect: bool,
}

#[derive(Args, Debug)]
struct GalleryArgs {
    /// Entry name; omit with --list.
    name: Option<String>,
    #[arg(long)]
    list: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    q2: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    coset: Option<Coset>,
    #[arg(long)]
    torus: Option<Torus>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, required_unless_present = "catalogue")]
    group: Option<GroupDescriptor>,
    /// Scan every catalogue group up to this order instead of one group.
    #[arg(long, conflicts_with = "group")]
    catalogue: Option<usize>,
    /// `unmixed` or `mixed`.
    #[arg(long, default_value = "unmixed")]
    mode: String,
    #[arg(long)]
    up_to_orbit: bool,
    #[arg(long)]
    limit: Option<usize>,
    /// Required pair type, e.g. `4,6,7`; at most twice.
    #[arg(long = "types")]
    types: Vec<String>,
    /// Keep only structures with this reality behaviour.
    #[arg(long)]
    reality: Option<RealityWant>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random samples for groups beyond the table cap.
    #[arg(long, default_value_t = 20_000)]
    budget: usize,
    #[arg(long)]
    threads: Option<usize>,
    /// Zero the elapsed time so that reports compare byte for byte.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args, Debug)]
struct RealityArgs {
    #[command(flatten)]
    src: Source,
    #[arg(long, allow_hyphen_values = true)]
    a1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Search the group for structures with this behaviour instead of analysing one.
    #[arg(long)]
    hunt: Option<RealityWant>,
    #[arg(long = "types")]
    types: Vec<String>,
    #[arg(long, default_value_t = 1)]
    limit: usize,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Run with the process's own streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut i, mut o, mut e) = (std::io::stdin(), std::io::stdout(), std::io::stderr());
    run_with(argv, &mut i, &mut o, &mut e)
}

pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let caps = match Caps::from_env() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "BV_CAPS: {e}");
            return EXIT_USAGE;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.cmd, &caps, &mut io) {
        Ok(code) => code,
        // Output cut short by a closed pipe (`bv ... | head`) is not worth reporting.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_PASS,
        Err(e) => {
            let _ = writeln!(io.err, "bv: {e}");
            exit_for_error(&e)
        }
    }
}

/// Exit status for an error that stopped a command.
pub fn exit_for_error(e: &Error) -> i32 {
    match e {
        Error::Malformed(_) | Error::InvalidParameter(_) | Error::Json(_) | Error::Precondition(_) | Error::Unsupported(_) => {
            EXIT_USAGE
        }
        Error::Undecided(_) | Error::Overflow { .. } => EXIT_UNDECIDED,
        Error::NotFound(_) | Error::Inconsistent(_) | Error::NotAnAutomorphism(_) => EXIT_FAIL,
        Error::Io(_) => EXIT_USAGE,
    }
}

fn emit<T: Serialize>(io: &mut Io, value: &T) -> Result<()> {
    writeln!(io.out, "{}", serde_json::to_string_pretty(value)?).map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e)
}

fn dispatch(cmd: Cmd, caps: &Caps, io: &mut Io) -> Result<i32> {
    match cmd {
        Cmd::CheckUnmixed(a) => {
            let s = unmixed_source(&a.src, [&a.a1, &a.c1, &a.a2, &a.c2], io)?;
            if !matches!(s, Structure::Unmixed { .. }) {
                return Err(Error::InvalidParameter(format!("expected an unmixed structure, got kind {:?}", s.kind())));
            }
            report(io, a.src.json, &s.check(caps)?)
        }
        Cmd::CheckMixed(a) => {
            let s = mixed_source(&a, io)?;
            report(io, a.src.json, &s.check(caps)?)
        }
        Cmd::Gallery(a) => gallery_cmd(a, caps, io),
        Cmd::Search(a) => search_cmd(a, caps, io),
        Cmd::CountAbelian { n, json } => {
            let r = search::count_abelian(n, caps)?;
            if json {
                emit(io, &r)?;
            } else {
                let mut t = format!("(Z/{n})^2: {} solutions with the first pair fixed to the standard basis\n", r.count);
                if let Some(o) = r.orbits {
                    t += &format!("orbits under A_U: {o}\n");
                }
                if let Some(o) = r.b_orbits {
                    t += &format!("orbits without the swap of the pairs: {o}\n");
                }
                if let Some(b) = r.lower_bound {
                    t += &format!("(p−1)(p−2)²(p−4) = {b}\n");
                }
                if let Some(note) = &r.note {
                    t += &format!("note: {note}\n");
                }
                io.out.write_all(t.as_bytes()).map_err(io_err)?;
            }
            Ok(EXIT_PASS)
        }
        Cmd::Reality(a) => reality_cmd(a, caps, io),
        Cmd::WallpaperScan { d, m, json } => {
            let r = search::wallpaper_scan(d, m, caps)?;
            if json {
                emit(io, &r)?;
            } else {
                writeln!(
                    io.out,
                    "wallpaper:{d}:{m} (order {}): minimum |Σ ∩ Σ'| = {}\nwitness ({}, {}; {}, {})\n{} I_T-orbits, types {:?}",
                    r.order, r.min_intersection, r.witness[0], r.witness[1], r.witness[2], r.witness[3], r.it_orbits, r.types
                )
                .map_err(io_err)?;
            }
            Ok(EXIT_PASS)
        }
        Cmd::VerifyPaper { only, json } => {
            let ids: Vec<u32> = if only.is_empty() { verify::CRITERIA.iter().map(|c| c.0).collect() } else { only };
            let mut outcomes = vec![];
            for id in ids {
                let o = verify::run_criterion(id, caps);
                if !json {
                    io.out.write_all(verify::format_table(std::slice::from_ref(&o)).as_bytes()).map_err(io_err)?;
                }
                outcomes.push(o);
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            if json {
                emit(io, &outcomes)?;
            } else {
                writeln!(io.out, "{passed}/{} passed", outcomes.len()).map_err(io_err)?;
            }
            Ok(if passed == outcomes.len() { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

fn read_source(src: &Source, io: &mut Io) -> Result<Option<Structure>> {
    let text = if let Some(path) = &src.file {
        std::fs::read_to_string(path).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?
    } else if src.stdin {
        let mut s = String::new();
        io.stdin.read_to_string(&mut s).map_err(|e| Error::InvalidParameter(format!("stdin: {e}")))?;
        s
    } else {
        return Ok(None);
    };
    Ok(Some(Structure::from_json(&text)?))
}

fn lit(v: &Option<String>, name: &str) -> Result<String> {
    v.clone().ok_or_else(|| Error::InvalidParameter(format!("missing --{name} (or give --file/--stdin)")))
}

fn group_of(src: &Source) -> Result<GroupDescriptor> {
    src.group.clone().ok_or_else(|| Error::InvalidParameter("missing --group (or give --file/--stdin)".into()))
}

/// A structure from a file, stdin, or `--group` with literals; two literals make a pair.
fn unmixed_source(src: &Source, lits: [&Option<String>; 4], io: &mut Io) -> Result<Structure> {
    if let Some(s) = read_source(src, io)? {
        return Ok(s);
    }
    let group = group_of(src)?;
    if lits[2].is_none() && lits[3].is_none() {
        return Ok(Structure::Pair { group, a: lit(lits[0], "a1")?, c: lit(lits[1], "c1")?, extra: Default::default() });
    }
    Ok(Structure::Unmixed {
        group,
        a1: lit(lits[0], "a1")?,
        c1: lit(lits[1], "c1")?,
        a2: lit(lits[2], "a2")?,
        c2: lit(lits[3], "c2")?,
        extra: Default::default(),
    })
}

fn mixed_source(a: &MixedArgs, io: &mut Io) -> Result<Structure> {
    if let Some(s) = read_source(&a.src, io)? {
        if !matches!(s, Structure::Mixed { .. }) {
            return Err(Error::InvalidParameter(format!("expected a mixed structure, got kind {:?}", s.kind())));
        }
        return Ok(s);
    }
    let g0 = match a.g0.to_ascii_lowercase().as_str() {
        "generated" | "full" => G0Spec::Generated,
        "h2" => G0Spec::H2,
        other => return Err(Error::InvalidParameter(format!("--g0 must be generated or h2, got {other:?}"))),
    };
    Ok(Structure::Mixed {
        group: group_of(&a.src)?,
        g0,
        a: lit(&a.a, "a")?,
        c: lit(&a.c, "c")?,
        g: lit(&a.g, "g")?,
        perfect: a.perfect,
        extra: Default::default(),
    })
}

fn report(io: &mut Io, json: bool, r: &CheckReport) -> Result<i32> {
    if json {
        emit(io, r)?;
    } else {
        let mut t = format!("{}\n", match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Undecided => "UNDECIDED",
        });
        for c in &r.conditions {
            let ok = match c.ok {
                Some(true) => "ok",
                Some(false) => "fails",
                None => "undecided",
            };
            t += &format!("  {:<22} {:<9} [{}] {}\n", c.id, ok, c.strategy, c.detail.as_deref().unwrap_or(""));
        }
        if let Some(w) = &r.witness {
            t += &format!("  witness: {w}\n");
        }
        for n in &r.notes {
            t += &format!("  note: {n}\n");
        }
        io.out.write_all(t.as_bytes()).map_err(io_err)?;
    }
    Ok(r.exit_code())
}

fn gallery_cmd(a: GalleryArgs, caps: &Caps, io: &mut Io) -> Result<i32> {
    if a.list || a.name.is_none() {
        for (name, what, params) in gallery::ENTRIES {
            writeln!(io.out, "{name:<24} {params:<24} {what}").map_err(io_err)?;
        }
        return Ok(if a.list { EXIT_PASS } else { EXIT_USAGE });
    }
    let params = Params { n: a.n, p: a.p, q: a.q, q2: a.q2, k: a.k, coset: a.coset, torus: a.torus };
    let s = gallery::build(a.name.as_deref().unwrap_or_default(), &params, caps)?;
    writeln!(io.out, "{}", s.to_json()).map_err(io_err)?;
    Ok(EXIT_PASS)
}

/// `4,6,7` → sorted `[4,6,7]`.
pub fn parse_type(s: &str) -> Result<[u64; 3]> {
    let v: Vec<u64> = s
        .trim_matches(|c| c == '(' || c == ')' || c == ' ')
        .split(',')
        .map(|x| x.trim().parse::<u64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidParameter(format!("bad type {s:?}; expected r,s,t")))?;
    let mut t: [u64; 3] = v.try_into().map_err(|_| Error::InvalidParameter(format!("type {s:?} needs three entries")))?;
    t.sort_unstable();
    Ok(t)
}

fn parse_types(v: &[String]) -> Result<Vec<[u64; 3]>> {
    if v.len() > 2 {
        return Err(Error::InvalidParameter("at most two --types".into()));
    }
    v.iter().map(|s| parse_type(s)).collect()
}

fn search_cmd(a: SearchArgs, caps: &Caps, io: &mut Io) -> Result<i32> {
    let mixed = match a.mode.as_str() {
        "unmixed" => false,
        "mixed" => true,
        other => return Err(Error::InvalidParameter(format!("--mode must be unmixed or mixed, got {other:?}"))),
    };
    let types = parse_types(&a.types)?;
    let go = || -> Result<search::SearchReport> {
        if let Some(max) = a.catalogue {
            return search::scan_catalogue(max, mixed, caps);
        }
        let desc = a.group.clone().expect("clap requires --group without --catalogue");
        let mode = if mixed {
            SearchMode::Mixed { limit: a.limit }
        } else {
            SearchMode::Unmixed(UnmixedOptions { up_to_orbit: a.up_to_orbit, limit: a.limit, types: types.clone(), reality: a.reality })
        };
        search::search(&desc, &mode, a.seed, a.budget, caps)
    };
    let rep = match a.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("--threads: {e}")))?
            .install(go)?,
        None => go()?,
    };
    let rep = if a.no_timing { rep.without_timing() } else { rep };
    writeln!(io.out, "{}", rep.to_json()).map_err(io_err)?;
    Ok(EXIT_PASS)
}

fn reality_cmd(a: RealityArgs, caps: &Caps, io: &mut Io) -> Result<i32> {
    if let Some(want) = a.hunt {
        let rep = search::hunt_reality(&group_of(&a.src)?, want, parse_types(&a.types)?, a.limit, caps)?;
        writeln!(io.out, "{}", rep.without_timing().to_json()).map_err(io_err)?;
        return Ok(EXIT_PASS);
    }
    let s = unmixed_source(&a.src, [&a.a1, &a.c1, &a.a2, &a.c2], io)?;
    let r = s.reality(caps)?;
    let code = match &r {
        RealityOutput::Verdict(v) if v.biholo_conjugate.is_none() => EXIT_UNDECIDED,
        _ => EXIT_PASS,
    };
    if a.src.json {
        emit(io, &r)?;
    } else {
        let show = |x: Option<bool>| x.map_or("undecided".to_string(), |b| b.to_string());
        let mut t = String::new();
        match &r {
            RealityOutput::Verdict(v) => {
                t += &format!("biholomorphic to conjugate: {}\n", show(v.biholo_conjugate));
                t += &format!("real: {}\nstrongly real: {}\npath: {}\n", show(v.real), show(v.strongly_real), v.path);
                if let Some(w) = &v.witness {
                    t += &format!("witness: {w}\n");
                }
                for n in &v.notes {
                    t += &format!("note: {n}\n");
                }
            }
            RealityOutput::Cases { cases } => {
                for c in cases {
                    t += &format!("case {}: ψ(a) = {}, ψ(c) = {}: {}\n", c.case, c.psi_a, c.psi_c, show(c.solvable));
                }
            }
        }
        io.out.write_all(t.as_bytes()).map_err(io_err)?;
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let argv = std::iter::once("bv").chain(args.iter().copied());
        let code = run_with(argv, &mut input.as_bytes(), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn exit_codes() {
        let base = ["check-unmixed", "--group", "ab2:5", "--a1", "(1,0)", "--c1", "(0,1)"];
        let (code, out, _) = call(&[&base[..], &["--a2", "(1,0)", "--c2", "(0,1)"]].concat(), "");
        assert_eq!(code, 1);
        assert!(out.contains("witness"));
        let (code, _, _) = call(&[&base[..], &["--a2", "(1,2)", "--c2", "(3,4)"]].concat(), "");
        assert_eq!(code, 0);
        assert_eq!(call(&["frobnicate"], "").0, 64);
        assert_eq!(call(&["check-unmixed", "--group", "ab2:5", "--a1", "(9,x)", "--c1", "(0,1)", "--a2", "(1,0)", "--c2", "(0,1)"], "").0, 64);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn gallery_pipes_into_check() {
        let (code, json, _) = call(&["gallery", "sym-thm", "--n", "8"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["check-unmixed", "--stdin", "--json"], &json);
        assert_eq!(code, 0, "{out}");
        let r: CheckReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn types_parse() {
        assert_eq!(parse_type("(7,4,6)").unwrap(), [4, 6, 7]);
        assert!(parse_type("1,2").is_err());
    }
}
