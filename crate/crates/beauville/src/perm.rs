//! Permutations acting from the left: `(x*y)(i) = x(y(i))`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith::lcm;
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, TypeClasses};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Box<[u16]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { img: (0..n as u16).collect() }
    }

    /// From a 0-based image table.
    pub fn from_images(img: Vec<usize>) -> Result<Perm> {
        let n = img.len();
        if n > u16::MAX as usize {
            return Err(Error::InvalidParameter(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &i in &img {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Malformed(format!("image table {img:?} is not a bijection")));
            }
        }
        Ok(Perm { img: img.into_iter().map(|i| i as u16).collect() })
    }

    /// Product of cycles given as 0-based point lists, composed as written.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut acc = Perm::identity(n);
        for cyc in cycles {
            let mut p: Vec<usize> = (0..n).collect();
            let mut seen = HashSet::new();
            for (k, &x) in cyc.iter().enumerate() {
                if x >= n {
                    return Err(Error::Malformed(format!("point {x} out of range for degree {n}")));
                }
                if !seen.insert(x) {
                    return Err(Error::Malformed(format!("point {x} repeated in a cycle")));
                }
                p[x] = cyc[(k + 1) % cyc.len()];
            }
            acc = acc.mul(&Perm::from_images(p)?);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.img.iter().map(|&i| i as usize)
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        Perm { img: other.img.iter().map(|&i| self.img[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u16; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            img[j as usize] = i as u16;
        }
        Perm { img: img.into_boxed_slice() }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// All cycles including fixed points, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths (fixed points included), sorted decreasingly.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn parity(&self) -> Parity {
        let n_cycles = self.cycles().len();
        if (self.degree() - n_cycles).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn first_moved(&self) -> Option<usize> {
        (0..self.degree()).find(|&i| self.apply(i) != i)
    }

    /// Cycle notation; `offset` is 1 for the usual 1-based points.
    pub fn to_cycle_string(&self, offset: usize) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|x| (x + offset).to_string()).collect();
                format!("({})", pts.join(","))
            })
            .collect();
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.concat()
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string(1))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string(1))
    }
}

/// Parse `(i,j,k)(l,m)…` or `()`. Cycles compose as written.
pub fn parse_cycles(text: &str, n: usize) -> Result<Perm> {
    parse_cycles_based(text, n, false)
}

pub fn parse_cycles_based(text: &str, n: usize, zero_based: bool) -> Result<Perm> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Malformed("empty permutation literal".into()));
    }
    if s == "()" {
        return Ok(Perm::identity(n));
    }
    let mut cycles = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::Malformed(format!("bad cycle syntax in {text:?}")))?;
        let pts: Vec<&str> = body.0.split(',').collect();
        if pts.len() < 2 {
            return Err(Error::Malformed(format!("cycle ({}) needs at least two points", body.0)));
        }
        let mut cyc = Vec::with_capacity(pts.len());
        for p in pts {
            let v: usize = p
                .parse()
                .map_err(|_| Error::Malformed(format!("bad point {p:?} in {text:?}")))?;
            let v = if zero_based {
                v
            } else {
                v.checked_sub(1)
                    .ok_or_else(|| Error::Malformed(format!("point 0 in 1-based literal {text:?}")))?
            };
            if v >= n {
                return Err(Error::Malformed(format!("point {p} out of range for degree {n}")));
            }
            cyc.push(v);
        }
        cycles.push(cyc);
        rest = body.1;
    }
    Perm::from_cycles(n, &cycles)
}

pub fn parity(p: &Perm) -> Parity {
    p.parity()
}

// ---------------------------------------------------------------------------
// Stabilizer chains

struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    trans: Vec<Option<Perm>>,
    checked: HashSet<(usize, usize)>,
}

impl Level {
    fn new(base: usize, n: usize) -> Level {
        let mut trans = vec![None; n];
        trans[base] = Some(Perm::identity(n));
        Level { base, gens: Vec::new(), orbit: vec![base], trans, checked: HashSet::new() }
    }

    fn extend_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for s in &self.gens {
                let y = s.apply(x);
                if self.trans[y].is_none() {
                    let u = s.mul(self.trans[x].as_ref().unwrap());
                    self.trans[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set built by the deterministic Schreier–Sims algorithm.
pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(n: usize, gens: &[Perm]) -> StabChain {
        let mut chain = StabChain { n, levels: Vec::new() };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.first_moved().unwrap();
                chain.levels.push(Level::new(b, n));
            }
        }
        for g in &gens {
            for i in 0..chain.levels.len() {
                if (0..i).all(|j| g.apply(chain.levels[j].base) == chain.levels[j].base) {
                    chain.levels[i].gens.push(g.clone());
                }
            }
        }
        for lvl in &mut chain.levels {
            lvl.extend_orbit();
        }
        chain.complete();
        chain
    }

    fn strip(&self, mut h: Perm, from: usize) -> (Perm, usize) {
        for m in from..self.levels.len() {
            let lvl = &self.levels[m];
            let x = h.apply(lvl.base);
            match &lvl.trans[x] {
                None => return (h, m),
                Some(u) => h = u.inverse().mul(&h),
            }
        }
        let k = self.levels.len();
        (h, k)
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let li = i as usize;
            let mut oi = 0;
            while oi < self.levels[li].orbit.len() {
                let x = self.levels[li].orbit[oi];
                for si in 0..self.levels[li].gens.len() {
                    if !self.levels[li].checked.insert((x, si)) {
                        continue;
                    }
                    let lvl = &self.levels[li];
                    let s = &lvl.gens[si];
                    let y = s.apply(x);
                    let sch = lvl.trans[y]
                        .as_ref()
                        .unwrap()
                        .inverse()
                        .mul(&s.mul(lvl.trans[x].as_ref().unwrap()));
                    let (h, j) = self.strip(sch, li + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        if j == self.levels.len() {
                            let b = h.first_moved().unwrap();
                            self.levels.push(Level::new(b, self.n));
                        }
                        for l in li + 1..=j {
                            self.levels[l].gens.push(h.clone());
                            self.levels[l].extend_orbit();
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
                oi += 1;
            }
            i -= 1;
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.n {
            return false;
        }
        let (h, j) = self.strip(p.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }
}

/// Exact order of `⟨gens⟩`.
pub fn bsgs_order(gens: &[Perm]) -> Result<BigUint> {
    let n = match gens.first() {
        Some(g) => g.degree(),
        None => return Ok(BigUint::from(1u32)),
    };
    if gens.iter().any(|g| g.degree() != n) {
        return Err(Error::InvalidParameter("generators of differing degree".into()));
    }
    Ok(StabChain::new(n, gens).order())
}

// ---------------------------------------------------------------------------
// Conjugator search

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    Sym,
    Alt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugatorSearch {
    /// The pivot is the identity; every ambient element solves the first equation.
    Degenerate,
    Solutions(Vec<Perm>),
}

/// `|C(x)|` in the full symmetric group, saturating.
pub fn centralizer_order(x: &Perm) -> u128 {
    let mut counts = std::collections::BTreeMap::new();
    for c in x.cycles() {
        *counts.entry(c.len()).or_insert(0u32) += 1;
    }
    let mut acc: u128 = 1;
    for (len, m) in counts {
        for k in 1..=m {
            acc = acc.saturating_mul(len as u128).saturating_mul(k as u128);
        }
    }
    acc
}

/// Every γ in the ambient group with `γaγ⁻¹ = a_target` and `γcγ⁻¹ = c_target`.
pub fn conjugator_search(
    a: &Perm,
    a_target: &Perm,
    c: &Perm,
    c_target: &Perm,
    ambient: Ambient,
    cap_centralizer: usize,
) -> Result<ConjugatorSearch> {
    check_degrees(&[a, a_target, c, c_target])?;
    if a.is_identity() {
        return Ok(ConjugatorSearch::Degenerate);
    }
    let size = centralizer_order(a);
    if size > cap_centralizer as u128 {
        return Err(Error::Overflow { what: "centralizer enumeration", cap: cap_centralizer });
    }
    let mut sols = solve_conjugation((a, a_target), &[(c, c_target)], ambient, usize::MAX);
    sols.sort();
    Ok(ConjugatorSearch::Solutions(sols))
}

/// First conjugator (deterministic) carrying each `src[i]` to `dst[i]`, pivoting on whichever of
/// the elements (or their product) has the smallest centralizer.
pub fn find_conjugator(
    src: (&Perm, &Perm),
    dst: (&Perm, &Perm),
    ambient: Ambient,
    cap_centralizer: usize,
) -> Result<Option<Perm>> {
    check_degrees(&[src.0, src.1, dst.0, dst.1])?;
    let prod_s = src.0.mul(src.1);
    let prod_d = dst.0.mul(dst.1);
    let cands = [(src.0, dst.0), (src.1, dst.1), (&prod_s, &prod_d)];
    let (pivot, size) = cands
        .iter()
        .map(|&(x, y)| ((x, y), centralizer_order(x)))
        .min_by_key(|&(_, s)| s)
        .unwrap();
    if size > cap_centralizer as u128 {
        return Err(Error::Overflow { what: "centralizer enumeration", cap: cap_centralizer });
    }
    let others: Vec<(&Perm, &Perm)> = cands.iter().copied().filter(|&(x, _)| x != pivot.0).collect();
    Ok(solve_conjugation(pivot, &others, ambient, 1).into_iter().next())
}

fn check_degrees(ps: &[&Perm]) -> Result<()> {
    let n = ps[0].degree();
    if ps.iter().any(|p| p.degree() != n) {
        return Err(Error::Malformed("permutations of differing degree".into()));
    }
    Ok(())
}

struct Search<'a> {
    slots: Vec<Vec<usize>>,
    targets: Vec<Vec<Vec<usize>>>,
    slot_len_class: Vec<usize>,
    used: Vec<Vec<bool>>,
    gamma: Vec<usize>,
    cons: Vec<(&'a Perm, Perm, &'a Perm)>,
    ambient: Ambient,
    limit: usize,
    out: Vec<Perm>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    fn consistent(&self, u: usize) -> bool {
        let v = self.gamma[u];
        for (y, y_inv, yt) in &self.cons {
            let w = y.apply(u);
            if self.gamma[w] != UNSET && self.gamma[w] != yt.apply(v) {
                return false;
            }
            let w2 = y_inv.apply(u);
            if self.gamma[w2] != UNSET && yt.apply(self.gamma[w2]) != v {
                return false;
            }
        }
        true
    }

    fn run(&mut self, k: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if k == self.slots.len() {
            let g = Perm::from_images(self.gamma.clone()).expect("bijective by construction");
            if self.ambient == Ambient::Sym || g.parity() == Parity::Even {
                self.out.push(g);
            }
            return;
        }
        let cyc = self.slots[k].clone();
        let cls = self.slot_len_class[k];
        let len = cyc.len();
        for t in 0..self.targets[cls].len() {
            if self.used[cls][t] {
                continue;
            }
            self.used[cls][t] = true;
            for r in 0..len {
                let tgt = &self.targets[cls][t];
                for (i, &x) in cyc.iter().enumerate() {
                    self.gamma[x] = tgt[(i + r) % len];
                }
                if cyc.iter().all(|&x| self.consistent(x)) {
                    self.run(k + 1);
                }
                for &x in &cyc {
                    self.gamma[x] = UNSET;
                }
                if self.out.len() >= self.limit {
                    break;
                }
            }
            self.used[cls][t] = false;
        }
    }
}

fn solve_conjugation<'a>(
    pivot: (&Perm, &Perm),
    cons: &[(&'a Perm, &'a Perm)],
    ambient: Ambient,
    limit: usize,
) -> Vec<Perm> {
    let n = pivot.0.degree();
    let group_by_len = |p: &Perm| {
        let mut m: std::collections::BTreeMap<usize, Vec<Vec<usize>>> = Default::default();
        for c in p.cycles() {
            m.entry(c.len()).or_default().push(c);
        }
        m
    };
    let src = group_by_len(pivot.0);
    let dst = group_by_len(pivot.1);
    let src_shape: Vec<(usize, usize)> = src.iter().map(|(k, v)| (*k, v.len())).collect();
    let dst_shape: Vec<(usize, usize)> = dst.iter().map(|(k, v)| (*k, v.len())).collect();
    if src_shape != dst_shape {
        return Vec::new();
    }
    let mut slots = Vec::new();
    let mut slot_len_class = Vec::new();
    let mut targets = Vec::new();
    let mut used = Vec::new();
    // Longer cycles first: they constrain the most points per choice.
    for (cls, (len, cycs)) in src.iter().rev().enumerate() {
        for c in cycs {
            slots.push(c.clone());
            slot_len_class.push(cls);
        }
        targets.push(dst[len].clone());
        used.push(vec![false; cycs.len()]);
    }
    let mut s = Search {
        slots,
        targets,
        slot_len_class,
        used,
        gamma: vec![UNSET; n],
        cons: cons.iter().map(|&(y, yt)| (y, y.inverse(), yt)).collect(),
        ambient,
        limit,
        out: Vec::new(),
    };
    s.run(0);
    s.out
}

// ---------------------------------------------------------------------------
// Symmetric and alternating groups

#[derive(Clone, Debug)]
pub struct Sym {
    n: usize,
}

#[derive(Clone, Debug)]
pub struct Alt {
    n: usize,
}

impl Sym {
    pub fn new(n: usize) -> Result<Sym> {
        if n == 0 || n > 4096 {
            return Err(Error::InvalidParameter(format!("symmetric degree {n} out of range")));
        }
        Ok(Sym { n })
    }
    pub fn degree(&self) -> usize {
        self.n
    }
}

impl Alt {
    pub fn new(n: usize) -> Result<Alt> {
        if n == 0 || n > 4096 {
            return Err(Error::InvalidParameter(format!("alternating degree {n} out of range")));
        }
        Ok(Alt { n })
    }
    pub fn degree(&self) -> usize {
        self.n
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

fn random_perm<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

macro_rules! perm_group_common {
    () => {
        fn identity(&self) -> Perm {
            Perm::identity(self.n)
        }
        fn mul(&self, x: &Perm, y: &Perm) -> Perm {
            x.mul(y)
        }
        fn inv(&self, x: &Perm) -> Perm {
            x.inverse()
        }
        fn parse_elem(&self, s: &str) -> Result<Perm> {
            let p = parse_cycles(s, self.n)?;
            if !self.contains(&p) {
                return Err(Error::Malformed(format!("{s} is not in {}", self.descriptor())));
            }
            Ok(p)
        }
        fn format_elem(&self, x: &Perm) -> String {
            x.to_cycle_string(1)
        }
        fn elem_order(&self, x: &Perm) -> u64 {
            x.order()
        }
        fn structural_subgroup_order(&self, gens: &[Perm]) -> Option<BigUint> {
            if gens.iter().any(|g| g.degree() != self.n) {
                return None;
            }
            Some(StabChain::new(self.n, gens).order())
        }
        fn cycle_type(&self, x: &Perm) -> Option<Vec<usize>> {
            Some(x.cycle_type())
        }
    };
}

impl FiniteGroup for Sym {
    type Elem = Perm;
    perm_group_common!();
    fn generators(&self) -> Vec<Perm> {
        if self.n == 1 {
            return vec![];
        }
        let t = Perm::from_cycles(self.n, &[vec![0, 1]]).unwrap();
        let s = Perm::from_cycles(self.n, &[(0..self.n).collect()]).unwrap();
        vec![t, s]
    }
    fn order(&self) -> BigUint {
        factorial(self.n)
    }
    fn contains(&self, x: &Perm) -> bool {
        x.degree() == self.n
    }
    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::Sym { n: self.n }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        random_perm(self.n, rng)
    }
    fn type_classes(&self) -> TypeClasses {
        TypeClasses::Symmetric
    }
}

impl FiniteGroup for Alt {
    type Elem = Perm;
    perm_group_common!();
    fn generators(&self) -> Vec<Perm> {
        let n = self.n;
        if n < 3 {
            return vec![];
        }
        let three = Perm::from_cycles(n, &[vec![0, 1, 2]]).unwrap();
        let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
        let long = Perm::from_cycles(n, &[long]).unwrap();
        if n == 3 {
            vec![three]
        } else {
            vec![three, long]
        }
    }
    fn order(&self) -> BigUint {
        if self.n < 2 {
            BigUint::from(1u32)
        } else {
            factorial(self.n) / BigUint::from(2u32)
        }
    }
    fn contains(&self, x: &Perm) -> bool {
        x.degree() == self.n && x.parity() == Parity::Even
    }
    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::Alt { n: self.n }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let p = random_perm(self.n, rng);
        if p.parity() == Parity::Even || self.n < 2 {
            p
        } else {
            Perm::from_cycles(self.n, &[vec![0, 1]]).unwrap().mul(&p)
        }
    }
    fn type_classes(&self) -> TypeClasses {
        TypeClasses::Alternating
    }
}

/// Whether the `Sₙ`-class of this cycle type splits into two `Aₙ`-classes.
pub fn alt_class_splits(cycle_type: &[usize]) -> bool {
    let mut seen = HashSet::new();
    cycle_type.iter().all(|&l| l % 2 == 1 && seen.insert(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generated_subgroup;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_and_apply() {
        let p = parse_cycles("(1,2,3)", 8).unwrap();
        assert_eq!((p.apply(0), p.apply(1), p.apply(2), p.apply(3)), (1, 2, 0, 3));
        let a = parse_cycles("(5,4,1)(2,6)", 8).unwrap();
        assert_eq!(a.apply(4), 3);
        assert_eq!(a.apply(3), 0);
        assert_eq!(a.apply(0), 4);
        assert_eq!(a.apply(1), 5);
        assert!(parse_cycles("()", 8).unwrap().is_identity());
        assert!(parse_cycles("(1,9)", 8).is_err());
        assert!(parse_cycles("(1,2", 8).is_err());
        assert!(parse_cycles("(1)", 8).is_err());
        assert!(parse_cycles(" ( 1 , 2 ) ", 3).is_ok());
    }

    #[test]
    fn left_action_composition() {
        // (1,2)(2,3) applies (2,3) first.
        let p = parse_cycles("(1,2)(2,3)", 3).unwrap();
        assert_eq!(p.to_cycle_string(1), "(1,2,3)");
        let a = parse_cycles("(5,4,1)(2,6)", 8).unwrap();
        let c = parse_cycles("(1,2,3)(4,5,6,7,8)", 8).unwrap();
        assert_eq!(c.mul(&a).to_cycle_string(1), "(1,6,3)(2,7,8,4)");
    }

    #[test]
    fn parities() {
        assert_eq!(parse_cycles("(1,2)", 4).unwrap().parity(), Parity::Odd);
        assert_eq!(parse_cycles("(1,2,3)", 4).unwrap().parity(), Parity::Even);
        assert_eq!(parse_cycles("(5,4,1)(2,6)", 8).unwrap().parity(), Parity::Odd);
    }

    #[test]
    fn bsgs_small() {
        let gens = [parse_cycles("(1,2)", 8).unwrap(), parse_cycles("(1,2,3,4,5,6,7,8)", 8).unwrap()];
        assert_eq!(bsgs_order(&gens).unwrap(), BigUint::from(40320u32));
        assert_eq!(bsgs_order(&[parse_cycles("(1,2,3)", 8).unwrap()]).unwrap(), BigUint::from(3u32));
        assert_eq!(bsgs_order(&[]).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn bsgs_matches_closure_on_random_s7_subgroups() {
        let s7 = Sym::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let k = rng.gen_range(1..=2);
            let gens: Vec<Perm> = (0..k)
                .map(|_| {
                    // bias toward small subgroups with sparse permutations
                    let x = s7.random_elem(&mut rng);
                    if rng.gen_bool(0.5) {
                        x.pow(rng.gen_range(1..6))
                    } else {
                        x
                    }
                })
                .collect();
            let closure = generated_subgroup(&s7, &gens, 10_000).unwrap().len();
            assert_eq!(bsgs_order(&gens).unwrap(), BigUint::from(closure));
            let chain = StabChain::new(7, &gens);
            for g in &gens {
                assert!(chain.contains(g));
            }
        }
    }

    #[test]
    fn conjugator_search_basic() {
        let a = parse_cycles("(1,2,3)", 5).unwrap();
        let at = parse_cycles("(1,3,2)", 5).unwrap();
        let c = parse_cycles("(4,5)", 5).unwrap();
        let ConjugatorSearch::Solutions(sols) =
            conjugator_search(&a, &at, &c, &c, Ambient::Sym, 1000).unwrap()
        else {
            panic!()
        };
        // centralizer of a is 3·2 = 6 elements; conjugators carrying a to a^{-1} and fixing c
        assert_eq!(sols.len(), 6);
        for g in &sols {
            assert_eq!(g.mul(&a).mul(&g.inverse()), at);
            assert_eq!(g.mul(&c).mul(&g.inverse()), c);
        }
        let id = Perm::identity(5);
        assert_eq!(
            conjugator_search(&id, &id, &id, &id, Ambient::Sym, 10).unwrap(),
            ConjugatorSearch::Degenerate
        );
        let t = parse_cycles("(1,2)", 5).unwrap();
        assert_eq!(
            conjugator_search(&a, &t, &c, &c, Ambient::Sym, 10).unwrap(),
            ConjugatorSearch::Solutions(vec![])
        );
        assert!(matches!(
            conjugator_search(&t, &t, &c, &c, Ambient::Sym, 3),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn conjugator_search_matches_brute_force() {
        let s5 = Sym::new(5).unwrap();
        let all = generated_subgroup(&s5, &s5.generators(), 1000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let a = s5.random_elem(&mut rng);
            let c = s5.random_elem(&mut rng);
            let h = s5.random_elem(&mut rng);
            let (at, ct) = if rng.gen_bool(0.5) {
                (h.mul(&a).mul(&h.inverse()), h.mul(&c).mul(&h.inverse()))
            } else {
                (a.inverse(), c.inverse())
            };
            for amb in [Ambient::Sym, Ambient::Alt] {
                let mut brute: Vec<Perm> = all
                    .iter()
                    .filter(|g| amb == Ambient::Sym || g.parity() == Parity::Even)
                    .filter(|g| g.mul(&a).mul(&g.inverse()) == at && g.mul(&c).mul(&g.inverse()) == ct)
                    .cloned()
                    .collect();
                brute.sort();
                match conjugator_search(&a, &at, &c, &ct, amb, 1000).unwrap() {
                    ConjugatorSearch::Degenerate => assert!(a.is_identity()),
                    ConjugatorSearch::Solutions(s) => assert_eq!(s, brute),
                }
                let first = find_conjugator((&a, &c), (&at, &ct), amb, 1000).unwrap();
                assert_eq!(first.is_some(), !brute.is_empty());
            }
        }
    }

    #[test]
    fn alt_group_basics() {
        let a5 = Alt::new(5).unwrap();
        assert_eq!(a5.order(), BigUint::from(60u32));
        let gens = a5.generators();
        assert_eq!(bsgs_order(&gens).unwrap(), BigUint::from(60u32));
        let a6 = Alt::new(6).unwrap();
        assert_eq!(bsgs_order(&a6.generators()).unwrap(), BigUint::from(360u32));
        assert!(a5.parse_elem("(1,2)").is_err());
        assert!(alt_class_splits(&[5]));
        assert!(alt_class_splits(&[3, 1, 5]));
        assert!(!alt_class_splits(&[3, 1, 1]));
        assert!(!alt_class_splits(&[2, 2, 1]));
    }
}
