//! Exhaustive and randomized searches: unmixed structures up to `A_U`-orbits, mixed structures,
//! the abelian count, catalogue scans, reality hunts and the wallpaper intersection scan.
//!
//! The exhaustive searches tabulate the group and work in layers. Generating pairs are first
//! taken up to simultaneous conjugation (a pair is stored as a class representative `a` and a
//! `c` minimal under the centralizer of `a`), then grouped into `I_T`-orbits. Σ is constant on
//! an `I_T`-orbit and is a union of conjugacy classes, so it is kept as a class bitset, and a
//! structure up to `I_T × I_T` is a pair of orbits with bitsets meeting only in the identity.
//! The diagonal outer automorphisms and the swap τ then act on those pairs.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, is_prime};
use crate::aut::AutGroup;
use crate::beauville::{check_unmixed, TypeTriple, Verdict};
use crate::caps::Caps;
use crate::constructions::{build_catalogue_group, catalogue_entries, wallpaper_quotient, Ab2, TableGroup};
use crate::descriptor::{with_group, GroupDescriptor, GroupVisitor};
use crate::error::{Error, Result};
use crate::group::{generates, FiniteGroup};
use crate::reality::{reality_unmixed, RealityVerdict};
use crate::structure::Structure;

pub const CATALOGUE_DISCLAIMER: &str =
    "partial catalogue, not SmallGroups-complete: only the constructible families listed under \
     'scanned' were searched, so an empty result is evidence rather than proof";

// ---------------------------------------------------------------------------
// Small utilities

/// Union-find whose roots are the minimal members.
struct Dsu(Vec<u32>);

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu((0..n as u32).collect())
    }
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let p = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = p;
            x = p;
        }
        x
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

type Bits = Vec<u64>;

fn bit_set(b: &mut Bits, i: u32) {
    b[i as usize / 64] |= 1 << (i % 64);
}

fn bits_and_count(x: &Bits, y: &Bits) -> u32 {
    x.iter().zip(y).map(|(a, b)| (a & b).count_ones()).sum()
}

fn bits_members(x: &Bits) -> impl Iterator<Item = u32> + '_ {
    x.iter()
        .enumerate()
        .flat_map(|(w, &v)| (0..64).filter(move |i| v >> i & 1 == 1).map(move |i| (w * 64 + i) as u32))
}

fn is_hyperbolic(r: u64, s: u64, t: u64) -> bool {
    s * t + r * t + r * s < r * s * t
}

fn sorted3(t: TypeTriple) -> [u64; 3] {
    t.sorted()
}

/// A small generating set of the subgroup `members` (which must be closed).
fn greedy_generators(t: &TableGroup, members: &[u32]) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut inside = vec![false; t.size()];
    inside[0] = true;
    for &z in members {
        if !inside[z as usize] {
            gens.push(z);
            for x in t.closure(&gens) {
                inside[x as usize] = true;
            }
        }
    }
    gens
}

// ---------------------------------------------------------------------------
// Pairs up to conjugation

/// Generating pairs of a table group up to simultaneous conjugation.
pub(crate) struct PairSpace {
    pub t: TableGroup,
    reps: Vec<u32>,
    /// `k` with `k x k⁻¹` the representative of the class of `x`.
    to_rep: Vec<u32>,
    /// Per class: minimum of the orbit of each element under the representative's centralizer.
    canon: Vec<Vec<u32>>,
    center: usize,
}

impl PairSpace {
    pub fn new(t: TableGroup) -> PairSpace {
        let n = t.size();
        let classes = t.classes().to_vec();
        let reps: Vec<u32> = classes.iter().map(|c| *c.iter().min().unwrap()).collect();
        let gens = t.gens().to_vec();
        let mut to_rep = vec![u32::MAX; n];
        for &r in &reps {
            to_rep[r as usize] = 0;
            let mut stack = vec![r];
            while let Some(x) = stack.pop() {
                for &s in &gens {
                    let y = t.conj(x, s);
                    if to_rep[y as usize] == u32::MAX {
                        to_rep[y as usize] = t.m(to_rep[x as usize], t.inverse(s));
                        stack.push(y);
                    }
                }
            }
        }
        let canon: Vec<Vec<u32>> = reps
            .par_iter()
            .map(|&r| {
                let cent: Vec<u32> = (0..n as u32).filter(|&z| t.m(z, r) == t.m(r, z)).collect();
                let cg = greedy_generators(&t, &cent);
                let mut dsu = Dsu::new(n);
                for x in 0..n as u32 {
                    for &z in &cg {
                        dsu.union(x, t.conj(x, z));
                    }
                }
                (0..n as u32).map(|x| dsu.find(x)).collect()
            })
            .collect();
        let center = classes.iter().filter(|c| c.len() == 1).count();
        PairSpace { t, reps, to_rep, canon, center }
    }

    pub fn size(&self) -> usize {
        self.t.size()
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn class_size(&self, i: u32) -> usize {
        self.t.classes()[i as usize].len()
    }

    pub fn canonical(&self, a: u32, c: u32) -> (u32, u32) {
        let ci = self.t.class_of(a) as usize;
        let c1 = self.t.conj(c, self.to_rep[a as usize]);
        (self.reps[ci], self.canon[ci][c1 as usize])
    }

    /// Classes meeting Σ(a, c); always includes the identity class.
    pub fn sigma_classes(&self, a: u32, c: u32) -> Bits {
        let t = &self.t;
        let mut b = vec![0u64; self.class_count().div_ceil(64)];
        bit_set(&mut b, t.class_of(0));
        for x in [a, c, t.m(a, c)] {
            let mut y = x;
            while y != 0 {
                bit_set(&mut b, t.class_of(y));
                y = t.m(y, x);
            }
        }
        b
    }

    pub fn type_of(&self, a: u32, c: u32) -> TypeTriple {
        let t = &self.t;
        TypeTriple(t.ord(a) as u64, t.ord(c) as u64, t.ord(t.m(a, c)) as u64)
    }

    /// Canonical generating pairs whose type passes `keep`, sorted.
    pub fn generating_pairs(&self, keep: impl Fn(TypeTriple) -> bool + Sync) -> Vec<(u32, u32)> {
        let n = self.size() as u32;
        let id_class = self.t.class_of(0) as usize;
        let mut out: Vec<(u32, u32)> = (0..self.class_count())
            .into_par_iter()
            .filter(|&ci| ci != id_class)
            .flat_map_iter(|ci| {
                let r = self.reps[ci];
                (1..n)
                    .filter(move |&c| self.canon[ci][c as usize] == c)
                    .filter(|&c| keep(self.type_of(r, c)))
                    .filter(|&c| self.t.generates_pair(r, c))
                    .map(move |c| (r, c))
                    .collect::<Vec<_>>()
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Number of pairs in one class under simultaneous conjugation (the pair generates).
    pub fn inner_class_size(&self) -> usize {
        self.size() / self.center
    }
}

/// One `I_T`-orbit of generating pairs.
#[derive(Clone, Debug)]
pub(crate) struct ItOrbit {
    /// The minimal canonical pair in the orbit.
    pub rep: (u32, u32),
    /// Number of pairs up to conjugation in the orbit.
    pub classes: usize,
    pub sigma: Bits,
    pub ty: [u64; 3],
}

pub(crate) struct ItOrbits {
    pairs: Vec<(u32, u32)>,
    index: HashMap<(u32, u32), u32>,
    orbit_of: Vec<u32>,
    pub orbits: Vec<ItOrbit>,
}

impl ItOrbits {
    pub fn new(space: &PairSpace, pairs: Vec<(u32, u32)>) -> ItOrbits {
        let index: HashMap<(u32, u32), u32> = pairs.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
        let t = &space.t;
        let mut dsu = Dsu::new(pairs.len());
        for (i, &(a, c)) in pairs.iter().enumerate() {
            // σ₁: (a⁻¹c⁻¹, a) and σ₃: (c, a) generate the six σ's
            let s1 = space.canonical(t.inverse(t.m(c, a)), a);
            let s3 = space.canonical(c, a);
            for q in [s1, s3] {
                let j = *index.get(&q).expect("σ preserves generation and type multiset");
                dsu.union(i as u32, j);
            }
        }
        let mut orbit_id: HashMap<u32, u32> = HashMap::new();
        let mut orbits: Vec<ItOrbit> = Vec::new();
        let mut orbit_of = vec![0u32; pairs.len()];
        for i in 0..pairs.len() {
            let root = dsu.find(i as u32);
            let id = *orbit_id.entry(root).or_insert_with(|| {
                let (a, c) = pairs[root as usize];
                orbits.push(ItOrbit {
                    rep: (a, c),
                    classes: 0,
                    sigma: space.sigma_classes(a, c),
                    ty: sorted3(space.type_of(a, c)),
                });
                orbits.len() as u32 - 1
            });
            orbits[id as usize].classes += 1;
            orbit_of[i] = id;
        }
        ItOrbits { pairs, index, orbit_of, orbits }
    }

    pub fn orbit_of_pair(&self, space: &PairSpace, a: u32, c: u32) -> Option<u32> {
        self.index.get(&space.canonical(a, c)).map(|&i| self.orbit_of[i as usize])
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

// ---------------------------------------------------------------------------
// Unmixed enumeration

/// Reality property wanted by [`hunt_reality`] and the reality filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RealityWant {
    BiholoNotReal,
    NotBiholo,
    Real,
}

impl RealityWant {
    pub fn matches(self, v: &RealityVerdict) -> bool {
        match self {
            RealityWant::BiholoNotReal => v.biholo_conjugate == Some(true) && v.real == Some(false),
            RealityWant::NotBiholo => v.biholo_conjugate == Some(false),
            RealityWant::Real => v.real == Some(true),
        }
    }
}

impl std::str::FromStr for RealityWant {
    type Err = Error;
    fn from_str(s: &str) -> Result<RealityWant> {
        match s {
            "biholo-not-real" => Ok(RealityWant::BiholoNotReal),
            "not-biholo" => Ok(RealityWant::NotBiholo),
            "real" => Ok(RealityWant::Real),
            _ => Err(Error::InvalidParameter(format!("unknown reality filter {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct UnmixedOptions {
    /// Reduce modulo `A_U(G)`; otherwise one structure per pair of `I_T`-orbits.
    pub up_to_orbit: bool,
    pub limit: Option<usize>,
    /// Sorted types that must occur among the two pair types (at most two).
    pub types: Vec<[u64; 3]>,
    pub reality: Option<RealityWant>,
}

impl UnmixedOptions {
    fn types_ok(&self, x: &[u64; 3], y: &[u64; 3]) -> bool {
        match self.types.as_slice() {
            [] => true,
            [t] => t == x || t == y,
            [t, u] => (t == x && u == y) || (t == y && u == x),
            _ => false,
        }
    }
    fn type_possible(&self, x: &[u64; 3]) -> bool {
        self.types.len() < 2 || self.types.contains(x)
    }
}

#[derive(Clone, Debug)]
pub struct UnmixedEnumeration<E> {
    pub structures: Vec<[E; 4]>,
    /// False when `limit` cut the list short.
    pub complete: bool,
    /// Number of `A_U`-orbits (only with `up_to_orbit`).
    pub orbit_count: Option<usize>,
    /// Number of orbits of the index ≤ 2 subgroup `B_U` (no swap of the two pairs).
    pub b_orbit_count: Option<usize>,
    /// `|U(G)|` restricted to the type filter (only when not cut short).
    pub total: Option<u128>,
    pub pair_classes: usize,
    pub it_orbits: usize,
}

/// Everything the exhaustive unmixed search knows about a group.
pub struct UnmixedSpace<'g, G: AutGroup> {
    g: &'g G,
    elems: Vec<G::Elem>,
    index: HashMap<G::Elem, u32>,
    space: PairSpace,
    it: ItOrbits,
}

impl<'g, G: AutGroup> UnmixedSpace<'g, G> {
    /// Tabulate `g` and enumerate its hyperbolic generating pairs. Errors when `|G|` exceeds the
    /// table cap.
    pub fn new(g: &'g G, caps: &Caps) -> Result<UnmixedSpace<'g, G>> {
        Self::with_filter(g, caps, |t| is_hyperbolic(t.0, t.1, t.2))
    }

    fn with_filter(g: &'g G, caps: &Caps, keep: impl Fn(TypeTriple) -> bool + Sync) -> Result<UnmixedSpace<'g, G>> {
        let (t, elems) = TableGroup::from_group(g, caps.table).map_err(|e| match e {
            Error::Overflow { cap, .. } => Error::Overflow { what: "exhaustive search table", cap },
            e => e,
        })?;
        let index = elems.iter().enumerate().map(|(i, x)| (x.clone(), i as u32)).collect();
        let space = PairSpace::new(t);
        let pairs = space.generating_pairs(keep);
        let it = ItOrbits::new(&space, pairs);
        Ok(UnmixedSpace { g, elems, index, space, it })
    }

    pub fn it_orbit_count(&self) -> usize {
        self.it.orbits.len()
    }

    fn elem(&self, i: u32) -> G::Elem {
        self.elems[i as usize].clone()
    }

    fn quad(&self, i: u32, j: u32) -> [G::Elem; 4] {
        let (a1, c1) = self.it.orbits[i as usize].rep;
        let (a2, c2) = self.it.orbits[j as usize].rep;
        [self.elem(a1), self.elem(c1), self.elem(a2), self.elem(c2)]
    }

    fn compatible(&self, i: usize, j: usize) -> bool {
        bits_and_count(&self.it.orbits[i].sigma, &self.it.orbits[j].sigma) == 1
    }

    /// Action of the outer automorphism generators on `I_T`-orbit ids.
    fn aut_actions(&self, caps: &Caps) -> Result<Vec<Vec<u32>>> {
        let auts = self.g.outer_generators(caps)?;
        let mut out = Vec::new();
        for w in auts {
            let perm: Vec<u32> = self.elems.iter().map(|x| self.index[&self.g.apply_aut(&w, x)]).collect();
            let act = self
                .it
                .orbits
                .iter()
                .map(|o| {
                    self.it
                        .orbit_of_pair(&self.space, perm[o.rep.0 as usize], perm[o.rep.1 as usize])
                        .ok_or_else(|| Error::Inconsistent("automorphism image of a generating pair is missing".into()))
                })
                .collect::<Result<Vec<u32>>>()?;
            out.push(act);
        }
        Ok(out)
    }

    /// Ordered pairs of compatible orbits passing the type filter.
    fn compatible_pairs(&self, opts: &UnmixedOptions) -> Vec<(u32, u32)> {
        let k = self.it.orbits.len();
        let orbits = &self.it.orbits;
        (0..k)
            .into_par_iter()
            .filter(|&i| opts.type_possible(&orbits[i].ty))
            .flat_map_iter(|i| {
                (0..k)
                    .filter(move |&j| opts.types_ok(&orbits[i].ty, &orbits[j].ty) && self.compatible(i, j))
                    .map(move |j| (i as u32, j as u32))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn enumerate(&self, opts: &UnmixedOptions, caps: &Caps) -> Result<UnmixedEnumeration<G::Elem>> {
        let limit = opts.limit.unwrap_or(usize::MAX);
        let mut structures = Vec::new();
        let mut complete = true;
        let inner = self.space.inner_class_size() as u128;
        let weight = |i: u32, j: u32| {
            self.it.orbits[i as usize].classes as u128 * self.it.orbits[j as usize].classes as u128 * inner * inner
        };
        let keep = |v: [G::Elem; 4], structures: &mut Vec<[G::Elem; 4]>| -> Result<bool> {
            if let Some(want) = opts.reality {
                if !want.matches(&reality_unmixed(self.g, &v, caps)?) {
                    return Ok(true);
                }
            }
            if structures.len() >= limit {
                return Ok(false);
            }
            structures.push(v);
            Ok(true)
        };
        if !opts.up_to_orbit {
            if opts.reality.is_none() && opts.limit.is_some() {
                // existence-style search: stop at the limit without building the pair list
                let k = self.it.orbits.len();
                'outer: for i in 0..k {
                    if !opts.type_possible(&self.it.orbits[i].ty) {
                        continue;
                    }
                    for j in 0..k {
                        if opts.types_ok(&self.it.orbits[i].ty, &self.it.orbits[j].ty) && self.compatible(i, j) {
                            if structures.len() >= limit {
                                complete = false;
                                break 'outer;
                            }
                            structures.push(self.quad(i as u32, j as u32));
                        }
                    }
                }
                let total = if complete { Some(self.compatible_pairs(opts).iter().map(|&(i, j)| weight(i, j)).sum()) } else { None };
                return Ok(self.finish(structures, complete, None, None, total));
            }
            let pairs = self.compatible_pairs(opts);
            let total = pairs.iter().map(|&(i, j)| weight(i, j)).sum();
            for &(i, j) in &pairs {
                if !keep(self.quad(i, j), &mut structures)? {
                    complete = false;
                    break;
                }
            }
            return Ok(self.finish(structures, complete, None, None, Some(total)));
        }
        let pairs = self.compatible_pairs(opts);
        let total: u128 = pairs.iter().map(|&(i, j)| weight(i, j)).sum();
        let acts = self.aut_actions(caps)?;
        let reps = orbit_representatives(&pairs, &acts, true)?;
        let orbit_count = reps.len();
        let b_orbit_count = orbit_representatives(&pairs, &acts, false)?.len();
        for (i, j) in reps {
            if !keep(self.quad(i, j), &mut structures)? {
                complete = false;
                break;
            }
        }
        Ok(self.finish(structures, complete, Some(orbit_count), Some(b_orbit_count), Some(total)))
    }

    fn finish(
        &self,
        structures: Vec<[G::Elem; 4]>,
        complete: bool,
        orbit_count: Option<usize>,
        b_orbit_count: Option<usize>,
        total: Option<u128>,
    ) -> UnmixedEnumeration<G::Elem> {
        UnmixedEnumeration {
            structures,
            complete,
            orbit_count,
            b_orbit_count,
            total,
            pair_classes: self.it.pair_count(),
            it_orbits: self.it.orbits.len(),
        }
    }

    /// The canonical representative of the `A_U`-orbit of a structure.
    pub fn canonical_structure(&self, v: &[G::Elem; 4], caps: &Caps) -> Result<[G::Elem; 4]> {
        let idx = |x: &G::Elem| {
            self.index.get(x).copied().ok_or_else(|| Error::Malformed(format!("{x:?} is not in the group")))
        };
        let o = |a: &G::Elem, c: &G::Elem| -> Result<u32> {
            self.it
                .orbit_of_pair(&self.space, idx(a)?, idx(c)?)
                .ok_or_else(|| Error::InvalidParameter("pair is not a hyperbolic generating pair".into()))
        };
        let (i, j) = (o(&v[0], &v[1])?, o(&v[2], &v[3])?);
        if !self.compatible(i as usize, j as usize) {
            return Err(Error::InvalidParameter("not an unmixed structure".into()));
        }
        let acts = self.aut_actions(caps)?;
        // explore the (small) orbit of (i, j) directly
        let mut seen = vec![(i, j)];
        let mut k = 0;
        while k < seen.len() {
            let (x, y) = seen[k];
            let mut next = vec![(y, x)];
            next.extend(acts.iter().map(|a| (a[x as usize], a[y as usize])));
            for q in next {
                if !seen.contains(&q) {
                    seen.push(q);
                }
            }
            k += 1;
        }
        let (x, y) = *seen.iter().min().unwrap();
        Ok(self.quad(x, y))
    }
}

/// Minimal member of each orbit among `pairs` (a union of orbits) under the automorphism
/// actions `acts` and, with `swap`, the exchange of the two pairs.
fn orbit_representatives(pairs: &[(u32, u32)], acts: &[Vec<u32>], swap: bool) -> Result<Vec<(u32, u32)>> {
    let index: HashMap<(u32, u32), u32> = pairs.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
    let mut dsu = Dsu::new(pairs.len());
    let look = |p: (u32, u32)| {
        index.get(&p).copied().ok_or_else(|| Error::Inconsistent(format!("orbit pair {p:?} missing from its orbit")))
    };
    for (x, &(i, j)) in pairs.iter().enumerate() {
        if swap {
            dsu.union(x as u32, look((j, i))?);
        }
        for act in acts {
            dsu.union(x as u32, look((act[i as usize], act[j as usize]))?);
        }
    }
    let mut reps: Vec<(u32, u32)> = (0..pairs.len() as u32).filter(|&x| dsu.find(x) == x).map(|x| pairs[x as usize]).collect();
    reps.sort_unstable();
    Ok(reps)
}

/// Exhaustive unmixed enumeration on a group small enough to tabulate.
pub fn enumerate_unmixed<G: AutGroup>(g: &G, opts: &UnmixedOptions, caps: &Caps) -> Result<UnmixedEnumeration<G::Elem>> {
    UnmixedSpace::new(g, caps)?.enumerate(opts, caps)
}

/// Randomized unmixed search for groups too large to tabulate: sample pairs, keep hyperbolic
/// generating ones, and test pool pairs against each other with the structure check.
pub fn random_unmixed<G: FiniteGroup>(
    g: &G,
    opts: &UnmixedOptions,
    seed: u64,
    budget: usize,
    caps: &Caps,
) -> Result<Vec<[G::Elem; 4]>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limit = opts.limit.unwrap_or(1);
    let mut pool: Vec<(G::Elem, G::Elem, [u64; 3])> = Vec::new();
    let mut found = Vec::new();
    for _ in 0..budget {
        let (a, c) = (g.random_elem(&mut rng), g.random_elem(&mut rng));
        let ty = TypeTriple::of(g, &a, &c);
        if !ty.hyperbolic() || !opts.type_possible(&ty.sorted()) {
            continue;
        }
        match generates(g, &a, &c, caps) {
            Ok(r) if r.generates => {}
            Ok(_) | Err(Error::Undecided(_)) => continue,
            Err(e) => return Err(e),
        }
        for (a1, c1, t1) in &pool {
            if !opts.types_ok(t1, &ty.sorted()) {
                continue;
            }
            let r = check_unmixed(g, a1, c1, &a, &c, caps)?;
            if r.verdict == Verdict::Pass {
                found.push([a1.clone(), c1.clone(), a.clone(), c.clone()]);
                if found.len() >= limit {
                    return Ok(found);
                }
            }
        }
        pool.push((a, c, ty.sorted()));
    }
    Ok(found)
}

// ---------------------------------------------------------------------------
// Mixed enumeration

/// Exhaustive mixed search: every index-2 subgroup `G⁰`, every generating pair of `G⁰` up to
/// conjugation, tested against both mixed conditions through class bitsets. Returns `(a, c, g)`.
pub fn enumerate_mixed<G: FiniteGroup>(g: &G, limit: Option<usize>, caps: &Caps) -> Result<(Vec<[G::Elem; 3]>, usize)> {
    let (t, elems) = TableGroup::from_group(g, caps.table)?;
    let n = t.size();
    let gens = t.gens().to_vec();
    let limit = limit.unwrap_or(usize::MAX);
    let mut found = Vec::new();
    let mut subgroups = 0;
    for mask in 1u64..(1 << gens.len().min(20)) {
        let Some(parity) = hom_to_z2(&t, &gens, mask) else { continue };
        subgroups += 1;
        let members: Vec<u32> = (0..n as u32).filter(|&x| !parity[x as usize]).collect();
        let sub_gens = greedy_generators(&t, &members);
        let (t0, map) = t.subgroup(&members, &sub_gens)?;
        if t0.is_abelian() {
            continue;
        }
        let gg = (0..n as u32).find(|&x| parity[x as usize]).unwrap();
        let mut local = vec![u32::MAX; n];
        for (i, &x) in map.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        let space = PairSpace::new(t0);
        let words = space.class_count().div_ceil(64);
        // classes of G⁰ containing a square of an element of the other coset
        let mut squares = vec![0u64; words];
        for x in (0..n as u32).filter(|&x| parity[x as usize]) {
            bit_set(&mut squares, space.t.class_of(local[t.m(x, x) as usize]));
        }
        // conjugation by g permutes the classes of G⁰
        let pi: Vec<u32> = space
            .reps
            .iter()
            .map(|&r| space.t.class_of(local[t.conj(map[r as usize], gg) as usize]))
            .collect();
        for (a, c) in space.generating_pairs(|_| true) {
            let s = space.sigma_classes(a, c);
            if bits_and_count(&s, &squares) != 0 {
                continue;
            }
            let mut moved = vec![0u64; words];
            for k in bits_members(&s) {
                bit_set(&mut moved, pi[k as usize]);
            }
            if bits_and_count(&s, &moved) != 1 {
                continue;
            }
            found.push([elems[map[a as usize] as usize].clone(), elems[map[c as usize] as usize].clone(), elems[gg as usize].clone()]);
            if found.len() >= limit {
                return Ok((found, subgroups));
            }
        }
    }
    Ok((found, subgroups))
}

/// The homomorphism to Z/2 sending generator `i` to bit `i` of `mask`, if it exists.
fn hom_to_z2(t: &TableGroup, gens: &[u32], mask: u64) -> Option<Vec<bool>> {
    let n = t.size();
    let mut val: Vec<Option<bool>> = vec![None; n];
    val[0] = Some(false);
    let mut stack = vec![0u32];
    while let Some(x) = stack.pop() {
        let vx = val[x as usize].unwrap();
        for (i, &s) in gens.iter().enumerate() {
            let y = t.m(x, s);
            let vy = vx ^ (mask >> i & 1 == 1);
            match val[y as usize] {
                None => {
                    val[y as usize] = Some(vy);
                    stack.push(y);
                }
                Some(v) if v != vy => return None,
                Some(_) => {}
            }
        }
    }
    Some(val.into_iter().map(|v| v.unwrap()).collect())
}

// ---------------------------------------------------------------------------
// The abelian count

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianCount {
    pub n: u32,
    /// Solutions `(x, y, z, t)` with the first pair fixed to the standard basis.
    pub count: u64,
    /// `A_U`-orbits of unmixed structures on `(Z/n)²`, when small enough to enumerate.
    pub orbits: Option<usize>,
    /// Orbits without the swap of the two pairs.
    pub b_orbits: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Largest `n` for which [`count_abelian`] also enumerates orbits.
pub const ABELIAN_ORBIT_MAX: u32 = 11;

pub fn count_abelian(n: u32, caps: &Caps) -> Result<AbelianCount> {
    if n < 2 {
        return Err(Error::InvalidParameter("count_abelian needs n ≥ 2".into()));
    }
    if gcd(n as u64, 6) != 1 {
        return Ok(AbelianCount {
            n,
            count: 0,
            orbits: Some(0),
            b_orbits: Some(0),
            lower_bound: None,
            note: Some("(Z/n)² admits an unmixed structure only when n is prime to 6".into()),
        });
    }
    let m = n as i64;
    let unit = |v: i64| gcd(v.rem_euclid(m) as u64, n as u64) == 1;
    let count: u64 = (0..m)
        .into_par_iter()
        .map(|x| {
            let mut k = 0u64;
            for y in 0..m {
                for z in 0..m {
                    for t in 0..m {
                        if [x, y, z, t, x - y, x + z, z - t, y + t, x + z - y - t, x * t - y * z].into_iter().all(unit) {
                            k += 1;
                        }
                    }
                }
            }
            k
        })
        .sum();
    let (orbits, b_orbits) = if n <= ABELIAN_ORBIT_MAX {
        let g = Ab2::new(n)?;
        let opts = UnmixedOptions { up_to_orbit: true, ..Default::default() };
        let e = enumerate_unmixed(&g, &opts, caps)?;
        (e.orbit_count, e.b_orbit_count)
    } else {
        (None, None)
    };
    let lower_bound = if is_prime(n as u64) { lower_bound_abelian(n as u64).ok() } else { None };
    Ok(AbelianCount { n, count, orbits, b_orbits, lower_bound, note: None })
}

/// Closed form `(p−1)(p−2)(p−3)(p−4)` of the count for prime `p ≥ 5` (checked against the loop).
pub fn exact_count_abelian_prime(p: u64) -> Result<u64> {
    if p < 5 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("needs a prime p ≥ 5, got {p}")));
    }
    Ok((p - 1) * (p - 2) * (p - 3) * (p - 4))
}

/// `(p−1)(p−2)²(p−4)`, the counting estimate as stated. It omits the condition `t ≠ 0` and
/// exceeds the true count for every prime; see [`exact_count_abelian_prime`].
pub fn lower_bound_abelian(p: u64) -> Result<u64> {
    if p < 5 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("lower bound needs a prime p ≥ 5, got {p}")));
    }
    Ok((p - 1) * (p - 2) * (p - 2) * (p - 4))
}

// ---------------------------------------------------------------------------
// Wallpaper quotients

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallpaperScan {
    pub d: u32,
    pub m: u32,
    pub order: usize,
    /// Minimum of `|Σ(a₁,c₁) ∩ Σ(a₂,c₂)|` over all pairs of generating pairs.
    pub min_intersection: usize,
    pub witness: [String; 4],
    pub it_orbits: usize,
    pub types: Vec<[u64; 3]>,
}

pub fn wallpaper_scan(d: u32, m: u32, caps: &Caps) -> Result<WallpaperScan> {
    let g = wallpaper_quotient(d, m)?;
    let us = UnmixedSpace::with_filter(&g, caps, |_| true)?;
    let orbits = &us.it.orbits;
    if orbits.is_empty() {
        return Err(Error::NotFound(format!("wallpaper:{d}:{m} has no generating pair")));
    }
    let size = |b: &Bits| -> usize { bits_members(b).map(|k| us.space.class_size(k)).sum() };
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..orbits.len() {
        for j in i..orbits.len() {
            let inter: Bits = orbits[i].sigma.iter().zip(&orbits[j].sigma).map(|(x, y)| x & y).collect();
            let s = size(&inter);
            if best.is_none_or(|b| s < b.0) {
                best = Some((s, i, j));
            }
        }
    }
    let (min, i, j) = best.unwrap();
    let q = us.quad(i as u32, j as u32);
    let mut types: Vec<[u64; 3]> = orbits.iter().map(|o| o.ty).collect();
    types.sort_unstable();
    types.dedup();
    Ok(WallpaperScan {
        d,
        m,
        order: us.space.size(),
        min_intersection: min,
        witness: q.map(|x| g.format_elem(&x)),
        it_orbits: orbits.len(),
        types,
    })
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub group: String,
    pub mode: String,
    pub found: Vec<Structure>,
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disclaimer: Option<String>,
    pub seed: u64,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub stats: BTreeMap<String, serde_json::Value>,
}

impl SearchReport {
    fn new(group: String, mode: &str, seed: u64) -> SearchReport {
        SearchReport {
            group,
            mode: mode.into(),
            found: vec![],
            complete: true,
            disclaimer: None,
            seed,
            elapsed_ms: 0,
            stats: BTreeMap::new(),
        }
    }

    fn stat(&mut self, k: &str, v: impl Serialize) {
        self.stats.insert(k.into(), serde_json::to_value(v).expect("serializable stat"));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report with the timing zeroed, for byte-for-byte comparison of runs.
    pub fn without_timing(mut self) -> SearchReport {
        self.elapsed_ms = 0;
        self
    }
}

fn unmixed_structure<G: FiniteGroup>(g: &G, v: &[G::Elem; 4]) -> Structure {
    Structure::Unmixed {
        group: g.descriptor(),
        a1: g.format_elem(&v[0]),
        c1: g.format_elem(&v[1]),
        a2: g.format_elem(&v[2]),
        c2: g.format_elem(&v[3]),
        extra: BTreeMap::new(),
    }
}

fn mixed_structure<G: FiniteGroup>(g: &G, v: &[G::Elem; 3]) -> Structure {
    Structure::Mixed {
        group: g.descriptor(),
        g0: Default::default(),
        a: g.format_elem(&v[0]),
        c: g.format_elem(&v[1]),
        g: g.format_elem(&v[2]),
        perfect: false,
        extra: BTreeMap::new(),
    }
}

/// What a [`search`] call looks for.
#[derive(Clone, Debug)]
pub enum SearchMode {
    Unmixed(UnmixedOptions),
    Mixed { limit: Option<usize> },
}

/// Search one group. Groups within the table cap are searched exhaustively; larger ones fall
/// back to seeded random sampling (unmixed only), which never reports completeness.
pub fn search(desc: &GroupDescriptor, mode: &SearchMode, seed: u64, budget: usize, caps: &Caps) -> Result<SearchReport> {
    let start = Instant::now();
    struct V<'a>(&'a SearchMode, u64, usize, Caps);
    impl GroupVisitor for V<'_> {
        type Output = Result<SearchReport>;
        fn visit<G: AutGroup>(self, g: &G) -> Self::Output {
            let (mode, seed, budget, caps) = (self.0, self.1, self.2, self.3);
            let fits = g.order_u64().is_some_and(|n| n as usize <= caps.table);
            match mode {
                SearchMode::Unmixed(opts) => {
                    let name = if opts.reality.is_some() { "reality" } else { "unmixed" };
                    let mut rep = SearchReport::new(g.descriptor().to_string(), name, seed);
                    if let Some(w) = opts.reality {
                        rep.stat("want", w);
                    }
                    if fits {
                        let e = enumerate_unmixed(g, opts, &caps)?;
                        rep.found = e.structures.iter().map(|v| unmixed_structure(g, v)).collect();
                        rep.complete = e.complete;
                        rep.stat("strategy", "exhaustive");
                        rep.stat("pair_classes", e.pair_classes);
                        rep.stat("it_orbits", e.it_orbits);
                        if let Some(o) = e.orbit_count {
                            rep.stat("orbits", o);
                        }
                        if let Some(o) = e.b_orbit_count {
                            rep.stat("b_orbits", o);
                        }
                        if let Some(t) = e.total {
                            rep.stat("total", t.to_string());
                        }
                    } else {
                        if opts.up_to_orbit || opts.reality.is_some() {
                            return Err(Error::Unsupported(format!(
                                "{} exceeds the table cap {}; orbit reduction and reality filters need the exhaustive search",
                                g.descriptor(),
                                caps.table
                            )));
                        }
                        let found = random_unmixed(g, opts, seed, budget, &caps)?;
                        rep.found = found.iter().map(|v| unmixed_structure(g, v)).collect();
                        rep.complete = false;
                        rep.stat("strategy", "random");
                        rep.stat("budget", budget);
                    }
                    Ok(rep)
                }
                SearchMode::Mixed { limit } => {
                    if !fits {
                        return Err(Error::Unsupported(format!("{} exceeds the table cap {}", g.descriptor(), caps.table)));
                    }
                    let mut rep = SearchReport::new(g.descriptor().to_string(), "mixed", seed);
                    let (found, subs) = enumerate_mixed(g, *limit, &caps)?;
                    rep.complete = limit.is_none_or(|l| found.len() < l);
                    rep.found = found.iter().map(|v| mixed_structure(g, v)).collect();
                    rep.stat("strategy", "exhaustive");
                    rep.stat("index2_subgroups", subs);
                    Ok(rep)
                }
            }
        }
    }
    let mut rep = with_group(desc, caps, V(mode, seed, budget, *caps))??;
    rep.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(rep)
}

/// Structures on `desc` with the requested reality behaviour, by filtered exhaustive search.
pub fn hunt_reality(desc: &GroupDescriptor, want: RealityWant, types: Vec<[u64; 3]>, limit: usize, caps: &Caps) -> Result<SearchReport> {
    let opts = UnmixedOptions { up_to_orbit: true, limit: Some(limit), types, reality: Some(want) };
    search(desc, &SearchMode::Unmixed(opts), 0, 0, caps)
}

/// Run the exhaustive search over every catalogue group of order at most `max_order`.
pub fn scan_catalogue(max_order: usize, mixed: bool, caps: &Caps) -> Result<SearchReport> {
    let start = Instant::now();
    let mode = if mixed { "mixed" } else { "unmixed" };
    let mut rep = SearchReport::new(format!("catalogue ≤ {max_order}"), mode, 0);
    rep.disclaimer = Some(CATALOGUE_DISCLAIMER.into());
    let entries = catalogue_entries(max_order);
    let results: Vec<Result<(String, Vec<Structure>)>> = entries
        .par_iter()
        .map(|e| {
            let g = build_catalogue_group(&e.id, caps.table.max(e.order))?;
            let found = if mixed {
                if e.order % 2 == 1 {
                    vec![]
                } else {
                    enumerate_mixed(&g, Some(1), caps)?.0.iter().map(|v| mixed_structure(&g, v)).collect()
                }
            } else {
                let opts = UnmixedOptions { limit: Some(1), ..Default::default() };
                enumerate_unmixed(&g, &opts, caps)?.structures.iter().map(|v| unmixed_structure(&g, v)).collect()
            };
            Ok((e.id.clone(), found))
        })
        .collect();
    let mut scanned = Vec::new();
    for r in results {
        let (id, found) = r?;
        scanned.push(id);
        rep.found.extend(found);
    }
    rep.stat("groups", scanned.len());
    rep.stat("scanned", scanned);
    rep.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beauville::check_mixed;
    use crate::constructions::Metacyclic;
    use crate::group::generated_subgroup;
    use crate::matrix::Psl2;
    use crate::perm::Alt;

    fn caps() -> Caps {
        Caps::default()
    }

    /// Brute-force orbit count on (Z/5)²: all structures, walked under σ₁, σ₃ on each pair,
    /// three generators of GL(2,5) diagonally, and optionally the swap.
    fn brute_orbits(swap: bool) -> usize {
        use crate::reality::apply_sigma;
        use std::collections::HashSet;
        let g = Ab2::new(5).unwrap();
        let all: Vec<(u32, u32)> = (0..5).flat_map(|x| (0..5).map(move |y| (x, y))).collect();
        let det = |u: (u32, u32), v: (u32, u32)| (u.0 * v.1 + 25 - u.1 * v.0 % 5) % 5;
        let third = |a: (u32, u32), c: (u32, u32)| ((10 - a.0 - c.0) % 5, (10 - a.1 - c.1) % 5);
        let pairs: Vec<_> = all.iter().flat_map(|&a| all.iter().map(move |&c| (a, c))).filter(|&(a, c)| det(a, c) != 0).collect();
        let ok = |p: &((u32, u32), (u32, u32)), q: &((u32, u32), (u32, u32))| {
            let (t1, t2) = ([p.0, p.1, third(p.0, p.1)], [q.0, q.1, third(q.0, q.1)]);
            t1.iter().all(|&u| t2.iter().all(|&v| det(u, v) != 0))
        };
        let mats = [[1, 1, 0, 1], [2, 0, 0, 1], [0, 1, 1, 0]];
        let app = |m: [u32; 4], u: (u32, u32)| ((m[0] * u.0 + m[1] * u.1) % 5, (m[2] * u.0 + m[3] * u.1) % 5);
        let mut seen = HashSet::new();
        let mut orbits = 0;
        for p in &pairs {
            for q in &pairs {
                if !ok(p, q) || !seen.insert((*p, *q)) {
                    continue;
                }
                orbits += 1;
                let mut stack = vec![(*p, *q)];
                while let Some((p, q)) = stack.pop() {
                    let mut next = vec![];
                    for i in [1, 3] {
                        next.push((apply_sigma(&g, i, &p).unwrap(), q));
                        next.push((p, apply_sigma(&g, i, &q).unwrap()));
                    }
                    if swap {
                        next.push((q, p));
                    }
                    for m in mats {
                        next.push(((app(m, p.0), app(m, p.1)), (app(m, q.0), app(m, q.1))));
                    }
                    for x in next {
                        if seen.insert(x) {
                            stack.push(x);
                        }
                    }
                }
            }
        }
        orbits
    }

    #[test]
    fn abelian_five_orbits() {
        let (a_u, b_u) = (brute_orbits(true), brute_orbits(false));
        assert_eq!((a_u, b_u), (1, 2));
        let g = Ab2::new(5).unwrap();
        let opts = UnmixedOptions { up_to_orbit: true, ..Default::default() };
        let e = enumerate_unmixed(&g, &opts, &caps()).unwrap();
        assert_eq!(e.orbit_count, Some(a_u));
        assert_eq!(e.b_orbit_count, Some(b_u));
        assert_eq!(e.structures.len(), 1);
        for v in &e.structures {
            assert_eq!(check_unmixed(&g, &v[0], &v[1], &v[2], &v[3], &caps()).unwrap().verdict, Verdict::Pass);
        }
    }

    #[test]
    fn abelian_count_matches_structure_check() {
        // oracle: fix (a₁, c₁) = (e₁, e₂) and test every second pair with the structure check
        let g = Ab2::new(5).unwrap();
        let mut brute = 0u64;
        let all: Vec<(u32, u32)> = (0..5).flat_map(|x| (0..5).map(move |y| (x, y))).collect();
        for a in &all {
            for c in &all {
                if check_unmixed(&g, &(1, 0), &(0, 1), a, c, &caps()).unwrap().verdict == Verdict::Pass {
                    brute += 1;
                }
            }
        }
        let r = count_abelian(5, &caps()).unwrap();
        assert_eq!(r.count, brute);
        assert_eq!(r.count, 24);
        // |U(G)| = |Aut(G)| · count, since Aut acts simply transitively on first pairs
        let e = enumerate_unmixed(&g, &UnmixedOptions::default(), &caps()).unwrap();
        assert_eq!(e.total, Some(480 * r.count as u128));
        assert_eq!(count_abelian(3, &caps()).unwrap().count, 0);
        assert_eq!(lower_bound_abelian(5).unwrap(), 36);
        assert_eq!(lower_bound_abelian(7).unwrap(), 450);
        assert!(lower_bound_abelian(9).is_err());
        for p in [5u32, 7, 11, 13] {
            let c = count_abelian(p, &Caps::default()).unwrap().count;
            assert_eq!(c, exact_count_abelian_prime(p as u64).unwrap());
            assert!(c < lower_bound_abelian(p as u64).unwrap());
        }
    }

    #[test]
    fn orbit_reduction_is_idempotent() {
        let g = Ab2::new(5).unwrap();
        let us = UnmixedSpace::new(&g, &caps()).unwrap();
        let all = us.enumerate(&UnmixedOptions::default(), &caps()).unwrap().structures;
        let mut reps: Vec<_> = all.iter().map(|v| us.canonical_structure(v, &caps()).unwrap()).collect();
        reps.sort();
        reps.dedup();
        assert_eq!(reps.len(), 1);
        let again: Vec<_> = reps.iter().map(|v| us.canonical_structure(v, &caps()).unwrap()).collect();
        assert_eq!(again, reps);
        let by_enum = us.enumerate(&UnmixedOptions { up_to_orbit: true, ..Default::default() }, &caps()).unwrap();
        assert_eq!(by_enum.structures, reps);
    }

    #[test]
    fn small_nonabelian_groups_have_none() {
        let a5 = Alt::new(5).unwrap();
        let e = enumerate_unmixed(&a5, &UnmixedOptions::default(), &caps()).unwrap();
        assert!(e.structures.is_empty());
        assert_eq!(e.total, Some(0));
        for n in [3, 4, 5, 6, 8] {
            let d = Metacyclic::dihedral(n).unwrap();
            assert!(enumerate_unmixed(&d, &UnmixedOptions::default(), &caps()).unwrap().structures.is_empty());
        }
    }

    #[test]
    fn psl27_has_a_structure() {
        let g = Psl2::new(7).unwrap();
        let e = enumerate_unmixed(&g, &UnmixedOptions { limit: Some(1), ..Default::default() }, &caps()).unwrap();
        let v = &e.structures[0];
        assert_eq!(check_unmixed(&g, &v[0], &v[1], &v[2], &v[3], &caps()).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn pair_classes_match_closure_oracle() {
        // oracle: count hyperbolic generating pairs of A5 directly; each conjugation class has
        // |A5| members since the centre is trivial
        let a5 = Alt::new(5).unwrap();
        let (t, _) = TableGroup::from_group(&a5, 100).unwrap();
        let mut direct = 0usize;
        for a in 0..60 {
            for c in 0..60 {
                let ty = (t.ord(a) as u64, t.ord(c) as u64, t.ord(t.m(a, c)) as u64);
                if is_hyperbolic(ty.0, ty.1, ty.2) && t.generates_pair(a, c) {
                    direct += 1;
                }
            }
        }
        let us = UnmixedSpace::new(&a5, &caps()).unwrap();
        assert_eq!(us.it.pair_count() * 60, direct);
    }

    #[test]
    fn mixed_search_agrees_with_check() {
        // D4 × C2 style groups have no structure; the search and the brute-force check agree
        let g = build_catalogue_group("D4xC2", 1000).unwrap();
        assert!(enumerate_mixed(&g, None, &caps()).unwrap().0.is_empty());
        let s4 = crate::perm::Sym::new(4).unwrap();
        let (found, subs) = enumerate_mixed(&s4, None, &caps()).unwrap();
        assert_eq!(subs, 1);
        for v in &found {
            assert_eq!(check_mixed(&s4, &v[0], &v[1], &v[2], &caps()).unwrap().verdict, Verdict::Pass);
        }
        assert!(found.is_empty());
    }

    #[test]
    fn index_two_subgroups() {
        let g = build_catalogue_group("D4", 100).unwrap();
        let gens = g.gens().to_vec();
        let kernels: Vec<Vec<bool>> = (1u64..1 << gens.len()).filter_map(|m| hom_to_z2(&g, &gens, m)).collect();
        // D4 has three subgroups of index 2
        assert_eq!(kernels.len(), 3);
        for k in kernels {
            let members: Vec<u32> = (0..8).filter(|&x| !k[x as usize]).collect();
            assert_eq!(members.len(), 4);
            assert_eq!(generated_subgroup(&g, &members, 100).unwrap().len(), 4);
        }
    }

    #[test]
    fn wallpaper_small() {
        let w = wallpaper_scan(3, 2, &caps()).unwrap();
        assert_eq!(w.order, 12);
        assert!(w.min_intersection >= 3);
        let w = wallpaper_scan(4, 2, &caps()).unwrap();
        assert!(w.min_intersection >= 2);
    }

    #[test]
    fn reports_are_deterministic() {
        let d: GroupDescriptor = "ab2:5".parse().unwrap();
        let mode = SearchMode::Unmixed(UnmixedOptions { up_to_orbit: true, ..Default::default() });
        let r1 = search(&d, &mode, 7, 0, &caps()).unwrap().without_timing();
        let r2 = search(&d, &mode, 7, 0, &caps()).unwrap().without_timing();
        assert_eq!(r1.to_json(), r2.to_json());
        assert_eq!(r1.stats["orbits"], serde_json::json!(1));
        assert_eq!(r1.stats["b_orbits"], serde_json::json!(2));
        let d: GroupDescriptor = "alt:9".parse().unwrap();
        let small = Caps { table: 100, ..caps() };
        let mode = SearchMode::Unmixed(UnmixedOptions { limit: Some(1), ..Default::default() });
        let r1 = search(&d, &mode, 3, 200, &small).unwrap().without_timing();
        let r2 = search(&d, &mode, 3, 200, &small).unwrap().without_timing();
        assert_eq!(r1.to_json(), r2.to_json());
        assert!(!r1.complete);
    }

    #[test]
    fn abelian_never_not_biholo() {
        let d: GroupDescriptor = "ab2:5".parse().unwrap();
        let r = hunt_reality(&d, RealityWant::NotBiholo, vec![], 10, &caps()).unwrap();
        assert!(r.found.is_empty());
        let r = hunt_reality(&d, RealityWant::Real, vec![], 10, &caps()).unwrap();
        assert_eq!(r.found.len(), 1);
    }

    #[test]
    fn heisenberg_125_admits_unmixed_structure() {
        // nonabelian of order 125 with an unmixed structure, so outside the "none ≤ 128" family
        let g = crate::constructions::build_catalogue_group("Z5^2:C5.heis", 1000).unwrap();
        assert!(!g.is_abelian());
        let opts = UnmixedOptions { limit: Some(1), ..Default::default() };
        let e = enumerate_unmixed(&g, &opts, &caps()).unwrap();
        let v = &e.structures[0];
        assert_eq!(check_unmixed(&g, &v[0], &v[1], &v[2], &v[3], &caps()).unwrap().verdict, crate::beauville::Verdict::Pass);
        assert!(catalogue_entries(128).iter().all(|e| e.order != 125));
    }
}
