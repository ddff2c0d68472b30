//! Σ-sets, types, genus, and the unmixed and mixed structure checks.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::constructions::H4;
use crate::error::{Error, Result};
use crate::group::{check_elem, class_under, generates, powers, subgroup_order, FiniteGroup, TypeClasses};
use crate::perm::alt_class_splits;

// ---------------------------------------------------------------------------
// Types and metrics

/// `(ord a, ord c, ord ac)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeTriple(pub u64, pub u64, pub u64);

impl TypeTriple {
    pub fn of<G: FiniteGroup>(g: &G, a: &G::Elem, c: &G::Elem) -> TypeTriple {
        TypeTriple(g.elem_order(a), g.elem_order(c), g.elem_order(&g.mul(a, c)))
    }
    pub fn mu(&self) -> BigRational {
        let r = |x: u64| BigRational::new(BigInt::one(), BigInt::from(x));
        r(self.0) + r(self.1) + r(self.2)
    }
    pub fn nu(&self) -> u128 {
        self.0 as u128 * self.1 as u128 * self.2 as u128
    }
    pub fn hyperbolic(&self) -> bool {
        self.mu() < BigRational::one()
    }
    /// Orders sorted ascending: `(ord a, ord b, ord c)` of the normalized pair.
    pub fn sorted(&self) -> [u64; 3] {
        let mut v = [self.0, self.1, self.2];
        v.sort_unstable();
        v
    }
    pub fn order_set(&self) -> BTreeSet<u64> {
        [self.0, self.1, self.2].into_iter().collect()
    }
    pub fn class(&self) -> PairClass {
        let [x, y, z] = self.sorted();
        if x == z {
            PairClass::Critical
        } else if x != y && y != z {
            PairClass::Strict
        } else {
            PairClass::Subcritical
        }
    }
}

impl std::fmt::Display for TypeTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.0, self.1, self.2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairClass {
    Strict,
    Critical,
    Subcritical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairMetrics {
    #[serde(rename = "type")]
    pub type_: TypeTriple,
    pub mu: String,
    pub nu: u128,
    /// `ord a ≤ ord b ≤ ord c` with `b = a⁻¹c⁻¹`.
    pub normalized: bool,
    pub class: PairClass,
    pub hyperbolic: bool,
}

pub fn pair_metrics<G: FiniteGroup>(g: &G, a: &G::Elem, c: &G::Elem) -> Result<PairMetrics> {
    check_elem(g, a)?;
    check_elem(g, c)?;
    let t = TypeTriple::of(g, a, c);
    Ok(PairMetrics {
        type_: t,
        mu: t.mu().to_string(),
        nu: t.nu(),
        normalized: t.0 <= t.2 && t.2 <= t.1,
        class: t.class(),
        hyperbolic: t.hyperbolic(),
    })
}

/// `1 + (1 − μ)|G|/2`.
pub fn genus_of_type(t: TypeTriple, order: &BigUint) -> Result<BigInt> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let v = BigRational::one() + (BigRational::one() - t.mu()) * BigRational::from_integer(BigInt::from(order.clone())) * half;
    if !v.is_integer() {
        return Err(Error::Inconsistent(format!("genus formula gives {v} for type {t} and order {order}")));
    }
    Ok(v.to_integer())
}

pub fn genus<G: FiniteGroup>(g: &G, a: &G::Elem, c: &G::Elem) -> Result<BigInt> {
    check_elem(g, a)?;
    check_elem(g, c)?;
    genus_of_type(TypeTriple::of(g, a, c), &g.order())
}

// ---------------------------------------------------------------------------
// Σ-sets

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SigmaStrategy {
    Exact,
    CycleType,
    OrderDivisor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaSet<E: std::hash::Hash + Eq> {
    Exact(HashSet<E>),
    /// Cycle types of the nontrivial powers. `exact` when equal type means conjugate.
    CycleTypes { types: BTreeSet<Vec<usize>>, exact: bool },
    /// Orders of the elements of the three cyclic subgroups.
    OrderDivisors(BTreeSet<u64>),
}

/// The three elements whose cyclic subgroups make up Σ: `a`, `c`, `ac`.
fn triple<G: FiniteGroup>(g: &G, a: &G::Elem, c: &G::Elem) -> [G::Elem; 3] {
    [a.clone(), c.clone(), g.mul(a, c)]
}

/// Union of the classes (under conjugation by `conjugators`) of all powers of `a`, `c`, `ac`.
pub fn sigma_exact_under<G: FiniteGroup>(
    g: &G,
    conjugators: &[G::Elem],
    a: &G::Elem,
    c: &G::Elem,
    cap: usize,
) -> Result<HashSet<G::Elem>> {
    let mut out = HashSet::new();
    out.insert(g.identity());
    for x in triple(g, a, c) {
        for y in powers(g, &x) {
            if out.contains(&y) {
                continue;
            }
            out.extend(class_under(g, conjugators, &y, cap)?);
            if out.len() > cap {
                return Err(Error::Overflow { what: "Σ-set", cap });
            }
        }
    }
    Ok(out)
}

pub fn sigma_set<G: FiniteGroup>(
    g: &G,
    a: &G::Elem,
    c: &G::Elem,
    strategy: SigmaStrategy,
    caps: &Caps,
) -> Result<SigmaSet<G::Elem>> {
    check_elem(g, a)?;
    check_elem(g, c)?;
    match strategy {
        SigmaStrategy::Exact => Ok(SigmaSet::Exact(sigma_exact_under(g, &g.generators(), a, c, caps.class)?)),
        SigmaStrategy::CycleType => {
            let exact = match g.type_classes() {
                TypeClasses::Unavailable => {
                    return Err(Error::Unsupported(format!("{} has no cycle types", g.descriptor())))
                }
                TypeClasses::Symmetric => true,
                TypeClasses::Alternating => false,
            };
            let mut types = BTreeSet::new();
            for x in triple(g, a, c) {
                for y in powers(g, &x).into_iter().skip(1) {
                    types.insert(g.cycle_type(&y).expect("permutation backend"));
                }
            }
            Ok(SigmaSet::CycleTypes { types, exact })
        }
        SigmaStrategy::OrderDivisor => {
            let mut v = BTreeSet::new();
            for x in triple(g, a, c) {
                let o = g.elem_order(&x);
                v.extend((1..=o).filter(|d| o % d == 0));
            }
            Ok(SigmaSet::OrderDivisors(v))
        }
    }
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub id: String,
    pub ok: Option<bool>,
    pub strategy: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Condition {
    pub fn new(id: &str, ok: Option<bool>, strategy: &str, detail: Option<String>) -> Condition {
        Condition { id: id.into(), ok, strategy: strategy.into(), detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub conditions: Vec<Condition>,
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn from_conditions(conditions: Vec<Condition>, witness: Option<String>, notes: Vec<String>) -> CheckReport {
        let verdict = if conditions.iter().any(|c| c.ok == Some(false)) {
            Verdict::Fail
        } else if conditions.iter().any(|c| c.ok.is_none()) {
            Verdict::Undecided
        } else {
            Verdict::Pass
        };
        CheckReport { verdict, conditions, witness, notes }
    }
    pub fn condition(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }
    /// Exit status: 0 pass, 1 fail, 2 undecided.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Undecided => 2,
        }
    }
}

// ---------------------------------------------------------------------------
// Unmixed

/// Outcome of one rung of the Σ-intersection ladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    /// `Some(true)` when `Σ₁ ∩ Σ₂ = {1}`.
    pub trivial: Option<bool>,
    pub strategy: &'static str,
    pub detail: String,
    pub witness: Option<String>,
}

const NAMES: [&str; 3] = ["a", "c", "ac"];

/// Coprime ν's force a trivial intersection; otherwise nothing is concluded.
pub fn intersection_by_coprimality(t1: TypeTriple, t2: TypeTriple) -> Intersection {
    let d = gcd_u128(t1.nu(), t2.nu());
    Intersection {
        trivial: if d == 1 { Some(true) } else { None },
        strategy: "coprime-nu",
        detail: format!("gcd(ν₁, ν₂) = gcd({}, {}) = {d}", t1.nu(), t2.nu()),
        witness: None,
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Compare cycle types of the nontrivial powers. In `Sₙ` this is exact; in `Aₙ` a shared type is
/// a definite failure only when its class does not split.
pub fn intersection_by_cycle_type<G: FiniteGroup>(
    g: &G,
    p1: (&G::Elem, &G::Elem),
    p2: (&G::Elem, &G::Elem),
) -> Option<Intersection> {
    let mode = g.type_classes();
    if mode == TypeClasses::Unavailable {
        return None;
    }
    let collect = |a: &G::Elem, c: &G::Elem, tag: &str| {
        let mut out = Vec::new();
        for (name, x) in NAMES.iter().zip(triple(g, a, c)) {
            for (k, y) in powers(g, &x).into_iter().enumerate().skip(1) {
                out.push((g.cycle_type(&y).unwrap(), format!("{name}{tag}^{k}"), y));
            }
        }
        out
    };
    let s1 = collect(p1.0, p1.1, "₁");
    let s2 = collect(p2.0, p2.1, "₂");
    let types2: HashSet<&Vec<usize>> = s2.iter().map(|t| &t.0).collect();
    let mut undecided = false;
    for (ty, name, y) in &s1 {
        if !types2.contains(ty) {
            continue;
        }
        if mode == TypeClasses::Alternating && alt_class_splits(ty) {
            undecided = true;
            continue;
        }
        let other = s2.iter().find(|t| &t.0 == ty).unwrap();
        return Some(Intersection {
            trivial: Some(false),
            strategy: "cycle-type",
            detail: format!("{name} and {} share cycle type {ty:?}", other.1),
            witness: Some(g.format_elem(y)),
        });
    }
    if undecided {
        return Some(Intersection {
            trivial: None,
            strategy: "cycle-type",
            detail: "shared cycle types only among classes that split in the alternating group".into(),
            witness: None,
        });
    }
    Some(Intersection {
        trivial: Some(true),
        strategy: "cycle-type",
        detail: "no cycle type shared by nontrivial powers".into(),
        witness: None,
    })
}

/// Materialize `Σ₁` and test the nontrivial powers of the second triple against it.
pub fn intersection_exact<G: FiniteGroup>(
    g: &G,
    conjugators: &[G::Elem],
    p1: (&G::Elem, &G::Elem),
    p2: (&G::Elem, &G::Elem),
    caps: &Caps,
) -> Result<Intersection> {
    let s1 = sigma_exact_under(g, conjugators, p1.0, p1.1, caps.class)?;
    for (name, x) in NAMES.iter().zip(triple(g, p2.0, p2.1)) {
        for (k, y) in powers(g, &x).into_iter().enumerate().skip(1) {
            if s1.contains(&y) {
                return Ok(Intersection {
                    trivial: Some(false),
                    strategy: "exact",
                    detail: format!("{name}₂^{k} lies in Σ(a₁,c₁) (|Σ₁| = {})", s1.len()),
                    witness: Some(g.format_elem(&y)),
                });
            }
        }
    }
    Ok(Intersection {
        trivial: Some(true),
        strategy: "exact",
        detail: format!("no nontrivial power of the second triple lies in Σ(a₁,c₁) (|Σ₁| = {})", s1.len()),
        witness: None,
    })
}

/// Σ-intersection via the cheapest conclusive strategy: coprimality, cycle types, exact.
pub fn sigma_intersection<G: FiniteGroup>(
    g: &G,
    p1: (&G::Elem, &G::Elem),
    p2: (&G::Elem, &G::Elem),
    caps: &Caps,
) -> Result<Intersection> {
    let co = intersection_by_coprimality(TypeTriple::of(g, p1.0, p1.1), TypeTriple::of(g, p2.0, p2.1));
    if co.trivial.is_some() {
        return Ok(co);
    }
    let mut tried = vec![co.detail];
    if let Some(ct) = intersection_by_cycle_type(g, p1, p2) {
        if ct.trivial.is_some() {
            return Ok(ct);
        }
        tried.push(ct.detail);
    }
    match intersection_exact(g, &g.generators(), p1, p2, caps) {
        Ok(x) => Ok(x),
        Err(Error::Overflow { what, cap }) => Ok(Intersection {
            trivial: None,
            strategy: "exact",
            detail: format!("{}; exact Σ over cap ({what} > {cap})", tried.join("; ")),
            witness: None,
        }),
        Err(e) => Err(e),
    }
}

fn generation_condition<G: FiniteGroup>(g: &G, id: &str, a: &G::Elem, c: &G::Elem, caps: &Caps) -> Result<Condition> {
    Ok(match generates(g, a, c, caps) {
        Ok(r) => Condition::new(
            id,
            Some(r.generates),
            r.strategy,
            Some(format!("|⟨a,c⟩| = {}, |G| = {}", r.subgroup_order, g.order())),
        ),
        Err(Error::Undecided(m)) => Condition::new(id, None, "closure", Some(m)),
        Err(e) => return Err(e),
    })
}

pub fn check_unmixed<G: FiniteGroup>(
    g: &G,
    a1: &G::Elem,
    c1: &G::Elem,
    a2: &G::Elem,
    c2: &G::Elem,
    caps: &Caps,
) -> Result<CheckReport> {
    for x in [a1, c1, a2, c2] {
        check_elem(g, x)?;
    }
    let mut conds = vec![
        generation_condition(g, "generates-1", a1, c1, caps)?,
        generation_condition(g, "generates-2", a2, c2, caps)?,
    ];
    let inter = sigma_intersection(g, (a1, c1), (a2, c2), caps)?;
    conds.push(Condition::new("sigma-intersection", inter.trivial, inter.strategy, Some(inter.detail)));
    let (t1, t2) = (TypeTriple::of(g, a1, c1), TypeTriple::of(g, a2, c2));
    let mut notes = vec![format!("types {t1} and {t2}; μ₁ = {}, μ₂ = {}", t1.mu(), t2.mu())];
    let report_ok = conds.iter().all(|c| c.ok == Some(true));
    if report_ok {
        if !(t1.hyperbolic() && t2.hyperbolic()) {
            return Err(Error::Inconsistent(format!("structure passes but μ ≥ 1 for {t1} or {t2}")));
        }
        notes.push("μ < 1 for both pairs".into());
    }
    let witness = if inter.trivial == Some(false) {
        inter.witness
    } else {
        conds.iter().find(|c| c.ok == Some(false)).and_then(|c| c.detail.clone())
    };
    Ok(CheckReport::from_conditions(conds, witness, notes))
}

// ---------------------------------------------------------------------------
// Mixed

/// How `G⁰` is specified in a mixed quadruple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum G0Spec {
    /// `G⁰ = ⟨a, c⟩`.
    #[default]
    Generated,
    /// `G⁰ = H_[2]` inside `H_[4]`.
    H2,
}

/// The conditions of a mixed quadruple checked by brute force over `G⁰`.
pub fn check_mixed<G: FiniteGroup>(
    g: &G,
    a: &G::Elem,
    c: &G::Elem,
    gg: &G::Elem,
    caps: &Caps,
) -> Result<CheckReport> {
    for x in [a, c, gg] {
        check_elem(g, x)?;
    }
    let full = g.order();
    let g0 = match crate::group::generated_subgroup(g, &[a.clone(), c.clone()], caps.closure) {
        Ok(s) => s,
        Err(Error::Overflow { .. }) => {
            let (n, strategy) = match subgroup_order(g, &[a.clone(), c.clone()], caps) {
                Ok(x) => x,
                Err(Error::Undecided(m)) => {
                    return Ok(CheckReport::from_conditions(
                        vec![Condition::new("index-2", None, "closure", Some(m))],
                        None,
                        vec![],
                    ))
                }
                Err(e) => return Err(e),
            };
            let idx2 = n.clone() * BigUint::from(2u32) == full;
            let conds = vec![
                Condition::new("index-2", Some(idx2), strategy, Some(format!("|⟨a,c⟩| = {n}"))),
                Condition::new("g-outside", None, "closure", Some("G⁰ too large to enumerate".into())),
                Condition::new("no-square-in-sigma", None, "brute-force", Some("G⁰ over closure cap".into())),
                Condition::new("sigma-vs-conjugate", None, "exact", Some("G⁰ over closure cap".into())),
            ];
            return Ok(CheckReport::from_conditions(conds, None, vec![]));
        }
        Err(e) => return Err(e),
    };
    let n0 = BigUint::from(g0.len());
    let mut conds = vec![];
    let idx2 = n0.clone() * BigUint::from(2u32) == full;
    conds.push(Condition::new("index-2", Some(idx2), "closure", Some(format!("|⟨a,c⟩| = {n0}, |G| = {full}"))));
    if g0.contains(gg) {
        return Err(Error::Precondition("g lies in G⁰".into()));
    }
    conds.push(Condition::new("g-outside", Some(true), "closure", None));
    let g0_gens = [a.clone(), c.clone()];
    if crate::group::is_abelian(g, &g0_gens) {
        conds.push(Condition::new(
            "nonabelian-g0",
            Some(false),
            "theorem",
            Some("a mixed structure needs a nonabelian G⁰".into()),
        ));
        return Ok(CheckReport::from_conditions(conds, Some(format!("{} and {} commute", g.format_elem(a), g.format_elem(c))), vec![]));
    }
    if !idx2 {
        return Ok(CheckReport::from_conditions(conds, Some(format!("|⟨a,c⟩| = {n0}")), vec![]));
    }
    let sigma = sigma_exact_under(g, &g0_gens, a, c, caps.class)?;
    // condition 3
    let mut witness = None;
    let mut ok3 = true;
    let mut elems: Vec<&G::Elem> = g0.iter().collect();
    elems.sort();
    for gamma in elems {
        let x = g.mul(gg, gamma);
        let sq = g.mul(&x, &x);
        if sigma.contains(&sq) {
            ok3 = false;
            witness = Some(format!("γ = {}: (gγ)² = {} ∈ Σ(a,c)", g.format_elem(gamma), g.format_elem(&sq)));
            break;
        }
    }
    conds.push(Condition::new("no-square-in-sigma", Some(ok3), "brute-force", Some(format!("{} elements of G⁰", g0.len()))));
    // condition 4
    let (ga, gc) = (crate::group::conj(g, a, gg), crate::group::conj(g, c, gg));
    let inter = intersection_exact(g, &g0_gens, (a, c), (&ga, &gc), caps)?;
    if witness.is_none() && inter.trivial == Some(false) {
        witness = inter.witness.clone();
    }
    conds.push(Condition::new("sigma-vs-conjugate", inter.trivial, "exact", Some(inter.detail)));
    Ok(CheckReport::from_conditions(conds, witness, vec![]))
}

/// The sufficient criterion for `(H_[2]; (a₁,a₂,2), (c₁,c₂,2))` to be a mixed structure on
/// `H_[4]`, checked inside `H`. `perfect` replaces the generation of `a₁², a₁c₁, c₁²` by that
/// of `a₁, c₁`.
pub fn check_mixed_vz3<H: FiniteGroup>(
    h: &H,
    a1: &H::Elem,
    c1: &H::Elem,
    a2: &H::Elem,
    c2: &H::Elem,
    perfect: bool,
    caps: &Caps,
) -> Result<CheckReport> {
    for x in [a1, c1, a2, c2] {
        check_elem(h, x)?;
    }
    let (oa, oc) = (h.elem_order(a1), h.elem_order(c1));
    let mut conds = vec![Condition::new(
        "even-orders",
        Some(oa % 2 == 0 && oc % 2 == 0),
        "orders",
        Some(format!("ord a₁ = {oa}, ord c₁ = {oc}")),
    )];
    let gen_cond = |id: &str, gens: Vec<H::Elem>| -> Result<Condition> {
        Ok(match subgroup_order(h, &gens, caps) {
            Ok((n, s)) => Condition::new(id, Some(n == h.order()), s, Some(format!("subgroup order {n}"))),
            Err(Error::Undecided(m)) => Condition::new(id, None, "closure", Some(m)),
            Err(e) => return Err(e),
        })
    };
    if perfect {
        conds.push(gen_cond("first-generates", vec![a1.clone(), c1.clone()])?);
    } else {
        conds.push(gen_cond("squares-generate", vec![h.mul(a1, a1), h.mul(a1, c1), h.mul(c1, c1)])?);
    }
    conds.push(gen_cond("second-generates", vec![a2.clone(), c2.clone()])?);
    let (t1, t2) = (TypeTriple::of(h, a1, c1), TypeTriple::of(h, a2, c2));
    let d = gcd_u128(t1.nu(), t2.nu());
    conds.push(Condition::new("coprime-nu", Some(d == 1), "arithmetic", Some(format!("types {t1}, {t2}; gcd(ν₁,ν₂) = {d}"))));
    let witness = conds.iter().find(|c| c.ok == Some(false)).and_then(|c| c.detail.clone());
    let mut notes = vec![];
    if perfect {
        notes.push("uses the variant for perfect H: a₁, c₁ generate H".into());
    }
    Ok(CheckReport::from_conditions(conds, witness, notes))
}

/// Mixed check on `H_[4]`: structural certificate first, brute force when affordable.
pub fn check_mixed_h4<H: FiniteGroup + Clone>(
    g: &H4<H>,
    g0: G0Spec,
    a: &<H4<H> as FiniteGroup>::Elem,
    c: &<H4<H> as FiniteGroup>::Elem,
    gg: &<H4<H> as FiniteGroup>::Elem,
    perfect: bool,
    caps: &Caps,
) -> Result<CheckReport> {
    for x in [a, c, gg] {
        check_elem(g, x)?;
    }
    if g.in_h2(gg) {
        return Err(Error::Precondition("g lies in H_[2]".into()));
    }
    if g0 == G0Spec::H2 && !(g.in_h2(a) && g.in_h2(c)) {
        return Err(Error::Precondition("a and c must lie in H_[2]".into()));
    }
    let h = g.inner();
    let mut notes = vec![];
    if a.t == 2 && c.t == 2 {
        let vz = check_mixed_vz3(h, &a.h1, &c.h1, &a.h2, &c.h2, perfect, caps)?;
        if vz.verdict == crate::beauville::Verdict::Pass {
            let mut conds = vec![
                Condition::new("index-2", Some(true), "vz3", Some("a, c generate H_[2]".into())),
                Condition::new("g-outside", Some(true), "coset", None),
                Condition::new("no-square-in-sigma", Some(true), "vz3", None),
                Condition::new("sigma-vs-conjugate", Some(true), "vz3", None),
            ];
            conds.extend(vz.conditions.into_iter().map(|mut c| {
                c.id = format!("vz3-{}", c.id);
                c
            }));
            return Ok(CheckReport::from_conditions(conds, None, vz.notes));
        }
        notes.push(format!("structural certificate not applicable: {}", vz.witness.unwrap_or_default()));
    } else {
        notes.push("a, c are not both of the form (x, y, 2); no structural certificate".into());
    }
    let mut r = check_mixed(g, a, c, gg, caps)?;
    r.notes.extend(notes);
    Ok(r)
}

/// Element orders of `a`, `c`, `a⁻¹c⁻¹`.
pub fn mixed_orders<G: FiniteGroup>(g: &G, a: &G::Elem, c: &G::Elem) -> (u64, u64, u64) {
    let b = g.inv(&g.mul(c, a));
    (g.elem_order(a), g.elem_order(c), g.elem_order(&b))
}

/// `gcd(ν₁, ν₂)`.
pub fn nu_gcd(t1: TypeTriple, t2: TypeTriple) -> u128 {
    gcd_u128(t1.nu(), t2.nu())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::Ab2;
    use crate::matrix::{sl2_constants, Sl2};
    use crate::perm::Sym;

    #[test]
    fn metrics() {
        let g = Ab2::new(5).unwrap();
        let m = pair_metrics(&g, &(1, 0), &(0, 1)).unwrap();
        assert_eq!(m.type_, TypeTriple(5, 5, 5));
        assert_eq!(m.class, PairClass::Critical);
        assert!(m.hyperbolic);
        assert_eq!(genus(&g, &(1, 0), &(0, 1)).unwrap(), BigInt::from(6));
        let s = Sl2::new(7).unwrap();
        let k = sl2_constants(7).unwrap();
        assert_eq!(TypeTriple::of(&s, &k.b, &k.s), TypeTriple(4, 6, 7));
        let gs = genus(&s, &k.b, &k.s).unwrap();
        assert!(gs >= BigInt::from(2));
    }

    #[test]
    fn riemann_hurwitz_oracle() {
        // 2g − 2 = |G|(−2 + Σ (1 − 1/eᵢ)) for ramification indices 5, 5, 5 and |G| = 25
        let lhs = genus_of_type(TypeTriple(5, 5, 5), &BigUint::from(25u32)).unwrap();
        let rh = (25 * (-2 * 5 + 3 * 4)) / 5;
        assert_eq!(lhs * 2 - 2, BigInt::from(rh));
        assert_eq!(genus_of_type(TypeTriple(3, 3, 3), &BigUint::from(27u32)).unwrap(), BigInt::one());
        assert!(genus_of_type(TypeTriple(4, 6, 7), &BigUint::from(5u32)).is_err());
    }

    #[test]
    fn sigma_sizes() {
        let g = Ab2::new(5).unwrap();
        let caps = Caps::default();
        match sigma_set(&g, &(1, 0), &(0, 1), SigmaStrategy::Exact, &caps).unwrap() {
            SigmaSet::Exact(s) => assert_eq!(s.len(), 13),
            _ => unreachable!(),
        }
        match sigma_set(&g, &(0, 0), &(0, 0), SigmaStrategy::Exact, &caps).unwrap() {
            SigmaSet::Exact(s) => assert_eq!(s.len(), 1),
            _ => unreachable!(),
        }
    }

    #[test]
    fn unmixed_verdicts() {
        let g = Ab2::new(5).unwrap();
        let caps = Caps::default();
        let r = check_unmixed(&g, &(1, 0), &(0, 1), &(1, 0), &(0, 1), &caps).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.is_some());
        // second pair does not generate
        let r = check_unmixed(&g, &(1, 0), &(0, 1), &(1, 2), &(2, 4), &caps).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let s8 = Sym::new(8).unwrap();
        let t = s8.parse_elem("(1,2)").unwrap();
        let long = s8.parse_elem("(1,2,3,4,5,6,7,8)").unwrap();
        let r = check_unmixed(&s8, &t, &long, &t, &long, &caps).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.condition("sigma-intersection").unwrap().strategy, "cycle-type");
    }
}
