//! The σ-operations on generating pairs, the involution ι, orbits, and the decisions whether a
//! structure is biholomorphic to its conjugate, real, or strongly real.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::aut::{AutGroup, OuterLabel};
use crate::beauville::TypeTriple;
use crate::caps::Caps;
use crate::constructions::H4;
use crate::error::{Error, Result};
use crate::group::{check_elem, conj, FiniteGroup};

pub type Pair<E> = (E, E);

/// `σ₀ … σ₅` on a pair `(a, c)`.
pub fn apply_sigma<G: FiniteGroup>(g: &G, i: usize, pair: &Pair<G::Elem>) -> Result<Pair<G::Elem>> {
    let (a, c) = pair;
    // a⁻¹c⁻¹ and c⁻¹a⁻¹
    let b = g.inv(&g.mul(c, a));
    let b2 = g.inv(&g.mul(a, c));
    Ok(match i {
        0 => (a.clone(), c.clone()),
        1 => (b, a.clone()),
        2 => (c.clone(), b),
        3 => (c.clone(), a.clone()),
        4 => (b2, c.clone()),
        5 => (a.clone(), b2),
        _ => return Err(Error::InvalidParameter(format!("σ index {i} out of range 0..5"))),
    })
}

pub fn iota_pair<G: FiniteGroup>(g: &G, pair: &Pair<G::Elem>) -> Pair<G::Elem> {
    (g.inv(&pair.0), g.inv(&pair.1))
}

/// ι on an unmixed quadruple.
pub fn iota_unmixed<G: FiniteGroup>(g: &G, v: &[G::Elem; 4]) -> [G::Elem; 4] {
    [g.inv(&v[0]), g.inv(&v[1]), g.inv(&v[2]), g.inv(&v[3])]
}

/// The identities among the σ's at one pair, composed right to left: `σ₁³ = σ₃² = σ₀`,
/// `σ₂ = σ₁²`, `σ₁σ₃ = σ₄`, `σ₁²σ₃ = σ₅` and `σ₄² = Int(c⁻¹)`. Returns the names of the failing
/// identities.
pub fn sigma_relation_violations<G: FiniteGroup>(g: &G, pair: &Pair<G::Elem>) -> Result<Vec<&'static str>> {
    let s = |i: usize, p: &Pair<G::Elem>| apply_sigma(g, i, p);
    let mut bad = vec![];
    let s1 = s(1, pair)?;
    let s11 = s(1, &s1)?;
    let s3 = s(3, pair)?;
    let s13 = s(1, &s3)?;
    if &s(1, &s11)? != pair {
        bad.push("s1^3 = s0");
    }
    if &s(3, &s3)? != pair {
        bad.push("s3^2 = s0");
    }
    if s11 != s(2, pair)? {
        bad.push("s2 = s1^2");
    }
    if s13 != s(4, pair)? {
        bad.push("s1 s3 = s4");
    }
    if s(1, &s13)? != s(5, pair)? {
        bad.push("s1^2 s3 = s5");
    }
    let ci = g.inv(&pair.1);
    let inner = (conj(g, &pair.0, &ci), conj(g, &pair.1, &ci));
    if s(4, &s(4, pair)?)? != inner || s(4, &s13)? != inner {
        bad.push("s4^2 = Int(c^-1)");
    }
    Ok(bad)
}

/// Orbit under inner automorphisms and the σ's.
pub fn it_orbit<G: FiniteGroup>(g: &G, pair: &Pair<G::Elem>, cap: usize) -> Result<HashSet<Pair<G::Elem>>> {
    check_elem(g, &pair.0)?;
    check_elem(g, &pair.1)?;
    let gens = g.generators();
    let mut seen = HashSet::from([pair.clone()]);
    let mut queue = VecDeque::from([pair.clone()]);
    while let Some(p) = queue.pop_front() {
        let mut next: Vec<Pair<G::Elem>> = gens.iter().map(|h| (conj(g, &p.0, h), conj(g, &p.1, h))).collect();
        next.push(apply_sigma(g, 1, &p)?);
        next.push(apply_sigma(g, 3, &p)?);
        for q in next {
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return Err(Error::Overflow { what: "I_T orbit", cap });
                }
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}

/// Images `(ψ(a), ψ(c))` required for `ψ∘σᵢ` to send `(a,c)` to `ι(a,c)`.
pub fn lemma_rea_targets<G: FiniteGroup>(g: &G, i: usize, pair: &Pair<G::Elem>) -> Result<Pair<G::Elem>> {
    let (a, c) = pair;
    let (ai, ci, ac) = (g.inv(a), g.inv(c), g.mul(a, c));
    Ok(match i {
        0 => (ai, ci),
        1 => (ci, ac),
        2 => (ac, ai),
        3 => (ci, ai),
        4 => (ac, ci),
        5 => (ai, ac),
        _ => return Err(Error::InvalidParameter(format!("case {i} out of range 0..5"))),
    })
}

/// The printed form of each case pattern.
pub const LEMMA_REA_PATTERNS: [(&str, &str); 6] = [
    ("a⁻¹", "c⁻¹"),
    ("c⁻¹", "ac"),
    ("ac", "a⁻¹"),
    ("c⁻¹", "a⁻¹"),
    ("ac", "c⁻¹"),
    ("a⁻¹", "ac"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReaCase {
    pub case: usize,
    pub psi_a: String,
    pub psi_c: String,
    pub solvable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<OuterLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// For each case, whether some automorphism ψ has the case's image pattern.
pub fn lemma_rea_cases<G: AutGroup>(g: &G, pair: &Pair<G::Elem>, caps: &Caps) -> Result<Vec<ReaCase>> {
    check_elem(g, &pair.0)?;
    check_elem(g, &pair.1)?;
    let mut out = Vec::with_capacity(6);
    for i in 0..6 {
        let (ta, tc) = lemma_rea_targets(g, i, pair)?;
        let (pa, pc) = LEMMA_REA_PATTERNS[i];
        let mut case = ReaCase {
            case: i,
            psi_a: pa.into(),
            psi_c: pc.into(),
            solvable: None,
            witness: None,
            label: None,
            note: None,
        };
        match g.find_aut([&pair.0, &pair.1], [&ta, &tc], caps) {
            Ok(Some(w)) => {
                case.solvable = Some(true);
                case.witness = Some(g.format_aut(&w));
                case.label = Some(g.aut_label(&w));
            }
            Ok(None) => case.solvable = Some(false),
            Err(e @ (Error::Overflow { .. } | Error::Unsupported(_))) => case.note = Some(e.to_string()),
            Err(e) => return Err(e),
        }
        out.push(case);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealityVerdict {
    pub biholo_conjugate: Option<bool>,
    pub real: Option<bool>,
    pub strongly_real: Option<bool>,
    /// Which decision procedure produced the verdict.
    pub path: String,
    pub cases: Vec<Vec<ReaCase>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl RealityVerdict {
    /// `strongly_real ⇒ real ⇒ biholo_conjugate`, on the decided parts.
    pub fn consistent(&self) -> bool {
        let imp = |x: Option<bool>, y: Option<bool>| !(x == Some(true) && y == Some(false));
        imp(self.strongly_real, self.real) && imp(self.real, self.biholo_conjugate) && imp(self.strongly_real, self.biholo_conjugate)
    }

    fn checked(self) -> Result<RealityVerdict> {
        if !self.consistent() {
            return Err(Error::Inconsistent(format!("reality verdict violates its implications: {self:?}")));
        }
        Ok(self)
    }
}

struct Solve<A> {
    aut: A,
    label: OuterLabel,
}

/// The automorphism taking `src` to `dst`; `Err` with a note when the backend cannot decide.
fn solve<G: AutGroup>(g: &G, src: &Pair<G::Elem>, dst: &Pair<G::Elem>, caps: &Caps) -> Result<std::result::Result<Option<Solve<G::Aut>>, String>> {
    match g.find_aut([&src.0, &src.1], [&dst.0, &dst.1], caps) {
        Ok(Some(aut)) => {
            let label = g.aut_label(&aut);
            Ok(Ok(Some(Solve { aut, label })))
        }
        Ok(None) => Ok(Ok(None)),
        Err(e @ (Error::Overflow { .. } | Error::Unsupported(_))) => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

/// Reality of an unmixed structure `v = (P₁; P₂)`. The structure is biholomorphic to its
/// conjugate iff some `ρ = τᵉ∘(ψ₁∘σᵢ, ψ₂∘σⱼ)` with `ψ₁, ψ₂` in one outer class sends `v` to
/// `ι(v)`; real iff such a `ρ` also sends `ι(v)` back to `v`; strongly real iff this works with
/// `e = i = j = 0`.
pub fn reality_unmixed<G: AutGroup>(g: &G, v: &[G::Elem; 4], caps: &Caps) -> Result<RealityVerdict> {
    for x in v {
        check_elem(g, x)?;
    }
    let p = [(v[0].clone(), v[1].clone()), (v[2].clone(), v[3].clone())];
    let ip = [iota_pair(g, &p[0]), iota_pair(g, &p[1])];
    let (t1, t2) = (TypeTriple::of(g, &p[0].0, &p[0].1), TypeTriple::of(g, &p[1].0, &p[1].1));
    let strict = t1.class() == crate::beauville::PairClass::Strict && t2.class() == crate::beauville::PairClass::Strict;
    let rea13 = strict && t1.order_set() != t2.order_set();
    let mut notes = vec![];
    // sol[k][src][i]: automorphism carrying σᵢ(P_src) to ι(P_k)
    let mut sol: Vec<Vec<Vec<Option<Solve<G::Aut>>>>> = Vec::new();
    let mut undecided = false;
    for k in 0..2 {
        let mut per_src = Vec::new();
        for src in 0..2 {
            let mut per_i = Vec::new();
            for i in 0..6 {
                let s = apply_sigma(g, i, &p[src])?;
                match solve(g, &s, &ip[k], caps)? {
                    Ok(x) => per_i.push(x),
                    Err(note) => {
                        undecided = true;
                        notes.push(format!("σ{i}(P{}) → ι(P{}): {note}", src + 1, k + 1));
                        per_i.push(None);
                    }
                }
            }
            per_src.push(per_i);
        }
        sol.push(per_src);
    }
    let mut biholo = false;
    let mut real = false;
    let mut strongly = false;
    let mut witness = None;
    let mut real_witness = None;
    for e in 0..2 {
        let q = if e == 0 { [0, 1] } else { [1, 0] };
        let iq = [iota_pair(g, &p[q[0]]), iota_pair(g, &p[q[1]])];
        for i in 0..6 {
            for j in 0..6 {
                let (Some(s1), Some(s2)) = (&sol[0][q[0]][i], &sol[1][q[1]][j]) else { continue };
                if s1.label != s2.label {
                    continue;
                }
                biholo = true;
                let desc = format!(
                    "e={e}, σ{i}, σ{j}; ψ₁: {}, ψ₂: {}",
                    g.format_aut(&s1.aut),
                    g.format_aut(&s2.aut)
                );
                if e == 0 && i == 0 && j == 0 {
                    strongly = true;
                }
                witness.get_or_insert_with(|| desc.clone());
                let back1 = apply_sigma(g, i, &iq[0])?;
                let back2 = apply_sigma(g, j, &iq[1])?;
                let r1 = (g.apply_aut(&s1.aut, &back1.0), g.apply_aut(&s1.aut, &back1.1));
                let r2 = (g.apply_aut(&s2.aut, &back2.0), g.apply_aut(&s2.aut, &back2.1));
                if r1 == p[0] && r2 == p[1] {
                    real = true;
                    real_witness.get_or_insert(desc);
                }
            }
        }
    }
    let cases = vec![lemma_rea_cases(g, &p[0], caps)?, lemma_rea_cases(g, &p[1], caps)?];
    let decided = |x: bool| if x || !undecided { Some(x) } else { None };
    let path = if rea13 { "strict-distinct-orders" } else { "a_u-combinations" };
    if rea13 && !undecided && biholo != real {
        return Err(Error::Inconsistent("strict pairs with distinct order sets must have real = biholomorphic".into()));
    }
    RealityVerdict {
        biholo_conjugate: decided(biholo),
        real: decided(real),
        strongly_real: decided(strongly),
        path: path.into(),
        cases,
        witness: real_witness.or(witness),
        notes,
    }
    .checked()
}

/// Reality of a mixed structure on a small group: an automorphism of `G` preserving `G⁰ = ⟨a,c⟩`
/// with `a → a⁻¹`, `c → c⁻¹`, searched exhaustively by extending to an element outside `G⁰`.
pub fn reality_mixed_exhaustive<G: FiniteGroup>(
    g: &G,
    a: &G::Elem,
    c: &G::Elem,
    gg: &G::Elem,
    caps: &Caps,
) -> Result<RealityVerdict> {
    for x in [a, c, gg] {
        check_elem(g, x)?;
    }
    let order = g.order_u64().filter(|&n| n as usize <= 2 * caps.closure).ok_or_else(|| {
        Error::Unsupported(format!("{} is too large for exhaustive mixed reality", g.descriptor()))
    })?;
    // ψ₀ on G⁰ via words in a, c
    let id = g.identity();
    let (ai, ci) = (g.inv(a), g.inv(c));
    let mut map = std::collections::HashMap::new();
    map.insert(id.clone(), id.clone());
    let mut queue = VecDeque::from([id.clone()]);
    let mut hom = true;
    'bfs: while let Some(x) = queue.pop_front() {
        let fx = map[&x].clone();
        for (s, d) in [(a, &ai), (c, &ci)] {
            let y = g.mul(&x, s);
            let fy = g.mul(&fx, d);
            match map.get(&y) {
                Some(v) if *v != fy => {
                    hom = false;
                    break 'bfs;
                }
                Some(_) => {}
                None => {
                    map.insert(y.clone(), fy);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut verdict = RealityVerdict {
        biholo_conjugate: Some(false),
        real: Some(false),
        strongly_real: Some(false),
        path: "exhaustive-extension".into(),
        cases: vec![],
        witness: None,
        notes: vec![],
    };
    if map.len() as u64 * 2 != order && hom {
        return Err(Error::Precondition("⟨a,c⟩ does not have index 2".into()));
    }
    if !hom {
        verdict.notes.push("a → a⁻¹, c → c⁻¹ is not an automorphism of G⁰".into());
        return verdict.checked();
    }
    let psi = |x: &G::Elem| map[x].clone();
    let g2 = g.mul(gg, gg);
    let target_sq = psi(&g2);
    let (ga, gc) = (psi(&conj(g, a, gg)), psi(&conj(g, c, gg)));
    let (pa, pc) = (psi(a), psi(c));
    let mut cands: Vec<G::Elem> = map.keys().map(|x| g.mul(gg, x)).collect();
    cands.sort();
    for h in cands {
        if g.mul(&h, &h) == target_sq && conj(g, &pa, &h) == ga && conj(g, &pc, &h) == gc {
            verdict.biholo_conjugate = Some(true);
            verdict.real = None;
            verdict.strongly_real = None;
            verdict.witness = Some(format!("ψ(g) = {}", g.format_elem(&h)));
            verdict.notes.push("only the biholomorphism question is decided for mixed structures".into());
            break;
        }
    }
    verdict.checked()
}

/// Reality of `(H_[2]; (a₁,a₂,2), (c₁,c₂,2))` on `H_[4]` for a perfect `H` whose automorphisms of
/// `H × H` are of product type: `ψ` restricts to `φ₁ × φ₂` or to its composite with the swap, and
/// `φ₁, φ₂` must lie in one outer class.
pub fn reality_mixed_h4<H: AutGroup>(
    g: &H4<H>,
    a: &<H4<H> as FiniteGroup>::Elem,
    c: &<H4<H> as FiniteGroup>::Elem,
    caps: &Caps,
) -> Result<RealityVerdict> {
    check_elem(g, a)?;
    check_elem(g, c)?;
    if a.t != 2 || c.t != 2 {
        return Err(Error::Precondition("expects a = (a₁,a₂,2), c = (c₁,c₂,2)".into()));
    }
    let h = g.inner();
    let p1 = (a.h1.clone(), c.h1.clone());
    let p2 = (a.h2.clone(), c.h2.clone());
    let (i1, i2) = (iota_pair(h, &p1), iota_pair(h, &p2));
    let mut notes = vec![];
    let mut undecided = false;
    let mut get = |src: &Pair<H::Elem>, dst: &Pair<H::Elem>, what: &str| -> Result<Option<Solve<H::Aut>>> {
        match solve(h, src, dst, caps)? {
            Ok(x) => {
                notes.push(format!(
                    "{what}: {}",
                    x.as_ref().map(|s| format!("{} ({:?})", h.format_aut(&s.aut), s.label)).unwrap_or("none".into())
                ));
                Ok(x)
            }
            Err(n) => {
                undecided = true;
                notes.push(format!("{what}: {n}"));
                Ok(None)
            }
        }
    };
    let straight = (get(&p1, &i1, "(a₁,c₁) → inverses")?, get(&p2, &i2, "(a₂,c₂) → inverses")?);
    let swapped = (get(&p2, &i1, "(a₂,c₂) → (a₁⁻¹,c₁⁻¹)")?, get(&p1, &i2, "(a₁,c₁) → (a₂⁻¹,c₂⁻¹)")?);
    let mut biholo = false;
    let mut witness = None;
    for (kind, pair) in [("product", &straight), ("swapped product", &swapped)] {
        if let (Some(x), Some(y)) = pair {
            if x.label == y.label {
                biholo = true;
                witness = Some(format!("{kind}: {} and {}", h.format_aut(&x.aut), h.format_aut(&y.aut)));
                break;
            }
            notes.push(format!("{kind} solutions lie in different outer classes {:?} ≠ {:?}", x.label, y.label));
        }
    }
    let b = if biholo || !undecided { Some(biholo) } else { None };
    RealityVerdict {
        biholo_conjugate: b,
        real: if b == Some(false) { Some(false) } else { None },
        strongly_real: if b == Some(false) { Some(false) } else { None },
        path: "h4-product".into(),
        cases: vec![],
        witness,
        notes,
    }
    .checked()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::Ab2;
    use crate::perm::Sym;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sigma_examples() {
        let g = Sym::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let p = (g.random_elem(&mut rng), g.random_elem(&mut rng));
            assert_eq!(apply_sigma(&g, 3, &p).unwrap(), (p.1.clone(), p.0.clone()));
            let s4 = apply_sigma(&g, 4, &apply_sigma(&g, 4, &p).unwrap()).unwrap();
            assert_eq!(s4, (conj(&g, &p.0, &g.inv(&p.1)), p.1.clone()));
        }
        assert!(apply_sigma(&g, 6, &(g.identity(), g.identity())).is_err());
    }

    #[test]
    fn orbits() {
        let g = Ab2::new(5).unwrap();
        assert_eq!(it_orbit(&g, &((1, 0), (0, 1)), 100).unwrap().len(), 6);
    }

    #[test]
    fn case_targets_match_sigma_algebra() {
        // ψ∘σᵢ(a,c) = ι(a,c) with ψ given by the target pattern, checked on a group where every
        // assignment is a homomorphism.
        let g = Ab2::new(7).unwrap();
        let caps = Caps::default();
        let p = ((1, 0), (0, 1));
        for i in 0..6 {
            let (ta, tc) = lemma_rea_targets(&g, i, &p).unwrap();
            let psi = g.find_aut([&p.0, &p.1], [&ta, &tc], &caps).unwrap().unwrap();
            let s = apply_sigma(&g, i, &p).unwrap();
            assert_eq!((g.apply_aut(&psi, &s.0), g.apply_aut(&psi, &s.1)), iota_pair(&g, &p), "case {i}");
        }
    }
}
