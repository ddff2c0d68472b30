//! The uniform finite-group interface and the generic algorithms built on it.

use std::collections::{HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::caps::Caps;
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};

/// How cycle types relate to conjugacy classes in a permutation backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeClasses {
    Unavailable,
    /// Full symmetric group: same cycle type iff conjugate.
    Symmetric,
    /// Alternating group: a cycle type whose parts are distinct and odd splits into two classes.
    Alternating,
}

pub trait FiniteGroup: Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    fn generators(&self) -> Vec<Self::Elem>;
    fn order(&self) -> BigUint;
    /// Validity of a value as an element of this group.
    fn contains(&self, x: &Self::Elem) -> bool;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, x: &Self::Elem) -> String;
    fn descriptor(&self) -> GroupDescriptor;
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn elem_order(&self, x: &Self::Elem) -> u64 {
        let id = self.identity();
        let mut y = x.clone();
        let mut k = 1;
        while y != id {
            y = self.mul(&y, x);
            k += 1;
        }
        k
    }

    /// Order of a subgroup computed by structural means (stabilizer chains), if the backend has one.
    fn structural_subgroup_order(&self, _gens: &[Self::Elem]) -> Option<BigUint> {
        None
    }

    fn cycle_type(&self, _x: &Self::Elem) -> Option<Vec<usize>> {
        None
    }

    fn type_classes(&self) -> TypeClasses {
        TypeClasses::Unavailable
    }

    fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    fn eq_mul(&self, x: &Self::Elem, y: &Self::Elem, z: &Self::Elem) -> bool {
        &self.mul(x, y) == z
    }
}

pub fn check_elem<G: FiniteGroup>(g: &G, x: &G::Elem) -> Result<()> {
    if g.contains(x) {
        Ok(())
    } else {
        Err(Error::Malformed(format!("{x:?} is not an element of {}", g.descriptor())))
    }
}

pub fn element_order<G: FiniteGroup>(g: &G, x: &G::Elem) -> Result<u64> {
    check_elem(g, x)?;
    Ok(g.elem_order(x))
}

/// `h x h⁻¹`.
pub fn conjugate<G: FiniteGroup>(g: &G, x: &G::Elem, h: &G::Elem) -> Result<G::Elem> {
    check_elem(g, x)?;
    check_elem(g, h)?;
    Ok(conj(g, x, h))
}

pub(crate) fn conj<G: FiniteGroup>(g: &G, x: &G::Elem, h: &G::Elem) -> G::Elem {
    g.mul(&g.mul(h, x), &g.inv(h))
}

pub fn pow<G: FiniteGroup>(g: &G, x: &G::Elem, mut k: u64) -> G::Elem {
    let mut acc = g.identity();
    let mut base = x.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = g.mul(&acc, &base);
        }
        base = g.mul(&base, &base);
        k >>= 1;
    }
    acc
}

/// All distinct powers `x^0 .. x^(ord-1)`.
pub fn powers<G: FiniteGroup>(g: &G, x: &G::Elem) -> Vec<G::Elem> {
    let id = g.identity();
    let mut out = vec![id.clone()];
    let mut y = x.clone();
    while y != id {
        out.push(y.clone());
        y = g.mul(&y, x);
    }
    out
}

pub fn commute<G: FiniteGroup>(g: &G, x: &G::Elem, y: &G::Elem) -> bool {
    g.mul(x, y) == g.mul(y, x)
}

/// Breadth-first closure of `gens`. Overflows rather than truncating.
pub fn generated_subgroup<G: FiniteGroup>(
    g: &G,
    gens: &[G::Elem],
    cap: usize,
) -> Result<HashSet<G::Elem>> {
    for x in gens {
        check_elem(g, x)?;
    }
    closure(g, gens, cap, None)
}

fn closure<G: FiniteGroup>(
    g: &G,
    gens: &[G::Elem],
    cap: usize,
    stop_at: Option<usize>,
) -> Result<HashSet<G::Elem>> {
    let id = g.identity();
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = g.mul(&x, s);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::Overflow { what: "subgroup closure", cap });
                }
                if stop_at == Some(seen.len()) {
                    return Ok(seen);
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Order of `⟨gens⟩` with the strategy that produced it.
pub fn subgroup_order<G: FiniteGroup>(
    g: &G,
    gens: &[G::Elem],
    caps: &Caps,
) -> Result<(BigUint, &'static str)> {
    if let Some(n) = g.structural_subgroup_order(gens) {
        return Ok((n, "bsgs"));
    }
    let full = g.order().to_usize();
    match closure(g, gens, caps.closure, full) {
        Ok(set) => Ok((BigUint::from(set.len()), "closure")),
        Err(Error::Overflow { .. }) => Err(Error::Undecided(format!(
            "subgroup of {} exceeds closure cap {}",
            g.descriptor(),
            caps.closure
        ))),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generation {
    pub generates: bool,
    pub strategy: &'static str,
    pub subgroup_order: BigUint,
}

/// Whether `⟨a, c⟩ = G`. Never guesses: an inconclusive closure is an `Undecided` error.
pub fn generates<G: FiniteGroup>(g: &G, a: &G::Elem, c: &G::Elem, caps: &Caps) -> Result<Generation> {
    check_elem(g, a)?;
    check_elem(g, c)?;
    let (n, strategy) = subgroup_order(g, &[a.clone(), c.clone()], caps)?;
    Ok(Generation { generates: n == g.order(), strategy, subgroup_order: n })
}

/// Orbit of `x` under conjugation by `conjugators`.
pub fn class_under<G: FiniteGroup>(
    g: &G,
    conjugators: &[G::Elem],
    x: &G::Elem,
    cap: usize,
) -> Result<HashSet<G::Elem>> {
    let mut seen = HashSet::new();
    seen.insert(x.clone());
    let mut queue = VecDeque::from([x.clone()]);
    let invs: Vec<_> = conjugators.iter().map(|h| g.inv(h)).collect();
    while let Some(y) = queue.pop_front() {
        for (h, hi) in conjugators.iter().zip(&invs) {
            let z = g.mul(&g.mul(h, &y), hi);
            if seen.insert(z.clone()) {
                if seen.len() > cap {
                    return Err(Error::Overflow { what: "conjugacy class", cap });
                }
                queue.push_back(z);
            }
        }
    }
    Ok(seen)
}

pub fn conjugacy_class<G: FiniteGroup>(g: &G, x: &G::Elem, cap: usize) -> Result<HashSet<G::Elem>> {
    check_elem(g, x)?;
    class_under(g, &g.generators(), x, cap)
}

pub fn is_abelian<G: FiniteGroup>(g: &G, gens: &[G::Elem]) -> bool {
    gens.iter()
        .enumerate()
        .all(|(i, x)| gens[i + 1..].iter().all(|y| commute(g, x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::Ab2;
    use crate::perm::Sym;

    #[test]
    fn closure_sizes() {
        let g = Ab2::new(5).unwrap();
        assert_eq!(generated_subgroup(&g, &[(1, 0)], 100).unwrap().len(), 5);
        assert_eq!(generated_subgroup(&g, &[(1, 0), (0, 1)], 100).unwrap().len(), 25);
        assert!(matches!(
            generated_subgroup(&g, &[(1, 0), (0, 1)], 10),
            Err(Error::Overflow { .. })
        ));
        let s8 = Sym::new(8).unwrap();
        let gens = [s8.parse_elem("(1,2)").unwrap(), s8.parse_elem("(1,2,3,4,5,6,7,8)").unwrap()];
        assert_eq!(generated_subgroup(&s8, &gens, 100_000).unwrap().len(), 40320);
    }

    #[test]
    fn classes_and_conjugation() {
        let s8 = Sym::new(8).unwrap();
        let t = s8.parse_elem("(1,2)").unwrap();
        assert_eq!(conjugacy_class(&s8, &t, 1000).unwrap().len(), 28);
        let id = s8.identity();
        assert_eq!(conjugacy_class(&s8, &id, 10).unwrap().len(), 1);
        let h = s8.parse_elem("(1,3)").unwrap();
        assert_eq!(s8.format_elem(&conjugate(&s8, &t, &h).unwrap()), "(2,3)");
        assert_eq!(conjugate(&s8, &id, &h).unwrap(), id);
        assert_eq!(element_order(&s8, &s8.parse_elem("(1,2,3)").unwrap()).unwrap(), 3);
    }

    #[test]
    fn generation() {
        let g = Ab2::new(5).unwrap();
        let caps = Caps::default();
        assert!(!generates(&g, &(1, 0), &(2, 0), &caps).unwrap().generates);
        assert!(generates(&g, &(1, 0), &(0, 1), &caps).unwrap().generates);
        let tiny = Caps { closure: 3, ..Caps::default() };
        assert!(matches!(generates(&g, &(1, 0), &(0, 1), &tiny), Err(Error::Undecided(_))));
    }
}
