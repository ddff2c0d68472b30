use num_bigint::BigUint;
use rand::Rng;

use super::split_top;
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// `(h1, h2, t)` in `(H × H) ⋊ Z/4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct H4Elem<E> {
    pub h1: E,
    pub h2: E,
    pub t: u8,
}

impl<E> H4Elem<E> {
    pub fn new(h1: E, h2: E, t: u8) -> Self {
        H4Elem { h1, h2, t: t % 4 }
    }
}

/// `H_[4] = (H × H) ⋊ Z/4`, where `1 ∈ Z/4` acts by swapping the factors. Its subgroup
/// `H_[2] = H × H × 2Z/4` has index 2; literals `<h1|h2|t>`.
#[derive(Clone, Debug)]
pub struct H4<H> {
    inner: H,
}

pub fn build_h4<H: FiniteGroup>(inner: H) -> H4<H> {
    H4 { inner }
}

impl<H: FiniteGroup> H4<H> {
    pub fn new(inner: H) -> Self {
        H4 { inner }
    }
    pub fn inner(&self) -> &H {
        &self.inner
    }
    pub fn in_h2(&self, x: &H4Elem<H::Elem>) -> bool {
        x.t % 2 == 0
    }
    /// The coset representative `(1, 1, 1)` of `H_[4] ∖ H_[2]`.
    pub fn coset_rep(&self) -> H4Elem<H::Elem> {
        H4Elem::new(self.inner.identity(), self.inner.identity(), 1)
    }
    pub fn elem(&self, h1: H::Elem, h2: H::Elem, t: u8) -> H4Elem<H::Elem> {
        H4Elem::new(h1, h2, t)
    }
}

impl<H: FiniteGroup> FiniteGroup for H4<H> {
    type Elem = H4Elem<H::Elem>;
    fn identity(&self) -> Self::Elem {
        H4Elem::new(self.inner.identity(), self.inner.identity(), 0)
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let h = &self.inner;
        let (y1, y2) = if x.t % 2 == 0 { (&y.h1, &y.h2) } else { (&y.h2, &y.h1) };
        H4Elem::new(h.mul(&x.h1, y1), h.mul(&x.h2, y2), x.t + y.t)
    }
    fn inv(&self, x: &Self::Elem) -> Self::Elem {
        let h = &self.inner;
        let t = (4 - x.t) % 4;
        if x.t % 2 == 0 {
            H4Elem::new(h.inv(&x.h1), h.inv(&x.h2), t)
        } else {
            H4Elem::new(h.inv(&x.h2), h.inv(&x.h1), t)
        }
    }
    fn generators(&self) -> Vec<Self::Elem> {
        let e = self.inner.identity();
        let mut g: Vec<_> = self.inner.generators().into_iter().map(|s| H4Elem::new(s, e.clone(), 0)).collect();
        g.push(self.coset_rep());
        g
    }
    fn order(&self) -> BigUint {
        let n = self.inner.order();
        BigUint::from(4u32) * &n * &n
    }
    fn contains(&self, x: &Self::Elem) -> bool {
        x.t < 4 && self.inner.contains(&x.h1) && self.inner.contains(&x.h2)
    }
    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let t = s.trim();
        let body = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| Error::Malformed(format!("expected <h1|h2|t>, got {s:?}")))?;
        match split_top(body, '|').as_slice() {
            [a, b, k] => {
                let k: i64 = k.trim().parse().map_err(|_| Error::Malformed(format!("bad Z/4 part in {s:?}")))?;
                Ok(H4Elem::new(self.inner.parse_elem(a.trim())?, self.inner.parse_elem(b.trim())?, k.rem_euclid(4) as u8))
            }
            _ => Err(Error::Malformed(format!("expected <h1|h2|t>, got {s:?}"))),
        }
    }
    fn format_elem(&self, x: &Self::Elem) -> String {
        format!("<{}|{}|{}>", self.inner.format_elem(&x.h1), self.inner.format_elem(&x.h2), x.t)
    }
    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::H4 { inner: Box::new(self.inner.descriptor()) }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        H4Elem::new(self.inner.random_elem(rng), self.inner.random_elem(rng), rng.gen_range(0..4))
    }
    fn elem_order(&self, x: &Self::Elem) -> u64 {
        // odd powers of an element off H_[2] stay off it, and on H_[2] the factors are independent
        if x.t % 2 == 1 {
            return 2 * self.elem_order(&self.mul(x, x));
        }
        let o = crate::arith::lcm(self.inner.elem_order(&x.h1), self.inner.elem_order(&x.h2));
        if x.t == 2 {
            crate::arith::lcm(o, 2)
        } else {
            o
        }
    }
}

#[cfg(test)]
impl<H: FiniteGroup> H4<H> {
    fn inner_iter_order(&self, x: &H4Elem<H::Elem>) -> u64 {
        let id = self.identity();
        let mut y = x.clone();
        let mut k = 1;
        while y != id {
            y = self.mul(&y, x);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{Cyclic, Metacyclic};
    use crate::group::{conj, generated_subgroup};
    use crate::matrix::Sl2;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sizes_and_swap() {
        let g = build_h4(Cyclic::new(2).unwrap());
        assert_eq!(g.order(), BigUint::from(16u32));
        let all = generated_subgroup(&g, &g.generators(), 100).unwrap();
        assert_eq!(all.len(), 16);
        assert_eq!(all.iter().filter(|x| g.in_h2(x)).count(), 8);
        let h = build_h4(Metacyclic::dihedral(3).unwrap());
        let x = H4Elem::new((1, 0), (2, 1), 0);
        assert_eq!(conj(&h, &x, &h.coset_rep()), H4Elem::new((2, 1), (1, 0), 0));
    }

    #[test]
    fn no_involutions_off_h2() {
        for inner in [Metacyclic::dihedral(3).unwrap(), Metacyclic::dicyclic(2).unwrap(), Metacyclic::dihedral(5).unwrap()] {
            let g = build_h4(inner);
            let all = generated_subgroup(&g, &g.generators(), 100_000).unwrap();
            assert_eq!(BigUint::from(all.len()), g.order());
            assert!(all.iter().filter(|x| !g.in_h2(x)).all(|x| g.elem_order(x) != 2));
        }
    }

    #[test]
    fn orders_match_iteration() {
        let g = build_h4(Sl2::new(5).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let x = g.random_elem(&mut rng);
            assert_eq!(g.elem_order(&x), g.inner_iter_order(&x));
        }
        let s = g.format_elem(&g.coset_rep());
        assert_eq!(g.parse_elem(&s).unwrap(), g.coset_rep());
    }
}
