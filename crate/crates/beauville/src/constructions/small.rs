use num_bigint::BigUint;
use rand::Rng;

use super::{parse_int_tuple, split_top};
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Cyclic group `Z/n`.
#[derive(Clone, Debug)]
pub struct Cyclic {
    n: u32,
}

impl Cyclic {
    pub fn new(n: u32) -> Result<Cyclic> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group of order 0".into()));
        }
        Ok(Cyclic { n })
    }
}

impl FiniteGroup for Cyclic {
    type Elem = u32;
    fn identity(&self) -> u32 {
        0
    }
    fn mul(&self, x: &u32, y: &u32) -> u32 {
        (x + y) % self.n
    }
    fn inv(&self, x: &u32) -> u32 {
        (self.n - x) % self.n
    }
    fn generators(&self) -> Vec<u32> {
        if self.n == 1 {
            vec![]
        } else {
            vec![1]
        }
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.n)
    }
    fn contains(&self, x: &u32) -> bool {
        *x < self.n
    }
    fn parse_elem(&self, s: &str) -> Result<u32> {
        let v: i64 = s.trim().parse().map_err(|_| Error::Malformed(format!("bad residue {s:?}")))?;
        Ok(v.rem_euclid(self.n as i64) as u32)
    }
    fn format_elem(&self, x: &u32) -> String {
        x.to_string()
    }
    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::Catalogue { id: format!("C{}", self.n) }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.n)
    }
}

/// `⟨x, y | x^m, y² = x^s, y x y⁻¹ = x^r⟩`; elements `x^k y^e` written `(k,e)`.
#[derive(Clone, Debug)]
pub struct Metacyclic {
    m: u32,
    r: u32,
    s: u32,
    id: String,
}

impl Metacyclic {
    pub fn new(m: u32, r: i64, s: i64, id: impl Into<String>) -> Result<Metacyclic> {
        if m < 1 {
            return Err(Error::InvalidParameter("metacyclic modulus must be positive".into()));
        }
        let mi = m as i64;
        let (r, s) = (r.rem_euclid(mi), s.rem_euclid(mi));
        if (r * r) % mi != 1 % mi || (r * s - s).rem_euclid(mi) != 0 {
            return Err(Error::InvalidParameter(format!("inconsistent metacyclic data m={m} r={r} s={s}")));
        }
        Ok(Metacyclic { m, r: r as u32, s: s as u32, id: id.into() })
    }

    /// Dihedral group of order `2n`.
    pub fn dihedral(n: u32) -> Result<Metacyclic> {
        Metacyclic::new(n, -1, 0, format!("D{n}"))
    }

    /// Dicyclic group of order `4n`; `n = 2` is the quaternion group.
    pub fn dicyclic(n: u32) -> Result<Metacyclic> {
        Metacyclic::new(2 * n, -1, n as i64, format!("Dic{n}"))
    }
}

impl FiniteGroup for Metacyclic {
    type Elem = (u32, u8);
    fn identity(&self) -> (u32, u8) {
        (0, 0)
    }
    fn mul(&self, x: &(u32, u8), y: &(u32, u8)) -> (u32, u8) {
        let m = self.m as u64;
        let twist = if x.1 == 1 { self.r as u64 } else { 1 };
        let extra = if x.1 == 1 && y.1 == 1 { self.s as u64 } else { 0 };
        (((x.0 as u64 + twist * y.0 as u64 + extra) % m) as u32, x.1 ^ y.1)
    }
    fn inv(&self, x: &(u32, u8)) -> (u32, u8) {
        let m = self.m as u64;
        if x.1 == 0 {
            (((m - x.0 as u64) % m) as u32, 0)
        } else {
            let k = (x.0 as u64 + self.s as u64) % m;
            (((m - (self.r as u64 * k) % m) % m) as u32, 1)
        }
    }
    fn generators(&self) -> Vec<(u32, u8)> {
        vec![(1 % self.m, 0), (0, 1)]
    }
    fn order(&self) -> BigUint {
        BigUint::from(2 * self.m)
    }
    fn contains(&self, x: &(u32, u8)) -> bool {
        x.0 < self.m && x.1 < 2
    }
    fn parse_elem(&self, s: &str) -> Result<(u32, u8)> {
        match parse_int_tuple(s).as_deref() {
            Some([k, e]) if (0..2).contains(e) => Ok((k.rem_euclid(self.m as i64) as u32, *e as u8)),
            _ => Err(Error::Malformed(format!("expected (k,e) with e in {{0,1}}, got {s:?}"))),
        }
    }
    fn format_elem(&self, x: &(u32, u8)) -> String {
        format!("({},{})", x.0, x.1)
    }
    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::Catalogue { id: self.id.clone() }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> (u32, u8) {
        (rng.gen_range(0..self.m), rng.gen_range(0..2))
    }
}

/// Direct product; literals `{x;y}`.
#[derive(Clone, Debug)]
pub struct Product<A, B> {
    pub left: A,
    pub right: B,
    id: String,
}

impl<A: FiniteGroup, B: FiniteGroup> Product<A, B> {
    pub fn new(left: A, right: B, id: impl Into<String>) -> Self {
        Product { left, right, id: id.into() }
    }
}

impl<A: FiniteGroup, B: FiniteGroup> FiniteGroup for Product<A, B> {
    type Elem = (A::Elem, B::Elem);
    fn identity(&self) -> Self::Elem {
        (self.left.identity(), self.right.identity())
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (self.left.mul(&x.0, &y.0), self.right.mul(&x.1, &y.1))
    }
    fn inv(&self, x: &Self::Elem) -> Self::Elem {
        (self.left.inv(&x.0), self.right.inv(&x.1))
    }
    fn generators(&self) -> Vec<Self::Elem> {
        let mut g: Vec<_> = self.left.generators().into_iter().map(|a| (a, self.right.identity())).collect();
        g.extend(self.right.generators().into_iter().map(|b| (self.left.identity(), b)));
        g
    }
    fn order(&self) -> BigUint {
        self.left.order() * self.right.order()
    }
    fn contains(&self, x: &Self::Elem) -> bool {
        self.left.contains(&x.0) && self.right.contains(&x.1)
    }
    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Malformed(format!("expected {{x;y}}, got {s:?}")))?;
        match split_top(inner, ';').as_slice() {
            [a, b] => Ok((self.left.parse_elem(a)?, self.right.parse_elem(b)?)),
            _ => Err(Error::Malformed(format!("expected {{x;y}}, got {s:?}"))),
        }
    }
    fn format_elem(&self, x: &Self::Elem) -> String {
        format!("{{{};{}}}", self.left.format_elem(&x.0), self.right.format_elem(&x.1))
    }
    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::Catalogue { id: self.id.clone() }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        (self.left.random_elem(rng), self.right.random_elem(rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generated_subgroup, is_abelian};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn axioms<G: FiniteGroup>(g: &G) {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let (x, y, z) = (g.random_elem(&mut rng), g.random_elem(&mut rng), g.random_elem(&mut rng));
            assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
            assert_eq!(g.mul(&x, &g.inv(&x)), g.identity());
            assert_eq!(g.mul(&g.identity(), &x), x);
        }
    }

    #[test]
    fn metacyclic_families() {
        let d4 = Metacyclic::dihedral(4).unwrap();
        let q8 = Metacyclic::dicyclic(2).unwrap();
        axioms(&d4);
        axioms(&q8);
        let all = generated_subgroup(&q8, &q8.generators(), 100).unwrap();
        assert_eq!(all.len(), 8);
        // Q8 has a unique involution, D4 has five.
        let inv = |g: &Metacyclic, s: &std::collections::HashSet<(u32, u8)>| {
            s.iter().filter(|x| g.elem_order(x) == 2).count()
        };
        assert_eq!(inv(&q8, &all), 1);
        let d4all = generated_subgroup(&d4, &d4.generators(), 100).unwrap();
        assert_eq!(inv(&d4, &d4all), 5);
        assert!(!is_abelian(&d4, &d4.generators()));
        assert!(Metacyclic::new(8, 3, 1, "bad").is_err());
    }

    #[test]
    fn products() {
        let g = Product::new(Metacyclic::dihedral(3).unwrap(), Cyclic::new(4).unwrap(), "D3xC4");
        axioms(&g);
        assert_eq!(generated_subgroup(&g, &g.generators(), 100).unwrap().len(), 24);
        let x = g.parse_elem("{(1,1);3}").unwrap();
        assert_eq!(g.format_elem(&x), "{(1,1);3}");
    }
}
